// Copyright 2026 The latext Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ==============================================================================

#include "latext/maps.hpp"

#include <algorithm>
#include <optional>

#include "latext/error.hpp"

namespace latext {

namespace {

bool same_lattice(const Lattice& a, const Lattice& b) {
  return &a == &b || a == b;
}

void require_shape(const Map& r, const Map& s) {
  if (!same_lattice(r.domain(), s.codomain()) ||
      !same_lattice(r.codomain(), s.domain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "expected r : L -> M and s : M -> L, got r : " +
                    r.domain().name() + " -> " + r.codomain().name() +
                    " and s : " + s.domain().name() + " -> " +
                    s.codomain().name());
  }
}

}  // namespace

Map::Map(std::string name, LatticePtr domain, LatticePtr codomain,
         std::vector<Element> image)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      image_(std::move(image)) {
  if (image_.size() != domain_->size()) {
    throw Error(ErrorKind::kNotTotal,
                "map " + name_ + " has " + std::to_string(image_.size()) +
                    " entries for a domain of " +
                    std::to_string(domain_->size()));
  }
  for (Element y : image_) {
    if (y >= codomain_->size()) {
      throw Error(ErrorKind::kNotTotal,
                  "map " + name_ + " leaves codomain " + codomain_->name());
    }
  }
}

Map Map::from_names(
    std::string name, LatticePtr domain, LatticePtr codomain,
    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::optional<Element>> slots(domain->size());
  for (const auto& [x, y] : entries) {
    Element from = domain->index_of(x);
    Element to = codomain->index_of(y);
    if (slots[from]) {
      throw Error(ErrorKind::kDuplicateEntry,
                  "map " + name + " assigns " + x + " twice");
    }
    slots[from] = to;
  }
  std::vector<Element> image;
  image.reserve(slots.size());
  for (Element x = 0; x < slots.size(); ++x) {
    if (!slots[x]) {
      throw Error(ErrorKind::kNotTotal, "map " + name + " has no image for " +
                                            domain->element_name(x));
    }
    image.push_back(*slots[x]);
  }
  return Map(std::move(name), std::move(domain), std::move(codomain),
             std::move(image));
}

Map Map::identity(LatticePtr lattice, std::string name) {
  std::vector<Element> image(lattice->size());
  for (Element x = 0; x < image.size(); ++x) image[x] = x;
  auto codomain = lattice;
  return Map(std::move(name), std::move(lattice), std::move(codomain),
             std::move(image));
}

Map Map::constant(LatticePtr domain, LatticePtr codomain, Element value,
                  std::string name) {
  std::vector<Element> image(domain->size(), value);
  return Map(std::move(name), std::move(domain), std::move(codomain),
             std::move(image));
}

bool Map::same_function(const Map& other) const {
  return same_lattice(domain(), other.domain()) &&
         same_lattice(codomain(), other.codomain()) && image_ == other.image_;
}

ValidationReport check_monotone(const Map& f) {
  ValidationReport report;
  const Lattice& a = f.domain();
  const Lattice& b = f.codomain();
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) && !b.leq(f(x), f(y))) {
        const auto& xn = a.element_name(x);
        const auto& yn = a.element_name(y);
        report.add("monotone", {xn, yn},
                   xn + " <= " + yn + " but " + f.name() + "(" + xn +
                       ") = " + b.element_name(f(x)) + " is not <= " +
                       f.name() + "(" + yn + ") = " + b.element_name(f(y)));
      }
    }
  }
  return report;
}

MonotoneMap MonotoneMap::certify(Map map) {
  auto report = check_monotone(map);
  if (!report.ok()) {
    throw Error(ErrorKind::kNotMonotone,
                "map " + map.name() + " is not order-preserving",
                std::move(report));
  }
  return MonotoneMap(std::move(map));
}

Map compose(const Map& f, const Map& g) {
  if (!same_lattice(f.codomain(), g.domain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "cannot apply " + g.name() + " after " + f.name() + ": " +
                    f.codomain().name() + " vs " + g.domain().name());
  }
  std::vector<Element> image(f.domain().size());
  for (Element x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return Map(g.name() + "." + f.name(), f.domain_ptr(), g.codomain_ptr(),
             std::move(image));
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
  return MonotoneMap::certify(compose(f.map(), g.map()));
}

ValidationReport check_retraction_pair(const Map& r, const Map& s) {
  require_shape(r, s);
  ValidationReport report;
  auto r_mono = check_monotone(r);
  for (const auto& v : r_mono.violations()) {
    report.add("r-monotone", v.witness, v.message);
  }
  auto s_mono = check_monotone(s);
  for (const auto& v : s_mono.violations()) {
    report.add("s-monotone", v.witness, v.message);
  }
  const Lattice& small = r.codomain();
  for (Element m = 0; m < small.size(); ++m) {
    Element back = r(s(m));
    if (back != m) {
      const auto& mn = small.element_name(m);
      report.add("retraction", {mn},
                 "r(s(" + mn + ")) = " + small.element_name(back) +
                     " != " + mn);
    }
  }
  return report;
}

ValidationReport check_boundary_conditions(const Map& r) {
  ValidationReport report;
  const Lattice& big = r.domain();
  const Lattice& small = r.codomain();
  auto scan = [&](const std::string& rule, Element big_bound,
                  Element small_bound) {
    for (Element x = 0; x < big.size(); ++x) {
      bool hits = r(x) == small_bound;
      bool is_bound = x == big_bound;
      if (hits == is_bound) continue;
      const auto& xn = big.element_name(x);
      const auto& sb = small.element_name(small_bound);
      const auto& bb = big.element_name(big_bound);
      if (hits) {
        report.add(rule, {xn},
                   "[=>] r(" + xn + ") = " + sb + " but " + xn + " != " + bb);
      } else {
        report.add(rule, {xn},
                   "[<=] " + xn + " = " + bb + " but r(" + xn + ") = " +
                       small.element_name(r(x)) + " != " + sb);
      }
      return;
    }
  };
  scan("boundary-zero", big.bottom(), small.bottom());
  scan("boundary-one", big.top(), small.top());
  return report;
}

ValidationReport check_homomorphism(const Map& f) {
  ValidationReport report;
  const Lattice& a = f.domain();
  const Lattice& b = f.codomain();
  auto scan = [&](const std::string& rule, auto op_a, auto op_b,
                  const char* symbol) {
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        Element lhs = f(op_a(x, y));
        Element rhs = op_b(f(x), f(y));
        if (lhs == rhs) continue;
        const auto& xn = a.element_name(x);
        const auto& yn = a.element_name(y);
        report.add(rule, {xn, yn},
                   f.name() + "(" + xn + " " + symbol + " " + yn + ") = " +
                       b.element_name(lhs) + " but " + f.name() + "(" + xn +
                       ") " + symbol + " " + f.name() + "(" + yn + ") = " +
                       b.element_name(rhs));
        return;
      }
    }
  };
  scan("homomorphism-meet",
       [&](Element x, Element y) { return a.meet(x, y); },
       [&](Element x, Element y) { return b.meet(x, y); }, "meet");
  scan("homomorphism-join",
       [&](Element x, Element y) { return a.join(x, y); },
       [&](Element x, Element y) { return b.join(x, y); }, "join");
  return report;
}

RetractionPair RetractionPair::make(Map r, Map s) {
  auto report = check_retraction_pair(r, s);
  if (!report.ok()) {
    throw Error(ErrorKind::kNotARetraction,
                r.name() + "/" + s.name() + " is not a retraction pair",
                std::move(report));
  }
  auto boundary = check_boundary_conditions(r);
  bool zero_ok = boundary.find("boundary-zero") == nullptr;
  bool one_ok = boundary.find("boundary-one") == nullptr;
  return RetractionPair(std::move(r), std::move(s), zero_ok, one_ok);
}

namespace {

// Backtracking search. Elements are assigned in declaration order and
// candidate values are tried in ascending order, so results come out in
// lexicographic table order.
class PairSearch {
 public:
  PairSearch(const LatticePtr& big, const LatticePtr& small,
             bool require_boundary)
      : big_(big), small_(small), require_boundary_(require_boundary) {}

  std::vector<RetractionPair> run() {
    s_.assign(small_->size(), 0);
    assign_s(0);
    return std::move(out_);
  }

 private:
  bool s_fits(Element m, Element v) const {
    const Lattice& L = *big_;
    const Lattice& M = *small_;
    if (require_boundary_) {
      // r(s(0_M)) = 0_M together with the boundary conditions forces these.
      if (m == M.bottom() && v != L.bottom()) return false;
      if (m == M.top() && v != L.top()) return false;
    }
    for (Element p = 0; p < m; ++p) {
      if (s_[p] == v) return false;
      if (M.leq(p, m) != L.leq(s_[p], v)) return false;
      if (M.leq(m, p) != L.leq(v, s_[p])) return false;
    }
    return true;
  }

  void assign_s(Element m) {
    if (m == small_->size()) {
      start_r();
      return;
    }
    for (Element v = 0; v < big_->size(); ++v) {
      if (!s_fits(m, v)) continue;
      s_[m] = v;
      assign_s(m + 1);
    }
  }

  void start_r() {
    forced_.assign(big_->size(), std::nullopt);
    for (Element m = 0; m < small_->size(); ++m) forced_[s_[m]] = m;
    r_.assign(big_->size(), 0);
    assign_r(0);
  }

  bool r_fits(Element x, Element v) const {
    const Lattice& L = *big_;
    const Lattice& M = *small_;
    if (forced_[x] && *forced_[x] != v) return false;
    if (require_boundary_) {
      if ((v == M.bottom()) != (x == L.bottom())) return false;
      if ((v == M.top()) != (x == L.top())) return false;
    }
    for (Element p = 0; p < x; ++p) {
      if (L.leq(p, x) && !M.leq(r_[p], v)) return false;
      if (L.leq(x, p) && !M.leq(v, r_[p])) return false;
    }
    return true;
  }

  void assign_r(Element x) {
    if (x == big_->size()) {
      Map r("r", big_, small_, r_);
      Map s("s", small_, big_, s_);
      out_.push_back(RetractionPair::make(std::move(r), std::move(s)));
      return;
    }
    for (Element v = 0; v < small_->size(); ++v) {
      if (!r_fits(x, v)) continue;
      r_[x] = v;
      assign_r(x + 1);
    }
  }

  LatticePtr big_;
  LatticePtr small_;
  bool require_boundary_;
  std::vector<Element> s_;
  std::vector<Element> r_;
  std::vector<std::optional<Element>> forced_;
  std::vector<RetractionPair> out_;
};

}  // namespace

std::vector<RetractionPair> enumerate_retraction_pairs(
    const LatticePtr& big, const LatticePtr& small, bool require_boundary,
    std::size_t max_elements) {
  for (const auto* lat : {big.get(), small.get()}) {
    if (lat->size() > max_elements) {
      throw Error(ErrorKind::kSizeLimitExceeded,
                  "lattice " + lat->name() + " has " +
                      std::to_string(lat->size()) + " elements, limit is " +
                      std::to_string(max_elements));
    }
  }
  return PairSearch(big, small, require_boundary).run();
}

}  // namespace latext
