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

#include "latext/operators.hpp"

#include <algorithm>

#include "latext/error.hpp"

namespace latext {

std::string_view to_string(OperatorKind kind) {
  return kind == OperatorKind::kQuasiOverlap ? "quasi-overlap"
                                             : "quasi-grouping";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view text) {
  if (text == "quasi-overlap" || text == "overlap") {
    return OperatorKind::kQuasiOverlap;
  }
  if (text == "quasi-grouping" || text == "grouping") {
    return OperatorKind::kQuasiGrouping;
  }
  return std::nullopt;
}

OperatorTable::OperatorTable(std::string name, LatticePtr lattice,
                             std::vector<Element> cells)
    : name_(std::move(name)),
      lattice_(std::move(lattice)),
      cells_(std::move(cells)) {
  const std::size_t n = lattice_->size();
  if (cells_.size() != n * n) {
    throw Error(ErrorKind::kNotTotal,
                "operator " + name_ + " has " + std::to_string(cells_.size()) +
                    " cells, expected " + std::to_string(n * n));
  }
  for (Element v : cells_) {
    if (v >= n) {
      throw Error(ErrorKind::kNotTotal,
                  "operator " + name_ + " leaves lattice " + lattice_->name());
    }
  }
}

OperatorTable OperatorTable::from_names(
    std::string name, LatticePtr lattice,
    const std::vector<std::tuple<std::string, std::string, std::string>>&
        entries) {
  const std::size_t n = lattice->size();
  std::vector<std::optional<Element>> slots(n * n);
  for (const auto& [x, y, z] : entries) {
    Element a = lattice->index_of(x);
    Element b = lattice->index_of(y);
    Element c = lattice->index_of(z);
    auto& slot = slots[a * n + b];
    if (slot) {
      throw Error(ErrorKind::kDuplicateEntry,
                  "operator " + name + " defines (" + x + ", " + y +
                      ") twice");
    }
    slot = c;
  }
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw Error(ErrorKind::kNotTotal,
                  "operator " + name + " has no entry for (" +
                      lattice->element_name(i / n) + ", " +
                      lattice->element_name(i % n) + ")");
    }
    cells.push_back(*slots[i]);
  }
  return OperatorTable(std::move(name), std::move(lattice), std::move(cells));
}

const std::string& OperatorTable::operator()(std::string_view x,
                                             std::string_view y) const {
  return lattice_->element_name(
      (*this)(lattice_->index_of(x), lattice_->index_of(y)));
}

OperatorTable OperatorTable::with_cell(Element x, Element y,
                                       Element value) const {
  auto cells = cells_;
  cells.at(x * lattice_->size() + y) = value;
  return OperatorTable(name_, lattice_, std::move(cells));
}

OperatorTable OperatorTable::renamed(std::string name) const {
  return OperatorTable(std::move(name), lattice_, cells_);
}

namespace {

template <typename Op>
OperatorTable tabulate(std::string name, const LatticePtr& lattice, Op op) {
  const std::size_t n = lattice->size();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) cells[x * n + y] = op(x, y);
  }
  return OperatorTable(std::move(name), lattice, std::move(cells));
}

}  // namespace

OperatorTable canonical_meet(const LatticePtr& lattice) {
  return tabulate("meet", lattice,
                  [&](Element x, Element y) { return lattice->meet(x, y); });
}

OperatorTable canonical_join(const LatticePtr& lattice) {
  return tabulate("join", lattice,
                  [&](Element x, Element y) { return lattice->join(x, y); });
}

bool AxiomReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.pass; });
}

namespace {

// The biconditional "op(x, y) = bound iff cond(x is bound, y is bound)".
// `both` selects "and" over "or".
struct BoundAxiom {
  Element bound;
  bool both;
};

AxiomReport check(const OperatorTable& op, OperatorKind kind) {
  const Lattice& lat = op.lattice();
  const std::size_t n = lat.size();
  const bool overlap = kind == OperatorKind::kQuasiOverlap;
  const std::string prefix = overlap ? "QO" : "QG";
  const std::string& f = op.name();
  auto nm = [&](Element e) -> const std::string& {
    return lat.element_name(e);
  };
  auto call = [&](Element x, Element y) {
    return f + "(" + nm(x) + ", " + nm(y) + ")";
  };

  AxiomReport report;
  report.kind = kind;
  for (std::size_t i = 0; i < 4; ++i) {
    report.verdicts[i].axiom = prefix + std::to_string(i + 1);
  }
  auto fail = [&](std::size_t axiom, AxiomWitness w) {
    auto& v = report.verdicts[axiom - 1];
    v.pass = false;
    v.witness = std::move(w);
  };

  // Axiom 1: commutativity.
  for (Element x = 0; x < n && report.verdicts[0].pass; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (op(x, y) != op(y, x)) {
        fail(1, {{nm(x), nm(y)},
                 {nm(op(x, y)), nm(op(y, x))},
                 "",
                 call(x, y) + " = " + nm(op(x, y)) + " but " + call(y, x) +
                     " = " + nm(op(y, x))});
        break;
      }
    }
  }

  // Axioms 2 and 3.
  const BoundAxiom zero{lat.bottom(), !overlap};
  const BoundAxiom one{lat.top(), overlap};
  auto scan_bound = [&](std::size_t axiom, BoundAxiom ax) {
    const std::string& b = nm(ax.bound);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        bool lhs = op(x, y) == ax.bound;
        bool xb = x == ax.bound;
        bool yb = y == ax.bound;
        bool rhs = ax.both ? (xb && yb) : (xb || yb);
        if (lhs == rhs) continue;
        AxiomWitness w{{nm(x), nm(y)}, {nm(op(x, y))}, "", ""};
        if (lhs) {
          w.direction = "=>";
          w.relation = "[=>] " + call(x, y) + " = " + b + " but " +
                       (ax.both ? "not both arguments are " + b
                                : nm(x) + " != " + b + " and " + nm(y) +
                                      " != " + b);
        } else {
          w.direction = "<=";
          w.relation = "[<=] " + (ax.both ? "both arguments are " + b
                                          : "an argument is " + b) +
                       " but " + call(x, y) + " = " + nm(op(x, y)) + " != " +
                       b;
        }
        fail(axiom, std::move(w));
        return;
      }
    }
  };
  scan_bound(2, zero);
  scan_bound(3, one);

  // Axiom 4: increasing in the second argument.
  [&] {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (!lat.leq(y, z) || lat.leq(op(x, y), op(x, z))) continue;
          fail(4, {{nm(x), nm(y), nm(z)},
                   {nm(op(x, y)), nm(op(x, z))},
                   "",
                   nm(y) + " <= " + nm(z) + " but " + call(x, y) + " = " +
                       nm(op(x, y)) + " is not <= " + call(x, z) + " = " +
                       nm(op(x, z))});
          return;
        }
      }
    }
  }();

  if (report.verdicts[0].pass) {
    bool mono = true;
    for (Element x = 0; x < n && mono; ++x) {
      for (Element w = 0; w < n && mono; ++w) {
        if (!lat.leq(x, w)) continue;
        for (Element y = 0; y < n; ++y) {
          if (!lat.leq(op(x, y), op(w, y))) {
            mono = false;
            break;
          }
        }
      }
    }
    report.first_argument_monotone = mono;
  }
  return report;
}

// Fills the upper triangle (x <= y by index) in row-major order, mirroring
// each cell. Bound axioms restrict the candidate values per cell and
// monotonicity is checked against every filled cell as it is placed.
class OperatorSearch {
 public:
  OperatorSearch(const LatticePtr& lattice, OperatorKind kind)
      : lattice_(lattice), lat_(*lattice), n_(lat_.size()), kind_(kind) {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = x; y < n_; ++y) order_.emplace_back(x, y);
    }
    cells_.assign(n_ * n_, 0);
    filled_.assign(n_ * n_, 0);
  }

  std::vector<OperatorTable> run() {
    place(0);
    std::sort(results_.begin(), results_.end());
    std::vector<OperatorTable> out;
    const std::string base =
        kind_ == OperatorKind::kQuasiOverlap ? "O" : "G";
    for (std::size_t i = 0; i < results_.size(); ++i) {
      out.emplace_back(base + std::to_string(i + 1), lattice_,
                       std::move(results_[i]));
    }
    return out;
  }

 private:
  std::vector<Element> candidates(Element x, Element y) const {
    const Element lo = lat_.bottom();
    const Element hi = lat_.top();
    const bool overlap = kind_ == OperatorKind::kQuasiOverlap;
    // The absorbing bound of this kind, and the bound reached only when
    // both arguments equal it.
    const Element absorbing = overlap ? lo : hi;
    const Element joint = overlap ? hi : lo;
    if (x == absorbing || y == absorbing) return {absorbing};
    if (x == joint && y == joint) return {joint};
    std::vector<Element> out;
    for (Element v = 0; v < n_; ++v) {
      if (v != lo && v != hi) out.push_back(v);
    }
    return out;
  }

  bool monotone_with(Element x, Element y, Element v) const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        if (!filled_[a * n_ + b]) continue;
        Element w = cells_[a * n_ + b];
        if (lat_.leq(a, x) && lat_.leq(b, y) && !lat_.leq(w, v)) return false;
        if (lat_.leq(x, a) && lat_.leq(y, b) && !lat_.leq(v, w)) return false;
      }
    }
    return true;
  }

  void set(Element x, Element y, Element v, bool on) {
    cells_[x * n_ + y] = v;
    cells_[y * n_ + x] = v;
    filled_[x * n_ + y] = on;
    filled_[y * n_ + x] = on;
  }

  void place(std::size_t k) {
    if (k == order_.size()) {
      results_.push_back(cells_);
      return;
    }
    auto [x, y] = order_[k];
    for (Element v : candidates(x, y)) {
      // Check the mirrored cell too; with x != y the pair (y, x) is
      // compared against the same filled set.
      if (!monotone_with(x, y, v) || !monotone_with(y, x, v)) continue;
      set(x, y, v, true);
      place(k + 1);
      set(x, y, 0, false);
    }
  }

  LatticePtr lattice_;
  const Lattice& lat_;
  std::size_t n_;
  OperatorKind kind_;
  std::vector<std::pair<Element, Element>> order_;
  std::vector<Element> cells_;
  std::vector<unsigned char> filled_;
  std::vector<std::vector<Element>> results_;
};

}  // namespace

AxiomReport check_quasi_overlap(const OperatorTable& op) {
  return check(op, OperatorKind::kQuasiOverlap);
}

AxiomReport check_quasi_grouping(const OperatorTable& op) {
  return check(op, OperatorKind::kQuasiGrouping);
}

AxiomReport check_axioms(const OperatorTable& op, OperatorKind kind) {
  return check(op, kind);
}

std::vector<OperatorTable> enumerate_operators(const LatticePtr& lattice,
                                               OperatorKind kind) {
  if (lattice->size() > kMaxOperatorSearchElements) {
    throw Error(ErrorKind::kSizeLimitExceeded,
                "operator enumeration needs at most " +
                    std::to_string(kMaxOperatorSearchElements) +
                    " elements, " + lattice->name() + " has " +
                    std::to_string(lattice->size()));
  }
  return OperatorSearch(lattice, kind).run();
}

std::vector<OperatorTable> enumerate_quasi_overlaps(const LatticePtr& lattice) {
  return enumerate_operators(lattice, OperatorKind::kQuasiOverlap);
}

std::vector<OperatorTable> enumerate_quasi_groupings(
    const LatticePtr& lattice) {
  return enumerate_operators(lattice, OperatorKind::kQuasiGrouping);
}

}  // namespace latext
