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

#include "latext/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "latext/error.hpp"

namespace latext {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::kSyntaxError,
              "line " + std::to_string(line) + ": " + message, {}, line);
}

[[noreturn]] void fail_at(ErrorKind kind, std::size_t line,
                          const std::string& message) {
  throw Error(kind, "line " + std::to_string(line) + ": " + message, {},
              line);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

const std::string& ident(const Line& line, std::size_t i) {
  const auto& tok = line.tokens.at(i);
  if (!is_identifier(tok)) {
    syntax(line.number, "invalid identifier '" + tok + "'");
  }
  return tok;
}

void expect_arity(const Line& line, std::size_t count,
                  const std::string& form) {
  if (line.tokens.size() != count) {
    syntax(line.number, "expected '" + form + "'");
  }
}

// Splits a block into header, body lines and the terminating `end`.
struct Block {
  const Line* header;
  std::vector<const Line*> body;
};

Block split_block(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) syntax(1, "empty input, expected '" + keyword + "'");
  if (lines.front().tokens.front() != keyword) {
    syntax(lines.front().number, "unknown directive '" +
                                     lines.front().tokens.front() +
                                     "', expected '" + keyword + "'");
  }
  Block block{&lines.front(), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() == 1 && line.tokens[0] == "end") {
      if (i + 1 != lines.size()) {
        syntax(lines[i + 1].number, "content after 'end'");
      }
      return block;
    }
    block.body.push_back(&line);
  }
  syntax(lines.back().number, "missing 'end'");
}

}  // namespace

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  for (unsigned char c : token) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == '(' || c == ')' ||
              c == '^' || c == ',';
    if (!ok) return false;
  }
  return true;
}

Lattice parse_lattice(std::string_view text, std::size_t max_elements) {
  auto lines = tokenize(text);
  Block block = split_block(lines, "lattice");
  expect_arity(*block.header, 2, "lattice <name>");
  std::string name = ident(*block.header, 1);

  const auto& body = block.body;
  const std::size_t last = block.header->number;
  auto directive = [&](std::size_t i, const char* word) -> const Line& {
    if (i >= body.size()) {
      syntax(last, std::string("missing '") + word + "' directive");
    }
    const Line& line = *body[i];
    if (line.tokens[0] != word) {
      syntax(line.number, "unknown directive '" + line.tokens[0] +
                              "', expected '" + word + "'");
    }
    return line;
  };

  const Line& elems = directive(0, "elements");
  if (elems.tokens.size() < 2) syntax(elems.number, "no elements declared");
  std::vector<std::string> elements;
  for (std::size_t i = 1; i < elems.tokens.size(); ++i) {
    const auto& e = ident(elems, i);
    for (const auto& seen : elements) {
      if (seen == e) {
        fail_at(ErrorKind::kDuplicateElement, elems.number,
                "element '" + e + "' declared twice");
      }
    }
    elements.push_back(e);
  }
  auto known = [&](const Line& line, const std::string& e) {
    for (const auto& x : elements) {
      if (x == e) return;
    }
    fail_at(ErrorKind::kUnknownElement, line.number,
            "unknown element '" + e + "'");
  };

  const Line& bot = directive(1, "bottom");
  expect_arity(bot, 2, "bottom <element>");
  known(bot, ident(bot, 1));
  const Line& tp = directive(2, "top");
  expect_arity(tp, 2, "top <element>");
  known(tp, ident(tp, 1));
  const Line& cov = directive(3, "covers");
  expect_arity(cov, 1, "covers");

  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 4; i < body.size(); ++i) {
    const Line& line = *body[i];
    expect_arity(line, 2, "<lower> <upper>");
    known(line, ident(line, 0));
    known(line, ident(line, 1));
    covers.emplace_back(line.tokens[0], line.tokens[1]);
  }
  return build_lattice(std::move(name), std::move(elements), bot.tokens[1],
                       tp.tokens[1], covers, max_elements);
}

Map parse_map(std::string_view text, const Workspace& workspace) {
  auto lines = tokenize(text);
  Block block = split_block(lines, "map");
  const Line& head = *block.header;
  if (head.tokens.size() != 6 || head.tokens[2] != "from" ||
      head.tokens[4] != "to") {
    syntax(head.number, "expected 'map <name> from <lattice> to <lattice>'");
  }
  std::string name = ident(head, 1);
  auto resolve = [&](const std::string& lattice) {
    if (!workspace.has_lattice(lattice)) {
      fail_at(ErrorKind::kUnknownReference, head.number,
              "unknown lattice '" + lattice + "'");
    }
    return workspace.lattice(lattice);
  };
  LatticePtr domain = resolve(ident(head, 3));
  LatticePtr codomain = resolve(ident(head, 5));

  std::vector<std::optional<Element>> image(domain->size());
  for (const Line* line : block.body) {
    if (line->tokens.size() != 3 || line->tokens[1] != "->") {
      syntax(line->number, "expected '<x> -> <y>'");
    }
    const auto& x = ident(*line, 0);
    const auto& y = ident(*line, 2);
    if (!domain->contains(x)) {
      fail_at(ErrorKind::kUnknownElement, line->number,
              "'" + x + "' is not an element of " + domain->name());
    }
    if (!codomain->contains(y)) {
      fail_at(ErrorKind::kUnknownElement, line->number,
              "'" + y + "' is not an element of " + codomain->name());
    }
    auto& slot = image[domain->index_of(x)];
    if (slot) {
      fail_at(ErrorKind::kDuplicateEntry, line->number,
              "'" + x + "' is mapped twice");
    }
    slot = codomain->index_of(y);
  }
  std::vector<Element> table;
  for (Element x = 0; x < image.size(); ++x) {
    if (!image[x]) {
      throw Error(ErrorKind::kNotTotal,
                  "map " + name + " has no image for '" +
                      domain->element_name(x) + "'");
    }
    table.push_back(*image[x]);
  }
  return Map(std::move(name), std::move(domain), std::move(codomain),
             std::move(table));
}

OperatorTable parse_operator(std::string_view text,
                             const Workspace& workspace) {
  auto lines = tokenize(text);
  Block block = split_block(lines, "operator");
  const Line& head = *block.header;
  if (head.tokens.size() != 4 || head.tokens[2] != "on") {
    syntax(head.number, "expected 'operator <name> on <lattice>'");
  }
  std::string name = ident(head, 1);
  const auto& lattice_name = ident(head, 3);
  if (!workspace.has_lattice(lattice_name)) {
    fail_at(ErrorKind::kUnknownReference, head.number,
            "unknown lattice '" + lattice_name + "'");
  }
  LatticePtr lattice = workspace.lattice(lattice_name);
  const std::size_t n = lattice->size();

  std::vector<std::optional<Element>> cells(n * n);
  for (const Line* line : block.body) {
    if (line->tokens.size() != 4 || line->tokens[2] != "->") {
      syntax(line->number, "expected '<x> <y> -> <z>'");
    }
    Element args[2];
    for (int k = 0; k < 2; ++k) {
      const auto& t = ident(*line, k);
      if (!lattice->contains(t)) {
        fail_at(ErrorKind::kUnknownElement, line->number,
                "'" + t + "' is not an element of " + lattice->name());
      }
      args[k] = lattice->index_of(t);
    }
    const auto& z = ident(*line, 3);
    if (!lattice->contains(z)) {
      fail_at(ErrorKind::kUnknownElement, line->number,
              "'" + z + "' is not an element of " + lattice->name());
    }
    auto& slot = cells[args[0] * n + args[1]];
    if (slot) {
      fail_at(ErrorKind::kDuplicateEntry, line->number,
              "pair (" + line->tokens[0] + ", " + line->tokens[1] +
                  ") defined twice");
    }
    slot = lattice->index_of(z);
  }
  std::vector<Element> table;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i]) {
      throw Error(ErrorKind::kNotTotal,
                  "operator " + name + " has no entry for (" +
                      lattice->element_name(i / n) + ", " +
                      lattice->element_name(i % n) + ")");
    }
    table.push_back(*cells[i]);
  }
  return OperatorTable(std::move(name), std::move(lattice), std::move(table));
}

std::string serialize_lattice(const Lattice& lattice) {
  std::string out = "lattice " + lattice.name() + "\nelements";
  for (const auto& e : lattice.elements()) out += " " + e;
  out += "\nbottom " + lattice.element_name(lattice.bottom());
  out += "\ntop " + lattice.element_name(lattice.top());
  out += "\ncovers\n";
  for (const auto& [lo, hi] : cover_names(lattice)) {
    out += lo + " " + hi + "\n";
  }
  return out + "end\n";
}

std::string serialize_map(const Map& map) {
  std::string out = "map " + map.name() + " from " + map.domain().name() +
                    " to " + map.codomain().name() + "\n";
  for (Element x = 0; x < map.domain().size(); ++x) {
    out += map.domain().element_name(x) + " -> " +
           map.codomain().element_name(map(x)) + "\n";
  }
  return out + "end\n";
}

std::string serialize_operator(const OperatorTable& op) {
  const Lattice& lat = op.lattice();
  std::string out =
      "operator " + op.name() + " on " + lat.name() + "\n";
  for (Element x = 0; x < lat.size(); ++x) {
    for (Element y = 0; y < lat.size(); ++y) {
      out += lat.element_name(x) + " " + lat.element_name(y) + " -> " +
             lat.element_name(op(x, y)) + "\n";
    }
  }
  return out + "end\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kUnknownReference,
                "cannot read file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const LatticePtr& Workspace::add_lattice(Lattice lattice) {
  auto name = lattice.name();
  auto [it, inserted] = lattices_.emplace(name, share(std::move(lattice)));
  if (!inserted) {
    throw Error(ErrorKind::kDuplicateEntry,
                "lattice '" + name + "' loaded twice");
  }
  return it->second;
}

const Map& Workspace::add_map(Map map) {
  auto name = map.name();
  auto [it, inserted] = maps_.emplace(name, std::move(map));
  if (!inserted) {
    throw Error(ErrorKind::kDuplicateEntry, "map '" + name + "' loaded twice");
  }
  return it->second;
}

const OperatorTable& Workspace::add_operator(OperatorTable op) {
  auto name = op.name();
  auto [it, inserted] = operators_.emplace(name, std::move(op));
  if (!inserted) {
    throw Error(ErrorKind::kDuplicateEntry,
                "operator '" + name + "' loaded twice");
  }
  return it->second;
}

bool Workspace::has_lattice(std::string_view name) const {
  return lattices_.find(name) != lattices_.end();
}

const LatticePtr& Workspace::lattice(std::string_view name) const {
  auto it = lattices_.find(name);
  if (it == lattices_.end()) {
    throw Error(ErrorKind::kUnknownReference,
                "unknown lattice '" + std::string(name) + "'");
  }
  return it->second;
}

const Map& Workspace::map(std::string_view name) const {
  auto it = maps_.find(name);
  if (it == maps_.end()) {
    throw Error(ErrorKind::kUnknownReference,
                "unknown map '" + std::string(name) + "'");
  }
  return it->second;
}

const OperatorTable& Workspace::op(std::string_view name) const {
  auto it = operators_.find(name);
  if (it == operators_.end()) {
    throw Error(ErrorKind::kUnknownReference,
                "unknown operator '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace latext
