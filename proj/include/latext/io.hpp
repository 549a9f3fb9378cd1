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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "latext/lattice.hpp"
#include "latext/maps.hpp"
#include "latext/operators.hpp"

namespace latext {

// Text formats
// ------------
// Line based, UTF-8. '#' starts a comment; blank lines are ignored.
// Identifiers match [A-Za-z0-9_()^,]+.
//
//   lattice <name>              map <name> from <L> to <M>
//   elements <e1> ... <en>      <x> -> <y>
//   bottom <e>                  ...
//   top <e>                     end
//   covers
//   <lower> <upper>             operator <name> on <L>
//   ...                         <x> <y> -> <z>
//   end                         ...
//                               end
//
// Parse failures throw Error with kind kSyntaxError, kUnknownReference,
// kUnknownElement, kDuplicateEntry or kNotTotal and, where one applies, the
// 1-based line number.

bool is_identifier(std::string_view token);

/// Named lattices, maps and operators loaded from files. Map and operator
/// files resolve their lattice names against the lattices already present.
class Workspace {
 public:
  const LatticePtr& add_lattice(Lattice lattice);
  const Map& add_map(Map map);
  const OperatorTable& add_operator(OperatorTable op);

  // Throws kUnknownReference.
  const LatticePtr& lattice(std::string_view name) const;
  const Map& map(std::string_view name) const;
  const OperatorTable& op(std::string_view name) const;

  bool has_lattice(std::string_view name) const;

 private:
  std::map<std::string, LatticePtr, std::less<>> lattices_;
  std::map<std::string, Map, std::less<>> maps_;
  std::map<std::string, OperatorTable, std::less<>> operators_;
};

Lattice parse_lattice(std::string_view text,
                      std::size_t max_elements = kDefaultMaxElements);
Map parse_map(std::string_view text, const Workspace& workspace);
OperatorTable parse_operator(std::string_view text, const Workspace& workspace);

std::string serialize_lattice(const Lattice& lattice);
std::string serialize_map(const Map& map);
std::string serialize_operator(const OperatorTable& op);

// Throws kUnknownReference when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace latext
