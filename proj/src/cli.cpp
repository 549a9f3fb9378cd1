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

#include "latext/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "latext/error.hpp"
#include "latext/extension.hpp"
#include "latext/io.hpp"
#include "latext/standard_lattices.hpp"

namespace latext {

namespace {

using Json = nlohmann::ordered_json;

struct Verdict {
  Verdict(std::string axiom, bool pass = true,
          std::vector<std::string> witness = {}, std::string message = {})
      : axiom(std::move(axiom)), pass(pass), witness(std::move(witness)),
        message(std::move(message)) {}

  std::string axiom;
  bool pass = true;
  std::vector<std::string> witness;
  std::string message;
};

/// Everything one command reports, rendered either as text or as JSON.
struct Report {
  explicit Report(std::string command, Json inputs = Json::object())
      : command(std::move(command)), inputs(std::move(inputs)) {}

  std::string command;
  Json inputs;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  Json extra = Json::object();
  // Free text printed after the verdicts in human mode.
  std::string body;

  bool passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.pass; });
  }

  void add(std::string axiom, const ValidationReport& report,
           const std::string& rule) {
    Verdict v(std::move(axiom));
    if (const auto* hit = report.find(rule)) {
      v.pass = false;
      v.witness = hit->witness;
      v.message = hit->message;
    }
    verdicts.push_back(std::move(v));
  }

  void add(const std::string& prefix, const AxiomReport& report) {
    for (const auto& a : report.verdicts) {
      Verdict v(prefix + a.axiom, a.pass);
      if (a.witness) {
        v.witness = a.witness->inputs;
        v.message = a.witness->relation;
      }
      verdicts.push_back(std::move(v));
    }
    if (report.first_argument_monotone) {
      notes.push_back(prefix + "first-argument monotonicity " +
                      (*report.first_argument_monotone ? "holds" : "fails") +
                      " (derived from axioms 1 and 4)");
    }
  }
};

int emit(const Report& report, bool json, std::ostream& out) {
  const int code = report.passed() ? kExitOk : kExitCheckFailed;
  if (json) {
    Json j;
    j["command"] = report.command;
    j["inputs"] = report.inputs;
    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
      Json e;
      e["axiom"] = v.axiom;
      e["pass"] = v.pass;
      if (!v.pass) {
        e["witness"] = v.witness;
        e["message"] = v.message;
      }
      verdicts.push_back(std::move(e));
    }
    j["verdicts"] = std::move(verdicts);
    if (!report.notes.empty()) j["notes"] = report.notes;
    for (const auto& [key, value] : report.extra.items()) j[key] = value;
    j["exit"] = code;
    out << j.dump(2) << "\n";
    return code;
  }
  for (const auto& v : report.verdicts) {
    out << v.axiom << ": ";
    if (v.pass) {
      out << "pass\n";
    } else {
      out << "FAIL witness " << format_tuple(v.witness) << " " << v.message
          << "\n";
    }
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << report.body;
  return code;
}

struct Options {
  bool json = false;
  std::size_t max_size = kDefaultMaxElements;
};

// Loads the lattice files for a two-lattice command. The same lattice may be
// given twice; two different lattices with one name are rejected.
struct LatticePair {
  Workspace workspace;
  LatticePtr big;
  LatticePtr small;
};

LatticePair load_pair(const std::string& big_file,
                      const std::string& small_file, std::size_t max_size) {
  LatticePair p;
  p.big = p.workspace.add_lattice(
      parse_lattice(read_text_file(big_file), max_size));
  Lattice small = parse_lattice(read_text_file(small_file), max_size);
  if (p.workspace.has_lattice(small.name())) {
    if (!(*p.workspace.lattice(small.name()) == small)) {
      throw Error(ErrorKind::kDuplicateEntry,
                  "two different lattices named '" + small.name() + "'");
    }
    p.small = p.big;
  } else {
    p.small = p.workspace.add_lattice(std::move(small));
  }
  return p;
}

std::string map_line(const Map& f) {
  std::string out;
  for (Element x = 0; x < f.domain().size(); ++x) {
    if (x) out += " ";
    out += f.domain().element_name(x) + "->" +
           f.codomain().element_name(f(x));
  }
  return out;
}

Json map_json(const Map& f) {
  Json j = Json::object();
  for (Element x = 0; x < f.domain().size(); ++x) {
    j[f.domain().element_name(x)] = f.codomain().element_name(f(x));
  }
  return j;
}

Json table_json(const OperatorTable& op) {
  Json rows = Json::array();
  const Lattice& lat = op.lattice();
  for (Element x = 0; x < lat.size(); ++x) {
    Json row = Json::array();
    for (Element y = 0; y < lat.size(); ++y) {
      row.push_back(lat.element_name(op(x, y)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_check_lattice(const std::string& file, const Options& opt,
                      std::ostream& out) {
  Report report{"check-lattice"};
  report.inputs["lattice"] = file;
  static const std::vector<std::pair<ErrorKind, std::string>> stages = {
      {ErrorKind::kNotAPartialOrder, "partial-order"},
      {ErrorKind::kNotBounded, "bounded"},
      {ErrorKind::kNotALattice, "meets-and-joins"},
  };
  try {
    Lattice lat = parse_lattice(read_text_file(file), opt.max_size);
    for (const auto& [kind, name] : stages) report.verdicts.emplace_back(name);
    report.extra["lattice"] = lat.name();
    report.extra["elements"] = lat.size();
  } catch (const Error& e) {
    auto failed = std::find_if(stages.begin(), stages.end(),
                               [&](const auto& s) { return s.first == e.kind(); });
    if (failed == stages.end()) throw;
    for (auto it = stages.begin(); it != failed; ++it) {
      report.verdicts.emplace_back(it->second);
    }
    Verdict v(failed->second, false, {}, e.what());
    if (!e.report().violations().empty()) {
      v.witness = e.report().violations().front().witness;
      v.message = e.report().violations().front().message;
    }
    report.verdicts.push_back(std::move(v));
  }
  return emit(report, opt.json, out);
}

int cmd_check_operator(const std::string& lattice_file,
                       const std::string& op_file, OperatorKind kind,
                       const Options& opt, std::ostream& out) {
  Workspace ws;
  ws.add_lattice(parse_lattice(read_text_file(lattice_file), opt.max_size));
  auto op = parse_operator(read_text_file(op_file), ws);
  Report report{"check-operator"};
  report.inputs["lattice"] = lattice_file;
  report.inputs["operator"] = op_file;
  report.inputs["kind"] = std::string(to_string(kind));
  report.add("", check_axioms(op, kind));
  return emit(report, opt.json, out);
}

struct PairFiles {
  std::string big, small, r, s;
};

void add_pair_inputs(Report& report, const PairFiles& f) {
  report.inputs["big"] = f.big;
  report.inputs["small"] = f.small;
  report.inputs["r"] = f.r;
  report.inputs["s"] = f.s;
}

void add_retraction_verdicts(Report& report, const ValidationReport& r) {
  report.add("r-monotone", r, "r-monotone");
  report.add("s-monotone", r, "s-monotone");
  report.add("retraction", r, "retraction");
}

int cmd_check_retraction(const PairFiles& files, bool boundary,
                         bool homomorphism, const Options& opt,
                         std::ostream& out) {
  auto pair = load_pair(files.big, files.small, opt.max_size);
  auto r = parse_map(read_text_file(files.r), pair.workspace);
  auto s = parse_map(read_text_file(files.s), pair.workspace);
  Report report{"check-retraction"};
  add_pair_inputs(report, files);
  report.inputs["boundary"] = boundary;
  report.inputs["strict_homomorphism"] = homomorphism;
  add_retraction_verdicts(report, check_retraction_pair(r, s));
  if (boundary) {
    auto b = check_boundary_conditions(r);
    report.add("boundary-zero", b, "boundary-zero");
    report.add("boundary-one", b, "boundary-one");
  }
  if (homomorphism) {
    auto h = check_homomorphism(r);
    report.add("homomorphism-meet", h, "homomorphism-meet");
    report.add("homomorphism-join", h, "homomorphism-join");
  }
  return emit(report, opt.json, out);
}

int cmd_verify(const std::string& command, const PairFiles& files,
               const std::string& op_file, OperatorKind kind,
               const std::string& output, const Options& opt,
               std::ostream& out) {
  auto pair = load_pair(files.big, files.small, opt.max_size);
  auto r = parse_map(read_text_file(files.r), pair.workspace);
  auto s = parse_map(read_text_file(files.s), pair.workspace);
  auto source = parse_operator(read_text_file(op_file), pair.workspace);
  auto result = verify_theorem(r, s, source, kind);

  Report report{command};
  add_pair_inputs(report, files);
  report.inputs["op"] = op_file;
  report.inputs["kind"] = std::string(to_string(kind));
  if (!output.empty()) report.inputs["output"] = output;
  add_retraction_verdicts(report, result.retraction);
  report.add("boundary-zero", result.boundary, "boundary-zero");
  report.add("boundary-one", result.boundary, "boundary-one");
  report.add("source:", result.source_axioms);
  report.add("extension:", result.extension_axioms);
  report.add("extension-identity", result.identity, "extension-identity");
  report.extra["outcome"] = std::string(to_string(result.outcome()));
  report.extra["provenance"] = {{"extended", result.extended.name()},
                                {"source", result.provenance.source},
                                {"r", result.provenance.r},
                                {"s", result.provenance.s}};
  report.body = "outcome: " + std::string(to_string(result.outcome())) + "\n";

  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary);
    file << serialize_operator(result.extended);
    if (!file) {
      throw Error(ErrorKind::kUnknownReference,
                  "cannot write '" + output + "'");
    }
  }
  return emit(report, opt.json, out);
}

int cmd_enumerate_retractions(const std::string& big_file,
                              const std::string& small_file, bool boundary,
                              const Options& opt, std::ostream& out) {
  auto lattices = load_pair(big_file, small_file, opt.max_size);
  auto pairs = enumerate_retraction_pairs(lattices.big, lattices.small,
                                          boundary, opt.max_size);
  Report report{"enumerate-retractions"};
  report.inputs["big"] = big_file;
  report.inputs["small"] = small_file;
  report.inputs["boundary"] = boundary;
  Json results = Json::array();
  std::ostringstream body;
  body << "# " << pairs.size() << " retraction pairs " << lattices.big->name()
       << " -> " << lattices.small->name() << "\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    body << "pair " << i + 1 << "\n  s: " << map_line(p.s())
         << "\n  r: " << map_line(p.r()) << "\n  boundary-zero: "
         << (p.boundary_zero_ok() ? "pass" : "FAIL")
         << "  boundary-one: " << (p.boundary_one_ok() ? "pass" : "FAIL")
         << "\n";
    results.push_back({{"s", map_json(p.s())},
                       {"r", map_json(p.r())},
                       {"boundary_zero", p.boundary_zero_ok()},
                       {"boundary_one", p.boundary_one_ok()}});
  }
  report.extra["count"] = pairs.size();
  report.extra["results"] = std::move(results);
  report.body = body.str();
  return emit(report, opt.json, out);
}

int cmd_enumerate_operators(const std::string& lattice_file,
                            OperatorKind kind, const Options& opt,
                            std::ostream& out) {
  auto lattice = share(parse_lattice(read_text_file(lattice_file), opt.max_size));
  auto ops = enumerate_operators(lattice, kind);
  Report report{"enumerate-operators"};
  report.inputs["lattice"] = lattice_file;
  report.inputs["kind"] = std::string(to_string(kind));
  std::ostringstream body;
  body << "# " << ops.size() << " " << to_string(kind) << " operators on "
       << lattice->name() << "\n";
  Json results = Json::array();
  for (const auto& op : ops) {
    body << serialize_operator(op);
    results.push_back({{"name", op.name()}, {"table", table_json(op)}});
  }
  report.extra["count"] = ops.size();
  report.extra["results"] = std::move(results);
  report.body = body.str();
  return emit(report, opt.json, out);
}

int emit_lattice(const std::string& what, Json inputs, const Lattice& lat,
                 const Options& opt, std::ostream& out) {
  Report report{"gen " + what, std::move(inputs)};
  report.extra["output"] = serialize_lattice(lat);
  if (opt.json) return emit(report, true, out);
  out << serialize_lattice(lat);
  return kExitOk;
}

OperatorKind kind_option(const std::string& text) {
  auto kind = parse_operator_kind(text);
  if (!kind) {
    throw Error(ErrorKind::kSyntaxError,
                "--kind must be quasi-overlap or quasi-grouping, got '" +
                    text + "'");
  }
  return *kind;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Finite lattices, retraction pairs and quasi-overlap / "
               "quasi-grouping extensions",
               "latext"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a single JSON report");
  app.add_option("--max-size", opt.max_size, "Maximum lattice size")
      ->check(CLI::PositiveNumber);

  std::string file1, file2, op_file, output, kind_text;
  PairFiles pf;
  bool boundary = false;
  bool homomorphism = false;
  std::size_t count = 0;

  auto* check_lattice = app.add_subcommand("check-lattice", "Validate a lattice file");
  check_lattice->add_option("file", file1)->required();

  auto* check_operator = app.add_subcommand("check-operator", "Check operator axioms");
  check_operator->add_option("--lattice", file1)->required();
  check_operator->add_option("--operator", op_file)->required();
  check_operator->add_option("--kind", kind_text)->required();

  auto add_pair_flags = [&](CLI::App* sub) {
    sub->add_option("--big", pf.big)->required();
    sub->add_option("--small", pf.small)->required();
    sub->add_option("--r", pf.r)->required();
    sub->add_option("--s", pf.s)->required();
  };
  auto* check_retraction =
      app.add_subcommand("check-retraction", "Check a retraction pair");
  add_pair_flags(check_retraction);
  check_retraction->add_flag("--boundary", boundary);
  check_retraction->add_flag("--strict-homomorphism", homomorphism);

  auto* extend = app.add_subcommand("extend", "Extend an operator and write it");
  add_pair_flags(extend);
  extend->add_option("--op", op_file)->required();
  extend->add_option("--kind", kind_text)->required();
  extend->add_option("-o,--output", output)->required();

  auto* verify = app.add_subcommand("verify-theorem", "Run the full extension pipeline");
  add_pair_flags(verify);
  verify->add_option("--op", op_file)->required();
  verify->add_option("--kind", kind_text)->required();
  verify->add_option("-o,--output", output);

  auto* enum_retractions =
      app.add_subcommand("enumerate-retractions", "List all retraction pairs");
  enum_retractions->add_option("--big", file1)->required();
  enum_retractions->add_option("--small", file2)->required();
  enum_retractions->add_flag("--boundary", boundary);

  auto* enum_operators =
      app.add_subcommand("enumerate-operators", "List all operators of a kind");
  enum_operators->add_option("--lattice", file1)->required();
  enum_operators->add_option("--kind", kind_text)->required();

  auto* gen = app.add_subcommand("gen", "Print a standard lattice");
  gen->require_subcommand(1);
  auto* gen_chain = gen->add_subcommand("chain", "Chain with N elements");
  gen_chain->add_option("N", count)->required();
  auto* gen_boolean = gen->add_subcommand("boolean", "Boolean lattice with K atoms");
  gen_boolean->add_option("K", count)->required();
  auto* gen_diamond = gen->add_subcommand("diamond", "The diamond M3");
  auto* gen_pentagon = gen->add_subcommand("pentagon", "The pentagon N5");
  auto* gen_product = gen->add_subcommand("product", "Product of two lattice files");
  gen_product->add_option("A", file1)->required();
  gen_product->add_option("B", file2)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "latext: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check_lattice) return cmd_check_lattice(file1, opt, out);
    if (*check_operator) {
      return cmd_check_operator(file1, op_file, kind_option(kind_text), opt,
                                out);
    }
    if (*check_retraction) {
      return cmd_check_retraction(pf, boundary, homomorphism, opt, out);
    }
    if (*extend) {
      return cmd_verify("extend", pf, op_file, kind_option(kind_text), output,
                        opt, out);
    }
    if (*verify) {
      return cmd_verify("verify-theorem", pf, op_file, kind_option(kind_text),
                        output, opt, out);
    }
    if (*enum_retractions) {
      return cmd_enumerate_retractions(file1, file2, boundary, opt, out);
    }
    if (*enum_operators) {
      return cmd_enumerate_operators(file1, kind_option(kind_text), opt, out);
    }
    if (*gen_chain) {
      return emit_lattice("chain", {{"n", count}},
                          make_chain(count, opt.max_size), opt, out);
    }
    if (*gen_boolean) {
      return emit_lattice("boolean", {{"k", count}}, make_boolean(count), opt,
                          out);
    }
    if (*gen_diamond) {
      return emit_lattice("diamond", Json::object(), make_diamond_M3(), opt,
                          out);
    }
    if (*gen_pentagon) {
      return emit_lattice("pentagon", Json::object(), make_pentagon_N5(), opt,
                          out);
    }
    if (*gen_product) {
      auto a = parse_lattice(read_text_file(file1), opt.max_size);
      auto b = parse_lattice(read_text_file(file2), opt.max_size);
      return emit_lattice("product", {{"a", file1}, {"b", file2}},
                          make_product(a, b, opt.max_size), opt, out);
    }
  } catch (const Error& e) {
    err << "latext: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "latext: no command\n";
  return kExitUsage;
}

}  // namespace latext
