// Copyright 2026 The simgraph Authors
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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simgraph/chordal.hpp"
#include "simgraph/comparability.hpp"
#include "simgraph/errors.hpp"
#include "simgraph/format.hpp"
#include "simgraph/generate.hpp"
#include "simgraph/instance.hpp"
#include "simgraph/oracle.hpp"
#include "simgraph/permutation.hpp"
#include "simgraph/random.hpp"

namespace simgraph::cli {
namespace {

// Bad command-line input or unreadable files.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A result that failed its own verifier.
class InconsistencyError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

GraphClass class_from(const std::string& name) {
  auto cls = parse_graph_class(name);
  if (!cls) throw InputError("unknown class '" + name + "' (chordal, comparability, permutation)");
  return *cls;
}

// Forced-edge files hold u-v tokens, optionally after an "F:" prefix.
SharedInstance add_forced(const SharedInstance& inst, const std::string& path) {
  std::istringstream in(read_file(path));
  EdgeSet forced = inst.forced();
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    for (std::string t; words >> t;) {
      if (t == "F:") continue;
      auto dash = t.find('-');
      if (dash == std::string::npos) throw InputError("malformed forced edge '" + t + "'");
      auto u = inst.find(t.substr(0, dash));
      auto v = inst.find(t.substr(dash + 1));
      if (!u || !v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex in '" + t + "'");
      if (*u == *v) throw Error(ErrorCode::kIllegalForced, "loop '" + t + "'");
      forced.insert(Edge::of(*u, *v));
    }
  }
  return inst.with_forced(forced);
}

struct Answer {
  bool yes = false;
  std::string text;
  bool verified = false;
};

Answer recognize(const SharedInstance& inst, GraphClass cls) {
  Answer a;
  switch (cls) {
    case GraphClass::kChordal: {
      auto r = recognize_simultaneous_chordal(inst);
      a.yes = std::holds_alternative<ChordalCertificate>(r);
      a.verified = a.yes ? verify_chordal_certificate(inst, std::get<ChordalCertificate>(r))
                         : verify_chordal_diagnostic(inst, std::get<ChordalDiagnostic>(r));
      a.text = serialize_chordal_result(inst, r);
      break;
    }
    case GraphClass::kComparability: {
      auto r = recognize_simultaneous_comparability(inst);
      a.yes = std::holds_alternative<ComparabilityCertificate>(r);
      a.verified = a.yes ? verify_comparability_certificate(
                               inst, std::get<ComparabilityCertificate>(r))
                         : verify_forcing_witness(inst, std::get<ForcingWitness>(r));
      a.text = serialize_comparability_result(inst, r);
      break;
    }
    case GraphClass::kPermutation: {
      auto r = recognize_simultaneous_permutation(inst);
      a.yes = std::holds_alternative<PermutationCertificate>(r);
      a.verified = a.yes ? verify_permutation_certificate(inst, std::get<PermutationCertificate>(r))
                         : verify_permutation_witness(inst, std::get<PermutationWitness>(r));
      a.text = serialize_permutation_result(inst, r);
      break;
    }
  }
  return a;
}

bool verify_text(const SharedInstance& inst, GraphClass cls, const std::string& text) {
  switch (cls) {
    case GraphClass::kChordal: {
      auto r = parse_chordal_result(inst, text);
      if (const auto* c = std::get_if<ChordalCertificate>(&r)) {
        return verify_chordal_certificate(inst, *c);
      }
      return verify_chordal_diagnostic(inst, std::get<ChordalDiagnostic>(r));
    }
    case GraphClass::kComparability: {
      if (!inst.forced().empty()) {
        throw Error(ErrorCode::kForcedNotSupported, "forced edges need --class chordal");
      }
      auto r = parse_comparability_result(inst, text);
      if (const auto* c = std::get_if<ComparabilityCertificate>(&r)) {
        return verify_comparability_certificate(inst, *c);
      }
      return verify_forcing_witness(inst, std::get<ForcingWitness>(r));
    }
    case GraphClass::kPermutation: {
      if (!inst.forced().empty()) {
        throw Error(ErrorCode::kForcedNotSupported, "forced edges need --class chordal");
      }
      auto r = parse_permutation_result(inst, text);
      if (const auto* c = std::get_if<PermutationCertificate>(&r)) {
        return verify_permutation_certificate(inst, *c);
      }
      return verify_permutation_witness(inst, std::get<PermutationWitness>(r));
    }
  }
  return false;
}

struct Shape {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t nx = 0;
  std::optional<double> prob;
};

Shape parse_shape(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string p; std::getline(in, p, ',');) parts.push_back(p);
  if (parts.size() != 3 && parts.size() != 4) {
    throw InputError("sweep '" + text + "' is not n1,n2,nx[,prob]");
  }
  Shape s;
  try {
    std::size_t used = 0;
    auto count = [&](const std::string& p) {
      const unsigned long long v = std::stoull(p, &used);
      if (used != p.size() || p.front() == '-') throw std::invalid_argument(p);
      return static_cast<std::size_t>(v);
    };
    s.n1 = count(parts[0]);
    s.n2 = count(parts[1]);
    s.nx = count(parts[2]);
    if (parts.size() == 4) {
      s.prob = std::stod(parts[3], &used);
      if (used != parts[3].size() || *s.prob < 0.0 || *s.prob > 1.0) {
        throw std::invalid_argument(parts[3]);
      }
    }
  } catch (const std::logic_error&) {
    throw InputError("sweep '" + text + "' is not n1,n2,nx[,prob]");
  }
  if (s.nx > s.n1 || s.nx > s.n2) throw InputError("sweep '" + text + "' has nx > n1 or n2");
  return s;
}

std::string millis_text(std::chrono::steady_clock::duration d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f",
                std::chrono::duration<double, std::milli>(d).count());
  return buf;
}

struct Options {
  std::string cls;
  std::string instance;
  std::string certificate;
  std::string forced;
  std::uint64_t seed = 1;
  std::vector<std::string> sweeps;
  std::optional<double> random_prob;
  std::optional<double> density;
  bool cross_check = false;
  bool report = false;
  OracleBudget budget;
};

int cmd_recognize(const Options& o, std::ostream& out, std::ostream& err) {
  const GraphClass cls = class_from(o.cls);
  SharedInstance inst = parse_instance(read_file(o.instance));
  if (!o.forced.empty()) {
    if (cls != GraphClass::kChordal) throw InputError("--forced is only valid with --class chordal");
    inst = add_forced(inst, o.forced);
  }
  const auto start = std::chrono::steady_clock::now();
  const Answer a = recognize(inst, cls);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  out << a.text;
  if (o.report) {
    err << "instance=" << o.instance << " class=" << to_string(cls)
        << " answer=" << (a.yes ? "YES" : "NO") << " millis=" << millis_text(elapsed)
        << " verified=" << (a.verified ? "yes" : "no") << '\n';
  }
  if (!a.verified) throw InconsistencyError("emitted result does not pass its verifier");
  return a.yes ? kExitYes : kExitNo;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GraphClass cls = class_from(o.cls);
  const SharedInstance inst = parse_instance(read_file(o.instance));
  const bool ok = verify_text(inst, cls, read_file(o.certificate));
  out << (ok ? "VALID" : "INVALID") << '\n';
  return ok ? kExitYes : kExitNo;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const SharedInstance inst = parse_instance(read_file(o.instance));
  if (!inst.forced().empty()) {
    throw Error(ErrorCode::kForcedNotSupported, "composite classes ignore forced edges");
  }
  const auto classes = composite_classes(inst);
  std::map<Arc, std::size_t> owner;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const Arc& a : classes[k].edges) owner[a] = k;
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const EdgeClass& c = classes[k];
    const Arc first = *c.edges.begin();
    out << "CLASS " << k << ' ' << to_string(c.kind) << " label=" << c.label
        << " inverse=" << owner.at(first.reversed())
        << " disjoint=" << (c.disjoint_from_inverse() ? "yes" : "no") << ": "
        << format_arcs(inst, c.edges) << '\n';
  }
  return kExitYes;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const GraphClass cls = class_from(o.cls);
  const SharedInstance inst = parse_instance(read_file(o.instance));
  const bool yes = oracle_simultaneous(inst, cls, o.budget);
  if (!o.cross_check) {
    out << (yes ? "YES" : "NO") << '\n';
    return yes ? kExitYes : kExitNo;
  }
  const Answer a = recognize(inst, cls);
  out << "oracle: " << (yes ? "YES" : "NO") << '\n'
      << "recognizer: " << (a.yes ? "YES" : "NO") << '\n';
  if (!a.verified) throw InconsistencyError("recognizer result does not pass its verifier");
  if (a.yes != yes) throw InconsistencyError("oracle and recognizer disagree");
  return yes ? kExitYes : kExitNo;
}

SharedInstance make_instance(const Options& o, const Shape& s, std::uint64_t seed) {
  if (o.random_prob) {
    return random_instance(s.n1, s.n2, s.nx, s.prob.value_or(*o.random_prob), seed);
  }
  PlantedOptions planted;
  planted.density = s.prob ? s.prob : o.density;
  return planted_yes(class_from(o.cls), s.n1, s.n2, s.nx, seed, planted);
}

int cmd_bench(const Options& o, std::ostream& out) {
  const GraphClass cls = class_from(o.cls);
  std::vector<Shape> shapes;
  for (const auto& s : o.sweeps) shapes.push_back(parse_shape(s));
  SplitMix64 seeds(o.seed);
  out << "n,m,x,millis,answer\n";
  for (const Shape& s : shapes) {
    const SharedInstance inst = make_instance(o, s, seeds.next());
    const auto start = std::chrono::steady_clock::now();
    const Answer a = recognize(inst, cls);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (!a.verified) throw InconsistencyError("bench result does not pass its verifier");
    out << inst.size() << ',' << inst.all_edges().size() << ',' << inst.shared_set().count()
        << ',' << millis_text(elapsed) << ',' << (a.yes ? "YES" : "NO") << '\n';
  }
  return kExitYes;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.sweeps.size() != 1) throw InputError("generate takes exactly one --sweep");
  if (!o.random_prob && o.cls.empty()) throw InputError("generate needs --class or --random");
  out << serialize_instance(make_instance(o, parse_shape(o.sweeps.front()), o.seed));
  return kExitYes;
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget-subsets", o.budget.max_subsets, "Augmentation subsets to try")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-orientations", o.budget.max_orientations,
                  "Orientation search nodes per membership test")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-factorial", o.budget.max_factorial_n,
                  "Largest vertex count for the ordering search")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simultaneous chordal, comparability and permutation recognition", "simgraph"};
  app.require_subcommand(1);
  Options o;

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide an instance and print evidence");
  recognize_cmd->add_option("instance", o.instance, "Instance file")->required();
  recognize_cmd->add_option("--class", o.cls, "chordal, comparability or permutation")->required();
  recognize_cmd->add_option("--forced", o.forced, "File of forced augmenting edges (chordal)");
  recognize_cmd->add_flag("--report", o.report, "Print a timing report on stderr");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate or witness");
  verify_cmd->add_option("instance", o.instance, "Instance file")->required();
  verify_cmd->add_option("certificate", o.certificate, "Certificate file")->required();
  verify_cmd->add_option("--class", o.cls, "chordal, comparability or permutation")->required();

  auto* classes_cmd = app.add_subcommand("classes", "Print the composite classes");
  classes_cmd->add_option("instance", o.instance, "Instance file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Decide an instance by exhaustive search");
  oracle_cmd->add_option("instance", o.instance, "Instance file")->required();
  oracle_cmd->add_option("--class", o.cls, "chordal, comparability or permutation")->required();
  oracle_cmd->add_flag("--cross-check", o.cross_check, "Also run the recognizer and compare");
  add_budget(oracle_cmd, o);

  auto* bench_cmd = app.add_subcommand("bench", "Time recognition on generated instances");
  bench_cmd->add_option("--class", o.cls, "chordal, comparability or permutation")->required();
  bench_cmd->add_option("--sweep", o.sweeps, "n1,n2,nx[,prob]; repeatable");
  bench_cmd->add_option("--seed", o.seed, "Seed of the instance stream");
  bench_cmd->add_option("--density", o.density, "Planted density")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--random", o.random_prob, "Use random instances with this edge probability")
      ->check(CLI::Range(0.0, 1.0));

  auto* generate_cmd = app.add_subcommand("generate", "Print a generated instance");
  generate_cmd->add_option("--class", o.cls, "Planted class");
  generate_cmd->add_option("--sweep", o.sweeps, "n1,n2,nx[,prob]")->required();
  generate_cmd->add_option("--seed", o.seed, "Seed");
  generate_cmd->add_option("--density", o.density, "Planted density")->check(CLI::Range(0.0, 1.0));
  generate_cmd->add_option("--random", o.random_prob, "Random instance with this edge probability")
      ->check(CLI::Range(0.0, 1.0));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*recognize_cmd) return cmd_recognize(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*classes_cmd) return cmd_classes(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*bench_cmd) return cmd_bench(o, out);
    if (*generate_cmd) return cmd_generate(o, out);
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::kBudgetExceeded) return kExitBudget;
    if (e.code() == ErrorCode::kInternal) return kExitInternal;
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace simgraph::cli
