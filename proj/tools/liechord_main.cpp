// Copyright 2026 The liechord Authors.
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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "liechord/classical.hpp"
#include "liechord/invariants.hpp"

namespace {

using namespace liechord;

// Exit codes: 0 success / equal, 1 distinct, 2 usage or malformed input,
// 3 not semisimple.
constexpr int kExitOk = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotSemisimple = 3;

std::string matrix_json(const RationalMatrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '"' + format_rational(m(i, j)) + '"';
    }
    out += ']';
  }
  return out + "]";
}

std::string float_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// RFC 4180 style: the diagram field is always quoted since it may contain
// commas.
std::string csv_line(const std::string& diagram, const std::string& value) {
  return '"' + diagram + "\"," + value;
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  out << data << "\n";
}

struct Args {
  std::string family, algebra, algebra_b, diagram, picture, verify, out;
  std::string mode = "exact";
  std::string symmetry = "rotation";
  int param = 0;
  int chords = 0;
  int max_chords = 0;
  int dim = 0;
  int jobs = 1;
  std::uint64_t seed = 12345;
  bool scramble = false;
  bool want_floor = false;
  bool prescreen = false;
};

int run_new(const Args& a) {
  StructureConstants sc = build_classical(parse_family(a.family), a.param);
  if (a.scramble) sc = change_basis(sc, random_invertible(sc.dim(), a.seed));
  write_output(a.out, algebra_to_json(sc));
  return kExitOk;
}

int run_validate(const Args& a) {
  const StructureConstants sc = load_algebra_file(a.algebra);
  const ValidationReport report = validate_structure(sc);
  if (report.empty()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  for (const auto& [i, j, k] : report.antisymmetry)
    std::cout << "antisymmetry (" << i << "," << j << "," << k << ")\n";
  for (const auto& [i, j, k, b] : report.jacobi)
    std::cout << "jacobi (" << i << "," << j << "," << k << "," << b << ")\n";
  return kExitUsage;
}

int run_killing(const Args& a, bool theta) {
  const StructureConstants sc = load_algebra_file(a.algebra);
  if (theta)
    std::cout << matrix_json(casimir_theta(sc).theta) << "\n";
  else
    std::cout << matrix_json(killing_matrix(sc)) << "\n";
  return kExitOk;
}

int run_semisimple(const Args& a) {
  const bool ss = is_semisimple(load_algebra_file(a.algebra));
  std::cout << (ss ? "true" : "false") << "\n";
  return ss ? kExitOk : kExitNotSemisimple;
}

int run_diagrams(const Args& a) {
  Symmetry sym;
  if (a.symmetry == "rotation") sym = Symmetry::rotation;
  else if (a.symmetry == "dihedral") sym = Symmetry::dihedral;
  else if (a.symmetry == "none") sym = Symmetry::none;
  else throw Error(ErrorCode::MalformedInput, "symmetry must be rotation, dihedral or none");
  for (const ChordDiagram& d : enumerate_diagrams(a.chords, sym))
    std::cout << format_diagram(d) << "\n";
  return kExitOk;
}

int run_eval(const Args& a) {
  const StructureConstants sc = load_algebra_file(a.algebra);
  const ChordDiagram d = parse_diagram(a.diagram);
  const KillingData kd = casimir_theta(sc);
  if (a.mode == "exact")
    std::cout << format_rational(evaluate_diagram(d, sc, kd)) << "\n";
  else if (a.mode == "float")
    std::cout << float_text(evaluate_float(d, sc, kd)) << "\n";
  else
    throw Error(ErrorCode::MalformedInput, "mode must be exact or float");
  return kExitOk;
}

int run_invariants(const Args& a) {
  const StructureConstants sc = load_algebra_file(a.algebra);
  std::cout << "diagram,value\n";
  if (a.mode == "exact") {
    for (const auto& [d, v] : invariant_vector(sc, a.max_chords, a.jobs).values)
      std::cout << csv_line(format_diagram(d), format_rational(v)) << "\n";
  } else if (a.mode == "float") {
    for (const auto& [d, v] : float_invariant_scan(sc, a.max_chords, a.jobs))
      std::cout << csv_line(format_diagram(d), float_text(v)) << "\n";
  } else {
    throw Error(ErrorCode::MalformedInput, "mode must be exact or float");
  }
  return kExitOk;
}

int run_compare(const Args& a) {
  const StructureConstants lhs = load_algebra_file(a.algebra);
  const StructureConstants rhs = load_algebra_file(a.algebra_b);
  CompareOptions options;
  options.float_prescreen = a.prescreen;
  options.jobs = a.jobs;
  const Verdict verdict = compare_algebras(lhs, rhs, a.max_chords, options);
  switch (verdict.kind) {
    case Verdict::Kind::distinct:
      std::cout << "verdict: distinct\nwitness: " << format_diagram(*verdict.witness)
                << "\na: " << format_rational(verdict.value_a)
                << "\nb: " << format_rational(verdict.value_b) << "\n";
      return kExitDistinct;
    case Verdict::Kind::equal_up_to:
      std::cout << "verdict: equal-up-to " << verdict.max_chords << "\n";
      return kExitOk;
    case Verdict::Kind::isomorphy_certified:
      std::cout << "verdict: isomorphic-certified " << verdict.max_chords << "\n";
      return kExitOk;
  }
  return kExitUsage;
}

int run_reduce(const Args& a) {
  const ClosedPicture p = load_picture_file(a.picture);
  const DiagramCombination combo = reduce_picture(p);
  std::cout << format_combination(combo) << "\n";
  if (a.verify.empty()) return kExitOk;
  const StructureConstants sc = load_algebra_file(a.verify);
  const KillingData kd = casimir_theta(sc);
  const Rational direct = evaluate_picture(p, sc, kd);
  const Rational reduced = evaluate_combination(combo, sc, kd);
  if (direct == reduced) {
    std::cout << "verify: ok " << format_rational(direct) << "\n";
    return kExitOk;
  }
  std::cout << "verify: MISMATCH picture=" << format_rational(direct)
            << " combination=" << format_rational(reduced) << "\n";
  return kExitDistinct;
}

int run_bound(const Args& a) {
  const TheoremBound bound = theorem_bound(a.dim);
  if (a.want_floor)
    std::cout << bound.floor.str() << "\n";
  else
    std::cout << format_rational(bound.value) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chord-diagram invariants of semisimple Lie algebras"};
  app.require_subcommand(1);
  Args a;

  CLI::App* cmd_new = app.add_subcommand("new", "Build a classical algebra file");
  cmd_new->add_option("--family", a.family, "sl, so or sp")->required();
  cmd_new->add_option("--param", a.param, "family parameter m")->required();
  cmd_new->add_option("--out", a.out, "output path (default: stdout)");
  cmd_new->add_flag("--scramble", a.scramble, "apply a seeded random basis change");
  cmd_new->add_option("--seed", a.seed, "seed for --scramble (default 12345)");

  CLI::App* cmd_validate = app.add_subcommand("validate", "Check the bracket relations");
  cmd_validate->add_option("--algebra", a.algebra)->required();

  CLI::App* cmd_killing = app.add_subcommand("killing", "Print the trace form matrix");
  cmd_killing->add_option("--algebra", a.algebra)->required();

  CLI::App* cmd_theta = app.add_subcommand("theta", "Print the inverse trace form");
  cmd_theta->add_option("--algebra", a.algebra)->required();

  CLI::App* cmd_semisimple = app.add_subcommand("semisimple", "Non-degeneracy check");
  cmd_semisimple->add_option("--algebra", a.algebra)->required();

  CLI::App* cmd_diagrams = app.add_subcommand("diagrams", "List chord diagrams");
  cmd_diagrams->add_option("--chords", a.chords)->required();
  cmd_diagrams->add_option("--symmetry", a.symmetry, "rotation, dihedral or none");

  CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate one diagram");
  cmd_eval->add_option("--algebra", a.algebra)->required();
  cmd_eval->add_option("--diagram", a.diagram)->required();
  cmd_eval->add_option("--mode", a.mode, "exact or float");

  CLI::App* cmd_invariants = app.add_subcommand("invariants", "CSV of diagram values");
  cmd_invariants->add_option("--algebra", a.algebra)->required();
  cmd_invariants->add_option("--max-chords", a.max_chords)->required();
  cmd_invariants->add_option("--mode", a.mode, "exact or float");
  cmd_invariants->add_option("--jobs", a.jobs, "parallel evaluation threads");

  CLI::App* cmd_compare = app.add_subcommand("compare", "Compare two algebra files");
  cmd_compare->add_option("a", a.algebra, "first algebra file")->required();
  cmd_compare->add_option("b", a.algebra_b, "second algebra file")->required();
  cmd_compare->add_option("--max-chords", a.max_chords)->required();
  cmd_compare->add_flag("--float-prescreen", a.prescreen,
                        "scan in floating point, confirm exactly");
  cmd_compare->add_option("--jobs", a.jobs, "parallel evaluation threads");

  CLI::App* cmd_reduce = app.add_subcommand("reduce", "Reduce a picture file");
  cmd_reduce->add_option("--picture", a.picture)->required();
  cmd_reduce->add_option("--verify", a.verify, "algebra file for a value check");

  CLI::App* cmd_bound = app.add_subcommand("bound", "Certification chord bound");
  cmd_bound->add_option("--dim", a.dim)->required();
  cmd_bound->add_flag("--floor", a.want_floor, "print the floor instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: Usage: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_new->parsed()) return run_new(a);
    if (cmd_validate->parsed()) return run_validate(a);
    if (cmd_killing->parsed()) return run_killing(a, false);
    if (cmd_theta->parsed()) return run_killing(a, true);
    if (cmd_semisimple->parsed()) return run_semisimple(a);
    if (cmd_diagrams->parsed()) return run_diagrams(a);
    if (cmd_eval->parsed()) return run_eval(a);
    if (cmd_invariants->parsed()) return run_invariants(a);
    if (cmd_compare->parsed()) return run_compare(a);
    if (cmd_reduce->parsed()) return run_reduce(a);
    if (cmd_bound->parsed()) return run_bound(a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotSemisimple:
      case ErrorCode::NotSemisimpleFamily:
        return kExitNotSemisimple;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
