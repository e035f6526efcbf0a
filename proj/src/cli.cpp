// Copyright 2026 The balcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "balcap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "balcap/balance.hpp"
#include "balcap/error.hpp"
#include "balcap/functor.hpp"
#include "balcap/integrals.hpp"
#include "balcap/io.hpp"

namespace balcap {

namespace {

struct Options {
  int max_n = kDefaultMaxPoints;
  std::string dump_lp;
  std::string game;
  std::string second;
  std::string function;
  std::string map;
  std::string measure;
  std::string tnorm = "min";
  bool perturb_block = false;
  bool swap_subject = false;
};

// Input that parsed but violates the mathematical contract is a negative
// answer (exit 1); anything structurally wrong is a usage error (exit 2).
bool is_semantic(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMissingEntry:
    case ErrorKind::kEmptyNotZero:
    case ErrorKind::kFullNotOne:
    case ErrorKind::kNotMonotone:
    case ErrorKind::kOutOfRange:
    case ErrorKind::kNegativeFunction:
    case ErrorKind::kBadGenerator:
    case ErrorKind::kNotProbability:
      return true;
    default:
      return false;
  }
}

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err) {}

  int emit(const Json& doc, int code) {
    out_ << canonical_dump(doc);
    return code;
  }

  Capacity load_capacity() const { return dense(load_game(), opts_.max_n); }

  Game load_game() const { return game_from_json(read_json_file(opts_.game), opts_.max_n); }

  void dump_lp(const CoreSolution& solution, const GroundSet& ground) const {
    if (opts_.dump_lp.empty()) return;
    Json rows = Json::array();
    for (Subset s : solution.row_sets) rows.push_back(labels_json(ground, s));
    const Json doc{{"program", to_json(solution.program)},
                   {"row_sets", rows},
                   {"rounds", solution.rounds},
                   {"tableau", to_json(solution.tableau)}};
    std::ofstream file(opts_.dump_lp);
    if (!file) throw Error(ErrorKind::kParse, "cannot write '" + opts_.dump_lp + "'");
    file << canonical_dump(doc);
  }

  int validate() {
    try {
      const Game game = load_game();
      return emit(Json{{"valid", true}, {"game", to_json(game)}}, kExitAffirmative);
    } catch (const Error& e) {
      if (!is_semantic(e.kind())) throw;
      err_ << "invalid capacity: " << e.what() << "\n";
      return emit(Json{{"valid", false}, {"error", to_string(e.kind())}, {"message", e.what()}},
                  kExitNegative);
    }
  }

  int balanced() {
    const Capacity nu = load_capacity();
    if (!opts_.dump_lp.empty()) dump_lp(solve_core(nu), nu.ground());
    const Verdict verdict = check_balanced(nu);
    return emit(to_json(verdict, nu.ground()),
                is_balanced(verdict) ? kExitAffirmative : kExitNegative);
  }

  int core() {
    const Capacity nu = load_capacity();
    if (!opts_.measure.empty()) {
      const ProbMeasure mu = measure_from_json(read_json_file(opts_.measure), nu.ground());
      const auto violated = core_violation(mu, nu);
      if (!violated) return emit(Json{{"in_core", true}}, kExitAffirmative);
      return emit(Json{{"in_core", false},
                       {"violated_at", labels_json(nu.ground(), *violated)},
                       {"measure_value", to_string(measure_of(mu, *violated))},
                       {"capacity_value", to_string(nu(*violated))}},
                  kExitNegative);
    }
    if (!opts_.dump_lp.empty()) dump_lp(solve_core(nu), nu.ground());
    const auto element = core_element(nu);
    if (!element) return emit(Json{{"core_nonempty", false}}, kExitNegative);
    return emit(Json{{"core_nonempty", true}, {"element", to_json(*element)}}, kExitAffirmative);
  }

  int choquet_cmd() {
    const Capacity nu = load_capacity();
    const FuncOnX f = function_from_json(read_json_file(opts_.function), nu.ground());
    return emit(Json{{"value", to_string(choquet(nu, f))}}, kExitAffirmative);
  }

  int integral_cmd() {
    const auto tnorm = parse_tnorm(opts_.tnorm);
    if (!tnorm) throw Error(ErrorKind::kParse, "unknown t-norm '" + opts_.tnorm + "'");
    const Capacity nu = load_capacity();
    const FuncOnX f = function_from_json(read_json_file(opts_.function), nu.ground());
    return emit(Json{{"tnorm", to_string(*tnorm)}, {"value", to_string(tnorm_integral(nu, f, *tnorm))}},
                kExitAffirmative);
  }

  int pushforward_cmd() {
    const Capacity nu = load_capacity();
    const PointMap f = map_from_json(read_json_file(opts_.map), nu.ground());
    return emit(to_json(pushforward(f, nu, opts_.max_n)), kExitAffirmative);
  }

  int monad_cmd() {
    const SecondLevelCapacity second = second_level_from_json(read_json_file(opts_.second));
    return emit(to_json(monad_mult(second, opts_.max_n)), kExitAffirmative);
  }

  int repro() {
    ReproOptions options;
    if (opts_.perturb_block) {
      auto blocks = design_blocks();
      blocks[3] = Subset::of({2, 3, 4});  // {3,4,5} in place of {3,4,6}
      options.coverage_blocks = blocks;
    }
    if (opts_.swap_subject) options.unbalanced_subject = design_capacity(1);
    const ReproReport report = repro_counterexample(options);
    return emit(to_json(report), report.all_pass() ? kExitAffirmative : kExitNegative);
  }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Balancedness, cores and integrals of capacities on finite sets", "balcap"};
  app.require_subcommand(1, 1);
  app.add_option("--max-n", opts.max_n, "Largest ground set for dense 2^n tables")
      ->check(CLI::Range(1, kHardMaxPoints));
  app.add_option("--dump-lp", opts.dump_lp,
                 "Write the final core program and tableau as JSON (balanced, core)");

  auto* validate = app.add_subcommand("validate", "Check the capacity axioms of a game file");
  validate->add_option("game", opts.game)->required();

  auto* balanced = app.add_subcommand("balanced", "Decide balancedness with a certificate");
  balanced->add_option("game", opts.game)->required();

  auto* core = app.add_subcommand("core", "Find a core element, or test one with --measure");
  core->add_option("game", opts.game)->required();
  core->add_option("--measure", opts.measure, "Measure file to test for core membership");

  auto* choquet_app = app.add_subcommand("choquet", "Choquet integral of a function");
  choquet_app->add_option("game", opts.game)->required();
  choquet_app->add_option("function", opts.function)->required();

  auto* integral = app.add_subcommand("integral", "t-normed integral of a [0,1]-valued function");
  integral->add_option("game", opts.game)->required();
  integral->add_option("function", opts.function)->required();
  integral->add_option("--tnorm", opts.tnorm, "min | product | lukasiewicz");

  auto* push = app.add_subcommand("pushforward", "Image capacity under a point map");
  push->add_option("game", opts.game)->required();
  push->add_option("map", opts.map)->required();

  auto* monad = app.add_subcommand("monad", "Multiply a second-level capacity down to a capacity");
  monad->add_option("second_level", opts.second)->required();

  auto* repro = app.add_subcommand("repro-paper", "Replay the six-point non-closure construction");
  repro->add_flag("--perturb-block", opts.perturb_block,
                  "Negative control: coverage check uses {3,4,5} as the fourth block");
  repro->add_flag("--swap-subject", opts.swap_subject,
                  "Negative control: unbalancedness check gets a three-block capacity");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (opts.max_n > kDefaultMaxPoints) {
    err << "warning: --max-n " << opts.max_n << " allows tables of 2^" << opts.max_n
        << " rationals; memory use grows accordingly\n";
  }

  Runner runner(opts, out, err);
  try {
    if (*validate) return runner.validate();
    if (*balanced) return runner.balanced();
    if (*core) return runner.core();
    if (*choquet_app) return runner.choquet_cmd();
    if (*integral) return runner.integral_cmd();
    if (*push) return runner.pushforward_cmd();
    if (*monad) return runner.monad_cmd();
    return runner.repro();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (is_semantic(e.kind())) {
      return runner.emit(Json{{"error", to_string(e.kind())}, {"message", e.what()}},
                         kExitNegative);
    }
    return kExitUsage;
  }
}

}  // namespace balcap
