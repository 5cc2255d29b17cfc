#include "besov/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "besov/devore.hpp"
#include "besov/errors.hpp"
#include "besov/experiment.hpp"
#include "besov/fixtures.hpp"
#include "besov/io.hpp"
#include "besov/solver.hpp"
#include "besov/synthesis.hpp"

namespace besov {

namespace {

using nlohmann::json;

struct PlanArgs {
  std::string signature;
  bool direct = false;
  bool optimal = false;
  bool all = false;
  std::optional<std::string> weakened;
  bool json = false;
  std::string out;
};

struct FeasibleArgs {
  std::string signature;
  SourceGrid grid;
  std::string out;
};

struct DevoreArgs {
  std::string signature;
  int samples = 11;
  std::string out;
};

struct SolveArgs {
  double eta = 1.0;
  std::string data;
  std::optional<int> maxLevel;
  double penaltyS = 0.0;
  double penaltyP = 2.0;
  std::optional<double> power;
  double alpha = 1.0;
  bool general = false;
  int maxIter = 100000;
  double tol = 1e-12;
  std::string out;
  std::string report;
};

struct RateArgs {
  std::string config;
  std::string outJson;
  std::string outCsv;
  bool serial = false;
};

struct SynthArgs {
  double s = 0.0;
  double p = 2.0;
  int maxLevel = 12;
  double margin = kDefaultSourceMargin;
  std::uint64_t seed = 42;
  double eta = 1.0;
  double delta = 0.01;
  std::string prefix;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    writeTextFile(path, text);
  }
}

template <class Num>
std::vector<BasicPlan<Num>> selectPlans(const BasicSignature<Num>& sig, const PlanArgs& a) {
  std::vector<BasicPlan<Num>> plans;
  const bool none = !a.direct && !a.optimal && !a.weakened;
  if (a.direct || a.all || none) plans.push_back(planDirect(sig));
  if (a.weakened) {
    if constexpr (is_exact_v<Num>) {
      plans.push_back(planWeakened(sig, parseRational(*a.weakened)));
    } else {
      plans.push_back(planWeakened(sig, toDouble(parseRational(*a.weakened))));
    }
  }
  if (a.optimal || a.all || none) plans.push_back(planOptimal(sig));
  return plans;
}

template <class Num>
void runPlan(const BasicSignature<Num>& sig, const PlanArgs& a, std::ostream& out) {
  const auto plans = selectPlans(sig, a);
  json doc = json::array();
  for (const auto& plan : plans) doc.push_back(planToJson(plan));
  const json payload = plans.size() == 1 ? doc.front() : doc;
  if (a.json) {
    emit(a.out, payload.dump(2) + "\n", out);
    return;
  }
  out << planTable(plans);
  if (!a.out.empty()) writeTextFile(a.out, payload.dump(2) + "\n");
}

int cmdPlan(const PlanArgs& a, std::ostream& out) {
  const ParsedSignature sig = parseSignature(readJsonFile(a.signature));
  if (sig.exact) {
    runPlan(*sig.exact, a, out);
  } else {
    runPlan(sig.numeric, a, out);
  }
  return kExitOk;
}

int cmdFeasible(const FeasibleArgs& a, std::ostream& out) {
  const ProblemSignature sig = parseSignature(readJsonFile(a.signature)).numeric;
  emit(a.out, weakenedSourcesCsv(feasibleWeakenedSources(sig, a.grid)), out);
  return kExitOk;
}

int cmdDevore(const DevoreArgs& a, std::ostream& out) {
  const ProblemSignature sig = parseSignature(readJsonFile(a.signature)).numeric;
  requireValidSignature(sig);
  const RegularizationPlan direct = planDirect(sig);
  const RegularizationPlan optimal = planOptimal(sig);
  const int d = sig.dimension();
  const std::vector<LabeledSpace> points{
      {"domain", sig.domain},
      {"domain_dual", dualSpace(sig.domain)},
      {"adjoint_range", sig.adjointRange},
      {"source", sig.source},
      {"penalty_direct", direct.penaltySpace},
      {"penalty_optimal", optimal.penaltySpace},
  };
  std::vector<DiagramLine> lines;
  lines.reserve(points.size());
  for (const LabeledSpace& p : points) {
    lines.push_back({"ddim_" + p.label, differentialDimension(p.space)});
  }
  if (a.samples < 2) throw ValidationError("--samples must be at least 2");
  std::vector<double> invP(static_cast<std::size_t>(a.samples));
  for (int i = 0; i < a.samples; ++i) invP[i] = static_cast<double>(i) / (a.samples - 1);
  const auto rows = devoreDiagramData(points, lines, invP, d);
  emit(a.out, devoreCsv(rows), out);
  return kExitOk;
}

int cmdSolve(const SolveArgs& a, std::ostream& out) {
  const CoefField data = readCoefFieldCsv(a.data, a.maxLevel);
  const DiagonalScaleOperator op(a.eta, data.maxLevel());
  PenaltySpec pen{{a.penaltyS, a.penaltyP, 1}, a.power.value_or(a.penaltyP), a.alpha};
  validate(pen);
  SolveReport report;
  if (a.general) {
    GeneralSolveOptions options;
    options.maxIterations = a.maxIter;
    options.tolerance = a.tol;
    report = solveGeneral(op, data, pen, options);
  } else {
    report = solveDiagonal(op, data, pen);
  }
  emit(a.out, coefFieldCsv(report.minimizer), out);
  const std::string reportText = toJson(report).dump(2) + "\n";
  if (!a.report.empty()) writeTextFile(a.report, reportText);
  if (!report.converged) {
    throw NumericalError("solver did not converge within " + std::to_string(a.maxIter) +
                         " iterations (residual " + formatDouble(report.residual) + ")");
  }
  return kExitOk;
}

int cmdRate(const RateArgs& a, std::ostream& out) {
  const ExperimentConfig config = parseExperimentConfig(readJsonFile(a.config));
  const auto start = std::chrono::steady_clock::now();
  const RateReport report =
      runRateExperiment(config, a.serial ? Execution::serial : Execution::parallel);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string jsonText = toJson(report).dump(2) + "\n";
  const std::string csvText = rateReportCsv(report);
  if (a.outJson.empty() && a.outCsv.empty()) {
    out << csvText;
  }
  if (!a.outJson.empty()) writeTextFile(a.outJson, jsonText);
  if (!a.outCsv.empty()) writeTextFile(a.outCsv, csvText);
  out << "sigma=" << formatDouble(report.sigma) << " slope=" << formatDouble(report.fit.slope)
      << " r2=" << formatDouble(report.fit.rSquared)
      << " error_b_r_inversions=" << report.errorBRInversions << " seconds=" << seconds << "\n";
  return kExitOk;
}

int cmdExamples(std::ostream& out) {
  int failed = 0;
  for (const FixtureResult& r : runPinnedFixtures()) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    if (!r.passed) ++failed;
  }
  out << (failed == 0 ? "all fixtures passed\n" : std::to_string(failed) + " fixture(s) failed\n");
  return failed == 0 ? kExitOk : kExitNumerical;
}

int cmdSynth(const SynthArgs& a, std::ostream& out) {
  if (a.prefix.empty()) throw ValidationError("--prefix is required");
  const BesovSpace source{a.s, a.p, 1};
  validate(source);
  const CoefField truth = makeSource(source, a.maxLevel, a.margin, a.seed);
  const DiagonalScaleOperator op(a.eta, a.maxLevel);
  const NoisyData data = addNoise(op.apply(truth), a.delta, deriveSeed(a.seed, 0));
  writeCoefFieldCsv(a.prefix + "_source.csv", truth);
  writeNoisyData(a.prefix, data);
  out << "wrote " << a.prefix << "_source.csv, " << a.prefix << "_clean.csv, " << a.prefix
      << "_noisy.csv, " << a.prefix << "_noise.json\n";
  return kExitOk;
}

}  // namespace

int cliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tikhonov regularization in Besov scales: planning, solving, rate experiments",
               "besov-rate"};
  app.require_subcommand(1);

  PlanArgs planArgs;
  auto* plan = app.add_subcommand("plan", "Penalty space and rate exponent for a signature");
  plan->add_option("signature", planArgs.signature, "Signature JSON file")->required();
  plan->add_flag("--direct", planArgs.direct, "Plan with p = p_S");
  plan->add_flag("--optimal", planArgs.optimal, "Plan with p = min(p_D, p_G)");
  plan->add_option("--weakened", planArgs.weakened, "Plan with the given p (e.g. 3/2)");
  plan->add_flag("--all", planArgs.all, "Direct and optimal plans");
  plan->add_flag("--json", planArgs.json, "Print JSON instead of the table");
  plan->add_option("--out", planArgs.out, "Write the plan JSON to this file");

  FeasibleArgs feasibleArgs;
  auto* feasible = app.add_subcommand("feasible", "CSV of feasible weaker source spaces");
  feasible->add_option("signature", feasibleArgs.signature, "Signature JSON file")->required();
  feasible->add_option("--inv-p-min", feasibleArgs.grid.invPMin);
  feasible->add_option("--inv-p-max", feasibleArgs.grid.invPMax);
  feasible->add_option("--inv-p-count", feasibleArgs.grid.invPCount);
  feasible->add_option("--s-min", feasibleArgs.grid.sMin);
  feasible->add_option("--s-max", feasibleArgs.grid.sMax);
  feasible->add_option("--s-count", feasibleArgs.grid.sCount);
  feasible->add_option("--out", feasibleArgs.out, "Output CSV (default stdout)");

  DevoreArgs devoreArgs;
  auto* devore = app.add_subcommand("devore", "DeVore diagram CSV for a signature and its plans");
  devore->add_option("signature", devoreArgs.signature, "Signature JSON file")->required();
  devore->add_option("--samples", devoreArgs.samples, "1/p samples per line on [0, 1]");
  devore->add_option("--out", devoreArgs.out, "Output CSV (default stdout)");

  SolveArgs solveArgs;
  auto* solve = app.add_subcommand("solve", "Minimize the Tikhonov functional for given data");
  solve->add_option("--eta", solveArgs.eta, "Smoothing order of the diagonal operator");
  solve->add_option("--data", solveArgs.data, "Data CSV (level,position,value)")->required();
  solve->add_option("--max-level", solveArgs.maxLevel, "Pad the data to this level");
  solve->add_option("--penalty-s", solveArgs.penaltyS, "Penalty smoothness s_R");
  solve->add_option("--penalty-p", solveArgs.penaltyP, "Penalty integrability p_R");
  solve->add_option("--power", solveArgs.power, "Penalty power q (default p_R)");
  solve->add_option("--alpha", solveArgs.alpha, "Regularization parameter");
  solve->add_flag("--general", solveArgs.general, "Use proximal gradient instead of the exact solver");
  solve->add_option("--max-iter", solveArgs.maxIter);
  solve->add_option("--tol", solveArgs.tol);
  solve->add_option("--out", solveArgs.out, "Minimizer CSV (default stdout)");
  solve->add_option("--report", solveArgs.report, "Report JSON");

  RateArgs rateArgs;
  auto* rate = app.add_subcommand("rate", "Convergence-rate experiment over a delta grid");
  rate->add_option("config", rateArgs.config, "Experiment config JSON")->required();
  rate->add_option("--out-json", rateArgs.outJson, "RateReport JSON");
  rate->add_option("--out-csv", rateArgs.outCsv, "RateReport CSV");
  rate->add_flag("--serial", rateArgs.serial, "Run the serial reference path");

  auto* examples = app.add_subcommand("examples", "Check the pinned planner fixtures");

  SynthArgs synthArgs;
  auto* synth = app.add_subcommand("synth", "Write a synthetic source and noisy data");
  synth->add_option("--source-s", synthArgs.s);
  synth->add_option("--source-p", synthArgs.p);
  synth->add_option("--max-level", synthArgs.maxLevel);
  synth->add_option("--margin", synthArgs.margin);
  synth->add_option("--seed", synthArgs.seed);
  synth->add_option("--eta", synthArgs.eta);
  synth->add_option("--delta", synthArgs.delta);
  synth->add_option("--prefix", synthArgs.prefix)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (plan->parsed()) return cmdPlan(planArgs, out);
    if (feasible->parsed()) return cmdFeasible(feasibleArgs, out);
    if (devore->parsed()) return cmdDevore(devoreArgs, out);
    if (solve->parsed()) return cmdSolve(solveArgs, out);
    if (rate->parsed()) return cmdRate(rateArgs, out);
    if (examples->parsed()) return cmdExamples(out);
    if (synth->parsed()) return cmdSynth(synthArgs, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitValidation;
}

}  // namespace besov
