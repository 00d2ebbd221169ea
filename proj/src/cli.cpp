// Copyright 2026 The ghzlab Authors
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


#include "ghzlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ghzlab/errors.hpp"
#include "ghzlab/json.hpp"
#include "ghzlab/locality.hpp"
#include "ghzlab/mermin.hpp"
#include "ghzlab/optimize.hpp"
#include "ghzlab/qcore.hpp"
#include "ghzlab/rng.hpp"
#include "ghzlab/state_io.hpp"

namespace ghzlab::cli {
namespace {

using nlohmann::json;

struct CommandOptions {
  std::optional<std::string> state_path;
  std::string mode = "ghz";
  std::string model_class;
  std::string op = "m";
  int samples = 64;
  int points = 100;
  std::optional<double> noise;
  std::string bound;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

class CsvWriter {
 public:
  explicit CsvWriter(std::ostringstream& os) : os_(os) {}

  CsvWriter& row() {
    if (started_) os_ << '\n';
    started_ = true;
    first_ = true;
    return *this;
  }
  CsvWriter& cell(const std::string& s) {
    sep();
    os_ << s;
    return *this;
  }
  CsvWriter& cell(double v) { return cell(format_csv_number(v)); }
  CsvWriter& cell(int v) { return cell(std::to_string(v)); }
  CsvWriter& cell(bool v) { return cell(std::string(v ? "true" : "false")); }
  void finish() {
    if (started_) os_ << '\n';
  }

 private:
  void sep() {
    if (!first_) os_ << ',';
    first_ = false;
  }
  std::ostringstream& os_;
  bool started_ = false;
  bool first_ = true;
};

struct Output {
  std::string text;
  int code = kExitOk;
};

// ---------------------------------------------------------------------------

Output cmd_verify(const RunConfig& cfg, const CommandOptions& opt) {
  const bool ghz_default = !opt.state_path;
  const State state = ghz_default ? State{make_ghz()} : load_state(*opt.state_path);

  struct Check {
    std::string name;
    std::string kind;
    double value;
    double expected;
    bool asserted;
    bool pass;
  };
  std::vector<Check> checks;

  // Eigenvalue equations of the GHZ state.
  const std::array<std::pair<const char*, double>, 4> eigen{
      {{"XXX", 1.0}, {"XYY", -1.0}, {"YXY", -1.0}, {"YYX", -1.0}}};
  if (const auto* psi = std::get_if<StateVector>(&state)) {
    for (const auto& [ops, lambda] : eigen) {
      const Observable obs = Observable::parse(ops);
      const double res = eigen_residual(*psi, obs, lambda);
      checks.push_back({std::string(ops), "eigencheck", res, lambda, ghz_default,
                        res < kEigenTol});
    }
  }
  for (int r = 0; r < kRelationCount; ++r) {
    const double s = signed_probability_sum(outcome_probabilities(state, kGhzPatterns[r]));
    const double expected = kGhzTargets[r];
    checks.push_back({pattern_name(kGhzPatterns[r]), "signed_sum", s, expected, ghz_default,
                      std::abs(s - expected) <= kIdentityTol});
  }

  bool ok = true;
  for (const auto& c : checks) {
    if (c.asserted && !c.pass) ok = false;
  }

  Output out;
  out.code = ok ? kExitOk : kExitFailure;
  if (cfg.format == OutputFormat::kCsv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.row().cell(std::string("check")).cell(std::string("kind")).cell(std::string("value"))
        .cell(std::string("expected")).cell(std::string("asserted")).cell(std::string("pass"));
    for (const auto& c : checks) {
      w.row().cell(c.name).cell(c.kind).cell(c.value).cell(c.expected).cell(c.asserted)
          .cell(c.pass);
    }
    w.finish();
    out.text = os.str();
  } else {
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"check", c.name},
                     {"kind", c.kind},
                     {"value", c.value},
                     {"expected", c.expected},
                     {"asserted", c.asserted},
                     {"pass", c.pass}});
    }
    out.text = dump({{"state", ghz_default ? std::string("ghz") : *opt.state_path},
                     {"checks", arr},
                     {"all_pass", ok}});
  }
  return out;
}

Output cmd_contradiction(const RunConfig& cfg, const CommandOptions& opt) {
  Output out;
  std::ostringstream os;
  CsvWriter w(os);
  if (opt.mode == "epr") {
    json arr = json::array();
    if (cfg.format == OutputFormat::kCsv) {
      w.row().cell(std::string("c1")).cell(std::string("c2")).cell(std::string("feasible"))
          .cell(std::string("i_x")).cell(std::string("i_y")).cell(std::string("j_x"))
          .cell(std::string("j_y"));
    }
    for (int c1 : {1, -1}) {
      for (int c2 : {1, -1}) {
        const auto a = epr_contrast(c1, c2);
        if (cfg.format == OutputFormat::kCsv) {
          w.row().cell(c1).cell(c2).cell(a.has_value());
          if (a) w.cell(a->i_x).cell(a->i_y).cell(a->j_x).cell(a->j_y);
        } else {
          json e{{"c1", c1}, {"c2", c2}, {"feasible", a.has_value()}};
          if (a) e["assignment"] = {{"i_x", a->i_x}, {"i_y", a->i_y}, {"j_x", a->j_x}, {"j_y", a->j_y}};
          arr.push_back(e);
        }
      }
    }
    if (cfg.format == OutputFormat::kCsv) {
      w.finish();
      out.text = os.str();
    } else {
      out.text = dump({{"mode", "epr"}, {"patterns", arr}});
    }
    return out;
  }
  if (opt.mode != "ghz") throw InputError("unknown contradiction mode '" + opt.mode + "'");

  const InfeasibilityReport rep = ghz_sign_feasibility();
  const HrSatisfiability hr = hr_constrained_satisfiability(cfg.tolerance);
  const HrSatisfiability box = hr_constrained_satisfiability(cfg.tolerance, false);

  json doc = infeasibility_to_json(rep);
  doc["parity_uniform"] = rep.parity_uniform;
  json witnesses = json::array();
  for (const auto& wi : rep.triple_witness) {
    witnesses.push_back(wi ? json(*wi) : json(nullptr));
  }
  doc["triple_witnesses"] = witnesses;
  doc["hr_tolerance"] = cfg.tolerance;
  doc["hr_max"] = hr.max_satisfied;
  doc["hr_witness"] = hr.witness.values;
  doc["unconstrained_max"] = box.max_satisfied;

  if (cfg.format == OutputFormat::kCsv) {
    w.row().cell(std::string("key")).cell(std::string("value"));
    w.row().cell(std::string("assignments_checked")).cell(rep.assignments_checked);
    w.row().cell(std::string("satisfying")).cell(rep.satisfying);
    w.row().cell(std::string("max_subset")).cell(rep.max_subset);
    w.row().cell(std::string("parity_lhs")).cell(rep.parity_lhs);
    w.row().cell(std::string("parity_rhs")).cell(rep.parity_rhs);
    w.row().cell(std::string("parity_uniform")).cell(rep.parity_uniform);
    w.row().cell(std::string("hr_tolerance")).cell(cfg.tolerance);
    w.row().cell(std::string("hr_max")).cell(hr.max_satisfied);
    w.row().cell(std::string("unconstrained_max")).cell(box.max_satisfied);
    w.finish();
    out.text = os.str();
  } else {
    out.text = dump(doc);
  }
  return out;
}

Output cmd_bounds(const RunConfig& cfg, const CommandOptions& opt) {
  const ModelClass cls = parse_model_class(opt.model_class);
  MerminOperator op = MerminOperator::kM;
  if (opt.op == "mprime") {
    op = MerminOperator::kMPrime;
  } else if (opt.op != "m") {
    throw InputError("--operator must be m or mprime");
  }
  OptimizationResult r;
  switch (cls) {
    case ModelClass::kLocal: r = max_local_mermin(op); break;
    case ModelClass::kRealistic: r = max_realistic_mermin(op); break;
    case ModelClass::kQuantumLocal: r = max_quantum_local_radius(cfg.restarts, cfg.seed); break;
    case ModelClass::kBiseparable: r = max_biseparable_radius(cfg.restarts, cfg.seed); break;
    case ModelClass::kQuantum: r = max_quantum_radius(cfg.restarts, cfg.seed); break;
  }
  r.seed = cfg.seed;

  Output out;
  if (cfg.format == OutputFormat::kCsv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.row().cell(std::string("class")).cell(std::string("value")).cell(std::string("restarts"))
        .cell(std::string("seed"));
    w.row().cell(std::string(class_tag(r.model_class))).cell(r.best_value).cell(r.restarts_used)
        .cell(std::to_string(r.seed));
    w.finish();
    out.text = os.str();
  } else {
    out.text = dump(result_to_json(r));
  }
  return out;
}

struct Scatter {
  std::string group;
  std::vector<MerminPoint> points;
};

std::vector<Scatter> figure_scatter(std::uint64_t seed, int points) {
  std::vector<Scatter> groups;

  Rng local_rng = Rng::stream(seed, 0);
  Scatter local{"scatter_local", {}};
  for (int i = 0; i < points; ++i) {
    local.points.push_back(model_mermin_point(random_local_model(local_rng, 1 + i % 4)));
  }
  groups.push_back(std::move(local));

  Rng product_rng = Rng::stream(seed, 1);
  Scatter product{"scatter_quantum_local", {}};
  for (int i = 0; i < points; ++i) {
    std::array<BlochAngles, kQubits> q{};
    for (auto& b : q) b = {product_rng.polar_angle(), product_rng.azimuth()};
    product.points.push_back(evaluate_point(product_state(q)));
  }
  groups.push_back(std::move(product));

  Rng bisep_rng = Rng::stream(seed, 2);
  Scatter bisep{"scatter_biseparable", {}};
  for (int i = 0; i < points; ++i) {
    const int lone = i % kQubits;
    const Vector2 a = qubit_state({bisep_rng.polar_angle(), bisep_rng.azimuth()});
    Vector4 pair;
    for (int k = 0; k < 4; ++k) pair(k) = Complex(bisep_rng.normal(), bisep_rng.normal());
    bisep.points.push_back(evaluate_point(StateVector::normalized(embed_cut(lone, a, pair))));
  }
  groups.push_back(std::move(bisep));

  Rng quantum_rng = Rng::stream(seed, 3);
  Scatter quantum{"scatter_quantum", {evaluate_point(make_ghz())}};
  for (int i = 1; i < points; ++i) {
    Vector8 v;
    for (int k = 0; k < kDim; ++k) v(k) = Complex(quantum_rng.normal(), quantum_rng.normal());
    quantum.points.push_back(evaluate_point(StateVector::normalized(v)));
  }
  groups.push_back(std::move(quantum));
  return groups;
}

Output cmd_figure1(const RunConfig& cfg, const CommandOptions& opt) {
  if (opt.samples < 8) throw InputError("--samples must be at least 8");
  if (opt.points < 1) throw InputError("--points must be at least 1");
  const auto curves = figure1_regions(opt.samples);
  const auto scatter = figure_scatter(cfg.seed, opt.points);

  Output out;
  // CSV unless JSON was asked for explicitly.
  if (cfg.format_given && cfg.format == OutputFormat::kJson) {
    auto pts = [](const std::vector<MerminPoint>& v) {
      json a = json::array();
      for (const auto& p : v) a.push_back(json::array({p.m, p.mprime}));
      return a;
    };
    json cs = json::array(), ss = json::array();
    for (const auto& c : curves) cs.push_back({{"curve", c.name}, {"points", pts(c.vertices)}});
    for (const auto& s : scatter) ss.push_back({{"group", s.group}, {"points", pts(s.points)}});
    out.text = dump({{"curves", cs}, {"scatter", ss}, {"seed", cfg.seed}});
    return out;
  }
  std::ostringstream os;
  CsvWriter w(os);
  w.row().cell(std::string("curve")).cell(std::string("m")).cell(std::string("mprime"));
  for (const auto& c : curves) {
    for (const auto& p : c.vertices) w.row().cell(c.name).cell(p.m).cell(p.mprime);
  }
  for (const auto& s : scatter) {
    for (const auto& p : s.points) w.row().cell(s.group).cell(p.m).cell(p.mprime);
  }
  w.finish();
  out.text = os.str();
  return out;
}

Output cmd_classify(const RunConfig& cfg, const CommandOptions& opt) {
  if (opt.state_path && opt.noise) throw InputError("use either --state or --noise, not both");
  State state = make_ghz();
  if (opt.state_path) {
    state = load_state(*opt.state_path);
  } else if (opt.noise) {
    state = mix_with_white_noise(make_ghz(), *opt.noise);
  }
  const InequalityReport rep = report(evaluate_point(state));

  Output out;
  if (cfg.format == OutputFormat::kCsv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.row().cell(std::string("m")).cell(std::string("mprime")).cell(std::string("locality"))
        .cell(std::string("quantum_locality")).cell(std::string("realism"))
        .cell(std::string("quantum")).cell(std::string("class"));
    w.row().cell(rep.point.m).cell(rep.point.mprime).cell(rep.satisfies_locality_bound)
        .cell(rep.satisfies_quantum_locality_bound).cell(rep.satisfies_realism_bound)
        .cell(rep.satisfies_quantum_bound).cell(std::string(class_name(rep.entanglement_class)));
    w.finish();
    out.text = os.str();
  } else {
    out.text = dump(report_to_json(rep));
  }
  return out;
}

Output cmd_threshold(const RunConfig& cfg, const CommandOptions& opt) {
  const NoiseBound bound = parse_noise_bound(opt.bound);
  const double v = noise_threshold(bound, cfg.tolerance);
  Output out;
  if (cfg.format == OutputFormat::kCsv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.row().cell(std::string("bound")).cell(std::string("visibility")).cell(std::string("tol"));
    w.row().cell(std::string(bound_tag(bound))).cell(v).cell(cfg.tolerance);
    w.finish();
    out.text = os.str();
  } else {
    out.text = dump({{"bound", std::string(bound_tag(bound))}, {"visibility", v},
                     {"tol", cfg.tolerance}});
  }
  return out;
}

}  // namespace

std::string format_csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CommandOptions opt;
  std::string format = "json";

  CLI::App app{"GHZ locality and Mermin-bound toolkit", "ghzlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Random seed (default 42)")->envname("GHZLAB_SEED");
  app.add_option("--restarts", cfg.restarts, "Optimizer restarts (default 32)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tolerance, "Tolerance (default 1e-6)");
  auto* fmt = app.add_option("--format", format, "Output format: json or csv")
                  ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.output_path, "Write output to this file");

  auto* verify = app.add_subcommand("verify", "Check the GHZ eigenvalue and signed-sum identities");
  verify->add_option("--state", opt.state_path, "State file (default: GHZ)");

  auto* contradiction =
      app.add_subcommand("contradiction", "Sign-assignment and Heisenberg-Robertson contradictions");
  contradiction->add_option("--mode", opt.mode, "ghz or epr")->check(CLI::IsMember({"ghz", "epr"}));

  auto* bounds = app.add_subcommand("bounds", "Maximize the Mermin pair over a model class");
  bounds->add_option("--class", opt.model_class,
                     "local, realistic, quantum_local, biseparable or quantum")
      ->required();
  bounds->add_option("--operator", opt.op, "m or mprime (local and realistic classes)");

  auto* figure1 = app.add_subcommand("figure1", "Export bound curves and sample points");
  figure1->add_option("--samples", opt.samples, "Vertices per circle (>= 8, default 64)");
  figure1->add_option("--points", opt.points, "Scatter points per group (default 100)");

  auto* classify = app.add_subcommand("classify", "Report bounds and class for a state");
  classify->add_option("--state", opt.state_path, "State file");
  classify->add_option("--noise", opt.noise, "Visibility of GHZ mixed with white noise");

  auto* threshold = app.add_subcommand("threshold", "Visibility at which a bound is first violated");
  threshold->add_option("--bound", opt.bound, "locality or quantum_locality")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  cfg.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  cfg.format_given = fmt->count() > 0;

  Output result;
  try {
    if (verify->parsed()) {
      cfg.command = "verify";
      result = cmd_verify(cfg, opt);
    } else if (contradiction->parsed()) {
      cfg.command = "contradiction";
      result = cmd_contradiction(cfg, opt);
    } else if (bounds->parsed()) {
      cfg.command = "bounds";
      result = cmd_bounds(cfg, opt);
    } else if (figure1->parsed()) {
      cfg.command = "figure1";
      result = cmd_figure1(cfg, opt);
    } else if (classify->parsed()) {
      cfg.command = "classify";
      result = cmd_classify(cfg, opt);
    } else if (threshold->parsed()) {
      cfg.command = "threshold";
      result = cmd_threshold(cfg, opt);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file || !(file << result.text) || !file.flush()) {
      err << "error: cannot write " << *cfg.output_path << '\n';
      return kExitInput;
    }
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace ghzlab::cli
