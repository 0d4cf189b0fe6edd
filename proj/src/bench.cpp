#include "thrift/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "thrift/exact.hpp"
#include "thrift/flo.hpp"
#include "thrift/magnus.hpp"

namespace thrift {

namespace {

using nlohmann::json;

std::vector<double> parse_grid(const json& j, const std::string& what) {
  if (j.is_array()) return j.get<std::vector<double>>();
  for (const auto& [k, v] : j.items())
    if (k != "min" && k != "max" && k != "count" && k != "scale")
      throw ConfigError("unknown key in " + what + ": " + k);
  double lo = j.at("min").get<double>(), hi = j.at("max").get<double>();
  int count = j.at("count").get<int>();
  std::string scale = j.value("scale", "log");
  if (count < 1) throw ConfigError(what + ": count must be >= 1");
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    double f = count == 1 ? 0.0 : (double)i / (count - 1);
    out.push_back(scale == "log" ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo));
  }
  return out;
}

PartitionedHamiltonian build_for_alpha(ModelSpec spec, double alpha) {
  switch (spec.kind) {
    case ModelKind::tfim_1d:
    case ModelKind::tfim_2d:
    case ModelKind::heisenberg_1d:
      spec.J = alpha;
      break;
    case ModelKind::fermi_hubbard_1d:
      spec.t_hop = -alpha;  // the interaction strength is alpha = -t_hop
      break;
  }
  return build_model(spec);
}

struct EvalContext {
  const PartitionedHamiltonian& part;
  double T;
  std::string metric, engine;
  DenseUnitary u_exact;
  GaussianUnitary g_exact;

  EvalContext(const PartitionedHamiltonian& p, double T_, std::string metric_,
              std::string engine_)
      : part(p), T(T_), metric(std::move(metric_)), engine(std::move(engine_)) {
    if (engine == "dense")
      u_exact = expm_hermitian(part.full, T);
    else
      g_exact = flo_exact(part, T);
  }

  double error(FormulaKind f, long long N) const {
    if (engine == "flo") {
      GaussianUnitary g;
      if (f == FormulaKind::magnus_thrift1 || f == FormulaKind::magnus_thrift2)
        g = flo_magnus_evolve(part, part.alpha, T,
                              (int)N, f == FormulaKind::magnus_thrift1 ? 1 : 2);
      else
        g = flo_evaluate_schedule(schedule_for(f), part, T, (int)N);
      return flo_spectral_error(g_exact, g);
    }
    DenseUnitary u;
    if (f == FormulaKind::magnus_thrift1 || f == FormulaKind::magnus_thrift2)
      u = magnus_thrift_evolve(part, part.alpha, T, (int)N,
                               f == FormulaKind::magnus_thrift1 ? 1 : 2);
    else
      u = evaluate_schedule(schedule_for(f), T, (int)N);
    return metric == "avg_infidelity" ? avg_infidelity(u_exact, u)
                                      : spectral_error(u_exact, u);
  }

  Schedule schedule_for(FormulaKind f) const {
    switch (f) {
      case FormulaKind::trotter1: return make_trotter(part, 1);
      case FormulaKind::trotter2: return make_trotter(part, 2);
      case FormulaKind::trotter4: return make_trotter(part, 4);
      case FormulaKind::trotter8_opt: return make_trotter(part, 8);
      case FormulaKind::thrift1: return make_thrift(part, 1);
      case FormulaKind::thrift2: return make_thrift(part, 2);
      case FormulaKind::thrift4: return make_thrift(part, 4);
      case FormulaKind::thrift8_opt: return make_thrift(part, 8);
      case FormulaKind::omelyan_small_a4: return make_omelyan_small_a(part);
      default: throw std::logic_error("schedule_for: averaged-Hamiltonian kinds handled above");
    }
  }
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("JSON parse failure: ") + e.what());
  }
  static const std::vector<std::string> top_keys = {
      "model", "metric", "epsilon", "alpha_grid", "T_grid", "budget", "formulas",
      "N_max", "output", "rng_seed", "engine", "L_values", "T_per_L", "serial"};
  for (const auto& [k, v] : j.items())
    if (std::find(top_keys.begin(), top_keys.end(), k) == top_keys.end())
      throw ConfigError("unknown config key: " + k);
  SweepConfig cfg;
  try {
    const json& m = j.at("model");
    static const std::vector<std::string> model_keys = {"kind", "L",     "Ly",      "h",
                                                        "J",    "t_hop", "U", "rng_seed"};
    for (const auto& [k, v] : m.items())
      if (std::find(model_keys.begin(), model_keys.end(), k) == model_keys.end())
        throw ConfigError("unknown model key: " + k);
    cfg.model.kind = model_kind_from_name(m.at("kind").get<std::string>());
    cfg.model.L = m.at("L").get<int>();
    cfg.model.Ly = m.value("Ly", 0);
    cfg.model.h = m.value("h", 1.0);
    cfg.model.J = m.value("J", 0.0);
    cfg.model.t_hop = m.value("t_hop", 0.0);
    cfg.model.U = m.value("U", 1.0);
    cfg.model.rng_seed = m.value("rng_seed", (std::uint64_t)0);

    cfg.metric = j.value("metric", "worst_case");
    if (cfg.metric != "worst_case" && cfg.metric != "avg_infidelity")
      throw ConfigError("unknown metric: " + cfg.metric);
    cfg.epsilon = j.value("epsilon", 0.01);
    if (!(cfg.epsilon > 0 && cfg.epsilon < 2)) throw ConfigError("epsilon must be in (0, 2)");
    if (j.contains("alpha_grid")) cfg.alphas = parse_grid(j["alpha_grid"], "alpha_grid");
    if (j.contains("T_grid")) cfg.Ts = parse_grid(j["T_grid"], "T_grid");
    cfg.budget = j.value("budget", (long long)0);
    if (cfg.budget < 0) throw ConfigError("budget must be >= 0");
    if (j.contains("formulas"))
      for (const auto& name : j["formulas"])
        cfg.formulas.push_back(formula_kind_from_name(name.get<std::string>()));
    cfg.N_max = j.value("N_max", (long long)4096);
    cfg.output = j.value("output", "");
    cfg.rng_seed = j.value("rng_seed", (std::uint64_t)0);
    cfg.engine = j.value("engine", "auto");
    if (cfg.engine != "auto" && cfg.engine != "dense" && cfg.engine != "flo")
      throw ConfigError("unknown engine: " + cfg.engine);
    if (j.contains("L_values")) cfg.L_values = j["L_values"].get<std::vector<int>>();
    cfg.T_per_L = j.value("T_per_L", 1.0);
    cfg.serial = j.value("serial", false);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }
  return cfg;
}

std::string resolve_engine(const SweepConfig& cfg) {
  const int n = cfg.model.kind == ModelKind::fermi_hubbard_1d ? 2 * cfg.model.L
                : cfg.model.kind == ModelKind::tfim_2d        ? cfg.model.L * cfg.model.Ly
                                                              : cfg.model.L;
  const bool flo_ok = cfg.model.kind == ModelKind::tfim_1d && cfg.metric == "worst_case";
  if (cfg.engine == "dense") {
    if (n > kDenseQubitCap) throw CapabilityError("dense engine exceeds the qubit cap");
    return "dense";
  }
  if (cfg.engine == "flo") {
    if (!flo_ok)
      throw CapabilityError("free-fermion engine requires tfim_1d with worst_case metric");
    return "flo";
  }
  if (n <= kDenseQubitCap) return "dense";
  if (flo_ok) return "flo";
  throw CapabilityError("no engine can handle this configuration");
}

double error_at(const PartitionedHamiltonian& part, FormulaKind f, double T,
                long long N, const std::string& metric, const std::string& engine) {
  return EvalContext(part, T, metric, engine).error(f, N);
}

std::vector<SweepRow> landscape(const SweepConfig& cfg) {
  if (cfg.alphas.empty() || cfg.Ts.empty()) throw ConfigError("empty alpha or T grid");
  if (cfg.formulas.empty()) throw ConfigError("empty formula list");
  const std::string engine = resolve_engine(cfg);
  // Formulas sorted by name: deterministic output independent of list order.
  std::vector<FormulaKind> formulas = cfg.formulas;
  std::sort(formulas.begin(), formulas.end(), [](FormulaKind a, FormulaKind b) {
    return formula_kind_name(a) < formula_kind_name(b);
  });

  const int npts = (int)(cfg.alphas.size() * cfg.Ts.size());
  std::vector<std::vector<SweepRow>> per_point(npts);

#pragma omp parallel for schedule(dynamic) if (!cfg.serial)
  for (int idx = 0; idx < npts; ++idx) {
    const double alpha = cfg.alphas[idx / cfg.Ts.size()];
    const double T = cfg.Ts[idx % cfg.Ts.size()];
    ModelSpec spec = cfg.model;
    spec.rng_seed = cfg.model.rng_seed ? cfg.model.rng_seed : cfg.rng_seed;
    PartitionedHamiltonian part = build_for_alpha(spec, alpha);
    EvalContext ctx(part, T, cfg.metric, engine);
    std::vector<SweepRow>& rows = per_point[idx];
    const auto& reg = DepthRegistry::instance();
    for (FormulaKind f : formulas) {
      if (!reg.has(cfg.model.kind, f)) continue;
      const long long N = steps_for_budget(cfg.model.kind, f, cfg.budget);
      if (N == 0) continue;
      SweepRow row;
      row.model = model_kind_name(cfg.model.kind);
      row.engine = engine;
      row.seed = spec.rng_seed;
      row.alpha = alpha;
      row.T = T;
      row.budget = cfg.budget;
      row.formula = formula_kind_name(f);
      row.steps = N;
      auto [tq, cx] = depth(cfg.model.kind, f, N);
      row.two_qubit_depth = tq;
      row.cnot_depth = cx;
      row.metric = cfg.metric;
      row.error = ctx.error(f, N);
      rows.push_back(row);
    }
    // best marker: min error, then lower two-qubit depth, then name
    if (!rows.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto &a = rows[i], &b = rows[best];
        if (a.error < b.error ||
            (a.error == b.error && (a.two_qubit_depth < b.two_qubit_depth ||
                                    (a.two_qubit_depth == b.two_qubit_depth &&
                                     a.formula < b.formula))))
          best = i;
      }
      rows[best].is_best = true;
    }
  }
  std::vector<SweepRow> out;
  for (auto& v : per_point)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

std::optional<long long> min_steps(const PartitionedHamiltonian& part, FormulaKind f,
                                   double T, double epsilon, const std::string& metric,
                                   const std::string& engine, long long N_max) {
  EvalContext ctx(part, T, metric, engine);
  auto err = [&](long long N) { return ctx.error(f, N); };
  long long N;
  if (err(1) <= epsilon) {
    N = 1;
  } else {
    long long lo = 1, hi = 1;  // err(lo) > eps; bracket by doubling
    bool bracketed = false;
    while (hi < N_max) {
      lo = hi;
      hi = std::min(2 * hi, N_max);
      if (err(hi) <= epsilon) {
        bracketed = true;
        break;
      }
    }
    if (!bracketed) return std::nullopt;
    while (hi - lo > 1) {
      long long mid = lo + (hi - lo) / 2;
      (err(mid) <= epsilon ? hi : lo) = mid;
    }
    N = hi;
  }
  // endpoint verification: product-formula error can oscillate in N, so walk
  // down until err(N-1) > eps (err(N) <= eps holds by construction)
  while (N > 1 && err(N - 1) <= epsilon) --N;
  return N;
}

std::vector<ScalingRow> scaling_sweep(const SweepConfig& cfg) {
  if (cfg.L_values.empty()) throw ConfigError("scaling sweep needs L_values");
  if (cfg.formulas.empty()) throw ConfigError("empty formula list");
  const double alpha = cfg.alphas.empty() ? cfg.model.J : cfg.alphas.front();
  std::vector<ScalingRow> out;
  for (int L : cfg.L_values) {
    SweepConfig point = cfg;
    point.model.L = L;
    const std::string engine = resolve_engine(point);
    ModelSpec spec = point.model;
    spec.rng_seed = cfg.model.rng_seed ? cfg.model.rng_seed : cfg.rng_seed;
    PartitionedHamiltonian part = build_for_alpha(spec, alpha);
    const double T = cfg.T_per_L * L;
    for (FormulaKind f : cfg.formulas) {
      if (!DepthRegistry::instance().has(cfg.model.kind, f)) continue;
      ScalingRow row;
      row.model = model_kind_name(cfg.model.kind);
      row.engine = engine;
      row.formula = formula_kind_name(f);
      row.seed = spec.rng_seed;
      row.L = L;
      row.alpha = alpha;
      row.T = T;
      row.epsilon = cfg.epsilon;
      auto N = min_steps(part, f, T, cfg.epsilon, cfg.metric, engine, cfg.N_max);
      if (N) {
        row.found = true;
        row.steps = *N;
        auto [tq, cx] = depth(cfg.model.kind, f, *N);
        row.two_qubit_depth = tq;
        row.cnot_depth = cx;
        const auto& r = DepthRegistry::instance().lookup(cfg.model.kind, f);
        // +-1-step depth uncertainty in log space: sigma = a / d
        row.weight = (double)(tq * tq) / (double)(r.a * r.a);
      }
      out.push_back(row);
    }
  }
  return out;
}

FitResult powerlaw_fit(const std::vector<std::array<double, 3>>& points) {
  if (points.size() < 3) throw ConfigError("power-law fit needs at least 3 points");
  double s_w = 0, s_x = 0, s_y = 0, s_xx = 0, s_xy = 0;
  for (const auto& [L, d, w] : points) {
    if (!(L > 0) || !(d > 0) || !(w > 0)) throw ConfigError("fit points must be positive");
    const double x = std::log(L), y = std::log(d);
    s_w += w;
    s_x += w * x;
    s_y += w * y;
    s_xx += w * x * x;
    s_xy += w * x * y;
  }
  const double det = s_w * s_xx - s_x * s_x;
  if (std::abs(det) < 1e-12 * s_w * s_xx) throw ConfigError("degenerate design matrix");
  const double loga = (s_xx * s_y - s_x * s_xy) / det;
  const double k = (s_w * s_xy - s_x * s_y) / det;
  FitResult fit;
  fit.a = std::exp(loga);
  fit.k = k;
  fit.cov[0][0] = s_xx / det;
  fit.cov[0][1] = fit.cov[1][0] = -s_x / det;
  fit.cov[1][1] = s_w / det;
  fit.points_used = (int)points.size();
  return fit;
}

namespace {
std::string timestamp_line() {
  std::time_t now = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return std::string("# generated ") + buf + " (rng: mt19937_64)\n";
}
}  // namespace

std::string landscape_csv(const std::vector<SweepRow>& rows, bool timestamp_header) {
  std::ostringstream out;
  if (timestamp_header) out << timestamp_line();
  out << "model,engine,seed,alpha,T,budget,formula,steps,two_qubit_depth,cnot_depth,"
         "metric,error,is_best\n";
  for (const auto& r : rows)
    out << r.model << ',' << r.engine << ',' << r.seed << ',' << fmt17(r.alpha) << ','
        << fmt17(r.T) << ',' << r.budget << ',' << r.formula << ',' << r.steps << ','
        << r.two_qubit_depth << ',' << r.cnot_depth << ',' << r.metric << ','
        << fmt17(r.error) << ',' << (r.is_best ? 1 : 0) << '\n';
  return out.str();
}

std::string scaling_csv(const std::vector<ScalingRow>& rows, bool timestamp_header) {
  std::ostringstream out;
  if (timestamp_header) out << timestamp_line();
  out << "model,engine,seed,formula,L,alpha,T,epsilon,steps,two_qubit_depth,cnot_depth,"
         "weight,found\n";
  for (const auto& r : rows)
    out << r.model << ',' << r.engine << ',' << r.seed << ',' << r.formula << ',' << r.L
        << ',' << fmt17(r.alpha) << ',' << fmt17(r.T) << ',' << fmt17(r.epsilon) << ','
        << r.steps << ',' << r.two_qubit_depth << ',' << r.cnot_depth << ','
        << fmt17(r.weight) << ',' << (r.found ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace thrift
