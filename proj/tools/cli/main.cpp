// multischur: command-line front end.
//
// Exit codes: 0 success, 1 numerical non-convergence, 2 validation failure,
// 64 usage error.

#include "checks.hpp"

#include "multischur/errors.hpp"
#include "multischur/fredholm.hpp"
#include "multischur/kernel.hpp"
#include "multischur/limit_shape.hpp"
#include "multischur/measure.hpp"
#include "multischur/multicritical.hpp"
#include "multischur/sampler.hpp"
#include "multischur/toeplitz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace ms = multischur;
using nlohmann::json;

namespace {

constexpr int kExitConvergence = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;

struct Config {
  std::string kind = "odd";
  int n = 1;
  std::string theta = "1";
  std::string output;
  std::string format = "csv";
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string right_convention = ms::to_string(ms::kDefaultRightConvention);
  std::string left_convention = ms::to_string(ms::kDefaultLeftConvention);
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// A table with a self-describing header; written as CSV (header as a
// leading "# {json}" line) or as one JSON document.
struct Table {
  json header;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add(std::vector<json> row) { rows.push_back(std::move(row)); }
};

json conventions(const Config& c) {
  return {{"site_encoding", "m = k - 1/2"},
          {"right_edge_scaling", c.right_convention},
          {"left_edge_scaling", c.left_convention}};
}

json base_header(const std::string& command, const Config& c, json config) {
  config["threads_affect_output"] = false;
  return {{"tool", "multischur"}, {"version", "0.1.0"}, {"command", command},
          {"config", std::move(config)}, {"conventions", conventions(c)}};
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("MULTISCHUR_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void emit_text(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  const auto path = resolve_output(c.output);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ms::ValidationError("cannot open output file " + path.string());
  out << text;
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  return v.dump();
}

void emit(const Config& c, const Table& t) {
  std::ostringstream os;
  if (c.format == "json") {
    json doc{{"header", t.header}, {"columns", t.columns}, {"rows", json::array()}};
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
      doc["rows"].push_back(obj);
    }
    os << doc.dump(2) << '\n';
  } else {
    os << "# " << t.header.dump() << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
      os << '\n';
    }
  }
  emit_text(c, os.str());
}

ms::MulticriticalParams params_of(const Config& c) {
  return ms::make_params(ms::parse_measure_kind(c.kind), c.n, ms::parse_rational(c.theta));
}

json params_json(const ms::MulticriticalParams& p) {
  json thetas = json::array();
  for (const auto& t : p.spec().exact_thetas()) thetas.push_back(ms::to_string(t));
  json ratios = json::array();
  for (const auto& r : p.ratios) ratios.push_back(ms::to_string(r));
  json j{{"kind", ms::to_string(p.kind)}, {"n", p.n},          {"theta", ms::to_string(p.theta)},
         {"thetas", thetas},             {"ratios", ratios}, {"b", ms::to_string(p.b)},
         {"d", ms::to_string(p.d)}};
  if (p.b_tilde) j["b_tilde"] = ms::to_string(*p.b_tilde);
  if (p.d_tilde) j["d_tilde"] = ms::to_string(*p.d_tilde);
  return j;
}

void add_measure_options(CLI::App* app, Config& c) {
  app->add_option("--kind", c.kind, "oe | odd")->check(CLI::IsMember({"oe", "odd_even", "odd-even", "o", "odd"}));
  app->add_option("--n", c.n, "multicriticality order")->check(CLI::PositiveNumber);
  app->add_option("--theta", c.theta, "theta, exact (\"p/q\" or decimal)");
}

void add_output_options(CLI::App* app, Config& c) {
  app->add_option("-o,--output", c.output, "output file (relative paths resolve against $MULTISCHUR_OUT_DIR)");
  app->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

int run_params(const Config& c) {
  const auto p = params_of(c);
  json doc = base_header("params", c, {{"kind", c.kind}, {"n", c.n}, {"theta", c.theta}});
  doc["params"] = params_json(p);
  const auto report = ms::verify_criticality(p);
  doc["criticality_ok"] = report.ok();
  emit_text(c, doc.dump(2) + "\n");
  return 0;
}

int run_gap(const Config& c, int from, int to, const std::string& stat) {
  if (to < from) throw ms::ValidationError("--to must be at least --from");
  const auto p = params_of(c);
  const auto statistic = ms::parse_edge_statistic(stat);
  const ms::Specialization spec = statistic == ms::EdgeStatistic::lambda1 ? p.spec() : ms::omega_involution(p.spec());
  const ms::DiscreteKernel kernel(spec);
  Table t;
  t.header = base_header("gap", c, {{"kind", c.kind}, {"n", c.n}, {"theta", c.theta}, {"from", from}, {"to", to},
                                    {"statistic", stat}, {"params", params_json(p)}});
  t.columns = {"l", "probability", "window_hi", "truncation_tail"};
  for (int l = from; l <= to; ++l) {
    const auto g = ms::gap_probability_detail(kernel, l);
    t.add({l, g.value, g.window_hi, g.truncation_tail});
  }
  emit(c, t);
  return 0;
}

int run_cdf(Config c, double s_from, double s_to, double step, const std::string& stat) {
  if (!(step > 0) || s_to < s_from) throw ms::ValidationError("invalid s range");
  const auto p = params_of(c);
  const auto statistic = ms::parse_edge_statistic(stat);
  const bool left = statistic == ms::EdgeStatistic::length && p.kind == ms::MeasureKind::odd_even;
  const auto convention = ms::parse_scaling_convention(left ? c.left_convention : c.right_convention);
  const ms::Specialization spec = statistic == ms::EdgeStatistic::lambda1 ? p.spec() : ms::omega_involution(p.spec());
  const ms::DiscreteKernel kernel(spec);
  const auto scaling = ms::edge_scaling(p, statistic, convention);
  Table t;
  t.header = base_header("cdf", c, {{"kind", c.kind}, {"n", c.n}, {"theta", c.theta}, {"s_from", s_from},
                                    {"s_to", s_to}, {"step", step}, {"statistic", stat},
                                    {"center", scaling.center}, {"scale", scaling.scale},
                                    {"limit_order", scaling.exponent_denominator}});
  t.columns = {"s", "l", "cdf", "limit"};
  const int steps = static_cast<int>(std::floor((s_to - s_from) / step + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double s = s_from + i * step;
    const auto e = ms::edge_scaled_cdf(kernel, p, statistic, s, convention);
    t.add({s, e.l, e.value, ms::tracy_widom(scaling.exponent_denominator, s)});
  }
  emit(c, t);
  return 0;
}

int run_dist_table(const Config& c, int order, double s_from, double s_to, double step) {
  if (!(step > 0) || s_to < s_from) throw ms::ValidationError("invalid s range");
  const ms::TracyWidom tw(order);
  Table t;
  t.header = base_header("dist-table", c, {{"order", order}, {"s_from", s_from}, {"s_to", s_to}, {"step", step}});
  t.columns = {"s", "F", "nodes", "self_convergence"};
  const int steps = static_cast<int>(std::floor((s_to - s_from) / step + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double s = s_from + i * step;
    const auto r = tw.evaluate(s);
    t.add({s, r.value, r.nodes, r.self_convergence});
  }
  emit(c, t);
  return 0;
}

int run_limit_shape(const Config& c, double step, const std::string& compare_theta) {
  const auto kind = ms::parse_measure_kind(c.kind);
  const auto profile = ms::density_profile(kind, c.n, step);
  std::optional<ms::DiscreteKernel> kernel;
  double theta = 0.0;
  if (!compare_theta.empty()) {
    const auto p = ms::make_params(kind, c.n, ms::parse_rational(compare_theta));
    theta = p.theta_value();
    kernel.emplace(p.spec());
  }
  Table t;
  t.header = base_header("limit-shape", c, {{"kind", c.kind}, {"n", c.n}, {"grid_step", step},
                                            {"left_edge", profile.left_edge}, {"right_edge", profile.right_edge},
                                            {"compare_theta", compare_theta}});
  t.columns = {"u", "rho", "omega"};
  if (kernel) t.columns.push_back("kernel_density");
  for (const auto& pt : profile.points) {
    std::vector<json> row{pt.u, pt.rho, pt.omega};
    if (kernel) row.emplace_back(kernel->density(static_cast<int>(std::floor(theta * pt.u))));
    t.add(std::move(row));
  }
  emit(c, t);
  return 0;
}

int run_toeplitz_check(const Config& c, int l_max, int enum_cap, long mc_samples, std::uint64_t seed) {
  const auto p = params_of(c);
  const auto spec = p.spec();
  const auto dual = ms::omega_involution(spec);
  const ms::EnumeratedMeasure measure(spec, enum_cap);
  const ms::DiscreteKernel k1(spec), kl(dual);
  const double z = std::exp(spec.log_normalizer());
  Table t;
  t.header = base_header("toeplitz-check", c, {{"kind", c.kind}, {"n", c.n}, {"theta", c.theta}, {"l_max", l_max},
                                               {"enum_cap", enum_cap}, {"mc_samples", mc_samples}, {"seed", seed}});
  t.columns = {"statistic", "l", "enumeration", "toeplitz_f", "toeplitz_g_omega", "fredholm", "max_difference"};
  if (mc_samples > 0) t.columns.insert(t.columns.end(), {"haar_mc", "haar_mc_se"});
  double worst = 0.0;
  for (const char* stat : {"lambda1", "length"}) {
    const bool first = std::string(stat) == "lambda1";
    for (int l = 0; l <= l_max; ++l) {
      const double e = first ? measure.first_part_cdf(l) : measure.length_cdf(l);
      const double tf = ms::toeplitz_length(first ? dual : spec, l) / z;
      const double tg = ms::toeplitz_first_part(first ? spec : dual, l) / z;
      const double fr = ms::gap_probability(first ? k1 : kl, l);
      const double d = std::max({std::abs(e - tf), std::abs(tf - tg), std::abs(tf - fr)});
      worst = std::max(worst, d);
      std::vector<json> row{stat, l, e, tf, tg, fr, d};
      if (mc_samples > 0) {
        const auto mc = ms::haar_expectation_mc(first ? dual : spec, l, mc_samples, seed, ms::SymbolFamily::f, c.threads);
        row.emplace_back(mc.mean / z);
        row.emplace_back(mc.std_error / z);
      }
      t.add(std::move(row));
    }
  }
  emit(c, t);
  return worst <= 1e-9 ? 0 : kExitValidation;
}

int run_sample(const Config& c, long count, std::uint64_t seed, const std::string& stat, bool partitions,
               std::optional<int> lo, std::optional<int> hi) {
  const auto p = params_of(c);
  ms::SamplerOptions options;
  options.threads = c.threads;
  if (lo || hi) {
    ms::SampleWindow w = ms::auto_window(p);
    if (lo) w.lo = *lo;
    if (hi) w.hi = *hi;
    options.window = w;
  }
  const auto batch = ms::sample(p, count, seed, options);
  Table t;
  t.header = base_header("sample", c, {{"kind", c.kind}, {"n", c.n}, {"theta", c.theta}, {"count", count},
                                       {"seed", seed}, {"stat", stat}, {"window", {batch.window.lo, batch.window.hi}},
                                       {"rejected", batch.rejected}, {"clamped_eigenvalues", batch.clamped_eigenvalues}});
  t.columns = {"index", "lambda1", "length", "size"};
  const bool scaled = stat != "none";
  std::optional<ms::EdgeScaling> scaling;
  if (scaled) {
    const auto statistic = ms::parse_edge_statistic(stat);
    const bool left = statistic == ms::EdgeStatistic::length && p.kind == ms::MeasureKind::odd_even;
    scaling = ms::edge_scaling(p, statistic, ms::parse_scaling_convention(left ? c.left_convention : c.right_convention));
    t.columns.push_back("rescaled_" + stat);
  }
  if (partitions) t.columns.push_back("partition");
  for (std::size_t i = 0; i < batch.partitions.size(); ++i) {
    const auto& q = batch.partitions[i];
    std::vector<json> row{i, q.first(), q.length(), q.size()};
    if (scaling) {
      const int v = stat == "lambda1" ? q.first() : q.length();
      row.emplace_back((v - scaling->center) / scaling->scale);
    }
    if (partitions) {
      std::string parts = q.to_string();
      std::replace(parts.begin(), parts.end(), ',', ' ');
      row.emplace_back(parts);
    }
    t.add(std::move(row));
  }
  emit(c, t);
  return batch.accepted() ? 0 : kExitValidation;
}

int run_verify(const Config& c, const std::vector<std::string>& only, std::uint64_t seed) {
  ms::checks::CheckOptions o;
  o.threads = c.threads;
  o.seed = seed;
  o.kind = ms::parse_measure_kind(c.kind);
  o.n = c.n;
  o.theta = ms::parse_rational(c.theta);
  std::vector<std::string> ids = only.empty() ? ms::checks::check_ids() : only;
  json report = base_header("verify", c, {{"only", only}, {"seed", seed}, {"kind", c.kind}, {"n", c.n}, {"theta", c.theta}});
  report["checks"] = json::array();
  bool all = true;
  for (const auto& id : ids) {
    const auto r = ms::checks::run_check(id, o);
    all = all && r.passed;
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.summary << '\n';
    auto j = ms::checks::to_json(r);
    j.erase("seconds");
    report["checks"].push_back(j);
    if (id == "scaling-disambiguation" || id == "criterion-9")
      report["winning_convention"] = r.details.contains("winning_convention") ? r.details["winning_convention"]
                                                                             : r.details["edges"][0]["winner"];
  }
  report["all_passed"] = all;
  emit_text(c, report.dump(2) + "\n");
  return all ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multischur: multicritical Schur measures"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--threads", c.threads, "worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);

  auto* params = app.add_subcommand("params", "exact parameters of a multicritical measure");
  add_measure_options(params, c);
  params->add_option("-o,--output", c.output, "output file");

  int from = 0, to = 10;
  std::string stat = "lambda1";
  auto* gap = app.add_subcommand("gap", "P(lambda_1 <= l) or P(l(lambda) <= l) from the discrete kernel");
  add_measure_options(gap, c);
  add_output_options(gap, c);
  gap->add_option("--from", from, "first l");
  gap->add_option("--to", to, "last l");
  gap->add_option("--statistic", stat, "lambda1 | length")->check(CLI::IsMember({"lambda1", "length"}));

  double s_from = -4, s_to = 4, step = 0.5;
  auto* cdf = app.add_subcommand("cdf", "edge-rescaled CDF against the limit law");
  add_measure_options(cdf, c);
  add_output_options(cdf, c);
  cdf->add_option("--s-from", s_from);
  cdf->add_option("--s-to", s_to);
  cdf->add_option("--step", step);
  cdf->add_option("--statistic", stat, "lambda1 | length")->check(CLI::IsMember({"lambda1", "length"}));
  cdf->add_option("--right-scaling", c.right_convention, "theta_over_d | theta_times_d");
  cdf->add_option("--left-scaling", c.left_convention, "theta_over_d | theta_times_d");

  int order = 3;
  auto* dist = app.add_subcommand("dist-table", "F(2n+1; s) on a grid");
  add_output_options(dist, c);
  dist->add_option("--order", order, "odd order >= 3");
  dist->add_option("--s-from", s_from);
  dist->add_option("--s-to", s_to);
  dist->add_option("--step", step);

  double grid_step = 0.05;
  std::string compare_theta;
  auto* shape = app.add_subcommand("limit-shape", "limiting density and profile");
  shape->add_option("--kind", c.kind)->check(CLI::IsMember({"oe", "odd_even", "odd-even", "o", "odd"}));
  shape->add_option("--n", c.n)->check(CLI::PositiveNumber);
  add_output_options(shape, c);
  shape->add_option("--grid-step", grid_step);
  shape->add_option("--compare-theta", compare_theta, "append the kernel diagonal at this theta");

  int l_max = 5, enum_cap = 30;
  long mc_samples = 0;
  std::uint64_t seed = 20240531;
  auto* toeplitz = app.add_subcommand("toeplitz-check", "enumeration vs Toeplitz vs Fredholm");
  add_measure_options(toeplitz, c);
  add_output_options(toeplitz, c);
  toeplitz->add_option("--l-max", l_max);
  toeplitz->add_option("--enum-cap", enum_cap);
  toeplitz->add_option("--mc-samples", mc_samples, "Haar Monte Carlo samples per row (0 = off)");
  toeplitz->add_option("--seed", seed);

  long count = 1000;
  bool partitions = false;
  std::string sample_stat = "lambda1";
  std::optional<int> window_lo, window_hi;
  auto* samp = app.add_subcommand("sample", "exact samples of the measure");
  add_measure_options(samp, c);
  add_output_options(samp, c);
  samp->add_option("--count", count)->check(CLI::NonNegativeNumber);
  samp->add_option("--seed", seed);
  samp->add_option("--stat", sample_stat, "lambda1 | length | none")->check(CLI::IsMember({"lambda1", "length", "none"}));
  samp->add_flag("--partitions", partitions, "include the full partitions");
  samp->add_option("--window-lo", window_lo);
  samp->add_option("--window-hi", window_hi);

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", only, "run only these checks (four-way, scaling-disambiguation, criterion-<k>, ...)");
  verify->add_option("--kind", c.kind)->check(CLI::IsMember({"oe", "odd_even", "odd-even", "o", "odd"}));
  verify->add_option("--n", c.n);
  verify->add_option("--theta", c.theta);
  verify->add_option("--seed", seed);
  verify->add_option("-o,--output", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*params) return run_params(c);
    if (*gap) return run_gap(c, from, to, stat);
    if (*cdf) return run_cdf(c, s_from, s_to, step, stat);
    if (*dist) return run_dist_table(c, order, s_from, s_to, step);
    if (*shape) return run_limit_shape(c, grid_step, compare_theta);
    if (*toeplitz) return run_toeplitz_check(c, l_max, enum_cap, mc_samples, seed);
    if (*samp) return run_sample(c, count, seed, sample_stat, partitions, window_lo, window_hi);
    if (*verify) {
      if (!verify->count("--theta")) c.theta = "3/5";
      if (!verify->count("--n")) c.n = 2;
      return run_verify(c, only, seed);
    }
  } catch (const ms::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const ms::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ms::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
