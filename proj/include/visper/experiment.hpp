// Scaling experiments: named strategies, experiment records, CSV/JSON
// output and log-log exponent fits.
#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "visper/generators.hpp"
#include "visper/io.hpp"
#include "visper/orders.hpp"
#include "visper/visibility.hpp"

namespace visper {

struct StrategyOptions {
  double C = 2.0;
  double Cstar = 1.0;
  std::size_t retries = 8;
  double overlap_bound = 0.0;
  SubStrategy sub = SubStrategy::Auto;
};

inline const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names{"greedy", "lexicographic", "monotone", "sector",   "cell",
                                              "identity", "random",       "canonical", "spiral", "ray",
                                              "optimal"};
  return names;
}

inline std::string valid_strategies() {
  std::string s;
  for (const auto& name : strategy_names()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

inline Metric parse_metric(const std::string& name) {
  if (name == "exact") return Metric::Exact;
  if (name == "limit") return Metric::Limit;
  throw std::invalid_argument("unknown metric '" + name + "' (valid: exact, limit)");
}

inline std::string metric_name(Metric m) { return m == Metric::Exact ? "exact" : "limit"; }

/// Runs a named strategy. Family-defined orders (canonical, spiral, ray) are
/// looked up in `inst`; `optimal` brute-forces the limit metric.
inline OrderResult run_strategy(const std::string& name, const GeneratedInstance& inst, std::uint64_t seed,
                                const StrategyOptions& opt = {}) {
  const PointSet& ps = inst.points;
  if (name == "greedy") return greedy_order(ps);
  if (name == "lexicographic") return {lexicographic_order(ps), {"lexicographic", {}, {}}};
  if (name == "monotone") return monotone_order(ps);
  if (name == "sector") {
    double C = opt.C;
    if (ps.size() >= 2) C = std::max(C, spread(ps) / std::sqrt(double(ps.size())));
    return sector_order(ps, {C, opt.Cstar, seed, opt.retries});
  }
  if (name == "cell") return cell_partition_order(ps, {opt.overlap_bound, opt.sub, seed, 64});
  if (name == "identity") return {StackingOrder::identity(ps.size()), {"identity", {}, {}}};
  if (name == "random") return {random_order(ps.size(), seed), {"random", {}, {}}};
  if (name == "optimal") return {optimal_order_bruteforce(ps, Metric::Limit).first, {"optimal", {}, {}}};
  if (name == "canonical" || name == "spiral" || name == "ray") {
    auto it = inst.orders.find(name);
    if (it == inst.orders.end()) {
      throw std::invalid_argument("strategy '" + name + "' is not defined for this generator family");
    }
    return {it->second, {name, {}, {}}};
  }
  throw std::invalid_argument("unknown strategy '" + name + "' (valid: " + valid_strategies() + ")");
}

struct ExperimentRecord {
  std::string generator;
  std::size_t n = 0;
  std::string strategy;
  std::string metric;
  double value = 0.0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
  /// Strategy diagnostics (e.g. selected sector count).
  std::map<std::string, double> counts;
};

/// One record per (n, seed), in input order. `family` supplies the family
/// name and fixed parameters; `n` is set per run.
inline std::vector<ExperimentRecord> run_scaling_experiment(const GeneratorSpec& family,
                                                            const std::vector<std::size_t>& ns,
                                                            const std::string& strategy, Metric metric,
                                                            const std::vector<std::uint64_t>& seeds,
                                                            const StrategyOptions& opt = {}) {
  bool known_family = false;
  for (const auto& f : generator_families()) known_family = known_family || f == family.family;
  if (!known_family) generate(family);  // throws with the list of valid families
  bool known_strategy = false;
  for (const auto& s : strategy_names()) known_strategy = known_strategy || s == strategy;
  if (!known_strategy) {
    throw std::invalid_argument("unknown strategy '" + strategy + "' (valid: " + valid_strategies() + ")");
  }

  std::vector<ExperimentRecord> records;
  for (std::size_t n : ns) {
    for (std::uint64_t seed : seeds) {
      GeneratorSpec spec = family;
      spec.params.erase("k");
      spec.params["n"] = double(n);
      const auto start = std::chrono::steady_clock::now();
      const GeneratedInstance inst = generate(spec, seed);
      const OrderResult res = run_strategy(strategy, inst, seed, opt);
      const double value = evaluate(inst.points, res.order, metric);
      const auto stop = std::chrono::steady_clock::now();
      records.push_back({spec.to_string(), inst.points.size(), strategy, metric_name(metric), value, seed,
                         std::chrono::duration<double, std::milli>(stop - start).count(),
                         res.diagnostics.counts});
    }
  }
  return records;
}

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
};

/// Least squares fit of log(value) = intercept + slope * log(n).
inline ExponentFit fit_exponent(const std::vector<std::size_t>& ns, const std::vector<double>& values) {
  if (ns.size() != values.size()) throw std::invalid_argument("fit_exponent: size mismatch");
  std::vector<std::size_t> distinct(ns);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) throw std::invalid_argument("fit_exponent: need at least 3 distinct n");
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    if (ns[k] == 0 || !(values[k] > 0.0)) throw std::invalid_argument("fit_exponent: n and values must be positive");
    mx += std::log(double(ns[k]));
    my += std::log(values[k]);
  }
  const double count = double(ns.size());
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double dx = std::log(double(ns[k])) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(values[k]) - my);
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double r = std::log(values[k]) - (fit.intercept + fit.slope * std::log(double(ns[k])));
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / count);
  fit.n_min = distinct.front();
  fit.n_max = distinct.back();
  return fit;
}

inline ExponentFit fit_exponent(const std::vector<ExperimentRecord>& records) {
  std::vector<std::size_t> ns;
  std::vector<double> values;
  for (const auto& r : records) {
    ns.push_back(r.n);
    values.push_back(r.value);
  }
  return fit_exponent(ns, values);
}

// CSV columns; wall time is optional so identical runs give identical bytes.
inline void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records,
                              bool with_timing = false) {
  out << "generator,n,strategy,metric,value,seed" << (with_timing ? ",wall_ms" : "") << '\n';
  for (const auto& r : records) {
    out << '"' << r.generator << "\"," << r.n << ',' << r.strategy << ',' << r.metric << ','
        << format_double(r.value) << ',' << r.seed;
    if (with_timing) out << ',' << format_double(r.wall_ms);
    out << '\n';
  }
}

inline nlohmann::json record_to_json(const ExperimentRecord& r, bool with_timing = false) {
  nlohmann::json j{{"generator", r.generator}, {"n", r.n},       {"strategy", r.strategy},
                   {"metric", r.metric},       {"value", r.value}, {"seed", r.seed}};
  if (!r.counts.empty()) j["counts"] = r.counts;
  if (with_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline void write_records_json(std::ostream& out, const std::vector<ExperimentRecord>& records,
                               bool with_timing = false) {
  for (const auto& r : records) out << record_to_json(r, with_timing).dump() << '\n';
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace detail

/// Reads records written by write_records_csv or write_records_json; the
/// format is detected from the first character.
inline std::vector<ExperimentRecord> read_records(std::istream& in) {
  std::vector<ExperimentRecord> records;
  std::string line;
  if (!detail::next_data_line(in, line)) return records;
  if (line.front() == '{') {
    do {
      const auto j = nlohmann::json::parse(line);
      ExperimentRecord r;
      r.generator = j.at("generator").get<std::string>();
      r.n = j.at("n").get<std::size_t>();
      r.strategy = j.at("strategy").get<std::string>();
      r.metric = j.at("metric").get<std::string>();
      r.value = j.at("value").get<double>();
      r.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("wall_ms")) r.wall_ms = j["wall_ms"].get<double>();
      if (j.contains("counts")) r.counts = j["counts"].get<std::map<std::string, double>>();
      records.push_back(std::move(r));
    } while (detail::next_data_line(in, line));
    return records;
  }
  const auto header = detail::split_csv_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t k = 0; k < header.size(); ++k) col[header[k]] = k;
  for (const char* required : {"generator", "n", "strategy", "metric", "value", "seed"}) {
    if (!col.count(required)) throw std::invalid_argument(std::string("records: missing column ") + required);
  }
  while (detail::next_data_line(in, line)) {
    const auto f = detail::split_csv_line(line);
    if (f.size() != header.size()) throw std::invalid_argument("records: malformed line '" + line + "'");
    ExperimentRecord r;
    r.generator = f[col["generator"]];
    r.n = std::stoull(f[col["n"]]);
    r.strategy = f[col["strategy"]];
    r.metric = f[col["metric"]];
    r.value = parse_double(f[col["value"]]);
    r.seed = std::stoull(f[col["seed"]]);
    if (col.count("wall_ms")) r.wall_ms = parse_double(f[col["wall_ms"]]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace visper
