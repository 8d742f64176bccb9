// Command-line front end: generate instances, build orders, evaluate visible
// perimeters, run scaling experiments and render arrangements.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "visper/visper.hpp"

using nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

visper::SubStrategy parse_sub(const std::string& s) {
  if (s == "auto") return visper::SubStrategy::Auto;
  if (s == "brute") return visper::SubStrategy::BruteForce;
  if (s == "greedy") return visper::SubStrategy::Greedy;
  throw std::invalid_argument("unknown sub-strategy '" + s + "' (valid: auto, brute, greedy)");
}

json diagnostics_json(const visper::OrderDiagnostics& d) {
  return {{"strategy", d.strategy}, {"params", d.params}, {"counts", d.counts}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"visper: visible perimeter of stacked unit disks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out, "Output path (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.fallthrough();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a point set");
  std::string family;
  double k = 0, n = 0, b = 0, C = 2.0;
  std::string order_out, order_name;
  gen->add_option("family", family, "grid | concentric | spiral | random_dense")->required();
  gen->add_option("--k", k, "Side length (grid, concentric)");
  gen->add_option("--n", n, "Number of points");
  gen->add_option("--b", b, "Spiral growth rate (default 1e-3/sqrt(n))");
  gen->add_option("--C", C, "Density constant (random_dense)")->capture_default_str();
  gen->add_option("--order-out", order_out, "Also write the family's order here");
  gen->add_option("--order-name", order_name, "canonical | spiral | ray");

  // order
  auto* order = app.add_subcommand("order", "Compute a stacking order");
  std::string strategy, points_path;
  double cstar = 1.0, overlap = 0.0;
  std::size_t retries = 8;
  std::string sub = "auto";
  bool show_diag = false;
  order->add_option("strategy", strategy, visper::valid_strategies())->required();
  order->add_option("--points", points_path, "Point file")->required();
  order->add_option("--C", C, "Density constant (sector)");
  order->add_option("--cstar", cstar, "Sector angle constant (sector)")->capture_default_str();
  order->add_option("--retries", retries, "Random draws (sector)")->capture_default_str();
  order->add_option("--overlap", overlap, "Overlap bound c (cell)");
  order->add_option("--sub", sub, "Per-cell strategy: auto | brute | greedy (cell)")->capture_default_str();
  order->add_flag("--diagnostics", show_diag, "Print strategy diagnostics as JSON on stderr");

  // vis / limit / probe / render share --points/--order
  std::string order_path;
  bool per_disk = false, trace = false, arcs = false;
  std::vector<double> eps;
  auto* vis = app.add_subcommand("vis", "Exact visible perimeter");
  vis->add_option("--points", points_path)->required();
  vis->add_option("--order", order_path)->required();
  vis->add_flag("--per-disk", per_disk, "Report each disk's visible arc measure");
  auto* limit = app.add_subcommand("limit", "Limit visible perimeter (sum of external angles)");
  limit->add_option("--points", points_path)->required();
  limit->add_option("--order", order_path)->required();
  limit->add_flag("--trace", trace, "Report tau, hull perimeter and perimeter-gap bound per rank");
  auto* probe = app.add_subcommand("probe", "Exact visible perimeter along a contraction schedule");
  probe->add_option("--points", points_path)->required();
  probe->add_option("--order", order_path)->required();
  probe->add_option("--eps", eps, "Strictly decreasing scale factors")->required()->delimiter(',');
  auto* render = app.add_subcommand("render", "Render the arrangement as SVG");
  render->add_option("--points", points_path)->required();
  render->add_option("--order", order_path)->required();
  render->add_flag("--arcs", arcs, "Overlay visible arcs");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a scaling experiment");
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> seeds;
  std::string metric = "limit";
  bool timing = false;
  experiment->add_option("--family", family)->required();
  experiment->add_option("--n", ns, "Instance sizes")->required()->delimiter(',');
  experiment->add_option("--strategy", strategy)->required();
  experiment->add_option("--metric", metric)->check(CLI::IsMember({"exact", "limit"}))->capture_default_str();
  experiment->add_option("--seeds", seeds, "Seeds (default: --seed)")->delimiter(',');
  experiment->add_option("--C", C, "Density constant")->capture_default_str();
  experiment->add_option("--b", b, "Spiral growth rate");
  experiment->add_option("--cstar", cstar)->capture_default_str();
  experiment->add_flag("--timing", timing, "Include wall time (output no longer byte-reproducible)");

  // fit
  auto* fit = app.add_subcommand("fit", "Fit log(value) ~ slope * log(n)");
  std::string in_path;
  fit->add_option("--in", in_path, "Experiment records (CSV or JSON lines)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Output output(g.out);
    std::ostream& out = output.stream();
    const bool as_json = g.format == "json";

    if (*gen) {
      visper::GeneratorSpec spec{family, {}};
      if (k > 0) spec.params["k"] = k;
      if (n > 0) spec.params["n"] = n;
      if (b > 0) spec.params["b"] = b;
      if (family == "random_dense") spec.params["C"] = C;
      const auto inst = visper::generate(spec, g.seed);
      visper::write_points(out, inst.points);
      if (!order_out.empty()) {
        if (inst.orders.empty()) throw std::invalid_argument("family '" + family + "' defines no order");
        const std::string name = order_name.empty() ? inst.orders.begin()->first : order_name;
        auto it = inst.orders.find(name);
        if (it == inst.orders.end()) throw std::invalid_argument("family '" + family + "' has no order '" + name + "'");
        std::ofstream of(order_out);
        if (!of) throw std::runtime_error("cannot open " + order_out);
        visper::write_order(of, it->second);
      }
    } else if (*order) {
      visper::GeneratedInstance inst{visper::load_points(points_path), {}};
      visper::StrategyOptions opt;
      opt.C = C;
      opt.Cstar = cstar;
      opt.retries = retries;
      opt.overlap_bound = overlap;
      opt.sub = parse_sub(sub);
      const auto res = visper::run_strategy(strategy, inst, g.seed, opt);
      visper::write_order(out, res.order);
      if (show_diag) std::cerr << diagnostics_json(res.diagnostics).dump() << '\n';
    } else if (*vis) {
      const auto ps = visper::load_points(points_path);
      const auto report = visper::visible_perimeter(ps, visper::load_order(order_path));
      if (as_json) {
        json j{{"total", report.total}};
        if (per_disk) j["per_disk"] = report.per_disk;
        out << j.dump() << '\n';
      } else if (per_disk) {
        out << "disk,visible\n";
        for (std::size_t i = 0; i < report.per_disk.size(); ++i) {
          out << i << ',' << visper::format_double(report.per_disk[i]) << '\n';
        }
      } else {
        out << "total\n" << visper::format_double(report.total) << '\n';
      }
    } else if (*limit) {
      const auto ps = visper::load_points(points_path);
      const auto f = visper::load_order(order_path);
      const auto res = visper::limit_visible_perimeter(ps, f);
      if (trace) {
        const auto gaps = visper::perimeter_gap_trace(res.trace, ps.size() >= 2 ? ps.min_dist() : 1.0);
        if (as_json) {
          out << json{{"total", res.total}, {"tau", res.trace.taus}, {"per", res.trace.per}}.dump() << '\n';
        } else {
          out << "rank,disk,tau,per,gap,bound\n";
          for (std::size_t r = 0; r < res.trace.taus.size(); ++r) {
            out << r + 1 << ',' << f.at_rank(r + 1) << ',' << visper::format_double(res.trace.taus[r]) << ','
                << visper::format_double(res.trace.per[r]);
            if (r > 0) {
              out << ',' << visper::format_double(gaps[r - 1].gap) << ',' << visper::format_double(gaps[r - 1].bound);
            } else {
              out << ",,";
            }
            out << '\n';
          }
        }
      } else if (as_json) {
        out << json{{"total", res.total}}.dump() << '\n';
      } else {
        out << "total\n" << visper::format_double(res.total) << '\n';
      }
    } else if (*probe) {
      const auto ps = visper::load_points(points_path);
      const auto rows = visper::limit_probe(ps, visper::load_order(order_path), eps);
      if (!as_json) out << "eps,vis\n";
      for (const auto& [e, v] : rows) {
        if (as_json) {
          out << json{{"eps", e}, {"vis", v}}.dump() << '\n';
        } else {
          out << visper::format_double(e) << ',' << visper::format_double(v) << '\n';
        }
      }
    } else if (*render) {
      if (g.out.empty()) throw std::invalid_argument("render requires --out");
      const auto ps = visper::load_points(points_path);
      visper::SvgOptions opt;
      opt.overlay_arcs = arcs;
      out << visper::render_svg_document(ps, visper::load_order(order_path), opt).text;
    } else if (*experiment) {
      visper::GeneratorSpec spec{family, {}};
      if (family == "random_dense") spec.params["C"] = C;
      if (b > 0) spec.params["b"] = b;
      if (seeds.empty()) seeds.push_back(g.seed);
      visper::StrategyOptions opt;
      opt.C = C;
      opt.Cstar = cstar;
      const auto records =
          visper::run_scaling_experiment(spec, ns, strategy, visper::parse_metric(metric), seeds, opt);
      if (as_json) {
        visper::write_records_json(out, records, timing);
      } else {
        visper::write_records_csv(out, records, timing);
      }
    } else if (*fit) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot open " + in_path);
      const auto f = visper::fit_exponent(visper::read_records(in));
      if (as_json) {
        out << json{{"slope", f.slope}, {"intercept", f.intercept}, {"residual_rms", f.residual_rms},
                    {"n_min", f.n_min}, {"n_max", f.n_max}}
                   .dump()
            << '\n';
      } else {
        out << "slope,intercept,residual_rms,n_min,n_max\n"
            << visper::format_double(f.slope) << ',' << visper::format_double(f.intercept) << ','
            << visper::format_double(f.residual_rms) << ',' << f.n_min << ',' << f.n_max << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
