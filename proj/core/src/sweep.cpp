#include "crsense/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "crsense/algorithms.hpp"
#include "crsense/throughput.hpp"
#include "fmt_compat.hpp"

namespace crsense {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string render(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Accumulator {
  double sum = 0.0, sumsq = 0.0;
  int n = 0;
  void add(double x) { sum += x; sumsq += x * x; ++n; }
  double mean() const { return n ? sum / n : 0.0; }
  double std() const {
    if (n < 2) return 0.0;
    const double var = (sumsq - sum * sum / n) / (n - 1);
    return var > 0.0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

SweepKind parse_sweep_kind(const std::string& name) {
  if (name == "vary-n") return SweepKind::vary_n;
  if (name == "vary-lmax") return SweepKind::vary_lmax;
  if (name == "vary-gamma-range") return SweepKind::vary_gamma;
  throw std::invalid_argument(
      "unknown sweep kind '" + name +
      "' (expected vary-n, vary-lmax, or vary-gamma-range)");
}

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::vary_n: return "vary-n";
    case SweepKind::vary_lmax: return "vary-lmax";
    case SweepKind::vary_gamma: return "vary-gamma-range";
  }
  return "?";
}

std::vector<double> default_grid(SweepKind kind) {
  switch (kind) {
    case SweepKind::vary_n: return {4, 8, 12, 16, 20};
    case SweepKind::vary_lmax: return {1, 2, 3, 4, 5};
    case SweepKind::vary_gamma: return {1, 2, 3, 4, 5};  // upper end of [1, u]
  }
  return {};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.runs < 1) throw std::invalid_argument("SweepSpec: runs must be >= 1");
  const std::vector<double> grid =
      spec.grid.empty() ? default_grid(spec.kind) : spec.grid;
  if (grid.empty()) throw std::invalid_argument("SweepSpec: empty grid");

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (size_t gp = 0; gp < grid.size(); ++gp) {
    GenConfig cfg = spec.base;
    switch (spec.kind) {
      case SweepKind::vary_n: cfg.n = static_cast<int>(grid[gp]); break;
      case SweepKind::vary_lmax: cfg.l_max = static_cast<int>(grid[gp]); break;
      case SweepKind::vary_gamma: cfg.gamma_max = grid[gp]; break;
    }
    validate(cfg);

    // gamma(k) and l_i are drawn once per grid point and fixed over all
    // runs.  The stream is shared across grid points, so rows differ only
    // through the swept parameter (one population of channels/SUs per
    // sweep, as in a single figure).
    std::mt19937_64 fixed_rng(splitmix64(spec.base_seed) ^
                              splitmix64(0xF1DED00Dull));
    std::vector<double> fixed_gamma(cfg.m);
    {
      std::uniform_real_distribution<double> g(cfg.gamma_min, cfg.gamma_max);
      for (double& v : fixed_gamma) v = g(fixed_rng);
    }
    std::vector<int> fixed_budgets(cfg.n);
    {
      std::uniform_int_distribution<int> b(1, cfg.l_max);
      for (int& v : fixed_budgets) v = b(fixed_rng);
    }

    Accumulator mwm, greedy, random_, ub, mu;
    for (int run = 0; run < spec.runs; ++run) {
      cfg.seed = spec.base_seed + static_cast<std::uint64_t>(run);
      const Scenario s = generate(cfg, fixed_gamma, fixed_budgets);

      mwm.add(mwm_assign(s).value);
      std::mt19937_64 grng(splitmix64(cfg.seed ^ 0x6EEDull) + gp);
      greedy.add(greedy_baseline(s, grng).value);
      std::mt19937_64 rrng(splitmix64(cfg.seed ^ 0x4A4Dull) + gp);
      random_.add(random_baseline(s, rrng).value);

      double bound = 0.0;
      for (const Channel& c : s.channels) bound += c.theta1 + c.theta2;
      ub.add(bound);
      mu.add(compute_mu(s).mu);
    }

    SweepRow row;
    row.swept_value = grid[gp];
    row.mwm_mean = mwm.mean();
    row.mwm_std = mwm.std();
    row.greedy_mean = greedy.mean();
    row.greedy_std = greedy.std();
    row.random_mean = random_.mean();
    row.random_std = random_.std();
    row.upper_bound = ub.mean();
    row.mu_mean = mu.mean();
    rows.push_back(row);
  }
  return rows;
}

std::string csv_string(const std::vector<SweepRow>& rows) {
  std::string out =
      "swept_value,mwm_mean,mwm_std,greedy_mean,greedy_std,"
      "random_mean,random_std,upper_bound,mu_mean\n";
  for (const SweepRow& r : rows) {
    out += render(r.swept_value);
    for (double v : {r.mwm_mean, r.mwm_std, r.greedy_mean, r.greedy_std,
                     r.random_mean, r.random_std, r.upper_bound, r.mu_mean}) {
      out += ',';
      out += render(v);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("write_csv: no rows");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << csv_string(rows);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

struct Series {
  const char* label;
  const char* color;
  std::vector<double> y;
};

}  // namespace

void write_svg(const std::vector<SweepRow>& rows, SweepKind kind,
               const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("write_svg: no rows");

  std::vector<Series> series = {
      {"MWM", "#1f77b4", {}},
      {"greedy", "#2ca02c", {}},
      {"random", "#d62728", {}},
      {"upper bound", "#7f7f7f", {}},
  };
  std::vector<double> xs;
  for (const SweepRow& r : rows) {
    xs.push_back(r.swept_value);
    series[0].y.push_back(r.mwm_mean);
    series[1].y.push_back(r.greedy_mean);
    series[2].y.push_back(r.random_mean);
    series[3].y.push_back(r.upper_bound);
  }
  double xmin = xs.front(), xmax = xs.back();
  if (xmax == xmin) xmax = xmin + 1.0;
  double ymin = 0.0, ymax = 0.0;
  for (const Series& s : series)
    for (double v : s.y) ymax = std::max(ymax, v);
  if (ymax == 0.0) ymax = 1.0;
  ymax *= 1.05;

  const double w = 640, h = 420, ml = 60, mr = 150, mt = 20, mb = 45;
  auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
  auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << py(ymin) << "\" x2=\"" << w - mr
      << "\" y2=\"" << py(ymin) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << py(ymin) << "\" x2=\"" << ml
      << "\" y2=\"" << mt << "\" stroke=\"black\"/>\n";
  for (double x : xs)
    out << "<text x=\"" << px(x) << "\" y=\"" << h - mb + 18
        << "\" text-anchor=\"middle\">" << x << "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = ymin + (ymax - ymin) * t / 4;
    char label[32];
    std::snprintf(label, sizeof(label), "%.1f", y);
    out << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  const char* xlabel = kind == SweepKind::vary_n     ? "N (number of SUs)"
                       : kind == SweepKind::vary_lmax ? "l_max"
                                                       : "gamma range upper end";
  out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 8
      << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
      << "\" transform=\"rotate(-90 16 " << (mt + h - mb) / 2
      << ")\" text-anchor=\"middle\">mean system throughput</text>\n";

  int li = 0;
  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i)
      out << px(xs[i]) << "," << py(s.y[i]) << " ";
    out << "\"/>\n";
    for (size_t i = 0; i < xs.size(); ++i)
      out << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(s.y[i])
          << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
    const double ly = mt + 16 + 18 * li++;
    out << "<line x1=\"" << w - mr + 10 << "\" y1=\"" << ly << "\" x2=\""
        << w - mr + 34 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << w - mr + 40 << "\" y=\"" << ly + 4 << "\">"
        << s.label << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit(const std::vector<SweepRow>& rows, SweepKind kind,
          const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  write_csv(rows, (dir / (to_string(kind) + ".csv")).string());
  write_svg(rows, kind, (dir / (to_string(kind) + ".svg")).string());
}

}  // namespace crsense
