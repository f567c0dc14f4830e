#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "table.hpp"
#include "wlab/decimation.hpp"
#include "wlab/energy.hpp"
#include "wlab/error.hpp"
#include "wlab/geometry.hpp"
#include "wlab/measure.hpp"
#include "wlab/params.hpp"
#include "wlab/reference.hpp"
#include "wlab/spectral.hpp"

namespace {

using namespace wlab;
using cli::Cell;
using cli::Table;

constexpr int kExitValidation = 2;
constexpr int kExitInternal = 1;

struct Options {
  double lambda = 0.5;
  int nb = 3;
  int level = 1;
  std::string mode = "paper";
  std::string scale = "paper";
  std::string format = "csv";
  int refine = 4;
  bool relaxed = false;

  // per-command
  int from_level = -1;
  int n_sub = 1;
  std::string measure_mode = "normalized";
  std::string quadrature = "average";
  std::vector<double> boundary;
  long long from_vertex = 0;
  long long to_vertex = -1;
  std::string method = "direct";
  std::string eigensolver = "tridiagonal";
  std::optional<double> parent;
  int epsilon = 0;
  bool report = false;
  std::string x = "max";
  bool overlay = false;
  int samples = 64;
  double ref_x = 0.25;
  double ref_y = 0.75;
  int ref_p = 10;
  bool interval = false;
  bool shrinking = false;
};

Cell i64(std::size_t v) { return static_cast<std::int64_t>(v); }
Cell i64(int v) { return static_cast<std::int64_t>(v); }

std::string word_text(const Word& w) {
  std::string s;
  for (int l : w.letters) s += std::to_string(l);
  return s;
}

Normalization normalization_of(const std::string& s) {
  return s == "conservative" ? Normalization::conservative : Normalization::paper;
}

Budget budget_from_env() {
  Budget b;
  if (const char* env = std::getenv("WLAB_MAX_LEVEL")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 12) {
      throw Error(Errc::invalid_argument, fmt::format("WLAB_MAX_LEVEL must be an integer in [1,12], got '{}'", env));
    }
    b.max_eigen_level = static_cast<int>(v);
  }
  return b;
}

void warn_if_rectifiable(const WeierstrassParams& p) {
  if (p.lambda * p.nb <= 1.0) {
    std::cerr << "warning: lambda*nb <= 1, the graph is rectifiable and the box-dimension "
                 "statements do not apply\n";
  }
}

Table cmd_params(const WeierstrassParams& p) {
  Table t{"params", {"lambda", "nb", "d_w", "eta", "lower_constant", "cover_constant", "strict"}, {}};
  t.add({p.lambda, i64(p.nb), p.d_w, p.eta, lower_bound_constant(p.lambda, p.nb), cover_constant(p),
         p.strict});
  return t;
}

Table cmd_vertices(const WeierstrassParams& p, const Options& o, const Budget& b) {
  warn_if_rectifiable(p);
  const LevelGraph g = vertex_chain(p, o.level, b);
  Table t{"vertices", {"index", "x", "y", "boundary"}, {}};
  for (std::size_t k = 0; k < g.size(); ++k) t.add({i64(k), g.vertices[k].x, g.vertices[k].y, g.is_boundary(k)});
  return t;
}

Table cmd_polygons(const WeierstrassParams& p, const Options& o, const Budget& b) {
  warn_if_rectifiable(p);
  Table t{"polygons", {"polygon", "word", "vertex", "chain_index", "x", "y"}, {}};
  for (const Polygon& poly : polygons(p, o.level, b)) {
    const std::string w = word_text(word_of_index(p.nb, o.level, poly.index));
    for (int k = 0; k < p.nb; ++k) {
      const Point2 v = poly.vertices[static_cast<std::size_t>(k)];
      t.add({i64(poly.index), w, i64(k), i64(polygon_vertex_index(p.nb, poly.index, k)), v.x, v.y});
    }
  }
  return t;
}

Table cmd_heights(const WeierstrassParams& p, const Options& o, const Budget& b) {
  warn_if_rectifiable(p);
  Table t{"heights", {"first", "second", "height", "sampled_extent", "lower_bound", "upper_bound"}, {}};
  for (const EdgeHeight& e : edge_heights(p, o.level, o.refine, b)) {
    t.add({i64(e.first), i64(e.second), e.height, e.sampled_extent, e.lower_bound, e.upper_bound});
  }
  return t;
}

Table cmd_boxdim(const WeierstrassParams& p, const Options& o, const Budget& b) {
  warn_if_rectifiable(p);
  const int first = o.from_level >= 0 ? o.from_level : std::min(2, o.level - 1);
  if (first < 0 || first >= o.level) throw Error(Errc::invalid_argument, "boxdim needs --from < --level");
  std::vector<BoxCount> counts;
  for (int m = first; m <= o.level; ++m) {
    counts.push_back(box_count(p, m, o.n_sub, o.refine, b));
    std::cerr << fmt::format("boxdim: level {} done ({} squares)\n", m, counts.back().squares);
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const BoxCount& c : counts) {
    xs.push_back(std::log(1.0 / c.side));
    ys.push_back(std::log(static_cast<double>(c.squares)));
  }
  const LineFit fit = least_squares(xs, ys);
  Table t{"boxdim", {"level", "n_sub", "side", "squares", "bound", "slope", "intercept"}, {}};
  for (const BoxCount& c : counts) {
    t.add({i64(c.level), i64(c.n_sub), c.side, i64(c.squares), c.bound, fit.slope, fit.intercept});
  }
  return t;
}

Table cmd_measure(const WeierstrassParams& p, const Options& o, const Budget& b) {
  const MeasureWeights w = measure_weights(p);
  const MeasureMode mode = o.measure_mode == "raw" ? MeasureMode::raw : MeasureMode::normalized;
  const auto cells = cell_measures(w, p.nb, o.level, mode);
  const auto polys = polygons(p, o.level, b);
  const double base = polygon_area(polygons(p, 0).front()).value;
  Table t{"measure", {"cell", "word", "measure", "area_ratio", "degenerate"}, {}};
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const PolygonArea a = polygon_area(polys[j]);
    t.add({i64(j), word_text(word_of_index(p.nb, o.level, j)), cells[j], a.value / base, a.degenerate});
  }
  return t;
}

std::vector<double> boundary_values(const WeierstrassParams& p, const Options& o) {
  if (o.boundary.empty()) {
    std::vector<double> v(static_cast<std::size_t>(p.nb), 0.0);
    v[0] = 1.0;
    return v;
  }
  if (o.boundary.size() != static_cast<std::size_t>(p.nb)) {
    throw Error(Errc::invalid_argument, fmt::format("--boundary needs {} values", p.nb));
  }
  return o.boundary;
}

Table cmd_energy(const WeierstrassParams& p, const Options& o) {
  const Normalization tag = normalization_of(o.mode);
  const auto boundary = boundary_values(p, o);
  Table t{"energy", {"level", "mode", "weight", "edge_sum", "energy", "ratio"}, {}};
  double prev = 0.0;
  for (int m = 0; m <= o.level; ++m) {
    const auto h = dirichlet_solve(p, m, boundary);
    const double e = energy(p, m, h, tag);
    t.add({i64(m), o.mode, energy_form(p, m, tag).weight, edge_sum(h), e,
           m == 0 ? Cell{} : Cell{e / prev}});
    prev = e;
  }
  return t;
}

Table cmd_harmonic(const WeierstrassParams& p, const Options& o, const Budget& b) {
  const Normalization tag = normalization_of(o.mode);
  const auto h = dirichlet_solve(p, o.level, boundary_values(p, o));
  const LevelGraph g = vertex_chain(p, o.level, b);
  Table t{"harmonic", {"index", "x", "value", "laplacian"}, {}};
  for (std::size_t k = 0; k < h.size(); ++k) {
    const bool edge = is_boundary_vertex(p.nb, o.level, k);
    t.add({i64(k), g.vertices[k].x, h[k],
           edge ? Cell{} : Cell{pointwise_laplacian(p, o.level, h, k, tag)}});
  }
  return t;
}

Table cmd_resistance(const WeierstrassParams& p, const Options& o) {
  const Normalization tag = normalization_of(o.mode);
  const std::size_t n = chain_vertex_count(p.nb, o.level);
  if (o.from_vertex < 0) throw Error(Errc::out_of_range, "--from must be >= 0");
  const auto from = static_cast<std::size_t>(o.from_vertex);
  const std::size_t to = o.to_vertex < 0 ? n - 1 : static_cast<std::size_t>(o.to_vertex);
  Table t{"resistance", {"level", "mode", "from", "to", "resistance", "series"}, {}};
  t.add({i64(o.level), o.mode, i64(from), i64(to), resistance(p, o.level, from, to, tag),
         series_resistance(p, o.level, from, to, tag)});
  return t;
}

Table cmd_dimension(const WeierstrassParams& p) {
  const ResistanceDimension r = resistance_dimension(p);
  Table t{"dimension", {"lambda", "nb", "regime", "d_w", "dimension", "weyl_exponent"}, {}};
  t.add({p.lambda, i64(p.nb),
         std::string(r.regime == ResistanceDimension::Regime::above_threshold ? "above" : "below"), p.d_w,
         r.dimension, r.weyl_exponent});
  return t;
}

Table cmd_spectrum(const WeierstrassParams& p, const Options& o, const Budget& b) {
  Table t{"spectrum", {"value", "multiplicity", "provenance"}, {}};
  if (o.method == "decimation") {
    // Decimation determines values, not multiplicities.
    const DecimationTree tree = decimation_tree(p, o.level, b);
    std::vector<std::pair<double, bool>> rows;
    for (const DecimationNode& n : tree.nodes) {
      if (n.level == o.level) rows.emplace_back(n.value, n.newborn);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [v, newborn] : rows) t.add({v, Cell{}, std::string(newborn ? "newborn" : "decimation")});
    return t;
  }
  Spectrum s;
  if (o.method == "oracle") {
    s = oracle_spectrum(p, o.level);
  } else {
    s = direct_spectrum(p, o.level, b, o.eigensolver == "dense" ? EigenMethod::dense
                                                                : EigenMethod::tridiagonal_blocks);
  }
  const std::string tag = o.method == "oracle" ? "oracle" : "direct";
  for (const SpectrumEntry& e : s.entries) t.add({e.value, i64(e.multiplicity), tag});
  return t;
}

Table cmd_decimate(const WeierstrassParams& p, const Options& o, const Budget& b) {
  if (o.report) {
    const DecimationTree tree = decimation_tree(p, o.level, b);
    Table t{"decimate", {"level", "kind", "value", "label", "quoted", "observed"}, {}};
    for (const LevelReconciliation& r : tree.levels) {
      for (double v : r.continued) t.add({i64(r.level), std::string("continued"), v, Cell{}, Cell{}, Cell{}});
      for (double v : r.newborn) t.add({i64(r.level), std::string("newborn"), v, Cell{}, Cell{}, Cell{}});
      for (double v : r.spurious) t.add({i64(r.level), std::string("spurious"), v, Cell{}, Cell{}, Cell{}});
      for (const QuotedMultiplicity& q : r.quoted) {
        t.add({i64(r.level), std::string("quoted"), q.value, q.label, i64(q.quoted), i64(q.observed)});
      }
      if (r.checked) {
        t.add({i64(r.level), std::string("total"), Cell{}, std::string("direct"), Cell{}, i64(r.direct_total)});
        if (r.quoted_total > 0) {
          t.add({i64(r.level), std::string("total"), Cell{}, std::string("quoted"), i64(r.quoted_total), Cell{}});
        }
      }
    }
    return t;
  }
  if (!o.parent) throw Error(Errc::invalid_argument, "decimate needs --parent or --report");
  Table t{"decimate", {"parent", "epsilon", "root", "value", "imag", "real", "parent_check"}, {}};
  std::vector<int> signs = o.epsilon == 0 ? std::vector<int>{1, -1} : std::vector<int>{o.epsilon};
  for (int eps : signs) {
    const DecimationStep step = decimate_step(p, *o.parent, eps);
    if (step.forbidden_parent) std::cerr << "warning: parent 2 is a forbidden value\n";
    for (const DecimationChild& c : step.children) {
      t.add({*o.parent, i64(eps), i64(c.root_index), c.value, c.exact.imag(), c.real,
             c.real ? Cell{c.parent_check} : Cell{}});
    }
  }
  return t;
}

Table cmd_counting(const WeierstrassParams& p, const Options& o, const Budget& b) {
  const CountingScale scale = o.scale == "none" ? CountingScale::none : CountingScale::paper;
  const double factor = counting_factor(p, o.level, scale);
  double x = 0.0;
  if (o.x == "max") {
    x = 4.0 * factor;
  } else {
    std::size_t used = 0;
    try {
      x = std::stod(o.x, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.x.size() || !std::isfinite(x)) {
      throw Error(Errc::invalid_argument, "--x must be a number or 'max'");
    }
  }
  Table t{"counting", {"level", "scale", "factor", "x", "count"}, {}};
  t.add({i64(o.level), o.scale, factor, x, i64(counting_function(p, o.level, x, scale, b))});
  return t;
}

Table cmd_weyl(const WeierstrassParams& p, const Options& o, const Budget& b) {
  const int first = o.from_level >= 1 ? o.from_level : 1;
  const WeylAnalysis w = weyl_analysis(p, first, o.level, o.samples, b);
  if (o.overlay) {
    Table t{"weyl", {"x", "coarse", "fine", "relative_difference"}, {}};
    for (const WeylOverlay& r : w.overlay) t.add({r.x, r.coarse, r.fine, r.relative_difference});
    return t;
  }
  Table t{"weyl", {"level", "total", "log_count_per_level", "log_increment"}, {}};
  for (const WeylRow& r : w.rows) {
    t.add({i64(r.level), i64(r.total), r.log_count_per_level,
           r.level == first ? Cell{} : Cell{r.log_increment}});
  }
  return t;
}

Table cmd_reference(const Options& o) {
  if (o.interval) {
    Table t{"reference", {"p", "energy", "error"}, {}};
    const auto weight = o.shrinking ? IntervalWeight::shrinking : IntervalWeight::growing;
    for (const IntervalEnergyRow& r : interval_energy_table(o.ref_x, o.ref_y, o.ref_p, weight)) {
      t.add({i64(r.p), r.energy, r.error});
    }
    return t;
  }
  const GasketConstants g = gasket_constants();
  Table t{"reference", {"name", "value"}, {}};
  t.add({std::string("r_sg"), g.r_sg});
  t.add({std::string("beta_sg"), g.beta_sg});
  t.add({std::string("d_sg"), g.d_sg});
  t.add({std::string("half_pow_beta_sg"), std::pow(0.5, g.beta_sg)});
  t.add({std::string("d_sg_times_beta_sg"), g.d_sg * g.beta_sg});
  t.add({std::string("interval_resistance"), interval_resistance(o.ref_x, o.ref_y)});
  return t;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--lambda", o.lambda, "Weierstrass parameter in (0,1)");
  sub->add_option("--nb", o.nb, "integer base N_b >= 2");
  sub->add_option("--level", o.level, "level m")->check(CLI::NonNegativeNumber);
  sub->add_option("--mode", o.mode, "energy normalization")->check(CLI::IsMember({"paper", "conservative"}));
  sub->add_option("--scale", o.scale, "counting scale")->check(CLI::IsMember({"none", "paper"}));
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--refine", o.refine, "extra sampling levels")->check(CLI::Range(0, 8));
  sub->add_flag("--relaxed", o.relaxed, "allow lambda*nb <= 1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wlab: graph approximations, energies and spectra of the Weierstrass function"};
  app.require_subcommand(1, 1);
  Options o;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o);
    return s;
  };
  sub("params", "derived constants");
  sub("vertices", "level-m vertex chain");
  sub("polygons", "level-m polygons");
  sub("heights", "edge heights against their bounds");
  auto* boxdim = sub("boxdim", "box counts and log-log slope over --from..--level");
  boxdim->add_option("--from", o.from_level, "first level");
  boxdim->add_option("--nsub", o.n_sub, "squares per column width")->check(CLI::PositiveNumber);
  auto* measure = sub("measure", "cell measures");
  measure->add_option("--measure", o.measure_mode)->check(CLI::IsMember({"raw", "normalized"}));
  auto* energy_cmd = sub("energy", "energy of the harmonic function per level");
  energy_cmd->add_option("--boundary", o.boundary, "values on the fixed points")->delimiter(',');
  auto* harmonic = sub("harmonic", "harmonic function and pointwise Laplacian");
  harmonic->add_option("--boundary", o.boundary, "values on the fixed points")->delimiter(',');
  auto* res = sub("resistance", "effective resistance between chain positions");
  res->add_option("--from", o.from_vertex, "chain position");
  res->add_option("--to", o.to_vertex, "chain position (default: last)");
  sub("dimension", "resistance dimension");
  auto* spectrum = sub("spectrum", "Dirichlet spectrum");
  spectrum->add_option("--method", o.method)->check(CLI::IsMember({"direct", "oracle", "decimation"}));
  spectrum->add_option("--eigensolver", o.eigensolver)->check(CLI::IsMember({"tridiagonal", "dense"}));
  auto* decimate = sub("decimate", "children of one eigenvalue, or the reconciliation report");
  decimate->add_option("--parent", o.parent, "parent eigenvalue in [0,4]");
  decimate->add_option("--epsilon", o.epsilon, "branch sign (default both)")->check(CLI::IsMember({-1, 1}));
  decimate->add_flag("--report", o.report, "reconcile levels 1..--level against the direct spectrum");
  auto* counting = sub("counting", "eigenvalue counting function");
  counting->add_option("--x", o.x, "threshold or 'max'");
  auto* weyl = sub("weyl", "growth of the counting function");
  weyl->add_option("--from", o.from_level, "first level");
  weyl->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  weyl->add_flag("--overlay", o.overlay, "compare the last two levels over the top decade");
  auto* reference = sub("reference", "Sierpinski gasket and unit interval anchors");
  reference->add_option("--x", o.ref_x);
  reference->add_option("--y", o.ref_y);
  reference->add_option("--p", o.ref_p, "last dyadic level");
  reference->add_flag("--interval", o.interval, "dyadic energy table on [x,y]");
  reference->add_flag("--shrinking", o.shrinking, "use the 2^-p level weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const Budget budget = budget_from_env();
    const WeierstrassParams p = name == "reference" ? WeierstrassParams{} : make_params(o.lambda, o.nb, !o.relaxed);
    Table t;
    if (name == "params") t = cmd_params(p);
    else if (name == "vertices") t = cmd_vertices(p, o, budget);
    else if (name == "polygons") t = cmd_polygons(p, o, budget);
    else if (name == "heights") t = cmd_heights(p, o, budget);
    else if (name == "boxdim") t = cmd_boxdim(p, o, budget);
    else if (name == "measure") t = cmd_measure(p, o, budget);
    else if (name == "energy") t = cmd_energy(p, o);
    else if (name == "harmonic") t = cmd_harmonic(p, o, budget);
    else if (name == "resistance") t = cmd_resistance(p, o);
    else if (name == "dimension") t = cmd_dimension(p);
    else if (name == "spectrum") t = cmd_spectrum(p, o, budget);
    else if (name == "decimate") t = cmd_decimate(p, o, budget);
    else if (name == "counting") t = cmd_counting(p, o, budget);
    else if (name == "weyl") t = cmd_weyl(p, o, budget);
    else t = cmd_reference(o);

    std::ostringstream buffer;
    cli::write(buffer, t, o.format == "json" ? cli::Format::json : cli::Format::csv);
    std::cout << buffer.str() << std::flush;
    return 0;
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return e.code() == Errc::internal ? kExitInternal : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << '\n';
    return kExitInternal;
  }
}
