#include "sfqm/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "sfqm/detail/parallel.hpp"
#include "sfqm/errors.hpp"
#include "sfqm/hartman.hpp"
#include "sfqm/tunnel_time.hpp"
#include "sfqm/version.hpp"

namespace sfqm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct KindInfo {
  const char* name;
  std::vector<const char*> axes;
  std::vector<const char*> required;
  std::vector<const char*> optional;
  std::vector<const char*> columns;
};

const KindInfo& kind_info(SweepKind kind) {
  static const KindInfo table[] = {
      {"gamma_vs_d", {"d"}, {"E", "Vr", "Vi", "alpha"}, {}, {"d", "gamma"}},
      {"gamma_vs_Vi", {"Vi"}, {"E", "Vr", "alpha", "d"}, {}, {"Vi", "gamma"}},
      {"contour_alpha_d",
       {"alpha", "d"},
       {"E", "Vr", "Vi"},
       {},
       {"alpha", "d", "gamma"}},
      {"contour_Vi_d",
       {"Vi", "d"},
       {"E", "Vr", "alpha"},
       {},
       {"Vi", "d", "gamma"}},
      {"slope_vs_alpha",
       {"alpha"},
       {"E", "Vr", "Vi"},
       {},
       {"alpha", "slope", "intercept"}},
      {"alphaH_vs_Vi",
       {"Vi"},
       {"E", "Vr"},
       {"bracket_lo", "bracket_hi", "tol"},
       {"Vi", "alpha_H", "slope_at_root"}},
  };
  return table[static_cast<int>(kind)];
}

std::string fmt(double v, const char* spec = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double axis_value(const Axis& ax, int i) {
  if (i == ax.steps - 1) return ax.max;
  return ax.min + static_cast<double>(i) * (ax.max - ax.min) / (ax.steps - 1);
}

double fixed_or(const SweepRequest& request, const std::string& key,
                double fallback) {
  auto it = request.fixed.find(key);
  return it == request.fixed.end() ? fallback : it->second;
}

void validate_request(const SweepRequest& request) {
  const KindInfo& info = kind_info(request.kind);
  if (request.axes.size() != info.axes.size()) {
    throw domain_error(std::string(info.name) + " needs " +
                       std::to_string(info.axes.size()) + " axis spec(s), got " +
                       std::to_string(request.axes.size()));
  }
  for (std::size_t i = 0; i < info.axes.size(); ++i) {
    const Axis& ax = request.axes[i];
    if (ax.name != info.axes[i]) {
      throw domain_error(std::string(info.name) + ": axis " +
                         std::to_string(i + 1) + " must be '" + info.axes[i] +
                         "', got '" + ax.name + "'");
    }
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max) || ax.min >= ax.max) {
      throw domain_error("axis '" + ax.name + "' needs min < max, both finite");
    }
    if (ax.steps < 2) {
      throw domain_error("axis '" + ax.name + "' needs at least 2 steps");
    }
  }
  for (const char* key : info.required) {
    if (!request.fixed.count(key)) {
      throw domain_error(std::string(info.name) + ": missing fixed parameter '" +
                         key + "'");
    }
  }
  for (const auto& [key, value] : request.fixed) {
    if (!std::isfinite(value)) {
      throw domain_error("fixed parameter '" + key + "' must be finite");
    }
    bool known = false;
    for (const char* k : info.required) known = known || key == k;
    for (const char* k : info.optional) known = known || key == k;
    for (const char* k : info.axes) {
      if (key == k) {
        throw domain_error("'" + key + "' is an axis of " + info.name +
                           " and cannot be fixed");
      }
    }
    if (!known) {
      throw domain_error(std::string(info.name) + ": unknown fixed parameter '" +
                         key + "'");
    }
  }
}

}  // namespace

SweepKind parse_sweep_kind(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(SweepKind::alphaH_vs_Vi); ++k) {
    if (name == kind_info(static_cast<SweepKind>(k)).name) {
      return static_cast<SweepKind>(k);
    }
  }
  throw domain_error("unknown sweep kind '" + std::string(name) + "'");
}

std::string sweep_kind_name(SweepKind kind) { return kind_info(kind).name; }

Dataset run_sweep(const SweepRequest& request, const UnitSystem& units,
                  int jobs) {
  units.validate();
  validate_request(request);
  const KindInfo& info = kind_info(request.kind);

  // Point evaluator: fills the value cells for one grid point. Regime and
  // domain violations at individual points flag the row instead of aborting.
  std::function<void(DataRow&, double, double)> eval;
  switch (request.kind) {
    case SweepKind::gamma_vs_d: {
      double E = request.fixed.at("E");
      double Vr = request.fixed.at("Vr");
      double Vi = request.fixed.at("Vi");
      double alpha = request.fixed.at("alpha");
      eval = [=](DataRow& row, double d, double) {
        row.values = {d, tunneling_time_closed(E, {Vr, Vi, d}, alpha, units).gamma};
      };
      break;
    }
    case SweepKind::gamma_vs_Vi: {
      double E = request.fixed.at("E");
      double Vr = request.fixed.at("Vr");
      double alpha = request.fixed.at("alpha");
      double d = request.fixed.at("d");
      eval = [=](DataRow& row, double Vi, double) {
        row.values = {Vi,
                      tunneling_time_closed(E, {Vr, Vi, d}, alpha, units).gamma};
      };
      break;
    }
    case SweepKind::contour_alpha_d: {
      double E = request.fixed.at("E");
      double Vr = request.fixed.at("Vr");
      double Vi = request.fixed.at("Vi");
      eval = [=](DataRow& row, double alpha, double d) {
        row.values = {alpha, d,
                      tunneling_time_closed(E, {Vr, Vi, d}, alpha, units).gamma};
      };
      break;
    }
    case SweepKind::contour_Vi_d: {
      double E = request.fixed.at("E");
      double Vr = request.fixed.at("Vr");
      double alpha = request.fixed.at("alpha");
      eval = [=](DataRow& row, double Vi, double d) {
        row.values = {Vi, d,
                      tunneling_time_closed(E, {Vr, Vi, d}, alpha, units).gamma};
      };
      break;
    }
    case SweepKind::slope_vs_alpha: {
      double E = request.fixed.at("E");
      double Vr = request.fixed.at("Vr");
      double Vi = request.fixed.at("Vi");
      eval = [=](DataRow& row, double alpha, double) {
        SlopeResult s = asymptotic_slope(E, {Vr, Vi, 0.0}, alpha, units);
        row.values = {alpha, s.slope, s.intercept};
      };
      break;
    }
    case SweepKind::alphaH_vs_Vi: {
      double E = request.fixed.at("E");
      double Vr = request.fixed.at("Vr");
      double lo = fixed_or(request, "bracket_lo", 1.5);
      double hi = fixed_or(request, "bracket_hi", 2.0);
      double tol = fixed_or(request, "tol", 1.0e-6);
      eval = [=](DataRow& row, double Vi, double) {
        AlphaHResult r = find_alpha_h(E, Vr, Vi, lo, hi, tol, units);
        if (r.alpha_H) {
          row.values = {Vi, *r.alpha_H, r.slope_at_root};
        } else {
          row.values = {Vi, kNaN, kNaN};
          row.flag = "no-root";
        }
      };
      break;
    }
  }

  bool two_axes = request.axes.size() == 2;
  const Axis& ax1 = request.axes[0];
  int steps2 = two_axes ? request.axes[1].steps : 1;
  std::size_t total = static_cast<std::size_t>(ax1.steps) * steps2;

  Dataset out;
  out.columns.assign(info.columns.begin(), info.columns.end());
  out.rows.resize(total);

  // Rows are written by flat lexicographic index (second axis fastest), so
  // the result is independent of how the loop is split across threads.
  detail::parallel_for(total, jobs, [&](std::size_t idx) {
    int i1 = static_cast<int>(idx / steps2);
    int i2 = static_cast<int>(idx % steps2);
    double x1 = axis_value(ax1, i1);
    double x2 = two_axes ? axis_value(request.axes[1], i2) : 0.0;
    DataRow& row = out.rows[idx];
    try {
      eval(row, x1, x2);
    } catch (const regime_error&) {
      row.flag = "regime";
    } catch (const domain_error&) {
      row.flag = "domain";
    }
    if (row.values.empty()) {
      row.values.assign(info.columns.size(), kNaN);
      row.values[0] = x1;
      if (two_axes) row.values[1] = x2;
    }
  });

  out.metadata.emplace_back("tool", std::string("tunnelt ") + kVersion);
  out.metadata.emplace_back("kind", info.name);
  for (const auto& [key, value] : request.fixed) {
    out.metadata.emplace_back("fixed." + key, fmt(value));
  }
  for (const Axis& ax : request.axes) {
    out.metadata.emplace_back("axis." + ax.name,
                              fmt(ax.min) + ":" + fmt(ax.max) + ":" +
                                  std::to_string(ax.steps));
  }
  out.metadata.emplace_back("units.mass", fmt(units.mass));
  out.metadata.emplace_back("units.u", fmt(units.u));
  out.metadata.emplace_back("units.hbar", fmt(units.hbar));
  return out;
}

namespace {

// Family figures: one run_sweep per member, merged into wide format on the
// shared axis column.
Dataset merge_family(const std::vector<Dataset>& parts,
                     const std::vector<std::string>& labels) {
  Dataset out;
  out.columns.push_back(parts.front().columns.front());
  for (const auto& label : labels) out.columns.push_back(label);
  std::size_t n = parts.front().rows.size();
  out.rows.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    DataRow& row = out.rows[r];
    row.values.push_back(parts.front().rows[r].values[0]);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      row.values.push_back(parts[p].rows[r].values[1]);
      const std::string& flag = parts[p].rows[r].flag;
      if (!flag.empty()) {
        if (!row.flag.empty()) row.flag += ";";
        row.flag += labels[p] + ":" + flag;
      }
    }
  }
  return out;
}

std::string series_label(const std::string& param, double value) {
  return "gamma[" + param + "=" + fmt(value, "%g") + "]";
}

struct FigureSpec {
  const char* name;
  const char* title;
};

const FigureSpec kFigures[] = {
    {"fig1", "Traversal time vs width, absorption family (alpha = 2)"},
    {"fig2a", "Traversal time vs absorption, thin barrier (d = 1.5)"},
    {"fig2b", "Traversal time vs absorption, thick barrier (d = 5)"},
    {"fig3a", "Traversal time over the alpha-d plane (V_i = 0)"},
    {"fig3b", "Traversal time over the alpha-d plane (V_i = 20)"},
    {"fig4", "Traversal time vs width, Levy-index family (V_i = 0)"},
    {"fig5a", "Traversal time over the Vi-d plane (alpha = 2)"},
    {"fig5b", "Traversal time over the Vi-d plane (alpha = 1.96)"},
    {"fig6a", "Hartman recovery scan, V_i = 20"},
    {"fig6b", "Hartman recovery scan, V_i = 25"},
    {"fig6c", "Hartman recovery scan, V_i = 30"},
    {"fig6d", "Hartman recovery scan, V_i = 60"},
};

// Shared incident conditions of every published panel.
constexpr double kFigE = 4.0;
constexpr double kFigVr = 5.0;

std::string join_values(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ",";
    out += fmt(v, "%g");
  }
  return out;
}

Dataset figure_gamma_vs_d_family(const char* param,
                                 const std::vector<double>& family,
                                 double fixed_other, double d_lo, double d_hi,
                                 int steps, const UnitSystem& units, int jobs) {
  std::vector<Dataset> parts;
  std::vector<std::string> labels;
  bool family_is_Vi = std::string_view(param) == "Vi";
  for (double v : family) {
    SweepRequest req;
    req.kind = SweepKind::gamma_vs_d;
    req.fixed = {{"E", kFigE},
                 {"Vr", kFigVr},
                 {"Vi", family_is_Vi ? v : fixed_other},
                 {"alpha", family_is_Vi ? fixed_other : v}};
    req.axes = {{"d", d_lo, d_hi, steps}};
    parts.push_back(run_sweep(req, units, jobs));
    labels.push_back(series_label(param, v));
  }
  Dataset out = merge_family(parts, labels);
  out.metadata.emplace_back("kind", "gamma_vs_d");
  out.metadata.emplace_back("fixed.E", fmt(kFigE));
  out.metadata.emplace_back("fixed.Vr", fmt(kFigVr));
  out.metadata.emplace_back(family_is_Vi ? "fixed.alpha" : "fixed.Vi",
                            fmt(fixed_other));
  out.metadata.emplace_back(std::string("family.") + param,
                            join_values(family));
  out.metadata.emplace_back("axis.d", fmt(d_lo) + ":" + fmt(d_hi) + ":" +
                                          std::to_string(steps));
  out.metadata.emplace_back("units.mass", fmt(units.mass));
  out.metadata.emplace_back("units.u", fmt(units.u));
  out.metadata.emplace_back("units.hbar", fmt(units.hbar));
  return out;
}

}  // namespace

FigureId parse_figure_id(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kFigures); ++i) {
    if (name == kFigures[i].name) return static_cast<FigureId>(i);
  }
  throw domain_error("unknown figure '" + std::string(name) + "'");
}

std::string figure_name(FigureId id) {
  return kFigures[static_cast<int>(id)].name;
}

std::vector<std::string> figure_names() {
  std::vector<std::string> names;
  for (const FigureSpec& f : kFigures) names.push_back(f.name);
  return names;
}

Dataset reproduce_figure(FigureId id, const UnitSystem& units, int jobs) {
  const std::vector<double> alpha_family = {2.0, 1.98, 1.95, 1.9};
  const std::vector<double> alpha_family_fine = {2.0,  1.98, 1.97, 1.96,
                                                 1.95, 1.94, 1.92, 1.9};
  Dataset out;
  switch (id) {
    case FigureId::fig1:
      out = figure_gamma_vs_d_family("Vi", {0.0, 10.0, 20.0, 40.0}, 2.0, 0.05,
                                     12.0, 240, units, jobs);
      break;
    case FigureId::fig2a:
    case FigureId::fig2b: {
      double d = id == FigureId::fig2a ? 1.5 : 5.0;
      std::vector<Dataset> parts;
      std::vector<std::string> labels;
      for (double alpha : alpha_family) {
        SweepRequest req;
        req.kind = SweepKind::gamma_vs_Vi;
        req.fixed = {{"E", kFigE}, {"Vr", kFigVr}, {"alpha", alpha}, {"d", d}};
        req.axes = {{"Vi", 0.0, 60.0, 240}};
        parts.push_back(run_sweep(req, units, jobs));
        labels.push_back(series_label("alpha", alpha));
      }
      out = merge_family(parts, labels);
      out.metadata.emplace_back("kind", "gamma_vs_Vi");
      out.metadata.emplace_back("fixed.E", fmt(kFigE));
      out.metadata.emplace_back("fixed.Vr", fmt(kFigVr));
      out.metadata.emplace_back("fixed.d", fmt(d));
      out.metadata.emplace_back("family.alpha", join_values(alpha_family));
      out.metadata.emplace_back("axis.Vi", fmt(0.0) + ":" + fmt(60.0) + ":240");
      out.metadata.emplace_back("units.mass", fmt(units.mass));
      out.metadata.emplace_back("units.u", fmt(units.u));
      out.metadata.emplace_back("units.hbar", fmt(units.hbar));
      break;
    }
    case FigureId::fig3a:
    case FigureId::fig3b: {
      SweepRequest req;
      req.kind = SweepKind::contour_alpha_d;
      req.fixed = {{"E", kFigE},
                   {"Vr", kFigVr},
                   {"Vi", id == FigureId::fig3a ? 0.0 : 20.0}};
      req.axes = {{"alpha", 1.9, 2.0, 120}, {"d", 0.5, 12.0, 120}};
      out = run_sweep(req, units, jobs);
      break;
    }
    case FigureId::fig4:
      out = figure_gamma_vs_d_family("alpha", alpha_family, 0.0, 0.05, 10.0,
                                     240, units, jobs);
      break;
    case FigureId::fig5a:
    case FigureId::fig5b: {
      SweepRequest req;
      req.kind = SweepKind::contour_Vi_d;
      req.fixed = {{"E", kFigE},
                   {"Vr", kFigVr},
                   {"alpha", id == FigureId::fig5a ? 2.0 : 1.96}};
      req.axes = {{"Vi", 0.0, 60.0, 120}, {"d", 0.5, 10.0, 120}};
      out = run_sweep(req, units, jobs);
      break;
    }
    case FigureId::fig6a:
    case FigureId::fig6b:
    case FigureId::fig6c:
    case FigureId::fig6d: {
      double Vi = 20.0;
      if (id == FigureId::fig6b) Vi = 25.0;
      if (id == FigureId::fig6c) Vi = 30.0;
      if (id == FigureId::fig6d) Vi = 60.0;
      out = figure_gamma_vs_d_family("alpha", alpha_family_fine, Vi, 0.5, 20.0,
                                     240, units, jobs);
      break;
    }
  }

  // Every figure leads with its identity, then the parameter echo the
  // underlying sweep (or family builder) produced.
  const FigureSpec& spec = kFigures[static_cast<int>(id)];
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("tool", std::string("tunnelt ") + kVersion);
  meta.emplace_back("figure", spec.name);
  meta.emplace_back("title", spec.title);
  for (auto& kv : out.metadata) {
    if (kv.first != "tool") meta.push_back(std::move(kv));
  }
  out.metadata = std::move(meta);
  return out;
}

}  // namespace sfqm
