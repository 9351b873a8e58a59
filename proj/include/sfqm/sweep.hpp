#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfqm/model.hpp"

namespace sfqm {

// Parameter scans producing the library's standard datasets. Axis/column
// layout per kind (a trailing "flag" field is always appended on output):
//
//   gamma_vs_d      fixed E,Vr,Vi,alpha   axis d            cols d,gamma
//   gamma_vs_Vi     fixed E,Vr,alpha,d    axis Vi           cols Vi,gamma
//   contour_alpha_d fixed E,Vr,Vi         axes alpha,d      cols alpha,d,gamma
//   contour_Vi_d    fixed E,Vr,alpha      axes Vi,d         cols Vi,d,gamma
//   slope_vs_alpha  fixed E,Vr,Vi         axis alpha        cols alpha,slope,intercept
//   alphaH_vs_Vi    fixed E,Vr            axis Vi           cols Vi,alpha_H,slope_at_root
//
// alphaH_vs_Vi also accepts optional fixed keys bracket_lo, bracket_hi, tol.
enum class SweepKind {
  gamma_vs_d,
  gamma_vs_Vi,
  contour_alpha_d,
  contour_Vi_d,
  slope_vs_alpha,
  alphaH_vs_Vi,
};

SweepKind parse_sweep_kind(std::string_view name);  // domain_error on unknown
std::string sweep_kind_name(SweepKind kind);

// Inclusive linear axis: steps >= 2 points from min to max. Point i is
// min + i*(max-min)/(steps-1) with the endpoints taken exactly.
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

struct SweepRequest {
  SweepKind kind = SweepKind::gamma_vs_d;
  std::map<std::string, double> fixed;
  std::vector<Axis> axes;
};

// One data row. values aligns with Dataset::columns; a quiet NaN marks a
// missing value and serializes as an empty field. flag is empty for clean
// rows, otherwise a short reason ("regime", "domain", "no-root").
struct DataRow {
  std::vector<double> values;
  std::string flag;
};

// Tabular result plus the metadata echoed into the CSV preamble
// (insertion-ordered key/value pairs).
struct Dataset {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<DataRow> rows;
};

// Runs the scan. Row order is the lexicographic axis product (second axis
// fastest) regardless of jobs; evaluation is chunked across jobs threads
// (jobs <= 1 serial, 0 picks the hardware count) with results written by
// index, so output is byte-identical for any jobs value. Points that violate
// a regime or domain precondition become flagged rows, not errors; malformed
// requests (wrong axis names, bad counts, axis/fixed collisions, steps < 2)
// raise domain_error up front.
Dataset run_sweep(const SweepRequest& request, const UnitSystem& units = {},
                  int jobs = 1);

// Canned dataset families mirroring the published panels: gamma vs d for a
// V_i family at alpha = 2 (fig1) and for an alpha family at V_i = 0 (fig4);
// gamma vs V_i for alpha families at d = 1.5 / 5 (fig2a, fig2b); alpha-d and
// Vi-d contours (fig3a, fig3b, fig5a, fig5b); and the Hartman-recovery
// d-scans for alpha families at V_i = 20, 25, 30, 60 (fig6a..fig6d).
// Family figures come back in wide format, one series column per member.
enum class FigureId {
  fig1,
  fig2a,
  fig2b,
  fig3a,
  fig3b,
  fig4,
  fig5a,
  fig5b,
  fig6a,
  fig6b,
  fig6c,
  fig6d,
};

FigureId parse_figure_id(std::string_view name);  // domain_error on unknown
std::string figure_name(FigureId id);
std::vector<std::string> figure_names();

Dataset reproduce_figure(FigureId id, const UnitSystem& units = {},
                         int jobs = 1);

}  // namespace sfqm
