#include "sfqm/hartman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfqm/errors.hpp"

namespace sfqm {

namespace {

// Root certificate: a returned alpha_H must drive the slope at least this
// close to zero (spec of the search, stricter than the bracket tolerance).
constexpr double kSlopeCertificate = 1.0e-8;
constexpr int kProbes = 41;
constexpr int kMaxBisect = 200;

}  // namespace

AlphaHResult find_alpha_h(double E, double Vr, double Vi, double lo, double hi,
                          double tol, const UnitSystem& units) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 1.0 || hi > 2.0 ||
      lo >= hi) {
    throw domain_error("bracket must satisfy 1 < lo < hi <= 2");
  }
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw domain_error("tolerance must be positive");
  }
  BarrierSpec barrier{Vr, Vi, 0.0};
  barrier.validate();
  Query{E, hi}.validate();
  if (E >= Vr) {
    throw regime_error("Hartman search needs E < V_r");
  }

  auto slope_at = [&](double alpha) {
    double s = asymptotic_slope(E, barrier, alpha, units).slope;
    if (!std::isfinite(s)) {
      throw domain_error("large-d slope not finite inside the bracket");
    }
    return s;
  };

  double probe[kProbes];
  double s[kProbes];
  for (int i = 0; i < kProbes; ++i) {
    probe[i] = (i == kProbes - 1)
                   ? hi
                   : lo + static_cast<double>(i) * (hi - lo) / (kProbes - 1);
    s[i] = slope_at(probe[i]);
  }

  AlphaHResult out;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.slope_lo = s[0];
  out.slope_hi = s[kProbes - 1];

  struct Refined {
    double root, slope, lo, hi;
    int iterations;
  };
  std::vector<Refined> refined;

  // A probe landing exactly on a zero counts only strictly inside the
  // bracket; a zero at an endpoint is a boundary root and stays out (the
  // Vi = 0 case has slope exactly 0 at alpha = 2, which must not register).
  for (int i = 1; i < kProbes - 1; ++i) {
    if (s[i] == 0.0) {
      refined.push_back({probe[i], 0.0, probe[i], probe[i], 0});
    }
  }
  for (int i = 0; i + 1 < kProbes; ++i) {
    if (!(s[i] * s[i + 1] < 0.0)) continue;
    double a = probe[i], b = probe[i + 1];
    double fa = s[i];
    double mid = 0.5 * (a + b);
    double fm = 0.0;
    int iter = 0;
    while (iter < kMaxBisect) {
      mid = 0.5 * (a + b);
      fm = slope_at(mid);
      ++iter;
      if (fm == 0.0) break;
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
      double width = b - a;
      if (width <= tol && std::abs(fm) < kSlopeCertificate) break;
      if (width <= 8.0 * std::numeric_limits<double>::epsilon()) break;
    }
    refined.push_back({mid, fm, a, b, iter});
  }

  std::sort(refined.begin(), refined.end(),
            [](const Refined& x, const Refined& y) { return x.root < y.root; });
  for (const Refined& r : refined) out.roots.push_back(r.root);

  if (!refined.empty()) {
    const Refined& best = refined.back();  // ascending scan: last is nearest 2
    if (std::abs(best.slope) < kSlopeCertificate) {
      out.alpha_H = best.root;
      out.slope_at_root = best.slope;
      out.bracket_lo = best.lo;
      out.bracket_hi = best.hi;
      out.iterations = best.iterations;
    }
  }
  return out;
}

std::vector<HartmanRow> hartman_curve(double E, double Vr,
                                      std::span<const double> Vi_values,
                                      double lo, double hi, double tol,
                                      const UnitSystem& units) {
  std::vector<HartmanRow> rows;
  rows.reserve(Vi_values.size());
  for (double Vi : Vi_values) {
    HartmanRow row;
    row.Vi = Vi;
    try {
      row.result = find_alpha_h(E, Vr, Vi, lo, hi, tol, units);
    } catch (const std::exception& e) {
      row.ok = false;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sfqm
