#include "qwsearch/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qwsearch/error.hpp"

namespace qwsearch {

ScalingPoint make_scaling_point(int L, double P_peak, int t2_peak,
                                std::optional<double> delta_rule) {
  if (L <= 0) throw ValidationError("L must be positive");
  if (!(P_peak > 0.0 && P_peak <= 1.0)) throw ValidationError("P_peak must lie in (0, 1]");
  return {L, static_cast<std::size_t>(L) * static_cast<std::size_t>(L), P_peak, t2_peak,
          delta_rule};
}

LineFit linear_fit(std::span<const XY> points) {
  if (points.size() < 2) throw ValidationError("points: linear fit needs at least 2 points");
  const double n = static_cast<double>(points.size());
  double xm = 0.0, ym = 0.0;
  for (const auto& p : points) {
    xm += p.x;
    ym += p.y;
  }
  xm /= n;
  ym /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    sxx += (p.x - xm) * (p.x - xm);
    sxy += (p.x - xm) * (p.y - ym);
  }
  if (!(sxx > 0.0)) throw ValidationError("points: x values are degenerate");
  LineFit fit;
  fit.b = sxy / sxx;
  fit.a = ym - fit.b * xm;
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = p.y - (fit.a + fit.b * p.x);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

const char* to_string(FitForm form) {
  switch (form) {
    case FitForm::P_NoAncilla: return "P_NoAncilla";
    case FitForm::P_Ancilla: return "P_Ancilla";
    case FitForm::T2: return "T2";
    case FitForm::Complexity: return "Complexity";
  }
  return "?";
}

FitForm parse_fit_form(const std::string& text) {
  for (FitForm f : {FitForm::P_NoAncilla, FitForm::P_Ancilla, FitForm::T2, FitForm::Complexity})
    if (text == to_string(f)) return f;
  throw ValidationError("form: unknown fit form '" + text + "'");
}

XY fit_coordinates(FitForm form, const ScalingPoint& p) {
  const double N = static_cast<double>(p.N);
  const double log2N = std::log2(N);
  const double inv_L = 1.0 / p.L;
  switch (form) {
    case FitForm::P_NoAncilla: return {1.0 / log2N, p.P_peak * log2N};
    case FitForm::P_Ancilla: return {inv_L, p.P_peak};
    case FitForm::T2: return {inv_L, p.t2_peak / std::sqrt(N * log2N)};
    case FitForm::Complexity: return {inv_L, p.t2_peak / std::sqrt(p.P_peak * N * log2N)};
  }
  return {};
}

FitResult fit_scaling(FitForm form, std::span<const ScalingPoint> points) {
  if (points.empty()) throw ValidationError("points: nothing to fit");
  std::vector<XY> xy;
  xy.reserve(points.size());
  for (const auto& p : points) {
    if (p.N != static_cast<std::size_t>(p.L) * static_cast<std::size_t>(p.L))
      throw ValidationError("N must equal L^2");
    xy.push_back(fit_coordinates(form, p));
  }
  const LineFit line = linear_fit(xy);
  const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const auto& u, const auto& v) { return u.L < v.L; });
  return {form, points.front().delta_rule, line.a, line.b, line.rms, lo->L, hi->L};
}

FitResult fit_p_noancilla(std::span<const ScalingPoint> points) {
  return fit_scaling(FitForm::P_NoAncilla, points);
}
FitResult fit_p_ancilla(std::span<const ScalingPoint> points) {
  return fit_scaling(FitForm::P_Ancilla, points);
}
FitResult fit_t2(std::span<const ScalingPoint> points) { return fit_scaling(FitForm::T2, points); }
FitResult fit_complexity(std::span<const ScalingPoint> points) {
  return fit_scaling(FitForm::Complexity, points);
}

BEstimate b_from_p(double P_asymptotic) {
  if (!(P_asymptotic > 0.0 && P_asymptotic <= 1.0))
    throw ValidationError("P must lie in (0, 1]");
  // P_delta = 1 / (2^d B_delta^2) with d = 2.
  return {BSource::FromP, 1.0 / std::sqrt(4.0 * P_asymptotic), std::nullopt};
}

BEstimate b_from_p_log2n(double a1) {
  if (!(a1 > 0.0)) throw ValidationError("a1 must be positive");
  return {BSource::FromP, std::nullopt, 1.0 / std::sqrt(4.0 * a1)};
}

BEstimate b_from_q(double a2, std::optional<double> cosdelta_coeff) {
  if (!(a2 > 0.0)) throw ValidationError("a2 must be positive");
  constexpr double pi = std::numbers::pi;
  if (!cosdelta_coeff) return {BSource::FromQ, std::nullopt, 8.0 * a2 / pi};
  if (!(*cosdelta_coeff > 0.0)) throw ValidationError("cosdelta_coeff must be positive");
  return {BSource::FromQ, 8.0 * a2 * std::sqrt(*cosdelta_coeff / std::numbers::ln2) / pi,
          std::nullopt};
}

double b_delta_from_b(double B, double cos_delta) {
  return std::sqrt(1.0 + (B * B - 1.0) * cos_delta * cos_delta);
}

ConsistencyReport consistency_report(const FitResult& fit_p, const FitResult& fit_q) {
  if (fit_q.form != FitForm::T2) throw ValidationError("fit_q must be a T2 fit");
  ConsistencyReport report;
  double bp = 0.0, bq = 0.0;
  if (fit_p.form == FitForm::P_NoAncilla) {
    if (fit_q.cosdelta_coeff) throw ValidationError("cosdelta_coeff: delta rules do not match");
    report.from_p = b_from_p_log2n(fit_p.a);
    report.from_q = b_from_q(fit_q.a);
    bp = *report.from_p.B_coeff;
    bq = *report.from_q.B_coeff;
  } else if (fit_p.form == FitForm::P_Ancilla) {
    if (!fit_p.cosdelta_coeff || fit_p.cosdelta_coeff != fit_q.cosdelta_coeff)
      throw ValidationError("cosdelta_coeff: delta rules do not match");
    report.from_p = b_from_p(fit_p.a);
    report.from_q = b_from_q(fit_q.a, fit_q.cosdelta_coeff);
    bp = *report.from_p.B_delta;
    bq = *report.from_q.B_delta;
  } else {
    throw ValidationError("fit_p must be a probability fit");
  }
  report.ratio = bp / bq;
  report.flagged = report.ratio < kConsistencyLow || report.ratio > kConsistencyHigh;
  return report;
}

double optimal_cos_delta(double B_coeff, std::size_t N) {
  const double B = B_coeff * std::sqrt(std::log2(static_cast<double>(N)));
  if (!(B > 1.0)) throw ValidationError("B must exceed 1");
  return 1.0 / std::sqrt(B * B - 1.0);
}

double optimal_cos_delta_approx(double B_coeff, std::size_t N) {
  const double B = B_coeff * std::sqrt(std::log2(static_cast<double>(N)));
  if (!(B > 0.0)) throw ValidationError("B must be positive");
  return 1.0 / B;
}

}  // namespace qwsearch
