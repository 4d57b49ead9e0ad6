#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

namespace qwsearch {

/// One measured search at lattice size L. delta_rule is the cos(delta)
/// coefficient (cos delta = sqrt(coeff / ln N)); empty for plain runs.
struct ScalingPoint {
  int L = 0;
  std::size_t N = 0;
  double P_peak = 0.0;
  int t2_peak = 0;
  std::optional<double> delta_rule;
};

ScalingPoint make_scaling_point(int L, double P_peak, int t2_peak,
                                std::optional<double> delta_rule = std::nullopt);

struct XY {
  double x = 0.0;
  double y = 0.0;
};

struct LineFit {
  double a = 0.0;
  double b = 0.0;
  double rms = 0.0;
};

/// Ordinary least squares y = a + b*x with equal weights.
LineFit linear_fit(std::span<const XY> points);

enum class FitForm { P_NoAncilla, P_Ancilla, T2, Complexity };

const char* to_string(FitForm form);
FitForm parse_fit_form(const std::string& text);

struct FitResult {
  FitForm form = FitForm::P_NoAncilla;
  std::optional<double> cosdelta_coeff;
  double a = 0.0;
  double b = 0.0;
  double rms = 0.0;
  int L_min = 0;
  int L_max = 0;
};

// Axes of the four scaling plots.
//   P_NoAncilla: x = 1/log2 N, y = P log2 N
//   P_Ancilla:   x = 1/L,      y = P
//   T2:          x = 1/L,      y = t2 / sqrt(N log2 N)
//   Complexity:  x = 1/L,      y = t2 / sqrt(P N log2 N)
XY fit_coordinates(FitForm form, const ScalingPoint& point);

FitResult fit_scaling(FitForm form, std::span<const ScalingPoint> points);
FitResult fit_p_noancilla(std::span<const ScalingPoint> points);
FitResult fit_p_ancilla(std::span<const ScalingPoint> points);
FitResult fit_t2(std::span<const ScalingPoint> points);
FitResult fit_complexity(std::span<const ScalingPoint> points);

enum class BSource { FromP, FromQ };

/// Second-moment estimates. B_delta for controlled runs; B_coeff is the
/// coefficient of sqrt(log2 N) in B for uncontrolled runs.
struct BEstimate {
  BSource source = BSource::FromP;
  std::optional<double> B_delta;
  std::optional<double> B_coeff;
};

/// B_delta = 1 / sqrt(4 P).
BEstimate b_from_p(double P_asymptotic);
/// B_coeff = (4 a1)^(-1/2), for P log2 N = a1.
BEstimate b_from_p_log2n(double a1);
/// With coeff: B_delta = 8 a2 sqrt(coeff / ln 2) / pi.
/// Without (cos delta = 1): B_coeff = 8 a2 / pi.
BEstimate b_from_q(double a2, std::optional<double> cosdelta_coeff = std::nullopt);

/// B_delta^2 = 1 + (B^2 - 1) cos^2 delta.
double b_delta_from_b(double B, double cos_delta);

struct ConsistencyReport {
  BEstimate from_p;
  BEstimate from_q;
  double ratio = 0.0;  // from_p / from_q
  bool flagged = false;
};

inline constexpr double kConsistencyLow = 0.75;
inline constexpr double kConsistencyHigh = 1.33;

/// Compares the B estimate from a probability fit (P_NoAncilla or P_Ancilla)
/// with the one from an oracle-call fit (T2) for the same delta rule.
ConsistencyReport consistency_report(const FitResult& fit_p, const FitResult& fit_q);

/// (B^2 - 1)^(-1/2) with B = B_coeff sqrt(log2 N). Can exceed 1, in which
/// case no rotation angle realises it.
double optimal_cos_delta(double B_coeff, std::size_t N);
/// Large-B form 1 / B.
double optimal_cos_delta_approx(double B_coeff, std::size_t N);

}  // namespace qwsearch
