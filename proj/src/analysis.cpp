#include "h2df/analysis.hpp"

#include <cmath>

namespace h2df {

IepBounds iep_bounds(double C, double K, double N) {
  return IepBounds{N / C, 1.0 / (2.0 * K * N)};
}

double min_np(double K, double k) {
  const double d = K * (k - 1.0);
  return d * (1.0 + d);
}

double iep_closed_form(double K, double k, double n_p) {
  if (n_p < min_np(K, k)) {
    throw ConstraintViolationError(
        "subcarrier budget below K(k-1)[1+K(k-1)]");
  }
  const double n0 = 1.0 + K * (k - 1.0);
  return std::sqrt(std::pow(n0, k) / (2.0 * std::pow(n_p, k) * K));
}

double code_rate(double C, double B) {
  if (C < 2.0 || B < 1.0) throw InvalidParamsError("need C >= 2 and B >= 1");
  return std::log2(C) / B;
}

double instability(double C, double K, double N) {
  return std::log10(C / (2.0 * K * N * N));
}

double instability_np(double K, double k, double n_p, double N) {
  const double n0 = 1.0 + K * (k - 1.0);
  return -2.0 * std::log10(N) + k * std::log10(n_p) - k * std::log10(n0) -
         std::log10(2.0 * K);
}

double reliability(double p) { return -std::log10(p); }

double optimal_segments_real(double C, double K) {
  return std::sqrt(C / (2.0 * K));
}

std::vector<OverheadPoint> overhead_curve(double K, double k,
                                          std::span<const double> qs) {
  const double n0 = 1.0 + K * (k - 1.0);
  std::vector<OverheadPoint> out;
  out.reserve(qs.size());
  for (double q : qs) out.push_back({q, std::pow(q, k), q * n0});
  return out;
}

}  // namespace h2df
