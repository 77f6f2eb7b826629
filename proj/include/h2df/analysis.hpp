#pragma once

#include <span>
#include <vector>

#include "h2df/errors.hpp"

// Closed-form performance metrics. All inputs are real-valued so the curves
// can be evaluated on a continuous parameter grid; the constructor's
// prime-power requirement applies only to actual codebook instantiation.

namespace h2df {

struct IepBounds {
  double lower;  // N/C: chance of Eva guessing a whole codeword outright
  double upper;  // 1/(2KN): worst-case confusion resolved by a fair pick
};

// Identification error probability bracket for C columns, K users and N
// segments per submatrix. The bounds meet at N = sqrt(C/(2K)).
IepBounds iep_bounds(double C, double K, double N);

// Worst-case IEP at the optimal segment count as a function of the
// subcarrier budget n_p = B: sqrt([1+K(k-1)]^k / (2 n_p^k K)). Requires
// n_p >= K(k-1)[1+K(k-1)] (ConstraintViolationError below that).
double iep_closed_form(double K, double k, double n_p);

// Smallest subcarrier budget the closed form admits: K(k-1)[1+K(k-1)].
double min_np(double K, double k);

// log2(C)/B bits per subcarrier.
double code_rate(double C, double B);

// Orders of magnitude between the IEP bounds: log10(upper/lower)
// = log10(C/(2KN^2)); zero exactly at the optimal segment count.
double instability(double C, double K, double N);

// The same instability expressed in the subcarrier budget:
// -2 log10 N + k log10 n_p - k log10[1+K(k-1)] - log10 2K. Agrees with
// instability() identically when C = (n_p/[1+K(k-1)])^k.
double instability_np(double K, double k, double n_p, double N);

// -log10 P, the reliability exponent of an error probability.
double reliability(double p);

// Real-valued optimal segment count sqrt(C/(2K)).
double optimal_segments_real(double C, double K);

// Codebook size and subcarrier cost per field order: C = q^k, n_p = q n0.
struct OverheadPoint {
  double q;
  double C;
  double n_p;
};
std::vector<OverheadPoint> overhead_curve(double K, double k,
                                          std::span<const double> qs);

}  // namespace h2df
