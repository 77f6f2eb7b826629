#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "h2df/attacks.hpp"
#include "h2df/codebook.hpp"
#include "h2df/codeword.hpp"
#include "h2df/errors.hpp"

// Multi-antenna feature layer. Each codeword bit position maps to one pilot
// subcarrier; every node active there transmits the same random-phase symbol
// sequence over K+2 OFDM symbols through its own flat channel. From the
// received matrices the decoder's two observables are recovered:
//
//   energy feature        per-subcarrier signal count via eigenvalue-ratio
//                         detection on the (K+2)x(K+2) Gram matrix
//   independence feature  B x B matrix of thresholded normalized inner
//                         products; the row at a singly-occupied subcarrier
//                         reproduces that occupant's whole codeword, because
//                         a node's signal is identical across its band
//
// Idealized oracles for both features back the decoder's default path and
// the fidelity tests of this synthetic layer.

namespace h2df {

struct DetectionConfig {
  uint32_t n_t = 128;      // receive antennas
  double gamma = 0.0;      // eigenvalue-ratio threshold; calibrate first
  double r = 0.5;          // inner-product magnitude threshold
  double target_pf = 1e-2; // false-alarm probability the threshold aims at
};

// The decoder's observation pair.
struct Aggregate {
  BinaryCodeword b;  // which subcarriers carry any signal
  AspVector m;       // how many signals each subcarrier carries
};

// Row i lists the subcarriers whose signal correlates with subcarrier i's;
// rows at unoccupied subcarriers are all-zero.
struct DifferentialMatrix {
  std::vector<BinaryCodeword> rows;
};

// Per-subcarrier received matrices of one reporting slot. Y[i] is the
// (K+2) x N_T observation at subcarrier i, flattened symbol-major.
struct ScenarioSignals {
  uint32_t n_sym = 0;  // K+2
  uint32_t n_t = 0;
  std::vector<std::vector<std::complex<double>>> Y;  // B entries
  std::vector<std::vector<std::complex<double>>> node_channels;
  double snr_db = 0.0;
  uint64_t rng_seed = 0;
};

// Received signals when the given words (LU codewords plus the attack word)
// are transmitted simultaneously. Channels are unit-variance circular
// Gaussian per antenna, constant across a node's band; symbols are
// unit-modulus random phases scaled to snr_db over unit-variance noise.
// Deterministic given seed.
ScenarioSignals simulate_nodes(std::span<const BinaryCodeword> words,
                               uint32_t n_sym, const DetectionConfig& cfg,
                               double snr_db, uint64_t seed);

// Convenience wrapper for a full scenario: K legitimate columns (one per
// submatrix, InvalidAssignmentError otherwise) plus Eva's word.
ScenarioSignals simulate_reception(const H2dfCodebook& cb,
                                   const std::vector<uint32_t>& lu_columns,
                                   const AttackVector& attack,
                                   const DetectionConfig& cfg, double snr_db,
                                   uint64_t seed);

// Empirical (1 - target_pf) quantile of lambda_max/lambda_min over
// noise-only (K+2) x N_T Gaussian matrices. trials >= 10^4.
double calibrate_threshold(uint32_t n_t, uint32_t K, double target_pf,
                           uint32_t trials, uint64_t seed);

// Number of signals present in one (n_sym x n_t) observation: the count of
// consecutive top eigenvalues of Y Y^H whose ratio to the smallest exceeds
// cfg.gamma, capped at n_sym - 1. When the smallest eigenvalue is
// numerically zero the ratio test degenerates and the count falls back to
// an absolute eigenvalue threshold.
uint32_t ered_count_signals(std::span<const std::complex<double>> Y,
                            uint32_t n_sym, uint32_t n_t,
                            const DetectionConfig& cfg);

Aggregate extract_aggregate(const ScenarioSignals& sig,
                            const DetectionConfig& cfg);

// D[i][j] = 1 iff |<Y_i, Y_j>| / (||Y_i|| ||Y_j||) > cfg.r and subcarrier i
// is occupied; rows at unoccupied subcarriers are zeroed. Pass the already
// extracted aggregate to skip re-detection.
DifferentialMatrix build_differential_matrix(const ScenarioSignals& sig,
                                             const DetectionConfig& cfg,
                                             const Aggregate* agg = nullptr);

// Noise-free oracles: occupancy counts by digit-wise addition of the
// participating codewords, and differential rows as the OR of the words of
// all nodes active at each subcarrier (so an exposed row is exactly the
// single occupant's codeword).
Aggregate ideal_aggregate(const H2dfCodebook& cb,
                          const std::vector<uint32_t>& lu_columns,
                          const AttackVector& attack);
DifferentialMatrix ideal_differential_matrix(
    const H2dfCodebook& cb, const std::vector<uint32_t>& lu_columns,
    const AttackVector& attack);

}  // namespace h2df
