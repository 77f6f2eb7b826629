#include "h2df/signal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "h2df/kernels.hpp"
#include "h2df/rng.hpp"

namespace h2df {

namespace {

std::complex<double> cnormal(Xoshiro256ss& rng) {
  constexpr double kInvSqrt2 = 0.7071067811865476;
  return {rng.normal() * kInvSqrt2, rng.normal() * kInvSqrt2};
}

Eigen::VectorXd gram_eigenvalues(std::span<const std::complex<double>> Y,
                                 uint32_t n_sym, uint32_t n_t) {
  const auto& ops = kernels::ops();
  Eigen::MatrixXcd G(n_sym, n_sym);
  for (uint32_t t1 = 0; t1 < n_sym; ++t1) {
    for (uint32_t t2 = t1; t2 < n_sym; ++t2) {
      std::complex<double> v =
          ops.cdot(Y.data() + size_t{t1} * n_t, Y.data() + size_t{t2} * n_t,
                   n_t);
      G(t1, t2) = v;
      G(t2, t1) = std::conj(v);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues();  // ascending
}

void check_mucd_assignment(const H2dfCodebook& cb,
                           const std::vector<uint32_t>& lu_columns) {
  const uint32_t K = cb.params().K;
  if (lu_columns.size() != K) {
    throw InvalidAssignmentError("need exactly K legitimate columns");
  }
  std::vector<bool> used(K, false);
  for (uint32_t j : lu_columns) {
    int lu = cb.lu_of(j);
    if (lu < 0) {
      throw InvalidAssignmentError("column " + std::to_string(j) +
                                   " is unassigned");
    }
    if (used[lu]) {
      throw InvalidAssignmentError("two columns share submatrix " +
                                   std::to_string(lu));
    }
    used[lu] = true;
  }
}

std::vector<BinaryCodeword> participant_words(
    const H2dfCodebook& cb, const std::vector<uint32_t>& lu_columns,
    const AttackVector& attack) {
  check_mucd_assignment(cb, lu_columns);
  if (attack.c.size() != cb.length()) {
    throw LengthMismatchError("attack word length does not match codebook");
  }
  std::vector<BinaryCodeword> words;
  words.reserve(lu_columns.size() + 1);
  for (uint32_t j : lu_columns) words.push_back(cb.column(j));
  words.push_back(attack.c);  // all-zero under SC: contributes nothing
  return words;
}

}  // namespace

ScenarioSignals simulate_nodes(std::span<const BinaryCodeword> words,
                               uint32_t n_sym, const DetectionConfig& cfg,
                               double snr_db, uint64_t seed) {
  if (words.empty()) throw InvalidParamsError("no transmitting nodes");
  if (n_sym < 2) throw InvalidParamsError("need at least 2 symbols");
  const uint32_t B = words[0].size();
  for (const auto& w : words) {
    if (w.size() != B) throw LengthMismatchError("word lengths disagree");
  }
  const uint32_t n_t = cfg.n_t;
  const size_t n_nodes = words.size();
  const double amp = std::sqrt(std::pow(10.0, snr_db / 10.0));

  ScenarioSignals sig;
  sig.n_sym = n_sym;
  sig.n_t = n_t;
  sig.snr_db = snr_db;
  sig.rng_seed = seed;

  Xoshiro256ss rng = derive_stream(seed, 0);

  // Per-node flat channel and per-symbol phase sequence, both constant
  // across the node's band; that constancy is what the independence feature
  // keys on.
  sig.node_channels.assign(n_nodes, {});
  std::vector<std::vector<std::complex<double>>> symbols(n_nodes);
  for (size_t n = 0; n < n_nodes; ++n) {
    sig.node_channels[n].resize(n_t);
    for (uint32_t a = 0; a < n_t; ++a) sig.node_channels[n][a] = cnormal(rng);
    symbols[n].resize(n_sym);
    for (uint32_t t = 0; t < n_sym; ++t) {
      const double phi = 2.0 * std::numbers::pi * rng.real01();
      symbols[n][t] = amp * std::complex<double>(std::cos(phi), std::sin(phi));
    }
  }

  sig.Y.assign(B, {});
  for (uint32_t i = 0; i < B; ++i) {
    Xoshiro256ss noise_rng = derive_stream(seed, 1 + i);
    auto& Yi = sig.Y[i];
    Yi.assign(size_t{n_sym} * n_t, {0.0, 0.0});
    for (size_t n = 0; n < n_nodes; ++n) {
      if (!words[n].get(i)) continue;
      for (uint32_t t = 0; t < n_sym; ++t) {
        const std::complex<double> x = symbols[n][t];
        const auto& g = sig.node_channels[n];
        std::complex<double>* row = Yi.data() + size_t{t} * n_t;
        for (uint32_t a = 0; a < n_t; ++a) row[a] += x * g[a];
      }
    }
    for (auto& v : Yi) v += cnormal(noise_rng);
  }
  return sig;
}

ScenarioSignals simulate_reception(const H2dfCodebook& cb,
                                   const std::vector<uint32_t>& lu_columns,
                                   const AttackVector& attack,
                                   const DetectionConfig& cfg, double snr_db,
                                   uint64_t seed) {
  auto words = participant_words(cb, lu_columns, attack);
  return simulate_nodes(words, cb.params().K + 2, cfg, snr_db, seed);
}

double calibrate_threshold(uint32_t n_t, uint32_t K, double target_pf,
                           uint32_t trials, uint64_t seed) {
  if (trials < 10'000) throw InvalidParamsError("calibration needs >= 1e4 trials");
  if (target_pf <= 0.0 || target_pf >= 1.0) {
    throw InvalidParamsError("target_pf must be in (0, 1)");
  }
  const uint32_t n_sym = K + 2;
  std::vector<double> ratios(trials);
  std::vector<std::complex<double>> Y(size_t{n_sym} * n_t);
  for (uint32_t trial = 0; trial < trials; ++trial) {
    Xoshiro256ss rng = derive_stream(seed, trial);
    for (auto& v : Y) v = cnormal(rng);
    Eigen::VectorXd ev = gram_eigenvalues(Y, n_sym, n_t);
    ratios[trial] = ev(n_sym - 1) / ev(0);
  }
  std::sort(ratios.begin(), ratios.end());
  // Smallest sample with empirical exceedance probability <= target_pf.
  size_t idx = static_cast<size_t>(
      std::ceil((1.0 - target_pf) * static_cast<double>(trials)));
  if (idx == 0) idx = 1;
  if (idx > trials) idx = trials;
  return ratios[idx - 1];
}

uint32_t ered_count_signals(std::span<const std::complex<double>> Y,
                            uint32_t n_sym, uint32_t n_t,
                            const DetectionConfig& cfg) {
  if (Y.size() != size_t{n_sym} * n_t) {
    throw LengthMismatchError("observation size does not match n_sym * n_t");
  }
  if (cfg.gamma <= 1.0) {
    throw InvalidParamsError("gamma must exceed 1; run calibrate_threshold");
  }
  Eigen::VectorXd ev = gram_eigenvalues(Y, n_sym, n_t);
  const uint32_t cap = n_sym - 1;
  const double lmax = ev(n_sym - 1);
  const double lmin = ev(0);
  if (lmax <= 0.0) return 0;
  if (lmin <= 1e-12 * lmax) {
    // Rank-deficient observation (noise-free input): the ratio test is
    // meaningless, count eigenvalues that are nonzero outright.
    uint32_t count = 0;
    for (uint32_t i = 0; i < n_sym; ++i) {
      if (ev(i) > 1e-9 * lmax) ++count;
    }
    return std::min(count, cap);
  }
  uint32_t count = 0;
  while (count < cap && ev(n_sym - 1 - count) / lmin > cfg.gamma) ++count;
  return count;
}

Aggregate extract_aggregate(const ScenarioSignals& sig,
                            const DetectionConfig& cfg) {
  const uint32_t B = static_cast<uint32_t>(sig.Y.size());
  Aggregate agg{BinaryCodeword(B), AspVector(B)};
  for (uint32_t i = 0; i < B; ++i) {
    uint32_t m = ered_count_signals(sig.Y[i], sig.n_sym, sig.n_t, cfg);
    agg.m.set(i, static_cast<uint16_t>(m));
  }
  agg.b = agg.m.support();
  return agg;
}

DifferentialMatrix build_differential_matrix(const ScenarioSignals& sig,
                                             const DetectionConfig& cfg,
                                             const Aggregate* agg) {
  const uint32_t B = static_cast<uint32_t>(sig.Y.size());
  const size_t len = size_t{sig.n_sym} * sig.n_t;
  const auto& ops = kernels::ops();

  Aggregate local;
  if (!agg) {
    local = extract_aggregate(sig, cfg);
    agg = &local;
  }

  std::vector<double> norms(B);
  for (uint32_t i = 0; i < B; ++i) {
    norms[i] = std::sqrt(ops.cdot(sig.Y[i].data(), sig.Y[i].data(), len).real());
  }

  DifferentialMatrix D;
  D.rows.assign(B, BinaryCodeword(B));
  for (uint32_t i = 0; i < B; ++i) {
    if (agg->m[i] == 0) continue;  // unoccupied reference: row stays zero
    if (norms[i] == 0.0) continue;
    for (uint32_t j = 0; j < B; ++j) {
      if (norms[j] == 0.0) continue;
      const double ip =
          std::abs(ops.cdot(sig.Y[i].data(), sig.Y[j].data(), len));
      if (ip / (norms[i] * norms[j]) > cfg.r) D.rows[i].set(j, true);
    }
  }
  return D;
}

Aggregate ideal_aggregate(const H2dfCodebook& cb,
                          const std::vector<uint32_t>& lu_columns,
                          const AttackVector& attack) {
  auto words = participant_words(cb, lu_columns, attack);
  const uint32_t B = cb.length();
  Aggregate agg{BinaryCodeword(B), AspVector(B)};
  for (const auto& w : words) agg.m.add_codeword(w);
  agg.b = agg.m.support();
  return agg;
}

DifferentialMatrix ideal_differential_matrix(
    const H2dfCodebook& cb, const std::vector<uint32_t>& lu_columns,
    const AttackVector& attack) {
  auto words = participant_words(cb, lu_columns, attack);
  const uint32_t B = cb.length();
  DifferentialMatrix D;
  D.rows.assign(B, BinaryCodeword(B));
  for (uint32_t i = 0; i < B; ++i) {
    for (const auto& w : words) {
      if (w.get(i)) D.rows[i].or_in_place(w);
    }
  }
  return D;
}

}  // namespace h2df
