#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "h2df/attacks.hpp"
#include "h2df/codebook.hpp"
#include "h2df/decoder.hpp"

// Monte Carlo estimation of the identification error probability. Each
// trial draws one segment index shared by all users, one column per user
// inside it, and one attack, then decodes from the configured feature path.
// A trial errs when decoding is Undecodable or any recovered column
// differs from the transmitted one.
//
// Trial i always consumes the RNG substream derived from (seed, i), and the
// tallies are plain integers merged commutatively, so results are identical
// for any worker count.

namespace h2df {

enum class FeaturePath : uint8_t { ideal, signal };

struct McConfig {
  uint32_t K = 3, k = 2, q = 4;
  uint32_t N = 1;
  AttackKind attack = AttackKind::SC;
  AttackStrategy strategy = AttackStrategy::none;
  // Targeted user; unset draws one uniformly per trial.
  std::optional<uint32_t> victim_lu;
  double rho = 0.5;  // bit density of random_subset words
  uint64_t trials = 10'000;
  uint64_t seed = 1;
  FeaturePath path = FeaturePath::ideal;
  // Signal-path knobs.
  double snr_db = 20.0;
  uint32_t n_t = 128;
  double target_pf = 1e-2;
  double r = 0.5;
  uint32_t calib_trials = 20'000;
  uint32_t workers = 1;
};

struct IepStats {
  uint64_t trials = 0;
  uint64_t errors = 0;
  uint64_t undecodable = 0;
  double iep_hat = 0.0;
  double wilson_lo = 0.0, wilson_hi = 0.0;  // 95% Wilson interval
  // Indexed by CaseTag: clean, identifiable, confusing_coinflip.
  std::array<uint64_t, 3> tag_trials{};
  std::array<uint64_t, 3> tag_errors{};
};

struct WilsonInterval {
  double lo, hi;
};
WilsonInterval wilson95(uint64_t errors, uint64_t trials);

IepStats monte_carlo_iep(const McConfig& cfg);

// One-row CSV serialization of a run (deterministic schema and formatting).
void write_csv_header(std::ostream& os);
void write_csv_row(const McConfig& cfg, const IepStats& stats,
                   std::ostream& os);

const char* feature_path_name(FeaturePath path);
FeaturePath feature_path_from_name(const std::string& name);

}  // namespace h2df
