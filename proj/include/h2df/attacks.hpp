#pragma once

#include <cstdint>
#include <optional>

#include "h2df/codebook.hpp"
#include "h2df/codeword.hpp"
#include "h2df/errors.hpp"
#include "h2df/rng.hpp"

namespace h2df {

// What the adversary transmits during the reporting slot.
//
//   SC     silence: contributes nothing, forcing the legitimate aggregate
//          through unchanged while the adversary learns it.
//   WB_PJ  whole-band jamming: energy on every bit position.
//   PB_PJ  partial-band jamming: a chosen binary word, crafted per strategy.
enum class AttackKind : uint8_t { SC, WB_PJ, PB_PJ };

// How a PB_PJ word is crafted.  SC and WB_PJ ignore the strategy.
//
//   random_subset            each bit Bernoulli(rho), resampled until the
//                            word is neither all-zero nor all-one
//   victim_segment_codeword  a codeword drawn uniformly from the victim's
//                            segment (same submatrix, same segment index)
//   spsum_imitation          OR of K codewords, one drawn uniformly per
//                            submatrix, mimicking a legitimate superposition
enum class AttackStrategy : uint8_t {
  none,
  random_subset,
  victim_segment_codeword,
  spsum_imitation,
};

struct AttackVector {
  AttackKind mode;
  AttackStrategy strategy;
  BinaryCodeword c;                // all-zero for SC, all-one for WB_PJ
  std::optional<uint32_t> victim;  // column index the attack was aimed at
};

// Builds the adversary's word.  The decoder never sees this struct; it only
// observes the aggregated channel, so strategies are free to use victim
// knowledge the decoder cannot.
//
// victim is required for victim_segment_codeword (MissingVictimError
// otherwise).  rho is the per-bit density for random_subset.
AttackVector make_attack(AttackKind kind, AttackStrategy strategy,
                         const H2dfCodebook& cb,
                         std::optional<uint32_t> victim, double rho,
                         Xoshiro256ss& rng);

const char* attack_kind_name(AttackKind kind);
const char* attack_strategy_name(AttackStrategy strategy);
AttackKind attack_kind_from_name(const std::string& name);
AttackStrategy attack_strategy_from_name(const std::string& name);

}  // namespace h2df
