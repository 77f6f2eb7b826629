#include "h2df/attacks.hpp"

namespace h2df {

namespace {

BinaryCodeword random_subset_word(uint32_t len, double rho, Xoshiro256ss& rng) {
  BinaryCodeword w(len);
  // All-zero degenerates to SC and all-one to WB_PJ; resample those away so
  // the word is a genuine partial-band pattern.
  for (;;) {
    uint32_t ones = 0;
    for (uint32_t i = 0; i < len; ++i) {
      bool bit = rng.real01() < rho;
      w.set(i, bit);
      ones += bit;
    }
    if (ones != 0 && ones != len) return w;
  }
}

// Eva knows which submatrix the victim uses but not its segment: she draws a
// segment uniformly and a column uniformly within it. With N segments her
// draw lands in the victim's segment only 1/N of the time, which is exactly
// how segmentation shrinks her success odds.
BinaryCodeword victim_segment_word(const H2dfCodebook& cb, uint32_t victim,
                                   Xoshiro256ss& rng) {
  int lu = cb.lu_of(victim);
  if (lu < 0) {
    throw InvalidParamsError("victim column is outside the assigned region");
  }
  uint32_t seg = static_cast<uint32_t>(rng.below(cb.params().N));
  uint64_t phase = rng.below(cb.columns_per_segment());
  return cb.column(cb.phase_to_column(static_cast<uint32_t>(lu), seg, phase));
}

BinaryCodeword imitation_word(const H2dfCodebook& cb, Xoshiro256ss& rng) {
  const CodeParams& p = cb.params();
  uint64_t per_lu = cb.columns_per_lu();
  BinaryCodeword w(p.B);
  for (uint32_t lu = 0; lu < p.K; ++lu) {
    uint32_t j = static_cast<uint32_t>(uint64_t{lu} * per_lu + rng.below(per_lu));
    w.or_in_place(cb.column(j));
  }
  return w;
}

}  // namespace

AttackVector make_attack(AttackKind kind, AttackStrategy strategy,
                         const H2dfCodebook& cb,
                         std::optional<uint32_t> victim, double rho,
                         Xoshiro256ss& rng) {
  const uint32_t len = cb.length();
  AttackVector av{kind, strategy, BinaryCodeword(len), victim};
  switch (kind) {
    case AttackKind::SC:
      av.strategy = AttackStrategy::none;
      return av;  // silent: all-zero
    case AttackKind::WB_PJ:
      av.strategy = AttackStrategy::none;
      for (uint32_t i = 0; i < len; ++i) av.c.set(i, true);
      return av;
    case AttackKind::PB_PJ:
      break;
  }
  switch (strategy) {
    case AttackStrategy::random_subset:
      av.c = random_subset_word(len, rho, rng);
      return av;
    case AttackStrategy::victim_segment_codeword:
      if (!victim) {
        throw MissingVictimError(
            "victim_segment_codeword needs a victim column");
      }
      av.c = victim_segment_word(cb, *victim, rng);
      return av;
    case AttackStrategy::spsum_imitation:
      av.c = imitation_word(cb, rng);
      return av;
    case AttackStrategy::none:
      break;
  }
  throw InvalidParamsError("PB_PJ needs a crafting strategy");
}

const char* attack_kind_name(AttackKind kind) {
  switch (kind) {
    case AttackKind::SC: return "sc";
    case AttackKind::WB_PJ: return "wb_pj";
    case AttackKind::PB_PJ: return "pb_pj";
  }
  return "?";
}

const char* attack_strategy_name(AttackStrategy strategy) {
  switch (strategy) {
    case AttackStrategy::none: return "none";
    case AttackStrategy::random_subset: return "random_subset";
    case AttackStrategy::victim_segment_codeword: return "victim_segment_codeword";
    case AttackStrategy::spsum_imitation: return "spsum_imitation";
  }
  return "?";
}

AttackKind attack_kind_from_name(const std::string& name) {
  if (name == "sc") return AttackKind::SC;
  if (name == "wb_pj") return AttackKind::WB_PJ;
  if (name == "pb_pj") return AttackKind::PB_PJ;
  throw ConfigError("unknown attack kind: " + name);
}

AttackStrategy attack_strategy_from_name(const std::string& name) {
  if (name == "none") return AttackStrategy::none;
  if (name == "random_subset") return AttackStrategy::random_subset;
  if (name == "victim_segment_codeword")
    return AttackStrategy::victim_segment_codeword;
  if (name == "spsum_imitation") return AttackStrategy::spsum_imitation;
  throw ConfigError("unknown attack strategy: " + name);
}

}  // namespace h2df
