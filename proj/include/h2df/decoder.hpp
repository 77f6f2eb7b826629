#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "h2df/codebook.hpp"
#include "h2df/codeword.hpp"
#include "h2df/errors.hpp"
#include "h2df/rng.hpp"
#include "h2df/signal.hpp"

// Hierarchical decoding: classify the attack from the aggregate observation,
// then recover the K legitimate columns (and Eva's word where it is
// determined). All decisions consume only (b, m, D); nothing here may look
// at how the scenario was generated.

namespace h2df {

enum class AttackMode : uint8_t { SC, WB_PJ, PB_PJ_covered, PB_PJ_uncovered };

enum class CaseTag : uint8_t {
  clean,              // direct algebraic recovery, no hypothesis testing
  identifiable,       // hypothesis loop ran and exactly one survived
  confusing_coinflip  // several hypotheses survived; picked uniformly
};

struct DecodeResult {
  AttackMode mode;
  // One column per submatrix, ordered by submatrix; empty when the
  // observation admits no consistent reading (Undecodable).
  std::optional<std::vector<uint32_t>> lu_columns;
  std::optional<BinaryCodeword> eva_codeword;
  CaseTag tag = CaseTag::clean;

  bool decodable() const { return lu_columns.has_value(); }
};

// Classification rules, in order:
//   1. b and every occupied differential row are all-ones -> WB_PJ
//   2. decompose(b) is a complete MUCD K-set: SC when m equals the members'
//      digit sum, PB_PJ_covered otherwise
//   3. anything else -> PB_PJ_uncovered
// Every observation maps to a mode; no errors.
AttackMode identify_attack(const Aggregate& agg, const DifferentialMatrix& D,
                           const H2dfCodebook& cb);

// WB_PJ strips Eva's uniform +1 off every counter first (a zero counter
// makes that impossible -> Undecodable); SC uses the counters as-is. The
// support must then decompose into a complete MUCD K-set whose digit sum
// reproduces the counters exactly.
DecodeResult decode_wb_sc(const Aggregate& agg, const H2dfCodebook& cb,
                          AttackMode mode);

// Decides which of two superposition words is the legitimate one: returns 0
// if members(j0) + j1 reproduces m, else 1 if members(j1) + j0 does, else
// throws InconsistentError. Distinct K-sets have distinct digit sums, so on
// noise-free observations the decision is always reached.
// Both words must decompose into complete MUCD K-sets (InvalidParamsError).
int bfpi(const BinaryCodeword& j0_word, const BinaryCodeword& j1_word,
         const AspVector& m, const H2dfCodebook& cb);

// Partial-band decoding.
//
// Covered: the members of decompose(b) are the legitimate columns; Eva's
// word is the counter surplus m - sum(members), which must be 0/1-valued.
//
// Uncovered: for each distinct differential row at a singly-occupied
// position (ascending), hypothesize that row as Eva's word, subtract it
// from the counters, and keep the hypothesis iff the remainder decomposes
// into a complete MUCD K-set lying in a single segment whose digit sum
// matches (via bfpi when the row itself is a superposition word). One
// survivor decodes outright; several trigger a uniform pick among them
// (the attacker's word and a victim's exposed word are then observationally
// interchangeable); none is Undecodable.
DecodeResult decode_pb(const Aggregate& agg, const DifferentialMatrix& D,
                       const H2dfCodebook& cb, AttackMode mode,
                       Xoshiro256ss& rng);

// identify_attack + dispatch. An aggregate violating b[i] == (m[i] >= 1)
// (possible with detection noise) is Undecodable rather than guessed at.
DecodeResult hd_decode(const Aggregate& agg, const DifferentialMatrix& D,
                       const H2dfCodebook& cb, Xoshiro256ss& rng);

const char* attack_mode_name(AttackMode mode);
const char* case_tag_name(CaseTag tag);

}  // namespace h2df
