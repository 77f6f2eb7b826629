#include "h2df/decoder.hpp"

#include <algorithm>

namespace h2df {

namespace {

bool aggregate_consistent(const Aggregate& agg) {
  if (agg.b.size() != agg.m.size()) return false;
  for (uint32_t i = 0; i < agg.b.size(); ++i) {
    if (agg.b.get(i) != (agg.m[i] >= 1)) return false;
  }
  return true;
}

// All members inside the assigned region and sharing one segment index.
bool segments_consistent(const H2dfCodebook& cb,
                         const std::vector<uint32_t>& members) {
  int seg = -1;
  for (uint32_t j : members) {
    int s = cb.segment_of(j);
    if (s < 0) return false;
    if (seg < 0) seg = s;
    if (s != seg) return false;
  }
  return true;
}

DecodeResult undecodable(AttackMode mode) {
  return DecodeResult{mode, std::nullopt, std::nullopt, CaseTag::clean};
}

// Complete MUCD K-set of w, if w is a superposition word.
std::optional<std::vector<uint32_t>> superposition_members(
    const H2dfCodebook& cb, const BinaryCodeword& w) {
  Decomposition dec = cb.decompose(w);
  if (!dec.complete) return std::nullopt;
  return cb.mucd_by_lu(dec);
}

}  // namespace

AttackMode identify_attack(const Aggregate& agg, const DifferentialMatrix& D,
                           const H2dfCodebook& cb) {
  if (agg.b.all()) {
    bool rows_full = true;
    for (uint32_t i = 0; i < agg.b.size() && rows_full; ++i) {
      if (agg.m[i] >= 1 && !D.rows[i].all()) rows_full = false;
    }
    if (rows_full) return AttackMode::WB_PJ;
  }
  if (auto members = superposition_members(cb, agg.b)) {
    return cb.column_sum(*members) == agg.m ? AttackMode::SC
                                            : AttackMode::PB_PJ_covered;
  }
  return AttackMode::PB_PJ_uncovered;
}

DecodeResult decode_wb_sc(const Aggregate& agg, const H2dfCodebook& cb,
                          AttackMode mode) {
  if (mode != AttackMode::SC && mode != AttackMode::WB_PJ) {
    throw InvalidParamsError("decode_wb_sc handles SC and WB_PJ only");
  }
  AspVector m = agg.m;
  if (mode == AttackMode::WB_PJ) {
    // Eva occupies every subcarrier exactly once; peel her off.
    AspVector ones(m.size());
    for (uint32_t i = 0; i < m.size(); ++i) ones.set(i, 1);
    if (!m.sub_in_place_checked(ones)) return undecodable(mode);
  }
  auto members = superposition_members(cb, m.support());
  if (!members || cb.column_sum(*members) != m) return undecodable(mode);
  DecodeResult res{mode, std::move(*members), std::nullopt, CaseTag::clean};
  if (mode == AttackMode::WB_PJ) {
    BinaryCodeword ones(agg.m.size());
    for (uint32_t i = 0; i < ones.size(); ++i) ones.set(i, true);
    res.eva_codeword = std::move(ones);
  }
  return res;
}

int bfpi(const BinaryCodeword& j0_word, const BinaryCodeword& j1_word,
         const AspVector& m, const H2dfCodebook& cb) {
  auto mem0 = superposition_members(cb, j0_word);
  auto mem1 = superposition_members(cb, j1_word);
  if (!mem0 || !mem1) {
    throw InvalidParamsError("bfpi inputs must be superposition words");
  }
  AspVector h0 = cb.column_sum(*mem0);
  h0.add_codeword(j1_word);
  if (h0 == m) return 0;
  AspVector h1 = cb.column_sum(*mem1);
  h1.add_codeword(j0_word);
  if (h1 == m) return 1;
  throw InconsistentError("neither word ordering reproduces the counters");
}

DecodeResult decode_pb(const Aggregate& agg, const DifferentialMatrix& D,
                       const H2dfCodebook& cb, AttackMode mode,
                       Xoshiro256ss& rng) {
  if (mode == AttackMode::PB_PJ_covered) {
    auto members = superposition_members(cb, agg.b);
    if (!members) return undecodable(mode);
    AspVector diff = agg.m;
    if (!diff.sub_in_place_checked(cb.column_sum(*members))) {
      return undecodable(mode);
    }
    for (uint32_t i = 0; i < diff.size(); ++i) {
      if (diff[i] > 1) return undecodable(mode);
    }
    return DecodeResult{mode, std::move(*members), diff.support(),
                        CaseTag::clean};
  }
  if (mode != AttackMode::PB_PJ_uncovered) {
    throw InvalidParamsError("decode_pb handles the PB_PJ modes only");
  }

  struct Survivor {
    std::vector<uint32_t> members;
    BinaryCodeword eva;
  };
  std::vector<Survivor> survivors;
  std::vector<BinaryCodeword> tried;

  for (uint32_t i = 0; i < agg.m.size(); ++i) {
    if (agg.m[i] != 1) continue;
    const BinaryCodeword& row = D.rows[i];
    if (!row.any()) continue;
    if (std::find(tried.begin(), tried.end(), row) != tried.end()) continue;
    tried.push_back(row);

    AspVector rem = agg.m;
    if (!rem.sub_codeword_checked(row)) continue;
    BinaryCodeword rem_word = rem.support();
    auto members = superposition_members(cb, rem_word);
    if (!members || !segments_consistent(cb, *members)) continue;

    if (superposition_members(cb, row)) {
      // Eva imitated a superposition word: decide between the two readings
      // the way the forward/backward counter test does.
      try {
        if (bfpi(rem_word, row, agg.m, cb) != 0) continue;
      } catch (const InconsistentError&) {
        continue;
      }
    } else if (cb.column_sum(*members) != rem) {
      continue;
    }
    survivors.push_back(Survivor{std::move(*members), row});
  }

  if (survivors.empty()) return undecodable(mode);
  size_t pick = 0;
  CaseTag tag = CaseTag::identifiable;
  if (survivors.size() > 1) {
    pick = static_cast<size_t>(rng.below(survivors.size()));
    tag = CaseTag::confusing_coinflip;
  }
  return DecodeResult{mode, std::move(survivors[pick].members),
                      std::move(survivors[pick].eva), tag};
}

DecodeResult hd_decode(const Aggregate& agg, const DifferentialMatrix& D,
                       const H2dfCodebook& cb, Xoshiro256ss& rng) {
  AttackMode mode = identify_attack(agg, D, cb);
  if (!aggregate_consistent(agg)) return undecodable(mode);
  switch (mode) {
    case AttackMode::SC:
    case AttackMode::WB_PJ:
      return decode_wb_sc(agg, cb, mode);
    case AttackMode::PB_PJ_covered:
    case AttackMode::PB_PJ_uncovered:
      return decode_pb(agg, D, cb, mode, rng);
  }
  return undecodable(mode);
}

const char* attack_mode_name(AttackMode mode) {
  switch (mode) {
    case AttackMode::SC: return "sc";
    case AttackMode::WB_PJ: return "wb_pj";
    case AttackMode::PB_PJ_covered: return "pb_pj_covered";
    case AttackMode::PB_PJ_uncovered: return "pb_pj_uncovered";
  }
  return "?";
}

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::clean: return "clean";
    case CaseTag::identifiable: return "identifiable";
    case CaseTag::confusing_coinflip: return "confusing_coinflip";
  }
  return "?";
}

}  // namespace h2df
