#include "h2df/montecarlo.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>
#include <vector>

#include "h2df/signal.hpp"

namespace h2df {

namespace {

struct Tally {
  uint64_t errors = 0;
  uint64_t undecodable = 0;
  std::array<uint64_t, 3> tag_trials{};
  std::array<uint64_t, 3> tag_errors{};

  void merge(const Tally& o) {
    errors += o.errors;
    undecodable += o.undecodable;
    for (size_t t = 0; t < 3; ++t) {
      tag_trials[t] += o.tag_trials[t];
      tag_errors[t] += o.tag_errors[t];
    }
  }
};

void run_trial(const McConfig& cfg, const H2dfCodebook& cb,
               const DetectionConfig& det, uint64_t trial, Tally& tally) {
  Xoshiro256ss rng = derive_stream(cfg.seed, trial);
  const CodeParams& p = cb.params();

  const uint32_t segment = static_cast<uint32_t>(rng.below(p.N));
  std::vector<uint32_t> lu_cols(p.K);
  for (uint32_t lu = 0; lu < p.K; ++lu) {
    lu_cols[lu] =
        cb.phase_to_column(lu, segment, rng.below(cb.columns_per_segment()));
  }
  const uint32_t victim =
      cfg.victim_lu ? *cfg.victim_lu
                    : static_cast<uint32_t>(rng.below(p.K));

  AttackVector attack = make_attack(cfg.attack, cfg.strategy, cb,
                                    lu_cols[victim], cfg.rho, rng);

  DecodeResult res;
  if (cfg.path == FeaturePath::ideal) {
    Aggregate agg = ideal_aggregate(cb, lu_cols, attack);
    DifferentialMatrix D = ideal_differential_matrix(cb, lu_cols, attack);
    res = hd_decode(agg, D, cb, rng);
  } else {
    ScenarioSignals sig = simulate_reception(cb, lu_cols, attack, det,
                                             cfg.snr_db, rng.next());
    Aggregate agg = extract_aggregate(sig, det);
    DifferentialMatrix D = build_differential_matrix(sig, det, &agg);
    res = hd_decode(agg, D, cb, rng);
  }

  bool err = !res.decodable();
  if (res.decodable() && *res.lu_columns != lu_cols) err = true;
  if (!res.decodable()) ++tally.undecodable;
  const size_t t = static_cast<size_t>(res.tag);
  ++tally.tag_trials[t];
  tally.tag_errors[t] += err;
  tally.errors += err;
}

}  // namespace

WilsonInterval wilson95(uint64_t errors, uint64_t trials) {
  if (trials == 0) return {0.0, 0.0};
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (p + z2n / 2.0) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / denom;
  double lo = errors == 0 ? 0.0 : center - half;
  double hi = errors == trials ? 1.0 : center + half;
  if (lo < 0.0) lo = 0.0;
  if (hi > 1.0) hi = 1.0;
  return {lo, hi};
}

IepStats monte_carlo_iep(const McConfig& cfg) {
  if (cfg.trials == 0) throw ConfigError("trials must be positive");
  if (cfg.workers == 0) throw ConfigError("workers must be positive");
  if (cfg.attack == AttackKind::PB_PJ &&
      cfg.strategy == AttackStrategy::none) {
    throw ConfigError("pb_pj needs an attack strategy");
  }
  if (cfg.victim_lu && *cfg.victim_lu >= cfg.K) {
    throw ConfigError("victim index out of range");
  }

  H2dfCodebook cb = H2dfCodebook::construct(cfg.K, cfg.k, cfg.q, cfg.N);

  DetectionConfig det;
  det.n_t = cfg.n_t;
  det.r = cfg.r;
  det.target_pf = cfg.target_pf;
  if (cfg.path == FeaturePath::signal) {
    det.gamma = calibrate_threshold(cfg.n_t, cfg.K, cfg.target_pf,
                                    cfg.calib_trials, cfg.seed ^ 0x5ca1ab1eull);
  }

  const uint32_t workers =
      static_cast<uint32_t>(std::min<uint64_t>(cfg.workers, cfg.trials));
  std::vector<Tally> tallies(workers);
  std::vector<std::thread> threads;
  const uint64_t chunk = cfg.trials / workers;
  const uint64_t rem = cfg.trials % workers;
  uint64_t start = 0;
  for (uint32_t w = 0; w < workers; ++w) {
    const uint64_t count = chunk + (w < rem ? 1 : 0);
    const uint64_t lo = start, hi = start + count;
    start = hi;
    auto body = [&, w, lo, hi] {
      for (uint64_t trial = lo; trial < hi; ++trial) {
        run_trial(cfg, cb, det, trial, tallies[w]);
      }
    };
    if (w + 1 == workers) {
      body();  // run the last chunk on this thread
    } else {
      threads.emplace_back(body);
    }
  }
  for (auto& t : threads) t.join();

  Tally total;
  for (const auto& t : tallies) total.merge(t);

  IepStats stats;
  stats.trials = cfg.trials;
  stats.errors = total.errors;
  stats.undecodable = total.undecodable;
  stats.tag_trials = total.tag_trials;
  stats.tag_errors = total.tag_errors;
  stats.iep_hat =
      static_cast<double>(total.errors) / static_cast<double>(cfg.trials);
  WilsonInterval ci = wilson95(total.errors, cfg.trials);
  stats.wilson_lo = ci.lo;
  stats.wilson_hi = ci.hi;
  return stats;
}

namespace {

// Locale-independent shortest-round-trip double for CSV cells.
void put_double(std::ostream& os, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  os.write(buf, res.ptr - buf);
}

}  // namespace

void write_csv_header(std::ostream& os) {
  os << "K,k,q,N,attack,strategy,path,trials,seed,errors,undecodable,"
        "iep_hat,wilson95_lo,wilson95_hi,clean_trials,clean_errors,"
        "identifiable_trials,identifiable_errors,coinflip_trials,"
        "coinflip_errors\n";
}

void write_csv_row(const McConfig& cfg, const IepStats& stats,
                   std::ostream& os) {
  os << cfg.K << ',' << cfg.k << ',' << cfg.q << ',' << cfg.N << ','
     << attack_kind_name(cfg.attack) << ','
     << attack_strategy_name(cfg.strategy) << ','
     << feature_path_name(cfg.path) << ',' << cfg.trials << ',' << cfg.seed
     << ',' << stats.errors << ',' << stats.undecodable << ',';
  put_double(os, stats.iep_hat);
  os << ',';
  put_double(os, stats.wilson_lo);
  os << ',';
  put_double(os, stats.wilson_hi);
  os << ',' << stats.tag_trials[0] << ',' << stats.tag_errors[0] << ','
     << stats.tag_trials[1] << ',' << stats.tag_errors[1] << ','
     << stats.tag_trials[2] << ',' << stats.tag_errors[2] << '\n';
}

const char* feature_path_name(FeaturePath path) {
  return path == FeaturePath::ideal ? "ideal" : "signal";
}

FeaturePath feature_path_from_name(const std::string& name) {
  if (name == "ideal") return FeaturePath::ideal;
  if (name == "signal") return FeaturePath::signal;
  throw ConfigError("unknown feature path: " + name);
}

}  // namespace h2df
