#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "h2df/analysis.hpp"
#include "h2df/codebook.hpp"
#include "h2df/codebook_io.hpp"
#include "h2df/montecarlo.hpp"

namespace {

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Writes to the file when a path is set, to stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw h2df::IoError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_construct(uint32_t K, uint32_t k, uint32_t q, uint32_t N,
                  const std::string& out) {
  h2df::H2dfCodebook cb = h2df::H2dfCodebook::construct(K, k, q, N);
  OutputTarget target(out);
  h2df::export_codebook(cb, target.stream());
  return 0;
}

int run_verify(uint32_t K, uint32_t k, uint32_t q, uint32_t N,
               const std::string& in, uint64_t max_checks) {
  h2df::H2dfCodebook cb = in.empty()
                              ? h2df::H2dfCodebook::construct(K, k, q, N)
                              : h2df::import_codebook_file(in);
  const auto& p = cb.params();
  std::cout << "codebook K=" << p.K << " k=" << p.k << " q=" << p.q
            << " N=" << p.N << " B=" << p.B << " C=" << p.C << "\n";
  bool weight_ok = cb.verify_constant_weight();
  std::cout << "constant-weight: " << (weight_ok ? "ok" : "FAIL") << "\n";
  bool cf_ok = cb.verify_cover_free(max_checks);
  std::cout << "cover-free: " << (cf_ok ? "ok" : "FAIL") << "\n";
  return weight_ok && cf_ok ? 0 : 1;
}

int run_simulate(const h2df::McConfig& cfg, const std::string& out) {
  h2df::IepStats stats = h2df::monte_carlo_iep(cfg);
  OutputTarget target(out);
  h2df::write_csv_header(target.stream());
  h2df::write_csv_row(cfg, stats, target.stream());
  return 0;
}

int run_metrics(double K, double k, double n_p, const std::string& out) {
  const double n0 = 1.0 + K * (k - 1.0);
  const double q = n_p / n0;
  const double C = std::pow(q, k);
  OutputTarget target(out);
  std::ostream& os = target.stream();
  os << "K,k,Np,n0,q,C,min_Np,iep,code_rate,optimal_N,reliability\n";
  const double iep = h2df::iep_closed_form(K, k, n_p);
  os << fmt(K) << ',' << fmt(k) << ',' << fmt(n_p) << ',' << fmt(n0) << ','
     << fmt(q) << ',' << fmt(C) << ',' << fmt(h2df::min_np(K, k)) << ','
     << fmt(iep) << ',' << fmt(h2df::code_rate(C, n_p)) << ','
     << fmt(h2df::optimal_segments_real(C, K)) << ','
     << fmt(h2df::reliability(iep)) << '\n';
  return 0;
}

// Code rate versus subcarrier budget for K x k combinations.
void sweep_6a(std::ostream& os) {
  os << "figure,K,k,Np,q,C,code_rate\n";
  for (double K : {4.0, 8.0, 16.0}) {
    for (double k : {2.0, 3.0}) {
      const double n0 = 1.0 + K * (k - 1.0);
      double start = std::ceil(h2df::min_np(K, k) / 4.0) * 4.0;
      for (double n_p = start; n_p <= 400.0; n_p += 4.0) {
        const double q = n_p / n0;
        const double C = std::pow(q, k);
        os << "6a," << fmt(K) << ',' << fmt(k) << ',' << fmt(n_p) << ','
           << fmt(q) << ',' << fmt(C) << ',' << fmt(h2df::code_rate(C, n_p))
           << '\n';
      }
    }
  }
}

// Upper-lower bound tradeoff points, N = 1..10, budget at its minimum.
void sweep_6b(std::ostream& os) {
  os << "figure,K,k,Np,N,lower,upper\n";
  for (double K : {2.0, 8.0}) {
    for (double k : {2.0, 3.0}) {
      const double n_p = h2df::min_np(K, k);
      const double C = std::pow(n_p / (1.0 + K * (k - 1.0)), k);
      for (double N = 1.0; N <= 10.0; N += 1.0) {
        h2df::IepBounds b = h2df::iep_bounds(C, K, N);
        os << "6b," << fmt(K) << ',' << fmt(k) << ',' << fmt(n_p) << ','
           << fmt(N) << ',' << fmt(b.lower) << ',' << fmt(b.upper) << '\n';
      }
    }
  }
}

// Instability versus segment count, budget at its minimum.
void sweep_6c(std::ostream& os) {
  os << "figure,K,k,Np,N,instability\n";
  for (double K : {2.0, 8.0, 18.0}) {
    for (double k : {2.0, 3.0}) {
      const double n_p = h2df::min_np(K, k);
      for (double N = 1.0; N <= 10.0; N += 1.0) {
        os << "6c," << fmt(K) << ',' << fmt(k) << ',' << fmt(n_p) << ','
           << fmt(N) << ',' << fmt(h2df::instability_np(K, k, n_p, N))
           << '\n';
      }
    }
  }
}

// Closed-form identification error probability versus subcarrier budget.
void sweep_7a(std::ostream& os) {
  os << "figure,K,k,Np,iep\n";
  for (double K : {4.0, 8.0, 16.0}) {
    for (double k : {2.0, 3.0}) {
      double start = std::ceil(h2df::min_np(K, k) / 2.0) * 2.0;
      for (double n_p = start; n_p <= 400.0; n_p += 2.0) {
        os << "7a," << fmt(K) << ',' << fmt(k) << ',' << fmt(n_p) << ','
           << fmt(h2df::iep_closed_form(K, k, n_p)) << '\n';
      }
    }
  }
}

// Subcarrier cost versus field order (linear overhead growth).
void sweep_7b(std::ostream& os) {
  os << "figure,K,k,q,C,Np\n";
  std::vector<double> qs;
  for (double q = 4.0; q <= 40.0; q += 1.0) qs.push_back(q);
  for (double K : {4.0, 8.0}) {
    for (const auto& pt : h2df::overhead_curve(K, 2.0, qs)) {
      os << "7b," << fmt(K) << ",2," << fmt(pt.q) << ',' << fmt(pt.C) << ','
         << fmt(pt.n_p) << '\n';
    }
  }
}

int run_sweep(const std::string& figure, const std::string& out) {
  OutputTarget target(out);
  std::ostream& os = target.stream();
  if (figure == "6a") sweep_6a(os);
  else if (figure == "6b") sweep_6b(os);
  else if (figure == "6c") sweep_6c(os);
  else if (figure == "7a") sweep_7a(os);
  else if (figure == "7b") sweep_7b(os);
  else throw h2df::ConfigError("unknown figure: " + figure);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover-free pilot codebooks: construction, verification, "
               "decoding simulation and closed-form metrics"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value file");

  uint32_t K = 3, k = 2, q = 4, N = 1;
  double n_p = 0.0;
  uint64_t seed = 1;
  std::string out, in, attack = "sc", strategy = "none", path = "ideal",
              figure;
  uint64_t trials = 10'000, max_checks = 50'000'000;
  uint32_t workers = 1, n_t = 128, calib_trials = 20'000;
  double rho = 0.5, snr_db = 20.0, target_pf = 1e-2, r = 0.5;
  int32_t victim = -1;

  auto add_code_params = [&](CLI::App* cmd) {
    cmd->add_option("--K", K, "Number of users (cover-free order)");
    cmd->add_option("--k", k, "Polynomial degree bound");
    cmd->add_option("--q", q, "Field order (prime power)");
    cmd->add_option("--N", N, "Segments per submatrix");
  };

  CLI::App* construct = app.add_subcommand("construct", "Build a codebook");
  add_code_params(construct);
  construct->add_option("--out", out, "Output file (stdout otherwise)");

  CLI::App* verify =
      app.add_subcommand("verify", "Check codebook invariants exhaustively");
  add_code_params(verify);
  verify->add_option("--in", in, "Verify this codebook file instead");
  verify->add_option("--max-checks", max_checks,
                     "Cover-free work budget (cover tests)");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo decoding error rate");
  add_code_params(simulate);
  simulate->add_option("--attack", attack, "sc | wb_pj | pb_pj");
  simulate->add_option(
      "--strategy", strategy,
      "none | random_subset | victim_segment_codeword | spsum_imitation");
  simulate->add_option("--trials", trials, "Trial count");
  simulate->add_option("--seed", seed, "Root RNG seed")
      ->envname("H2DF_SEED");
  simulate->add_option("--path", path, "ideal | signal feature path");
  simulate->add_option("--victim", victim,
                       "Targeted user index (random per trial otherwise)");
  simulate->add_option("--rho", rho, "Bit density of random_subset");
  simulate->add_option("--workers", workers, "Worker thread count");
  simulate->add_option("--snr", snr_db, "Signal path SNR in dB");
  simulate->add_option("--nt", n_t, "Signal path antenna count");
  simulate->add_option("--pf", target_pf, "Detection false-alarm target");
  simulate->add_option("--r", r, "Inner-product threshold");
  simulate->add_option("--calib-trials", calib_trials,
                       "Threshold calibration trials");
  simulate->add_option("--out", out, "CSV file (stdout otherwise)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Closed-form metric grids as CSV");
  sweep->add_option("--figure", figure, "6a | 6b | 6c | 7a | 7b")
      ->required();
  sweep->add_option("--out", out, "CSV file (stdout otherwise)");

  CLI::App* metrics =
      app.add_subcommand("metrics", "Closed-form metric row for one config");
  metrics->add_option("--K", K, "Number of users");
  metrics->add_option("--k", k, "Polynomial degree bound");
  metrics->add_option("--Np", n_p, "Subcarrier budget")->required();
  metrics->add_option("--out", out, "CSV file (stdout otherwise)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(construct)) return run_construct(K, k, q, N, out);
    if (app.got_subcommand(verify))
      return run_verify(K, k, q, N, in, max_checks);
    if (app.got_subcommand(simulate)) {
      h2df::McConfig cfg;
      cfg.K = K;
      cfg.k = k;
      cfg.q = q;
      cfg.N = N;
      cfg.attack = h2df::attack_kind_from_name(attack);
      cfg.strategy = h2df::attack_strategy_from_name(strategy);
      if (victim >= 0) cfg.victim_lu = static_cast<uint32_t>(victim);
      cfg.rho = rho;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.path = h2df::feature_path_from_name(path);
      cfg.snr_db = snr_db;
      cfg.n_t = n_t;
      cfg.target_pf = target_pf;
      cfg.r = r;
      cfg.calib_trials = calib_trials;
      cfg.workers = workers;
      return run_simulate(cfg, out);
    }
    if (app.got_subcommand(sweep)) return run_sweep(figure, out);
    if (app.got_subcommand(metrics))
      return run_metrics(K, k, n_p, out);
  } catch (const h2df::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
