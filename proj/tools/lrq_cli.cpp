// Command-line surface for the generalized Littlewood-Richardson
// coefficients: single queries, tableau listings, bulk JSON tables with
// a persistent cache, and the verification suites.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "lrq/coeffs.hpp"
#include "lrq/ktableau.hpp"
#include "lrq/partition.hpp"
#include "lrq/symfunc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lrq::Partition parse_partition_flag(const std::string& text,
                                    const char* flag) {
  try {
    return lrq::Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

struct CoeffArgs {
  int k = 1;
  std::string kappa, lambda, mu, nu;
  std::string method = "tableau";
  bool normalized = false;
  bool json = false;
};

int run_coeff(const CoeffArgs& args) {
  lrq::CoeffKey key{args.k, parse_partition_flag(args.kappa, "kappa"),
                    parse_partition_flag(args.lambda, "lambda"),
                    parse_partition_flag(args.mu, "mu"),
                    parse_partition_flag(args.nu, "nu")};
  lrq::Method method = lrq::parse_method(args.method);

  auto emit = [&](const lrq::LaurentPoly& poly, const std::string& label) {
    lrq::LaurentPoly shown =
        args.normalized ? lrq::coeff_normalized(key) : poly;
    if (args.json) {
      std::cout << shown.to_json().dump() << "\n";
    } else {
      if (!label.empty()) std::cout << label << ": ";
      std::cout << shown.to_string() << "\n";
    }
  };

  if (method == lrq::Method::tableau) {
    emit(lrq::coeff_tableau(key), "");
    return kExitOk;
  }
  if (method == lrq::Method::oracle) {
    emit(lrq::coeff_oracle(key), "");
    return kExitOk;
  }
  lrq::LaurentPoly by_tableau = lrq::coeff_tableau(key);
  lrq::LaurentPoly by_oracle = lrq::coeff_oracle(key);
  emit(by_tableau, "tableau");
  emit(by_oracle, "oracle");
  bool match = by_tableau == by_oracle;
  std::cout << (match ? "match" : "MISMATCH") << "\n";
  return match ? kExitOk : kExitMismatch;
}

struct TableauxArgs {
  int k = 1;
  std::string lambda, mu, nu, kappa;
  bool lattice = false;
};

int run_tableaux(const TableauxArgs& args) {
  lrq::Partition lambda = parse_partition_flag(args.lambda, "lambda");
  lrq::Partition mu = parse_partition_flag(args.mu, "mu");
  lrq::Partition nu = parse_partition_flag(args.nu, "nu");
  lrq::Partition kappa = parse_partition_flag(args.kappa, "kappa");
  if (!lrq::contains(mu, lambda)) {
    throw UsageError("mu not contained in lambda");
  }
  std::vector<lrq::KTableau> tableaux;
  try {
    tableaux = lrq::enumerate_ktableaux(lrq::SkewShape(lambda, mu), nu, kappa,
                                        args.k, args.lattice);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const lrq::KTableau& t : tableaux) {
    std::cout << t.render();
    std::cout << "c(T) = " << t.statistic().to_string() << ", word =";
    for (int a : t.reading_word(kappa)) std::cout << ' ' << a;
    std::cout << "\n\n";
  }
  std::cout << tableaux.size() << " tableau"
            << (tableaux.size() == 1 ? "" : "x") << " ("
            << (args.lattice ? "lattice" : "no lattice filter") << ")\n";
  return kExitOk;
}

struct TableArgs {
  int k = 1;
  int max_size = 3;
  std::string out_path;
  std::string cache_path;
  int threads = 0;
};

int run_table(const TableArgs& args) {
  std::string cache_path = args.cache_path;
  if (cache_path.empty()) {
    if (const char* env = std::getenv("LRQ_CACHE")) cache_path = env;
  }

  // Load cached records; last writer wins, invalid lines rejected.
  std::map<lrq::CoeffKey, lrq::CoeffRecord> cached;
  if (!cache_path.empty()) {
    std::ifstream in(cache_path);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        lrq::CoeffRecord rec =
            lrq::CoeffRecord::from_json(nlohmann::json::parse(line));
        int d = rec.key.lambda.size() - rec.key.mu.size();
        lrq::LaurentPoly expect_big =
            rec.key.balanced() ? rec.little_c.substitute_t_squared().shifted(
                                     (1 - rec.key.k) * d)
                               : lrq::LaurentPoly::zero();
        if (expect_big == rec.big_c) cached[rec.key] = rec;
      } catch (const std::exception&) {
        // skip malformed cache lines
      }
    }
  }

  std::ofstream out(args.out_path);
  if (!out) throw IoError("cannot open output file: " + args.out_path);
  std::ofstream cache_out;
  if (!cache_path.empty()) {
    cache_out.open(cache_path, std::ios::app);
    if (!cache_out) throw IoError("cannot open cache file: " + cache_path);
  }

  long long computed = 0, from_cache = 0, written = 0;
  for (const lrq::CoeffKey& key : lrq::key_grid(args.max_size, args.k)) {
    if (key.k != args.k) continue;
    lrq::CoeffRecord rec;
    auto it = cached.find(key);
    if (it != cached.end()) {
      rec = it->second;
      ++from_cache;
    } else {
      rec.key = key;
      rec.little_c = lrq::coeff_tableau(key);
      rec.big_c = lrq::coeff_normalized(key);
      rec.method = lrq::Method::tableau;
      ++computed;
      if (cache_out && !rec.little_c.is_zero()) {
        cache_out << rec.to_json().dump() << "\n";
      }
    }
    if (rec.little_c.is_zero()) continue;
    out << rec.to_json().dump() << "\n";
    ++written;
  }
  if (!out) throw IoError("write failed: " + args.out_path);
  std::cout << "wrote " << written << " records to " << args.out_path << " ("
            << computed << " computed, " << from_cache << " cached)\n";
  return kExitOk;
}

struct VerifyArgs {
  int max_size = 4;
  int k_max = 2;
  std::vector<std::string> checks;
  int threads = 0;
};

int run_verify(const VerifyArgs& args) {
  std::set<std::string> selected(args.checks.begin(), args.checks.end());
  if (selected.empty()) {
    selected = {"cross", "unimodal", "hpairing", "commutation", "gm"};
  }
  bool all_ok = true;

  auto report = [&](const std::string& name, bool ok, long long checked,
                    double seconds, const std::string& detail) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << ": " << checked
              << " checks in " << seconds << "s";
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  };
  auto timed = [](auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  if (selected.count("cross")) {
    lrq::SweepReport r;
    double secs = timed([&] {
      r = lrq::cross_validate(args.max_size, args.k_max, args.threads);
    });
    std::string detail;
    if (!r.ok()) {
      detail = "first mismatch: k=" + std::to_string(r.counterexamples[0].k) +
               " lambda=" + r.counterexamples[0].lambda.to_string();
    }
    report("cross", r.ok(), r.keys_checked, secs, detail);
  }
  if (selected.count("unimodal")) {
    lrq::SweepReport r;
    double secs = timed([&] {
      r = lrq::sweep_symmetry_unimodality(args.max_size, args.k_max,
                                          args.threads);
    });
    report("unimodal", r.ok(), r.keys_checked, secs, "");
  }
  if (selected.count("hpairing")) {
    long long checked = 0;
    bool ok = true;
    double secs = timed([&] {
      for (int k = 1; k <= args.k_max; ++k) {
        for (int ls = 0; ls <= args.max_size; ++ls) {
          for (const lrq::Partition& lambda : lrq::partitions_of(ls)) {
            for (const lrq::Partition& mu : lrq::subpartitions_of(lambda)) {
              lrq::SkewShape shape(lambda, mu);
              for (const lrq::Partition& nu :
                   lrq::partitions_of(shape.cell_count())) {
                ++checked;
                lrq::LaurentPoly lhs = lrq::macdonald_inner(
                    lrq::skew_schur_in_p(shape),
                    lrq::to_basis(lrq::SymFunc::basis_element(lrq::Basis::h,
                                                              nu),
                                  lrq::Basis::p),
                    k);
                lrq::LaurentPoly rhs;
                for (const lrq::KTableau& t : lrq::enumerate_ktableaux(
                         shape, nu, lrq::Partition{}, k, false)) {
                  rhs += t.statistic();
                }
                ok = ok && lhs == rhs;
              }
            }
          }
        }
      }
    });
    report("hpairing", ok, checked, secs, "");
  }
  if (selected.count("commutation")) {
    long long checked = 0;
    bool ok = true;
    double secs = timed([&] {
      int bound = std::min(args.max_size, 3);
      for (int k = 1; k <= args.k_max; ++k) {
        for (int n = 1; n <= bound; ++n) {
          for (int m = 1; m <= bound; ++m) {
            ++checked;
            ok = ok && lrq::verify_commutation(n, m, k, args.max_size);
            ok = ok && lrq::verify_commutation_bilinear(n, m, k,
                                                        args.max_size);
          }
        }
      }
    });
    report("commutation", ok, checked, secs, "");
  }
  if (selected.count("gm")) {
    long long checked = 0;
    bool ok = true;
    double secs = timed([&] {
      for (int k = 1; k <= args.k_max; ++k) {
        for (int m = 1; m <= std::max(args.max_size, 1); ++m) {
          ++checked;
          lrq::SymFunc lhs = lrq::g_in_h_expansion(m, k);
          lrq::SymFunc rhs = lrq::to_basis(
              lrq::rho_homomorphism(
                  lrq::SymFunc::basis_element(lrq::Basis::h, {m}), k),
              lrq::Basis::h);
          ok = ok && lhs == rhs;
        }
      }
    });
    report("gm", ok, checked, secs, "");
  }
  return all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Littlewood-Richardson polynomials at q=t^k"};
  app.require_subcommand(1);

  CoeffArgs coeff_args;
  CLI::App* coeff = app.add_subcommand(
      "coeff", "Compute one coefficient c^{kappa lambda}_{mu nu}(t)");
  coeff->add_option("--k", coeff_args.k, "Specialization exponent k")
      ->check(CLI::PositiveNumber);
  coeff->add_option("--kappa", coeff_args.kappa, "Partition kappa");
  coeff->add_option("--lambda", coeff_args.lambda, "Partition lambda");
  coeff->add_option("--mu", coeff_args.mu, "Partition mu");
  coeff->add_option("--nu", coeff_args.nu, "Partition nu");
  coeff->add_option("--method", coeff_args.method,
                    "tableau | oracle | both");
  coeff->add_flag("--normalized", coeff_args.normalized,
                  "Print the bar-invariant C form");
  coeff->add_flag("--json", coeff_args.json, "JSON polynomial output");

  TableauxArgs tab_args;
  CLI::App* tab = app.add_subcommand("tableaux", "List k-tableaux");
  tab->add_option("--k", tab_args.k, "Specialization exponent k")
      ->check(CLI::PositiveNumber);
  tab->add_option("--lambda", tab_args.lambda, "Outer shape");
  tab->add_option("--mu", tab_args.mu, "Inner shape");
  tab->add_option("--nu", tab_args.nu, "Outer content");
  tab->add_option("--kappa", tab_args.kappa, "Inner content");
  tab->add_flag("--lattice", tab_args.lattice, "Apply the lattice filter");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table", "Write all nonzero coefficients up to a size bound");
  table->add_option("--k", table_args.k, "Specialization exponent k")
      ->check(CLI::PositiveNumber);
  table->add_option("--max-size", table_args.max_size, "Bound on |lambda|, |nu|")
      ->check(CLI::NonNegativeNumber);
  table->add_option("--out", table_args.out_path, "Output NDJSON path")
      ->required();
  table->add_option("--cache", table_args.cache_path,
                    "Cache NDJSON path (default: $LRQ_CACHE)");
  table->add_option("--threads", table_args.threads, "Sweep parallelism");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--max-size", verify_args.max_size, "Size bound")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--k-max", verify_args.k_max, "Largest k")
      ->check(CLI::PositiveNumber);
  verify->add_option("--checks", verify_args.checks,
                     "Subset of: cross unimodal hpairing commutation gm")
      ->delimiter(',');
  verify->add_option("--threads", verify_args.threads, "Sweep parallelism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeff->parsed()) return run_coeff(coeff_args);
    if (tab->parsed()) return run_tableaux(tab_args);
    if (table->parsed()) return run_table(table_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
