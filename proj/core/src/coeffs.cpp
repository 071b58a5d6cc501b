#include "lrq/coeffs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lrq/ktableau.hpp"
#include "lrq/symfunc.hpp"

namespace lrq {

bool CoeffKey::balanced() const {
  return contains(mu, lambda) && contains(kappa, nu) &&
         lambda.size() - mu.size() == nu.size() - kappa.size();
}

std::string method_name(Method m) {
  switch (m) {
    case Method::tableau: return "tableau";
    case Method::oracle: return "oracle";
    case Method::both: return "both";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "tableau") return Method::tableau;
  if (name == "oracle") return Method::oracle;
  if (name == "both") return Method::both;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

nlohmann::json partition_json(const Partition& p) {
  return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
  return Partition(j.get<std::vector<int>>());
}

}  // namespace

nlohmann::json CoeffRecord::to_json() const {
  return nlohmann::json{{"k", key.k},
                        {"kappa", partition_json(key.kappa)},
                        {"lambda", partition_json(key.lambda)},
                        {"mu", partition_json(key.mu)},
                        {"nu", partition_json(key.nu)},
                        {"c", little_c.to_json()},
                        {"C", big_c.to_json()},
                        {"method", method_name(method)}};
}

CoeffRecord CoeffRecord::from_json(const nlohmann::json& j) {
  CoeffRecord rec;
  rec.key.k = j.at("k").get<int>();
  rec.key.kappa = partition_from_json(j.at("kappa"));
  rec.key.lambda = partition_from_json(j.at("lambda"));
  rec.key.mu = partition_from_json(j.at("mu"));
  rec.key.nu = partition_from_json(j.at("nu"));
  rec.little_c = LaurentPoly::from_json(j.at("c"));
  rec.big_c = LaurentPoly::from_json(j.at("C"));
  rec.method = parse_method(j.at("method").get<std::string>());
  return rec;
}

LaurentPoly coeff_tableau(const CoeffKey& key) {
  if (!key.balanced()) return LaurentPoly::zero();
  static std::mutex mutex;
  static std::map<CoeffKey, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SkewShape shape(key.lambda, key.mu);
  LaurentPoly sum;
  for (const KTableau& t :
       enumerate_ktableaux(shape, key.nu, key.kappa, key.k, true)) {
    sum += t.statistic();
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, sum);
  return sum;
}

LaurentPoly coeff_oracle(const CoeffKey& key) {
  if (!key.balanced()) return LaurentPoly::zero();
  LaurentPoly result =
      macdonald_inner(skew_schur_in_p(SkewShape(key.lambda, key.mu)),
                      skew_schur_in_p(SkewShape(key.nu, key.kappa)), key.k);
  result.require_integral("coeff_oracle");
  return result;
}

LaurentPoly coeff_normalized(const CoeffKey& key) {
  if (!key.balanced()) return LaurentPoly::zero();
  int d = key.lambda.size() - key.mu.size();
  return coeff_tableau(key).substitute_t_squared().shifted((1 - key.k) * d);
}

std::vector<CoeffKey> key_grid(int max_size, int k_max) {
  std::vector<CoeffKey> keys;
  for (int k = 1; k <= k_max; ++k) {
    for (int ls = 0; ls <= max_size; ++ls) {
      for (const Partition& lambda : partitions_of(ls)) {
        for (const Partition& mu : subpartitions_of(lambda)) {
          int d = lambda.size() - mu.size();
          for (int ns = 0; ns <= max_size; ++ns) {
            for (const Partition& nu : partitions_of(ns)) {
              for (const Partition& kappa : subpartitions_of(nu)) {
                if (nu.size() - kappa.size() != d) continue;
                keys.push_back(CoeffKey{k, kappa, lambda, mu, nu});
              }
            }
          }
        }
      }
    }
  }
  return keys;
}

namespace {

// Applies check to every key, parallelized over contiguous chunks with a
// deterministic merge. check returns true on pass.
template <typename Check>
SweepReport sweep(const std::vector<CoeffKey>& keys, int threads,
                  const Check& check) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads,
                     static_cast<int>(std::max<std::size_t>(keys.size(), 1)));

  std::vector<SweepReport> partial(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      std::size_t lo = keys.size() * w / threads;
      std::size_t hi = keys.size() * (w + 1) / threads;
      for (std::size_t i = lo; i < hi; ++i) {
        ++partial[w].keys_checked;
        bool nonzero = false;
        if (!check(keys[i], nonzero)) {
          partial[w].counterexamples.push_back(keys[i]);
        }
        if (nonzero) ++partial[w].nonzero;
      }
    });
  }
  for (auto& t : pool) t.join();

  SweepReport report;
  for (const SweepReport& p : partial) {
    report.keys_checked += p.keys_checked;
    report.nonzero += p.nonzero;
    report.counterexamples.insert(report.counterexamples.end(),
                                  p.counterexamples.begin(),
                                  p.counterexamples.end());
  }
  return report;
}

}  // namespace

SweepReport sweep_symmetry_unimodality(int max_size, int k_max, int threads) {
  return sweep(key_grid(max_size, k_max), threads,
               [](const CoeffKey& key, bool& nonzero) {
                 LaurentPoly big = coeff_normalized(key);
                 nonzero = !big.is_zero();
                 return !nonzero || big.is_symmetric_unimodal();
               });
}

SweepReport cross_validate(int max_size, int k_max, int threads) {
  return sweep(key_grid(max_size, k_max), threads,
               [](const CoeffKey& key, bool& nonzero) {
                 LaurentPoly by_tableau = coeff_tableau(key);
                 nonzero = !by_tableau.is_zero();
                 return by_tableau == coeff_oracle(key);
               });
}

}  // namespace lrq
