#pragma once

#include <string>
#include <vector>

#include "lrq/laurent.hpp"
#include "lrq/partition.hpp"

#include "json.hpp"

namespace lrq {

/// Index of a generalized Littlewood-Richardson polynomial
/// c^{kappa lambda}_{mu nu}(t) at q = t^k.
struct CoeffKey {
  int k;
  Partition kappa, lambda, mu, nu;

  auto operator<=>(const CoeffKey&) const = default;

  /// True iff the coefficient can be nonzero: mu in lambda, kappa in nu,
  /// and |lambda| - |mu| = |nu| - |kappa|.
  bool balanced() const;
};

enum class Method { tableau, oracle, both };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct CoeffRecord {
  CoeffKey key;
  LaurentPoly little_c;
  LaurentPoly big_c;
  Method method = Method::tableau;

  nlohmann::json to_json() const;
  static CoeffRecord from_json(const nlohmann::json& j);
};

/// c^{kappa lambda}_{mu nu}(t) as the statistic-weighted count over
/// lattice k-tableaux of shape lambda-mu, content nu-kappa. Memoized.
LaurentPoly coeff_tableau(const CoeffKey& key);

/// The same coefficient by the independent inner-product route
/// (s_{lambda/mu}, s_{nu/kappa})_{t^k,t}; asserts integer coefficients.
LaurentPoly coeff_oracle(const CoeffKey& key);

/// C^{kappa lambda}_{mu nu}(t) = t^{(1-k)(|lambda|-|mu|)} c(t^2).
LaurentPoly coeff_normalized(const CoeffKey& key);

/// All keys with |lambda|, |nu| <= max_size, k <= k_max that satisfy the
/// balance conditions, in deterministic order.
std::vector<CoeffKey> key_grid(int max_size, int k_max);

struct SweepReport {
  long long keys_checked = 0;
  long long nonzero = 0;
  std::vector<CoeffKey> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Asserts is_symmetric_unimodal(coeff_normalized(key)) over the grid.
SweepReport sweep_symmetry_unimodality(int max_size, int k_max,
                                       int threads = 0);

/// Asserts coeff_tableau == coeff_oracle over the grid.
SweepReport cross_validate(int max_size, int k_max, int threads = 0);

}  // namespace lrq
