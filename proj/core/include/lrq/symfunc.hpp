#pragma once

#include <map>
#include <string>

#include "lrq/laurent.hpp"
#include "lrq/partition.hpp"

namespace lrq {

enum class Basis { p, h, e, m, s };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// A finite formal linear combination of basis elements indexed by
/// partitions, with LaurentPoly coefficients, tagged with its basis.
/// Inhomogeneous elements are allowed. Immutable value semantics.
class SymFunc {
 public:
  explicit SymFunc(Basis basis) : basis_(basis) {}

  static SymFunc zero(Basis basis) { return SymFunc(basis); }
  static SymFunc unit(Basis basis);
  static SymFunc basis_element(Basis basis, const Partition& index);

  Basis basis() const { return basis_; }
  const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Partition& index) const;

  void add_term(const Partition& index, const LaurentPoly& coeff);

  SymFunc operator+(const SymFunc& rhs) const;  // requires same basis
  SymFunc operator-(const SymFunc& rhs) const;
  SymFunc operator*(const LaurentPoly& scalar) const;

  bool operator==(const SymFunc&) const = default;

  std::string to_string() const;

 private:
  Basis basis_;
  std::map<Partition, LaurentPoly> terms_;  // no zero coefficients
};

/// Change of basis; exact. s <-> p via characters over z(mu); h, e via
/// Newton-type transitions; m via the (inverse) Kostka matrix through s.
SymFunc to_basis(const SymFunc& f, Basis target);

/// Ring product, returned in the basis of f. In the p basis this is
/// concatenation of parts.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Macdonald inner product at q = t^k, diagonal on power sums:
/// (p_mu, p_mu) = z(mu) prod_j (1 + t^{mu_j} + ... + t^{(k-1) mu_j}).
/// Bilinear; coefficients may be rational.
LaurentPoly macdonald_inner(const SymFunc& f, const SymFunc& g, int k);

/// Hermitian form <f, g>_k = (f, t^{(1-k)d} bar(g))_{t^{2k}, t^2},
/// conjugate-linear in the second slot. Diagonal on power sums with
/// <p_mu, p_mu>_k = z(mu) prod_i (t^{(1-k)mu_i} + t^{(3-k)mu_i} + ...
/// + t^{(k-1)mu_i}).
LaurentPoly hermitian_inner(const SymFunc& f, const SymFunc& g, int k);

/// The homomorphism p_j -> (1 + t^j + ... + t^{(k-1)j}) p_j, applied
/// multiplicatively across parts. Returns a p-basis element.
SymFunc rho_homomorphism(const SymFunc& f, int k);

/// g_m = rho(h_m) expanded in the h basis via the closed coefficient
/// formula a_pi(t) = sum over rearrangements beta of pi and strictly
/// increasing exponent choices 0 <= a_1 < ... < a_l <= k-1 of
/// t^{a_1 beta_1 + ... + a_l beta_l}.
SymFunc g_in_h_expansion(int m, int k);

/// Skew Schur function s_{lambda/mu} in the p basis, via the classical
/// LR expansion s_{lambda/mu} = sum_pi c^lambda_{mu pi} s_pi.
SymFunc skew_schur_in_p(const SkewShape& shape);

/// s*_nu f: the adjoint of multiplication by s_nu under (,)_{t^k,t}.
/// The adjoint of multiplication by p_j is
/// j (1 + t^j + ... + t^{(k-1)j}) d/dp_j. Returns a p-basis element.
SymFunc schur_lower(const Partition& nu, const SymFunc& f, int k);

/// Same, but adjoint under the Hermitian form <,>_k; the p_j adjoint
/// factor is j (t^{(1-k)j} + t^{(3-k)j} + ... + t^{(k-1)j}) d/dp_j.
SymFunc schur_lower_hermitian(const Partition& nu, const SymFunc& f, int k);

/// Checks q^{(n)} p^{(m)} = sum_l [k+l-1 choose l]_t p^{(m-l)} q^{(n-l)}
/// on every s_pi with |pi| <= test_degree. The Hermitian variant uses
/// balanced (bar-invariant) quantum binomials with the <,>_k adjoint;
/// the bilinear variant uses one-sided Gaussian binomials with the
/// (,)_{t^k,t} adjoint.
bool verify_commutation(int n, int m, int k, int test_degree);
bool verify_commutation_bilinear(int n, int m, int k, int test_degree);

}  // namespace lrq
