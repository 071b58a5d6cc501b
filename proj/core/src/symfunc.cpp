#include "lrq/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "lrq/characters.hpp"

namespace lrq {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "p") return Basis::p;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "m") return Basis::m;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

SymFunc SymFunc::unit(Basis basis) {
  return basis_element(basis, Partition{});
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& index) {
  SymFunc f(basis);
  f.add_term(index, LaurentPoly::one());
  return f;
}

LaurentPoly SymFunc::coeff(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

void SymFunc::add_term(const Partition& index, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(index, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::operator+(const SymFunc& rhs) const {
  if (basis_ != rhs.basis_) {
    throw std::invalid_argument("SymFunc::operator+: basis mismatch");
  }
  SymFunc out = *this;
  for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, c);
  return out;
}

SymFunc SymFunc::operator-(const SymFunc& rhs) const {
  if (basis_ != rhs.basis_) {
    throw std::invalid_argument("SymFunc::operator-: basis mismatch");
  }
  SymFunc out = *this;
  for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, -c);
  return out;
}

SymFunc SymFunc::operator*(const LaurentPoly& scalar) const {
  SymFunc out(basis_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, c * scalar);
  return out;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << basis_name(basis_) << "["
        << idx.to_string() << "]";
  }
  return out.str();
}

namespace {

using Matrix = std::vector<std::vector<Rat>>;  // [row][col]

Matrix invert(Matrix a) {
  std::size_t n = a.size();
  Matrix inv(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Per-degree basis transition data: columns of to_p express basis
// elements in p coordinates; from_p is the inverse.
struct Transition {
  std::vector<Partition> parts;      // partitions of the degree
  std::map<Partition, int> index;
  Matrix to_p;                       // [p-row][element-col]
  Matrix from_p;
};

Rat zee_rat(const Partition& mu) { return Rat(zee(mu)); }

// One-part h_n or e_n in p coordinates over partitions of n.
std::map<Partition, Rat> generator_in_p(int n, bool elementary) {
  std::map<Partition, Rat> out;
  for (const Partition& mu : partitions_of(n)) {
    Rat c = Rat(1) / zee_rat(mu);
    if (elementary && (n - mu.length()) % 2 != 0) c = -c;
    out.emplace(mu, c);
  }
  return out;
}

std::map<Partition, Rat> p_concat_product(const std::map<Partition, Rat>& a,
                                          const std::map<Partition, Rat>& b) {
  std::map<Partition, Rat> out;
  for (const auto& [mu, cm] : a) {
    for (const auto& [nu, cn] : b) {
      std::vector<int> parts = mu.parts();
      parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      out[Partition(std::move(parts))] += cm * cn;
    }
  }
  return out;
}

const Transition& transition(Basis basis, int degree) {
  // recursive_mutex: building the m transition recurses into s.
  static std::recursive_mutex mutex;
  static std::map<std::pair<int, int>, Transition> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(static_cast<int>(basis), degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Transition tr;
  tr.parts = partitions_of(degree);
  int n = static_cast<int>(tr.parts.size());
  for (int i = 0; i < n; ++i) tr.index.emplace(tr.parts[i], i);
  tr.to_p.assign(n, std::vector<Rat>(n, 0));

  auto fill_column = [&](int col, const std::map<Partition, Rat>& vec) {
    for (const auto& [rho, c] : vec) tr.to_p[tr.index.at(rho)][col] = c;
  };

  switch (basis) {
    case Basis::p:
      for (int i = 0; i < n; ++i) tr.to_p[i][i] = 1;
      break;
    case Basis::s:
      for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row) {
          tr.to_p[row][col] =
              Rat(mn_character(tr.parts[col], tr.parts[row])) /
              zee_rat(tr.parts[row]);
        }
      }
      break;
    case Basis::h:
    case Basis::e:
      for (int col = 0; col < n; ++col) {
        std::map<Partition, Rat> vec{{Partition{}, Rat(1)}};
        for (int part : tr.parts[col].parts()) {
          vec = p_concat_product(vec, generator_in_p(part, basis == Basis::e));
        }
        fill_column(col, vec);
      }
      break;
    case Basis::m: {
      // m_mu in s coordinates is column mu of (K^T)^{-1}, K the Kostka
      // matrix; compose with the s -> p transition.
      const Transition& s_tr = transition(Basis::s, degree);
      Matrix kt(n, std::vector<Rat>(n, 0));
      for (int lam = 0; lam < n; ++lam) {
        for (int mu = 0; mu < n; ++mu) {
          kt[mu][lam] = Rat(classical_tableau_count(
              SkewShape(tr.parts[lam], Partition{}), tr.parts[mu]));
        }
      }
      Matrix kt_inv = invert(std::move(kt));
      for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row) {
          Rat sum = 0;
          for (int s = 0; s < n; ++s) {
            sum += s_tr.to_p[row][s] * kt_inv[s][col];
          }
          tr.to_p[row][col] = sum;
        }
      }
      break;
    }
  }
  tr.from_p = invert(tr.to_p);
  return cache.emplace(key, std::move(tr)).first->second;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  // Route through p coordinates degree by degree.
  SymFunc in_p(Basis::p);
  if (f.basis() == Basis::p) {
    in_p = f;
  } else {
    for (const auto& [idx, c] : f.terms()) {
      const Transition& tr = transition(f.basis(), idx.size());
      int col = tr.index.at(idx);
      for (std::size_t row = 0; row < tr.parts.size(); ++row) {
        if (tr.to_p[row][col] == 0) continue;
        in_p.add_term(tr.parts[row], c * tr.to_p[row][col]);
      }
    }
  }
  if (target == Basis::p) return in_p;

  SymFunc out(target);
  for (const auto& [rho, c] : in_p.terms()) {
    const Transition& tr = transition(target, rho.size());
    int row_p = tr.index.at(rho);
    for (std::size_t col = 0; col < tr.parts.size(); ++col) {
      if (tr.from_p[col][row_p] == 0) continue;
      out.add_term(tr.parts[col], c * tr.from_p[col][row_p]);
    }
  }
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = to_basis(f, Basis::p);
  SymFunc gp = to_basis(g, Basis::p);
  SymFunc prod(Basis::p);
  for (const auto& [mu, cm] : fp.terms()) {
    for (const auto& [nu, cn] : gp.terms()) {
      std::vector<int> parts = mu.parts();
      parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      prod.add_term(Partition(std::move(parts)), cm * cn);
    }
  }
  return to_basis(prod, f.basis());
}

namespace {

LaurentPoly macdonald_diag(const Partition& mu, int k) {
  LaurentPoly d = LaurentPoly::monomial(0, zee_rat(mu));
  for (int part : mu.parts()) d *= LaurentPoly::geometric(part, k);
  return d;
}

LaurentPoly hermitian_diag(const Partition& mu, int k) {
  LaurentPoly d = LaurentPoly::monomial(0, zee_rat(mu));
  for (int part : mu.parts()) {
    // t^{(1-k)j} + t^{(3-k)j} + ... + t^{(k-1)j}
    d *= LaurentPoly::geometric(2 * part, k).shifted((1 - k) * part);
  }
  return d;
}

}  // namespace

LaurentPoly macdonald_inner(const SymFunc& f, const SymFunc& g, int k) {
  SymFunc fp = to_basis(f, Basis::p);
  SymFunc gp = to_basis(g, Basis::p);
  LaurentPoly out;
  for (const auto& [mu, cf] : fp.terms()) {
    auto it = gp.terms().find(mu);
    if (it == gp.terms().end()) continue;
    out += cf * it->second * macdonald_diag(mu, k);
  }
  return out;
}

LaurentPoly hermitian_inner(const SymFunc& f, const SymFunc& g, int k) {
  SymFunc fp = to_basis(f, Basis::p);
  SymFunc gp = to_basis(g, Basis::p);
  LaurentPoly out;
  for (const auto& [mu, cf] : fp.terms()) {
    auto it = gp.terms().find(mu);
    if (it == gp.terms().end()) continue;
    out += cf * it->second.bar() * hermitian_diag(mu, k);
  }
  return out;
}

SymFunc rho_homomorphism(const SymFunc& f, int k) {
  SymFunc fp = to_basis(f, Basis::p);
  SymFunc out(Basis::p);
  for (const auto& [mu, c] : fp.terms()) {
    LaurentPoly factor = LaurentPoly::one();
    for (int part : mu.parts()) factor *= LaurentPoly::geometric(part, k);
    out.add_term(mu, c * factor);
  }
  return out;
}

SymFunc g_in_h_expansion(int m, int k) {
  SymFunc out(Basis::h);
  for (const Partition& pi : partitions_of(m, k)) {
    int l = pi.length();
    LaurentPoly a_pi;
    std::vector<int> beta(pi.parts().rbegin(), pi.parts().rend());  // ascending
    do {
      // all 0 <= a_1 < ... < a_l <= k-1
      std::vector<int> choice(l);
      for (int i = 0; i < l; ++i) choice[i] = i;
      while (true) {
        int exponent = 0;
        for (int i = 0; i < l; ++i) exponent += choice[i] * beta[i];
        a_pi += LaurentPoly::monomial(exponent, 1);
        int i = l - 1;
        while (i >= 0 && choice[i] == k - l + i) --i;
        if (i < 0) break;
        ++choice[i];
        for (int j = i + 1; j < l; ++j) choice[j] = choice[j - 1] + 1;
      }
    } while (std::next_permutation(beta.begin(), beta.end()));
    out.add_term(pi, a_pi);
  }
  return out;
}

SymFunc skew_schur_in_p(const SkewShape& shape) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, SymFunc> cache;
  auto key = std::make_pair(shape.outer, shape.inner);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SymFunc in_s(Basis::s);
  for (const Partition& pi : partitions_of(shape.cell_count())) {
    std::int64_t c = classical_lr(shape.outer, shape.inner, pi);
    if (c != 0) in_s.add_term(pi, LaurentPoly::monomial(0, c));
  }
  SymFunc result = to_basis(in_s, Basis::p);
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(result)).first->second;
}

namespace {

// Removes one part j from every p-term, scaling by multiplicity, then
// by factor. Realizes factor * d/dp_j on the p basis.
SymFunc lower_pj(const SymFunc& fp, int j, const LaurentPoly& factor) {
  SymFunc out(Basis::p);
  for (const auto& [mu, c] : fp.terms()) {
    int mult = static_cast<int>(
        std::count(mu.parts().begin(), mu.parts().end(), j));
    if (mult == 0) continue;
    std::vector<int> parts = mu.parts();
    parts.erase(std::find(parts.begin(), parts.end(), j));
    out.add_term(Partition(std::move(parts)), c * factor * Rat(mult));
  }
  return out;
}

template <typename FactorFn>
SymFunc schur_lower_impl(const Partition& nu, const SymFunc& f,
                         const FactorFn& factor) {
  SymFunc fp = to_basis(f, Basis::p);
  SymFunc out(Basis::p);
  for (const Partition& rho : partitions_of(nu.size())) {
    std::int64_t chi = mn_character(nu, rho);
    if (chi == 0) continue;
    SymFunc g = fp;
    for (int j : rho.parts()) g = lower_pj(g, j, factor(j));
    if (g.is_zero()) continue;
    for (const auto& [idx, c] : g.terms()) {
      out.add_term(idx, c * (Rat(chi) / zee_rat(rho)));
    }
  }
  return out;
}

}  // namespace

SymFunc schur_lower(const Partition& nu, const SymFunc& f, int k) {
  return schur_lower_impl(nu, f, [k](int j) {
    return LaurentPoly::geometric(j, k) * Rat(j);
  });
}

SymFunc schur_lower_hermitian(const Partition& nu, const SymFunc& f, int k) {
  return schur_lower_impl(nu, f, [k](int j) {
    return LaurentPoly::geometric(2 * j, k).shifted((1 - k) * j) * Rat(j);
  });
}

namespace {

bool verify_commutation_impl(int n, int m, int k, int test_degree,
                             bool hermitian) {
  auto lower = [&](int size, const SymFunc& f) {
    Partition row = size > 0 ? Partition{size} : Partition{};
    return hermitian ? schur_lower_hermitian(row, f, k)
                     : schur_lower(row, f, k);
  };
  auto raise = [&](int size, const SymFunc& f) {
    Partition row = size > 0 ? Partition{size} : Partition{};
    return multiply(to_basis(SymFunc::basis_element(Basis::s, row), Basis::p),
                    f);
  };
  for (int d = 0; d <= test_degree; ++d) {
    for (const Partition& pi : partitions_of(d)) {
      SymFunc f = to_basis(SymFunc::basis_element(Basis::s, pi), Basis::p);
      SymFunc lhs = lower(n, raise(m, f));
      SymFunc rhs = SymFunc::zero(Basis::p);
      for (int l = 0; l <= std::min(n, m); ++l) {
        LaurentPoly binom = hermitian ? quantum_binomial(k + l - 1, l)
                                      : gaussian_binomial(k + l - 1, l);
        rhs = rhs + raise(m - l, lower(n - l, f)) * binom;
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_commutation(int n, int m, int k, int test_degree) {
  return verify_commutation_impl(n, m, k, test_degree, true);
}

bool verify_commutation_bilinear(int n, int m, int k, int test_degree) {
  return verify_commutation_impl(n, m, k, test_degree, false);
}

}  // namespace lrq
