#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrq/laurent.hpp"
#include "lrq/partition.hpp"

namespace lrq {

/// A monomial cell entry a*t^b. The total order compares the t-exponent
/// first, then the letter ("replace t by a large positive number").
struct MonomialEntry {
  // Field order matters: the defaulted comparison is (texp, letter)
  // lexicographic, which is exactly the required order.
  int texp;    // 0 <= b <= k-1
  int letter;  // a >= 1

  auto operator<=>(const MonomialEntry&) const = default;
};

/// A semistandard filling of a skew shape by monomial entries: rows
/// weakly increase, columns strictly increase, in the entry order above.
struct KTableau {
  SkewShape shape;
  int k;
  /// entries[i] labels the i-th cell of shape.cells() (row-major).
  std::vector<MonomialEntry> entries;

  /// One classical partial tableau per t-exponent 0..k-1, as cell->letter
  /// maps; their cell sets partition the shape.
  std::vector<std::map<std::pair<int, int>, int>> layers() const;

  /// c(T) = t^{sum of entry exponents}.
  LaurentPoly statistic() const;

  /// w(kappa) w(T^0) w(T^1) ...; each layer read right to left, top to
  /// bottom.
  Word reading_word(const Partition& kappa) const;

  /// One row per line; cells as "a" (b=0) or "a.t^b"; inner cells as ".".
  std::string render() const;
};

/// All semistandard k-tableaux of the given shape whose t=1 content is
/// content_outer - content_inner (letter a occurs outer_a - inner_a
/// times); with lattice set, only those whose reading word prefixed by
/// w(content_inner) is a lattice permutation. Deterministic order.
/// Throws std::invalid_argument when content_inner is not contained in
/// content_outer or the cell count does not match the content size.
std::vector<KTableau> enumerate_ktableaux(const SkewShape& shape,
                                          const Partition& content_outer,
                                          const Partition& content_inner,
                                          int k, bool lattice);

}  // namespace lrq
