#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrq {

using Int = boost::multiprecision::cpp_int;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Normalized on construction (trailing zeros stripped); equality and
/// ordering are structural on the normalized form.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument if parts are negative or increase.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int part(std::size_t i) const {  // zero-padded access
    return i < parts_.size() ? parts_[i] : 0;
  }
  int size() const { return size_; }                        // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

  /// "3,2,1"; the empty partition renders as "".
  std::string to_string() const;

  /// Parses the comma-separated format; "" and "0" give the empty partition.
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Skew diagram outer - inner, inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  /// Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition outer_, Partition inner_);

  int cell_count() const { return outer.size() - inner.size(); }

  /// Cells (row, col) in row-major order, 0-based.
  std::vector<std::pair<int, int>> cells() const;
};

using Word = std::vector<int>;

bool contains(const Partition& inner, const Partition& outer);

/// All partitions of n in reverse-lexicographic order; p(0) = {empty}.
std::vector<Partition> partitions_of(int n, int max_length = -1);

/// All partitions contained in lambda (any size), deterministic order.
std::vector<Partition> subpartitions_of(const Partition& lambda);

/// z(mu) = prod_i i^{m_i} m_i! over part multiplicities m_i.
Int zee(const Partition& mu);

/// Reading word of the tableau of shape lambda with row i filled by i:
/// lambda_1 ones, then lambda_2 twos, etc.
Word word_of_partition(const Partition& lambda);

/// Lattice permutation (Yamanouchi) test: every prefix has at least as
/// many i's as (i+1)'s, for all i.
bool is_lattice(const Word& word);

/// |Tab(shape, content)|: semistandard fillings (rows weakly increase,
/// columns strictly increase) with content_a cells labeled a.
std::int64_t classical_tableau_count(const SkewShape& shape,
                                     const Partition& content);

/// Classical Littlewood-Richardson coefficient c^lambda_{mu nu}, counted
/// as lattice-word semistandard tableaux of shape lambda-mu, content nu.
/// Zero when mu is not contained in lambda or sizes don't balance.
std::int64_t classical_lr(const Partition& lambda, const Partition& mu,
                          const Partition& nu);

}  // namespace lrq
