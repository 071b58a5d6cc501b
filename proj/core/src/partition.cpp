#include "lrq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lrq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("Partition: negative part");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must weakly decrease");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) {
    parts_.pop_back();
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) {
      throw std::invalid_argument("Partition::parse: empty component");
    }
    std::size_t pos = 0;
    int value = std::stoi(token, &pos);
    if (pos != token.size()) {
      throw std::invalid_argument("Partition::parse: bad component '" + token +
                                  "'");
    }
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!contains(inner, outer)) {
    throw std::invalid_argument("SkewShape: inner not contained in outer");
  }
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < outer.length(); ++r) {
    for (int c = inner.part(r); c < outer.part(r); ++c) {
      out.emplace_back(r, c);
    }
  }
  return out;
}

bool contains(const Partition& inner, const Partition& outer) {
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

namespace {

void partitions_rec(int n, int max_part, int max_length,
                    std::vector<int>& prefix, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length >= 0 && static_cast<int>(prefix.size()) >= max_length) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(n - p, p, max_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, max_length, prefix, out);
  return out;
}

namespace {

void subpartitions_rec(const Partition& lambda, int row, int cap,
                       std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (row >= lambda.length()) return;
  for (int p = std::min(cap, lambda.part(row)); p >= 1; --p) {
    prefix.push_back(p);
    subpartitions_rec(lambda, row + 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> subpartitions_of(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  subpartitions_rec(lambda, 0, lambda.part(0), prefix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int zee(const Partition& mu) {
  Int result = 1;
  int i = 0;
  while (i < mu.length()) {
    int j = i;
    while (j < mu.length() && mu.parts()[j] == mu.parts()[i]) ++j;
    int mult = j - i;
    for (int m = 1; m <= mult; ++m) {
      result *= m;
      result *= mu.parts()[i];
    }
    i = j;
  }
  return result;
}

Word word_of_partition(const Partition& lambda) {
  Word word;
  for (int i = 0; i < lambda.length(); ++i) {
    word.insert(word.end(), lambda.parts()[i], i + 1);
  }
  return word;
}

bool is_lattice(const Word& word) {
  int max_letter = 0;
  for (int a : word) max_letter = std::max(max_letter, a);
  std::vector<int> count(max_letter + 2, 0);
  for (int a : word) {
    ++count[a];
    if (a > 1 && count[a] > count[a - 1]) return false;
  }
  return true;
}

namespace {

// Row-major backtracking over semistandard fillings; calls visit(word)
// for every complete filling, where word is the right-to-left, top-to-
// bottom reading word.
template <typename Visit>
void ssyt_rec(const std::vector<std::pair<int, int>>& cells, std::size_t idx,
              std::vector<int>& remaining, std::vector<int>& fill,
              const Visit& visit) {
  if (idx == cells.size()) {
    visit(fill);
    return;
  }
  auto [r, c] = cells[idx];
  int lo = 1;
  for (std::size_t j = 0; j < idx; ++j) {
    if (cells[j].first == r && cells[j].second == c - 1) {
      lo = std::max(lo, fill[j]);
    }
    if (cells[j].first == r - 1 && cells[j].second == c) {
      lo = std::max(lo, fill[j] + 1);
    }
  }
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    fill.push_back(v);
    ssyt_rec(cells, idx + 1, remaining, fill, visit);
    fill.pop_back();
    ++remaining[v - 1];
  }
}

template <typename Visit>
void for_each_ssyt(const SkewShape& shape, const Partition& content,
                   const Visit& visit) {
  if (shape.cell_count() != content.size()) return;
  auto cells = shape.cells();
  std::vector<int> remaining(content.parts().begin(), content.parts().end());
  std::vector<int> fill;
  ssyt_rec(cells, 0, remaining, fill, visit);
}

// Reading word of a row-major fill: rows in order, columns reversed.
Word reading_word_of_fill(const std::vector<std::pair<int, int>>& cells,
                          const std::vector<int>& fill) {
  Word word;
  std::size_t i = 0;
  while (i < cells.size()) {
    std::size_t j = i;
    while (j < cells.size() && cells[j].first == cells[i].first) ++j;
    for (std::size_t m = j; m > i; --m) word.push_back(fill[m - 1]);
    i = j;
  }
  return word;
}

}  // namespace

std::int64_t classical_tableau_count(const SkewShape& shape,
                                     const Partition& content) {
  std::int64_t count = 0;
  for_each_ssyt(shape, content, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::int64_t classical_lr(const Partition& lambda, const Partition& mu,
                          const Partition& nu) {
  if (!contains(mu, lambda)) return 0;
  if (lambda.size() != mu.size() + nu.size()) return 0;
  SkewShape shape(lambda, mu);
  auto cells = shape.cells();
  std::int64_t count = 0;
  for_each_ssyt(shape, nu, [&](const std::vector<int>& fill) {
    if (is_lattice(reading_word_of_fill(cells, fill))) ++count;
  });
  return count;
}

}  // namespace lrq
