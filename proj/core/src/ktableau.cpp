#include "lrq/ktableau.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lrq {

std::vector<std::map<std::pair<int, int>, int>> KTableau::layers() const {
  std::vector<std::map<std::pair<int, int>, int>> out(k);
  auto cells = shape.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out[entries[i].texp].emplace(cells[i], entries[i].letter);
  }
  return out;
}

LaurentPoly KTableau::statistic() const {
  int total = 0;
  for (const MonomialEntry& e : entries) total += e.texp;
  return LaurentPoly::monomial(total, 1);
}

Word KTableau::reading_word(const Partition& kappa) const {
  Word word = word_of_partition(kappa);
  for (const auto& layer : layers()) {
    // Rows ascending; within a row, columns descending.
    auto it = layer.begin();
    while (it != layer.end()) {
      int row = it->first.first;
      auto row_end = it;
      while (row_end != layer.end() && row_end->first.first == row) ++row_end;
      for (auto back = row_end; back != it;) {
        --back;
        word.push_back(back->second);
      }
      it = row_end;
    }
  }
  return word;
}

std::string KTableau::render() const {
  std::ostringstream out;
  auto cells = shape.cells();
  std::size_t i = 0;
  for (int r = 0; r < shape.outer.length(); ++r) {
    for (int c = 0; c < shape.outer.part(r); ++c) {
      if (c) out << ' ';
      if (c < shape.inner.part(r)) {
        out << '.';
      } else {
        const MonomialEntry& e = entries[i++];
        out << e.letter;
        if (e.texp > 0) {
          out << ".t";
          if (e.texp > 1) out << '^' << e.texp;
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void enumerate_rec(const SkewShape& shape,
                   const std::vector<std::pair<int, int>>& cells,
                   std::size_t idx, int k, std::vector<int>& remaining,
                   std::vector<MonomialEntry>& fill,
                   std::vector<KTableau>& out) {
  if (idx == cells.size()) {
    out.push_back(KTableau{shape, k, fill});
    return;
  }
  auto [r, c] = cells[idx];
  std::optional<MonomialEntry> left;
  std::optional<MonomialEntry> up;
  for (std::size_t j = 0; j < idx; ++j) {
    if (cells[j].first == r && cells[j].second == c - 1) left = fill[j];
    if (cells[j].first == r - 1 && cells[j].second == c) up = fill[j];
  }
  int letters = static_cast<int>(remaining.size());
  for (int b = 0; b < k; ++b) {
    for (int a = 1; a <= letters; ++a) {
      MonomialEntry e{b, a};
      if (left && e < *left) continue;   // rows weakly increase
      if (up && e <= *up) continue;      // columns strictly increase
      if (remaining[a - 1] == 0) continue;
      --remaining[a - 1];
      fill.push_back(e);
      enumerate_rec(shape, cells, idx + 1, k, remaining, fill, out);
      fill.pop_back();
      ++remaining[a - 1];
    }
  }
}

}  // namespace

std::vector<KTableau> enumerate_ktableaux(const SkewShape& shape,
                                          const Partition& content_outer,
                                          const Partition& content_inner,
                                          int k, bool lattice) {
  if (!contains(content_inner, content_outer)) {
    throw std::invalid_argument(
        "enumerate_ktableaux: content_inner not contained in content_outer");
  }
  if (shape.cell_count() != content_outer.size() - content_inner.size()) {
    throw std::invalid_argument(
        "enumerate_ktableaux: cell count does not match content size");
  }
  auto cells = shape.cells();
  std::vector<int> remaining(content_outer.length());
  for (int a = 0; a < content_outer.length(); ++a) {
    remaining[a] = content_outer.part(a) - content_inner.part(a);
  }
  std::vector<KTableau> out;
  std::vector<MonomialEntry> fill;
  enumerate_rec(shape, cells, 0, k, remaining, fill, out);
  if (lattice) {
    std::erase_if(out, [&](const KTableau& t) {
      return !is_lattice(t.reading_word(content_inner));
    });
  }
  return out;
}

}  // namespace lrq
