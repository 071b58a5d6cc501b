#include "lrq/ktableau.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace lrq;

namespace {

// The k=3 lattice tableau of shape [532]-[21], content [442]-[21]:
//   . . 2 3 2t^2
//   . t t
//   1 2t^2
KTableau worked_lattice_example() {
  return KTableau{SkewShape({5, 3, 2}, {2, 1}),
                  3,
                  {{0, 2}, {0, 3}, {2, 2}, {1, 1}, {1, 1}, {0, 1}, {2, 2}}};
}

// The first k-tableau display, shape [652]-[32]:
//   . . . 3  2t 2t
//   . . 1 t  t^2
//   t^2 t^2
KTableau layered_example() {
  return KTableau{
      SkewShape({6, 5, 2}, {3, 2}),
      3,
      {{0, 3}, {1, 2}, {1, 2}, {0, 1}, {1, 1}, {2, 1}, {2, 1}, {2, 1}}};
}

}  // namespace

TEST_CASE("monomial entry ordering") {
  CHECK(MonomialEntry{0, 2} < MonomialEntry{1, 1});  // 2 < 1*t
  CHECK(MonomialEntry{1, 1} < MonomialEntry{1, 3});  // t < 3t
  CHECK(MonomialEntry{0, 1} < MonomialEntry{0, 2});
}

TEST_CASE("statistic") {
  KTableau flat{SkewShape({2, 1}, {}), 2, {{0, 1}, {0, 1}, {0, 2}}};
  CHECK(flat.statistic() == LaurentPoly::one());
  CHECK(worked_lattice_example().statistic() == LaurentPoly::monomial(6, 1));
  CHECK(layered_example().statistic() == LaurentPoly::monomial(9, 1));
}

TEST_CASE("layers of the displayed example") {
  auto layers = layered_example().layers();
  REQUIRE(layers.size() == 3);
  std::map<std::pair<int, int>, int> t0{{{0, 3}, 3}, {{1, 2}, 1}};
  std::map<std::pair<int, int>, int> t1{{{0, 4}, 2}, {{0, 5}, 2}, {{1, 3}, 1}};
  std::map<std::pair<int, int>, int> t2{{{1, 4}, 1}, {{2, 0}, 1}, {{2, 1}, 1}};
  CHECK(layers[0] == t0);
  CHECK(layers[1] == t1);
  CHECK(layers[2] == t2);
}

TEST_CASE("layers partition the shape") {
  for (const KTableau& t : enumerate_ktableaux(SkewShape({3, 2}, {1}), {3, 2},
                                               {1}, 2, false)) {
    std::size_t total = 0;
    for (const auto& layer : t.layers()) total += layer.size();
    CHECK(total == t.entries.size());
  }
}

TEST_CASE("reading word") {
  CHECK(worked_lattice_example().reading_word({2, 1}) ==
        Word{1, 1, 2, 3, 2, 1, 1, 1, 2, 2});
  KTableau empty{SkewShape({2, 1}, {2, 1}), 2, {}};
  CHECK(empty.reading_word({2, 1}) == Word{1, 1, 2});
  CHECK(empty.reading_word({}) == Word{});
}

TEST_CASE("reference enumeration counts") {
  SkewShape shape({3, 2}, {1});
  auto all = enumerate_ktableaux(shape, {3, 2}, {1}, 2, false);
  auto lattice = enumerate_ktableaux(shape, {3, 2}, {1}, 2, true);
  CHECK(all.size() == 25);
  CHECK(lattice.size() == 21);
  LaurentPoly sum;
  for (const KTableau& t : lattice) sum += t.statistic();
  LaurentPoly expect;
  int coeffs[] = {2, 5, 7, 5, 2};
  for (int e = 0; e <= 4; ++e) expect += LaurentPoly::monomial(e, coeffs[e]);
  CHECK(sum == expect);
}

TEST_CASE("k=1 collapse to classical enumeration") {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Partition& mu : subpartitions_of(lambda)) {
        SkewShape shape(lambda, mu);
        for (const Partition& nu : partitions_of(shape.cell_count())) {
          auto tabs = enumerate_ktableaux(shape, nu, {}, 1, true);
          CHECK(static_cast<std::int64_t>(tabs.size()) ==
                classical_lr(lambda, mu, nu));
          auto all = enumerate_ktableaux(shape, nu, {}, 1, false);
          CHECK(static_cast<std::int64_t>(all.size()) ==
                classical_tableau_count(shape, nu));
        }
      }
    }
  }
}

TEST_CASE("empty shape") {
  auto tabs = enumerate_ktableaux(SkewShape({2}, {2}), {3, 1}, {3, 1}, 2, true);
  REQUIRE(tabs.size() == 1);
  CHECK(tabs[0].entries.empty());
  CHECK(tabs[0].statistic() == LaurentPoly::one());
}

TEST_CASE("precondition violations are errors, not empty results") {
  SkewShape shape({3, 2}, {1});
  CHECK_THROWS_AS(enumerate_ktableaux(shape, {3, 2}, {3, 3}, 2, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_ktableaux(shape, {2, 1}, {}, 2, false),
                  std::invalid_argument);
}

TEST_CASE("layer filtration is a valid skew chain of semistandard layers") {
  for (const KTableau& t : enumerate_ktableaux(SkewShape({4, 2}, {1}), {4, 2},
                                               {1}, 3, false)) {
    // each layer semistandard on its own
    for (const auto& layer : t.layers()) {
      for (const auto& [cell, v] : layer) {
        auto left = layer.find({cell.first, cell.second - 1});
        if (left != layer.end()) CHECK(left->second <= v);
        auto up = layer.find({cell.first - 1, cell.second});
        if (up != layer.end()) CHECK(up->second < v);
      }
    }
    // cumulative shapes mu = mu^1 in ... in mu^{k+1} = lambda form
    // partitions (left-justified rows after adding each layer)
    std::vector<int> row_count(t.shape.outer.length());
    for (int r = 0; r < t.shape.outer.length(); ++r) {
      row_count[r] = t.shape.inner.part(r);
    }
    auto cells = t.shape.cells();
    for (int i = 0; i < t.k; ++i) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (t.entries[c].texp == i) {
          CHECK(row_count[cells[c].first] == cells[c].second);
          ++row_count[cells[c].first];
        }
      }
      for (std::size_t r = 1; r < row_count.size(); ++r) {
        CHECK(row_count[r] <= row_count[r - 1]);
      }
    }
  }
}

TEST_CASE("statistic equals product over layers of t^{i |T^i|}") {
  for (const KTableau& t : enumerate_ktableaux(SkewShape({3, 2}, {}), {3, 2},
                                               {}, 3, false)) {
    auto layers = t.layers();
    int exponent = 0;
    for (std::size_t i = 0; i < layers.size(); ++i) {
      exponent += static_cast<int>(i * layers[i].size());
    }
    CHECK(t.statistic() == LaurentPoly::monomial(exponent, 1));
  }
}

TEST_CASE("horizontal strip enumeration matches stars and bars") {
  for (int k = 1; k <= 3; ++k) {
    for (int l = 0; l <= 4; ++l) {
      for (int m = l; m <= 8; ++m) {
        for (int n = std::max(l, 1); n <= 8; ++n) {
          SkewShape shape(Partition{m}, m - l > 0 ? Partition{m - l}
                                                  : Partition{});
          Partition inner = n - l > 0 ? Partition{n - l} : Partition{};
          auto all = enumerate_ktableaux(shape, {n}, inner, k, false);
          auto lattice = enumerate_ktableaux(shape, {n}, inner, k, true);
          CHECK(all.size() == lattice.size());
          LaurentPoly sum;
          for (const KTableau& t : all) sum += t.statistic();
          CHECK(sum == test::stars_and_bars(k, l));
        }
      }
    }
  }
}

TEST_CASE("render") {
  CHECK(worked_lattice_example().render() ==
        ". . 2 3 2.t^2\n. 1.t 1.t\n1 2.t^2\n");
}
