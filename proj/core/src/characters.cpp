#include "lrq/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lrq {

namespace {

// Beta-set of lambda with l slots: {lambda_i + l - 1 - i}, strictly
// decreasing. Removing a border strip of length r replaces some b by
// b - r (if fresh and nonnegative); the height sign is (-1)^{number of
// beta values strictly between b - r and b}.
std::int64_t mn_rec(std::vector<int> beta, const std::vector<int>& mu,
                    std::size_t idx) {
  if (idx == mu.size()) return 1;
  int r = mu[idx];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossings = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++crossings;
    }
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    std::int64_t sub = mn_rec(std::move(next), mu, idx + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  }
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }
  int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.parts()[i] + l - 1 - i;
  std::int64_t value = mn_rec(std::move(beta), mu.parts(), 0);
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(lambda, mu), value);
  return value;
}

}  // namespace lrq
