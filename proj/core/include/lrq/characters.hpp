#pragma once

#include <cstdint>

#include "lrq/partition.hpp"

namespace lrq {

/// Irreducible symmetric-group character value chi^lambda(mu), computed
/// by the Murnaghan-Nakayama border-strip recursion on beta-sets.
/// Memoized internally; safe to call concurrently.
/// Throws std::invalid_argument when |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

}  // namespace lrq
