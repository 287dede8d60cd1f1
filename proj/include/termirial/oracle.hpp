#pragma once

// Brute-force oracles. Everything here is deliberately literal and slow;
// nothing in this module calls into the closed forms of core.hpp.

#include "termirial/numbers.hpp"

#include <cstdint>
#include <vector>

namespace termirial::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// p nested summations of the innermost index: p = 0 gives n, p = 1 gives
/// 1 + 2 + ... + n, p = 2 sums those partial sums, and so on.
///
/// Domain 1 <= n <= 60, 0 <= p <= 8. Throws GuardExceeded when the
/// projected work n^p exceeds `budget`.
Natural nested_sum(std::uint64_t n, int p, std::uint64_t budget = kDefaultBudget);

using Subset = std::vector<std::uint32_t>;

/// All p-element subsets of {1..n}, each sorted ascending, listed in
/// lexicographic order. Domain p <= n <= 20; the listing must also fit
/// in `budget` subsets.
std::vector<Subset> subsets(std::uint32_t n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

struct Group {
    std::uint32_t leading;  // smallest element shared by the group
    std::uint64_t count;
};

/// The p-subsets of {1..n} grouped by their smallest element, in
/// increasing order of that element.
struct Decomposition {
    std::uint32_t n = 0;
    std::uint32_t p = 0;
    std::vector<Group> groups;

    std::uint64_t total() const;
    std::vector<std::uint64_t> counts() const;
};

/// Domain 1 <= p <= n <= 20.
Decomposition decompose_by_leading(std::uint32_t n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

}  // namespace termirial::oracle
