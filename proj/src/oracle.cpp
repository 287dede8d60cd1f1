#include "termirial/oracle.hpp"

#include <string>

namespace termirial::oracle {

namespace {

constexpr std::uint64_t kMaxSumN = 60;
constexpr int kMaxSumOrder = 8;
constexpr std::uint32_t kMaxSetSize = 20;

// n^p, saturating at budget + 1.
std::uint64_t projected_work(std::uint64_t n, int p, std::uint64_t budget) {
    std::uint64_t work = 1;
    for (int i = 0; i < p; ++i) {
        if (work > (budget + 1) / n) return budget + 1;
        work *= n;
    }
    return work;
}

std::uint64_t sum_levels(int levels, std::uint64_t upper) {
    if (levels == 0) return upper;
    std::uint64_t total = 0;
    for (std::uint64_t k = 1; k <= upper; ++k) total += sum_levels(levels - 1, k);
    return total;
}

void extend(std::uint32_t n, std::uint32_t p, std::uint32_t next, Subset& current, std::vector<Subset>& out,
            std::uint64_t budget) {
    if (current.size() == p) {
        if (out.size() >= budget) throw GuardExceeded("subset listing exceeds budget of " + std::to_string(budget));
        out.push_back(current);
        return;
    }
    for (std::uint32_t v = next; v <= n; ++v) {
        current.push_back(v);
        extend(n, p, v + 1, current, out, budget);
        current.pop_back();
    }
}

}  // namespace

Natural nested_sum(std::uint64_t n, int p, std::uint64_t budget) {
    if (n < 1 || p < 0 || p > kMaxSumOrder) {
        throw std::invalid_argument("nested_sum domain is 1 <= n, 0 <= p <= " + std::to_string(kMaxSumOrder));
    }
    if (n > kMaxSumN) throw GuardExceeded("nested_sum n must be <= " + std::to_string(kMaxSumN));
    if (projected_work(n, p, budget) > budget) {
        throw GuardExceeded("nested_sum(" + std::to_string(n) + ", " + std::to_string(p) +
                            ") projects more than " + std::to_string(budget) + " steps");
    }
    return Natural(sum_levels(p, n));
}

std::vector<Subset> subsets(std::uint32_t n, std::uint32_t p, std::uint64_t budget) {
    if (p > n) throw std::invalid_argument("subset size exceeds set size");
    if (n > kMaxSetSize) throw GuardExceeded("subset enumeration needs n <= " + std::to_string(kMaxSetSize));
    std::vector<Subset> out;
    Subset current;
    current.reserve(p);
    extend(n, p, 1, current, out, budget);
    return out;
}

std::uint64_t Decomposition::total() const {
    std::uint64_t t = 0;
    for (const auto& g : groups) t += g.count;
    return t;
}

std::vector<std::uint64_t> Decomposition::counts() const {
    std::vector<std::uint64_t> c;
    c.reserve(groups.size());
    for (const auto& g : groups) c.push_back(g.count);
    return c;
}

Decomposition decompose_by_leading(std::uint32_t n, std::uint32_t p, std::uint64_t budget) {
    if (p < 1) throw std::invalid_argument("decomposition needs subset size >= 1");
    Decomposition d{n, p, {}};
    // Lexicographic order keeps equal minima contiguous.
    for (const auto& s : subsets(n, p, budget)) {
        if (d.groups.empty() || d.groups.back().leading != s.front()) d.groups.push_back({s.front(), 0});
        ++d.groups.back().count;
    }
    return d;
}

}  // namespace termirial::oracle
