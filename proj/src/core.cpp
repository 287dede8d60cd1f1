#include "termirial/core.hpp"

#include <algorithm>

namespace termirial {

namespace {

void require_natural(const Natural& v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

}  // namespace

Natural parse_natural(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("expected a non-negative integer");
    Natural value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("expected a non-negative integer, got '" + std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

std::string to_decimal(const Natural& value, char separator) {
    std::string digits = value.str();
    if (separator == '\0') return digits;
    std::string out;
    std::size_t lead = digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && (i - lead) % 3 == 0) out.push_back(separator);
        out.push_back(digits[i]);
    }
    return out;
}

Natural factorial(std::uint64_t n) {
    Natural result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

Natural binomial(const Natural& n, const Natural& k) {
    require_natural(n, "binomial n");
    require_natural(k, "binomial k");
    if (k > n) return 0;
    const Natural steps = std::min(k, Natural(n - k));
    Natural result = 1;
    // result == C(n, i) after each step; (i+1) divides result * (n-i) exactly.
    for (Natural i = 0; i < steps; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

Natural termirial(const Natural& n) {
    require_natural(n, "termirial n");
    return n * (n + 1) / 2;
}

Natural termirial_p(const Natural& n, Order p) {
    require_natural(n, "termirial n");
    if (p.value() == -1) return 1;
    if (n == 0) return 0;
    Natural result = 1;
    for (int i = 0; i <= p.value(); ++i) {
        result *= (n + i);
        result /= (i + 1);
    }
    return result;
}

Natural termirial_p_binomial(const Natural& n, Order p) {
    require_natural(n, "termirial n");
    // C(n-1, 0) for order -1; n - 1 may be negative at n = 0, but any
    // selection of zero elements counts once.
    if (p.value() == -1) return 1;
    return binomial(n + p.value(), p.value() + 1);
}

TermirialExpr make_expr(const Natural& n, Order p) {
    return TermirialExpr{n, p, termirial_p(n, p), n + p.value(), Natural(p.value() + 1)};
}

PascalSides pascal_check(const Natural& n, Order p) {
    return PascalSides{
        termirial_p(n + 1, p) + termirial_p(n, p.next()),
        termirial_p(n + 1, p.next()),
    };
}

std::vector<Natural> convolution_terms(const Natural& n, const Natural& m, Order p) {
    std::vector<Natural> terms;
    terms.reserve(static_cast<std::size_t>(p.value()) + 2);
    for (int i = -1; i <= p.value(); ++i) {
        terms.push_back(termirial_p(n, Order(i)) * termirial_p(m, Order(p.value() - i - 1)));
    }
    return terms;
}

}  // namespace termirial
