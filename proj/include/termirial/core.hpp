#pragma once

#include "termirial/numbers.hpp"

#include <vector>

namespace termirial {

/// n!, with 0! = 1.
Natural factorial(std::uint64_t n);

/// Binomial coefficient by the multiplicative running product. Returns 0
/// when k > n.
Natural binomial(const Natural& n, const Natural& k);

/// First-order termirial (triangular number) n(n+1)/2.
Natural termirial(const Natural& n);

/// Order-p termirial, the (p+1)-simplicial polytopic number
/// (n)(n+1)...(n+p) / (p+1)!.
///
/// Order -1 is the constant 1 and order 0 is n itself. At n = 0 every
/// order p >= 0 gives 0 while order -1 still gives 1, which keeps the
/// Pascal and convolution identities valid at the boundary.
///
/// Evaluated incrementally: after step i the accumulator holds
/// C(n+i, i+1), so every division is exact.
Natural termirial_p(const Natural& n, Order p);

/// Same value as termirial_p, computed as binomial(n+p, p+1). Kept as a
/// separate code path so the two can be cross-checked.
Natural termirial_p_binomial(const Natural& n, Order p);

/// A termirial value together with its binomial reading C(top, bottom).
struct TermirialExpr {
    Natural n;
    Order p;
    Natural value;
    Natural top;     // n + p
    Natural bottom;  // p + 1
};

TermirialExpr make_expr(const Natural& n, Order p);

struct PascalSides {
    Natural lhs;  // termirial_p(n+1, p) + termirial_p(n, p+1)
    Natural rhs;  // termirial_p(n+1, p+1)
};

/// Both sides of the Pascal-rule analog for termirials.
PascalSides pascal_check(const Natural& n, Order p);

/// The p+2 products termirial_p(n, i) * termirial_p(m, p-i-1) for
/// i = -1..p, in that order. They sum to termirial_p(n+m, p).
std::vector<Natural> convolution_terms(const Natural& n, const Natural& m, Order p);

}  // namespace termirial
