#pragma once

#include "termirial/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace termirial {

enum class Identity {
    pascal,      // (n+1)^(p) + n^(p+1) = (n+1)^(p+1)
    newton,      // (n+m)^(p) = sum_{i=-1..p} n^(i) m^(p-i-1)
    split1,      // (n+m)^(1) = n^(1) + n*m + m^(1)
    split2,      // (n+m)^(2) = n^(2) + n*m^(1) + m*n^(1) + m^(2)
    recurrence,  // n^(p) = sum_{k=1..n} k^(p-1)
    closedform,  // product form = binomial form
};

std::optional<Identity> parse_identity(std::string_view name);
std::string_view identity_name(Identity id);

/// Which of the (n, m, p) sweep axes an identity uses.
struct IdentityAxes {
    bool uses_m;
    bool uses_p;
};
IdentityAxes identity_axes(Identity id);

/// One evaluated instance: the left side and the right side as a list of
/// summands (a single summand when the right side is not a sum).
struct IdentityInstance {
    Natural n;
    Natural m;
    int p = 0;
    Natural lhs;
    std::vector<Natural> rhs_terms;
    Natural rhs;

    bool holds() const { return lhs == rhs; }
};

/// Evaluates `id` at (n, m, p). Axes the identity does not use are ignored.
IdentityInstance evaluate_identity(Identity id, const Natural& n, const Natural& m, Order p);

}  // namespace termirial
