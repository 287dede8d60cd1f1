#include "termirial/identities.hpp"

#include <array>
#include <numeric>
#include <utility>

namespace termirial {

namespace {

constexpr std::array<std::pair<std::string_view, Identity>, 6> kNames{{
    {"pascal", Identity::pascal},
    {"newton", Identity::newton},
    {"split1", Identity::split1},
    {"split2", Identity::split2},
    {"recurrence", Identity::recurrence},
    {"closedform", Identity::closedform},
}};

Natural sum(const std::vector<Natural>& terms) {
    return std::accumulate(terms.begin(), terms.end(), Natural(0));
}

}  // namespace

std::optional<Identity> parse_identity(std::string_view name) {
    for (const auto& [key, id] : kNames) {
        if (key == name) return id;
    }
    return std::nullopt;
}

std::string_view identity_name(Identity id) {
    for (const auto& [key, value] : kNames) {
        if (value == id) return key;
    }
    return "unknown";
}

IdentityAxes identity_axes(Identity id) {
    switch (id) {
        case Identity::pascal: return {false, true};
        case Identity::newton: return {true, true};
        case Identity::split1:
        case Identity::split2: return {true, false};
        case Identity::recurrence:
        case Identity::closedform: return {false, true};
    }
    return {false, false};
}

IdentityInstance evaluate_identity(Identity id, const Natural& n, const Natural& m, Order p) {
    IdentityInstance out;
    out.n = n;
    out.m = identity_axes(id).uses_m ? m : Natural(0);
    out.p = p.value();
    const Order one(1), two(2);

    switch (id) {
        case Identity::pascal: {
            out.lhs = termirial_p(n + 1, p) + termirial_p(n, p.next());
            out.rhs_terms = {termirial_p(n + 1, p.next())};
            break;
        }
        case Identity::newton: {
            out.lhs = termirial_p(n + m, p);
            out.rhs_terms = convolution_terms(n, m, p);
            break;
        }
        case Identity::split1: {
            out.p = 1;
            out.lhs = termirial(n + m);
            out.rhs_terms = {termirial(n), n * m, termirial(m)};
            break;
        }
        case Identity::split2: {
            out.p = 2;
            out.lhs = termirial_p(n + m, two);
            out.rhs_terms = {termirial_p(n, two), n * termirial_p(m, one), m * termirial_p(n, one),
                             termirial_p(m, two)};
            break;
        }
        case Identity::recurrence: {
            // Order -1 has no predecessor; the sum form starts at order 0.
            if (p.value() < 0) throw std::invalid_argument("recurrence needs order >= 0");
            out.lhs = termirial_p(n, p);
            for (Natural k = 1; k <= n; ++k) out.rhs_terms.push_back(termirial_p(k, p.prev()));
            break;
        }
        case Identity::closedform: {
            out.lhs = termirial_p(n, p);
            out.rhs_terms = {termirial_p_binomial(n, p)};
            break;
        }
    }
    out.rhs = sum(out.rhs_terms);
    return out;
}

}  // namespace termirial
