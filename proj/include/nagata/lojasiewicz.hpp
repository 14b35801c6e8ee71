#pragma once

// Lojasiewicz exponent at infinity of Nagata automorphisms, computed as
// 1 / deg(F^-1) from the explicitly constructed inverse.

#include "nagata.hpp"
#include "parser.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nagata {

struct LojReport {
    Degree phi_degree = Degree::neg_infinity();  // -inf when p = 0
    std::int64_t inverse_degree = 0;
    Rational exponent;
};

inline std::int64_t max_degree(const PolyEndo& e) {
    std::int64_t d = 0;
    for (const auto& c : e.components())
        if (!c.is_zero()) d = std::max(d, total_degree(c).value());
    return d;
}

inline LojReport loj_exponent(const Poly2& p) {
    LojReport r;
    r.phi_degree = total_degree(expand_bivariate(p));
    r.inverse_degree = max_degree(inverse_nagata(p));
    const std::int64_t expected = p.is_constant() ? 1 : 2 * r.phi_degree.value() + 1;
    if (r.inverse_degree != expected) throw std::logic_error("inverse degree differs from 2*deg(phi) + 1");
    r.exponent = make_rational(1, Integer(static_cast<long>(r.inverse_degree)));
    return r;
}

enum class DeformationOrder { Equal, Smaller };

struct DeformationComparison {
    LojReport base;
    LojReport deformed;
    DeformationOrder order = DeformationOrder::Equal;
};

/// Requires supp(p) to be contained in supp(p_s); the deformed exponent is
/// then never larger.
inline DeformationComparison deformation_compare(const Poly2& p, const Poly2& p_s) {
    const auto sup = p_s.support();
    const std::set<Exponent<2>> deformed_support(sup.begin(), sup.end());
    for (const auto& e : p.support())
        if (!deformed_support.contains(e))
            throw std::invalid_argument("deformation does not contain monomial " + print_monomial<2>(e) +
                                        " of the base polynomial");
    DeformationComparison c{loj_exponent(p), loj_exponent(p_s)};
    if (c.deformed.exponent > c.base.exponent) throw std::logic_error("deformation increased the exponent");
    c.order = c.deformed.exponent == c.base.exponent ? DeformationOrder::Equal : DeformationOrder::Smaller;
    return c;
}

}  // namespace nagata
