#pragma once

// Tame/wild classification of Nagata homomorphisms.
//
// The wildness test is sufficient only: p^v with v = (2,1) must depend on
// t1. Representatives in Q[t2] are shown tame by an explicit product of two
// elementary maps. Everything else is reported as an automorphism of unknown
// tameness.

#include "nagata.hpp"
#include "polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace nagata {

enum class Verdict { NotAutomorphism, WildAutomorphism, TameAutomorphism, AutomorphismTamenessUnknown };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::NotAutomorphism: return "NotAutomorphism";
        case Verdict::WildAutomorphism: return "WildAutomorphism";
        case Verdict::TameAutomorphism: return "TameAutomorphism";
        case Verdict::AutomorphismTamenessUnknown: return "AutomorphismTamenessUnknown";
    }
    return "?";
}

/// Two elementary maps; applying `first` then `second` gives the Nagata map,
/// i.e. compose(second, first) == endo.
struct TameFactorization {
    PolyEndo first;   // (x - 2*y*q - z*q^2, y, z)
    PolyEndo second;  // (x, y + z*q, z)
};

struct Classification {
    Verdict verdict = Verdict::NotAutomorphism;
    Poly3 residual;
    std::optional<Poly2> representative;
    std::optional<Poly2> weighted_leading;  // p^v
    std::optional<Poly2> t1_derivative;     // (p^v)_t1
    std::optional<TameFactorization> tame;
};

/// (p^v)_t1 != 0 for v = (2,1). False for p = 0.
inline bool wild_by_corollary(const Poly2& p) {
    if (p.is_zero()) return false;
    return !partial(weighted_leading_form(p, invariant_weights()), var::t1).is_zero();
}

inline bool depends_only_on_t2(const Poly2& p) {
    for (const auto& t : p.terms())
        if (t.exponent[var::t1] != 0) return false;
    return true;
}

/// Factorization for p in Q[t2]. q = p(z) is checked against the map it is
/// meant to produce before it is returned.
inline TameFactorization tame_factorization(const Poly2& p) {
    if (!depends_only_on_t2(p)) throw std::invalid_argument("representative depends on t1");
    const auto q = expand_bivariate(p);
    const auto x = Poly3::variable(var::x);
    const auto y = Poly3::variable(var::y);
    const auto z = Poly3::variable(var::z);
    TameFactorization t{{x - Rational(2) * (y * q) - z * (q * q), y, z}, {x, y + z * q, z}};
    if (compose(t.second, t.first) != nagata_endo(q)) throw std::logic_error("tame factorization does not recompose");
    return t;
}

inline Classification classify(const Poly3& phi) {
    Classification c;
    c.residual = pde_residual(phi);
    if (!c.residual.is_zero()) return c;

    c.representative = decompose(phi);
    if (!c.representative) throw std::logic_error("PDE solution without a bivariate representative");
    const auto& p = *c.representative;
    if (!p.is_zero()) {
        c.weighted_leading = weighted_leading_form(p, invariant_weights());
        c.t1_derivative = partial(*c.weighted_leading, var::t1);
    }
    if (c.t1_derivative && !c.t1_derivative->is_zero()) {
        c.verdict = Verdict::WildAutomorphism;
    } else if (depends_only_on_t2(p)) {
        c.verdict = Verdict::TameAutomorphism;
        c.tame = tame_factorization(p);
    } else {
        c.verdict = Verdict::AutomorphismTamenessUnknown;
    }
    return c;
}

/// The nine 2x2 minors of the Jacobian of (fbar, gbar, hbar), grouped by
/// component pair; `xy` is a_x*b_y - a_y*b_x and so on.
struct LeadingMinors {
    Poly3 fg_xy, fg_yz, fg_xz;
    Poly3 gh_xy, gh_yz, gh_xz;
    Poly3 fh_xy, fh_yz, fh_xz;

    friend bool operator==(const LeadingMinors&, const LeadingMinors&) = default;
};

namespace detail {
inline Poly3 minor(const Poly3& a, const Poly3& b, std::size_t u, std::size_t w) {
    return partial(a, u) * partial(b, w) - partial(a, w) * partial(b, u);
}
}  // namespace detail

/// Minors of the leading forms of the Nagata endo components.
inline LeadingMinors leading_minors(const Poly3& phi) {
    if (phi.is_constant()) throw std::domain_error("leading forms degenerate");
    const auto e = nagata_endo(phi);
    const auto f = leading_form(e.f), g = leading_form(e.g), h = leading_form(e.h);
    using detail::minor;
    return {minor(f, g, var::x, var::y), minor(f, g, var::y, var::z), minor(f, g, var::x, var::z),
            minor(g, h, var::x, var::y), minor(g, h, var::y, var::z), minor(g, h, var::x, var::z),
            minor(f, h, var::x, var::y), minor(f, h, var::y, var::z), minor(f, h, var::x, var::z)};
}

/// Closed forms of the minors in terms of the leading form phibar of a
/// nonconstant phi, from fbar = -z*phibar^2, gbar = z*phibar, hbar = z.
inline LeadingMinors predicted_minors(const Poly3& phibar) {
    const auto z = Poly3::variable(var::z);
    const auto px = partial(phibar, var::x), py = partial(phibar, var::y);
    const auto sq = phibar * phibar;
    return {Poly3(0),
            -(z * sq * py),
            -(z * sq * px),
            Poly3(0),
            z * py,
            z * px,
            Poly3(0),
            Rational(-2) * (z * phibar * py),
            Rational(-2) * (z * phibar * px)};
}

}  // namespace nagata
