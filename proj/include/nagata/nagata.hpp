#pragma once

// Nagata homomorphisms (x - 2*y*phi - z*phi^2, y + z*phi, z) of Q[x,y,z]:
// construction, Jacobian, automorphy test, explicit inverse, recovery of the
// bivariate representative p with phi = p(x*z + y^2, z), and the ideal
// certificate <f,g,h> = <x,y,z>.

#include "polynomial.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace nagata {

/// An endomorphism of Q[x,y,z], given by the images of x, y, z.
struct PolyEndo {
    Poly3 f;
    Poly3 g;
    Poly3 h;

    static PolyEndo identity() {
        return {Poly3::variable(var::x), Poly3::variable(var::y), Poly3::variable(var::z)};
    }

    std::array<Poly3, 3> components() const { return {f, g, h}; }

    bool is_identity() const { return *this == identity(); }

    friend bool operator==(const PolyEndo&, const PolyEndo&) = default;
};

/// outer(inner): substitutes the components of inner for x, y, z in each
/// component of outer. As point maps this is "inner, then outer".
inline PolyEndo compose(const PolyEndo& outer, const PolyEndo& inner) {
    const auto images = inner.components();
    return {substitute(outer.f, images), substitute(outer.g, images), substitute(outer.h, images)};
}

inline std::array<Rational, 3> apply(const PolyEndo& e, const std::array<Rational, 3>& point) {
    return {evaluate(e.f, point), evaluate(e.g, point), evaluate(e.h, point)};
}

using Matrix3 = std::array<std::array<Poly3, 3>, 3>;

/// Entry (i,j) is the derivative of component i with respect to variable j.
inline Matrix3 jacobian(const PolyEndo& e) {
    Matrix3 m;
    const auto comps = e.components();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = partial(comps[i], j);
    return m;
}

inline Poly3 determinant(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Poly3 jacobian_det(const PolyEndo& e) { return determinant(jacobian(e)); }

/// -2*y*phi_x + z*phi_y. Zero exactly when phi = p(x*z + y^2, z).
inline Poly3 pde_residual(const Poly3& phi) {
    const auto y = Poly3::variable(var::y);
    const auto z = Poly3::variable(var::z);
    return Rational(-2) * (y * partial(phi, var::x)) + z * partial(phi, var::y);
}

/// Recovers p with expand_bivariate(p) == phi, or nothing if phi is not of
/// that form. Reads p off the section y = 0, where t1 -> x*z, t2 -> z, and
/// then checks the candidate by re-expanding.
inline std::optional<Poly2> decompose(const Poly3& phi) {
    std::vector<Term<2>> candidate;
    for (const auto& t : phi.terms()) {
        if (t.exponent[var::y] != 0) continue;
        const auto a = t.exponent[var::x], b = t.exponent[var::z];
        if (b < a) return std::nullopt;
        candidate.push_back({{a, b - a}, t.coefficient});
    }
    auto p = Poly2::from_terms(std::move(candidate));
    if (expand_bivariate(p) != phi) return std::nullopt;
    return p;
}

inline PolyEndo nagata_endo(const Poly3& phi) {
    const auto x = Poly3::variable(var::x);
    const auto y = Poly3::variable(var::y);
    const auto z = Poly3::variable(var::z);
    const auto phi2 = phi * phi;
    return {x - Rational(2) * (y * phi) - z * phi2, y + z * phi, z};
}

struct NagataMap {
    Poly3 phi;
    PolyEndo endo;
    std::optional<Poly2> representative;
};

inline NagataMap build_nagata(const Poly3& phi) { return {phi, nagata_endo(phi), decompose(phi)}; }

/// (x + 2*y*phi - z*phi^2, y - z*phi, z) with phi = p(x*z + y^2, z).
inline PolyEndo inverse_nagata(const Poly2& p) {
    const auto phi = expand_bivariate(p);
    const auto x = Poly3::variable(var::x);
    const auto y = Poly3::variable(var::y);
    const auto z = Poly3::variable(var::z);
    return {x + Rational(2) * (y * phi) - z * (phi * phi), y - z * phi, z};
}

struct JacobianReport {
    Matrix3 matrix;
    Poly3 determinant;
    Poly3 residual;
    bool is_constant_nonzero = false;
};

inline JacobianReport jacobian_report(const Poly3& phi) {
    JacobianReport r;
    r.matrix = jacobian(nagata_endo(phi));
    r.determinant = determinant(r.matrix);
    r.residual = pde_residual(phi);
    r.is_constant_nonzero = r.determinant.is_constant() && !r.determinant.is_zero();
    if (r.is_constant_nonzero != r.residual.is_zero())
        throw std::logic_error("Jacobian determinant and PDE residual disagree");
    return r;
}

struct AutomorphismWitness {
    bool is_automorphism = false;
    Poly3 residual;                     // nonzero iff not an automorphism
    std::optional<Poly2> representative;
    std::optional<PolyEndo> inverse;
};

/// Decided by the residual; a zero residual always admits a representative.
inline AutomorphismWitness is_automorphism(const Poly3& phi) {
    AutomorphismWitness w;
    w.residual = pde_residual(phi);
    if (!w.residual.is_zero()) return w;
    w.representative = decompose(phi);
    if (!w.representative)
        throw std::logic_error("PDE solution without a bivariate representative");
    w.is_automorphism = true;
    w.inverse = inverse_nagata(*w.representative);
    return w;
}

/// Coefficients (A,B,C) with A*f + B*g + C*h equal to a target polynomial.
struct IdealCombination {
    Poly3 a, b, c;

    Poly3 evaluate_on(const PolyEndo& e) const { return a * e.f + b * e.g + c * e.h; }
};

struct MilnorCertificate {
    IdealCombination for_x;  // x = f + 2*phi*g - phi^2*h
    IdealCombination for_y;  // y = g - phi*h
};

/// Expresses x and y in the ideal <f,g,h>; with h = z this gives
/// <f,g,h> = <x,y,z>, so the quotient is one-dimensional.
inline MilnorCertificate milnor_certificate(const Poly3& phi) {
    MilnorCertificate cert{{Poly3(1), Rational(2) * phi, -(phi * phi)}, {Poly3(0), Poly3(1), -phi}};
    const auto endo = nagata_endo(phi);
    if (cert.for_x.evaluate_on(endo) != Poly3::variable(var::x) ||
        cert.for_y.evaluate_on(endo) != Poly3::variable(var::y))
        throw std::logic_error("Milnor certificate failed to verify");
    return cert;
}

}  // namespace nagata
