#pragma once

// Homogeneous polynomial solutions of -2*y*phi_x + z*phi_y = 0.
//
// Degree by degree the solution space is spanned by (x*z + y^2)^k1 * z^k2
// with 2*k1 + k2 = d. kernel_oracle recomputes the same space independently
// as the null space of the residual map on coefficient vectors.

#include "linalg.hpp"
#include "nagata.hpp"
#include "polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nagata::pde {

inline constexpr std::uint32_t default_oracle_bound = 12;

class DegreeBoundError : public std::out_of_range {
public:
    DegreeBoundError(std::uint32_t degree, std::uint32_t bound)
        : std::out_of_range("degree " + std::to_string(degree) + " exceeds oracle bound " + std::to_string(bound)),
          bound_(bound) {}

    std::uint32_t bound() const { return bound_; }

private:
    std::uint32_t bound_;
};

struct SolutionBasis {
    std::uint32_t degree = 0;
    std::vector<Poly3> elements;
};

/// Expansions of t1^k1 * t2^k2 over 2*k1 + k2 = d, by decreasing k1.
inline SolutionBasis solution_basis(std::uint32_t d) {
    SolutionBasis b{d, {}};
    for (std::uint32_t k1 = d / 2 + 1; k1-- > 0;)
        b.elements.push_back(expand_bivariate(Poly2::monomial({k1, d - 2 * k1}, 1)));
    return b;
}

/// Degree-d monomials in x, y, z, listed in term order. Index i of an oracle
/// coefficient vector refers to entry i of this list.
inline std::vector<Exponent<3>> homogeneous_monomials(std::uint32_t d) {
    std::vector<Exponent<3>> out;
    for (std::uint32_t a = 0; a <= d; ++a)
        for (std::uint32_t b = 0; a + b <= d; ++b) out.push_back({a, b, d - a - b});
    std::sort(out.begin(), out.end(), term_order_before<3>);
    return out;
}

inline Poly3 assemble(const std::vector<Rational>& coefficients, const std::vector<Exponent<3>>& monomials) {
    if (coefficients.size() != monomials.size()) throw std::invalid_argument("coefficient vector length mismatch");
    std::vector<Term<3>> terms;
    for (std::size_t i = 0; i < monomials.size(); ++i) terms.push_back({monomials[i], coefficients[i]});
    return Poly3::from_terms(std::move(terms));
}

inline std::vector<Rational> coefficient_vector(const Poly3& p, const std::vector<Exponent<3>>& monomials) {
    std::vector<Rational> v;
    v.reserve(monomials.size());
    for (const auto& m : monomials) v.push_back(p.coefficient(m));
    std::size_t used = 0;
    for (const auto& c : v) used += c != 0;
    if (used != p.size()) throw std::invalid_argument("polynomial has terms outside the monomial list");
    return v;
}

struct KernelOracleResult {
    std::uint32_t degree = 0;
    std::size_t dimension = 0;
    std::vector<Exponent<3>> monomials;
    std::vector<std::vector<Rational>> kernel_basis;
};

/// Null space of phi -> -2*y*phi_x + z*phi_y restricted to degree d. The
/// matrix is written down monomial by monomial:
///   x^a y^b z^c  ->  -2a x^(a-1) y^(b+1) z^c  +  b x^a y^(b-1) z^(c+1).
inline KernelOracleResult kernel_oracle(std::uint32_t d, std::uint32_t bound = default_oracle_bound) {
    if (d > bound) throw DegreeBoundError(d, bound);
    KernelOracleResult r;
    r.degree = d;
    r.monomials = homogeneous_monomials(d);
    const auto n = r.monomials.size();
    auto index_of = [&](const Exponent<3>& e) {
        auto it = std::lower_bound(r.monomials.begin(), r.monomials.end(), e, term_order_before<3>);
        return static_cast<std::size_t>(it - r.monomials.begin());
    };

    linalg::IntMatrix m(n, linalg::IntRow(n, 0));
    for (std::size_t col = 0; col < n; ++col) {
        const auto [a, b, c] = r.monomials[col];
        if (a > 0) m[index_of({a - 1, b + 1, c})][col] += -2 * Integer(a);
        if (b > 0) m[index_of({a, b - 1, c + 1})][col] += Integer(b);
    }
    for (const auto& v : linalg::kernel_basis(m, n)) {
        std::vector<Rational> q(v.begin(), v.end());
        r.kernel_basis.push_back(std::move(q));
    }
    r.dimension = r.kernel_basis.size();
    return r;
}

/// true iff span(solution_basis(d)) == span(kernel_oracle(d)), by ranks.
inline bool verify_basis_against_oracle(std::uint32_t d, std::uint32_t bound = default_oracle_bound) {
    const auto oracle = kernel_oracle(d, bound);
    const auto basis = solution_basis(d);
    const auto n = oracle.monomials.size();

    linalg::IntMatrix from_basis, from_oracle, stacked;
    for (const auto& e : basis.elements)
        from_basis.push_back(linalg::clear_denominators(coefficient_vector(e, oracle.monomials)));
    for (const auto& v : oracle.kernel_basis) from_oracle.push_back(linalg::clear_denominators(v));
    stacked = from_basis;
    stacked.insert(stacked.end(), from_oracle.begin(), from_oracle.end());

    const auto rb = linalg::rank(from_basis, n);
    const auto ro = linalg::rank(from_oracle, n);
    const auto rs = linalg::rank(stacked, n);
    return rb == basis.elements.size() && ro == oracle.dimension && rb == ro && rs == rb;
}

struct ComponentResidual {
    std::int64_t degree;
    Poly3 component;
    Poly3 residual;
};

/// Residual of A*phi_x + B*phi_y + C*phi_z on each homogeneous component of
/// phi. When A, B, C are homogeneous of equal degree, phi is a solution iff
/// every component is.
inline std::vector<ComponentResidual> check_homogeneous_split(const Poly3& phi, const Poly3& a, const Poly3& b,
                                                              const Poly3& c) {
    std::vector<ComponentResidual> out;
    for (auto& [deg, comp] : homogeneous_components(phi)) {
        auto res = a * partial(comp, var::x) + b * partial(comp, var::y) + c * partial(comp, var::z);
        out.push_back({deg, comp, std::move(res)});
    }
    return out;
}

inline std::vector<ComponentResidual> check_homogeneous_split(const Poly3& phi) {
    return check_homogeneous_split(phi, Rational(-2) * Poly3::variable(var::y), Poly3::variable(var::z), Poly3(0));
}

}  // namespace nagata::pde
