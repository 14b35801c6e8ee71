#pragma once

// Seeded generators for test inputs and the `random` subcommand. Only the
// raw 64-bit output of std::mt19937_64 is used (its sequence is fixed by the
// standard), so a seed gives the same polynomials on every platform.
//
// Bivariate p: the candidate monomials are {(k1,k2) : 2*k1 + k2 <= dvmax}.
// A term count is drawn uniformly from 1..min(5, #candidates), that many
// distinct monomials are drawn uniformly, and each gets a coefficient drawn
// uniformly from {-9..9} \ {0}.

#include "polynomial.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace nagata {

using Rng = std::mt19937_64;

/// Uniform in [0, n) by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
    for (;;) {
        const std::uint64_t v = rng();
        if (v <= limit) return v % n;
    }
}

inline std::int64_t uniform_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Rational random_coefficient(Rng& rng) {
    auto c = uniform_in(rng, -9, 8);
    return Rational(static_cast<long>(c >= 0 ? c + 1 : c));
}

template <std::size_t N>
Polynomial<N> random_from(Rng& rng, std::vector<Exponent<N>> candidates, std::size_t max_terms) {
    const std::size_t count = static_cast<std::size_t>(uniform_in(rng, 1, std::int64_t(std::min(max_terms, candidates.size()))));
    std::vector<Term<N>> terms;
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + uniform_below(rng, candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        terms.push_back({candidates[i], random_coefficient(rng)});
    }
    return Polynomial<N>::from_terms(std::move(terms));
}

inline constexpr std::size_t random_max_terms = 5;

/// Nonzero p with d_v(p) <= dvmax for v = (2,1).
inline Poly2 random_bivariate(Rng& rng, std::uint32_t dvmax) {
    std::vector<Exponent<2>> candidates;
    for (std::uint32_t k1 = 0; 2 * k1 <= dvmax; ++k1)
        for (std::uint32_t k2 = 0; 2 * k1 + k2 <= dvmax; ++k2) candidates.push_back({k1, k2});
    return random_from<2>(rng, std::move(candidates), random_max_terms);
}

/// Random p that is not constant; dvmax must be at least 1.
inline Poly2 random_nonconstant_bivariate(Rng& rng, std::uint32_t dvmax) {
    if (dvmax == 0) throw std::invalid_argument("dvmax must be positive");
    for (;;) {
        auto p = random_bivariate(rng, dvmax);
        if (!p.is_constant()) return p;
    }
}

/// Nonzero phi in Q[x,y,z] of total degree <= max_degree.
inline Poly3 random_trivariate(Rng& rng, std::uint32_t max_degree, std::size_t max_terms = random_max_terms) {
    std::vector<Exponent<3>> candidates;
    for (std::uint32_t a = 0; a <= max_degree; ++a)
        for (std::uint32_t b = 0; a + b <= max_degree; ++b)
            for (std::uint32_t c = 0; a + b + c <= max_degree; ++c) candidates.push_back({a, b, c});
    return random_from<3>(rng, std::move(candidates), max_terms);
}

}  // namespace nagata
