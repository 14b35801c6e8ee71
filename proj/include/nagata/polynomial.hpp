#pragma once

// Sparse multivariate polynomials over Q with a fixed number of variables.
//
// Terms are kept in a sorted vector with no zero coefficients, so two values
// are equal exactly when their term vectors are equal. The order is by
// descending total degree, ties broken reverse-lexicographically (the
// monomial with the smaller exponent in the last differing variable comes
// first). With variables x > y > z this prints y^2 before x*z; with two
// variables it coincides with graded lex, t1 > t2.

#include "rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nagata {

template <std::size_t N>
using Exponent = std::array<std::uint32_t, N>;

namespace var {
inline constexpr std::size_t x = 0;
inline constexpr std::size_t y = 1;
inline constexpr std::size_t z = 2;
inline constexpr std::size_t t1 = 0;
inline constexpr std::size_t t2 = 1;
}  // namespace var

/// Degree of a polynomial, or negative infinity for the zero polynomial.
/// value() on the sentinel throws instead of returning a number.
class Degree {
public:
    constexpr explicit Degree(std::int64_t d) : value_(d), finite_(true) {}

    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return !finite_; }

    std::int64_t value() const {
        if (!finite_) throw std::logic_error("degree of the zero polynomial has no integer value");
        return value_;
    }

    friend constexpr bool operator==(const Degree& a, const Degree& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }

private:
    constexpr Degree() = default;
    std::int64_t value_ = 0;
    bool finite_ = false;
};

/// Positive integer weights, one per variable.
template <std::size_t N>
class WeightVector {
public:
    explicit WeightVector(const std::array<std::uint32_t, N>& w) : w_(w) {
        for (auto wi : w_)
            if (wi < 1) throw std::invalid_argument("weights must be positive integers");
    }

    static WeightVector uniform() {
        std::array<std::uint32_t, N> w;
        w.fill(1);
        return WeightVector(w);
    }

    std::uint32_t operator[](std::size_t i) const { return w_[i]; }

    std::int64_t dot(const Exponent<N>& e) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < N; ++i) s += std::int64_t(w_[i]) * e[i];
        return s;
    }

private:
    std::array<std::uint32_t, N> w_;
};

/// The weight (2,1) on (t1,t2): t1 stands for x*z + y^2, t2 for z.
inline WeightVector<2> invariant_weights() { return WeightVector<2>({2, 1}); }

template <std::size_t N>
std::int64_t total_degree(const Exponent<N>& e) {
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

/// true if a precedes b in term order.
template <std::size_t N>
bool term_order_before(const Exponent<N>& a, const Exponent<N>& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = N; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

template <std::size_t N>
struct ExponentHash {
    std::size_t operator()(const Exponent<N>& e) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto v : e) h = (h ^ v) * 0x100000001b3ull;
        return h;
    }
};

template <std::size_t N>
struct Term {
    Exponent<N> exponent{};
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

template <std::size_t N>
class Polynomial {
public:
    using exponent_type = Exponent<N>;
    using term_type = Term<N>;
    static constexpr std::size_t arity = N;

    Polynomial() = default;
    Polynomial(const Rational& c) {  // NOLINT: implicit constant embedding
        if (c != 0) terms_.push_back({exponent_type{}, c});
    }
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
    Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT

    static Polynomial variable(std::size_t i) {
        if (i >= N) throw std::out_of_range("variable index out of range");
        exponent_type e{};
        e[i] = 1;
        return monomial(e, 1);
    }

    static Polynomial monomial(const exponent_type& e, const Rational& c) {
        Polynomial p;
        if (c != 0) p.terms_.push_back({e, c});
        return p;
    }

    /// Builds a canonical polynomial from arbitrary terms: like terms are
    /// combined, zeros dropped, order fixed.
    static Polynomial from_terms(std::vector<term_type> terms) {
        std::unordered_map<exponent_type, Rational, ExponentHash<N>> acc;
        acc.reserve(terms.size());
        for (auto& t : terms) acc[t.exponent] += t.coefficient;
        return from_map(std::move(acc));
    }

    const std::vector<term_type>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].exponent) == 0);
    }

    Rational coefficient(const exponent_type& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const term_type& t, const exponent_type& key) {
                                       return term_order_before(t.exponent, key);
                                   });
        if (it != terms_.end() && it->exponent == e) return it->coefficient;
        return 0;
    }

    /// Value of a constant polynomial; throws for nonconstant input.
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_[0].coefficient;
    }

    std::vector<exponent_type> support() const {
        std::vector<exponent_type> s;
        s.reserve(terms_.size());
        for (const auto& t : terms_) s.push_back(t.exponent);
        return s;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coefficient = -t.coefficient;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.size() == 1 || b.size() == 1) {
            const auto& m = a.size() == 1 ? a : b;
            const auto& q = a.size() == 1 ? b : a;
            return q.times_term(m.terms_[0]);
        }
        // Multiply integer numerators over a common denominator; much cheaper
        // than accumulating canonical rationals.
        Integer den_a, den_b;
        const auto num_a = a.scaled_numerators(den_a), num_b = b.scaled_numerators(den_b);
        std::unordered_map<exponent_type, Integer, ExponentHash<N>> acc;
        acc.reserve(a.size() * b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& ea = a.terms_[i].exponent;
            for (std::size_t j = 0; j < b.size(); ++j) {
                exponent_type e;
                for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + b.terms_[j].exponent[k];
                mpz_addmul(acc[e].get_mpz_t(), num_a[i].get_mpz_t(), num_b[j].get_mpz_t());
            }
        }
        const Integer den = den_a * den_b;
        Polynomial p;
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc) {
            if (c == 0) continue;
            Rational q;
            mpz_swap(mpq_numref(q.get_mpq_t()), c.get_mpz_t());
            mpz_set(mpq_denref(q.get_mpq_t()), den.get_mpz_t());
            if (den != 1) q.canonicalize();
            p.terms_.push_back({e, std::move(q)});
        }
        p.sort_terms();
        return p;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        if (c == 0) return {};
        Polynomial r = p;
        for (auto& t : r.terms_) t.coefficient *= c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

private:
    template <class Map>
    static Polynomial from_map(Map&& acc) {
        Polynomial p;
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (c != 0) p.terms_.push_back({e, std::move(c)});
        p.sort_terms();
        return p;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [](const term_type& s, const term_type& t) {
            return term_order_before(s.exponent, t.exponent);
        });
    }

    // Numerators scaled to the lcm of the denominators, which is returned in den.
    std::vector<Integer> scaled_numerators(Integer& den) const {
        den = 1;
        for (const auto& t : terms_)
            if (t.coefficient.get_den() != 1) den = lcm(den, Integer(t.coefficient.get_den()));
        std::vector<Integer> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (den == 1)
                out.push_back(t.coefficient.get_num());
            else
                out.push_back(t.coefficient.get_num() * (den / t.coefficient.get_den()));
        }
        return out;
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial r;
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && term_order_before(i->exponent, j->exponent))) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || term_order_before(j->exponent, i->exponent)) {
                r.terms_.push_back({j->exponent, subtract ? Rational(-j->coefficient) : j->coefficient});
                ++j;
            } else {
                Rational c = subtract ? Rational(i->coefficient - j->coefficient)
                                      : Rational(i->coefficient + j->coefficient);
                if (c != 0) r.terms_.push_back({i->exponent, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    // Multiplying by a single term preserves the order.
    Polynomial times_term(const term_type& m) const {
        Polynomial r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            exponent_type e;
            for (std::size_t i = 0; i < N; ++i) e[i] = t.exponent[i] + m.exponent[i];
            r.terms_.push_back({e, t.coefficient * m.coefficient});
        }
        return r;
    }

    std::vector<term_type> terms_;
};

using Poly3 = Polynomial<3>;
using Poly2 = Polynomial<2>;

/// p^n by repeated squaring.
template <std::size_t N>
Polynomial<N> pow(const Polynomial<N>& p, std::uint64_t n) {
    Polynomial<N> result(1);
    Polynomial<N> base = p;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

template <std::size_t N>
Polynomial<N> partial(const Polynomial<N>& p, std::size_t v) {
    if (v >= N) throw std::out_of_range("variable index out of range");
    std::vector<Term<N>> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        if (t.exponent[v] == 0) continue;
        Term<N> d{t.exponent, t.coefficient * t.exponent[v]};
        --d.exponent[v];
        out.push_back(std::move(d));
    }
    return Polynomial<N>::from_terms(std::move(out));
}

template <std::size_t N>
Rational evaluate(const Polynomial<N>& p, const std::array<Rational, N>& point) {
    Rational sum = 0;
    for (const auto& t : p.terms()) {
        Rational m = t.coefficient;
        for (std::size_t i = 0; i < N; ++i) {
            if (t.exponent[i] == 0) continue;
            Rational pw;
            mpz_pow_ui(mpq_numref(pw.get_mpq_t()), point[i].get_num_mpz_t(), t.exponent[i]);
            mpz_pow_ui(mpq_denref(pw.get_mpq_t()), point[i].get_den_mpz_t(), t.exponent[i]);
            m *= pw;
        }
        sum += m;
    }
    return sum;
}

namespace detail {

// Horner scheme in variable i, recursing into the coefficients, which
// involve only variables i+1..N-1.
template <std::size_t N, std::size_t M>
Polynomial<M> substitute_from(const std::vector<Term<N>>& terms, std::size_t i,
                              const std::array<Polynomial<M>, N>& images,
                              std::array<std::vector<Polynomial<M>>, N>& powers) {
    if (terms.empty()) return {};
    if (i == N) {
        Rational c = 0;
        for (const auto& t : terms) c += t.coefficient;
        return Polynomial<M>(c);
    }
    auto power = [&](std::uint32_t k) -> const Polynomial<M>& {
        auto& cache = powers[i];
        while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    std::map<std::uint32_t, std::vector<Term<N>>, std::greater<>> by_power;
    for (const auto& t : terms) {
        auto stripped = t;
        stripped.exponent[i] = 0;
        by_power[t.exponent[i]].push_back(std::move(stripped));
    }
    Polynomial<M> acc;
    std::uint32_t current = by_power.begin()->first;
    for (const auto& [k, group] : by_power) {
        if (!acc.is_zero()) acc *= power(current - k);
        acc += substitute_from(group, i + 1, images, powers);
        current = k;
    }
    if (current > 0) acc *= power(current);
    return acc;
}

}  // namespace detail

/// Replaces variable i of p by images[i] and expands.
template <std::size_t N, std::size_t M>
Polynomial<M> substitute(const Polynomial<N>& p, const std::array<Polynomial<M>, N>& images) {
    std::array<std::vector<Polynomial<M>>, N> powers;
    for (std::size_t i = 0; i < N; ++i) powers[i].push_back(Polynomial<M>(1));
    return detail::substitute_from(p.terms(), 0, images, powers);
}

template <std::size_t N>
Degree weighted_degree(const Polynomial<N>& p, const WeightVector<N>& w) {
    if (p.is_zero()) return Degree::neg_infinity();
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (const auto& t : p.terms()) best = std::max(best, w.dot(t.exponent));
    return Degree(best);
}

template <std::size_t N>
Degree total_degree(const Polynomial<N>& p) {
    // Terms are sorted by descending total degree.
    if (p.is_zero()) return Degree::neg_infinity();
    return Degree(total_degree(p.terms().front().exponent));
}

/// Sum of the terms of maximal weighted degree.
template <std::size_t N>
Polynomial<N> weighted_leading_form(const Polynomial<N>& p, const WeightVector<N>& w) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no leading form");
    const auto d = weighted_degree(p, w).value();
    std::vector<Term<N>> out;
    for (const auto& t : p.terms())
        if (w.dot(t.exponent) == d) out.push_back(t);
    return Polynomial<N>::from_terms(std::move(out));
}

/// Highest-degree homogeneous component.
template <std::size_t N>
Polynomial<N> leading_form(const Polynomial<N>& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no leading form");
    const auto d = total_degree(p.terms().front().exponent);
    std::vector<Term<N>> out;
    for (const auto& t : p.terms()) {
        if (total_degree(t.exponent) != d) break;
        out.push_back(t);
    }
    return Polynomial<N>::from_terms(std::move(out));
}

template <std::size_t N>
bool is_homogeneous(const Polynomial<N>& p) {
    return p.is_zero() || total_degree(p.terms().front().exponent) == total_degree(p.terms().back().exponent);
}

template <std::size_t N>
struct HomogeneousComponent {
    std::int64_t degree;
    Polynomial<N> component;
};

/// Nonzero homogeneous components by ascending degree.
template <std::size_t N>
std::vector<HomogeneousComponent<N>> homogeneous_components(const Polynomial<N>& p) {
    std::vector<HomogeneousComponent<N>> out;
    const auto& ts = p.terms();
    for (auto it = ts.end(); it != ts.begin();) {
        const auto d = total_degree(std::prev(it)->exponent);
        auto first = it;
        while (first != ts.begin() && total_degree(std::prev(first)->exponent) == d) --first;
        out.push_back({d, Polynomial<N>::from_terms(std::vector<Term<N>>(first, it))});
        it = first;
    }
    return out;
}

/// x*z + y^2
inline Poly3 invariant_quadric() {
    return Poly3::variable(var::x) * Poly3::variable(var::z) + pow(Poly3::variable(var::y), 2);
}

/// p(x*z + y^2, z)
inline Poly3 expand_bivariate(const Poly2& p) {
    return substitute(p, std::array<Poly3, 2>{invariant_quadric(), Poly3::variable(var::z)});
}

}  // namespace nagata
