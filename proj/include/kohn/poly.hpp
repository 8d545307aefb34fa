#pragma once

#include <optional>
#include <vector>

#include "kohn/monomial.hpp"
#include "kohn/rational.hpp"
#include "kohn/rng.hpp"

namespace kohn {

struct Term {
    Exponents exp;
    Rat coef;
};

// Sparse multivariate polynomial over Q.  Terms are kept sorted descending
// under the canonical degrevlex order with no zero coefficients, so equal
// polynomials have identical representations (hashing, serialization and
// trace bytes all rely on this).
class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(unsigned nvars) : nvars_(nvars) {}
    Poly(unsigned nvars, std::vector<Term> terms);

    static Poly zero(unsigned nvars) { return Poly(nvars); }
    static Poly constant(unsigned nvars, const Rat& c);
    static Poly variable(unsigned nvars, unsigned i);  // z_{i+1}, 0-based index
    static Poly monomial(unsigned nvars, Exponents e, const Rat& c);

    unsigned nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exp(terms_[0].exp));
    }
    // Coefficient of the constant monomial (the value at 0).
    Rat constant_term() const;
    // Invertible as a germ at 0: nonzero value at the origin.
    bool is_unit_germ() const { return sgn(constant_term()) != 0; }

    unsigned degree() const;      // total degree, 0 for the zero polynomial
    unsigned low_degree() const;  // minimal total degree among terms

    Rat coefficient(const Exponents& e) const;

    Poly operator-() const;
    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator*(const Poly& q) const;
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }

    bool operator==(const Poly& q) const;
    bool operator!=(const Poly& q) const { return !(*this == q); }

    Poly scaled(const Rat& c) const;
    Poly mul_term(const Rat& c, const Exponents& e) const;
    Poly pow(unsigned e) const;

    // True if only the variables with indices in [from, nvars) occur.
    bool uses_only_vars_from(unsigned from) const;

    std::size_t hash() const;

private:
    unsigned nvars_;
    std::vector<Term> terms_;

    void normalize();
    friend Poly add_impl(const Poly& p, const Poly& q, int sign);
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

// Exact formal derivative with respect to variable i (0-based).
Poly partial_derivative(const Poly& p, unsigned i);

// Determinant of the partial Jacobian matrix d(fs_j)/d(z_{vars_i}),
// expanded by exact cofactors with subset memoization.
Poly jacobian_det(const std::vector<Poly>& fs, const std::vector<unsigned>& vars);

// Substitution p(g_1, ..., g_m); p has m variables, the g_i share a ring.
Poly compose(const Poly& p, const std::vector<Poly>& gs);

// Sum c_j fs_j with the given exact coefficients.
Poly linear_combination(const std::vector<Poly>& fs, const std::vector<Rat>& coeffs);

// `count` random combinations sum c_j fs_j, with integer coefficients drawn
// uniformly from [-bound, bound]; a draw yielding the zero polynomial is
// retried.  Deterministic given the RandomSource state.
std::vector<Poly> random_linear_combinations(const std::vector<Poly>& fs, unsigned count,
                                             RandomSource& rng, long bound = 101);

// Vanishing order of p(0,...,0,z_i,0,...,0); nullopt means the restriction
// is identically zero (order infinity).  For a Weierstrass polynomial in
// z_i this is its degree.
std::optional<unsigned> ord_in_variable(const Poly& p, unsigned i);

// Degree in the single variable i.
unsigned degree_in_variable(const Poly& p, unsigned i);

// Coefficient of z_i^d as a polynomial in the remaining variables
// (returned in the same ring with slot i zeroed).
Poly coefficient_in_variable(const Poly& p, unsigned i, unsigned d);

}  // namespace kohn
