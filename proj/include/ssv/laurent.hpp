/*
  laurent.hpp

  Sparse Laurent polynomials in x_1..x_r over Scalar, plus the three
  special kernels the walk formulas and operators need: the closed-form
  geometric ratio, the power substitution x_i -> x_i^n with q -> q^n,
  and exact division by 1 - c*x^alpha.

  Exponent vectors are dense integer vectors of length r; term iteration
  is in lexicographic exponent order.
*/
#pragma once

#include <map>
#include <vector>

#include "ssv/field.hpp"

namespace ssv {

using Exponent = std::vector<int>;

class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Scalar>;

    explicit LaurentPolynomial(int rank) : rank_(rank) {
        if (rank < 1) throw malformed_error("rank must be positive");
    }
    static LaurentPolynomial zero(int rank) { return LaurentPolynomial(rank); }
    static LaurentPolynomial constant(int rank, const Scalar& c);
    static LaurentPolynomial monomial(const Exponent& e, const Scalar& c);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of x^e, zero Scalar when absent.
    Scalar coefficient(const Exponent& e) const;
    std::vector<Exponent> support() const;

    void add_term(const Exponent& e, const Scalar& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const Scalar& c) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);

    // Structural equality of term maps (used after normalization);
    // mathematical equality is poly_equals.
    bool operator==(const LaurentPolynomial& o) const;

    // Drops terms whose coefficient is zero under the reduction rule,
    // and optionally gcd-normalizes every coefficient.
    LaurentPolynomial pruned(const GHalfRule& rule = GHalfRule::none()) const;
    LaurentPolynomial normalized(const GHalfRule& rule = GHalfRule::none()) const;
    // Applies the exponent reduction to every coefficient and drops the
    // terms that vanish, without any gcd work.
    LaurentPolynomial reduced(const GHalfRule& rule) const;

private:
    int rank_;
    TermMap terms_;
};

// Coefficientwise scalar_equals, both directions of support.
bool poly_equals(const LaurentPolynomial& a, const LaurentPolynomial& b,
                 const GHalfRule& rule = GHalfRule::none());

// Rescales f by a common multiple of its coefficient denominators so
// every coefficient becomes polynomial. The Hecke and Y operators only
// introduce monomial denominators, so feeding them denominator-free
// input keeps coefficient growth additive along long operator chains.
LaurentPolynomial clear_denominators(const LaurentPolynomial& f);

// Closed form of (1 - y^{-t/step}) / (1 - y) as a finite sum of powers
// of y, where y = ycoef * x^{ystep} and t is a multiple of step:
//   t = 0   ->  0
//   t > 0   ->  -(y^{-1} + ... + y^{-t/step})
//   t < 0   ->  y^0 + y^1 + ... + y^{-t/step - 1}
// For the finite simple reflections y = x^{n alpha_i} (ycoef = 1); for
// the affine one y = q^n x^{-n theta} (ycoef = q^n).
LaurentPolynomial geometric_ratio(int t, int step, const Exponent& ystep, const Scalar& ycoef);

// x_i -> x_i^n on exponents and q -> q^n in every coefficient.
LaurentPolynomial poly_substitute_power(const LaurentPolynomial& a, int n);

// Exact quotient a / (1 - c*x^alpha); throws not_divisible_error if the
// division leaves a remainder. alpha must be nonzero.
LaurentPolynomial exact_divide_linear(const LaurentPolynomial& a, const Scalar& c,
                                      const Exponent& alpha);

} // namespace ssv
