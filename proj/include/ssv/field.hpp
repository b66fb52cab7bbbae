/*
  field.hpp

  Exact arithmetic in the coefficient field F = Q(k, q, G_1, ..., G_m),
  m = floor(n/2). Elements are fractions of sparse multivariate
  polynomials with arbitrary-precision rational coefficients.

  Variable indexing is fixed throughout the library:
    0 -> k,  1 -> q,  2+j -> G_{j+1}.
  Monomial exponents are nonnegative; negative powers live in the
  denominator of a Scalar.

  Equality is by cross-multiplication. Gcd-based canonicalization is
  available through scalar_normalize but is never required for
  correctness of arithmetic.
*/
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssv/errors.hpp"

namespace ssv {

using Rational = mpq_class;

constexpr int kVarK = 0;
constexpr int kVarQ = 1;

// Variable index of G_j.
inline int g_var(int j) { return 1 + j; }

std::string var_name(int var);

// Exponent vector with trailing zeros trimmed, so the same monomial
// has one representation regardless of how many G-symbols are alive.
struct ParamMonomial {
    std::vector<int> e;

    ParamMonomial() = default;
    explicit ParamMonomial(std::vector<int> exps);
    static ParamMonomial one() { return ParamMonomial{}; }
    static ParamMonomial var(int v, int exp = 1);

    int exponent(int v) const { return v < static_cast<int>(e.size()) ? e[v] : 0; }
    int total_degree() const;
    bool is_one() const { return e.empty(); }

    ParamMonomial operator*(const ParamMonomial& o) const;
    // Componentwise max, the monomial lcm.
    ParamMonomial lcm(const ParamMonomial& o) const;
    bool divides(const ParamMonomial& o) const;
    // Quotient *this / o; requires o.divides(*this).
    ParamMonomial divide_by(const ParamMonomial& o) const;

    bool operator==(const ParamMonomial& o) const { return e == o.e; }
};

// Graded lexicographic order, k < q < G_1 < ... as significance order.
struct GradedLexLess {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const;
};

// Reduction rule for even metaplectic degree: G_{n/2}^2 = 1, applied
// as an exponent mod-2 reduction on one designated variable.
struct GHalfRule {
    int var = -1;
    bool enabled() const { return var >= 0; }
    static GHalfRule none() { return GHalfRule{}; }
};

class ParamPolynomial {
public:
    using TermMap = std::map<ParamMonomial, Rational, GradedLexLess>;

    ParamPolynomial() = default;
    ParamPolynomial(const Rational& c); // implicit: constant polynomial
    ParamPolynomial(long c) : ParamPolynomial(Rational(c)) {}
    static ParamPolynomial variable(int v, int exp = 1);
    static ParamPolynomial monomial(const ParamMonomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term in the graded-lex order; polynomial must be nonzero.
    const std::pair<const ParamMonomial, Rational>& leading() const;

    int degree_in(int v) const;
    int order_in(int v) const;     // minimal exponent of v over the support
    int max_var() const;           // largest variable index with positive degree, -1 if constant

    ParamPolynomial operator+(const ParamPolynomial& o) const;
    ParamPolynomial operator-(const ParamPolynomial& o) const;
    ParamPolynomial operator-() const;
    ParamPolynomial operator*(const ParamPolynomial& o) const;
    ParamPolynomial operator*(const Rational& c) const;
    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    bool operator==(const ParamPolynomial& o) const { return terms_ == o.terms_; }

    ParamPolynomial pow(int e) const;

    // Exponent mod-2 reduction of rule.var (G_{n/2}^2 = 1).
    ParamPolynomial reduce(const GHalfRule& rule) const;

    // Sum of the terms whose exponent of v equals e, with v struck out.
    ParamPolynomial coefficient_of(int v, int e) const;

    void add_term(const ParamMonomial& m, const Rational& c);

private:
    TermMap terms_;
};

// Multivariate gcd by primitive pseudo-remainder sequences, recursive in
// the largest live variable. Result is primitive with positive leading
// coefficient (1 for nonzero constants).
ParamPolynomial poly_gcd(const ParamPolynomial& a, const ParamPolynomial& b);

// Exact division; throws not_divisible_error on a remainder.
ParamPolynomial poly_divide_exact(const ParamPolynomial& a, const ParamPolynomial& b);

// Rational content (gcd of numerators over lcm of denominators, signed
// by the leading coefficient).
Rational poly_content(const ParamPolynomial& a);

// Factorization p = c * m * primitive with the rational content c, the
// monomial content m (componentwise minimum of the support), and a
// primitive part with content 1 and positive leading coefficient.
struct ContentSplit {
    Rational c;
    ParamMonomial m;
    ParamPolynomial primitive;
};
ContentSplit split_content(const ParamPolynomial& p);

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}
    Scalar(long c) : num_(Rational(c)), den_(1) {}
    Scalar(ParamPolynomial num) : num_(std::move(num)), den_(1) {}
    Scalar(ParamPolynomial num, ParamPolynomial den);

    static Scalar variable(int v, int exp = 1);

    const ParamPolynomial& num() const { return num_; }
    const ParamPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    Scalar inverse() const;
    Scalar pow(int e) const; // negative e inverts

private:
    ParamPolynomial num_, den_;
};

// Cross-multiplication equality, after G_{n/2} reduction when the rule
// is enabled. Never computes a gcd.
bool scalar_equals(const Scalar& a, const Scalar& b, const GHalfRule& rule = GHalfRule::none());

// Canonical representative: G-reduced, numerator and denominator
// coprime, denominator primitive with integer coefficients and positive
// leading coefficient.
Scalar scalar_normalize(const Scalar& a, const GHalfRule& rule = GHalfRule::none());

enum class LimitDirection { zero, infinity };

// Limit of a as a rational function of q, q -> 0 or q -> infinity.
// Throws divergent_limit_error when the limit does not exist.
Scalar scalar_limit_q(const Scalar& a, LimitDirection direction);

// Homomorphic substitution var -> Scalar; unbound variables pass through.
Scalar scalar_substitute(const Scalar& a, const std::map<int, Scalar>& bindings);

// Parses expressions over k, q, G1, G2, ... with + - * / ^, parentheses,
// integer constants, and implicit multiplication by adjacency
// ("(k-1)(k+1)", "k^4 q"). Exponents may be negative integers.
Scalar parse_scalar(const std::string& text);

// Rendering used by the text format and error messages: canonical
// expanded form such as "(k^2-1)/(k^4 q-1)".
std::string to_string(const Scalar& a);
std::string to_string(const ParamPolynomial& p);

} // namespace ssv
