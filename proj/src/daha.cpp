/*
  daha.cpp

  Hecke operators, Y lattice operators, intertwiners, and symmetrizer.
*/
#include "ssv/daha.hpp"

#include "ssv/words.hpp"

namespace ssv {

namespace {

Scalar k_var(int exp) { return Scalar::variable(kVarK, exp); }
Scalar q_var(int exp) { return Scalar::variable(kVarQ, exp); }

Scalar k_minus_kinv() { return k_var(1) - k_var(-1); }

long residue(long j, int n) { return ((j % n) + n) % n; }

Exponent scaled(const Exponent& a, int n) {
    Exponent out = a;
    for (int& x : out) x *= n;
    return out;
}

// Y^{n e_i} for 1-based i: apply T_i, ..., T_{r-1}, omega, then
// T_1^{-1}, ..., T_{i-1}^{-1}.
LaurentPolynomial apply_Y_eps(int i, const LaurentPolynomial& f,
                              const MetaplecticContext& ctx) {
    LaurentPolynomial g = f;
    for (int j = i; j <= ctx.rank() - 1; ++j) g = apply_Ti(j, g, ctx);
    g = apply_omega(g, ctx);
    for (int j = 1; j <= i - 1; ++j) g = apply_Ti_inverse(j, g, ctx);
    return g;
}

// (Y^{n e_i})^{-1}: apply T_{i-1}, ..., T_1, omega^{-1}, then
// T_{r-1}^{-1}, ..., T_i^{-1}.
LaurentPolynomial apply_Y_eps_inverse(int i, const LaurentPolynomial& f,
                                      const MetaplecticContext& ctx) {
    LaurentPolynomial g = f;
    for (int j = i - 1; j >= 1; --j) g = apply_Ti(j, g, ctx);
    g = apply_omega(g, ctx, true);
    for (int j = ctx.rank() - 1; j >= i; --j) g = apply_Ti_inverse(j, g, ctx);
    return g;
}

} // namespace

LaurentPolynomial apply_Ti(int i, const LaurentPolynomial& f, const MetaplecticContext& ctx) {
    const int r = ctx.rank(), n = ctx.degree();
    if (i < 1 || i >= r) throw malformed_error("finite Hecke generator index out of range");
    if (f.rank() != r) throw malformed_error("rank mismatch");
    const Exponent alpha = ctx.alpha(i).finite;
    const Exponent nalpha = scaled(alpha, n);
    const Scalar kk = k_minus_kinv();

    LaurentPolynomial out(r);
    for (const auto& [e, c] : f.terms()) {
        long j = dot(e, alpha);
        long t = j - residue(j, n);
        if (t != 0)
            out += geometric_ratio(static_cast<int>(t), n, nalpha, Scalar(1)) *
                   LaurentPolynomial::monomial(e, c * kk);
        Exponent se = e;
        std::swap(se[i - 1], se[i]);
        out.add_term(se, c * ctx.g_param(j));
    }
    return out.reduced(ctx.ghalf_rule());
}

LaurentPolynomial apply_Ti_inverse(int i, const LaurentPolynomial& f,
                                   const MetaplecticContext& ctx) {
    return apply_Ti(i, f, ctx) - f * k_minus_kinv();
}

LaurentPolynomial apply_T0(const LaurentPolynomial& f, const MetaplecticContext& ctx) {
    const int r = ctx.rank(), n = ctx.degree();
    if (f.rank() != r) throw malformed_error("rank mismatch");
    const Exponent theta = ctx.theta().finite;
    const Exponent neg_ntheta = scaled(theta, -n);
    const Scalar kk = k_minus_kinv();

    LaurentPolynomial out(r);
    for (const auto& [e, c] : f.terms()) {
        long m = dot(e, theta);
        long t = -m - residue(-m, n);
        if (t != 0)
            out += geometric_ratio(static_cast<int>(t), n, neg_ntheta, q_var(n)) *
                   LaurentPolynomial::monomial(e, c * kk);
        Exponent se = e;
        std::swap(se[0], se[r - 1]);
        out.add_term(se, c * ctx.g_param(-m) * q_var(static_cast<int>(m)));
    }
    return out.reduced(ctx.ghalf_rule());
}

LaurentPolynomial apply_T0_inverse(const LaurentPolynomial& f, const MetaplecticContext& ctx) {
    return apply_T0(f, ctx) - f * k_minus_kinv();
}

LaurentPolynomial apply_omega(const LaurentPolynomial& f, const MetaplecticContext& ctx,
                              bool inverse) {
    const int r = ctx.rank();
    if (f.rank() != r) throw malformed_error("rank mismatch");
    LaurentPolynomial out(r);
    for (const auto& [e, c] : f.terms()) {
        Exponent re(r);
        if (!inverse) {
            re[0] = e[r - 1];
            for (int i = 1; i < r; ++i) re[i] = e[i - 1];
            out.add_term(re, c * q_var(-e[r - 1]));
        } else {
            re[r - 1] = e[0];
            for (int i = 0; i < r - 1; ++i) re[i] = e[i + 1];
            out.add_term(re, c * q_var(e[0]));
        }
    }
    return out;
}

LaurentPolynomial apply_Y_lattice(const Exponent& mu, long s, const LaurentPolynomial& f,
                                  const MetaplecticContext& ctx) {
    const int r = ctx.rank(), n = ctx.degree();
    if (static_cast<int>(mu.size()) != r || f.rank() != r)
        throw malformed_error("rank mismatch");
    LaurentPolynomial g = f;
    for (int i = 1; i <= r; ++i) {
        for (int rep = 0; rep < mu[i - 1]; ++rep) g = apply_Y_eps(i, g, ctx);
        for (int rep = 0; rep < -mu[i - 1]; ++rep) g = apply_Y_eps_inverse(i, g, ctx);
    }
    if (s != 0) g = g * q_var(static_cast<int>(-s * n));
    return g;
}

LaurentPolynomial apply_S(int i, const LaurentPolynomial& f, const MetaplecticContext& ctx) {
    const int r = ctx.rank(), n = ctx.degree();
    if (i < 0 || i >= r) throw malformed_error("intertwiner index out of range");
    if (f.rank() != r) throw malformed_error("rank mismatch");

    LaurentPolynomial g(r);
    if (i >= 1) {
        Exponent neg_alpha(r, 0);
        neg_alpha[i - 1] = -1;
        neg_alpha[i] = 1;
        g = apply_Ti(i, f - apply_Y_lattice(neg_alpha, 0, f, ctx), ctx);
    } else {
        // 1 - Y^{-alpha_0^(n)} with -alpha_0^(n) = Psi(theta - delta).
        LaurentPolynomial h = f - apply_Y_lattice(ctx.theta().finite, -1, f, ctx);
        // T_0^vee: multiply by x^{-n theta}, then T_{s_theta}^{-1} along
        // the palindrome word (1, ..., r-1, ..., 1).
        h = h * LaurentPolynomial::monomial(scaled(ctx.theta().finite, -n), Scalar(1));
        for (int j = 1; j <= r - 1; ++j) h = apply_Ti_inverse(j, h, ctx);
        for (int j = r - 2; j >= 1; --j) h = apply_Ti_inverse(j, h, ctx);
        g = h;
    }
    return (g + f * (k_var(-1) - k_var(1))).reduced(ctx.ghalf_rule());
}

LaurentPolynomial intertwiner_E(const Exponent& mu, const MetaplecticContext& ctx) {
    ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    LaurentPolynomial E = LaurentPolynomial::monomial(dec.lambda, Scalar(1));
    for (int t = static_cast<int>(dec.word.size()) - 1; t >= 0; --t)
        E = apply_S(dec.word[t], E, ctx);
    // The chain starts from a denominator-free monomial, so the one
    // division making the result monic happens here at the end.
    Scalar lead = E.coefficient(mu);
    if (lead.num().reduce(ctx.ghalf_rule()).is_zero())
        throw internal_error("intertwiner produced a vanishing leading coefficient");
    return (E * lead.inverse()).reduced(ctx.ghalf_rule());
}

LaurentPolynomial apply_U(const LaurentPolynomial& f, const MetaplecticContext& ctx) {
    const int r = ctx.rank();
    if (f.rank() != r) throw malformed_error("rank mismatch");
    LaurentPolynomial out(r);
    for (const Perm& u : all_permutations(r)) {
        std::vector<int> word = canonical_perm_word(u);
        LaurentPolynomial g = f;
        for (int t = static_cast<int>(word.size()) - 1; t >= 0; --t)
            g = apply_Ti(word[t], g, ctx);
        out += g * k_var(static_cast<int>(word.size()));
    }
    return out.reduced(ctx.ghalf_rule());
}

bool eigenvalue_check(const LaurentPolynomial& E, const Exponent& mu,
                      const MetaplecticContext& ctx) {
    const int r = ctx.rank(), n = ctx.degree();
    // The Y operators are linear, so a scaled polynomial carries the same
    // eigenvalue data and the chain below never leaves polynomial
    // coefficients.
    LaurentPolynomial F = clear_denominators(E);
    for (int i = 1; i <= r; ++i) {
        Exponent ei(r, 0);
        ei[i - 1] = 1;
        AffineRoot nei(scaled(ei, n), 0);
        LaurentPolynomial lhs = apply_Y_lattice(ei, 0, F, ctx);
        if (!poly_equals(lhs, F * ctx.gamma_eval(nei, mu), ctx.ghalf_rule()))
            return false;
    }
    return true;
}

LaurentPolynomial apply_CG(int i, const LaurentPolynomial& f, const MetaplecticContext& ctx) {
    const int r = ctx.rank(), n = ctx.degree();
    if (i < 1 || i >= r) throw malformed_error("finite reflection index out of range");
    if (f.rank() != r) throw malformed_error("rank mismatch");
    const Exponent nalpha = scaled(ctx.alpha(i).finite, n);
    LaurentPolynomial g = (apply_Ti(i, f, ctx) - f * k_var(1)).reduced(ctx.ghalf_rule());
    LaurentPolynomial a = g - LaurentPolynomial::monomial(nalpha, Scalar(1)) * g;
    try {
        return f + exact_divide_linear(a, k_var(2), nalpha) * k_var(1);
    } catch (const not_divisible_error&) {
        // For degree n > 1 the Weyl action takes a generic polynomial
        // outside the Laurent ring; only then does the division fail.
        throw not_divisible_error("Weyl action does not keep this polynomial Laurent");
    }
}

} // namespace ssv
