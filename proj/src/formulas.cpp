/*
  formulas.cpp

  Alcove-walk sums for E_mu, T_u E_mu, P_mu, and their q-limits.
*/
#include "ssv/formulas.hpp"

namespace ssv {

namespace {

Scalar k_var(int exp) { return Scalar::variable(kVarK, exp); }

Scalar kinv_minus_k() { return k_var(-1) - k_var(1); }
Scalar k_minus_kinv() { return k_var(1) - k_var(-1); }

// gamma_j = A_j / B_j as parameter monomials, with the two-term
// denominators D_j = B_j - A_j and their product. Every walk of the
// type shares prod_j D_j, so walk numerators stay polynomial.
struct GammaData {
    std::vector<ParamPolynomial> A, B, D;
    ParamPolynomial full_den = ParamPolynomial(1);
};

GammaData gamma_data(const ReducedDecomposition& dec, const MetaplecticContext& ctx) {
    GammaData gd;
    for (const AffineRoot& beta : dec.betas) {
        auto [a, b] = ctx.gamma_monomials(-beta, dec.lambda);
        ParamPolynomial d = b - a;
        gd.full_den = gd.full_den * d;
        gd.A.push_back(std::move(a));
        gd.B.push_back(std::move(b));
        gd.D.push_back(std::move(d));
    }
    return gd;
}

Exponent walk_exponent(const AlcoveWalk& p, const ReducedDecomposition& dec,
                       const MetaplecticContext& ctx) {
    Exponent e = perm_apply(p.phi, dec.lambda);
    for (int i = 0; i < ctx.rank(); ++i) e[i] += ctx.degree() * p.wt[i];
    return e;
}

Scalar walk_sigma_product(const AlcoveWalk& p, const ReducedDecomposition& dec,
                          const MetaplecticContext& ctx) {
    return sigma_product(canonical_perm_word(p.phi), dec.lambda, ctx);
}

// Adds prefactor * sum of walk terms over all walks of type dec.word
// from start, with each term scaled by the shared denominator: a fold
// at step j contributes B_j (positive) or A_j (negative) next to the
// global k^{-1}-k power, and every unfolded step contributes D_j.
void accumulate_walks(LaurentPolynomial& acc, const AffineWeylElement& start,
                      const Scalar& prefactor, const ReducedDecomposition& dec,
                      const GammaData& gd, const MetaplecticContext& ctx) {
    for (const AlcoveWalk& p : enumerate_walks(start, dec.word, ctx)) {
        const int folds = static_cast<int>(p.pos_folds.size() + p.neg_folds.size());
        Scalar c = prefactor * walk_sigma_product(p, dec, ctx) * kinv_minus_k().pow(folds);
        ParamPolynomial shape(1);
        std::size_t pi = 0, ni = 0;
        for (std::size_t j = 0; j < dec.word.size(); ++j) {
            const int js = static_cast<int>(j);
            if (pi < p.pos_folds.size() && p.pos_folds[pi] == js) {
                shape = shape * gd.B[j];
                ++pi;
            } else if (ni < p.neg_folds.size() && p.neg_folds[ni] == js) {
                shape = shape * gd.A[j];
                ++ni;
            } else {
                shape = shape * gd.D[j];
            }
        }
        acc.add_term(walk_exponent(p, dec, ctx), c * Scalar(std::move(shape)));
    }
}

void accumulate_limit_walks(LaurentPolynomial& acc, const AffineWeylElement& start,
                            const Scalar& prefactor, const ReducedDecomposition& dec,
                            LimitDirection direction, const MetaplecticContext& ctx) {
    const WalkFilter mode = direction == LimitDirection::zero
                                ? WalkFilter::positive_folds_only
                                : WalkFilter::negative_folds_only;
    const Scalar fold_factor =
        direction == LimitDirection::zero ? kinv_minus_k() : k_minus_kinv();
    for (const AlcoveWalk& p : walk_filter(enumerate_walks(start, dec.word, ctx), mode)) {
        const int folds = static_cast<int>(p.pos_folds.size() + p.neg_folds.size());
        Scalar c = prefactor * walk_sigma_product(p, dec, ctx) * fold_factor.pow(folds);
        acc.add_term(walk_exponent(p, dec, ctx), c);
    }
}

Scalar unfolded_sigma_product(const ReducedDecomposition& dec, const MetaplecticContext& ctx) {
    AlcoveWalk unfolded =
        build_walk(AffineWeylElement::identity(ctx.rank()), dec.word, 0, ctx);
    return walk_sigma_product(unfolded, dec, ctx);
}

Exponent zero_translation(int r) { return Exponent(r, 0); }

} // namespace

Scalar sigma_product(const std::vector<int>& word, const Exponent& lambda,
                     const MetaplecticContext& ctx) {
    Scalar prod(1);
    Perm z = perm_identity(ctx.rank());
    for (int a = static_cast<int>(word.size()) - 1; a >= 0; --a) {
        const Exponent root = perm_apply(z, ctx.alpha(word[a]).finite);
        prod *= ctx.sigma_eval(dot(lambda, root));
        z = perm_compose(z, perm_transposition(ctx.rank(), word[a] - 1, word[a]));
    }
    return prod;
}

WalkTerm walk_coefficient(const AlcoveWalk& p, const ReducedDecomposition& dec,
                          const MetaplecticContext& ctx) {
    if (p.word != dec.word) throw malformed_error("walk type does not match the decomposition");
    Scalar c = walk_sigma_product(p, dec, ctx);
    for (int j : p.pos_folds) {
        const Scalar g = ctx.gamma_eval(-dec.betas[j], dec.lambda);
        c = c * kinv_minus_k() / (Scalar(1) - g);
    }
    for (int j : p.neg_folds) {
        const Scalar g = ctx.gamma_eval(-dec.betas[j], dec.lambda);
        c = c * kinv_minus_k() * g / (Scalar(1) - g);
    }
    return WalkTerm{walk_exponent(p, dec, ctx), c};
}

LaurentPolynomial compute_E(const Exponent& mu, const MetaplecticContext& ctx,
                            Normalization normalization) {
    const ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    const GammaData gd = gamma_data(dec, ctx);
    LaurentPolynomial acc(ctx.rank());
    accumulate_walks(acc, AffineWeylElement::identity(ctx.rank()), Scalar(1), dec, gd, ctx);
    Scalar scale(ParamPolynomial(1), gd.full_den);
    if (normalization == Normalization::monic)
        scale = scale / unfolded_sigma_product(dec, ctx);
    return (acc * scale).reduced(ctx.ghalf_rule());
}

LaurentPolynomial compute_TuE(const Perm& u, const Exponent& mu,
                              const MetaplecticContext& ctx) {
    if (static_cast<int>(u.size()) != ctx.rank())
        throw malformed_error("permutation rank mismatch");
    const ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    const GammaData gd = gamma_data(dec, ctx);
    LaurentPolynomial acc(ctx.rank());
    accumulate_walks(acc, AffineWeylElement(zero_translation(ctx.rank()), u), Scalar(1),
                     dec, gd, ctx);
    return (acc * Scalar(ParamPolynomial(1), gd.full_den)).reduced(ctx.ghalf_rule());
}

LaurentPolynomial compute_P(const Exponent& mu, const MetaplecticContext& ctx) {
    if (!ctx.is_dominant(mu))
        throw domain_error("symmetric polynomial requires a dominant weight");
    const ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    const GammaData gd = gamma_data(dec, ctx);
    LaurentPolynomial acc(ctx.rank());
    for (const Perm& u : all_permutations(ctx.rank()))
        accumulate_walks(acc, AffineWeylElement(zero_translation(ctx.rank()), u),
                         k_var(perm_length(u)), dec, gd, ctx);
    return (acc * Scalar(ParamPolynomial(1), gd.full_den)).reduced(ctx.ghalf_rule());
}

LaurentPolynomial compute_E_limit(const Exponent& mu, const MetaplecticContext& ctx,
                                  LimitDirection direction, Normalization normalization) {
    const ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    LaurentPolynomial acc(ctx.rank());
    accumulate_limit_walks(acc, AffineWeylElement::identity(ctx.rank()), Scalar(1), dec,
                           direction, ctx);
    if (normalization == Normalization::monic)
        acc = acc * unfolded_sigma_product(dec, ctx).inverse();
    return acc.reduced(ctx.ghalf_rule());
}

LaurentPolynomial compute_P_limit(const Exponent& mu, const MetaplecticContext& ctx,
                                  LimitDirection direction) {
    if (!ctx.is_dominant(mu))
        throw domain_error("symmetric polynomial requires a dominant weight");
    const ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    LaurentPolynomial acc(ctx.rank());
    for (const Perm& u : all_permutations(ctx.rank()))
        accumulate_limit_walks(acc, AffineWeylElement(zero_translation(ctx.rank()), u),
                               k_var(perm_length(u)), dec, direction, ctx);
    return acc.reduced(ctx.ghalf_rule());
}

} // namespace ssv
