/*
  formulas.hpp

  The alcove-walk sums: nonsymmetric polynomials E_mu, their permuted
  starting-chamber variants, the symmetric P_mu over the full Weyl
  orbit, and the q -> 0 / q -> infinity degenerations of both.

  All sums are exact. Walks of one type share the denominator
  prod_j (B_j - A_j) built from gamma_j = A_j / B_j, so accumulation
  per exponent stays polynomial and the division happens once.
*/
#pragma once

#include "ssv/laurent.hpp"
#include "ssv/rootsys.hpp"
#include "ssv/walks.hpp"
#include "ssv/words.hpp"

namespace ssv {

enum class Normalization { monic, raw };

struct WalkTerm {
    Exponent exponent;  // n*wt(p) + phi(p) lambda
    Scalar coefficient; // sigma-product times fold factors
};

// sigma-product of a reduced word u_1..u_t in letters 1..r-1:
// prod_{a=1}^{t} sigma((lambda, s_{u_t}...s_{u_{a+1}} alpha_{u_a})).
// Independent of the chosen reduced word; the tests enforce that.
Scalar sigma_product(const std::vector<int>& word, const Exponent& lambda,
                     const MetaplecticContext& ctx);

// The contribution of one walk of type dec.word: the sigma-product of
// phi(p) times (k^{-1}-k)/(1-gamma_j) over positive folds and
// (k^{-1}-k) gamma_j/(1-gamma_j) over negative folds, where
// gamma_j = gamma(-beta_j; lambda). Denominators are nonzero because
// every gamma_j has positive q-degree.
WalkTerm walk_coefficient(const AlcoveWalk& p, const ReducedDecomposition& dec,
                          const MetaplecticContext& ctx);

// E_mu as the sum of walk terms over all walks of the type of mu from
// the identity. Raw keeps the literal sum; monic divides by the
// unfolded walk's sigma-product, making the coefficient of x^mu one.
LaurentPolynomial compute_E(const Exponent& mu, const MetaplecticContext& ctx,
                            Normalization normalization = Normalization::monic);

// The same sum started from the finite permutation u: a nonzero scalar
// multiple of T_u E_mu. Returned raw; no canonical normalization.
LaurentPolynomial compute_TuE(const Perm& u, const Exponent& mu,
                              const MetaplecticContext& ctx);

// P_mu for dominant mu: sum over u in W_0 of k^{length(u)} times the
// walk sum started at u. Throws domain_error otherwise.
LaurentPolynomial compute_P(const Exponent& mu, const MetaplecticContext& ctx);

// q -> 0 keeps walks with only positive folds and replaces each fold
// factor by k^{-1}-k; q -> infinity keeps only negative folds with
// k-k^{-1}. Coefficients are q-free.
LaurentPolynomial compute_E_limit(const Exponent& mu, const MetaplecticContext& ctx,
                                  LimitDirection direction,
                                  Normalization normalization = Normalization::monic);

LaurentPolynomial compute_P_limit(const Exponent& mu, const MetaplecticContext& ctx,
                                  LimitDirection direction);

} // namespace ssv
