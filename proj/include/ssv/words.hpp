/*
  words.hpp

  Reduction of a weight to the fundamental domain, the reduced word and
  its beta-roots, canonical reduced words for finite permutations, and
  the Bruhat-style order on weights via subwords.
*/
#pragma once

#include <set>
#include <vector>

#include "ssv/rootsys.hpp"

namespace ssv {

struct ReducedDecomposition {
    Exponent lambda;       // representative in the fundamental domain
    std::vector<int> word; // indices in {0..r-1}, composition order
    std::vector<AffineRoot> betas; // metaplectic positive roots, one per letter
};

// Greedy descent to the fundamental domain: while some adjacent pair is
// increasing apply that s_i (smallest i first), else apply s_0 when
// mu_1 - mu_r exceeds n. The recorded indices, in application order,
// form a reduced word w with w(lambda) = mu in the metaplectic affine
// action; beta_j is the right-to-left suffix reflection of the j-th
// metaplectic simple root. Asserts every beta is positive and pairs
// nontrivially with lambda.
ReducedDecomposition reduce_to_fundamental(const Exponent& mu, const MetaplecticContext& ctx);

// Deterministic reduced word for a finite permutation: repeatedly move
// the largest misplaced value to its slot by adjacent swaps. Length is
// the inversion count.
std::vector<int> canonical_perm_word(const Perm& u);

// { nu : nu <= mu } via all subwords of the reduced word of mu.
std::set<Exponent> bruhat_lower_set(const Exponent& mu, const MetaplecticContext& ctx);

// True iff reflecting mu in rho strictly lowers it, i.e. <rho, mu> < 0.
bool order_compare_step(const Exponent& mu, const AffineRoot& rho,
                        const MetaplecticContext& ctx);

} // namespace ssv
