/*
  words.cpp

  Reduced words, beta-roots, and the subword order.
*/
#include "ssv/words.hpp"

#include <algorithm>

namespace ssv {

ReducedDecomposition reduce_to_fundamental(const Exponent& mu, const MetaplecticContext& ctx) {
    const int r = ctx.rank();
    if (static_cast<int>(mu.size()) != r) throw malformed_error("rank mismatch");
    ReducedDecomposition dec;
    Exponent cur = mu;
    std::vector<int> word;
    while (!ctx.in_fundamental_domain(cur)) {
        int chosen = -1;
        for (int i = 1; i < r; ++i) {
            if (cur[i - 1] < cur[i]) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) chosen = 0; // mu_1 - mu_r > n
        cur = weyl_act_affine(ctx.simple_reflection(chosen, true), cur);
        word.push_back(chosen);
    }
    dec.lambda = std::move(cur);
    dec.word = std::move(word);

    // beta_j = s_{i_l} ... s_{i_{j+1}} alpha_{i_j}, metaplectic, via the
    // linear action applied from the right end of the word inward.
    const int l = static_cast<int>(dec.word.size());
    dec.betas.assign(l, AffineRoot());
    AffineWeylElement suffix = AffineWeylElement::identity(r);
    for (int j = l - 1; j >= 0; --j) {
        dec.betas[j] = weyl_act_linear(suffix, ctx.alpha_meta(dec.word[j]));
        suffix = compose(suffix, psi_n(ctx.simple_reflection(dec.word[j], false), ctx));
    }
    for (const AffineRoot& b : dec.betas) {
        bool positive = b.level > 0;
        if (b.level == 0) {
            for (int x : b.finite) {
                if (x != 0) {
                    positive = x > 0;
                    break;
                }
            }
        }
        if (!positive)
            throw internal_error("beta root is not positive");
        if (pairing_eval(b, dec.lambda) == 0)
            throw internal_error("beta root pairs to zero with lambda");
    }
    return dec;
}

std::vector<int> canonical_perm_word(const Perm& u) {
    const int r = static_cast<int>(u.size());
    Perm v = u;
    std::vector<int> swaps; // positions of right multiplications, 1-based
    while (true) {
        int t = -1, p = -1;
        for (int val = r - 1; val >= 0; --val) {
            for (int pos = 0; pos < r; ++pos) {
                if (v[pos] == val && pos != val) {
                    t = val;
                    p = pos;
                    break;
                }
            }
            if (t >= 0) break;
        }
        if (t < 0) break;
        // The largest misplaced value sits left of its slot; walk it right.
        for (int j = p; j < t; ++j) {
            std::swap(v[j], v[j + 1]);
            swaps.push_back(j + 1);
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::set<Exponent> bruhat_lower_set(const Exponent& mu, const MetaplecticContext& ctx) {
    ReducedDecomposition dec = reduce_to_fundamental(mu, ctx);
    const int l = static_cast<int>(dec.word.size());
    std::set<Exponent> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
        Exponent nu = dec.lambda;
        for (int j = l - 1; j >= 0; --j)
            if (mask & (std::uint64_t{1} << j))
                nu = weyl_act_affine(ctx.simple_reflection(dec.word[j], true), nu);
        out.insert(std::move(nu));
    }
    return out;
}

bool order_compare_step(const Exponent& mu, const AffineRoot& rho,
                        const MetaplecticContext& ctx) {
    if (static_cast<int>(mu.size()) != ctx.rank()) throw malformed_error("rank mismatch");
    return pairing_eval(rho, mu) < 0;
}

} // namespace ssv
