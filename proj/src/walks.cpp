/*
  walks.cpp

  Alcove walk enumeration and wall classification.
*/
#include "ssv/walks.hpp"

namespace ssv {

namespace {

// Scaled interior point of the fundamental alcove: V = (r-1, ..., 1, 0)
// with the implicit denominator r+1, so pairings against z's alcove are
// the integers (a, perm(V) + (r+1) t) + (r+1) level.
long side_value(const AffineWeylElement& z, const AffineRoot& rho, int r) {
    Exponent v(r);
    for (int i = 0; i < r; ++i) v[i] = r - 1 - i;
    Exponent sample = perm_apply(z.perm, v);
    for (int i = 0; i < r; ++i) sample[i] += (r + 1) * z.translation[i];
    return dot(rho.finite, sample) + (r + 1) * rho.level;
}

bool finite_part_positive(const AffineRoot& rho) {
    for (int x : rho.finite)
        if (x != 0) return x > 0;
    return false;
}

} // namespace

StepClassification classify_step(const AffineWeylElement& z, int i,
                                 const MetaplecticContext& ctx) {
    const int r = ctx.rank();
    AffineRoot base;
    if (i == 0) {
        base = -ctx.theta();
        base.level = 1; // alpha_0 = -theta + delta
    } else {
        base = ctx.alpha(i);
    }
    AffineRoot root = weyl_act_linear(z, base);

    // Positive-affine-root normalization for the reported wall.
    AffineRoot normalized = root;
    bool flip = normalized.level != 0 ? normalized.level < 0 : !finite_part_positive(normalized);
    if (flip) normalized = -normalized;

    // Side against the periodic orientation: representative with positive
    // finite part.
    AffineRoot oriented = root;
    if (!finite_part_positive(oriented)) oriented = -oriented;
    long value = side_value(z, oriented, r);
    if (value == 0) throw internal_error("alcove sample point landed on a wall");

    return StepClassification{normalized,
                              value > 0 ? FoldSide::positive : FoldSide::negative};
}

AlcoveWalk build_walk(const AffineWeylElement& start, const std::vector<int>& word,
                      std::uint64_t fold_mask, const MetaplecticContext& ctx) {
    AlcoveWalk w;
    w.start = start;
    w.word = word;
    w.fold_mask = fold_mask;
    AffineWeylElement z = start;
    for (std::size_t j = 0; j < word.size(); ++j) {
        bool fold = (fold_mask >> j) & 1;
        if (fold) {
            StepClassification c = classify_step(z, word[j], ctx);
            if (c.side == FoldSide::positive)
                w.pos_folds.push_back(static_cast<int>(j));
            else
                w.neg_folds.push_back(static_cast<int>(j));
        } else {
            z = compose(z, ctx.simple_reflection(word[j], false));
        }
    }
    w.end = z;
    w.wt = z.translation;
    w.phi = z.perm;
    return w;
}

std::vector<AlcoveWalk> enumerate_walks(const AffineWeylElement& start,
                                        const std::vector<int>& word,
                                        const MetaplecticContext& ctx) {
    if (word.size() >= 63) throw malformed_error("type word too long to enumerate");
    std::vector<AlcoveWalk> walks;
    const std::uint64_t total = std::uint64_t{1} << word.size();
    walks.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        walks.push_back(build_walk(start, word, mask, ctx));
    return walks;
}

std::vector<AlcoveWalk> walk_filter(const std::vector<AlcoveWalk>& walks, WalkFilter mode) {
    std::vector<AlcoveWalk> out;
    for (const AlcoveWalk& w : walks) {
        switch (mode) {
        case WalkFilter::all:
            out.push_back(w);
            break;
        case WalkFilter::positive_folds_only:
            if (w.neg_folds.empty()) out.push_back(w);
            break;
        case WalkFilter::negative_folds_only:
            if (w.pos_folds.empty()) out.push_back(w);
            break;
        case WalkFilter::unfolded:
            if (w.fold_mask == 0) out.push_back(w);
            break;
        }
    }
    return out;
}

} // namespace ssv
