/*
  walks.hpp

  Alcove walks of a fixed type word: enumeration over all cross/fold
  choices, classification of each step's separating wall and side, and
  the derived end/weight/permutation data.

  Walks happen in the unrescaled affine Weyl group; fold signs are
  insensitive to the rescaling since it preserves signs of pairings.
*/
#pragma once

#include <cstdint>
#include <vector>

#include "ssv/rootsys.hpp"

namespace ssv {

enum class FoldSide { positive, negative };

struct StepClassification {
    AffineRoot separating_root; // normalized to the positive affine roots
    FoldSide side;              // side of the wall holding the current alcove
};

// The wall between the alcoves of z and z s_i is the vanishing set of
// z*alpha_i. The returned root is sign-normalized into the positive
// affine roots. The side is evaluated against the periodic orientation
// (representative with positive finite part) at an exact interior
// sample point of z's alcove, the z-image of v with v_i = (r-i)/(r+1).
StepClassification classify_step(const AffineWeylElement& z, int i,
                                 const MetaplecticContext& ctx);

struct AlcoveWalk {
    AffineWeylElement start;
    std::vector<int> word;
    std::uint64_t fold_mask = 0; // bit j set = step j folds
    AffineWeylElement end;
    Exponent wt;  // translation part of end
    Perm phi;     // finite part of end
    std::vector<int> pos_folds, neg_folds; // step indices, 0-based
};

// All 2^l walks of the given type from the given start, in binary-counter
// order over the fold mask.
std::vector<AlcoveWalk> enumerate_walks(const AffineWeylElement& start,
                                        const std::vector<int>& word,
                                        const MetaplecticContext& ctx);

// Builds the single walk for one fold mask.
AlcoveWalk build_walk(const AffineWeylElement& start, const std::vector<int>& word,
                      std::uint64_t fold_mask, const MetaplecticContext& ctx);

enum class WalkFilter { all, positive_folds_only, negative_folds_only, unfolded };

std::vector<AlcoveWalk> walk_filter(const std::vector<AlcoveWalk>& walks, WalkFilter mode);

} // namespace ssv
