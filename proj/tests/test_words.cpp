/*
  test_words.cpp

  Fundamental-domain reduction, beta-roots, canonical permutation
  words, the subword order, and a breadth-first minimality oracle.
*/
#include "doctest.h"

#include <map>
#include <queue>

#include "ssv/words.hpp"

using namespace ssv;

namespace {

std::vector<Exponent> weight_box(int r, int lo, int hi) {
    std::vector<Exponent> out;
    Exponent v(r, lo);
    while (true) {
        out.push_back(v);
        int i = r - 1;
        while (i >= 0 && v[i] == hi) v[i--] = lo;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

// Shortest number of metaplectic simple reflections taking mu into the
// fundamental domain, by breadth-first search.
int bfs_distance(const Exponent& mu, const MetaplecticContext& ctx) {
    if (ctx.in_fundamental_domain(mu)) return 0;
    std::map<Exponent, int> dist{{mu, 0}};
    std::queue<Exponent> fifo;
    fifo.push(mu);
    while (!fifo.empty()) {
        Exponent cur = fifo.front();
        fifo.pop();
        int d = dist[cur];
        for (int i = 0; i < ctx.rank(); ++i) {
            Exponent nxt = weyl_act_affine(ctx.simple_reflection(i, true), cur);
            if (dist.count(nxt)) continue;
            if (ctx.in_fundamental_domain(nxt)) return d + 1;
            dist[nxt] = d + 1;
            fifo.push(nxt);
        }
    }
    throw internal_error("fundamental domain unreachable");
}

} // namespace

TEST_CASE("words: reduce_to_fundamental examples") {
    MetaplecticContext c1(3, 1);
    auto dec0 = reduce_to_fundamental({1, 0, 0}, c1);
    CHECK(dec0.lambda == Exponent{1, 0, 0});
    CHECK(dec0.word.empty());
    CHECK(dec0.betas.empty());

    for (int n : {1, 2, 3}) {
        MetaplecticContext ctx(3, n);
        auto dec = reduce_to_fundamental({0, 1, 0}, ctx);
        CHECK(dec.lambda == Exponent{1, 0, 0});
        CHECK(dec.word == std::vector<int>{1});
        CHECK(dec.betas.size() == 1);
        CHECK(dec.betas[0] == ctx.alpha_meta(1));
    }

    auto dec2 = reduce_to_fundamental({2, 0, 0}, c1);
    CHECK(dec2.lambda == Exponent{1, 1, 0});
    CHECK(dec2.word == std::vector<int>{0, 2});
    CHECK(dec2.betas[1] == c1.alpha_meta(2));
    AffineRoot expect_beta1(Exponent{-1, 1, 0}, 1); // -alpha_1 + delta
    CHECK(dec2.betas[0] == expect_beta1);

    // The word applied to lambda in order recovers mu.
    auto check_word = [](const Exponent& mu, const MetaplecticContext& ctx) {
        auto dec = reduce_to_fundamental(mu, ctx);
        Exponent v = dec.lambda;
        for (int j = static_cast<int>(dec.word.size()) - 1; j >= 0; --j)
            v = weyl_act_affine(ctx.simple_reflection(dec.word[j], true), v);
        CHECK(v == mu);
    };
    check_word({2, 0, 0}, c1);
    MetaplecticContext c2(3, 2), c23(2, 3);
    check_word({-1, 2, 1}, c2);
    check_word({3, -2}, c23);
}

TEST_CASE("words: canonical_perm_word") {
    CHECK(canonical_perm_word(perm_identity(3)).empty());
    CHECK(canonical_perm_word(perm_transposition(3, 0, 1)) == std::vector<int>{1});
    Perm w0{2, 1, 0};
    CHECK(canonical_perm_word(w0) == std::vector<int>{1, 2, 1});

    // Reconstruction and length over all of S_4.
    for (const Perm& u : all_permutations(4)) {
        auto word = canonical_perm_word(u);
        CHECK(static_cast<int>(word.size()) == perm_length(u));
        Perm prod = perm_identity(4);
        for (int i : word) prod = perm_compose(prod, perm_transposition(4, i - 1, i));
        CHECK(prod == u);
    }
}

TEST_CASE("words: bruhat_lower_set examples") {
    MetaplecticContext c1(3, 1);
    CHECK(bruhat_lower_set({1, 0, 0}, c1) == std::set<Exponent>{{1, 0, 0}});
    CHECK(bruhat_lower_set({0, 1, 0}, c1) == std::set<Exponent>{{0, 1, 0}, {1, 0, 0}});
    CHECK(bruhat_lower_set({2, 0, 0}, c1) ==
          std::set<Exponent>{{2, 0, 0}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("words: order_compare_step") {
    MetaplecticContext c2(3, 2);
    CHECK(order_compare_step({0, 1, 0}, c2.alpha_meta(1), c2));
    CHECK_FALSE(order_compare_step({1, 0, 0}, c2.alpha_meta(1), c2));
    CHECK_FALSE(order_compare_step({1, 1, 0}, c2.alpha_meta(1), c2));
}

TEST_CASE("words: word minimality against breadth-first search") {
    for (int r : {2, 3}) {
        for (int n : {1, 2}) {
            MetaplecticContext ctx(r, n);
            for (const Exponent& mu : weight_box(r, -2, 2)) {
                auto dec = reduce_to_fundamental(mu, ctx);
                CHECK(static_cast<int>(dec.word.size()) == bfs_distance(mu, ctx));
            }
        }
    }
}

TEST_CASE("words: lower sets shrink as the degree grows") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}}) {
        MetaplecticContext cm(3, m), cn(3, n);
        for (const Exponent& mu : weight_box(3, -1, 1)) {
            auto big = bruhat_lower_set(mu, cm);
            for (const Exponent& nu : bruhat_lower_set(mu, cn))
                CHECK(big.count(nu) == 1);
        }
    }
}
