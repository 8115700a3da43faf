#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tilt/oracle.hpp"

using namespace tilt;

namespace {

std::vector<Pixel> rect(int w, int h) {
    std::vector<Pixel> v;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) v.push_back({x, y});
    return v;
}

ref::PixelSet as_set(const Polyomino& P, const Config& C) {
    auto px = config_pixels(P, C);
    return {px.begin(), px.end()};
}

Config random_config(std::mt19937& rng, const Polyomino& P, int k) {
    std::vector<int> all(P.size());
    for (int i = 0; i < P.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    Config C(all.begin(), all.begin() + std::min(k, P.size()));
    std::sort(C.begin(), C.end());
    return C;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind;
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("exploration") {
    Polyomino unit({{0, 0}});
    CHECK(explore(unit, {0}, kFTMerge).size() == 1);
    Polyomino row(rect(3, 1));
    CHECK(count_reachable(row, make_config(row, {{1, 0}}), kFTMerge) == 3);
    Polyomino sq(rect(2, 2));
    for (int mask = 1; mask < 16; ++mask) {
        Config C;
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) C.push_back(i);
        CHECK(count_reachable(sq, C, kFTBlock) <= 13);
    }
    auto g = explore(sq, full_config(sq), kFTMerge);
    for (int i = 1; i < g.size(); ++i) CHECK(apply(sq, full_config(sq), g.witness(i), kFTMerge) == g.configs[i]);
}

TEST_CASE("reachable counts agree with the reference search") {
    std::mt19937 rng(71);
    const Variant vs[] = {kFTMerge, kFTBlock, kS1Merge, kS1Block};
    const ref::Var rv[] = {ref::Var::FTM, ref::Var::FTB, ref::Var::S1M, ref::Var::S1B};
    for (int it = 0; it < 60; ++it) {
        auto V = ref::random_polyomino(rng, 2 + rng() % 10);
        Polyomino P(V);
        ref::PixelSet VS(V.begin(), V.end());
        Config C = random_config(rng, P, 1 + rng() % 4);
        for (int i = 0; i < 4; ++i)
            CHECK(count_reachable(P, C, vs[i]) == static_cast<long long>(ref::reachable(VS, as_set(P, C), rv[i])));
    }
}

TEST_CASE("shortest gathering") {
    Polyomino sq(rect(2, 2));
    auto one = sgs_exact(sq, {2});
    REQUIRE(one.has_value());
    CHECK(one->length == 0);
    CHECK(one->word.empty());
    auto full = sgs_exact(sq, full_config(sq));
    REQUIRE(full.has_value());
    CHECK(full->length == 2);
    CHECK(apply(sq, full_config(sq), full->word, kFTMerge).size() == 1);

    std::mt19937 rng(73);
    for (int it = 0; it < 150; ++it) {
        auto V = ref::random_polyomino(rng, 2 + rng() % 14);
        Polyomino P(V);
        ref::PixelSet VS(V.begin(), V.end());
        Config C = random_config(rng, P, 2 + rng() % 4);
        auto mine = sgs_exact(P, C);
        auto brute = ref::shortest(VS, as_set(P, C), ref::Var::FTM, [](const ref::PixelSet& s) { return s.size() == 1; });
        REQUIRE(mine.has_value() == brute.has_value());
        if (mine) {
            CHECK(mine->length == static_cast<int>(brute->size()));
            CHECK(apply(P, C, mine->word, kFTMerge).size() == 1);
        }
    }
}

TEST_CASE("occupancy") {
    Polyomino sq(rect(3, 3));
    int c = sq.index({0, 0}), mid = sq.index({1, 1});
    CHECK(occupancy(sq, {c}, c, kFTMerge));
    CHECK_FALSE(occupancy(sq, {c}, mid, kFTMerge));
    CHECK_FALSE(occupancy(sq, {c}, mid, kFTBlock));
    CHECK(occupancy(sq, {c}, mid, kS1Merge));
    std::string w;
    CHECK(occupancy(sq, {c}, sq.index({2, 2}), kFTMerge, kDefaultExploreBudget, &w));
    CHECK(singleton_apply(sq, c, w, Model::FT) == sq.index({2, 2}));
}

TEST_CASE("shape reconfiguration") {
    Polyomino sq(rect(2, 2));
    Config full = full_config(sq);
    auto same = shape_reconfiguration(sq, full, full, kFTBlock);
    REQUIRE(same.has_value());
    CHECK(same->empty());
    CHECK(kind_of([&] { shape_reconfiguration(sq, full, {0, 1, 2}, kFTBlock); }) == ErrorKind::CardinalityMismatch);
    Polyomino row(rect(4, 1));
    Config two = make_config(row, {{1, 0}, {2, 0}});
    auto r = shape_reconfiguration(row, two, make_config(row, {{2, 0}, {3, 0}}), kFTBlock);
    REQUIRE(r.has_value());
    CHECK(*r == "R");
    CHECK_FALSE(shape_reconfiguration(row, two, make_config(row, {{0, 0}, {3, 0}}), kFTBlock).has_value());
}

TEST_CASE("tilt cover") {
    Polyomino sq(rect(3, 3));
    Config C = make_config(sq, {{0, 0}, {1, 1}});
    auto in = tilt_cover(sq, C, make_config(sq, {{1, 1}}), kFTBlock);
    REQUIRE(in.has_value());
    CHECK(in->empty());
    CHECK(tilt_cover_deterministic(sq, C, make_config(sq, {{0, 0}}), "LURD", kFTBlock) == 0);

    std::mt19937 rng(79);
    for (int it = 0; it < 80; ++it) {
        Polyomino P(ref::random_polyomino(rng, 3 + rng() % 9));
        Config D = random_config(rng, P, 1 + rng() % 3);
        int p = rng() % P.size();
        CHECK(tilt_cover(P, D, {p}, kFTBlock).has_value() == occupancy(P, D, p, kFTBlock));
        Config T = random_config(rng, P, static_cast<int>(D.size()));
        CHECK(tilt_cover(P, D, T, kFTBlock).has_value() == shape_reconfiguration(P, D, T, kFTBlock).has_value());
    }
}

TEST_CASE("deterministic cover follows the cycle") {
    std::mt19937 rng(83);
    for (int it = 0; it < 80; ++it) {
        auto V = ref::random_polyomino(rng, 3 + rng() % 12);
        Polyomino P(V);
        ref::PixelSet VS(V.begin(), V.end());
        Config C = random_config(rng, P, 1 + rng() % 4);
        Config S = random_config(rng, P, 1);
        auto l = tilt_cover_deterministic(P, C, S, "LURD", kFTBlock);
        // reference: iterate the cycle until a configuration repeats
        std::set<ref::PixelSet> seen;
        ref::PixelSet cur = as_set(P, C), target = as_set(P, S);
        std::optional<long long> want;
        for (long long r = 0; seen.insert(cur).second; ++r) {
            if (std::includes(cur.begin(), cur.end(), target.begin(), target.end())) {
                want = r;
                break;
            }
            cur = ref::apply(VS, cur, "LURD", ref::Var::FTB);
        }
        CHECK(l == want);
    }
}

TEST_CASE("rectangle census") {
    Polyomino unit({{0, 0}});
    CHECK(rectangle_census(unit, {0}) == 1);
    Polyomino r(rect(4, 3));
    CHECK(rectangle_census(r, full_config(r)) == 1);
    std::mt19937 rng(89);
    Polyomino sq(rect(3, 3));
    for (int it = 0; it < 50; ++it) CHECK(rectangle_census(sq, random_config(rng, sq, 3)) <= 13);
    CHECK(kind_of([] { rectangle_census(Polyomino({{0, 0}, {1, 0}, {0, 1}}), {0}); }) == ErrorKind::NotARectangle);
}

TEST_CASE("budgets are enforced") {
    Polyomino big(rect(6, 6));
    std::mt19937 rng(1);
    Config C = random_config(rng, big, 12);
    CHECK(kind_of([&] { explore(big, C, kFTBlock, 5); }) == ErrorKind::BudgetExceeded);
}
