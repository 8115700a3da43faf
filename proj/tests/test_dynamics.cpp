#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tilt/dynamics.hpp"

using namespace tilt;

namespace {

std::vector<Pixel> rect(int w, int h) {
    std::vector<Pixel> v;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) v.push_back({x, y});
    return v;
}

ref::Var to_ref(Variant v) {
    if (v == kFTMerge) return ref::Var::FTM;
    if (v == kFTBlock) return ref::Var::FTB;
    if (v == kS1Merge) return ref::Var::S1M;
    return ref::Var::S1B;
}

ref::PixelSet as_set(const Polyomino& P, const Config& C) {
    auto px = config_pixels(P, C);
    return {px.begin(), px.end()};
}

Config random_config(std::mt19937& rng, const Polyomino& P) {
    Config C;
    for (int i = 0; i < P.size(); ++i)
        if (rng() % 3 == 0) C.push_back(i);
    if (C.empty()) C.push_back(rng() % P.size());
    return C;
}

std::string random_word(std::mt19937& rng, int maxLen) {
    std::string w;
    int len = rng() % (maxLen + 1);
    for (int i = 0; i < len; ++i) w += "UDLR"[rng() % 4];
    return w;
}

constexpr Variant kAll[] = {kFTMerge, kFTBlock, kS1Merge, kS1Block};

}  // namespace

TEST_CASE("single moves on tiny shapes") {
    Polyomino sq(rect(2, 2));
    Config full = full_config(sq);
    CHECK(config_pixels(sq, step(sq, full, Dir::L, kFTMerge)) == std::vector<Pixel>{{0, 0}, {0, 1}});
    CHECK(step(sq, full, Dir::L, kFTBlock) == full);
    Polyomino row(rect(3, 1));
    CHECK(config_pixels(row, step(row, make_config(row, {{1, 0}}), Dir::L, kS1Block)) == std::vector<Pixel>{{0, 0}});
}

TEST_CASE("apply") {
    Polyomino sq(rect(2, 2));
    Config full = full_config(sq);
    for (Variant v : kAll) CHECK(apply(sq, full, "", v) == full);
    CHECK(config_pixels(sq, apply(sq, full, "LU", kFTMerge)) == std::vector<Pixel>{{0, 1}});
}

TEST_CASE("singleton moves") {
    Polyomino row(rect(5, 1));
    for (int x = 1; x < 4; ++x) CHECK(singleton_move(row, Pixel{x, 0}, Dir::R, Model::FT) == Pixel{4, 0});
    CHECK(singleton_move(row, Pixel{2, 0}, Dir::R, Model::S1) == Pixel{3, 0});
    CHECK(singleton_move(row, Pixel{2, 0}, Dir::U, Model::S1) == Pixel{2, 0});
    CHECK(singleton_apply(row, row.index({0, 0}), "RL", Model::FT) == row.index({0, 0}));
}

TEST_CASE("normalize") {
    CHECK(normalize("LL") == "L");
    CHECK(normalize("RL") == "L");
    CHECK(normalize("ULDLU") == "ULDLU");
    CHECK(normalize("") == "");
    CHECK(normalize("UDUDLRRL") == "DL");
    CHECK(repeat("RDLU", 2) == "RDLURDLU");
}

TEST_CASE("normalized words act like the originals in full tilt") {
    std::mt19937 rng(17);
    for (int it = 0; it < 500; ++it) {
        Polyomino P(ref::random_polyomino(rng, 2 + rng() % 18));
        Config C = random_config(rng, P);
        std::string w = random_word(rng, 8);
        CHECK(apply(P, C, w, kFTMerge) == apply(P, C, normalize(w), kFTMerge));
        CHECK(apply(P, C, w, kFTBlock) == apply(P, C, normalize(w), kFTBlock));
    }
}

TEST_CASE("moves agree with the reference simulator") {
    std::mt19937 rng(23);
    for (int it = 0; it < 2000; ++it) {
        auto V = ref::random_polyomino(rng, 1 + rng() % 20);
        Polyomino P(V);
        ref::PixelSet VS(V.begin(), V.end());
        Config C = random_config(rng, P);
        std::string w = random_word(rng, 8);
        for (Variant v : kAll) CHECK(as_set(P, apply(P, C, w, v)) == ref::apply(VS, as_set(P, C), w, to_ref(v)));
    }
}

TEST_CASE("mask stepper agrees with the dense step") {
    std::mt19937 rng(29);
    for (int it = 0; it < 1000; ++it) {
        Polyomino P(ref::random_polyomino(rng, 1 + rng() % 40));
        MaskStepper ms(P);
        Config C = random_config(rng, P);
        for (Variant v : kAll)
            for (Dir d : kDirs) CHECK(MaskStepper::from_mask(ms.step(MaskStepper::to_mask(C), d, v)) == step(P, C, d, v));
    }
}

TEST_CASE("particles outside the polyomino are rejected") {
    Polyomino P(rect(2, 1));
    try {
        make_config(P, {{5, 5}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::ConfigurationNotInPolyomino);
    }
}
