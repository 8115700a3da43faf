#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tilt/dynamics.hpp"
#include "tilt/geometry.hpp"
#include "tilt/gridio.hpp"

using namespace tilt;

namespace {

std::vector<Pixel> rect(int w, int h) {
    std::vector<Pixel> v;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) v.push_back({x, y});
    return v;
}

const std::vector<Pixel> kL{{0, 0}, {1, 0}, {0, 1}};
const std::vector<Pixel> kPlus{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};

}  // namespace

TEST_CASE("pixel order is y then x") {
    CHECK(Pixel{5, 0} < Pixel{0, 1});
    CHECK(Pixel{0, 3} < Pixel{1, 3});
}

TEST_CASE("boundary of small shapes") {
    auto unit = extract_boundary({{0, 0}});
    CHECK(unit.n == 4);
    CHECK(unit.n_c == 4);
    CHECK(extract_boundary(rect(2, 2)).n == 4);
    auto L = extract_boundary(kL);
    CHECK(L.n == 6);
    CHECK(L.n_c == 5);
    CHECK(L.n_r() == 1);
}

TEST_CASE("boundary invariants on random polyominoes") {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        auto V = ref::random_polyomino(rng, 1 + rng() % 25);
        Boundary b = extract_boundary(V);
        for (auto& loop : b.loops) {
            CHECK(loop.corners.size() % 2 == 0);
            CHECK(loop.corners.size() >= 4);
            for (size_t i = 0; i < loop.corners.size(); ++i) {
                Pixel a = loop.corners[i], c = loop.corners[(i + 1) % loop.corners.size()];
                CHECK(((a.x == c.x) != (a.y == c.y)));
            }
        }
        if (b.simple()) CHECK(b.n_c == b.n_r() + 4);
        Polyomino P = materialize(b);
        CHECK(P == Polyomino(V));
        CHECK(P.boundary() == b);
        CHECK(parse_boundary(format_boundary(b)) == b);
        CHECK(boundary_area(b) == static_cast<long long>(V.size()));
    }
}

TEST_CASE("materialize") {
    CHECK(materialize(extract_boundary({{0, 0}})).size() == 1);
    CHECK(materialize(extract_boundary(rect(3, 2))).size() == 6);
    Boundary big;
    big.loops.push_back({{{0, 0}, {1000000, 0}, {1000000, 1000000}, {0, 1000000}}, {true, true, true, true}});
    big.n = big.n_c = 4;
    CHECK_THROWS_AS(materialize(big, 10000), Error);
    try {
        materialize(big, 10000);
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("segments partition the pixels") {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        Polyomino P(ref::random_polyomino(rng, 2 + rng() % 20));
        std::vector<int> rows(P.size()), cols(P.size());
        for (auto& s : P.segments()) {
            for (int i : s.pixels) ++(s.horizontal ? rows : cols)[i];
            Dir lo = s.horizontal ? Dir::L : Dir::D, hi = s.horizontal ? Dir::R : Dir::U;
            CHECK(P.neighbor(s.first(), lo) < 0);
            CHECK(P.neighbor(s.last(), hi) < 0);
        }
        for (int i = 0; i < P.size(); ++i) {
            CHECK(rows[i] == 1);
            CHECK(cols[i] == 1);
        }
    }
}

TEST_CASE("classification") {
    auto sq = classify(Polyomino(rect(2, 2)));
    CHECK(sq.simple);
    CHECK_FALSE(sq.thin);
    CHECK_FALSE(sq.maze);
    CHECK(sq.rectangle);
    auto plus = classify(Polyomino(kPlus));
    CHECK(plus.simple);
    CHECK(plus.thin);
    CHECK(plus.maze);
    CHECK_FALSE(plus.rectangle);
    std::vector<Pixel> ring;
    for (auto p : rect(3, 3))
        if (!(p.x == 1 && p.y == 1)) ring.push_back(p);
    CHECK_FALSE(classify(Polyomino(ring)).simple);
}

TEST_CASE("significant pixels") {
    auto r = significant_pixels(extract_boundary(rect(4, 3)));
    CHECK(r.corners.size() == 4);
    CHECK(r.helpers.empty());
    Boundary L = extract_boundary(kL);
    auto s = significant_pixels(L);
    CHECK(s.corners.size() == 3);
    CHECK(static_cast<int>(s.all.size()) <= 2 * L.n - L.n_c);

    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto V = ref::random_polyomino(rng, 1 + rng() % 20);
        ref::PixelSet VS(V.begin(), V.end());
        Boundary b = extract_boundary(V);
        auto sp = significant_pixels(b);
        std::set<Pixel> all(sp.all.begin(), sp.all.end());
        CHECK(static_cast<int>(all.size()) <= 2 * b.n - b.n_c);
        for (auto p : all)
            for (Dir d : kDirs) CHECK(all.count(ref::slide(VS, p, d)));
        for (auto p : V)
            for (Dir v : kDirs)
                for (Dir w : kDirs)
                    if (perpendicular(v, w)) CHECK(all.count(ref::slide(VS, ref::slide(VS, p, v), w)));
    }
}

TEST_CASE("projection matches dense sliding") {
    std::vector<Pixel> sq = rect(3, 3);
    CHECK(project(extract_boundary(sq), {1, 1}, Dir::L) == Pixel{0, 1});
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        auto V = ref::random_polyomino(rng, 1 + rng() % 25);
        ref::PixelSet VS(V.begin(), V.end());
        BoundaryIndex bi(extract_boundary(V));
        for (auto p : V) {
            CHECK(bi.inside(p));
            for (Dir d : kDirs) CHECK(bi.project(p, d) == ref::slide(VS, p, d));
        }
    }
}

TEST_CASE("corner pixels are fixed in their blocked directions") {
    Polyomino P(rect(3, 2));
    int c = P.index({0, 0});
    CHECK(singleton_move(P, c, Dir::L, Model::FT) == c);
    CHECK(singleton_move(P, c, Dir::D, Model::FT) == c);
}

TEST_CASE("grid parsing") {
    auto one = parse_grid("#");
    CHECK(one.P.size() == 1);
    CHECK(one.C.empty());
    auto two = parse_grid("oo\n##");
    CHECK(two.P.size() == 4);
    CHECK(config_pixels(two.P, two.C) == std::vector<Pixel>{{0, 1}, {1, 1}});
    try {
        parse_grid("#.#");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::DisconnectedPolyomino);
    }
    try {
        parse_grid("#?#");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::IllegalCharacter);
    }
}

TEST_CASE("grid rendering round trips") {
    CHECK(render_ascii(Polyomino({{0, 0}})) == "#\n");
    auto doc = parse_grid("oo\n##");
    auto again = parse_grid(render_document(doc));
    CHECK(again.P == doc.P);
    CHECK(again.C == doc.C);
    std::string svg = render_svg(doc);
    size_t rects = 0;
    for (size_t at = svg.find("<rect"); at != std::string::npos; at = svg.find("<rect", at + 1)) ++rects;
    CHECK(rects == 4);
}

TEST_CASE("pixel lists") {
    auto px = parse_pixel_list("1,2;3,-4");
    CHECK(px == std::vector<Pixel>{{1, 2}, {3, -4}});
    CHECK(parse_pixel_list(format_pixel_list(px)) == px);
    CHECK(parse_pixel("7,8") == Pixel{7, 8});
}
