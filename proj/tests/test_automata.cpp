#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tilt/automata.hpp"
#include "tilt/gathering.hpp"

using namespace tilt;

namespace {

SemiAutomaton random_automaton(std::mt19937& rng, int n, int k = 2) {
    std::vector<std::string> letters;
    for (int a = 0; a < k; ++a) letters.push_back(std::to_string(a));
    SemiAutomaton A = make_automaton(n, letters);
    for (int a = 0; a < k; ++a)
        for (int q = 0; q < n; ++q) A.delta[a][q] = rng() % n;
    return A;
}

SemiAutomaton identity(int n) {
    SemiAutomaton A = make_automaton(n, {"0", "1"});
    for (int a = 0; a < 2; ++a)
        for (int q = 0; q < n; ++q) A.delta[a][q] = q;
    return A;
}

// shortest word merging p and q, by enumeration
std::optional<int> merge_length(const SemiAutomaton& A, int p, int q, int maxLen) {
    if (p == q) return 0;
    for (int len = 1; len <= maxLen; ++len) {
        int total = 1;
        for (int i = 0; i < len; ++i) total *= A.k();
        for (int code = 0; code < total; ++code) {
            int a = p, b = q, c = code;
            for (int i = 0; i < len; ++i) {
                a = A.next(a, c % A.k());
                b = A.next(b, c % A.k());
                c /= A.k();
            }
            if (a == b) return len;
        }
    }
    return std::nullopt;
}

std::vector<Pixel> rect(int w, int h) {
    std::vector<Pixel> v;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) v.push_back({x, y});
    return v;
}

}  // namespace

TEST_CASE("tilt automaton of a rectangle") {
    TiltAutomaton T = build_tilt_automaton(extract_boundary(rect(4, 3)));
    CHECK(T.a.n == 4);
    for (Dir d : kDirs) {
        int a = static_cast<int>(d);
        for (int q = 0; q < 4; ++q) {
            Pixel p = T.pixels[T.a.next(q, a)];
            if (d == Dir::L) CHECK(p.x == 0);
            if (d == Dir::R) CHECK(p.x == 3);
            if (d == Dir::D) CHECK(p.y == 0);
            if (d == Dir::U) CHECK(p.y == 2);
        }
    }
    TiltAutomaton unit = build_tilt_automaton(extract_boundary({{0, 0}}));
    CHECK(unit.a.n == 1);
    for (int a = 0; a < 4; ++a) CHECK(unit.a.next(0, a) == 0);
}

TEST_CASE("tilt automaton transitions are dense slides") {
    std::mt19937 rng(41);
    for (int it = 0; it < 200; ++it) {
        auto V = ref::random_polyomino(rng, 1 + rng() % 25);
        ref::PixelSet VS(V.begin(), V.end());
        TiltAutomaton T = build_tilt_automaton(extract_boundary(V));
        for (int q = 0; q < T.a.n; ++q)
            for (Dir d : kDirs) CHECK(T.pixels[T.a.next(q, static_cast<int>(d))] == ref::slide(VS, T.pixels[q], d));
    }
}

TEST_CASE("single step automaton") {
    TiltAutomaton unit = build_s1_automaton(Polyomino({{0, 0}}));
    CHECK(unit.a.n == 1);
    TiltAutomaton dom = build_s1_automaton(Polyomino(rect(2, 1)));
    int l = dom.state_of({0, 0}), r = dom.state_of({1, 0});
    CHECK(dom.a.next(l, static_cast<int>(Dir::R)) == r);
    CHECK(dom.a.next(r, static_cast<int>(Dir::L)) == l);
    CHECK(dom.a.next(l, static_cast<int>(Dir::L)) == l);
    for (int q : {l, r}) {
        CHECK(dom.a.next(q, static_cast<int>(Dir::U)) == q);
        CHECK(dom.a.next(q, static_cast<int>(Dir::D)) == q);
    }
}

TEST_CASE("pair automaton") {
    SemiAutomaton one = make_automaton(1, {"0"});
    one.delta[0][0] = 0;
    auto p1 = pair_automaton(one);
    CHECK(p1.size() == 1);
    CHECK(p1.distance(0, 0) == 0);

    SemiAutomaton two = make_automaton(2, {"a", "b"});
    two.delta = {{1, 1}, {1, 0}};
    auto p2 = pair_automaton(two);
    CHECK(p2.distance(0, 1) == 1);
    CHECK(p2.letter[p2.index(0, 1)] == 0);

    std::mt19937 rng(43);
    for (int it = 0; it < 100; ++it) {
        SemiAutomaton A = random_automaton(rng, 6);
        auto pa = pair_automaton(A);
        for (int p = 0; p < 6; ++p)
            for (int q = p; q < 6; ++q) {
                auto brute = merge_length(A, p, q, 6);
                int d = pa.distance(p, q);
                if (brute) {
                    CHECK(d == *brute);
                    Word w = pa.merging_word(p, q);
                    CHECK(static_cast<int>(w.size()) == d);
                    CHECK(A.run(p, w) == A.run(q, w));
                } else {
                    CHECK((d == -1 || d > 6));
                }
            }
    }
}

TEST_CASE("synchronization") {
    CHECK_FALSE(is_synchronizing(identity(2)));
    CHECK_FALSE(synchronizing_word(identity(3)).has_value());
    SemiAutomaton c = identity(4);
    for (int q = 0; q < 4; ++q) c.delta[1][q] = 2;
    CHECK(is_synchronizing(c));
    auto w = synchronizing_word(c);
    REQUIRE(w.has_value());
    CHECK(*w == Word{1});
    CHECK(is_synchronizing(build_tilt_automaton(extract_boundary(rect(3, 5))).a));

    std::mt19937 rng(47);
    int seen = 0;
    while (seen < 100) {
        SemiAutomaton A = random_automaton(rng, 5);
        auto sw = synchronizing_word(A);
        if (!sw) continue;
        ++seen;
        std::vector<int> all{0, 1, 2, 3, 4};
        CHECK(A.image(all, *sw).size() == 1);
    }
}

TEST_CASE("exact reset thresholds") {
    SemiAutomaton two = make_automaton(2, {"a", "b"});
    two.delta = {{0, 1}, {1, 1}};
    auto r0 = reset_threshold_exact(two, {1});
    REQUIRE(r0.has_value());
    CHECK(r0->length == 0);
    auto r1 = reset_threshold_exact(two, {0, 1});
    REQUIRE(r1.has_value());
    CHECK(r1->length == 1);
    CHECK(r1->word == Word{1});

    std::mt19937 rng(53);
    for (int it = 0; it < 150; ++it) {
        SemiAutomaton A = random_automaton(rng, 5);
        std::vector<int> S;
        for (int q = 0; q < 5; ++q)
            if (rng() % 2) S.push_back(q);
        if (S.empty()) S.push_back(0);
        auto brute = ref::rt_by_words(A.delta, 5, S, 10);
        auto r = reset_threshold_exact(A, S);
        if (brute) {
            REQUIRE(r.has_value());
            CHECK(r->length == *brute);
            CHECK(A.image(S, r->word).size() == 1);
        } else if (r) {
            CHECK(r->length > 10);
        }
    }
}

TEST_CASE("tally automata") {
    auto a = tally_cycle(3, {2}, 0);
    for (int l = 0; l < 12; ++l) CHECK(a.accepts_length(l) == (l % 3 == 2));
    try {
        tally_cycle(4, {1}, 0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::InvalidTallyShape);
    }
    auto a1 = tally_cycle(7, {1, 3, 4}, 3);
    auto a2 = tally_cycle(5, {2, 3}, 4);
    CHECK(a1.accepts_length(8));
    CHECK(a2.accepts_length(8));
    CHECK(tally_intersection_smallest({a1, a2}, 1000) == 8);
    CHECK(tally_intersection_smallest({a}, 100) == 2);
    CHECK(tally_intersection_smallest({tally_cycle(3, {2}, 0), tally_cycle(5, {4}, 0)}, 1000) == 14);
    CHECK_FALSE(tally_intersection_smallest({tally_cycle(3, {1}, 0), tally_cycle(3, {2}, 0)}, 1000).has_value());
}

TEST_CASE("tally intersection agrees with a residue scan") {
    std::mt19937 rng(59);
    const int odd[] = {3, 5, 7, 9, 11};
    for (int it = 0; it < 200; ++it) {
        std::vector<TallyAutomaton> as;
        int k = 1 + rng() % 3;
        for (int i = 0; i < k; ++i) {
            int rho = odd[rng() % 5];
            std::vector<int> acc;
            for (int j = 1; j < rho; ++j)
                if (rng() % 3 == 0) acc.push_back(j);
            if (acc.empty()) acc.push_back(1 + rng() % (rho - 1));
            as.push_back(tally_cycle(rho, acc, rng() % rho));
        }
        CHECK(tally_intersection_smallest(as, 5000) == tally_intersection_scan(as, 5000));
    }
}

TEST_CASE("kari bound on single step automata") {
    auto unit = check_eulerian_bound(build_s1_automaton(Polyomino({{0, 0}})).a);
    CHECK(unit.eulerian);
    CHECK(unit.witnessLength == 0);
    auto row = check_eulerian_bound(build_s1_automaton(Polyomino(rect(3, 1))).a);
    CHECK(row.eulerian);
    CHECK(row.exact);
    CHECK(row.witnessLength == 2);
    CHECK(row.withinBound);
    std::mt19937 rng(61);
    for (int it = 0; it < 40; ++it) {
        auto r = check_eulerian_bound(build_s1_automaton(Polyomino(ref::random_polyomino(rng, 2 + rng() % 12))).a);
        CHECK(r.eulerian);
        CHECK(r.synchronizing);
        CHECK(r.withinBound);
    }
}

TEST_CASE("automaton text format") {
    Acceptor acc = parse_automaton("states: 3\nalphabet: 0,1\ninitial: 0\naccepting: 2\n"
                                   "0 0 1\n0 1 0\n1 0 2\n1 1 1\n2 0 2\n2 1 2\n");
    CHECK(acc.a.n == 3);
    CHECK(acc.accepts(acc.a.parse_word("00")));
    CHECK_FALSE(acc.accepts(acc.a.parse_word("0")));
    Acceptor again = parse_automaton(format_automaton(acc));
    CHECK(again.a.delta == acc.a.delta);
    CHECK(again.accepting == acc.accepting);
    try {
        parse_automaton("states: 2\nalphabet: 0\n0 0 1\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::ParseError);
    }
}
