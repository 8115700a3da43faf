#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "tilt/gathering.hpp"
#include "tilt/generators.hpp"

using namespace tilt;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind;
    }
    FAIL("expected an error");
    return ErrorKind::ParseError;
}

SemiAutomaton random_automaton(std::mt19937& rng, int n) {
    SemiAutomaton A = make_automaton(n, {"0", "1"});
    for (int a = 0; a < 2; ++a)
        for (int q = 0; q < n; ++q) A.delta[a][q] = rng() % n;
    return A;
}

std::string scs_binary_word(const std::string& sup) {
    std::string w;
    for (char c : sup) w += c == '0' ? "RU" : "LU";
    return w;
}

}  // namespace

TEST_CASE("simulation of the example acceptor") {
    Acceptor a0 = example_acceptor_a0();
    CHECK(a0.a.n == 3);
    auto S = gen_simulation(a0.a);
    CHECK(S.P.boundary().n == 60);
    CHECK(S.P.boundary().n == 12 * (2 * a0.a.n - 1));
    for (int q = 0; q < a0.a.n; ++q) {
        int p = S.P.index(S.reps[q]);
        CHECK(S.state_of(S.reps[q]) == q);
        CHECK(S.state_of(S.P.pixel(singleton_apply(S.P, p, "URDL", Model::FT))) == a0.a.delta[0][q]);
        CHECK(S.state_of(S.P.pixel(singleton_apply(S.P, p, "DRUL", Model::FT))) == a0.a.delta[1][q]);
    }
    auto M = gen_simulation(a0.a, true);
    CHECK(classify(M.P).maze);
}

TEST_CASE("simulation realizes random automata") {
    std::mt19937 rng(131);
    for (int it = 0; it < 30; ++it) {
        SemiAutomaton A = random_automaton(rng, 1 + rng() % 5);
        auto S = gen_simulation(A, it % 2 == 1);
        for (int q = 0; q < A.n; ++q) {
            int p = S.P.index(S.reps[q]);
            CHECK(S.P.pixel(singleton_apply(S.P, p, "URDL", Model::FT)) == S.reps[A.delta[0][q]]);
            CHECK(S.P.pixel(singleton_apply(S.P, p, "DRUL", Model::FT)) == S.reps[A.delta[1][q]]);
        }
    }
}

TEST_CASE("cycle words") {
    auto S = gen_simulation(example_automaton_a0());
    CHECK(canonicalize_cycle_word(S, "") == "");
    CHECK(canonicalize_cycle_word(S, "URDL") == "URDL");
    CHECK(canonicalize_cycle_word(S, "URRDDL") == "URDL");
    CHECK(canonicalize_cycle_word(S, "URDLDRUL") == "URDLDRUL");
}

TEST_CASE("tally instance of the two example automata") {
    auto as = example_tally_pair();
    auto t = gen_tally(as);
    CHECK(classify(t.P).maze);
    Config end = apply(t.P, t.C0, repeat("RDLU", 8) + "LDRDLD", kFTMerge);
    CHECK(end.size() == 1);
    auto single = gen_tally({tally_cycle(3, {1}, 0)});
    CHECK(apply(single.P, single.C0, "RDLULDRDLD", kFTMerge).size() == 1);
    auto empty = gen_tally({tally_cycle(3, {1}, 0), tally_cycle(3, {2}, 0)});
    CHECK_FALSE(subset_gathering_exact(empty.P, empty.C0).has_value());
}

TEST_CASE("prime tallies") {
    CHECK(tally_intersection_smallest(gen_prime_tally({3}), 1000) == 2);
    CHECK(tally_intersection_smallest(gen_prime_tally({3, 5}), 1000) == 14);
    CHECK(tally_intersection_smallest(gen_prime_tally({3, 5, 7}), 1000) == 104);
    CHECK(greedy_odd_primes(4) == std::vector<int>{3, 5, 7, 11});
    CHECK(kind_of([] { gen_prime_tally({9}); }) == ErrorKind::NotOddPrime);
    CHECK(kind_of([] { gen_prime_tally({2}); }) == ErrorKind::NotOddPrime);
}

TEST_CASE("tilt cover instances") {
    auto tc = gen_tiltcover(example_tally_pair());
    CHECK(tc.cycle == "LURD");
    CHECK(tilt_cover_deterministic(tc.P, tc.C, tc.target, tc.cycle, kFTBlock) == 8);
    CHECK(tilt_cover_deterministic(tc.P, tc.C, tc.target, tc.cycle, kS1Block) == 8);
    auto none = gen_tiltcover({tally_cycle(3, {1}, 0), tally_cycle(3, {2}, 0)});
    CHECK_FALSE(tilt_cover_deterministic(none.P, none.C, none.target, none.cycle, kFTBlock).has_value());
}

TEST_CASE("occupancy instances") {
    auto o = gen_occupancy_variant(example_tally_pair(), 2);
    CHECK(occupancy(o.P, o.C, o.probe, kFTBlock));
    CHECK(shape_reconfiguration(o.P, o.C, o.goal, kFTBlock).has_value());
    auto one = gen_occupancy_variant({tally_cycle(3, {2}, 0)}, 1);
    CHECK(one.P.pixel(one.probe) == one.base.goalColumn.back());
    auto none = gen_occupancy_variant({tally_cycle(3, {1}, 0), tally_cycle(3, {2}, 0)}, 2);
    CHECK_FALSE(occupancy(none.P, none.C, none.probe, kFTBlock));
    CHECK_FALSE(shape_reconfiguration(none.P, none.C, none.goal, kFTBlock).has_value());
}

TEST_CASE("binary supersequence instances") {
    auto inst = gen_scs_binary({"10", "001", "01", "111"});
    auto cls = classify(inst.P);
    CHECK(cls.simple);
    CHECK(cls.maze);
    Config end = apply(inst.P, inst.deep(), scs_binary_word("10011") + "R", kFTMerge);
    CHECK(end.size() == 1);
    auto s = sgs_exact(inst.P, inst.deep());
    REQUIRE(s.has_value());
    CHECK(s->length == 11);
    CHECK(sgs_exact(gen_scs_binary({"0", "0"}).P, gen_scs_binary({"0", "0"}).deep())->length == 3);
    auto zo = gen_scs_binary({"0", "1"});
    CHECK(sgs_exact(zo.P, zo.deep())->length == 5);
    CHECK(kind_of([] { gen_scs_binary({"0"}); }) == ErrorKind::EmptyWordList);
    CHECK(kind_of([] { gen_scs_binary({"0", "2"}); }) == ErrorKind::InvalidAlphabet);
}

TEST_CASE("general supersequence gadgets") {
    CHECK(scs_symbol_moves(5, 3) == "ULURULDRURDLULURDR");
    CHECK(scs_general_length(2, 1) == 30);
    auto inst = gen_scs_general({{0}, {1}}, 2);
    CHECK(inst.bits == 1);
    auto s = sgs_exact(inst.P, inst.deep());
    REQUIRE(s.has_value());
    CHECK(s->length == scs_general_length(2, 1));
    auto eight = gen_scs_general({{5}, {2}}, 8);
    CHECK(eight.bits == 3);
    CHECK(kind_of([] { gen_scs_general({{0}, {4}}, 4); }) == ErrorKind::InvalidAlphabet);
}

TEST_CASE("lower bound family annotations") {
    for (int m = 1; m <= 3; ++m) {
        auto L = gen_lower_bound(m);
        CHECK(L.classes.at("p").size() == static_cast<size_t>(2 * m + 1));
        CHECK(L.idx.at(L.extras.at("t")) == 2 * m);
        CHECK(L.idx.at(L.extras.at("t'")) == 2 * m - 1);
        CHECK(L.divergencePoints == 1);
        for (int i = 0; i <= 2 * m; ++i) {
            Pixel p = L.classes.at("p")[i];
            CHECK(L.P.pixel(singleton_apply(L.P, L.P.index(p), "RDLU", Model::FT)) == L.classes.at("p")[(i + 1) % (2 * m + 1)]);
        }
    }
    auto L1 = gen_lower_bound(1);
    auto s = sgs_exact(L1.P, make_config(L1.P, {L1.classes.at("p")[0], L1.classes.at("p")[1]}));
    REQUIRE(s.has_value());
    CHECK(s->length > 0);
    CHECK(kind_of([] { gen_lower_bound(0); }) == ErrorKind::InvalidTallyShape);
}
