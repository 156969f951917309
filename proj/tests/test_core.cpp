#include "mka/analysis.hpp"
#include "mka/automaton.hpp"
#include "mka/compare.hpp"
#include "mka/dsl.hpp"
#include "mka/error.hpp"

#include <doctest.h>

using namespace mka;

namespace {

Name A(const std::string& s) { return Name::atom(s); }

WeightedAutomaton builtin(const std::string& id, const std::string& name) {
    return eval_model_name(parse_model(builtin_source(id)), name);
}

// Closed single-alphabet automaton from a list of weighted edges.
WeightedAutomaton closed(std::vector<Name> states,
                         std::vector<std::tuple<Name, Name, long, long>> edges) {
    WeightedAutomaton aut;
    aut.states = sorted_states(std::move(states));
    aut.left = alphabet_unit();
    aut.right = alphabet_unit();
    Name e = Name::atom("eps");
    for (auto& [f, t, n, d] : edges) aut.add(f, e, e, t, Weight(n, d));
    aut.validate();
    return aut;
}

} // namespace

TEST_CASE("philosopher component matches its table") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    REQUIRE(phil.states.size() == 4);
    CHECK(is_positive(phil));
    CHECK(is_markov(phil));

    Name t = A("t"), r = A("r"), e = A("eps");
    for (const Name& s : phil.states)
        CHECK(phil.weight_of(s, e, e, s) == Weight(1, 2));
    CHECK(phil.weight_of(A("1"), t, e, A("2")) == Weight(1, 2));
    CHECK(phil.weight_of(A("2"), e, t, A("3")) == Weight(1, 2));
    CHECK(phil.weight_of(A("3"), r, e, A("4")) == Weight(1, 2));
    CHECK(phil.weight_of(A("4"), e, r, A("1")) == Weight(1, 2));
    CHECK(phil.table.size() == 8);
}

TEST_CASE("fork component matches its table") {
    WeightedAutomaton fork = builtin("fork", "Fork");
    REQUIRE(fork.states.size() == 3);
    CHECK(is_markov(fork));

    Name t = A("t"), r = A("r"), e = A("eps");
    CHECK(fork.weight_of(A("1"), e, e, A("1")) == Weight(1, 3));
    CHECK(fork.weight_of(A("2"), e, e, A("2")) == Weight(1, 2));
    CHECK(fork.weight_of(A("3"), e, e, A("3")) == Weight(1, 2));
    CHECK(fork.weight_of(A("1"), t, e, A("2")) == Weight(1, 3));
    CHECK(fork.weight_of(A("1"), e, t, A("3")) == Weight(1, 3));
    CHECK(fork.weight_of(A("2"), r, e, A("1")) == Weight(1, 2));
    CHECK(fork.weight_of(A("3"), e, r, A("1")) == Weight(1, 2));

    for (const Weight& w : row_totals(fork)) CHECK(w.is_one());
}

TEST_CASE("add accumulates and drops zeros") {
    WeightedAutomaton aut;
    aut.states = {A("1")};
    aut.left = alphabet_unit();
    aut.right = alphabet_unit();
    Name e = A("eps");
    aut.add(A("1"), e, e, A("1"), Weight(1, 3));
    aut.add(A("1"), e, e, A("1"), Weight(2, 3));
    CHECK(aut.table.size() == 1);
    CHECK(aut.weight_of(A("1"), e, e, A("1")).is_one());
    aut.add(A("1"), e, e, A("1"), Weight::zero());
    CHECK(aut.table.size() == 1);

    WeightedAutomaton z;
    z.states = {A("1")};
    z.left = alphabet_unit();
    z.right = alphabet_unit();
    z.add(A("1"), e, e, A("1"), Weight::zero());
    CHECK(z.table.empty());
}

TEST_CASE("validate rejects dangling names") {
    WeightedAutomaton aut;
    aut.states = {A("1")};
    aut.left = alphabet_unit();
    aut.right = alphabet_unit();
    aut.top[A("x")] = A("missing");
    CHECK_THROWS_AS(aut.validate(), Error);

    WeightedAutomaton bad;
    bad.states = {A("1")};
    bad.left = alphabet_unit();
    bad.right = alphabet_unit();
    bad.add(A("1"), A("nope"), A("eps"), A("1"), Weight(1));
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("normalize divides rows by their totals") {
    WeightedAutomaton aut = closed({A("1"), A("2")},
                                   {{A("1"), A("1"), 2, 1},
                                    {A("1"), A("2"), 3, 1},
                                    {A("2"), A("2"), 5, 1}});
    WeightedAutomaton n = normalize(aut);
    Name e = A("eps");
    CHECK(n.weight_of(A("1"), e, e, A("1")) == Weight(2, 5));
    CHECK(n.weight_of(A("1"), e, e, A("2")) == Weight(3, 5));
    CHECK(n.weight_of(A("2"), e, e, A("2")).is_one());
    CHECK(is_markov(n));
    CHECK(structurally_equal(normalize(n), n));

    WeightedAutomaton dead = closed({A("1"), A("2")}, {{A("1"), A("2"), 1, 1}});
    CHECK_THROWS_AS(normalize(dead), Error); // state 2 has an all-zero row
}

TEST_CASE("k-step automaton multiplies label matrices along words") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    WeightedAutomaton p2 = k_step_automaton(phil, 2);
    CHECK(p2.states == phil.states);
    CHECK(p2.left == alphabet_power(phil.left, 2));
    CHECK(p2.right == alphabet_power(phil.right, 2));

    Name t = A("t"), r = A("r"), e = A("eps");
    // Q_{t,eps} then Q_{eps,t}: 1 ->(1/2) 2 ->(1/2) 3.
    CHECK(p2.weight_of(A("1"), Name::tuple({t, e}), Name::tuple({e, t}),
                       A("3")) == Weight(1, 4));
    // No length-2 word takes 1 to 4 without the diagonal: 1 -> 2 -> ? no.
    CHECK(p2.weight_of(A("1"), Name::tuple({t, r}), Name::tuple({e, e}),
                       A("4")).is_zero());
    // Diagonal twice.
    CHECK(p2.weight_of(A("1"), Name::tuple({e, e}), Name::tuple({e, e}),
                       A("1")) == Weight(1, 4));

    CHECK_THROWS_AS(k_step_automaton(phil, 0), Error);
}

TEST_CASE("behaviour evolves a start vector along a word pair") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    std::vector<Weight> x0 = point_mass(phil, A("1"));

    Name t = A("t"), r = A("r"), e = A("eps");
    Behaviour b = behaviour_evolve(phil, x0, {t}, {e});
    REQUIRE(b.steps.size() == 2);
    CHECK(b.steps[1][phil.state_index(A("2"))] == Weight(1, 2));
    CHECK(b.steps[1][phil.state_index(A("1"))].is_zero());

    Behaviour zero = behaviour_evolve(phil, x0, {r}, {e});
    for (const Weight& w : zero.steps[1]) CHECK(w.is_zero());

    CHECK_THROWS_AS(behaviour_evolve(phil, x0, {t, t}, {e}), Error);
    CHECK_THROWS_AS(behaviour_evolve(phil, {Weight(1)}, {t}, {e}), Error);
}

TEST_CASE("isomorphism sees through state renaming") {
    WeightedAutomaton a = closed({A("p"), A("q")}, {{A("p"), A("q"), 1, 1},
                                                    {A("q"), A("q"), 1, 2}});
    WeightedAutomaton b = closed({A("u"), A("v")}, {{A("u"), A("v"), 1, 1},
                                                    {A("v"), A("v"), 1, 2}});
    CHECK(is_isomorphic(a, b));
    CHECK_FALSE(structurally_equal(a, b));

    WeightedAutomaton c = closed({A("u"), A("v")}, {{A("u"), A("v"), 1, 1},
                                                    {A("v"), A("v"), 1, 3}});
    CHECK_FALSE(is_isomorphic(a, c));

    // Interfaces must be preserved point by point.
    WeightedAutomaton ia = a, ib = b;
    ia.top[A("x")] = A("p");
    ib.top[A("x")] = A("v");
    CHECK_FALSE(is_isomorphic(ia, ib));
    ib.top[A("x")] = A("u");
    CHECK(is_isomorphic(ia, ib));
}

TEST_CASE("isomorphism search refuses huge ambiguous instances") {
    WeightedAutomaton a, b;
    a.left = a.right = b.left = b.right = alphabet_unit();
    Name e = A("eps");
    for (int i = 0; i < 17; ++i) {
        Name s = A("s" + std::to_string(i));
        a.states.push_back(s);
        b.states.push_back(s);
    }
    a.states = sorted_states(std::move(a.states));
    b.states = sorted_states(std::move(b.states));
    for (const Name& s : a.states) {
        a.add(s, e, e, s, Weight(1));
        b.add(s, e, e, s, Weight(1));
    }
    CHECK_THROWS_AS(is_isomorphic(a, b), Error);
    CHECK(is_isomorphic(a, b, 32));
}
