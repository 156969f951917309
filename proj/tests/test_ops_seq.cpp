#include "mka/compare.hpp"
#include "mka/dsl.hpp"
#include "mka/error.hpp"
#include "mka/ops.hpp"

#include <doctest.h>

using namespace mka;

namespace {

Name A(const char* s) { return Name::atom(s); }

WeightedAutomaton builtin(const std::string& id, const std::string& name) {
    return eval_model_name(parse_model(builtin_source(id)), name);
}

} // namespace

TEST_CASE("disjoint sum tags only on collision") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    WeightedAutomaton fork = builtin("fork", "Fork");

    WeightedAutomaton s = boxplus_sum(phil, fork);
    CHECK(s.states.size() == 7);              // state names collide: tagged
    CHECK(s.left.labels.size() == 6);         // alphabets collide: tagged
    CHECK(s.right.labels.size() == 6);
    CHECK(s.table.size() == phil.table.size() + fork.table.size());
    CHECK(s.weight_of(Name::tagL(A("1")), Name::tagL(A("t")),
                      Name::tagL(A("eps")), Name::tagL(A("2"))) == Weight(1, 2));
    CHECK(s.weight_of(Name::tagR(A("1")), Name::tagR(A("t")),
                      Name::tagR(A("eps")), Name::tagR(A("2"))) == Weight(1, 3));
    CHECK(!s.left.epsilon); // a tagged eps is no longer a shared idle label

    // Disjoint names pass through untouched.
    WeightedAutomaton p, q;
    p.states = {A("p")};
    q.states = {A("q")};
    p.left.labels = {A("a")};
    p.right.labels = {A("b")};
    q.left.labels = {A("c")};
    q.right.labels = {A("d")};
    p.add(A("p"), A("a"), A("b"), A("p"), Weight(1));
    q.add(A("q"), A("c"), A("d"), A("q"), Weight(2));
    WeightedAutomaton u = boxplus_sum(p, q);
    CHECK(u.states == sorted_states({A("p"), A("q")}));
    CHECK(u.left.labels == std::vector<Name>{A("a"), A("c")});
    CHECK(u.weight_of(A("p"), A("a"), A("b"), A("p")) == Weight(1));
    CHECK(u.weight_of(A("q"), A("c"), A("d"), A("q")) == Weight(2));
}

TEST_CASE("sequential composition glues along the shared interface") {
    WeightedAutomaton p;
    p.states = {A("p1"), A("p2")};
    p.left.labels = {A("a")};
    p.right.labels = {A("e")};
    p.top[A("x")] = A("p1");
    p.bottom[A("y")] = A("p2");
    p.add(A("p1"), A("a"), A("e"), A("p2"), Weight(2));

    WeightedAutomaton q;
    q.states = {A("q1"), A("q2")};
    q.left.labels = {A("b")};
    q.right.labels = {A("f")};
    q.top[A("y")] = A("q1");
    q.bottom[A("z")] = A("q2");
    q.add(A("q1"), A("b"), A("f"), A("q2"), Weight(3));

    WeightedAutomaton c = seq_compose(p, q);
    // p2 and q1 became one state, named by the smaller member.
    CHECK(c.states == sorted_states({A("p1"), A("p2"), A("q2")}));
    CHECK(c.top.at(A("x")) == A("p1"));
    CHECK(c.bottom.at(A("z")) == A("q2"));
    // No label collision, so the alphabets concatenate untagged.
    CHECK(c.left.labels == std::vector<Name>{A("a"), A("b")});
    CHECK(c.weight_of(A("p1"), A("a"), A("e"), A("p2")) == Weight(2));
    CHECK(c.weight_of(A("p2"), A("b"), A("f"), A("q2")) == Weight(3));

    WeightedAutomaton r = q;
    r.top.clear();
    r.top[A("not-y")] = A("q1");
    CHECK_THROWS_AS(seq_compose(p, r), Error);
}

TEST_CASE("sequential composition sums parallel weights through a gluing") {
    // Two states of p glued onto the same q state; entries must accumulate.
    // p is transition-free with empty alphabets, so the alphabet sum absorbs
    // and q's labels pass through untouched.
    WeightedAutomaton p;
    p.states = {A("s")};
    p.bottom[A("y1")] = A("s");
    p.bottom[A("y2")] = A("s");

    WeightedAutomaton q;
    q.states = {A("t1"), A("t2")};
    q.left = alphabet_unit();
    q.right = alphabet_unit();
    q.top[A("y1")] = A("t1");
    q.top[A("y2")] = A("t2");
    Name e = A("eps");
    q.add(A("t1"), e, e, A("t2"), Weight(1, 4));
    q.add(A("t2"), e, e, A("t1"), Weight(1, 4));

    // s ~ t1 ~ t2 collapse to one state; both entries become a self loop.
    WeightedAutomaton c = seq_compose(p, q);
    CHECK(c.states.size() == 1);
    CHECK(c.table.size() == 1);
    CHECK(c.weight_of(c.states[0], e, e, c.states[0]) == Weight(1, 2));
}

TEST_CASE("sequential constants quotient their carrier") {
    SeqRelation rel;
    rel.top = {A("x1"), A("x2")};
    rel.bottom = {A("y1")};

    WeightedAutomaton free = seq_constant(rel);
    CHECK(free.states.size() == 3); // no pairs: discrete carrier
    CHECK(free.left.labels.empty());
    CHECK(free.right.labels.empty());
    CHECK(free.table.empty());
    CHECK(free.top.at(A("x1")) == A("x1"));
    CHECK(free.bottom.at(A("y1")) == A("y1"));

    rel.pairs.push_back({SeqPoint{true, A("x1")}, SeqPoint{false, A("y1")}});
    WeightedAutomaton glued = seq_constant(rel);
    CHECK(glued.states.size() == 2);
    CHECK(glued.top.at(A("x1")) == A("x1")); // min member of {x1, y1}
    CHECK(glued.bottom.at(A("y1")) == A("x1"));

    SeqRelation bad;
    bad.top = {A("x")};
    bad.pairs.push_back({SeqPoint{true, A("zzz")}, SeqPoint{true, A("x")}});
    CHECK_THROWS_AS(seq_constant(bad), Error);
}

TEST_CASE("same-named top and bottom points stay distinct states") {
    SeqRelation rel;
    rel.top = {A("a")};
    rel.bottom = {A("a")};
    WeightedAutomaton w = seq_constant(rel);
    CHECK(w.states.size() == 2);
    CHECK(w.top.at(A("a")) != w.bottom.at(A("a")));
}

TEST_CASE("sequential wires have the expected shapes") {
    std::vector<Name> x = {A("a"), A("b")};
    std::vector<Name> y = {A("c")};

    WeightedAutomaton id = seq_wire_identity(x);
    CHECK(id.states == sorted_states(x));
    CHECK(id.top.at(A("a")) == A("a"));
    CHECK(id.bottom.at(A("a")) == A("a"));

    WeightedAutomaton cd = seq_wire_codiag(x);
    CHECK(cd.states == sorted_states(x));        // X+X -> X collapses
    CHECK(cd.top.size() == 4);                   // tagged double on top
    CHECK(cd.top.at(Name::tagL(A("a"))) == A("a"));
    CHECK(cd.top.at(Name::tagR(A("a"))) == A("a"));
    WeightedAutomaton cdop = seq_wire_codiag_op(x);
    CHECK(cdop.bottom.size() == 4);
    CHECK(cdop.top.size() == 2);

    WeightedAutomaton init = seq_wire_initial(x);
    CHECK(init.top.empty());
    CHECK(init.bottom.size() == 2);
    WeightedAutomaton initop = seq_wire_initial_op(x);
    CHECK(initop.bottom.empty());
    CHECK(initop.top.size() == 2);

    WeightedAutomaton tw = seq_wire_twist(x, y);
    CHECK(tw.states.size() == 2); // one class per (x,y) pair
    CHECK(tw.top.at(Name::tuple({A("a"), A("c")})) ==
          tw.bottom.at(Name::tuple({A("c"), A("a")})));

    WeightedAutomaton d = seq_wire_delta(x, y, {A("d")});
    CHECK(d.states.size() == 4); // (a,c) (a,d) (b,c) (b,d)
    CHECK(d.top.at(Name::tuple({A("a"), A("c")})) ==
          d.bottom.at(Name::tuple({A("a"), A("c")})));
    WeightedAutomaton dinv = seq_wire_delta_inv(x, y, {A("d")});
    CHECK(dinv.top.size() == d.bottom.size());
    CHECK(dinv.bottom.size() == d.top.size());
}

TEST_CASE("twist wires compose to the identity wire") {
    std::vector<Name> x = {A("a"), A("b")};
    std::vector<Name> y = {A("c"), A("d")};
    WeightedAutomaton round =
        seq_compose(seq_wire_twist(x, y), seq_wire_twist(y, x));
    WeightedAutomaton id = seq_wire_identity(name_set_product(x, y));
    CHECK(is_isomorphic(round, id));
}

TEST_CASE("codiagonal against its opposite yields the identity") {
    std::vector<Name> x = {A("a"), A("b")};
    WeightedAutomaton round =
        seq_compose(seq_wire_codiag_op(x), seq_wire_codiag(x));
    CHECK(is_isomorphic(round, seq_wire_identity(x)));
}

TEST_CASE("sequential feedback glues interface zones directly and via wires") {
    WeightedAutomaton aut;
    aut.states = {A("s1"), A("s2"), A("s3")};
    aut.left.labels = {A("a")};
    aut.right.labels = {A("b")};
    aut.top[A("x")] = A("s1");
    aut.top[A("z")] = A("s2");
    aut.bottom[A("y")] = A("s1");
    aut.bottom[A("z")] = A("s3");
    aut.add(A("s1"), A("a"), A("b"), A("s2"), Weight(1, 2));
    aut.add(A("s3"), A("a"), A("b"), A("s1"), Weight(1, 3));

    WeightedAutomaton fb = sfb(aut, {A("z")});
    CHECK(fb.states == sorted_states({A("s1"), A("s2")})); // s2 ~ s3
    CHECK(fb.top.size() == 1);    // the zone point is gone
    CHECK(fb.bottom.size() == 1);
    CHECK(fb.weight_of(A("s1"), A("a"), A("b"), A("s2")) == Weight(1, 2));
    CHECK(fb.weight_of(A("s2"), A("a"), A("b"), A("s1")) == Weight(1, 3));

    CHECK(is_isomorphic(fb, sfb_via_wires(aut, {A("z")})));
    CHECK_THROWS_AS(sfb(aut, {A("nope")}), Error);

    // Empty zone is the identity.
    CHECK(structurally_equal(sfb(aut, {}), aut));
}
