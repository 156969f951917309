#include "mka/compare.hpp"
#include "mka/dsl.hpp"
#include "mka/error.hpp"
#include "mka/ops.hpp"

#include <doctest.h>

using namespace mka;

namespace {

Name A(const char* s) { return Name::atom(s); }
Name T(std::vector<Name> v) { return Name::tuple(std::move(v)); }

WeightedAutomaton builtin(const std::string& id, const std::string& name) {
    return eval_model_name(parse_model(builtin_source(id)), name);
}

} // namespace

TEST_CASE("parallel product is the Kronecker construction") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    WeightedAutomaton fork = builtin("fork", "Fork");

    WeightedAutomaton p = parallel_product(phil, fork);
    CHECK(p.states.size() == 12);
    CHECK(p.left.labels.size() == 9);
    CHECK(p.right.labels.size() == 9);
    CHECK(p.table.size() == phil.table.size() * fork.table.size());

    Name t = A("t"), e = A("eps");
    CHECK(p.weight_of(T({A("1"), A("1")}), T({t, t}), T({e, e}),
                      T({A("2"), A("2")})) == Weight(1, 6));
    CHECK(p.left.epsilon == T({e, e}));
}

TEST_CASE("communicating composition sums over the shared middle") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    WeightedAutomaton fork = builtin("fork", "Fork");

    WeightedAutomaton c = communicating_parallel(phil, fork);
    CHECK(c.states.size() == 12);
    CHECK(c.left == phil.left);
    CHECK(c.right == fork.right);

    Name t = A("t"), r = A("r"), e = A("eps");
    // phil talks on its right port, fork listens on its left port.
    CHECK(c.weight_of(T({A("1"), A("1")}), t, e, T({A("2"), A("1")})) ==
          Weight(1, 6));
    CHECK(c.weight_of(T({A("1"), A("1")}), e, t, T({A("1"), A("3")})) ==
          Weight(1, 6));
    CHECK(c.weight_of(T({A("1"), A("1")}), e, e, T({A("1"), A("1")})) ==
          Weight(1, 6));
    // phil's (eps,t) move needs fork's (t,-) move: 2 -(e,t)-> 3 with 1 -(t,e)-> 2.
    CHECK(c.weight_of(T({A("2"), A("1")}), e, e, T({A("3"), A("2")})) ==
          Weight(1, 6));
    // No matching middle: phil's release needs fork to accept r in state 1.
    CHECK(c.weight_of(T({A("4"), A("1")}), e, e, T({A("1"), A("1")})).is_zero());
    CHECK(c.weight_of(T({A("3"), A("1")}), r, e, T({A("4"), A("1")})) ==
          Weight(1, 6));

    WeightedAutomaton example = builtin("example", "Example");
    CHECK_THROWS_AS(communicating_parallel(phil, example), Error);
}

TEST_CASE("parallel wires relate label pairs with weight one") {
    Alphabet a;
    a.labels = {A("t"), A("r"), A("eps")};
    a.epsilon = A("eps");
    Alphabet b;
    b.labels = {A("u"), A("eps")};
    b.epsilon = A("eps");

    WeightedAutomaton id = par_wire_identity(a);
    CHECK(id.states.size() == 1);
    CHECK(id.table.size() == 3);
    CHECK(id.weight_of(Name::unit(), A("t"), A("t"), Name::unit()).is_one());

    WeightedAutomaton diag = par_wire_diag(a);
    CHECK(diag.right.labels.size() == 9);
    CHECK(diag.table.size() == 3);
    CHECK(diag.weight_of(Name::unit(), A("t"), T({A("t"), A("t")}),
                         Name::unit()).is_one());

    WeightedAutomaton proj = par_wire_proj(a);
    CHECK(is_unit_alphabet(proj.right));
    CHECK(proj.table.size() == 3);

    WeightedAutomaton tw = par_wire_twist(a, b);
    CHECK(tw.table.size() == 6);
    CHECK(tw.weight_of(Name::unit(), T({A("t"), A("u")}), T({A("u"), A("t")}),
                       Name::unit()).is_one());

    WeightedAutomaton cd = par_wire_codiag(a);
    CHECK(cd.left.labels.size() == 6);
    CHECK(cd.table.size() == 6);
    CHECK(cd.weight_of(Name::unit(), Name::tagL(A("t")), A("t"), Name::unit())
              .is_one());
    WeightedAutomaton cdop = par_wire_codiag_op(a);
    CHECK(cdop.right.labels.size() == 6);
    CHECK(cdop.table.size() == 6);
}

TEST_CASE("diagonal against codiagonal collapses to the identity wire") {
    Alphabet a;
    a.labels = {A("t"), A("r"), A("eps")};
    a.epsilon = A("eps");
    WeightedAutomaton round =
        communicating_parallel(par_wire_diag(a), par_wire_diag_op(a));
    CHECK(structurally_equal(round, par_wire_identity(a)));
}

TEST_CASE("local operations act on a shared alphabet without tagging") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    WeightedAutomaton sum = local_sum(phil, phil);
    CHECK(sum.states.size() == 8);
    CHECK(sum.left == phil.left);
    CHECK(sum.right == phil.right);
    CHECK(sum.table.size() == 16);
    Name t = A("t"), e = A("eps");
    CHECK(sum.weight_of(Name::tagL(A("1")), t, e, Name::tagL(A("2"))) ==
          Weight(1, 2));
    CHECK(sum.weight_of(Name::tagR(A("1")), t, e, Name::tagR(A("2"))) ==
          Weight(1, 2));

    WeightedAutomaton p;
    p.states = {A("p1"), A("p2")};
    p.left.labels = {A("a")};
    p.right.labels = {A("b")};
    p.top[A("x")] = A("p1");
    p.bottom[A("y")] = A("p2");
    p.add(A("p1"), A("a"), A("b"), A("p2"), Weight(2));

    WeightedAutomaton q;
    q.states = {A("q1"), A("q2")};
    q.left.labels = {A("a")};
    q.right.labels = {A("b")};
    q.top[A("y")] = A("q1");
    q.bottom[A("z")] = A("q2");
    q.add(A("q1"), A("a"), A("b"), A("q2"), Weight(3));

    WeightedAutomaton c = local_seq(p, q);
    CHECK(c.states == sorted_states({A("p1"), A("p2"), A("q2")}));
    CHECK(c.left.labels == std::vector<Name>{A("a")});
    CHECK(c.weight_of(A("p1"), A("a"), A("b"), A("p2")) == Weight(2));
    CHECK(c.weight_of(A("p2"), A("a"), A("b"), A("q2")) == Weight(3));

    WeightedAutomaton example = builtin("example", "Example");
    CHECK_THROWS_AS(local_sum(phil, example), Error);
}

TEST_CASE("parallel feedback keeps the diagonal and sums it out") {
    Alphabet c;
    c.labels = {A("c1"), A("c2")};
    WeightedAutomaton aut;
    aut.states = {A("s"), A("t")};
    Alphabet left, right;
    for (const Name& l : {A("a")})
        for (const Name& m : c.labels) left.labels.push_back(T({l, m}));
    for (const Name& l : {A("b")})
        for (const Name& m : c.labels) right.labels.push_back(T({l, m}));
    aut.left = left;
    aut.right = right;
    aut.add(A("s"), T({A("a"), A("c1")}), T({A("b"), A("c1")}), A("t"),
            Weight(1, 3));
    aut.add(A("s"), T({A("a"), A("c2")}), T({A("b"), A("c2")}), A("t"),
            Weight(1, 5));
    aut.add(A("s"), T({A("a"), A("c1")}), T({A("b"), A("c2")}), A("s"),
            Weight(1, 7)); // off-diagonal: dropped by feedback

    WeightedAutomaton fb = pfb(aut, c);
    CHECK(fb.left.labels == std::vector<Name>{A("a")});
    CHECK(fb.right.labels == std::vector<Name>{A("b")});
    CHECK(fb.states == aut.states);
    CHECK(fb.table.size() == 1);
    CHECK(fb.weight_of(A("s"), A("a"), A("b"), A("t")) ==
          Weight(1, 3) + Weight(1, 5));

    CHECK(structurally_equal(fb, pfb_via_wires(aut, c)));

    // Feedback over the unit alphabet is the identity.
    CHECK(structurally_equal(pfb(aut, alphabet_unit()), aut));

    // Mismatched block structure is rejected.
    Alphabet wrong;
    wrong.labels = {A("zz")};
    CHECK_THROWS_AS(pfb(aut, wrong), Error);
}

TEST_CASE("closed parallel feedback leaves unit alphabets") {
    WeightedAutomaton phil = builtin("phil", "Phil");
    WeightedAutomaton fork = builtin("fork", "Fork");
    WeightedAutomaton chain = communicating_parallel(
        communicating_parallel(communicating_parallel(phil, fork), phil), fork);
    WeightedAutomaton closed = pfb(chain, phil.left);
    CHECK(is_unit_alphabet(closed.left));
    CHECK(is_unit_alphabet(closed.right));
    CHECK(closed.states.size() == 144);
    CHECK(structurally_equal(closed, pfb_via_wires(chain, phil.left)));
}

TEST_CASE("the seat component closes into a five-state loop") {
    WeightedAutomaton seat = builtin("party", "S");
    CHECK(seat.states ==
          sorted_states({A("1"), A("2"), A("3"), A("4"), A("5")}));
    CHECK(seat.top.empty());
    CHECK(seat.bottom.empty());
    CHECK(seat.table.size() == 11);
    CHECK(is_positive(seat));

    Name e = A("eps"), x = A("x"), t = A("t"), r = A("r");
    auto pair = [](Name a, Name b) { return Name::tuple({a, b}); };
    // A child enters from the left neighbour and leaves to the right one.
    CHECK(seat.weight_of(A("5"), pair(x, e), pair(e, e), A("1")).is_one());
    CHECK(seat.weight_of(A("1"), pair(e, e), pair(x, e), A("5")).is_one());
    // Fork protocol around the eating state 3.
    CHECK(seat.weight_of(A("1"), pair(e, t), pair(e, e), A("2")).is_one());
    CHECK(seat.weight_of(A("2"), pair(e, e), pair(e, t), A("3")).is_one());
    CHECK(seat.weight_of(A("3"), pair(e, r), pair(e, e), A("4")).is_one());
    CHECK(seat.weight_of(A("4"), pair(e, e), pair(e, r), A("1")).is_one());
}
