#pragma once

#include "mka/automaton.hpp"

#include <utility>
#include <vector>

namespace mka {

/// One endpoint of a sequential-relation pair: a point of the top set or of
/// the bottom set of the carrier X + Y.
struct SeqPoint {
    bool top;
    Name name;
};

/// Relation generating a sequential constant: carrier X + Y plus unordered
/// generating pairs; the constant's states are the equivalence classes.
struct SeqRelation {
    std::vector<Name> top, bottom;
    std::vector<std::pair<SeqPoint, SeqPoint>> pairs;
};

/// Relation generating a parallel constant: a one-state automaton with a
/// weight-1 entry at every related label pair.
struct ParRelation {
    Alphabet left, right;
    std::vector<std::pair<Name, Name>> pairs;
};

// --- constants and wires ---------------------------------------------------

WeightedAutomaton seq_constant(const SeqRelation& rel);
WeightedAutomaton par_constant(const ParRelation& rel);

WeightedAutomaton seq_wire_identity(const std::vector<Name>& x);
/// Codiagonal X+X -> X (top is the tagged double, bottom the set itself).
WeightedAutomaton seq_wire_codiag(const std::vector<Name>& x);
WeightedAutomaton seq_wire_codiag_op(const std::vector<Name>& x);
/// Initial 0 -> X (empty top, bottom X, no pairs).
WeightedAutomaton seq_wire_initial(const std::vector<Name>& x);
WeightedAutomaton seq_wire_initial_op(const std::vector<Name>& x);
/// Twist X x Y -> Y x X on pair points.
WeightedAutomaton seq_wire_twist(const std::vector<Name>& x,
                                 const std::vector<Name>& y);
/// Distributivity X x Y + X x Z -> X x (Y + Z) and its inverse.
WeightedAutomaton seq_wire_delta(const std::vector<Name>& x,
                                 const std::vector<Name>& y,
                                 const std::vector<Name>& z);
WeightedAutomaton seq_wire_delta_inv(const std::vector<Name>& x,
                                     const std::vector<Name>& y,
                                     const std::vector<Name>& z);

WeightedAutomaton par_wire_identity(const Alphabet& a);
/// Diagonal A -> A x A.
WeightedAutomaton par_wire_diag(const Alphabet& a);
WeightedAutomaton par_wire_diag_op(const Alphabet& a);
/// Projection A -> unit and its opposite.
WeightedAutomaton par_wire_proj(const Alphabet& a);
WeightedAutomaton par_wire_proj_op(const Alphabet& a);
WeightedAutomaton par_wire_twist(const Alphabet& a, const Alphabet& b);
/// Codiagonal A+A -> A and its opposite.
WeightedAutomaton par_wire_codiag(const Alphabet& a);
WeightedAutomaton par_wire_codiag_op(const Alphabet& a);

// --- set-level helpers shared with wires and the DSL -----------------------

/// All pairs as flattened tuples, left factor slowest.
std::vector<Name> name_set_product(const std::vector<Name>& a,
                                   const std::vector<Name>& b);
/// Disjoint sum with collision-conditional tagging; empty sides absorb.
std::vector<Name> name_set_sum(const std::vector<Name>& a,
                               const std::vector<Name>& b);

// --- binary operations ------------------------------------------------------

/// Disjoint sum: tagged states/labels/points only where the two sides collide.
WeightedAutomaton boxplus_sum(const WeightedAutomaton& p, const WeightedAutomaton& q);

/// Sequential composition along p.bottom = q.top (InterfaceMismatch
/// otherwise); glued states are quotient classes named by their minimal
/// member, entries summed over class representatives.
WeightedAutomaton seq_compose(const WeightedAutomaton& p, const WeightedAutomaton& q);

/// Kronecker product on A x C / B x D.
WeightedAutomaton parallel_product(const WeightedAutomaton& p, const WeightedAutomaton& q);

/// Communicating composition summing over the shared middle alphabet
/// (p.right must equal q.left exactly).
WeightedAutomaton communicating_parallel(const WeightedAutomaton& p,
                                         const WeightedAutomaton& q);

/// Local (same-alphabet) sum and sequential composition.
WeightedAutomaton local_sum(const WeightedAutomaton& p, const WeightedAutomaton& q);
WeightedAutomaton local_seq(const WeightedAutomaton& p, const WeightedAutomaton& q);

/// Sequential feedback: glue gamma0(z) with gamma1(z) for every z in `zone`
/// (zone must lie in both interface domains) and drop the zone points.
WeightedAutomaton sfb(const WeightedAutomaton& aut, const std::vector<Name>& zone);

/// Parallel feedback over C: keep entries whose left/right C-components
/// agree and sum them over C. aut.left must be A x C and aut.right B x C;
/// an automaton with left = right = C is read as the closed case A = B = unit.
WeightedAutomaton pfb(const WeightedAutomaton& aut, const Alphabet& c);

/// Oracle forms: the literal wire expressions the direct forms implement.
WeightedAutomaton sfb_via_wires(const WeightedAutomaton& aut,
                                const std::vector<Name>& zone);
WeightedAutomaton pfb_via_wires(const WeightedAutomaton& aut, const Alphabet& c);

} // namespace mka
