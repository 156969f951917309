#pragma once

#include "mka/automaton.hpp"

namespace mka {

/// Field-by-field equality: states, alphabets, interfaces, table.
bool structurally_equal(const WeightedAutomaton& p, const WeightedAutomaton& q);

/// Existence of a state bijection preserving interfaces and all weighted
/// transitions. Alphabets (including order and epsilon) must be equal and
/// interface domains identical; the bijection must commute with the gamma
/// maps. If cheap invariants cannot refute and the state count exceeds
/// `bound` without the bijection being forced, throws TooLarge.
bool is_isomorphic(const WeightedAutomaton& p, const WeightedAutomaton& q,
                   int bound = 16);

} // namespace mka
