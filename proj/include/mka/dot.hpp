#pragma once

#include "mka/automaton.hpp"

#include <string>

namespace mka {

/// Deterministic Graphviz rendering: one node per state, edges labelled
/// "left/right;weight", interface points as dashed satellite nodes.
std::string to_dot(const WeightedAutomaton& aut);

} // namespace mka
