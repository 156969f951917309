#pragma once

#include "mka/dsl.hpp"

namespace mka {

/// Rebuild an automaton as
///   rho_top ;; (T_1 + ... + T_m + U_1 + ... + U_n) ;; rho_bot
/// where each T_i is a two-state automaton carrying one original transition,
/// each U_q is a one-state pass-through for an original state, and the two
/// relation constants glue the pieces back together. Evaluating the result
/// (empty environment) yields an automaton isomorphic to the input.
ExprPtr elementary_decomposition(const WeightedAutomaton& aut);

} // namespace mka
