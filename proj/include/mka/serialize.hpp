#pragma once

#include "mka/analysis.hpp"
#include "mka/automaton.hpp"

#include <string>

namespace mka {

/// Canonical JSON: states ascending, labels in alphabet order, transitions
/// sorted by (from, left alphabet index, right alphabet index, to), weights
/// as "p/q" strings. Equal automata serialize to identical bytes.
std::string to_json(const WeightedAutomaton& aut);

/// Inverse of to_json (accepts any field order); validates the result.
WeightedAutomaton automaton_from_json(const std::string& text);

/// Report rendering: probabilities appear both as "p/q" and as a
/// 10-significant-digit decimal.
std::string to_json(const AnalysisReport& rep);

} // namespace mka
