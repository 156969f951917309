#pragma once

#include "mka/automaton.hpp"

#include <cstdint>
#include <random>

namespace mka {

/// Deterministic source for the randomized property tests. Uses modulo
/// reduction so a seed reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : g_(seed) {}

    /// Uniform-ish 0..bound-1 (bound >= 1).
    int next(int bound);

    /// Small positive rational (numerator, denominator in 1..6).
    Weight weight();

private:
    std::mt19937 g_;
};

/// eps plus up to max_labels-1 extra labels named stem1, stem2, ...
Alphabet random_alphabet(Rng& rng, int max_labels, const std::string& stem);

/// Positive automaton over the given alphabets: 1..max_states states, an
/// (eps,eps) self-loop on every state (so it is positive and normalizable),
/// random extra transitions and random small interfaces.
WeightedAutomaton random_positive_automaton_over(Rng& rng,
                                                 const Alphabet& left,
                                                 const Alphabet& right,
                                                 int max_states = 4);

/// Same with fresh random alphabets (eps plus up to max_labels-1 labels).
WeightedAutomaton random_positive_automaton(Rng& rng, int max_states = 4,
                                            int max_labels = 3);

} // namespace mka
