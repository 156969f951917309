#pragma once

#include "mka/automaton.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace mka {

/// Unit distribution concentrated on `state` (UnknownState if absent).
std::vector<Weight> point_mass(const WeightedAutomaton& aut, const Name& state);

/// Both parallel alphabets are the unit alphabet: the automaton is a plain
/// weighted matrix and deadlock analysis makes sense.
bool is_closed(const WeightedAutomaton& aut);

/// Restriction to the states reachable from q0 through positive entries of
/// the total matrix (any labels). Interface points whose image is dropped
/// leave the domain. Idempotent. UnknownState if q0 is absent.
WeightedAutomaton reachable_part(const WeightedAutomaton& aut, const Name& q0);

/// Absorbing states: total-matrix row equal to the point mass on itself.
/// Requires a closed (NotClosed) Markov (NotMarkov) automaton.
std::vector<Name> deadlock_states(const WeightedAutomaton& aut);

/// The three hypotheses that make the absorption argument go through.
/// (i) looks at the whole input automaton, so pass the reachable part when
/// that is what should be judged.
struct PfVerdict {
    std::vector<Name> deadlocks;              // deadlock states of the input
    bool unique_reachable_deadlock = false;   // (i)
    bool all_return_to_initial = false;       // (ii) reachable non-deadlock -> q0
    bool all_have_self_loop = false;          // (iii) reachable states loop

    bool all() const {
        return unique_reachable_deadlock && all_return_to_initial &&
               all_have_self_loop;
    }
};

PfVerdict check_pf_hypotheses(const WeightedAutomaton& aut, const Name& q0);

/// x0 · (total matrix)^k, k >= 0 (InvalidK when negative). Exact.
std::vector<Weight> evolve_distribution(const WeightedAutomaton& aut,
                                        std::vector<Weight> x0, int k);

/// Same recurrence in double precision.
std::vector<double> evolve_distribution_double(const WeightedAutomaton& aut,
                                               std::vector<double> x0, int k);

/// Mass of evolve_distribution(e_q0, k) on the states satisfying pred.
Weight subset_probability(const WeightedAutomaton& aut, const Name& q0,
                          const std::function<bool(const Name&)>& pred, int k);

/// (k, mass on pred-states after k steps) for k = 1..k_max.
std::vector<std::pair<int, Weight>> probability_series(
    const WeightedAutomaton& aut, const Name& q0,
    const std::function<bool(const Name&)>& pred, int k_max);

/// probability_series against deadlock_states (closed Markov automata).
std::vector<std::pair<int, Weight>> deadlock_probability_series(
    const WeightedAutomaton& aut, const Name& q0, int k_max);

/// A party state is "eating" when some seat component (even tuple position)
/// is the child phase 3. Exclusivity: no state with two such components.
bool is_eating_state(const Name& state);
int eating_component_count(const Name& state);
int eating_state_count(const WeightedAutomaton& aut);
bool eating_exclusive(const WeightedAutomaton& aut);

enum class AnalysisTarget { Deadlock, Eating };

struct AnalysisReport {
    Name initial;
    std::vector<Name> reachable;   // canonical state order of the restriction
    std::size_t transition_count = 0;
    AnalysisTarget target = AnalysisTarget::Deadlock;
    bool pf_checked = false;       // verdict filled only for closed Markov parts
    PfVerdict pf;
    std::vector<std::pair<int, Weight>> series; // k = 1..k_max on the target set
};

/// Restrict to the part reachable from q0, judge the hypotheses there (when
/// closed and Markov), and compute the k = 1..k_max series on the target set.
AnalysisReport analyze(const WeightedAutomaton& aut, const Name& q0, int k_max,
                       AnalysisTarget target);

} // namespace mka
