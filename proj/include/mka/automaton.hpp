#pragma once

#include "mka/alphabet.hpp"
#include "mka/name.hpp"
#include "mka/weight.hpp"

#include <map>
#include <vector>

namespace mka {

/// Sequential interface: finite set of points, each mapped to a state.
/// Kept as an ordered map, so the domain is canonically sorted.
using InterfaceMap = std::map<Name, Name>;

/// Key of one transition-table entry.
struct TransKey {
    Name from, left, right, to;

    auto tie() const { return std::tie(from, left, right, to); }
    bool operator<(const TransKey& o) const {
        if (int c = from.compare(o.from)) return c < 0;
        if (int c = left.compare(o.left)) return c < 0;
        if (int c = right.compare(o.right)) return c < 0;
        return to.compare(o.to) < 0;
    }
    bool operator==(const TransKey& o) const {
        return from == o.from && left == o.left && right == o.right && to == o.to;
    }
};

/// Sparse table of non-negative weights; absent entries are zero and zero
/// weights are never stored.
using TransitionTable = std::map<TransKey, Weight>;

/// Weighted automaton with two parallel interfaces (the left/right signal
/// alphabets) and two sequential interfaces (top/bottom state maps).
struct WeightedAutomaton {
    std::vector<Name> states; // sorted, unique
    Alphabet left, right;
    InterfaceMap top, bottom;
    TransitionTable table;

    bool has_state(const Name& s) const;
    int state_index(const Name& s) const; // -1 if absent

    /// Accumulate a weight; zero additions are dropped.
    void add(const Name& from, const Name& l, const Name& r, const Name& to,
             const Weight& w);

    Weight weight_of(const Name& from, const Name& l, const Name& r,
                     const Name& to) const;

    /// Check all structural invariants; throws on violation
    /// (UnknownState / UnknownLabel / InvalidWeight).
    void validate() const;
};

/// Sort + dedupe a state list into canonical order.
std::vector<Name> sorted_states(std::vector<Name> v);

/// Dense view of the label-summed transition matrix, indexed by `states`.
struct TotalMatrix {
    std::vector<Name> states;
    std::vector<std::vector<Weight>> w;
};

TotalMatrix total_matrix(const WeightedAutomaton& aut);

/// Per-state total outgoing weight (row sums of the total matrix).
std::vector<Weight> row_totals(const WeightedAutomaton& aut);

/// Both alphabets have an epsilon and every state has positive total
/// (eps,eps) out-weight.
bool is_positive(const WeightedAutomaton& aut);

/// Positive and every total-matrix row sums to exactly 1.
bool is_markov(const WeightedAutomaton& aut);

/// Divide every entry by its source row's total weight. Requires every row
/// total to be strictly positive; throws NotNormalizable otherwise.
WeightedAutomaton normalize(const WeightedAutomaton& aut);

/// k-step automaton over the k-fold power alphabets: entry at word pair
/// (u, v) is the product Q_{u1,v1} ... Q_{uk,vk}. k >= 1 (InvalidK).
WeightedAutomaton k_step_automaton(const WeightedAutomaton& aut, int k);

/// One run of the state vector under a word pair.
struct Behaviour {
    std::vector<Name> left_word, right_word;
    std::vector<std::vector<Weight>> steps; // steps[0] = x0, ..., steps[k]
};

/// x_i = x_{i-1} Q_{u_i, v_i}. |u| == |v| (LengthMismatch), labels must be
/// present (UnknownLabel), |x0| == |states| (DimensionMismatch).
Behaviour behaviour_evolve(const WeightedAutomaton& aut,
                           const std::vector<Weight>& x0,
                           const std::vector<Name>& u,
                           const std::vector<Name>& v);

} // namespace mka
