#include "mka/analysis.hpp"

#include "mka/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mka {

std::vector<Weight> point_mass(const WeightedAutomaton& aut,
                               const Name& state) {
    int i = aut.state_index(state);
    if (i < 0) raise("UnknownState", "no state named '" + state.str() + "'");
    std::vector<Weight> x(aut.states.size(), Weight::zero());
    x[static_cast<std::size_t>(i)] = Weight::one();
    return x;
}

bool is_closed(const WeightedAutomaton& aut) {
    return is_unit_alphabet(aut.left) && is_unit_alphabet(aut.right);
}

namespace {

// Positive-support adjacency over state indices, any labels.
std::vector<std::set<int>> support_digraph(const WeightedAutomaton& aut) {
    std::vector<std::set<int>> adj(aut.states.size());
    for (const auto& [k, w] : aut.table) {
        if (w.is_zero()) continue;
        adj[static_cast<std::size_t>(aut.state_index(k.from))].insert(
            aut.state_index(k.to));
    }
    return adj;
}

std::set<int> forward_closure(const std::vector<std::set<int>>& adj,
                              int start) {
    std::set<int> seen{start};
    std::deque<int> work{start};
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (int t : adj[static_cast<std::size_t>(s)])
            if (seen.insert(t).second) work.push_back(t);
    }
    return seen;
}

} // namespace

WeightedAutomaton reachable_part(const WeightedAutomaton& aut,
                                 const Name& q0) {
    int start = aut.state_index(q0);
    if (start < 0) raise("UnknownState", "no state named '" + q0.str() + "'");
    std::set<int> keep = forward_closure(support_digraph(aut), start);

    WeightedAutomaton out;
    out.left = aut.left;
    out.right = aut.right;
    std::set<Name> kept;
    for (int i : keep) {
        out.states.push_back(aut.states[static_cast<std::size_t>(i)]);
        kept.insert(aut.states[static_cast<std::size_t>(i)]);
    }
    out.states = sorted_states(std::move(out.states));
    for (const auto& [pt, st] : aut.top)
        if (kept.count(st)) out.top[pt] = st;
    for (const auto& [pt, st] : aut.bottom)
        if (kept.count(st)) out.bottom[pt] = st;
    for (const auto& [k, w] : aut.table)
        if (kept.count(k.from)) out.add(k.from, k.left, k.right, k.to, w);
    return out;
}

std::vector<Name> deadlock_states(const WeightedAutomaton& aut) {
    if (!is_closed(aut))
        raise("NotClosed", "deadlock analysis needs unit parallel alphabets");
    if (!is_markov(aut))
        raise("NotMarkov", "deadlock analysis needs a Markov automaton");
    TotalMatrix m = total_matrix(aut);
    std::vector<Name> out;
    for (std::size_t i = 0; i < m.states.size(); ++i)
        if (m.w[i][i].is_one()) out.push_back(m.states[i]);
    return out;
}

PfVerdict check_pf_hypotheses(const WeightedAutomaton& aut, const Name& q0) {
    PfVerdict v;
    v.deadlocks = deadlock_states(aut);
    int start = aut.state_index(q0);
    if (start < 0) raise("UnknownState", "no state named '" + q0.str() + "'");

    auto adj = support_digraph(aut);
    std::set<int> reachable = forward_closure(adj, start);

    std::set<Name> dead(v.deadlocks.begin(), v.deadlocks.end());
    v.unique_reachable_deadlock =
        v.deadlocks.size() == 1 &&
        reachable.count(aut.state_index(v.deadlocks.front())) > 0;

    // (ii): reverse reachability from q0 must cover every reachable
    // non-deadlock state.
    std::vector<std::set<int>> radj(aut.states.size());
    for (std::size_t s = 0; s < adj.size(); ++s)
        for (int t : adj[s]) radj[static_cast<std::size_t>(t)].insert(
            static_cast<int>(s));
    std::set<int> returns = forward_closure(radj, start);
    v.all_return_to_initial = true;
    for (int i : reachable) {
        const Name& st = aut.states[static_cast<std::size_t>(i)];
        if (dead.count(st)) continue;
        if (!returns.count(i)) { v.all_return_to_initial = false; break; }
    }

    TotalMatrix m = total_matrix(aut);
    v.all_have_self_loop = true;
    for (int i : reachable)
        if (m.w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]
                .is_zero()) {
            v.all_have_self_loop = false;
            break;
        }
    return v;
}

std::vector<Weight> evolve_distribution(const WeightedAutomaton& aut,
                                        std::vector<Weight> x0, int k) {
    if (x0.size() != aut.states.size())
        raise("DimensionMismatch", "distribution has " +
                                       std::to_string(x0.size()) +
                                       " entries for " +
                                       std::to_string(aut.states.size()) +
                                       " states");
    if (k < 0) raise("InvalidK", "step count must be non-negative");
    TotalMatrix m = total_matrix(aut);
    std::size_t n = aut.states.size();
    for (int step = 0; step < k; ++step) {
        std::vector<Weight> next(n, Weight::zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (x0[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (m.w[i][j].is_zero()) continue;
                next[j] += x0[i] * m.w[i][j];
            }
        }
        x0 = std::move(next);
    }
    return x0;
}

std::vector<double> evolve_distribution_double(const WeightedAutomaton& aut,
                                               std::vector<double> x0, int k) {
    if (x0.size() != aut.states.size())
        raise("DimensionMismatch", "distribution has " +
                                       std::to_string(x0.size()) +
                                       " entries for " +
                                       std::to_string(aut.states.size()) +
                                       " states");
    if (k < 0) raise("InvalidK", "step count must be non-negative");
    TotalMatrix m = total_matrix(aut);
    std::size_t n = aut.states.size();
    std::vector<std::vector<double>> md(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) md[i][j] = m.w[i][j].to_double();
    for (int step = 0; step < k; ++step) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (x0[i] == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) next[j] += x0[i] * md[i][j];
        }
        x0 = std::move(next);
    }
    return x0;
}

Weight subset_probability(const WeightedAutomaton& aut, const Name& q0,
                          const std::function<bool(const Name&)>& pred,
                          int k) {
    std::vector<Weight> x = evolve_distribution(aut, point_mass(aut, q0), k);
    Weight total;
    for (std::size_t i = 0; i < aut.states.size(); ++i)
        if (pred(aut.states[i])) total += x[i];
    return total;
}

std::vector<std::pair<int, Weight>> probability_series(
    const WeightedAutomaton& aut, const Name& q0,
    const std::function<bool(const Name&)>& pred, int k_max) {
    std::vector<std::pair<int, Weight>> out;
    std::vector<Weight> x = point_mass(aut, q0);
    for (int k = 1; k <= k_max; ++k) {
        x = evolve_distribution(aut, std::move(x), 1);
        Weight total;
        for (std::size_t i = 0; i < aut.states.size(); ++i)
            if (pred(aut.states[i])) total += x[i];
        out.emplace_back(k, total);
    }
    return out;
}

std::vector<std::pair<int, Weight>> deadlock_probability_series(
    const WeightedAutomaton& aut, const Name& q0, int k_max) {
    std::vector<Name> dead = deadlock_states(aut);
    std::set<Name> dset(dead.begin(), dead.end());
    return probability_series(
        aut, q0, [&dset](const Name& s) { return dset.count(s) > 0; }, k_max);
}

int eating_component_count(const Name& state) {
    if (!state.is_tuple()) {
        return state.is_atom() && state.atom_text() == "3" ? 1 : 0;
    }
    int n = 0;
    const auto& parts = state.parts();
    for (std::size_t i = 0; i < parts.size(); i += 2)
        if (parts[i].is_atom() && parts[i].atom_text() == "3") ++n;
    return n;
}

bool is_eating_state(const Name& state) {
    return eating_component_count(state) > 0;
}

int eating_state_count(const WeightedAutomaton& aut) {
    int n = 0;
    for (const Name& s : aut.states)
        if (is_eating_state(s)) ++n;
    return n;
}

bool eating_exclusive(const WeightedAutomaton& aut) {
    for (const Name& s : aut.states)
        if (eating_component_count(s) > 1) return false;
    return true;
}

AnalysisReport analyze(const WeightedAutomaton& aut, const Name& q0, int k_max,
                       AnalysisTarget target) {
    AnalysisReport rep;
    rep.initial = q0;
    rep.target = target;

    WeightedAutomaton part = reachable_part(aut, q0);
    rep.reachable = part.states;
    rep.transition_count = part.table.size();

    if (is_closed(part) && is_markov(part)) {
        rep.pf = check_pf_hypotheses(part, q0);
        rep.pf_checked = true;
    } else if (target == AnalysisTarget::Deadlock) {
        // Surfaces the precondition failure rather than reporting nothing.
        deadlock_states(part);
    }

    if (target == AnalysisTarget::Deadlock) {
        rep.series = deadlock_probability_series(part, q0, k_max);
    } else {
        rep.series = probability_series(part, q0, is_eating_state, k_max);
    }
    return rep;
}

} // namespace mka
