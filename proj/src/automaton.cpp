#include "mka/automaton.hpp"

#include "mka/error.hpp"

#include <algorithm>

namespace mka {

bool WeightedAutomaton::has_state(const Name& s) const {
    return std::binary_search(states.begin(), states.end(), s);
}

int WeightedAutomaton::state_index(const Name& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s) return -1;
    return static_cast<int>(it - states.begin());
}

void WeightedAutomaton::add(const Name& from, const Name& l, const Name& r,
                            const Name& to, const Weight& w) {
    if (w.is_zero()) return;
    table[TransKey{from, l, r, to}] += w;
}

Weight WeightedAutomaton::weight_of(const Name& from, const Name& l,
                                    const Name& r, const Name& to) const {
    auto it = table.find(TransKey{from, l, r, to});
    return it == table.end() ? Weight::zero() : it->second;
}

void WeightedAutomaton::validate() const {
    for (size_t i = 0; i + 1 < states.size(); ++i)
        if (!(states[i] < states[i + 1]))
            raise("UnknownState", "state list not sorted/unique at '" +
                                      states[i + 1].str() + "'");
    auto check_iface = [&](const InterfaceMap& m, const char* which) {
        for (const auto& [pt, st] : m)
            if (!has_state(st))
                raise("UnknownState", std::string(which) + " interface point '" +
                                          pt.str() + "' maps to unknown state '" +
                                          st.str() + "'");
    };
    check_iface(top, "top");
    check_iface(bottom, "bottom");
    if (left.epsilon && !left.contains(*left.epsilon))
        raise("UnknownLabel", "left epsilon not in alphabet");
    if (right.epsilon && !right.contains(*right.epsilon))
        raise("UnknownLabel", "right epsilon not in alphabet");
    for (const auto& [k, w] : table) {
        if (!has_state(k.from))
            raise("UnknownState", "transition from unknown state '" + k.from.str() + "'");
        if (!has_state(k.to))
            raise("UnknownState", "transition to unknown state '" + k.to.str() + "'");
        if (!left.contains(k.left))
            raise("UnknownLabel", "unknown left label '" + k.left.str() + "'");
        if (!right.contains(k.right))
            raise("UnknownLabel", "unknown right label '" + k.right.str() + "'");
        if (!(w > Weight::zero()))
            raise("InvalidWeight", "non-positive stored weight");
    }
}

std::vector<Name> sorted_states(std::vector<Name> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

TotalMatrix total_matrix(const WeightedAutomaton& aut) {
    TotalMatrix m;
    m.states = aut.states;
    size_t n = aut.states.size();
    m.w.assign(n, std::vector<Weight>(n, Weight::zero()));
    for (const auto& [k, w] : aut.table) {
        int i = aut.state_index(k.from), j = aut.state_index(k.to);
        m.w[i][j] += w;
    }
    return m;
}

std::vector<Weight> row_totals(const WeightedAutomaton& aut) {
    std::vector<Weight> t(aut.states.size(), Weight::zero());
    for (const auto& [k, w] : aut.table) t[aut.state_index(k.from)] += w;
    return t;
}

bool is_positive(const WeightedAutomaton& aut) {
    if (!aut.left.epsilon || !aut.right.epsilon) return false;
    std::vector<Weight> idle(aut.states.size(), Weight::zero());
    for (const auto& [k, w] : aut.table)
        if (k.left == *aut.left.epsilon && k.right == *aut.right.epsilon)
            idle[aut.state_index(k.from)] += w;
    for (const auto& w : idle)
        if (w.is_zero()) return false;
    return true;
}

bool is_markov(const WeightedAutomaton& aut) {
    if (!is_positive(aut)) return false;
    for (const auto& t : row_totals(aut))
        if (t != Weight::one()) return false;
    return true;
}

WeightedAutomaton normalize(const WeightedAutomaton& aut) {
    auto totals = row_totals(aut);
    for (size_t i = 0; i < totals.size(); ++i)
        if (totals[i].is_zero())
            raise("NotNormalizable", "state '" + aut.states[i].str() +
                                         "' has zero total outgoing weight");
    WeightedAutomaton out = aut;
    for (auto& [k, w] : out.table) w = w / totals[aut.state_index(k.from)];
    return out;
}

WeightedAutomaton k_step_automaton(const WeightedAutomaton& aut, int k) {
    if (k < 1) raise("InvalidK", "k-step automaton needs k >= 1");

    using SparseMat = std::map<std::pair<int, int>, Weight>;
    // Word names mirror alphabet_power: flattened tuples, except that powers
    // of the unit alphabet collapse back to its single eps label.
    bool left_unit = is_unit_alphabet(aut.left);
    bool right_unit = is_unit_alphabet(aut.right);
    auto extend = [](bool unit, const Name& word, const Name& step_label) {
        return unit ? step_label : Name::tuple({word, step_label});
    };
    // Word-pair-indexed sparse matrices; words as (left name, right name).
    std::map<std::pair<Name, Name>, SparseMat> step, acc;
    for (const auto& [key, w] : aut.table)
        step[{key.left, key.right}][{aut.state_index(key.from),
                                     aut.state_index(key.to)}] += w;
    acc = step;
    for (int i = 1; i < k; ++i) {
        std::map<std::pair<Name, Name>, SparseMat> next;
        for (const auto& [uw, mu] : acc)
            for (const auto& [aw, ma] : step) {
                Name u = extend(left_unit, uw.first, aw.first);
                Name v = extend(right_unit, uw.second, aw.second);
                SparseMat& out = next[{u, v}];
                for (const auto& [ij, w1] : mu)
                    for (const auto& [jk, w2] : ma) {
                        if (ij.second != jk.first) continue;
                        Weight prod = w1 * w2;
                        if (!prod.is_zero()) out[{ij.first, jk.second}] += prod;
                    }
                if (out.empty()) next.erase({u, v});
            }
        acc = std::move(next);
    }

    WeightedAutomaton out;
    out.states = aut.states;
    out.left = alphabet_power(aut.left, k);
    out.right = alphabet_power(aut.right, k);
    out.top = aut.top;
    out.bottom = aut.bottom;
    for (const auto& [uv, m] : acc)
        for (const auto& [ij, w] : m)
            out.add(aut.states[ij.first], uv.first, uv.second,
                    aut.states[ij.second], w);
    return out;
}

Behaviour behaviour_evolve(const WeightedAutomaton& aut,
                           const std::vector<Weight>& x0,
                           const std::vector<Name>& u,
                           const std::vector<Name>& v) {
    if (u.size() != v.size())
        raise("LengthMismatch", "left word has length " + std::to_string(u.size()) +
                                    ", right word " + std::to_string(v.size()));
    if (x0.size() != aut.states.size())
        raise("DimensionMismatch", "start vector length " + std::to_string(x0.size()) +
                                       " for " + std::to_string(aut.states.size()) +
                                       " states");
    for (const auto& l : u)
        if (!aut.left.contains(l)) raise("UnknownLabel", "left label '" + l.str() + "'");
    for (const auto& r : v)
        if (!aut.right.contains(r)) raise("UnknownLabel", "right label '" + r.str() + "'");

    Behaviour b;
    b.left_word = u;
    b.right_word = v;
    b.steps.push_back(x0);
    std::vector<Weight> x = x0;
    for (size_t i = 0; i < u.size(); ++i) {
        std::vector<Weight> y(aut.states.size(), Weight::zero());
        for (const auto& [k, w] : aut.table) {
            if (k.left != u[i] || k.right != v[i]) continue;
            const Weight& xi = x[aut.state_index(k.from)];
            if (!xi.is_zero()) y[aut.state_index(k.to)] += xi * w;
        }
        b.steps.push_back(y);
        x = std::move(y);
    }
    return b;
}

} // namespace mka
