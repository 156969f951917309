#include "mka/gen.hpp"

#include "mka/error.hpp"

#include <string>

namespace mka {

int Rng::next(int bound) {
    if (bound <= 1) return 0;
    return static_cast<int>(g_() % static_cast<std::uint32_t>(bound));
}

Weight Rng::weight() { return Weight(1 + next(6), 1 + next(6)); }

Alphabet random_alphabet(Rng& rng, int max_labels, const std::string& stem) {
    Alphabet a;
    a.labels.push_back(Name::atom("eps"));
    a.epsilon = Name::atom("eps");
    int extra = rng.next(max_labels); // 0..max_labels-1
    for (int i = 0; i < extra; ++i)
        a.labels.push_back(Name::atom(stem + std::to_string(i + 1)));
    return a;
}

WeightedAutomaton random_positive_automaton_over(Rng& rng,
                                                 const Alphabet& left,
                                                 const Alphabet& right,
                                                 int max_states) {
    WeightedAutomaton aut;
    int n = 1 + rng.next(max_states);
    for (int i = 0; i < n; ++i)
        aut.states.push_back(Name::atom(std::to_string(i + 1)));
    aut.left = left;
    aut.right = right;

    Name eps = Name::atom("eps");
    for (const Name& s : aut.states) aut.add(s, eps, eps, s, rng.weight());

    int extras = rng.next(2 * n + 1);
    for (int i = 0; i < extras; ++i) {
        const Name& from = aut.states[static_cast<std::size_t>(rng.next(n))];
        const Name& to = aut.states[static_cast<std::size_t>(rng.next(n))];
        const Name& l = aut.left.labels[static_cast<std::size_t>(
            rng.next(static_cast<int>(aut.left.labels.size())))];
        const Name& r = aut.right.labels[static_cast<std::size_t>(
            rng.next(static_cast<int>(aut.right.labels.size())))];
        aut.add(from, l, r, to, rng.weight());
    }

    int tops = rng.next(3);
    for (int i = 0; i < tops; ++i)
        aut.top[Name::atom("x" + std::to_string(i + 1))] =
            aut.states[static_cast<std::size_t>(rng.next(n))];
    int bottoms = rng.next(3);
    for (int i = 0; i < bottoms; ++i)
        aut.bottom[Name::atom("y" + std::to_string(i + 1))] =
            aut.states[static_cast<std::size_t>(rng.next(n))];

    aut.validate();
    return aut;
}

WeightedAutomaton random_positive_automaton(Rng& rng, int max_states,
                                            int max_labels) {
    Alphabet left = random_alphabet(rng, max_labels, "a");
    Alphabet right = random_alphabet(rng, max_labels, "b");
    return random_positive_automaton_over(rng, left, right, max_states);
}

} // namespace mka
