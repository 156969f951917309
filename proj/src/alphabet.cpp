#include "mka/alphabet.hpp"

#include "mka/error.hpp"

#include <algorithm>
#include <set>

namespace mka {

bool Alphabet::contains(const Name& l) const {
    return std::find(labels.begin(), labels.end(), l) != labels.end();
}

int Alphabet::index_of(const Name& l) const {
    auto it = std::find(labels.begin(), labels.end(), l);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

Alphabet alphabet_unit() {
    Alphabet a;
    a.labels = {Name::atom("eps")};
    a.epsilon = Name::atom("eps");
    return a;
}

bool is_unit_alphabet(const Alphabet& a) {
    return a.labels.size() == 1 && a.epsilon && a.labels.front() == *a.epsilon;
}

Alphabet alphabet_product(const Alphabet& a, const Alphabet& b) {
    if (is_unit_alphabet(a)) return b;
    if (is_unit_alphabet(b)) return a;
    Alphabet out;
    out.labels.reserve(a.labels.size() * b.labels.size());
    for (const auto& x : a.labels)
        for (const auto& y : b.labels)
            out.labels.push_back(Name::tuple({x, y}));
    if (a.epsilon && b.epsilon) out.epsilon = Name::tuple({*a.epsilon, *b.epsilon});
    return out;
}

bool names_collide(const std::vector<Name>& a, const std::vector<Name>& b) {
    std::set<Name> seen(a.begin(), a.end());
    for (const auto& n : b)
        if (seen.count(n)) return true;
    return false;
}

Alphabet alphabet_sum(const Alphabet& a, const Alphabet& b) {
    if (a.labels.empty()) return b;
    if (b.labels.empty()) return a;
    Alphabet out;
    bool tagged = names_collide(a.labels, b.labels);
    for (const auto& x : a.labels) out.labels.push_back(tagged ? Name::tagL(x) : x);
    for (const auto& y : b.labels) out.labels.push_back(tagged ? Name::tagR(y) : y);
    return out;
}

Alphabet alphabet_power(const Alphabet& a, int k) {
    if (k < 1) raise("InvalidK", "alphabet power needs k >= 1");
    Alphabet out = a;
    for (int i = 1; i < k; ++i) out = alphabet_product(out, a);
    return out;
}

} // namespace mka
