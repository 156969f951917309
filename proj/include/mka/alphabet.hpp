#pragma once

#include "mka/name.hpp"

#include <optional>
#include <vector>

namespace mka {

/// Ordered set of labels with an optional distinguished idle label (epsilon).
/// Order matters: it fixes matrix layouts and serialization byte-exactly.
struct Alphabet {
    std::vector<Name> labels;
    std::optional<Name> epsilon;

    bool operator==(const Alphabet& o) const {
        if (labels.size() != o.labels.size()) return false;
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] != o.labels[i]) return false;
        if (epsilon.has_value() != o.epsilon.has_value()) return false;
        return !epsilon || *epsilon == *o.epsilon;
    }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

    bool contains(const Name& l) const;
    /// Index in `labels`, or -1.
    int index_of(const Name& l) const;
};

/// The one-label alphabet {eps} whose label is its epsilon.
Alphabet alphabet_unit();
bool is_unit_alphabet(const Alphabet& a);

/// Pairwise product, lexicographic (left factor slowest). Labels are
/// flattened tuples; the unit alphabet is absorbed on either side; the
/// epsilon is the pair of epsilons when both factors have one.
Alphabet alphabet_product(const Alphabet& a, const Alphabet& b);

/// Disjoint sum, left labels first. Members are tagged L:/R: only when the
/// two label sets actually collide; an empty side is absorbed. Sum alphabets
/// carry no epsilon (except through absorption of an empty side).
Alphabet alphabet_sum(const Alphabet& a, const Alphabet& b);

/// k-fold product (k >= 1); labels are k-tuples, epsilon the k-tuple of
/// epsilons when the base has one.
Alphabet alphabet_power(const Alphabet& a, int k);

/// Whether two name sets intersect — the tagging test shared by every
/// disjoint-sum construction (alphabets, state sets, interface domains).
bool names_collide(const std::vector<Name>& a, const std::vector<Name>& b);

} // namespace mka
