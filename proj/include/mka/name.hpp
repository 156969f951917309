#pragma once

#include <string>
#include <vector>

namespace mka {

/// Structured symbol used for state names, interface points and labels:
/// an atom, a tuple of names, or a side-tagged name (disjoint sums).
///
/// Tuples are kept flat and canonical at construction: nested tuples are
/// spliced in, the reserved unit marker `*` (the state of a one-state wire)
/// is dropped, a singleton collapses to its element and the empty tuple is
/// the unit marker itself. This is what makes composite state names come out
/// as plain tuples like (1,3,2,1) no matter how the product was bracketed.
class Name {
public:
    enum class Kind { Atom, Tuple, Tag };
    enum class Side { L, R };

    Name() : kind_(Kind::Atom), atom_("*") {}

    static Name atom(std::string s);
    static Name unit() { return Name(); }
    static Name tuple(std::vector<Name> parts);
    static Name tag(Side side, Name inner);
    static Name tagL(Name inner) { return tag(Side::L, std::move(inner)); }
    static Name tagR(Name inner) { return tag(Side::R, std::move(inner)); }

    /// Parse the rendering back: atom, (a,b,...), L:name, R:name.
    static Name parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_unit() const { return kind_ == Kind::Atom && atom_ == "*"; }
    bool is_atom() const { return kind_ == Kind::Atom; }
    bool is_tuple() const { return kind_ == Kind::Tuple; }

    const std::string& atom_text() const { return atom_; }
    const std::vector<Name>& parts() const { return parts_; }
    Side side() const { return side_; }
    const Name& inner() const { return parts_.front(); }

    /// Total structural order: atoms < tuples < tagged, then contents.
    int compare(const Name& o) const;
    bool operator<(const Name& o) const { return compare(o) < 0; }
    bool operator==(const Name& o) const { return compare(o) == 0; }
    bool operator!=(const Name& o) const { return compare(o) != 0; }

    /// Rendering: atom text; "(a,b)"; "L:a".
    std::string str() const;

private:
    Kind kind_;
    std::string atom_;
    std::vector<Name> parts_; // tuple members, or the single tagged inner name
    Side side_ = Side::L;
};

} // namespace mka
