#include "mka/name.hpp"

#include "mka/error.hpp"

namespace mka {

Name Name::atom(std::string s) {
    Name n;
    n.kind_ = Kind::Atom;
    n.atom_ = std::move(s);
    return n;
}

Name Name::tuple(std::vector<Name> parts) {
    std::vector<Name> flat;
    for (auto& p : parts) {
        if (p.is_unit()) continue;
        if (p.kind_ == Kind::Tuple) {
            for (auto& q : p.parts_) flat.push_back(std::move(q));
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) return unit();
    if (flat.size() == 1) return flat.front();
    Name n;
    n.kind_ = Kind::Tuple;
    n.atom_.clear();
    n.parts_ = std::move(flat);
    return n;
}

Name Name::tag(Side side, Name inner) {
    Name n;
    n.kind_ = Kind::Tag;
    n.atom_.clear();
    n.side_ = side;
    n.parts_.push_back(std::move(inner));
    return n;
}

int Name::compare(const Name& o) const {
    auto rank = [](Kind k) { return k == Kind::Atom ? 0 : k == Kind::Tuple ? 1 : 2; };
    if (rank(kind_) != rank(o.kind_)) return rank(kind_) < rank(o.kind_) ? -1 : 1;
    switch (kind_) {
    case Kind::Atom:
        return atom_.compare(o.atom_);
    case Kind::Tuple: {
        size_t n = std::min(parts_.size(), o.parts_.size());
        for (size_t i = 0; i < n; ++i)
            if (int c = parts_[i].compare(o.parts_[i])) return c;
        if (parts_.size() != o.parts_.size())
            return parts_.size() < o.parts_.size() ? -1 : 1;
        return 0;
    }
    case Kind::Tag:
        if (side_ != o.side_) return side_ == Side::L ? -1 : 1;
        return parts_.front().compare(o.parts_.front());
    }
    return 0;
}

std::string Name::str() const {
    switch (kind_) {
    case Kind::Atom:
        return atom_;
    case Kind::Tuple: {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += parts_[i].str();
        }
        return s + ")";
    }
    case Kind::Tag:
        return (side_ == Side::L ? "L:" : "R:") + parts_.front().str();
    }
    return {};
}

namespace {

Name parse_name(const std::string& s, size_t& i) {
    if (i >= s.size()) raise("SyntaxError", "unexpected end of name in '" + s + "'");
    if (s.compare(i, 2, "L:") == 0) {
        i += 2;
        return Name::tagL(parse_name(s, i));
    }
    if (s.compare(i, 2, "R:") == 0) {
        i += 2;
        return Name::tagR(parse_name(s, i));
    }
    if (s[i] == '(') {
        ++i;
        std::vector<Name> parts;
        if (i < s.size() && s[i] == ')') { ++i; return Name::tuple({}); }
        while (true) {
            parts.push_back(parse_name(s, i));
            if (i >= s.size()) raise("SyntaxError", "unterminated tuple in '" + s + "'");
            if (s[i] == ',') { ++i; continue; }
            if (s[i] == ')') { ++i; break; }
            raise("SyntaxError", "expected ',' or ')' in '" + s + "'");
        }
        return Name::tuple(std::move(parts));
    }
    size_t start = i;
    while (i < s.size() && s[i] != ',' && s[i] != '(' && s[i] != ')') ++i;
    if (start == i) raise("SyntaxError", "empty name component in '" + s + "'");
    return Name::atom(s.substr(start, i - start));
}

} // namespace

Name Name::parse(const std::string& text) {
    size_t i = 0;
    Name n = parse_name(text, i);
    if (i != text.size()) raise("SyntaxError", "trailing characters in name '" + text + "'");
    return n;
}

} // namespace mka
