#include "mka/dot.hpp"

#include "mka/error.hpp"

#include <sstream>

namespace mka {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_dot(const WeightedAutomaton& aut) {
    std::ostringstream os;
    os << "digraph automaton {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (const Name& s : aut.states) os << "  " << quoted(s.str()) << ";\n";
    for (const auto& [k, w] : aut.table)
        os << "  " << quoted(k.from.str()) << " -> " << quoted(k.to.str())
           << " [label=" << quoted(k.left.str() + "/" + k.right.str() + ";" +
                                   w.str())
           << "];\n";
    for (const auto& [pt, st] : aut.top) {
        std::string node = "top:" + pt.str();
        os << "  " << quoted(node) << " [shape=plaintext];\n";
        os << "  " << quoted(node) << " -> " << quoted(st.str())
           << " [style=dashed];\n";
    }
    for (const auto& [pt, st] : aut.bottom) {
        std::string node = "bottom:" + pt.str();
        os << "  " << quoted(node) << " [shape=plaintext];\n";
        os << "  " << quoted(st.str()) << " -> " << quoted(node)
           << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace mka
