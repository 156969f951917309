#include "mka/decompose.hpp"

#include "mka/error.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mka {

namespace {

// '#' cannot appear in parsed identifiers, so these names never collide with
// interface points of declared automata.
Name piece_name(const char* prefix, const std::string& suffix) {
    return Name::atom(std::string(prefix) + "#" + suffix);
}

SeqPoint top_point(Name n) { return SeqPoint{true, std::move(n)}; }
SeqPoint bottom_point(Name n) { return SeqPoint{false, std::move(n)}; }

} // namespace

ExprPtr elementary_decomposition(const WeightedAutomaton& aut) {
    if (aut.states.empty()) return Expression::make_literal(aut);

    // One two-state piece per transition, one pass-through per state. The
    // pass-throughs are what keep transition-free states alive through the
    // two gluing quotients.
    std::vector<ExprPtr> pieces;
    SeqRelation rho_top, rho_bot;

    std::size_t i = 0;
    std::vector<std::pair<TransKey, Name>> trans_from, trans_to;
    for (const auto& [key, w] : aut.table) {
        ++i;
        const std::string id = std::to_string(i);
        Name s = piece_name("s", id);
        Name t = piece_name("t", id);
        Name p = piece_name("p", id);
        Name q = piece_name("q", id);

        WeightedAutomaton piece;
        piece.left = aut.left;
        piece.right = aut.right;
        piece.states = sorted_states({s, t});
        piece.top[p] = s;
        piece.bottom[q] = t;
        piece.add(s, key.left, key.right, t, w);
        pieces.push_back(Expression::make_literal(std::move(piece)));

        rho_top.bottom.push_back(p);
        rho_bot.top.push_back(q);
        rho_top.pairs.emplace_back(
            bottom_point(p), bottom_point(piece_name("pu", key.from.str())));
        rho_bot.pairs.emplace_back(
            top_point(q), top_point(piece_name("qu", key.to.str())));
    }

    for (const Name& st : aut.states) {
        Name u = piece_name("u", st.str());
        Name pu = piece_name("pu", st.str());
        Name qu = piece_name("qu", st.str());

        WeightedAutomaton piece;
        piece.left = aut.left;
        piece.right = aut.right;
        piece.states = {u};
        piece.top[pu] = u;
        piece.bottom[qu] = u;
        pieces.push_back(Expression::make_literal(std::move(piece)));

        rho_top.bottom.push_back(pu);
        rho_bot.top.push_back(qu);
    }

    for (const auto& [pt, st] : aut.top) {
        rho_top.top.push_back(pt);
        rho_top.pairs.emplace_back(top_point(pt),
                                   bottom_point(piece_name("pu", st.str())));
    }
    for (const auto& [pt, st] : aut.bottom) {
        rho_bot.bottom.push_back(pt);
        rho_bot.pairs.emplace_back(bottom_point(pt),
                                   top_point(piece_name("qu", st.str())));
    }

    ExprPtr mid = pieces.front();
    for (std::size_t j = 1; j < pieces.size(); ++j)
        mid = Expression::binary(Expression::Op::LocalSum, std::move(mid),
                                 pieces[j]);

    return Expression::binary(
        Expression::Op::SeqCompose,
        Expression::binary(Expression::Op::SeqCompose,
                           Expression::make_seq_const(std::move(rho_top)),
                           std::move(mid)),
        Expression::make_seq_const(std::move(rho_bot)));
}

} // namespace mka
