#include "mka/dsl.hpp"

#include "mka/error.hpp"

#include "mka/compare.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace mka {

// ---------------------------------------------------------------------------
// AlphaExpr / Expression factories and structural equality
// ---------------------------------------------------------------------------

AlphaExprPtr AlphaExpr::unit() {
    auto e = std::make_shared<AlphaExpr>();
    e->k = K::Unit;
    return e;
}

AlphaExprPtr AlphaExpr::ref(std::string n) {
    auto e = std::make_shared<AlphaExpr>();
    e->k = K::Ref;
    e->name = std::move(n);
    return e;
}

AlphaExprPtr AlphaExpr::product(AlphaExprPtr a, AlphaExprPtr b) {
    auto e = std::make_shared<AlphaExpr>();
    e->k = K::Product;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

AlphaExprPtr AlphaExpr::sum(AlphaExprPtr a, AlphaExprPtr b) {
    auto e = std::make_shared<AlphaExpr>();
    e->k = K::Sum;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

namespace {

bool alpha_ptr_equal(const AlphaExprPtr& a, const AlphaExprPtr& b) {
    if (!a || !b) return !a && !b;
    return alpha_equal(*a, *b);
}

bool expr_ptr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return expr_equal(*a, *b);
}

} // namespace

bool alpha_equal(const AlphaExpr& a, const AlphaExpr& b) {
    if (a.k != b.k) return false;
    switch (a.k) {
    case AlphaExpr::K::Unit: return true;
    case AlphaExpr::K::Ref: return a.name == b.name;
    case AlphaExpr::K::Product:
    case AlphaExpr::K::Sum:
        return alpha_ptr_equal(a.a, b.a) && alpha_ptr_equal(a.b, b.b);
    }
    return false;
}

ExprPtr Expression::make_ref(std::string name) {
    auto e = std::make_shared<Expression>();
    e->op = Op::Ref;
    e->ref = std::move(name);
    return e;
}

ExprPtr Expression::make_literal(WeightedAutomaton aut) {
    auto e = std::make_shared<Expression>();
    e->op = Op::Literal;
    e->literal = std::make_shared<const WeightedAutomaton>(std::move(aut));
    return e;
}

ExprPtr Expression::binary(Op op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expression>();
    e->op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr Expression::normalize(ExprPtr a) {
    auto e = std::make_shared<Expression>();
    e->op = Op::Normalize;
    e->a = std::move(a);
    return e;
}

ExprPtr Expression::power(int k, ExprPtr a) {
    auto e = std::make_shared<Expression>();
    e->op = Op::Power;
    e->k = k;
    e->a = std::move(a);
    return e;
}

ExprPtr Expression::make_sfb(std::vector<Name> zone, ExprPtr a) {
    auto e = std::make_shared<Expression>();
    e->op = Op::Sfb;
    e->zone = std::move(zone);
    e->a = std::move(a);
    return e;
}

ExprPtr Expression::make_pfb(AlphaExprPtr alpha, ExprPtr a) {
    auto e = std::make_shared<Expression>();
    e->op = Op::Pfb;
    e->alpha = std::move(alpha);
    e->a = std::move(a);
    return e;
}

ExprPtr Expression::make_seq_wire(SeqWireSpec spec) {
    auto e = std::make_shared<Expression>();
    e->op = Op::SeqWire;
    e->seq_wire = std::move(spec);
    return e;
}

ExprPtr Expression::make_par_wire(ParWireSpec spec) {
    auto e = std::make_shared<Expression>();
    e->op = Op::ParWire;
    e->par_wire = std::move(spec);
    return e;
}

ExprPtr Expression::make_seq_const(SeqRelation rel) {
    auto e = std::make_shared<Expression>();
    e->op = Op::SeqConst;
    e->seq_rel = std::make_shared<const SeqRelation>(std::move(rel));
    return e;
}

ExprPtr Expression::make_par_const(ParRelation rel) {
    auto e = std::make_shared<Expression>();
    e->op = Op::ParConst;
    e->par_rel = std::make_shared<const ParRelation>(std::move(rel));
    return e;
}

namespace {

bool seq_rel_equal(const SeqRelation& a, const SeqRelation& b) {
    if (a.top != b.top || a.bottom != b.bottom) return false;
    if (a.pairs.size() != b.pairs.size()) return false;
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        const auto& x = a.pairs[i];
        const auto& y = b.pairs[i];
        if (x.first.top != y.first.top || x.first.name != y.first.name ||
            x.second.top != y.second.top || x.second.name != y.second.name)
            return false;
    }
    return true;
}

bool par_rel_equal(const ParRelation& a, const ParRelation& b) {
    return a.left == b.left && a.right == b.right && a.pairs == b.pairs;
}

} // namespace

bool expr_equal(const Expression& a, const Expression& b) {
    if (a.op != b.op) return false;
    using Op = Expression::Op;
    switch (a.op) {
    case Op::Ref:
        return a.ref == b.ref;
    case Op::Literal:
        return structurally_equal(*a.literal, *b.literal);
    case Op::Boxplus:
    case Op::SeqCompose:
    case Op::LocalSum:
    case Op::LocalSeq:
    case Op::ParProduct:
    case Op::CommPar:
        return expr_ptr_equal(a.a, b.a) && expr_ptr_equal(a.b, b.b);
    case Op::Normalize:
        return expr_ptr_equal(a.a, b.a);
    case Op::Power:
        return a.k == b.k && expr_ptr_equal(a.a, b.a);
    case Op::Sfb:
        return a.zone == b.zone && expr_ptr_equal(a.a, b.a);
    case Op::Pfb:
        return alpha_ptr_equal(a.alpha, b.alpha) && expr_ptr_equal(a.a, b.a);
    case Op::SeqWire:
        return a.seq_wire.has_value() == b.seq_wire.has_value() &&
               (!a.seq_wire || (a.seq_wire->kind == b.seq_wire->kind &&
                                a.seq_wire->sets == b.seq_wire->sets));
    case Op::ParWire: {
        if (a.par_wire.has_value() != b.par_wire.has_value()) return false;
        if (!a.par_wire) return true;
        if (a.par_wire->kind != b.par_wire->kind) return false;
        if (a.par_wire->alphas.size() != b.par_wire->alphas.size()) return false;
        for (std::size_t i = 0; i < a.par_wire->alphas.size(); ++i)
            if (!alpha_ptr_equal(a.par_wire->alphas[i], b.par_wire->alphas[i]))
                return false;
        return true;
    }
    case Op::SeqConst:
        return seq_rel_equal(*a.seq_rel, *b.seq_rel);
    case Op::ParConst:
        return par_rel_equal(*a.par_rel, *b.par_rel);
    }
    return false;
}

bool model_equal(const ModelFile& a, const ModelFile& b) {
    if (a.decls.size() != b.decls.size()) return false;
    for (std::size_t i = 0; i < a.decls.size(); ++i) {
        const Decl& x = a.decls[i];
        const Decl& y = b.decls[i];
        if (x.k != y.k) return false;
        switch (x.k) {
        case Decl::K::Alphabet:
            if (x.alphabet.name != y.alphabet.name ||
                x.alphabet.labels != y.alphabet.labels)
                return false;
            break;
        case Decl::K::Automaton: {
            const AutomatonDecl& p = x.automaton;
            const AutomatonDecl& q = y.automaton;
            if (p.name != q.name) return false;
            if (!alpha_ptr_equal(p.left, q.left) ||
                !alpha_ptr_equal(p.right, q.right))
                return false;
            if (p.top_points != q.top_points || p.top_images != q.top_images)
                return false;
            if (p.bottom_points != q.bottom_points ||
                p.bottom_images != q.bottom_images)
                return false;
            if (p.states != q.states) return false;
            if (p.transitions.size() != q.transitions.size()) return false;
            for (std::size_t j = 0; j < p.transitions.size(); ++j) {
                const TransitionDecl& s = p.transitions[j];
                const TransitionDecl& t = q.transitions[j];
                if (s.from != t.from || s.left != t.left ||
                    s.right != t.right || s.to != t.to || s.weight != t.weight)
                    return false;
            }
            break;
        }
        case Decl::K::Let:
            if (x.let.name != y.let.name) return false;
            if (!expr_ptr_equal(x.let.expr, y.let.expr)) return false;
            break;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class T {
        Ident,      // [A-Za-z0-9_]+
        LBrace, RBrace, LParen, RParen, LBracket, RBracket,
        Comma, Semi, SemiSemi, Colon, Eq, Slash, Star, Plus, Dot,
        PipePipe,
        Arrow,      // ->
        TransOpen,  // -[
        TransClose, // ]->
        End
    };
    T t = T::End;
    std::string text;
    int line = 0;
    int col = 0;
};

[[noreturn]] void lex_fail(int line, int col, const std::string& msg) {
    raise("SyntaxError",
          std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            tok.t = Token::T::Ident;
            tok.text = src.substr(i, j - i);
            advance(j - i);
            out.push_back(std::move(tok));
            continue;
        }
        auto two = [&](char a, char b) {
            return src[i] == a && i + 1 < src.size() && src[i + 1] == b;
        };
        if (two('-', '[')) { tok.t = Token::T::TransOpen; advance(2); }
        else if (two('-', '>')) { tok.t = Token::T::Arrow; advance(2); }
        else if (two(']', '-')) {
            if (i + 2 >= src.size() || src[i + 2] != '>')
                lex_fail(line, col, "expected ']->'");
            tok.t = Token::T::TransClose;
            advance(3);
        }
        else if (two(';', ';')) { tok.t = Token::T::SemiSemi; advance(2); }
        else if (two('|', '|')) { tok.t = Token::T::PipePipe; advance(2); }
        else {
            switch (c) {
            case '{': tok.t = Token::T::LBrace; break;
            case '}': tok.t = Token::T::RBrace; break;
            case '(': tok.t = Token::T::LParen; break;
            case ')': tok.t = Token::T::RParen; break;
            case '[': tok.t = Token::T::LBracket; break;
            case ']': tok.t = Token::T::RBracket; break;
            case ',': tok.t = Token::T::Comma; break;
            case ';': tok.t = Token::T::Semi; break;
            case ':': tok.t = Token::T::Colon; break;
            case '=': tok.t = Token::T::Eq; break;
            case '/': tok.t = Token::T::Slash; break;
            case '*': tok.t = Token::T::Star; break;
            case '+': tok.t = Token::T::Plus; break;
            case '.': tok.t = Token::T::Dot; break;
            default:
                lex_fail(line, col,
                         std::string("unexpected character '") + c + "'");
            }
            advance(1);
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.t = Token::T::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

const char* token_name(Token::T t) {
    switch (t) {
    case Token::T::Ident: return "identifier";
    case Token::T::LBrace: return "'{'";
    case Token::T::RBrace: return "'}'";
    case Token::T::LParen: return "'('";
    case Token::T::RParen: return "')'";
    case Token::T::LBracket: return "'['";
    case Token::T::RBracket: return "']'";
    case Token::T::Comma: return "','";
    case Token::T::Semi: return "';'";
    case Token::T::SemiSemi: return "';;'";
    case Token::T::Colon: return "':'";
    case Token::T::Eq: return "'='";
    case Token::T::Slash: return "'/'";
    case Token::T::Star: return "'*'";
    case Token::T::Plus: return "'+'";
    case Token::T::Dot: return "'.'";
    case Token::T::PipePipe: return "'||'";
    case Token::T::Arrow: return "'->'";
    case Token::T::TransOpen: return "'-['";
    case Token::T::TransClose: return "']->'";
    case Token::T::End: return "end of input";
    }
    return "?";
}

bool reserved_name(const std::string& s) {
    static const std::set<std::string> kw = {
        "alphabet", "automaton", "let", "left", "right", "top", "bottom",
        "states", "unit", "norm", "pow", "sfb", "pfb", "seqwire", "parwire",
        "oplus", "x"};
    return kw.count(s) > 0;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    std::map<std::string, Alphabet> alphabets; // evaluated, for validation
    std::set<std::string> value_names;         // automata + lets
    ModelFile model;

    const Token& cur() const { return toks[pos]; }
    Token take() { return toks[pos++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        raise("SyntaxError", std::to_string(t.line) + ":" +
                                 std::to_string(t.col) + ": " + msg);
    }

    [[noreturn]] void fail_code(const std::string& code, const Token& t,
                                const std::string& msg) const {
        raise(code, std::to_string(t.line) + ":" + std::to_string(t.col) +
                        ": " + msg);
    }

    Token expect(Token::T t, const std::string& what) {
        if (cur().t != t)
            fail(cur(), "expected " + what + ", found " +
                            (cur().t == Token::T::Ident
                                 ? "'" + cur().text + "'"
                                 : token_name(cur().t)));
        return take();
    }

    bool accept(Token::T t) {
        if (cur().t == t) { ++pos; return true; }
        return false;
    }

    bool at_ident(const char* word) const {
        return cur().t == Token::T::Ident && cur().text == word;
    }

    std::string expect_ident(const std::string& what) {
        return expect(Token::T::Ident, what).text;
    }

    // --- alphabet expressions ----------------------------------------------

    AlphaExprPtr parse_alpha_atom() {
        if (cur().t == Token::T::LParen) {
            take();
            AlphaExprPtr e = parse_alpha();
            expect(Token::T::RParen, "')'");
            return e;
        }
        Token t = expect(Token::T::Ident, "alphabet name");
        if (t.text == "unit") return AlphaExpr::unit();
        if (!alphabets.count(t.text))
            fail_code("UnknownReference", t, "unknown alphabet '" + t.text + "'");
        return AlphaExpr::ref(t.text);
    }

    AlphaExprPtr parse_alpha() {
        AlphaExprPtr e = parse_alpha_atom();
        bool have_op = false;
        Token::T op = Token::T::End;
        while (cur().t == Token::T::Star || cur().t == Token::T::Plus) {
            Token t = take();
            if (have_op && t.t != op)
                fail_code("AmbiguousExpression", t,
                          "mixed '*' and '+' need parentheses");
            have_op = true;
            op = t.t;
            AlphaExprPtr rhs = parse_alpha_atom();
            e = (op == Token::T::Star) ? AlphaExpr::product(e, rhs)
                                       : AlphaExpr::sum(e, rhs);
        }
        return e;
    }

    Alphabet eval_alpha_now(const AlphaExprPtr& e) {
        EvalEnv env;
        env.alphabets = alphabets;
        return eval_alpha(*e, env);
    }

    // --- names (labels) ------------------------------------------------------

    Name parse_label() {
        if (cur().t == Token::T::LParen) {
            take();
            std::vector<Name> parts;
            parts.push_back(parse_label());
            while (accept(Token::T::Comma)) parts.push_back(parse_label());
            expect(Token::T::RParen, "')'");
            return Name::tuple(parts);
        }
        Token t = expect(Token::T::Ident, "label");
        if ((t.text == "L" || t.text == "R") && cur().t == Token::T::Colon) {
            take();
            Name inner = parse_label();
            return t.text == "L" ? Name::tagL(inner) : Name::tagR(inner);
        }
        return Name::atom(t.text);
    }

    // --- weights ---------------------------------------------------------------

    Weight parse_weight() {
        Token t = expect(Token::T::Ident, "weight");
        auto digits = [](const std::string& s) {
            if (s.empty()) return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        if (!digits(t.text))
            fail_code("InvalidWeight", t,
                      "weight must be a positive integer or fraction");
        std::string text = t.text;
        if (accept(Token::T::Slash)) {
            Token d = expect(Token::T::Ident, "denominator");
            if (!digits(d.text))
                fail_code("InvalidWeight", d,
                          "denominator must be a positive integer");
            text += "/" + d.text;
        }
        Weight w = Weight::parse(text);
        if (w.is_zero())
            fail_code("InvalidWeight", t, "transition weight must be positive");
        return w;
    }

    // --- point sets -------------------------------------------------------------

    std::vector<Name> parse_point_set() {
        expect(Token::T::LBrace, "'{'");
        std::vector<Name> out;
        if (cur().t != Token::T::RBrace) {
            out.push_back(Name::atom(expect_ident("point name")));
            while (accept(Token::T::Comma))
                out.push_back(Name::atom(expect_ident("point name")));
        }
        expect(Token::T::RBrace, "'}'");
        return out;
    }

    // --- declarations -------------------------------------------------------------

    void check_fresh_value_name(const Token& t) {
        if (reserved_name(t.text))
            fail(t, "'" + t.text + "' is a reserved word");
        if (value_names.count(t.text))
            fail_code("DuplicateName", t,
                      "'" + t.text + "' is already defined");
    }

    void parse_alphabet_decl() {
        Token name = expect(Token::T::Ident, "alphabet name");
        if (reserved_name(name.text))
            fail(name, "'" + name.text + "' is a reserved word");
        if (alphabets.count(name.text))
            fail_code("DuplicateName", name,
                      "alphabet '" + name.text + "' is already defined");
        expect(Token::T::Eq, "'='");
        expect(Token::T::LBrace, "'{'");
        AlphabetDecl decl;
        decl.name = name.text;
        if (cur().t != Token::T::RBrace) {
            decl.labels.push_back(Name::atom(expect_ident("label")));
            while (accept(Token::T::Comma))
                decl.labels.push_back(Name::atom(expect_ident("label")));
        }
        expect(Token::T::RBrace, "'}'");
        std::set<Name> seen(decl.labels.begin(), decl.labels.end());
        if (seen.size() != decl.labels.size())
            fail_code("DuplicateName", name,
                      "duplicate label in alphabet '" + name.text + "'");
        Alphabet a;
        a.labels = decl.labels;
        Name eps = Name::atom("eps");
        if (seen.count(eps)) a.epsilon = eps;
        alphabets[decl.name] = std::move(a);
        Decl d;
        d.k = Decl::K::Alphabet;
        d.alphabet = std::move(decl);
        model.decls.push_back(std::move(d));
    }

    void parse_automaton_decl() {
        Token name = expect(Token::T::Ident, "automaton name");
        check_fresh_value_name(name);
        expect(Token::T::LBrace, "'{'");

        AutomatonDecl decl;
        decl.name = name.text;

        if (!at_ident("left")) fail(cur(), "expected 'left'");
        take();
        decl.left = parse_alpha();
        expect(Token::T::Semi, "';'");

        if (!at_ident("right")) fail(cur(), "expected 'right'");
        take();
        decl.right = parse_alpha();
        expect(Token::T::Semi, "';'");

        Alphabet left = eval_alpha_now(decl.left);
        Alphabet right = eval_alpha_now(decl.right);

        Token topt = cur();
        if (!at_ident("top")) fail(topt, "expected 'top'");
        take();
        std::vector<Name> top_points = parse_point_set();
        expect(Token::T::Arrow, "'->'");
        std::vector<Name> top_images = parse_point_set();
        expect(Token::T::Semi, "';'");

        Token bott = cur();
        if (!at_ident("bottom")) fail(bott, "expected 'bottom'");
        take();
        std::vector<Name> bottom_points = parse_point_set();
        expect(Token::T::Arrow, "'->'");
        std::vector<Name> bottom_images = parse_point_set();
        expect(Token::T::Semi, "';'");

        Token st = cur();
        if (!at_ident("states")) fail(st, "expected 'states'");
        take();
        while (cur().t == Token::T::Ident)
            decl.states.push_back(Name::atom(take().text));
        expect(Token::T::Semi, "';'");
        std::set<Name> state_set(decl.states.begin(), decl.states.end());
        if (state_set.size() != decl.states.size())
            fail_code("DuplicateName", st,
                      "duplicate state in '" + name.text + "'");

        auto bind_interface = [&](const char* kw, const Token& at,
                                  std::vector<Name> pts, std::vector<Name> imgs,
                                  std::vector<Name>& out_pts,
                                  std::vector<Name>& out_imgs) {
            if (pts.size() != imgs.size())
                fail(at, std::string(kw) + " mapping has " +
                             std::to_string(pts.size()) + " points but " +
                             std::to_string(imgs.size()) + " images");
            std::set<Name> uniq(pts.begin(), pts.end());
            if (uniq.size() != pts.size())
                fail_code("DuplicateName", at,
                          std::string("duplicate point in ") + kw + " mapping");
            for (const Name& img : imgs)
                if (!state_set.count(img))
                    fail_code("UnknownState", at,
                              std::string(kw) + " image '" + img.str() +
                                  "' is not a state");
            out_pts = std::move(pts);
            out_imgs = std::move(imgs);
        };
        bind_interface("top", topt, std::move(top_points),
                       std::move(top_images), decl.top_points, decl.top_images);
        bind_interface("bottom", bott, std::move(bottom_points),
                       std::move(bottom_images), decl.bottom_points,
                       decl.bottom_images);

        while (cur().t != Token::T::RBrace) {
            Token from = expect(Token::T::Ident, "state or '}'");
            TransitionDecl tr;
            tr.from = Name::atom(from.text);
            expect(Token::T::TransOpen, "'-['");
            Token lab = cur();
            tr.left = parse_label();
            expect(Token::T::Slash, "'/'");
            Token rab = cur();
            tr.right = parse_label();
            expect(Token::T::TransClose, "']->'");
            Token to = expect(Token::T::Ident, "target state");
            tr.to = Name::atom(to.text);
            expect(Token::T::Colon, "':'");
            tr.weight = parse_weight();
            expect(Token::T::Semi, "';'");
            if (!state_set.count(tr.from))
                fail_code("UnknownState", from,
                          "unknown state '" + from.text + "'");
            if (!state_set.count(tr.to))
                fail_code("UnknownState", to, "unknown state '" + to.text + "'");
            if (!left.contains(tr.left))
                fail_code("UnknownLabel", lab,
                          "label '" + tr.left.str() +
                              "' is not in the left alphabet");
            if (!right.contains(tr.right))
                fail_code("UnknownLabel", rab,
                          "label '" + tr.right.str() +
                              "' is not in the right alphabet");
            decl.transitions.push_back(std::move(tr));
        }
        expect(Token::T::RBrace, "'}'");

        value_names.insert(decl.name);
        Decl d;
        d.k = Decl::K::Automaton;
        d.automaton = std::move(decl);
        model.decls.push_back(std::move(d));
    }

    // --- expressions -----------------------------------------------------------------

    std::size_t seq_wire_arity(const std::string& kind, const Token& at) {
        if (kind == "identity" || kind == "codiag" || kind == "codiagop" ||
            kind == "initial" || kind == "initialop")
            return 1;
        if (kind == "twist") return 2;
        if (kind == "delta" || kind == "deltainv") return 3;
        fail(at, "unknown seqwire kind '" + kind + "'");
    }

    std::size_t par_wire_arity(const std::string& kind, const Token& at) {
        if (kind == "identity" || kind == "diag" || kind == "diagop" ||
            kind == "proj" || kind == "projop" || kind == "codiag" ||
            kind == "codiagop")
            return 1;
        if (kind == "twist") return 2;
        fail(at, "unknown parwire kind '" + kind + "'");
    }

    ExprPtr parse_expr_atom() {
        if (cur().t == Token::T::LParen) {
            take();
            ExprPtr e = parse_expr();
            expect(Token::T::RParen, "')'");
            return e;
        }
        Token t = expect(Token::T::Ident, "expression");
        if (t.text == "norm") {
            expect(Token::T::LParen, "'('");
            ExprPtr a = parse_expr();
            expect(Token::T::RParen, "')'");
            return Expression::normalize(std::move(a));
        }
        if (t.text == "pow") {
            expect(Token::T::LBracket, "'['");
            Token kt = expect(Token::T::Ident, "step count");
            long k = 0;
            for (char c : kt.text) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail(kt, "step count must be a positive integer");
                k = k * 10 + (c - '0');
                if (k > 1000000) fail(kt, "step count too large");
            }
            if (k < 1)
                fail_code("InvalidK", kt, "step count must be at least 1");
            expect(Token::T::RBracket, "']'");
            expect(Token::T::LParen, "'('");
            ExprPtr a = parse_expr();
            expect(Token::T::RParen, "')'");
            return Expression::power(static_cast<int>(k), std::move(a));
        }
        if (t.text == "sfb") {
            expect(Token::T::LBracket, "'['");
            std::vector<Name> zone = parse_point_set();
            expect(Token::T::RBracket, "']'");
            expect(Token::T::LParen, "'('");
            ExprPtr a = parse_expr();
            expect(Token::T::RParen, "')'");
            return Expression::make_sfb(std::move(zone), std::move(a));
        }
        if (t.text == "pfb") {
            expect(Token::T::LBracket, "'['");
            AlphaExprPtr alpha = parse_alpha();
            expect(Token::T::RBracket, "']'");
            expect(Token::T::LParen, "'('");
            ExprPtr a = parse_expr();
            expect(Token::T::RParen, "')'");
            return Expression::make_pfb(std::move(alpha), std::move(a));
        }
        if (t.text == "seqwire") {
            expect(Token::T::LBracket, "'['");
            Token kt = expect(Token::T::Ident, "wire kind");
            SeqWireSpec spec;
            spec.kind = kt.text;
            std::size_t want = seq_wire_arity(kt.text, kt);
            if (want > 0) {
                expect(Token::T::Semi, "';'");
                spec.sets.push_back(parse_point_set());
                while (accept(Token::T::Comma))
                    spec.sets.push_back(parse_point_set());
            }
            if (spec.sets.size() != want)
                fail(kt, "seqwire '" + kt.text + "' takes " +
                             std::to_string(want) + " point set(s), got " +
                             std::to_string(spec.sets.size()));
            expect(Token::T::RBracket, "']'");
            return Expression::make_seq_wire(std::move(spec));
        }
        if (t.text == "parwire") {
            expect(Token::T::LBracket, "'['");
            Token kt = expect(Token::T::Ident, "wire kind");
            ParWireSpec spec;
            spec.kind = kt.text;
            std::size_t want = par_wire_arity(kt.text, kt);
            if (want > 0) {
                expect(Token::T::Semi, "';'");
                spec.alphas.push_back(parse_alpha());
                while (accept(Token::T::Comma))
                    spec.alphas.push_back(parse_alpha());
            }
            if (spec.alphas.size() != want)
                fail(kt, "parwire '" + kt.text + "' takes " +
                             std::to_string(want) + " alphabet(s), got " +
                             std::to_string(spec.alphas.size()));
            expect(Token::T::RBracket, "']'");
            return Expression::make_par_wire(std::move(spec));
        }
        if (reserved_name(t.text))
            fail(t, "'" + t.text + "' is a reserved word");
        if (!value_names.count(t.text))
            fail_code("UnknownReference", t,
                      "unknown automaton '" + t.text + "'");
        return Expression::make_ref(t.text);
    }

    bool peek_binop(Expression::Op& out) {
        switch (cur().t) {
        case Token::T::SemiSemi: out = Expression::Op::SeqCompose; return true;
        case Token::T::Plus: out = Expression::Op::LocalSum; return true;
        case Token::T::Dot: out = Expression::Op::LocalSeq; return true;
        case Token::T::PipePipe: out = Expression::Op::CommPar; return true;
        case Token::T::Ident:
            if (cur().text == "x") { out = Expression::Op::ParProduct; return true; }
            if (cur().text == "oplus") { out = Expression::Op::Boxplus; return true; }
            return false;
        default:
            return false;
        }
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_expr_atom();
        Expression::Op op{};
        bool have_op = false;
        Expression::Op chain_op{};
        while (peek_binop(op)) {
            Token t = take();
            if (have_op && op != chain_op)
                fail_code("AmbiguousExpression", t,
                          "mixed operators need parentheses");
            have_op = true;
            chain_op = op;
            ExprPtr rhs = parse_expr_atom();
            e = Expression::binary(chain_op, std::move(e), std::move(rhs));
        }
        return e;
    }

    void parse_let_decl() {
        Token name = expect(Token::T::Ident, "name");
        check_fresh_value_name(name);
        expect(Token::T::Eq, "'='");
        LetDecl decl;
        decl.name = name.text;
        decl.expr = parse_expr();
        value_names.insert(decl.name);
        Decl d;
        d.k = Decl::K::Let;
        d.let = std::move(decl);
        model.decls.push_back(std::move(d));
    }

    ModelFile parse() {
        while (cur().t != Token::T::End) {
            Token t = expect(Token::T::Ident, "'alphabet', 'automaton' or 'let'");
            if (t.text == "alphabet") parse_alphabet_decl();
            else if (t.text == "automaton") parse_automaton_decl();
            else if (t.text == "let") parse_let_decl();
            else fail(t, "expected 'alphabet', 'automaton' or 'let'");
        }
        return std::move(model);
    }
};

} // namespace

ModelFile parse_model(const std::string& source) {
    Parser p;
    p.toks = lex(source);
    return p.parse();
}

// ---------------------------------------------------------------------------
// Pretty printer (canonical formatting)
// ---------------------------------------------------------------------------

namespace {

bool alpha_is_binary(const AlphaExpr& e) {
    return e.k == AlphaExpr::K::Product || e.k == AlphaExpr::K::Sum;
}

std::string print_alpha(const AlphaExpr& e) {
    switch (e.k) {
    case AlphaExpr::K::Unit: return "unit";
    case AlphaExpr::K::Ref: return e.name;
    case AlphaExpr::K::Product:
    case AlphaExpr::K::Sum: {
        const char* op = e.k == AlphaExpr::K::Product ? " * " : " + ";
        std::string l = print_alpha(*e.a);
        if (alpha_is_binary(*e.a) && e.a->k != e.k) l = "(" + l + ")";
        std::string r = print_alpha(*e.b);
        if (alpha_is_binary(*e.b)) r = "(" + r + ")";
        return l + op + r;
    }
    }
    return "?";
}

std::string print_point_set(const std::vector<Name>& pts) {
    if (pts.empty()) return "{ }";
    std::string out = "{ ";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ", ";
        out += pts[i].str();
    }
    return out + " }";
}

bool expr_is_binary(const Expression& e) {
    using Op = Expression::Op;
    switch (e.op) {
    case Op::Boxplus:
    case Op::SeqCompose:
    case Op::LocalSum:
    case Op::LocalSeq:
    case Op::ParProduct:
    case Op::CommPar:
        return true;
    default:
        return false;
    }
}

const char* binop_text(Expression::Op op) {
    using Op = Expression::Op;
    switch (op) {
    case Op::Boxplus: return " oplus ";
    case Op::SeqCompose: return " ;; ";
    case Op::LocalSum: return " + ";
    case Op::LocalSeq: return " . ";
    case Op::ParProduct: return " x ";
    case Op::CommPar: return " || ";
    default: return "?";
    }
}

std::string print_expr(const Expression& e) {
    using Op = Expression::Op;
    switch (e.op) {
    case Op::Ref:
        return e.ref;
    case Op::Literal:
    case Op::SeqConst:
    case Op::ParConst:
        raise("SyntaxError", "expression has no concrete syntax");
    case Op::Boxplus:
    case Op::SeqCompose:
    case Op::LocalSum:
    case Op::LocalSeq:
    case Op::ParProduct:
    case Op::CommPar: {
        std::string l = print_expr(*e.a);
        if (expr_is_binary(*e.a) && e.a->op != e.op) l = "(" + l + ")";
        std::string r = print_expr(*e.b);
        if (expr_is_binary(*e.b)) r = "(" + r + ")";
        return l + binop_text(e.op) + r;
    }
    case Op::Normalize:
        return "norm(" + print_expr(*e.a) + ")";
    case Op::Power:
        return "pow[" + std::to_string(e.k) + "](" + print_expr(*e.a) + ")";
    case Op::Sfb:
        return "sfb[" + print_point_set(e.zone) + "](" + print_expr(*e.a) + ")";
    case Op::Pfb:
        return "pfb[" + print_alpha(*e.alpha) + "](" + print_expr(*e.a) + ")";
    case Op::SeqWire: {
        std::string out = "seqwire[" + e.seq_wire->kind;
        for (std::size_t i = 0; i < e.seq_wire->sets.size(); ++i)
            out += (i ? ", " : "; ") + print_point_set(e.seq_wire->sets[i]);
        return out + "]";
    }
    case Op::ParWire: {
        std::string out = "parwire[" + e.par_wire->kind;
        for (std::size_t i = 0; i < e.par_wire->alphas.size(); ++i)
            out += (i ? ", " : "; ") + print_alpha(*e.par_wire->alphas[i]);
        return out + "]";
    }
    }
    return "?";
}

} // namespace

std::string pretty_print(const ModelFile& file) {
    std::ostringstream os;
    bool first = true;
    for (const Decl& d : file.decls) {
        if (!first) os << "\n";
        first = false;
        switch (d.k) {
        case Decl::K::Alphabet: {
            os << "alphabet " << d.alphabet.name << " = "
               << print_point_set(d.alphabet.labels) << "\n";
            break;
        }
        case Decl::K::Automaton: {
            const AutomatonDecl& a = d.automaton;
            os << "automaton " << a.name << " {\n";
            os << "  left " << print_alpha(*a.left) << ";\n";
            os << "  right " << print_alpha(*a.right) << ";\n";
            os << "  top " << print_point_set(a.top_points) << " -> "
               << print_point_set(a.top_images) << ";\n";
            os << "  bottom " << print_point_set(a.bottom_points) << " -> "
               << print_point_set(a.bottom_images) << ";\n";
            os << "  states";
            for (const Name& s : a.states) os << " " << s.str();
            os << ";\n";
            for (const TransitionDecl& t : a.transitions)
                os << "  " << t.from.str() << " -[ " << t.left.str() << " / "
                   << t.right.str() << " ]-> " << t.to.str() << " : "
                   << t.weight.str() << ";\n";
            os << "}\n";
            break;
        }
        case Decl::K::Let:
            os << "let " << d.let.name << " = " << print_expr(*d.let.expr)
               << "\n";
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Alphabet eval_alpha(const AlphaExpr& e, const EvalEnv& env) {
    switch (e.k) {
    case AlphaExpr::K::Unit:
        return alphabet_unit();
    case AlphaExpr::K::Ref: {
        auto it = env.alphabets.find(e.name);
        if (it == env.alphabets.end())
            raise("UnknownReference", "unknown alphabet '" + e.name + "'");
        return it->second;
    }
    case AlphaExpr::K::Product:
        return alphabet_product(eval_alpha(*e.a, env), eval_alpha(*e.b, env));
    case AlphaExpr::K::Sum:
        return alphabet_sum(eval_alpha(*e.a, env), eval_alpha(*e.b, env));
    }
    raise("SyntaxError", "corrupt alphabet expression");
}

namespace {

const char* op_label(Expression::Op op) {
    using Op = Expression::Op;
    switch (op) {
    case Op::Ref: return "ref";
    case Op::Literal: return "literal";
    case Op::Boxplus: return "oplus";
    case Op::SeqCompose: return "seq";
    case Op::LocalSum: return "localsum";
    case Op::LocalSeq: return "localseq";
    case Op::ParProduct: return "product";
    case Op::CommPar: return "par";
    case Op::Normalize: return "norm";
    case Op::Power: return "pow";
    case Op::Sfb: return "sfb";
    case Op::Pfb: return "pfb";
    case Op::SeqWire: return "seqwire";
    case Op::ParWire: return "parwire";
    case Op::SeqConst: return "seqconst";
    case Op::ParConst: return "parconst";
    }
    return "?";
}

} // namespace

WeightedAutomaton eval_expression(const Expression& e, const EvalEnv& env,
                                  const std::string& path) {
    using Op = Expression::Op;
    std::string loc =
        path.empty() ? std::string(op_label(e.op)) : path + "/" + op_label(e.op);
    auto guard = [&loc](auto&& fn) -> WeightedAutomaton {
        try {
            return fn();
        } catch (const Error& err) {
            raise(err.code(), "at " + loc + ": " + err.message());
        }
    };
    switch (e.op) {
    case Op::Ref: {
        auto it = env.automata.find(e.ref);
        if (it == env.automata.end())
            raise("UnknownReference",
                  "at " + loc + ": unknown automaton '" + e.ref + "'");
        return it->second;
    }
    case Op::Literal:
        return *e.literal;
    case Op::Boxplus:
    case Op::SeqCompose:
    case Op::LocalSum:
    case Op::LocalSeq:
    case Op::ParProduct:
    case Op::CommPar: {
        WeightedAutomaton l = eval_expression(*e.a, env, loc + "[1]");
        WeightedAutomaton r = eval_expression(*e.b, env, loc + "[2]");
        return guard([&]() -> WeightedAutomaton {
            switch (e.op) {
            case Op::Boxplus: return boxplus_sum(l, r);
            case Op::SeqCompose: return seq_compose(l, r);
            case Op::LocalSum: return local_sum(l, r);
            case Op::LocalSeq: return local_seq(l, r);
            case Op::ParProduct: return parallel_product(l, r);
            default: return communicating_parallel(l, r);
            }
        });
    }
    case Op::Normalize: {
        WeightedAutomaton a = eval_expression(*e.a, env, loc);
        return guard([&] { return normalize(a); });
    }
    case Op::Power: {
        WeightedAutomaton a = eval_expression(*e.a, env, loc);
        return guard([&] { return k_step_automaton(a, e.k); });
    }
    case Op::Sfb: {
        WeightedAutomaton a = eval_expression(*e.a, env, loc);
        return guard([&] { return sfb(a, e.zone); });
    }
    case Op::Pfb: {
        WeightedAutomaton a = eval_expression(*e.a, env, loc);
        return guard([&] { return pfb(a, eval_alpha(*e.alpha, env)); });
    }
    case Op::SeqWire: {
        const SeqWireSpec& s = *e.seq_wire;
        return guard([&]() -> WeightedAutomaton {
            if (s.kind == "identity") return seq_wire_identity(s.sets.at(0));
            if (s.kind == "codiag") return seq_wire_codiag(s.sets.at(0));
            if (s.kind == "codiagop") return seq_wire_codiag_op(s.sets.at(0));
            if (s.kind == "initial") return seq_wire_initial(s.sets.at(0));
            if (s.kind == "initialop") return seq_wire_initial_op(s.sets.at(0));
            if (s.kind == "twist")
                return seq_wire_twist(s.sets.at(0), s.sets.at(1));
            if (s.kind == "delta")
                return seq_wire_delta(s.sets.at(0), s.sets.at(1), s.sets.at(2));
            if (s.kind == "deltainv")
                return seq_wire_delta_inv(s.sets.at(0), s.sets.at(1),
                                          s.sets.at(2));
            raise("SyntaxError", "unknown seqwire kind '" + s.kind + "'");
        });
    }
    case Op::ParWire: {
        const ParWireSpec& s = *e.par_wire;
        return guard([&]() -> WeightedAutomaton {
            auto alpha = [&](std::size_t i) {
                return eval_alpha(*s.alphas.at(i), env);
            };
            if (s.kind == "identity") return par_wire_identity(alpha(0));
            if (s.kind == "diag") return par_wire_diag(alpha(0));
            if (s.kind == "diagop") return par_wire_diag_op(alpha(0));
            if (s.kind == "proj") return par_wire_proj(alpha(0));
            if (s.kind == "projop") return par_wire_proj_op(alpha(0));
            if (s.kind == "twist") return par_wire_twist(alpha(0), alpha(1));
            if (s.kind == "codiag") return par_wire_codiag(alpha(0));
            if (s.kind == "codiagop") return par_wire_codiag_op(alpha(0));
            raise("SyntaxError", "unknown parwire kind '" + s.kind + "'");
        });
    }
    case Op::SeqConst:
        return guard([&] { return seq_constant(*e.seq_rel); });
    case Op::ParConst:
        return guard([&] { return par_constant(*e.par_rel); });
    }
    raise("SyntaxError", "corrupt expression");
}

namespace {

WeightedAutomaton build_declared_automaton(const AutomatonDecl& d,
                                           const EvalEnv& env) {
    WeightedAutomaton aut;
    aut.left = eval_alpha(*d.left, env);
    aut.right = eval_alpha(*d.right, env);
    aut.states = d.states;
    std::sort(aut.states.begin(), aut.states.end());
    for (std::size_t i = 0; i < d.top_points.size(); ++i)
        aut.top[d.top_points[i]] = d.top_images[i];
    for (std::size_t i = 0; i < d.bottom_points.size(); ++i)
        aut.bottom[d.bottom_points[i]] = d.bottom_images[i];
    for (const TransitionDecl& t : d.transitions)
        aut.add(t.from, t.left, t.right, t.to, t.weight);
    aut.validate();
    return aut;
}

} // namespace

EvalEnv eval_model(const ModelFile& file) {
    EvalEnv env;
    for (const Decl& d : file.decls) {
        switch (d.k) {
        case Decl::K::Alphabet: {
            if (env.alphabets.count(d.alphabet.name))
                raise("DuplicateName",
                      "alphabet '" + d.alphabet.name + "' is already defined");
            Alphabet a;
            a.labels = d.alphabet.labels;
            Name eps = Name::atom("eps");
            for (const Name& l : a.labels)
                if (l == eps) a.epsilon = eps;
            env.alphabets[d.alphabet.name] = std::move(a);
            break;
        }
        case Decl::K::Automaton: {
            if (env.automata.count(d.automaton.name))
                raise("DuplicateName",
                      "'" + d.automaton.name + "' is already defined");
            env.automata[d.automaton.name] =
                build_declared_automaton(d.automaton, env);
            break;
        }
        case Decl::K::Let: {
            if (env.automata.count(d.let.name))
                raise("DuplicateName",
                      "'" + d.let.name + "' is already defined");
            env.automata[d.let.name] =
                eval_expression(*d.let.expr, env, d.let.name);
            break;
        }
        }
    }
    return env;
}

WeightedAutomaton eval_model_name(const ModelFile& file,
                                  const std::string& name) {
    EvalEnv env = eval_model(file);
    auto it = env.automata.find(name);
    if (it == env.automata.end())
        raise("UnknownReference", "no automaton or let named '" + name + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Builtin model library
// ---------------------------------------------------------------------------

namespace {

const char* kPhilDecl = R"(automaton Phil {
  left A;
  right A;
  top { } -> { };
  bottom { } -> { };
  states 1 2 3 4;
  1 -[ eps / eps ]-> 1 : 1/2;
  1 -[ t / eps ]-> 2 : 1/2;
  2 -[ eps / eps ]-> 2 : 1/2;
  2 -[ eps / t ]-> 3 : 1/2;
  3 -[ eps / eps ]-> 3 : 1/2;
  3 -[ r / eps ]-> 4 : 1/2;
  4 -[ eps / eps ]-> 4 : 1/2;
  4 -[ eps / r ]-> 1 : 1/2;
}
)";

const char* kForkDecl = R"(automaton Fork {
  left A;
  right A;
  top { } -> { };
  bottom { } -> { };
  states 1 2 3;
  1 -[ eps / eps ]-> 1 : 1/3;
  1 -[ t / eps ]-> 2 : 1/3;
  1 -[ eps / t ]-> 3 : 1/3;
  2 -[ eps / eps ]-> 2 : 1/2;
  2 -[ r / eps ]-> 1 : 1/2;
  3 -[ eps / eps ]-> 3 : 1/2;
  3 -[ eps / r ]-> 1 : 1/2;
}
)";

// Unweighted fork used by the party model: same shape, every weight 1.
std::string fork1_decl(const std::string& alpha) {
    std::string a = alpha;
    return "automaton Fork1 {\n"
           "  left " + a + ";\n"
           "  right " + a + ";\n"
           "  top { } -> { };\n"
           "  bottom { } -> { };\n"
           "  states 1 2 3;\n"
           "  1 -[ eps / eps ]-> 1 : 1;\n"
           "  1 -[ t / eps ]-> 2 : 1;\n"
           "  1 -[ eps / t ]-> 3 : 1;\n"
           "  2 -[ eps / eps ]-> 2 : 1;\n"
           "  2 -[ r / eps ]-> 1 : 1;\n"
           "  3 -[ eps / eps ]-> 3 : 1;\n"
           "  3 -[ eps / r ]-> 1 : 1;\n"
           "}\n";
}

const char* kExampleDecls = R"(alphabet A0 = { a }
alphabet B0 = { b1, b2 }
alphabet C0 = { c }

automaton Example {
  left A0;
  right B0 * C0;
  top { x } -> { 1 };
  bottom { y, z } -> { 3, 3 };
  states 1 2 3;
  1 -[ a / (b1,c) ]-> 2 : 2;
  2 -[ a / (b1,c) ]-> 2 : 3;
  2 -[ a / (b2,c) ]-> 3 : 1;
}
)";

// Seat components: child cycle, empty seat, and the two one-shot wires that
// pass the cake token on the left/right interface.
std::string seat_decls(const std::string& ab) {
    return "automaton Child {\n"
           "  left " + ab + ";\n"
           "  right " + ab + ";\n"
           "  top { p } -> { 1 };\n"
           "  bottom { q } -> { 1 };\n"
           "  states 1 2 3 4;\n"
           "  1 -[ (eps,eps) / (eps,eps) ]-> 1 : 1;\n"
           "  1 -[ (eps,t) / (eps,eps) ]-> 2 : 1;\n"
           "  2 -[ (eps,eps) / (eps,eps) ]-> 2 : 1;\n"
           "  2 -[ (eps,eps) / (eps,t) ]-> 3 : 1;\n"
           "  3 -[ (eps,eps) / (eps,eps) ]-> 3 : 1;\n"
           "  3 -[ (eps,r) / (eps,eps) ]-> 4 : 1;\n"
           "  4 -[ (eps,eps) / (eps,eps) ]-> 4 : 1;\n"
           "  4 -[ (eps,eps) / (eps,r) ]-> 1 : 1;\n"
           "}\n"
           "\n"
           "automaton EmptySeat {\n"
           "  left " + ab + ";\n"
           "  right " + ab + ";\n"
           "  top { p } -> { 5 };\n"
           "  bottom { q } -> { 5 };\n"
           "  states 5;\n"
           "  5 -[ (eps,eps) / (eps,eps) ]-> 5 : 1;\n"
           "}\n"
           "\n"
           "automaton L {\n"
           "  left " + ab + ";\n"
           "  right " + ab + ";\n"
           "  top { q } -> { q };\n"
           "  bottom { p } -> { p };\n"
           "  states p q;\n"
           "  q -[ (x,eps) / (eps,eps) ]-> p : 1;\n"
           "}\n"
           "\n"
           "automaton R {\n"
           "  left " + ab + ";\n"
           "  right " + ab + ";\n"
           "  top { q } -> { q };\n"
           "  bottom { p } -> { p };\n"
           "  states p q;\n"
           "  q -[ (eps,eps) / (x,eps) ]-> p : 1;\n"
           "}\n";
}

std::string df_let(const std::string& name, int n) {
    std::string chain;
    for (int i = 0; i < n; ++i) {
        if (i) chain += " || ";
        chain += "Phil || Fork";
    }
    return "let " + name + " = norm(pfb[A](" + chain + "))\n";
}

std::string sofia_let(const std::string& name, int seats,
                      const std::string& cake_alpha,
                      const std::string& fork_alpha) {
    std::string chain;
    for (int i = 0; i < seats; ++i) {
        if (i) chain += " || ";
        chain += "S || (parwire[identity; " + cake_alpha + "] x Fork1)";
    }
    return "let " + name + " = norm(pfb[" + cake_alpha + " * " + fork_alpha +
           "](" + chain + "))\n";
}

const char* kSeatLet = "let S = sfb[{ p }](Child . R . EmptySeat . L)\n";

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

std::string builtin_source(const std::string& raw_id) {
    std::string id = raw_id;
    if (id.size() > 4 && id.substr(id.size() - 4) == ".mka")
        id = id.substr(0, id.size() - 4);

    const std::string alpha_tr = "alphabet A = { t, r, eps }\n";

    if (id == "phil") return alpha_tr + "\n" + kPhilDecl;
    if (id == "fork")
        return alpha_tr + "\n" + kForkDecl + "\n" + fork1_decl("A");
    if (id == "example") return kExampleDecls;
    if (id == "party") {
        return "alphabet A = { x, eps }\n"
               "alphabet B = { t, r, eps }\n\n" +
               seat_decls("A * B") + "\n" + fork1_decl("B") + "\n" + kSeatLet +
               "\n" + sofia_let("Sofia3_2", 3, "A", "B");
    }
    if (id == "lib") {
        std::string out = alpha_tr + "alphabet Cake = { x, eps }\n" +
                          "alphabet A0 = { a }\n"
                          "alphabet B0 = { b1, b2 }\n"
                          "alphabet C0 = { c }\n\n";
        out += kPhilDecl;
        out += "\n";
        out += kForkDecl;
        out += "\n";
        out += fork1_decl("A");
        out += "\n";
        out += "automaton Example {\n"
               "  left A0;\n"
               "  right B0 * C0;\n"
               "  top { x } -> { 1 };\n"
               "  bottom { y, z } -> { 3, 3 };\n"
               "  states 1 2 3;\n"
               "  1 -[ a / (b1,c) ]-> 2 : 2;\n"
               "  2 -[ a / (b1,c) ]-> 2 : 3;\n"
               "  2 -[ a / (b2,c) ]-> 3 : 1;\n"
               "}\n\n";
        out += seat_decls("Cake * A");
        out += "\n";
        out += kSeatLet;
        out += "\n";
        out += df_let("DF2", 2);
        out += df_let("DF3", 3);
        out += sofia_let("Sofia3_2", 3, "Cake", "A");
        return out;
    }
    if (id.rfind("df", 0) == 0 && all_digits(id.substr(2))) {
        int n = std::stoi(id.substr(2));
        if (n >= 1) {
            std::string name = "DF" + std::to_string(n);
            return alpha_tr + "\n" + kPhilDecl + "\n" + kForkDecl + "\n" +
                   df_let(name, n);
        }
    }
    if (id.rfind("sofia", 0) == 0) {
        std::string rest = id.substr(5);
        auto us = rest.find('_');
        if (us != std::string::npos) {
            std::string s_str = rest.substr(0, us);
            std::string c_str = rest.substr(us + 1);
            if (all_digits(s_str) && all_digits(c_str)) {
                int seats = std::stoi(s_str);
                int children = std::stoi(c_str);
                if (seats >= 1 && children >= 1 && children <= seats) {
                    std::string name = "Sofia" + std::to_string(seats) + "_" +
                                       std::to_string(children);
                    return "alphabet A = { x, eps }\n"
                           "alphabet B = { t, r, eps }\n\n" +
                           seat_decls("A * B") + "\n" + fork1_decl("B") + "\n" +
                           kSeatLet + "\n" + sofia_let(name, seats, "A", "B");
                }
            }
        }
    }
    raise("UnknownReference", "unknown builtin model '" + raw_id + "'");
}

std::vector<std::string> builtin_ids() {
    return {"phil", "fork", "example", "party", "df2", "df3", "sofia3_2", "lib"};
}

ModelFile builtin_library() { return parse_model(builtin_source("lib")); }

} // namespace mka
