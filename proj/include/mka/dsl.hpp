#pragma once

#include "mka/automaton.hpp"
#include "mka/ops.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mka {

// --- expression AST -----------------------------------------------------------

struct AlphaExpr;
using AlphaExprPtr = std::shared_ptr<const AlphaExpr>;

/// Alphabet expression: `unit`, a declared name, or a product/sum chain.
struct AlphaExpr {
    enum class K { Unit, Ref, Product, Sum };
    K k = K::Unit;
    std::string name;
    AlphaExprPtr a, b;

    static AlphaExprPtr unit();
    static AlphaExprPtr ref(std::string n);
    static AlphaExprPtr product(AlphaExprPtr a, AlphaExprPtr b);
    static AlphaExprPtr sum(AlphaExprPtr a, AlphaExprPtr b);
};

bool alpha_equal(const AlphaExpr& a, const AlphaExpr& b);

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct SeqWireSpec {
    std::string kind; // identity codiag codiagop initial initialop twist delta deltainv
    std::vector<std::vector<Name>> sets;
};

struct ParWireSpec {
    std::string kind; // identity diag diagop proj projop twist codiag codiagop
    std::vector<AlphaExprPtr> alphas;
};

struct Expression {
    enum class Op {
        Ref,        // named automaton or let
        Literal,    // embedded automaton (produced by decompositions)
        Boxplus,    // oplus
        SeqCompose, // ;;
        LocalSum,   // +
        LocalSeq,   // .
        ParProduct, // x
        CommPar,    // ||
        Normalize,
        Power,
        Sfb,
        Pfb,
        SeqWire,
        ParWire,
        SeqConst,
        ParConst,
    };

    Op op;
    std::string ref;
    std::shared_ptr<const WeightedAutomaton> literal;
    ExprPtr a, b;
    int k = 0;
    std::vector<Name> zone;
    AlphaExprPtr alpha;
    std::optional<SeqWireSpec> seq_wire;
    std::optional<ParWireSpec> par_wire;
    std::shared_ptr<const SeqRelation> seq_rel;
    std::shared_ptr<const ParRelation> par_rel;

    static ExprPtr make_ref(std::string name);
    static ExprPtr make_literal(WeightedAutomaton aut);
    static ExprPtr binary(Op op, ExprPtr a, ExprPtr b);
    static ExprPtr normalize(ExprPtr a);
    static ExprPtr power(int k, ExprPtr a);
    static ExprPtr make_sfb(std::vector<Name> zone, ExprPtr a);
    static ExprPtr make_pfb(AlphaExprPtr alpha, ExprPtr a);
    static ExprPtr make_seq_wire(SeqWireSpec spec);
    static ExprPtr make_par_wire(ParWireSpec spec);
    static ExprPtr make_seq_const(SeqRelation rel);
    static ExprPtr make_par_const(ParRelation rel);
};

bool expr_equal(const Expression& a, const Expression& b);

// --- model files ----------------------------------------------------------------

struct TransitionDecl {
    Name from, left, right, to;
    Weight weight;
};

struct AutomatonDecl {
    std::string name;
    AlphaExprPtr left, right;
    std::vector<Name> top_points, top_images;
    std::vector<Name> bottom_points, bottom_images;
    std::vector<Name> states;
    std::vector<TransitionDecl> transitions;
};

struct AlphabetDecl {
    std::string name;
    std::vector<Name> labels;
};

struct LetDecl {
    std::string name;
    ExprPtr expr;
};

struct Decl {
    enum class K { Alphabet, Automaton, Let };
    K k;
    AlphabetDecl alphabet;
    AutomatonDecl automaton;
    LetDecl let;
};

struct ModelFile {
    std::vector<Decl> decls;
};

/// Parse a model file. Diagnoses SyntaxError (with line:col), DuplicateName,
/// UnknownReference, InvalidWeight and AmbiguousExpression.
ModelFile parse_model(const std::string& source);

/// Canonical formatting; parse(pretty_print(parse(s))) == parse(s).
std::string pretty_print(const ModelFile& file);

bool model_equal(const ModelFile& a, const ModelFile& b);

// --- evaluation ------------------------------------------------------------------

struct EvalEnv {
    std::map<std::string, Alphabet> alphabets;
    std::map<std::string, WeightedAutomaton> automata;
};

Alphabet eval_alpha(const AlphaExpr& e, const EvalEnv& env);

/// Evaluate one expression; operation errors are rethrown with the
/// position path (e.g. "DF2/norm/pfb") prepended.
WeightedAutomaton eval_expression(const Expression& e, const EvalEnv& env,
                                  const std::string& path = "");

/// Evaluate every declaration in order.
EvalEnv eval_model(const ModelFile& file);

/// Evaluate and return one declared automaton/let by name (UnknownReference).
WeightedAutomaton eval_model_name(const ModelFile& file, const std::string& name);

// --- builtin model library ---------------------------------------------------------

/// Identifiers: phil, fork, example, party, lib, df<N> (N >= 1),
/// sofia<S>_<C> (1 <= C <= S). UnknownReference otherwise.
std::string builtin_source(const std::string& id);

/// The fixed identifiers every tool enumerates (parametric ones included as
/// df2, df3, sofia3_2).
std::vector<std::string> builtin_ids();

/// Parsed master file with every builtin declaration.
ModelFile builtin_library();

} // namespace mka
