// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "mka/analysis.hpp"
#include "mka/compare.hpp"
#include "mka/decompose.hpp"
#include "mka/dsl.hpp"
#include "mka/gen.hpp"
#include "mka/ops.hpp"
#include "mka/reproduce.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace mka;

namespace {

WeightedAutomaton builtin(const std::string& id, const std::string& name) {
    return eval_model_name(parse_model(builtin_source(id)), name);
}

// Sub-checks by id prefix; failures are appended to the detail string.
bool subset_passed(const std::vector<CheckResult>& checks,
                   const std::vector<std::string>& ids, std::string& detail) {
    bool ok = true;
    for (const std::string& id : ids) {
        bool found = false;
        for (const CheckResult& c : checks) {
            if (c.id != id) continue;
            found = true;
            if (!c.pass) {
                ok = false;
                detail += " [" + format_check(c) + "]";
            }
        }
        if (!found) {
            ok = false;
            detail += " [missing check " + id + "]";
        }
    }
    return ok;
}

// Brute-force oracle: accumulate entry-chain products under power-alphabet
// word indices (leftmost factor slowest).
WeightedAutomaton k_step_by_paths(const WeightedAutomaton& aut, int k) {
    WeightedAutomaton out;
    out.states = aut.states;
    out.left = alphabet_power(aut.left, k);
    out.right = alphabet_power(aut.right, k);
    out.top = aut.top;
    out.bottom = aut.bottom;
    int nl = static_cast<int>(aut.left.labels.size());
    int nr = static_cast<int>(aut.right.labels.size());
    std::function<void(const Name&, const Name&, int, int, int, const Weight&)>
        walk = [&](const Name& start, const Name& cur, int depth, int il,
                   int ir, const Weight& w) {
            if (depth == k) {
                out.add(start, out.left.labels[static_cast<std::size_t>(il)],
                        out.right.labels[static_cast<std::size_t>(ir)], cur, w);
                return;
            }
            for (const auto& [key, ew] : aut.table) {
                if (!(key.from == cur)) continue;
                walk(start, key.to, depth + 1,
                     il * nl + aut.left.index_of(key.left),
                     ir * nr + aut.right.index_of(key.right), w * ew);
            }
        };
    for (const Name& s : aut.states) walk(s, s, 0, 0, 0, Weight::one());
    return out;
}

std::vector<Name> point_set(int n) {
    std::vector<Name> v;
    for (int i = 0; i < n; ++i)
        v.push_back(Name::atom("e" + std::to_string(i + 1)));
    return v;
}

Alphabet alpha_of_size(int n) {
    Alphabet a;
    a.labels.push_back(Name::atom("eps"));
    a.epsilon = Name::atom("eps");
    for (int i = 1; i < n; ++i)
        a.labels.push_back(Name::atom("l" + std::to_string(i)));
    return a;
}

struct Gate {
    bool all_ok = true;

    void run(const std::string& id, double limit_ms,
             const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string(" [exception: ") + e.what() + "]";
        }
        auto t1 = std::chrono::steady_clock::now();
        double ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (limit_ms > 0 && ms > limit_ms) {
            ok = false;
            std::ostringstream os;
            os << " [runtime " << ms << " ms over limit " << limit_ms << " ms]";
            detail += os.str();
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " " << id << " ("
             << static_cast<long>(ms) << " ms)";
        if (!ok) line << detail;
        std::cout << line.str() << "\n";
        all_ok = all_ok && ok;
    }
};

} // namespace

int main() {
    Gate gate;
    std::optional<std::vector<CheckResult>> df2_checks;
    std::optional<std::vector<CheckResult>> sofia_checks;
    std::optional<std::vector<CheckResult>> lemma_checks;

    // 1. Reachable part of the two-philosopher table and its exact matrix.
    gate.run("df2-reachable-and-matrix", 1000, [&](std::string& d) {
        df2_checks = reproduce_df2();
        return subset_passed(*df2_checks,
                             {"df2-reachable-count", "df2-reachable-states",
                              "df2-markov", "df2-transition-matrix"},
                             d);
    });

    // 2. Exact deadlock series plus the absorption evidence replacing the
    //    asymptotic claim.
    gate.run("df2-deadlock-series", 0, [&](std::string& d) {
        if (!df2_checks) df2_checks = reproduce_df2();
        return subset_passed(
            *df2_checks,
            {"df2-deadlock-states", "df2-deadlock-k2", "df2-deadlock-k3",
             "df2-deadlock-k4", "df2-deadlock-monotone", "df2-deadlock-first-99",
             "df2-absorption-hypotheses", "df3-deadlock-states",
             "df3-absorption-hypotheses"},
            d);
    });

    // 3. The birthday party: structure, eating counts and exact series.
    gate.run("party-structure-and-series", 10000, [&](std::string& d) {
        sofia_checks = reproduce_sofia();
        bool ok = all_passed(*sofia_checks);
        if (!ok)
            for (const CheckResult& c : *sofia_checks)
                if (!c.pass) d += " [" + format_check(c) + "]";
        return ok;
    });

    // 4. Interchange laws on 200 seeded random pairs.
    gate.run("interchange-lemmas", 30000, [&](std::string& d) {
        lemma_checks = reproduce_lemmas(42, 200);
        bool ok = all_passed(*lemma_checks);
        if (!ok)
            for (const CheckResult& c : *lemma_checks)
                if (!c.pass) d += " [" + format_check(c) + "]";
        return ok;
    });

    // 5. Elementary decomposition re-evaluates to the original.
    gate.run("elementary-decomposition", 10000, [&](std::string& d) {
        EvalEnv env;
        WeightedAutomaton example = builtin("example", "Example");
        if (!is_isomorphic(eval_expression(*elementary_decomposition(example),
                                           env),
                           example)) {
            d += " [worked example failed]";
            return false;
        }
        Rng rng(42);
        for (int i = 0; i < 100; ++i) {
            WeightedAutomaton aut = random_positive_automaton(rng, 4, 3);
            if (!is_isomorphic(
                    eval_expression(*elementary_decomposition(aut), env),
                    aut)) {
                d += " [random case " + std::to_string(i) + " failed]";
                return false;
            }
        }
        return true;
    });

    // 6. Wire algebra: separability, twist involutions, identity laws.
    gate.run("wire-laws", 0, [&](std::string& d) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<Name> x = point_set(n), y = point_set(5 - n);
            if (!is_isomorphic(seq_compose(seq_wire_codiag_op(x),
                                           seq_wire_codiag(x)),
                               seq_wire_identity(x))) {
                d += " [seq separability, size " + std::to_string(n) + "]";
                return false;
            }
            if (!is_isomorphic(seq_compose(seq_wire_twist(x, y),
                                           seq_wire_twist(y, x)),
                               seq_wire_identity(name_set_product(x, y)))) {
                d += " [seq twist involution, size " + std::to_string(n) + "]";
                return false;
            }
            if (!is_isomorphic(seq_compose(seq_wire_identity(x),
                                           seq_wire_identity(x)),
                               seq_wire_identity(x))) {
                d += " [seq identity law, size " + std::to_string(n) + "]";
                return false;
            }

            Alphabet a = alpha_of_size(n), b = alpha_of_size(5 - n);
            if (!structurally_equal(
                    communicating_parallel(par_wire_diag(a), par_wire_diag_op(a)),
                    par_wire_identity(a))) {
                d += " [par separability, size " + std::to_string(n) + "]";
                return false;
            }
            if (!structurally_equal(
                    communicating_parallel(par_wire_twist(a, b),
                                           par_wire_twist(b, a)),
                    par_wire_identity(alphabet_product(a, b)))) {
                d += " [par twist involution, size " + std::to_string(n) + "]";
                return false;
            }
            if (!structurally_equal(
                    communicating_parallel(par_wire_identity(a),
                                           par_wire_identity(a)),
                    par_wire_identity(a))) {
                d += " [par identity law, size " + std::to_string(n) + "]";
                return false;
            }
        }

        // Identity wires absorb into an automaton on both interfaces.
        WeightedAutomaton ex = builtin("example", "Example");
        std::vector<Name> top_dom, bottom_dom;
        for (const auto& [pt, st] : ex.top) top_dom.push_back(pt);
        for (const auto& [pt, st] : ex.bottom) bottom_dom.push_back(pt);
        if (!is_isomorphic(seq_compose(seq_wire_identity(top_dom), ex), ex) ||
            !is_isomorphic(seq_compose(ex, seq_wire_identity(bottom_dom)), ex)) {
            d += " [sequential identity absorption]";
            return false;
        }
        if (!structurally_equal(
                communicating_parallel(par_wire_identity(ex.left), ex), ex) ||
            !structurally_equal(
                communicating_parallel(ex, par_wire_identity(ex.right)), ex)) {
            d += " [parallel identity absorption]";
            return false;
        }
        return true;
    });

    // 7. k-step against brute-force path enumeration.
    gate.run("kstep-path-oracle", 0, [&](std::string& d) {
        Rng rng(42);
        for (int i = 0; i < 100; ++i) {
            WeightedAutomaton aut = random_positive_automaton(rng, 4, 3);
            int k = 1 + i % 3;
            if (!structurally_equal(k_step_automaton(aut, k),
                                    k_step_by_paths(aut, k))) {
                d += " [case " + std::to_string(i) + ", k=" +
                     std::to_string(k) + "]";
                return false;
            }
        }
        return true;
    });

    // 8. Component tables and the worked example through the DSL.
    gate.run("component-fidelity", 0, [&](std::string& d) {
        WeightedAutomaton phil = builtin("phil", "Phil");
        WeightedAutomaton fork = builtin("fork", "Fork");
        Name t = Name::atom("t"), r = Name::atom("r"), e = Name::atom("eps");
        auto atom = [](int i) { return Name::atom(std::to_string(i)); };

        bool ok = is_markov(phil) && is_markov(fork);
        ok = ok && phil.table.size() == 8;
        for (int i = 1; i <= 4; ++i)
            ok = ok && phil.weight_of(atom(i), e, e, atom(i)) == Weight(1, 2);
        ok = ok && phil.weight_of(atom(1), t, e, atom(2)) == Weight(1, 2) &&
             phil.weight_of(atom(2), e, t, atom(3)) == Weight(1, 2) &&
             phil.weight_of(atom(3), r, e, atom(4)) == Weight(1, 2) &&
             phil.weight_of(atom(4), e, r, atom(1)) == Weight(1, 2);
        ok = ok && fork.table.size() == 7;
        ok = ok && fork.weight_of(atom(1), e, e, atom(1)) == Weight(1, 3) &&
             fork.weight_of(atom(2), e, e, atom(2)) == Weight(1, 2) &&
             fork.weight_of(atom(3), e, e, atom(3)) == Weight(1, 2) &&
             fork.weight_of(atom(1), t, e, atom(2)) == Weight(1, 3) &&
             fork.weight_of(atom(1), e, t, atom(3)) == Weight(1, 3) &&
             fork.weight_of(atom(2), r, e, atom(1)) == Weight(1, 2) &&
             fork.weight_of(atom(3), e, r, atom(1)) == Weight(1, 2);
        if (!ok) {
            d += " [component matrix mismatch]";
            return false;
        }

        WeightedAutomaton ex = builtin("example", "Example");
        Name bc1 = Name::tuple({Name::atom("b1"), Name::atom("c")});
        Name bc2 = Name::tuple({Name::atom("b2"), Name::atom("c")});
        ok = ex.table.size() == 3 &&
             ex.weight_of(atom(1), Name::atom("a"), bc1, atom(2)) == Weight(2) &&
             ex.weight_of(atom(2), Name::atom("a"), bc1, atom(2)) == Weight(3) &&
             ex.weight_of(atom(2), Name::atom("a"), bc2, atom(3)) == Weight(1);
        if (!ok) {
            d += " [worked example matrix mismatch]";
            return false;
        }
        ModelFile m = parse_model(builtin_source("example"));
        WeightedAutomaton again =
            eval_model_name(parse_model(pretty_print(m)), "Example");
        if (!structurally_equal(again, ex)) {
            d += " [worked example did not survive print/parse]";
            return false;
        }
        return true;
    });

    // 9. Normalization is not compositional for sequential composition.
    gate.run("normalization-order-witness", 0, [&](std::string& d) {
        WeightedAutomaton p;
        p.states = {Name::atom("p")};
        p.left.labels = {Name::atom("a")};
        p.right.labels = {Name::atom("b")};
        p.bottom[Name::atom("y")] = Name::atom("p");
        p.add(Name::atom("p"), Name::atom("a"), Name::atom("b"),
              Name::atom("p"), Weight(2));
        WeightedAutomaton q;
        q.states = {Name::atom("q")};
        q.left.labels = {Name::atom("c")};
        q.right.labels = {Name::atom("d")};
        q.top[Name::atom("y")] = Name::atom("q");
        q.add(Name::atom("q"), Name::atom("c"), Name::atom("d"),
              Name::atom("q"), Weight(1));

        WeightedAutomaton lhs = normalize(seq_compose(p, q));
        WeightedAutomaton rhs =
            normalize(seq_compose(normalize(p), normalize(q)));
        if (structurally_equal(lhs, rhs)) {
            d += " [witness compared equal]";
            return false;
        }
        Name s = lhs.states.front();
        bool ok = lhs.weight_of(s, Name::atom("a"), Name::atom("b"), s) ==
                      Weight(2, 3) &&
                  rhs.weight_of(s, Name::atom("a"), Name::atom("b"), s) ==
                      Weight(1, 2);
        if (!ok) d += " [unexpected witness weights]";
        return ok;
    });

    // 10. Determinism: print/parse fixed point and the reproduction suites.
    gate.run("dsl-determinism-and-reproduce", 0, [&](std::string& d) {
        for (const std::string& id : builtin_ids()) {
            ModelFile m = parse_model(builtin_source(id));
            std::string printed = pretty_print(m);
            if (!model_equal(parse_model(printed), m) ||
                pretty_print(parse_model(printed)) != printed) {
                d += " [print/parse fixed point fails for " + id + "]";
                return false;
            }
        }
        if (!df2_checks) df2_checks = reproduce_df2();
        if (!sofia_checks) sofia_checks = reproduce_sofia();
        if (!lemma_checks) lemma_checks = reproduce_lemmas(42, 200);
        if (!all_passed(*df2_checks)) d += " [df2 suite failed]";
        if (!all_passed(*sofia_checks)) d += " [party suite failed]";
        if (!all_passed(*lemma_checks)) d += " [lemma suite failed]";
        return all_passed(*df2_checks) && all_passed(*sofia_checks) &&
               all_passed(*lemma_checks);
    });

    return gate.all_ok ? 0 : 1;
}
