#include "mka/reproduce.hpp"

#include "mka/error.hpp"

#include "mka/analysis.hpp"
#include "mka/automaton.hpp"
#include "mka/compare.hpp"
#include "mka/dsl.hpp"
#include "mka/gen.hpp"
#include "mka/ops.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mka {

std::string format_check(const CheckResult& c) {
    return std::string(c.pass ? "PASS" : "FAIL") + " " + c.id +
           " expected=" + c.expected + " got=" + c.got;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult check(std::string id, std::string expected, std::string got) {
    CheckResult c;
    c.id = std::move(id);
    c.expected = std::move(expected);
    c.got = std::move(got);
    c.pass = c.expected == c.got;
    return c;
}

CheckResult check_true(std::string id, bool got) {
    return check(std::move(id), "true", got ? "true" : "false");
}

Name tup(std::initializer_list<const char*> parts) {
    std::vector<Name> v;
    v.reserve(parts.size());
    for (const char* p : parts) v.push_back(Name::atom(p));
    return Name::tuple(std::move(v));
}

std::string render_states(std::vector<Name> states) {
    states = sorted_states(std::move(states));
    std::string out;
    for (const Name& s : states) {
        if (!out.empty()) out += " ";
        out += s.str();
    }
    return out;
}

WeightedAutomaton builtin(const std::string& id, const std::string& name) {
    return eval_model_name(parse_model(builtin_source(id)), name);
}

std::string series_value(const std::vector<std::pair<int, Weight>>& series,
                         int k) {
    for (const auto& [step, w] : series)
        if (step == k) return w.str();
    return "missing k=" + std::to_string(k);
}

// Two dining philosophers: the eight reachable states in the order the
// transition matrix is tabulated, and that matrix.
const std::vector<Name>& df2_states_in_table_order() {
    static const std::vector<Name> order = {
        tup({"1", "1", "1", "1"}), tup({"1", "3", "3", "2"}),
        tup({"3", "2", "1", "3"}), tup({"1", "1", "4", "2"}),
        tup({"4", "2", "1", "1"}), tup({"1", "3", "2", "1"}),
        tup({"2", "1", "1", "3"}), tup({"2", "3", "2", "3"}),
    };
    return order;
}

const char* kDf2Matrix[8][8] = {
    {"1/4", "0", "0", "0", "0", "1/4", "1/4", "1/4"},
    {"0", "1/2", "0", "1/2", "0", "0", "0", "0"},
    {"0", "0", "1/2", "0", "1/2", "0", "0", "0"},
    {"1/2", "0", "0", "1/2", "0", "0", "0", "0"},
    {"1/2", "0", "0", "0", "1/2", "0", "0", "0"},
    {"0", "1/3", "0", "0", "0", "1/3", "0", "1/3"},
    {"0", "0", "1/3", "0", "0", "0", "1/3", "1/3"},
    {"0", "0", "0", "0", "0", "0", "0", "1"},
};

const std::vector<Name>& party_states() {
    static const std::vector<Name> states = {
        tup({"5", "1", "1", "1", "1", "1"}), tup({"5", "1", "1", "3", "2", "1"}),
        tup({"5", "3", "2", "1", "1", "1"}), tup({"5", "3", "2", "3", "2", "1"}),
        tup({"1", "1", "1", "1", "5", "1"}), tup({"1", "3", "2", "1", "5", "1"}),
        tup({"5", "1", "1", "3", "3", "2"}), tup({"5", "3", "2", "3", "3", "2"}),
        tup({"5", "3", "3", "2", "1", "1"}), tup({"1", "3", "3", "2", "5", "1"}),
        tup({"1", "1", "5", "1", "1", "1"}), tup({"2", "1", "1", "1", "5", "3"}),
        tup({"2", "1", "5", "1", "1", "3"}), tup({"2", "3", "2", "1", "5", "3"}),
        tup({"2", "3", "3", "2", "5", "3"}), tup({"5", "1", "1", "1", "4", "2"}),
        tup({"5", "3", "2", "1", "4", "2"}), tup({"5", "1", "4", "2", "1", "1"}),
        tup({"1", "1", "4", "2", "5", "1"}), tup({"2", "1", "4", "2", "5", "3"}),
        tup({"1", "1", "5", "3", "2", "1"}), tup({"2", "1", "5", "3", "2", "3"}),
        tup({"3", "2", "1", "1", "5", "3"}), tup({"3", "2", "5", "1", "1", "3"}),
        tup({"3", "2", "5", "3", "2", "3"}), tup({"5", "3", "3", "2", "4", "2"}),
        tup({"3", "2", "4", "2", "5", "3"}), tup({"1", "1", "5", "3", "3", "2"}),
        tup({"4", "2", "1", "1", "5", "1"}), tup({"4", "2", "5", "1", "1", "1"}),
        tup({"4", "2", "5", "3", "2", "1"}), tup({"5", "1", "4", "2", "4", "2"}),
        tup({"4", "2", "4", "2", "5", "1"}), tup({"1", "1", "5", "1", "4", "2"}),
        tup({"4", "2", "5", "3", "3", "2"}), tup({"4", "2", "5", "1", "4", "2"}),
    };
    return states;
}

} // namespace

std::vector<CheckResult> reproduce_df2() {
    std::vector<CheckResult> out;
    WeightedAutomaton df2 = builtin("df2", "DF2");
    Name q0 = tup({"1", "1", "1", "1"});
    WeightedAutomaton part = reachable_part(df2, q0);

    out.push_back(check("df2-reachable-count", "8",
                        std::to_string(part.states.size())));
    out.push_back(check("df2-reachable-states",
                        render_states(df2_states_in_table_order()),
                        render_states(part.states)));
    out.push_back(check_true("df2-markov", is_markov(part)));

    const std::vector<Name>& order = df2_states_in_table_order();
    TotalMatrix m = total_matrix(part);
    std::string matrix_got = "reference table";
    for (std::size_t i = 0; i < order.size() && matrix_got == "reference table";
         ++i) {
        int pi = part.state_index(order[i]);
        if (pi < 0) {
            matrix_got = "missing state " + order[i].str();
            break;
        }
        for (std::size_t j = 0; j < order.size(); ++j) {
            int pj = part.state_index(order[j]);
            Weight expect = Weight::parse(kDf2Matrix[i][j]);
            const Weight& got =
                m.w[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)];
            if (!(got == expect)) {
                matrix_got = "entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") = " + got.str();
                break;
            }
        }
    }
    out.push_back(check("df2-transition-matrix", "reference table", matrix_got));

    out.push_back(check("df2-deadlock-states", tup({"2", "3", "2", "3"}).str(),
                        render_states(deadlock_states(part))));

    auto series = deadlock_probability_series(part, q0, 29);
    out.push_back(check("df2-deadlock-k2", "23/48", series_value(series, 2)));
    out.push_back(check("df2-deadlock-k3", "341/576", series_value(series, 3)));
    out.push_back(
        check("df2-deadlock-k4", "4415/6912", series_value(series, 4)));

    bool monotone = true;
    for (std::size_t i = 1; i < series.size(); ++i)
        if (series[i].second < series[i - 1].second) monotone = false;
    out.push_back(check_true("df2-deadlock-monotone", monotone));

    Weight threshold(99, 100);
    int first_k = -1;
    for (const auto& [k, w] : series)
        if (!(w < threshold)) {
            first_k = k;
            break;
        }
    out.push_back(check("df2-deadlock-first-99", "29",
                        first_k < 0 ? std::string("none within 29 steps")
                                    : std::to_string(first_k)));

    PfVerdict v2 = check_pf_hypotheses(part, q0);
    out.push_back(check_true("df2-absorption-hypotheses", v2.all()));

    WeightedAutomaton df3 = builtin("df3", "DF3");
    Name q3 = tup({"1", "1", "1", "1", "1", "1"});
    WeightedAutomaton part3 = reachable_part(df3, q3);
    out.push_back(check("df3-deadlock-states",
                        tup({"2", "3", "2", "3", "2", "3"}).str(),
                        render_states(deadlock_states(part3))));
    PfVerdict v3 = check_pf_hypotheses(part3, q3);
    out.push_back(check_true("df3-absorption-hypotheses", v3.all()));

    return out;
}

std::vector<CheckResult> reproduce_sofia() {
    std::vector<CheckResult> out;
    WeightedAutomaton sofia = builtin("sofia3_2", "Sofia3_2");
    Name q0 = tup({"5", "1", "1", "1", "1", "1"});
    WeightedAutomaton part = reachable_part(sofia, q0);

    out.push_back(check("party-reachable-count", "36",
                        std::to_string(part.states.size())));
    out.push_back(check("party-reachable-states", render_states(party_states()),
                        render_states(part.states)));
    out.push_back(check("party-transition-count", "141",
                        std::to_string(part.table.size())));
    out.push_back(check_true("party-markov", is_markov(part)));
    out.push_back(check("party-eating-count", "12",
                        std::to_string(eating_state_count(part))));
    out.push_back(check_true("party-eating-exclusive", eating_exclusive(part)));

    auto series = probability_series(part, q0, is_eating_state, 5);
    out.push_back(check("party-eating-k1", "0", series_value(series, 1)));
    out.push_back(check("party-eating-k2", "19/60", series_value(series, 2)));
    out.push_back(check("party-eating-k3", "98/225", series_value(series, 3)));
    out.push_back(
        check("party-eating-k4", "49133/108000", series_value(series, 4)));
    out.push_back(
        check("party-eating-k5", "1473023/3240000", series_value(series, 5)));

    Weight p100 = subset_probability(part, q0, is_eating_state, 100);
    out.push_back(check("party-eating-k100", "0.3768058221", p100.decimal(10)));

    return out;
}

namespace {

// Label-index bijection between pow(Q x R, k) and pow(Q, k) x pow(R, k):
// an index into power(product(A, C), k) splits digitwise into a word over A
// and a word over C. Stays valid when unit alphabets are absorbed, because
// absorption only removes size-1 factors.
int split_word_index(int idx, int na, int nc, int k, bool take_left) {
    std::vector<int> digits(static_cast<std::size_t>(k));
    int base = na * nc;
    for (int j = k - 1; j >= 0; --j) {
        digits[static_cast<std::size_t>(j)] = idx % base;
        idx /= base;
    }
    int word = 0;
    for (int j = 0; j < k; ++j) {
        int d = digits[static_cast<std::size_t>(j)];
        word = word * (take_left ? na : nc) + (take_left ? d / nc : d % nc);
    }
    return word;
}

int int_pow(int b, int k) {
    int r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
}

bool power_commutes_with_product(const WeightedAutomaton& q,
                                 const WeightedAutomaton& r, int k) {
    WeightedAutomaton lhs = k_step_automaton(parallel_product(q, r), k);
    WeightedAutomaton rhs =
        parallel_product(k_step_automaton(q, k), k_step_automaton(r, k));

    if (lhs.states != rhs.states || lhs.top != rhs.top ||
        lhs.bottom != rhs.bottom)
        return false;
    if (lhs.table.size() != rhs.table.size()) return false;

    int la = static_cast<int>(q.left.labels.size());
    int lc = static_cast<int>(r.left.labels.size());
    int ra = static_cast<int>(q.right.labels.size());
    int rc = static_cast<int>(r.right.labels.size());

    for (const auto& [key, w] : lhs.table) {
        int li = lhs.left.index_of(key.left);
        int ri = lhs.right.index_of(key.right);
        if (li < 0 || ri < 0) return false;
        int lmapped = split_word_index(li, la, lc, k, true) * int_pow(lc, k) +
                      split_word_index(li, la, lc, k, false);
        int rmapped = split_word_index(ri, ra, rc, k, true) * int_pow(rc, k) +
                      split_word_index(ri, ra, rc, k, false);
        const Name& ll = rhs.left.labels[static_cast<std::size_t>(lmapped)];
        const Name& rl = rhs.right.labels[static_cast<std::size_t>(rmapped)];
        if (!(rhs.weight_of(key.from, ll, rl, key.to) == w)) return false;
    }
    return true;
}

} // namespace

std::vector<CheckResult> reproduce_lemmas(std::uint32_t seed, int pairs) {
    Rng rng(seed);
    int norm_product = 0;
    int norm_commpar = 0;
    int pow_product = 0;

    for (int i = 0; i < pairs; ++i) {
        Alphabet a = random_alphabet(rng, 3, "a");
        Alphabet b = random_alphabet(rng, 3, "b");
        Alphabet c = random_alphabet(rng, 3, "c");
        WeightedAutomaton q = random_positive_automaton_over(rng, a, b, 4);
        WeightedAutomaton r = random_positive_automaton_over(rng, b, c, 4);

        if (structurally_equal(normalize(parallel_product(q, r)),
                               parallel_product(normalize(q), normalize(r))))
            ++norm_product;
        if (structurally_equal(
                normalize(communicating_parallel(normalize(q), normalize(r))),
                normalize(communicating_parallel(q, r))))
            ++norm_commpar;
        if (power_commutes_with_product(q, r, 1 + i % 3)) ++pow_product;
    }

    std::string want = std::to_string(pairs) + "/" + std::to_string(pairs);
    auto score = [&](int n) {
        return std::to_string(n) + "/" + std::to_string(pairs);
    };
    std::vector<CheckResult> out;
    out.push_back(check("lemma-normalize-product", want, score(norm_product)));
    out.push_back(check("lemma-normalize-commpar", want, score(norm_commpar)));
    out.push_back(check("lemma-power-product", want, score(pow_product)));
    return out;
}

} // namespace mka
