// Command-line front end: evaluate model files, run reachability and
// probability analyses, export DOT, and re-run the reference checks.
#include "mka/analysis.hpp"
#include "mka/dot.hpp"
#include "mka/dsl.hpp"
#include "mka/error.hpp"
#include "mka/reproduce.hpp"
#include "mka/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string load_source(const std::string& file) {
    const std::string scheme = "builtin:";
    if (file.rfind(scheme, 0) == 0)
        return mka::builtin_source(file.substr(scheme.size()));
    std::ifstream in(file, std::ios::binary);
    if (!in) mka::raise("Io", "cannot open '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Last let declaration, else last automaton declaration.
std::string default_name(const mka::ModelFile& model) {
    for (auto it = model.decls.rbegin(); it != model.decls.rend(); ++it)
        if (it->k == mka::Decl::K::Let) return it->let.name;
    for (auto it = model.decls.rbegin(); it != model.decls.rend(); ++it)
        if (it->k == mka::Decl::K::Automaton) return it->automaton.name;
    mka::raise("UnknownReference", "model declares no automaton");
    return {};
}

mka::WeightedAutomaton load_automaton(const std::string& file,
                                      std::string& name) {
    mka::ModelFile model = mka::parse_model(load_source(file));
    if (name.empty()) name = default_name(model);
    return mka::eval_model_name(model, name);
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) mka::raise("Io", "cannot write '" + out + "'");
    f << text;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10f", v);
    return buf;
}

int cmd_eval(const std::string& file, std::string name,
             const std::string& out) {
    mka::WeightedAutomaton aut = load_automaton(file, name);
    write_output(out, mka::to_json(aut));
    return 0;
}

int cmd_export_dot(const std::string& file, std::string name,
                   const std::string& out) {
    mka::WeightedAutomaton aut = load_automaton(file, name);
    write_output(out, mka::to_dot(aut));
    return 0;
}

int cmd_analyze(const std::string& file, std::string name,
                const std::string& initial, int steps,
                const std::string& target, const std::string& mode,
                const std::string& out) {
    mka::WeightedAutomaton aut = load_automaton(file, name);
    mka::Name q0 = mka::Name::parse(initial);

    mka::AnalysisTarget tgt;
    if (target == "deadlock") {
        tgt = mka::AnalysisTarget::Deadlock;
    } else if (target == "pred:eating") {
        tgt = mka::AnalysisTarget::Eating;
    } else {
        mka::raise("UnknownTarget",
                   "target must be 'deadlock' or 'pred:eating'");
    }

    mka::WeightedAutomaton part = mka::reachable_part(aut, q0);
    mka::AnalysisReport rep = mka::analyze(part, q0, steps, tgt);
    nlohmann::ordered_json j =
        nlohmann::ordered_json::parse(mka::to_json(rep));

    if (mode == "float") {
        std::vector<bool> in_target(part.states.size(), false);
        if (tgt == mka::AnalysisTarget::Deadlock) {
            for (const mka::Name& d : mka::deadlock_states(part))
                in_target[static_cast<std::size_t>(part.state_index(d))] =
                    true;
        } else {
            for (std::size_t i = 0; i < part.states.size(); ++i)
                in_target[i] = mka::is_eating_state(part.states[i]);
        }
        std::vector<double> x(part.states.size(), 0.0);
        x[static_cast<std::size_t>(part.state_index(q0))] = 1.0;
        auto& series = j["series"];
        for (int k = 1; k <= steps; ++k) {
            x = mka::evolve_distribution_double(part, std::move(x), 1);
            double mass = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (in_target[i]) mass += x[i];
            auto& row = series[static_cast<std::size_t>(k - 1)];
            row.erase("probability");
            row["decimal"] = format_double(mass);
        }
    } else if (mode != "exact") {
        mka::raise("UnknownMode", "mode must be 'exact' or 'float'");
    }

    write_output(out, j.dump(2) + "\n");
    return 0;
}

int cmd_reproduce(const std::string& which, std::uint32_t seed, int pairs) {
    std::vector<mka::CheckResult> checks;
    if (which == "df2") {
        checks = mka::reproduce_df2();
    } else if (which == "sofia") {
        checks = mka::reproduce_sofia();
    } else if (which == "lemmas") {
        checks = mka::reproduce_lemmas(seed, pairs);
    } else {
        mka::raise("UnknownSuite", "suite must be df2, sofia or lemmas");
    }
    for (const mka::CheckResult& c : checks)
        std::cout << mka::format_check(c) << "\n";
    return mka::all_passed(checks) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted automata with parallel and sequential interfaces"};
    app.require_subcommand(1);

    std::string file, name, out, initial;
    std::string target = "deadlock";
    std::string mode = "exact";
    std::string suite;
    int steps = 10;
    std::uint32_t seed = 42;
    int pairs = 200;

    CLI::App* ev = app.add_subcommand("eval", "evaluate a model file");
    ev->add_option("file", file, "model file or builtin:<id>")->required();
    ev->add_option("--name", name, "declaration to evaluate");
    ev->add_option("--out", out, "output file (default stdout)");

    CLI::App* an = app.add_subcommand("analyze", "reachability and series");
    an->add_option("file", file, "model file or builtin:<id>")->required();
    an->add_option("--name", name, "declaration to evaluate");
    an->add_option("--initial", initial, "initial state")->required();
    an->add_option("--steps", steps, "series length");
    an->add_option("--target", target, "deadlock or pred:eating");
    an->add_option("--mode", mode, "exact or float");
    an->add_option("--out", out, "output file (default stdout)");

    CLI::App* re = app.add_subcommand("reproduce", "run reference checks");
    re->add_option("suite", suite, "df2, sofia or lemmas")->required();
    re->add_option("--seed", seed, "seed for the randomized suite");
    re->add_option("--pairs", pairs, "instances for the randomized suite");

    CLI::App* dot = app.add_subcommand("export-dot", "Graphviz rendering");
    dot->add_option("file", file, "model file or builtin:<id>")->required();
    dot->add_option("--name", name, "declaration to evaluate");
    dot->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(file, name, out);
        if (an->parsed())
            return cmd_analyze(file, name, initial, steps, target, mode, out);
        if (re->parsed()) return cmd_reproduce(suite, seed, pairs);
        if (dot->parsed()) return cmd_export_dot(file, name, out);
    } catch (const mka::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
