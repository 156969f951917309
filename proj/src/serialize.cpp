#include "mka/serialize.hpp"

#include "mka/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <tuple>
#include <vector>

namespace mka {

namespace {

using Json = nlohmann::ordered_json;

Json alphabet_json(const Alphabet& a) {
    Json j;
    j["labels"] = Json::array();
    for (const Name& l : a.labels) j["labels"].push_back(l.str());
    if (a.epsilon) j["epsilon"] = a.epsilon->str();
    return j;
}

Json interface_json(const InterfaceMap& m) {
    Json j = Json::array();
    for (const auto& [pt, st] : m) j.push_back({pt.str(), st.str()});
    return j;
}

Alphabet alphabet_from(const Json& j) {
    Alphabet a;
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array())
        raise("SyntaxError", "alphabet needs a labels array");
    for (const auto& l : j["labels"])
        a.labels.push_back(Name::parse(l.get<std::string>()));
    if (j.contains("epsilon"))
        a.epsilon = Name::parse(j["epsilon"].get<std::string>());
    return a;
}

InterfaceMap interface_from(const Json& j) {
    InterfaceMap m;
    if (!j.is_array()) raise("SyntaxError", "interface needs an array of pairs");
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            raise("SyntaxError", "interface entries are [point, state] pairs");
        m[Name::parse(pair[0].get<std::string>())] =
            Name::parse(pair[1].get<std::string>());
    }
    return m;
}

} // namespace

std::string to_json(const WeightedAutomaton& aut) {
    Json j;
    j["states"] = Json::array();
    for (const Name& s : aut.states) j["states"].push_back(s.str());
    j["left"] = alphabet_json(aut.left);
    j["right"] = alphabet_json(aut.right);
    j["top"] = interface_json(aut.top);
    j["bottom"] = interface_json(aut.bottom);

    std::vector<const std::pair<const TransKey, Weight>*> entries;
    for (const auto& e : aut.table) entries.push_back(&e);
    auto order = [&](const std::pair<const TransKey, Weight>* e) {
        return std::tuple<const Name&, int, int, const Name&>(
            e->first.from, aut.left.index_of(e->first.left),
            aut.right.index_of(e->first.right), e->first.to);
    };
    std::sort(entries.begin(), entries.end(),
              [&](const auto* a, const auto* b) { return order(a) < order(b); });

    j["transitions"] = Json::array();
    for (const auto* e : entries) {
        Json t;
        t["from"] = e->first.from.str();
        t["left"] = e->first.left.str();
        t["right"] = e->first.right.str();
        t["to"] = e->first.to.str();
        t["weight"] = e->second.str();
        j["transitions"].push_back(std::move(t));
    }
    return j.dump(2) + "\n";
}

WeightedAutomaton automaton_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise("SyntaxError", std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) raise("SyntaxError", "expected a JSON object");
    for (const char* field : {"states", "left", "right", "top", "bottom",
                              "transitions"})
        if (!j.contains(field))
            raise("SyntaxError", std::string("missing field '") + field + "'");

    WeightedAutomaton aut;
    for (const auto& s : j["states"])
        aut.states.push_back(Name::parse(s.get<std::string>()));
    aut.left = alphabet_from(j["left"]);
    aut.right = alphabet_from(j["right"]);
    aut.top = interface_from(j["top"]);
    aut.bottom = interface_from(j["bottom"]);
    for (const auto& t : j["transitions"]) {
        if (!t.is_object())
            raise("SyntaxError", "transitions are objects");
        aut.add(Name::parse(t.at("from").get<std::string>()),
                Name::parse(t.at("left").get<std::string>()),
                Name::parse(t.at("right").get<std::string>()),
                Name::parse(t.at("to").get<std::string>()),
                Weight::parse(t.at("weight").get<std::string>()));
    }
    aut.validate();
    return aut;
}

std::string to_json(const AnalysisReport& rep) {
    Json j;
    j["initial"] = rep.initial.str();
    j["reachable"] = Json::array();
    for (const Name& s : rep.reachable) j["reachable"].push_back(s.str());
    j["reachableCount"] = rep.reachable.size();
    j["transitionCount"] = rep.transition_count;
    j["target"] =
        rep.target == AnalysisTarget::Deadlock ? "deadlock" : "eating";
    if (rep.pf_checked) {
        Json pf;
        pf["deadlocks"] = Json::array();
        for (const Name& s : rep.pf.deadlocks)
            pf["deadlocks"].push_back(s.str());
        pf["uniqueReachableDeadlock"] = rep.pf.unique_reachable_deadlock;
        pf["allReturnToInitial"] = rep.pf.all_return_to_initial;
        pf["allHaveSelfLoop"] = rep.pf.all_have_self_loop;
        pf["all"] = rep.pf.all();
        j["pf"] = std::move(pf);
    }
    j["series"] = Json::array();
    for (const auto& [k, w] : rep.series) {
        Json row;
        row["k"] = k;
        row["probability"] = w.str();
        row["decimal"] = w.decimal(10);
        j["series"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

} // namespace mka
