#include "mka/compare.hpp"

#include "mka/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace mka {

bool structurally_equal(const WeightedAutomaton& p, const WeightedAutomaton& q) {
    return p.states == q.states && p.left == q.left && p.right == q.right &&
           p.top == q.top && p.bottom == q.bottom && p.table == q.table;
}

namespace {

// Per-state fingerprint: everything label-, weight- and interface-visible
// that a bijection must preserve, minus the target/source identities.
struct Signature {
    std::vector<std::string> out, in;
    std::vector<Name> top_points, bottom_points;

    bool operator<(const Signature& o) const {
        return std::tie(out, in, top_points, bottom_points) <
               std::tie(o.out, o.in, o.top_points, o.bottom_points);
    }
    bool operator==(const Signature& o) const {
        return out == o.out && in == o.in && top_points == o.top_points &&
               bottom_points == o.bottom_points;
    }
};

Signature signature_of(const WeightedAutomaton& a, const Name& s) {
    Signature sig;
    for (const auto& [k, w] : a.table) {
        std::string lbl = k.left.str() + "|" + k.right.str() + "|" + w.str();
        if (k.from == s) sig.out.push_back(lbl + (k.to == s ? "|self" : ""));
        if (k.to == s) sig.in.push_back(lbl + (k.from == s ? "|self" : ""));
    }
    std::sort(sig.out.begin(), sig.out.end());
    std::sort(sig.in.begin(), sig.in.end());
    for (const auto& [pt, st] : a.top)
        if (st == s) sig.top_points.push_back(pt);
    for (const auto& [pt, st] : a.bottom)
        if (st == s) sig.bottom_points.push_back(pt);
    return sig;
}

// Weighted edge profile between an ordered pair of states.
std::vector<std::string> pair_profile(const WeightedAutomaton& a, const Name& s,
                                      const Name& t) {
    std::vector<std::string> v;
    for (const auto& [k, w] : a.table)
        if (k.from == s && k.to == t)
            v.push_back(k.left.str() + "|" + k.right.str() + "|" + w.str());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

bool is_isomorphic(const WeightedAutomaton& p, const WeightedAutomaton& q,
                   int bound) {
    if (p.left != q.left || p.right != q.right) return false;
    if (p.states.size() != q.states.size()) return false;
    if (p.table.size() != q.table.size()) return false;
    auto keys = [](const InterfaceMap& m) {
        std::vector<Name> v;
        for (const auto& [pt, st] : m) v.push_back(pt);
        return v;
    };
    if (keys(p.top) != keys(q.top) || keys(p.bottom) != keys(q.bottom)) return false;

    size_t n = p.states.size();
    if (n == 0) return true;

    // Partition both state sets by signature; the partitions must match.
    std::map<Signature, std::vector<Name>> pc, qc;
    for (const auto& s : p.states) pc[signature_of(p, s)].push_back(s);
    for (const auto& s : q.states) qc[signature_of(q, s)].push_back(s);
    if (pc.size() != qc.size()) return false;
    for (auto itp = pc.begin(), itq = qc.begin(); itp != pc.end(); ++itp, ++itq) {
        if (!(itp->first == itq->first)) return false;
        if (itp->second.size() != itq->second.size()) return false;
    }

    bool forced = true;
    for (const auto& [sig, v] : pc)
        if (v.size() > 1) forced = false;
    if (!forced && n > static_cast<size_t>(bound))
        raise("TooLarge", "isomorphism search over " + std::to_string(n) +
                              " states exceeds bound " + std::to_string(bound));

    // Backtracking over signature classes, rarest class first.
    std::vector<std::pair<std::vector<Name>, std::vector<Name>>> classes;
    for (auto itp = pc.begin(), itq = qc.begin(); itp != pc.end(); ++itp, ++itq)
        classes.push_back({itp->second, itq->second});
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });

    std::vector<Name> order; // p states in assignment order
    for (const auto& c : classes)
        for (const auto& s : c.first) order.push_back(s);

    std::map<Name, Name> fwd;
    std::set<Name> used;

    // Interface compatibility for a candidate pair.
    auto iface_ok = [&](const Name& s, const Name& t) {
        for (const auto& [pt, st] : p.top)
            if (st == s && q.top.at(pt) != t) return false;
        for (const auto& [pt, st] : q.top)
            if (st == t && p.top.at(pt) != s) return false;
        for (const auto& [pt, st] : p.bottom)
            if (st == s && q.bottom.at(pt) != t) return false;
        for (const auto& [pt, st] : q.bottom)
            if (st == t && p.bottom.at(pt) != s) return false;
        return true;
    };

    std::function<bool(size_t)> assign = [&](size_t idx) {
        if (idx == order.size()) return true;
        const Name& s = order[idx];
        // Candidates: q states in s's signature class, not yet used.
        const std::vector<Name>* qclass = nullptr;
        for (const auto& c : classes)
            if (std::find(c.first.begin(), c.first.end(), s) != c.first.end()) {
                qclass = &c.second;
                break;
            }
        for (const auto& t : *qclass) {
            if (used.count(t) || !iface_ok(s, t)) continue;
            bool ok = true;
            for (const auto& [s2, t2] : fwd) {
                if (pair_profile(p, s, s2) != pair_profile(q, t, t2) ||
                    pair_profile(p, s2, s) != pair_profile(q, t2, t)) {
                    ok = false;
                    break;
                }
            }
            if (ok && pair_profile(p, s, s) != pair_profile(q, t, t)) ok = false;
            if (!ok) continue;
            fwd.emplace(s, t);
            used.insert(t);
            if (assign(idx + 1)) return true;
            fwd.erase(s);
            used.erase(t);
        }
        return false;
    };

    return assign(0);
}

} // namespace mka
