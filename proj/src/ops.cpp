#include "mka/ops.hpp"

#include "mka/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mka {

namespace {

// --- small union-find over indices ------------------------------------------

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Conditional tagging plan for a disjoint sum of named things.
struct SumPlan {
    bool tagged;
    Name left(const Name& n) const { return tagged ? Name::tagL(n) : n; }
    Name right(const Name& n) const { return tagged ? Name::tagR(n) : n; }
};

SumPlan plan_sum(const std::vector<Name>& a, const std::vector<Name>& b) {
    return SumPlan{names_collide(a, b)};
}

std::vector<Name> iface_domain(const InterfaceMap& m) {
    std::vector<Name> v;
    v.reserve(m.size());
    for (const auto& [pt, st] : m) v.push_back(pt);
    return v;
}

// Label pairing mirroring alphabet_product's unit absorption.
Name pair_label(const Alphabet& a, const Alphabet& b, const Name& x, const Name& y) {
    if (is_unit_alphabet(a)) return y;
    if (is_unit_alphabet(b)) return x;
    return Name::tuple({x, y});
}

void require_unique(const std::vector<Name>& names, const char* what) {
    std::set<Name> s(names.begin(), names.end());
    if (s.size() != names.size())
        raise("DuplicateName", std::string("name collision while forming ") + what);
}

// Flattened atomic parts of a name (tags are atomic; unit vanishes).
std::vector<Name> flat_parts(const Name& n) {
    if (n.is_unit()) return {};
    if (n.is_tuple()) return n.parts();
    return {n};
}

} // namespace

std::vector<Name> name_set_product(const std::vector<Name>& a,
                                   const std::vector<Name>& b) {
    std::vector<Name> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(Name::tuple({x, y}));
    return out;
}

std::vector<Name> name_set_sum(const std::vector<Name>& a,
                               const std::vector<Name>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    SumPlan plan = plan_sum(a, b);
    std::vector<Name> out;
    out.reserve(a.size() + b.size());
    for (const auto& x : a) out.push_back(plan.left(x));
    for (const auto& y : b) out.push_back(plan.right(y));
    return out;
}

// --- constants ---------------------------------------------------------------

WeightedAutomaton seq_constant(const SeqRelation& rel) {
    // Carrier X + Y indexed top-first.
    size_t nx = rel.top.size(), ny = rel.bottom.size();
    auto index_of = [&](const SeqPoint& p) -> int {
        const auto& v = p.top ? rel.top : rel.bottom;
        auto it = std::find(v.begin(), v.end(), p.name);
        if (it == v.end())
            raise("UnknownState", "relation pair mentions unknown carrier point '" +
                                      p.name.str() + "'");
        return static_cast<int>(it - v.begin()) + (p.top ? 0 : static_cast<int>(nx));
    };
    UnionFind uf(nx + ny);
    for (const auto& [a, b] : rel.pairs) uf.unite(index_of(a), index_of(b));

    auto carrier_name = [&](size_t i) {
        return i < nx ? rel.top[i] : rel.bottom[i - nx];
    };
    // Canonical class name: minimal member; tag-disambiguate the rare case of
    // distinct classes (one per carrier side) sharing the same minimal name.
    std::map<int, Name> class_name;
    for (size_t i = 0; i < nx + ny; ++i) {
        int root = uf.find(static_cast<int>(i));
        auto it = class_name.find(root);
        if (it == class_name.end() || carrier_name(i) < it->second)
            class_name[root] = carrier_name(i);
    }
    std::map<Name, int> seen;
    for (const auto& [root, nm] : class_name) seen[nm] += 1;
    // At most two classes can share a minimal name (one owning it as a top
    // point, one as a bottom point); tag by the side the class owns it on.
    for (auto& [root, nm] : class_name) {
        if (seen[nm] < 2) continue;
        auto it = std::find(rel.top.begin(), rel.top.end(), nm);
        bool owns_top = it != rel.top.end() &&
                        uf.find(static_cast<int>(it - rel.top.begin())) == root;
        nm = owns_top ? Name::tagL(nm) : Name::tagR(nm);
    }

    WeightedAutomaton out;
    std::vector<Name> states;
    for (const auto& [root, nm] : class_name) states.push_back(nm);
    require_unique(states, "relation quotient states");
    out.states = sorted_states(std::move(states));
    for (size_t i = 0; i < nx; ++i)
        out.top[rel.top[i]] = class_name[uf.find(static_cast<int>(i))];
    for (size_t j = 0; j < ny; ++j)
        out.bottom[rel.bottom[j]] = class_name[uf.find(static_cast<int>(nx + j))];
    return out;
}

WeightedAutomaton par_constant(const ParRelation& rel) {
    WeightedAutomaton out;
    out.states = {Name::unit()};
    out.left = rel.left;
    out.right = rel.right;
    out.top[Name::unit()] = Name::unit();
    out.bottom[Name::unit()] = Name::unit();
    for (const auto& [a, b] : rel.pairs)
        out.add(Name::unit(), a, b, Name::unit(), Weight::one());
    return out;
}

// --- sequential wires ----------------------------------------------------------

WeightedAutomaton seq_wire_identity(const std::vector<Name>& x) {
    SeqRelation rel;
    rel.top = x;
    rel.bottom = x;
    for (const auto& n : x)
        rel.pairs.push_back({SeqPoint{true, n}, SeqPoint{false, n}});
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_codiag(const std::vector<Name>& x) {
    SeqRelation rel;
    rel.top = name_set_sum(x, x);
    rel.bottom = x;
    for (const auto& n : x) {
        rel.pairs.push_back({SeqPoint{true, Name::tagL(n)}, SeqPoint{false, n}});
        rel.pairs.push_back({SeqPoint{true, Name::tagR(n)}, SeqPoint{false, n}});
    }
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_codiag_op(const std::vector<Name>& x) {
    SeqRelation rel;
    rel.top = x;
    rel.bottom = name_set_sum(x, x);
    for (const auto& n : x) {
        rel.pairs.push_back({SeqPoint{true, n}, SeqPoint{false, Name::tagL(n)}});
        rel.pairs.push_back({SeqPoint{true, n}, SeqPoint{false, Name::tagR(n)}});
    }
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_initial(const std::vector<Name>& x) {
    SeqRelation rel;
    rel.bottom = x;
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_initial_op(const std::vector<Name>& x) {
    SeqRelation rel;
    rel.top = x;
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_twist(const std::vector<Name>& x,
                                 const std::vector<Name>& y) {
    SeqRelation rel;
    rel.top = name_set_product(x, y);
    rel.bottom = name_set_product(y, x);
    for (const auto& a : x)
        for (const auto& b : y)
            rel.pairs.push_back({SeqPoint{true, Name::tuple({a, b})},
                                 SeqPoint{false, Name::tuple({b, a})}});
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_delta(const std::vector<Name>& x,
                                 const std::vector<Name>& y,
                                 const std::vector<Name>& z) {
    SeqRelation rel;
    std::vector<Name> xy = name_set_product(x, y), xz = name_set_product(x, z);
    SumPlan top_plan = plan_sum(xy, xz);
    rel.top = name_set_sum(xy, xz);
    SumPlan bot_plan = plan_sum(y, z);
    rel.bottom = name_set_product(x, name_set_sum(y, z));
    for (const auto& a : x) {
        for (const auto& b : y)
            rel.pairs.push_back(
                {SeqPoint{true, top_plan.left(Name::tuple({a, b}))},
                 SeqPoint{false, Name::tuple({a, bot_plan.left(b)})}});
        for (const auto& c : z)
            rel.pairs.push_back(
                {SeqPoint{true, top_plan.right(Name::tuple({a, c}))},
                 SeqPoint{false, Name::tuple({a, bot_plan.right(c)})}});
    }
    return seq_constant(rel);
}

WeightedAutomaton seq_wire_delta_inv(const std::vector<Name>& x,
                                     const std::vector<Name>& y,
                                     const std::vector<Name>& z) {
    WeightedAutomaton d = seq_wire_delta(x, y, z);
    std::swap(d.top, d.bottom);
    return d;
}

// --- parallel wires -------------------------------------------------------------

WeightedAutomaton par_wire_identity(const Alphabet& a) {
    ParRelation rel;
    rel.left = a;
    rel.right = a;
    for (const auto& l : a.labels) rel.pairs.push_back({l, l});
    return par_constant(rel);
}

WeightedAutomaton par_wire_diag(const Alphabet& a) {
    ParRelation rel;
    rel.left = a;
    rel.right = alphabet_product(a, a);
    for (const auto& l : a.labels)
        rel.pairs.push_back({l, pair_label(a, a, l, l)});
    return par_constant(rel);
}

WeightedAutomaton par_wire_diag_op(const Alphabet& a) {
    ParRelation rel;
    rel.left = alphabet_product(a, a);
    rel.right = a;
    for (const auto& l : a.labels)
        rel.pairs.push_back({pair_label(a, a, l, l), l});
    return par_constant(rel);
}

WeightedAutomaton par_wire_proj(const Alphabet& a) {
    ParRelation rel;
    rel.left = a;
    rel.right = alphabet_unit();
    for (const auto& l : a.labels) rel.pairs.push_back({l, Name::atom("eps")});
    return par_constant(rel);
}

WeightedAutomaton par_wire_proj_op(const Alphabet& a) {
    ParRelation rel;
    rel.left = alphabet_unit();
    rel.right = a;
    for (const auto& l : a.labels) rel.pairs.push_back({Name::atom("eps"), l});
    return par_constant(rel);
}

WeightedAutomaton par_wire_twist(const Alphabet& a, const Alphabet& b) {
    ParRelation rel;
    rel.left = alphabet_product(a, b);
    rel.right = alphabet_product(b, a);
    for (const auto& x : a.labels)
        for (const auto& y : b.labels)
            rel.pairs.push_back({pair_label(a, b, x, y), pair_label(b, a, y, x)});
    return par_constant(rel);
}

WeightedAutomaton par_wire_codiag(const Alphabet& a) {
    ParRelation rel;
    rel.left = alphabet_sum(a, a);
    rel.right = a;
    for (const auto& l : a.labels) {
        rel.pairs.push_back({Name::tagL(l), l});
        rel.pairs.push_back({Name::tagR(l), l});
    }
    return par_constant(rel);
}

WeightedAutomaton par_wire_codiag_op(const Alphabet& a) {
    ParRelation rel;
    rel.left = a;
    rel.right = alphabet_sum(a, a);
    for (const auto& l : a.labels) {
        rel.pairs.push_back({l, Name::tagL(l)});
        rel.pairs.push_back({l, Name::tagR(l)});
    }
    return par_constant(rel);
}

// --- binary operations ------------------------------------------------------------

WeightedAutomaton boxplus_sum(const WeightedAutomaton& p, const WeightedAutomaton& q) {
    SumPlan sp = plan_sum(p.states, q.states);
    SumPlan lp = plan_sum(p.left.labels, q.left.labels);
    SumPlan rp = plan_sum(p.right.labels, q.right.labels);
    SumPlan tp = plan_sum(iface_domain(p.top), iface_domain(q.top));
    SumPlan bp = plan_sum(iface_domain(p.bottom), iface_domain(q.bottom));

    WeightedAutomaton out;
    std::vector<Name> states;
    for (const auto& s : p.states) states.push_back(sp.left(s));
    for (const auto& s : q.states) states.push_back(sp.right(s));
    out.states = sorted_states(std::move(states));
    out.left = alphabet_sum(p.left, q.left);
    out.right = alphabet_sum(p.right, q.right);
    for (const auto& [pt, st] : p.top) out.top[tp.left(pt)] = sp.left(st);
    for (const auto& [pt, st] : q.top) out.top[tp.right(pt)] = sp.right(st);
    for (const auto& [pt, st] : p.bottom) out.bottom[bp.left(pt)] = sp.left(st);
    for (const auto& [pt, st] : q.bottom) out.bottom[bp.right(pt)] = sp.right(st);
    for (const auto& [k, w] : p.table)
        out.add(sp.left(k.from), lp.left(k.left), rp.left(k.right), sp.left(k.to), w);
    for (const auto& [k, w] : q.table)
        out.add(sp.right(k.from), lp.right(k.left), rp.right(k.right), sp.right(k.to), w);
    return out;
}

WeightedAutomaton seq_compose(const WeightedAutomaton& p, const WeightedAutomaton& q) {
    if (iface_domain(p.bottom) != iface_domain(q.top))
        raise("InterfaceMismatch",
              "sequential composition needs p.bottom domain == q.top domain");

    SumPlan sp = plan_sum(p.states, q.states);
    SumPlan lp = plan_sum(p.left.labels, q.left.labels);
    SumPlan rp = plan_sum(p.right.labels, q.right.labels);

    // Union-find over the tagged disjoint union of states.
    std::vector<Name> all;
    for (const auto& s : p.states) all.push_back(sp.left(s));
    for (const auto& s : q.states) all.push_back(sp.right(s));
    std::map<Name, int> idx;
    for (size_t i = 0; i < all.size(); ++i) idx[all[i]] = static_cast<int>(i);
    UnionFind uf(all.size());
    for (const auto& [y, st] : p.bottom)
        uf.unite(idx.at(sp.left(st)), idx.at(sp.right(q.top.at(y))));

    std::map<int, Name> class_name;
    for (size_t i = 0; i < all.size(); ++i) {
        int root = uf.find(static_cast<int>(i));
        auto it = class_name.find(root);
        if (it == class_name.end() || all[i] < it->second) class_name[root] = all[i];
    }
    auto cls = [&](const Name& n) { return class_name.at(uf.find(idx.at(n))); };

    WeightedAutomaton out;
    std::vector<Name> states;
    for (const auto& [root, nm] : class_name) states.push_back(nm);
    out.states = sorted_states(std::move(states));
    out.left = alphabet_sum(p.left, q.left);
    out.right = alphabet_sum(p.right, q.right);
    for (const auto& [pt, st] : p.top) out.top[pt] = cls(sp.left(st));
    for (const auto& [pt, st] : q.bottom) out.bottom[pt] = cls(sp.right(st));
    for (const auto& [k, w] : p.table)
        out.add(cls(sp.left(k.from)), lp.left(k.left), rp.left(k.right),
                cls(sp.left(k.to)), w);
    for (const auto& [k, w] : q.table)
        out.add(cls(sp.right(k.from)), lp.right(k.left), rp.right(k.right),
                cls(sp.right(k.to)), w);
    return out;
}

WeightedAutomaton parallel_product(const WeightedAutomaton& p,
                                   const WeightedAutomaton& q) {
    WeightedAutomaton out;
    std::vector<Name> states;
    states.reserve(p.states.size() * q.states.size());
    for (const auto& s : p.states)
        for (const auto& t : q.states) states.push_back(Name::tuple({s, t}));
    require_unique(states, "product states");
    out.states = sorted_states(std::move(states));
    out.left = alphabet_product(p.left, q.left);
    out.right = alphabet_product(p.right, q.right);
    require_unique(out.left.labels, "product left alphabet");
    require_unique(out.right.labels, "product right alphabet");
    for (const auto& [x, s] : p.top)
        for (const auto& [z, t] : q.top)
            out.top[Name::tuple({x, z})] = Name::tuple({s, t});
    for (const auto& [x, s] : p.bottom)
        for (const auto& [z, t] : q.bottom)
            out.bottom[Name::tuple({x, z})] = Name::tuple({s, t});
    for (const auto& [kp, wp] : p.table)
        for (const auto& [kq, wq] : q.table)
            out.add(Name::tuple({kp.from, kq.from}),
                    pair_label(p.left, q.left, kp.left, kq.left),
                    pair_label(p.right, q.right, kp.right, kq.right),
                    Name::tuple({kp.to, kq.to}), wp * wq);
    return out;
}

WeightedAutomaton communicating_parallel(const WeightedAutomaton& p,
                                         const WeightedAutomaton& q) {
    if (p.right != q.left)
        raise("InterfaceMismatch",
              "communicating composition needs p.right == q.left (same order, "
              "same epsilon)");

    WeightedAutomaton out;
    std::vector<Name> states;
    states.reserve(p.states.size() * q.states.size());
    for (const auto& s : p.states)
        for (const auto& t : q.states) states.push_back(Name::tuple({s, t}));
    require_unique(states, "product states");
    out.states = sorted_states(std::move(states));
    out.left = p.left;
    out.right = q.right;
    for (const auto& [x, s] : p.top)
        for (const auto& [z, t] : q.top)
            out.top[Name::tuple({x, z})] = Name::tuple({s, t});
    for (const auto& [x, s] : p.bottom)
        for (const auto& [z, t] : q.bottom)
            out.bottom[Name::tuple({x, z})] = Name::tuple({s, t});

    // Join on the shared middle label.
    std::map<Name, std::vector<const std::pair<const TransKey, Weight>*>> by_left;
    for (const auto& e : q.table) by_left[e.first.left].push_back(&e);
    for (const auto& [kp, wp] : p.table) {
        auto it = by_left.find(kp.right);
        if (it == by_left.end()) continue;
        for (const auto* eq : it->second)
            out.add(Name::tuple({kp.from, eq->first.from}), kp.left,
                    eq->first.right, Name::tuple({kp.to, eq->first.to}),
                    wp * eq->second);
    }
    return out;
}

namespace {

void require_aligned(const WeightedAutomaton& p, const WeightedAutomaton& q,
                     const char* op) {
    if (p.left != q.left || p.right != q.right)
        raise("InterfaceMismatch",
              std::string(op) + " needs both operands over the same left and "
                                "right alphabets");
}

} // namespace

WeightedAutomaton local_sum(const WeightedAutomaton& p, const WeightedAutomaton& q) {
    require_aligned(p, q, "local sum");
    return communicating_parallel(
        communicating_parallel(par_wire_codiag_op(p.left), boxplus_sum(p, q)),
        par_wire_codiag(p.right));
}

WeightedAutomaton local_seq(const WeightedAutomaton& p, const WeightedAutomaton& q) {
    require_aligned(p, q, "local sequential composition");
    return communicating_parallel(
        communicating_parallel(par_wire_codiag_op(p.left), seq_compose(p, q)),
        par_wire_codiag(p.right));
}

WeightedAutomaton sfb(const WeightedAutomaton& aut, const std::vector<Name>& zone) {
    for (const auto& z : zone) {
        if (!aut.top.count(z) || !aut.bottom.count(z))
            raise("InterfaceMismatch", "feedback zone point '" + z.str() +
                                           "' must be in both interface domains");
    }
    std::map<Name, int> idx;
    for (size_t i = 0; i < aut.states.size(); ++i)
        idx[aut.states[i]] = static_cast<int>(i);
    UnionFind uf(aut.states.size());
    for (const auto& z : zone)
        uf.unite(idx.at(aut.top.at(z)), idx.at(aut.bottom.at(z)));

    std::map<int, Name> class_name;
    for (size_t i = 0; i < aut.states.size(); ++i) {
        int root = uf.find(static_cast<int>(i));
        auto it = class_name.find(root);
        if (it == class_name.end() || aut.states[i] < it->second)
            class_name[root] = aut.states[i];
    }
    auto cls = [&](const Name& n) { return class_name.at(uf.find(idx.at(n))); };
    std::set<Name> zone_set(zone.begin(), zone.end());

    WeightedAutomaton out;
    std::vector<Name> states;
    for (const auto& [root, nm] : class_name) states.push_back(nm);
    out.states = sorted_states(std::move(states));
    out.left = aut.left;
    out.right = aut.right;
    for (const auto& [pt, st] : aut.top)
        if (!zone_set.count(pt)) out.top[pt] = cls(st);
    for (const auto& [pt, st] : aut.bottom)
        if (!zone_set.count(pt)) out.bottom[pt] = cls(st);
    for (const auto& [k, w] : aut.table)
        out.add(cls(k.from), k.left, k.right, cls(k.to), w);
    return out;
}

namespace {

// Recover A from a product alphabet prod == A x c (InterfaceMismatch if the
// block structure does not hold). prod == c yields the unit alphabet.
Alphabet factor_left_of_product(const Alphabet& prod, const Alphabet& c) {
    if (is_unit_alphabet(c)) return prod;
    if (prod == c) return alphabet_unit();
    size_t m = c.labels.size();
    if (m == 0 || prod.labels.size() % m != 0)
        raise("InterfaceMismatch", "alphabet is not a product with the feedback factor");
    size_t n = prod.labels.size() / m;
    Alphabet a;
    for (size_t i = 0; i < n; ++i) {
        const Name& l0 = prod.labels[i * m];
        const Name& c0 = c.labels[0];
        std::vector<Name> suffix = flat_parts(c0);
        Name cand;
        if (!l0.is_tuple() || l0.parts().size() <= suffix.size())
            raise("InterfaceMismatch", "label '" + l0.str() +
                                           "' does not factor over the feedback alphabet");
        const auto& parts = l0.parts();
        for (size_t j = 0; j < suffix.size(); ++j)
            if (parts[parts.size() - suffix.size() + j] != suffix[j])
                raise("InterfaceMismatch",
                      "label '" + l0.str() + "' does not end in '" + c0.str() + "'");
        cand = Name::tuple(std::vector<Name>(
            parts.begin(), parts.end() - static_cast<long>(suffix.size())));
        for (size_t j = 0; j < m; ++j)
            if (Name::tuple({cand, c.labels[j]}) != prod.labels[i * m + j])
                raise("InterfaceMismatch",
                      "alphabet is not the product of a left factor with the "
                      "feedback alphabet");
        a.labels.push_back(cand);
    }
    require_unique(a.labels, "factored alphabet");
    if (prod.epsilon && c.epsilon) {
        int pe = prod.index_of(*prod.epsilon);
        a.epsilon = a.labels[static_cast<size_t>(pe) / m];
    }
    return a;
}

} // namespace

WeightedAutomaton pfb(const WeightedAutomaton& aut, const Alphabet& c) {
    Alphabet a = factor_left_of_product(aut.left, c);
    Alphabet b = factor_left_of_product(aut.right, c);
    size_t m = std::max<size_t>(c.labels.size(), 1);

    WeightedAutomaton out;
    out.states = aut.states;
    out.left = a;
    out.right = b;
    out.top = aut.top;
    out.bottom = aut.bottom;
    bool left_is_c = aut.left == c && !is_unit_alphabet(c);
    bool right_is_c = aut.right == c && !is_unit_alphabet(c);
    for (const auto& [k, w] : aut.table) {
        size_t p = static_cast<size_t>(aut.left.index_of(k.left));
        size_t q = static_cast<size_t>(aut.right.index_of(k.right));
        if (p % m != q % m) continue;
        out.add(k.from, a.labels[left_is_c ? 0 : p / m],
                b.labels[right_is_c ? 0 : q / m], k.to, w);
    }
    return out;
}

WeightedAutomaton sfb_via_wires(const WeightedAutomaton& aut,
                                const std::vector<Name>& zone) {
    for (const auto& z : zone)
        if (!aut.top.count(z) || !aut.bottom.count(z))
            raise("InterfaceMismatch", "feedback zone point '" + z.str() +
                                           "' must be in both interface domains");
    std::set<Name> zone_set(zone.begin(), zone.end());
    std::vector<Name> x, y;
    for (const auto& [pt, st] : aut.top)
        if (!zone_set.count(pt)) x.push_back(pt);
    for (const auto& [pt, st] : aut.bottom)
        if (!zone_set.count(pt)) y.push_back(pt);
    std::vector<Name> z(zone_set.begin(), zone_set.end());

    WeightedAutomaton f1 = boxplus_sum(seq_wire_identity(x), seq_wire_initial(z));
    WeightedAutomaton f2 = boxplus_sum(seq_wire_identity(x), seq_wire_codiag_op(z));
    WeightedAutomaton f3 = boxplus_sum(aut, seq_wire_identity(z));
    WeightedAutomaton f4 = boxplus_sum(seq_wire_identity(y), seq_wire_codiag(z));
    WeightedAutomaton f5 = boxplus_sum(seq_wire_identity(y), seq_wire_initial_op(z));

    // boxplus tagged all of f3's interface points (aut's domains contain the
    // zone, so they collide with the 1_Z wire's). Align with f2/f4: the X and
    // Y points drop their L: tag, the zone copies keep their side tags.
    if (!z.empty()) {
        InterfaceMap top, bottom;
        for (const auto& [pt, st] : aut.top)
            top[zone_set.count(pt) ? Name::tagL(pt) : pt] = f3.top.at(Name::tagL(pt));
        for (const auto& zp : z) top[Name::tagR(zp)] = f3.top.at(Name::tagR(zp));
        for (const auto& [pt, st] : aut.bottom)
            bottom[zone_set.count(pt) ? Name::tagL(pt) : pt] =
                f3.bottom.at(Name::tagL(pt));
        for (const auto& zp : z) bottom[Name::tagR(zp)] = f3.bottom.at(Name::tagR(zp));
        f3.top = std::move(top);
        f3.bottom = std::move(bottom);
    }

    return seq_compose(seq_compose(seq_compose(seq_compose(f1, f2), f3), f4), f5);
}

WeightedAutomaton pfb_via_wires(const WeightedAutomaton& aut, const Alphabet& c) {
    Alphabet a = factor_left_of_product(aut.left, c);
    Alphabet b = factor_left_of_product(aut.right, c);
    WeightedAutomaton g1 = parallel_product(par_wire_identity(a), par_wire_proj_op(c));
    WeightedAutomaton g2 = parallel_product(par_wire_identity(a), par_wire_diag(c));
    WeightedAutomaton g3 = parallel_product(aut, par_wire_identity(c));
    WeightedAutomaton g4 = parallel_product(par_wire_identity(b), par_wire_diag_op(c));
    WeightedAutomaton g5 = parallel_product(par_wire_identity(b), par_wire_proj(c));
    return communicating_parallel(
        communicating_parallel(
            communicating_parallel(communicating_parallel(g1, g2), g3), g4),
        g5);
}

} // namespace mka
