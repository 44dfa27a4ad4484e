#include "twotype/nonabelian.hpp"

#include <algorithm>

#include "twotype/error.hpp"

namespace tt {

AbElem AbelianPart::to_ab(int x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x) raise(ErrorKind::NotASubgroup, "element outside the abelian part");
    return coords[it - elems.begin()];
}

AbelianPart abelian_part(const FiniteGroup& g, const Subset& s) {
    if (!is_subgroup(g, s)) raise(ErrorKind::NotASubgroup, "not a subgroup");
    for (int a : s)
        for (int b : s)
            if (g.mul(a, b) != g.mul(b, a)) raise(ErrorKind::NotASubgroup, "subgroup is not abelian");
    FiniteGroup h = subgroup_as_group(g, s);
    std::vector<int> gens = min_generating_set(h);
    const int k = static_cast<int>(gens.size());
    AbelianPart out;
    out.elems = s;
    std::vector<long long> ord(k);
    long long e = 1;
    for (int i = 0; i < k; ++i) {
        ord[i] = h.elem_order(gens[i]);
        e = lcmll(e, ord[i]);
    }
    // exponent vectors over the box prod [0, ord_i); the first vector reaching
    // each element is its representative, the others give relations
    std::vector<AbElem> rep(h.order());
    std::vector<char> seen(h.order(), 0);
    std::vector<AbElem> rel;
    for (int i = 0; i < k; ++i) {
        AbElem r(k, 0);
        r[i] = ord[i];
        rel.push_back(r);
    }
    AbElem v(k, 0);
    while (true) {
        int x = 0;
        for (int i = 0; i < k; ++i)
            for (long long j = 0; j < v[i]; ++j) x = h.mul(x, gens[i]);
        if (!seen[x]) { seen[x] = 1; rep[x] = v; }
        else {
            AbElem d(k);
            for (int i = 0; i < k; ++i) d[i] = v[i] - rep[x][i];
            rel.push_back(d);
        }
        int i = k - 1;
        while (i >= 0 && v[i] + 1 == ord[i]) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    FinAbGroup free(std::vector<long long>(k, e));
    std::vector<AbElem> relr;
    for (auto& r : rel) relr.push_back(free.reduce(r));
    AbQuotient q = ab_quotient(free, relr);
    out.group = q.group;
    out.coords.resize(s.size());
    for (int x = 0; x < h.order(); ++x) {
        out.coords[x] = q.proj(free.reduce(rep[x]));
        out.elem_of[out.coords[x]] = s[x];
    }
    return out;
}

bool GroupAction::valid() const {
    if (static_cast<int>(maps.size()) != acting.order()) return false;
    for (int x = 0; x < acting.order(); ++x) {
        GroupHom h{target, target, maps[x]};
        if (!h.is_hom() || !h.injective()) return false;
    }
    for (int y = 0; y < target.order(); ++y)
        if (maps[0][y] != y) return false;
    for (int a = 0; a < acting.order(); ++a)
        for (int b = 0; b < acting.order(); ++b)
            for (int y = 0; y < target.order(); ++y)
                if (maps[acting.mul(a, b)][y] != maps[a][maps[b][y]]) return false;
    return true;
}

GroupAction GroupAction::trivial(const FiniteGroup& a, const FiniteGroup& t) {
    return {a, t, std::vector<std::vector<int>>(a.order(), GroupHom::identity(t).image)};
}

bool is_crossed_hom(const GroupAction& act, const std::vector<int>& c) {
    const FiniteGroup& P = act.acting;
    const FiniteGroup& G = act.target;
    if (static_cast<int>(c.size()) != P.order() || c[0] != 0) return false;
    for (int x = 0; x < P.order(); ++x)
        for (int y = 0; y < P.order(); ++y)
            if (c[P.mul(x, y)] != G.mul(c[x], act(x, c[y]))) return false;
    return true;
}

int NonabelianH1::class_index(const std::vector<int>& c) const {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), c);
    if (it == cocycles.end() || *it != c) return -1;
    return class_of[it - cocycles.begin()];
}

NonabelianH1 h1_nonabelian(const GroupAction& act, long long bound) {
    const FiniteGroup& P = act.acting;
    const FiniteGroup& G = act.target;
    std::vector<int> gens = min_generating_set(P);
    const int k = static_cast<int>(gens.size());
    double space = 1;
    for (int i = 0; i < k; ++i) space *= G.order();
    if (space > static_cast<double>(bound))
        raise(ErrorKind::TooLarge, "crossed homomorphism search space exceeds bound");
    NonabelianH1 out;
    std::vector<int> pick(k, 0);
    std::vector<int> c(P.order());
    while (true) {
        std::fill(c.begin(), c.end(), -1);
        c[0] = 0;
        std::vector<int> todo{0};
        bool ok = true;
        while (!todo.empty() && ok) {
            int x = todo.back();
            todo.pop_back();
            for (int i = 0; i < k && ok; ++i) {
                int y = P.mul(x, gens[i]);
                int v = G.mul(c[x], act(x, pick[i]));
                if (c[y] < 0) { c[y] = v; todo.push_back(y); }
                else if (c[y] != v) ok = false;
            }
        }
        if (ok && is_crossed_hom(act, c)) out.cocycles.push_back(c);
        int i = k - 1;
        while (i >= 0 && pick[i] + 1 == G.order()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    std::sort(out.cocycles.begin(), out.cocycles.end());
    out.class_of.assign(out.cocycles.size(), -1);
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
        if (out.class_of[i] >= 0) continue;
        int cls = static_cast<int>(out.reps.size());
        out.reps.push_back(out.cocycles[i]); // sorted order makes this the least member
        for (int g = 0; g < G.order(); ++g) {
            std::vector<int> d(P.order());
            for (int x = 0; x < P.order(); ++x) d[x] = G.mul(G.mul(G.inv(g), out.cocycles[i][x]), act(x, g));
            auto it = std::lower_bound(out.cocycles.begin(), out.cocycles.end(), d);
            out.class_of[it - out.cocycles.begin()] = cls;
        }
    }
    return out;
}

Subset h0_nonabelian(const GroupAction& act) {
    Subset out;
    for (int y = 0; y < act.target.order(); ++y) {
        bool fixed = true;
        for (int x = 0; x < act.acting.order() && fixed; ++x) fixed = act(x, y) == y;
        if (fixed) out.push_back(y);
    }
    return out;
}

} // namespace tt
