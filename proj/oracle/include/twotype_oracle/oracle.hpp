#pragma once

// Brute-force reference computations. They evaluate the defining equations
// directly over full enumerations and share only the group, abelian-group
// and module types with the library.

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "twotype/actions.hpp"

namespace tt::oracle {

// d -> |G[d]| over the divisors of the exponent; determines G up to isomorphism
struct Profile {
    long long order = 1;
    std::map<long long, long long> torsion;
    bool operator==(const Profile& o) const { return order == o.order && torsion == o.torsion; }
};

inline long long exponent(const FinAbGroup& a) {
    long long e = 1;
    for (long long d : a.factors()) e = std::lcm(e, d);
    return e;
}

inline Profile profile(const FinAbGroup& a) {
    Profile p;
    p.order = a.order();
    long long e = exponent(a);
    for (long long d = 1; d <= e; ++d) {
        if (e % d) continue;
        long long c = 1;
        for (long long f : a.factors()) c *= std::gcd(d, f);
        p.torsion[d] = c;
    }
    return p;
}

namespace detail {

// normalized tuples of non-identity arguments, lexicographic
inline std::vector<std::vector<int>> tuples(int g, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(n, 1);
    if (g < 2 && n > 0) return out;
    while (true) {
        out.push_back(x);
        int i = n - 1;
        while (i >= 0 && x[i] == g - 1) x[i--] = 1;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

struct Space {
    const PiModule* m;
    int n;
    std::vector<std::vector<int>> tup;
    std::map<std::vector<int>, int> pos;
    Space(const PiModule& mod, int deg) : m(&mod), n(deg), tup(tuples(mod.group.order(), deg)) {
        for (std::size_t i = 0; i < tup.size(); ++i) pos[tup[i]] = static_cast<int>(i);
    }
    // values indexed by tup; identity arguments read as zero
    AbElem get(const std::vector<AbElem>& c, const std::vector<int>& x) const {
        for (int v : x)
            if (v == 0) return m->coeff.zero();
        return c[pos.at(x)];
    }
};

// inhomogeneous bar differential, written out term by term
inline std::vector<AbElem> bar_d(const Space& src, const Space& dst, const std::vector<AbElem>& c) {
    const FiniteGroup& G = src.m->group;
    const FinAbGroup& A = src.m->coeff;
    std::vector<AbElem> out;
    const int n = src.n;
    for (const auto& x : dst.tup) {
        std::vector<int> tail(x.begin() + 1, x.end());
        AbElem v = src.m->act(x[0], src.get(c, tail));
        for (int i = 0; i < n; ++i) {
            std::vector<int> y;
            for (int j = 0; j < n + 1; ++j) {
                if (j == i) {
                    y.push_back(G.mul(x[j], x[j + 1]));
                    ++j;
                } else {
                    y.push_back(x[j]);
                }
            }
            AbElem t = src.get(c, y);
            v = (i % 2 == 0) ? A.sub(v, t) : A.add(v, t);
        }
        std::vector<int> head(x.begin(), x.end() - 1);
        AbElem t = src.get(c, head);
        v = (n % 2 == 0) ? A.sub(v, t) : A.add(v, t);
        out.push_back(A.reduce(v));
    }
    return out;
}

inline long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

template <class F>
void sweep(const FinAbGroup& A, std::size_t len, F&& f) {
    std::vector<AbElem> all = elements(A);
    std::vector<std::size_t> idx(len, 0);
    std::vector<AbElem> c(len, A.zero());
    while (true) {
        f(c);
        std::size_t i = 0;
        while (i < len && idx[i] + 1 == all.size()) {
            idx[i] = 0;
            c[i] = all[0];
            ++i;
        }
        if (i == len) break;
        c[i] = all[++idx[i]];
    }
}

} // namespace detail

// H^n by enumerating every normalized cochain; nullopt beyond the limit
inline std::optional<Profile> brute_cohomology(const PiModule& m, int n, long long limit = 1 << 20) {
    using namespace detail;
    const FinAbGroup& A = m.coeff;
    Space cn(m, n), cn1(m, n + 1);
    if (pow_ll(A.order(), static_cast<long long>(cn.tup.size())) > limit) return std::nullopt;
    std::set<std::vector<AbElem>> cocycles, boundaries;
    sweep(A, cn.tup.size(), [&](const std::vector<AbElem>& c) {
        auto d = bar_d(cn, cn1, c);
        bool zero = true;
        for (const auto& v : d) zero &= A.is_zero(v);
        if (zero) cocycles.insert(c);
    });
    if (n == 0) {
        boundaries.insert(std::vector<AbElem>(cn.tup.size(), A.zero()));
    } else {
        Space cm(m, n - 1);
        if (pow_ll(A.order(), static_cast<long long>(cm.tup.size())) > limit) return std::nullopt;
        sweep(A, cm.tup.size(), [&](const std::vector<AbElem>& c) { boundaries.insert(bar_d(cm, cn, c)); });
    }
    Profile p;
    long long zb = static_cast<long long>(cocycles.size()), b = static_cast<long long>(boundaries.size());
    p.order = zb / b;
    long long e = 1;
    for (long long d = 2; d <= p.order; ++d) {
        // exponent of the quotient: least d with d Z inside B
        bool all = true;
        for (const auto& z : cocycles) {
            std::vector<AbElem> y;
            for (const auto& v : z) y.push_back(A.scale(d, v));
            if (!boundaries.count(y)) { all = false; break; }
        }
        if (all) { e = d; break; }
    }
    if (p.order == 1) e = 1;
    for (long long d = 1; d <= e; ++d) {
        if (e % d) continue;
        long long c = 0;
        for (const auto& z : cocycles) {
            std::vector<AbElem> y;
            for (const auto& v : z) y.push_back(A.scale(d, v));
            c += boundaries.count(y);
        }
        p.torsion[d] = c / b;
    }
    return p;
}

namespace detail {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(p.size()); ++i) c += find(i) == i;
        return c;
    }
};

} // namespace detail

// (A, zeta) solving A_s A_t = Inn_{zeta(s,t)} A_st and the twisted cocycle
// condition, up to (Inn_eta A, eta_s A_s(eta_t) zeta(s,t) eta_st^-1).
// a2_elem maps pi2' elements to elements of gamma.
inline std::optional<long long> brute_0cells(const TwoType& acting, const FiniteGroup& G, const std::vector<int>& outer,
                                             const AbHom& a2, long long limit = 2'000'000) {
    using namespace detail;
    const FiniteGroup& P = acting.pi1;
    const int n = P.order(), g = G.order();
    const AutData aut = automorphisms(G);
    AbelianPart z = abelian_part(G, centre(G));
    std::vector<std::vector<int>> cand(n);
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < aut.aut.order(); ++i)
            if (aut.out_proj[i] == outer[t]) cand[t].push_back(i);
    cand[0] = {0};
    long long total = 1;
    for (int t = 1; t < n; ++t) total *= static_cast<long long>(cand[t].size());
    total *= pow_ll(g, static_cast<long long>(n - 1) * (n - 1));
    if (total > limit) return std::nullopt;
    auto app = [&](int a, int x) { return aut.maps[a][x]; };
    auto K = [&](int s, int t, int w) { return z.to_elem(a2(acting.k3.at({s, t, w}))); };
    struct Sol {
        std::vector<int> a, zeta;
        bool operator<(const Sol& o) const { return std::tie(a, zeta) < std::tie(o.a, o.zeta); }
    };
    std::vector<Sol> sols;
    std::vector<int> ai(n, 0), zeta(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> zi((n - 1) * (n - 1), 0);
    std::vector<int> a(n, 0);
    while (true) {
        for (int t = 0; t < n; ++t) a[t] = cand[t][ai[t]];
        std::fill(zi.begin(), zi.end(), 0);
        while (true) {
            for (int s = 1; s < n; ++s)
                for (int t = 1; t < n; ++t) zeta[s * n + t] = zi[(s - 1) * (n - 1) + t - 1];
            bool ok = true;
            for (int s = 0; s < n && ok; ++s)
                for (int t = 0; t < n && ok; ++t)
                    for (int x = 0; x < g && ok; ++x)
                        ok = app(a[s], app(a[t], x)) == G.conj(zeta[s * n + t], app(a[P.mul(s, t)], x));
            for (int s = 0; s < n && ok; ++s)
                for (int t = 0; t < n && ok; ++t)
                    for (int w = 0; w < n && ok; ++w) {
                        int l = G.mul(app(a[s], zeta[t * n + w]), zeta[s * n + P.mul(t, w)]);
                        int r = G.prod(K(s, t, w), zeta[s * n + t], zeta[P.mul(s, t) * n + w]);
                        ok = l == r;
                    }
            if (ok) sols.push_back({a, zeta});
            int i = 0;
            while (i < static_cast<int>(zi.size()) && zi[i] == g - 1) zi[i++] = 0;
            if (i == static_cast<int>(zi.size())) break;
            ++zi[i];
        }
        int t = 1;
        while (t < n && ai[t] + 1 == static_cast<int>(cand[t].size())) ai[t++] = 0;
        if (t >= n) break;
        ++ai[t];
    }
    std::map<Sol, int> id;
    for (std::size_t i = 0; i < sols.size(); ++i) id[sols[i]] = static_cast<int>(i);
    DSU dsu(static_cast<int>(sols.size()));
    std::vector<int> eta(n, 0);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        std::fill(eta.begin(), eta.end(), 0);
        while (true) {
            Sol r = sols[i];
            for (int t = 0; t < n; ++t) {
                std::vector<int> img(g);
                for (int x = 0; x < g; ++x) img[x] = G.conj(eta[t], app(sols[i].a[t], x));
                r.a[t] = aut.index_of(img);
            }
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    r.zeta[s * n + t] = G.prod(eta[s], app(sols[i].a[s], eta[t]), sols[i].zeta[s * n + t],
                                               G.inv(eta[P.mul(s, t)]));
            auto it = id.find(r);
            if (it == id.end()) return std::nullopt; // not closed: equations or transform disagree
            dsu.unite(static_cast<int>(i), it->second);
            int t = 1;
            while (t < n && eta[t] == g - 1) eta[t++] = 0;
            if (t >= n) break;
            ++eta[t];
        }
    }
    return dsu.classes();
}

// xi with f A'_w = Inn_{xi_w} B_w f and f(zeta'(s,t)) xi_st = xi_s B_s(xi_t) zeta''(p1 s, p1 t),
// up to xi_w -> phi xi_w B_w(phi)^-1 for phi centralising im f
inline std::optional<long long> brute_1cells(const OneCellSetting& s, const std::vector<int>& f,
                                             long long limit = 2'000'000) {
    using namespace detail;
    const PointedAction& A = s.src;
    const PointedAction& B = s.dst;
    const FiniteGroup& G2 = B.gamma;
    const int n = A.n(), g1 = A.gamma.order(), g2 = G2.order();
    if (pow_ll(g2, n) > limit) return std::nullopt;
    std::vector<int> bw(n);
    for (int w = 0; w < n; ++w) bw[w] = B.a[s.p1.image[w]];
    for (const AbElem& y : elements(A.acting.pi2->coeff))
        if (f[A.a2_elem(y)] != B.a2_elem(s.p2(y))) return 0;
    std::vector<std::vector<int>> sols;
    std::vector<int> xi(n, 0);
    while (true) {
        bool ok = true;
        for (int w = 0; w < n && ok; ++w)
            for (int x = 0; x < g1 && ok; ++x)
                ok = f[A.aut->apply(A.a[w], x)] == G2.conj(xi[w], B.aut->apply(bw[w], f[x]));
        for (int u = 0; u < n && ok; ++u)
            for (int w = 0; w < n && ok; ++w) {
                int l = G2.mul(f[A.zeta_at(u, w)], xi[A.acting.pi1.mul(u, w)]);
                int r = G2.prod(xi[u], B.aut->apply(bw[u], xi[w]), B.zeta_at(s.p1.image[u], s.p1.image[w]));
                ok = l == r;
            }
        if (ok) sols.push_back(xi);
        int i = 0;
        while (i < n && xi[i] == g2 - 1) xi[i++] = 0;
        if (i == n) break;
        ++xi[i];
    }
    std::map<std::vector<int>, int> id;
    for (std::size_t i = 0; i < sols.size(); ++i) id[sols[i]] = static_cast<int>(i);
    DSU dsu(static_cast<int>(sols.size()));
    for (int phi = 0; phi < g2; ++phi) {
        bool central = true;
        for (int x = 0; x < g1 && central; ++x) central = G2.mul(phi, f[x]) == G2.mul(f[x], phi);
        if (!central) continue;
        for (std::size_t i = 0; i < sols.size(); ++i) {
            std::vector<int> r(n);
            for (int w = 0; w < n; ++w) r[w] = G2.prod(phi, sols[i][w], G2.inv(B.aut->apply(bw[w], phi)));
            auto it = id.find(r);
            if (it == id.end()) return std::nullopt;
            dsu.unite(static_cast<int>(i), it->second);
        }
    }
    return dsu.classes();
}

} // namespace tt::oracle
