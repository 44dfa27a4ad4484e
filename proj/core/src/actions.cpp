#include "twotype/actions.hpp"

#include <algorithm>
#include <numeric>

#include "twotype/error.hpp"

namespace tt {

namespace {

std::string args_str(const Args& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

ActionReport fail(std::string what, Args w) { return {false, std::move(what), std::move(w)}; }

int least_conjugator(const AutData& aut, int inner_index) {
    for (int g = 0; g < aut.group.order(); ++g)
        if (aut.inn_of[g] == inner_index) return g;
    return -1;
}

// images of the basis of src under x -> to_ab(map(to_elem(x)))
AbHom centre_map(const AbelianPart& src, const AbelianPart& dst, const std::vector<int>& map) {
    std::vector<AbElem> cols;
    for (int i = 0; i < src.group.rank(); ++i) cols.push_back(dst.to_ab(map[src.to_elem(src.group.basis(i))]));
    return AbHom::from_images(src.group, dst.group, cols);
}

} // namespace

PointedAction PointedAction::make(TwoType acting, FiniteGroup gamma, std::vector<int> a, std::vector<int> zeta,
                                  AbHom a2) {
    PointedAction p;
    p.aut = std::make_shared<const AutData>(automorphisms(gamma));
    p.centre = abelian_part(gamma, tt::centre(gamma));
    p.acting = std::move(acting);
    p.gamma = std::move(gamma);
    p.a = std::move(a);
    p.zeta = std::move(zeta);
    p.a2 = std::move(a2);
    return p;
}

PointedAction PointedAction::trivial(TwoType acting, FiniteGroup gamma) {
    const int n = acting.pi1.order();
    FinAbGroup src = acting.pi2->coeff;
    AbelianPart z = abelian_part(gamma, tt::centre(gamma));
    return make(std::move(acting), std::move(gamma), std::vector<int>(n, 0),
                std::vector<int>(static_cast<std::size_t>(n) * n, 0), AbHom::zero(src, z.group));
}

ModuleRef PointedAction::centre_module() const {
    PiModule m{acting.pi1, centre.group, {}};
    for (int t = 0; t < n(); ++t) m.action.push_back(centre_map(centre, centre, aut->maps[a[t]]));
    return make_module(std::move(m));
}

int PointedAction::defect(int s, int t, int w) const {
    const FiniteGroup& P = acting.pi1;
    const FiniteGroup& G = gamma;
    int lhs = G.mul(aut->apply(a[s], zeta_at(t, w)), zeta_at(s, P.mul(t, w)));
    int rhs = G.mul(zeta_at(s, t), zeta_at(P.mul(s, t), w));
    return G.mul(lhs, G.inv(rhs));
}

bool PointedAction::operator==(const PointedAction& o) const {
    return acting.pi1 == o.acting.pi1 && acting.k3 == o.acting.k3 && gamma == o.gamma && a == o.a &&
           zeta == o.zeta && a2 == o.a2;
}

ActionReport validate_action(const PointedAction& p) {
    const int n = p.n();
    const FiniteGroup& P = p.acting.pi1;
    const AutData& aut = *p.aut;
    if (static_cast<int>(p.a.size()) != n || p.zeta.size() != static_cast<std::size_t>(n) * n)
        return fail("data has the wrong size", {});
    for (int t = 0; t < n; ++t)
        if (p.a[t] < 0 || p.a[t] >= aut.aut.order()) return fail("A is not an automorphism index", {t});
    for (int x : p.zeta)
        if (x < 0 || x >= p.gamma.order()) return fail("zeta leaves gamma", {});
    if (p.a[0] != 0) return fail("A(1) is not the identity", {0});
    for (int t = 0; t < n; ++t)
        if (p.zeta_at(0, t) != 0 || p.zeta_at(t, 0) != 0) return fail("zeta is not normalized", {t});
    if (!(p.a2.source == p.acting.pi2->coeff) || !(p.a2.target == p.centre.group) || !p.a2.well_defined())
        return fail("A2 is not a map pi2' -> Z(gamma)", {});
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t)
            if (aut.aut.mul(p.a[s], p.a[t]) != aut.aut.mul(aut.inn_of[p.zeta_at(s, t)], p.a[P.mul(s, t)]))
                return fail("A_s A_t != Inn_zeta A_st at " + args_str({s, t}), {s, t});
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t)
            for (int w = 1; w < n; ++w)
                if (p.defect(s, t, w) != p.a2_elem(p.acting.k3.at({s, t, w})))
                    return fail("twisted differential of zeta != A2 K3' at " + args_str({s, t, w}), {s, t, w});
    const PiModule& m = *p.acting.pi2;
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < m.coeff.rank(); ++i) {
            AbElem y = m.coeff.basis(i);
            if (p.a2_elem(m.act(t, y)) != aut.apply(p.a[t], p.a2_elem(y)))
                return fail("A2 is not equivariant at " + args_str({t, i}), {t, i});
        }
    return {};
}

Cochain inflation_correction(const PointedAction& a, const TwoType& ambient, const CoinducedModule& cm,
                             const AbHom& q) {
    const CosetSection& s = *cm.section;
    const FiniteGroup& G = ambient.pi1;
    const int F = s.cosets();
    const int k = a.centre.group.rank();
    Cochain out(cm.module, 2);
    const FinAbGroup& Q = ambient.pi2->coeff;
    for (int t = 1; t < G.order(); ++t)
        for (int w = 1; w < G.order(); ++w) {
            AbElem v(static_cast<std::size_t>(k) * F, 0);
            for (int x = 0; x < F; ++x) {
                int r = s.transversal()[x];
                int rt = G.mul(r, t);
                AbElem h = ambient.k3.at({r, t, w});
                h = Q.sub(h, ambient.k3.at({s.prime(rt), s.bar(rt), w}));
                h = Q.add(h, ambient.k3.at({s.prime(rt), s.prime(G.mul(s.bar(rt), w)), s.bar(G.mul(rt, w))}));
                AbElem z = a.a2(q(h));
                for (int i = 0; i < k; ++i) v[cm.coord(i, x)] = z[i];
            }
            out.set({t, w}, v);
        }
    return out;
}

TransitiveAction inflate_action(const PointedAction& a, const TwoType& ambient, const CosetSection& section,
                                const AbHom& q) {
    if (!(section.group() == ambient.pi1)) raise(ErrorKind::SectionMismatch, "section is over another group");
    if (!(section.subgroup_group() == a.acting.pi1))
        raise(ErrorKind::SectionMismatch, "section subgroup differs from the acting group");
    const PiModule& big = *ambient.pi2;
    const PiModule& small = *a.acting.pi2;
    if (!(q.source == big.coeff) || !(q.target == small.coeff) || !q.well_defined())
        raise(ErrorKind::IncompatibleTypes, "q is not a map pi2 -> pi2'");
    if (static_cast<long long>(ab_image(q).group.order()) != small.coeff.order())
        raise(ErrorKind::IncompatibleTypes, "q is not surjective");
    const FiniteGroup& H = a.acting.pi1;
    for (int t = 0; t < H.order(); ++t)
        for (int i = 0; i < big.coeff.rank(); ++i) {
            AbElem y = big.coeff.basis(i);
            if (q(big.act(section.global(t), y)) != small.act(t, q(y)))
                raise(ErrorKind::IncompatibleTypes, "q is not equivariant");
        }
    for (std::size_t i = 0; i < a.acting.k3.tuples(); ++i) {
        Args x = a.acting.k3.args(i);
        Args g = x;
        for (int& v : g) v = section.global(v);
        if (q(ambient.k3.at(g)) != a.acting.k3.at_index(i))
            raise(ErrorKind::IncompatibleTypes, "q K3 restricted differs from K3' at " + args_str(x));
    }
    ActionReport rep = validate_action(a);
    if (!rep.ok) raise(ErrorKind::InvalidAction, rep.failure);

    TransitiveAction t;
    t.ambient = ambient;
    t.section = std::make_shared<const CosetSection>(section);
    t.q = q;
    t.pointed = a;
    t.coinduced = CoinducedModule::build(section, a.centre_module());
    const FiniteGroup& G = ambient.pi1;
    const int n = G.order();
    const int F = section.cosets();
    const auto& reps = section.transversal();
    t.perm.resize(static_cast<std::size_t>(n) * F);
    t.a.resize(static_cast<std::size_t>(n) * F);
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < F; ++x) {
            t.perm[w * F + x] = section.coset_of(G.mul(reps[x], G.inv(w)));
            t.a[w * F + x] = a.a[section.prime_local(G.mul(reps[x], w))];
        }
    const int k = a.centre.group.rank();
    std::vector<AbElem> cols;
    for (int i = 0; i < big.coeff.rank(); ++i) {
        AbElem v(static_cast<std::size_t>(k) * F, 0);
        for (int x = 0; x < F; ++x) {
            AbElem z = a.a2(q(big.act(reps[x], big.coeff.basis(i))));
            for (int j = 0; j < k; ++j) v[t.coinduced.coord(j, x)] = z[j];
        }
        cols.push_back(v);
    }
    t.a2 = AbHom::from_images(big.coeff, t.coinduced.module->coeff, cols);
    t.k = inflation_correction(a, ambient, t.coinduced, q);
    t.zeta.resize(static_cast<std::size_t>(n) * n * F);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            AbElem kv = t.k.at({u, w});
            for (int x = 0; x < F; ++x) {
                int ru = G.mul(reps[x], u);
                int inf = a.zeta_at(section.prime_local(ru), section.prime_local(G.mul(section.bar(ru), w)));
                int corr = a.centre.to_elem(t.coinduced.eval(kv, x));
                t.zeta[(static_cast<std::size_t>(u) * n + w) * F + x] = a.gamma.mul(inf, corr);
            }
        }
    return t;
}

ActionReport validate_transitive(const TransitiveAction& t) {
    const FiniteGroup& G = t.ambient.pi1;
    const FiniteGroup& Gam = t.pointed.gamma;
    const AutData& aut = *t.pointed.aut;
    const int n = G.order();
    const int F = t.cosets();
    auto perm = [&](int w, int x) { return t.perm[w * F + x]; };
    auto A = [&](int w, int x) { return t.a[w * F + x]; };
    for (int x = 0; x < F; ++x)
        if (perm(0, x) != x || A(0, x) != 0) return fail("the identity acts nontrivially", {0, x});
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            for (int x = 0; x < F; ++x)
                if (perm(u, perm(w, x)) != perm(G.mul(u, w), x))
                    return fail("the permutations are not a left action at " + args_str({u, w, x}), {u, w, x});
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            for (int y = 0; y < F; ++y) {
                int lhs = aut.aut.mul(A(u, y), A(w, perm(G.inv(u), y)));
                int rhs = aut.aut.mul(aut.inn_of[t.zeta_at(u, w, y)], A(G.mul(u, w), y));
                if (lhs != rhs) return fail("A_t A_w != Inn_zeta A_tw at " + args_str({u, w, y}), {u, w, y});
            }
    const AbelianPart& Z = t.pointed.centre;
    for (int s = 1; s < n; ++s)
        for (int u = 1; u < n; ++u)
            for (int w = 1; w < n; ++w) {
                AbElem target = t.a2(t.ambient.k3.at({s, u, w}));
                for (int x = 0; x < F; ++x) {
                    int l = Gam.mul(aut.apply(A(s, x), t.zeta_at(u, w, perm(G.inv(s), x))),
                                    t.zeta_at(s, G.mul(u, w), x));
                    int r = Gam.mul(t.zeta_at(s, u, x), t.zeta_at(G.mul(s, u), w, x));
                    if (Gam.mul(l, Gam.inv(r)) != Z.to_elem(t.coinduced.eval(target, x)))
                        return fail("twisted differential of zeta != A2 K3 at " + args_str({s, u, w, x}),
                                    {s, u, w, x});
                }
            }
    const PiModule& big = *t.ambient.pi2;
    for (int w = 0; w < n; ++w)
        for (int i = 0; i < big.coeff.rank(); ++i) {
            AbElem y = big.coeff.basis(i);
            if (t.a2(big.act(w, y)) != t.coinduced.module->act(w, t.a2(y)))
                return fail("A2 is not equivariant at " + args_str({w, i}), {w, i});
        }
    if (!(restrict_to_pointed(t) == t.pointed)) return fail("restriction does not recover the pointed action", {});
    return {};
}

PointedAction restrict_to_pointed(const TransitiveAction& t) {
    const CosetSection& s = *t.section;
    const int F = t.cosets();
    const int m = s.subgroup_group().order();
    const int n = t.n();
    PointedAction p = t.pointed;
    for (int u = 0; u < m; ++u) p.a[u] = t.a[s.global(u) * F];
    for (int u = 0; u < m; ++u)
        for (int w = 0; w < m; ++w)
            p.zeta[u * m + w] = t.zeta[(static_cast<std::size_t>(s.global(u)) * n + s.global(w)) * F];
    const FinAbGroup& big = t.ambient.pi2->coeff;
    const FinAbGroup& small = p.acting.pi2->coeff;
    std::vector<AbElem> lift(small.rank());
    std::vector<char> found(small.rank(), 0);
    for (const AbElem& y : elements(big)) {
        AbElem qy = t.q(y);
        for (int i = 0; i < small.rank(); ++i)
            if (!found[i] && qy == small.basis(i)) {
                lift[i] = y;
                found[i] = 1;
            }
    }
    std::vector<AbElem> cols;
    for (int i = 0; i < small.rank(); ++i) cols.push_back(t.coinduced.eval(t.a2(lift[i]), 0));
    p.a2 = AbHom::from_images(small, p.centre.group, cols);
    return p;
}

ZeroCellClasses classify_0cells(const TwoType& acting, const FiniteGroup& gamma, const std::vector<int>& outer,
                                const AbHom& a2) {
    ZeroCellClasses out;
    out.outer = outer;
    PointedAction base = PointedAction::trivial(acting, gamma);
    const AutData& aut = *base.aut;
    const FiniteGroup& P = acting.pi1;
    const int n = P.order();
    if (static_cast<int>(outer.size()) != n || !GroupHom{P, aut.out, outer}.is_hom())
        raise(ErrorKind::NotAHomomorphism, "outer representation is not a homomorphism");
    for (int t = 0; t < n; ++t) base.a[t] = aut.out_section[outer[t]];
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int inner = aut.aut.mul(aut.aut.mul(base.a[s], base.a[t]), aut.aut.inv(base.a[P.mul(s, t)]));
            base.zeta[s * n + t] = least_conjugator(aut, inner);
        }
    base.a2 = a2;
    ModuleRef zmod = base.centre_module();
    if (!(a2.source == acting.pi2->coeff) || !(a2.target == base.centre.group) || !a2.well_defined())
        raise(ErrorKind::NotEquivariant, "A2 is not a map pi2' -> Z(gamma)");
    if (!equivariant(a2, *acting.pi2, *zmod)) raise(ErrorKind::NotEquivariant, "A2 does not intertwine the actions");
    Cochain c0(zmod, 3);
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t)
            for (int w = 1; w < n; ++w) c0.set({s, t, w}, base.centre.to_ab(base.defect(s, t, w)));
    Cochain pushed = push_forward(acting.k3, a2, zmod);
    Cohomology h3(zmod, 3);
    Cochain diff = c0 - pushed;
    out.obstruction_group = h3.group();
    out.obstruction = h3.classify(diff);
    auto h2 = std::make_shared<const Cohomology>(zmod, 2);
    out.h2 = h2;
    out.torsor_group = h2->group();
    if (!h3.group().is_zero(out.obstruction)) {
        out.empty = true;
        return out;
    }
    Cochain b0 = -*h3.witness(diff);
    for (const AbElem& e : elements(h2->group())) {
        Cochain b = b0 + h2->representative(e);
        PointedAction p = base;
        for (int s = 1; s < n; ++s)
            for (int t = 1; t < n; ++t)
                p.zeta[s * n + t] = gamma.mul(base.zeta_at(s, t), base.centre.to_elem(b.at({s, t})));
        out.classes.push_back(std::move(p));
    }
    // automorphisms of gamma preserving the outer representation and A2
    const FiniteGroup& Out = aut.out;
    for (int phi = 0; phi < aut.aut.order(); ++phi) {
        int o = aut.out_proj[phi];
        bool keep = true;
        for (int t = 0; t < n && keep; ++t) keep = Out.mul(o, outer[t]) == Out.mul(outer[t], o);
        for (int i = 0; i < acting.pi2->coeff.rank() && keep; ++i) {
            int z = base.a2_elem(acting.pi2->coeff.basis(i));
            keep = aut.apply(phi, z) == z;
        }
        if (keep) out.stabiliser.push_back(phi);
    }
    const int m = static_cast<int>(out.classes.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int c = 0; c < m; ++c)
        for (int phi : out.stabiliser) {
            const PointedAction& p = out.classes[c];
            PointedAction r = p;
            for (int t = 0; t < n; ++t) r.a[t] = aut.aut.mul(aut.aut.mul(phi, p.a[t]), aut.aut.inv(phi));
            for (std::size_t i = 0; i < p.zeta.size(); ++i) r.zeta[i] = aut.apply(phi, p.zeta[i]);
            int d = zero_cell_class(out, r);
            if (d < 0) raise(ErrorKind::InvalidAction, "automorphism moved a class outside the classification");
            int x = find(c), y = find(d);
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
    out.orbit.resize(m);
    for (int c = 0; c < m; ++c) out.orbit[c] = find(c);
    return out;
}

int zero_cell_class(const ZeroCellClasses& c, const PointedAction& p) {
    if (c.empty || c.classes.empty()) return -1;
    const PointedAction& base = c.classes[0];
    if (!(p.acting.pi1 == base.acting.pi1) || !(p.gamma == base.gamma) || !(p.a2 == base.a2)) return -1;
    if (!validate_action(p).ok) return -1;
    const AutData& aut = *base.aut;
    const FiniteGroup& P = base.acting.pi1;
    const FiniteGroup& G = base.gamma;
    const int n = P.order();
    std::vector<int> eta(n);
    for (int t = 0; t < n; ++t) {
        if (aut.out_proj[p.a[t]] != c.outer[t]) return -1;
        eta[t] = least_conjugator(aut, aut.aut.mul(p.a[t], aut.aut.inv(base.a[t])));
    }
    ModuleRef zmod = base.centre_module();
    Cochain b(zmod, 2);
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t) {
            int moved = G.mul(G.mul(G.inv(aut.apply(base.a[s], eta[t])), G.inv(eta[s])),
                              G.mul(p.zeta_at(s, t), eta[P.mul(s, t)]));
            int diff = G.mul(G.inv(base.zeta_at(s, t)), moved);
            b.set({s, t}, base.centre.to_ab(diff));
        }
    AbElem cls = c.h2->classify(b);
    return static_cast<int>(c.h2->group().index(cls));
}

namespace {

std::vector<int> b_map(const OneCellSetting& s, int w) { return s.dst.aut->maps[s.dst.a[s.p1(w)]]; }

void check_setting(const OneCellSetting& s) {
    const FiniteGroup& P1 = s.src.acting.pi1;
    const FiniteGroup& P2 = s.dst.acting.pi1;
    if (!(s.p1.source == P1) || !(s.p1.target == P2) || !s.p1.is_hom() || !s.p1.injective())
        raise(ErrorKind::IncompatibleTypes, "p1 is not an injective homomorphism pi1' -> pi1''");
    const PiModule& m1 = *s.src.acting.pi2;
    const PiModule& m2 = *s.dst.acting.pi2;
    if (!(s.p2.source == m1.coeff) || !(s.p2.target == m2.coeff) || !s.p2.well_defined())
        raise(ErrorKind::IncompatibleTypes, "p2 is not a map pi2' -> pi2''");
    if (static_cast<long long>(ab_image(s.p2).group.order()) != m2.coeff.order())
        raise(ErrorKind::IncompatibleTypes, "p2 is not surjective");
    ModuleRef pulled = make_module(PiModule::pullback(m2, s.p1));
    if (!equivariant(s.p2, m1, *pulled)) raise(ErrorKind::IncompatibleTypes, "p2 is not equivariant");
    if (push_forward(s.src.acting.k3, s.p2, pulled) != pull_back(s.dst.acting.k3, s.p1, pulled))
        raise(ErrorKind::IncompatibleTypes, "p2 K3' differs from p1^* K3''");
    for (const PointedAction* p : {&s.src, &s.dst}) {
        ActionReport r = validate_action(*p);
        if (!r.ok) raise(ErrorKind::InvalidAction, r.failure);
    }
}

bool conjugates_to(const FiniteGroup& G, int x, const std::vector<int>& from, const std::vector<int>& to) {
    for (std::size_t i = 0; i < from.size(); ++i)
        if (G.conj(x, from[i]) != to[i]) return false;
    return true;
}

} // namespace

bool is_one_cell(const OneCellSetting& s, const OneCell& c) {
    const FiniteGroup& G1 = s.src.gamma;
    const FiniteGroup& G2 = s.dst.gamma;
    const FiniteGroup& P = s.src.acting.pi1;
    const int n = P.order();
    if (static_cast<int>(c.f.size()) != G1.order() || static_cast<int>(c.xi.size()) != n) return false;
    if (!GroupHom{G1, G2, c.f}.is_hom() || c.xi[0] != 0) return false;
    const AutData& a1 = *s.src.aut;
    const AutData& a2 = *s.dst.aut;
    for (int w = 0; w < n; ++w) {
        const auto& B = b_map(s, w);
        for (int x = 0; x < G1.order(); ++x)
            if (c.f[a1.apply(s.src.a[w], x)] != G2.conj(c.xi[w], B[c.f[x]])) return false;
    }
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            int lhs = G2.mul(c.f[s.src.zeta_at(u, w)], c.xi[P.mul(u, w)]);
            int rhs = G2.prod(c.xi[u], a2.apply(s.dst.a[s.p1(u)], c.xi[w]), s.dst.zeta_at(s.p1(u), s.p1(w)));
            if (lhs != rhs) return false;
        }
    const FinAbGroup& pi2 = s.src.acting.pi2->coeff;
    for (int i = 0; i < pi2.rank(); ++i) {
        AbElem y = pi2.basis(i);
        if (c.f[s.src.a2_elem(y)] != s.dst.a2_elem(s.p2(y))) return false;
    }
    return true;
}

OneCellClasses classify_1cells(const OneCellSetting& s, const std::vector<int>& f) {
    check_setting(s);
    const FiniteGroup& G1 = s.src.gamma;
    const FiniteGroup& G2 = s.dst.gamma;
    const FiniteGroup& P = s.src.acting.pi1;
    const int n = P.order();
    if (!GroupHom{G1, G2, f}.is_hom()) raise(ErrorKind::NotAHomomorphism, "f is not a homomorphism");
    OneCellClasses out;
    out.f = f;
    Subset img(f.begin(), f.end());
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    out.centraliser = centralizer(G2, img);
    FiniteGroup C = subgroup_as_group(G2, out.centraliser);
    const AutData& a1 = *s.src.aut;
    const AutData& a2 = *s.dst.aut;
    std::vector<std::vector<int>> cand(n);
    for (int w = 0; w < n; ++w) {
        const auto& B = b_map(s, w);
        std::vector<int> from(G1.order()), to(G1.order());
        for (int x = 0; x < G1.order(); ++x) {
            from[x] = B[f[x]];
            to[x] = f[a1.apply(s.src.a[w], x)];
        }
        for (int g = 0; g < G2.order(); ++g)
            if (conjugates_to(G2, g, from, to)) cand[w].push_back(g);
        if (cand[w].empty()) {
            out.empty = true;
            return out;
        }
    }
    const FinAbGroup& pi2 = s.src.acting.pi2->coeff;
    for (int i = 0; i < pi2.rank(); ++i) {
        AbElem y = pi2.basis(i);
        if (f[s.src.a2_elem(y)] != s.dst.a2_elem(s.p2(y))) {
            out.empty = true;
            return out;
        }
    }
    // xi is determined by its values on generators
    std::vector<int> gens = min_generating_set(P);
    const int k = static_cast<int>(gens.size());
    std::vector<std::size_t> pick(k, 0);
    auto propagate = [&](std::vector<int>& xi) {
        std::fill(xi.begin(), xi.end(), -1);
        xi[0] = 0;
        std::vector<int> todo{0};
        while (!todo.empty()) {
            int u = todo.back();
            todo.pop_back();
            for (int i = 0; i < k; ++i) {
                int g = gens[i];
                int w = P.mul(u, g);
                int v = G2.prod(G2.inv(f[s.src.zeta_at(u, g)]), xi[u], a2.apply(s.dst.a[s.p1(u)], cand[g][pick[i]]),
                                s.dst.zeta_at(s.p1(u), s.p1(g)));
                if (xi[w] < 0) {
                    xi[w] = v;
                    todo.push_back(w);
                } else if (xi[w] != v) return false;
            }
        }
        return true;
    };
    std::vector<int> xi(n);
    while (true) {
        if (propagate(xi) && is_one_cell(s, {f, xi})) {
            out.base = OneCell{f, xi};
            break;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] + 1 == cand[gens[i]].size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    if (!out.base) {
        out.empty = true;
        return out;
    }
    GroupAction act{P, C, {}};
    for (int w = 0; w < n; ++w) {
        const auto& B = b_map(s, w);
        std::vector<int> m(C.order());
        for (int i = 0; i < C.order(); ++i) {
            int c = G2.conj(out.base->xi[w], B[out.centraliser[i]]);
            m[i] = static_cast<int>(std::lower_bound(out.centraliser.begin(), out.centraliser.end(), c) -
                                    out.centraliser.begin());
        }
        act.maps.push_back(m);
    }
    out.twisted = act;
    out.h1 = h1_nonabelian(act);
    for (const auto& r : out.h1.reps) {
        OneCell c{f, out.base->xi};
        for (int w = 0; w < n; ++w) c.xi[w] = G2.mul(out.centraliser[r[w]], c.xi[w]);
        out.classes.push_back(c);
    }
    return out;
}

bool is_two_cell(const OneCellSetting& s, const OneCell& from, const OneCell& to, int phi) {
    const FiniteGroup& G2 = s.dst.gamma;
    if (!conjugates_to(G2, phi, from.f, to.f)) return false;
    for (int w = 0; w < s.src.acting.pi1.order(); ++w) {
        int b = s.dst.aut->apply(s.dst.a[s.p1(w)], phi);
        if (to.xi[w] != G2.prod(phi, from.xi[w], G2.inv(b))) return false;
    }
    return true;
}

TwoCellClasses classify_2cells(const OneCellSetting& s, const OneCell& from, const OneCell& to) {
    check_setting(s);
    if (!is_one_cell(s, from) || !is_one_cell(s, to)) raise(ErrorKind::IncompatibleTypes, "not a 1-cell");
    const FiniteGroup& G2 = s.dst.gamma;
    const FiniteGroup& P = s.src.acting.pi1;
    const int n = P.order();
    TwoCellClasses out;
    Subset img(from.f.begin(), from.f.end());
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    out.centraliser = centralizer(G2, img);
    for (int x : out.centraliser) {
        bool fixed = true;
        for (int w = 0; w < n && fixed; ++w)
            fixed = G2.conj(from.xi[w], s.dst.aut->apply(s.dst.a[s.p1(w)], x)) == x;
        if (fixed) out.fixed.push_back(x);
    }
    int phi0 = -1;
    for (int g = 0; g < G2.order() && phi0 < 0; ++g)
        if (conjugates_to(G2, g, from.f, to.f)) phi0 = g;
    if (phi0 < 0) {
        out.empty = true;
        out.reason = "the homomorphisms are not conjugate";
        return out;
    }
    // transport (f, xi) along phi0 and compare with (g, eta) in H^1(pi1', C_g)
    Subset img2(to.f.begin(), to.f.end());
    std::sort(img2.begin(), img2.end());
    img2.erase(std::unique(img2.begin(), img2.end()), img2.end());
    Subset cg = centralizer(G2, img2);
    std::vector<int> moved(n), diff(n);
    for (int w = 0; w < n; ++w) {
        int b = s.dst.aut->apply(s.dst.a[s.p1(w)], phi0);
        moved[w] = G2.prod(phi0, from.xi[w], G2.inv(b));
        int d = G2.mul(to.xi[w], G2.inv(moved[w]));
        auto it = std::lower_bound(cg.begin(), cg.end(), d);
        if (it == cg.end() || *it != d) {
            out.empty = true;
            out.reason = "the transported cocycle leaves the centraliser";
            return out;
        }
        diff[w] = static_cast<int>(it - cg.begin());
    }
    FiniteGroup C = subgroup_as_group(G2, cg);
    GroupAction act{P, C, {}};
    for (int w = 0; w < n; ++w) {
        std::vector<int> m(C.order());
        for (int i = 0; i < C.order(); ++i) {
            int c = G2.conj(moved[w], s.dst.aut->apply(s.dst.a[s.p1(w)], cg[i]));
            m[i] = static_cast<int>(std::lower_bound(cg.begin(), cg.end(), c) - cg.begin());
        }
        act.maps.push_back(m);
    }
    NonabelianH1 h1 = h1_nonabelian(act);
    out.class_in_h1 = h1.class_index(diff);
    int trivial = h1.class_index(std::vector<int>(n, 0));
    if (out.class_in_h1 != trivial) {
        out.empty = true;
        out.reason = "the difference class in H^1 is nonzero";
        return out;
    }
    for (int g = 0; g < G2.order(); ++g)
        if (is_two_cell(s, from, to, g)) out.cells.push_back(g);
    return out;
}

bool RightAction::operator==(const RightAction& o) const {
    return acting.pi1 == o.acting.pi1 && gamma == o.gamma && r == o.r && rho == o.rho && a2 == o.a2;
}

ActionReport validate_right(const RightAction& ra) {
    const int n = ra.n();
    const FiniteGroup& P = ra.acting.pi1;
    const FiniteGroup& G = ra.gamma;
    const AutData& aut = *ra.aut;
    if (static_cast<int>(ra.r.size()) != n || ra.rho.size() != static_cast<std::size_t>(n) * n)
        return fail("data has the wrong size", {});
    if (ra.r[0] != 0) return fail("R(1) is not the identity", {0});
    auto rho = [&](int t, int w) { return ra.rho[t * n + w]; };
    for (int t = 0; t < n; ++t)
        if (rho(0, t) != 0 || rho(t, 0) != 0) return fail("rho is not normalized", {t});
    for (int t = 1; t < n; ++t)
        for (int w = 1; w < n; ++w)
            if (aut.aut.mul(ra.r[w], ra.r[t]) != aut.aut.mul(aut.inn_of[rho(t, w)], ra.r[P.mul(t, w)]))
                return fail("R_w R_t != Inn_rho R_tw at " + args_str({t, w}), {t, w});
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t)
            for (int w = 1; w < n; ++w) {
                int l = G.mul(rho(t, w), rho(s, P.mul(t, w)));
                int r = G.mul(aut.apply(ra.r[w], rho(s, t)), rho(P.mul(s, t), w));
                int k = ra.centre.to_elem(ra.a2(ra.acting.k3.at({s, t, w})));
                int twist = aut.apply(ra.r[P.mul(P.mul(s, t), w)], k);
                if (G.mul(G.mul(l, G.inv(r)), twist) != 0)
                    return fail("right defect of rho != R(A2 K3)^-1 at " + args_str({s, t, w}), {s, t, w});
            }
    const PiModule& m = *ra.acting.pi2;
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < m.coeff.rank(); ++i) {
            AbElem y = m.coeff.basis(i);
            int lhs = ra.centre.to_elem(ra.a2(m.act(t, y)));
            int rhs = aut.apply(aut.aut.inv(ra.r[t]), ra.centre.to_elem(ra.a2(y)));
            if (lhs != rhs) return fail("A2 is not equivariant at " + args_str({t, i}), {t, i});
        }
    return {};
}

PointedAction right_to_left(const RightAction& ra) {
    const int n = ra.n();
    const FiniteGroup& P = ra.acting.pi1;
    const AutData& aut = *ra.aut;
    PointedAction p;
    p.acting = ra.acting;
    p.gamma = ra.gamma;
    p.aut = ra.aut;
    p.centre = ra.centre;
    p.a2 = ra.a2;
    p.a.resize(n);
    p.zeta.resize(static_cast<std::size_t>(n) * n);
    for (int w = 0; w < n; ++w) p.a[w] = aut.aut.inv(ra.r[w]);
    for (int t = 0; t < n; ++t)
        for (int w = 0; w < n; ++w)
            p.zeta[t * n + w] = aut.apply(aut.aut.inv(ra.r[P.mul(t, w)]), ra.gamma.inv(ra.rho[t * n + w]));
    return p;
}

RightAction left_to_right(const PointedAction& p) {
    const int n = p.n();
    const FiniteGroup& P = p.acting.pi1;
    const AutData& aut = *p.aut;
    RightAction ra;
    ra.acting = p.acting;
    ra.gamma = p.gamma;
    ra.aut = p.aut;
    ra.centre = p.centre;
    ra.a2 = p.a2;
    ra.r.resize(n);
    ra.rho.resize(static_cast<std::size_t>(n) * n);
    for (int w = 0; w < n; ++w) ra.r[w] = aut.aut.inv(p.a[w]);
    for (int t = 0; t < n; ++t)
        for (int w = 0; w < n; ++w)
            ra.rho[t * n + w] = p.gamma.inv(aut.apply(ra.r[P.mul(t, w)], p.zeta_at(t, w)));
    return ra;
}

} // namespace tt
