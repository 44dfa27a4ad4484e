#include "twotype/twogroup.hpp"

#include "twotype/coop.hpp"
#include "twotype/error.hpp"

namespace tt {

namespace {

bool has_identity(const Args& x) {
    for (int a : x)
        if (a == 0) return true;
    return false;
}

void check_normalized(const Cochain& c) {
    for (std::size_t t = 0; t < c.tuples(); ++t) {
        Args x = c.args(t);
        if (has_identity(x) && !c.coeff().is_zero(c.at_index(t)))
            raise(ErrorKind::NotNormalized, "nonzero value at an identity argument");
    }
}

} // namespace

TwoType TwoType::make(ModuleRef pi2, Cochain k3) {
    if (k3.degree() != 3) raise(ErrorKind::BadDegree, "associator must have degree 3");
    if (!(k3.module().group == pi2->group) || !(k3.coeff() == pi2->coeff))
        raise(ErrorKind::CochainMismatch, "associator lives over a different module");
    check_normalized(k3);
    Cochain dk = differential(k3);
    if (!dk.is_zero()) {
        Args w = *dk.first_difference(Cochain(dk.module_ref(), 4));
        std::string s;
        for (int a : w) s += (s.empty() ? "" : ",") + std::to_string(a);
        raise(ErrorKind::NotACocycle, "dK3 nonzero at (" + s + ")");
    }
    TwoType t{pi2->group, pi2, k3, {}};
    t.k3_class = Cohomology(pi2, 3).classify(k3);
    return t;
}

TwoType TwoType::strict(ModuleRef pi2) { return make(pi2, Cochain(pi2, 3)); }

TwoGroup TwoGroup::unchecked(ModuleRef pi2, Cochain k3) {
    TwoType t{pi2->group, pi2, std::move(k3), {}};
    return TwoGroup(std::move(t));
}

Arrow TwoGroup::arrow(long long idx) const {
    long long m = t_.pi2->coeff.order();
    return {static_cast<int>(idx / m), t_.pi2->coeff.element(idx % m)};
}

Arrow TwoGroup::tensor(const Arrow& l, const Arrow& r) const {
    const PiModule& m = *t_.pi2;
    return {t_.pi1.mul(l.obj, r.obj), m.coeff.add(l.b, m.act(l.obj, r.b))};
}

Arrow TwoGroup::compose(const Arrow& later, const Arrow& earlier) const {
    if (later.obj != earlier.obj) raise(ErrorKind::CochainMismatch, "arrows are not composable");
    return {later.obj, t_.pi2->coeff.add(later.b, earlier.b)};
}

Arrow TwoGroup::inverse(const Arrow& a) const { return {a.obj, t_.pi2->coeff.neg(a.b)}; }

Arrow TwoGroup::associator(int s, int t, int w) const {
    return {t_.pi1.prod(s, t, w), t_.k3.at({s, t, w})};
}

TwoGroup build_two_group(const TwoType& t) {
    TwoType checked = TwoType::make(t.pi2, t.k3);
    return TwoGroup(std::move(checked));
}

CoherenceReport coherence_check(const TwoGroup& g) {
    CoherenceReport rep;
    const int n = g.objects();
    const FinAbGroup& A = g.pi2().coeff;
    auto fail = [&](std::string what, Args w) {
        rep.ok = false;
        rep.failure = std::move(what);
        rep.witness = std::move(w);
    };
    // unit: kappa is trivial whenever an object is the unit
    for (int a = 0; a < n && rep.ok; ++a)
        for (int b = 0; b < n && rep.ok; ++b) {
            for (const Args& w : {Args{0, a, b}, Args{a, 0, b}, Args{a, b, 0}})
                if (!A.is_zero(g.associator(w[0], w[1], w[2]).b)) { fail("unit", w); break; }
        }
    // naturality: kappa . (f (g h)) = ((f g) h) . kappa on sampled arrow generators
    if (rep.ok) {
        std::vector<Arrow> gens;
        for (int a = 0; a < n; ++a) {
            gens.push_back(g.unit(a));
            for (int i = 0; i < A.rank(); ++i) gens.push_back({a, A.basis(i)});
        }
        for (const Arrow& f : gens) {
            for (const Arrow& h1 : gens) {
                for (const Arrow& h2 : gens) {
                    Arrow lhs = g.compose(g.associator(f.obj, h1.obj, h2.obj), g.tensor(f, g.tensor(h1, h2)));
                    Arrow rhs = g.compose(g.tensor(g.tensor(f, h1), h2), g.associator(f.obj, h1.obj, h2.obj));
                    if (!(lhs == rhs)) { fail("naturality", {f.obj, h1.obj, h2.obj}); break; }
                }
                if (!rep.ok) break;
            }
            if (!rep.ok) break;
        }
    }
    // pentagon
    for (int a = 0; a < n && rep.ok; ++a)
        for (int b = 0; b < n && rep.ok; ++b)
            for (int c = 0; c < n && rep.ok; ++c)
                for (int d = 0; d < n && rep.ok; ++d) {
                    const FiniteGroup& G = g.pi1();
                    Arrow top = g.compose(g.associator(G.mul(a, b), c, d), g.associator(a, b, G.mul(c, d)));
                    Arrow bottom = g.compose(
                        g.tensor(g.associator(a, b, c), g.unit(d)),
                        g.compose(g.associator(a, G.mul(b, c), d), g.tensor(g.unit(a), g.associator(b, c, d))));
                    if (!(top == bottom)) fail("pentagon", {a, b, c, d});
                }
    return rep;
}

bool verify_mor(const TwoGroupMor& m, const TwoGroup& src, const TwoGroup& dst) {
    if (!m.f1.is_hom() || !m.f2.well_defined()) return false;
    const PiModule& p = src.pi2();
    const PiModule& q = dst.pi2();
    for (int x = 0; x < src.objects(); ++x)
        if (!(compose(m.f2, p.action[x]) == compose(q.action[m.f1(x)], m.f2))) return false;
    ModuleRef pulled = m.c.module_ref();
    Cochain want = push_forward(src.k3(), m.f2, pulled) - pull_back(dst.k3(), m.f1, pulled);
    return differential(m.c) == want;
}

TwoGroupMor compose(const TwoGroupMor& g, const TwoGroupMor& f) {
    GroupHom f1 = compose(g.f1, f.f1);
    AbHom f2 = compose(g.f2, f.f2);
    ModuleRef target = make_module(PiModule::pullback(g.c.module(), f.f1));
    Cochain c = push_forward(f.c, g.f2, target) + pull_back(g.c, f.f1, target);
    return {f1, f2, c};
}

TwoGroupMor identity_mor(const TwoGroup& g) {
    return {GroupHom::identity(g.pi1()), AbHom::identity(g.pi2().coeff), Cochain(g.type().pi2, 2)};
}

std::pair<TwoGroupMor, TwoGroupMor> cochain_equivalence(const TwoGroup& g, const TwoGroup& gt, const Cochain& c) {
    if (!(g.pi1() == gt.pi1()) || !(g.pi2().coeff == gt.pi2().coeff))
        raise(ErrorKind::CochainMismatch, "2-groups do not share a 2-type");
    if (c.degree() != 2 || !(differential(c) == g.k3() - gt.k3()))
        raise(ErrorKind::CochainMismatch, "dc differs from K3 - K3~");
    TwoGroupMor I{GroupHom::identity(g.pi1()), AbHom::identity(g.pi2().coeff), c};
    TwoGroupMor J{GroupHom::identity(g.pi1()), AbHom::identity(g.pi2().coeff), -c};
    return {I, J};
}

MorphismClasses classify_morphisms(const TwoGroup& g, const TwoGroup& gp, const GroupHom& f1, const AbHom& f2) {
    if (!f1.is_hom()) raise(ErrorKind::NotAHomomorphism, "f1 is not a homomorphism");
    for (int x = 0; x < g.objects(); ++x)
        if (!(compose(f2, g.pi2().action[x]) == compose(gp.pi2().action[f1(x)], f2)))
            raise(ErrorKind::NotEquivariant, "f2 does not intertwine the action of " + std::to_string(x));
    ModuleRef pulled = make_module(PiModule::pullback(gp.pi2(), f1));
    Cochain defect = push_forward(g.k3(), f2, pulled) - pull_back(gp.k3(), f1, pulled);
    Cohomology h3(pulled, 3);
    Cohomology h2(pulled, 2);
    MorphismClasses out;
    out.obstruction_group = h3.group();
    out.obstruction = h3.classify(defect);
    out.torsor_group = h2.group();
    if (!h3.group().is_zero(out.obstruction)) {
        out.empty = true;
        return out;
    }
    Cochain base = defect.is_zero() ? Cochain(pulled, 2) : *h3.witness(defect);
    for (long long i = 0; i < h2.group().order(); ++i)
        out.classes.push_back({f1, f2, base + h2.representative(h2.group().element(i))});
    return out;
}

OppositeTwoGroup opposite_two_group(const TwoGroup& g) {
    ModuleRef opm = make_module(PiModule::opposite(g.pi2()));
    Cochain kop = opposite_postnikov(g.k3(), opm);
    std::vector<int> inv(g.objects());
    for (int x = 0; x < g.objects(); ++x) inv[x] = g.pi1().inv(x);
    const FinAbGroup& A = g.pi2().coeff;
    std::vector<AbElem> neg;
    for (int i = 0; i < A.rank(); ++i) neg.push_back(A.neg(A.basis(i)));
    OppositeTwoGroup out{TwoGroup(TwoType::make(opm, kop)), GroupHom{g.pi1(), opm->group, inv},
                         AbHom::from_images(A, A, neg), false};
    Cochain lhs = pull_back_op1(kop, g.type().pi2);
    out.coop_identity = lhs == -coop(g.k3());
    return out;
}

} // namespace tt
