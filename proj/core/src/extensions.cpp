#include "twotype/extensions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "twotype/error.hpp"

namespace tt {

namespace {

std::string args_str(const Args& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

// sorted image of pi2' in gamma' and the inverse lookup gamma' element -> pi2' coordinates
struct Pi2Image {
    Subset elems;
    std::map<int, AbElem> coords;
};

Pi2Image pi2_image(const PointedAction& a) {
    Pi2Image out;
    for (const AbElem& y : elements(a.acting.pi2->coeff)) {
        int z = a.a2_elem(y);
        out.coords.emplace(z, y);
        out.elems.push_back(z);
    }
    std::sort(out.elems.begin(), out.elems.end());
    out.elems.erase(std::unique(out.elems.begin(), out.elems.end()), out.elems.end());
    return out;
}

// E'/pi2' as a multiplication table over (coset, w) pairs
struct QuotientTable {
    Quotient q;
    std::vector<std::vector<int>> rows;
};

QuotientTable quotient_table(const PointedAction& a, const Subset& img, const std::vector<int>& section) {
    QuotientTable out;
    out.q = quotient(a.gamma, img);
    const auto& s = section.empty() ? out.q.section : section;
    const int m = a.n();
    const int c = out.q.group.order();
    const FiniteGroup& P = a.acting.pi1;
    const FiniteGroup& G = a.gamma;
    out.rows.assign(c * m, std::vector<int>(c * m));
    for (int y = 0; y < c; ++y)
        for (int t = 0; t < m; ++t)
            for (int x = 0; x < c; ++x)
                for (int w = 0; w < m; ++w) {
                    int u = G.prod(s[y], a.aut->apply(a.a[t], s[x]), a.zeta_at(t, w));
                    out.rows[y * m + t][x * m + w] = out.q.proj[u] * m + P.mul(t, w);
                }
    return out;
}

} // namespace

NonAssocExtension NonAssocExtension::build(const PointedAction& a) {
    ActionReport r = validate_action(a);
    if (!r.ok) raise(ErrorKind::InvalidAction, r.failure);
    if (!ab_kernel(a.a2).group.trivial()) raise(ErrorKind::InvalidAction, "A2 is not injective");
    NonAssocExtension e;
    e.a_ = a;
    e.m_ = a.n();
    e.n_ = a.gamma.order() * e.m_;
    const FiniteGroup& G = a.gamma;
    const FiniteGroup& P = a.acting.pi1;
    e.table_.resize(static_cast<std::size_t>(e.n_) * e.n_);
    for (int l = 0; l < e.n_; ++l)
        for (int r2 = 0; r2 < e.n_; ++r2) {
            int y = e.gamma_part(l), t = e.proj(l), x = e.gamma_part(r2), w = e.proj(r2);
            e.table_[static_cast<std::size_t>(l) * e.n_ + r2] =
                e.elem(G.prod(y, a.aut->apply(a.a[t], x), a.zeta_at(t, w)), P.mul(t, w));
        }
    e.linv_.assign(e.n_, -1);
    e.rinv_.assign(e.n_, -1);
    for (int l = 0; l < e.n_; ++l)
        for (int r2 = 0; r2 < e.n_; ++r2)
            if (e.mul(l, r2) == 0) {
                e.rinv_[l] = r2;
                e.linv_[r2] = l;
            }
    return e;
}

int NonAssocExtension::associator(int e, int f, int g) const {
    return a_.a2_elem(a_.acting.k3.at({proj(e), proj(f), proj(g)}));
}

NonAssocExtension build_nonassoc_extension(const PointedAction& a) {
    NonAssocExtension e = NonAssocExtension::build(a);
    ExtensionAudit r = audit_extension(e);
    if (!r.ok) raise(ErrorKind::InvalidAction, r.failure);
    return e;
}

std::vector<int> conjugation_action(const NonAssocExtension& e) {
    const int g = e.action().gamma.order();
    std::vector<int> out(static_cast<std::size_t>(e.order()) * g);
    for (int x = 0; x < e.order(); ++x)
        for (int y = 0; y < g; ++y)
            out[static_cast<std::size_t>(x) * g + y] = e.gamma_part(e.mul(e.mul(x, e.elem(y, 0)), e.right_inverse(x)));
    return out;
}

ExtensionAudit audit_extension(const NonAssocExtension& e) {
    const PointedAction& a = e.action();
    const FiniteGroup& G = a.gamma;
    const int n = e.order();
    auto bad = [](std::string what, Args w) { return ExtensionAudit{false, std::move(what), std::move(w)}; };
    for (int x = 0; x < G.order(); ++x)
        for (int y = 0; y < G.order(); ++y)
            if (e.mul(e.elem(x, 0), e.elem(y, 0)) != e.elem(G.mul(x, y), 0))
                return bad("product on gamma' is not its group law at " + args_str({x, y}), {x, y});
    for (int x = 0; x < n; ++x) {
        if (e.mul(0, x) != x || e.mul(x, 0) != x) return bad("no two-sided identity at " + args_str({x}), {x});
        if (e.left_inverse(x) < 0 || e.right_inverse(x) < 0) return bad("missing inverse at " + args_str({x}), {x});
        int k = e.associator(e.right_inverse(x), x, e.right_inverse(x));
        int moved = e.elem(G.mul(k, e.gamma_part(e.right_inverse(x))), e.proj(e.right_inverse(x)));
        if (e.left_inverse(x) != moved) return bad("left inverse is not K3' times the right inverse at " + args_str({x}), {x});
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int l = e.mul(x, e.mul(y, z));
                int r = e.mul(e.mul(x, y), z);
                int k = e.associator(x, y, z);
                if (l != e.elem(G.mul(k, e.gamma_part(r)), e.proj(r)))
                    return bad("associator identity fails at " + args_str({x, y, z}), {x, y, z});
                if ((e.proj(x) == 0 || e.proj(y) == 0 || e.proj(z) == 0) && l != r)
                    return bad("not associative with a factor in gamma' at " + args_str({x, y, z}), {x, y, z});
            }
    std::vector<int> conj = conjugation_action(e);
    const int g = G.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < g; ++y) {
            int c = G.conj(e.gamma_part(x), a.aut->apply(a.a[e.proj(x)], y));
            if (conj[static_cast<std::size_t>(x) * g + y] != c)
                return bad("conjugation differs from x A_w(g) x^-1 at " + args_str({x, y}), {x, y});
        }
    for (int f = 0; f < n; ++f)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < g; ++y)
                if (conj[static_cast<std::size_t>(e.mul(f, x)) * g + y] !=
                    conj[static_cast<std::size_t>(f) * g + conj[static_cast<std::size_t>(x) * g + y]])
                    return bad("(f e).g != f.(e.g) at " + args_str({f, x, y}), {f, x, y});
    return {};
}

bool GroupExtension::exact() const {
    if (!iota.is_hom() || !pi.is_hom() || !iota.injective() || !pi.surjective()) return false;
    Subset im(iota.image.begin(), iota.image.end());
    std::sort(im.begin(), im.end());
    return im == pi.kernel();
}

GroupExtension to_group_extension(const NonAssocExtension& e) {
    if (!e.action().acting.k3.is_zero()) raise(ErrorKind::NotAssociative, "associator K3' is nonzero");
    const int n = e.order();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rows[x][y] = e.mul(x, y);
    GroupExtension out;
    out.e = FiniteGroup::from_table(rows, "E");
    const auto& rl = out.e.relabel();
    const FiniteGroup& G = e.action().gamma;
    std::vector<int> inc(G.order());
    for (int x = 0; x < G.order(); ++x) inc[x] = rl[e.elem(x, 0)];
    std::vector<int> pr(n);
    for (int x = 0; x < n; ++x) pr[rl[x]] = e.proj(x);
    out.iota = GroupHom{G, out.e, inc};
    out.pi = GroupHom{out.e, e.action().acting.pi1, pr};
    return out;
}

ExtractedCrossed extract_crossed_module(const NonAssocExtension& e) {
    const PointedAction& a = e.action();
    const FiniteGroup& G = a.gamma;
    const int m = a.n();
    Pi2Image img = pi2_image(a);
    QuotientTable qt = quotient_table(a, img.elems, {});
    const int N = static_cast<int>(qt.rows.size());
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            for (int z = 0; z < N; ++z)
                if (qt.rows[qt.rows[x][y]][z] != qt.rows[x][qt.rows[y][z]])
                    raise(ErrorKind::QuotientNotAssociative,
                          "E'/pi2' is not associative at " + args_str({x, y, z}));
    ExtractedCrossed out;
    out.gamma_mod_pi2 = qt.q;
    FiniteGroup Q = FiniteGroup::from_table(qt.rows, "pi1(q')");
    std::vector<int> bd(G.order());
    for (int x = 0; x < G.order(); ++x) bd[x] = qt.q.proj[x] * m;
    GroupAction act{Q, G, {}};
    for (int x = 0; x < N; ++x) {
        int lift = qt.q.section[x / m];
        std::vector<int> img2(G.order());
        for (int y = 0; y < G.order(); ++y) img2[y] = G.conj(lift, a.aut->apply(a.a[x % m], y));
        act.maps.push_back(img2);
    }
    out.cm = CrossedModule{G, Q, GroupHom{G, Q, bd}, act};
    out.extraction = crossed_module_to_two_type(out.cm);
    const CrossedExtraction& ex = out.extraction;
    std::vector<int> iso(m);
    for (int w = 0; w < m; ++w) iso[w] = ex.coker.proj[w];
    out.pi1_to_coker = GroupHom{a.acting.pi1, ex.coker.group, iso};
    std::vector<AbElem> cols;
    for (int i = 0; i < ex.kernel.group.rank(); ++i)
        cols.push_back(img.coords.at(ex.kernel.to_elem(ex.kernel.group.basis(i))));
    out.kernel_to_pi2 = AbHom::from_images(ex.kernel.group, a.acting.pi2->coeff, cols);
    out.k3_on_pi1 = Cochain(a.acting.pi2, 3);
    for (std::size_t t = 0; t < out.k3_on_pi1.tuples(); ++t) {
        Args x = out.k3_on_pi1.args(t);
        if (std::find(x.begin(), x.end(), 0) != x.end()) continue;
        out.k3_on_pi1.set(x, out.kernel_to_pi2(ex.type.k3.at({iso[x[0]], iso[x[1]], iso[x[2]]})));
    }
    Subset lower;
    for (int c = 0; c < qt.q.group.order(); ++c) lower.push_back(c * m);
    GroupHom down{Q, a.acting.pi1, {}};
    for (int x = 0; x < N; ++x) down.image.push_back(x % m);
    out.exact = out.cm.boundary.kernel() == img.elems && down.is_hom() && down.surjective() &&
                down.kernel() == lower && out.pi1_to_coker.is_hom() && out.pi1_to_coker.injective() &&
                out.pi1_to_coker.surjective() && out.kernel_to_pi2.bijective();
    return out;
}

CellTwoType cell_two_type(const NonAssocExtension& e, const std::vector<int>& section,
                          const std::optional<CellAmbient>& ambient) {
    const PointedAction& a = e.action();
    const FiniteGroup& G = a.gamma;
    const FiniteGroup& P = a.acting.pi1;
    const int m = a.n();
    Pi2Image img = pi2_image(a);
    Quotient base = quotient(G, img.elems);
    std::vector<int> s = section.empty() ? base.section : section;
    if (static_cast<int>(s.size()) != base.group.order() || s[0] != 0)
        raise(ErrorKind::SectionMismatch, "section must have one lift per coset with s(1) = 1");
    for (int c = 0; c < base.group.order(); ++c)
        if (base.proj[s[c]] != c) raise(ErrorKind::SectionMismatch, "section is not a lift");
    QuotientTable qt = quotient_table(a, img.elems, s);
    CellTwoType out;
    out.pi1q = FiniteGroup::from_table(qt.rows, "pi1(q')");
    const int N = out.pi1q.order();
    std::vector<int> down(N);
    for (int x = 0; x < N; ++x) down[x] = x % m;
    out.to_pi1 = GroupHom{out.pi1q, P, down};
    out.pi2_prime = make_module(PiModule::pullback(*a.acting.pi2, out.to_pi1));
    out.s_prime = Cochain(out.pi2_prime, 2);
    for (int y = 1; y < N; ++y)
        for (int x = 1; x < N; ++x) {
            int t = y % m, w = x % m;
            int u = G.prod(s[y / m], a.aut->apply(a.a[t], s[x / m]), a.zeta_at(t, w));
            int v = G.mul(u, G.inv(s[base.proj[u]]));
            out.s_prime.set({y, x}, img.coords.at(v));
        }
    out.differential_ok = differential(out.s_prime) == pull_back(a.acting.k3, out.to_pi1, out.pi2_prime);

    CellAmbient amb = ambient ? *ambient : CellAmbient{a.acting.pi2, AbHom::identity(a.acting.pi2->coeff), a.acting.k3};
    const PiModule& big = *amb.pi2;
    if (!(big.group == P) || !(amb.q.source == big.coeff) || !(amb.q.target == a.acting.pi2->coeff))
        raise(ErrorKind::IncompatibleTypes, "ambient pi2 does not map onto pi2'");
    if (push_forward(amb.k3, amb.q, a.acting.pi2) != a.acting.k3)
        raise(ErrorKind::IncompatibleTypes, "q K3 differs from K3'");
    AbSubgroup kq = ab_kernel(amb.q);
    PiModule kmod{P, kq.group, {}};
    for (int t = 0; t < m; ++t) {
        std::vector<AbElem> cols;
        for (int i = 0; i < kq.group.rank(); ++i) cols.push_back(*kq.coords(big.act(t, kq.incl(kq.group.basis(i)))));
        kmod.action.push_back(AbHom::from_images(kq.group, kq.group, cols));
    }
    ModuleRef kref = make_module(kmod);
    out.pi2q = make_module(PiModule::pullback(kmod, out.to_pi1));
    std::map<AbElem, AbElem> lift;
    for (const AbElem& y : elements(big.coeff)) lift.emplace(amb.q(y), y);
    auto lift_cochain = [&](const Cochain& c, ModuleRef target) {
        Cochain r(std::move(target), c.degree());
        for (std::size_t i = 0; i < c.tuples(); ++i) {
            AbElem v = c.at_index(i);
            if (!c.coeff().is_zero(v)) r.set(c.args(i), lift.at(v));
        }
        return r;
    };
    auto into_kernel = [&](const Cochain& c, ModuleRef target) {
        Cochain r(std::move(target), c.degree());
        for (std::size_t i = 0; i < c.tuples(); ++i) {
            AbElem v = c.at_index(i);
            if (c.coeff().is_zero(v)) continue;
            auto k = kq.coords(v);
            if (!k) raise(ErrorKind::IncompatibleTypes, "lifted differential leaves ker q");
            r.set(c.args(i), *k);
        }
        return r;
    };
    ModuleRef bigq = make_module(PiModule::pullback(big, out.to_pi1));
    Cochain shat = lift_cochain(out.s_prime, bigq);
    Cochain cand = into_kernel(differential(shat) - pull_back(amb.k3, out.to_pi1, bigq), out.pi2q);
    Cohomology h3(out.pi2q, 3);
    out.orbit_group = h3.group();
    Cohomology h2(a.acting.pi2, 2);
    std::vector<AbElem> image;
    for (const Cochain& z : h2.generators()) {
        Cochain bz = into_kernel(differential(lift_cochain(z, amb.pi2)), kref);
        image.push_back(h3.classify(pull_back(bz, out.to_pi1, out.pi2q)));
    }
    std::set<long long> seen;
    std::vector<AbElem> todo{h3.classify(cand)};
    seen.insert(h3.group().index(todo[0]));
    while (!todo.empty()) {
        AbElem x = todo.back();
        todo.pop_back();
        for (const AbElem& g : image) {
            AbElem y = h3.group().add(x, g);
            if (seen.insert(h3.group().index(y)).second) todo.push_back(y);
        }
    }
    for (long long i : seen) out.orbit.push_back(h3.group().element(i));
    return out;
}

GroupExtensionClasses classify_group_extensions(const FiniteGroup& pi1, const FiniteGroup& gamma,
                                                const std::vector<int>& outer) {
    ModuleRef zero = make_module(PiModule::trivial(pi1, FinAbGroup()));
    TwoType acting = TwoType::strict(zero);
    AbelianPart z = abelian_part(gamma, centre(gamma));
    GroupExtensionClasses out;
    out.cells = classify_0cells(acting, gamma, outer, AbHom::zero(FinAbGroup(), z.group));
    for (const PointedAction& p : out.cells.classes)
        out.extensions.push_back(to_group_extension(NonAssocExtension::build(p)));
    return out;
}

} // namespace tt
