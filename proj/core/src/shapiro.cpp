#include "twotype/shapiro.hpp"

#include "twotype/error.hpp"

namespace tt {

AbElem CoinducedModule::eval(const AbElem& z, int coset) const {
    const FinAbGroup& Z = inner->coeff;
    AbElem v(Z.rank());
    for (int i = 0; i < Z.rank(); ++i) v[i] = z[coord(i, coset)];
    return v;
}

AbElem CoinducedModule::constant(const AbElem& v) const {
    AbElem z(static_cast<std::size_t>(inner->coeff.rank()) * cosets());
    for (int i = 0; i < inner->coeff.rank(); ++i)
        for (int f = 0; f < cosets(); ++f) z[coord(i, f)] = v[i];
    return z;
}

CoinducedModule CoinducedModule::build(const CosetSection& s, ModuleRef inner) {
    if (!(inner->group == s.subgroup_group()))
        raise(ErrorKind::SectionMismatch, "inner module is not over the chosen subgroup");
    CoinducedModule cm;
    cm.section = std::make_shared<const CosetSection>(s);
    cm.inner = inner;
    const FinAbGroup& Z = inner->coeff;
    const int F = s.cosets();
    std::vector<long long> fac;
    for (long long d : Z.factors()) fac.insert(fac.end(), F, d);
    FinAbGroup M(fac);
    const FiniteGroup& G = s.group();
    PiModule pm{G, M, {}};
    for (int w = 0; w < G.order(); ++w) {
        AbHom a = AbHom::zero(M, M);
        for (int f = 0; f < F; ++f) {
            int y = G.mul(s.transversal()[f], w);
            int f2 = s.coset_of(y);
            const IntMat& t = inner->action[s.prime_local(y)].matrix;
            for (int i = 0; i < Z.rank(); ++i)
                for (int j = 0; j < Z.rank(); ++j) a.matrix[cm.coord(i, f)][cm.coord(j, f2)] = t[i][j];
        }
        pm.action.push_back(a);
    }
    pm.validate();
    cm.module = make_module(std::move(pm));
    return cm;
}

Cochain shapiro_restrict(const Cochain& k, const CoinducedModule& cm) {
    const CosetSection& s = *cm.section;
    Cochain out(cm.inner, k.degree());
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        for (int& a : x) a = s.global(a);
        out.set(out.args(t), cm.eval(k.at(x), 0));
    }
    return out;
}

Cochain shapiro_inflate(const Cochain& b, const CoinducedModule& cm) {
    const CosetSection& s = *cm.section;
    const FiniteGroup& G = s.group();
    const int n = b.degree();
    Cochain out(cm.module, n);
    const int k = cm.inner->coeff.rank();
    Args y(n);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        AbElem z(static_cast<std::size_t>(k) * cm.cosets(), 0);
        for (int f = 0; f < cm.cosets(); ++f) {
            int r = s.transversal()[f];
            for (int i = 0; i < n; ++i) {
                int p = G.mul(r, x[i]);
                y[i] = s.prime_local(p);
                r = s.bar(p);
            }
            AbElem v = b.at(y);
            for (int i = 0; i < k; ++i) z[cm.coord(i, f)] = v[i];
        }
        out.set(x, z);
    }
    return out;
}

Cochain bar_h(const Cochain& kc, const CoinducedModule& cm) {
    const CosetSection& s = *cm.section;
    const int n = kc.degree() - 1;
    if (n < 0) raise(ErrorKind::BadDegree, "homotopy of a degree 0 cochain");
    Cochain out(cm.module, n);
    const int k = cm.inner->coeff.rank();
    Args y(n + 1);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        AbElem z(static_cast<std::size_t>(k) * cm.cosets(), 0);
        for (int f = 0; f < cm.cosets(); ++f) {
            y[0] = s.transversal()[f];
            for (int i = 0; i < n; ++i) y[i + 1] = x[i];
            AbElem v = cm.eval(kc.at(y), 0);
            for (int i = 0; i < k; ++i) z[cm.coord(i, f)] = v[i];
        }
        out.set(x, z);
    }
    return out;
}

Cochain bar_p(const Cochain& kc, const CoinducedModule& cm) {
    const CosetSection& s = *cm.section;
    const FiniteGroup& G = s.group();
    const FinAbGroup& Z = cm.inner->coeff;
    const int m = kc.degree();
    Cochain out(cm.module, m);
    const int k = Z.rank();
    if (m == 0) {
        out.set({}, cm.constant(cm.eval(kc.at({}), 0)));
        return out;
    }
    Args y(m);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        bool has_id = false;
        for (int a : x) has_id |= a == 0;
        if (has_id) continue;
        AbElem z(static_cast<std::size_t>(k) * cm.cosets(), 0);
        for (int f = 0; f < cm.cosets(); ++f) {
            int rx = G.mul(s.transversal()[f], x[0]);
            for (int i = 1; i < m; ++i) y[i] = x[i];
            y[0] = rx;
            AbElem v = cm.eval(kc.at(y), 0);
            y[0] = s.bar(rx);
            AbElem w = cm.inner->act(s.prime_local(rx), cm.eval(kc.at(y), 0));
            v = Z.sub(v, w);
            for (int i = 0; i < k; ++i) z[cm.coord(i, f)] = v[i];
        }
        out.set(x, z);
    }
    return out;
}

BarHomotopy bar_homotopy(const Cochain& k, const CoinducedModule& cm) {
    BarHomotopy out{std::nullopt, bar_p(k, cm)};
    if (k.degree() > 0) out.h = bar_h(k, cm);
    return out;
}

} // namespace tt
