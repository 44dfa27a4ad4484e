#include "twotype/coop.hpp"

#include "twotype/error.hpp"

namespace tt {

namespace {

int sign_of(long long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

Cochain coop(const Cochain& k) {
    const PiModule& m = k.module();
    const FiniteGroup& G = m.group;
    const int n = k.degree();
    const int eps = sign_of(static_cast<long long>(n) * (n + 1) / 2);
    Cochain out(k.module_ref(), n);
    Args z(n);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        bool has_id = false;
        for (int a : x) has_id |= a == 0;
        if (has_id) continue;
        for (int i = 0; i < n; ++i) z[i] = G.inv(x[n - 1 - i]);
        AbElem v = m.act(G.prod_of(x), k.at(z));
        out.set(x, eps > 0 ? v : m.coeff.neg(v));
    }
    return out;
}

Cochain coop_homotopy(const Cochain& k) {
    const PiModule& m = k.module();
    const FiniteGroup& G = m.group;
    const int n = k.degree() - 1;
    if (n < 0) raise(ErrorKind::BadDegree, "homotopy of a degree 0 cochain");
    Cochain out(k.module_ref(), n);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        bool has_id = false;
        for (int a : x) has_id |= a == 0;
        if (has_id) continue;
        AbElem v = m.coeff.zero();
        for (int p = 1; p <= n; ++p) {
            Args y(x.begin(), x.begin() + (p - 1));
            y.push_back(G.prod_of(Args(x.begin() + (p - 1), x.end())));
            for (int i = n - 1; i >= p - 1; --i) y.push_back(G.inv(x[i]));
            AbElem w = k.at(y);
            long long e = static_cast<long long>(n + p + 1) * (n + p + 2) / 2;
            v = sign_of(e) > 0 ? m.coeff.add(v, w) : m.coeff.sub(v, w);
        }
        out.set(x, v);
    }
    return out;
}

CoopSuite coop_suite(const Cochain& k) {
    CoopSuite s{coop(k), std::nullopt};
    if (k.degree() > 0) s.h = coop_homotopy(k);
    return s;
}

Cochain opposite_postnikov(const Cochain& k3, ModuleRef op_module) {
    const PiModule& m = k3.module();
    const FiniteGroup& G = m.group;
    if (!differential(k3).is_zero()) raise(ErrorKind::NotACocycle, "associator is not closed");
    if (op_module->group.order() != G.order()) raise(ErrorKind::CochainMismatch, "opposite module has wrong group");
    const int n = k3.degree();
    Cochain out(op_module, n);
    Args z(n);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        bool has_id = false;
        for (int a : x) has_id |= a == 0;
        if (has_id) continue;
        for (int i = 0; i < n; ++i) z[i] = x[n - 1 - i];
        AbElem v = m.act(G.inv(G.prod_of(z)), k3.at(z));
        out.set(x, m.coeff.neg(v));
    }
    return out;
}

Cochain opposite_postnikov(const Cochain& k3) {
    return opposite_postnikov(k3, make_module(PiModule::opposite(k3.module())));
}

Cochain pull_back_op1(const Cochain& kop, ModuleRef original) {
    const FiniteGroup& G = original->group;
    std::vector<int> inv(G.order());
    for (int x = 0; x < G.order(); ++x) inv[x] = G.inv(x);
    return pull_back(kop, GroupHom{G, kop.module().group, inv}, std::move(original));
}

} // namespace tt
