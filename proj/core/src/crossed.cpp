#include "twotype/crossed.hpp"

#include <algorithm>
#include <numeric>

#include "twotype/error.hpp"

namespace tt {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

} // namespace

void CrossedModule::validate() const {
    if (!boundary.is_hom()) raise(ErrorKind::NotAHomomorphism, "boundary is not a homomorphism");
    if (!action.valid()) raise(ErrorKind::NotAHomomorphism, "G1 does not act on G2 by automorphisms");
    for (int g = 0; g < g1.order(); ++g)
        for (int h = 0; h < g2.order(); ++h)
            if (boundary(action(g, h)) != g1.conj(g, boundary(h)))
                raise(ErrorKind::NotPeiffer, "equivariance fails at " + pair_str(g, h));
    for (int h = 0; h < g2.order(); ++h)
        for (int k = 0; k < g2.order(); ++k)
            if (action(boundary(h), k) != g2.conj(h, k))
                raise(ErrorKind::NotPeiffer, "Peiffer identity fails at " + pair_str(h, k));
}

CrossedExtraction crossed_module_to_two_type(const CrossedModule& cm, const std::vector<int>& section) {
    if (cm.g1.order() > kCrossedBound || cm.g2.order() > kCrossedBound)
        raise(ErrorKind::TooLarge, "crossed module exceeds the size bound");
    cm.validate();
    CrossedExtraction out;
    const FiniteGroup& G1 = cm.g1;
    const FiniteGroup& G2 = cm.g2;
    Subset im;
    out.preimage.assign(G1.order(), -1);
    for (int h = 0; h < G2.order(); ++h) {
        int b = cm.boundary(h);
        if (out.preimage[b] < 0) out.preimage[b] = h;
    }
    for (int g = 0; g < G1.order(); ++g)
        if (out.preimage[g] >= 0) im.push_back(g);
    out.coker = quotient(G1, im);
    const FiniteGroup& P = out.coker.group;
    out.section = section.empty() ? out.coker.section : section;
    if (static_cast<int>(out.section.size()) != P.order()) raise(ErrorKind::SectionMismatch, "section has wrong size");
    if (out.section[0] != 0) raise(ErrorKind::NotNormalized, "section must send 1 to 1");
    for (int c = 0; c < P.order(); ++c)
        if (out.coker.proj[out.section[c]] != c) raise(ErrorKind::SectionMismatch, "section is not a lift");
    out.kernel = abelian_part(G2, cm.boundary.kernel());
    const AbelianPart& K = out.kernel;
    for (int z : K.elems)
        for (int h = 0; h < G2.order(); ++h)
            if (G2.mul(z, h) != G2.mul(h, z)) raise(ErrorKind::NotPeiffer, "kernel is not central");
    PiModule m{P, K.group, {}};
    for (int x = 0; x < P.order(); ++x) {
        std::vector<AbElem> cols;
        for (int i = 0; i < K.group.rank(); ++i) cols.push_back(K.to_ab(cm.action(out.section[x], K.to_elem(K.group.basis(i)))));
        m.action.push_back(AbHom::from_images(K.group, K.group, cols));
    }
    m.validate();
    ModuleRef mod = make_module(std::move(m));
    const int n = P.order();
    const auto& s = out.section;
    std::vector<int> phi(static_cast<std::size_t>(n) * n);
    for (int t = 0; t < n; ++t)
        for (int w = 0; w < n; ++w) {
            int d = G1.mul(G1.mul(s[t], s[w]), G1.inv(s[P.mul(t, w)]));
            phi[t * n + w] = out.preimage[d];
        }
    Cochain k3(mod, 3);
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c) {
                int lhs = G2.mul(cm.action(s[a], phi[b * n + c]), phi[a * n + P.mul(b, c)]);
                int rhs = G2.mul(phi[a * n + b], phi[P.mul(a, b) * n + c]);
                int z = G2.mul(lhs, G2.inv(rhs));
                k3.set({a, b, c}, K.to_ab(z));
            }
    out.type = TwoType::make(mod, k3);
    return out;
}

int AutTwoGroup::g1_index(int w, const std::vector<int>& a) const {
    int idx = 0;
    for (int x = 0; x < f; ++x) idx = idx * aut.aut.order() + a[x];
    return w * static_cast<int>(ipow(aut.aut.order(), f)) + idx;
}

std::pair<int, std::vector<int>> AutTwoGroup::g1_parts(int idx) const {
    const int na = aut.aut.order();
    const int block = static_cast<int>(ipow(na, f));
    std::vector<int> a(f);
    int r = idx % block;
    for (int x = f - 1; x >= 0; --x) {
        a[x] = r % na;
        r /= na;
    }
    return {idx / block, a};
}

int AutTwoGroup::g2_index(const std::vector<int>& g) const {
    int idx = 0;
    for (int x = 0; x < f; ++x) idx = idx * gamma.order() + g[x];
    return idx;
}

std::vector<int> AutTwoGroup::g2_parts(int idx) const {
    std::vector<int> g(f);
    for (int x = f - 1; x >= 0; --x) {
        g[x] = idx % gamma.order();
        idx /= gamma.order();
    }
    return g;
}

namespace {

// Sym_F x| Hom(F, H) for a group H, (w, A)(w', A') = (ww', y -> A(y) A'(w^-1 y))
FiniteGroup wreath(const FiniteGroup& sym, const std::vector<std::vector<int>>& perms, const FiniteGroup& h, int f) {
    const int nh = h.order();
    const int block = static_cast<int>(ipow(nh, f));
    const int N = sym.order() * block;
    auto parts = [&](int idx, std::vector<int>& a) {
        int r = idx % block;
        for (int x = f - 1; x >= 0; --x) {
            a[x] = r % nh;
            r /= nh;
        }
        return idx / block;
    };
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    std::vector<int> a(f), b(f), c(f);
    for (int i = 0; i < N; ++i) {
        int w = parts(i, a);
        const auto& pinv = perms[sym.inv(w)];
        for (int j = 0; j < N; ++j) {
            int w2 = parts(j, b);
            int idx = 0;
            for (int y = 0; y < f; ++y) idx = idx * nh + h.mul(a[y], b[pinv[y]]);
            t[i][j] = sym.mul(w, w2) * block + idx;
        }
    }
    return FiniteGroup::from_table(t);
}

} // namespace

AutTwoGroup aut_two_group(int f, const FiniteGroup& gamma, int bound) {
    if (f < 1) raise(ErrorKind::BadDegree, "object set must be nonempty");
    AutTwoGroup A;
    A.f = f;
    A.gamma = gamma;
    A.aut = automorphisms(gamma);
    const int na = A.aut.aut.order();
    double n1 = 1, n2 = 1;
    for (int i = 2; i <= f; ++i) n1 *= i;
    for (int i = 0; i < f; ++i) { n1 *= na; n2 *= gamma.order(); }
    if (n1 > bound || n2 > bound) raise(ErrorKind::TooLarge, "automorphism 2-group exceeds the size bound");
    A.sym = FiniteGroup::symmetric(f);
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(f);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    A.g1 = wreath(A.sym, perms, A.aut.aut, f);
    A.g1.set_label("G1");
    {
        const int n = static_cast<int>(n2);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto a = A.g2_parts(i), b = A.g2_parts(j);
                for (int x = 0; x < f; ++x) a[x] = gamma.mul(a[x], b[x]);
                t[i][j] = A.g2_index(a);
            }
        A.g2 = FiniteGroup::from_table(t, "G2");
    }
    GroupAction act{A.g1, A.g2, {}};
    for (int i = 0; i < A.g1.order(); ++i) {
        auto [w, a] = A.g1_parts(i);
        const auto& pinv = perms[A.sym.inv(w)];
        std::vector<int> img(A.g2.order());
        for (int j = 0; j < A.g2.order(); ++j) {
            auto g = A.g2_parts(j);
            std::vector<int> r(f);
            for (int x = 0; x < f; ++x) r[x] = A.aut.apply(a[x], g[pinv[x]]);
            img[j] = A.g2_index(r);
        }
        act.maps.push_back(img);
    }
    std::vector<int> bd(A.g2.order());
    for (int j = 0; j < A.g2.order(); ++j) {
        auto g = A.g2_parts(j);
        std::vector<int> a(f);
        for (int x = 0; x < f; ++x) a[x] = A.aut.inn_of[g[x]];
        bd[j] = A.g1_index(0, a);
    }
    A.cm = CrossedModule{A.g2, A.g1, GroupHom{A.g2, A.g1, bd}, act};
    A.out_group = wreath(A.sym, perms, A.aut.out, f);
    A.out_group.set_label("Gamma1");
    {
        const int no = A.aut.out.order();
        const int block = static_cast<int>(ipow(no, f));
        std::vector<int> im(A.g1.order());
        for (int i = 0; i < A.g1.order(); ++i) {
            auto [w, a] = A.g1_parts(i);
            int idx = 0;
            for (int x = 0; x < f; ++x) idx = idx * no + A.aut.out_proj[a[x]];
            im[i] = w * block + idx;
        }
        A.to_out = GroupHom{A.g1, A.out_group, im};
    }
    Subset z = centre(gamma);
    for (int j = 0; j < A.g2.order(); ++j) {
        auto g = A.g2_parts(j);
        if (std::all_of(g.begin(), g.end(), [&](int y) { return std::binary_search(z.begin(), z.end(), y); }))
            A.centre_part.push_back(j);
    }
    A.two_type = crossed_module_to_two_type(A.cm);
    // exactness of 1 -> Hom(F,Z) -> G2 -> G1 -> Gamma1 -> 1
    bool exact = A.to_out.is_hom() && A.to_out.surjective();
    exact = exact && A.cm.boundary.kernel() == A.centre_part;
    Subset im;
    for (int j = 0; j < A.g2.order(); ++j) im.push_back(A.cm.boundary(j));
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    exact = exact && im == A.to_out.kernel();
    const FiniteGroup& P = A.two_type.coker.group;
    std::vector<int> c2o(P.order());
    for (int c = 0; c < P.order(); ++c) c2o[c] = A.to_out(A.two_type.section[c]);
    A.coker_to_out = GroupHom{P, A.out_group, c2o};
    exact = exact && A.coker_to_out.is_hom() && A.coker_to_out.injective() && A.coker_to_out.surjective();
    A.exact = exact;
    return A;
}

} // namespace tt
