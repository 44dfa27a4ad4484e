#include "twotype/sequence.hpp"

#include <set>

#include "twotype/error.hpp"

namespace tt {

AbElem transgression(const AbHom& phi, const TwoType& t, const ModuleRef& z) {
    if (!(phi.source == t.pi2->coeff) || !(phi.target == z->coeff) || !phi.well_defined() ||
        !equivariant(phi, *t.pi2, *z))
        raise(ErrorKind::NotEquivariant, "phi does not intertwine the pi1 actions");
    return Cohomology(z, 3).classify(push_forward(t.k3, phi, z));
}

int SequenceInstance::basepoint() const {
    if (fibres.empty() || fibres[0].empty) return -1;
    return 0;
}

std::vector<int> SequenceInstance::first_map() const {
    std::vector<int> out;
    int b = basepoint();
    if (b < 0) return out;
    for (long long e = 0; e < h2->group().order(); ++e) out.push_back(act(static_cast<int>(e), b));
    return out;
}

int SequenceInstance::act(int h2_index, int cell) const {
    const Cell& c = middle[cell];
    const ZeroCellClasses& f = fibres[c.hom];
    PointedAction p = f.classes[c.index];
    Cochain r = h2->representative(h2->group().element(h2_index));
    const int n = p.n();
    for (int s = 1; s < n; ++s)
        for (int t = 1; t < n; ++t)
            p.zeta[s * n + t] = gamma.mul(p.zeta_at(s, t), p.centre.to_elem(r.at({s, t})));
    int k = zero_cell_class(f, p);
    if (k < 0) return -1;
    for (std::size_t i = 0; i < middle.size(); ++i)
        if (middle[i].hom == c.hom && middle[i].index == k) return static_cast<int>(i);
    return -1;
}

SequenceInstance homotopy_exact_sequence(const TwoType& t, const FiniteGroup& gamma, const std::vector<int>& outer) {
    SequenceInstance s;
    s.type = t;
    s.gamma = gamma;
    s.outer = outer;
    PointedAction probe = PointedAction::trivial(t, gamma);
    const int n = t.pi1.order();
    if (static_cast<int>(outer.size()) != n || !GroupHom{t.pi1, probe.aut->out, outer}.is_hom())
        raise(ErrorKind::NotAHomomorphism, "outer representation is not a homomorphism");
    for (int w = 0; w < n; ++w) probe.a[w] = probe.aut->out_section[outer[w]];
    s.z = probe.centre_module();
    s.h2 = std::make_shared<const Cohomology>(s.z, 2);
    s.h3 = std::make_shared<const Cohomology>(s.z, 3);
    for (const AbHom& phi : all_ab_homs(t.pi2->coeff, s.z->coeff))
        if (equivariant(phi, *t.pi2, *s.z)) s.homs.push_back(phi);
    for (std::size_t i = 0; i < s.homs.size(); ++i) {
        s.transgressed.push_back(transgression(s.homs[i], t, s.z));
        s.fibres.push_back(classify_0cells(t, gamma, outer, s.homs[i]));
        for (int k = 0; k < static_cast<int>(s.fibres.back().classes.size()); ++k)
            s.middle.push_back({static_cast<int>(i), k});
    }
    s.obs = s.fibres[0].obstruction;
    return s;
}

SequenceAudit audit_sequence(const SequenceInstance& s) {
    auto bad = [](std::string w) { return SequenceAudit{false, std::move(w)}; };
    const FinAbGroup& H2 = s.h2->group();
    const FinAbGroup& H3 = s.h3->group();
    if (s.homs.empty() || !s.homs[0].is_zero()) return bad("zero map missing from Hom^{pi1}(pi2, Z)");
    // first node: injective, image = fibre over the zero map
    std::vector<int> f = s.first_map();
    if (s.basepoint() >= 0) {
        std::set<int> im(f.begin(), f.end());
        if (im.count(-1) || static_cast<long long>(im.size()) != H2.order())
            return bad("H^2 -> 0-cells is not injective");
        std::set<int> fib;
        for (std::size_t i = 0; i < s.middle.size(); ++i)
            if (s.middle[i].hom == 0) fib.insert(static_cast<int>(i));
        if (im != fib) return bad("image of H^2 differs from the fibre over 0");
    }
    // middle node: free action, fibres are orbits
    for (std::size_t c = 0; c < s.middle.size(); ++c) {
        std::set<int> orbit;
        for (long long e = 0; e < H2.order(); ++e) {
            int d = s.act(static_cast<int>(e), static_cast<int>(c));
            if (d < 0) return bad("H^2 moved a 0-cell out of the classification");
            if (s.middle[d].hom != s.middle[c].hom) return bad("H^2 action changed A2");
            orbit.insert(d);
        }
        if (static_cast<long long>(orbit.size()) != H2.order()) return bad("H^2 action is not free");
        long long fibre = 0;
        for (const auto& m : s.middle) fibre += m.hom == s.middle[c].hom;
        if (static_cast<long long>(orbit.size()) != fibre) return bad("fibre is not a single H^2 orbit");
    }
    // right node: image = preimage of obs
    for (std::size_t i = 0; i < s.homs.size(); ++i) {
        bool hit = false;
        for (const auto& m : s.middle) hit |= m.hom == static_cast<int>(i);
        bool pre = H3.sub(s.transgressed[i], s.obs) == H3.zero();
        if (hit != pre) return bad("image differs from the preimage of obs at hom " + std::to_string(i));
    }
    return {};
}

std::string OrbifoldInvariant::str() const {
    std::string sum;
    for (std::size_t i = 0; i < summands.size(); ++i) sum += (i ? " ⊕ Z/" : "Z/") + std::to_string(summands[i]);
    if (sum.empty()) sum = "0";
    if (picard) return "0 → Z → Pic → " + sum + " → 0 (extension class not determined)";
    return sum;
}

OrbifoldInvariant orbifold_invariants(const std::vector<long long>& signature, int degree) {
    for (long long k : signature)
        if (k < 2) raise(ErrorKind::BadSignature, "signature entries must be at least 2");
    if (degree < 2) raise(ErrorKind::BadDegree, "degree must be at least 2");
    OrbifoldInvariant out;
    out.degree = degree;
    if (degree == 2) {
        out.picard = true;
        out.summands = signature;
    } else if (degree % 2 == 0) {
        out.summands = signature;
    }
    return out;
}

} // namespace tt
