#include "twotype/module.hpp"

#include "twotype/error.hpp"

namespace tt {

bool PiModule::trivial_action() const {
    AbHom id = AbHom::identity(coeff);
    for (const auto& a : action)
        if (!(a == id)) return false;
    return true;
}

void PiModule::validate() const {
    if (static_cast<int>(action.size()) != group.order())
        raise(ErrorKind::InvalidAction, "action table size differs from group order");
    for (int g = 0; g < group.order(); ++g) {
        if (!(action[g].source == coeff) || !(action[g].target == coeff) || !action[g].well_defined())
            raise(ErrorKind::InvalidAction, "action of element " + std::to_string(g) + " is not an endomorphism");
    }
    if (!(action[0] == AbHom::identity(coeff)))
        raise(ErrorKind::InvalidAction, "identity acts nontrivially");
    for (int a = 0; a < group.order(); ++a)
        for (int b = 0; b < group.order(); ++b)
            if (!(action[group.mul(a, b)] == compose(action[a], action[b])))
                raise(ErrorKind::InvalidAction,
                      "action law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

PiModule PiModule::trivial(const FiniteGroup& g, const FinAbGroup& a) {
    return {g, a, std::vector<AbHom>(g.order(), AbHom::identity(a))};
}

PiModule PiModule::via_sign(const FiniteGroup& g, const FinAbGroup& a, const std::vector<int>& sign) {
    PiModule m = trivial(g, a);
    for (int x = 0; x < g.order(); ++x)
        if (sign[x] < 0)
            for (int i = 0; i < a.rank(); ++i) m.action[x].matrix[i][i] = a.factors()[i] - 1;
    m.validate();
    return m;
}

PiModule PiModule::from_matrices(const FiniteGroup& g, const FinAbGroup& a, const std::vector<IntMat>& mats) {
    PiModule m{g, a, {}};
    for (const auto& x : mats) m.action.push_back({a, a, x});
    m.validate();
    return m;
}

PiModule PiModule::opposite(const PiModule& m) {
    PiModule o{FiniteGroup::opposite(m.group), m.coeff, {}};
    for (int w = 0; w < m.group.order(); ++w) o.action.push_back(m.action[m.group.inv(w)]);
    return o;
}

PiModule PiModule::pullback(const PiModule& m, const GroupHom& f) {
    PiModule o{f.source, m.coeff, {}};
    for (int x = 0; x < f.source.order(); ++x) o.action.push_back(m.action[f(x)]);
    return o;
}

std::vector<std::vector<int>> sign_characters(const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (const auto& h : all_homs(g, FiniteGroup::cyclic(2))) {
        std::vector<int> s(g.order());
        for (int x = 0; x < g.order(); ++x) s[x] = h[x] ? -1 : 1;
        out.push_back(s);
    }
    return out;
}

bool equivariant(const AbHom& f, const PiModule& src, const PiModule& dst) {
    if (src.group.order() != dst.group.order()) return false;
    for (int g = 0; g < src.group.order(); ++g)
        if (!(compose(f, src.action[g]) == compose(dst.action[g], f))) return false;
    return true;
}

} // namespace tt
