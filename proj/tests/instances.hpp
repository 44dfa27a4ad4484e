#pragma once

// Every 0-cell (A, zeta) with |gamma'| |pi1'| <= bound over a fixed list of
// acting types, targets, outer maps and injective A2.

#include <vector>

#include "twotype/actions.hpp"
#include "twotype/cohomology.hpp"
#include "twotype/error.hpp"

namespace inst {

using namespace tt;

inline ModuleRef trivial(const FiniteGroup& g, long long n) {
    return make_module(PiModule::trivial(g, FinAbGroup::cyclic(n)));
}

inline std::vector<TwoType> acting_types() {
    FiniteGroup z1 = FiniteGroup::trivial(), z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    auto none = [](const FiniteGroup& g) { return make_module(PiModule::trivial(g, FinAbGroup())); };
    ModuleRef m22 = trivial(z2, 2);
    std::vector<TwoType> out = {
        TwoType::strict(none(z1)),
        TwoType::strict(none(z2)),
        TwoType::strict(none(z3)),
        TwoType::strict(none(FiniteGroup::cyclic(4))),
        TwoType::strict(none(FiniteGroup::klein())),
        TwoType::strict(none(FiniteGroup::symmetric(3))),
        TwoType::strict(m22),
        TwoType::make(m22, Cohomology(m22, 3).generators().at(0)),
        TwoType::strict(trivial(z2, 3)),
        TwoType::strict(trivial(z3, 2)),
        TwoType::strict(trivial(z1, 2)),
    };
    return out;
}

inline std::vector<FiniteGroup> targets() {
    return {FiniteGroup::trivial(),   FiniteGroup::cyclic(2),    FiniteGroup::cyclic(3),
            FiniteGroup::cyclic(4),   FiniteGroup::klein(),      FiniteGroup::cyclic(5),
            FiniteGroup::cyclic(6),   FiniteGroup::symmetric(3), FiniteGroup::cyclic(7),
            FiniteGroup::cyclic(8),   FiniteGroup::dihedral(4),  FiniteGroup::quaternion(),
            FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4))};
}

// injective maps from a cyclic (or zero) pi2' into the centre
inline std::vector<AbHom> injective_a2(const TwoType& t, const FiniteGroup& g) {
    AbelianPart z = abelian_part(g, centre(g));
    const FinAbGroup& p2 = t.pi2->coeff;
    if (p2.trivial()) return {AbHom::zero(p2, z.group)};
    std::vector<AbHom> out;
    const long long n = p2.order();
    for (int x : z.elems)
        if (g.elem_order(x) == n) out.push_back(AbHom::from_images(p2, z.group, {z.to_ab(x)}));
    return out;
}

inline std::vector<PointedAction> small_actions(int bound = 16) {
    std::vector<PointedAction> out;
    for (const TwoType& t : acting_types())
        for (const FiniteGroup& g : targets()) {
            if (t.pi1.order() * g.order() > bound) continue;
            AutData aut = automorphisms(g);
            for (const std::vector<int>& outer : all_homs(t.pi1, aut.out))
                for (const AbHom& a2 : injective_a2(t, g)) {
                    ZeroCellClasses c;
                    try {
                        c = classify_0cells(t, g, outer, a2);
                    } catch (const Error& e) {
                        if (e.kind() == ErrorKind::NotEquivariant) continue;
                        throw;
                    }
                    for (const PointedAction& p : c.classes) out.push_back(p);
                }
        }
    return out;
}

} // namespace inst
