#pragma once

#include <memory>
#include <vector>

#include "twotype/abelian.hpp"
#include "twotype/group.hpp"

namespace tt {

// Finite abelian group with a left action of a finite group.
struct PiModule {
    FiniteGroup group;
    FinAbGroup coeff;
    std::vector<AbHom> action; // action[g]

    AbElem act(int g, const AbElem& a) const { return action[g](a); }
    bool trivial_action() const;
    // throws InvalidAction with the witnessing pair
    void validate() const;

    static PiModule trivial(const FiniteGroup& g, const FinAbGroup& a);
    // g acts by -1 where sign[g] = -1
    static PiModule via_sign(const FiniteGroup& g, const FinAbGroup& a, const std::vector<int>& sign);
    static PiModule from_matrices(const FiniteGroup& g, const FinAbGroup& a, const std::vector<IntMat>& mats);
    // module over the opposite group, w acting by w^{-1}
    static PiModule opposite(const PiModule& m);
    // restriction along a homomorphism into the acting group
    static PiModule pullback(const PiModule& m, const GroupHom& f);
};

using ModuleRef = std::shared_ptr<const PiModule>;

inline ModuleRef make_module(PiModule m) { return std::make_shared<const PiModule>(std::move(m)); }

// sign character of a permutation-like group: homomorphisms to {+1,-1}
std::vector<std::vector<int>> sign_characters(const FiniteGroup& g);

// maps pi2 -> z that intertwine the actions
bool equivariant(const AbHom& f, const PiModule& src, const PiModule& dst);

} // namespace tt
