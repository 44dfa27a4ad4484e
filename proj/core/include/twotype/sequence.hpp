#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twotype/actions.hpp"

namespace tt {

// class of phi_* K3 in H^3(pi1, Z)
AbElem transgression(const AbHom& phi, const TwoType& t, const ModuleRef& z);

// 0 -> H^2(pi1, Z) -> {0-cells} -> Hom^{pi1}(pi2, Z) -> (H^3(pi1, Z), obs)
struct SequenceInstance {
    TwoType type;
    FiniteGroup gamma;
    std::vector<int> outer;
    ModuleRef z;                       // centre of gamma through outer
    std::shared_ptr<const Cohomology> h2;
    std::shared_ptr<const Cohomology> h3;
    std::vector<AbHom> homs;           // equivariant pi2 -> Z, index 0 = zero map
    std::vector<AbElem> transgressed;  // per hom
    AbElem obs;
    std::vector<ZeroCellClasses> fibres; // 0-cells with A2 = homs[i]

    struct Cell {
        int hom;
        int index; // position within fibres[hom].classes
    };
    std::vector<Cell> middle;
    int basepoint() const; // trivial-A2 cell of H^2 index 0, or -1
    // H^2(pi1, Z) -> middle at the basepoint
    std::vector<int> first_map() const;
    // H^2 acting on a middle cell, computed by shifting zeta by a representative
    int act(int h2_index, int cell) const;
};

SequenceInstance homotopy_exact_sequence(const TwoType& t, const FiniteGroup& gamma, const std::vector<int>& outer);

struct SequenceAudit {
    bool ok = true;
    std::string failure;
};
// injectivity at H^2, free action with fibres = orbits, image = preimage of obs
SequenceAudit audit_sequence(const SequenceInstance& s);

struct OrbifoldInvariant {
    int degree = 0;
    std::vector<long long> summands; // Z/n_k, in signature order
    bool picard = false;             // degree 2: 0 -> Z -> Pic -> (+) Z/n_k -> 0
    std::string str() const;
};
OrbifoldInvariant orbifold_invariants(const std::vector<long long>& signature, int degree);

} // namespace tt
