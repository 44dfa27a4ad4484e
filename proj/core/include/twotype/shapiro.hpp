#pragma once

#include <memory>
#include <optional>
#include <utility>

#include "twotype/cochain.hpp"

namespace tt {

// Hom(F, Z) for F the right cosets of H in G, with G acting by
// (w.z)(r) = a((rw)')(z(bar(rw))). Coordinate (i, f) sits at i*|F| + f.
// Only twists inflated from an H-module are representable.
struct CoinducedModule {
    std::shared_ptr<const CosetSection> section;
    ModuleRef inner;  // over section->subgroup_group()
    ModuleRef module; // over section->group()

    int cosets() const { return section->cosets(); }
    int coord(int component, int coset) const { return component * cosets() + coset; }
    AbElem eval(const AbElem& z, int coset) const;
    AbElem constant(const AbElem& v) const;

    static CoinducedModule build(const CosetSection& s, ModuleRef inner);
};

Cochain shapiro_restrict(const Cochain& k, const CoinducedModule& cm);
Cochain shapiro_inflate(const Cochain& b, const CoinducedModule& cm);

// (hK, PK) for K of degree n+1; dh + hd = id - P. For K of degree 0
// there is no hK.
struct BarHomotopy {
    std::optional<Cochain> h;
    Cochain p;
};
BarHomotopy bar_homotopy(const Cochain& k, const CoinducedModule& cm);
Cochain bar_h(const Cochain& k, const CoinducedModule& cm); // degree >= 1
Cochain bar_p(const Cochain& k, const CoinducedModule& cm);

} // namespace tt
