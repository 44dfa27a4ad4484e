#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twotype/cohomology.hpp"

namespace tt {

// (pi1, pi2, k3) with a chosen normalized representative of k3.
struct TwoType {
    FiniteGroup pi1;
    ModuleRef pi2;
    Cochain k3;
    AbElem k3_class; // coordinates in H^3(pi1, pi2)

    // throws NotNormalized / NotACocycle
    static TwoType make(ModuleRef pi2, Cochain k3);
    static TwoType strict(ModuleRef pi2);
};

struct Arrow {
    int obj = 0;
    AbElem b;
    bool operator==(const Arrow& o) const { return obj == o.obj && b == o.b; }
};

// Skeletal 2-group: objects pi1, arrows pi1 x pi2, product of Arrows the
// semidirect law (t, B)(w, A) = (tw, B + t.A), associator K3.
class TwoGroup {
public:
    explicit TwoGroup(TwoType t) : t_(std::move(t)) {}
    // bypasses validation; used to exhibit coherence failures
    static TwoGroup unchecked(ModuleRef pi2, Cochain k3);

    const TwoType& type() const noexcept { return t_; }
    const FiniteGroup& pi1() const { return t_.pi1; }
    const PiModule& pi2() const { return *t_.pi2; }
    const Cochain& k3() const { return t_.k3; }

    int objects() const { return t_.pi1.order(); }
    long long arrows() const { return t_.pi1.order() * t_.pi2->coeff.order(); }
    Arrow arrow(long long idx) const;

    Arrow unit(int obj) const { return {obj, t_.pi2->coeff.zero()}; }
    Arrow tensor(const Arrow& l, const Arrow& r) const;
    Arrow compose(const Arrow& later, const Arrow& earlier) const;
    Arrow inverse(const Arrow& a) const;
    // kappa: s(tw) => (st)w, an arrow at stw
    Arrow associator(int s, int t, int w) const;

private:
    TwoType t_;
};

TwoGroup build_two_group(const TwoType& t);

struct CoherenceReport {
    bool ok = true;
    std::string failure;
    Args witness;
};
CoherenceReport coherence_check(const TwoGroup& g);

// Monoidal functor (f1, f2, c) with dc = f2 K3 - f1^* K3'.
struct TwoGroupMor {
    GroupHom f1;
    AbHom f2;
    Cochain c; // over source pi1, coefficients f1^* pi2'
};

bool verify_mor(const TwoGroupMor& m, const TwoGroup& src, const TwoGroup& dst);
TwoGroupMor compose(const TwoGroupMor& g, const TwoGroupMor& f); // g after f
TwoGroupMor identity_mor(const TwoGroup& g);

// throws CochainMismatch unless dc = K3 - K3~
std::pair<TwoGroupMor, TwoGroupMor> cochain_equivalence(const TwoGroup& g, const TwoGroup& gt, const Cochain& c);

struct MorphismClasses {
    bool empty = false;
    FinAbGroup obstruction_group; // H^3(pi1, f1^* pi2')
    AbElem obstruction;
    FinAbGroup torsor_group; // H^2(pi1, f1^* pi2')
    std::vector<TwoGroupMor> classes; // base + representative of each H^2 element, index order
    long long count() const { return static_cast<long long>(classes.size()); }
};

// throws NotEquivariant
MorphismClasses classify_morphisms(const TwoGroup& g, const TwoGroup& gp, const GroupHom& f1, const AbHom& f2);

struct OppositeTwoGroup {
    TwoGroup op;
    GroupHom op1; // x -> x^{-1}
    AbHom op2;    // A -> -A
    bool coop_identity = false; // op1^* K^op = -coop(K) exactly
};
OppositeTwoGroup opposite_two_group(const TwoGroup& g);

} // namespace tt
