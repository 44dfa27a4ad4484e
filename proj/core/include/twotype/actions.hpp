#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twotype/nonabelian.hpp"
#include "twotype/shapiro.hpp"
#include "twotype/twogroup.hpp"

namespace tt {

// Action of the 2-group (pi1', pi2', K3') on the one-object groupoid B_gamma:
// A_s A_t = Inn_{zeta(s,t)} A_{st}, the central defect
// A_s(zeta(t,w)) zeta(s,tw) (zeta(s,t) zeta(st,w))^-1 equals A2(K3'(s,t,w)),
// and A2 is equivariant.
struct PointedAction {
    TwoType acting;
    FiniteGroup gamma;
    std::shared_ptr<const AutData> aut;
    AbelianPart centre;   // Z(gamma)
    std::vector<int> a;   // pi1' -> aut index
    std::vector<int> zeta; // zeta[s * n + t], elements of gamma
    AbHom a2;             // pi2' -> centre.group

    static PointedAction make(TwoType acting, FiniteGroup gamma, std::vector<int> a, std::vector<int> zeta, AbHom a2);
    // A = 1, zeta = 1, A2 = 0
    static PointedAction trivial(TwoType acting, FiniteGroup gamma);

    int n() const { return acting.pi1.order(); }
    int zeta_at(int s, int t) const { return zeta[static_cast<std::size_t>(s) * n() + t]; }
    int a2_elem(const AbElem& y) const { return centre.to_elem(a2(y)); }
    // Z(gamma) with pi1' acting through A
    ModuleRef centre_module() const;
    // elements of gamma: A_s(zeta(t,w)) zeta(s,tw) (zeta(s,t) zeta(st,w))^-1
    int defect(int s, int t, int w) const;
    bool operator==(const PointedAction& o) const;
};

struct ActionReport {
    bool ok = true;
    std::string failure;
    Args witness;
};

ActionReport validate_action(const PointedAction& a);

// Transitive action of (pi1, pi2, K3) on the skeletal groupoid with objects
// the right cosets F of pi1' and every automorphism group gamma. Per w in
// pi1: a permutation of F and F -> Aut(gamma); per pair: F -> gamma; and
// pi2 -> Hom(F, Z(gamma)).
struct TransitiveAction {
    TwoType ambient;
    std::shared_ptr<const CosetSection> section;
    AbHom q; // pi2 -> pi2' with q K3|pi1' = K3'
    PointedAction pointed;
    CoinducedModule coinduced; // Hom(F, Z(gamma))
    std::vector<int> perm;     // perm[w * |F| + x] = w.x
    std::vector<int> a;        // a[w * |F| + x]
    std::vector<int> zeta;     // zeta[(t * n + w) * |F| + x]
    AbHom a2;                  // pi2 -> Hom(F, Z(gamma)) coordinates
    Cochain k;                 // the correction added to the inflated zeta

    int cosets() const { return section->cosets(); }
    int n() const { return ambient.pi1.order(); }
    int zeta_at(int t, int w, int x) const { return zeta[(static_cast<std::size_t>(t) * n() + w) * cosets() + x]; }
};

ActionReport validate_transitive(const TransitiveAction& t);

// throws SectionMismatch, IncompatibleTypes
TransitiveAction inflate_action(const PointedAction& a, const TwoType& ambient, const CosetSection& section, const AbHom& q);
// the component K3-correction (A2' q)_*(hK3) on its own
Cochain inflation_correction(const PointedAction& a, const TwoType& ambient, const CoinducedModule& cm, const AbHom& q);
PointedAction restrict_to_pointed(const TransitiveAction& t);

// 0-cells over a fixed outer representation and A2, modulo monoidal
// equivalence (A, zeta) ~ (Inn_h A, h_s A_s(h_t) zeta(s,t) h_st^-1).
struct ZeroCellClasses {
    FinAbGroup obstruction_group; // H^3(pi1', Z')
    AbElem obstruction;           // [D zeta0] - [A2 K3']
    bool empty = false;
    FinAbGroup torsor_group;      // H^2(pi1', Z')
    std::vector<PointedAction> classes; // base shifted by each H^2 element, index order
    // residual action of the automorphisms of gamma fixing outer rep and A2
    std::vector<int> stabiliser;        // aut indices
    std::vector<int> orbit;             // orbit id per class (least member index)
    std::vector<int> outer;
    std::shared_ptr<const Cohomology> h2;
    long long count() const { return static_cast<long long>(classes.size()); }
};

// outer: pi1' -> Out(gamma) indices; a2: pi2' -> Z(gamma) coordinates
ZeroCellClasses classify_0cells(const TwoType& acting, const FiniteGroup& gamma, const std::vector<int>& outer,
                                const AbHom& a2);
// index of the class of a valid action with the same outer rep and A2, or -1
int zero_cell_class(const ZeroCellClasses& c, const PointedAction& a);

// 1-cell (f, xi): f A'_w = Inn_{xi_w} B_w f and f(zeta'(s,t)) xi_st = xi_s B_s(xi_t) zeta''(s,t),
// where B is the target action restricted along p1.
struct OneCell {
    std::vector<int> f;  // gamma' -> gamma''
    std::vector<int> xi; // pi1' -> gamma''
    bool operator==(const OneCell& o) const { return f == o.f && xi == o.xi; }
};

struct OneCellSetting {
    PointedAction src;
    PointedAction dst;
    GroupHom p1; // pi1' -> pi1'' injective
    AbHom p2;    // pi2' -> pi2'' surjective
};

bool is_one_cell(const OneCellSetting& s, const OneCell& c);

struct OneCellClasses {
    bool empty = false;
    std::vector<int> f;
    Subset centraliser;            // C_f in gamma''
    std::optional<OneCell> base;
    GroupAction twisted;           // pi1' on C_f, c -> Inn_{xi_w} B_w(c)
    NonabelianH1 h1;               // in local indices of C_f
    std::vector<OneCell> classes;  // base twisted by each H^1 representative
    long long count() const { return static_cast<long long>(classes.size()); }
};

// throws IncompatibleTypes
OneCellClasses classify_1cells(const OneCellSetting& s, const std::vector<int>& f);

// 2-cells phi: (f, xi) => (g, eta), g = Inn_phi f, eta_w = phi xi_w B_w(phi)^-1
bool is_two_cell(const OneCellSetting& s, const OneCell& from, const OneCell& to, int phi);

struct TwoCellClasses {
    bool empty = false;
    std::string reason;             // which check failed
    int class_in_h1 = -1;           // obstruction: class of the difference cocycle
    Subset centraliser;             // C_f
    Subset fixed;                   // H^0(pi1', C_f)
    std::vector<int> cells;         // all phi, sorted
};

TwoCellClasses classify_2cells(const OneCellSetting& s, const OneCell& from, const OneCell& to);

// Right actions R_w R_t = Inn_{rho(t,w)} R_{tw} with
// rho(t,w) rho(s,tw) (R_w(rho(s,t)) rho(st,w))^-1 = R_{stw}(A2 K3(s,t,w))^-1.
struct RightAction {
    TwoType acting;
    FiniteGroup gamma;
    std::shared_ptr<const AutData> aut;
    AbelianPart centre;
    std::vector<int> r;
    std::vector<int> rho; // rho[t * n + w]
    AbHom a2;
    int n() const { return acting.pi1.order(); }
    bool operator==(const RightAction& o) const;
};

ActionReport validate_right(const RightAction& r);
PointedAction right_to_left(const RightAction& r);
RightAction left_to_right(const PointedAction& a);

} // namespace tt
