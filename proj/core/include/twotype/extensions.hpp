#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twotype/actions.hpp"
#include "twotype/crossed.hpp"

namespace tt {

// Carrier gamma' x pi1' with (y, t)(x, w) = (y A_t(x) zeta(t, w), tw).
// Element (x, w) has index x * |pi1'| + w.
class NonAssocExtension {
public:
    // throws InvalidAction unless the action validates and A2 is injective
    static NonAssocExtension build(const PointedAction& a);

    const PointedAction& action() const noexcept { return a_; }
    int order() const noexcept { return n_; }
    int elem(int x, int w) const { return x * m_ + w; }
    int gamma_part(int e) const { return e / m_; }
    int proj(int e) const { return e % m_; }
    int mul(int e, int f) const { return table_[static_cast<std::size_t>(e) * n_ + f]; }
    int left_inverse(int e) const { return linv_[e]; }
    int right_inverse(int e) const { return rinv_[e]; }
    // the associator K3'(e,f,g) as an element of gamma'
    int associator(int e, int f, int g) const;
    const std::vector<int>& table() const noexcept { return table_; }

private:
    PointedAction a_;
    int n_ = 0, m_ = 1;
    std::vector<int> table_, linv_, rinv_;
};

struct ExtensionAudit {
    bool ok = true;
    std::string failure;
    Args witness;
};
// restriction to gamma', the associator identity on all triples, identity and
// inverses, associativity with a factor in gamma', and the conjugation law
ExtensionAudit audit_extension(const NonAssocExtension& e);

NonAssocExtension build_nonassoc_extension(const PointedAction& a);

// e.g = e (g) right_inverse(e), as gamma' elements: result[e * |gamma'| + g]
std::vector<int> conjugation_action(const NonAssocExtension& e);

struct GroupExtension {
    FiniteGroup e;
    GroupHom iota; // gamma -> E
    GroupHom pi;   // E -> Q
    bool exact() const;
};

// throws NotAssociative unless K3' vanishes
GroupExtension to_group_extension(const NonAssocExtension& e);

// gamma' over pi1(q') = E'/pi2'; element (c, w) of the quotient has index
// c * |pi1'| + w with c a coset of the image of pi2'.
struct ExtractedCrossed {
    CrossedModule cm;
    Quotient gamma_mod_pi2;   // gamma' / A2(pi2')
    CrossedExtraction extraction;
    GroupHom pi1_to_coker;    // w -> class of (1, w)
    AbHom kernel_to_pi2;      // extracted pi2 coordinates -> pi2' coordinates
    Cochain k3_on_pi1;        // the extracted K3 moved to (pi1', pi2')
    bool exact = false;       // 1 -> pi2' -> gamma' -> pi1(q') -> pi1' -> 1
};
// throws QuotientNotAssociative
ExtractedCrossed extract_crossed_module(const NonAssocExtension& e);

// S'(Y, X) = s(y) A_t(s(x)) zeta(t, w) s(class of that)^-1 over pi1(q') with
// values in pi2', and the orbit of k3(q') in H^3(pi1(q'), pi2(q')) where
// pi2(q') = ker(pi2 -> pi2').
struct CellAmbient {
    ModuleRef pi2; // over pi1'
    AbHom q;       // pi2 -> pi2'
    Cochain k3;    // over pi1' with q K3 = K3'
};

struct CellTwoType {
    FiniteGroup pi1q;          // pi1(q')
    GroupHom to_pi1;           // pi1(q') -> pi1'
    ModuleRef pi2_prime;       // pi2' over pi1(q')
    Cochain s_prime;
    bool differential_ok = false; // dS' = K3' pulled back
    ModuleRef pi2q;            // pi2(q') over pi1(q')
    FinAbGroup orbit_group;    // H^3(pi1(q'), pi2(q'))
    std::vector<AbElem> orbit; // sorted by index; no member is preferred
};

// section: cosets of A2(pi2') in gamma' -> gamma', section[0] = 0; empty for least lifts.
// Without an ambient pi2 = pi2' and the orbit is {0}.
CellTwoType cell_two_type(const NonAssocExtension& e, const std::vector<int>& section = {},
                          const std::optional<CellAmbient>& ambient = std::nullopt);

struct GroupExtensionClasses {
    ZeroCellClasses cells;
    std::vector<GroupExtension> extensions; // one per class
    bool empty() const { return cells.empty; }
    long long count() const { return static_cast<long long>(extensions.size()); }
};

// extensions 1 -> gamma -> E -> pi1 -> 1 inducing outer, up to the
// isomorphisms fixing gamma and pi1
GroupExtensionClasses classify_group_extensions(const FiniteGroup& pi1, const FiniteGroup& gamma,
                                                const std::vector<int>& outer);

} // namespace tt
