#pragma once

#include <vector>

#include "twotype/nonabelian.hpp"
#include "twotype/twogroup.hpp"

namespace tt {

// boundary G2 -> G1 with G1 acting on G2 by automorphisms
struct CrossedModule {
    FiniteGroup g2;
    FiniteGroup g1;
    GroupHom boundary;
    GroupAction action; // G1 on G2

    // throws NotPeiffer (or NotAHomomorphism) with the witness
    void validate() const;
};

struct CrossedExtraction {
    TwoType type;
    Quotient coker;             // pi1 = G1 / im(boundary)
    AbelianPart kernel;         // pi2 = ker(boundary), central in G2
    std::vector<int> section;   // coker element -> G1 element, section[0] = 0
    std::vector<int> preimage;  // G1 element in the image -> least preimage, else -1
};

inline constexpr int kCrossedBound = 2048;

// section: coker index -> chosen lift; empty selects least lifts
CrossedExtraction crossed_module_to_two_type(const CrossedModule& cm, const std::vector<int>& section = {});

// Aut of the skeletal groupoid with object set F (|F| = f) and stabiliser
// gamma, as the crossed module Hom(F, gamma) -> Sym_F x| Hom(F, Aut gamma).
struct AutTwoGroup {
    int f = 1;
    FiniteGroup gamma;
    AutData aut;
    FiniteGroup sym;
    FiniteGroup g1;                // elements (w, A), index w * |Aut|^f + A
    FiniteGroup g2;                // Hom(F, gamma), pointwise
    CrossedModule cm;
    FiniteGroup out_group;         // Sym_F x| Hom(F, Out gamma)
    GroupHom to_out;               // G1 -> out_group
    Subset centre_part;            // Hom(F, Z(gamma)) inside G2
    CrossedExtraction two_type;    // (Gamma_1, Gamma_2, obs)
    GroupHom coker_to_out;         // the induced isomorphism
    bool exact = false;            // the four-term sequence checked at each node

    int g1_index(int w, const std::vector<int>& a) const;
    std::pair<int, std::vector<int>> g1_parts(int idx) const;
    int g2_index(const std::vector<int>& g) const;
    std::vector<int> g2_parts(int idx) const;
};

AutTwoGroup aut_two_group(int f, const FiniteGroup& gamma, int bound = kCrossedBound);

} // namespace tt
