#pragma once

#include <map>
#include <vector>

#include "twotype/abelian.hpp"
#include "twotype/group.hpp"

namespace tt {

// An abelian subgroup of a finite group presented in invariant-factor form.
struct AbelianPart {
    Subset elems;
    FinAbGroup group;
    std::vector<AbElem> coords; // coords[i] belongs to elems[i]
    std::map<AbElem, int> elem_of;

    AbElem to_ab(int x) const;
    int to_elem(const AbElem& a) const { return elem_of.at(group.reduce(a)); }
};

// throws NotASubgroup unless s is an abelian subgroup of g
AbelianPart abelian_part(const FiniteGroup& g, const Subset& s);

// left action of a group on another by automorphisms: maps[x][y]
struct GroupAction {
    FiniteGroup acting;
    FiniteGroup target;
    std::vector<std::vector<int>> maps;

    int operator()(int x, int y) const { return maps[x][y]; }
    bool valid() const;
    static GroupAction trivial(const FiniteGroup& a, const FiniteGroup& t);
};

inline constexpr long long kH1Bound = 1LL << 22;

// H^1 with non-abelian coefficients: crossed homomorphisms
// c(xy) = c(x) (x.c(y)) modulo c ~ g^-1 c(x) (x.g).
struct NonabelianH1 {
    std::vector<std::vector<int>> cocycles; // sorted
    std::vector<int> class_of;              // per cocycle
    std::vector<std::vector<int>> reps;     // lexicographically least member of each class
    int classes() const { return static_cast<int>(reps.size()); }
    int class_index(const std::vector<int>& c) const; // -1 if not a cocycle
};

NonabelianH1 h1_nonabelian(const GroupAction& act, long long bound = kH1Bound);
bool is_crossed_hom(const GroupAction& act, const std::vector<int>& c);
// fixed points of the action
Subset h0_nonabelian(const GroupAction& act);

} // namespace tt
