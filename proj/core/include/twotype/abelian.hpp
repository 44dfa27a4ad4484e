#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twotype/smith.hpp"

namespace tt {

using AbElem = std::vector<long long>;

// Finite abelian group Z/d1 ⊕ ... ⊕ Z/dk with d1 | d2 | ... and every di >= 2.
class FinAbGroup {
public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<long long> factors);
    static FinAbGroup cyclic(long long n);

    const std::vector<long long>& factors() const noexcept { return d_; }
    int rank() const noexcept { return static_cast<int>(d_.size()); }
    long long order() const;
    long long exponent() const { return d_.empty() ? 1 : d_.back(); }
    bool trivial() const noexcept { return d_.empty(); }

    AbElem zero() const { return AbElem(d_.size(), 0); }
    AbElem reduce(AbElem a) const;
    AbElem add(const AbElem& a, const AbElem& b) const;
    AbElem sub(const AbElem& a, const AbElem& b) const;
    AbElem neg(const AbElem& a) const;
    AbElem scale(long long k, const AbElem& a) const;
    bool is_zero(const AbElem& a) const;
    AbElem basis(int i) const;

    // mixed-radix enumeration, last coordinate fastest
    long long index(const AbElem& a) const;
    AbElem element(long long idx) const;

    std::string str() const; // "0", "Z/2", "Z/2 ⊕ Z/4"

    bool operator==(const FinAbGroup& o) const { return d_ == o.d_; }

private:
    std::vector<long long> d_;
};

// Homomorphism given by an integer matrix on coordinate representatives:
// rows = target rank, columns = source rank.
struct AbHom {
    FinAbGroup source;
    FinAbGroup target;
    IntMat matrix;

    AbElem operator()(const AbElem& a) const;
    bool well_defined() const;
    bool is_zero() const;
    bool bijective() const;
    static AbHom identity(const FinAbGroup& g);
    static AbHom zero(const FinAbGroup& s, const FinAbGroup& t);
    static AbHom from_images(const FinAbGroup& s, const FinAbGroup& t, const std::vector<AbElem>& cols);
    bool operator==(const AbHom& o) const;
};

AbHom compose(const AbHom& f, const AbHom& g); // f after g
AbHom inverse(const AbHom& f);                // f bijective
AbHom ab_add(const AbHom& f, const AbHom& g);

// A subgroup realised as a group of its own together with the inclusion.
struct AbSubgroup {
    FinAbGroup group;
    AbHom incl;
    // coordinates of x in the subgroup, or nullopt if x is outside it
    std::optional<AbElem> coords(const AbElem& x) const;

    SmithForm form;
    std::vector<int> kept; // Smith positions surviving, in group order
    std::vector<long long> scale;
    FinAbGroup ambient;
};

struct AbQuotient {
    FinAbGroup group;
    AbHom proj;
    std::vector<AbElem> gens; // the generators quotiented out
    // representative of a class
    AbElem lift(const AbElem& q) const;
    // integer coefficients c with x = sum c_j gens_j, or nullopt
    std::optional<std::vector<long long>> solve(const AbElem& x) const;

    SmithForm form;
    std::vector<int> kept;
    FinAbGroup ambient;
};

AbSubgroup ab_subgroup(const FinAbGroup& g, const std::vector<AbElem>& gens);
AbQuotient ab_quotient(const FinAbGroup& g, const std::vector<AbElem>& gens);
AbSubgroup ab_kernel(const AbHom& f);
AbSubgroup ab_image(const AbHom& f);

// all elements, in index order
std::vector<AbElem> elements(const FinAbGroup& g);

// Hom(A, B) as a list of matrices (brute force; used for small groups)
std::vector<AbHom> all_ab_homs(const FinAbGroup& a, const FinAbGroup& b);

} // namespace tt
