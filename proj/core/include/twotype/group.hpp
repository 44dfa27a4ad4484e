#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tt {

// Finite group stored as a flat multiplication table. Element 0 is the
// identity; tables are relabeled on construction so this always holds.
class FiniteGroup {
public:
    FiniteGroup() : table_{0}, inv_{0}, relabel_{0}, label_("1") {}

    static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                  std::string label = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n);
    static FiniteGroup dihedral(int n); // order 2n
    static FiniteGroup quaternion();
    static FiniteGroup klein();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup opposite(const FiniteGroup& g);

    int order() const noexcept { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int elem_order(int a) const;

    template <class... Xs>
    int prod(int a, Xs... xs) const {
        if constexpr (sizeof...(xs) == 0) return a;
        else return mul(a, prod(xs...));
    }
    int prod_of(const std::vector<int>& xs) const;

    bool is_abelian() const;
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    // relabel()[i] is the index that input row i received.
    const std::vector<int>& relabel() const noexcept { return relabel_; }
    std::vector<std::vector<int>> rows() const;
    const std::vector<int>& flat() const noexcept { return table_; }

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    int n_ = 1;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<int> relabel_;
    std::string label_;
};

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> image;

    int operator()(int a) const { return image[a]; }
    bool is_hom() const;
    bool injective() const;
    bool surjective() const;
    std::vector<int> kernel() const;
    static GroupHom identity(const FiniteGroup& g);
    static GroupHom trivial(const FiniteGroup& s, const FiniteGroup& t);
};

GroupHom compose(const GroupHom& f, const GroupHom& g); // f after g

// Subsets of a group are sorted element lists.
using Subset = std::vector<int>;

bool is_subgroup(const FiniteGroup& g, const Subset& h);
bool is_normal(const FiniteGroup& g, const Subset& h);
Subset generated(const FiniteGroup& g, const std::vector<int>& gens);
Subset centre(const FiniteGroup& g);
Subset centralizer(const FiniteGroup& g, const Subset& s);
std::vector<int> min_generating_set(const FiniteGroup& g);

// The subgroup as a group of its own: local index i stands for h[i].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subset& h);

struct Quotient {
    FiniteGroup group;
    std::vector<int> proj;    // element of g -> coset index
    std::vector<int> section; // coset index -> smallest element of the coset
};
Quotient quotient(const FiniteGroup& g, const Subset& normal);

// Right cosets Hx, each represented by its smallest element; the
// identity represents H itself.
class CosetSection {
public:
    CosetSection(const FiniteGroup& g, const Subset& h);

    const FiniteGroup& group() const noexcept { return g_; }
    const Subset& subgroup() const noexcept { return h_; }
    const FiniteGroup& subgroup_group() const noexcept { return hg_; }
    const std::vector<int>& transversal() const noexcept { return reps_; }
    int cosets() const noexcept { return static_cast<int>(reps_.size()); }

    int bar(int x) const { return reps_[coset_[x]]; }
    int coset_of(int x) const { return coset_[x]; }
    int prime(int x) const { return prime_[x]; } // x·x̄⁻¹, as an element of g
    bool in_h(int x) const { return local_[x] >= 0; }
    int local(int x) const { return local_[x]; } // g index -> subgroup_group index
    int global(int i) const { return h_[i]; }
    int prime_local(int x) const { return local_[prime_[x]]; }

private:
    FiniteGroup g_;
    Subset h_;
    FiniteGroup hg_;
    std::vector<int> reps_;
    std::vector<int> coset_;
    std::vector<int> prime_;
    std::vector<int> local_;
};

struct AutData {
    FiniteGroup group;
    FiniteGroup aut;                    // composition a∘b applies b first
    std::vector<std::vector<int>> maps; // maps[a][x]
    std::vector<int> inn_of;            // g -> index of conjugation by g
    Subset inn;
    FiniteGroup out;
    std::vector<int> out_proj;    // aut index -> out index
    std::vector<int> out_section; // out index -> aut index

    int index_of(const std::vector<int>& map) const; // -1 if not an automorphism
    int apply(int a, int x) const { return maps[a][x]; }
};

inline constexpr int kAutSearchBound = 24;
AutData automorphisms(const FiniteGroup& g, int bound = kAutSearchBound);

std::vector<std::vector<int>> all_homs(const FiniteGroup& s, const FiniteGroup& t);

} // namespace tt
