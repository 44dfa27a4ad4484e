#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "twotype/module.hpp"

namespace tt {

using Args = std::vector<int>;

// Normalized n-cochain: a function G^n -> coeff vanishing whenever an
// argument is the identity. Values are stored for every tuple, first
// argument most significant.
class Cochain {
public:
    Cochain() = default;
    Cochain(ModuleRef m, int degree);

    int degree() const noexcept { return n_; }
    const PiModule& module() const { return *m_; }
    const ModuleRef& module_ref() const noexcept { return m_; }
    const FinAbGroup& coeff() const { return m_->coeff; }

    std::size_t tuples() const noexcept { return tuples_; }
    std::size_t index(const Args& x) const;
    Args args(std::size_t idx) const;

    AbElem at(const Args& x) const;
    AbElem at_index(std::size_t idx) const;
    // throws NotNormalized on a nonzero value at an identity argument
    void set(const Args& x, const AbElem& v);
    void add_at(const Args& x, const AbElem& v);

    bool is_zero() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain scaled(long long k) const;
    bool operator==(const Cochain& o) const;
    bool operator!=(const Cochain& o) const { return !(*this == o); }

    // lexicographically first tuple where the two differ
    std::optional<Args> first_difference(const Cochain& o) const;

    const std::vector<long long>& raw() const noexcept { return data_; }
    std::vector<long long>& raw() noexcept { return data_; }

private:
    ModuleRef m_;
    int n_ = 0;
    int g_ = 1;
    int k_ = 0;
    std::size_t tuples_ = 1;
    std::vector<long long> data_;
};

void for_each_tuple(int order, int n, const std::function<void(const Args&)>& f);
std::size_t ipow(std::size_t b, int e);

Cochain differential(const Cochain& c);

// Normalized coordinates: component-major over non-identity tuples, so
// the factor list keeps its divisor chain.
FinAbGroup cochain_group(const PiModule& m, int n);
AbElem to_coords(const Cochain& c);
Cochain from_coords(ModuleRef m, int n, const AbElem& x);
IntMat differential_matrix(const PiModule& m, int n);
std::size_t normalized_tuples(const PiModule& m, int n);

// push coefficients forward along a map of modules, pull back along a group map
Cochain push_forward(const Cochain& c, const AbHom& f, ModuleRef target);
Cochain pull_back(const Cochain& c, const GroupHom& f, ModuleRef target);

} // namespace tt
