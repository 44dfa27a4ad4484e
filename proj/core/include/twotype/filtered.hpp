#pragma once

#include <vector>

#include "twotype/cochain.hpp"

namespace tt {

// A cochain in F^pC^n: a function on G^n with values in the H-module Z
// whose first min(p, n) arguments lie in H. Stored on all of G^n; the
// complex operations only ever write inside the filtration domain.
struct FilteredCochain {
    int p = 0;
    int n = 0;
    std::vector<long long> data;
    bool operator==(const FilteredCochain& o) const { return p == o.p && n == o.n && data == o.data; }
    bool operator!=(const FilteredCochain& o) const { return !(*this == o); }
};

class FilteredComplex {
public:
    FilteredComplex(const CosetSection& s, ModuleRef inner);

    const CosetSection& section() const noexcept { return s_; }
    const PiModule& inner() const { return *inner_; }

    // no identity argument, first min(p, n) arguments in H, and for
    // p < n the argument p+1 is not a coset representative
    bool in_domain(int p, const Args& x) const;
    std::vector<Args> domain(int p, int n) const;
    bool in_filtration(const FilteredCochain& k) const;

    FilteredCochain zero(int p, int n) const;
    AbElem at(const FilteredCochain& k, const Args& x) const;
    void set(FilteredCochain& k, const Args& x, const AbElem& v) const;
    FilteredCochain add(const FilteredCochain& a, const FilteredCochain& b) const;
    FilteredCochain sub(const FilteredCochain& a, const FilteredCochain& b) const;
    bool is_zero(const FilteredCochain& k) const;

    FilteredCochain d(const FilteredCochain& k) const;        // F^pC^n -> F^pC^{n+1}
    FilteredCochain h(const FilteredCochain& k) const;        // F^pC^{n+1} -> F^pC^n
    FilteredCochain proj(const FilteredCochain& k) const;     // P_p on F^pC^n
    FilteredCochain inflate(const FilteredCochain& k) const;  // F^{p+1}C^n -> F^pC^n
    FilteredCochain restrict(const FilteredCochain& k) const; // F^pC^n -> F^{p+1}C^n

private:
    CosetSection s_;
    ModuleRef inner_;
    int g_;
    int k_;
    std::size_t index(const Args& x) const;
    AbElem act(int h, const AbElem& v) const { return inner_->act(s_.local(h), v); }
};

} // namespace tt
