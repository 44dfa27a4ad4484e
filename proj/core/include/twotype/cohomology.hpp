#pragma once

#include <optional>
#include <vector>

#include "twotype/cochain.hpp"

namespace tt {

// Matrices larger than this many entries are refused.
inline constexpr long long kCohomologyBound = 25'000'000;

// H^n(G, M) from the normalized complex by Smith forms.
class Cohomology {
public:
    Cohomology(ModuleRef m, int n, long long bound = kCohomologyBound);

    const FinAbGroup& group() const noexcept { return h_; }
    int degree() const noexcept { return n_; }
    const ModuleRef& module_ref() const noexcept { return m_; }

    // one cocycle per invariant factor of group()
    const std::vector<Cochain>& generators() const noexcept { return gens_; }
    bool is_cocycle(const Cochain& z) const;
    // class coordinates; throws NotACocycle
    AbElem classify(const Cochain& z) const;
    // b with db = z when z is a coboundary (degree >= 1)
    std::optional<Cochain> witness(const Cochain& z) const;
    Cochain representative(const AbElem& cls) const;
    bool cohomologous(const Cochain& a, const Cochain& b) const;

private:
    ModuleRef m_;
    int n_;
    FinAbGroup cn_;
    AbHom d_;
    AbSubgroup cocycles_;
    AbQuotient classes_;
    FinAbGroup h_;
    std::vector<Cochain> gens_;
};

} // namespace tt
