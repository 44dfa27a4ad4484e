#pragma once

#include "twotype/cochain.hpp"

namespace tt {

// coop(K)(x1..xn) = e_n (x1...xn) K(xn^-1, ..., x1^-1), e_n = (-1)^{n(n+1)/2}
Cochain coop(const Cochain& k);
// C^{n+1} -> C^n with dh + hd = id - coop
Cochain coop_homotopy(const Cochain& k);

struct CoopSuite {
    Cochain coop;
    std::optional<Cochain> h; // absent in degree 0
};
CoopSuite coop_suite(const Cochain& k);

// K^op(w, t, s) = -(s t w)^{-1} K(s, t, w), over the opposite group with
// the opposite module. Throws NotACocycle.
Cochain opposite_postnikov(const Cochain& k3, ModuleRef op_module);
Cochain opposite_postnikov(const Cochain& k3);

// pullback along x -> x^{-1}, G -> G^op
Cochain pull_back_op1(const Cochain& kop, ModuleRef original);

} // namespace tt
