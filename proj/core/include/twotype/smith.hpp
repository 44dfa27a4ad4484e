#pragma once

#include <vector>

namespace tt {

using IntMat = std::vector<std::vector<long long>>;

// Smith form of an integer matrix over Z/e. Because every lattice fed in
// here contains eZ^n, the result is the integer Smith form reduced mod e.
// u * a * v = diag(s) mod e. Each s[i] is a divisor of e, with e itself
// standing for a zero entry; s[i] | s[i+1]. s has one entry per row.
struct SmithForm {
    long long e = 1;
    std::vector<long long> s;
    IntMat u, uinv, v;
};

struct SmithTrack {
    bool u = true, uinv = true, v = true;
};

SmithForm smith_mod(const IntMat& a, int rows, int cols, long long e, SmithTrack track = {});

long long mod(long long a, long long m);
long long mulmod(long long a, long long b, long long m);
long long gcdll(long long a, long long b);
long long lcmll(long long a, long long b);
inline long long mulmod_small(long long a, long long b, long long m) { return a * b % m; }

// x with a*x = 1 mod m; requires gcd(a,m) = 1
long long invmod(long long a, long long m);

} // namespace tt
