#include "twotype/smith.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

namespace tt {

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

long long mulmod(long long a, long long b, long long m) {
    if (m < (1LL << 31)) return a * b % m;
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long gcdll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
long long lcmll(long long a, long long b) { return a / gcdll(a, b) * b; }

namespace {

// g = x a + y b, g = gcd(a, b)
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    x = x0;
    y = y0;
    return a;
}

struct Reducer {
    IntMat a;
    int r, c;
    long long e;
    IntMat u, uinv, v;
    SmithTrack tr;
    int lo = 0; // rows and columns below lo are already settled

    long long g(long long x) const { return gcdll(x, e); }

    // x s + y t mod e, all inputs already reduced
    long long lin(long long x, long long s, long long y, long long t) const {
        if (e < (1LL << 31)) return (x * s + y * t) % e;
        return mod(mulmod(x, s, e) + mulmod(y, t, e), e);
    }

    // rows (p, q) <- M (p, q) with M = [[x, y], [z, w]] of determinant 1
    void rows2(int p, int q, long long x, long long y, long long z, long long w) {
        const bool keep_p = x == 1 && y == 0;
        auto mix = [&](IntMat& m, int from, int cols) {
            std::vector<long long>& mp = m[p];
            std::vector<long long>& mq = m[q];
            for (int j = from; j < cols; ++j) {
                long long s = mp[j], t = mq[j];
                if (s == 0 && t == 0) continue;
                if (!keep_p) mp[j] = lin(x, s, y, t);
                mq[j] = lin(z, s, w, t);
            }
        };
        mix(a, lo, c);
        if (tr.u) mix(u, 0, r);
        if (!tr.uinv) return;
        // uinv <- uinv M^{-1}, M^{-1} = [[w, -y], [-z, x]]
        const long long nz = mod(-z, e), ny = mod(-y, e);
        for (int i = 0; i < r; ++i) {
            long long s = uinv[i][p], t = uinv[i][q];
            if (s == 0 && t == 0) continue;
            uinv[i][p] = lin(w, s, nz, t);
            if (!keep_p) uinv[i][q] = lin(x, t, ny, s);
        }
    }

    // columns (p, q) <- (p, q) N with N = [[x, z], [y, w]], i.e. p' = x p + y q
    void cols2(int p, int q, long long x, long long y, long long z, long long w) {
        for (int i = lo; i < r; ++i) {
            long long s = a[i][p], t = a[i][q];
            if (s == 0 && t == 0) continue;
            a[i][p] = lin(x, s, y, t);
            a[i][q] = lin(z, s, w, t);
        }
        if (!tr.v) return;
        for (int i = 0; i < c; ++i) {
            long long s = v[i][p], t = v[i][q];
            if (s == 0 && t == 0) continue;
            v[i][p] = lin(x, s, y, t);
            v[i][q] = lin(z, s, w, t);
        }
    }

    void swap_rows(int p, int q) {
        if (p == q) return;
        std::swap(a[p], a[q]);
        if (tr.u) std::swap(u[p], u[q]);
        if (tr.uinv)
            for (int i = 0; i < r; ++i) std::swap(uinv[i][p], uinv[i][q]);
    }

    void swap_cols(int p, int q) {
        if (p == q) return;
        for (int i = 0; i < r; ++i) std::swap(a[i][p], a[i][q]);
        if (tr.v)
            for (int i = 0; i < c; ++i) std::swap(v[i][p], v[i][q]);
    }

    void scale_row(int p, long long unit) {
        long long ui = invmod(unit, e);
        for (int j = 0; j < c; ++j) a[p][j] = mulmod(a[p][j], unit, e);
        if (tr.u)
            for (int j = 0; j < r; ++j) u[p][j] = mulmod(u[p][j], unit, e);
        if (tr.uinv)
            for (int i = 0; i < r; ++i) uinv[i][p] = mulmod(uinv[i][p], ui, e);
    }

    // combine pivot row/col t with row q (or column q)
    void kill_row_entry(int t, int q) {
        long long pa = a[t][t], b = a[q][t];
        if (b == 0) return;
        if (pa != 0 && b % pa == 0) {
            rows2(t, q, 1, 0, mod(-(b / pa), e), 1);
            return;
        }
        long long x, y;
        long long gg = ext_gcd(pa, b, x, y);
        rows2(t, q, mod(x, e), mod(y, e), mod(-(b / gg), e), mod(pa / gg, e));
    }

    // clean: column t vanishes below row t, so a divisible step only
    // touches a[t][q]
    void kill_col_entry(int t, int q, bool& clean) {
        long long pa = a[t][t], b = a[t][q];
        if (b == 0) return;
        if (pa != 0 && b % pa == 0) {
            long long m = mod(-(b / pa), e);
            if (!clean) {
                cols2(t, q, 1, 0, m, 1);
                return;
            }
            a[t][q] = 0;
            if (tr.v)
                for (int i = 0; i < c; ++i)
                    if (v[i][t] != 0) v[i][q] = mod(v[i][q] + mulmod(m, v[i][t], e), e);
            return;
        }
        long long x, y;
        long long gg = ext_gcd(pa, b, x, y);
        cols2(t, q, mod(x, e), mod(y, e), mod(-(b / gg), e), mod(pa / gg, e));
        clean = false;
    }

    void clear(int t) {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < r; ++i) kill_row_entry(t, i);
            bool clean = true;
            for (int j = t + 1; j < c; ++j) kill_col_entry(t, j, clean);
            for (int i = t + 1; i < r; ++i)
                if (a[i][t] != 0) { dirty = true; break; }
        }
    }

    void normalize(int t) {
        long long x = a[t][t];
        if (x == 0) return;
        long long gg = g(x);
        if (x == gg) return;
        long long xp = x / gg, ep = e / gg;
        long long u0 = ep == 1 ? 0 : invmod(mod(xp, ep), ep);
        for (long long k = 0;; ++k) {
            long long cand = u0 + k * ep;
            if (gcdll(cand, e) == 1) { scale_row(t, mod(cand, e)); break; }
        }
    }

    long long diag(int t) const {
        if (t >= c) return e;
        return a[t][t] == 0 ? e : a[t][t];
    }
};

// Echelon basis of the row space by unimodular row steps, at most cols
// rows. Only valid when the row transforms are not wanted.
IntMat row_basis(const IntMat& in, int rows, int cols, long long e) {
    std::vector<std::vector<long long>> pivot(cols);
    std::vector<long long> row(cols);
    auto lead = [&](const std::vector<long long>& x, int from) {
        for (int j = from; j < cols; ++j)
            if (x[j] != 0) return j;
        return cols;
    };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) row[j] = mod(in[i][j], e);
        int j = lead(row, 0);
        while (j < cols) {
            std::vector<long long>& p = pivot[j];
            if (p.empty()) {
                p = row;
                break;
            }
            long long a = p[j], b = row[j];
            if (b % a == 0) {
                long long q = e - (b / a) % e;
                for (int t = j; t < cols; ++t)
                    if (p[t] != 0) row[t] = mod(row[t] + mulmod(q, p[t], e), e);
            } else {
                long long x, y;
                long long g = ext_gcd(a, b, x, y);
                long long z = mod(-(b / g), e), w = mod(a / g, e);
                x = mod(x, e);
                y = mod(y, e);
                for (int t = j; t < cols; ++t) {
                    long long s = p[t], r = row[t];
                    p[t] = mod(mulmod(x, s, e) + mulmod(y, r, e), e);
                    row[t] = mod(mulmod(z, s, e) + mulmod(w, r, e), e);
                }
            }
            j = lead(row, j);
        }
    }
    IntMat out;
    for (auto& p : pivot)
        if (!p.empty()) out.push_back(std::move(p));
    return out;
}

} // namespace

long long invmod(long long a, long long m) {
    if (m == 1) return 0;
    long long x, y;
    ext_gcd(mod(a, m), m, x, y);
    return mod(x, m);
}

SmithForm smith_mod(const IntMat& in, int rows, int cols, long long e, SmithTrack track) {
    if (!track.u && !track.uinv && rows > cols && e > 1) {
        IntMat basis = row_basis(in, rows, cols, e);
        SmithForm f = smith_mod(basis, static_cast<int>(basis.size()), cols, e, track);
        f.s.resize(rows, e);
        return f;
    }
    auto eye = [e](bool want, int n) {
        IntMat m(want ? n : 0, std::vector<long long>(n, 0));
        for (int i = 0; i < static_cast<int>(m.size()); ++i) m[i][i] = e == 1 ? 0 : 1;
        return m;
    };
    Reducer R{IntMat(rows, std::vector<long long>(cols)), rows, cols, e,
              eye(track.u, rows), eye(track.uinv, rows), eye(track.v, cols), track};
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) R.a[i][j] = mod(in[i][j], e);
    SmithForm out;
    out.e = e;
    if (e == 1) {
        out.s.assign(rows, 1);
        out.u = R.u;
        out.uinv = R.uinv;
        out.v = R.v;
        return out;
    }
    const int k = std::min(rows, cols);
    for (int t = 0; t < k; ++t) {
        int bi = -1, bj = -1;
        long long best = e;
        for (int i = t; i < rows && best > 1; ++i)
            for (int j = t; j < cols; ++j)
                if (R.a[i][j] != 0) {
                    long long gg = R.g(R.a[i][j]);
                    if (gg < best) { best = gg; bi = i; bj = j; if (best == 1) break; }
                }
        if (bi < 0) break;
        R.lo = t;
        R.swap_rows(t, bi);
        R.swap_cols(t, bj);
        R.normalize(t);
        R.clear(t);
        R.normalize(t);
    }
    // enforce the divisor chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < k && !changed; ++i)
            for (int j = i + 1; j < k && !changed; ++j) {
                long long si = R.diag(i), sj = R.diag(j);
                if (sj % si != 0) {
                    R.lo = i;
                    R.rows2(i, j, 1, 1, 0, 1);
                    R.clear(i);
                    R.normalize(i);
                    R.clear(j);
                    R.normalize(j);
                    changed = true;
                }
            }
    }
    out.s.resize(rows);
    for (int t = 0; t < rows; ++t) out.s[t] = R.g(R.diag(t));
    out.u = std::move(R.u);
    out.uinv = std::move(R.uinv);
    out.v = std::move(R.v);
    return out;
}

} // namespace tt
