#include "twotype/abelian.hpp"

#include <algorithm>
#include <map>

#include "twotype/error.hpp"

namespace tt {

FinAbGroup::FinAbGroup(std::vector<long long> factors) : d_(std::move(factors)) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (d_[i] < 2) raise(ErrorKind::ParseError, "invariant factor below 2");
        if (i + 1 < d_.size() && d_[i + 1] % d_[i] != 0)
            raise(ErrorKind::ParseError, "invariant factors do not form a divisor chain");
    }
}

FinAbGroup FinAbGroup::cyclic(long long n) {
    if (n <= 1) return FinAbGroup();
    return FinAbGroup({n});
}

long long FinAbGroup::order() const {
    long long o = 1;
    for (long long d : d_) o *= d;
    return o;
}

AbElem FinAbGroup::reduce(AbElem a) const {
    for (std::size_t i = 0; i < d_.size(); ++i) a[i] = mod(a[i], d_[i]);
    return a;
}

AbElem FinAbGroup::add(const AbElem& a, const AbElem& b) const {
    AbElem r(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod(a[i] + b[i], d_[i]);
    return r;
}

AbElem FinAbGroup::sub(const AbElem& a, const AbElem& b) const {
    AbElem r(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod(a[i] - b[i], d_[i]);
    return r;
}

AbElem FinAbGroup::neg(const AbElem& a) const {
    AbElem r(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod(-a[i], d_[i]);
    return r;
}

AbElem FinAbGroup::scale(long long k, const AbElem& a) const {
    AbElem r(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mulmod(mod(k, d_[i]), mod(a[i], d_[i]), d_[i]);
    return r;
}

bool FinAbGroup::is_zero(const AbElem& a) const {
    for (std::size_t i = 0; i < d_.size(); ++i)
        if (mod(a[i], d_[i]) != 0) return false;
    return true;
}

AbElem FinAbGroup::basis(int i) const {
    AbElem r = zero();
    r[i] = 1;
    return r;
}

long long FinAbGroup::index(const AbElem& a) const {
    long long idx = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) idx = idx * d_[i] + mod(a[i], d_[i]);
    return idx;
}

AbElem FinAbGroup::element(long long idx) const {
    AbElem r(d_.size());
    for (std::size_t i = d_.size(); i-- > 0;) {
        r[i] = idx % d_[i];
        idx /= d_[i];
    }
    return r;
}

std::string FinAbGroup::str() const {
    if (d_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (i) s += " ⊕ ";
        s += "Z/" + std::to_string(d_[i]);
    }
    return s;
}

AbElem AbHom::operator()(const AbElem& a) const {
    AbElem r(target.rank(), 0);
    std::vector<int> nz;
    for (int j = 0; j < source.rank(); ++j)
        if (a[j] != 0) nz.push_back(j);
    for (int i = 0; i < target.rank(); ++i) {
        long long d = target.factors()[i];
        long long acc = 0;
        for (int j : nz) acc = mod(acc + mulmod(mod(matrix[i][j], d), mod(a[j], d), d), d);
        r[i] = acc;
    }
    return r;
}

bool AbHom::well_defined() const {
    if (static_cast<int>(matrix.size()) != target.rank()) return false;
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != source.rank()) return false;
    for (int j = 0; j < source.rank(); ++j)
        for (int i = 0; i < target.rank(); ++i)
            if (mulmod(source.factors()[j], mod(matrix[i][j], target.factors()[i]), target.factors()[i]) != 0)
                return false;
    return true;
}

bool AbHom::is_zero() const {
    for (int i = 0; i < target.rank(); ++i)
        for (int j = 0; j < source.rank(); ++j)
            if (mod(matrix[i][j], target.factors()[i]) != 0) return false;
    return true;
}

bool AbHom::operator==(const AbHom& o) const {
    if (!(source == o.source) || !(target == o.target)) return false;
    for (int i = 0; i < target.rank(); ++i)
        for (int j = 0; j < source.rank(); ++j)
            if (mod(matrix[i][j] - o.matrix[i][j], target.factors()[i]) != 0) return false;
    return true;
}

bool AbHom::bijective() const {
    if (source.order() != target.order()) return false;
    return ab_kernel(*this).group.trivial();
}

AbHom AbHom::identity(const FinAbGroup& g) {
    IntMat m(g.rank(), std::vector<long long>(g.rank(), 0));
    for (int i = 0; i < g.rank(); ++i) m[i][i] = 1;
    return {g, g, m};
}

AbHom AbHom::zero(const FinAbGroup& s, const FinAbGroup& t) {
    return {s, t, IntMat(t.rank(), std::vector<long long>(s.rank(), 0))};
}

AbHom AbHom::from_images(const FinAbGroup& s, const FinAbGroup& t, const std::vector<AbElem>& cols) {
    AbHom h = zero(s, t);
    for (int j = 0; j < s.rank(); ++j)
        for (int i = 0; i < t.rank(); ++i) h.matrix[i][j] = mod(cols[j][i], t.factors()[i]);
    return h;
}

AbHom compose(const AbHom& f, const AbHom& g) {
    std::vector<AbElem> cols;
    for (int j = 0; j < g.source.rank(); ++j) cols.push_back(f(g(g.source.basis(j))));
    return AbHom::from_images(g.source, f.target, cols);
}

AbHom ab_add(const AbHom& f, const AbHom& g) {
    std::vector<AbElem> cols;
    for (int j = 0; j < f.source.rank(); ++j) {
        AbElem b = f.source.basis(j);
        cols.push_back(f.target.add(f(b), g(b)));
    }
    return AbHom::from_images(f.source, f.target, cols);
}

AbHom inverse(const AbHom& f) {
    if (!f.bijective()) raise(ErrorKind::InvalidAction, "inverse of a non-bijective homomorphism");
    std::map<AbElem, AbElem> back;
    for (const auto& x : elements(f.source)) back[f(x)] = x;
    std::vector<AbElem> cols;
    for (int j = 0; j < f.target.rank(); ++j) cols.push_back(back.at(f.target.basis(j)));
    return AbHom::from_images(f.target, f.source, cols);
}

AbSubgroup ab_subgroup(const FinAbGroup& g, const std::vector<AbElem>& gens) {
    const int k = g.rank(), m = static_cast<int>(gens.size());
    const long long e = g.exponent();
    AbSubgroup out;
    out.ambient = g;
    out.scale.resize(k);
    for (int i = 0; i < k; ++i) out.scale[i] = e / g.factors()[i];
    IntMat a(k, std::vector<long long>(m, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = mulmod(out.scale[i], mod(gens[j][i], g.factors()[i]), e);
    out.form = smith_mod(a, k, m, e, {true, false, true});
    std::vector<long long> fac;
    std::vector<AbElem> cols;
    for (int i = std::min(k, m) - 1; i >= 0; --i) {
        long long o = e / out.form.s[i];
        if (o == 1) continue;
        out.kept.push_back(i);
        fac.push_back(o);
        AbElem x = g.zero();
        for (int j = 0; j < m; ++j) x = g.add(x, g.scale(out.form.v[j][i], gens[j]));
        cols.push_back(x);
    }
    out.group = FinAbGroup(fac);
    out.incl = AbHom::from_images(out.group, g, cols);
    return out;
}

std::optional<AbElem> AbSubgroup::coords(const AbElem& x) const {
    const int k = ambient.rank();
    const long long e = form.e;
    std::vector<long long> y(k, 0);
    for (int j = 0; j < k; ++j) {
        long long xj = mulmod(scale[j], mod(x[j], ambient.factors()[j]), e);
        if (xj == 0) continue;
        for (int i = 0; i < k; ++i) y[i] = mod(y[i] + mulmod(form.u[i][j], xj, e), e);
    }
    // positions past the generator count carry s = e, which forces y = 0 there
    for (int i = 0; i < k; ++i)
        if (y[i] % form.s[i] != 0) return std::nullopt;
    AbElem w;
    for (int i : kept) w.push_back(mod(y[i] / form.s[i], e / form.s[i]));
    return w;
}

AbQuotient ab_quotient(const FinAbGroup& g, const std::vector<AbElem>& gens) {
    const int k = g.rank(), m = static_cast<int>(gens.size());
    const long long e = g.exponent();
    AbQuotient out;
    out.ambient = g;
    out.gens = gens;
    IntMat b(k, std::vector<long long>(k + m, 0));
    for (int i = 0; i < k; ++i) {
        b[i][i] = mod(g.factors()[i], e);
        for (int j = 0; j < m; ++j) b[i][k + j] = mod(gens[j][i], g.factors()[i]);
    }
    out.form = smith_mod(b, k, k + m, e);
    std::vector<long long> fac;
    for (int i = 0; i < k; ++i)
        if (out.form.s[i] > 1) {
            out.kept.push_back(i);
            fac.push_back(out.form.s[i]);
        }
    out.group = FinAbGroup(fac);
    out.proj = AbHom::zero(g, out.group);
    for (int t = 0; t < static_cast<int>(out.kept.size()); ++t)
        for (int j = 0; j < k; ++j) out.proj.matrix[t][j] = mod(out.form.u[out.kept[t]][j], fac[t]);
    return out;
}

AbElem AbQuotient::lift(const AbElem& q) const {
    AbElem x = ambient.zero();
    for (int t = 0; t < static_cast<int>(kept.size()); ++t) {
        int i = kept[t];
        for (int r = 0; r < ambient.rank(); ++r) x[r] = x[r] + mulmod(mod(q[t], form.e), form.uinv[r][i], form.e);
    }
    return ambient.reduce(x);
}

std::optional<std::vector<long long>> AbQuotient::solve(const AbElem& x) const {
    const int k = ambient.rank(), m = static_cast<int>(gens.size());
    const long long e = form.e;
    std::vector<long long> w(k + m, 0);
    std::vector<long long> y(k, 0);
    for (int j = 0; j < k; ++j) {
        long long xj = mod(x[j], ambient.factors()[j]);
        if (xj == 0) continue;
        for (int i = 0; i < k; ++i) y[i] = mod(y[i] + mulmod(form.u[i][j], xj, e), e);
    }
    for (int i = 0; i < k; ++i) {
        if (y[i] % form.s[i] != 0) return std::nullopt;
        w[i] = y[i] / form.s[i];
    }
    std::vector<long long> c(m, 0);
    for (int j = 0; j < m; ++j) {
        long long acc = 0;
        for (int i = 0; i < k; ++i) acc = mod(acc + mulmod(form.v[k + j][i], w[i], e), e);
        c[j] = acc;
    }
    return c;
}

AbSubgroup ab_kernel(const AbHom& f) {
    const FinAbGroup& G = f.source;
    const FinAbGroup& H = f.target;
    const int k = G.rank(), l = H.rank();
    const long long e = lcmll(G.exponent(), H.exponent());
    IntMat a(l, std::vector<long long>(k, 0));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < k; ++j)
            a[i][j] = mulmod(e / H.factors()[i], mod(f.matrix[i][j], H.factors()[i]), e);
    SmithForm sf = smith_mod(a, l, k, e, {false, false, true});
    std::vector<AbElem> gens;
    for (int i = 0; i < k; ++i) {
        long long c = i < l ? e / sf.s[i] : 1;
        AbElem x(k);
        for (int r = 0; r < k; ++r) x[r] = mulmod(c, sf.v[r][i], e);
        x = G.reduce(x);
        if (!G.is_zero(x)) gens.push_back(std::move(x));
    }
    return ab_subgroup(G, gens);
}

AbSubgroup ab_image(const AbHom& f) {
    std::vector<AbElem> cols;
    for (int j = 0; j < f.source.rank(); ++j) cols.push_back(f(f.source.basis(j)));
    return ab_subgroup(f.target, cols);
}

std::vector<AbElem> elements(const FinAbGroup& g) {
    std::vector<AbElem> out;
    for (long long i = 0; i < g.order(); ++i) out.push_back(g.element(i));
    return out;
}

std::vector<AbHom> all_ab_homs(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<std::vector<AbElem>> choices(a.rank());
    for (int j = 0; j < a.rank(); ++j)
        for (const auto& y : elements(b))
            if (b.is_zero(b.scale(a.factors()[j], y))) choices[j].push_back(y);
    std::vector<AbHom> out;
    std::vector<std::size_t> ci(a.rank(), 0);
    while (true) {
        std::vector<AbElem> cols;
        for (int j = 0; j < a.rank(); ++j) cols.push_back(choices[j][ci[j]]);
        out.push_back(AbHom::from_images(a, b, cols));
        int j = a.rank() - 1;
        while (j >= 0 && ci[j] + 1 == choices[j].size()) ci[j--] = 0;
        if (j < 0) break;
        ++ci[j];
    }
    return out;
}

} // namespace tt
