#include "twotype/filtered.hpp"

#include "twotype/error.hpp"

namespace tt {

namespace {

Args cat(std::initializer_list<Args> parts) {
    Args out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Args slice(const Args& x, int from, int to) {
    if (to > static_cast<int>(x.size())) to = static_cast<int>(x.size());
    if (from >= to) return {};
    return Args(x.begin() + from, x.begin() + to);
}

Args slice(const Args& x, int from) { return slice(x, from, static_cast<int>(x.size())); }

} // namespace

FilteredComplex::FilteredComplex(const CosetSection& s, ModuleRef inner)
    : s_(s), inner_(std::move(inner)), g_(s.group().order()), k_(inner_->coeff.rank()) {
    if (!(inner_->group == s_.subgroup_group()))
        raise(ErrorKind::SectionMismatch, "inner module is not over the chosen subgroup");
}

std::size_t FilteredComplex::index(const Args& x) const {
    std::size_t idx = 0;
    for (int a : x) idx = idx * g_ + a;
    return idx;
}

bool FilteredComplex::in_domain(int p, const Args& x) const {
    const int n = static_cast<int>(x.size());
    for (int a : x)
        if (a == 0) return false;
    for (int i = 0; i < std::min(p, n); ++i)
        if (!s_.in_h(x[i])) return false;
    if (p < n && s_.bar(x[p]) == x[p]) return false;
    return true;
}

std::vector<Args> FilteredComplex::domain(int p, int n) const {
    std::vector<Args> out;
    for_each_tuple(g_, n, [&](const Args& x) {
        if (in_domain(p, x)) out.push_back(x);
    });
    return out;
}

bool FilteredComplex::in_filtration(const FilteredCochain& k) const {
    bool ok = true;
    for_each_tuple(g_, k.n, [&](const Args& x) {
        if (!ok || in_domain(k.p, x)) return;
        if (!inner_->coeff.is_zero(at(k, x))) ok = false;
    });
    return ok;
}

FilteredCochain FilteredComplex::zero(int p, int n) const {
    return {p, n, std::vector<long long>(ipow(g_, n) * k_, 0)};
}

AbElem FilteredComplex::at(const FilteredCochain& k, const Args& x) const {
    for (int a : x)
        if (a == 0) return inner_->coeff.zero();
    std::size_t i = index(x);
    return AbElem(k.data.begin() + i * k_, k.data.begin() + (i + 1) * k_);
}

void FilteredComplex::set(FilteredCochain& k, const Args& x, const AbElem& v) const {
    AbElem r = inner_->coeff.reduce(v);
    for (int a : x)
        if (a == 0 && !inner_->coeff.is_zero(r)) raise(ErrorKind::NotNormalized, "value at an identity argument");
    std::size_t i = index(x);
    for (int c = 0; c < k_; ++c) k.data[i * k_ + c] = r[c];
}

FilteredCochain FilteredComplex::add(const FilteredCochain& a, const FilteredCochain& b) const {
    FilteredCochain r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i)
        r.data[i] = mod(a.data[i] + b.data[i], inner_->coeff.factors()[i % k_]);
    return r;
}

FilteredCochain FilteredComplex::sub(const FilteredCochain& a, const FilteredCochain& b) const {
    FilteredCochain r = a;
    for (std::size_t i = 0; i < r.data.size(); ++i)
        r.data[i] = mod(a.data[i] - b.data[i], inner_->coeff.factors()[i % k_]);
    return r;
}

bool FilteredComplex::is_zero(const FilteredCochain& k) const {
    for (long long v : k.data)
        if (v != 0) return false;
    return true;
}

FilteredCochain FilteredComplex::d(const FilteredCochain& K) const {
    const FiniteGroup& G = s_.group();
    const FinAbGroup& Z = inner_->coeff;
    const int p = K.p, n = K.n, q = n - p;
    FilteredCochain out = zero(p, n + 1);
    auto sgn = [](int e) { return e % 2 == 0 ? 1 : -1; };
    for (const Args& y : domain(p, n + 1)) {
        AbElem v = Z.zero();
        auto acc = [&](int s, const AbElem& w) { v = s > 0 ? Z.add(v, w) : Z.sub(v, w); };
        if (q < 0) {
            v = act(y[0], at(K, slice(y, 1)));
            for (int i = 0; i < n; ++i)
                acc(sgn(i + 1), at(K, cat({slice(y, 0, i), {G.mul(y[i], y[i + 1])}, slice(y, i + 2)})));
            acc(sgn(n + 1), at(K, slice(y, 0, n)));
            set(out, y, v);
            continue;
        }
        Args ts = slice(y, 0, p), xs = slice(y, p);
        int x1 = xs[0];
        Args tail = q >= 1 ? Args{G.mul(s_.bar(x1), xs[1])} : Args{};
        Args X = cat({{s_.prime(x1)}, tail, slice(xs, 2)});
        if (p == 0) {
            v = act(s_.prime(x1), at(K, cat({tail, slice(xs, 2)})));
        } else {
            v = act(ts[0], at(K, cat({slice(ts, 1), X})));
            for (int i = 0; i + 1 < p; ++i)
                acc(sgn(i + 1), at(K, cat({slice(ts, 0, i), {G.mul(ts[i], ts[i + 1])}, slice(ts, i + 2), X})));
            acc(sgn(p), at(K, cat({slice(ts, 0, p - 1), {G.mul(ts[p - 1], s_.prime(x1))}, slice(X, 1)})));
        }
        for (int j = 0; j < q; ++j)
            acc(sgn(p + j + 1), at(K, cat({ts, slice(xs, 0, j), {G.mul(xs[j], xs[j + 1])}, slice(xs, j + 2)})));
        acc(sgn(p + q + 1), at(K, cat({ts, slice(xs, 0, q)})));
        set(out, y, v);
    }
    return out;
}

FilteredCochain FilteredComplex::h(const FilteredCochain& K) const {
    const int p = K.p, n = K.n - 1;
    if (n < 0) raise(ErrorKind::BadDegree, "homotopy of a degree 0 cochain");
    FilteredCochain out = zero(p, n);
    const FinAbGroup& Z = inner_->coeff;
    for (const Args& y : domain(p, n)) {
        if (n - p < 1) continue;
        Args ts = slice(y, 0, p), xs = slice(y, p);
        AbElem v = at(K, cat({ts, {s_.prime(xs[0]), s_.bar(xs[0])}, slice(xs, 1)}));
        set(out, y, (p + 1) % 2 == 0 ? v : Z.neg(v));
    }
    return out;
}

FilteredCochain FilteredComplex::proj(const FilteredCochain& K) const {
    const FiniteGroup& G = s_.group();
    const FinAbGroup& Z = inner_->coeff;
    const int p = K.p, n = K.n, q = n - p;
    FilteredCochain out = zero(p, n);
    auto sgn = [](int e) { return e % 2 == 0 ? 1 : -1; };
    for (const Args& y : domain(p, n)) {
        if (q <= 0) { set(out, y, at(K, y)); continue; }
        Args ts = slice(y, 0, p), xs = slice(y, p);
        if (q == 1) { set(out, y, at(K, cat({ts, {s_.prime(xs[0])}}))); continue; }
        int x1 = xs[0], x2 = xs[1];
        int a = s_.prime(x1), b = s_.prime(G.mul(s_.bar(x1), x2)), c = s_.bar(G.mul(x1, x2));
        Args rest = slice(xs, 2);
        AbElem v = Z.zero();
        auto acc = [&](int s, const AbElem& w) { v = s > 0 ? Z.add(v, w) : Z.sub(v, w); };
        if (p == 0) {
            v = act(a, at(K, cat({{b, c}, rest})));
            acc(-1, at(K, cat({{s_.prime(G.mul(x1, x2)), c}, rest})));
            acc(1, at(K, cat({{a, G.mul(s_.bar(x1), x2)}, rest})));
            set(out, y, v);
            continue;
        }
        Args X = cat({{a, b, c}, rest});
        v = act(ts[0], at(K, cat({slice(ts, 1), X})));
        for (int i = 0; i + 1 < p; ++i)
            acc(sgn(i + 1), at(K, cat({slice(ts, 0, i), {G.mul(ts[i], ts[i + 1])}, slice(ts, i + 2), X})));
        acc(sgn(p), at(K, cat({slice(ts, 0, p - 1), {G.mul(ts[p - 1], a)}, slice(X, 1)})));
        acc(sgn(p + 1), at(K, cat({ts, {s_.prime(G.mul(x1, x2)), c}, rest})));
        acc(sgn(p + 2), at(K, cat({ts, {a, G.mul(s_.bar(x1), x2)}, rest})));
        set(out, y, p % 2 == 0 ? v : Z.neg(v));
    }
    return out;
}

FilteredCochain FilteredComplex::inflate(const FilteredCochain& K) const {
    const FiniteGroup& G = s_.group();
    const int p = K.p - 1, n = K.n;
    if (p < 0) raise(ErrorKind::BadDegree, "inflation out of F^0");
    FilteredCochain out = zero(p, n);
    for (const Args& y : domain(p, n)) {
        Args ts = slice(y, 0, p), xs = slice(y, p);
        if (xs.empty()) { set(out, y, at(K, y)); continue; }
        Args X = {s_.prime(xs[0])};
        if (xs.size() >= 2) X.push_back(G.mul(s_.bar(xs[0]), xs[1]));
        set(out, y, at(K, cat({ts, X, slice(xs, 2)})));
    }
    return out;
}

FilteredCochain FilteredComplex::restrict(const FilteredCochain& K) const {
    const int p = K.p, n = K.n;
    FilteredCochain out = zero(p + 1, n);
    for_each_tuple(g_, n, [&](const Args& y) {
        for (int a : y)
            if (a == 0) return;
        for (int i = 0; i < std::min(p + 1, n); ++i)
            if (!s_.in_h(y[i])) return;
        set(out, y, at(K, y));
    });
    return out;
}

} // namespace tt
