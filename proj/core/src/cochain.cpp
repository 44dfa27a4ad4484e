#include "twotype/cochain.hpp"

#include "twotype/error.hpp"

namespace tt {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void for_each_tuple(int order, int n, const std::function<void(const Args&)>& f) {
    Args x(n, 0);
    while (true) {
        f(x);
        int i = n - 1;
        while (i >= 0 && x[i] + 1 == order) x[i--] = 0;
        if (i < 0) return;
        ++x[i];
    }
}

Cochain::Cochain(ModuleRef m, int degree)
    : m_(std::move(m)), n_(degree), g_(m_->group.order()), k_(m_->coeff.rank()),
      tuples_(ipow(static_cast<std::size_t>(g_), degree)), data_(tuples_ * k_, 0) {
    if (degree < 0) raise(ErrorKind::BadDegree, "negative cochain degree");
}

std::size_t Cochain::index(const Args& x) const {
    std::size_t idx = 0;
    for (int a : x) idx = idx * g_ + a;
    return idx;
}

Args Cochain::args(std::size_t idx) const {
    Args x(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        x[i] = static_cast<int>(idx % g_);
        idx /= g_;
    }
    return x;
}

AbElem Cochain::at(const Args& x) const { return at_index(index(x)); }

AbElem Cochain::at_index(std::size_t idx) const {
    return AbElem(data_.begin() + idx * k_, data_.begin() + (idx + 1) * k_);
}

void Cochain::set(const Args& x, const AbElem& v) {
    AbElem r = coeff().reduce(v);
    bool has_id = false;
    for (int a : x) has_id |= a == 0;
    if (has_id && !coeff().is_zero(r)) raise(ErrorKind::NotNormalized, "nonzero value at an identity argument");
    std::size_t idx = index(x);
    for (int i = 0; i < k_; ++i) data_[idx * k_ + i] = r[i];
}

void Cochain::add_at(const Args& x, const AbElem& v) { set(x, coeff().add(at(x), v)); }

bool Cochain::is_zero() const {
    for (long long v : data_)
        if (v != 0) return false;
    return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
    Cochain r(*this);
    for (std::size_t t = 0; t < tuples_; ++t)
        for (int i = 0; i < k_; ++i) {
            long long d = coeff().factors()[i];
            r.data_[t * k_ + i] = mod(data_[t * k_ + i] + o.data_[t * k_ + i], d);
        }
    return r;
}

Cochain Cochain::operator-() const { return scaled(-1); }
Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::scaled(long long k) const {
    Cochain r(*this);
    for (std::size_t t = 0; t < tuples_; ++t)
        for (int i = 0; i < k_; ++i) {
            long long d = coeff().factors()[i];
            r.data_[t * k_ + i] = mulmod(mod(k, d), data_[t * k_ + i], d);
        }
    return r;
}

bool Cochain::operator==(const Cochain& o) const {
    return n_ == o.n_ && g_ == o.g_ && k_ == o.k_ && coeff() == o.coeff() && data_ == o.data_;
}

std::optional<Args> Cochain::first_difference(const Cochain& o) const {
    for (std::size_t t = 0; t < tuples_; ++t)
        for (int i = 0; i < k_; ++i)
            if (data_[t * k_ + i] != o.data_[t * k_ + i]) return args(t);
    return std::nullopt;
}

Cochain differential(const Cochain& c) {
    const PiModule& m = c.module();
    const FiniteGroup& g = m.group;
    const FinAbGroup& A = m.coeff;
    const int n = c.degree();
    Cochain out(c.module_ref(), n + 1);
    Args y(n + 1), z(n);
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        y = out.args(t);
        bool has_id = false;
        for (int a : y) has_id |= a == 0;
        if (has_id) continue;
        for (int i = 0; i < n; ++i) z[i] = y[i + 1];
        AbElem v = m.act(y[0], c.at(z));
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < j; ++i) z[i] = y[i];
            z[j] = g.mul(y[j], y[j + 1]);
            for (int i = j + 1; i < n; ++i) z[i] = y[i + 1];
            AbElem w = c.at(z);
            v = (j % 2 == 0) ? A.sub(v, w) : A.add(v, w);
        }
        for (int i = 0; i < n; ++i) z[i] = y[i];
        AbElem w = c.at(z);
        v = ((n + 1) % 2 == 1) ? A.sub(v, w) : A.add(v, w);
        out.set(y, v);
    }
    return out;
}

std::size_t normalized_tuples(const PiModule& m, int n) {
    return ipow(static_cast<std::size_t>(m.group.order() - 1), n);
}

FinAbGroup cochain_group(const PiModule& m, int n) {
    std::size_t T = normalized_tuples(m, n);
    std::vector<long long> f;
    for (long long d : m.coeff.factors()) f.insert(f.end(), T, d);
    return FinAbGroup(f);
}

namespace {

std::size_t norm_index(const Args& x, int g) {
    std::size_t idx = 0;
    for (int a : x) idx = idx * (g - 1) + (a - 1);
    return idx;
}

Args norm_args(std::size_t idx, int n, int g) {
    Args x(n);
    for (int i = n - 1; i >= 0; --i) {
        x[i] = static_cast<int>(idx % (g - 1)) + 1;
        idx /= (g - 1);
    }
    return x;
}

} // namespace

AbElem to_coords(const Cochain& c) {
    const int g = c.module().group.order();
    const int k = c.coeff().rank();
    std::size_t T = normalized_tuples(c.module(), c.degree());
    AbElem x(T * k, 0);
    for (std::size_t t = 0; t < T; ++t) {
        AbElem v = c.at(norm_args(t, c.degree(), g));
        for (int i = 0; i < k; ++i) x[i * T + t] = v[i];
    }
    return x;
}

Cochain from_coords(ModuleRef m, int n, const AbElem& x) {
    Cochain c(m, n);
    const int g = m->group.order();
    const int k = m->coeff.rank();
    std::size_t T = normalized_tuples(*m, n);
    AbElem v(k);
    for (std::size_t t = 0; t < T; ++t) {
        for (int i = 0; i < k; ++i) v[i] = x[i * T + t];
        c.set(norm_args(t, n, g), v);
    }
    return c;
}

IntMat differential_matrix(const PiModule& m, int n) {
    const FiniteGroup& g = m.group;
    const int G = g.order();
    const int k = m.coeff.rank();
    const std::size_t Tin = normalized_tuples(m, n), Tout = normalized_tuples(m, n + 1);
    IntMat d(Tout * k, std::vector<long long>(Tin * k, 0));
    if (G == 1) return d;
    Args z(n);
    for (std::size_t ty = 0; ty < Tout; ++ty) {
        Args y = norm_args(ty, n + 1, G);
        for (int i = 0; i < n; ++i) z[i] = y[i + 1];
        std::size_t tz = norm_index(z, G);
        const IntMat& a = m.action[y[0]].matrix;
        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s) d[r * Tout + ty][s * Tin + tz] += a[r][s];
        auto add = [&](const Args& w, long long sign) {
            for (int a2 : w)
                if (a2 == 0) return;
            std::size_t tw = norm_index(w, G);
            for (int r = 0; r < k; ++r) d[r * Tout + ty][r * Tin + tw] += sign;
        };
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < j; ++i) z[i] = y[i];
            z[j] = g.mul(y[j], y[j + 1]);
            for (int i = j + 1; i < n; ++i) z[i] = y[i + 1];
            add(z, j % 2 == 0 ? -1 : 1);
        }
        for (int i = 0; i < n; ++i) z[i] = y[i];
        add(z, (n + 1) % 2 == 1 ? -1 : 1);
    }
    return d;
}

Cochain push_forward(const Cochain& c, const AbHom& f, ModuleRef target) {
    Cochain out(std::move(target), c.degree());
    for (std::size_t t = 0; t < c.tuples(); ++t) {
        AbElem v = c.at_index(t);
        if (c.coeff().is_zero(v)) continue;
        out.set(c.args(t), f(v));
    }
    return out;
}

Cochain pull_back(const Cochain& c, const GroupHom& f, ModuleRef target) {
    Cochain out(std::move(target), c.degree());
    for (std::size_t t = 0; t < out.tuples(); ++t) {
        Args x = out.args(t);
        bool has_id = false;
        for (int& a : x) {
            has_id |= a == 0;
            a = f(a);
        }
        if (has_id) continue;
        out.set(out.args(t), c.at(x));
    }
    return out;
}

} // namespace tt
