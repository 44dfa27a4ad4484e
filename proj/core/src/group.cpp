#include "twotype/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>

#include "twotype/error.hpp"

namespace tt {

namespace {

std::string idx(int a) { return std::to_string(a); }

} // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& t, std::string label) {
    const int n = static_cast<int>(t.size());
    if (n == 0) raise(ErrorKind::NoIdentity, "empty table");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(t[a].size()) != n)
            raise(ErrorKind::ParseError, "row " + idx(a) + " has wrong length");
        for (int b = 0; b < n; ++b)
            if (t[a][b] < 0 || t[a][b] >= n)
                raise(ErrorKind::ParseError, "entry (" + idx(a) + "," + idx(b) + ") out of range");
    }
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = t[c][a] == a && t[a][c] == a;
        if (ok) e = c;
    }
    if (e < 0) raise(ErrorKind::NoIdentity, "no two-sided identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    raise(ErrorKind::NotAssociative,
                          "triple (" + idx(a) + "," + idx(b) + "," + idx(c) + ")");

    FiniteGroup g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.relabel_.assign(n, 0);
    std::vector<int> back(n);
    int next = 1;
    for (int a = 0; a < n; ++a) g.relabel_[a] = a == e ? 0 : next++;
    for (int a = 0; a < n; ++a) back[g.relabel_[a]] = a;
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table_[static_cast<std::size_t>(a) * n + b] = g.relabel_[t[back[a]][back[b]]];
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) { g.inv_[a] = b; break; }
        if (g.inv_[a] < 0) raise(ErrorKind::NoInverse, "element " + idx(back[a]));
    }
    return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(int n) {
    FiniteGroup g = from_table([n] {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        return t;
    }(), n == 1 ? "1" : "Z/" + std::to_string(n));
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> at;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) at[perms[i]] = i;
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<int> c(n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = at[c];
        }
    return from_table(t, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    // r^i s^j at index i + n j
    const int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int a = x % n, b = x / n, c = y % n, d = y / n;
            int r = ((a + (b ? -c : c)) % n + n) % n;
            t[x][y] = r + n * ((b + d) % 2);
        }
    return from_table(t, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion() {
    // units 1,i,j,k; element u + 4s stands for (-1)^s u
    static const std::array<std::array<int, 4>, 4> unit = {{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    static const std::array<std::array<int, 4>, 4> sign = {{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int u = x % 4, v = y % 4;
            int s = (x / 4 + y / 4 + sign[u][v]) % 2;
            t[x][y] = unit[u][v] + 4 * s;
        }
    return from_table(t, "Q8");
}

FiniteGroup FiniteGroup::klein() {
    FiniteGroup g = direct_product(cyclic(2), cyclic(2));
    g.label_ = "K4";
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order(), m = na * nb;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return from_table(t, a.label() + "x" + b.label());
}

FiniteGroup FiniteGroup::opposite(const FiniteGroup& g) {
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(b, a);
    return from_table(t, g.label() + "^op");
}

int FiniteGroup::elem_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

int FiniteGroup::prod_of(const std::vector<int>& xs) const {
    int r = 0;
    for (int x : xs) r = mul(r, x);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::rows() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

bool GroupHom::is_hom() const {
    if (static_cast<int>(image.size()) != source.order()) return false;
    for (int a = 0; a < source.order(); ++a) {
        if (image[a] < 0 || image[a] >= target.order()) return false;
        for (int b = 0; b < source.order(); ++b)
            if (image[source.mul(a, b)] != target.mul(image[a], image[b])) return false;
    }
    return true;
}

bool GroupHom::injective() const { return kernel().size() == 1; }

bool GroupHom::surjective() const {
    std::vector<char> hit(target.order(), 0);
    for (int x : image) hit[x] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<int> GroupHom::kernel() const {
    std::vector<int> k;
    for (int a = 0; a < source.order(); ++a)
        if (image[a] == 0) k.push_back(a);
    return k;
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
    std::vector<int> im(g.order());
    std::iota(im.begin(), im.end(), 0);
    return {g, g, im};
}

GroupHom GroupHom::trivial(const FiniteGroup& s, const FiniteGroup& t) {
    return {s, t, std::vector<int>(s.order(), 0)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
    std::vector<int> im(g.source.order());
    for (int a = 0; a < g.source.order(); ++a) im[a] = f(g(a));
    return {g.source, f.target, im};
}

bool is_subgroup(const FiniteGroup& g, const Subset& h) {
    if (h.empty() || h[0] != 0) return false;
    std::vector<char> in(g.order(), 0);
    for (int x : h) {
        if (x < 0 || x >= g.order()) return false;
        in[x] = 1;
    }
    for (int a : h)
        for (int b : h)
            if (!in[g.mul(a, g.inv(b))]) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const Subset& h) {
    if (!is_subgroup(g, h)) return false;
    std::vector<char> in(g.order(), 0);
    for (int x : h) in[x] = 1;
    for (int a = 0; a < g.order(); ++a)
        for (int x : h)
            if (!in[g.conj(a, x)]) return false;
    return true;
}

Subset generated(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    in[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int s : gens) {
            int y = g.mul(x, s);
            if (!in[y]) { in[y] = 1; todo.push_back(y); }
        }
    }
    Subset out;
    for (int a = 0; a < g.order(); ++a)
        if (in[a]) out.push_back(a);
    return out;
}

Subset centre(const FiniteGroup& g) {
    Subset all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return centralizer(g, all);
}

Subset centralizer(const FiniteGroup& g, const Subset& s) {
    Subset out;
    for (int a = 0; a < g.order(); ++a)
        if (std::all_of(s.begin(), s.end(), [&](int x) { return g.mul(a, x) == g.mul(x, a); }))
            out.push_back(a);
    return out;
}

std::vector<int> min_generating_set(const FiniteGroup& g) {
    const int n = g.order();
    if (n == 1) return {};
    // smallest cardinality, lexicographically first; exact while affordable
    for (int k = 1; k <= 4; ++k) {
        double combos = 1;
        for (int i = 0; i < k; ++i) combos = combos * (n - 1 - i) / (i + 1);
        if (combos > 2e5) break;
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 1);
        while (true) {
            if (static_cast<int>(generated(g, pick).size()) == n) return pick;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    std::vector<int> gens;
    Subset cur{0};
    for (int a = 1; a < n && static_cast<int>(cur.size()) < n; ++a)
        if (!std::binary_search(cur.begin(), cur.end(), a)) {
            gens.push_back(a);
            cur = generated(g, gens);
        }
    return gens;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subset& h) {
    if (!is_subgroup(g, h)) raise(ErrorKind::NotASubgroup, "subset is not a subgroup");
    const int m = static_cast<int>(h.size());
    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < m; ++i) local[h[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = local[g.mul(h[i], h[j])];
    return FiniteGroup::from_table(t);
}

Quotient quotient(const FiniteGroup& g, const Subset& nsub) {
    if (!is_normal(g, nsub)) raise(ErrorKind::NotASubgroup, "subgroup is not normal");
    Quotient q;
    const int n = g.order();
    std::vector<int> minrep(n);
    for (int x = 0; x < n; ++x) {
        int m = n;
        for (int h : nsub) m = std::min(m, g.mul(h, x));
        minrep[x] = m;
    }
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (minrep[x] == x) reps.push_back(x);
    std::vector<int> at(n, -1);
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) at[reps[i]] = i;
    q.proj.resize(n);
    for (int x = 0; x < n; ++x) q.proj[x] = at[minrep[x]];
    q.section = reps;
    const int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = q.proj[g.mul(reps[i], reps[j])];
    q.group = FiniteGroup::from_table(t);
    return q;
}

CosetSection::CosetSection(const FiniteGroup& g, const Subset& h) : g_(g), h_(h) {
    std::sort(h_.begin(), h_.end());
    h_.erase(std::unique(h_.begin(), h_.end()), h_.end());
    if (!is_subgroup(g_, h_)) raise(ErrorKind::NotASubgroup, "subset is not a subgroup");
    hg_ = subgroup_as_group(g_, h_);
    const int n = g_.order();
    local_.assign(n, -1);
    for (int i = 0; i < static_cast<int>(h_.size()); ++i) local_[h_[i]] = i;
    std::vector<int> minrep(n);
    for (int x = 0; x < n; ++x) {
        int m = n;
        for (int y : h_) m = std::min(m, g_.mul(y, x));
        minrep[x] = m;
    }
    for (int x = 0; x < n; ++x)
        if (minrep[x] == x) reps_.push_back(x);
    std::vector<int> at(n, -1);
    for (int i = 0; i < static_cast<int>(reps_.size()); ++i) at[reps_[i]] = i;
    coset_.resize(n);
    prime_.resize(n);
    for (int x = 0; x < n; ++x) {
        coset_[x] = at[minrep[x]];
        prime_[x] = g_.mul(x, g_.inv(minrep[x]));
    }
}

int AutData::index_of(const std::vector<int>& map) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), map);
    if (it == maps.end() || *it != map) return -1;
    return static_cast<int>(it - maps.begin());
}

std::vector<std::vector<int>> all_homs(const FiniteGroup& s, const FiniteGroup& t) {
    const std::vector<int> gens = min_generating_set(s);
    const int k = static_cast<int>(gens.size());
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k, 0);
    std::vector<int> img(s.order());
    std::vector<std::vector<int>> cand(k);
    for (int i = 0; i < k; ++i)
        for (int y = 0; y < t.order(); ++y)
            if (s.elem_order(gens[i]) % t.elem_order(y) == 0) cand[i].push_back(y);
    std::vector<int> ci(k, 0);
    while (true) {
        std::fill(img.begin(), img.end(), -1);
        img[0] = 0;
        std::vector<int> todo{0};
        bool ok = true;
        while (!todo.empty() && ok) {
            int x = todo.back();
            todo.pop_back();
            for (int i = 0; i < k && ok; ++i) {
                int y = s.mul(x, gens[i]);
                int v = t.mul(img[x], cand[i][ci[i]]);
                if (img[y] < 0) { img[y] = v; todo.push_back(y); }
                else if (img[y] != v) ok = false;
            }
        }
        if (ok) out.push_back(img);
        int i = k - 1;
        while (i >= 0 && ci[i] + 1 == static_cast<int>(cand[i].size())) ci[i--] = 0;
        if (i < 0) break;
        ++ci[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

AutData automorphisms(const FiniteGroup& g, int bound) {
    if (g.order() > bound)
        raise(ErrorKind::GroupTooLarge, "automorphism search bounded at order " + std::to_string(bound));
    AutData d;
    d.group = g;
    for (auto& m : all_homs(g, g)) {
        std::vector<char> hit(g.order(), 0);
        for (int x : m) hit[x] = 1;
        if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) d.maps.push_back(m);
    }
    const int na = static_cast<int>(d.maps.size());
    std::vector<std::vector<int>> t(na, std::vector<int>(na));
    std::vector<int> c(g.order());
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            for (int x = 0; x < g.order(); ++x) c[x] = d.maps[a][d.maps[b][x]];
            t[a][b] = d.index_of(c);
        }
    d.aut = FiniteGroup::from_table(t, "Aut(" + g.label() + ")");
    d.inn_of.resize(g.order());
    for (int y = 0; y < g.order(); ++y) {
        for (int x = 0; x < g.order(); ++x) c[x] = g.conj(y, x);
        d.inn_of[y] = d.index_of(c);
    }
    d.inn = d.inn_of;
    std::sort(d.inn.begin(), d.inn.end());
    d.inn.erase(std::unique(d.inn.begin(), d.inn.end()), d.inn.end());
    Quotient q = quotient(d.aut, d.inn);
    d.out = q.group;
    d.out.set_label("Out(" + g.label() + ")");
    d.out_proj = q.proj;
    d.out_section = q.section;
    return d;
}

} // namespace tt
