#include "twotype/serialize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>

#include "twotype/error.hpp"

namespace tt {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    raise(ErrorKind::ParseError, (path.empty() ? "/" : path) + ": " + msg);
}

const json& field(const json& doc, const char* key, const std::string& path) {
    if (!doc.is_object()) fail(path, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

long long integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<long long>();
}

std::vector<long long> int_list(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array");
    std::vector<long long> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], path + "/" + std::to_string(i)));
    return out;
}

IntMat matrix(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected a matrix");
    IntMat m;
    for (std::size_t i = 0; i < v.size(); ++i) m.push_back(int_list(v[i], path + "/" + std::to_string(i)));
    return m;
}

// prefixes library errors with the document location
template <class F>
auto guarded(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        raise(e.kind(), (path.empty() ? "/" : path) + ": " + e.message());
    }
}

json module_to_json(const PiModule& m, const std::string& group_ref) {
    json acts = json::array();
    for (const AbHom& h : m.action) acts.push_back(h.matrix);
    return {{"group", group_ref}, {"factors", m.coeff.factors()}, {"action", acts}};
}

json cochain_to_json(const Cochain& c, const std::string& module_ref) {
    json entries = json::array();
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        AbElem v = c.at_index(i);
        if (!c.coeff().is_zero(v)) entries.push_back(json::array({c.args(i), v}));
    }
    return {{"degree", c.degree()}, {"module", module_ref}, {"entries", entries}};
}

json action_to_json(const PointedAction& a, const std::string& type_ref, const std::string& gamma_ref) {
    json zeta = json::array();
    const int n = a.n();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (a.zeta_at(s, t) != 0) zeta.push_back(json::array({json::array({s, t}), a.zeta_at(s, t)}));
    return {{"twoGroupRef", type_ref}, {"gammaRef", gamma_ref}, {"A", a.a}, {"zeta", zeta},
            {"A2", a.a2.matrix}};
}

std::string group_hash(const FiniteGroup& g) { return content_hash(group_to_json(g)); }
std::string module_hash(const PiModule& m) { return content_hash(module_to_json(m, group_hash(m.group))); }
std::string cochain_hash(const Cochain& c) { return content_hash(cochain_to_json(c, module_hash(c.module()))); }
json type_to_json(const TwoType& t) {
    return {{"pi1", group_hash(t.pi1)}, {"pi2", module_hash(*t.pi2)}, {"k3", cochain_hash(t.k3)}};
}

template <class T>
struct Section {
    std::map<std::string, std::string> hash_of;  // name -> hash
    std::map<std::string, std::string> name_of;  // hash -> name
    const std::map<std::string, T>* items = nullptr;

    const T& resolve(const json& ref, const std::string& path) const {
        if (!ref.is_string()) fail(path, "reference must be a string");
        std::string r = ref.get<std::string>();
        std::string name = r;
        if (r.rfind("sha256:", 0) == 0) {
            auto it = name_of.find(r);
            if (it == name_of.end()) fail(path, "unresolved reference " + r);
            name = it->second;
        }
        auto it = items->find(name);
        if (it == items->end()) fail(path, "unresolved reference " + r);
        return it->second;
    }
    void add(const std::string& name, const std::string& h) {
        hash_of[name] = h;
        name_of.emplace(h, name);
    }
};

std::string sha256_hex(const std::string& s) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr);
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        out += buf;
    }
    return out;
}

const json& section(const json& doc, const char* key) {
    static const json empty = json::object();
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_object()) fail(std::string("/") + key, "expected an object of named documents");
    return *it;
}

} // namespace

FiniteGroup builtin_group(const std::string& name) {
    if (name == "1") return FiniteGroup::trivial();
    if (name == "S3") return FiniteGroup::symmetric(3);
    if (name == "D4") return FiniteGroup::dihedral(4);
    if (name == "Q8") return FiniteGroup::quaternion();
    if (name == "K4") return FiniteGroup::klein();
    if (name.size() > 1 && name[0] == 'Z' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 64) return FiniteGroup::cyclic(n);
    }
    raise(ErrorKind::ParseError, "unknown group '" + name + "'");
}

ModuleRef builtin_module(const FiniteGroup& g, const std::string& name) {
    auto dash = name.find('-');
    std::string base = name.substr(0, dash), kind = dash == std::string::npos ? "trivial" : name.substr(dash + 1);
    if (base.size() < 2 || base[0] != 'Z' || !std::all_of(base.begin() + 1, base.end(), ::isdigit))
        raise(ErrorKind::ParseError, "unknown module '" + name + "'");
    long long m = std::stoll(base.substr(1));
    FinAbGroup a = m == 1 ? FinAbGroup() : FinAbGroup::cyclic(m);
    if (kind == "trivial") return make_module(PiModule::trivial(g, a));
    if (kind == "inv") {
        auto chars = sign_characters(g);
        if (chars.size() < 2) raise(ErrorKind::ParseError, g.label() + " has no sign character for '" + name + "'");
        return make_module(PiModule::via_sign(g, a, chars[1]));
    }
    raise(ErrorKind::ParseError, "unknown module action '" + kind + "'");
}

std::string content_hash(const json& doc) { return "sha256:" + sha256_hex(doc.dump()); }

json group_to_json(const FiniteGroup& g) {
    return {{"label", g.label()}, {"order", g.order()}, {"table", g.rows()}};
}

FiniteGroup group_from_json(const json& doc, const std::string& path) {
    long long n = integer(field(doc, "order", path), path + "/order");
    const json& t = field(doc, "table", path);
    if (!t.is_array() || static_cast<long long>(t.size()) != n) fail(path + "/table", "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto r = int_list(t[i], path + "/table/" + std::to_string(i));
        rows.emplace_back(r.begin(), r.end());
    }
    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) fail(path + "/label", "expected a string");
        label = doc["label"].get<std::string>();
    }
    FiniteGroup g = guarded(path + "/table", [&] { return FiniteGroup::from_table(rows, label); });
    for (int i = 0; i < g.order(); ++i)
        if (g.relabel()[i] != i) fail(path + "/table", "identity must be element 0");
    return g;
}

json hom_to_json(const AbHom& h) { return h.matrix; }

json Workspace::to_json() const {
    json out = {{"groups", json::object()}, {"modules", json::object()}, {"cochains", json::object()},
                {"twotypes", json::object()}, {"actions", json::object()}};
    for (const auto& [name, g] : groups) out["groups"][name] = group_to_json(g);
    for (const auto& [name, m] : modules) out["modules"][name] = module_to_json(*m, group_hash(m->group));
    for (const auto& [name, c] : cochains) out["cochains"][name] = cochain_to_json(c, module_hash(c.module()));
    for (const auto& [name, t] : types) out["twotypes"][name] = type_to_json(t);
    for (const auto& [name, a] : actions)
        out["actions"][name] = action_to_json(a, content_hash(type_to_json(a.acting)), group_hash(a.gamma));
    return out;
}

Workspace load_workspace(const json& doc) {
    if (!doc.is_object()) fail("", "workspace must be an object");
    for (const auto& [k, v] : doc.items())
        if (k != "groups" && k != "modules" && k != "cochains" && k != "twotypes" && k != "actions")
            fail("/" + k, "unknown section");
    Workspace ws;
    Section<FiniteGroup> gs;
    gs.items = &ws.groups;
    for (const auto& [name, d] : section(doc, "groups").items()) {
        FiniteGroup g = group_from_json(d, "/groups/" + name);
        ws.groups.emplace(name, g);
        gs.add(name, group_hash(g));
    }
    Section<ModuleRef> ms;
    ms.items = &ws.modules;
    for (const auto& [name, d] : section(doc, "modules").items()) {
        std::string p = "/modules/" + name;
        const FiniteGroup& g = gs.resolve(field(d, "group", p), p + "/group");
        auto factors = int_list(field(d, "factors", p), p + "/factors");
        const json& act = field(d, "action", p);
        if (!act.is_array() || static_cast<int>(act.size()) != g.order())
            fail(p + "/action", "expected one matrix per group element");
        std::vector<IntMat> mats;
        for (std::size_t i = 0; i < act.size(); ++i) mats.push_back(matrix(act[i], p + "/action/" + std::to_string(i)));
        FinAbGroup a = guarded(p + "/factors", [&] { return FinAbGroup(factors); });
        if (a.factors() != factors) fail(p + "/factors", "factors must be invariant factors d1 | d2 | ...");
        for (std::size_t i = 0; i < mats.size(); ++i) {
            if (static_cast<int>(mats[i].size()) != a.rank()) fail(p + "/action/" + std::to_string(i), "wrong row count");
            for (const auto& r : mats[i])
                if (static_cast<int>(r.size()) != a.rank()) fail(p + "/action/" + std::to_string(i), "wrong column count");
        }
        ModuleRef m = guarded(p + "/action", [&] { return make_module(PiModule::from_matrices(g, a, mats)); });
        PiModule reduced{g, a, {}};
        for (const AbHom& h : m->action) {
            std::vector<AbElem> cols;
            for (int j = 0; j < a.rank(); ++j) cols.push_back(h(a.basis(j)));
            reduced.action.push_back(AbHom::from_images(a, a, cols));
        }
        m = make_module(std::move(reduced));
        ws.modules.emplace(name, m);
        ms.add(name, module_hash(*m));
    }
    Section<Cochain> cs;
    cs.items = &ws.cochains;
    for (const auto& [name, d] : section(doc, "cochains").items()) {
        std::string p = "/cochains/" + name;
        const ModuleRef& m = ms.resolve(field(d, "module", p), p + "/module");
        long long n = integer(field(d, "degree", p), p + "/degree");
        if (n < 0 || n > 4) fail(p + "/degree", "degree out of range");
        Cochain c = guarded(p, [&] { return Cochain(m, static_cast<int>(n)); });
        const json& es = field(d, "entries", p);
        if (!es.is_array()) fail(p + "/entries", "expected an array");
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::string q = p + "/entries/" + std::to_string(i);
            if (!es[i].is_array() || es[i].size() != 2) fail(q, "expected [args, value]");
            auto args = int_list(es[i][0], q + "/0");
            auto val = int_list(es[i][1], q + "/1");
            if (static_cast<long long>(args.size()) != n) fail(q + "/0", "wrong number of arguments");
            for (long long x : args)
                if (x < 0 || x >= m->group.order()) fail(q + "/0", "argument out of range");
            if (static_cast<int>(val.size()) != m->coeff.rank()) fail(q + "/1", "wrong coefficient length");
            Args ax(args.begin(), args.end());
            guarded(q, [&] { c.add_at(ax, m->coeff.reduce(val)); return 0; });
        }
        ws.cochains.emplace(name, c);
        cs.add(name, cochain_hash(c));
    }
    Section<TwoType> ts;
    ts.items = &ws.types;
    for (const auto& [name, d] : section(doc, "twotypes").items()) {
        std::string p = "/twotypes/" + name;
        const ModuleRef& m = ms.resolve(field(d, "pi2", p), p + "/pi2");
        const Cochain& k = cs.resolve(field(d, "k3", p), p + "/k3");
        if (d.contains("pi1") && !(gs.resolve(d["pi1"], p + "/pi1") == m->group))
            fail(p + "/pi1", "pi1 differs from the group of pi2");
        if (k.degree() != 3 || module_hash(k.module()) != module_hash(*m))
            fail(p + "/k3", "k3 is not a 3-cochain with values in pi2");
        Cochain k2(m, 3);
        k2.raw() = k.raw();
        TwoType t = guarded(p + "/k3", [&] { return TwoType::make(m, k2); });
        ws.types.emplace(name, t);
        ts.add(name, content_hash(type_to_json(t)));
    }
    for (const auto& [name, d] : section(doc, "actions").items()) {
        std::string p = "/actions/" + name;
        const TwoType& t = ts.resolve(field(d, "twoGroupRef", p), p + "/twoGroupRef");
        const FiniteGroup& g = gs.resolve(field(d, "gammaRef", p), p + "/gammaRef");
        auto a = int_list(field(d, "A", p), p + "/A");
        const int n = t.pi1.order();
        if (static_cast<int>(a.size()) != n) fail(p + "/A", "expected one automorphism index per element of pi1'");
        std::vector<int> zeta(static_cast<std::size_t>(n) * n, 0);
        const json& zs = field(d, "zeta", p);
        if (!zs.is_array()) fail(p + "/zeta", "expected an array");
        for (std::size_t i = 0; i < zs.size(); ++i) {
            std::string q = p + "/zeta/" + std::to_string(i);
            if (!zs[i].is_array() || zs[i].size() != 2) fail(q, "expected [[s, t], g]");
            auto st = int_list(zs[i][0], q + "/0");
            long long v = integer(zs[i][1], q + "/1");
            if (st.size() != 2 || st[0] < 0 || st[0] >= n || st[1] < 0 || st[1] >= n) fail(q + "/0", "bad pair");
            if (v < 0 || v >= g.order()) fail(q + "/1", "element out of range");
            zeta[st[0] * n + st[1]] = static_cast<int>(v);
        }
        IntMat a2m = matrix(field(d, "A2", p), p + "/A2");
        PointedAction pa = guarded(p, [&] {
            PointedAction base = PointedAction::trivial(t, g);
            for (long long x : a)
                if (x < 0 || x >= base.aut->aut.order()) fail(p + "/A", "automorphism index out of range");
            AbHom h{t.pi2->coeff, base.centre.group, a2m};
            if (static_cast<int>(a2m.size()) != h.target.rank()) fail(p + "/A2", "wrong row count");
            for (const auto& r : a2m)
                if (static_cast<int>(r.size()) != h.source.rank()) fail(p + "/A2", "wrong column count");
            std::vector<AbElem> cols;
            for (int j = 0; j < h.source.rank(); ++j) cols.push_back(h(h.source.basis(j)));
            return PointedAction::make(t, g, std::vector<int>(a.begin(), a.end()), zeta,
                                       AbHom::from_images(h.source, h.target, cols));
        });
        ws.actions.emplace(name, pa);
    }
    return ws;
}

json canonicalize(const json& doc) { return load_workspace(doc).to_json(); }

std::string canonical_text(const json& doc) { return canonicalize(doc).dump(2) + "\n"; }

json parse_document(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::ParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

} // namespace tt
