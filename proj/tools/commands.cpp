#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "twotype/error.hpp"
#include "twotype/extensions.hpp"
#include "twotype/sequence.hpp"
#include "twotype_oracle/oracle.hpp"

namespace cli {

using namespace tt;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::ParseError, path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// library errors name the location inside the document; add the file
template <class F>
auto located(const std::string& path, F&& f) {
    json doc = parse_document(read_file(path), path);
    try {
        return f(doc);
    } catch (const Error& e) {
        raise(e.kind(), path + ": " + e.message());
    }
}

struct Context {
    std::optional<Workspace> ws;
    explicit Context(const Options& o) {
        if (!o.workspace.empty()) ws = located(o.workspace, [](const json& d) { return load_workspace(d); });
    }
    FiniteGroup group(const std::string& name) const {
        if (ws) {
            auto it = ws->groups.find(name);
            if (it != ws->groups.end()) return it->second;
        }
        return builtin_group(name);
    }
    ModuleRef module(const FiniteGroup& g, const std::string& name) const {
        if (ws) {
            auto it = ws->modules.find(name);
            if (it != ws->modules.end()) {
                if (!(it->second->group == g)) raise(ErrorKind::IncompatibleTypes, "module '" + name + "' is over another group");
                return it->second;
            }
        }
        return builtin_module(g, name);
    }
    TwoType type(const Options& o) const {
        if (!o.type.empty()) {
            if (!ws) raise(ErrorKind::ParseError, "--type needs --workspace");
            auto it = ws->types.find(o.type);
            if (it == ws->types.end()) raise(ErrorKind::ParseError, "no 2-type named '" + o.type + "'");
            return it->second;
        }
        if (o.pi1.empty()) raise(ErrorKind::ParseError, "--pi1 or --type is required");
        FiniteGroup p = group(o.pi1);
        ModuleRef m = module(p, o.pi2);
        if (!o.k3_cochain.empty()) {
            if (!ws || !ws->cochains.count(o.k3_cochain)) raise(ErrorKind::ParseError, "no cochain named '" + o.k3_cochain + "'");
            Cochain k(m, 3);
            const Cochain& c = ws->cochains.at(o.k3_cochain);
            if (c.degree() != 3 || c.tuples() != k.tuples() || !(c.coeff() == m->coeff))
                raise(ErrorKind::IncompatibleTypes, "cochain '" + o.k3_cochain + "' is not a 3-cochain in pi2");
            k.raw() = c.raw();
            return TwoType::make(m, k);
        }
        Cohomology h3(m, 3);
        if (o.k3 < 0 || o.k3 >= h3.group().order())
            raise(ErrorKind::ParseError, "--k3 must index an element of H^3 = " + h3.group().str());
        return TwoType::make(m, h3.representative(h3.group().element(o.k3)));
    }
};

std::vector<long long> int_list(const std::string& s, const char* what) {
    std::vector<long long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            raise(ErrorKind::ParseError, std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

std::vector<int> outer_rep(const Options& o, int n) {
    if (o.outer.empty()) return std::vector<int>(n, 0);
    auto v = int_list(o.outer, "--outer");
    if (static_cast<int>(v.size()) != n) raise(ErrorKind::ParseError, "--outer needs one Out index per element of pi1");
    return {v.begin(), v.end()};
}

AbHom a2_map(const Options& o, const TwoType& t, const FiniteGroup& gamma) {
    AbelianPart z = abelian_part(gamma, centre(gamma));
    const FinAbGroup& src = t.pi2->coeff;
    if (o.a2.empty()) return AbHom::zero(src, z.group);
    json m = parse_document(o.a2, "--a2");
    if (!m.is_array() || static_cast<int>(m.size()) != src.rank())
        raise(ErrorKind::ParseError, "--a2: expected one image per generator of pi2 (" + std::to_string(src.rank()) + ")");
    std::vector<AbElem> cols;
    for (const json& c : m) {
        if (!c.is_array() || static_cast<int>(c.size()) != z.group.rank())
            raise(ErrorKind::ParseError, "--a2: images are coordinates in Z(gamma) = " + z.group.str());
        AbElem v;
        for (const json& x : c) {
            if (!x.is_number_integer()) raise(ErrorKind::ParseError, "--a2: expected integers");
            v.push_back(x.get<long long>());
        }
        cols.push_back(z.group.reduce(v));
    }
    return AbHom::from_images(src, z.group, cols);
}

std::string elem_str(const AbElem& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string list_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

json zeta_json(const PointedAction& p) {
    json z = json::array();
    for (int s = 0; s < p.n(); ++s)
        for (int t = 0; t < p.n(); ++t)
            if (p.zeta_at(s, t)) z.push_back(json::array({json::array({s, t}), p.zeta_at(s, t)}));
    return z;
}

std::string zeta_str(const PointedAction& p) {
    std::string s;
    for (int a = 0; a < p.n(); ++a)
        for (int b = 0; b < p.n(); ++b)
            if (p.zeta_at(a, b)) s += (s.empty() ? "" : " ") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")->" + std::to_string(p.zeta_at(a, b)));
    return s.empty() ? "1" : s;
}

void oracle_line(Report& r, const std::optional<long long>& brute, long long got) {
    if (!brute) {
        r.line("oracle: skipped (enumeration too large)");
        r.doc["oracle"] = "skipped";
    } else if (*brute == got) {
        r.line("oracle: agree (" + std::to_string(*brute) + ")");
        r.doc["oracle"] = "agree";
    } else {
        r.line("oracle: DISAGREE (brute force " + std::to_string(*brute) + ")");
        r.doc["oracle"] = "disagree";
    }
}

bool oracle_failed(const Report& r) { return r.doc.contains("oracle") && r.doc["oracle"] == "disagree"; }

const PointedAction& named_action(const Context& c, const std::string& name, const char* flag) {
    if (!c.ws) raise(ErrorKind::ParseError, std::string(flag) + " needs --workspace");
    auto it = c.ws->actions.find(name);
    if (it == c.ws->actions.end()) raise(ErrorKind::ParseError, "no action named '" + name + "'");
    return it->second;
}

OneCellSetting one_cell_setting(const Context& c, const Options& o) {
    const PointedAction& s = named_action(c, o.src, "--src");
    const PointedAction& d = named_action(c, o.dst, "--dst");
    if (!(s.acting.pi1 == d.acting.pi1) || !(s.acting.pi2->coeff == d.acting.pi2->coeff))
        raise(ErrorKind::IncompatibleTypes, "source and target actions must share the acting 2-type");
    std::vector<int> id(s.n());
    for (int i = 0; i < s.n(); ++i) id[i] = i;
    return {s, d, GroupHom{s.acting.pi1, d.acting.pi1, id}, AbHom::identity(s.acting.pi2->coeff)};
}

std::vector<int> f_map(const Options& o, const OneCellSetting& s) {
    const int g = s.src.gamma.order();
    if (o.f.empty() || o.f == "id") {
        if (!(s.src.gamma == s.dst.gamma)) raise(ErrorKind::ParseError, "--f is required when the groups differ");
        std::vector<int> id(g);
        for (int i = 0; i < g; ++i) id[i] = i;
        return id;
    }
    auto v = int_list(o.f, "--f");
    if (static_cast<int>(v.size()) != g) raise(ErrorKind::ParseError, "--f needs one image per element of gamma'");
    return {v.begin(), v.end()};
}

} // namespace

int cohomology(const Options& o, Report& r) {
    Context c(o);
    FiniteGroup g = c.group(o.group);
    ModuleRef m = c.module(g, o.module);
    Cohomology h(m, o.degree);
    r.line(h.group().str());
    r.doc = {{"command", "cohomology"}, {"group", o.group}, {"module", o.module}, {"degree", o.degree},
             {"result", h.group().str()}, {"factors", h.group().factors()}};
    if (o.oracle) {
        auto b = oracle::brute_cohomology(*m, o.degree);
        if (!b) {
            r.line("oracle: skipped (cochain space too large)");
            r.doc["oracle"] = "skipped";
        } else {
            bool ok = *b == oracle::profile(h.group());
            r.line(ok ? "oracle: agree" : "oracle: DISAGREE (brute force order " + std::to_string(b->order) + ")");
            r.doc["oracle"] = ok ? "agree" : "disagree";
        }
    }
    return oracle_failed(r) ? 1 : 0;
}

int verify_2group(const Options& o, Report& r) {
    r.doc["command"] = "verify-2group";
    std::optional<TwoType> loaded;
    try {
        Context c(o);
        loaded = c.type(o);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotACocycle && e.kind() != ErrorKind::NotNormalized) throw;
        r.line(std::string("fail: ") + e.what());
        r.doc["result"] = "fail";
        r.doc["failure"] = e.what();
        return 1;
    }
    const TwoType& t = *loaded;
    CoherenceReport rep = coherence_check(TwoGroup(t));
    r.doc["pi1"] = t.pi1.label();
    r.doc["pi1_order"] = t.pi1.order();
    r.doc["pi2"] = t.pi2->coeff.str();
    r.doc["k3_class"] = t.k3_class;
    if (!rep.ok) {
        r.line("fail: " + rep.failure);
        r.doc["result"] = "fail";
        r.doc["failure"] = rep.failure;
        r.doc["witness"] = rep.witness;
        return 1;
    }
    r.line("pass");
    r.doc["result"] = "pass";
    return 0;
}

int classify_0cells(const Options& o, Report& r) {
    Context c(o);
    TwoType t = c.type(o);
    FiniteGroup gamma = c.group(o.gamma);
    std::vector<int> outer = outer_rep(o, t.pi1.order());
    AbHom a2 = a2_map(o, t, gamma);
    ZeroCellClasses z = tt::classify_0cells(t, gamma, outer, a2);
    r.doc = {{"command", "classify 0cells"}, {"obstruction_group", z.obstruction_group.str()},
             {"obstruction", z.obstruction}, {"torsor_group", z.torsor_group.str()}, {"empty", z.empty}};
    r.line("obstruction group: " + z.obstruction_group.str());
    r.line("obstruction: " + elem_str(z.obstruction));
    r.line("torsor group: " + z.torsor_group.str());
    r.line("classes: " + std::to_string(z.count()));
    json cls = json::array();
    for (std::size_t i = 0; i < z.classes.size(); ++i) {
        const PointedAction& p = z.classes[i];
        r.line("class " + std::to_string(i) + ": A=" + list_str(p.a) + " zeta=" + zeta_str(p) + " orbit " +
               std::to_string(z.orbit[i]));
        cls.push_back({{"A", p.a}, {"zeta", zeta_json(p)}, {"orbit", z.orbit[i]}});
    }
    r.doc["classes"] = cls;
    if (o.oracle) oracle_line(r, oracle::brute_0cells(t, gamma, outer, a2), z.count());
    return z.empty || oracle_failed(r) ? 1 : 0;
}

int classify_1cells(const Options& o, Report& r) {
    Context c(o);
    OneCellSetting s = one_cell_setting(c, o);
    std::vector<int> f = f_map(o, s);
    OneCellClasses k = tt::classify_1cells(s, f);
    r.doc = {{"command", "classify 1cells"}, {"empty", k.empty}, {"centraliser", k.centraliser}};
    r.line("centraliser: " + list_str(k.centraliser));
    r.line("classes: " + std::to_string(k.count()));
    json cls = json::array();
    for (std::size_t i = 0; i < k.classes.size(); ++i) {
        r.line("class " + std::to_string(i) + ": xi=" + list_str(k.classes[i].xi));
        cls.push_back({{"f", k.classes[i].f}, {"xi", k.classes[i].xi}});
    }
    r.doc["classes"] = cls;
    if (o.oracle) oracle_line(r, oracle::brute_1cells(s, f), k.count());
    return k.empty || oracle_failed(r) ? 1 : 0;
}

int classify_2cells(const Options& o, Report& r) {
    Context c(o);
    OneCellSetting s = one_cell_setting(c, o);
    std::vector<int> f = f_map(o, s);
    OneCellClasses k = tt::classify_1cells(s, f);
    if (o.from < 0 || o.to < 0 || o.from >= k.count() || o.to >= k.count())
        raise(ErrorKind::ParseError, "--from/--to must index 1-cell classes (" + std::to_string(k.count()) + ")");
    TwoCellClasses t = tt::classify_2cells(s, k.classes[o.from], k.classes[o.to]);
    r.doc = {{"command", "classify 2cells"}, {"empty", t.empty}, {"reason", t.reason},
             {"class_in_h1", t.class_in_h1}, {"fixed", t.fixed}, {"cells", t.cells}};
    r.line("from class " + std::to_string(o.from) + " to class " + std::to_string(o.to));
    if (t.empty) r.line("empty: " + t.reason);
    r.line("torsor group H^0: " + list_str(t.fixed));
    r.line("2-cells: " + list_str(t.cells));
    if (o.oracle) {
        std::vector<int> brute;
        for (int phi = 0; phi < s.dst.gamma.order(); ++phi)
            if (is_two_cell(s, k.classes[o.from], k.classes[o.to], phi)) brute.push_back(phi);
        bool ok = brute == t.cells;
        r.line(ok ? "oracle: agree" : "oracle: DISAGREE");
        r.doc["oracle"] = ok ? "agree" : "disagree";
    }
    return t.empty || oracle_failed(r) ? 1 : 0;
}

int classify_extensions(const Options& o, Report& r) {
    Context c(o);
    FiniteGroup p = c.group(o.pi1);
    FiniteGroup gamma = c.group(o.gamma);
    std::vector<int> outer = outer_rep(o, p.order());
    GroupExtensionClasses g = classify_group_extensions(p, gamma, outer);
    r.doc = {{"command", "classify extensions"}, {"obstruction_group", g.cells.obstruction_group.str()},
             {"obstruction", g.cells.obstruction}, {"torsor_group", g.cells.torsor_group.str()},
             {"empty", g.empty()}};
    r.line("obstruction group: " + g.cells.obstruction_group.str());
    r.line("obstruction: " + elem_str(g.cells.obstruction));
    r.line("torsor group: " + g.cells.torsor_group.str());
    r.line("classes: " + std::to_string(g.count()));
    json cls = json::array();
    for (std::size_t i = 0; i < g.extensions.size(); ++i) {
        const GroupExtension& e = g.extensions[i];
        std::vector<int> orders;
        for (int x = 0; x < e.e.order(); ++x) orders.push_back(e.e.elem_order(x));
        std::sort(orders.begin(), orders.end());
        r.line("class " + std::to_string(i) + ": |E|=" + std::to_string(e.e.order()) +
               (e.e.is_abelian() ? " abelian" : " nonabelian") + " element orders " + list_str(orders) +
               (e.exact() ? " exact" : " NOT EXACT"));
        cls.push_back({{"order", e.e.order()}, {"abelian", e.e.is_abelian()}, {"element_orders", orders},
                       {"table", e.e.rows()}, {"exact", e.exact()}});
    }
    r.doc["classes"] = cls;
    if (o.oracle) {
        ModuleRef zero = make_module(PiModule::trivial(p, FinAbGroup()));
        AbelianPart z = abelian_part(gamma, centre(gamma));
        oracle_line(r, oracle::brute_0cells(TwoType::strict(zero), gamma, outer, AbHom::zero(FinAbGroup(), z.group)),
                    g.count());
    }
    return g.empty() || oracle_failed(r) ? 1 : 0;
}

int extend(const Options& o, Report& r) {
    Context c(o);
    PointedAction a = [&] {
        if (!o.src.empty()) return named_action(c, o.src, "--src");
        TwoType t = c.type(o);
        FiniteGroup gamma = c.group(o.gamma);
        ZeroCellClasses z = tt::classify_0cells(t, gamma, outer_rep(o, t.pi1.order()), a2_map(o, t, gamma));
        if (z.empty) raise(ErrorKind::InvalidAction, "no 0-cells: obstruction " + elem_str(z.obstruction));
        if (o.cls < 0 || o.cls >= z.count()) raise(ErrorKind::ParseError, "--class out of range");
        return z.classes[o.cls];
    }();
    NonAssocExtension e = NonAssocExtension::build(a);
    ExtensionAudit au = audit_extension(e);
    bool assoc = a.acting.k3.is_zero();
    r.doc = {{"command", "extend"}, {"order", e.order()}, {"associative", assoc}, {"audit", au.ok ? "pass" : au.failure}};
    r.line("order: " + std::to_string(e.order()));
    r.line(std::string("associator: ") + (assoc ? "zero" : "nonzero"));
    r.line("audit: " + (au.ok ? std::string("pass") : "fail: " + au.failure));
    if (!au.ok) return 1;
    if (assoc) {
        GroupExtension g = to_group_extension(e);
        r.line(std::string("group extension: ") + (g.exact() ? "exact" : "NOT EXACT"));
        r.doc["group_extension_exact"] = g.exact();
    }
    ExtractedCrossed x = extract_crossed_module(e);
    Cohomology h3(a.acting.pi2, 3);
    bool same = h3.cohomologous(x.k3_on_pi1, a.acting.k3);
    r.line("crossed module: |G1| = " + std::to_string(x.cm.g1.order()) + ", kernel " + x.extraction.kernel.group.str() +
           (x.exact ? ", exact" : ", NOT EXACT"));
    r.line(std::string("extracted k3 matches K3': ") + (same ? "yes" : "no"));
    CellTwoType cell = cell_two_type(e);
    r.line("cell 2-type: |pi1(q')| = " + std::to_string(cell.pi1q.order()) + ", dS' = K3': " +
           (cell.differential_ok ? "yes" : "no"));
    json orbit = json::array();
    std::string os;
    for (const AbElem& v : cell.orbit) {
        orbit.push_back(v);
        os += (os.empty() ? "" : " ") + elem_str(v);
    }
    r.line("k3(q') orbit in " + cell.orbit_group.str() + ": " + os);
    r.doc["crossed_exact"] = x.exact;
    r.doc["k3_matches"] = same;
    r.doc["differential_ok"] = cell.differential_ok;
    r.doc["orbit_group"] = cell.orbit_group.str();
    r.doc["orbit"] = orbit;
    return x.exact && same && cell.differential_ok ? 0 : 1;
}

int sequence(const Options& o, Report& r) {
    Context c(o);
    TwoType t = c.type(o);
    FiniteGroup gamma = c.group(o.gamma);
    std::vector<int> outer = outer_rep(o, t.pi1.order());
    SequenceInstance s = homotopy_exact_sequence(t, gamma, outer);
    SequenceAudit au = audit_sequence(s);
    const FinAbGroup& H3 = s.h3->group();
    r.line("H^2(pi1, Z): " + s.h2->group().str());
    r.line("0-cells: " + std::to_string(s.middle.size()));
    r.line("Hom(pi2, Z): " + std::to_string(s.homs.size()));
    r.line("H^3(pi1, Z): " + H3.str());
    r.line("obs: " + elem_str(s.obs));
    json homs = json::array();
    bool agree = true;
    for (std::size_t i = 0; i < s.homs.size(); ++i) {
        long long lifts = s.fibres[i].count();
        r.line("hom " + std::to_string(i) + ": transgression " + elem_str(s.transgressed[i]) + ", 0-cells " +
               std::to_string(lifts));
        json h = {{"matrix", s.homs[i].matrix}, {"transgression", s.transgressed[i]}, {"cells", lifts}};
        if (o.oracle) {
            auto b = oracle::brute_0cells(t, gamma, outer, s.homs[i]);
            h["oracle"] = b ? (*b == lifts ? "agree" : "disagree") : "skipped";
            agree &= !b || *b == lifts;
        }
        homs.push_back(h);
    }
    r.line("audit: " + (au.ok ? std::string("pass") : "fail: " + au.failure));
    r.doc = {{"command", "sequence"}, {"h2", s.h2->group().str()}, {"cells", s.middle.size()}, {"h3", H3.str()},
             {"obs", s.obs}, {"homs", homs}, {"audit", au.ok ? "pass" : au.failure}};
    if (o.oracle) {
        r.line(agree ? "oracle: agree" : "oracle: DISAGREE");
        r.doc["oracle"] = agree ? "agree" : "disagree";
    }
    return au.ok && agree ? 0 : 1;
}

int orbifold(const Options& o, Report& r) {
    if (o.signature.empty()) raise(ErrorKind::BadSignature, "--signature is required");
    OrbifoldInvariant v = orbifold_invariants(int_list(o.signature, "--signature"), o.degree);
    r.line(v.str());
    r.doc = {{"command", "orbifold"}, {"degree", v.degree}, {"summands", v.summands}, {"result", v.str()}};
    if (v.picard) r.doc["extension_class"] = "not determined";
    return 0;
}

int selftest(const Options&, Report& r) {
    bool all = true;
    json checks = json::array();
    auto check = [&](const std::string& name, bool ok) {
        r.line((ok ? "pass " : "FAIL ") + name);
        checks.push_back({{"name", name}, {"ok", ok}});
        all &= ok;
    };
    FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    ModuleRef m22 = make_module(PiModule::trivial(z2, FinAbGroup::cyclic(2)));
    Cohomology h3(m22, 3);
    check("H^3(Z/2, Z/2) = Z/2", h3.group().str() == "Z/2");
    auto ext = [](const FiniteGroup& p, const FiniteGroup& g) {
        return classify_group_extensions(p, g, std::vector<int>(p.order(), 0)).count();
    };
    check("central extensions of Z/2 by Z/2: 2", ext(z2, z2) == 2);
    check("extensions of Z/2 by Z/3: 1", ext(z2, z3) == 1);
    check("central extensions of Z/3 by Z/3: 3", ext(z3, z3) == 3);
    TwoType t = TwoType::make(m22, h3.generators()[0]);
    check("coherence of (Z/2, Z/2, K3 != 0)", coherence_check(TwoGroup(t)).ok);
    SequenceInstance s = homotopy_exact_sequence(t, z2, {0, 0});
    check("exact sequence for (Z/2, Z/2, K3 != 0), gamma = Z/2", audit_sequence(s).ok && s.middle.size() == 2);
    check("orbifold (2,2) degree 4", orbifold_invariants({2, 2}, 4).str() == "Z/2 ⊕ Z/2");
    AutTwoGroup a = aut_two_group(1, FiniteGroup::cyclic(4));
    check("Aut 2-group of Z/4 exact", a.exact);
    r.doc = {{"command", "selftest"}, {"checks", checks}, {"result", all ? "pass" : "fail"}};
    return all ? 0 : 1;
}

int canonicalize(const Options& o, Report& r) {
    std::string text = located(o.input, [](const json& d) { return canonical_text(d); });
    if (!o.output.empty()) {
        std::ofstream out(o.output, std::ios::binary);
        if (!out) raise(ErrorKind::ParseError, o.output + ": cannot write");
        out << text;
        r.raw = "";
    } else {
        r.raw = text;
    }
    return 0;
}

} // namespace cli
