// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_run.hpp"
#include "instances.hpp"
#include "oracles.hpp"
#include "twotype/coop.hpp"
#include "twotype/crossed.hpp"
#include "twotype/extensions.hpp"
#include "twotype/filtered.hpp"
#include "twotype/sequence.hpp"
#include "twotype/shapiro.hpp"

using namespace tt;
namespace fs = std::filesystem;

namespace {

// collects the first few failures of a criterion
struct Check {
    std::vector<std::string> failures;
    long long checked = 0;
    void require(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 5) failures.push_back(what);
    }
};

ModuleRef trivial(const FiniteGroup& g, long long n) { return inst::trivial(g, n); }

ModuleRef inverted(const FiniteGroup& g, long long n) {
    return make_module(PiModule::via_sign(g, FinAbGroup::cyclic(n), sign_characters(g)[1]));
}

CosetSection s3_section() {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (int x = 1; x < s3.order(); ++x)
        if (s3.elem_order(x) == 2) return CosetSection(s3, {0, x});
    raise(ErrorKind::NotASubgroup, "S3 has no involution");
}

TwoType z2_nontrivial() {
    ModuleRef m = trivial(FiniteGroup::cyclic(2), 2);
    return TwoType::make(m, Cohomology(m, 3).generators().at(0));
}

std::vector<Cochain> all_cocycles(const ModuleRef& m) {
    std::vector<Cochain> out;
    for (const Cochain& c : brute::all_cochains(m, 3))
        if (brute::is_cocycle(c)) out.push_back(c);
    return out;
}

std::string str(long long x) { return std::to_string(x); }

void cohomology_vs_brute(Check& c) {
    FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    std::vector<std::pair<std::string, ModuleRef>> ms = {{"Z2/Z2", trivial(z2, 2)}, {"Z2/Z3", trivial(z2, 3)},
                                                         {"Z2/Z3-inv", inverted(z2, 3)}, {"Z3/Z2", trivial(z3, 2)},
                                                         {"Z3/Z3", trivial(z3, 3)}};
    for (const auto& [name, m] : ms)
        for (int n = 0; n <= 3; ++n) {
            auto b = oracle::brute_cohomology(*m, n);
            c.require(b.has_value(), name + " degree " + str(n) + ": enumeration too large");
            if (b) c.require(*b == oracle::profile(Cohomology(m, n).group()), name + " degree " + str(n));
        }
}

void cyclic_self_coefficients(Check& c) {
    for (int m : {2, 3}) {
        ModuleRef mod = trivial(FiniteGroup::cyclic(m), m);
        for (int n = 0; n <= 4; ++n) {
            FinAbGroup h = Cohomology(mod, n).group();
            c.require(h.order() == m && h.factors() == std::vector<long long>{m},
                      "H^" + str(n) + "(Z/" + str(m) + ") = " + h.str());
            if (n <= 3) {
                auto b = oracle::brute_cohomology(*mod, n);
                c.require(b && b->order == m, "brute force H^" + str(n) + "(Z/" + str(m) + ")");
            }
        }
    }
}

void homotopies(Check& c) {
    CosetSection s = s3_section();
    CoinducedModule cm = CoinducedModule::build(s, trivial(s.subgroup_group(), 2));
    auto identity = [&](const Cochain& k) {
        Cochain lhs = bar_h(differential(k), cm);
        if (k.degree() > 0) lhs = lhs + differential(bar_h(k, cm));
        return lhs == k - bar_p(k, cm);
    };
    for (int n = 0; n <= 2; ++n)
        for (const Cochain& k : brute::basis_cochains(cm.module, n)) c.require(identity(k), "bar identity, degree " + str(n));
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) c.require(identity(brute::random_cochain(cm.module, 3, rng)), "bar identity, random degree 3");

    FilteredComplex fc(s, trivial(s.subgroup_group(), 2));
    for (int p = 0; p <= 2; ++p)
        for (int n = 0; n <= 3; ++n) {
            std::string at = "p=" + str(p) + " n=" + str(n);
            for (const Args& x : fc.domain(p, n)) {
                FilteredCochain k = fc.zero(p, n);
                fc.set(k, x, {1});
                FilteredCochain hd = fc.h(fc.d(k));
                FilteredCochain lhs = n > 0 ? fc.add(fc.d(fc.h(k)), hd) : hd;
                FilteredCochain P = fc.proj(k);
                c.require(lhs == fc.sub(k, P), "filtered identity " + at);
                c.require(fc.inflate(fc.restrict(P)) == P, "P = inf res P " + at);
            }
            if (p < 2)
                for (const Args& x : fc.domain(p + 1, n)) {
                    FilteredCochain k = fc.zero(p + 1, n);
                    fc.set(k, x, {1});
                    c.require(fc.restrict(fc.proj(fc.inflate(k))) == k, "res P inf = id " + at);
                }
        }
}

void shapiro(Check& c) {
    CosetSection s = s3_section();
    for (long long q : {2, 3}) {
        ModuleRef inner = trivial(s.subgroup_group(), q);
        CoinducedModule cm = CoinducedModule::build(s, inner);
        for (int n = 0; n <= 3; ++n)
            for (const Cochain& b : brute::all_cochains(inner, n)) {
                Cochain k = shapiro_inflate(b, cm);
                c.require(shapiro_restrict(k, cm) == b, "restrict inflate, Z/" + str(q) + " degree " + str(n));
                if (differential(b).is_zero()) c.require(differential(k).is_zero(), "inflated cocycle, degree " + str(n));
            }
    }
}

void coop_checks(Check& c) {
    FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    std::vector<ModuleRef> ms = {trivial(z2, 2), trivial(z2, 3), inverted(z2, 3), trivial(z3, 2), trivial(z3, 3)};
    for (const ModuleRef& m : ms)
        for (int n = 0; n <= 2; ++n)
            for (const Cochain& k : brute::all_cochains(m, n)) {
                c.require(coop(coop(k)) == k, "coop involution, degree " + str(n));
                c.require(coop(differential(k)) == differential(coop(k)), "coop chain map, degree " + str(n));
                Cochain lhs = coop_homotopy(differential(k));
                if (n > 0) lhs = lhs + differential(coop_homotopy(k));
                c.require(lhs == k - coop(k), "coop homotopy, degree " + str(n));
            }
    ModuleRef m = trivial(z2, 2);
    int cocycles = 0;
    for (const Cochain& k : all_cocycles(m)) {
        ++cocycles;
        c.require(pull_back_op1(opposite_postnikov(k), m) == -coop(k), "(op1)* K^op = -K^coop");
    }
    c.require(cocycles == 2, "Z^3(Z/2, Z/2) has " + str(cocycles) + " elements");
}

void coherence(Check& c) {
    std::vector<ModuleRef> ms = {trivial(FiniteGroup::cyclic(2), 2), trivial(FiniteGroup::cyclic(2), 4),
                                 trivial(FiniteGroup::cyclic(3), 3)};
    for (const ModuleRef& m : ms) {
        for (const Cochain& k : brute::all_cochains(m, 3)) {
            bool cocycle = brute::is_cocycle(k);
            CoherenceReport r = coherence_check(TwoGroup::unchecked(m, k));
            c.require(r.ok == cocycle, "coherence verdict differs from dK = 0");
            if (!cocycle) {
                c.require(r.witness.size() == 4 && !m->coeff.is_zero(differential(k).at(r.witness)),
                          "perturbation witness is not a quadruple with dK != 0");
            }
        }
    }
}

void crossed(Check& c) {
    std::vector<std::pair<std::string, CrossedModule>> cases = {{"Aut D4", aut_two_group(1, FiniteGroup::dihedral(4)).cm},
                                                                {"Aut Q8", aut_two_group(1, FiniteGroup::quaternion()).cm}};
    for (int n : {4, 9}) {
        FiniteGroup z = FiniteGroup::cyclic(n);
        int r = n == 4 ? 2 : 3;
        std::vector<int> mul(n);
        for (int x = 0; x < n; ++x) mul[x] = x * r % n;
        cases.push_back({"Z/" + str(n) + " by " + str(r), {z, z, GroupHom{z, z, mul}, GroupAction::trivial(z, z)}});
    }
    for (const auto& [name, cm] : cases) {
        CrossedExtraction least = crossed_module_to_two_type(cm);
        std::vector<int> other(least.coker.group.order(), -1);
        for (int x = 0; x < static_cast<int>(least.coker.proj.size()); ++x) other[least.coker.proj[x]] = x;
        other[0] = 0;
        c.require(other != least.section, name + ": no second section");
        CrossedExtraction e = crossed_module_to_two_type(cm, other);
        Cochain diff = least.type.k3 - e.type.k3;
        auto w = Cohomology(least.type.pi2, 3).witness(diff);
        c.require(w && differential(*w) == diff, name + ": no coboundary witness");
    }
    std::vector<std::pair<int, FiniteGroup>> abelian = {{1, FiniteGroup::cyclic(4)}, {1, FiniteGroup::cyclic(6)},
                                                        {1, FiniteGroup::klein()},   {1, FiniteGroup::cyclic(5)},
                                                        {2, FiniteGroup::cyclic(2)}};
    for (const auto& [f, g] : abelian) {
        AutTwoGroup a = aut_two_group(f, g);
        const auto& k = a.two_type.type.k3_class;
        c.require(std::all_of(k.begin(), k.end(), [](long long x) { return x == 0; }), "obs != 0 for " + g.label());
    }
}

void extension_counts(Check& c) {
    FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    struct Case {
        FiniteGroup p, g;
        long long expected;
    };
    for (const Case& x : {Case{z2, z2, 2}, Case{z2, z3, 1}, Case{z3, z3, 3}}) {
        std::vector<int> outer(x.p.order(), 0);
        GroupExtensionClasses r = classify_group_extensions(x.p, x.g, outer);
        std::vector<std::vector<int>> autos(x.p.order());
        for (auto& a : autos) {
            a.resize(x.g.order());
            for (int i = 0; i < x.g.order(); ++i) a[i] = i;
        }
        long long h2 = Cohomology(trivial(x.p, x.g.order()), 2).group().order();
        std::string name = x.g.label() + " by " + x.p.label();
        c.require(r.count() == x.expected, name + ": " + str(r.count()) + " classes");
        c.require(brute::factor_set_classes(x.p, x.g, autos) == x.expected, name + ": factor-set enumeration");
        c.require(h2 == x.expected, name + ": |H^2| = " + str(h2));
    }
    TwoType t = TwoType::strict(make_module(PiModule::trivial(z2, FinAbGroup())));
    AbelianPart z = abelian_part(z2, centre(z2));
    AbHom a2 = AbHom::zero(FinAbGroup(), z.group);
    ZeroCellClasses cells = classify_0cells(t, z2, {0, 0}, a2);
    c.require(cells.count() == 2, "0-cells of (Z/2, 0, 0) on B_Z/2: " + str(cells.count()));
    c.require(oracle::brute_0cells(t, z2, {0, 0}, a2) == 2, "(A, zeta) enumeration of 0-cells");
    c.require(Cohomology(trivial(z2, 2), 2).group().order() == 2, "|H^2(Z/2, Z/2)|");
}

void nonassoc_audit(Check& c) {
    std::vector<PointedAction> cells = inst::small_actions(16);
    c.require(cells.size() >= 100, "only " + str(cells.size()) + " instances");
    for (const PointedAction& p : cells) {
        NonAssocExtension e = NonAssocExtension::build(p);
        ExtensionAudit au = audit_extension(e);
        c.require(au.ok, "audit: " + au.failure);
        const int n = e.order(), m = p.gamma.order();
        std::vector<int> conj = conjugation_action(e);
        bool defect = true, in_gamma = true, mixed = true;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                for (int w = 0; w < n; ++w) {
                    int k = p.a2_elem(p.acting.k3.at({e.proj(x), e.proj(y), e.proj(w)}));
                    int lhs = e.mul(x, e.mul(y, w)), rhs = e.mul(e.mul(x, y), w);
                    defect &= lhs == e.mul(e.elem(k, 0), rhs);
                    if (e.proj(x) == 0 || e.proj(y) == 0 || e.proj(w) == 0) in_gamma &= lhs == rhs;
                }
                for (int g = 0; g < m; ++g) mixed &= conj[e.mul(x, y) * m + g] == conj[x * m + conj[y * m + g]];
            }
        c.require(defect, "defect identity");
        c.require(in_gamma, "associativity with a factor in gamma'");
        c.require(mixed, "(f e).g = f.(e.g)");
    }
}

void exact_sequences(Check& c) {
    FiniteGroup z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4);
    TwoType k = z2_nontrivial();
    struct Case {
        std::string name;
        TwoType t;
        FiniteGroup g;
        std::vector<int> outer;
    };
    std::vector<Case> cases = {{"(Z/2, Z/2, K3 != 0), gamma = Z/2", k, z2, {0, 0}},
                               {"(Z/2, Z/2, K3 != 0), gamma = Z/4 inverted", k, z4, {0, 1}},
                               {"(Z/2, 0, 0), gamma = Z/4", TwoType::strict(make_module(PiModule::trivial(z2, FinAbGroup()))), z4, {0, 0}},
                               {"(1, Z/2, 0), gamma = K4", TwoType::strict(trivial(FiniteGroup::trivial(), 2)), FiniteGroup::klein(), {0}}};
    for (const Case& x : cases) {
        SequenceInstance s = homotopy_exact_sequence(x.t, x.g, x.outer);
        SequenceAudit a = audit_sequence(s);
        c.require(a.ok, x.name + ": " + a.failure);
        for (std::size_t h = 0; h < s.homs.size(); ++h) {
            auto b = oracle::brute_0cells(x.t, x.g, x.outer, s.homs[h]);
            c.require(b && *b == s.fibres[h].count(), x.name + ": fibre " + str(h) + " differs from enumeration");
        }
    }
    SequenceInstance s = homotopy_exact_sequence(k, z2, {0, 0});
    c.require(s.middle.size() == 2, "middle node has " + str(s.middle.size()) + " elements");
    c.require(s.homs.size() == 2 && !s.fibres[0].empty && s.fibres[1].empty, "only phi = 0 lifts");
    Cohomology h3(k.pi2, 3);
    AbElem tr = transgression(AbHom::identity(k.pi2->coeff), k, k.pi2);
    c.require(tr == h3.classify(k.k3) && !h3.group().is_zero(tr), "transgression of id is not [K3]");
}

void orbifolds(Check& c) {
    auto is = [&](const std::vector<long long>& sig, int n, const std::string& want) {
        std::string got = orbifold_invariants(sig, n).str();
        c.require(got == want, "degree " + str(n) + ": " + got);
    };
    is({2, 2}, 4, "Z/2 ⊕ Z/2");
    is({2, 2}, 3, "0");
    is({2, 3, 7}, 4, "Z/2 ⊕ Z/3 ⊕ Z/7");
    is({2, 3, 7}, 6, "Z/2 ⊕ Z/3 ⊕ Z/7");
    is({2, 3, 7}, 5, "0");
    is({2, 3, 5}, 2, "0 → Z → Pic → Z/2 ⊕ Z/3 ⊕ Z/5 → 0 (extension class not determined)");
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cli_reports(Check& c) {
    std::vector<std::string> commands = {
        "cohomology --group Z2 --module Z2-trivial --degree 3",
        "--json --oracle classify 0cells --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma Z4 --outer 0,1 --a2 [[2]]",
        "--oracle classify extensions --pi1 Z3 --gamma Z3",
        "extend --workspace " + clirun::fixture("action_z4.json") + " --src c0",
        "--json sequence --pi1 Z2 --pi2 Z2-trivial --k3 1 --gamma Z2",
        "orbifold --signature 2,2 --degree 4",
        "selftest",
    };
    for (const std::string& cmd : commands) {
        clirun::Result first = clirun::run(cmd);
        c.require(first.code == 0 && !first.out.empty(), cmd + ": exit " + str(first.code));
        for (int i = 0; i < 2; ++i) {
            clirun::Result again = clirun::run(cmd);
            c.require(again.code == first.code && again.out == first.out, cmd + ": output differs between runs");
        }
    }
    fs::path dir = TWOTYPE_FIXTURES;
    int files = 0;
    for (const auto& e : fs::directory_iterator(dir / "golden")) {
        std::string name = e.path().filename().string();
        std::string golden = slurp(e.path());
        c.require(clirun::run("canonicalize " + clirun::fixture(name)).out == golden, name + ": canonical form differs");
        c.require(clirun::run("canonicalize " + clirun::fixture("golden/" + name)).out == golden, name + ": not idempotent");
        ++files;
    }
    c.require(files >= 6, "fixture corpus has " + str(files) + " golden files");
    c.require(clirun::run("canonicalize " + clirun::fixture("reordered.json")).out == slurp(dir / "golden" / "strict_z2.json"),
              "reordered keys change the canonical bytes");
}

} // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"cohomology matches brute force over Z/2, Z/3 (n <= 3)", cohomology_vs_brute},
        {"|H^n(Z/m, Z/m)| = m for m in {2,3}, n <= 4", cyclic_self_coefficients},
        {"bar and filtered homotopy identities over Z/2 <= S3", homotopies},
        {"Shapiro restrict o inflate = id, inflated cocycles", shapiro},
        {"co-op involution, chain map, homotopy and (op1)* K^op = -K^coop", coop_checks},
        {"coherence for cocycles, witnesses for perturbations", coherence},
        {"crossed-module section independence, obs = 0 for abelian gamma", crossed},
        {"extension and 0-cell counts", extension_counts},
        {"non-associative extension audit, |E'| <= 16", nonassoc_audit},
        {"exact-sequence audit and transgression", exact_sequences},
        {"orbifold closed forms", orbifolds},
        {"CLI determinism and canonical round trip", cli_reports},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = c.failures.empty() && error.empty();
        failed += !ok;
        char time[32];
        std::snprintf(time, sizeof time, "%.2fs", secs);
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << c.checked
                  << " checks, " << time << ")\n";
        if (!error.empty()) std::cout << "       exception: " << error << "\n";
        for (const std::string& f : c.failures) std::cout << "       " << f << "\n";
    }
    std::cout << (failed ? str(failed) + " criteria failed\n" : "all criteria pass\n");
    return failed ? 1 : 0;
}
