#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "twotype/coop.hpp"
#include "twotype/filtered.hpp"
#include "twotype/nonabelian.hpp"
#include "twotype/shapiro.hpp"

using namespace tt;

namespace {

ModuleRef trivial(const FiniteGroup& g, long long n) { return make_module(PiModule::trivial(g, FinAbGroup::cyclic(n))); }

ModuleRef inverted(const FiniteGroup& g, long long n) {
    return make_module(PiModule::via_sign(g, FinAbGroup::cyclic(n), sign_characters(g)[1]));
}

// every small coefficient module of Z/2 and Z/3, with the nontrivial actions that exist
std::vector<std::pair<std::string, ModuleRef>> small_modules() {
    FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    return {{"Z2/Z2", trivial(z2, 2)}, {"Z2/Z3", trivial(z2, 3)}, {"Z2/Z3-inv", inverted(z2, 3)},
            {"Z3/Z2", trivial(z3, 2)}, {"Z3/Z3", trivial(z3, 3)}};
}

// Z/2 = {1, (01)} inside S3
CosetSection s3_section() {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    for (int x = 1; x < s3.order(); ++x)
        if (s3.elem_order(x) == 2) return CosetSection(s3, {0, x});
    throw std::logic_error("no involution");
}

} // namespace

TEST(Differential, SquaresToZeroOnBasis) {
    for (const auto& [name, m] : small_modules())
        for (int n = 0; n <= 3; ++n)
            for (const Cochain& c : brute::basis_cochains(m, n))
                EXPECT_TRUE(differential(differential(c)).is_zero()) << name << " degree " << n;
    ModuleRef s3 = inverted(FiniteGroup::symmetric(3), 3);
    for (int n = 0; n <= 2; ++n)
        for (const Cochain& c : brute::basis_cochains(s3, n)) EXPECT_TRUE(differential(differential(c)).is_zero());
}

TEST(Differential, AgreesWithDirectBarFormula) {
    std::mt19937 rng(7);
    for (const auto& [name, m] : small_modules())
        for (int n = 0; n <= 2; ++n)
            for (int i = 0; i < 5; ++i) {
                Cochain c = brute::random_cochain(m, n, rng);
                Cochain d = differential(c);
                oracle::detail::Space s(*m, n), t(*m, n + 1);
                EXPECT_EQ(brute::values(d), oracle::detail::bar_d(s, t, brute::values(c))) << name;
            }
}

TEST(Differential, SmallCases) {
    ModuleRef m = trivial(FiniteGroup::cyclic(2), 2);
    EXPECT_TRUE(differential(Cochain(m, 2)).is_zero());
    Cochain a(m, 0);
    a.set({}, {1});
    EXPECT_TRUE(differential(a).is_zero());
    Cochain f(m, 2);
    f.set({1, 1}, {1});
    EXPECT_TRUE(differential(f).is_zero());
    // under inversion a 0-cochain a has da(x) = x.a - a = -2a on the generator
    ModuleRef inv = inverted(FiniteGroup::cyclic(2), 3);
    Cochain b(inv, 0);
    b.set({}, {1});
    EXPECT_EQ(differential(b).at({1}), (AbElem{1}));
}

TEST(Cochains, RejectsValuesAtIdentityArguments) {
    ModuleRef m = trivial(FiniteGroup::cyclic(2), 2);
    Cochain c(m, 2);
    EXPECT_EQ(kind_of([&] { c.set({0, 1}, {1}); }), ErrorKind::NotNormalized);
    EXPECT_NO_THROW(c.set({0, 1}, {0}));
}

TEST(Cochains, CoordinatesRoundTrip) {
    std::mt19937 rng(3);
    ModuleRef m = inverted(FiniteGroup::symmetric(3), 3);
    for (int n = 0; n <= 2; ++n) {
        Cochain c = brute::random_cochain(m, n, rng);
        EXPECT_EQ(from_coords(m, n, to_coords(c)), c);
        EXPECT_EQ(cochain_group(*m, n).rank(), static_cast<int>(normalized_tuples(*m, n)));
    }
}

TEST(Cohomology, MatchesFullEnumeration) {
    for (const auto& [name, m] : small_modules())
        for (int n = 0; n <= 3; ++n) {
            auto brute = oracle::brute_cohomology(*m, n);
            ASSERT_TRUE(brute.has_value()) << name << " degree " << n;
            EXPECT_EQ(oracle::profile(Cohomology(m, n).group()), *brute) << name << " degree " << n;
        }
}

TEST(Cohomology, CyclicPeriodicity) {
    for (int mdl : {2, 3, 4, 5})
        for (int n = 0; n <= 4; ++n)
            EXPECT_EQ(Cohomology(trivial(FiniteGroup::cyclic(mdl), mdl), n).group().order(), mdl);
}

TEST(Cohomology, KnownGroups) {
    EXPECT_EQ(Cohomology(trivial(FiniteGroup::trivial(), 6), 2).group().str(), "0");
    EXPECT_EQ(Cohomology(trivial(FiniteGroup::trivial(), 6), 0).group().str(), "Z/6");
    EXPECT_EQ(Cohomology(trivial(FiniteGroup::cyclic(2), 2), 2).group().str(), "Z/2");
    EXPECT_EQ(Cohomology(trivial(FiniteGroup::cyclic(2), 2), 3).group().str(), "Z/2");
    EXPECT_EQ(Cohomology(trivial(FiniteGroup::cyclic(3), 3), 2).group().str(), "Z/3");
    EXPECT_EQ(Cohomology(trivial(FiniteGroup::cyclic(2), 3), 2).group().str(), "0");
    // A[m] in odd degrees, A/mA in even degrees
    ModuleRef z4 = make_module(PiModule::trivial(FiniteGroup::cyclic(4), FinAbGroup({2, 4})));
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(Cohomology(z4, n).group().str(), "Z/2 ⊕ Z/4");
    ModuleRef z6 = trivial(FiniteGroup::cyclic(6), 4);
    EXPECT_EQ(Cohomology(z6, 1).group().str(), "Z/2");
    EXPECT_EQ(Cohomology(z6, 2).group().str(), "Z/2");
    ModuleRef k4 = trivial(FiniteGroup::klein(), 2);
    EXPECT_EQ(Cohomology(k4, 1).group().str(), "Z/2 ⊕ Z/2");
    EXPECT_EQ(Cohomology(k4, 2).group().str(), "Z/2 ⊕ Z/2 ⊕ Z/2");
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    EXPECT_EQ(Cohomology(trivial(s3, 2), 1).group().str(), "Z/2");
    EXPECT_EQ(Cohomology(trivial(s3, 2), 2).group().str(), "Z/2");
    EXPECT_EQ(Cohomology(trivial(s3, 3), 1).group().str(), "0");
    EXPECT_EQ(Cohomology(trivial(s3, 3), 2).group().str(), "0");
    EXPECT_EQ(Cohomology(inverted(s3, 3), 0).group().str(), "0");
    EXPECT_EQ(Cohomology(inverted(s3, 3), 1).group().str(), "Z/3");
}

TEST(Cohomology, GeneratorsClassifyToBasis) {
    std::vector<ModuleRef> ms = {trivial(FiniteGroup::klein(), 2), trivial(FiniteGroup::cyclic(4), 4),
                                 inverted(FiniteGroup::cyclic(2), 3), trivial(FiniteGroup::symmetric(3), 2)};
    for (const ModuleRef& m : ms)
        for (int n = 0; n <= 3; ++n) {
            Cohomology h(m, n);
            for (int i = 0; i < h.group().rank(); ++i) {
                const Cochain& z = h.generators()[i];
                EXPECT_TRUE(brute::is_cocycle(z));
                EXPECT_EQ(h.classify(z), h.group().basis(i));
                EXPECT_EQ(h.classify(h.representative(h.group().basis(i))), h.group().basis(i));
            }
        }
}

TEST(Cohomology, WitnessSolvesCoboundaryEquation) {
    std::mt19937 rng(11);
    ModuleRef m = trivial(FiniteGroup::symmetric(3), 2);
    for (int n = 1; n <= 3; ++n) {
        Cohomology h(m, n);
        for (int i = 0; i < 10; ++i) {
            Cochain z = differential(brute::random_cochain(m, n - 1, rng));
            auto w = h.witness(z);
            ASSERT_TRUE(w.has_value());
            EXPECT_EQ(differential(*w), z);
            EXPECT_TRUE(h.classify(z) == h.group().zero());
        }
        for (const Cochain& g : h.generators()) EXPECT_FALSE(h.witness(g).has_value());
    }
}

TEST(Cohomology, CoboundaryDecisionAgreesWithSearch) {
    ModuleRef m = trivial(FiniteGroup::cyclic(3), 3);
    Cohomology h(m, 2);
    for (const Cochain& c : brute::all_cochains(m, 2)) {
        if (!brute::is_cocycle(c)) continue;
        EXPECT_EQ(h.witness(c).has_value(), brute::is_coboundary(c));
    }
}

TEST(Cohomology, ClassifyRejectsNonCocycles) {
    ModuleRef m = trivial(FiniteGroup::cyclic(3), 3);
    Cochain c(m, 2);
    c.set({1, 2}, {1});
    Cohomology h(m, 2);
    EXPECT_FALSE(h.is_cocycle(c));
    EXPECT_EQ(kind_of([&] { h.classify(c); }), ErrorKind::NotACocycle);
}

TEST(Cohomology, RefusesOversizedComplexes) {
    EXPECT_EQ(kind_of([] { Cohomology(trivial(FiniteGroup::symmetric(3), 2), 4, 1000); }), ErrorKind::TooLarge);
}

TEST(Shapiro, RestrictInflateIsIdentity) {
    CosetSection s = s3_section();
    for (long long c : {2, 3}) {
        ModuleRef inner = trivial(s.subgroup_group(), c);
        CoinducedModule cm = CoinducedModule::build(s, inner);
        for (int n = 0; n <= 3; ++n)
            for (const Cochain& b : brute::all_cochains(inner, n)) EXPECT_EQ(shapiro_restrict(shapiro_inflate(b, cm), cm), b);
    }
}

TEST(Shapiro, InflatedCocyclesAreCocycles) {
    CosetSection s = s3_section();
    ModuleRef inner = trivial(s.subgroup_group(), 2);
    CoinducedModule cm = CoinducedModule::build(s, inner);
    for (int n = 0; n <= 3; ++n)
        for (const Cochain& b : brute::all_cochains(inner, n)) {
            if (!differential(b).is_zero()) continue;
            Cochain k = shapiro_inflate(b, cm);
            EXPECT_TRUE(differential(k).is_zero()) << "degree " << n;
            EXPECT_EQ(shapiro_restrict(k, cm), b);
        }
}

TEST(Shapiro, TrivialSubgroupIndexIsIdentity) {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    CosetSection s(z3, {0, 1, 2});
    CoinducedModule cm = CoinducedModule::build(s, trivial(s.subgroup_group(), 3));
    EXPECT_EQ(cm.cosets(), 1);
    std::mt19937 rng(5);
    Cochain b = brute::random_cochain(cm.inner, 2, rng);
    EXPECT_EQ(shapiro_inflate(b, cm).raw(), b.raw());
}

TEST(BarHomotopy, ContractsToProjector) {
    CosetSection s = s3_section();
    CoinducedModule cm = CoinducedModule::build(s, trivial(s.subgroup_group(), 2));
    auto identity = [&](const Cochain& k) {
        Cochain dk = differential(k);
        Cochain lhs = bar_h(dk, cm);
        if (k.degree() > 0) lhs = lhs + differential(bar_h(k, cm));
        return lhs == k - bar_p(k, cm);
    };
    for (int n = 0; n <= 2; ++n)
        for (const Cochain& k : brute::basis_cochains(cm.module, n)) EXPECT_TRUE(identity(k)) << "degree " << n;
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(identity(brute::random_cochain(cm.module, 3, rng)));
}

TEST(BarHomotopy, ProjectorIsIdempotentWithReducedImage) {
    CosetSection s = s3_section();
    CoinducedModule cm = CoinducedModule::build(s, trivial(s.subgroup_group(), 2));
    std::mt19937 rng(9);
    for (int n = 0; n <= 3; ++n)
        for (int i = 0; i < 20; ++i) {
            Cochain k = brute::random_cochain(cm.module, n, rng);
            Cochain p = bar_p(k, cm);
            EXPECT_EQ(bar_p(p, cm), p);
            if (n == 0) continue;
            // (PK)(x)(r) = (PK)(r x1, x2, ...)(*) and (PK)(bar x1, x2, ...)(*) = 0
            for (std::size_t t = 0; t < p.tuples(); ++t) {
                Args x = p.args(t);
                for (int f = 0; f < cm.cosets(); ++f) {
                    Args y = x;
                    y[0] = s.group().mul(s.transversal()[f], x[0]);
                    EXPECT_EQ(cm.eval(p.at(x), f), cm.eval(p.at(y), 0));
                }
                Args b = x;
                b[0] = s.bar(x[0]);
                EXPECT_TRUE(cm.inner->coeff.is_zero(cm.eval(p.at(b), 0)));
            }
        }
    EXPECT_TRUE(bar_p(Cochain(cm.module, 2), cm).is_zero());
    EXPECT_TRUE(bar_h(Cochain(cm.module, 2), cm).is_zero());
    BarHomotopy b0 = bar_homotopy(Cochain(cm.module, 0), cm);
    EXPECT_FALSE(b0.h.has_value());
}

TEST(BarHomotopy, IdentityOverZ3) {
    CosetSection s = s3_section();
    CoinducedModule cm = CoinducedModule::build(s, trivial(s.subgroup_group(), 3));
    std::mt19937 rng(1);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < 20; ++i) {
            Cochain k = brute::random_cochain(cm.module, n, rng);
            EXPECT_EQ(differential(bar_h(k, cm)) + bar_h(differential(k), cm), k - bar_p(k, cm));
        }
}

class Filtered : public ::testing::TestWithParam<long long> {};

TEST_P(Filtered, HomotopyAndProjectorIdentities) {
    CosetSection s = s3_section();
    FilteredComplex fc(s, trivial(s.subgroup_group(), GetParam()));
    for (int p = 0; p <= 2; ++p)
        for (int n = 0; n <= 3; ++n)
            for (const Args& x : fc.domain(p, n)) {
                FilteredCochain k = fc.zero(p, n);
                fc.set(k, x, {1});
                ASSERT_TRUE(fc.in_filtration(k));
                FilteredCochain hd = fc.h(fc.d(k));
                FilteredCochain lhs = n > 0 ? fc.add(fc.d(fc.h(k)), hd) : hd;
                FilteredCochain P = fc.proj(k);
                EXPECT_EQ(lhs, fc.sub(k, P)) << "p=" << p << " n=" << n;
                EXPECT_EQ(fc.proj(P), P);
                EXPECT_EQ(fc.inflate(fc.restrict(P)), P) << "p=" << p << " n=" << n;
                EXPECT_TRUE(fc.in_filtration(fc.d(k)));
            }
}

TEST_P(Filtered, RestrictedProjectorInvertsInflation) {
    CosetSection s = s3_section();
    FilteredComplex fc(s, trivial(s.subgroup_group(), GetParam()));
    for (int p = 0; p <= 1; ++p)
        for (int n = 0; n <= 3; ++n)
            for (const Args& x : fc.domain(p + 1, n)) {
                FilteredCochain k = fc.zero(p + 1, n);
                fc.set(k, x, {1});
                EXPECT_EQ(fc.restrict(fc.proj(fc.inflate(k))), k) << "p=" << p << " n=" << n;
            }
}

INSTANTIATE_TEST_SUITE_P(Coefficients, Filtered, ::testing::Values(2, 3));

TEST(FilteredDomain, HighFiltrationIsSubgroupComplex) {
    CosetSection s = s3_section();
    FilteredComplex fc(s, trivial(s.subgroup_group(), 2));
    for (int n = 0; n <= 3; ++n)
        for (const Args& x : fc.domain(n, n))
            for (int a : x) EXPECT_TRUE(s.in_h(a));
    FilteredCochain z = fc.zero(1, 2);
    EXPECT_TRUE(fc.is_zero(fc.d(z)));
    EXPECT_TRUE(fc.is_zero(fc.h(z)));
    EXPECT_TRUE(fc.is_zero(fc.proj(z)));
}

TEST(NonabelianH1, MatchesEnumeration) {
    FiniteGroup z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric(3);
    std::vector<GroupAction> cases = {GroupAction::trivial(FiniteGroup::trivial(), s3), GroupAction::trivial(z2, z2),
                                      GroupAction::trivial(z2, z3), GroupAction::trivial(z3, s3)};
    GroupAction inv{z2, z3, {{0, 1, 2}, {0, 2, 1}}};
    cases.push_back(inv);
    int tau = 0;
    for (int x = 1; x < 6; ++x)
        if (s3.elem_order(x) == 2) {
            tau = x;
            break;
        }
    GroupAction conj{z2, s3, {std::vector<int>(6), std::vector<int>(6)}};
    for (int y = 0; y < 6; ++y) {
        conj.maps[0][y] = y;
        conj.maps[1][y] = s3.conj(tau, y);
    }
    cases.push_back(conj);
    for (const GroupAction& a : cases) {
        ASSERT_TRUE(a.valid());
        NonabelianH1 h = h1_nonabelian(a);
        EXPECT_EQ(h.classes(), brute::h1_classes(a.acting, a.target, a.maps));
        for (const auto& c : h.cocycles) EXPECT_TRUE(is_crossed_hom(a, c));
        for (const auto& r : h.reps) EXPECT_EQ(h.class_index(r), &r - h.reps.data());
    }
    EXPECT_EQ(h1_nonabelian(GroupAction::trivial(z2, z2)).classes(), 2);
    EXPECT_EQ(h1_nonabelian(GroupAction::trivial(z2, z3)).classes(), 1);
    EXPECT_EQ(h1_nonabelian(GroupAction::trivial(FiniteGroup::trivial(), s3)).classes(), 1);
    EXPECT_EQ(h0_nonabelian(conj).size(), 2u);
}

TEST(NonabelianH1, RefusesOversizedSearch) {
    GroupAction a = GroupAction::trivial(FiniteGroup::cyclic(6), FiniteGroup::symmetric(3));
    EXPECT_EQ(kind_of([&] { h1_nonabelian(a, 5); }), ErrorKind::TooLarge);
}

TEST(Coop, InvolutionAndChainMap) {
    for (const auto& [name, m] : small_modules())
        for (int n = 0; n <= 3; ++n)
            for (const Cochain& c : brute::basis_cochains(m, n)) {
                EXPECT_EQ(coop(coop(c)), c) << name;
                EXPECT_EQ(coop(differential(c)), differential(coop(c))) << name << " degree " << n;
            }
    EXPECT_TRUE(coop(Cochain(trivial(FiniteGroup::cyclic(2), 2), 2)).is_zero());
}

TEST(Coop, HomotopyToIdentity) {
    for (const auto& [name, m] : small_modules())
        for (int n = 0; n <= 2; ++n)
            for (const Cochain& c : brute::all_cochains(m, n)) {
                Cochain lhs = coop_homotopy(differential(c));
                if (n > 0) lhs = lhs + differential(coop_homotopy(c));
                EXPECT_EQ(lhs, c - coop(c)) << name << " degree " << n;
            }
    ModuleRef s3 = inverted(FiniteGroup::symmetric(3), 3);
    for (const Cochain& c : brute::basis_cochains(s3, 2))
        EXPECT_EQ(coop_homotopy(differential(c)) + differential(coop_homotopy(c)), c - coop(c));
}

TEST(Coop, OppositePostnikovAndCoopAgree) {
    ModuleRef m = trivial(FiniteGroup::cyclic(2), 2);
    int cocycles = 0;
    for (const Cochain& k : brute::all_cochains(m, 3)) {
        if (!differential(k).is_zero()) continue;
        ++cocycles;
        Cochain kop = opposite_postnikov(k);
        EXPECT_TRUE(differential(kop).is_zero());
        EXPECT_EQ(pull_back_op1(kop, m), -coop(k));
    }
    EXPECT_EQ(cocycles, 2);
    ModuleRef inv = inverted(FiniteGroup::symmetric(3), 3);
    Cohomology h(inv, 3);
    for (const Cochain& k : h.generators()) EXPECT_EQ(pull_back_op1(opposite_postnikov(k), inv), -coop(k));
}

TEST(Coop, OppositePostnikovRejectsNonCocycle) {
    ModuleRef m = trivial(FiniteGroup::cyclic(3), 3);
    Cochain k(m, 3);
    k.set({1, 1, 2}, {1});
    EXPECT_EQ(kind_of([&] { opposite_postnikov(k); }), ErrorKind::NotACocycle);
}
