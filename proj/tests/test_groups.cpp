#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "support.hpp"
#include "twotype/error.hpp"

using namespace tt;

namespace {

std::vector<FiniteGroup> small_groups() {
    return {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
            FiniteGroup::klein(), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
            FiniteGroup::quaternion()};
}

} // namespace

TEST(FromTable, OrderTwoTable) {
    FiniteGroup g = FiniteGroup::from_table({{0, 1}, {1, 0}});
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.mul(1, 1), 0);
    EXPECT_EQ(g.inv(1), 1);
    EXPECT_EQ(g, FiniteGroup::cyclic(2));
}

TEST(FromTable, PermutationCompositionGivesS3) {
    FiniteGroup g = FiniteGroup::from_table(brute::permutation_table(3), "S3");
    EXPECT_EQ(g.order(), 6);
    EXPECT_FALSE(g.is_abelian());
    std::vector<int> orders;
    for (int x = 0; x < 6; ++x) orders.push_back(g.elem_order(x));
    std::sort(orders.begin(), orders.end());
    EXPECT_EQ(orders, (std::vector<int>{1, 2, 2, 2, 3, 3}));
}

TEST(FromTable, RejectsElementWithoutInverse) {
    EXPECT_EQ(kind_of([] { FiniteGroup::from_table({{0, 1}, {1, 1}}); }), ErrorKind::NoInverse);
}

TEST(FromTable, RejectsNonAssociativeTable) {
    // the Latin square of Z/3 with two products swapped
    auto k = kind_of([] { FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}); });
    EXPECT_TRUE(k == ErrorKind::NotAssociative || k == ErrorKind::NoInverse);
    EXPECT_EQ(kind_of([] { FiniteGroup::from_table({{1, 0}, {0, 0}}); }), ErrorKind::NoIdentity);
}

TEST(FromTable, IdentityMovedToIndexZero) {
    FiniteGroup g = FiniteGroup::from_table({{1, 0}, {0, 1}});
    EXPECT_EQ(g.relabel(), (std::vector<int>{1, 0}));
    for (int a = 0; a < 2; ++a) EXPECT_EQ(g.mul(0, a), a);
}

TEST(FromTable, GroupAxiomsHoldForBuiltins) {
    for (const FiniteGroup& g : small_groups()) {
        const int n = g.order();
        for (int a = 0; a < n; ++a) {
            EXPECT_EQ(g.mul(0, a), a);
            EXPECT_EQ(g.mul(a, 0), a);
            EXPECT_EQ(g.mul(a, g.inv(a)), 0);
            EXPECT_EQ(g.mul(g.inv(a), a), 0);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }
}

TEST(Centre, MatchesCommutingCheck) {
    for (const FiniteGroup& g : small_groups()) EXPECT_EQ(centre(g), brute::centre(g)) << g.label();
    EXPECT_EQ(centre(FiniteGroup::symmetric(3)), (Subset{0}));
    EXPECT_EQ(centre(FiniteGroup::dihedral(4)).size(), 2u);
    EXPECT_EQ(centre(FiniteGroup::klein()).size(), 4u);
}

TEST(Automorphisms, CountsMatchBijectionSearch) {
    for (const FiniteGroup& g : small_groups()) {
        AutData a = automorphisms(g);
        auto b = brute::automorphisms(g);
        EXPECT_EQ(a.aut.order(), static_cast<int>(b.size())) << g.label();
        std::sort(b.begin(), b.end());
        auto maps = a.maps;
        std::sort(maps.begin(), maps.end());
        EXPECT_EQ(maps, b) << g.label();
    }
}

TEST(Automorphisms, SmallCases) {
    EXPECT_EQ(automorphisms(FiniteGroup::cyclic(2)).aut.order(), 1);
    AutData z3 = automorphisms(FiniteGroup::cyclic(3));
    EXPECT_EQ(z3.aut.order(), 2);
    EXPECT_EQ(z3.out.order(), 2);
    AutData s3 = automorphisms(FiniteGroup::symmetric(3));
    EXPECT_EQ(s3.aut.order(), 6);
    EXPECT_FALSE(s3.aut.is_abelian());
    EXPECT_EQ(s3.inn.size(), 6u);
    EXPECT_EQ(s3.out.order(), 1);
}

TEST(Automorphisms, InnerOuterStructure) {
    for (const FiniteGroup& g : small_groups()) {
        AutData a = automorphisms(g);
        EXPECT_EQ(a.aut.order(), static_cast<int>(a.inn.size()) * a.out.order());
        EXPECT_TRUE(is_normal(a.aut, a.inn));
        EXPECT_EQ(a.maps[0], GroupHom::identity(g).image);
        for (int i = 0; i < a.aut.order(); ++i) EXPECT_TRUE((GroupHom{g, g, a.maps[i]}.is_hom()));
        // composition law of the table
        for (int x = 0; x < a.aut.order(); ++x)
            for (int y = 0; y < a.aut.order(); ++y)
                for (int e = 0; e < g.order(); ++e) ASSERT_EQ(a.apply(a.aut.mul(x, y), e), a.apply(x, a.apply(y, e)));
        for (int o = 0; o < a.out.order(); ++o) EXPECT_EQ(a.out_proj[a.out_section[o]], o);
        GroupHom conj{g, a.aut, a.inn_of};
        EXPECT_TRUE(conj.is_hom());
        EXPECT_EQ(conj.kernel(), brute::centre(g));
    }
}

TEST(Automorphisms, RejectsLargeGroups) {
    EXPECT_EQ(kind_of([] { automorphisms(FiniteGroup::cyclic(25)); }), ErrorKind::GroupTooLarge);
}

TEST(CosetSection, WholeGroupAndTrivialSubgroup) {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    Subset all(6);
    std::iota(all.begin(), all.end(), 0);
    CosetSection whole(s3, all);
    EXPECT_EQ(whole.cosets(), 1);
    for (int x = 0; x < 6; ++x) {
        EXPECT_EQ(whole.bar(x), 0);
        EXPECT_EQ(whole.prime(x), x);
    }
    CosetSection point(s3, {0});
    EXPECT_EQ(point.cosets(), 6);
    for (int x = 0; x < 6; ++x) {
        EXPECT_EQ(point.bar(x), x);
        EXPECT_EQ(point.prime(x), 0);
    }
}

TEST(CosetSection, OrderTwoSubgroupOfS3) {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    int t = -1;
    for (int x = 1; x < 6 && t < 0; ++x)
        if (s3.elem_order(x) == 2) t = x;
    CosetSection cs(s3, {0, t});
    EXPECT_EQ(cs.cosets(), 3);
    EXPECT_EQ(cs.bar(0), 0);
    EXPECT_EQ(cs.prime(0), 0);
    std::set<std::pair<int, int>> pairs;
    for (int x = 0; x < 6; ++x) {
        EXPECT_EQ(s3.mul(cs.prime(x), cs.bar(x)), x);
        EXPECT_TRUE(cs.in_h(cs.prime(x)));
        const auto& reps = cs.transversal();
        EXPECT_NE(std::find(reps.begin(), reps.end(), cs.bar(x)), reps.end());
        // the transversal picks the least element of each right coset
        for (int h : cs.subgroup()) EXPECT_LE(cs.bar(x), s3.mul(h, x));
        pairs.insert({cs.prime(x), cs.bar(x)});
    }
    EXPECT_EQ(pairs.size(), 6u);
}

TEST(CosetSection, RejectsNonSubgroup) {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    EXPECT_EQ(kind_of([&] { CosetSection(z4, {0, 1}); }), ErrorKind::NotASubgroup);
}

TEST(Homomorphisms, KernelAndImage) {
    FiniteGroup z4 = FiniteGroup::cyclic(4), z2 = FiniteGroup::cyclic(2);
    GroupHom f{z4, z2, {0, 1, 0, 1}};
    EXPECT_TRUE(f.is_hom());
    EXPECT_TRUE(f.surjective());
    EXPECT_FALSE(f.injective());
    EXPECT_EQ(f.kernel(), (std::vector<int>{0, 2}));
    EXPECT_FALSE((GroupHom{z4, z2, {0, 1, 1, 0}}.is_hom()));
}
