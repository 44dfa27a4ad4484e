#include <benchmark/benchmark.h>

#include "twotype/crossed.hpp"
#include "twotype/extensions.hpp"
#include "twotype/sequence.hpp"
#include "twotype/serialize.hpp"

using namespace tt;

namespace {

ModuleRef trivial(const FiniteGroup& g, long long n) { return make_module(PiModule::trivial(g, FinAbGroup::cyclic(n))); }

FiniteGroup group_arg(int i) {
    switch (i) {
    case 0: return FiniteGroup::cyclic(4);
    case 1: return FiniteGroup::symmetric(3);
    case 2: return FiniteGroup::dihedral(4);
    default: return FiniteGroup::quaternion();
    }
}

TwoType z2_nontrivial() {
    ModuleRef m = trivial(FiniteGroup::cyclic(2), 2);
    return TwoType::make(m, Cohomology(m, 3).generators().at(0));
}

} // namespace

// H^n(G, Z/2) for G in {Z4, S3, D4, Q8}
static void BM_Cohomology(benchmark::State& st) {
    ModuleRef m = trivial(group_arg(static_cast<int>(st.range(0))), 2);
    const int n = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(Cohomology(m, n).group().order());
}
BENCHMARK(BM_Cohomology)->ArgsProduct({{0, 1, 2, 3}, {2, 3}})->Unit(benchmark::kMillisecond);

static void BM_CohomologyClassify(benchmark::State& st) {
    ModuleRef m = trivial(FiniteGroup::dihedral(4), 2);
    Cohomology h(m, 3);
    const auto& gens = h.generators();
    for (auto _ : st)
        for (const Cochain& g : gens) benchmark::DoNotOptimize(h.classify(g));
}
BENCHMARK(BM_CohomologyClassify)->Unit(benchmark::kMicrosecond);

static void BM_Coherence(benchmark::State& st) {
    ModuleRef m = trivial(group_arg(static_cast<int>(st.range(0))), 2);
    Cohomology h(m, 3);
    TwoGroup g(TwoType::make(m, h.generators().at(0)));
    for (auto _ : st) benchmark::DoNotOptimize(coherence_check(g).ok);
}
BENCHMARK(BM_Coherence)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_AutTwoGroup(benchmark::State& st) {
    FiniteGroup g = group_arg(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(aut_two_group(1, g).exact);
}
BENCHMARK(BM_AutTwoGroup)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ZeroCells(benchmark::State& st) {
    TwoType k = z2_nontrivial();
    FiniteGroup z8 = FiniteGroup::cyclic(8);
    AbelianPart z = abelian_part(z8, centre(z8));
    AbHom a2 = AbHom::from_images(k.pi2->coeff, z.group, {z.to_ab(4)});
    AutData aut = automorphisms(z8);
    std::vector<std::vector<int>> outers = all_homs(k.pi1, aut.out);
    for (auto _ : st)
        for (const auto& o : outers) benchmark::DoNotOptimize(classify_0cells(k, z8, o, a2).count());
}
BENCHMARK(BM_ZeroCells)->Unit(benchmark::kMillisecond);

static void BM_NonAssocAudit(benchmark::State& st) {
    TwoType k = z2_nontrivial();
    FiniteGroup z8 = FiniteGroup::cyclic(8);
    AbelianPart z = abelian_part(z8, centre(z8));
    ZeroCellClasses c = classify_0cells(k, z8, {0, 1}, AbHom::from_images(k.pi2->coeff, z.group, {z.to_ab(4)}));
    const PointedAction& p = c.classes.at(0);
    for (auto _ : st) {
        NonAssocExtension e = NonAssocExtension::build(p);
        benchmark::DoNotOptimize(audit_extension(e).ok);
    }
}
BENCHMARK(BM_NonAssocAudit)->Unit(benchmark::kMillisecond);

static void BM_ExactSequence(benchmark::State& st) {
    TwoType k = z2_nontrivial();
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    for (auto _ : st) {
        SequenceInstance s = homotopy_exact_sequence(k, z4, {0, 1});
        benchmark::DoNotOptimize(audit_sequence(s).ok);
    }
}
BENCHMARK(BM_ExactSequence)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& st) {
    Workspace w;
    TwoType k = z2_nontrivial();
    w.groups.emplace("Z2", k.pi1);
    w.modules.emplace("M", k.pi2);
    w.cochains.emplace("k", k.k3);
    w.types.emplace("t", k);
    json doc = w.to_json();
    for (auto _ : st) benchmark::DoNotOptimize(canonical_text(doc).size());
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
