#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "support/worked_example.hpp"

using namespace fockcb;

namespace {

Multipartition mp(const char* text) { return parse_multipartition(text); }
LaurentPoly v(int k) { return LaurentPoly::v_pow(k); }

std::multiset<int> residues(const Multipartition& lam, const Multicharge& s, Modulus e) {
    std::multiset<int> out;
    for (std::size_t c = 0; c < lam.level(); ++c)
        for (int a = 1; a <= static_cast<int>(lam[c].size()); ++a)
            for (int b = 1; b <= lam.row(c, a); ++b) out.insert(e.residue(b - a + s[c]));
    return out;
}

void expect_invariants(const CanonicalBasisSet& g, Modulus e) {
    const auto& s = g.charge();
    for (const auto& el : g.elements()) {
        const auto& lam = el.label;
        ASSERT_TRUE(el.vector.coeff(lam).is_one()) << to_string(lam);
        const auto weight = residues(lam, s, e);
        for (const auto& [mu, p] : el.vector.entries()) {
            EXPECT_EQ(residues(mu, s, e), weight) << to_string(lam) << " / " << to_string(mu);
            if (mu == lam) continue;
            EXPECT_TRUE(p.in_vZv()) << to_string(lam) << " / " << to_string(mu);
            EXPECT_TRUE(p.has_nonnegative_coefficients()) << to_string(lam) << " / " << to_string(mu);
            EXPECT_EQ(compare_dominance(lam, mu, s), Dominance::Greater) << to_string(lam) << " / " << to_string(mu);
        }
    }
}

} // namespace

TEST(Canonical, WorkedExampleFiniteE) {
    const auto g = canonical_basis(Modulus::finite(2), Multicharge{0, 0}, 3);
    FockVector want(Multicharge{0, 0});
    want.add(mp("-|3"), 1);
    want.add(mp("3|-"), v(1));
    want.add(mp("1|2"), v(1));
    want.add(mp("2|1"), v(2));
    want.add(mp("1|1.1"), v(1));
    want.add(mp("1.1|1"), v(2));
    want.add(mp("-|1.1.1"), v(2));
    want.add(mp("1.1.1|-"), v(3));
    EXPECT_EQ(g.vector(mp("-|3")), want);
    std::string why;
    EXPECT_TRUE(example::same_entries(decomposition_matrix(g), example::de(), &why)) << why;
}

TEST(Canonical, WorkedExampleInfiniteE) {
    const auto g = canonical_basis(Modulus::infinite(), Multicharge{0, 0}, 3);
    ASSERT_EQ(g.size(), 5u);
    std::string why;
    EXPECT_TRUE(example::same_entries(decomposition_matrix(g), example::dinf(), &why)) << why;
}

TEST(Canonical, RankZero) {
    const auto g = canonical_basis(Modulus::finite(3), Multicharge{0, 1}, 0);
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g.elements()[0].vector, FockVector::vacuum(Multicharge{0, 1}));
}

TEST(Canonical, PeelingSequence) {
    const Multicharge s{0, 0};
    const Modulus e = Modulus::finite(2);
    EXPECT_TRUE(peeling_sequence(Multipartition::empty(2), e, s).empty());
    const auto g = generate_component(e, Multicharge{0, 1, 1}, 5);
    for (int n = 0; n <= 5; ++n)
        for (const auto& lam : g.vertices(n)) {
            const auto seq = peeling_sequence(lam, e, Multicharge{0, 1, 1});
            int total = 0;
            Multipartition cur = Multipartition::empty(3);
            for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
                total += it->multiplicity;
                for (int k = 0; k < it->multiplicity; ++k) cur = *crystal_f(cur, e, it->residue, Multicharge{0, 1, 1});
            }
            EXPECT_EQ(total, n);
            EXPECT_EQ(cur, lam);
        }
}

TEST(Canonical, PeelingSequenceOutsideCrystal) {
    // (1,-) is not reached from the vacuum for e = 2, s = (0,0)
    EXPECT_THROW(peeling_sequence(mp("1|-"), Modulus::finite(2), Multicharge{0, 0}), NotInCrystal);
}

TEST(Canonical, BuildA) {
    const Multicharge s{0, 0};
    const Modulus e = Modulus::finite(2);
    EXPECT_EQ(build_A(Multipartition::empty(2), e, s), FockVector::vacuum(s));
    FockVector want(s);
    want.add(mp("1|-"), v(1));
    want.add(mp("-|1"), 1);
    EXPECT_EQ(build_A(mp("-|1"), e, s), want);
    EXPECT_TRUE(build_A(mp("-|3"), e, s).coeff(mp("-|3")).is_one());
}

TEST(Canonical, BuildARejectsNonUnitriangularMonomial) {
    const Multicharge s{0, 1};
    const Modulus e = Modulus::finite(2);
    const auto lam = mp("1|3.1");
    const auto a = apply_sequence(peeling_sequence(lam, e, s), e, s);
    EXPECT_FALSE(a.coeff(lam).is_one());
    EXPECT_THROW(build_A(lam, e, s), PeelingUnitriangularityViolated);
    // the basis is still computed, from a different seed
    const auto g = canonical_basis(e, s, 5);
    EXPECT_NE(g.at(lam).seed, SeedKind::Monomial);
    EXPECT_TRUE(g.vector(lam).coeff(lam).is_one());
}

TEST(Canonical, InvariantsOnSweep) {
    for (const Multicharge& s : {Multicharge{0}, Multicharge{0, 0}, Multicharge{0, 1}, Multicharge{1, 3},
                                 Multicharge{0, 0, 1}})
        for (Modulus e : {Modulus::finite(2), Modulus::finite(3), Modulus::finite(4), Modulus::infinite()}) {
            CanonicalBasisComputer comp(e, s, 5);
            for (int n = 0; n <= 5; ++n) expect_invariants(comp.rank(n), e);
        }
}

TEST(Canonical, AgreesWithBruteForceSolver) {
    for (const Multicharge& s : {Multicharge{0}, Multicharge{0, 0}, Multicharge{0, 1}, Multicharge{1, 3}})
        for (Modulus e : {Modulus::finite(2), Modulus::finite(3), Modulus::finite(4), Modulus::infinite()})
            for (int n = 0; n <= 3; ++n) {
                const auto g = canonical_basis(e, s, n);
                const auto brute = oracle::brute_force_canonical(e, s, n);
                ASSERT_TRUE(brute.unique) << "e=" << e.str() << " s=" << to_string(s) << " n=" << n;
                ASSERT_EQ(brute.basis.size(), g.size());
                for (const auto& el : g.elements())
                    EXPECT_EQ(brute.basis.at(el.label), el.vector) << to_string(el.label);
            }
}

TEST(Canonical, LevelOneInfiniteIsTrivial) {
    const auto g = canonical_basis(Modulus::infinite(), Multicharge{0}, 6);
    EXPECT_EQ(g.size(), enumerate_partitions(6).size());
    for (const auto& el : g.elements()) EXPECT_EQ(el.vector, FockVector::basis(el.label, Multicharge{0}));
}

TEST(Canonical, ThreadCountDoesNotChangeResult) {
    const auto a = canonical_basis(Modulus::finite(2), Multicharge{0, 0, 1}, 5, 1);
    const auto b = canonical_basis(Modulus::finite(2), Multicharge{0, 0, 1}, 5, 4);
    ASSERT_EQ(a.labels(), b.labels());
    for (const auto& el : a.elements()) EXPECT_EQ(b.vector(el.label), el.vector);
}

TEST(Canonical, ReduceCharge) {
    auto r = reduce_charge(Multicharge{0, 0}, Modulus::finite(2));
    EXPECT_EQ(r.s, (Multicharge{0, 0}));
    EXPECT_TRUE(r.dominant);
    r = reduce_charge(Multicharge{2, 0}, Modulus::finite(2));
    EXPECT_EQ(r.s, (Multicharge{0, 0}));
    EXPECT_FALSE(r.dominant);
    r = reduce_charge(Multicharge{0, 0, -1}, Modulus::finite(2));
    EXPECT_EQ(r.s, (Multicharge{0, 0, 1}));
    r = reduce_charge(Multicharge{3, -1}, Modulus::infinite());
    EXPECT_EQ(r.s, (Multicharge{-1, 3}));
}

TEST(Canonical, AnyCharge) {
    const Modulus e = Modulus::finite(2);
    const auto same = canonical_basis_any_charge(e, Multicharge{0, 1}, 3);
    EXPECT_TRUE(same.transported().empty());
    EXPECT_EQ(decomposition_matrix(same), decomposition_matrix(canonical_basis(e, Multicharge{0, 1}, 3)));

    const auto g = canonical_basis_any_charge(e, Multicharge{2, 0}, 1);
    EXPECT_EQ(g.dominant_charge(), (Multicharge{0, 0}));
    expect_invariants(g, e);
    for (const Multicharge& v : {Multicharge{2, 0}, Multicharge{1, 0}, Multicharge{3, -2}, Multicharge{0, 2, -1}}) {
        const auto r = reduce_charge(v, e);
        for (int n = 0; n <= 4; ++n) {
            const auto basis = canonical_basis_any_charge(e, v, n);
            EXPECT_EQ(basis.size(), generate_component(e, r.s, n).vertices(n).size());
            expect_invariants(basis, e);
            EXPECT_EQ(basis.transported().size(), basis.size());
            for (const auto& t : basis.transported())
                for (const auto& [mu, c] : t.coordinates) EXPECT_TRUE(c.is_bar_invariant());
        }
    }
}
