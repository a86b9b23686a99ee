#include <gtest/gtest.h>

#include "carpetcalc/carpet.hpp"
#include "support/oracles.hpp"

using namespace carpetcalc;

namespace {

// h^1 through the toric count and Riemann-Roch only.
std::int64_t toric_h1(std::int64_t n, std::int64_t x, std::int64_t y)
{
	return oracle::toric_cohomology(n, x, y).h1;
}

oracle::SlotSpec to_oracle(const CohInfo &c)
{
	oracle::SlotSpec s;
	for (int i = 0; i < 3; ++i)
		s.h[i] = {c.h[i].lo, c.h[i].hi};
	s.chi = c.chi;
	return s;
}

} // namespace

TEST(CarpetCount, Examples)
{
	EXPECT_EQ(carpet_count({2, 1}), 1);
	EXPECT_EQ(carpet_count({1, 1}), 1);
	EXPECT_EQ(carpet_count({9, 2}), 1);
}

TEST(CarpetSpec, RejectsInvalidScrolls)
{
	EXPECT_THROW(CarpetSpec(1, 2), InvalidInput);
	EXPECT_THROW(CarpetSpec(2, 0), InvalidInput);
}

TEST(Invariants, Examples)
{
	const CarpetInvariants i21 = invariants({2, 1});
	EXPECT_EQ(i21.genus, 4);
	EXPECT_EQ(i21.degree, 6);
	EXPECT_EQ(i21.ambient_dim, 4);
	EXPECT_EQ(invariants({3, 2}).genus, 6);
	EXPECT_EQ(invariants({3, 2}).degree, 10);
	const CarpetInvariants i11 = invariants({1, 1});
	EXPECT_EQ(i11.genus, 3);
	EXPECT_EQ(i11.degree, 4);
	EXPECT_EQ(i11.chi_structure_sheaf, 2);
	EXPECT_EQ(i11.h1_structure_sheaf, 0);
	EXPECT_TRUE(i11.dualizing_sheaf_trivial);
}

TEST(Invariants, DegreeIsTwiceTheScrollDegree)
{
	for (int a = 1; a <= 12; ++a)
		for (int b = 1; b <= a; ++b)
			EXPECT_EQ(invariants({a, b}).degree, 2 * (a + b));
}

TEST(HyperplaneSection, Examples)
{
	const RibbonInvariants r4 = hyperplane_section_invariants(4);
	EXPECT_EQ(r4.support_degree, 3);
	EXPECT_EQ(r4.support_ambient_dim, 3);
	EXPECT_EQ(r4.ribbon_degree, 6);
	EXPECT_EQ(r4.arithmetic_genus, 4);
	const RibbonInvariants r3 = hyperplane_section_invariants(3);
	EXPECT_EQ(r3.support_degree, 2);
	EXPECT_EQ(r3.ribbon_degree, 4);
	const RibbonInvariants r11 = hyperplane_section_invariants(11);
	EXPECT_EQ(r11.support_degree, 10);
	EXPECT_EQ(r11.ribbon_degree, 20);
	EXPECT_EQ(r11.arithmetic_genus, 11);
	EXPECT_EQ(hyperplane_section_invariants(CarpetSpec(2, 1)).arithmetic_genus, 4);
}

TEST(H1OmegaDual, Examples)
{
	EXPECT_EQ(h1_omega_dual({3, 1}), 0);
	EXPECT_EQ(h1_omega_dual({4, 1}), 0);
	EXPECT_EQ(h1_omega_dual({6, 1}), 2);
}

TEST(H1OmegaMinus2, Examples)
{
	EXPECT_EQ(h1_omega_minus2({3, 1}), 0);
	EXPECT_EQ(h1_omega_minus2({4, 1}), 1);
	EXPECT_EQ(h1_omega_minus2({7, 1}), 8);
}

TEST(H1Omega, ClosedFormsAndToricOracleUpToTen)
{
	std::int64_t previous = 0;
	for (int n = 0; n <= 10; ++n)
	{
		const CarpetSpec s(n + 1, 1);
		const std::int64_t d = h1_omega_dual(s);
		const std::int64_t m = h1_omega_minus2(s);
		EXPECT_EQ(d, std::max(0, n - 3)) << n;
		EXPECT_EQ(m, std::max(0, 2 * n - 5) + std::max(0, n - 5)) << n;
		EXPECT_EQ(d, toric_h1(n, 2, n + 2)) << n;
		EXPECT_EQ(m, toric_h1(n, 4, 2 * n + 4)) << n;
		EXPECT_GE(m, previous);
		previous = m;
	}
}

TEST(Smoothness, Examples)
{
	const SmoothnessReport r31 = smoothness({3, 1});
	EXPECT_EQ(r31.chi_normal, 54);
	EXPECT_EQ(r31.h1, DimRange::exact(0));
	EXPECT_EQ(r31.h0, DimRange::exact(54));
	EXPECT_TRUE(r31.smooth_point);

	const SmoothnessReport r41 = smoothness({4, 1});
	EXPECT_EQ(r41.chi_normal, 67);
	EXPECT_EQ(r41.h1, DimRange::exact(1));
	EXPECT_EQ(r41.h0, DimRange::exact(68));
	EXPECT_FALSE(r41.smooth_point);

	const SmoothnessReport r22 = smoothness({2, 2});
	EXPECT_EQ(r22.chi_normal, 54);
	EXPECT_EQ(r22.h1, DimRange::exact(0));
	EXPECT_TRUE(r22.smooth_point);
}

TEST(Smoothness, OverTheRange)
{
	for (int a = 1; a <= 12; ++a)
		for (int b = 1; b <= a; ++b)
		{
			const int g = a + b + 1, n = a - b;
			const SmoothnessReport r = smoothness({a, b});
			ASSERT_EQ(r.chi_normal, (g + 1) * (g + 1) + 18);
			ASSERT_EQ(r.expected_dim, r.chi_normal);
			ASSERT_EQ(r.smooth_point, n <= 2);
			ASSERT_EQ(r.smooth_point, r.h1 == DimRange::exact(0));
			ASSERT_EQ(r.h2, 0);
			ASSERT_EQ(r.chi_omega_minus2, 25);
			ASSERT_EQ(r.h1, DimRange::between(r.h1_omega_minus2, r.h1_omega_minus2 + r.h1_omega_dual));
			ASSERT_EQ(r.h0, DimRange::between(r.chi_normal + r.h1.lo, r.chi_normal + *r.h1.hi));
			if (n == 3)
				ASSERT_TRUE(r.h1.is_exact());
			if (n >= 4)
				ASSERT_EQ(*r.h1.hi - r.h1.lo, n - 3);
		}
}

TEST(Smoothness, LastSequenceAgreesWithBruteForce)
{
	for (auto [a, b] : {std::pair{3, 1}, {4, 1}, {6, 1}, {5, 5}})
	{
		const SmoothnessReport r = smoothness({a, b});
		const SesProblem &p = r.sequences.carpet_normal.tightened;
		const oracle::BruteResult brute =
		    oracle::brute_ses({to_oracle(p.left), to_oracle(p.middle), to_oracle(p.right)}, 400);
		ASSERT_TRUE(brute.feasible);
		EXPECT_EQ(brute.lo[4], r.h1.lo) << a << "," << b;
		EXPECT_EQ(brute.hi[4], *r.h1.hi) << a << "," << b;
	}
}

TEST(Smoothness, SequencesAreMutuallyConsistent)
{
	const SmoothnessReport r = smoothness({6, 2});
	const CarpetSequences &s = r.sequences;
	// M appears as the quotient of the first sequence and the sub of the third.
	EXPECT_TRUE(s.n_s_quotient.tightened.right.h[0].contains(s.restricted_normal.tightened.left.h[0]));
	EXPECT_EQ(s.carpet_normal.tightened.middle.chi, r.chi_normal);
}

TEST(ComponentMembership, Examples)
{
	const auto v21 = component_membership({2, 1});
	ASSERT_EQ(v21.size(), 1u);
	EXPECT_EQ(v21[0].kind, ComponentKind::Prime);
	EXPECT_TRUE(v21[0].picard_rank_one);

	const auto v84 = component_membership({8, 4});
	ASSERT_EQ(v84.size(), 2u);
	EXPECT_EQ(v84[0].kind, ComponentKind::Prime);
	EXPECT_EQ(v84[1].kind, ComponentKind::DivisibleHyperplane);
	EXPECT_TRUE(v84[1].hyperplane_divisible_by_two);
	ASSERT_TRUE(v84[1].lattice_witness);
	EXPECT_EQ(v84[1].lattice_witness->model, ScrollModel::F4);
	EXPECT_EQ(v84[1].lattice_witness->genus, 13);
	EXPECT_EQ(v84[1].lattice_witness->n, 8);

	const auto v73 = component_membership({7, 3});
	ASSERT_EQ(v73.size(), 1u);
	EXPECT_EQ(v73[0].kind, ComponentKind::Prime);
}

TEST(ComponentMembership, PrimeWitnessForSmallN)
{
	const auto v = component_membership({3, 3}); // n = 0, g = 7
	ASSERT_TRUE(v[0].lattice_witness);
	EXPECT_EQ(v[0].lattice_witness->model, ScrollModel::F0);
	EXPECT_EQ(v[0].lattice_witness->genus, 7);
	EXPECT_TRUE(v[0].lattice_witness->primitive);

	const auto w = component_membership({3, 2}); // n = 1, g = 6
	ASSERT_TRUE(w[0].lattice_witness);
	EXPECT_EQ(w[0].lattice_witness->model, ScrollModel::F1);
	EXPECT_EQ(w[0].lattice_witness->genus, 6);
	EXPECT_TRUE(w[0].lattice_witness->primitive);
}

TEST(ComponentMembership, SecondComponentExactlyForF4AndGenusOneModFour)
{
	for (int a = 1; a <= 30; ++a)
		for (int b = 1; b <= a; ++b)
		{
			const int g = a + b + 1;
			const bool expected = a - b == 4 && g > 9 && g % 4 == 1;
			const auto v = component_membership({a, b});
			ASSERT_EQ(v.size(), expected ? 2u : 1u) << a << "," << b;
			ASSERT_EQ(v.front().kind, ComponentKind::Prime);
		}
}

TEST(ComponentKind, Names)
{
	EXPECT_EQ(to_string(ComponentKind::Prime), "prime");
	EXPECT_EQ(to_string(ComponentKind::DivisibleHyperplane), "divisible_hyperplane");
}
