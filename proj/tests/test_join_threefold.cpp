#include <gtest/gtest.h>

#include <random>

#include "carpetcalc/join_threefold.hpp"
#include "support/oracles.hpp"

using namespace carpetcalc;

namespace {

oracle::Divisor as_divisor(const ChowClass &c)
{
	return {c[ChowClass::Alpha], c[ChowClass::Beta], c[ChowClass::H]};
}

ChowClass divisor(const ChowRing &r, const Rational &a, const Rational &b, const Rational &h)
{
	return a * r.alpha() + b * r.beta() + h * r.h();
}

ChowClass random_class(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> c(-5, 5);
	ChowClass out;
	for (int i = 0; i < ChowClass::kSize; ++i)
		out[static_cast<ChowClass::Basis>(i)] = Rational(c(rng), std::uniform_int_distribution<int>(1, 3)(rng));
	return out;
}

/// Keeps only the parts of codimension <= `max`.
ChowClass truncate(ChowClass c, int max)
{
	for (int i = 0; i < ChowClass::kSize; ++i)
		if (ChowClass::codim(static_cast<ChowClass::Basis>(i)) > max)
			c[static_cast<ChowClass::Basis>(i)] = 0;
	return c;
}

} // namespace

TEST(BundleParams, RejectsNonPositive)
{
	EXPECT_THROW(BundleParams(0, 1), InvalidInput);
	EXPECT_THROW(BundleParams(1, 0), InvalidInput);
	EXPECT_THROW(BundleParams(-3, 2), InvalidInput);
	EXPECT_NO_THROW(BundleParams(1, 1));
}

TEST(ChowClass, CodimensionAndZero)
{
	EXPECT_TRUE(ChowClass().is_zero());
	EXPECT_EQ(ChowClass().top_codim(), -1);
	EXPECT_EQ(ChowClass::basis(ChowClass::One).top_codim(), 0);
	EXPECT_EQ(ChowClass::basis(ChowClass::HBeta).top_codim(), 2);
	EXPECT_EQ(ChowClass::basis(ChowClass::Point).top_codim(), 3);
	const ChowClass a = ChowClass::basis(ChowClass::Alpha, 3);
	EXPECT_EQ((a - a), ChowClass());
	EXPECT_EQ(Rational(2) * a, a + a);
	EXPECT_EQ(-a, Rational(-1) * a);
}

TEST(ChowRing, Examples)
{
	for (int n0 = 1; n0 <= 4; ++n0)
		for (int np = 1; np <= 4; ++np)
		{
			const ChowRing r(BundleParams(n0, np));
			EXPECT_EQ(r.integrate(r.power(r.h(), 3)), n0 * np);
			EXPECT_EQ(r.integrate(r.multiply(r.power(r.h(), 2), r.alpha())), np);
			EXPECT_EQ(r.integrate(r.multiply(r.multiply(r.alpha(), r.beta()), r.h())), 1);
			EXPECT_TRUE(r.multiply(r.alpha(), r.alpha()).is_zero());
			EXPECT_TRUE(r.multiply(r.beta(), r.beta()).is_zero());
		}
}

TEST(ChowRing, GrothendieckRelation)
{
	const ChowRing r(BundleParams(3, 5));
	const ChowClass h2 = r.power(r.h(), 2);
	const ChowClass expected =
	    Rational(3) * r.multiply(r.alpha(), r.h()) + Rational(5) * r.multiply(r.beta(), r.h()) -
	    Rational(15) * r.multiply(r.alpha(), r.beta());
	EXPECT_EQ(h2, expected);
	EXPECT_EQ(r.monomial(0, 0, 2), expected);
	EXPECT_EQ(r.monomial(1, 1, 1), ChowClass::basis(ChowClass::Point));
	EXPECT_TRUE(r.monomial(2, 0, 1).is_zero());
}

TEST(ChowRing, RejectsCodimensionOverflow)
{
	const ChowRing r(BundleParams(1, 1));
	EXPECT_THROW(r.multiply(r.power(r.h(), 2), r.power(r.h(), 2)), InvalidInput);
	EXPECT_THROW(r.power(r.h(), 4), InvalidInput);
}

TEST(CanonicalGamma, Examples)
{
	const ChowRing r11(BundleParams(1, 1));
	EXPECT_EQ(canonical_gamma(r11), Rational(-2) * r11.h() - r11.alpha() - r11.beta());
	const ChowRing r22(BundleParams(2, 2));
	EXPECT_EQ(canonical_gamma(r22), Rational(-2) * r22.h());
}

TEST(SectionDivisors, IntersectionsWithCurves)
{
	for (int n0 = 1; n0 <= 6; ++n0)
		for (int np = 1; np <= 6; ++np)
		{
			const ChowRing r(BundleParams(n0, np));
			const SectionDivisors e = section_divisors(r);
			const ContractedCurves c = contracted_curves(r);
			EXPECT_EQ(r.pair(e.e1, c.fibre), 1);
			EXPECT_EQ(r.pair(e.e1, c.kappa1), -np);
			EXPECT_EQ(r.pair(e.e1, c.kappa2), 0);
			EXPECT_EQ(r.pair(e.e2, c.kappa2), -n0);
			EXPECT_EQ(r.pair(e.e2, c.kappa1), 0);
			EXPECT_EQ(r.pair(e.e2, c.fibre), 1);
		}
}

TEST(SectionDivisors, SelfIntersectionsPinned)
{
	for (int n0 = 1; n0 <= 8; ++n0)
		for (int np = 1; np <= 8; ++np)
		{
			const ChowRing r(BundleParams(n0, np));
			const SectionDivisors e = section_divisors(r);
			EXPECT_EQ(r.integrate(r.power(e.e1, 3)), -2 * n0 * np);
			EXPECT_EQ(r.integrate(r.power(e.e2, 3)), -2 * n0 * np);
			EXPECT_TRUE(r.multiply(e.e1, e.e2).is_zero());
		}
}

TEST(ContractedCurves, Examples)
{
	for (int n0 = 1; n0 <= 6; ++n0)
		for (int np = 1; np <= 6; ++np)
		{
			const ChowRing r(BundleParams(n0, np));
			const ContractedCurves c = contracted_curves(r);
			const ChowClass anti = -canonical_gamma(r);
			EXPECT_EQ(r.pair(r.h(), c.kappa1), 0);
			EXPECT_EQ(r.pair(r.h(), c.kappa2), 0);
			EXPECT_EQ(r.pair(r.h(), c.fibre), 1);
			EXPECT_EQ(r.pair(anti, c.kappa1), 2 - np);
			EXPECT_EQ(r.pair(anti, c.kappa2), 2 - n0);
			EXPECT_EQ(r.pair(anti, c.fibre), 2);
			EXPECT_EQ(r.pair(r.alpha(), c.kappa1), 0);
		}
}

TEST(FanoReport, Examples)
{
	const FanoReport f11 = fano_report(ChowRing(BundleParams(1, 1)));
	EXPECT_TRUE(f11.gamma_fano);
	EXPECT_EQ(f11.sigma_anticanonical_multiple, 4);
	EXPECT_EQ(f11.anti_cubed, 44);

	const FanoReport f22 = fano_report(ChowRing(BundleParams(2, 2)));
	EXPECT_FALSE(f22.gamma_fano);
	EXPECT_TRUE(f22.gamma_weak_fano);
	EXPECT_EQ(f22.sigma_anticanonical_multiple, 2);
	EXPECT_TRUE(f22.sigma_fano);

	const FanoReport f21 = fano_report(ChowRing(BundleParams(2, 1)));
	EXPECT_TRUE(f21.sigma_fano);
	EXPECT_EQ(f21.sigma_anticanonical_multiple, 3);

	const FanoReport f53 = fano_report(ChowRing(BundleParams(5, 3)));
	EXPECT_FALSE(f53.gamma_fano);
	EXPECT_FALSE(f53.gamma_weak_fano);
	EXPECT_EQ(f53.sigma_anticanonical_multiple, Rational(16, 15));
}

TEST(FanoReport, AnticanonicalPullbackIsLambdaH)
{
	for (int n0 = 1; n0 <= 8; ++n0)
		for (int np = 1; np <= 8; ++np)
		{
			const ChowRing r(BundleParams(n0, np));
			const FanoReport f = fano_report(r);
			const Rational lambda = Rational(2, n0) + Rational(2, np);
			EXPECT_EQ(f.sigma_anticanonical_multiple, lambda);
			EXPECT_TRUE((-pullback_canonical_sigma(r) - lambda * r.h()).is_zero());
			EXPECT_TRUE(f.sigma_fano);
			EXPECT_EQ(f.gamma_fano, n0 == 1 && np == 1);
			EXPECT_EQ(f.gamma_weak_fano, n0 <= 2 && np <= 2);
		}
}

TEST(AnticanonicalCarpet, Examples)
{
	for (auto [n0, np] : {std::pair{1, 1}, {2, 1}, {5, 3}})
		EXPECT_TRUE(verify_anticanonical_carpet(ChowRing(BundleParams(n0, np))));
	const ChowRing r(BundleParams(3, 4));
	EXPECT_TRUE((pullback_canonical_sigma(r) + pullback_carpet(r)).is_zero());
}

TEST(DegreeSigma, Examples)
{
	EXPECT_EQ(degree_sigma(ChowRing(BundleParams(1, 1))), 1);
	EXPECT_EQ(degree_sigma(ChowRing(BundleParams(2, 1))), 2);
	EXPECT_EQ(degree_sigma(ChowRing(BundleParams(3, 2))), 6);
}

TEST(PublishedClaims, ConsistentUnderRelabelingEverywhere)
{
	for (int n0 = 1; n0 <= 8; ++n0)
		for (int np = 1; np <= 8; ++np)
		{
			const PublishedClaimsReport rep = published_claims_check(ChowRing(BundleParams(n0, np)));
			EXPECT_TRUE(rep.all_entries_match());
			EXPECT_TRUE(rep.consistent_under_relabeling());
			std::vector<std::string> ids;
			for (const auto &d : rep.discrepancies)
				ids.push_back(d.id);
			std::vector<std::string> expected{"e1_minus_e2_display"};
			if (n0 <= 2 && np <= 2 && !(n0 == 1 && np == 1))
				expected.push_back("fano_boundary_claim");
			EXPECT_EQ(ids, expected) << n0 << "," << np;
		}
}

TEST(PublishedClaims, HSquaredEntryNeedsTheRelabeling)
{
	const PublishedClaimsReport rep = published_claims_check(ChowRing(BundleParams(3, 2)));
	bool found = false;
	for (const auto &e : rep.entries)
		if (e.id == "product[H,H]")
		{
			found = true;
			EXPECT_FALSE(e.direct);
			EXPECT_TRUE(e.relabeled);
		}
		else if (e.id == "pairing[H,f]")
		{
			EXPECT_TRUE(e.direct);
		}
	EXPECT_TRUE(found);
}

TEST(ChowRingProperty, TripleProductsMatchSegreOracle)
{
	std::mt19937 rng(51);
	std::uniform_int_distribution<int> c(-6, 6), p(1, 6);
	for (int t = 0; t < 1500; ++t)
	{
		const int n0 = p(rng), np = p(rng);
		const ChowRing r(BundleParams(n0, np));
		const ChowClass x = divisor(r, c(rng), c(rng), c(rng));
		const ChowClass y = divisor(r, c(rng), c(rng), c(rng));
		const ChowClass z = divisor(r, Rational(c(rng), 2), c(rng), c(rng));
		ASSERT_EQ(r.integrate(r.multiply(r.multiply(x, y), z)),
		          oracle::triple(n0, np, as_divisor(x), as_divisor(y), as_divisor(z)));
	}
}

TEST(ChowRingProperty, AssociativeAndCommutative)
{
	std::mt19937 rng(52);
	std::uniform_int_distribution<int> p(1, 6);
	for (int t = 0; t < 1500; ++t)
	{
		const ChowRing r(BundleParams(p(rng), p(rng)));
		const ChowClass u = truncate(random_class(rng), 1);
		const ChowClass v = truncate(random_class(rng), 1);
		const ChowClass w = truncate(random_class(rng), 1);
		ASSERT_EQ(r.multiply(r.multiply(u, v), w), r.multiply(u, r.multiply(v, w)));
		ASSERT_EQ(r.multiply(u, v), r.multiply(v, u));
		ASSERT_EQ(r.multiply(u + v, w), r.multiply(u, w) + r.multiply(v, w));
		ASSERT_EQ(r.multiply(r.one(), u), u);
	}
}

TEST(ChowRingProperty, IntegralsOverTheGrid)
{
	for (int n0 = 1; n0 <= 8; ++n0)
		for (int np = 1; np <= 8; ++np)
		{
			const ChowRing r(BundleParams(n0, np));
			ASSERT_EQ(r.integrate(r.power(r.h(), 3)), n0 * np);
			ASSERT_EQ(r.integrate(r.multiply(r.power(r.h(), 2), r.alpha())), np);
			ASSERT_EQ(r.integrate(r.multiply(r.power(r.h(), 2), r.beta())), n0);
			ASSERT_TRUE(verify_anticanonical_carpet(r));
			ASSERT_EQ(degree_sigma(r), n0 * np);
			const oracle::Divisor k = as_divisor(canonical_gamma(r));
			ASSERT_EQ(r.integrate(r.power(canonical_gamma(r), 3)), oracle::triple(n0, np, k, k, k));
		}
}
