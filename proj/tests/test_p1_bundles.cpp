#include <gtest/gtest.h>

#include <random>

#include "carpetcalc/p1_bundles.hpp"

using namespace carpetcalc;

TEST(SplitBundle, ZeroSheafIsEmpty)
{
	const SplitBundle zero;
	EXPECT_TRUE(zero.empty());
	EXPECT_EQ(zero.rank(), 0u);
	EXPECT_EQ(h0(zero), 0);
	EXPECT_EQ(h1(zero), 0);
	EXPECT_EQ(euler_char(zero), 0);
	EXPECT_EQ(zero.str(), "0");
}

TEST(SplitBundle, DegreesAreSortedSoIsomorphicBundlesCompareEqual)
{
	EXPECT_EQ((SplitBundle{-1, 3, 0}), (SplitBundle{3, 0, -1}));
	EXPECT_EQ((SplitBundle{-1, 3}).degrees().front(), 3);
	EXPECT_NE((SplitBundle{1, 1}), (SplitBundle{2, 0}));
}

TEST(SplitBundle, H0Examples)
{
	EXPECT_EQ(h0(SplitBundle{}), 0);
	EXPECT_EQ(h0(SplitBundle{3}), 4);
	EXPECT_EQ(h0(SplitBundle{-2, 0, 2}), 4);
}

TEST(SplitBundle, H1Examples)
{
	EXPECT_EQ(h1(SplitBundle{-2}), 1);
	EXPECT_EQ(h1(SplitBundle{0}), 0);
	EXPECT_EQ(h1(SplitBundle{-2, 0, 2}), 1);
	EXPECT_EQ(h1(SplitBundle{-1}), 0);
}

TEST(SplitBundle, EulerCharacteristicExamples)
{
	EXPECT_EQ(euler_char(SplitBundle{-2}), -1);
	EXPECT_EQ(euler_char(SplitBundle{4, -4}), 2);
	EXPECT_EQ(euler_char(SplitBundle{}), 0);
}

TEST(SplitBundle, SerreDualExamples)
{
	EXPECT_EQ(serre_dual(SplitBundle{0}), SplitBundle{-2});
	EXPECT_EQ(serre_dual(SplitBundle{-2}), SplitBundle{0});
	EXPECT_EQ(serre_dual(SplitBundle{3, -1}), (SplitBundle{-5, -1}));
	EXPECT_TRUE(serre_dual(SplitBundle{}).empty());
}

TEST(SplitBundle, TwistDegreeAndSum)
{
	const SplitBundle b{2, -3};
	EXPECT_EQ(b.twisted(1), (SplitBundle{3, -2}));
	EXPECT_EQ(b.degree(), -1);
	EXPECT_EQ(b + SplitBundle{0}, (SplitBundle{2, 0, -3}));
	EXPECT_EQ(b.str(), "O(2) + O(-3)");
}

TEST(SplitBundle, HugeDegreesDoNotOverflow)
{
	const Integer big("1000000000000000000000000000000");
	EXPECT_EQ(h0(SplitBundle{big}), big + 1);
	EXPECT_EQ(h1(SplitBundle{-big}), big - 1);
	EXPECT_EQ(euler_char(SplitBundle{big, -big}), 2);
}

namespace {

SplitBundle random_bundle(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> rank(0, 6);
	std::uniform_int_distribution<int> deg(-15, 15);
	std::vector<Integer> d;
	for (int i = rank(rng); i > 0; --i)
		d.emplace_back(deg(rng));
	return SplitBundle(std::move(d));
}

} // namespace

TEST(SplitBundleProperty, EulerIsH0MinusH1)
{
	std::mt19937 rng(11);
	for (int t = 0; t < 2000; ++t)
	{
		const SplitBundle b = random_bundle(rng);
		ASSERT_EQ(h0(b) - h1(b), euler_char(b)) << b.str();
	}
}

TEST(SplitBundleProperty, SerreDualitySwapsH0AndH1)
{
	std::mt19937 rng(12);
	for (int t = 0; t < 2000; ++t)
	{
		const SplitBundle b = random_bundle(rng);
		const SplitBundle d = serre_dual(b);
		ASSERT_EQ(h0(d), h1(b)) << b.str();
		ASSERT_EQ(h1(d), h0(b)) << b.str();
		ASSERT_EQ(serre_dual(d), b);
	}
}

TEST(SplitBundleProperty, AdditiveOverDirectSums)
{
	std::mt19937 rng(13);
	for (int t = 0; t < 2000; ++t)
	{
		const SplitBundle u = random_bundle(rng);
		const SplitBundle v = random_bundle(rng);
		ASSERT_EQ(h0(u + v), h0(u) + h0(v));
		ASSERT_EQ(h1(u + v), h1(u) + h1(v));
		ASSERT_EQ((u + v).rank(), u.rank() + v.rank());
	}
}
