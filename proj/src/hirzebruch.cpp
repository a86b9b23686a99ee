#include "carpetcalc/hirzebruch.hpp"

namespace carpetcalc {

HirzebruchDivisor::HirzebruchDivisor(Integer n_, Integer x_, Integer y_)
    : n(std::move(n_)), x(std::move(x_)), y(std::move(y_))
{
	if (n < 0)
		throw InvalidInput("Hirzebruch surface F_n requires n >= 0, got n = " + n.str());
}

HirzebruchDivisor HirzebruchDivisor::operator+(const HirzebruchDivisor &o) const
{
	if (n != o.n)
		throw InvalidInput("cannot add divisors on F_" + n.str() + " and F_" + o.n.str());
	return {n, x + o.x, y + o.y};
}

HirzebruchDivisor HirzebruchDivisor::operator-(const HirzebruchDivisor &o) const
{
	return *this + (-o);
}

HirzebruchDivisor HirzebruchDivisor::operator*(const Integer &k) const
{
	return {n, x * k, y * k};
}

std::string HirzebruchDivisor::str() const
{
	return x.str() + "*C0 + " + y.str() + "*f on F_" + n.str();
}

HirzebruchDivisor canonical_class(const Integer &n)
{
	return {n, -2, -(n + 2)};
}

Integer intersect(const HirzebruchDivisor &d1, const HirzebruchDivisor &d2)
{
	if (d1.n != d2.n)
		throw InvalidInput("intersection of divisors on different surfaces F_" + d1.n.str() + ", F_" + d2.n.str());
	return -d1.n * d1.x * d2.x + d1.x * d2.y + d2.x * d1.y;
}

SplitBundle pushforward(const HirzebruchDivisor &d)
{
	std::vector<Integer> degrees;
	for (Integer k = 0; k <= d.x; ++k)
		degrees.push_back(d.y - k * d.n);
	return SplitBundle(std::move(degrees));
}

SplitBundle r1_pushforward(const HirzebruchDivisor &d)
{
	std::vector<Integer> degrees;
	for (Integer j = 1; j <= -d.x - 1; ++j)
		degrees.push_back(d.y + j * d.n);
	return SplitBundle(std::move(degrees));
}

CohTriple leray(const SplitBundle &direct, const SplitBundle &higher)
{
	return {h0(direct), h1(direct) + h0(higher), h1(higher)};
}

CohTriple cohomology(const HirzebruchDivisor &d)
{
	return leray(pushforward(d), r1_pushforward(d));
}

Integer riemann_roch_chi(const HirzebruchDivisor &d)
{
	const Integer twice = intersect(d, d - canonical_class(d.n));
	// D.(D-K) = D^2 - D.K is always even (Wu formula), so an odd value is a bug.
	require(twice % 2 == 0, "Riemann-Roch: D.(D-K) is odd for " + d.str());
	return 1 + twice / 2;
}

Integer h0_lattice_oracle(const HirzebruchDivisor &d)
{
	Integer count = 0;
	for (Integer k = 0; k <= d.x; ++k)
	{
		const Integer top = d.y - k * d.n;
		if (top >= 0)
			count += top + 1;
	}
	return count;
}

} // namespace carpetcalc
