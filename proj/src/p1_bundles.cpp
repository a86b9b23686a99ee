#include "carpetcalc/p1_bundles.hpp"

#include <algorithm>
#include <functional>

namespace carpetcalc {

SplitBundle::SplitBundle(std::initializer_list<Integer> degrees)
    : degrees_(degrees)
{
	normalize();
}

SplitBundle::SplitBundle(std::vector<Integer> degrees)
    : degrees_(std::move(degrees))
{
	normalize();
}

void SplitBundle::normalize()
{
	std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

Integer SplitBundle::degree() const
{
	Integer sum = 0;
	for (const auto &d : degrees_)
		sum += d;
	return sum;
}

SplitBundle SplitBundle::twisted(const Integer &t) const
{
	SplitBundle out = *this;
	for (auto &d : out.degrees_)
		d += t;
	return out;
}

std::string SplitBundle::str() const
{
	if (degrees_.empty())
		return "0";
	std::string s;
	for (std::size_t i = 0; i < degrees_.size(); ++i)
	{
		if (i)
			s += " + ";
		s += "O(" + degrees_[i].str() + ")";
	}
	return s;
}

SplitBundle operator+(const SplitBundle &lhs, const SplitBundle &rhs)
{
	std::vector<Integer> all = lhs.degrees_;
	all.insert(all.end(), rhs.degrees_.begin(), rhs.degrees_.end());
	return SplitBundle(std::move(all));
}

Integer h0(const SplitBundle &bundle)
{
	Integer sum = 0;
	for (const auto &d : bundle.degrees())
		if (d >= 0)
			sum += d + 1;
	return sum;
}

Integer h1(const SplitBundle &bundle)
{
	Integer sum = 0;
	for (const auto &d : bundle.degrees())
		if (d <= -2)
			sum += -d - 1;
	return sum;
}

Integer euler_char(const SplitBundle &bundle)
{
	return bundle.degree() + Integer(bundle.rank());
}

SplitBundle serre_dual(const SplitBundle &bundle)
{
	std::vector<Integer> out;
	out.reserve(bundle.rank());
	for (const auto &d : bundle.degrees())
		out.push_back(-d - 2);
	return SplitBundle(std::move(out));
}

} // namespace carpetcalc
