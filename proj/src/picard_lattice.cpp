#include "carpetcalc/picard_lattice.hpp"

#include <algorithm>
#include <cctype>

namespace carpetcalc {

Lattice2::Lattice2(Integer g11, Integer g12, Integer g22, std::array<std::string, 2> labels)
    : gram_{{{std::move(g11), g12}, {g12, std::move(g22)}}}, labels_(std::move(labels))
{
}

Integer Lattice2::determinant() const
{
	return gram_[0][0] * gram_[1][1] - gram_[0][1] * gram_[1][0];
}

bool Lattice2::is_even() const
{
	return gram_[0][0] % 2 == 0 && gram_[1][1] % 2 == 0;
}

Lattice2 polarization_pencil_lattice(const Integer &genus)
{
	return {2 * genus - 2, 2, 0, {"L", "E"}};
}

Lattice2 f0_lattice() { return {0, 2, 0, {"E1", "E2"}}; }
Lattice2 f1_lattice() { return {0, 2, -2, {"E", "R"}}; }
Lattice2 f4_lattice() { return {0, 1, -2, {"E", "R"}}; }

Integer inner(const Lattice2 &lat, const LatticeVector &v, const LatticeVector &w)
{
	return v.p * lat.gram(0, 0) * w.p + v.p * lat.gram(0, 1) * w.q + v.q * lat.gram(1, 0) * w.p +
	       v.q * lat.gram(1, 1) * w.q;
}

Integer self_int(const Lattice2 &lat, const LatticeVector &v)
{
	return inner(lat, v, v);
}

Integer divisibility(const LatticeVector &v)
{
	if (v.p == 0 && v.q == 0)
		throw InvalidInput("divisibility of the zero vector is undefined");
	return boost::multiprecision::gcd(abs(v.p), abs(v.q));
}

bool is_primitive(const LatticeVector &v)
{
	return divisibility(v) == 1;
}

Integer genus_of(const Lattice2 &lat, const LatticeVector &v)
{
	const Integer s = self_int(lat, v);
	if (s % 2 != 0)
		throw InvalidInput("self-intersection " + s.str() + " is odd; no genus");
	if (s < 2)
		throw InvalidInput("self-intersection " + s.str() + " is below 2; not a polarization of genus >= 2");
	return s / 2 + 1;
}

std::string to_string(ScrollModel model)
{
	switch (model)
	{
	case ScrollModel::F0: return "F0";
	case ScrollModel::F1: return "F1";
	case ScrollModel::F4: return "F4";
	}
	return "?";
}

ScrollModel parse_scroll_model(const std::string &name)
{
	std::string upper = name;
	std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
	if (upper == "F0")
		return ScrollModel::F0;
	if (upper == "F1")
		return ScrollModel::F1;
	if (upper == "F4")
		return ScrollModel::F4;
	throw InvalidInput("unknown scroll model '" + name + "' (expected F0, F1 or F4)");
}

Lattice2 lattice_for(ScrollModel model)
{
	switch (model)
	{
	case ScrollModel::F0: return f0_lattice();
	case ScrollModel::F1: return f1_lattice();
	case ScrollModel::F4: return f4_lattice();
	}
	throw InvalidInput("unknown scroll model");
}

HyperellipticModel hyperelliptic_model(ScrollModel model, const Integer &n)
{
	LatticeVector v;
	Integer threshold;
	switch (model)
	{
	case ScrollModel::F0:
		v = {1, n};
		threshold = 1;
		break;
	case ScrollModel::F1:
		v = {n, 1};
		threshold = 2;
		break;
	case ScrollModel::F4:
		v = {n, 2};
		threshold = 5;
		break;
	}
	if (n < threshold)
		throw InvalidInput("model " + to_string(model) + " needs n >= " + threshold.str() + ", got " + n.str());

	const Lattice2 lat = lattice_for(model);
	HyperellipticModel out{model, n, v, self_int(lat, v), genus_of(lat, v), divisibility(v), false, true};
	out.primitive = out.divisibility == 1;
	if (model == ScrollModel::F4)
	{
		const bool even = n % 2 == 0;
		require(even == (out.divisibility == 2) && even == (out.genus % 4 == 1),
		        "F4 model: parity of n, divisibility and genus mod 4 disagree at n = " + n.str());
	}
	return out;
}

bool two_component_condition(const Integer &genus)
{
	if (genus < 3)
		throw InvalidInput("genus must be >= 3, got " + genus.str());
	return genus > 9 && genus % 4 == 1;
}

} // namespace carpetcalc
