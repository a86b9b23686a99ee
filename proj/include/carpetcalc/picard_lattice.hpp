#pragma once

#include <array>
#include <string>

#include "carpetcalc/numbers.hpp"

namespace carpetcalc {

/// Coordinates of a class in the basis of a rank-2 lattice.
struct LatticeVector
{
	Integer p;
	Integer q;

	friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
};

/// A rank-2 integral lattice given by a symmetric Gram matrix.
class Lattice2
{
public:
	Lattice2(Integer g11, Integer g12, Integer g22, std::array<std::string, 2> labels);

	const Integer &gram(int i, int j) const { return gram_[i][j]; }
	const std::array<std::string, 2> &labels() const { return labels_; }
	Integer determinant() const;
	bool is_even() const;

private:
	std::array<std::array<Integer, 2>, 2> gram_;
	std::array<std::string, 2> labels_;
};

/// <L, E> inside the Picard lattice of a hyperelliptic K3 of genus g: ((2g-2, 2), (2, 0)).
Lattice2 polarization_pencil_lattice(const Integer &genus);
/// Two elliptic pencils E1, E2 (double cover of F_0): ((0, 2), (2, 0)).
Lattice2 f0_lattice();
/// Elliptic pencil E and nodal rational curve R (double cover of F_1): ((0, 2), (2, -2)).
Lattice2 f1_lattice();
/// Elliptic pencil E and nodal rational curve R (double cover of F_4): ((0, 1), (1, -2)).
Lattice2 f4_lattice();

Integer inner(const Lattice2 &lat, const LatticeVector &v, const LatticeVector &w);
Integer self_int(const Lattice2 &lat, const LatticeVector &v);

/// gcd of the coordinates. Rejects the zero vector.
Integer divisibility(const LatticeVector &v);
bool is_primitive(const LatticeVector &v);

/// g with L^2 = 2g - 2. Rejects odd or < 2 self-intersection.
Integer genus_of(const Lattice2 &lat, const LatticeVector &v);

enum class ScrollModel
{
	F0,
	F1,
	F4,
};

std::string to_string(ScrollModel model);
/// Parses "F0", "F1", "F4" (case-insensitive). Throws InvalidInput otherwise.
ScrollModel parse_scroll_model(const std::string &name);

/// The hyperelliptic polarization L_n mapping a K3 two-to-one onto a scroll:
///   F0: L = E1 + n E2, n >= 1
///   F1: L = R + n E,   n >= 2   (basis E, R)
///   F4: L = 2R + n E,  n >= 5   (basis E, R)
/// Primitivity is checked inside the rank-2 sublattice only; that the
/// sublattice is itself primitive in H^2(X, Z) is a known fact taken as given.
struct HyperellipticModel
{
	ScrollModel model;
	Integer n;
	LatticeVector polarization;
	Integer self_intersection;
	Integer genus;
	Integer divisibility;
	bool primitive;
	bool valid;
};

HyperellipticModel hyperelliptic_model(ScrollModel model, const Integer &n);

Lattice2 lattice_for(ScrollModel model);

/// g > 9 and g = 1 mod 4: the genera for which carpets on F_4 scrolls lie on
/// a second component of the Hilbert scheme.
bool two_component_condition(const Integer &genus);

} // namespace carpetcalc
