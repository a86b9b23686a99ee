#pragma once

#include <string>

#include "carpetcalc/numbers.hpp"
#include "carpetcalc/p1_bundles.hpp"

namespace carpetcalc {

/// The divisor class x*C0 + y*f on the Hirzebruch surface F_n.
///
/// C0 is the minimal section (C0^2 = -n) and f the fibre of the ruling
/// pi: F_n -> P^1, so C0.f = 1 and f^2 = 0. Only n >= 0 is accepted; callers
/// normalise F_{-n} themselves.
struct HirzebruchDivisor
{
	Integer n;
	Integer x;
	Integer y;

	HirzebruchDivisor(Integer n_, Integer x_, Integer y_);

	HirzebruchDivisor operator+(const HirzebruchDivisor &o) const;
	HirzebruchDivisor operator-(const HirzebruchDivisor &o) const;
	HirzebruchDivisor operator*(const Integer &k) const;
	HirzebruchDivisor operator-() const { return *this * Integer(-1); }

	std::string str() const;

	friend bool operator==(const HirzebruchDivisor &, const HirzebruchDivisor &) = default;
};

struct CohTriple
{
	Integer h0;
	Integer h1;
	Integer h2;

	Integer euler() const { return h0 - h1 + h2; }
	CohTriple reversed() const { return {h2, h1, h0}; }

	friend bool operator==(const CohTriple &, const CohTriple &) = default;
};

/// K = -2 C0 - (n+2) f.
HirzebruchDivisor canonical_class(const Integer &n);

Integer intersect(const HirzebruchDivisor &d1, const HirzebruchDivisor &d2);

/// pi_* O(D) = Sym^x(O + O(-n)) (x) O(y).
SplitBundle pushforward(const HirzebruchDivisor &d);

/// R^1 pi_* O(D), nonzero only for x <= -2 (relative duality against Sym^{-x-2}).
SplitBundle r1_pushforward(const HirzebruchDivisor &d);

/// H^q of a sheaf on F_n from its direct images. The base is a curve, so the
/// Leray spectral sequence degenerates at E_2 and
///   H^q = H^q(P^1, pi_*) + H^{q-1}(P^1, R^1 pi_*).
CohTriple leray(const SplitBundle &direct, const SplitBundle &higher);

/// h^i(F_n, O(D)) = leray(pushforward(D), r1_pushforward(D)).
CohTriple cohomology(const HirzebruchDivisor &d);

/// chi(O(D)) = 1 + D.(D - K)/2.
Integer riemann_roch_chi(const HirzebruchDivisor &d);

/// h^0 counted as lattice points of the toric polygon of D:
/// { (k, j) : 0 <= k <= x, 0 <= j <= y - k n }.
Integer h0_lattice_oracle(const HirzebruchDivisor &d);

} // namespace carpetcalc
