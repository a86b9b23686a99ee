#pragma once

#include <array>
#include <string>
#include <vector>

#include "carpetcalc/numbers.hpp"

namespace carpetcalc {

/// Degrees of the two rational normal curves whose join is Sigma. The blow-up
/// Gamma of Sigma along both curves is P(O(n0,0) + O(0,n')) over P^1 x P^1.
struct BundleParams
{
	Integer n0;
	Integer nprime;

	/// Rejects n0 < 1 or n' < 1.
	BundleParams(Integer n0_, Integer nprime_);
};

/// An element of A^*(Gamma) (x) Q in the monomial basis
///   1 | alpha, beta, H | H alpha, H beta, alpha beta | alpha beta H
/// where alpha, beta pull back the two rulings of P^1 x P^1 and H = c_1(O(1)).
class ChowClass
{
public:
	enum Basis
	{
		One,
		Alpha,
		Beta,
		H,
		HAlpha,
		HBeta,
		AlphaBeta,
		Point,
		kSize
	};

	ChowClass() = default;
	static ChowClass basis(Basis b, Rational coef = 1);

	const Rational &operator[](Basis b) const { return coef_[b]; }
	Rational &operator[](Basis b) { return coef_[b]; }

	/// Highest codimension carrying a nonzero coefficient; -1 for the zero class.
	int top_codim() const;
	bool is_zero() const { return top_codim() < 0; }

	ChowClass operator+(const ChowClass &o) const;
	ChowClass operator-(const ChowClass &o) const;
	ChowClass operator-() const;
	friend ChowClass operator*(const Rational &k, const ChowClass &c);

	std::string str() const;

	friend bool operator==(const ChowClass &, const ChowClass &) = default;

	static int codim(Basis b);

private:
	std::array<Rational, kSize> coef_{};
};

/// Multiplication in A^*(Gamma): alpha^2 = beta^2 = 0 and the Grothendieck
/// relation H^2 = c_1(E) H - c_2(E) with c_1 = n0 alpha + n' beta and
/// c_2 = n0 n' alpha beta. Integration reads off the coefficient of
/// alpha beta H, the class of a point.
class ChowRing
{
public:
	explicit ChowRing(BundleParams params)
	    : params_(std::move(params))
	{
	}

	const BundleParams &params() const { return params_; }

	ChowClass one() const { return ChowClass::basis(ChowClass::One); }
	ChowClass alpha() const { return ChowClass::basis(ChowClass::Alpha); }
	ChowClass beta() const { return ChowClass::basis(ChowClass::Beta); }
	ChowClass h() const { return ChowClass::basis(ChowClass::H); }

	/// Throws InvalidInput when the top-codimension parts multiply past 3.
	ChowClass multiply(const ChowClass &u, const ChowClass &v) const;
	ChowClass power(const ChowClass &u, int k) const;
	Rational integrate(const ChowClass &w) const;
	/// integrate(u * v), for a divisor against a curve class.
	Rational pair(const ChowClass &u, const ChowClass &v) const { return integrate(multiply(u, v)); }

	/// Reduction of alpha^i beta^j H^k to the basis.
	ChowClass monomial(int i, int j, int k) const;

private:
	BundleParams params_;
};

/// K_Gamma = -2H + (n0 - 2) alpha + (n' - 2) beta.
ChowClass canonical_gamma(const ChowRing &ring);

struct SectionDivisors
{
	ChowClass e1; // H - n' beta, contracted onto the curve of degree n0
	ChowClass e2; // H - n0 alpha, contracted onto the curve of degree n'
};

SectionDivisors section_divisors(const ChowRing &ring);

struct ContractedCurves
{
	ChowClass kappa1; // H alpha - n' alpha beta
	ChowClass kappa2; // H beta - n0 alpha beta
	ChowClass fibre;  // alpha beta
};

ContractedCurves contracted_curves(const ChowRing &ring);

/// Fano-type verdicts. Gamma is a split projective bundle over a toric
/// surface, hence toric, and its cone of curves is spanned by the torus
/// invariant classes kappa1, kappa2 and the fibre; positivity on those three
/// decides ampleness of -K_Gamma.
struct FanoReport
{
	Rational anti_on_kappa1;
	Rational anti_on_kappa2;
	Rational anti_on_fibre;
	Rational anti_cubed;
	bool gamma_fano;
	bool gamma_weak_fano;
	/// lambda with pi^*(-K_Sigma) = lambda H; equals 2/n0 + 2/n'.
	Rational sigma_anticanonical_multiple;
	bool sigma_fano;
};

FanoReport fano_report(const ChowRing &ring);

/// pi^*(K_Sigma) = K_Gamma + ((n'-2)/n') E1 + ((n0-2)/n0) E2.
ChowClass pullback_canonical_sigma(const ChowRing &ring);
/// pi^*(S~) = 2 alpha + 2 beta + (2/n') E1 + (2/n0) E2 for the carpet S~.
ChowClass pullback_carpet(const ChowRing &ring);

/// True iff pi^*(K_Sigma + S~) is the zero class, i.e. the carpet is anticanonical on Sigma.
bool verify_anticanonical_carpet(const ChowRing &ring);

/// deg Sigma = integrate(H^3) = n0 n'.
Integer degree_sigma(const ChowRing &ring);

/// A published identity recomputed in the ring. The published presentation
/// uses generators A, B (rulings) and curves C1, C2 (minimal sections of A and
/// B); `direct` tests A = alpha, C1 = kappa1, and `relabeled` the global swap
/// A = beta, B = alpha, C1 = kappa2, C2 = kappa1.
struct MatrixCheckEntry
{
	std::string id;
	std::string claim;
	bool direct;
	bool relabeled;
};

/// A published statement that fails under both labelings, or is only true in
/// a weaker form. Both known cases are listed in the module documentation.
struct Discrepancy
{
	std::string id;
	std::string claim;
	std::string finding;
};

struct PublishedClaimsReport
{
	std::vector<MatrixCheckEntry> entries;
	std::vector<Discrepancy> discrepancies;

	/// Every entry holds under the relabeled convention.
	bool consistent_under_relabeling() const;
	/// Every entry holds under at least one labeling.
	bool all_entries_match() const;
};

/// Recomputes the divisor-product matrix (rows and columns ordered H, A, B),
/// the divisor-curve pairing matrix (rows H, A, B against C1, C2, f), the
/// canonical class, the section divisors and their intersections with the
/// curves, and the Fano and carpet-class statements.
///
/// Known discrepancies, reported in `discrepancies`:
///  - the combination "n'A + n0B - 2H + E1 - E2" for pi^*(K_Sigma + S~) does
///    not vanish under either labeling; with "+ E2" it does;
///  - "Gamma is Fano if n0, n' <= 2" holds only for n0 = n' = 1; when one of
///    them equals 2, -K_Gamma is zero on a contracted curve (weak Fano).
/// The matrix rows are announced in the order A, B, H, but the entries only
/// fit the order H, A, B; the check uses the latter.
PublishedClaimsReport published_claims_check(const ChowRing &ring);

} // namespace carpetcalc
