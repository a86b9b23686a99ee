#include "carpetcalc/join_threefold.hpp"

#include <algorithm>
#include <functional>

namespace carpetcalc {

BundleParams::BundleParams(Integer n0_, Integer nprime_)
    : n0(std::move(n0_)), nprime(std::move(nprime_))
{
	if (n0 < 1 || nprime < 1)
		throw InvalidInput("join threefold needs n0 >= 1 and n' >= 1, got (" + n0.str() + ", " + nprime.str() + ")");
}

ChowClass ChowClass::basis(Basis b, Rational coef)
{
	ChowClass c;
	c.coef_[b] = std::move(coef);
	return c;
}

int ChowClass::codim(Basis b)
{
	switch (b)
	{
	case One: return 0;
	case Alpha:
	case Beta:
	case H: return 1;
	case HAlpha:
	case HBeta:
	case AlphaBeta: return 2;
	case Point: return 3;
	default: return -1;
	}
}

int ChowClass::top_codim() const
{
	int top = -1;
	for (int b = 0; b < kSize; ++b)
		if (coef_[b] != 0)
			top = std::max(top, codim(Basis(b)));
	return top;
}

ChowClass ChowClass::operator+(const ChowClass &o) const
{
	ChowClass out = *this;
	for (int b = 0; b < kSize; ++b)
		out.coef_[b] += o.coef_[b];
	return out;
}

ChowClass ChowClass::operator-() const
{
	ChowClass out = *this;
	for (auto &c : out.coef_)
		c = -c;
	return out;
}

ChowClass ChowClass::operator-(const ChowClass &o) const
{
	return *this + (-o);
}

ChowClass operator*(const Rational &k, const ChowClass &c)
{
	ChowClass out = c;
	for (auto &x : out.coef_)
		x *= k;
	return out;
}

std::string ChowClass::str() const
{
	static const char *names[kSize] = {"", "alpha", "beta", "H", "H*alpha", "H*beta", "alpha*beta", "alpha*beta*H"};
	std::string s;
	for (int b = 0; b < kSize; ++b)
	{
		const Rational &c = coef_[b];
		if (c == 0)
			continue;
		if (s.empty())
			s += c < 0 ? "-" : "";
		else
			s += c < 0 ? " - " : " + ";
		const Rational mag = c < 0 ? Rational(-c) : c;
		const bool unit = mag == 1 && b != One;
		if (!unit)
			s += denominator(mag) == 1 ? mag.str() : "(" + mag.str() + ")";
		if (b != One)
			s += (unit ? "" : " ") + std::string(names[b]);
	}
	return s.empty() ? "0" : s;
}

namespace {

// (i, j, k) exponents of alpha, beta, H for each basis element.
constexpr int kExponents[ChowClass::kSize][3] = {
    {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1},
};

} // namespace

ChowClass ChowRing::monomial(int i, int j, int k) const
{
	if (i >= 2 || j >= 2 || i + j + k > 3)
		return {};
	if (k <= 1)
	{
		for (int b = 0; b < ChowClass::kSize; ++b)
			if (kExponents[b][0] == i && kExponents[b][1] == j && kExponents[b][2] == k)
				return ChowClass::basis(ChowClass::Basis(b));
	}
	// H^2 = n0 alpha H + n' beta H - n0 n' alpha beta
	const Rational n0(params_.n0), np(params_.nprime);
	return n0 * monomial(i + 1, j, k - 1) + np * monomial(i, j + 1, k - 1) - (n0 * np) * monomial(i + 1, j + 1, k - 2);
}

ChowClass ChowRing::multiply(const ChowClass &u, const ChowClass &v) const
{
	if (u.top_codim() + v.top_codim() > 3)
		throw InvalidInput("product lands in codimension " + std::to_string(u.top_codim() + v.top_codim()) +
		                   " on a threefold");
	ChowClass out;
	for (int a = 0; a < ChowClass::kSize; ++a)
	{
		const Rational &ca = u[ChowClass::Basis(a)];
		if (ca == 0)
			continue;
		for (int b = 0; b < ChowClass::kSize; ++b)
		{
			const Rational &cb = v[ChowClass::Basis(b)];
			if (cb == 0)
				continue;
			out = out + (ca * cb) * monomial(kExponents[a][0] + kExponents[b][0], kExponents[a][1] + kExponents[b][1],
			                                 kExponents[a][2] + kExponents[b][2]);
		}
	}
	return out;
}

ChowClass ChowRing::power(const ChowClass &u, int k) const
{
	ChowClass out = one();
	for (int i = 0; i < k; ++i)
		out = multiply(out, u);
	return out;
}

Rational ChowRing::integrate(const ChowClass &w) const
{
	return w[ChowClass::Point];
}

ChowClass canonical_gamma(const ChowRing &ring)
{
	const auto &p = ring.params();
	return Rational(-2) * ring.h() + Rational(p.n0 - 2) * ring.alpha() + Rational(p.nprime - 2) * ring.beta();
}

SectionDivisors section_divisors(const ChowRing &ring)
{
	const auto &p = ring.params();
	return {ring.h() - Rational(p.nprime) * ring.beta(), ring.h() - Rational(p.n0) * ring.alpha()};
}

ContractedCurves contracted_curves(const ChowRing &ring)
{
	const auto &p = ring.params();
	const ChowClass ab = ring.multiply(ring.alpha(), ring.beta());
	return {ring.multiply(ring.h(), ring.alpha()) - Rational(p.nprime) * ab,
	        ring.multiply(ring.h(), ring.beta()) - Rational(p.n0) * ab, ab};
}

ChowClass pullback_canonical_sigma(const ChowRing &ring)
{
	const auto &p = ring.params();
	const auto e = section_divisors(ring);
	return canonical_gamma(ring) + Rational(p.nprime - 2, p.nprime) * e.e1 + Rational(p.n0 - 2, p.n0) * e.e2;
}

ChowClass pullback_carpet(const ChowRing &ring)
{
	const auto &p = ring.params();
	const auto e = section_divisors(ring);
	return Rational(2) * ring.alpha() + Rational(2) * ring.beta() + Rational(2, p.nprime) * e.e1 +
	       Rational(2, p.n0) * e.e2;
}

bool verify_anticanonical_carpet(const ChowRing &ring)
{
	return (pullback_canonical_sigma(ring) + pullback_carpet(ring)).is_zero();
}

Integer degree_sigma(const ChowRing &ring)
{
	const Rational d = ring.integrate(ring.power(ring.h(), 3));
	require(denominator(d) == 1, "deg Sigma is not an integer: " + d.str());
	return numerator(d);
}

FanoReport fano_report(const ChowRing &ring)
{
	const auto &p = ring.params();
	const ChowClass anti = -canonical_gamma(ring);
	const auto curves = contracted_curves(ring);

	FanoReport r;
	r.anti_on_kappa1 = ring.pair(anti, curves.kappa1);
	r.anti_on_kappa2 = ring.pair(anti, curves.kappa2);
	r.anti_on_fibre = ring.pair(anti, curves.fibre);
	r.anti_cubed = ring.integrate(ring.power(anti, 3));
	r.gamma_fano = r.anti_on_kappa1 > 0 && r.anti_on_kappa2 > 0 && r.anti_on_fibre > 0;
	r.gamma_weak_fano = r.anti_on_kappa1 >= 0 && r.anti_on_kappa2 >= 0 && r.anti_on_fibre >= 0 && r.anti_cubed > 0;

	// pi^*K_Sigma must be a multiple of H: it is trivial on both contracted divisors' fibres.
	const ChowClass pulled = pullback_canonical_sigma(ring);
	for (auto b : {ChowClass::One, ChowClass::Alpha, ChowClass::Beta, ChowClass::HAlpha, ChowClass::HBeta,
	               ChowClass::AlphaBeta, ChowClass::Point})
		require(pulled[b] == 0, "pi^*K_Sigma is not proportional to H: " + pulled.str());
	r.sigma_anticanonical_multiple = -pulled[ChowClass::H];
	require(r.sigma_anticanonical_multiple == Rational(2, p.n0) + Rational(2, p.nprime),
	        "pi^*(-K_Sigma) = lambda H with lambda != 2/n0 + 2/n'");
	require((-pulled - r.sigma_anticanonical_multiple * ring.h()).is_zero(), "pi^*(-K_Sigma) - lambda H != 0");
	r.sigma_fano = r.sigma_anticanonical_multiple > 0;
	return r;
}

bool PublishedClaimsReport::consistent_under_relabeling() const
{
	return std::all_of(entries.begin(), entries.end(), [](const MatrixCheckEntry &e) { return e.relabeled; });
}

bool PublishedClaimsReport::all_entries_match() const
{
	return std::all_of(entries.begin(), entries.end(), [](const MatrixCheckEntry &e) { return e.direct || e.relabeled; });
}

namespace {

struct Labeling
{
	ChowClass a, b, c1, c2;
};

} // namespace

PublishedClaimsReport published_claims_check(const ChowRing &ring)
{
	const auto &p = ring.params();
	const Rational n0(p.n0), np(p.nprime);
	const auto curves = contracted_curves(ring);
	const auto sections = section_divisors(ring);
	const ChowClass &f = curves.fibre;
	const ChowClass h = ring.h();
	const ChowClass k_gamma = canonical_gamma(ring);

	const Labeling direct{ring.alpha(), ring.beta(), curves.kappa1, curves.kappa2};
	const Labeling swapped{ring.beta(), ring.alpha(), curves.kappa2, curves.kappa1};

	PublishedClaimsReport report;
	const auto check = [&](std::string id, std::string claim, const std::function<bool(const Labeling &)> &holds) {
		report.entries.push_back({std::move(id), std::move(claim), holds(direct), holds(swapped)});
	};

	// Divisor products, rows and columns ordered H, A, B; entries in A^2.
	const std::array<std::string, 3> dnames{"H", "A", "B"};
	const auto divisor = [&](const Labeling &l, int i) { return i == 0 ? h : i == 1 ? l.a : l.b; };
	const auto product_entry = [&](const Labeling &l, int i, int j) -> ChowClass {
		const int lo = std::min(i, j), hi = std::max(i, j);
		if (lo == 0 && hi == 0)
			return np * l.c1 + n0 * l.c2 + (n0 * np) * f;
		if (lo == 0 && hi == 1)
			return l.c1 + n0 * f;
		if (lo == 0 && hi == 2)
			return l.c2 + np * f;
		if (lo == 1 && hi == 2)
			return f;
		return {};
	};
	const std::array<std::array<std::string, 3>, 3> product_text{{
	    {"n'C1 + n0C2 + n0n'f", "C1 + n0f", "C2 + n'f"},
	    {"C1 + n0f", "0", "f"},
	    {"C2 + n'f", "f", "0"},
	}};
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			check("product[" + dnames[i] + "," + dnames[j] + "]",
			      dnames[i] + "." + dnames[j] + " = " + product_text[i][j], [&, i, j](const Labeling &l) {
				      return ring.multiply(divisor(l, i), divisor(l, j)) == product_entry(l, i, j);
			      });

	// Divisor-curve pairing: rows H, A, B; columns C1, C2, f; antidiagonal identity.
	const std::array<std::string, 3> cnames{"C1", "C2", "f"};
	const auto curve = [&](const Labeling &l, int j) { return j == 0 ? l.c1 : j == 1 ? l.c2 : f; };
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
		{
			const int expected = i + j == 2 ? 1 : 0;
			check("pairing[" + dnames[i] + "," + cnames[j] + "]",
			      dnames[i] + "." + cnames[j] + " = " + std::to_string(expected),
			      [&, i, j, expected](const Labeling &l) { return ring.pair(divisor(l, i), curve(l, j)) == expected; });
		}

	check("canonical_class", "K = (n'-2)A + (n0-2)B - 2H", [&](const Labeling &l) {
		return k_gamma == Rational(np - 2) * l.a + Rational(n0 - 2) * l.b - Rational(2) * h;
	});
	check("section_e1", "E1 = -n'A + H", [&](const Labeling &l) { return sections.e1 == h - np * l.a; });
	check("section_e2", "E2 = -n0B + H", [&](const Labeling &l) { return sections.e2 == h - n0 * l.b; });

	const auto pairing = [&](const std::string &id, const std::string &claim, const ChowClass &d, int j,
	                         const Rational &expected) {
		check(id, claim, [&, j, expected](const Labeling &l) { return ring.pair(d, curve(l, j)) == expected; });
	};
	pairing("e1_dot_c1", "E1.C1 = 0", sections.e1, 0, 0);
	pairing("e1_dot_c2", "E1.C2 = -n'", sections.e1, 1, -np);
	pairing("e1_dot_f", "E1.f = 1", sections.e1, 2, 1);
	pairing("e2_dot_c1", "E2.C1 = -n0", sections.e2, 0, -n0);
	pairing("e2_dot_c2", "E2.C2 = 0", sections.e2, 1, 0);
	pairing("e2_dot_f", "E2.f = 1", sections.e2, 2, 1);

	check("contracted_c1", "H.C1 = 0", [&](const Labeling &l) { return ring.pair(h, l.c1) == 0; });
	check("contracted_c2", "H.C2 = 0", [&](const Labeling &l) { return ring.pair(h, l.c2) == 0; });

	check("carpet_class", "pi^*(K_Sigma + S~) = K + 2A + 2B + E1 + E2 = 0", [&](const Labeling &l) {
		return (k_gamma + Rational(2) * l.a + Rational(2) * l.b + sections.e1 + sections.e2).is_zero();
	});

	// The displayed combination with "- E2".
	{
		const auto displayed = [&](const Labeling &l) {
			return np * l.a + n0 * l.b - Rational(2) * h + sections.e1 - sections.e2;
		};
		if (!displayed(direct).is_zero() && !displayed(swapped).is_zero())
			report.discrepancies.push_back(
			    {"e1_minus_e2_display", "pi^*(K_Sigma + S~) ~ n'A + n0B - 2H + E1 - E2",
			     "nonzero under both labelings (relabeled: " + displayed(swapped).str() +
			         "); the vanishing combination is n'A + n0B - 2H + E1 + E2"});
		else
			check("e1_minus_e2_display", "n'A + n0B - 2H + E1 - E2 = 0",
			      [&](const Labeling &l) { return displayed(l).is_zero(); });
	}

	const FanoReport fano = fano_report(ring);
	if (p.n0 <= 2 && p.nprime <= 2)
	{
		if (fano.gamma_fano)
			check("gamma_fano_claim", "Gamma is Fano when n0, n' <= 2", [&](const Labeling &) { return true; });
		else
			report.discrepancies.push_back(
			    {"fano_boundary_claim", "Gamma is Fano when n0, n' <= 2",
			     std::string("-K_Gamma is ") + (fano.gamma_weak_fano ? "nef and big (weak Fano)" : "not nef") +
			         " but not ample: -K.kappa1 = " + fano.anti_on_kappa1.str() +
			         ", -K.kappa2 = " + fano.anti_on_kappa2.str()});
	}
	else
	{
		check("negative_on_contracted", "-K_Gamma is negative on C1, on C2, or on both", [&](const Labeling &l) {
			return ring.pair(-k_gamma, l.c1) < 0 || ring.pair(-k_gamma, l.c2) < 0;
		});
	}
	check("sigma_fano", "Sigma is Fano", [&](const Labeling &) { return fano.sigma_fano; });

	return report;
}

} // namespace carpetcalc
