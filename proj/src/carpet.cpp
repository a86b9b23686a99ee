#include "carpetcalc/carpet.hpp"

#include <string>

namespace carpetcalc {

namespace {

std::string label(const CarpetSpec &spec)
{
	return "S(" + std::to_string(spec.scroll().a()) + "," + std::to_string(spec.scroll().b()) + ")";
}

HirzebruchDivisor omega_dual(const CarpetSpec &spec)
{
	return -omega_class(spec.scroll());
}

HirzebruchDivisor omega_minus2(const CarpetSpec &spec)
{
	return omega_class(spec.scroll()) * Integer(-2);
}

// The splittings read off by pushing omega^* and omega^{-2} down to P^1.
SplitBundle displayed_split_omega_dual(std::int64_t n)
{
	return {n + 2, 2, 2 - n};
}

SplitBundle displayed_split_omega_minus2(std::int64_t n)
{
	std::vector<Integer> degrees;
	for (std::int64_t i = -2; i <= 2; ++i)
		degrees.push_back(-i * n + 4);
	return SplitBundle(std::move(degrees));
}

std::int64_t sq(std::int64_t v) { return v * v; }

} // namespace

std::int64_t carpet_count(const CarpetSpec &spec)
{
	return to_int64(normal_twist_canonical_cohomology(spec.scroll()).value.h0);
}

CarpetInvariants invariants(const CarpetSpec &spec)
{
	const std::int64_t g = spec.genus();
	return {g, g, 2 * g - 2, 2, 0, true};
}

RibbonInvariants hyperplane_section_invariants(std::int64_t genus)
{
	if (genus < 2)
		throw InvalidInput("canonical ribbons need genus >= 2");
	return {genus - 1, genus - 1, 2 * genus - 2, genus};
}

RibbonInvariants hyperplane_section_invariants(const CarpetSpec &spec)
{
	return hyperplane_section_invariants(spec.genus());
}

std::int64_t h1_omega_dual(const CarpetSpec &spec)
{
	const Integer split = h1(displayed_split_omega_dual(spec.n()));
	const Integer pipeline = cohomology(omega_dual(spec)).h1;
	require(split == pipeline, "h^1(omega^*) on " + label(spec) + ": split gives " + split.str() + ", F_n gives " +
	                               pipeline.str());
	return to_int64(split);
}

std::int64_t h1_omega_minus2(const CarpetSpec &spec)
{
	const Integer split = h1(displayed_split_omega_minus2(spec.n()));
	const Integer pipeline = cohomology(omega_minus2(spec)).h1;
	require(split == pipeline, "h^1(omega^-2) on " + label(spec) + ": split gives " + split.str() +
	                               ", F_n gives " + pipeline.str());
	return to_int64(split);
}

SmoothnessReport smoothness(const CarpetSpec &spec)
{
	const ScrollSpec &scroll = spec.scroll();
	const std::int64_t g = spec.genus();
	const CohInfo dual = CohInfo::exact(cohomology(omega_dual(spec)));
	const CohInfo minus2 = CohInfo::exact(cohomology(omega_minus2(spec)));
	const CohInfo normal = CohInfo::exact(normal_bundle_cohomology(scroll));
	const CohInfo normal_twisted = CohInfo::exact(normal_twist_canonical_cohomology(scroll).value);

	SmoothnessReport r{};
	r.h1_omega_dual = h1_omega_dual(spec);
	r.h1_omega_minus2 = h1_omega_minus2(spec);

	const Integer chi_rr = riemann_roch_chi(omega_minus2(spec));
	const SplitBundle push = pushforward(omega_minus2(spec));
	const Integer chi_push = euler_char(push) - euler_char(r1_pushforward(omega_minus2(spec)));
	require(chi_rr == chi_push, "chi(omega^-2): Riemann-Roch " + chi_rr.str() + " vs pushforward " + chi_push.str());
	r.chi_omega_minus2 = to_int64(chi_rr);

	auto &seq = r.sequences;
	seq.n_s_quotient = solve_detailed({dual, normal, CohInfo::unknown()});
	seq.n_s_twisted_quotient = solve_detailed({CohInfo::exact(1, 0, 0), normal_twisted, CohInfo::unknown()});
	const CohInfo m = seq.n_s_quotient.tightened.right;
	const CohInfo m_twisted = seq.n_s_twisted_quotient.tightened.right;
	seq.restricted_normal = solve_detailed({m, CohInfo::unknown(), minus2});
	seq.twisted_normal = solve_detailed({m_twisted, CohInfo::unknown(), dual});
	const CohInfo restricted = seq.restricted_normal.tightened.middle;
	const CohInfo twisted = seq.twisted_normal.tightened.middle;
	seq.carpet_normal = solve_detailed({twisted, CohInfo::unknown(), restricted});
	const CohInfo carpet = seq.carpet_normal.tightened.middle;

	const auto d0 = dual.values().value(), m2 = minus2.values().value(), ns = normal.values().value();
	require(restricted.is_exact() && twisted.is_exact(), "restrictions of the carpet normal bundle did not collapse");
	require(restricted.h[0].lo == ns.h0 - d0.h0 + d0.h1 + m2.h0 && restricted.h[1].lo == m2.h1,
	        "h^i(N~ (x) O_S) disagrees with the closed form");
	require(twisted.h[0].lo == d0.h0 && twisted.h[1].lo == d0.h1, "h^i(N~ (x) omega) should equal h^i(omega^*)");

	r.chi_normal = carpet.chi.value();
	r.h0 = carpet.h[0];
	r.h1 = carpet.h[1];
	require(carpet.h[2].is_exact(), "h^2 of the carpet normal bundle did not collapse");
	r.h2 = carpet.h[2].lo;
	r.expected_dim = sq(g + 1) + 18;
	r.smooth_point = r.h1.is_exact() && r.h1.lo == 0;

	require(r.chi_normal == to_int64(ns.h0) + r.chi_omega_minus2, "chi(N~) != h^0(N_S) + chi(omega^-2)");
	require(r.h1 == DimRange::between(r.h1_omega_minus2, r.h1_omega_minus2 + r.h1_omega_dual),
	        "h^1(N~) range " + r.h1.str() + " is not [h^1(w^-2), h^1(w^-2) + h^1(w^*)]");
	require(r.smooth_point == (spec.n() <= 2), "smoothness verdict disagrees with a - b <= 2 on " + label(spec));
	return r;
}

std::vector<ComponentVerdict> component_membership(const CarpetSpec &spec)
{
	std::vector<ComponentVerdict> out;
	const std::int64_t g = spec.genus();

	ComponentVerdict prime{ComponentKind::Prime, true, false, std::nullopt};
	// For F_0 and F_1 the double cover carries a primitive hyperelliptic
	// polarization, which deforms to Picard rank one. Other scroll types
	// reach the prime component by degenerating to these.
	if (spec.n() == 0)
		prime.lattice_witness = hyperelliptic_model(ScrollModel::F0, (g - 1) / 2);
	else if (spec.n() == 1)
		prime.lattice_witness = hyperelliptic_model(ScrollModel::F1, g / 2);
	if (prime.lattice_witness)
		require(prime.lattice_witness->genus == g && prime.lattice_witness->primitive,
		        "prime-component witness on " + label(spec) + " is not a primitive genus-g polarization");
	out.push_back(prime);

	if (spec.n() == 4 && two_component_condition(g))
	{
		const auto witness = hyperelliptic_model(ScrollModel::F4, (g + 3) / 2);
		require(witness.genus == g && witness.divisibility == 2,
		        "F4 witness on " + label(spec) + " should be twice a primitive class of genus g");
		out.push_back({ComponentKind::DivisibleHyperplane, true, true, witness});
	}
	return out;
}

std::string to_string(ComponentKind kind)
{
	switch (kind)
	{
	case ComponentKind::Prime: return "prime";
	case ComponentKind::DivisibleHyperplane: return "divisible_hyperplane";
	}
	return "?";
}

} // namespace carpetcalc
