#include "carpetcalc/scroll.hpp"

#include <string>

namespace carpetcalc {

ScrollSpec::ScrollSpec(std::int64_t a, std::int64_t b)
    : a_(a), b_(b)
{
	if (b < 1)
		throw InvalidInput("S(a,b) needs b >= 1 (b = 0 is a cone), got b = " + std::to_string(b));
	if (a < b)
		throw InvalidInput("S(a,b) needs a >= b, got a = " + std::to_string(a) + ", b = " + std::to_string(b));
}

HirzebruchDivisor omega_class(const ScrollSpec &spec)
{
	return spec.divisor(-2, spec.b() - spec.a() - 2);
}

namespace {

CohInfo coh(const HirzebruchDivisor &d)
{
	return CohInfo::exact(cohomology(d));
}

CohInfo coh_times(const HirzebruchDivisor &d, std::int64_t copies)
{
	const CohTriple t = cohomology(d);
	return CohInfo::exact(CohTriple{t.h0 * copies, t.h1 * copies, t.h2 * copies});
}

SesSolution relative_tangent_sequence(const ScrollSpec &spec)
{
	return solve_detailed({coh(spec.divisor(2, spec.n())), CohInfo::unknown(), coh(spec.divisor(0, 2))});
}

SesSolution euler_sequence(const ScrollSpec &spec)
{
	return solve_detailed({coh(spec.divisor(0, 0)), coh_times(spec.hyperplane_class(), spec.ambient_dim() + 1),
	                       CohInfo::unknown()});
}

// 0 -> O(-2f) -> T_S (x) omega -> O(-2 C0 + (b-a) f) -> 0
HirzebruchDivisor twisted_tangent_sub(const ScrollSpec &spec) { return spec.divisor(0, -2); }
HirzebruchDivisor twisted_tangent_quotient(const ScrollSpec &spec) { return spec.divisor(-2, spec.b() - spec.a()); }

// 0 -> omega -> O(-C0 + (b-2) f)^{N+1} -> T_{P^N}|_S (x) omega -> 0
HirzebruchDivisor twisted_euler_middle(const ScrollSpec &spec) { return spec.divisor(-1, spec.b() - 2); }

std::int64_t rank_of(const SplitBundle &b) { return static_cast<std::int64_t>(b.rank()); }

} // namespace

CohInfo tangent_cohomology(const ScrollSpec &spec)
{
	return relative_tangent_sequence(spec).tightened.middle;
}

CohInfo ambient_tangent_cohomology(const ScrollSpec &spec)
{
	return euler_sequence(spec).tightened.right;
}

NormalBundleChain normal_bundle_chain(const ScrollSpec &spec)
{
	NormalBundleChain chain;
	chain.relative_tangent = relative_tangent_sequence(spec);
	chain.euler = euler_sequence(spec);
	chain.normal =
	    solve_detailed({chain.relative_tangent.tightened.middle, chain.euler.tightened.right, CohInfo::unknown()});
	return chain;
}

CohTriple normal_bundle_cohomology(const ScrollSpec &spec)
{
	const auto chain = normal_bundle_chain(spec);
	const auto values = chain.normal.tightened.right.values();
	if (!values)
		throw InvariantViolation("normal bundle cohomology of S(" + std::to_string(spec.a()) + "," +
		                         std::to_string(spec.b()) + ") did not collapse: " +
		                         chain.normal.tightened.right.str());
	return *values;
}

CohInfo tangent_twisted_cohomology(const ScrollSpec &spec)
{
	return solve({coh(twisted_tangent_sub(spec)), CohInfo::unknown(), coh(twisted_tangent_quotient(spec))}).middle;
}

CohInfo ambient_twisted_cohomology(const ScrollSpec &spec)
{
	return solve({coh(omega_class(spec)), coh_times(twisted_euler_middle(spec), spec.ambient_dim() + 1),
	              CohInfo::unknown()})
	    .right;
}

PushforwardTable pushforward_table(const ScrollSpec &spec)
{
	PushforwardTable table;

	// 0 -> pi_* sub -> pi_* T(x)w -> pi_* quot -> R^1 sub -> R^1 T(x)w -> R^1 quot -> 0
	const auto sub = twisted_tangent_sub(spec), quot = twisted_tangent_quotient(spec);
	require(pushforward(quot).empty() && r1_pushforward(sub).empty(),
	        "T_S (x) omega: expected pi_* of the quotient and R^1 pi_* of the subsheaf to vanish");
	table.tangent_twisted = {pushforward(sub), r1_pushforward(quot)};

	// The middle term O(-C0 + (b-2) f) has degree -1 on fibres: both direct images vanish,
	// so pi_*(T|_S (x) w) = R^1 pi_* omega and R^1 pi_*(T|_S (x) w) = 0.
	const auto mid = twisted_euler_middle(spec), w = omega_class(spec);
	require(pushforward(mid).empty() && r1_pushforward(mid).empty(),
	        "T_{P^N}|_S (x) omega: middle term of the twisted Euler sequence has nonzero direct images");
	require(pushforward(w).empty(), "pi_* omega should vanish");
	table.ambient_twisted = {r1_pushforward(w), SplitBundle{}};

	// 0 -> pi_*T(x)w -> pi_*T|(x)w -> pi_*N(x)w -> R^1 T(x)w -> R^1 T|(x)w -> R^1 N(x)w -> 0
	// R^1 N(x)w is a quotient of R^1 pi_*(T|_S (x) w) = 0.
	const auto &t = table.tangent_twisted, &a = table.ambient_twisted;
	require(a.higher.empty(), "R^1 pi_*(T_{P^N}|_S (x) omega) should vanish");
	const std::int64_t rank = rank_of(a.direct) - rank_of(t.direct) + rank_of(t.higher);
	const Integer degree = a.direct.degree() - t.direct.degree() + t.higher.degree();
	require(rank == 1, "pi_*(N (x) omega) should be a line bundle, got rank " + std::to_string(rank));
	// pi_*(T_S(x)w) -> pi_*(T|_S(x)w) is an injection O(-2) -> O(-2), hence an isomorphism,
	// and pi_*(N(x)w) = R^1 pi_*(T_S(x)w). A rank-one bundle on P^1 is fixed by its degree.
	require(t.direct == a.direct, "pi_*(T_S (x) omega) -> pi_*(T|_S (x) omega) is not O(-2) -> O(-2)");
	table.normal_twisted = {SplitBundle{degree}, SplitBundle{}};

	const auto chi = [](const PushforwardPair &p) { return euler_char(p.direct) - euler_char(p.higher); };
	require(chi(table.normal_twisted) == chi(a) - chi(t), "chi(N (x) omega) != chi(T| (x) omega) - chi(T_S (x) omega)");
	return table;
}

TwistedNormalResult normal_twist_canonical_cohomology(const ScrollSpec &spec)
{
	TwistedNormalResult result;
	const auto table = pushforward_table(spec);
	result.value = leray(table.normal_twisted.direct, table.normal_twisted.higher);
	result.chain =
	    solve_detailed({tangent_twisted_cohomology(spec), ambient_twisted_cohomology(spec), CohInfo::unknown()});
	result.envelope = result.chain.tightened.right;
	if (!result.envelope.contains(result.value))
		throw InvariantViolation("h^i(N (x) omega) = (" + result.value.h0.str() + ", " + result.value.h1.str() +
		                         ", " + result.value.h2.str() + ") lies outside the sequence envelope " +
		                         result.envelope.str());
	return result;
}

} // namespace carpetcalc
