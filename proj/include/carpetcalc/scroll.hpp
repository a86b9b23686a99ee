#pragma once

#include <cstdint>

#include "carpetcalc/hirzebruch.hpp"
#include "carpetcalc/les_calculus.hpp"
#include "carpetcalc/p1_bundles.hpp"

namespace carpetcalc {

/// The smooth rational normal scroll S(a,b) = P(O(a) + O(b)) embedded in P^N
/// by O(1). As an abstract surface it is F_n with n = a - b, and the
/// hyperplane class is H = C0 + a f.
class ScrollSpec
{
public:
	/// Rejects b < 1 (cones) and a < b.
	ScrollSpec(std::int64_t a, std::int64_t b);

	std::int64_t a() const { return a_; }
	std::int64_t b() const { return b_; }
	std::int64_t n() const { return a_ - b_; }
	/// Dimension of the ambient projective space, a + b + 1.
	std::int64_t ambient_dim() const { return a_ + b_ + 1; }
	std::int64_t degree() const { return a_ + b_; }

	HirzebruchDivisor divisor(std::int64_t x, std::int64_t y) const { return {n(), x, y}; }
	HirzebruchDivisor hyperplane_class() const { return divisor(1, a_); }

	friend bool operator==(const ScrollSpec &, const ScrollSpec &) = default;

private:
	std::int64_t a_;
	std::int64_t b_;
};

/// omega = O(-2 C0 + (b - a - 2) f).
HirzebruchDivisor omega_class(const ScrollSpec &spec);

/// h^i(T_S) from 0 -> T_{S/P^1} -> T_S -> pi^* T_{P^1} -> 0 with
/// T_{S/P^1} = O(2 C0 + n f) and pi^* T_{P^1} = O(2 f). The connecting rank
/// is left free, so h^0 and h^1 come back as ranges once n >= 2.
CohInfo tangent_cohomology(const ScrollSpec &spec);

/// h^i(T_{P^N}|_S) from the restricted Euler sequence 0 -> O_S -> O_S(1)^{N+1} -> T|_S -> 0.
CohInfo ambient_tangent_cohomology(const ScrollSpec &spec);

/// The intermediate problems of the normal-bundle computation, kept for reporting.
struct NormalBundleChain
{
	SesSolution relative_tangent; // 0 -> T_{S/P^1} -> T_S -> pi^*T_{P^1} -> 0
	SesSolution euler;            // 0 -> O_S -> O_S(1)^{N+1} -> T_{P^N}|_S -> 0
	SesSolution normal;           // 0 -> T_S -> T_{P^N}|_S -> N_{S/P^N} -> 0
};

NormalBundleChain normal_bundle_chain(const ScrollSpec &spec);

/// h^i(N_{S/P^N}) = ((N+1)^2 - 7, 0, 0). Throws InvariantViolation if the
/// solver leaves any range open.
CohTriple normal_bundle_cohomology(const ScrollSpec &spec);

/// pi_* and R^1 pi_* of a sheaf on the scroll.
struct PushforwardPair
{
	SplitBundle direct;
	SplitBundle higher;

	friend bool operator==(const PushforwardPair &, const PushforwardPair &) = default;
};

/// Pushforwards to P^1 of the three terms of
///   0 -> T_S (x) omega -> T_{P^N}|_S (x) omega -> N (x) omega -> 0.
struct PushforwardTable
{
	PushforwardPair tangent_twisted;
	PushforwardPair ambient_twisted;
	PushforwardPair normal_twisted;
};

/// The first two rows come from pushing forward their defining sequences
/// (every flanking term is computed and its vanishing checked). For the third,
/// R^1 pi_*(N (x) omega) is a quotient of R^1 pi_*(T_{P^N}|_S (x) omega) = 0,
/// and pi_*(N (x) omega) has rank and degree fixed by additivity along the
/// pushed-forward sequence: rank one, degree zero, so it is O. That step uses
/// the injection O(-2) -> O(-2) being an isomorphism, which dimension
/// counting on global sections cannot see.
PushforwardTable pushforward_table(const ScrollSpec &spec);

struct TwistedNormalResult
{
	CohTriple value;   // from the pushforwards through Leray
	CohInfo envelope;  // h^i(N (x) omega) allowed by the cohomology sequence alone
	SesSolution chain; // 0 -> T_S(x)omega -> T|_S(x)omega -> N(x)omega -> 0
};

/// h^i(N_{S/P^N} (x) omega) = (1, 0, 0): the space of sections is spanned by
/// one nowhere-vanishing section. Throws InvariantViolation if the value falls
/// outside the envelope.
TwistedNormalResult normal_twist_canonical_cohomology(const ScrollSpec &spec);

/// Cohomology of T_S (x) omega and T_{P^N}|_S (x) omega via their sequences.
CohInfo tangent_twisted_cohomology(const ScrollSpec &spec);
CohInfo ambient_twisted_cohomology(const ScrollSpec &spec);

} // namespace carpetcalc
