#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "carpetcalc/hirzebruch.hpp"

namespace carpetcalc {

/// A closed range [lo, hi] of dimensions. An absent `hi` means unbounded above.
struct DimRange
{
	std::int64_t lo = 0;
	std::optional<std::int64_t> hi;

	static DimRange exact(std::int64_t v) { return {v, v}; }
	static DimRange between(std::int64_t lo, std::int64_t hi) { return {lo, hi}; }
	static DimRange at_least(std::int64_t lo) { return {lo, std::nullopt}; }

	bool is_exact() const { return hi && *hi == lo; }
	bool bounded() const { return hi.has_value(); }
	bool contains(std::int64_t v) const { return v >= lo && (!hi || v <= *hi); }
	/// True when every value of `inner` lies in *this.
	bool contains(const DimRange &inner) const;

	std::string str() const;

	friend bool operator==(const DimRange &, const DimRange &) = default;
};

/// What is known about h^0, h^1, h^2 of a sheaf on a surface.
struct CohInfo
{
	std::array<DimRange, 3> h{DimRange::at_least(0), DimRange::at_least(0), DimRange::at_least(0)};
	std::optional<std::int64_t> chi;

	static CohInfo exact(std::int64_t h0, std::int64_t h1, std::int64_t h2);
	static CohInfo exact(const CohTriple &t);
	static CohInfo unknown() { return {}; }

	bool is_exact() const;
	/// The triple, when every degree is pinned down.
	std::optional<CohTriple> values() const;
	bool contains(const CohTriple &t) const;

	std::string str() const;

	friend bool operator==(const CohInfo &, const CohInfo &) = default;
};

/// Cohomology data for a short exact sequence 0 -> A -> B -> C -> 0 of
/// sheaves on a surface.
struct SesProblem
{
	CohInfo left;
	CohInfo middle;
	CohInfo right;

	friend bool operator==(const SesProblem &, const SesProblem &) = default;
};

struct SesSolution
{
	SesProblem tightened;
	/// Feasible ranks of the connecting maps H^0(C) -> H^1(A) and H^1(C) -> H^2(A).
	std::array<DimRange, 2> connecting_ranks;
};

/// Tightest ranges for every h^i(A), h^i(B), h^i(C) consistent with the long
/// exact cohomology sequence.
///
/// With d_i the rank of H^i(C) -> H^{i+1}(A), exactness is equivalent to
///   h^i(B) = (h^i(A) - d_{i-1}) + (h^i(C) - d_i),  d_{-1} = d_2 = 0,
///   0 <= d_i <= min(h^i(C), h^{i+1}(A)),
/// together with h^0 - h^1 + h^2 = chi on every slot whose chi is known.
/// Bounds are first propagated to a fixpoint; the integer feasible set is
/// then enumerated over d_0, d_1 and two of the slots, deriving the third.
///
/// Throws Contradiction when no assignment is feasible, and InvalidInput when
/// more than one slot stays unbounded after propagation (nothing finite to
/// enumerate).
SesSolution solve_detailed(const SesProblem &problem);

SesProblem solve(const SesProblem &problem);

} // namespace carpetcalc
