#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carpetcalc/les_calculus.hpp"
#include "carpetcalc/picard_lattice.hpp"
#include "carpetcalc/scroll.hpp"

namespace carpetcalc {

/// The K3 carpet on S(a,b): the unique ribbon on the scroll with trivial
/// dualizing sheaf and h^1(O) = 0, living in P^g with g = a + b + 1.
class CarpetSpec
{
public:
	explicit CarpetSpec(ScrollSpec scroll)
	    : scroll_(scroll)
	{
	}
	CarpetSpec(std::int64_t a, std::int64_t b)
	    : scroll_(a, b)
	{
	}

	const ScrollSpec &scroll() const { return scroll_; }
	std::int64_t genus() const { return scroll_.ambient_dim(); }
	std::int64_t n() const { return scroll_.n(); }

private:
	ScrollSpec scroll_;
};

struct CarpetInvariants
{
	std::int64_t genus;
	std::int64_t ambient_dim;
	std::int64_t degree;
	std::int64_t chi_structure_sheaf;
	std::int64_t h1_structure_sheaf;
	bool dualizing_sheaf_trivial;
};

/// A general hyperplane section: a canonical ribbon on a rational normal curve.
struct RibbonInvariants
{
	std::int64_t support_degree; // rational normal curve of degree g-1 in P^{g-1}
	std::int64_t support_ambient_dim;
	std::int64_t ribbon_degree;
	std::int64_t arithmetic_genus;
};

/// Number of carpet structures up to scalar: h^0(N_{S/P^g} (x) omega_S).
std::int64_t carpet_count(const CarpetSpec &spec);

CarpetInvariants invariants(const CarpetSpec &spec);

RibbonInvariants hyperplane_section_invariants(std::int64_t genus);
RibbonInvariants hyperplane_section_invariants(const CarpetSpec &spec);

/// h^1(omega_S^*), from the three-term split O(n+2) + O(2) + O(2-n) and from
/// the Hirzebruch class (2, n+2). Throws InvariantViolation if they differ.
std::int64_t h1_omega_dual(const CarpetSpec &spec);

/// h^1(omega_S^{-2}), from the split sum_{i=-2}^{2} O(4 - i n) and from the
/// Hirzebruch class (4, 2n+4). Throws InvariantViolation if they differ.
std::int64_t h1_omega_minus2(const CarpetSpec &spec);

/// The five sequences that assemble h^i(N_{S~/P^g}) from data on S. With
/// M = Hom_S(I_{S~}/I_S^2, O_S):
///   0 -> omega^*  -> N_S       -> M          -> 0
///   0 -> O_S      -> N_S(x)w   -> M(x)w      -> 0
///   0 -> M        -> N~|_S     -> omega^{-2} -> 0
///   0 -> M(x)w    -> N~(x)w    -> omega^*    -> 0
///   0 -> N~(x)w   -> N~        -> N~|_S      -> 0
struct CarpetSequences
{
	SesSolution n_s_quotient;
	SesSolution n_s_twisted_quotient;
	SesSolution restricted_normal;
	SesSolution twisted_normal;
	SesSolution carpet_normal;
};

struct SmoothnessReport
{
	std::int64_t chi_normal;
	DimRange h0;
	DimRange h1;
	std::int64_t h2;
	bool smooth_point;
	std::int64_t expected_dim; // (g+1)^2 + 18: dim PGL(g+1) + 19
	std::int64_t h1_omega_dual;
	std::int64_t h1_omega_minus2;
	std::int64_t chi_omega_minus2;
	CarpetSequences sequences;
};

/// h^i of the normal bundle of the carpet and the smoothness verdict for its
/// Hilbert point. For n >= 4 the connecting rank in the last sequence is not
/// determined, and h^0, h^1 come back as ranges of width h1_omega_dual.
SmoothnessReport smoothness(const CarpetSpec &spec);

enum class ComponentKind
{
	Prime,
	DivisibleHyperplane,
};

struct ComponentVerdict
{
	ComponentKind kind;
	bool picard_rank_one;
	bool hyperplane_divisible_by_two;
	/// The hyperelliptic polarization that produces the second component.
	std::optional<HyperellipticModel> lattice_witness;
};

std::vector<ComponentVerdict> component_membership(const CarpetSpec &spec);

std::string to_string(ComponentKind kind);

} // namespace carpetcalc
