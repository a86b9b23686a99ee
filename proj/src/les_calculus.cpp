#include "carpetcalc/les_calculus.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

namespace carpetcalc {

bool DimRange::contains(const DimRange &inner) const
{
	if (inner.lo < lo)
		return false;
	if (!hi)
		return true;
	return inner.hi && *inner.hi <= *hi;
}

std::string DimRange::str() const
{
	if (is_exact())
		return std::to_string(lo);
	return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
}

CohInfo CohInfo::exact(std::int64_t h0, std::int64_t h1, std::int64_t h2)
{
	if (h0 < 0 || h1 < 0 || h2 < 0)
		throw InvalidInput("cohomology dimensions must be nonnegative");
	CohInfo info;
	info.h = {DimRange::exact(h0), DimRange::exact(h1), DimRange::exact(h2)};
	info.chi = h0 - h1 + h2;
	return info;
}

CohInfo CohInfo::exact(const CohTriple &t)
{
	return exact(to_int64(t.h0), to_int64(t.h1), to_int64(t.h2));
}

bool CohInfo::is_exact() const
{
	return std::all_of(h.begin(), h.end(), [](const DimRange &r) { return r.is_exact(); });
}

std::optional<CohTriple> CohInfo::values() const
{
	if (!is_exact())
		return std::nullopt;
	return CohTriple{h[0].lo, h[1].lo, h[2].lo};
}

bool CohInfo::contains(const CohTriple &t) const
{
	for (int i = 0; i < 3; ++i)
	{
		const Integer &v = i == 0 ? t.h0 : i == 1 ? t.h1 : t.h2;
		if (v < h[i].lo || (h[i].hi && v > *h[i].hi))
			return false;
	}
	return !chi || t.euler() == *chi;
}

std::string CohInfo::str() const
{
	return "(" + h[0].str() + ", " + h[1].str() + ", " + h[2].str() + "; chi=" +
	       (chi ? std::to_string(*chi) : std::string("?")) + ")";
}

namespace {

// Anything at or above this is treated as +infinity during propagation.
constexpr std::int64_t kInf = std::int64_t(1) << 60;

// Variable layout: h^i of slot s at 3*s + i (s = 0 left, 1 middle, 2 right),
// then d_0, d_1.
constexpr int kVars = 11;
constexpr int var_h(int slot, int degree) { return 3 * slot + degree; }
constexpr int var_d(int i) { return 9 + i; }

struct Box
{
	std::int64_t lo = 0;
	std::int64_t hi = kInf;
};

struct Term
{
	int var;
	int coef; // +1 or -1
};

// sum(coef * x) == rhs, or sum(coef * x) <= rhs when !equality
struct Constraint
{
	std::vector<Term> terms;
	std::int64_t rhs = 0;
	bool equality = true;
};

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
	if (a >= kInf || b >= kInf)
		return kInf;
	if (a <= -kInf || b <= -kInf)
		return -kInf;
	return std::clamp(a + b, -kInf, kInf);
}

std::int64_t sat_neg(std::int64_t a)
{
	return a >= kInf ? -kInf : a <= -kInf ? kInf : -a;
}

std::vector<Constraint> build_constraints(const std::array<std::optional<std::int64_t>, 3> &chi)
{
	std::vector<Constraint> cs;
	for (int i = 0; i < 3; ++i)
	{
		Constraint e;
		e.terms = {{var_h(0, i), 1}, {var_h(2, i), 1}, {var_h(1, i), -1}};
		if (i >= 1)
			e.terms.push_back({var_d(i - 1), -1});
		if (i <= 1)
			e.terms.push_back({var_d(i), -1});
		cs.push_back(e);
	}
	for (int s = 0; s < 3; ++s)
		if (chi[s])
			cs.push_back({{{var_h(s, 0), 1}, {var_h(s, 1), -1}, {var_h(s, 2), 1}}, *chi[s], true});
	for (int i = 0; i < 2; ++i)
	{
		cs.push_back({{{var_d(i), 1}, {var_h(2, i), -1}}, 0, false});
		cs.push_back({{{var_d(i), 1}, {var_h(0, i + 1), -1}}, 0, false});
	}
	return cs;
}

// One sweep of bounds tightening. Returns whether anything moved.
bool propagate_once(const std::vector<Constraint> &cs, std::array<Box, kVars> &box)
{
	bool changed = false;
	for (const auto &c : cs)
	{
		for (std::size_t k = 0; k < c.terms.size(); ++k)
		{
			// coef_k * x_k  (op)  rhs - sum_{j != k} coef_j * x_j
			std::int64_t rest_min = 0, rest_max = 0;
			for (std::size_t j = 0; j < c.terms.size(); ++j)
			{
				if (j == k)
					continue;
				const Box &b = box[c.terms[j].var];
				if (c.terms[j].coef > 0)
				{
					rest_min = sat_add(rest_min, b.lo);
					rest_max = sat_add(rest_max, b.hi);
				}
				else
				{
					rest_min = sat_add(rest_min, sat_neg(b.hi));
					rest_max = sat_add(rest_max, sat_neg(b.lo));
				}
			}
			const std::int64_t upper = sat_add(c.rhs, sat_neg(rest_min)); // coef*x <= upper
			const std::int64_t lower = sat_add(c.rhs, sat_neg(rest_max)); // coef*x >= lower (equality only)
			Box &b = box[c.terms[k].var];
			std::int64_t new_lo = b.lo, new_hi = b.hi;
			if (c.terms[k].coef > 0)
			{
				if (upper < kInf)
					new_hi = std::min(new_hi, upper);
				if (c.equality && lower > -kInf)
					new_lo = std::max(new_lo, lower);
			}
			else
			{
				if (upper < kInf)
					new_lo = std::max(new_lo, sat_neg(upper));
				if (c.equality && lower > -kInf)
					new_hi = std::min(new_hi, sat_neg(lower));
			}
			if (new_lo > new_hi)
				throw Contradiction("long exact sequence constraints are infeasible (bounds crossed)");
			if (new_lo != b.lo || new_hi != b.hi)
			{
				b.lo = new_lo;
				b.hi = new_hi;
				changed = true;
			}
		}
	}
	return changed;
}

void validate(const CohInfo &info, const char *slot)
{
	for (const auto &r : info.h)
	{
		if (r.lo < 0)
			throw InvalidInput(std::string(slot) + ": negative lower bound");
		if (r.hi && *r.hi < r.lo)
			throw InvalidInput(std::string(slot) + ": empty range " + r.str());
	}
}

std::optional<std::int64_t> exact_chi(const CohInfo &info)
{
	if (!info.is_exact())
		return std::nullopt;
	return info.h[0].lo - info.h[1].lo + info.h[2].lo;
}

using Triple = std::array<std::int64_t, 3>;

// All triples inside a slot's boxes matching its chi, if known.
std::vector<Triple> slot_points(const std::array<Box, kVars> &box, int slot, const std::optional<std::int64_t> &chi)
{
	std::vector<Triple> pts;
	const Box &b0 = box[var_h(slot, 0)], &b1 = box[var_h(slot, 1)], &b2 = box[var_h(slot, 2)];
	for (std::int64_t a = b0.lo; a <= b0.hi; ++a)
		for (std::int64_t b = b1.lo; b <= b1.hi; ++b)
		{
			if (chi)
			{
				const std::int64_t c = *chi - a + b;
				if (c >= b2.lo && c <= b2.hi)
					pts.push_back({a, b, c});
			}
			else
			{
				for (std::int64_t c = b2.lo; c <= b2.hi; ++c)
					pts.push_back({a, b, c});
			}
		}
	return pts;
}

bool slot_bounded(const std::array<Box, kVars> &box, int slot)
{
	for (int i = 0; i < 3; ++i)
		if (box[var_h(slot, i)].hi >= kInf)
			return false;
	return true;
}

double slot_volume(const std::array<Box, kVars> &box, int slot)
{
	double v = 1;
	for (int i = 0; i < 3; ++i)
		v *= double(box[var_h(slot, i)].hi - box[var_h(slot, i)].lo + 1);
	return v;
}

} // namespace

SesSolution solve_detailed(const SesProblem &problem)
{
	validate(problem.left, "left");
	validate(problem.middle, "middle");
	validate(problem.right, "right");

	const std::array<const CohInfo *, 3> slots{&problem.left, &problem.middle, &problem.right};
	std::array<std::optional<std::int64_t>, 3> chi;
	for (int s = 0; s < 3; ++s)
	{
		chi[s] = slots[s]->chi;
		if (const auto c = exact_chi(*slots[s]))
		{
			if (chi[s] && *chi[s] != *c)
				throw Contradiction("slot " + std::to_string(s) + ": chi " + std::to_string(*chi[s]) +
				                    " disagrees with its exact dimensions " + slots[s]->str());
			chi[s] = c;
		}
	}
	if (chi[0] && chi[1] && chi[2] && *chi[1] != *chi[0] + *chi[2])
		throw Contradiction("chi(B) != chi(A) + chi(C): " + std::to_string(*chi[1]) + " vs " +
		                    std::to_string(*chi[0]) + " + " + std::to_string(*chi[2]));
	if (!chi[1] && chi[0] && chi[2])
		chi[1] = *chi[0] + *chi[2];
	if (!chi[0] && chi[1] && chi[2])
		chi[0] = *chi[1] - *chi[2];
	if (!chi[2] && chi[0] && chi[1])
		chi[2] = *chi[1] - *chi[0];

	std::array<Box, kVars> box;
	for (int s = 0; s < 3; ++s)
		for (int i = 0; i < 3; ++i)
		{
			const DimRange &r = slots[s]->h[i];
			box[var_h(s, i)] = {r.lo, r.hi ? std::min(*r.hi, kInf) : kInf};
		}

	const auto constraints = build_constraints(chi);
	// Each productive sweep tightens some finite bound by at least one, so a
	// feasible bounded system settles quickly. Runaway growth of a lower bound
	// against an unbounded partner only happens when the system is infeasible.
	constexpr int kMaxSweeps = 100000;
	int sweeps = 0;
	while (propagate_once(constraints, box))
		if (++sweeps > kMaxSweeps)
			throw Contradiction("bound propagation does not converge; constraints are infeasible");

	int derived = -1;
	std::vector<int> unbounded;
	for (int s = 0; s < 3; ++s)
		if (!slot_bounded(box, s))
			unbounded.push_back(s);
	if (unbounded.size() > 1)
		throw InvalidInput("sequence is underdetermined: more than one slot is unbounded");
	if (unbounded.size() == 1)
		derived = unbounded.front();
	else
	{
		derived = 0;
		for (int s = 1; s < 3; ++s)
			if (slot_volume(box, s) > slot_volume(box, derived))
				derived = s;
	}
	int first = (derived + 1) % 3, second = (derived + 2) % 3;
	if (first > second)
		std::swap(first, second);

	const auto pts_first = slot_points(box, first, chi[first]);
	const auto pts_second = slot_points(box, second, chi[second]);
	const Box d0 = box[var_d(0)], d1 = box[var_d(1)];
	if (d0.hi >= kInf || d1.hi >= kInf)
		throw InvalidInput("sequence is underdetermined: connecting ranks are unbounded");

	std::array<std::int64_t, kVars> lo, hi;
	lo.fill(std::numeric_limits<std::int64_t>::max());
	hi.fill(std::numeric_limits<std::int64_t>::min());
	bool feasible = false;

	std::array<Triple, 3> val;
	for (const auto &p : pts_first)
		for (const auto &q : pts_second)
		{
			val[first] = p;
			val[second] = q;
			for (std::int64_t r0 = d0.lo; r0 <= d0.hi; ++r0)
				for (std::int64_t r1 = d1.lo; r1 <= d1.hi; ++r1)
				{
					const std::array<std::int64_t, 3> d_before{0, r0, r1};
					const std::array<std::int64_t, 3> d_after{r0, r1, 0};
					Triple t{};
					bool ok = true;
					for (int i = 0; i < 3 && ok; ++i)
					{
						const std::int64_t ranks = d_before[i] + d_after[i];
						switch (derived)
						{
						case 0: t[i] = val[1][i] - val[2][i] + ranks; break;
						case 1: t[i] = val[0][i] + val[2][i] - ranks; break;
						default: t[i] = val[1][i] - val[0][i] + ranks; break;
						}
						const Box &b = box[var_h(derived, i)];
						ok = t[i] >= b.lo && t[i] <= b.hi;
					}
					if (!ok)
						continue;
					if (chi[derived] && t[0] - t[1] + t[2] != *chi[derived])
						continue;
					val[derived] = t;
					if (r0 > val[2][0] || r0 > val[0][1] || r1 > val[2][1] || r1 > val[0][2])
						continue;
					feasible = true;
					for (int s = 0; s < 3; ++s)
						for (int i = 0; i < 3; ++i)
						{
							lo[var_h(s, i)] = std::min(lo[var_h(s, i)], val[s][i]);
							hi[var_h(s, i)] = std::max(hi[var_h(s, i)], val[s][i]);
						}
					lo[var_d(0)] = std::min(lo[var_d(0)], r0);
					hi[var_d(0)] = std::max(hi[var_d(0)], r0);
					lo[var_d(1)] = std::min(lo[var_d(1)], r1);
					hi[var_d(1)] = std::max(hi[var_d(1)], r1);
				}
		}
	if (!feasible)
		throw Contradiction("long exact sequence constraints are infeasible: " + problem.left.str() + " -> " +
		                    problem.middle.str() + " -> " + problem.right.str());

	SesSolution out;
	std::array<CohInfo *, 3> dst{&out.tightened.left, &out.tightened.middle, &out.tightened.right};
	for (int s = 0; s < 3; ++s)
	{
		for (int i = 0; i < 3; ++i)
			dst[s]->h[i] = DimRange::between(lo[var_h(s, i)], hi[var_h(s, i)]);
		dst[s]->chi = chi[s] ? chi[s] : exact_chi(*dst[s]);
	}
	// Slots pinned down by the solve can fix the remaining chi through additivity.
	if (!dst[0]->chi && dst[1]->chi && dst[2]->chi)
		dst[0]->chi = *dst[1]->chi - *dst[2]->chi;
	if (!dst[1]->chi && dst[0]->chi && dst[2]->chi)
		dst[1]->chi = *dst[0]->chi + *dst[2]->chi;
	if (!dst[2]->chi && dst[0]->chi && dst[1]->chi)
		dst[2]->chi = *dst[1]->chi - *dst[0]->chi;
	out.connecting_ranks = {DimRange::between(lo[var_d(0)], hi[var_d(0)]),
	                        DimRange::between(lo[var_d(1)], hi[var_d(1)])};
	return out;
}

SesProblem solve(const SesProblem &problem)
{
	return solve_detailed(problem).tightened;
}

} // namespace carpetcalc
