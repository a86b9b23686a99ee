#include "carpetcalc/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "carpetcalc/carpet.hpp"
#include "carpetcalc/hirzebruch.hpp"
#include "carpetcalc/join_threefold.hpp"
#include "carpetcalc/scroll.hpp"

namespace carpetcalc {

using nlohmann::json;

void to_json(json &j, const ProvenanceNote &p)
{
	j = json{{"path", p.path}, {"source", p.source}, {"note", p.note}};
}

void from_json(const json &j, ProvenanceNote &p)
{
	j.at("path").get_to(p.path);
	j.at("source").get_to(p.source);
	j.at("note").get_to(p.note);
}

void to_json(json &j, const ReportDocument &doc)
{
	j = json{{"schema_version", doc.schema_version},
	         {"command", {{"name", doc.command}, {"args", doc.args}}},
	         {"results", doc.results},
	         {"provenance", doc.provenance}};
}

void from_json(const json &j, ReportDocument &doc)
{
	j.at("schema_version").get_to(doc.schema_version);
	j.at("command").at("name").get_to(doc.command);
	doc.args = j.at("command").at("args");
	doc.results = j.at("results");
	j.at("provenance").get_to(doc.provenance);
}

namespace {

// Integers that fit in 64 bits become JSON numbers, anything larger a decimal string.
json jint(const Integer &v)
{
	if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
		return v.str();
	return static_cast<std::int64_t>(v);
}

json jrat(const Rational &r)
{
	if (denominator(r) == 1)
		return numerator(r).str();
	return numerator(r).str() + "/" + denominator(r).str();
}

json jrange(const DimRange &r)
{
	return {{"lo", r.lo}, {"hi", r.hi ? json(*r.hi) : json(nullptr)}, {"exact", r.is_exact()}};
}

json jcoh(const CohInfo &c)
{
	return {{"h0", jrange(c.h[0])},
	        {"h1", jrange(c.h[1])},
	        {"h2", jrange(c.h[2])},
	        {"chi", c.chi ? json(*c.chi) : json(nullptr)}};
}

json jtriple(const CohTriple &t)
{
	return {{"h0", jint(t.h0)}, {"h1", jint(t.h1)}, {"h2", jint(t.h2)}};
}

json jbundle(const SplitBundle &b)
{
	json out = json::array();
	for (const auto &d : b.degrees())
		out.push_back(jint(d));
	return out;
}

json jses(const SesSolution &s)
{
	return {{"left", jcoh(s.tightened.left)},
	        {"middle", jcoh(s.tightened.middle)},
	        {"right", jcoh(s.tightened.right)},
	        {"connecting_ranks", {jrange(s.connecting_ranks[0]), jrange(s.connecting_ranks[1])}}};
}

json jpair(const PushforwardPair &p)
{
	return {{"direct", jbundle(p.direct)}, {"higher", jbundle(p.higher)}};
}

const char *basis_name(ChowClass::Basis b)
{
	switch (b)
	{
	case ChowClass::One: return "1";
	case ChowClass::Alpha: return "alpha";
	case ChowClass::Beta: return "beta";
	case ChowClass::H: return "H";
	case ChowClass::HAlpha: return "H*alpha";
	case ChowClass::HBeta: return "H*beta";
	case ChowClass::AlphaBeta: return "alpha*beta";
	case ChowClass::Point: return "alpha*beta*H";
	case ChowClass::kSize: break;
	}
	return "?";
}

// Nonzero coefficients only; the zero class is an empty object.
json jclass(const ChowClass &c)
{
	json out = json::object();
	for (int i = 0; i < ChowClass::kSize; ++i)
	{
		const auto b = static_cast<ChowClass::Basis>(i);
		if (c[b] != 0)
			out[basis_name(b)] = jrat(c[b]);
	}
	return out;
}

json jlattice(const Lattice2 &lat)
{
	return {{"gram", {{jint(lat.gram(0, 0)), jint(lat.gram(0, 1))}, {jint(lat.gram(1, 0)), jint(lat.gram(1, 1))}}},
	        {"labels", {lat.labels()[0], lat.labels()[1]}},
	        {"determinant", jint(lat.determinant())},
	        {"even", lat.is_even()}};
}

json jmodel(const HyperellipticModel &m)
{
	return {{"model", to_string(m.model)},
	        {"n", jint(m.n)},
	        {"polarization", {jint(m.polarization.p), jint(m.polarization.q)}},
	        {"self_intersection", jint(m.self_intersection)},
	        {"genus", jint(m.genus)},
	        {"divisibility", jint(m.divisibility)},
	        {"primitive", m.primitive},
	        {"valid", m.valid}};
}

ProvenanceNote published(std::string path, std::string note)
{
	return {std::move(path), "published", std::move(note)};
}

ProvenanceNote derived(std::string path, std::string note)
{
	return {std::move(path), "derived", std::move(note)};
}

// Arguments above this make (N+1)^2 and friends uncomfortably large for 64-bit solver slots.
constexpr std::int64_t kMaxScrollDegree = 1'000'000;
constexpr std::int64_t kMaxSweep = 200;

json sweep_row(std::int64_t a, std::int64_t b)
{
	const CarpetSpec spec(a, b);
	const SmoothnessReport rep = smoothness(spec);
	return {{"a", a},
	        {"b", b},
	        {"n", spec.n()},
	        {"genus", spec.genus()},
	        {"chi_normal", rep.chi_normal},
	        {"h0", jrange(rep.h0)},
	        {"h1", jrange(rep.h1)},
	        {"smooth_point", rep.smooth_point}};
}

} // namespace

ReportDocument cmd_cohomology(const Integer &n, const Integer &x, const Integer &y)
{
	const HirzebruchDivisor d(n, x, y);
	const CohTriple h = cohomology(d);
	const Integer rr = riemann_roch_chi(d);
	const Integer oracle = h0_lattice_oracle(d);
	const HirzebruchDivisor dual = canonical_class(n) - d;
	const CohTriple hd = cohomology(dual);

	require(oracle == h.h0, "h0 of " + d.str() + ": pushforward gives " + h.h0.str() + ", lattice points " + oracle.str());
	require(rr == h.euler(), "chi of " + d.str() + ": Leray gives " + h.euler().str() + ", Riemann-Roch " + rr.str());
	require(hd == h.reversed(), "Serre duality fails for " + d.str());

	ReportDocument doc;
	doc.command = "cohomology";
	doc.args = {{"n", jint(n)}, {"x", jint(x)}, {"y", jint(y)}};
	doc.results = {
	    {"divisor", {{"n", jint(n)}, {"x", jint(x)}, {"y", jint(y)}}},
	    {"cohomology", jtriple(h)},
	    {"euler_characteristic", jint(h.euler())},
	    {"riemann_roch_chi", jint(rr)},
	    {"self_intersection", jint(intersect(d, d))},
	    {"pushforward", jbundle(pushforward(d))},
	    {"r1_pushforward", jbundle(r1_pushforward(d))},
	    {"h0_lattice_oracle", jint(oracle)},
	    {"serre_dual", {{"divisor", {{"x", jint(dual.x)}, {"y", jint(dual.y)}}}, {"cohomology", jtriple(hd)}}},
	    {"checks", {{"oracle_agrees", true}, {"riemann_roch_agrees", true}, {"serre_duality_agrees", true}}},
	};
	doc.provenance = {
	    derived("/results/cohomology", "direct images to P^1 combined through the Leray identity"),
	    derived("/results/h0_lattice_oracle", "lattice points of the section polygon"),
	    derived("/results/riemann_roch_chi", "1 + D.(D - K)/2"),
	};
	return doc;
}

ReportDocument cmd_carpet(std::int64_t a, std::int64_t b)
{
	if (a > kMaxScrollDegree)
		throw InvalidInput("a = " + std::to_string(a) + " exceeds the supported maximum " +
		                   std::to_string(kMaxScrollDegree));
	const CarpetSpec spec(a, b);
	const ScrollSpec &scroll = spec.scroll();
	const CarpetInvariants inv = invariants(spec);
	const RibbonInvariants rib = hyperplane_section_invariants(spec);
	const TwistedNormalResult twisted = normal_twist_canonical_cohomology(scroll);
	const PushforwardTable table = pushforward_table(scroll);
	const SmoothnessReport rep = smoothness(spec);

	json components = json::array();
	for (const ComponentVerdict &v : component_membership(spec))
	{
		components.push_back({{"kind", to_string(v.kind)},
		                      {"picard_rank_one", v.picard_rank_one},
		                      {"hyperplane_divisible_by_two", v.hyperplane_divisible_by_two},
		                      {"lattice_witness", v.lattice_witness ? jmodel(*v.lattice_witness) : json(nullptr)}});
	}

	const CarpetSequences &seq = rep.sequences;
	ReportDocument doc;
	doc.command = "carpet";
	doc.args = {{"a", a}, {"b", b}};
	doc.results = {
	    {"scroll",
	     {{"a", a}, {"b", b}, {"n", scroll.n()}, {"ambient_dim", scroll.ambient_dim()}, {"degree", scroll.degree()}}},
	    {"invariants",
	     {{"genus", inv.genus},
	      {"ambient_dim", inv.ambient_dim},
	      {"degree", inv.degree},
	      {"chi_structure_sheaf", inv.chi_structure_sheaf},
	      {"h1_structure_sheaf", inv.h1_structure_sheaf},
	      {"dualizing_sheaf_trivial", inv.dualizing_sheaf_trivial}}},
	    {"hyperplane_section",
	     {{"support_degree", rib.support_degree},
	      {"support_ambient_dim", rib.support_ambient_dim},
	      {"ribbon_degree", rib.ribbon_degree},
	      {"arithmetic_genus", rib.arithmetic_genus}}},
	    {"carpet_count", carpet_count(spec)},
	    {"tangent", jcoh(tangent_cohomology(scroll))},
	    {"normal_bundle", jtriple(normal_bundle_cohomology(scroll))},
	    {"normal_twisted_canonical", {{"value", jtriple(twisted.value)}, {"envelope", jcoh(twisted.envelope)}}},
	    {"pushforward_table",
	     {{"tangent_twisted", jpair(table.tangent_twisted)},
	      {"ambient_twisted", jpair(table.ambient_twisted)},
	      {"normal_twisted", jpair(table.normal_twisted)}}},
	    {"smoothness",
	     {{"chi_normal", rep.chi_normal},
	      {"h0", jrange(rep.h0)},
	      {"h1", jrange(rep.h1)},
	      {"h2", rep.h2},
	      {"smooth_point", rep.smooth_point},
	      {"expected_dim", rep.expected_dim},
	      {"h1_omega_dual", rep.h1_omega_dual},
	      {"h1_omega_minus2", rep.h1_omega_minus2},
	      {"chi_omega_minus2", rep.chi_omega_minus2},
	      {"sequences",
	       {{"n_s_quotient", jses(seq.n_s_quotient)},
	        {"n_s_twisted_quotient", jses(seq.n_s_twisted_quotient)},
	        {"restricted_normal", jses(seq.restricted_normal)},
	        {"twisted_normal", jses(seq.twisted_normal)},
	        {"carpet_normal", jses(seq.carpet_normal)}}}}},
	    {"components", components},
	    {"component_count", components.size()},
	};
	doc.provenance = {
	    published("/results/carpet_count", "one carpet up to isomorphism on every smooth scroll"),
	    published("/results/normal_bundle", "h0 = (N+1)^2 - 7, higher cohomology zero"),
	    published("/results/pushforward_table", "direct images of the twisted tangent and ambient sequences"),
	    published("/results/smoothness/chi_normal", "(g+1)^2 + 18"),
	    published("/results/smoothness/smooth_point", "smooth exactly when a - b <= 2"),
	    published("/results/smoothness/h1_omega_dual", "split O(n+2) + O(2) + O(2-n)"),
	    published("/results/smoothness/h1_omega_minus2", "split of O(4 - i n), i = -2..2"),
	    published("/results/components", "prime component, plus the divisible-hyperplane one for F4 models"),
	    derived("/results/smoothness/h0", "range left by the free connecting rank"),
	    derived("/results/smoothness/h1", "range left by the free connecting rank"),
	    derived("/results/smoothness/chi_omega_minus2", "Riemann-Roch and pushforward summation agree"),
	    derived("/results/tangent", "relative tangent sequence with the connecting rank left free"),
	    derived("/results/normal_twisted_canonical/envelope", "cohomology sequence alone, without direct images"),
	};
	return doc;
}

ReportDocument cmd_sweep(std::int64_t a_max)
{
	if (a_max < 1)
		throw InvalidInput("a_max must be >= 1, got " + std::to_string(a_max));
	if (a_max > kMaxSweep)
		throw InvalidInput("a_max = " + std::to_string(a_max) + " exceeds the supported maximum " +
		                   std::to_string(kMaxSweep));

	std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
	for (std::int64_t a = 1; a <= a_max; ++a)
		for (std::int64_t b = 1; b <= a; ++b)
			pairs.emplace_back(a, b);

	std::vector<json> rows(pairs.size());
	std::vector<std::exception_ptr> errors(pairs.size());
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i = next++; i < pairs.size(); i = next++)
		{
			try
			{
				rows[i] = sweep_row(pairs[i].first, pairs[i].second);
			}
			catch (...)
			{
				errors[i] = std::current_exception();
			}
		}
	};
	const std::size_t nthreads =
	    std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, pairs.size()));
	std::vector<std::thread> pool;
	for (std::size_t t = 1; t < nthreads; ++t)
		pool.emplace_back(worker);
	worker();
	for (auto &t : pool)
		t.join();
	for (const auto &e : errors)
		if (e)
			std::rethrow_exception(e);

	bool criterion = true;
	for (const json &r : rows)
		criterion = criterion && (r["smooth_point"].get<bool>() == (r["n"].get<std::int64_t>() <= 2));

	ReportDocument doc;
	doc.command = "sweep";
	doc.args = {{"a_max", a_max}};
	doc.results = {{"a_max", a_max},
	               {"row_count", rows.size()},
	               {"rows", rows},
	               {"smooth_iff_small_gap", criterion}};
	doc.provenance = {
	    published("/results/rows", "chi_normal = (g+1)^2 + 18 and smooth exactly when a - b <= 2"),
	    derived("/results/rows", "h0 and h1 ranges from the sequence solver"),
	};
	return doc;
}

ReportDocument cmd_join(const Integer &n0, const Integer &nprime)
{
	const ChowRing ring(BundleParams(n0, nprime));
	const ChowClass k = canonical_gamma(ring);
	const SectionDivisors e = section_divisors(ring);
	const ContractedCurves c = contracted_curves(ring);
	const FanoReport fano = fano_report(ring);
	const PublishedClaimsReport claims = published_claims_check(ring);
	const ChowClass h = ring.h();

	json entries = json::array();
	for (const auto &m : claims.entries)
		entries.push_back({{"id", m.id}, {"claim", m.claim}, {"direct", m.direct}, {"relabeled", m.relabeled}});
	json discrepancies = json::array();
	for (const auto &d : claims.discrepancies)
		discrepancies.push_back({{"id", d.id}, {"claim", d.claim}, {"finding", d.finding}});

	ReportDocument doc;
	doc.command = "join";
	doc.args = {{"n0", jint(n0)}, {"nprime", jint(nprime)}};
	doc.results = {
	    {"params", {{"n0", jint(n0)}, {"nprime", jint(nprime)}}},
	    {"degree_sigma", jint(degree_sigma(ring))},
	    {"canonical_gamma", jclass(k)},
	    {"section_divisors", {{"e1", jclass(e.e1)}, {"e2", jclass(e.e2)}}},
	    {"contracted_curves", {{"kappa1", jclass(c.kappa1)}, {"kappa2", jclass(c.kappa2)}, {"fibre", jclass(c.fibre)}}},
	    {"intersection_numbers",
	     {{"H^3", jrat(ring.integrate(ring.power(h, 3)))},
	      {"H^2*alpha", jrat(ring.integrate(ring.multiply(ring.power(h, 2), ring.alpha())))},
	      {"H^2*beta", jrat(ring.integrate(ring.multiply(ring.power(h, 2), ring.beta())))},
	      {"K^3", jrat(ring.integrate(ring.power(k, 3)))},
	      {"E1^3", jrat(ring.integrate(ring.power(e.e1, 3)))},
	      {"E2^3", jrat(ring.integrate(ring.power(e.e2, 3)))},
	      {"E1*E2", jclass(ring.multiply(e.e1, e.e2))},
	      {"E1*E2*H", jrat(ring.integrate(ring.multiply(ring.multiply(e.e1, e.e2), h)))}}},
	    {"fano",
	     {{"anti_on_kappa1", jrat(fano.anti_on_kappa1)},
	      {"anti_on_kappa2", jrat(fano.anti_on_kappa2)},
	      {"anti_on_fibre", jrat(fano.anti_on_fibre)},
	      {"anti_cubed", jrat(fano.anti_cubed)},
	      {"gamma_fano", fano.gamma_fano},
	      {"gamma_weak_fano", fano.gamma_weak_fano},
	      {"sigma_anticanonical_multiple", jrat(fano.sigma_anticanonical_multiple)},
	      {"sigma_fano", fano.sigma_fano}}},
	    {"pullback_canonical_sigma", jclass(pullback_canonical_sigma(ring))},
	    {"pullback_carpet", jclass(pullback_carpet(ring))},
	    {"anticanonical_carpet", verify_anticanonical_carpet(ring)},
	    {"published_claims",
	     {{"entries", entries},
	      {"discrepancies", discrepancies},
	      {"consistent_under_relabeling", claims.consistent_under_relabeling()},
	      {"all_entries_match", claims.all_entries_match()}}},
	};
	doc.provenance = {
	    published("/results/degree_sigma", "deg Sigma = n0 n'"),
	    published("/results/canonical_gamma", "K = -2H + (n0-2) alpha + (n'-2) beta"),
	    published("/results/fano/sigma_fano", "some multiple of -K_Sigma is ample"),
	    published("/results/published_claims", "entries restated from the published tables"),
	    derived("/results/intersection_numbers", "Grothendieck relation in the Chow ring"),
	    derived("/results/fano/gamma_fano", "positivity on the torus-invariant curves"),
	    derived("/results/anticanonical_carpet", "pullback of K_Sigma + carpet vanishes"),
	};
	return doc;
}

ReportDocument cmd_lattice(ScrollModel model, const Integer &n)
{
	const HyperellipticModel m = hyperelliptic_model(model, n);

	ReportDocument doc;
	doc.command = "lattice";
	doc.args = {{"model", to_string(model)}, {"n", jint(n)}};
	doc.results = {
	    {"record", jmodel(m)},
	    {"lattice", jlattice(lattice_for(model))},
	    {"pencil_lattice", jlattice(polarization_pencil_lattice(m.genus))},
	    {"two_component_condition", two_component_condition(m.genus)},
	};
	doc.provenance = {
	    published("/results/record", "polarization, genus and divisibility of the hyperelliptic model"),
	    published("/results/pencil_lattice", "Gram matrix ((2g-2, 2), (2, 0))"),
	    derived("/results/two_component_condition", "g > 9 and g = 1 mod 4"),
	};
	return doc;
}

std::string render_json(const ReportDocument &doc)
{
	return json(doc).dump(2) + "\n";
}

namespace {

bool is_range(const json &j)
{
	return j.is_object() && j.size() == 3 && j.contains("lo") && j.contains("hi") && j.contains("exact");
}

std::string scalar_text(const json &j)
{
	if (j.is_string())
		return j.get<std::string>();
	if (j.is_null())
		return "none";
	if (j.is_object() && j.empty())
		return "{}";
	if (is_range(j))
	{
		std::string s = "[" + scalar_text(j["lo"]) + ", ";
		s += j["hi"].is_null() ? "inf)" : scalar_text(j["hi"]) + "]";
		return s;
	}
	if (j.is_array())
	{
		std::string s = "[";
		for (std::size_t i = 0; i < j.size(); ++i)
			s += (i ? ", " : "") + scalar_text(j[i]);
		return s + "]";
	}
	return j.dump();
}

bool inline_value(const json &j)
{
	if (is_range(j))
		return true;
	if (j.is_array())
		return std::all_of(j.begin(), j.end(), [](const json &e) { return !e.is_structured() || is_range(e) ||
		                                                                 (e.is_array() && inline_value(e)); });
	return !j.is_object() || j.empty();
}

struct TextWriter
{
	std::ostringstream os;
	bool color;

	std::string heading(const std::string &s) const { return color ? "\x1b[1m" + s + "\x1b[0m" : s; }

	void value(const std::string &key, const json &j, int depth)
	{
		const std::string pad(2 * depth, ' ');
		if (inline_value(j))
		{
			os << pad << key << ": " << scalar_text(j) << "\n";
			return;
		}
		os << pad << heading(key) << ":\n";
		if (j.is_object())
		{
			for (auto it = j.begin(); it != j.end(); ++it)
				value(it.key(), it.value(), depth + 1);
		}
		else
		{
			for (std::size_t i = 0; i < j.size(); ++i)
				value("- #" + std::to_string(i + 1), j[i], depth + 1);
		}
	}
};

void sweep_table(TextWriter &w, const json &rows)
{
	const std::vector<std::string> cols = {"a", "b", "n", "genus", "chi_normal", "h0", "h1", "smooth_point"};
	std::vector<std::vector<std::string>> cells;
	for (const json &r : rows)
	{
		std::vector<std::string> line;
		for (const auto &c : cols)
			line.push_back(scalar_text(r[c]));
		cells.push_back(std::move(line));
	}
	std::vector<std::size_t> width;
	for (std::size_t c = 0; c < cols.size(); ++c)
	{
		std::size_t wdt = cols[c].size();
		for (const auto &line : cells)
			wdt = std::max(wdt, line[c].size());
		width.push_back(wdt);
	}
	auto emit = [&](const std::vector<std::string> &line) {
		std::string s;
		for (std::size_t c = 0; c < line.size(); ++c)
		{
			s += line[c] + std::string(width[c] - line[c].size(), ' ');
			if (c + 1 < line.size())
				s += "  ";
		}
		while (!s.empty() && s.back() == ' ')
			s.pop_back();
		return s;
	};
	w.os << "  " << w.heading(emit(cols)) << "\n";
	for (const auto &line : cells)
		w.os << "  " << emit(line) << "\n";
}

void flatten(const json &j, const std::string &path, std::vector<std::pair<std::string, std::string>> &out)
{
	if (j.is_object())
	{
		for (auto it = j.begin(); it != j.end(); ++it)
			flatten(it.value(), path + "/" + it.key(), out);
	}
	else if (j.is_array())
	{
		for (std::size_t i = 0; i < j.size(); ++i)
			flatten(j[i], path + "/" + std::to_string(i), out);
	}
	else
	{
		out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
	}
}

} // namespace

std::string render_text(const ReportDocument &doc, bool color)
{
	TextWriter w{{}, color};
	w.os << w.heading("carpetcalc " + doc.command);
	for (auto it = doc.args.begin(); it != doc.args.end(); ++it)
		w.os << " " << it.key() << "=" << scalar_text(it.value());
	w.os << "\n";
	w.os << "schema_version: " << doc.schema_version << "\n";

	if (doc.command == "sweep")
	{
		w.os << w.heading("results") << ":\n";
		for (auto it = doc.results.begin(); it != doc.results.end(); ++it)
			if (it.key() != "rows")
				w.value(it.key(), it.value(), 1);
		w.os << "  " << w.heading("rows") << ":\n";
		sweep_table(w, doc.results.at("rows"));
	}
	else
	{
		w.value("results", doc.results, 0);
	}

	w.os << w.heading("provenance") << ":\n";
	for (const auto &p : doc.provenance)
		w.os << "  " << p.path << " [" << p.source << "] " << p.note << "\n";
	return w.os.str();
}

std::string render_tsv(const ReportDocument &doc)
{
	std::ostringstream os;
	if (doc.command == "sweep")
	{
		os << "a\tb\tn\tgenus\tchi_normal\th0_lo\th0_hi\th1_lo\th1_hi\tsmooth_point\n";
		for (const json &r : doc.results.at("rows"))
		{
			auto hi = [](const json &range) { return range["hi"].is_null() ? std::string("inf") : range["hi"].dump(); };
			os << r["a"] << '\t' << r["b"] << '\t' << r["n"] << '\t' << r["genus"] << '\t' << r["chi_normal"] << '\t'
			   << r["h0"]["lo"] << '\t' << hi(r["h0"]) << '\t' << r["h1"]["lo"] << '\t' << hi(r["h1"]) << '\t'
			   << r["smooth_point"] << "\n";
		}
		return os.str();
	}
	std::vector<std::pair<std::string, std::string>> rows;
	flatten(doc.results, "", rows);
	os << "path\tvalue\n";
	for (const auto &[path, value] : rows)
		os << path << '\t' << value << "\n";
	return os.str();
}

} // namespace carpetcalc
