#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "carpetcalc/numbers.hpp"
#include "carpetcalc/picard_lattice.hpp"

namespace carpetcalc {

inline constexpr const char *kSchemaVersion = "carpetcalc.report.v1";

/// Where a reported value comes from: asserted in the published results and
/// reproduced here, or only derived by this tool.
struct ProvenanceNote
{
	std::string path; // JSON pointer into the document
	std::string source; // "published" or "derived"
	std::string note;

	friend bool operator==(const ProvenanceNote &, const ProvenanceNote &) = default;
};

struct ReportDocument
{
	std::string schema_version = kSchemaVersion;
	std::string command;
	nlohmann::json args = nlohmann::json::object();
	nlohmann::json results = nlohmann::json::object();
	std::vector<ProvenanceNote> provenance;

	friend bool operator==(const ReportDocument &, const ReportDocument &) = default;
};

void to_json(nlohmann::json &j, const ProvenanceNote &p);
void from_json(const nlohmann::json &j, ProvenanceNote &p);
void to_json(nlohmann::json &j, const ReportDocument &doc);
void from_json(const nlohmann::json &j, ReportDocument &doc);

ReportDocument cmd_cohomology(const Integer &n, const Integer &x, const Integer &y);
ReportDocument cmd_carpet(std::int64_t a, std::int64_t b);
ReportDocument cmd_sweep(std::int64_t a_max);
ReportDocument cmd_join(const Integer &n0, const Integer &nprime);
ReportDocument cmd_lattice(ScrollModel model, const Integer &n);

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string render_json(const ReportDocument &doc);
/// Indented `key: value` listing (a table for sweeps). `color` adds ANSI bold to headings.
std::string render_text(const ReportDocument &doc, bool color);
/// Tab-separated: the sweep table, or `path<TAB>value` rows for other commands.
std::string render_tsv(const ReportDocument &doc);

} // namespace carpetcalc
