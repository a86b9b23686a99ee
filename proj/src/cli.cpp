#include "carpetcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "carpetcalc/numbers.hpp"
#include "carpetcalc/report.hpp"

namespace carpetcalc::cli {

namespace {

Integer parse_integer(const std::string &name, const std::string &text)
{
	static const std::regex integer_re("[+-]?[0-9]+");
	if (!std::regex_match(text, integer_re))
		throw InvalidInput(name + ": expected an integer, got '" + text + "'");
	return Integer(text.front() == '+' ? text.substr(1) : text);
}

std::int64_t parse_int64(const std::string &name, const std::string &text)
{
	return to_int64(parse_integer(name, text));
}

struct Output
{
	std::string format = "json";
	std::string path;
};

void add_output_options(CLI::App *sub, Output &o)
{
	sub->add_option("--format", o.format, "Output format")
	    ->check(CLI::IsMember({"json", "text", "tsv"}))
	    ->capture_default_str();
	sub->add_option("--out", o.path, "Write the report to PATH instead of stdout");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, bool color)
{
	CLI::App app{"Cohomology, Hilbert-point and lattice invariants of K3 carpets on rational normal scrolls",
	             "carpetcalc"};
	app.require_subcommand(1);

	Output o;
	std::function<ReportDocument()> build;
	std::vector<std::string> p(3);

	auto *coh = app.add_subcommand("cohomology", "h^i of O(x C0 + y f) on the Hirzebruch surface F_n");
	coh->add_option("n", p[0], "n >= 0")->required();
	coh->add_option("x", p[1], "coefficient of C0")->required();
	coh->add_option("y", p[2], "coefficient of f")->required();
	add_output_options(coh, o);
	coh->callback([&] {
		build = [&] {
			return cmd_cohomology(parse_integer("n", p[0]), parse_integer("x", p[1]), parse_integer("y", p[2]));
		};
	});

	auto *carpet = app.add_subcommand("carpet", "normal-bundle cohomology and components for the carpet on S(a,b)");
	carpet->add_option("a", p[0], "a >= b")->required();
	carpet->add_option("b", p[1], "b >= 1")->required();
	add_output_options(carpet, o);
	carpet->callback([&] { build = [&] { return cmd_carpet(parse_int64("a", p[0]), parse_int64("b", p[1])); }; });

	auto *sweep = app.add_subcommand("sweep", "smoothness table over 1 <= b <= a <= a_max");
	sweep->add_option("a_max", p[0], "a_max >= 1")->required();
	add_output_options(sweep, o);
	sweep->callback([&] { build = [&] { return cmd_sweep(parse_int64("a_max", p[0])); }; });

	auto *join = app.add_subcommand("join", "Chow ring and Fano data of the join threefold");
	join->add_option("n0", p[0], "n0 >= 1")->required();
	join->add_option("nprime", p[1], "n' >= 1")->required();
	add_output_options(join, o);
	join->callback([&] {
		build = [&] { return cmd_join(parse_integer("n0", p[0]), parse_integer("nprime", p[1])); };
	});

	auto *lattice = app.add_subcommand("lattice", "hyperelliptic polarization on F0, F1 or F4");
	lattice->add_option("model", p[0], "F0, F1 or F4")->required();
	lattice->add_option("n", p[1], "F0: n >= 1, F1: n >= 2, F4: n >= 5")->required();
	add_output_options(lattice, o);
	lattice->callback([&] {
		build = [&] { return cmd_lattice(parse_scroll_model(p[0]), parse_integer("n", p[1])); };
	});

	try
	{
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	}
	catch (const CLI::ParseError &e)
	{
		const int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitUsage;
	}

	try
	{
		const ReportDocument doc = build();
		std::string text;
		if (o.format == "json")
			text = render_json(doc);
		else if (o.format == "tsv")
			text = render_tsv(doc);
		else
			text = render_text(doc, color && o.path.empty());

		if (o.path.empty())
		{
			out << text;
			return kExitOk;
		}
		std::ofstream file(o.path, std::ios::binary);
		if (!file)
		{
			err << "carpetcalc: cannot open '" << o.path << "' for writing\n";
			return kExitUsage;
		}
		file << text;
		return kExitOk;
	}
	catch (const InvalidInput &e)
	{
		err << "carpetcalc: " << e.what() << "\n";
		return kExitUsage;
	}
	catch (const InvariantViolation &e)
	{
		err << "carpetcalc: internal invariant violated: " << e.what() << "\n";
		return kExitInvariant;
	}
	catch (const std::exception &e)
	{
		err << "carpetcalc: internal error: " << e.what() << "\n";
		return kExitInvariant;
	}
}

bool color_enabled(const char *no_color_env, bool stdout_is_tty)
{
	return no_color_env == nullptr && stdout_is_tty;
}

} // namespace carpetcalc::cli
