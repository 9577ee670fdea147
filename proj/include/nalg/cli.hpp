#ifndef NALG_CLI_HPP
#define NALG_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "duality.hpp"
#include "io.hpp"
#include "products.hpp"

namespace nalg {

enum ExitCode : int
{
	kExitOk = 0,
	kExitPropertyFailed = 1, // reserved
	kExitInputError = 2,
};

namespace cli_detail {

inline Object load(std::string const &path)
{
	Object o = parse_object(read_file(path));
	auto stem = std::filesystem::path(path).stem().string();
	std::visit(
	    [&](auto &x) {
		    if (x.name().empty())
			    x.set_name(stem);
	    },
	    o);
	return o;
}

inline Algebra load_algebra(std::string const &path)
{
	Object o = load(path);
	if (!std::holds_alternative<Algebra>(o))
		throw FormatError(path + ": expected an algebra document");
	return std::get<Algebra>(std::move(o));
}

inline Cogebra load_cogebra(std::string const &path)
{
	Object o = load(path);
	if (!std::holds_alternative<Cogebra>(o))
		throw FormatError(path + ": expected a cogebra document");
	return std::get<Cogebra>(std::move(o));
}

inline std::string report(Object const &o, bool as_json)
{
	if (auto const *a = std::get_if<Algebra>(&o))
		return as_json ? report_to_json(classify(*a), *a).dump(2) + "\n" : report_to_text(classify(*a), *a);
	auto const &c = std::get<Cogebra>(o);
	return as_json ? report_to_json(classify(c), c).dump(2) + "\n" : report_to_text(classify(c), c);
}

inline std::string annihilator_report(Algebra const &a, bool as_json)
{
	Subspace ann = annihilator(a);
	if (as_json)
	{
		nlohmann::ordered_json j;
		j["dim"] = ann.dim();
		j["basis"] = nlohmann::ordered_json::array();
		for (auto const &b : ann.basis())
			j["basis"].push_back(format_ga_expr(GroupAlgElem::from_vec(b)));
		return j.dump(2) + "\n";
	}
	std::ostringstream os;
	os << "annihilator dim " << ann.dim() << "\n";
	for (auto const &b : ann.basis())
		os << "  " << format_ga_expr(GroupAlgElem::from_vec(b)) << "\n";
	return os.str();
}

inline std::string s3_report(std::string const &what, GroupAlgElem const &v)
{
	std::ostringstream os;
	if (what == "orbit")
	{
		auto const &names = kS3Names;
		auto elems = orbit(v);
		for (std::size_t s = 0; s < elems.size(); ++s)
			os << names[s] << ": " << format_ga_expr(elems[s]) << "\n";
		return os.str();
	}
	Subspace f = orbit_span(v);
	if (what == "span")
	{
		os << "dim " << f.dim() << "\n";
		for (auto const &b : f.basis())
			os << "  " << format_ga_expr(GroupAlgElem::from_vec(b)) << "\n";
		return os.str();
	}
	auto m = maschke_multiplicities(f);
	os << "dim " << f.dim() << "\n";
	os << "trivial " << m.trivial << "\nsign " << m.sign << "\nstandard " << m.standard << "\n";
	return os.str();
}

} // namespace cli_detail

/// Runs the command line; args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
	using namespace cli_detail;
	CLI::App app{"exact Sigma3-associative algebra toolkit", "nalg"};
	app.require_subcommand(1);
	std::string catalog_dir = kDefaultCatalogDir;
	app.add_option("--catalog-dir", catalog_dir, "catalog directory");

	std::string file, file_b, out_path, expr, name;
	bool as_json = false, literal_bang = false, write = false;

	auto *check = app.add_subcommand("check", "classification report");
	check->add_option("file", file)->required();
	check->add_flag("--json", as_json);

	auto *dualize = app.add_subcommand("dualize", "dual algebra or cogebra");
	dualize->add_option("file", file)->required();
	dualize->add_option("-o", out_path)->required();

	auto *tensor = app.add_subcommand("tensor", "tensor product of algebras");
	tensor->add_option("fileA", file)->required();
	tensor->add_option("fileB", file_b)->required();
	tensor->add_option("-o", out_path)->required();

	auto *convolve = app.add_subcommand("convolve", "convolution algebra Hom(C, A)");
	convolve->add_option("cogebra", file)->required();
	convolve->add_option("algebra", file_b)->required();
	convolve->add_option("-o", out_path)->required();
	convolve->add_flag("--literal-bang", literal_bang, "literal G_i! reading for the hypothesis report");

	auto *ann = app.add_subcommand("annihilator", "{v : A o Phi_v = 0}");
	ann->add_option("file", file)->required();
	ann->add_flag("--json", as_json);

	auto *s3 = app.add_subcommand("s3", "group algebra of S3");
	s3->require_subcommand(1);
	std::vector<CLI::App *> s3_cmds;
	for (char const *what : {"orbit", "span", "decompose"})
	{
		auto *c = s3->add_subcommand(what);
		c->add_option("expr", expr)->required();
		s3_cmds.push_back(c);
	}

	auto *cat = app.add_subcommand("catalog", "committed instances");
	cat->require_subcommand(1);
	auto *cat_list = cat->add_subcommand("list");
	auto *cat_emit = cat->add_subcommand("emit");
	cat_emit->add_option("name", name)->required();
	cat_emit->add_option("-o", out_path)->required();
	auto *cat_regen = cat->add_subcommand("regen");
	cat_regen->add_flag("--write", write, "rewrite the committed files");

	std::reverse(args.begin(), args.end());
	try
	{
		app.parse(args);
	}
	catch (CLI::CallForHelp const &)
	{
		out << app.help();
		return kExitOk;
	}
	catch (CLI::CallForAllHelp const &)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return kExitOk;
	}
	catch (CLI::ParseError const &e)
	{
		err << "nalg: " << e.what() << "\n";
		return kExitInputError;
	}

	try
	{
		if (*check)
			out << report(load(file), as_json);
		else if (*dualize)
		{
			Object o = load(file);
			Object d = std::holds_alternative<Algebra>(o) ? Object(dualize_algebra(std::get<Algebra>(o)))
			                                              : Object(dualize_cogebra(std::get<Cogebra>(o)));
			write_file(out_path, print_object(d));
		}
		else if (*tensor)
		{
			Algebra t = tensor_algebras(load_algebra(file), load_algebra(file_b));
			write_file(out_path, print_algebra(t));
			out << "dim " << t.dim() << "\n";
		}
		else if (*convolve)
		{
			Cogebra c = load_cogebra(file);
			Algebra a = load_algebra(file_b);
			Algebra e = convolution_algebra(c, a);
			write_file(out_path, print_algebra(e));
			auto reading = literal_bang ? BangReading::literal : BangReading::normalized;
			out << "dim " << e.dim() << "\n";
			for (int i = 2; i <= 6; ++i)
			{
				if (!gi_check(a, SubgroupId(i)) || !gi_bang_cocheck(c, i, reading))
					continue;
				out << "G" << i << " hypothesis (" << (literal_bang ? "literal" : "normalized")
				    << "): result " << (gi_check(e, SubgroupId(i)) ? "passes" : "fails") << "\n";
			}
		}
		else if (*ann)
			out << annihilator_report(load_algebra(file), as_json);
		else if (*s3)
		{
			for (auto *c : s3_cmds)
				if (*c)
					out << s3_report(c->get_name(), parse_ga_expr(expr));
		}
		else if (*cat_list)
		{
			for (auto const &e : catalog_entries())
				out << e.name << "  " << e.kind << "  " << e.oracle << "\n";
		}
		else if (*cat_emit)
		{
			Catalog catalog(catalog_dir);
			write_file(out_path, print_object(catalog.get(name)));
		}
		else if (*cat_regen)
		{
			RegenReport r = regenerate(catalog_dir, write);
			for (auto const &f : r.written)
				out << "wrote " << f << "\n";
			for (auto const &f : r.reproduced)
				out << "reproduced " << f << "\n";
			for (auto const &f : r.diverged)
				err << "diverged " << f << "\n";
			out << std::fixed << std::setprecision(3) << "seconds " << r.seconds << "\n";
			if (!r.ok())
			{
				err << "nalg: catalog regeneration diverged from " << catalog_dir << "\n";
				return kExitInputError;
			}
		}
	}
	catch (std::exception const &e)
	{
		err << "nalg: " << e.what() << "\n";
		return kExitInputError;
	}
	return kExitOk;
}

inline int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
	std::vector<std::string> args;
	for (int i = 1; i < argc; ++i)
		args.emplace_back(argv[i]);
	return run_cli(std::move(args), out, err);
}

} // namespace nalg

#endif
