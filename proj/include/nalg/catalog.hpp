#ifndef NALG_CATALOG_HPP
#define NALG_CATALOG_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cogebra.hpp"
#include "duality.hpp"
#include "io.hpp"

#ifndef NALG_CATALOG_DIR
#define NALG_CATALOG_DIR "data/catalog"
#endif

namespace nalg {

inline constexpr char const *kDefaultCatalogDir = NALG_CATALOG_DIR;

// ---------------------------------------------------------------------------
// exhaustive search over small structure constants

/// Search space of algebras with constants in {-1, 0, 1}. Free positions are
/// all (i,j,k) in lexicographic order or, for antisymmetric spaces, the
/// (i,j,k) with i < j (then C(j,i,k) = -C(i,j,k)). Candidates are enumerated
/// lexicographically over the tuple of free constants, last position fastest,
/// with digit order 0 < 1 < -1; the first candidate passing the predicate wins.
struct SearchSpace
{
	std::size_t dim = 2;
	bool antisymmetric = false;

	std::vector<Key3> positions() const
	{
		std::vector<Key3> out;
		for (std::size_t i = 0; i < dim; ++i)
			for (std::size_t j = 0; j < dim; ++j)
				for (std::size_t k = 0; k < dim; ++k)
					if (!antisymmetric || i < j)
						out.push_back({i, j, k});
		return out;
	}

	std::uint64_t size() const
	{
		std::uint64_t n = 1;
		for (std::size_t p = 0; p < positions().size(); ++p)
			n *= 3;
		return n;
	}

	Algebra candidate(std::uint64_t index) const
	{
		static constexpr int digit_value[3] = {0, 1, -1};
		auto pos = positions();
		Algebra a(dim);
		for (std::size_t p = pos.size(); p-- > 0;)
		{
			int v = digit_value[index % 3];
			index /= 3;
			if (v == 0)
				continue;
			auto [i, j, k] = pos[p];
			a.set(i, j, k, v);
			if (antisymmetric)
				a.set(j, i, k, -v);
		}
		return a;
	}
};

struct SearchHit
{
	Algebra algebra;
	std::uint64_t candidate = 0; // 0-based position in the enumeration
};

inline std::optional<SearchHit> search_first(SearchSpace const &space,
                                             std::function<bool(Algebra const &)> const &pred)
{
	std::uint64_t n = space.size();
	for (std::uint64_t c = 0; c < n; ++c)
	{
		Algebra a = space.candidate(c);
		if (pred(a))
			return SearchHit{std::move(a), c};
	}
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// instances

namespace catalog_detail {

inline Algebra mat2()
{
	// basis E11, E12, E21, E22 with E_ab E_cd = delta_bc E_ad
	Algebra a(4);
	auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
	for (std::size_t p = 0; p < 2; ++p)
		for (std::size_t q = 0; q < 2; ++q)
			for (std::size_t s = 0; s < 2; ++s)
				a.set(idx(p, q), idx(q, s), idx(p, s), 1);
	a.set_basis_names({"E11", "E12", "E21", "E22"});
	a.set_unit(Vec{1, 0, 0, 1});
	return a;
}

inline Algebra trunc_poly2()
{
	Algebra a(2);
	a.set(0, 0, 0, 1);
	a.set(0, 1, 1, 1);
	a.set(1, 0, 1, 1);
	a.set_basis_names({"1", "x"});
	a.set_unit(Vec{1, 0});
	return a;
}

inline Algebra k1()
{
	Algebra a(1);
	a.set(0, 0, 0, 1);
	a.set_unit(Vec{1});
	return a;
}

inline Algebra sl2()
{
	// [h,e] = 2e, [h,f] = -2f, [e,f] = h
	Algebra a(3);
	std::size_t h = 0, e = 1, f = 2;
	a.set(h, e, e, 2), a.set(e, h, e, -2);
	a.set(h, f, f, -2), a.set(f, h, f, 2);
	a.set(e, f, h, 1), a.set(f, e, h, -1);
	a.set_basis_names({"h", "e", "f"});
	return a;
}

inline Algebra searched(SearchSpace const &space, std::function<bool(Algebra const &)> const &pred,
                        std::string const &what)
{
	auto hit = search_first(space, pred);
	if (!hit)
		throw std::runtime_error("catalog search found no " + what);
	return std::move(hit->algebra);
}

} // namespace catalog_detail

struct CatalogEntry
{
	std::string name;
	std::string kind; // "algebra" or "cogebra"
	std::string oracle;
	std::string base; // for duals: the algebra this one dualizes
};

inline std::vector<CatalogEntry> const &catalog_entries()
{
	static const std::vector<CatalogEntry> entries = [] {
		std::vector<CatalogEntry> algs = {
		    {"mat2", "algebra", "fixed: 2x2 matrix units E11,E12,E21,E22 with unit E11+E22", ""},
		    {"trunc_poly2", "algebra", "fixed: K[x]/(x^2) on basis 1,x", ""},
		    {"k1", "algebra", "fixed: the ground field, e1 e1 = e1, unit e1", ""},
		    {"vinberg2", "algebra", "search dim 2, constants in {-1,0,1}: first with G2 and not G1", ""},
		    {"prelie2", "algebra", "search dim 2, constants in {-1,0,1}: first with G3 and not G1", ""},
		    {"g4_2", "algebra", "search dim 2, constants in {-1,0,1}: first with G4 and not G1", ""},
		    {"sl2", "algebra", "fixed: [h,e]=2e, [h,f]=-2f, [e,f]=h; verified antisymmetric and G5", ""},
		    {"g5_only", "algebra",
		     "search dim 2, constants in {-1,0,1}: first with G5, not G1, not antisymmetric", ""},
		    {"g2bang3", "algebra", "search dim 3, constants in {-1,0,1}: first G2!-algebra that is not commutative",
		     ""},
		    {"nonjacobi3", "algebra",
		     "search antisymmetric dim 3, constants C(i,j,k), i<j, in {-1,0,1}: first failing Jacobi", ""},
		    {"generic3", "algebra",
		     "search dim 3, constants in {-1,0,1}: first whose associator annihilator is {0}", ""},
		};
		std::vector<CatalogEntry> all = algs;
		for (auto const &a : algs)
			all.push_back({a.name + "_dual", "cogebra", "dualize_algebra(" + a.name + ")", a.name});
		return all;
	}();
	return entries;
}

inline CatalogEntry const &catalog_entry(std::string const &name)
{
	for (auto const &e : catalog_entries())
		if (e.name == name)
			return e;
	throw std::invalid_argument("unknown catalog instance '" + name + "'");
}

/// Runs the construction or search oracle for one algebra instance.
inline Algebra build_catalog_algebra(std::string const &name)
{
	using namespace catalog_detail;
	auto gi = [](int i) { return [i](Algebra const &a) { return gi_check(a, SubgroupId(i)); }; };
	auto not_assoc = [](Algebra const &a) { return !is_associative(a); };
	Algebra a(1);
	if (name == "mat2")
		a = mat2();
	else if (name == "trunc_poly2")
		a = trunc_poly2();
	else if (name == "k1")
		a = k1();
	else if (name == "sl2")
	{
		a = sl2();
		if (!is_antisymmetric(a) || !gi_check(a, SubgroupId(5)))
			throw std::logic_error("sl2 constants fail verification");
	}
	else if (name == "vinberg2" || name == "prelie2" || name == "g4_2")
	{
		int i = name == "vinberg2" ? 2 : (name == "prelie2" ? 3 : 4);
		a = searched({2, false}, [&](Algebra const &x) { return gi(i)(x) && not_assoc(x); }, name);
	}
	else if (name == "g5_only")
		a = searched(
		    {2, false}, [&](Algebra const &x) { return gi(5)(x) && not_assoc(x) && !is_antisymmetric(x); }, name);
	else if (name == "g2bang3")
		a = searched({3, false}, [](Algebra const &x) { return !is_commutative(x) && gi_bang_check(x, 2); }, name);
	else if (name == "nonjacobi3")
		a = searched({3, true}, [](Algebra const &x) { return !jacobi_check(x); }, name);
	else if (name == "generic3")
		a = searched({3, false}, [](Algebra const &x) { return annihilator(x).dim() == 0; }, name);
	else
		throw std::invalid_argument("unknown catalog algebra '" + name + "'");
	a.set_name(name);
	return a;
}

/// Builds every instance from scratch, in catalog order.
inline std::vector<std::pair<CatalogEntry, Object>> build_catalog()
{
	std::vector<std::pair<CatalogEntry, Object>> out;
	std::map<std::string, Algebra> algebras;
	for (auto const &e : catalog_entries())
	{
		if (e.kind == "algebra")
		{
			Algebra a = build_catalog_algebra(e.name);
			algebras.emplace(e.name, a);
			out.emplace_back(e, std::move(a));
		}
		else
		{
			Cogebra c = dualize_algebra(algebras.at(e.base));
			c.set_name(e.name);
			out.emplace_back(e, std::move(c));
		}
	}
	return out;
}

inline std::string manifest_text(std::vector<std::pair<CatalogEntry, Object>> const &built)
{
	nlohmann::ordered_json doc = nlohmann::ordered_json::array();
	for (auto const &[entry, obj] : built)
	{
		nlohmann::ordered_json j;
		j["name"] = entry.name;
		j["kind"] = entry.kind;
		j["file"] = entry.name + ".json";
		j["oracle"] = entry.oracle;
		if (auto const *a = std::get_if<Algebra>(&obj))
			j["classification"] = report_to_json(classify(*a), *a);
		else
		{
			auto const &c = std::get<Cogebra>(obj);
			j["classification"] = report_to_json(classify(c), c);
		}
		doc.push_back(std::move(j));
	}
	return doc.dump(2) + "\n";
}

inline std::string read_file(std::filesystem::path const &p)
{
	std::ifstream in(p, std::ios::binary);
	if (!in)
		throw std::runtime_error("cannot read " + p.string());
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

inline void write_file(std::filesystem::path const &p, std::string const &text)
{
	std::ofstream out(p, std::ios::binary);
	if (!out)
		throw std::runtime_error("cannot write " + p.string());
	out << text;
}

/// Committed catalog instances, read from a directory of documents.
class Catalog
{
public:
	explicit Catalog(std::filesystem::path dir = kDefaultCatalogDir) : dir_(std::move(dir)) {}

	std::filesystem::path const &dir() const { return dir_; }

	std::vector<std::string> names() const
	{
		std::vector<std::string> out;
		for (auto const &e : catalog_entries())
			out.push_back(e.name);
		return out;
	}

	Object get(std::string const &name) const
	{
		catalog_entry(name);
		Object o = parse_object(read_file(dir_ / (name + ".json")));
		std::visit([&](auto &x) { x.set_name(name); }, o);
		return o;
	}

	Algebra algebra(std::string const &name) const { return std::get<Algebra>(get(name)); }
	Cogebra cogebra(std::string const &name) const { return std::get<Cogebra>(get(name)); }

private:
	std::filesystem::path dir_;
};

struct RegenReport
{
	std::vector<std::string> reproduced;
	std::vector<std::string> diverged; // includes missing files
	std::vector<std::string> written;
	double seconds = 0;

	bool ok() const { return diverged.empty(); }
};

/// Re-runs every oracle and compares the canonical text with the committed
/// files byte for byte (manifest.json included). With write = true the files
/// are (re)written instead.
inline RegenReport regenerate(std::filesystem::path const &dir, bool write = false)
{
	auto t0 = std::chrono::steady_clock::now();
	RegenReport report;
	auto built = build_catalog();
	std::vector<std::pair<std::string, std::string>> files;
	for (auto const &[entry, obj] : built)
		files.emplace_back(entry.name + ".json", print_object(obj));
	files.emplace_back("manifest.json", manifest_text(built));
	for (auto const &[file, text] : files)
	{
		auto path = dir / file;
		if (write)
		{
			write_file(path, text);
			report.written.push_back(file);
			continue;
		}
		if (std::filesystem::exists(path) && read_file(path) == text)
			report.reproduced.push_back(file);
		else
			report.diverged.push_back(file);
	}
	report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return report;
}

} // namespace nalg

#endif
