#ifndef NALG_IO_HPP
#define NALG_IO_HPP

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "algebra.hpp"
#include "cogebra.hpp"
#include "sym3.hpp"

namespace nalg {

/// Malformed input document or expression.
class FormatError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

using Object = std::variant<Algebra, Cogebra>;

// ---------------------------------------------------------------------------
// K[S3] expressions

/// Parses `[sign] [rational '*'] name { ('+'|'-') [rational '*'] name }` with
/// names id, t12, t13, t23, c1, c2. Whitespace is ignored. The single token
/// "0" denotes the zero element.
inline GroupAlgElem parse_ga_expr(std::string_view text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s.push_back(ch);
	if (s == "0")
		return {};
	if (s.empty())
		throw FormatError("empty expression");

	GroupAlgElem out;
	std::size_t pos = 0;
	auto fail = [&](std::string const &what) {
		throw FormatError(what + " at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
	};
	bool first = true;
	while (pos < s.size())
	{
		Rational sgn = 1;
		if (s[pos] == '+' || s[pos] == '-')
		{
			if (s[pos] == '-')
				sgn = -1;
			++pos;
		}
		else if (!first)
			fail("expected '+' or '-'");
		first = false;

		Rational coef = 1;
		if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
		{
			std::size_t start = pos;
			while (pos < s.size() && s[pos] != '*')
				++pos;
			if (pos == s.size())
				fail("coefficient without '*'");
			try
			{
				coef = Rational::parse(std::string_view(s).substr(start, pos - start));
			}
			catch (std::exception const &e)
			{
				pos = start;
				fail(std::string("malformed coefficient (") + e.what() + ")");
			}
			++pos;
		}

		std::size_t start = pos;
		while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
			++pos;
		std::string_view name = std::string_view(s).substr(start, pos - start);
		std::size_t idx = kS3Names.size();
		for (std::size_t i = 0; i < kS3Names.size(); ++i)
			if (kS3Names[i] == name)
				idx = i;
		if (idx == kS3Names.size())
		{
			pos = start;
			fail("unknown token '" + std::string(name) + "'");
		}
		out[idx] += sgn * coef;
	}
	return out;
}

/// Inverse of parse_ga_expr, e.g. "id - t12 - t13 - t23 + c1 + c2".
inline std::string format_ga_expr(GroupAlgElem const &v)
{
	std::string out;
	for (std::size_t i = 0; i < 6; ++i)
	{
		Rational c = v[i];
		if (c.is_zero())
			continue;
		bool neg = c.sign() < 0;
		Rational mag = neg ? -c : c;
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		if (mag != Rational(1))
			out += mag.str() + "*";
		out += kS3Names[i];
	}
	return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// algebra / cogebra documents

namespace detail {

using json = nlohmann::json;

inline json parse_json(std::string_view text)
{
	try
	{
		return json::parse(text.begin(), text.end());
	}
	catch (json::parse_error const &e)
	{
		std::string msg = e.what();
		auto at = msg.find("parse error");
		throw FormatError("syntax error: " + (at == std::string::npos ? msg : msg.substr(at)));
	}
}

inline void only_keys(json const &obj, std::string const &where, std::set<std::string> const &allowed)
{
	if (!obj.is_object())
		throw FormatError(where + ": expected an object");
	for (auto const &[k, _] : obj.items())
		if (!allowed.count(k))
			throw FormatError(where + ": unknown field '" + k + "'");
}

inline json const &required(json const &obj, std::string const &where, char const *key)
{
	auto it = obj.find(key);
	if (it == obj.end())
		throw FormatError(where + ": missing field '" + key + "'");
	return *it;
}

inline Rational read_rational(json const &v, std::string const &where)
{
	try
	{
		if (v.is_string())
			return Rational::parse(v.get<std::string>());
		if (v.is_number_integer())
			return Rational(v.get<long>());
	}
	catch (std::exception const &e)
	{
		throw FormatError(where + ": malformed rational (" + e.what() + ")");
	}
	throw FormatError(where + ": malformed rational (expected a \"p/q\" string)");
}

// 1-based index in the document -> 0-based
inline std::size_t read_index(json const &v, std::string const &where, std::size_t dim)
{
	if (!v.is_number_integer())
		throw FormatError(where + ": index must be an integer");
	long i = v.get<long>();
	if (i < 1 || static_cast<std::size_t>(i) > dim)
		throw FormatError(where + ": index out of range (" + std::to_string(i) + " not in 1.." +
		                  std::to_string(dim) + ")");
	return static_cast<std::size_t>(i - 1);
}

inline std::size_t read_dim(json const &doc)
{
	auto const &d = required(doc, "document", "dim");
	if (!d.is_number_integer() || d.get<long>() < 1)
		throw FormatError("/dim: dimension must be a positive integer");
	return d.get<std::size_t>();
}

inline std::vector<std::string> read_basis(json const &doc, std::size_t dim)
{
	auto it = doc.find("basis");
	if (it == doc.end())
		return default_basis_names(dim);
	if (!it->is_array() || it->size() != dim)
		throw FormatError("/basis: expected an array of " + std::to_string(dim) + " names");
	std::vector<std::string> names;
	for (auto const &n : *it)
	{
		if (!n.is_string())
			throw FormatError("/basis: names must be strings");
		names.push_back(n.get<std::string>());
	}
	return names;
}

inline std::optional<Vec> read_vector(json const &doc, char const *key, std::size_t dim)
{
	auto it = doc.find(key);
	if (it == doc.end() || it->is_null())
		return std::nullopt;
	std::string where = std::string("/") + key;
	if (!it->is_array() || it->size() != dim)
		throw FormatError(where + ": expected null or an array of " + std::to_string(dim) + " rationals");
	Vec v(dim);
	for (std::size_t i = 0; i < dim; ++i)
		v[i] = read_rational((*it)[i], where + "/" + std::to_string(i));
	return v;
}

inline std::string quote(std::string const &s) { return json(s).dump(); }

inline std::string basis_line(std::vector<std::string> const &names)
{
	std::string out = "[";
	for (std::size_t i = 0; i < names.size(); ++i)
		out += (i ? ", " : "") + quote(names[i]);
	return out + "]";
}

inline std::string vector_line(std::optional<Vec> const &v)
{
	if (!v)
		return "null";
	std::string out = "[";
	for (std::size_t i = 0; i < v->size(); ++i)
		out += (i ? ", " : "") + quote((*v)[i].str());
	return out + "]";
}

inline Algebra algebra_from_json(json const &doc)
{
	only_keys(doc, "document", {"kind", "dim", "basis", "products", "unit"});
	std::size_t dim = read_dim(doc);
	Algebra a(dim);
	a.set_basis_names(read_basis(doc, dim));
	auto const &products = required(doc, "document", "products");
	if (!products.is_array())
		throw FormatError("/products: expected an array");
	std::set<Key3> seen;
	for (std::size_t p = 0; p < products.size(); ++p)
	{
		std::string where = "/products/" + std::to_string(p);
		auto const &entry = products[p];
		only_keys(entry, where, {"left", "right", "out"});
		std::size_t i = read_index(required(entry, where, "left"), where + "/left", dim);
		std::size_t j = read_index(required(entry, where, "right"), where + "/right", dim);
		auto const &out = required(entry, where, "out");
		if (!out.is_array())
			throw FormatError(where + "/out: expected an array");
		for (std::size_t q = 0; q < out.size(); ++q)
		{
			std::string w = where + "/out/" + std::to_string(q);
			only_keys(out[q], w, {"k", "c"});
			std::size_t k = read_index(required(out[q], w, "k"), w + "/k", dim);
			Rational c = read_rational(required(out[q], w, "c"), w + "/c");
			if (!seen.insert({i, j, k}).second)
				throw FormatError(w + ": duplicate entry (" + std::to_string(i + 1) + "," +
				                  std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
			a.set(i, j, k, c);
		}
	}
	if (auto u = read_vector(doc, "unit", dim))
	{
		try
		{
			a.set_unit(*u);
		}
		catch (std::invalid_argument const &e)
		{
			throw FormatError(std::string("/unit: ") + e.what());
		}
	}
	return a;
}

inline Cogebra cogebra_from_json(json const &doc)
{
	only_keys(doc, "document", {"kind", "dim", "basis", "coproducts", "counit"});
	std::size_t dim = read_dim(doc);
	Cogebra c(dim);
	c.set_basis_names(read_basis(doc, dim));
	auto const &cops = required(doc, "document", "coproducts");
	if (!cops.is_array())
		throw FormatError("/coproducts: expected an array");
	std::set<Key3> seen;
	for (std::size_t p = 0; p < cops.size(); ++p)
	{
		std::string where = "/coproducts/" + std::to_string(p);
		auto const &entry = cops[p];
		only_keys(entry, where, {"in", "out"});
		std::size_t k = read_index(required(entry, where, "in"), where + "/in", dim);
		auto const &out = required(entry, where, "out");
		if (!out.is_array())
			throw FormatError(where + "/out: expected an array");
		for (std::size_t q = 0; q < out.size(); ++q)
		{
			std::string w = where + "/out/" + std::to_string(q);
			only_keys(out[q], w, {"i", "j", "c"});
			std::size_t i = read_index(required(out[q], w, "i"), w + "/i", dim);
			std::size_t j = read_index(required(out[q], w, "j"), w + "/j", dim);
			Rational d = read_rational(required(out[q], w, "c"), w + "/c");
			if (!seen.insert({k, i, j}).second)
				throw FormatError(w + ": duplicate entry (" + std::to_string(k + 1) + "," +
				                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
			c.set(k, i, j, d);
		}
	}
	if (auto e = read_vector(doc, "counit", dim))
	{
		try
		{
			c.set_counit(*e);
		}
		catch (std::invalid_argument const &ex)
		{
			throw FormatError(std::string("/counit: ") + ex.what());
		}
	}
	return c;
}

inline std::string read_kind(json const &doc)
{
	if (!doc.is_object())
		throw FormatError("document: expected an object");
	auto const &k = required(doc, "document", "kind");
	if (!k.is_string() || (k != "algebra" && k != "cogebra"))
		throw FormatError("/kind: expected \"algebra\" or \"cogebra\"");
	return k.get<std::string>();
}

} // namespace detail

inline Object parse_object(std::string_view text)
{
	auto doc = detail::parse_json(text);
	if (detail::read_kind(doc) == "algebra")
		return detail::algebra_from_json(doc);
	return detail::cogebra_from_json(doc);
}

inline Algebra parse_algebra(std::string_view text)
{
	auto doc = detail::parse_json(text);
	if (detail::read_kind(doc) != "algebra")
		throw FormatError("/kind: expected \"algebra\"");
	return detail::algebra_from_json(doc);
}

inline Cogebra parse_cogebra(std::string_view text)
{
	auto doc = detail::parse_json(text);
	if (detail::read_kind(doc) != "cogebra")
		throw FormatError("/kind: expected \"cogebra\"");
	return detail::cogebra_from_json(doc);
}

/// Canonical document: one product entry per line, ordered by (left, right),
/// outputs ordered by k, zero entries omitted, rationals as "p/q" strings.
inline std::string print_algebra(Algebra const &a)
{
	using detail::quote;
	std::ostringstream os;
	os << "{\n  \"kind\": \"algebra\",\n  \"dim\": " << a.dim() << ",\n";
	os << "  \"basis\": " << detail::basis_line(a.basis_names()) << ",\n";
	os << "  \"products\": [";
	bool first_entry = true;
	auto const &cs = a.constants();
	for (auto it = cs.begin(); it != cs.end();)
	{
		auto [i, j, k0] = it->first;
		os << (first_entry ? "\n" : ",\n") << "    {\"left\": " << i + 1 << ", \"right\": " << j + 1
		   << ", \"out\": [";
		first_entry = false;
		bool first_out = true;
		for (; it != cs.end() && it->first[0] == i && it->first[1] == j; ++it)
		{
			os << (first_out ? "" : ", ") << "{\"k\": " << it->first[2] + 1 << ", \"c\": " << quote(it->second.str())
			   << "}";
			first_out = false;
		}
		os << "]}";
	}
	os << (first_entry ? "]" : "\n  ]") << ",\n";
	os << "  \"unit\": " << detail::vector_line(a.unit()) << "\n}\n";
	return os.str();
}

inline std::string print_cogebra(Cogebra const &c)
{
	using detail::quote;
	std::ostringstream os;
	os << "{\n  \"kind\": \"cogebra\",\n  \"dim\": " << c.dim() << ",\n";
	os << "  \"basis\": " << detail::basis_line(c.basis_names()) << ",\n";
	os << "  \"coproducts\": [";
	bool first_entry = true;
	auto const &ds = c.constants();
	for (auto it = ds.begin(); it != ds.end();)
	{
		std::size_t k = it->first[0];
		os << (first_entry ? "\n" : ",\n") << "    {\"in\": " << k + 1 << ", \"out\": [";
		first_entry = false;
		bool first_out = true;
		for (; it != ds.end() && it->first[0] == k; ++it)
		{
			os << (first_out ? "" : ", ") << "{\"i\": " << it->first[1] + 1 << ", \"j\": " << it->first[2] + 1
			   << ", \"c\": " << quote(it->second.str()) << "}";
			first_out = false;
		}
		os << "]}";
	}
	os << (first_entry ? "]" : "\n  ]") << ",\n";
	os << "  \"counit\": " << detail::vector_line(c.counit()) << "\n}\n";
	return os.str();
}

inline std::string print_object(Object const &o)
{
	return std::visit(
	    [](auto const &x) -> std::string {
		    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Algebra>)
			    return print_algebra(x);
		    else
			    return print_cogebra(x);
	    },
	    o);
}

// ---------------------------------------------------------------------------
// reports

inline constexpr std::array<char const *, 6> kGiNames{
    "associative", "Vinberg", "pre-Lie", "G4", "G5-generalized-Jacobi", "Lie-admissible"};

inline nlohmann::ordered_json report_to_json(ClassificationReport const &r, Algebra const &a)
{
	nlohmann::ordered_json j;
	j["kind"] = "algebra";
	j["name"] = a.name();
	j["dim"] = a.dim();
	nlohmann::ordered_json gi, bang;
	for (std::size_t i = 0; i < 6; ++i)
		gi["G" + std::to_string(i + 1)] = r.gi_assoc[i];
	for (std::size_t i = 0; i < 5; ++i)
		bang["G" + std::to_string(i + 2) + "!"] = r.gi_bang[i];
	j["gi_assoc"] = gi;
	j["gi_bang"] = bang;
	j["is_associative"] = r.is_associative;
	j["is_lie_admissible"] = r.is_lie_admissible;
	j["is_3_power_associative"] = r.is_3_power_associative;
	j["has_unit"] = r.has_unit;
	j["annihilator_dim"] = r.annihilator_dim;
	j["annihilator_basis"] = nlohmann::ordered_json::array();
	for (auto const &v : r.annihilator_basis)
		j["annihilator_basis"].push_back(format_ga_expr(v));
	return j;
}

inline std::string report_to_text(ClassificationReport const &r, Algebra const &a)
{
	std::ostringstream os;
	auto yn = [](bool b) { return b ? "yes" : "no"; };
	os << "algebra " << (a.name().empty() ? "<unnamed>" : a.name()) << " (dim " << a.dim() << ")\n";
	for (std::size_t i = 0; i < 6; ++i)
	{
		std::string label = "G" + std::to_string(i + 1) + " " + kGiNames[i];
		os << "  " << label << std::string(label.size() < 30 ? 30 - label.size() : 1, ' ') << yn(r.gi_assoc[i])
		   << "\n";
	}
	for (std::size_t i = 0; i < 5; ++i)
	{
		std::string label = "G" + std::to_string(i + 2) + "!-algebra";
		os << "  " << label << std::string(30 - label.size(), ' ') << yn(r.gi_bang[i]) << "\n";
	}
	os << "  3-power associative           " << yn(r.is_3_power_associative) << "\n";
	os << "  unit                          " << yn(r.has_unit) << "\n";
	os << "  annihilator dim               " << r.annihilator_dim << "\n";
	for (auto const &v : r.annihilator_basis)
		os << "    " << format_ga_expr(v) << "\n";
	return os.str();
}

inline nlohmann::ordered_json report_to_json(CogebraReport const &r, Cogebra const &c)
{
	nlohmann::ordered_json j;
	j["kind"] = "cogebra";
	j["name"] = c.name();
	j["dim"] = c.dim();
	nlohmann::ordered_json gi, lit, nor;
	for (std::size_t i = 0; i < 6; ++i)
		gi["G" + std::to_string(i + 1)] = r.gi_coassoc[i];
	for (std::size_t i = 0; i < 5; ++i)
	{
		lit["G" + std::to_string(i + 2) + "!"] = r.gi_bang_literal[i];
		nor["G" + std::to_string(i + 2) + "!"] = r.gi_bang_normalized[i];
	}
	j["gi_coassoc"] = gi;
	j["gi_bang_literal"] = lit;
	j["gi_bang_normalized"] = nor;
	j["is_coassociative"] = r.is_coassociative;
	j["has_counit"] = r.has_counit;
	j["flip_difference_is_lie_cogebra"] = r.lie_cogebra_of_flip_difference;
	return j;
}

inline std::string report_to_text(CogebraReport const &r, Cogebra const &c)
{
	std::ostringstream os;
	auto yn = [](bool b) { return b ? "yes" : "no"; };
	os << "cogebra " << (c.name().empty() ? "<unnamed>" : c.name()) << " (dim " << c.dim() << ")\n";
	for (std::size_t i = 0; i < 6; ++i)
	{
		std::string label = "G" + std::to_string(i + 1) + " " + kGiNames[i] + " (co)";
		os << "  " << label << std::string(label.size() < 34 ? 34 - label.size() : 1, ' ') << yn(r.gi_coassoc[i])
		   << "\n";
	}
	for (std::size_t i = 0; i < 5; ++i)
	{
		std::string label = "G" + std::to_string(i + 2) + "!-cogebra literal/normalized";
		os << "  " << label << std::string(34 - label.size(), ' ') << yn(r.gi_bang_literal[i]) << " / "
		   << yn(r.gi_bang_normalized[i]) << "\n";
	}
	os << "  counit                            " << yn(r.has_counit) << "\n";
	os << "  Delta - tau Delta is Lie cogebra  " << yn(r.lie_cogebra_of_flip_difference) << "\n";
	return os.str();
}

} // namespace nalg

#endif
