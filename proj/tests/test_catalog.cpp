#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace nalg;
using namespace nalg::test;

namespace {

// every 2-dim algebra with constants in {-1,0,1}, enumerated with nested loops
// over (i,j,k) lexicographically, last position fastest, values 0, 1, -1
template <class Pred>
std::optional<Algebra> first_dim2(Pred pred)
{
	int const values[3] = {0, 1, -1};
	for (int code = 0; code < 6561; ++code)
	{
		Algebra a(2);
		int rest = code;
		for (int pos = 7; pos >= 0; --pos)
		{
			int v = values[rest % 3];
			rest /= 3;
			a.set(static_cast<std::size_t>(pos >> 2), static_cast<std::size_t>((pos >> 1) & 1),
			      static_cast<std::size_t>(pos & 1), v);
		}
		if (pred(a))
			return a;
	}
	return std::nullopt;
}

bool nonassoc(Algebra const &a) { return !associator(a).is_zero(); }

} // namespace

TEST(Catalog, RequiredInstances)
{
	std::set<std::string> names;
	for (auto const &n : catalog().names())
		names.insert(n);
	for (auto const &n : {"mat2", "trunc_poly2", "k1", "vinberg2", "prelie2", "g4_2", "sl2", "g5_only", "g2bang3",
	                      "nonjacobi3", "generic3"})
	{
		EXPECT_TRUE(names.count(n)) << n;
		EXPECT_TRUE(names.count(std::string(n) + "_dual")) << n;
	}
	EXPECT_THROW(catalog().get("nope"), std::invalid_argument);
	EXPECT_THROW(build_catalog_algebra("nope"), std::invalid_argument);
}

TEST(Catalog, FixedInstances)
{
	auto mat2 = catalog().algebra("mat2");
	EXPECT_EQ(mat2.dim(), 4u);
	ASSERT_TRUE(mat2.unit().has_value());
	EXPECT_TRUE(is_associative(mat2));
	EXPECT_FALSE(is_commutative(mat2));
	auto tp = catalog().algebra("trunc_poly2");
	EXPECT_EQ(tp.dim(), 2u);
	EXPECT_TRUE(is_commutative(tp) && is_associative(tp) && tp.unit());
	// x^2 = 0
	EXPECT_TRUE(multiply(tp, Vec{0, 1}, Vec{0, 1}).is_zero());
	auto k1 = catalog().algebra("k1");
	EXPECT_EQ(k1.dim(), 1u);
	EXPECT_TRUE(k1.unit().has_value());
	auto sl2 = catalog().algebra("sl2");
	EXPECT_TRUE(is_antisymmetric(sl2) && gi_check(sl2, SubgroupId(5)) && jacobi_oracle(sl2));
}

TEST(Catalog, SearchedInstancesAreFirstHits)
{
	auto gi = [](int i) { return [i](Algebra const &a) { return gi_oracle(a, i) && nonassoc(a); }; };
	EXPECT_EQ(first_dim2(gi(2)), catalog().algebra("vinberg2"));
	EXPECT_EQ(first_dim2(gi(3)), catalog().algebra("prelie2"));
	EXPECT_EQ(first_dim2(gi(4)), catalog().algebra("g4_2"));
	EXPECT_EQ(first_dim2([](Algebra const &a) { return gi_oracle(a, 5) && nonassoc(a) && !is_antisymmetric(a); }),
	          catalog().algebra("g5_only"));
}

TEST(Catalog, SearchedInstancesSatisfyOracles)
{
	auto v = catalog().algebra("vinberg2");
	EXPECT_TRUE(gi_check(v, SubgroupId(2)) && !is_associative(v));
	auto p = catalog().algebra("prelie2");
	EXPECT_TRUE(gi_check(p, SubgroupId(3)) && !is_associative(p));
	auto g4 = catalog().algebra("g4_2");
	EXPECT_TRUE(gi_check(g4, SubgroupId(4)) && !is_associative(g4));
	auto g5 = catalog().algebra("g5_only");
	EXPECT_TRUE(gi_check(g5, SubgroupId(5)) && !is_associative(g5) && !is_antisymmetric(g5));
	auto gb = catalog().algebra("g2bang3");
	EXPECT_EQ(gb.dim(), 3u);
	EXPECT_TRUE(gi_bang_check(gb, 2) && !is_commutative(gb));
	auto nj = catalog().algebra("nonjacobi3");
	EXPECT_TRUE(is_antisymmetric(nj) && !jacobi_oracle(nj));
	EXPECT_EQ(annihilator(catalog().algebra("generic3")).dim(), 0u);
}

TEST(Catalog, SearchIsDeterministic)
{
	for (auto const &name : catalog_algebra_names())
		EXPECT_EQ(build_catalog_algebra(name), build_catalog_algebra(name)) << name;
	SearchSpace s{2, false};
	EXPECT_EQ(s.size(), 6561u);
	EXPECT_TRUE(s.candidate(0).constants().empty());
	// last position (2,2,2) moves fastest
	EXPECT_EQ(s.candidate(1).coeff(1, 1, 1), Rational(1));
	EXPECT_EQ(s.candidate(2).coeff(1, 1, 1), Rational(-1));
	EXPECT_EQ(s.candidate(3).coeff(1, 1, 0), Rational(1));
	SearchSpace anti{3, true};
	EXPECT_EQ(anti.positions().size(), 9u);
	EXPECT_TRUE(is_antisymmetric(anti.candidate(12345)));
}

TEST(Catalog, ManifestMatchesClassify)
{
	auto manifest = nlohmann::json::parse(read_file(catalog().dir() / "manifest.json"));
	ASSERT_EQ(manifest.size(), catalog_entries().size());
	for (auto const &entry : manifest)
	{
		std::string name = entry["name"];
		auto obj = catalog().get(name);
		nlohmann::json expected;
		if (auto const *a = std::get_if<Algebra>(&obj))
			expected = report_to_json(classify(*a), *a);
		else
			expected = report_to_json(classify(std::get<Cogebra>(obj)), std::get<Cogebra>(obj));
		EXPECT_EQ(entry["classification"], expected) << name;
		EXPECT_EQ(entry["kind"], catalog_entry(name).kind);
	}
}

TEST(Catalog, DualsAreDualizations)
{
	for (auto const &e : catalog_entries())
	{
		if (e.kind != "cogebra")
			continue;
		EXPECT_EQ(catalog().cogebra(e.name), dualize_algebra(catalog().algebra(e.base))) << e.name;
	}
}

TEST(Catalog, RegenerateReproduces)
{
	auto r = regenerate(catalog().dir());
	EXPECT_TRUE(r.ok());
	EXPECT_TRUE(r.diverged.empty());
	EXPECT_EQ(r.reproduced.size(), catalog_entries().size() + 1);
	EXPECT_LT(r.seconds, 60.0);
}

TEST(Catalog, RegenerateDetectsDivergence)
{
	auto dir = std::filesystem::temp_directory_path() / "nalg_catalog_divergence";
	std::filesystem::remove_all(dir);
	std::filesystem::create_directories(dir);
	auto w = regenerate(dir, true);
	EXPECT_EQ(w.written.size(), catalog_entries().size() + 1);
	EXPECT_TRUE(regenerate(dir).ok());

	auto v = parse_algebra(read_file(dir / "vinberg2.json"));
	v.set(0, 0, 0, 1);
	write_file(dir / "vinberg2.json", print_algebra(v));
	std::filesystem::remove(dir / "sl2_dual.json");
	auto r = regenerate(dir);
	EXPECT_FALSE(r.ok());
	EXPECT_EQ(r.diverged, (std::vector<std::string>{"vinberg2.json", "sl2_dual.json"}));
	std::filesystem::remove_all(dir);
}
