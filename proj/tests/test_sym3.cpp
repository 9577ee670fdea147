#include <gtest/gtest.h>

#include <algorithm>

#include "nalg/sym3.hpp"

using namespace nalg;

namespace {

// permutations as plain image triples, composed by hand
using Img = std::array<int, 3>;

Img images(Perm3 const &p) { return {p(0) + 1, p(1) + 1, p(2) + 1}; }

Img after(Img const &p, Img const &q) { return {p[q[0] - 1], p[q[1] - 1], p[q[2] - 1]}; }

GroupAlgElem el(std::array<int, 6> c)
{
	GroupAlgElem g;
	for (std::size_t i = 0; i < 6; ++i)
		g[i] = c[i];
	return g;
}

// trace of the orbit action of sigma on an invariant subspace, via the
// coordinates of translated basis vectors w.r.t. the RREF pivots
Rational trace_on(Subspace const &s, Perm3 const &sigma)
{
	Rational tr;
	for (std::size_t r = 0; r < s.dim(); ++r)
	{
		auto const &b = s.basis()[r];
		std::size_t p = 0;
		while (b[p].is_zero())
			++p;
		Vec img = act(sigma, GroupAlgElem::from_vec(b)).to_vec();
		tr += img[p];
	}
	return tr;
}

// character inner products with the trivial, sign and standard characters
std::array<Rational, 3> character_multiplicities(Subspace const &s)
{
	std::array<Rational, 3> m{};
	for (auto const &sigma : s3_basis())
	{
		Rational chi = trace_on(s, sigma);
		int sg = sign(sigma);
		int std_chi = sigma == Perm3::id() ? 2 : (sg < 0 ? 0 : -1);
		m[0] += chi * Rational(1, 6);
		m[1] += chi * Rational(sg, 6);
		m[2] += chi * Rational(std_chi, 6);
	}
	return m;
}

} // namespace

TEST(Perm3, ComposeConvention)
{
	EXPECT_EQ(compose(Perm3::id(), Perm3::c1()), Perm3::c1());
	EXPECT_EQ(compose(Perm3::t12(), Perm3::t12()), Perm3::id());
	EXPECT_EQ(compose(Perm3::t12(), Perm3::t13()), Perm3::c2());
	EXPECT_EQ(images(Perm3::c2()), (Img{3, 1, 2}));
	EXPECT_EQ(images(Perm3::c1()), (Img{2, 3, 1}));
	EXPECT_THROW(Perm3::from_images(1, 1, 2), std::invalid_argument);
}

TEST(Perm3, GroupLaws)
{
	for (auto const &p : s3_basis())
	{
		EXPECT_EQ(compose(p, p.inverse()), Perm3::id());
		EXPECT_EQ(compose(p.inverse(), p), Perm3::id());
		for (auto const &q : s3_basis())
		{
			EXPECT_EQ(images(compose(p, q)), after(images(p), images(q)));
			EXPECT_EQ(sign(compose(p, q)), sign(p) * sign(q));
			for (auto const &r : s3_basis())
				EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
		}
	}
}

TEST(Perm3, Sign)
{
	EXPECT_EQ(sign(Perm3::id()), 1);
	EXPECT_EQ(sign(Perm3::t23()), -1);
	EXPECT_EQ(sign(Perm3::c1()), 1);
	EXPECT_EQ(sign(Perm3::c2()), 1);
}

TEST(GroupAlgebra, Multiply)
{
	auto v = el({1, -1, 0, 0, 0, 0});
	EXPECT_EQ(ga_multiply(GroupAlgElem(Perm3::id()), v), v);
	EXPECT_EQ(ga_multiply(v, el({1, 0, 0, 0, 1, 1})), el({1, -1, -1, -1, 1, 1}));
	EXPECT_EQ(ga_multiply(vector_W(), vector_W()), Rational(6) * vector_W());
	// ga_multiply extends compose
	for (auto const &p : s3_basis())
		for (auto const &q : s3_basis())
			EXPECT_EQ(ga_multiply(GroupAlgElem(p), GroupAlgElem(q)), GroupAlgElem(compose(p, q)));
}

TEST(GroupAlgebra, Orbit)
{
	auto o = orbit(GroupAlgElem(Perm3::id()));
	ASSERT_EQ(o.size(), 6u);
	for (std::size_t s = 0; s < 6; ++s)
		EXPECT_EQ(o[s], GroupAlgElem(s3_basis()[s].inverse()));

	for (auto const &x : orbit(vector_V()))
		EXPECT_TRUE(x == vector_V() || x == -vector_V());

	auto v5 = el({1, 0, 0, 0, 1, 1}), t = el({0, 1, 1, 1, 0, 0});
	auto o5 = orbit(v5);
	EXPECT_EQ(std::count(o5.begin(), o5.end(), v5), 3);
	EXPECT_EQ(std::count(o5.begin(), o5.end(), t), 3);
}

TEST(GroupAlgebra, OrbitSpanAndRightIdeal)
{
	EXPECT_EQ(orbit_span(vector_V()).dim(), 1u);
	EXPECT_EQ(orbit_span(vector_W()).dim(), 1u);
	EXPECT_EQ(orbit_span(GroupAlgElem(Perm3::id())).dim(), 6u);
	EXPECT_EQ(right_ideal(GroupAlgElem(Perm3::id())).dim(), 6u);
	EXPECT_EQ(right_ideal(el({1, -1, 0, 0, 0, 0})).dim(), 3u);
	EXPECT_EQ(right_ideal(vector_V()).dim(), 1u);
	for (auto const &s : s3_basis())
		EXPECT_EQ(ga_multiply(vector_V(), GroupAlgElem(s)), Rational(sign(s)) * vector_V());
}

TEST(GroupAlgebra, OrbitSpanIsInvariant)
{
	for (auto const &v : {el({1, 2, 0, -1, 0, 3}), el({1, -1, 0, 0, 0, 0}), el({0, 0, 0, 0, 1, -1}), vector_V()})
	{
		auto f = orbit_span(v);
		EXPECT_TRUE(is_action_invariant(f));
		for (auto const &b : f.basis())
			for (auto const &s : s3_basis())
				EXPECT_TRUE(member(act(s, GroupAlgElem::from_vec(b)).to_vec(), f));
	}
}

TEST(GroupAlgebra, SpecialVectors)
{
	EXPECT_EQ(special_vector("V"), el({1, -1, -1, -1, 1, 1}));
	EXPECT_EQ(special_vector("W"), el({1, 1, 1, 1, 1, 1}));
	EXPECT_EQ(special_vector("a2"), el({1, -1, 0, 0, 0, 0}));
	EXPECT_EQ(special_vector("a3"), el({1, 0, 0, -1, 0, 0}));
	EXPECT_EQ(special_vector("a4"), el({1, 0, -1, 0, 0, 0}));
	EXPECT_EQ(special_vector("a5"), el({1, 0, 0, 0, 1, 1}));
	EXPECT_EQ(special_vector("a6"), vector_V());
	EXPECT_EQ(special_vector("u6"), vector_W());
	EXPECT_EQ(special_vector("u5"), el({1, 0, 0, 0, 1, 1}));
	EXPECT_EQ(special_vector("v3"), GroupAlgElem(Perm3::t23()));
	EXPECT_EQ(special_vector("v5"), el({1, 0, 0, 0, 1, 1}));
	EXPECT_THROW(special_vector("a7"), std::invalid_argument);
	EXPECT_THROW(special_vector("X"), std::invalid_argument);
	EXPECT_THROW(SubgroupId(0), std::invalid_argument);
}

TEST(GroupAlgebra, VInEveryRightIdealOfAi)
{
	for (int i = 1; i <= 6; ++i)
		EXPECT_TRUE(member(vector_V().to_vec(), right_ideal(alternating_sum(SubgroupId(i))))) << "a" << i;
}

TEST(Maschke, Examples)
{
	EXPECT_EQ(maschke_multiplicities(orbit_span(vector_V())), (MaschkeMultiplicities{0, 1, 0}));
	EXPECT_EQ(maschke_multiplicities(orbit_span(vector_W())), (MaschkeMultiplicities{1, 0, 0}));
	EXPECT_EQ(maschke_multiplicities(Subspace(span(6, {Vec::unit(6, 0), Vec::unit(6, 1), Vec::unit(6, 2),
	                                                   Vec::unit(6, 3), Vec::unit(6, 4), Vec::unit(6, 5)}))),
	          (MaschkeMultiplicities{1, 1, 2}));
	EXPECT_THROW(maschke_multiplicities(span(6, {Vec::unit(6, 1)})), std::invalid_argument);
}

TEST(Maschke, AgreesWithCharacters)
{
	for (auto const &v : {el({1, 2, 0, -1, 0, 3}), el({1, -1, 0, 0, 0, 0}), el({0, 0, 0, 0, 1, -1}),
	                      el({1, 0, 0, 0, 1, 1}), el({2, -1, 0, 0, -1, 0}), vector_V(), vector_W()})
	{
		auto f = orbit_span(v);
		auto m = maschke_multiplicities(f);
		auto chi = character_multiplicities(f);
		EXPECT_EQ(Rational(static_cast<long>(m.trivial)), chi[0]);
		EXPECT_EQ(Rational(static_cast<long>(m.sign)), chi[1]);
		EXPECT_EQ(Rational(static_cast<long>(m.standard)), chi[2]);
		EXPECT_EQ(m.trivial + m.sign + 2 * m.standard, f.dim());
	}
}
