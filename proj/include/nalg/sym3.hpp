#ifndef NALG_SYM3_HPP
#define NALG_SYM3_HPP

#include <array>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace nalg {

/// Permutation of {1,2,3}. Stored 0-based: images()[k] is the image of slot k.
class Perm3
{
public:
	constexpr Perm3() : img_{0, 1, 2} {}

	/// From 1-based images (sigma(1), sigma(2), sigma(3)).
	static Perm3 from_images(int a, int b, int c)
	{
		std::array<int, 3> seen{0, 0, 0};
		for (int x : {a, b, c})
		{
			if (x < 1 || x > 3 || seen[x - 1]++)
				throw std::invalid_argument("not a permutation of {1,2,3}");
		}
		Perm3 p;
		p.img_ = {a - 1, b - 1, c - 1};
		return p;
	}

	static Perm3 id() { return {}; }
	static Perm3 t12() { return from_images(2, 1, 3); }
	static Perm3 t13() { return from_images(3, 2, 1); }
	static Perm3 t23() { return from_images(1, 3, 2); }
	/// The 3-cycle (1,2,3): 1 -> 2 -> 3 -> 1.
	static Perm3 c1() { return from_images(2, 3, 1); }
	static Perm3 c2() { return from_images(3, 1, 2); }

	/// 0-based image of 0-based slot k.
	int operator()(int k) const { return img_[static_cast<std::size_t>(k)]; }

	Perm3 inverse() const
	{
		Perm3 r;
		for (int k = 0; k < 3; ++k)
			r.img_[static_cast<std::size_t>(img_[static_cast<std::size_t>(k)])] = k;
		return r;
	}

	friend bool operator==(Perm3 const &, Perm3 const &) = default;

private:
	std::array<int, 3> img_;
};

/// compose(p, q)(k) = p(q(k)): q is applied first.
inline Perm3 compose(Perm3 const &p, Perm3 const &q)
{
	return Perm3::from_images(p(q(0)) + 1, p(q(1)) + 1, p(q(2)) + 1);
}

/// +1 on the alternating group, -1 on transpositions.
inline int sign(Perm3 const &p)
{
	int inversions = 0;
	for (int a = 0; a < 3; ++a)
		for (int b = a + 1; b < 3; ++b)
			if (p(a) > p(b))
				++inversions;
	return inversions % 2 ? -1 : 1;
}

/// Basis order of K[S3] used for all coordinates: Id, t12, t13, t23, c1, c2.
inline std::array<Perm3, 6> const &s3_basis()
{
	static const std::array<Perm3, 6> basis{Perm3::id(), Perm3::t12(), Perm3::t13(),
	                                        Perm3::t23(), Perm3::c1(),  Perm3::c2()};
	return basis;
}

inline constexpr std::array<std::string_view, 6> kS3Names{"id", "t12", "t13", "t23", "c1", "c2"};

inline std::size_t basis_index(Perm3 const &p)
{
	auto const &b = s3_basis();
	for (std::size_t i = 0; i < b.size(); ++i)
		if (b[i] == p)
			return i;
	throw std::logic_error("unreachable: permutation outside S3 basis");
}

/// Element of the group algebra K[S3] in the fixed basis order.
class GroupAlgElem
{
public:
	GroupAlgElem() = default;
	explicit GroupAlgElem(std::array<Rational, 6> coords) : c_(std::move(coords)) {}
	explicit GroupAlgElem(Perm3 const &p) { c_[basis_index(p)] = 1; }

	static GroupAlgElem from_vec(Vec const &v)
	{
		if (v.size() != 6)
			throw std::invalid_argument("group algebra element needs 6 coordinates");
		GroupAlgElem g;
		for (std::size_t i = 0; i < 6; ++i)
			g.c_[i] = v[i];
		return g;
	}

	Rational const &operator[](std::size_t i) const { return c_[i]; }
	Rational &operator[](std::size_t i) { return c_[i]; }
	Rational const &coeff(Perm3 const &p) const { return c_[basis_index(p)]; }

	Vec to_vec() const { return Vec(std::vector<Rational>(c_.begin(), c_.end())); }
	bool is_zero() const { return to_vec().is_zero(); }

	GroupAlgElem &operator+=(GroupAlgElem const &o)
	{
		for (std::size_t i = 0; i < 6; ++i)
			c_[i] += o.c_[i];
		return *this;
	}
	GroupAlgElem &operator-=(GroupAlgElem const &o)
	{
		for (std::size_t i = 0; i < 6; ++i)
			c_[i] -= o.c_[i];
		return *this;
	}
	friend GroupAlgElem operator+(GroupAlgElem a, GroupAlgElem const &b) { return a += b; }
	friend GroupAlgElem operator-(GroupAlgElem a, GroupAlgElem const &b) { return a -= b; }
	friend GroupAlgElem operator*(Rational const &s, GroupAlgElem a)
	{
		for (auto &x : a.c_)
			x *= s;
		return a;
	}
	friend GroupAlgElem operator-(GroupAlgElem a) { return Rational(-1) * std::move(a); }
	friend bool operator==(GroupAlgElem const &, GroupAlgElem const &) = default;

	friend std::ostream &operator<<(std::ostream &os, GroupAlgElem const &g) { return os << g.to_vec(); }

private:
	std::array<Rational, 6> c_{};
};

/// Bilinear extension of compose.
inline GroupAlgElem ga_multiply(GroupAlgElem const &u, GroupAlgElem const &v)
{
	auto const &b = s3_basis();
	GroupAlgElem r;
	for (std::size_t i = 0; i < 6; ++i)
	{
		if (u[i].is_zero())
			continue;
		for (std::size_t j = 0; j < 6; ++j)
			if (!v[j].is_zero())
				r[basis_index(compose(b[i], b[j]))] += u[i] * v[j];
	}
	return r;
}

/// The action sigma . v = sigma^{-1} o v (left multiplication by the inverse).
inline GroupAlgElem act(Perm3 const &sigma, GroupAlgElem const &v)
{
	return ga_multiply(GroupAlgElem(sigma.inverse()), v);
}

/// The six translates sigma^{-1} o v, sigma in basis order; duplicates kept.
inline std::vector<GroupAlgElem> orbit(GroupAlgElem const &v)
{
	std::vector<GroupAlgElem> out;
	for (auto const &s : s3_basis())
		out.push_back(act(s, v));
	return out;
}

inline Subspace span_of(std::vector<GroupAlgElem> const &elems)
{
	std::vector<Vec> vs;
	for (auto const &e : elems)
		vs.push_back(e.to_vec());
	return span(6, vs);
}

/// F_v: linear span of the orbit of v.
inline Subspace orbit_span(GroupAlgElem const &v) { return span_of(orbit(v)); }

/// Span of { v o sigma : sigma in S3 }, the right ideal generated by v.
inline Subspace right_ideal(GroupAlgElem const &v)
{
	std::vector<GroupAlgElem> gens;
	for (auto const &s : s3_basis())
		gens.push_back(ga_multiply(v, GroupAlgElem(s)));
	return span_of(gens);
}

/// True if every basis vector of s stays in s under the orbit action.
inline bool is_action_invariant(Subspace const &s)
{
	for (auto const &b : s.basis())
		for (auto const &sigma : s3_basis())
			if (!member(act(sigma, GroupAlgElem::from_vec(b)).to_vec(), s))
				return false;
	return true;
}

/// True if s is closed under right multiplication by every permutation.
inline bool is_right_ideal(Subspace const &s)
{
	for (auto const &b : s.basis())
		for (auto const &sigma : s3_basis())
			if (!member(ga_multiply(GroupAlgElem::from_vec(b), GroupAlgElem(sigma)).to_vec(), s))
				return false;
	return true;
}

struct MaschkeMultiplicities
{
	std::size_t trivial = 0;
	std::size_t sign = 0;
	std::size_t standard = 0;

	friend bool operator==(MaschkeMultiplicities const &, MaschkeMultiplicities const &) = default;
};

/// Central idempotents of Q[S3] for the trivial, sign and 2-dimensional
/// standard irreducibles, in that order.
inline std::array<GroupAlgElem, 3> central_idempotents()
{
	std::array<GroupAlgElem, 3> e;
	for (auto const &s : s3_basis())
	{
		GroupAlgElem g(s);
		int sg = sign(s);
		// standard character: 2 on Id, 0 on transpositions, -1 on 3-cycles
		int chi = s == Perm3::id() ? 2 : (sg < 0 ? 0 : -1);
		e[0] += Rational(1, 6) * g;
		e[1] += Rational(sg, 6) * g;
		e[2] += Rational(2 * chi, 6) * g;
	}
	return e;
}

/// Multiplicities of the irreducible summands of an invariant subspace.
/// The subspace must be stable under the orbit action or under right
/// multiplication; the idempotents are central, so either module structure
/// gives the same projections.
inline MaschkeMultiplicities maschke_multiplicities(Subspace const &s)
{
	if (s.ambient_dim() != 6)
		throw std::invalid_argument("subspace of K[S3] must live in dimension 6");
	if (!is_action_invariant(s) && !is_right_ideal(s))
		throw std::invalid_argument("subspace is not invariant under the S3 action");
	auto idem = central_idempotents();
	std::array<std::size_t, 3> ranks{};
	for (std::size_t c = 0; c < 3; ++c)
	{
		std::vector<Vec> images;
		for (auto const &b : s.basis())
			images.push_back(ga_multiply(idem[c], GroupAlgElem::from_vec(b)).to_vec());
		ranks[c] = rank(6, images);
	}
	return {ranks[0], ranks[1], ranks[2] / 2};
}

/// Subgroup G_i of S3, i in 1..6:
/// G1={Id}, G2={Id,t12}, G3={Id,t23}, G4={Id,t13}, G5={Id,c1,c2}, G6=S3.
class SubgroupId
{
public:
	explicit SubgroupId(int i) : i_(i)
	{
		if (i < 1 || i > 6)
			throw std::invalid_argument("subgroup index must be in 1..6, got " + std::to_string(i));
	}
	int index() const { return i_; }

	std::vector<Perm3> members() const
	{
		switch (i_)
		{
		case 1: return {Perm3::id()};
		case 2: return {Perm3::id(), Perm3::t12()};
		case 3: return {Perm3::id(), Perm3::t23()};
		case 4: return {Perm3::id(), Perm3::t13()};
		case 5: return {Perm3::id(), Perm3::c1(), Perm3::c2()};
		default: return {s3_basis().begin(), s3_basis().end()};
		}
	}

	friend bool operator==(SubgroupId const &, SubgroupId const &) = default;

private:
	int i_;
};

/// a_i = sum over G_i of sign(sigma) sigma.
inline GroupAlgElem alternating_sum(SubgroupId g)
{
	GroupAlgElem r;
	for (auto const &s : g.members())
		r[basis_index(s)] += sign(s);
	return r;
}

/// u_i = sum over G_i of sigma^{-1}.
inline GroupAlgElem inverse_sum(SubgroupId g)
{
	GroupAlgElem r;
	for (auto const &s : g.members())
		r[basis_index(s.inverse())] += 1;
	return r;
}

/// V: the signature vector, sum of sign(sigma) sigma.
inline GroupAlgElem vector_V() { return alternating_sum(SubgroupId(6)); }

/// W: the sum of all six permutations.
inline GroupAlgElem vector_W()
{
	GroupAlgElem r;
	for (std::size_t i = 0; i < 6; ++i)
		r[i] = 1;
	return r;
}

/// Named vectors: "V", "W", "a1".."a6", "u1".."u6", "v1".."v6".
/// v1..v6 are the single generators Id, t12, t23, t13, Id+c1+c2, V.
inline GroupAlgElem special_vector(std::string_view name)
{
	if (name == "V")
		return vector_V();
	if (name == "W")
		return vector_W();
	if (name.size() == 2 && name[1] >= '1' && name[1] <= '6')
	{
		int i = name[1] - '0';
		switch (name[0])
		{
		case 'a': return alternating_sum(SubgroupId(i));
		case 'u': return inverse_sum(SubgroupId(i));
		case 'v':
			switch (i)
			{
			case 1: return GroupAlgElem(Perm3::id());
			case 2: return GroupAlgElem(Perm3::t12());
			case 3: return GroupAlgElem(Perm3::t23());
			case 4: return GroupAlgElem(Perm3::t13());
			case 5: return alternating_sum(SubgroupId(5));
			default: return vector_V();
			}
		default: break;
		}
	}
	throw std::invalid_argument("unknown special vector '" + std::string(name) + "'");
}

} // namespace nalg

#endif
