#ifndef NALG_COGEBRA_HPP
#define NALG_COGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "sym3.hpp"

namespace nalg {

/// Finite-dimensional cogebra: Delta(e_k) = sum_{i,j} D(k,i,j) e_i (x) e_j.
/// Keys are (k, i, j), 0-based.
class Cogebra
{
public:
	explicit Cogebra(std::size_t dim) : dim_(dim), names_(default_basis_names(dim)) {}

	std::size_t dim() const { return dim_; }

	void set(std::size_t k, std::size_t i, std::size_t j, Rational d)
	{
		check_index(k), check_index(i), check_index(j);
		if (d.is_zero())
			d_.erase({k, i, j});
		else
			d_[{k, i, j}] = std::move(d);
	}
	void add(std::size_t k, std::size_t i, std::size_t j, Rational const &d)
	{
		set(k, i, j, coeff(k, i, j) + d);
	}
	Rational coeff(std::size_t k, std::size_t i, std::size_t j) const
	{
		auto it = d_.find({k, i, j});
		return it == d_.end() ? Rational() : it->second;
	}
	std::map<Key3, Rational> const &constants() const { return d_; }

	std::optional<Vec> const &counit() const { return counit_; }
	/// Installs a counit; throws unless (eps x id) Delta = id = (id x eps) Delta.
	void set_counit(Vec eps);
	void clear_counit() { counit_.reset(); }

	std::vector<std::string> const &basis_names() const { return names_; }
	void set_basis_names(std::vector<std::string> names)
	{
		if (names.size() != dim_)
			throw std::invalid_argument("basis name count does not match dimension");
		names_ = std::move(names);
	}
	std::string const &name() const { return name_; }
	void set_name(std::string n) { name_ = std::move(n); }

	friend bool operator==(Cogebra const &a, Cogebra const &b)
	{
		return a.dim_ == b.dim_ && a.d_ == b.d_ && a.counit_ == b.counit_;
	}

	void check_index(std::size_t i) const
	{
		if (i >= dim_)
			throw std::out_of_range("index out of range: " + std::to_string(i + 1) + " not in 1.." +
			                        std::to_string(dim_));
	}

private:
	std::size_t dim_;
	std::map<Key3, Rational> d_;
	std::optional<Vec> counit_;
	std::vector<std::string> names_;
	std::string name_;
};

/// Delta(x) as coordinates on C (x) C, flat index i*n + j.
inline Vec comultiply(Cogebra const &c, Vec const &x)
{
	if (x.size() != c.dim())
		throw std::invalid_argument("comultiply: vector length does not match cogebra dimension");
	std::size_t n = c.dim();
	Vec out(n * n);
	for (auto const &[key, d] : c.constants())
		if (!x[key[0]].is_zero())
			out[key[1] * n + key[2]] += x[key[0]] * d;
	return out;
}

inline void Cogebra::set_counit(Vec eps)
{
	if (eps.size() != dim_)
		throw std::invalid_argument("counit has wrong length");
	for (std::size_t k = 0; k < dim_; ++k)
	{
		Vec left(dim_), right(dim_);
		for (auto const &[key, d] : d_)
		{
			if (key[0] != k)
				continue;
			left[key[2]] += eps[key[1]] * d;
			right[key[1]] += eps[key[2]] * d;
		}
		Vec e = Vec::unit(dim_, k);
		if (left != e || right != e)
			throw std::invalid_argument("counit axiom fails on basis element " + std::to_string(k + 1));
	}
	counit_ = std::move(eps);
}

/// Sparse coordinates of a map C -> C (x) C (x) C: entry (i,j,k,l) is the
/// coefficient of e_i (x) e_j (x) e_k in the image of e_l.
class CubeMap
{
public:
	explicit CubeMap(std::size_t dim) : dim_(dim) {}

	std::size_t dim() const { return dim_; }
	std::map<Key4, Rational> const &entries() const { return t_; }

	void add(Key4 const &key, Rational const &c)
	{
		if (c.is_zero())
			return;
		auto [it, inserted] = t_.try_emplace(key, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				t_.erase(it);
		}
	}
	bool is_zero() const { return t_.empty(); }

	CubeMap &operator+=(CubeMap const &o)
	{
		for (auto const &[k, c] : o.t_)
			add(k, c);
		return *this;
	}
	friend CubeMap operator-(CubeMap a, CubeMap const &b)
	{
		for (auto const &[k, c] : b.t_)
			a.add(k, -c);
		return a;
	}
	friend CubeMap operator*(Rational const &s, CubeMap const &t)
	{
		CubeMap r(t.dim_);
		for (auto const &[k, c] : t.t_)
			r.add(k, s * c);
		return r;
	}
	friend bool operator==(CubeMap const &, CubeMap const &) = default;

private:
	std::size_t dim_;
	std::map<Key4, Rational> t_;
};

/// (Delta x Id) o Delta.
inline CubeMap left_cosquare(Cogebra const &c)
{
	std::vector<std::vector<std::pair<Key3, Rational>>> by_input(c.dim());
	for (auto const &[key, d] : c.constants())
		by_input[key[0]].push_back({key, d});
	CubeMap t(c.dim());
	for (auto const &[k1, d1] : c.constants()) // e_l -> e_m (x) e_k
		for (auto const &[k2, d2] : by_input[k1[1]]) // e_m -> e_i (x) e_j
			t.add({k2[1], k2[2], k1[2], k1[0]}, d1 * d2);
	return t;
}

/// (Id x Delta) o Delta.
inline CubeMap right_cosquare(Cogebra const &c)
{
	std::vector<std::vector<std::pair<Key3, Rational>>> by_input(c.dim());
	for (auto const &[key, d] : c.constants())
		by_input[key[0]].push_back({key, d});
	CubeMap t(c.dim());
	for (auto const &[k1, d1] : c.constants()) // e_l -> e_i (x) e_m
		for (auto const &[k2, d2] : by_input[k1[2]]) // e_m -> e_j (x) e_k
			t.add({k1[1], k2[1], k2[2], k1[0]}, d1 * d2);
	return t;
}

/// Phi_sigma o X: the factor in slot t moves to slot sigma(t).
inline CubeMap phi_postcompose(CubeMap const &x, Perm3 const &sigma)
{
	CubeMap r(x.dim());
	for (auto const &[a, c] : x.entries())
	{
		Key4 p{0, 0, 0, a[3]};
		for (int t = 0; t < 3; ++t)
			p[static_cast<std::size_t>(sigma(t))] = a[static_cast<std::size_t>(t)];
		r.add(p, c);
	}
	return r;
}

inline CubeMap phi_postcompose(CubeMap const &x, GroupAlgElem const &v)
{
	CubeMap r(x.dim());
	auto const &basis = s3_basis();
	for (std::size_t s = 0; s < 6; ++s)
		if (!v[s].is_zero())
			r += v[s] * phi_postcompose(x, basis[s]);
	return r;
}

inline bool is_coassociative(Cogebra const &c) { return left_cosquare(c) == right_cosquare(c); }

/// sum over G_i of sign(sigma) Phi_sigma o ((Delta x Id) Delta - (Id x Delta) Delta) == 0.
inline bool gi_cocheck(Cogebra const &c, SubgroupId g)
{
	return phi_postcompose(left_cosquare(c) - right_cosquare(c), alternating_sum(g)).is_zero();
}

/// How the G_i! slot-symmetry identity Phi_{u_i} o (Id x Delta) Delta = (Id x Delta) Delta
/// is read. Literal takes u_i = sum of sigma^{-1} over G_i as written; Normalized
/// divides it by |G_i|, which turns the identity into G_i-invariance.
enum class BangReading
{
	literal,
	normalized,
};

inline bool gi_bang_cocheck(Cogebra const &c, int i, BangReading reading)
{
	if (i < 2 || i > 6)
		throw std::invalid_argument("G_i! index must be in 2..6, got " + std::to_string(i));
	if (!is_coassociative(c))
		return false;
	SubgroupId g(i);
	auto x = right_cosquare(c);
	GroupAlgElem u = inverse_sum(g);
	if (reading == BangReading::normalized)
		u = Rational(1, static_cast<long>(g.members().size())) * u;
	return phi_postcompose(x, u) == x;
}

/// tau o Delta: swaps the two output factors.
inline Cogebra flip(Cogebra const &c)
{
	Cogebra r(c.dim());
	for (auto const &[key, d] : c.constants())
		r.set(key[0], key[2], key[1], d);
	r.set_basis_names(c.basis_names());
	return r;
}

/// Delta_L = Delta - tau o Delta. The counit is dropped.
inline Cogebra lie_cogebra_from(Cogebra const &c)
{
	Cogebra r(c.dim());
	for (auto const &[key, d] : c.constants())
	{
		r.add(key[0], key[1], key[2], d);
		r.add(key[0], key[2], key[1], -d);
	}
	r.set_basis_names(c.basis_names());
	return r;
}

/// tau o Delta = -Delta.
inline bool is_co_anticommutative(Cogebra const &c)
{
	for (auto const &[key, d] : c.constants())
		if (c.coeff(key[0], key[2], key[1]) != -d)
			return false;
	return true;
}

/// Phi_v o (Id x Delta) o Delta = 0 with v = Id + c1 + c2.
inline bool co_jacobi_check(Cogebra const &c)
{
	return phi_postcompose(right_cosquare(c), alternating_sum(SubgroupId(5))).is_zero();
}

inline bool is_lie_cogebra(Cogebra const &c) { return is_co_anticommutative(c) && co_jacobi_check(c); }

/// (f x f) o Delta = Delta' o f on basis elements, and eps' o f = eps when
/// both counits exist.
inline bool is_cogebra_morphism(LinearMap const &f, Cogebra const &c, Cogebra const &d)
{
	if (f.source_dim != c.dim() || f.target_dim != d.dim() || f.images.size() != c.dim())
		throw std::invalid_argument("morphism shape does not match the cogebras");
	std::size_t m = d.dim();
	for (std::size_t k = 0; k < c.dim(); ++k)
	{
		Vec lhs(m * m);
		for (auto const &[key, coef] : c.constants())
		{
			if (key[0] != k)
				continue;
			Vec const &fi = f.images[key[1]];
			Vec const &fj = f.images[key[2]];
			for (std::size_t p = 0; p < m; ++p)
				for (std::size_t q = 0; q < m; ++q)
					if (!fi[p].is_zero() && !fj[q].is_zero())
						lhs[p * m + q] += coef * fi[p] * fj[q];
		}
		if (lhs != comultiply(d, f.images[k]))
			return false;
	}
	if (c.counit() && d.counit())
		for (std::size_t k = 0; k < c.dim(); ++k)
		{
			Rational v;
			for (std::size_t p = 0; p < m; ++p)
				v += (*d.counit())[p] * f.images[k][p];
			if (v != (*c.counit())[k])
				return false;
		}
	return true;
}

/// Checks of a cogebra, mirroring ClassificationReport.
struct CogebraReport
{
	std::array<bool, 6> gi_coassoc{};
	std::array<bool, 5> gi_bang_literal{};
	std::array<bool, 5> gi_bang_normalized{};
	bool is_coassociative = false;
	bool has_counit = false;
	bool lie_cogebra_of_flip_difference = false;

	friend bool operator==(CogebraReport const &, CogebraReport const &) = default;
};

inline CogebraReport classify(Cogebra const &c)
{
	CogebraReport r;
	for (int i = 1; i <= 6; ++i)
		r.gi_coassoc[static_cast<std::size_t>(i - 1)] = gi_cocheck(c, SubgroupId(i));
	for (int i = 2; i <= 6; ++i)
	{
		r.gi_bang_literal[static_cast<std::size_t>(i - 2)] = gi_bang_cocheck(c, i, BangReading::literal);
		r.gi_bang_normalized[static_cast<std::size_t>(i - 2)] = gi_bang_cocheck(c, i, BangReading::normalized);
	}
	r.is_coassociative = r.gi_coassoc[0];
	r.has_counit = c.counit().has_value();
	r.lie_cogebra_of_flip_difference = is_lie_cogebra(lie_cogebra_from(c));
	return r;
}

} // namespace nalg

#endif
