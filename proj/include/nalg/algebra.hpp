#ifndef NALG_ALGEBRA_HPP
#define NALG_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "sym3.hpp"

namespace nalg {

using Key3 = std::array<std::size_t, 3>;
using Key4 = std::array<std::size_t, 4>;

inline std::vector<std::string> default_basis_names(std::size_t n, std::string const &prefix = "e")
{
	std::vector<std::string> names;
	for (std::size_t i = 1; i <= n; ++i)
		names.push_back(prefix + std::to_string(i));
	return names;
}

/// Finite-dimensional algebra given by structure constants
/// e_i e_j = sum_k C(i,j,k) e_k. Indices are 0-based; absent entries are zero.
class Algebra
{
public:
	explicit Algebra(std::size_t dim) : dim_(dim), names_(default_basis_names(dim)) {}

	std::size_t dim() const { return dim_; }

	void set(std::size_t i, std::size_t j, std::size_t k, Rational c)
	{
		check_index(i), check_index(j), check_index(k);
		if (c.is_zero())
			c_.erase({i, j, k});
		else
			c_[{i, j, k}] = std::move(c);
	}
	void add(std::size_t i, std::size_t j, std::size_t k, Rational const &c) { set(i, j, k, coeff(i, j, k) + c); }

	Rational coeff(std::size_t i, std::size_t j, std::size_t k) const
	{
		auto it = c_.find({i, j, k});
		return it == c_.end() ? Rational() : it->second;
	}

	/// Nonzero constants, ordered by (i, j, k).
	std::map<Key3, Rational> const &constants() const { return c_; }

	std::optional<Vec> const &unit() const { return unit_; }

	/// Installs a two-sided unit; throws if u e_j = e_j = e_j u fails for some j.
	void set_unit(Vec u);
	void clear_unit() { unit_.reset(); }

	std::vector<std::string> const &basis_names() const { return names_; }
	void set_basis_names(std::vector<std::string> names)
	{
		if (names.size() != dim_)
			throw std::invalid_argument("basis name count does not match dimension");
		names_ = std::move(names);
	}

	std::string const &name() const { return name_; }
	void set_name(std::string n) { name_ = std::move(n); }

	/// Equality of the mathematical data (constants and unit); labels ignored.
	friend bool operator==(Algebra const &a, Algebra const &b)
	{
		return a.dim_ == b.dim_ && a.c_ == b.c_ && a.unit_ == b.unit_;
	}

	void check_index(std::size_t i) const
	{
		if (i >= dim_)
			throw std::out_of_range("index out of range: " + std::to_string(i + 1) + " not in 1.." +
			                        std::to_string(dim_));
	}

private:
	std::size_t dim_;
	std::map<Key3, Rational> c_;
	std::optional<Vec> unit_;
	std::vector<std::string> names_;
	std::string name_;
};

inline Vec multiply(Algebra const &a, Vec const &x, Vec const &y)
{
	if (x.size() != a.dim() || y.size() != a.dim())
		throw std::invalid_argument("multiply: vector length does not match algebra dimension");
	Vec out(a.dim());
	for (auto const &[key, c] : a.constants())
	{
		auto const &[i, j, k] = key;
		if (x[i].is_zero() || y[j].is_zero())
			continue;
		out[k] += x[i] * y[j] * c;
	}
	return out;
}

inline void Algebra::set_unit(Vec u)
{
	if (u.size() != dim_)
		throw std::invalid_argument("unit has wrong length");
	for (std::size_t j = 0; j < dim_; ++j)
	{
		Vec e = Vec::unit(dim_, j);
		if (multiply(*this, u, e) != e || multiply(*this, e, u) != e)
			throw std::invalid_argument("unit axiom fails on basis element " + std::to_string(j + 1));
	}
	unit_ = std::move(u);
}

/// Sparse coordinates T(i,j,k,l) of a trilinear map
/// T(e_i, e_j, e_k) = sum_l T(i,j,k,l) e_l.
class TrilinearMap
{
public:
	explicit TrilinearMap(std::size_t dim) : dim_(dim) {}

	std::size_t dim() const { return dim_; }
	std::map<Key4, Rational> const &entries() const { return t_; }

	Rational at(Key4 const &key) const
	{
		auto it = t_.find(key);
		return it == t_.end() ? Rational() : it->second;
	}

	void add(Key4 const &key, Rational const &c)
	{
		if (c.is_zero())
			return;
		for (auto i : key)
			if (i >= dim_)
				throw std::out_of_range("trilinear map index out of range");
		auto [it, inserted] = t_.try_emplace(key, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				t_.erase(it);
		}
	}

	bool is_zero() const { return t_.empty(); }

	TrilinearMap &operator+=(TrilinearMap const &o)
	{
		for (auto const &[k, c] : o.t_)
			add(k, c);
		return *this;
	}
	friend TrilinearMap operator+(TrilinearMap a, TrilinearMap const &b) { return a += b; }
	friend TrilinearMap operator-(TrilinearMap a, TrilinearMap const &b)
	{
		for (auto const &[k, c] : b.t_)
			a.add(k, -c);
		return a;
	}
	friend TrilinearMap operator*(Rational const &s, TrilinearMap const &t)
	{
		TrilinearMap r(t.dim_);
		for (auto const &[k, c] : t.t_)
			r.add(k, s * c);
		return r;
	}
	friend bool operator==(TrilinearMap const &, TrilinearMap const &) = default;

private:
	std::size_t dim_;
	std::map<Key4, Rational> t_;
};

namespace detail {

// constants grouped by their first (resp. second) input index
struct ConstantIndex
{
	// by_left[m] = {(k, l, C(m,k,l))}
	std::vector<std::vector<std::pair<Key3, Rational>>> by_left;
	// by_right[m] = {(i, l, C(i,m,l))}
	std::vector<std::vector<std::pair<Key3, Rational>>> by_right;

	explicit ConstantIndex(Algebra const &a) : by_left(a.dim()), by_right(a.dim())
	{
		for (auto const &[key, c] : a.constants())
		{
			by_left[key[0]].push_back({key, c});
			by_right[key[1]].push_back({key, c});
		}
	}
};

} // namespace detail

/// (x y) z as a trilinear map.
inline TrilinearMap left_triple_product(Algebra const &a)
{
	detail::ConstantIndex idx(a);
	TrilinearMap t(a.dim());
	for (auto const &[k1, c1] : a.constants())
		for (auto const &[k2, c2] : idx.by_left[k1[2]])
			t.add({k1[0], k1[1], k2[1], k2[2]}, c1 * c2);
	return t;
}

/// x (y z) as a trilinear map.
inline TrilinearMap right_triple_product(Algebra const &a)
{
	detail::ConstantIndex idx(a);
	TrilinearMap t(a.dim());
	for (auto const &[k1, c1] : a.constants()) // y z -> m
		for (auto const &[k2, c2] : idx.by_right[k1[2]]) // x m -> l
			t.add({k2[0], k1[0], k1[1], k2[2]}, c1 * c2);
	return t;
}

/// A(x,y,z) = (xy)z - x(yz).
inline TrilinearMap associator(Algebra const &a) { return left_triple_product(a) - right_triple_product(a); }

/// T o Phi_sigma, where Phi_sigma(x1 x2 x3) = x_{s^-1(1)} x_{s^-1(2)} x_{s^-1(3)}.
/// The entry of T at (b, l) lands at position a with a[t] = b[sigma(t)].
inline TrilinearMap phi_precompose(TrilinearMap const &t, Perm3 const &sigma)
{
	TrilinearMap r(t.dim());
	for (auto const &[b, c] : t.entries())
		r.add({b[static_cast<std::size_t>(sigma(0))], b[static_cast<std::size_t>(sigma(1))],
		       b[static_cast<std::size_t>(sigma(2))], b[3]},
		      c);
	return r;
}

inline TrilinearMap phi_precompose(TrilinearMap const &t, GroupAlgElem const &v)
{
	TrilinearMap r(t.dim());
	auto const &basis = s3_basis();
	for (std::size_t s = 0; s < 6; ++s)
		if (!v[s].is_zero())
			r += v[s] * phi_precompose(t, basis[s]);
	return r;
}

/// A_mu o Phi_v == 0.
inline bool is_sigma3_assoc_for(Algebra const &a, GroupAlgElem const &v)
{
	return phi_precompose(associator(a), v).is_zero();
}

/// Sum over G_i of sign(sigma) A_mu o Phi_sigma == 0.
inline bool gi_check(Algebra const &a, SubgroupId g) { return is_sigma3_assoc_for(a, alternating_sum(g)); }

inline bool is_associative(Algebra const &a) { return associator(a).is_zero(); }

/// The square mu o (mu x Id)_{G_i} = mu o (Id x mu)_{G_i}, built from the two
/// bracketings separately rather than from the associator.
inline bool gi_square_commutes(Algebra const &a, SubgroupId g)
{
	auto left = left_triple_product(a);
	auto right = right_triple_product(a);
	TrilinearMap lhs(a.dim()), rhs(a.dim());
	for (auto const &s : g.members())
	{
		Rational sg = sign(s);
		lhs += sg * phi_precompose(left, s);
		rhs += sg * phi_precompose(right, s);
	}
	return lhs == rhs;
}

/// All v in K[S3] with A_mu o Phi_v = 0: the kernel of the linear system with
/// one row per coordinate (i,j,k,l) and one unknown per permutation.
inline Subspace annihilator(Algebra const &a)
{
	auto t = associator(a);
	std::map<Key4, Vec> rows;
	auto const &basis = s3_basis();
	for (std::size_t s = 0; s < 6; ++s)
	{
		auto permuted = phi_precompose(t, basis[s]);
		for (auto const &[key, c] : permuted.entries())
		{
			auto [it, _] = rows.try_emplace(key, Vec(6));
			it->second[s] += c;
		}
	}
	EchelonBasis e(6);
	for (auto &[key, row] : rows)
	{
		if (e.rank() == 6)
			break;
		e.add(std::move(row));
	}
	return kernel(6, e.rows());
}

/// [x,y] = xy - yx.
inline Algebra commutator_algebra(Algebra const &a)
{
	Algebra b(a.dim());
	for (auto const &[key, c] : a.constants())
	{
		b.add(key[0], key[1], key[2], c);
		b.add(key[1], key[0], key[2], -c);
	}
	b.set_basis_names(a.basis_names());
	return b;
}

inline bool is_antisymmetric(Algebra const &a)
{
	for (auto const &[key, c] : a.constants())
		if (a.coeff(key[1], key[0], key[2]) != -c)
			return false;
	return true;
}

inline bool is_commutative(Algebra const &a)
{
	for (auto const &[key, c] : a.constants())
		if (a.coeff(key[1], key[0], key[2]) != c)
			return false;
	return true;
}

/// Antisymmetry plus [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on every basis
/// triple, evaluated by direct multiplication.
inline bool jacobi_check(Algebra const &a)
{
	if (!is_antisymmetric(a))
		return false;
	std::size_t n = a.dim();
	std::vector<Vec> e;
	for (std::size_t i = 0; i < n; ++i)
		e.push_back(Vec::unit(n, i));
	std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			prod[i][j] = multiply(a, e[i], e[j]);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k)
			{
				Vec s = multiply(a, prod[i][j], e[k]);
				s += multiply(a, prod[j][k], e[i]);
				s += multiply(a, prod[k][i], e[j]);
				if (!s.is_zero())
					return false;
			}
	// triples with a repeated index vanish by antisymmetry
	return true;
}

/// A_mu o Phi_W == 0.
inline bool power_assoc_check(Algebra const &a) { return is_sigma3_assoc_for(a, vector_W()); }

/// Coefficients of the cubic polynomial map x -> A_mu(x,x,x), keyed by the
/// sorted monomial (i <= j <= k) and expanded by direct multiplication.
inline std::map<Key3, Vec> cubic_associator_form(Algebra const &a)
{
	std::size_t n = a.dim();
	std::map<Key3, Vec> form;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j);
			Vec ij = multiply(a, ei, ej);
			for (std::size_t k = 0; k < n; ++k)
			{
				Vec ek = Vec::unit(n, k);
				Vec v = multiply(a, ij, ek) - multiply(a, ei, multiply(a, ej, ek));
				if (v.is_zero())
					continue;
				Key3 mono{i, j, k};
				std::sort(mono.begin(), mono.end());
				auto [it, _] = form.try_emplace(mono, Vec(n));
				it->second += v;
			}
		}
	std::erase_if(form, [](auto const &kv) { return kv.second.is_zero(); });
	return form;
}

/// Associative and, for i in 2..6, the triple products satisfy
///   i=2: x1x2x3 = x2x1x3        i=3: x1x2x3 = x1x3x2
///   i=4: x1x2x3 = x3x2x1        i=5: x1x2x3 = x2x3x1 = x3x1x2
///   i=6: x1x2x3 = x_s(1)x_s(2)x_s(3) for every permutation s
inline bool gi_bang_check(Algebra const &a, int i)
{
	if (i < 2 || i > 6)
		throw std::invalid_argument("G_i! index must be in 2..6, got " + std::to_string(i));
	if (!is_associative(a))
		return false;
	// each entry lists where x1, x2, x3 sit on the right-hand side
	using Order = std::array<std::size_t, 3>;
	std::vector<Order> rhs;
	switch (i)
	{
	case 2: rhs = {{1, 0, 2}}; break;
	case 3: rhs = {{0, 2, 1}}; break;
	case 4: rhs = {{2, 1, 0}}; break;
	case 5: rhs = {{1, 2, 0}, {2, 0, 1}}; break;
	default: rhs = {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}; break;
	}
	auto p = left_triple_product(a);
	std::size_t n = a.dim();
	for (std::size_t x1 = 0; x1 < n; ++x1)
		for (std::size_t x2 = 0; x2 < n; ++x2)
			for (std::size_t x3 = 0; x3 < n; ++x3)
			{
				Key3 x{x1, x2, x3};
				for (auto const &o : rhs)
					for (std::size_t l = 0; l < n; ++l)
						if (p.at({x1, x2, x3, l}) != p.at({x[o[0]], x[o[1]], x[o[2]], l}))
							return false;
			}
	return true;
}

struct ClassificationReport
{
	std::array<bool, 6> gi_assoc{};  // index i-1 for G_i
	std::array<bool, 5> gi_bang{};   // index i-2 for G_i!
	bool is_associative = false;
	bool is_lie_admissible = false;
	bool is_3_power_associative = false;
	bool has_unit = false;
	std::size_t annihilator_dim = 0;
	std::vector<GroupAlgElem> annihilator_basis;

	friend bool operator==(ClassificationReport const &, ClassificationReport const &) = default;
};

inline ClassificationReport classify(Algebra const &a)
{
	ClassificationReport r;
	for (int i = 1; i <= 6; ++i)
		r.gi_assoc[static_cast<std::size_t>(i - 1)] = gi_check(a, SubgroupId(i));
	for (int i = 2; i <= 6; ++i)
		r.gi_bang[static_cast<std::size_t>(i - 2)] = gi_bang_check(a, i);
	r.is_associative = r.gi_assoc[0];
	r.is_lie_admissible = r.gi_assoc[5];
	r.is_3_power_associative = power_assoc_check(a);
	r.has_unit = a.unit().has_value();
	auto ann = annihilator(a);
	r.annihilator_dim = ann.dim();
	for (auto const &b : ann.basis())
		r.annihilator_basis.push_back(GroupAlgElem::from_vec(b));
	return r;
}

/// Linear map given by the images of the basis vectors.
struct LinearMap
{
	std::size_t source_dim = 0;
	std::size_t target_dim = 0;
	std::vector<Vec> images; // images[j] = f(e_j)

	Vec apply(Vec const &x) const
	{
		if (x.size() != source_dim)
			throw std::invalid_argument("linear map applied to vector of wrong length");
		Vec out(target_dim);
		for (std::size_t j = 0; j < source_dim; ++j)
			out.axpy(x[j], images[j]);
		return out;
	}
};

/// mu'(f x f) = f mu on basis pairs, and f(unit) = unit' when both exist.
inline bool is_algebra_morphism(LinearMap const &f, Algebra const &a, Algebra const &b)
{
	if (f.source_dim != a.dim() || f.target_dim != b.dim() || f.images.size() != a.dim())
		throw std::invalid_argument("morphism shape does not match the algebras");
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = 0; j < a.dim(); ++j)
		{
			Vec lhs = multiply(b, f.images[i], f.images[j]);
			Vec rhs = f.apply(multiply(a, Vec::unit(a.dim(), i), Vec::unit(a.dim(), j)));
			if (lhs != rhs)
				return false;
		}
	if (a.unit() && b.unit() && f.apply(*a.unit()) != *b.unit())
		return false;
	return true;
}

} // namespace nalg

#endif
