#ifndef NALG_LINALG_HPP
#define NALG_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace nalg {

/// Dense vector of exact rationals. The length is fixed at construction.
class Vec
{
public:
	Vec() = default;
	explicit Vec(std::size_t n) : c_(n) {}
	Vec(std::initializer_list<Rational> init) : c_(init) {}
	explicit Vec(std::vector<Rational> coords) : c_(std::move(coords)) {}

	static Vec unit(std::size_t n, std::size_t i)
	{
		Vec v(n);
		v.c_.at(i) = 1;
		return v;
	}

	std::size_t size() const { return c_.size(); }
	Rational &operator[](std::size_t i) { return c_[i]; }
	Rational const &operator[](std::size_t i) const { return c_[i]; }
	auto begin() const { return c_.begin(); }
	auto end() const { return c_.end(); }
	std::vector<Rational> const &coords() const { return c_; }

	bool is_zero() const
	{
		return std::all_of(c_.begin(), c_.end(), [](Rational const &x) { return x.is_zero(); });
	}

	Vec &operator+=(Vec const &o)
	{
		check_same(o);
		for (std::size_t i = 0; i < c_.size(); ++i)
			c_[i] += o.c_[i];
		return *this;
	}
	Vec &operator-=(Vec const &o)
	{
		check_same(o);
		for (std::size_t i = 0; i < c_.size(); ++i)
			c_[i] -= o.c_[i];
		return *this;
	}
	Vec &operator*=(Rational const &s)
	{
		for (auto &x : c_)
			x *= s;
		return *this;
	}

	/// this += s * o
	void axpy(Rational const &s, Vec const &o)
	{
		check_same(o);
		if (s.is_zero())
			return;
		for (std::size_t i = 0; i < c_.size(); ++i)
			if (!o.c_[i].is_zero())
				c_[i] += s * o.c_[i];
	}

	friend Vec operator+(Vec a, Vec const &b) { return a += b; }
	friend Vec operator-(Vec a, Vec const &b) { return a -= b; }
	friend Vec operator*(Rational const &s, Vec v) { return v *= s; }
	friend Vec operator-(Vec v)
	{
		for (auto &x : v.c_)
			x = -x;
		return v;
	}
	friend bool operator==(Vec const &, Vec const &) = default;
	friend auto operator<=>(Vec const &a, Vec const &b) { return a.c_ <=> b.c_; }

	friend std::ostream &operator<<(std::ostream &os, Vec const &v)
	{
		os << '(';
		for (std::size_t i = 0; i < v.size(); ++i)
			os << (i ? "," : "") << v[i];
		return os << ')';
	}

private:
	void check_same(Vec const &o) const
	{
		if (o.size() != size())
			throw std::invalid_argument("vector dimension mismatch: " + std::to_string(size()) +
			                            " vs " + std::to_string(o.size()));
	}

	std::vector<Rational> c_;
};

/// Rows of a rectangular matrix.
using Matrix = std::vector<Vec>;

/// Incrementally maintained reduced row-echelon basis. Rows are sorted by
/// pivot column, each pivot entry is 1 and every pivot column is zero in all
/// other rows.
class EchelonBasis
{
public:
	explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t rank() const { return rows_.size(); }
	std::vector<Vec> const &rows() const { return rows_; }
	std::vector<std::size_t> const &pivots() const { return pivots_; }

	/// Reduces v against the current rows; zero iff v is in the span.
	Vec reduce(Vec v) const
	{
		check(v);
		for (std::size_t r = 0; r < rows_.size(); ++r)
		{
			Rational f = v[pivots_[r]];
			if (!f.is_zero())
				v.axpy(-f, rows_[r]);
		}
		return v;
	}

	/// Adds v to the span. Returns true if the rank grew.
	bool add(Vec v)
	{
		v = reduce(std::move(v));
		std::size_t p = 0;
		while (p < v.size() && v[p].is_zero())
			++p;
		if (p == v.size())
			return false;
		v *= Rational(1) / v[p];
		for (auto &row : rows_)
		{
			Rational f = row[p];
			if (!f.is_zero())
				row.axpy(-f, v);
		}
		auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
		auto idx = at - pivots_.begin();
		pivots_.insert(at, p);
		rows_.insert(rows_.begin() + idx, std::move(v));
		return true;
	}

private:
	void check(Vec const &v) const
	{
		if (v.size() != ambient_)
			throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
			                            " in ambient dimension " + std::to_string(ambient_));
	}

	std::size_t ambient_;
	std::vector<Vec> rows_;
	std::vector<std::size_t> pivots_;
};

/// Linear subspace of Q^n stored by its canonical reduced row-echelon basis,
/// so equality of subspaces is equality of the stored data.
class Subspace
{
public:
	explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
	explicit Subspace(EchelonBasis const &e) : ambient_(e.ambient_dim()), basis_(e.rows()) {}

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	std::vector<Vec> const &basis() const { return basis_; }

	friend bool operator==(Subspace const &, Subspace const &) = default;

private:
	std::size_t ambient_;
	std::vector<Vec> basis_;
};

inline Subspace span(std::size_t ambient, std::span<Vec const> vectors)
{
	EchelonBasis e(ambient);
	for (auto const &v : vectors)
	{
		if (e.rank() == ambient)
		{
			// still validate the remaining lengths
			if (v.size() != ambient)
				throw std::invalid_argument("vector dimension mismatch in span");
			continue;
		}
		e.add(v);
	}
	return Subspace(e);
}

inline Subspace span(std::size_t ambient, std::initializer_list<Vec> vectors)
{
	return span(ambient, std::span<Vec const>(vectors.begin(), vectors.size()));
}

inline std::size_t rank(std::size_t cols, std::span<Vec const> rows) { return span(cols, rows).dim(); }

/// Null space of the matrix with the given rows, in canonical form.
inline Subspace kernel(std::size_t cols, std::span<Vec const> rows)
{
	Subspace rowspace = span(cols, rows);
	std::vector<bool> is_pivot(cols, false);
	std::vector<std::size_t> pivots;
	for (auto const &row : rowspace.basis())
	{
		std::size_t p = 0;
		while (row[p].is_zero())
			++p;
		is_pivot[p] = true;
		pivots.push_back(p);
	}
	std::vector<Vec> gens;
	for (std::size_t f = 0; f < cols; ++f)
	{
		if (is_pivot[f])
			continue;
		Vec v(cols);
		v[f] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -rowspace.basis()[r][f];
		gens.push_back(std::move(v));
	}
	return span(cols, gens);
}

inline Subspace kernel(std::size_t cols, std::initializer_list<Vec> rows)
{
	return kernel(cols, std::span<Vec const>(rows.begin(), rows.size()));
}

inline bool member(Vec const &v, Subspace const &s)
{
	if (v.size() != s.ambient_dim())
		throw std::invalid_argument("membership test with mismatched dimension");
	EchelonBasis e(s.ambient_dim());
	for (auto const &b : s.basis())
		e.add(b);
	return e.reduce(v).is_zero();
}

inline bool contains(Subspace const &big, Subspace const &small)
{
	return std::all_of(small.basis().begin(), small.basis().end(),
	                   [&](Vec const &v) { return member(v, big); });
}

} // namespace nalg

#endif
