#ifndef NALG_TESTS_SUPPORT_HPP
#define NALG_TESTS_SUPPORT_HPP

#include <array>
#include <random>
#include <string>
#include <vector>

#include "nalg/nalg.hpp"

namespace nalg::test {

inline Catalog const &catalog()
{
	static Catalog c;
	return c;
}

inline std::vector<std::string> catalog_algebra_names()
{
	std::vector<std::string> out;
	for (auto const &e : catalog_entries())
		if (e.kind == "algebra")
			out.push_back(e.name);
	return out;
}

inline std::vector<std::string> catalog_cogebra_names()
{
	std::vector<std::string> out;
	for (auto const &e : catalog_entries())
		if (e.kind == "cogebra")
			out.push_back(e.name);
	return out;
}

inline Algebra algebra_from(std::size_t n, std::vector<std::pair<std::array<int, 3>, Rational>> const &entries)
{
	Algebra a(n);
	for (auto const &[k, c] : entries)
		a.set(k[0] - 1, k[1] - 1, k[2] - 1, c);
	return a;
}

// C(1,1,2) = 1, C(2,1,1) = 1: not 3-power associative
inline Algebra witness()
{
	return algebra_from(2, {{{1, 1, 2}, 1}, {{2, 1, 1}, 1}});
}

inline Vec random_vec(std::mt19937 &rng, std::size_t n)
{
	std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
	Vec v(n);
	for (std::size_t i = 0; i < n; ++i)
		v[i] = Rational(num(rng), den(rng));
	return v;
}

// ---------------------------------------------------------------------------
// oracles by direct multiplication, independent of the tensor machinery

inline Vec assoc_at(Algebra const &a, Vec const &x, Vec const &y, Vec const &z)
{
	return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

// subgroup members as 1-based images, with their signs
struct SignedPerm
{
	std::array<int, 3> img;
	int sign;
};

inline std::vector<SignedPerm> subgroup(int i)
{
	SignedPerm id{{1, 2, 3}, 1}, t12{{2, 1, 3}, -1}, t13{{3, 2, 1}, -1}, t23{{1, 3, 2}, -1}, c1{{2, 3, 1}, 1},
	    c2{{3, 1, 2}, 1};
	switch (i)
	{
	case 1: return {id};
	case 2: return {id, t12};
	case 3: return {id, t23};
	case 4: return {id, t13};
	case 5: return {id, c1, c2};
	default: return {id, t12, t13, t23, c1, c2};
	}
}

inline std::array<int, 3> inverse_images(std::array<int, 3> const &img)
{
	std::array<int, 3> inv{};
	for (int k = 0; k < 3; ++k)
		inv[static_cast<std::size_t>(img[static_cast<std::size_t>(k)] - 1)] = k + 1;
	return inv;
}

// sum over G_i of sign * A(x_{s^-1(1)}, x_{s^-1(2)}, x_{s^-1(3)})
inline Vec gi_form_at(Algebra const &a, int i, std::array<Vec, 3> const &x)
{
	Vec out(a.dim());
	for (auto const &sp : subgroup(i))
	{
		auto inv = inverse_images(sp.img);
		out.axpy(sp.sign, assoc_at(a, x[static_cast<std::size_t>(inv[0] - 1)],
		                           x[static_cast<std::size_t>(inv[1] - 1)], x[static_cast<std::size_t>(inv[2] - 1)]));
	}
	return out;
}

inline bool gi_oracle(Algebra const &a, int i)
{
	std::size_t n = a.dim();
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = 0; q < n; ++q)
			for (std::size_t r = 0; r < n; ++r)
				if (!gi_form_at(a, i, {Vec::unit(n, p), Vec::unit(n, q), Vec::unit(n, r)}).is_zero())
					return false;
	return true;
}

inline bool jacobi_oracle(Algebra const &a)
{
	std::size_t n = a.dim();
	for (std::size_t p = 0; p < n; ++p)
		for (std::size_t q = 0; q < n; ++q)
		{
			Vec ep = Vec::unit(n, p), eq = Vec::unit(n, q);
			if (multiply(a, ep, eq) != -multiply(a, eq, ep))
				return false;
			for (std::size_t r = 0; r < n; ++r)
			{
				Vec er = Vec::unit(n, r);
				Vec s = multiply(a, multiply(a, ep, eq), er) + multiply(a, multiply(a, eq, er), ep) +
				        multiply(a, multiply(a, er, ep), eq);
				if (!s.is_zero())
					return false;
			}
		}
	return true;
}

// triple product x_a x_b x_c of basis vectors in an associative algebra
inline Vec triple(Algebra const &a, std::size_t p, std::size_t q, std::size_t r)
{
	std::size_t n = a.dim();
	return multiply(a, multiply(a, Vec::unit(n, p), Vec::unit(n, q)), Vec::unit(n, r));
}

// Coordinates of (Id x Delta) Delta (e_k) as a map (i,j,l) -> coefficient,
// by explicit sums over the costructure constants.
inline std::map<std::array<std::size_t, 4>, Rational> right_cosquare_oracle(Cogebra const &c)
{
	std::size_t n = c.dim();
	std::map<std::array<std::size_t, 4>, Rational> out;
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t m = 0; m < n; ++m)
			{
				Rational d1 = c.coeff(k, i, m);
				if (d1.is_zero())
					continue;
				for (std::size_t j = 0; j < n; ++j)
					for (std::size_t l = 0; l < n; ++l)
					{
						Rational d2 = c.coeff(m, j, l);
						if (!d2.is_zero())
							out[{i, j, l, k}] += d1 * d2;
					}
			}
	std::erase_if(out, [](auto const &kv) { return kv.second.is_zero(); });
	return out;
}

} // namespace nalg::test

#endif
