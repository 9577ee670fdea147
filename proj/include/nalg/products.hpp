#ifndef NALG_PRODUCTS_HPP
#define NALG_PRODUCTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cogebra.hpp"

namespace nalg {

/// Row-major label of a pair basis: (a, b) -> a * n_right + b (0-based).
inline std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n_right) { return a * n_right + b; }

/// Kronecker product of vectors under the pair labeling.
inline Vec kron(Vec const &x, Vec const &y)
{
	Vec out(x.size() * y.size());
	for (std::size_t a = 0; a < x.size(); ++a)
		if (!x[a].is_zero())
			for (std::size_t b = 0; b < y.size(); ++b)
				out[pair_index(a, b, y.size())] = x[a] * y[b];
	return out;
}

/// (a1 (x) b1)(a2 (x) b2) = a1 a2 (x) b1 b2; unit = u_A (x) u_B when both exist.
inline Algebra tensor_algebras(Algebra const &a, Algebra const &b)
{
	std::size_t nb = b.dim();
	Algebra t(a.dim() * nb);
	for (auto const &[ka, ca] : a.constants())
		for (auto const &[kb, cb] : b.constants())
			t.set(pair_index(ka[0], kb[0], nb), pair_index(ka[1], kb[1], nb), pair_index(ka[2], kb[2], nb),
			      ca * cb);
	std::vector<std::string> names;
	for (auto const &x : a.basis_names())
		for (auto const &y : b.basis_names())
			names.push_back(x + "⊗" + y);
	t.set_basis_names(std::move(names));
	if (a.unit() && b.unit())
		t.set_unit(kron(*a.unit(), *b.unit()));
	return t;
}

/// id (x) f, or more generally f (x) g, as a linear map on the pair basis.
inline LinearMap tensor_maps(LinearMap const &f, LinearMap const &g)
{
	LinearMap h;
	h.source_dim = f.source_dim * g.source_dim;
	h.target_dim = f.target_dim * g.target_dim;
	for (std::size_t a = 0; a < f.source_dim; ++a)
		for (std::size_t b = 0; b < g.source_dim; ++b)
			h.images.push_back(kron(f.images[a], g.images[b]));
	return h;
}

inline LinearMap identity_map(std::size_t n)
{
	LinearMap f{n, n, {}};
	for (std::size_t i = 0; i < n; ++i)
		f.images.push_back(Vec::unit(n, i));
	return f;
}

/// Convolution algebra on Hom(C, A), f * g = mu o (f (x) g) o Delta.
/// Basis E(a, b) sends e_a of C to e_b of A and the other basis vectors of C
/// to zero; it has flat label pair_index(a, b, dim A). Then
///   E(a1,b1) * E(a2,b2) = sum_{k,l} D(k,a1,a2) C(b1,b2,l) E(k,l).
/// The unit is eta o eps when A has a unit and C a counit.
inline Algebra convolution_algebra(Cogebra const &c, Algebra const &a)
{
	std::size_t na = a.dim();
	Algebra h(c.dim() * na);
	for (auto const &[kd, d] : c.constants())
		for (auto const &[kc, m] : a.constants())
			h.add(pair_index(kd[1], kc[0], na), pair_index(kd[2], kc[1], na), pair_index(kd[0], kc[2], na),
			      d * m);
	std::vector<std::string> names;
	for (auto const &x : c.basis_names())
		for (auto const &y : a.basis_names())
			names.push_back("E[" + x + "->" + y + "]");
	h.set_basis_names(std::move(names));
	if (c.counit() && a.unit())
		h.set_unit(kron(*c.counit(), *a.unit()));
	return h;
}

} // namespace nalg

#endif
