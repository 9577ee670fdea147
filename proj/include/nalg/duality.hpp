#ifndef NALG_DUALITY_HPP
#define NALG_DUALITY_HPP

#include <string>
#include <vector>

#include "algebra.hpp"
#include "cogebra.hpp"

namespace nalg {

namespace detail {

// "e1" <-> "e1*"; applying it twice restores the name.
inline std::vector<std::string> dual_names(std::vector<std::string> names)
{
	for (auto &n : names)
	{
		if (!n.empty() && n.back() == '*')
			n.pop_back();
		else
			n.push_back('*');
	}
	return names;
}

} // namespace detail

/// Delta(f_k) = sum_{i,j} C(i,j,k) f_i (x) f_j on the dual basis; the counit
/// is evaluation at the unit.
inline Cogebra dualize_algebra(Algebra const &a)
{
	Cogebra c(a.dim());
	for (auto const &[key, v] : a.constants())
		c.set(key[2], key[0], key[1], v);
	if (a.unit())
		c.set_counit(*a.unit());
	c.set_basis_names(detail::dual_names(a.basis_names()));
	if (!a.name().empty())
		c.set_name(a.name() + "_dual");
	return c;
}

/// mu(f_i, f_j) = sum_k D(k,i,j) f_k, i.e. f1 f2 = mu_K o (f1 (x) f2) o Delta.
inline Algebra dualize_cogebra(Cogebra const &c)
{
	Algebra a(c.dim());
	for (auto const &[key, v] : c.constants())
		a.set(key[1], key[2], key[0], v);
	if (c.counit())
		a.set_unit(*c.counit());
	a.set_basis_names(detail::dual_names(c.basis_names()));
	if (!c.name().empty())
		a.set_name(c.name() + "_dual");
	return a;
}

} // namespace nalg

#endif
