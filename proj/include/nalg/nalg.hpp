#ifndef NALG_NALG_HPP
#define NALG_NALG_HPP

#include "rational.hpp"
#include "linalg.hpp"
#include "sym3.hpp"
#include "algebra.hpp"
#include "cogebra.hpp"
#include "duality.hpp"
#include "products.hpp"
#include "io.hpp"
#include "catalog.hpp"

#endif
