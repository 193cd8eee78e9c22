#pragma once

#include "bbs/ordering.hpp"
#include "bbs/polynomial.hpp"

namespace bbs {

// W-degrees only see the main variables; parameters and the deformation
// variable have W-degree 0.

int degree_w(const Term& t, const WeightVector& w);
/// Maximum W-degree over the support, or -1 for the zero polynomial.
int degree_w(const Polynomial& f, const WeightVector& w);
/// Sum of the monomials of maximal W-degree. Throws ZeroPolynomial.
Polynomial degree_form(const Polynomial& f, const WeightVector& w);
bool is_homogeneous(const Polynomial& f, const WeightVector& w);

/// f^hom = sum_u c_u x_0^(deg_W f - deg_W u) u with x_0 the context's
/// deformation variable. Throws ZeroPolynomial, MissingVariable.
Polynomial homogenize(const Polynomial& f, const WeightVector& w);
/// x_0 -> 1
Polynomial dehomogenize(const Polynomial& f);

}  // namespace bbs
