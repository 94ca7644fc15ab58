#pragma once

#include "coxstar/element.hpp"

namespace coxstar {

/// Demazure product: the unique maximum of {uv : u <= x, v <= y} in Bruhat
/// order. Folds the canonical word of x onto y, taking s_i z whenever that
/// is the longer of {z, s_i z}.
Element star(const Element& x, const Element& y);

/// Downward operation: the unique minimum of {uy : u <= x}. Same fold,
/// keeping the shorter element at each step.
Element down(const Element& x, const Element& y);

/// Fold variants over a precomputed reduced word of x (right to left).
Element star_fold(const Word& xword, Element z);
Element down_fold(const Word& xword, Element z);

/// Longest element of the parabolic subgroup W_J, built greedily by
/// prepending the smallest j in J that is not yet a left descent.
Element longest(const Group& g, NodeSet j);

/// w_0^J w_0^I; its length is l(w_0^I) - l(w_0^J).
Element w0J_w0I(const Group& g, NodeSet j);

}  // namespace coxstar
