#pragma once

#include <string>
#include <vector>

#include "cgl/space.hpp"

namespace cgl {

// Gamma = Z_2 with omega(a, b) = (-1)^{ab}; degree 0 has dim m, degree 1 dim n.
SpacePtr make_super(int m, int n);
// Gamma = Z_2 x Z_2 with omega(a, b) = (-1)^{a_1 b_2 + a_2 b_1}; dims for the
// degrees (0,0), (1,0), (0,1), (1,1) in that order (zero entries dropped).
SpacePtr make_z2z2(const std::vector<int>& dims);
// Gamma = Z^{m+n}, sign form 1 on pairs of indices > m, exponent form J.
SpacePtr make_glq(int m, int n);
// Gamma = Z^n with omega(a, b) = (-1)^{sum a_i b_i}; one line per eps_i.
SpacePtr make_green(int n);

// "super(m|n)", "z2z2(a,b,c,d)", "glq(m|n)", "green(n)".
SpacePtr preset(const std::string& name);
std::vector<std::string> builtin_spaces();

}  // namespace cgl
