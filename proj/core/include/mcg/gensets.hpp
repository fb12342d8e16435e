#pragma once

#include <string>
#include <vector>

#include "mcg/surface.hpp"

namespace mcg::gensets {

/// {T, A_1 A_2^-1, B_1 B_2^-1, u_1} (needs g >= 7 for the full chain, but
/// the matrices exist for any g >= 5 with r >= 2).
std::vector<gf2::Matrix> twist_pair_set(const surface::Model& m);

/// {T, u_{g-1} Gamma_10 C_2^-1}.
std::vector<gf2::Matrix> two_element_set(const surface::Model& m);

/// Three involutions: {rho_1, rho_2, rho_2 A_2 B_r B_3 u_{r+3}} for even g,
/// {rho_1, rho_2, rho_2 A_2 C_{r-1} B_3 v_{r+2}} for odd g.
std::vector<gf2::Matrix> involution_set(const surface::Model& m);

/// {A_1, A_2, B_1..B_r, C_1..C_cmax, y_1}: the reduction target set.
std::vector<gf2::Matrix> twist_slide_set(const surface::Model& m);

/// {rho_1, rho_2}: the dihedral negative control.
std::vector<gf2::Matrix> dihedral_set(const surface::Model& m);

/// Images of a generator set under the symplectic quotient.
std::vector<gf2::Matrix> quotient_images(const surface::Model& m,
                                         const std::vector<gf2::Matrix>& gens);

/// Named lookup used by the CLI: thm21, thmA, thmB, twistslide, dihedral.
std::vector<gf2::Matrix> named_set(const surface::Model& m, const std::string& name);

}  // namespace mcg::gensets
