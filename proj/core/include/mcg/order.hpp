#pragma once

#include <gmpxx.h>

#include "mcg/surface.hpp"

namespace mcg::cert {

/// |Sp(2n, 2)| = 2^{n^2} * prod_{i=1..n} (4^i - 1); argument is 2n.
mpz_class sp_order(int two_n);

/// Order of the full isometry group of the pairing at this genus:
/// |Sp(2h,2)| for odd g = 2h+1, 2^{2h+1} |Sp(2h,2)| for even g = 2h+2.
mpz_class expected_order(const surface::GenusConfig& cfg);

}  // namespace mcg::cert
