#pragma once

#include <vector>

#include "mcg/gf2.hpp"

namespace mcg::cert {

/// BFS closure of the generators under multiplication: the exact group as a
/// set. Oracle-grade, feasible only for small orders; throws
/// OracleOverflowError past cap.
std::vector<gf2::Matrix> brute_force_closure(const std::vector<gf2::Matrix>& gens, std::size_t cap);

}  // namespace mcg::cert
