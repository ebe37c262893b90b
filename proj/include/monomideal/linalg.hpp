#pragma once

#include <cstdint>
#include <vector>

namespace monomideal::linalg {

/// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Exact rank over Q (characteristic 0) or GF(p).
std::size_t rank(IntMatrix m, std::uint32_t characteristic);

std::size_t rank_rational(IntMatrix m);
std::size_t rank_mod_p(IntMatrix m, std::uint32_t p);

} // namespace monomideal::linalg
