#ifndef EVENSETS_RATIONAL_FORM_HPP
#define EVENSETS_RATIONAL_FORM_HPP

#include <cstddef>
#include <vector>

#include "evensets/lattice.hpp"

namespace evensets {

using RatMatrix = std::vector<std::vector<Rat>>;

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Exact signature of a symmetric rational matrix by congruence elimination.
/// No floating point: diagonal pivots where available, and the 2x2
/// hyperbolic trick (row/col addition) when only off-diagonal mass is left.
Inertia symmetric_inertia(RatMatrix g);

/// Negative semidefinite test: no positive inertia.
bool negative_semidefinite(const RatMatrix& g);

/// Rank = positive + negative; kernel dimension = zero.
std::size_t kernel_dimension(const RatMatrix& g);

} // namespace evensets

#endif
