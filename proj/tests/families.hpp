#ifndef EVENSETS_TESTS_FAMILIES_HPP
#define EVENSETS_TESTS_FAMILIES_HPP

#include <cstddef>
#include <vector>

#include "evensets/lattice.hpp"

namespace evensets::tests {

struct Family {
    SurfaceLattice lattice;
    std::vector<DivClass> curves;
};

// n nodal cubics 3H - E1..E9 - 2E_(9+i) on the plane blown up in 9 + n
// points. The sum is 2-divisible exactly when n is even.
inline Family nodal_family(std::size_t n) {
    Family f{SurfaceLattice(Ambient::Plane, 9 + n), {}};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Int> c(f.lattice.rank(), 0);
        c[0] = 3;
        for (std::size_t j = 1; j <= 9; ++j) c[j] = -1;
        c[9 + i] = -2;
        f.curves.emplace_back(std::move(c));
    }
    return f;
}

// n sextics 6H - 2E1..2E9 - 2E_(9+i); 2-divisible for every n.
inline Family sextic_family(std::size_t n) {
    Family f{SurfaceLattice(Ambient::Plane, 9 + n), {}};
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Int> c(f.lattice.rank(), 0);
        c[0] = 6;
        for (std::size_t j = 1; j <= 9; ++j) c[j] = -2;
        c[9 + i] = -2;
        f.curves.emplace_back(std::move(c));
    }
    return f;
}

} // namespace evensets::tests

#endif
