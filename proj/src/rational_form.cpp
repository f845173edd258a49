#include "evensets/rational_form.hpp"

namespace evensets {

namespace {

// Symmetric congruence: clear row/col p against all later rows using the
// nonzero diagonal pivot g[p][p].
void eliminate_with_pivot(RatMatrix& g, std::size_t p, const std::vector<std::size_t>& live) {
    const Rat d = g[p][p];
    // Freeze the pivot row: every row's update must see the original entries,
    // not ones already zeroed by an earlier row's mirror clear.
    std::vector<Rat> prow(g.size());
    for (std::size_t c : live) prow[c] = g[p][c];
    for (std::size_t r : live) {
        if (r == p || prow[r] == 0) continue;
        Rat f = prow[r] / d;
        for (std::size_t c : live) {
            if (c == p) continue;
            g[r][c] -= f * prow[c];
        }
        g[r][p] = 0;
        g[p][r] = 0;
    }
}

} // namespace

Inertia symmetric_inertia(RatMatrix g) {
    Inertia out;
    const std::size_t n = g.size();
    std::vector<bool> done(n, false);

    auto live_rows = [&] {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) v.push_back(i);
        return v;
    };

    while (true) {
        auto live = live_rows();
        if (live.empty()) break;

        std::size_t pivot = n;
        for (std::size_t i : live)
            if (g[i][i] != 0) { pivot = i; break; }

        if (pivot != n) {
            eliminate_with_pivot(g, pivot, live);
            if (g[pivot][pivot] > 0)
                ++out.positive;
            else
                ++out.negative;
            done[pivot] = true;
            continue;
        }

        // All live diagonals vanish. Any off-diagonal entry makes a
        // hyperbolic pair; symmetrize it onto the diagonal first.
        std::size_t a = n, b = n;
        for (std::size_t ii = 0; ii < live.size() && a == n; ++ii)
            for (std::size_t jj = ii + 1; jj < live.size(); ++jj)
                if (g[live[ii]][live[jj]] != 0) {
                    a = live[ii];
                    b = live[jj];
                    break;
                }
        if (a == n) {
            out.zero += live.size();
            break;
        }
        for (std::size_t c : live) {
            g[a][c] += g[b][c];
        }
        for (std::size_t r : live) {
            g[r][a] += g[r][b];
        }
        // Now g[a][a] = 2*old(a,b) != 0; loop back to the pivot branch.
    }
    return out;
}

bool negative_semidefinite(const RatMatrix& g) {
    return symmetric_inertia(g).positive == 0;
}

std::size_t kernel_dimension(const RatMatrix& g) {
    return symmetric_inertia(g).zero;
}

} // namespace evensets
