#include "evensets/search.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "evensets/errors.hpp"

namespace evensets {

namespace {

void check_bounds(const SurfaceLattice& lat, long long bound) {
    if (bound < 1) fail("BadInput", "search bound is positive");
    if (lat.k() > 12 || bound > 6)
        fail("BoundsTooLarge", "the search box is limited to k <= 12 and bound <= 6");
}

// Fill exceptional coefficients under sum and square-sum targets.
// Prunes on range and on (sum)^2 <= slots * (square sum).
void dfs_exceptional(std::size_t slot, std::size_t k, long long bound, long long sum_rem,
                     long long sq_rem, std::vector<Int>& coeffs, std::size_t base,
                     std::vector<DivClass>& out) {
    if (slot == k) {
        if (sum_rem == 0 && sq_rem == 0) out.emplace_back(coeffs);
        return;
    }
    const long long r = static_cast<long long>(k - slot);
    if (sum_rem > r * bound || sum_rem < -r * bound) return;
    if (sq_rem < 0 || sq_rem > r * bound * bound) return;
    if (sum_rem * sum_rem > r * sq_rem) return;
    for (long long b = -bound; b <= bound; ++b) {
        coeffs[base + slot] = b;
        dfs_exceptional(slot + 1, k, bound, sum_rem - b, sq_rem - b * b, coeffs, base, out);
    }
    coeffs[base + slot] = 0;
}

struct OuterCase {
    long long a1 = 0;
    long long a2 = 0; // quadric only
};

// Genus-0 (-4)-classes with fixed ambient coefficients: the exceptional
// part must hit an exact coefficient sum and square sum.
std::vector<DivClass> solve_outer(const SurfaceLattice& lat, long long bound,
                                  const OuterCase& oc) {
    std::vector<DivClass> out;
    const std::size_t k = lat.k();
    std::vector<Int> coeffs(lat.rank(), Int(0));
    long long sum_target = 0;
    long long sq_target = 0;
    if (lat.ambient() == Ambient::Plane) {
        coeffs[0] = oc.a1;
        sum_target = -3 * oc.a1 - 2;
        sq_target = oc.a1 * oc.a1 + 4;
    } else {
        coeffs[0] = oc.a1;
        coeffs[1] = oc.a2;
        sum_target = -2 * (oc.a1 + oc.a2) - 2;
        sq_target = 2 * oc.a1 * oc.a2 + 4;
    }
    dfs_exceptional(0, k, bound, sum_target, sq_target, coeffs, lat.ambient_rank(), out);
    return out;
}

} // namespace

std::vector<DivClass> enumerate_neg4_classes(const SurfaceLattice& lat, long long bound,
                                             bool parallel) {
    check_bounds(lat, bound);
    std::vector<OuterCase> outers;
    if (lat.ambient() == Ambient::Plane) {
        for (long long a = -bound; a <= bound; ++a) outers.push_back({a, 0});
    } else {
        for (long long a1 = -bound; a1 <= bound; ++a1)
            for (long long a2 = -bound; a2 <= bound; ++a2) outers.push_back({a1, a2});
    }
    std::vector<std::vector<DivClass>> buckets(outers.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(outers.size()); ++i)
        buckets[static_cast<std::size_t>(i)] =
            solve_outer(lat, bound, outers[static_cast<std::size_t>(i)]);
    (void)parallel;
    std::vector<DivClass> out;
    for (auto& b : buckets)
        for (auto& d : b) out.push_back(std::move(d));
    return out;
}

std::vector<DivClass> enumerate_neg4_classes_reference(const SurfaceLattice& lat,
                                                       long long bound) {
    check_bounds(lat, bound);
    const std::size_t rank = lat.rank();
    std::vector<long long> c(rank, -bound);
    std::vector<DivClass> out;
    for (;;) {
        std::vector<Int> v(c.begin(), c.end());
        DivClass d(std::move(v));
        if (lat.is_neg_r_class(d, 4)) out.push_back(std::move(d));
        std::size_t pos = rank;
        while (pos > 0 && c[pos - 1] == bound) {
            c[pos - 1] = -bound;
            --pos;
        }
        if (pos == 0) break;
        ++c[pos - 1];
    }
    return out;
}

// ── orbit canonicalization ───────────────────────────────────────────

namespace {

using Matrix = std::vector<std::vector<Int>>;

constexpr unsigned long long kTieBudget = 5040;

Matrix assemble(const Matrix& rows, const std::vector<std::size_t>& order) {
    Matrix m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Int> r(order.size());
        for (std::size_t c = 0; c < order.size(); ++c) r[c] = row[order[c]];
        m.push_back(std::move(r));
    }
    std::sort(m.begin(), m.end());
    return m;
}

std::vector<int> compress(const std::vector<std::string>& sigs) {
    std::map<std::string, int> ids;
    for (const auto& s : sigs) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> out;
    out.reserve(sigs.size());
    for (const auto& s : sigs) out.push_back(ids[s]);
    return out;
}

/// Canonicalize with the ambient columns pinned; rows is the full matrix.
Matrix canonical_fixed_ambient(const Matrix& rows, std::size_t amb, std::size_t rank) {
    const std::size_t k = rank - amb;
    const std::size_t nrows = rows.size();

    // Color refinement on the row/column incidence values.
    std::vector<int> row_color(nrows, 0);
    {
        std::vector<std::string> init(nrows);
        for (std::size_t r = 0; r < nrows; ++r) {
            std::ostringstream os;
            for (std::size_t c = 0; c < amb; ++c) os << rows[r][c].str() << ",";
            init[r] = os.str();
        }
        row_color = compress(init);
    }
    std::vector<int> col_color(k, 0);
    for (std::size_t round = 0; round < k + nrows + 1; ++round) {
        std::vector<std::string> csig(k);
        for (std::size_t c = 0; c < k; ++c) {
            std::vector<std::string> parts;
            parts.reserve(nrows);
            for (std::size_t r = 0; r < nrows; ++r)
                parts.push_back(std::to_string(row_color[r]) + ":" + rows[r][amb + c].str());
            std::sort(parts.begin(), parts.end());
            std::string joined;
            for (const auto& p : parts) joined += p + ";";
            csig[c] = joined;
        }
        col_color = compress(csig);
        std::vector<std::string> rsig(nrows);
        for (std::size_t r = 0; r < nrows; ++r) {
            std::vector<std::string> parts;
            parts.reserve(k);
            for (std::size_t c = 0; c < k; ++c)
                parts.push_back(std::to_string(col_color[c]) + ":" + rows[r][amb + c].str());
            std::sort(parts.begin(), parts.end());
            std::string joined = std::to_string(row_color[r]) + "|";
            for (const auto& p : parts) joined += p + ";";
            rsig[r] = joined;
        }
        row_color = compress(rsig);
    }

    // Columns grouped by final color, stable in original order.
    std::vector<std::size_t> cols(k);
    for (std::size_t c = 0; c < k; ++c) cols[c] = c;
    std::stable_sort(cols.begin(), cols.end(),
                     [&](std::size_t a, std::size_t b) { return col_color[a] < col_color[b]; });
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t c : cols) {
        if (blocks.empty() || col_color[blocks.back().back()] != col_color[c])
            blocks.push_back({});
        blocks.back().push_back(c);
    }

    unsigned long long total = 1;
    bool within_budget = true;
    for (const auto& b : blocks)
        for (std::size_t s = 2; s <= b.size(); ++s) {
            total *= s;
            if (total > kTieBudget) {
                within_budget = false;
                break;
            }
        }

    auto order_from_blocks = [&](const std::vector<std::vector<std::size_t>>& bs) {
        std::vector<std::size_t> order(rank);
        for (std::size_t c = 0; c < amb; ++c) order[c] = c;
        std::size_t pos = amb;
        for (const auto& b : bs)
            for (std::size_t src : b) order[pos++] = amb + src;
        return order;
    };

    if (!within_budget) return assemble(rows, order_from_blocks(blocks));

    std::vector<std::vector<std::size_t>> perm = blocks;
    Matrix best;
    bool have = false;
    for (;;) {
        Matrix cand = assemble(rows, order_from_blocks(perm));
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
        std::size_t bi = perm.size();
        while (bi > 0) {
            if (std::next_permutation(perm[bi - 1].begin(), perm[bi - 1].end())) break;
            --bi;
        }
        if (bi == 0) break;
    }
    return best;
}

} // namespace

std::vector<std::vector<Int>> canonical_orbit_form(const SurfaceLattice& lat,
                                                   const std::vector<DivClass>& curves) {
    if (curves.empty()) return {};
    const std::size_t rank = lat.rank();
    const std::size_t amb = lat.ambient_rank();
    Matrix rows;
    rows.reserve(curves.size());
    for (const auto& d : curves) {
        if (d.rank() != rank) fail("BadInput", "curve rank does not match the lattice");
        rows.push_back(d.coeffs());
    }
    Matrix best = canonical_fixed_ambient(rows, amb, rank);
    if (lat.ambient() == Ambient::Quadric) {
        Matrix swapped = rows;
        for (auto& r : swapped) std::swap(r[0], r[1]);
        Matrix alt = canonical_fixed_ambient(swapped, amb, rank);
        if (alt < best) best = std::move(alt);
    }
    return best;
}

// ── subset search ────────────────────────────────────────────────────

SearchResult search_even_sets(const SurfaceLattice& lat, const SearchOptions& options) {
    if (options.n < 1) fail("BadInput", "a set needs at least one curve");
    SearchResult res;
    std::vector<DivClass> cand = enumerate_neg4_classes(lat, options.bound, options.parallel);
    res.candidate_count = cand.size();

    // Coordinate parities, one bit per slot. A sum is 2-divisible exactly
    // when the parity keys of its members XOR to zero, so the last class of
    // a set is forced to the parity of the partial sum: indexing the pool by
    // key cuts the final level of the walk from the whole pool to one bucket.
    std::vector<std::uint64_t> key(cand.size(), 0);
    std::map<std::uint64_t, std::vector<std::size_t>> by_parity;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        for (std::size_t s = 0; s < cand[i].rank(); ++s)
            if (cand[i][s] % 2 != 0) key[i] |= std::uint64_t{1} << s;
        by_parity[key[i]].push_back(i);
    }

    std::set<Matrix> seen;
    std::vector<std::size_t> pick;
    std::uint64_t pick_parity = 0;

    auto disjoint_from_picked = [&](std::size_t j) {
        for (std::size_t i : pick)
            if (lat.pair(cand[i], cand[j]) != 0) return false;
        return true;
    };

    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (pick.size() + 1 == options.n) {
            auto it = by_parity.find(pick_parity);
            if (it == by_parity.end()) return;
            const std::vector<std::size_t>& bucket = it->second;
            for (auto bi = std::lower_bound(bucket.begin(), bucket.end(), from);
                 bi != bucket.end(); ++bi) {
                if (!disjoint_from_picked(*bi)) continue;
                std::vector<DivClass> set;
                set.reserve(options.n);
                for (std::size_t i : pick) set.push_back(cand[i]);
                set.push_back(cand[*bi]);
                ++res.raw_count;
                if (options.dedup) {
                    Matrix form = canonical_orbit_form(lat, set);
                    if (!seen.insert(std::move(form)).second) continue;
                }
                res.sets.push_back(std::move(set));
            }
            return;
        }
        for (std::size_t j = from; j < cand.size(); ++j) {
            if (!disjoint_from_picked(j)) continue;
            pick.push_back(j);
            pick_parity ^= key[j];
            extend(j + 1);
            pick_parity ^= key[j];
            pick.pop_back();
        }
    };
    extend(0);
    return res;
}

} // namespace evensets
