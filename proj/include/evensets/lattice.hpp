#ifndef EVENSETS_LATTICE_HPP
#define EVENSETS_LATTICE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "evensets/errors.hpp"

namespace evensets {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Ambient rational surface whose blow-up carries the divisor classes.
///   Plane:   basis H, E1..Ek      with H^2 = 1, Ei^2 = -1, mixed 0
///   Quadric: basis L1, L2, E1..Ek with L1.L2 = 1, L1^2 = L2^2 = 0, Ei^2 = -1
enum class Ambient { Plane, Quadric };

/// Divisor class as an integer coefficient vector over the fixed basis.
/// Coefficients are arbitrary-precision; no overflow policy is needed.
class DivClass {
public:
    DivClass() = default;
    explicit DivClass(std::vector<Int> coeffs) : c_(std::move(coeffs)) {}

    static DivClass zero(std::size_t rank) { return DivClass(std::vector<Int>(rank, 0)); }

    std::size_t rank() const { return c_.size(); }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator-() const;
    DivClass operator*(const Int& s) const;

    bool operator==(const DivClass& o) const { return c_ == o.c_; }
    bool operator!=(const DivClass& o) const { return c_ != o.c_; }
    bool operator<(const DivClass& o) const { return c_ < o.c_; } // lexicographic

    /// True when every coefficient is even.
    bool even() const;

    /// Halve all coefficients. Throws NotTwoDivisible naming the first odd slot.
    DivClass half() const;

    /// First coordinate index with an odd coefficient, or rank() if none.
    std::size_t first_odd() const;

private:
    std::vector<Int> c_;
};

/// Picard lattice of the blow-up of an ambient surface in k points.
/// Infinitely-near points are represented identically to distinct points:
/// only the intersection numbers matter here.
class SurfaceLattice {
public:
    SurfaceLattice(Ambient ambient, std::size_t k);
    SurfaceLattice() : SurfaceLattice(Ambient::Plane, 0) {} // bare plane

    Ambient ambient() const { return ambient_; }
    std::size_t k() const { return k_; }
    std::size_t rank() const { return rank_; }
    std::size_t ambient_rank() const { return rank_ - k_; } // 1 or 2

    /// Intersection pairing of two classes.
    Int pair(const DivClass& a, const DivClass& b) const;

    /// Canonical class: Plane -3H + sum Ei, Quadric -2L1 - 2L2 + sum Ei.
    const DivClass& canonical() const { return canonical_; }

    /// K.K = 9 - k (plane), 8 - k (quadric).
    Int canonical_square() const;

    Int self(const DivClass& d) const { return pair(d, d); }
    Int k_dot(const DivClass& d) const { return pair(canonical_, d); }

    /// 1 + (d.d + K.d)/2; the summand is always even (parity invariant).
    Int arithmetic_genus(const DivClass& d) const;

    /// d.d = -r and arithmetic genus 0, i.e. K.d = r - 2.
    bool is_neg_r_class(const DivClass& d, long r) const;

    /// Basis class with a single 1 in slot i.
    DivClass basis(std::size_t i) const;

    /// Coefficient-vector slot of the exceptional class E_j, j in 1..k.
    std::size_t exceptional_slot(std::size_t j) const;

    /// If d equals some basis exceptional E_j, returns j (1..k); else 0.
    std::size_t as_basis_exceptional(const DivClass& d) const;

    /// "H", "E3" / "L1", "L2", "E3".
    std::string basis_name(std::size_t slot) const;

    DivClass class_from(std::initializer_list<long long> v) const;

    bool operator==(const SurfaceLattice& o) const {
        return ambient_ == o.ambient_ && k_ == o.k_;
    }

private:
    Ambient ambient_;
    std::size_t k_;
    std::size_t rank_;
    DivClass canonical_;
};

SurfaceLattice make_lattice(Ambient ambient, std::size_t k);

/// Blow-down of the basis exceptional class E_j. The pushforward sends
/// D to D + (D.E_j) E_j with the E_j slot deleted; it is an isometry on
/// the orthogonal complement of E_j, raises D.D by (D.E_j)^2, and raises
/// the arithmetic genus by binom(D.E_j, 2).
struct BlowDown {
    SurfaceLattice from;
    SurfaceLattice to;
    std::size_t j; // 1..k in `from`

    DivClass push(const DivClass& d) const;
};

BlowDown blow_down_basis(const SurfaceLattice& lat, std::size_t j);

/// n (n - 1) / 2, the binomial coefficient extended to all integers n
/// (positive for n < 0, which the blow-down genus bookkeeping needs).
Int binom2(const Int& n);

std::string to_string(const DivClass& d);
std::string pretty(const SurfaceLattice& lat, const DivClass& d);

} // namespace evensets

#endif
