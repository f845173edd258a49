#include "evensets/lattice.hpp"

#include <sstream>

namespace evensets {

DivClass DivClass::operator+(const DivClass& o) const {
    std::vector<Int> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
    return DivClass(std::move(r));
}

DivClass DivClass::operator-(const DivClass& o) const {
    std::vector<Int> r(c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
    return DivClass(std::move(r));
}

DivClass DivClass::operator-() const {
    std::vector<Int> r(c_);
    for (auto& x : r) x = -x;
    return DivClass(std::move(r));
}

DivClass DivClass::operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (auto& x : r) x *= s;
    return DivClass(std::move(r));
}

bool DivClass::even() const { return first_odd() == rank(); }

std::size_t DivClass::first_odd() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if ((c_[i] & 1) != 0) return i;
    return c_.size();
}

DivClass DivClass::half() const {
    std::size_t odd = first_odd();
    if (odd != rank())
        fail("NotTwoDivisible", "coordinate " + std::to_string(odd) + " is odd");
    std::vector<Int> r(c_);
    for (auto& x : r) x /= 2;
    return DivClass(std::move(r));
}

SurfaceLattice::SurfaceLattice(Ambient ambient, std::size_t k)
    : ambient_(ambient), k_(k), rank_(k + (ambient == Ambient::Plane ? 1 : 2)) {
    std::vector<Int> kc(rank_, 1);
    if (ambient_ == Ambient::Plane) {
        kc[0] = -3;
    } else {
        kc[0] = -2;
        kc[1] = -2;
    }
    canonical_ = DivClass(std::move(kc));
}

SurfaceLattice make_lattice(Ambient ambient, std::size_t k) {
    return SurfaceLattice(ambient, k);
}

Int SurfaceLattice::pair(const DivClass& a, const DivClass& b) const {
    if (a.rank() != rank_ || b.rank() != rank_)
        fail("BadInput", "class rank does not match lattice rank " + std::to_string(rank_));
    Int s;
    std::size_t e0;
    if (ambient_ == Ambient::Plane) {
        s = a[0] * b[0];
        e0 = 1;
    } else {
        s = a[0] * b[1] + a[1] * b[0];
        e0 = 2;
    }
    for (std::size_t i = e0; i < rank_; ++i) s -= a[i] * b[i];
    return s;
}

Int SurfaceLattice::canonical_square() const { return pair(canonical_, canonical_); }

Int SurfaceLattice::arithmetic_genus(const DivClass& d) const {
    Int s = self(d) + k_dot(d);
    if ((s & 1) != 0)
        fail("IdentityViolation", "d.d + K.d is odd; the pairing parity invariant is broken");
    return 1 + s / 2;
}

bool SurfaceLattice::is_neg_r_class(const DivClass& d, long r) const {
    return self(d) == -Int(r) && arithmetic_genus(d) == 0;
}

DivClass SurfaceLattice::basis(std::size_t i) const {
    DivClass d = DivClass::zero(rank_);
    d[i] = 1;
    return d;
}

std::size_t SurfaceLattice::exceptional_slot(std::size_t j) const {
    if (j < 1 || j > k_)
        fail("BadInput", "exceptional index " + std::to_string(j) + " out of range 1.." +
                             std::to_string(k_));
    return ambient_rank() + j - 1;
}

std::size_t SurfaceLattice::as_basis_exceptional(const DivClass& d) const {
    std::size_t found = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (d[i] == 0) continue;
        if (d[i] != 1 || found != 0 || i < ambient_rank()) return 0;
        found = i - ambient_rank() + 1;
    }
    return found;
}

std::string SurfaceLattice::basis_name(std::size_t slot) const {
    if (ambient_ == Ambient::Plane) {
        if (slot == 0) return "H";
        return "E" + std::to_string(slot);
    }
    if (slot == 0) return "L1";
    if (slot == 1) return "L2";
    return "E" + std::to_string(slot - 1);
}

DivClass SurfaceLattice::class_from(std::initializer_list<long long> v) const {
    if (v.size() != rank_)
        fail("BadInput", "expected " + std::to_string(rank_) + " coefficients");
    std::vector<Int> c;
    c.reserve(rank_);
    for (long long x : v) c.emplace_back(x);
    return DivClass(std::move(c));
}

BlowDown blow_down_basis(const SurfaceLattice& lat, std::size_t j) {
    if (lat.k() == 0) fail("BadInput", "cannot blow down: lattice has no exceptional classes");
    lat.exceptional_slot(j); // range check
    return BlowDown{lat, SurfaceLattice(lat.ambient(), lat.k() - 1), j};
}

DivClass BlowDown::push(const DivClass& d) const {
    if (d.rank() != from.rank())
        fail("BadInput", "class rank does not match lattice rank " + std::to_string(from.rank()));
    // D + (D.E_j) E_j zeroes the E_j slot, so the pushforward is slot deletion.
    std::size_t slot = from.exceptional_slot(j);
    std::vector<Int> r;
    r.reserve(from.rank() - 1);
    for (std::size_t i = 0; i < from.rank(); ++i) {
        if (i == slot) continue;
        r.push_back(d[i]);
    }
    return DivClass(std::move(r));
}

Int binom2(const Int& n) { return n * (n - 1) / 2; }

std::string to_string(const DivClass& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.rank(); ++i) {
        if (i) os << " ";
        os << d[i];
    }
    os << ")";
    return os.str();
}

std::string pretty(const SurfaceLattice& lat, const DivClass& d) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < d.rank(); ++i) {
        if (d[i] == 0) continue;
        Int v = d[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Int a = abs(v);
        if (a != 1) os << a.str() << "*";
        os << lat.basis_name(i);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace evensets
