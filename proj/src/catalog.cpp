#include "evensets/catalog.hpp"

#include <functional>
#include <map>

#include "evensets/errors.hpp"

namespace evensets {

namespace {

class ClassBuilder {
public:
    explicit ClassBuilder(const SurfaceLattice& lat) : lat_(lat), v_(lat.rank(), Int(0)) {}
    ClassBuilder& h(long long c) {
        v_[0] = c;
        return *this;
    }
    ClassBuilder& l1(long long c) {
        v_[0] = c;
        return *this;
    }
    ClassBuilder& l2(long long c) {
        v_[1] = c;
        return *this;
    }
    ClassBuilder& e(int j, long long c) {
        v_[lat_.exceptional_slot(static_cast<std::size_t>(j))] = c;
        return *this;
    }
    ClassBuilder& e_range(int from, int to, long long c) {
        for (int j = from; j <= to; ++j) e(j, c);
        return *this;
    }
    DivClass done() const { return DivClass(v_); }

private:
    const SurfaceLattice& lat_;
    std::vector<Int> v_;
};

ExpectedInvariants exp_k3(long long n) { return {Verdict::K3, n, -n, 0}; }
ExpectedInvariants exp_ell(long long n) { return {Verdict::EllipticKappa1, n, -n, 0}; }

/// Nodal pencil member on the blown-up surface: the exceptional curve over
/// the node (multiplicity 2) against the transform of the member
/// (a (-4)-curve), meeting at the two branches of the node.
FiberConfig nodal_member(int i) {
    FiberConfig f;
    std::string theta = "E" + std::to_string(9 + i);
    std::string curve = "C" + std::to_string(i);
    f.add_component(theta, -1, 2);
    f.add_component(curve, -4, 1);
    f.set_pair(theta, curve, 2);
    f.add_pair_label(theta, curve, "p", 1);
    f.add_pair_label(theta, curve, "q", 1);
    return f;
}

CatalogEntry ex8_1() {
    CatalogEntry e;
    e.name = "ex8_1";
    e.description = "Plane sextic with ten ordinary double points, blown up; "
                    "a single (-4)-curve whose half is anticanonical.";
    e.lattice = make_lattice(Ambient::Plane, 10);
    e.curves.push_back(ClassBuilder(e.lattice).h(6).e_range(1, 10, -2).done());
    e.expected = exp_k3(1);
    e.halphen_index = 2;
    return e;
}

CatalogEntry ell_family(const std::string& name, int n, const std::string& desc) {
    CatalogEntry e;
    e.name = name;
    e.description = desc;
    e.lattice = make_lattice(Ambient::Plane, static_cast<std::size_t>(9 + n));
    for (int i = 1; i <= n; ++i)
        e.curves.push_back(
            ClassBuilder(e.lattice).h(3).e_range(1, 9, -1).e(9 + i, -2).done());
    e.expected = (n == 2) ? exp_k3(2) : exp_ell(n);
    for (int i = 1; i <= n; ++i) e.fibers.push_back(nodal_member(i));
    e.halphen_index = 1;
    return e;
}

CatalogEntry ex8_2() {
    return ell_family("ex8_2", 2,
                      "Pencil of cubics through nine points; two nodal members "
                      "with their nodes blown up. The half class is anticanonical.");
}

CatalogEntry ex8_3() {
    CatalogEntry e;
    e.name = "ex8_3";
    e.description = "Cubic pencil with a nodal member and a conic-plus-line member; "
                    "the node and the two conic-line crossings blown up.";
    e.lattice = make_lattice(Ambient::Plane, 12);
    e.curves.push_back(ClassBuilder(e.lattice).h(3).e_range(1, 9, -1).e(10, -2).done());
    e.curves.push_back(
        ClassBuilder(e.lattice).h(2).e_range(1, 6, -1).e(11, -1).e(12, -1).done());
    e.curves.push_back(
        ClassBuilder(e.lattice).h(1).e_range(7, 9, -1).e(11, -1).e(12, -1).done());
    e.expected = exp_k3(3);
    return e;
}

CatalogEntry ex8_4() {
    CatalogEntry e;
    e.name = "ex8_4";
    e.description = "Cubic pencil with a triangle member and a nodal member; "
                    "the three vertices and the node blown up.";
    e.lattice = make_lattice(Ambient::Plane, 13);
    auto line = [&](int a, int b, int c, int v1, int v2) {
        return ClassBuilder(e.lattice).h(1).e(a, -1).e(b, -1).e(c, -1).e(v1, -1).e(v2, -1).done();
    };
    e.curves.push_back(line(1, 2, 3, 10, 11));
    e.curves.push_back(line(4, 5, 6, 10, 12));
    e.curves.push_back(line(7, 8, 9, 11, 12));
    e.curves.push_back(ClassBuilder(e.lattice).h(3).e_range(1, 9, -1).e(13, -2).done());
    e.expected = exp_k3(4);
    return e;
}

CatalogEntry ex8_5() {
    CatalogEntry e;
    e.name = "ex8_5";
    e.description = "Cubic pencil with a triangle member and a conic-plus-line member; "
                    "three vertices and two crossings blown up.";
    e.lattice = make_lattice(Ambient::Plane, 14);
    auto line = [&](int a, int b, int c, int v1, int v2) {
        return ClassBuilder(e.lattice).h(1).e(a, -1).e(b, -1).e(c, -1).e(v1, -1).e(v2, -1).done();
    };
    e.curves.push_back(line(1, 2, 7, 10, 11));
    e.curves.push_back(line(3, 4, 8, 10, 12));
    e.curves.push_back(line(5, 6, 9, 11, 12));
    e.curves.push_back(
        ClassBuilder(e.lattice).h(2).e_range(1, 6, -1).e(13, -1).e(14, -1).done());
    e.curves.push_back(
        ClassBuilder(e.lattice).h(1).e_range(7, 9, -1).e(13, -1).e(14, -1).done());
    e.expected = exp_k3(5);
    return e;
}

CatalogEntry ex8_6() {
    CatalogEntry e;
    e.name = "ex8_6";
    e.description = "Six general lines in the plane with all fifteen pairwise "
                    "crossings blown up; the six line transforms.";
    e.lattice = make_lattice(Ambient::Plane, 15);
    // crossing of lines i < j, numbered lexicographically
    auto cross = [](int i, int j) {
        if (i > j) std::swap(i, j);
        int idx = 0;
        for (int a = 1; a < i; ++a) idx += 6 - a;
        return idx + (j - i);
    };
    for (int i = 1; i <= 6; ++i) {
        ClassBuilder b(e.lattice);
        b.h(1);
        for (int j = 1; j <= 6; ++j)
            if (j != i) b.e(cross(i, j), -1);
        e.curves.push_back(b.done());
    }
    e.expected = exp_k3(6);
    return e;
}

CatalogEntry ex8_7() {
    CatalogEntry e;
    e.name = "ex8_7";
    e.description = "Three rulings of each family and a (1,1)-curve on a smooth "
                    "quadric; the nine grid points and the six crossings with the "
                    "(1,1)-curve blown up.";
    e.lattice = make_lattice(Ambient::Quadric, 15);
    auto grid = [](int i, int j) { return (i - 1) * 3 + j; };
    for (int i = 1; i <= 3; ++i) {
        ClassBuilder b(e.lattice);
        b.l1(1);
        for (int j = 1; j <= 3; ++j) b.e(grid(i, j), -1);
        b.e(9 + i, -1);
        e.curves.push_back(b.done());
    }
    for (int j = 1; j <= 3; ++j) {
        ClassBuilder b(e.lattice);
        b.l2(1);
        for (int i = 1; i <= 3; ++i) b.e(grid(i, j), -1);
        b.e(12 + j, -1);
        e.curves.push_back(b.done());
    }
    e.curves.push_back(ClassBuilder(e.lattice).l1(1).l2(1).e_range(10, 15, -1).done());
    e.expected = exp_k3(7);
    return e;
}

CatalogEntry ex8_7_plane() {
    CatalogEntry e;
    e.name = "ex8_7_plane";
    e.description = "Plane model with the same invariants as ex8_7: cubic pencil "
                    "with a conic-plus-line member and a three-line member; the "
                    "seven crossings of the two cycles blown up.";
    e.lattice = make_lattice(Ambient::Plane, 16);
    auto cb = [&] { return ClassBuilder(e.lattice); };
    e.curves.push_back(cb().h(2).e(1, -1).e_range(3, 7, -1).e(10, -1).e(11, -1).done());
    e.curves.push_back(cb().h(1).e(1, -1).e(8, -1).e(9, -1).e(10, -1).e(12, -1).done());
    e.curves.push_back(cb().e(1, 1).e(2, -1).e(11, -1).e(12, -1).done());
    e.curves.push_back(cb().h(1).e(1, -1).e(2, -1).e(5, -1).e(13, -1).e(16, -1).done());
    e.curves.push_back(cb().h(1).e(3, -1).e(6, -1).e(8, -1).e(13, -1).e(14, -1).done());
    e.curves.push_back(cb().e(3, 1).e(4, -1).e(14, -1).e(15, -1).done());
    e.curves.push_back(cb().h(1).e(3, -1).e(7, -1).e(9, -1).e(15, -1).e(16, -1).done());
    e.expected = exp_k3(7);
    return e;
}

CatalogEntry ex8_8() {
    CatalogEntry e;
    e.name = "ex8_8";
    e.description = "Four rulings of each family on a smooth quadric; the sixteen "
                    "grid crossings blown up.";
    e.lattice = make_lattice(Ambient::Quadric, 16);
    auto grid = [](int i, int j) { return (i - 1) * 4 + j; };
    for (int i = 1; i <= 4; ++i) {
        ClassBuilder b(e.lattice);
        b.l1(1);
        for (int j = 1; j <= 4; ++j) b.e(grid(i, j), -1);
        e.curves.push_back(b.done());
    }
    for (int j = 1; j <= 4; ++j) {
        ClassBuilder b(e.lattice);
        b.l2(1);
        for (int i = 1; i <= 4; ++i) b.e(grid(i, j), -1);
        e.curves.push_back(b.done());
    }
    e.expected = exp_k3(8);
    return e;
}

CatalogEntry ex8_8_plane() {
    CatalogEntry e;
    e.name = "ex8_8_plane";
    e.description = "Plane model with the same invariants as ex8_8: cubic pencil "
                    "with two members that each split into three concurrent lines; "
                    "both triple points blown up together with three infinitely "
                    "near points on each.";
    e.lattice = make_lattice(Ambient::Plane, 17);
    auto grid = [](int i, int j) { return 3 * (i - 1) + (j - 3); }; // i in 1..3, j in 4..6
    auto cb = [&] { return ClassBuilder(e.lattice); };
    for (int i = 1; i <= 3; ++i) {
        ClassBuilder b = cb();
        b.h(1);
        for (int j = 4; j <= 6; ++j) b.e(grid(i, j), -1);
        b.e(10, -1).e(10 + i, -1);
        e.curves.push_back(b.done());
    }
    e.curves.push_back(cb().e(10, 1).e(11, -1).e(12, -1).e(13, -1).done());
    for (int j = 4; j <= 6; ++j) {
        ClassBuilder b = cb();
        b.h(1);
        for (int i = 1; i <= 3; ++i) b.e(grid(i, j), -1);
        b.e(14, -1).e(14 + (j - 3), -1);
        e.curves.push_back(b.done());
    }
    e.curves.push_back(cb().e(14, 1).e(15, -1).e(16, -1).e(17, -1).done());
    e.expected = exp_k3(8);
    return e;
}

CatalogEntry ex8_9() {
    CatalogEntry e;
    e.name = "ex8_9";
    e.description = "Cubic pencil containing a triangle of lines and a six-cycle "
                    "member; twelve crossings blown up, six of them infinitely near.";
    e.lattice = make_lattice(Ambient::Plane, 18);
    auto cb = [&] { return ClassBuilder(e.lattice); };
    e.curves.push_back(cb().h(1).e(1, -1).e(2, -1).e(7, -1).e(10, -1).e(11, -1).done());
    e.curves.push_back(cb().h(1).e(3, -1).e(4, -1).e(8, -1).e(10, -1).e(12, -1).done());
    e.curves.push_back(cb().h(1).e(5, -1).e(6, -1).e(9, -1).e(11, -1).e(12, -1).done());
    e.curves.push_back(cb().h(1).e(1, -1).e(3, -1).e(9, -1).e(13, -1).e(18, -1).done());
    e.curves.push_back(cb().h(1).e(1, -1).e(5, -1).e(8, -1).e(14, -1).e(15, -1).done());
    e.curves.push_back(cb().h(1).e(3, -1).e(5, -1).e(7, -1).e(16, -1).e(17, -1).done());
    e.curves.push_back(cb().e(1, 1).e(2, -1).e(13, -1).e(14, -1).done());
    e.curves.push_back(cb().e(3, 1).e(4, -1).e(17, -1).e(18, -1).done());
    e.curves.push_back(cb().e(5, 1).e(6, -1).e(15, -1).e(16, -1).done());
    e.expected = exp_k3(9);
    return e;
}

CatalogEntry ex8_10() {
    CatalogEntry e;
    e.name = "ex8_10";
    e.description = "Cubic pencil containing three concurrent lines and a six-cycle "
                    "member; the triple point carries three infinitely near "
                    "directions.";
    e.lattice = make_lattice(Ambient::Plane, 19);
    auto cb = [&] { return ClassBuilder(e.lattice); };
    e.curves.push_back(cb().h(1).e(1, -1).e(2, -1).e(7, -1).e(10, -1).e(11, -1).done());
    e.curves.push_back(cb().h(1).e(3, -1).e(4, -1).e(8, -1).e(10, -1).e(12, -1).done());
    e.curves.push_back(cb().h(1).e(5, -1).e(6, -1).e(9, -1).e(10, -1).e(13, -1).done());
    e.curves.push_back(cb().e(10, 1).e(11, -1).e(12, -1).e(13, -1).done());
    e.curves.push_back(cb().h(1).e(1, -1).e(3, -1).e(9, -1).e(14, -1).e(19, -1).done());
    e.curves.push_back(cb().h(1).e(1, -1).e(5, -1).e(8, -1).e(15, -1).e(16, -1).done());
    e.curves.push_back(cb().h(1).e(3, -1).e(5, -1).e(7, -1).e(17, -1).e(18, -1).done());
    e.curves.push_back(cb().e(1, 1).e(2, -1).e(14, -1).e(15, -1).done());
    e.curves.push_back(cb().e(3, 1).e(4, -1).e(18, -1).e(19, -1).done());
    e.curves.push_back(cb().e(5, 1).e(6, -1).e(16, -1).e(17, -1).done());
    e.expected = exp_k3(10);
    return e;
}

CatalogEntry sextic_family(const std::string& name, int n) {
    CatalogEntry e;
    e.name = name;
    e.description = "Index-two pencil of sextics with nine assigned double points; " +
                    std::to_string(n) + " nodal members with their nodes blown up.";
    e.lattice = make_lattice(Ambient::Plane, static_cast<std::size_t>(9 + n));
    for (int i = 1; i <= n; ++i)
        e.curves.push_back(
            ClassBuilder(e.lattice).h(6).e_range(1, 9, -2).e(9 + i, -2).done());
    e.expected = exp_ell(n);
    for (int i = 1; i <= n; ++i) e.fibers.push_back(nodal_member(i));
    e.halphen_index = 2;
    return e;
}

std::string ell_desc(int n) {
    std::string d = "Cubic pencil through nine points; " + std::to_string(n) +
                    " of its twelve nodal members have their nodes blown up. The "
                    "half class is no longer anticanonical.";
    if (n == 12) d += " All singular members are carried as fiber data.";
    return d;
}

} // namespace

std::vector<std::string> catalog_names() {
    return {"ex8_1",  "ex8_2",       "ex8_3",  "ex8_4",  "ex8_5",    "ex8_6",    "ex8_7",
            "ex8_7_plane", "ex8_8",  "ex8_8_plane", "ex8_9", "ex8_10",
            "ell_4",  "ell_6",       "ell_8",  "ell_10", "ell_12",
            "sextic_2", "sextic_3",  "sextic_4"};
}

CatalogEntry catalog_build(const std::string& name) {
    if (name == "ex8_1") return ex8_1();
    if (name == "ex8_2") return ex8_2();
    if (name == "ex8_3") return ex8_3();
    if (name == "ex8_4") return ex8_4();
    if (name == "ex8_5") return ex8_5();
    if (name == "ex8_6") return ex8_6();
    if (name == "ex8_7") return ex8_7();
    if (name == "ex8_7_plane") return ex8_7_plane();
    if (name == "ex8_8") return ex8_8();
    if (name == "ex8_8_plane") return ex8_8_plane();
    if (name == "ex8_9") return ex8_9();
    if (name == "ex8_10") return ex8_10();
    if (name == "ell_4") return ell_family("ell_4", 4, ell_desc(4));
    if (name == "ell_6") return ell_family("ell_6", 6, ell_desc(6));
    if (name == "ell_8") return ell_family("ell_8", 8, ell_desc(8));
    if (name == "ell_10") return ell_family("ell_10", 10, ell_desc(10));
    if (name == "ell_12") return ell_family("ell_12", 12, ell_desc(12));
    if (name == "sextic_2") return sextic_family("sextic_2", 2);
    if (name == "sextic_3") return sextic_family("sextic_3", 3);
    if (name == "sextic_4") return sextic_family("sextic_4", 4);
    fail("UnknownEntry", "no catalog entry named '" + name + "'");
}

std::vector<CatalogEntry> catalog_all() {
    std::vector<CatalogEntry> out;
    for (const auto& name : catalog_names()) out.push_back(catalog_build(name));
    return out;
}

} // namespace evensets
