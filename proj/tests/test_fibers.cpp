#include "doctest.h"

#include <algorithm>
#include <vector>

#include "evensets/fibers.hpp"

using namespace evensets;

namespace {

KodairaType t_I(long long r, long long m = 1) {
    KodairaType t;
    t.kind = KodairaType::Kind::I;
    t.r = r;
    t.m = m;
    return t;
}

KodairaType t_kind(KodairaType::Kind k, long long m = 1) {
    KodairaType t;
    t.kind = k;
    t.m = m;
    return t;
}

// three (-2)-components of multiplicity 1 meeting pairwise once
FiberConfig triangle(const std::vector<std::vector<std::string>>& labels) {
    FiberConfig f;
    f.add_component("a", -2, 1);
    f.add_component("b", -2, 1);
    f.add_component("c", -2, 1);
    f.set_pair("a", "b", 1);
    f.set_pair("a", "c", 1);
    f.set_pair("b", "c", 1);
    const char* pairs[3][2] = {{"a", "b"}, {"a", "c"}, {"b", "c"}};
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (const auto& l : labels[i]) f.add_pair_label(pairs[i][0], pairs[i][1], l);
    return f;
}

} // namespace

TEST_CASE("validation accepts the standard shapes") {
    for (int m : {1, 2, 3}) {
        CHECK(validate_fiber(dtilde4_template(m)).valid);
        CHECK(validate_fiber(etilde6_template(m)).valid);
        CHECK(validate_fiber(cycle_template(4, m)).valid);
        CHECK(validate_fiber(double_component_template(m, Contact::Unlabeled)).valid);
    }
    CHECK(validate_fiber(iii_template()).valid);
    CHECK(validate_fiber(iv_template()).valid);
}

TEST_CASE("validation: full labeling is tracked") {
    CHECK(validate_fiber(double_component_template(1, Contact::Nodal)).fully_labeled);
    CHECK(validate_fiber(double_component_template(1, Contact::Tangent)).fully_labeled);
    CHECK_FALSE(validate_fiber(double_component_template(1, Contact::Unlabeled)).fully_labeled);
    CHECK_FALSE(validate_fiber(dtilde4_template()).fully_labeled); // pairs carry no labels
}

TEST_CASE("validation rejections name the offender") {
    SUBCASE("no components") {
        FiberConfig f;
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "no components");
    }
    SUBCASE("nonpositive multiplicity") {
        FiberConfig f;
        f.add_component("a", 0, 0);
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "component 'a' has multiplicity 0");
    }
    SUBCASE("F.comp nonzero") {
        FiberConfig f;
        f.add_component("a", -2, 1);
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "F.a = -2, not 0");
    }
    SUBCASE("disconnected: kernel too big") {
        FiberConfig f;
        f.add_component("a", 0, 1, 1);
        f.add_component("b", 0, 1, 1);
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "intersection matrix kernel has dimension 2, not 1");
    }
    SUBCASE("labels exceeding the pair total") {
        FiberConfig f = double_component_template(1, Contact::Nodal);
        f.add_pair_label("t1", "c1", "r", 1); // third unit on a pair of total 2
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "labeled intersections of 't1' and 'c1' exceed their total");
    }
    SUBCASE("singular data beyond the genus") {
        FiberConfig f = double_component_template(1, Contact::Unlabeled);
        f.declare_singular("c1", "node"); // pa(c1) = 0 cannot carry a double point
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "singular points of 'c1' exceed its arithmetic genus");
    }
    SUBCASE("negative genus") {
        FiberConfig f;
        f.add_component("a", 0, 1, -1);
        ValidationReport r = validate_fiber(f);
        CHECK(!r.valid);
        CHECK(r.reason == "component 'a' has negative arithmetic genus");
    }
}

TEST_CASE("validation lint: (-4) loaded with too many (-1)s") {
    FiberConfig f;
    f.add_component("c", -4, 2);
    for (int i = 1; i <= 4; ++i) {
        std::string id = "t" + std::to_string(i);
        f.add_component(id, -1, 2);
        f.set_pair("c", id, 1);
    }
    ValidationReport r = validate_fiber(f);
    CHECK(r.valid);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0] == "component 'c' meets (-1)-components with total 4");
    // the standard double template stays quiet
    CHECK(validate_fiber(double_component_template(1, Contact::Nodal)).warnings.empty());
}

TEST_CASE("contracting a (-1) raises squares and genus as declared") {
    FiberConfig f = iii_template();
    ContractionStep step;
    FiberConfig g = contract(f, "t1", &step);
    CHECK(step.comp_id == "t1");
    CHECK(g.size() == 3);
    CHECK(g.component(g.index_of("t2")).self_int == -1);
    CHECK(g.component(g.index_of("c1")).self_int == -3);
    CHECK(g.component(g.index_of("c2")).self_int == -3);
    CHECK(g.meet(g.index_of("c1"), g.index_of("c2")) == 1);
    CHECK(validate_fiber(g).valid);
}

TEST_CASE("contract rejects non-(-1)s and keeps validity") {
    CHECK_THROWS_AS(contract(dtilde4_template(), "z", nullptr), Error);
    try {
        contract(dtilde4_template(), "z", nullptr);
    } catch (const Error& e) {
        CHECK(e.code() == "NotContractible");
    }
    CHECK_THROWS_AS(contract(iii_template(), "missing", nullptr), Error);
    FiberConfig broken;
    broken.add_component("a", -1, 1);
    CHECK_THROWS_AS(contract(broken, "a", nullptr), Error); // not a fiber at all
}

TEST_CASE("nodal double component contracts to I1 with branch orders [1,1]") {
    FiberClass fc = classify_fiber(double_component_template(1, Contact::Nodal));
    REQUIRE(fc.definite());
    CHECK(fc.type() == t_I(1));
    CHECK(to_string(fc.type()) == "I1");
    REQUIRE(fc.minimal.size() == 1);
    const FiberComponent& c = fc.minimal.component(0);
    CHECK(c.self_int == 0);
    CHECK(c.pa == 1);
    REQUIRE(c.sing.size() == 1);
    REQUIRE(c.sing[0].branches.has_value());
    CHECK(*c.sing[0].branches == std::vector<long long>{1, 1});
}

TEST_CASE("tangent contact contracts to a cusp, type II") {
    for (int m : {1, 2, 3}) {
        FiberClass fc = classify_fiber(double_component_template(m, Contact::Tangent));
        REQUIRE(fc.definite());
        CHECK(fc.type() == t_kind(KodairaType::Kind::II, m));
        REQUIRE(fc.minimal.component(0).sing.size() == 1);
        CHECK(*fc.minimal.component(0).sing[0].branches == std::vector<long long>{2});
    }
    CHECK(to_string(t_kind(KodairaType::Kind::II, 2)) == "2II");
}

TEST_CASE("unlabeled double contact is honestly ambiguous") {
    FiberClass fc = classify_fiber(double_component_template(1, Contact::Unlabeled));
    CHECK(!fc.definite());
    REQUIRE(fc.candidates.size() == 2);
    CHECK(fc.candidates[0] == t_I(1));
    CHECK(fc.candidates[1] == t_kind(KodairaType::Kind::II));
    CHECK(!fc.note.empty());
}

TEST_CASE("cycles of every length and multiplicity") {
    for (int r = 1; r <= 9; ++r)
        for (int m = 1; m <= 3; ++m) {
            FiberClass fc = classify_fiber(cycle_template(r, m));
            REQUIRE(fc.definite());
            CHECK(fc.type() == t_I(r, m));
            // every contraction step removed one (-1)-component
            CHECK(fc.history.size() == static_cast<std::size_t>(r));
        }
    CHECK(to_string(t_I(3)) == "I3");
    CHECK(to_string(t_I(3, 2)) == "2I3");
}

TEST_CASE("the III shape: two units through one label tower") {
    FiberClass fc = classify_fiber(iii_template());
    REQUIRE(fc.definite());
    CHECK(fc.type() == t_kind(KodairaType::Kind::III));
    CHECK(fc.history.size() == 2);
    CHECK(fc.history[0].comp_id == "t1");
    CHECK(fc.history[1].comp_id == "t2");
    REQUIRE(fc.minimal.size() == 2);
    CHECK(fc.minimal.component(0).self_int == -2);
    CHECK(fc.minimal.component(1).self_int == -2);
    CHECK(fc.minimal.meet(0, 1) == 2);
}

TEST_CASE("the IV shape: four contractions, components pass through -3") {
    FiberClass fc = classify_fiber(iv_template());
    REQUIRE(fc.definite());
    CHECK(fc.type() == t_kind(KodairaType::Kind::IV));
    REQUIRE(fc.history.size() == 4);
    CHECK(fc.history[0].comp_id == "t1");
    CHECK(fc.history[1].comp_id == "t2");
    CHECK(fc.history[2].comp_id == "t3");
    CHECK(fc.history[3].comp_id == "c1"); // absorbed three units, reached -1
    CHECK(fc.minimal.size() == 3);

    // trace the middle of the tower by hand
    FiberConfig g = contract(contract(iv_template(), "t1", nullptr), "t2", nullptr);
    CHECK(g.component(g.index_of("c1")).self_int == -2);
    CHECK(g.component(g.index_of("c2")).self_int == -3);
    FiberConfig h = contract(g, "t3", nullptr);
    CHECK(h.component(h.index_of("c1")).self_int == -1);
}

TEST_CASE("declaration order changes the history, not the type") {
    FiberConfig f;
    f.add_component("c2", -4, 1);
    f.add_component("c3", -4, 1);
    f.add_component("c4", -4, 1);
    f.add_component("c1", -4, 3);
    f.add_component("t3", -1, 4);
    f.add_component("t2", -1, 4);
    f.add_component("t1", -1, 4);
    f.set_pair("t1", "c1", 1);
    f.set_pair("t2", "c1", 1);
    f.set_pair("t3", "c1", 1);
    f.set_pair("t1", "c2", 1);
    f.set_pair("t2", "c3", 1);
    f.set_pair("t3", "c4", 1);
    FiberClass fc = classify_fiber(f);
    REQUIRE(fc.definite());
    CHECK(fc.type() == t_kind(KodairaType::Kind::IV));
    CHECK(fc.history[0].comp_id == "t3"); // first declared (-1)
}

TEST_CASE("labeled triangles separate the three-component types") {
    SUBCASE("all distinct points: a 3-cycle") {
        FiberClass fc = classify_fiber(triangle({{"p"}, {"q"}, {"r"}}));
        REQUIRE(fc.definite());
        CHECK(fc.type() == t_I(3));
    }
    SUBCASE("all through one point: concurrent") {
        FiberClass fc = classify_fiber(triangle({{"p"}, {"p"}, {"p"}}));
        REQUIRE(fc.definite());
        CHECK(fc.type() == t_kind(KodairaType::Kind::IV));
    }
    SUBCASE("two coincide: neither shape") {
        FiberClass fc = classify_fiber(triangle({{"p"}, {"p"}, {"q"}}));
        REQUIRE(fc.definite());
        CHECK(fc.type().kind == KodairaType::Kind::Unrecognized);
    }
    SUBCASE("no labels: both candidates") {
        FiberClass fc = classify_fiber(triangle({}));
        CHECK(!fc.definite());
        REQUIRE(fc.candidates.size() == 2);
        CHECK(fc.candidates[0] == t_I(3));
        CHECK(fc.candidates[1] == t_kind(KodairaType::Kind::IV));
    }
}

TEST_CASE("two components meeting twice") {
    FiberConfig f;
    f.add_component("a", -2, 1);
    f.add_component("b", -2, 1);
    f.set_pair("a", "b", 2);
    SUBCASE("distinct points: I2") {
        f.add_pair_label("a", "b", "p");
        f.add_pair_label("a", "b", "q");
        FiberClass fc = classify_fiber(f);
        REQUIRE(fc.definite());
        CHECK(fc.type() == t_I(2));
    }
    SUBCASE("one point twice: III") {
        f.add_pair_label("a", "b", "p", 2);
        FiberClass fc = classify_fiber(f);
        REQUIRE(fc.definite());
        CHECK(fc.type() == t_kind(KodairaType::Kind::III));
    }
    SUBCASE("unlabeled: both") {
        FiberClass fc = classify_fiber(f);
        REQUIRE(fc.candidates.size() == 2);
        CHECK(fc.candidates[0] == t_I(2));
        CHECK(fc.candidates[1] == t_kind(KodairaType::Kind::III));
    }
}

TEST_CASE("star shapes") {
    for (int m : {1, 2}) {
        FiberClass d = classify_fiber(dtilde4_template(m));
        REQUIRE(d.definite());
        CHECK(d.type() == t_kind(KodairaType::Kind::Dtilde4, m));
        CHECK(d.history.empty()); // already minimal

        FiberClass e = classify_fiber(etilde6_template(m));
        REQUIRE(e.definite());
        CHECK(e.type() == t_kind(KodairaType::Kind::Etilde6, m));
    }
    CHECK(to_string(t_kind(KodairaType::Kind::Dtilde4)) == "I0*");
    CHECK(to_string(t_kind(KodairaType::Kind::Etilde6)) == "IV*");
}

TEST_CASE("smooth fibers and numeric leftovers") {
    SUBCASE("smooth elliptic, possibly multiple") {
        for (int m : {1, 2, 3}) {
            FiberConfig f;
            f.add_component("f", 0, m, 1);
            FiberClass fc = classify_fiber(f);
            REQUIRE(fc.definite());
            CHECK(fc.type() == t_kind(KodairaType::Kind::Smooth, m));
        }
        CHECK(to_string(t_kind(KodairaType::Kind::Smooth)) == "smooth");
        CHECK(to_string(t_kind(KodairaType::Kind::Smooth, 2)) == "2I0");
    }
    SUBCASE("genus 0 square zero is not elliptic") {
        FiberConfig f;
        f.add_component("f", 0, 1, 0);
        FiberClass fc = classify_fiber(f);
        REQUIRE(fc.definite());
        CHECK(fc.type().kind == KodairaType::Kind::NumericClass);
        CHECK(!fc.note.empty());
    }
    SUBCASE("higher genus goes numeric") {
        FiberConfig f;
        f.add_component("f", 0, 1, 3);
        FiberClass fc = classify_fiber(f);
        CHECK(fc.type().kind == KodairaType::Kind::NumericClass);
    }
}

TEST_CASE("minimalize leaves minimal configurations alone") {
    auto [out, steps] = minimalize(etilde6_template(2));
    CHECK(steps.empty());
    CHECK(out.size() == 7);
}

TEST_CASE("euler numbers") {
    CHECK(euler_char(t_kind(KodairaType::Kind::Smooth)) == 0);
    CHECK(euler_char(t_I(1)) == 1);
    CHECK(euler_char(t_I(7)) == 7);
    CHECK(euler_char(t_I(7, 3)) == 7); // multiplicity does not change the topology
    CHECK(euler_char(t_kind(KodairaType::Kind::II)) == 2);
    CHECK(euler_char(t_kind(KodairaType::Kind::III)) == 3);
    CHECK(euler_char(t_kind(KodairaType::Kind::IV)) == 4);
    CHECK(euler_char(t_kind(KodairaType::Kind::Dtilde4)) == 6);
    CHECK(euler_char(t_kind(KodairaType::Kind::Etilde6)) == 8);
    CHECK_THROWS_AS(euler_char(t_kind(KodairaType::Kind::NumericClass)), Error);
}

TEST_CASE("c2 budget bookkeeping") {
    std::vector<KodairaType> twelve(12, t_I(1));
    BudgetResult r = c2_budget(twelve, 12);
    CHECK(r.sum == 12);
    CHECK(r.exact);
    CHECK(r.residual == 0);

    r = c2_budget({t_I(3), t_kind(KodairaType::Kind::IV)}, 12);
    CHECK(r.sum == 7);
    CHECK(!r.exact);
    CHECK(r.residual == 5);

    CHECK_THROWS_AS(c2_budget({t_I(8), t_kind(KodairaType::Kind::Dtilde4)}, 12), Error);
    try {
        c2_budget({t_I(8), t_kind(KodairaType::Kind::Dtilde4)}, 12);
    } catch (const Error& e) {
        CHECK(e.code() == "BudgetExceeded");
    }
    CHECK_THROWS_AS(c2_budget({}, 13), Error); // only 12 and 24 make sense
    CHECK(c2_budget({t_I(8), t_kind(KodairaType::Kind::Dtilde4)}, 24).sum == 14);
}

TEST_CASE("pullback table under the double cover") {
    Pullback p = pullback_type(t_I(1));
    CHECK(p.type == t_I(2));
    CHECK(p.factor == 2);
    CHECK(pullback_type(t_I(5, 2)).type == t_I(10, 2));
    CHECK(pullback_type(t_kind(KodairaType::Kind::II)).type == t_kind(KodairaType::Kind::III));
    CHECK(pullback_type(t_kind(KodairaType::Kind::III)).type ==
          t_kind(KodairaType::Kind::Dtilde4));
    CHECK(pullback_type(t_kind(KodairaType::Kind::IV)).type ==
          t_kind(KodairaType::Kind::Etilde6));
    CHECK_THROWS_AS(pullback_type(t_kind(KodairaType::Kind::Smooth)), Error);
    try {
        pullback_type(t_kind(KodairaType::Kind::Smooth));
    } catch (const Error& e) {
        CHECK(e.code() == "NotInTable");
    }
}

TEST_CASE("pullback euler numbers follow the table") {
    // doubling holds on the I, III, IV rows; the II row lands on III, 2 -> 3
    for (const KodairaType& t : {t_I(1), t_I(4), t_I(9), t_kind(KodairaType::Kind::III),
                                 t_kind(KodairaType::Kind::IV)})
        CHECK(euler_char(pullback_type(t).type) == 2 * euler_char(t));
    CHECK(euler_char(pullback_type(t_kind(KodairaType::Kind::II)).type) == 3);
}

TEST_CASE("canonical degree along the base") {
    CHECK(canonical_degree(0, 2, {}) == 0);
    CHECK(canonical_degree(1, 2, {}) == 2);
    CHECK(canonical_degree(0, 2, {2, 2}) == 1);
    CHECK(canonical_degree(0, 2, {2}) == Rat(1, 2));
    CHECK(canonical_degree(0, 2, {2, 3}) == Rat(7, 6));
    CHECK_THROWS_AS(canonical_degree(0, 1, {}), Error);
    CHECK_THROWS_AS(canonical_degree(0, 2, {0}), Error);
}

TEST_CASE("base genus from the ramification degree") {
    CHECK(hurwitz_genus(2) == 0);
    CHECK(hurwitz_genus(10) == 4);
    CHECK_THROWS_AS(hurwitz_genus(7), Error);
    try {
        hurwitz_genus(7);
    } catch (const Error& e) {
        CHECK(e.code() == "OddDegree");
    }
    CHECK(ramification_degree_ok(4, 4));
    CHECK(ramification_degree_ok(4, 5));
    CHECK(!ramification_degree_ok(4, 6));
    CHECK(!ramification_degree_ok(4, 3));
}

TEST_CASE("label helpers") {
    FiberConfig f;
    int p = f.ensure_label("p");
    int q = f.ensure_label("q");
    CHECK(f.ensure_label("p") == p);
    CHECK(f.label_rep(p) != f.label_rep(q));
    f.union_labels(p, q);
    CHECK(f.label_rep(p) == f.label_rep(q));
    int fresh = f.fresh_label();
    CHECK(f.label_name(fresh) != "p");
    CHECK(f.label_count() == 3);
}
