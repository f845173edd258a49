#include "doctest.h"

#include <fstream>
#include <sstream>

#include "evensets/config.hpp"
#include "evensets/evenset.hpp"

using namespace evensets;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string parse_error(const std::string& text) {
    try {
        parse_config_string(text);
    } catch (const Error& e) {
        CHECK(e.code() == "ParseError");
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("a minimal problem file parses") {
    ProblemConfig c = parse_config_string("ambient plane\n"
                                          "k 2\n"
                                          "curve 0 -2 0\n");
    CHECK(c.ambient == Ambient::Plane);
    CHECK(c.k == 2);
    CHECK(c.regularity == Regularity::Unknown);
    REQUIRE(c.curves.size() == 1);
    CHECK(c.curves[0] == c.lattice().class_from({0, -2, 0}));
    CHECK(c.fibers.empty());
}

TEST_CASE("comments, blank lines and spacing are immaterial") {
    ProblemConfig c = parse_config_string("# header comment\n"
                                          "\n"
                                          "ambient   quadric   # trailing\n"
                                          "k 3\n"
                                          "regularity regular\n"
                                          "\n"
                                          "curve 0 0 -2 0 0   # a point class\n");
    CHECK(c.ambient == Ambient::Quadric);
    CHECK(c.k == 3);
    CHECK(c.regularity == Regularity::Regular);
    CHECK(c.curves.size() == 1);
}

TEST_CASE("fiber blocks parse with labels and annotations") {
    ProblemConfig c = parse_config_string("ambient plane\n"
                                          "k 0\n"
                                          "fiber nodal\n"
                                          "  comp t1 -1 2\n"
                                          "  comp c1 -4 1\n"
                                          "  pair t1 c1 2 @p @q\n"
                                          "end\n"
                                          "fiber cuspidal\n"
                                          "  comp t1 -1 2\n"
                                          "  comp c1 -4 1\n"
                                          "  pair t1 c1 2 @p*2\n"
                                          "end\n"
                                          "fiber curly\n"
                                          "  comp f 0 1 pa 1 node\n"
                                          "end\n");
    REQUIRE(c.fibers.size() == 3);
    CHECK(c.fibers[0].name == "nodal");
    const FiberConfig& nodal = c.fibers[0].fiber;
    REQUIRE(nodal.size() == 2);
    const PairData* pd = nodal.pair_data(0, 1);
    REQUIRE(pd);
    CHECK(pd->total == 2);
    CHECK(pd->at.size() == 2);

    const FiberConfig& cusp = c.fibers[1].fiber;
    const PairData* pc = cusp.pair_data(0, 1);
    REQUIRE(pc);
    CHECK(pc->at.size() == 1);
    CHECK(pc->at.begin()->second == 2);

    const FiberComponent& curly = c.fibers[2].fiber.component(0);
    CHECK(curly.pa == 1);
    REQUIRE(curly.sing.size() == 1);
    REQUIRE(curly.sing[0].branches.has_value());
    CHECK(curly.sing[0].branches->size() == 2);
}

TEST_CASE("parse errors carry the line number") {
    CHECK(parse_error("ambient plane\nambient plane\n").find("line 2: duplicate ambient") !=
          std::string::npos);
    CHECK(parse_error("k -1\n").find("line 1") != std::string::npos);
    CHECK(parse_error("curve 1 2 3\n").find("ambient and k must precede") != std::string::npos);
    CHECK(parse_error("ambient plane\nk 1\ncurve 1 2 3\n")
              .find("expected 2 coefficients, got 3") != std::string::npos);
    CHECK(parse_error("ambient moon\n").find("'plane' or 'quadric'") != std::string::npos);
    CHECK(parse_error("regularity perhaps\n").find("line 1") != std::string::npos);
    CHECK(parse_error("orbit 1 2\n").find("unknown directive 'orbit'") != std::string::npos);
    CHECK(parse_error("fiber f\n  comp a 0\n").find("comp needs id, self, mult") !=
          std::string::npos);
    CHECK(parse_error("fiber f\n  comp a 0 1\n  comp b 0 1\n  pair a b 1 p\n")
              .find("expected @label") != std::string::npos);
    CHECK(parse_error("fiber f\n  comp a 0 1\n  pair a a 1\n")
              .find("two distinct components") != std::string::npos);
    CHECK(parse_error("fiber f\n  comp a 0 1 wobbly\n").find("unknown comp annotation") !=
          std::string::npos);
    CHECK(parse_error("fiber f\n  comp a 0 1\n").find("unterminated fiber block 'f'") !=
          std::string::npos);
    CHECK(parse_error("fiber f\n  curve 1\n").find("inside a fiber block") != std::string::npos);
    CHECK(parse_error("ambient plane\nk 0\nk 0\n").find("duplicate k") != std::string::npos);
    CHECK(parse_error("k 2.5\n").find("expected an integer") != std::string::npos);
}

TEST_CASE("inner errors are rethrown as parse errors with the line") {
    // pair names an unknown component: BadInput inside, ParseError outside
    std::string msg = parse_error("fiber f\n  comp a -1 1\n  pair a b 1\nend\n");
    CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("load_config distinguishes missing files") {
    try {
        load_config("/nonexistent/evensets.cfg");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "BadInput");
    }
}

TEST_CASE("serialization is canonical and stable") {
    std::string text = "ambient plane\n"
                       "k 11\n"
                       "regularity unknown\n"
                       "curve 3 -1 -1 -1 -1 -1 -1 -1 -1 -1 -2 0\n"
                       "curve 3 -1 -1 -1 -1 -1 -1 -1 -1 -1 0 -2\n";
    ProblemConfig c = parse_config_string(text);
    CHECK(serialize_config(c) == text);
    // a second round trip through parse changes nothing
    CHECK(serialize_config(parse_config_string(serialize_config(c))) == text);
}

TEST_CASE("fiber blocks round-trip byte for byte") {
    std::string text = "ambient plane\n"
                       "k 0\n"
                       "regularity unknown\n"
                       "fiber f1\n"
                       "  comp t1 -1 2\n"
                       "  comp c1 -4 1\n"
                       "  pair t1 c1 2 @p @q\n"
                       "end\n";
    CHECK(serialize_config(parse_config_string(text)) == text);
}

TEST_CASE("golden file reproduces itself") {
    std::string path = std::string(TEST_DATA_DIR) + "/ex8_2.cfg";
    std::string text = slurp(path);
    ProblemConfig c = parse_config_string(text);
    CHECK(serialize_config(c) == text);
    EvenSetReport r = verify_even_set(c.lattice(), c.curves);
    CHECK(r.n == 2);
    CHECK(r.half_is_anticanonical);
}

TEST_CASE("declared minus_one classes survive the round trip") {
    std::string text = "ambient plane\n"
                       "k 4\n"
                       "regularity unknown\n"
                       "curve 0 -2 0 0 0\n"
                       "minus_one 0 0 1 0 0\n"
                       "minus_one 1 0 -1 -1 0\n";
    ProblemConfig c = parse_config_string(text);
    REQUIRE(c.minus_ones.size() == 2);
    CHECK(serialize_config(c) == text);
}
