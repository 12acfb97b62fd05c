#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "fcaerr/cxt_io.hpp"
#include "oracles.hpp"

using namespace fcaerr;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("minimal file parses", "[cxt_io]") {
    FormalContext ctx = parse_cxt("B\n\n1\n1\n\ng\nm\nX\n");
    REQUIRE(ctx.object_count() == 1);
    REQUIRE(ctx.attribute_count() == 1);
    REQUIRE(ctx.incident(0, 0));
}

TEST_CASE("living beings fixture parses with the expected shape", "[cxt_io]") {
    FormalContext kw = read_cxt_file(std::string(FCAERR_DATA_DIR) + "/living_beings.cxt");
    REQUIRE(kw.object_count() == 8);
    REQUIRE(kw.attribute_count() == 9);
    REQUIRE(kw.incidence_count() == 34);  // count of X cells in the fixture
    REQUIRE(kw.object_index("water weeds").has_value());
}

TEST_CASE("write then parse is identity; fixture files are canonical", "[cxt_io]") {
    for (const char* name : {"living_beings.cxt", "living_beings_scale.cxt", "eq3.cxt", "neq3.cxt",
                             "domestic.cxt", "domestic_scale.cxt", "domestic_h.cxt"}) {
        std::string path = std::string(FCAERR_DATA_DIR) + "/" + name;
        std::string text = slurp(path);
        FormalContext ctx = parse_cxt(text);
        REQUIRE(write_cxt(ctx) == text);  // byte-identical round trip
    }
}

TEST_CASE("random contexts round-trip", "[cxt_io]") {
    std::mt19937 rng(46);
    for (int round = 0; round < 60; ++round) {
        FormalContext ctx = oracle::to_context(oracle::random_context(rng, 7, 7));
        FormalContext back = parse_cxt(write_cxt(ctx));
        REQUIRE(back.objects() == ctx.objects());
        REQUIRE(back.attributes() == ctx.attributes());
        for (std::size_t g = 0; g < ctx.object_count(); ++g) REQUIRE(back.row(g) == ctx.row(g));
    }
}

TEST_CASE("malformed input is rejected with locations", "[cxt_io]") {
    REQUIRE_THROWS_AS(parse_cxt(""), ParseError);
    REQUIRE_THROWS_AS(parse_cxt("A\n\n1\n1\n\ng\nm\nX\n"), ParseError);
    REQUIRE_THROWS_AS(parse_cxt("B\n\none\n1\n\ng\nm\nX\n"), ParseError);
    REQUIRE_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\nm\nX\n"), ParseError);        // truncated
    REQUIRE_THROWS_AS(parse_cxt("B\n\n1\n1\n\ng\nm\nXX\n"), ParseError);       // row too wide
    REQUIRE_THROWS_AS(parse_cxt("B\n\n1\n2\n\ng\nm\nn\nX?\n"), ParseError);    // illegal cell
    REQUIRE_THROWS_MATCHES(parse_cxt("B\n\n1\n2\n\ng\nm\nn\nX?\n"), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("illegal cell")));
}

TEST_CASE("parser tolerates CRLF", "[cxt_io]") {
    FormalContext ctx = parse_cxt("B\r\n\r\n1\r\n1\r\n\r\ng\r\nm\r\nX\r\n");
    REQUIRE(ctx.incident(0, 0));
}
