#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "fcaerr/csv.hpp"

using namespace fcaerr;
using nlohmann::json;

namespace {

ScalingSpec spec_of(const char* text) { return ScalingSpec::from_json(json::parse(text)); }

}  // namespace

TEST_CASE("csv parsing handles quotes and line endings", "[csv]") {
    CsvTable t = parse_csv("a,b\r\n\"x,1\",\"say \"\"hi\"\"\"\nplain,2");
    REQUIRE(t.header == std::vector<std::string>{"a", "b"});
    REQUIRE(t.rows.size() == 2);
    REQUIRE(t.rows[0][0] == "x,1");
    REQUIRE(t.rows[0][1] == "say \"hi\"");
    REQUIRE(t.rows[1][1] == "2");
}

TEST_CASE("ragged rows are rejected with their line", "[csv]") {
    REQUIRE_THROWS_MATCHES(parse_csv("a,b\n1\n"), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("line 2")));
    REQUIRE_THROWS_AS(parse_csv("a,\"b\n"), ParseError);  // unterminated quote
}

TEST_CASE("nominal scaling: one attribute per distinct value", "[csv]") {
    CsvTable t = parse_csv("color\nred\nblue\nred\n");
    FormalContext ctx = scale_csv(t, ScalingSpec{});
    REQUIRE(ctx.object_count() == 3);
    REQUIRE(ctx.attribute_count() == 2);
    REQUIRE(ctx.attributes() == std::vector<std::string>{"color=blue", "color=red"});
    REQUIRE(ctx.column(*ctx.attribute_index("color=red")).count() == 2);

    CsvTable single = parse_csv("c\nv\nv\n");
    FormalContext sctx = scale_csv(single, ScalingSpec{});
    REQUIRE(sctx.attribute_count() == 1);
    REQUIRE(sctx.column(0).all());
}

TEST_CASE("interval scaling matches the temperature-bin example", "[csv]") {
    CsvTable t = parse_csv("temperature\n38.1\n35.5\n41.0\n42.0\n");
    FormalContext ctx = scale_csv(
        t, spec_of(R"({"temperature": {"kind": "interval", "breaks": [35.0, 37.5, 40.0, 42.0]}})"));
    REQUIRE(ctx.attribute_count() == 3);
    REQUIRE(ctx.attributes()[0] == "temperature=[35,37.5)");
    REQUIRE(ctx.attributes()[1] == "temperature=[37.5,40)");
    REQUIRE(ctx.attributes()[2] == "temperature=[40,42]");
    // 38.1 sits in exactly the middle bin
    REQUIRE(ctx.row(0) == Bitset::of(3, {1}));
    REQUIRE(ctx.row(1) == Bitset::of(3, {0}));
    REQUIRE(ctx.row(2) == Bitset::of(3, {2}));
    REQUIRE(ctx.row(3) == Bitset::of(3, {2}));  // last bin is closed
}

TEST_CASE("ordinal scaling: one threshold per distinct value", "[csv]") {
    CsvTable t = parse_csv("rank\n3\n1\n2\n3\n");
    FormalContext ctx = scale_csv(t, spec_of(R"({"rank": {"kind": "ordinal"}})"));
    REQUIRE(ctx.attributes() == std::vector<std::string>{"rank<=1", "rank<=2", "rank<=3"});
    REQUIRE(ctx.row(1).all());                     // value 1 satisfies every threshold
    REQUIRE(ctx.row(0) == Bitset::of(3, {2}));     // value 3 only the top
    REQUIRE(ctx.column(2).all());                  // top threshold holds everywhere
}

TEST_CASE("id column supplies object names; duplicates get suffixes", "[csv]") {
    CsvTable t = parse_csv("name,legs\nfrog,4\ntoad,4\nfrog,4\n");
    FormalContext ctx = scale_csv(t, spec_of(R"({"name": {"kind": "id"}})"));
    REQUIRE(ctx.objects() == std::vector<std::string>{"frog", "toad", "frog#2"});
    REQUIRE(ctx.attribute_count() == 1);  // legs=4
    // without an id column, rows are numbered
    FormalContext rows = scale_csv(t, spec_of(R"({"name": {"kind": "nominal"}})"));
    REQUIRE(rows.objects() == std::vector<std::string>{"r1", "r2", "r3"});
    REQUIRE(rows.attribute_count() == 3);  // legs=4, name=frog, name=toad
}

TEST_CASE("missing cells scale to nothing", "[csv]") {
    CsvTable t = parse_csv("a,b\nx,\n,2\n");
    FormalContext ctx = scale_csv(t, spec_of(R"({"b": {"kind": "ordinal"}})"));
    REQUIRE(ctx.row(0).count() == 1);  // only a=x
    REQUIRE(ctx.row(1).count() == 1);  // only b<=2
}

TEST_CASE("scaling errors carry locations", "[csv]") {
    CsvTable t = parse_csv("a\nnot_a_number\n");
    REQUIRE_THROWS_MATCHES(scale_csv(t, spec_of(R"({"a": {"kind": "ordinal"}})")), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("column 'a'")));
    REQUIRE_THROWS_AS(scale_csv(t, spec_of(R"({"zzz": {"kind": "nominal"}})")), ParseError);
    REQUIRE_THROWS_AS(spec_of(R"({"a": {"kind": "interval", "breaks": [1]}})"), ParseError);
    REQUIRE_THROWS_AS(spec_of(R"({"a": {"kind": "interval", "breaks": [2, 1]}})"), ParseError);
    REQUIRE_THROWS_AS(spec_of(R"({"a": {"kind": "what"}})"), ParseError);
    CsvTable two = parse_csv("a,b\nx,y\n");
    REQUIRE_THROWS_AS(
        scale_csv(two, spec_of(R"({"a": {"kind": "id"}, "b": {"kind": "id"}})")), ParseError);
}

TEST_CASE("nominal scaling of a small many-valued table", "[csv]") {
    // one attribute per (column, value) pair; every row gets exactly one per
    // non-empty column, so the density is #columns/#attributes
    CsvTable t = parse_csv("hair,legs,type\n1,4,mammal\n0,2,bird\n1,2,bird\n0,0,fish\n");
    FormalContext ctx = scale_csv(t, ScalingSpec{});
    REQUIRE(ctx.object_count() == 4);
    REQUIRE(ctx.attribute_count() == 2 + 3 + 3);
    for (std::size_t g = 0; g < 4; ++g) REQUIRE(ctx.row(g).count() == 3);
}
