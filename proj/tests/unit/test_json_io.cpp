#include <catch_amalgamated.hpp>

#include "varhom/errors.hpp"
#include "varhom/fixtures.hpp"
#include "varhom/json_io.hpp"

using namespace varhom;
using json_io::Json;

namespace {

std::string where_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const InputError& e) {
        return e.where();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("matrices round-trip with arbitrary precision", "[json_io]")
{
    IntMatrix m(2, 3);
    m(0, 0) = Integer("-340282366920938463463374607431768211457");
    m(1, 2) = 7;
    Json j = json_io::to_json(m);
    REQUIRE(j["entries"][0][0] == "-340282366920938463463374607431768211457");
    REQUIRE(json_io::matrix_from_json(j, "") == m);
    REQUIRE(json_io::matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[[3,"-4"]]})"), "") ==
            IntMatrix::from_rows({{3, -4}}));
    for (auto [r, c] : {std::pair{0, 0}, {0, 2}, {3, 0}}) {
        IntMatrix e(r, c);
        REQUIRE(json_io::matrix_from_json(json_io::to_json(e), "") == e);
    }
}

TEST_CASE("malformed matrices report their location", "[json_io]")
{
    auto bad = [](const char* text) {
        return where_of([&] { json_io::matrix_from_json(Json::parse(text), "/m"); });
    };
    REQUIRE(bad(R"({"rows":1,"cols":2,"entries":[[1]]})") == "/m/entries/0");
    REQUIRE(bad(R"({"rows":2,"cols":1,"entries":[[1]]})") == "/m/entries");
    REQUIRE(bad(R"({"rows":1,"cols":1,"entries":[["1x"]]})") == "/m/entries/0/0");
    REQUIRE(bad(R"({"rows":1,"cols":1,"entries":[[1.5]]})") == "/m/entries/0/0");
    REQUIRE(bad(R"({"rows":-1,"cols":1,"entries":[]})") == "/m/rows");
    REQUIRE(bad(R"({"cols":1,"entries":[]})") == "/m/rows");
    REQUIRE(bad(R"({"rows":0,"cols":0,"entries":[],"extra":1})") == "/m/extra");
    REQUIRE(bad(R"([1,2])") == "/m");
}

TEST_CASE("groups and complexes", "[json_io]")
{
    auto g = FgAbelianGroup::from_cyclic_orders(2, {2, 4});
    REQUIRE(json_io::to_json(g).dump() == R"({"free_rank":2,"torsion":["2","4"]})");
    REQUIRE(json_io::group_from_json(json_io::to_json(g), "") == g);
    REQUIRE(where_of([] { json_io::group_from_json(Json::parse(R"({"free_rank":0,"torsion":["4","2"]})"), ""); }) ==
            "/torsion/1");
    REQUIRE(where_of([] { json_io::group_from_json(Json::parse(R"({"free_rank":0,"torsion":[1]})"), ""); }) ==
            "/torsion/0");

    auto c = fixtures::klein_bottle();
    REQUIRE(json_io::complex_from_json(json_io::to_json(c), "") == c);
    REQUIRE(where_of([] {
                json_io::complex_from_json(
                    Json::parse(R"({"ranks":[1,1,1],"boundaries":[{"rows":1,"cols":1,"entries":[["1"]]},
                                   {"rows":1,"cols":1,"entries":[["1"]]}]})"),
                    "/c");
            }) == "/c");
    REQUIRE(where_of([] {
                json_io::complex_from_json(
                    Json::parse(R"({"ranks":[1,2],"boundaries":[{"rows":1,"cols":1,"entries":[["0"]]}]})"), "/c");
            }) == "/c/boundaries/0");
}

TEST_CASE("problem envelope", "[json_io]")
{
    auto p = json_io::parse_problem(R"({"schema_version":"1.0","kind":"loop","payload":{}})");
    REQUIRE(p.kind == json_io::ProblemKind::Loop);
    REQUIRE(where_of([] { json_io::parse_problem("{"); }) == "");
    REQUIRE(where_of([] { json_io::parse_problem(R"({"schema_version":"2.0","kind":"loop","payload":{}})"); }) ==
            "/schema_version");
    REQUIRE(where_of([] { json_io::parse_problem(R"({"schema_version":"1.0","kind":"nope","payload":{}})"); }) ==
            "/kind");
    REQUIRE(where_of([] { json_io::parse_problem(R"({"schema_version":"1.0","kind":"loop"})"); }) == "/payload");
    REQUIRE(where_of([] { json_io::parse_problem(R"([])"); }) == "");
}

TEST_CASE("open book descriptions", "[json_io]")
{
    PageData a = fixtures::annulus_page();
    Json page{{"complex", json_io::to_json(a.complex())},
              {"sub_indices", Json::array({Json::array({0, 1}), Json::array({0, 1}), Json::array()})},
              {"q", 1},
              {"weinstein_type", true}};
    Json chain = Json::array();
    const Monodromy twist = fixtures::twist_monodromy(a, 3);
    for (const auto& m : twist.map().components())
        chain.push_back(json_io::to_json(m));
    auto in = json_io::open_book_from_json(Json{{"page", page}, {"monodromy", {{"chain_map", chain}}}}, "");
    REQUIRE(in.monodromy);
    REQUIRE_FALSE(in.variation);
    REQUIRE(variation(in.page, *in.monodromy).matrix() == IntMatrix::from_rows({{3}}));

    Json both{{"page", page}, {"monodromy", {{"chain_map", chain}, {"variation_matrix", json_io::to_json(IntMatrix(1, 1))}}}};
    REQUIRE(where_of([&] { json_io::open_book_from_json(both, ""); }) == "/monodromy");

    Json bad_page = page;
    bad_page["sub_indices"] = Json::array({Json::array(), Json::array(), Json::array()});
    REQUIRE(where_of([&] { json_io::open_book_from_json(Json{{"page", bad_page}, {"monodromy", {{"chain_map", chain}}}}, ""); }) ==
            "/page");

    Json short_chain = Json::array({chain[0]});
    REQUIRE(where_of([&] { json_io::open_book_from_json(Json{{"page", page}, {"monodromy", {{"chain_map", short_chain}}}}, ""); }) ==
            "/monodromy/chain_map");
}

TEST_CASE("verdict serialization", "[json_io]")
{
    auto v = flexible_obstruction(FgAbelianGroup::from_cyclic_orders(0, {2}), Hypotheses(7, true, true));
    Json j = json_io::to_json(v);
    REQUIRE(j["status"] == "OBSTRUCTED");
    REQUIRE(j["witness"] == Json::array({"2"}));
    REQUIRE(j["assumptions"]["dim"] == 7);
    auto l = loop_verdict(IntMatrix::from_rows({{1, 1}, {0, 1}}), hyperbolic_form(1, Parity::Odd), true);
    REQUIRE(json_io::to_json(l)["order"] == "INFINITE");
}
