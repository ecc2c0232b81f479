#include "doctest.h"
#include "printers.hpp"
#include "logalg/serialize.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace logalg;

TEST_CASE("series JSON layout") {
    LogSeries p(Order::Generic, -3, {{1, 1}, {-3, rat(-1, 360)}});
    Json j = to_json(p);
    CHECK(j.dump() == R"({"order":"generic","floor":-3,"coeffs":[[1,"1"],[-3,"-1/360"]]})");
    CHECK(log_series_from_json(j) == p);
}

TEST_CASE("series JSON round-trips") {
    oracle::Gen g(79);
    for (int i = 0; i < 100; ++i) {
        LogSeries p = g.series(i % 2 ? Order::Zero : Order::Generic, 5, -8);
        CHECK(log_series_from_json(Json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("malformed series JSON is rejected") {
    CHECK_THROWS_AS(log_series_from_json(Json::parse(R"({"order":"odd","floor":0,"coeffs":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(log_series_from_json(Json::parse(R"({"order":"generic","coeffs":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(log_series_from_json(Json::parse(R"({"order":"generic","floor":0,"coeffs":[[1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(log_series_from_json(Json::parse(R"({"order":"generic","floor":0,"coeffs":[[1,"x"]]})")), std::invalid_argument);
    CHECK_THROWS_AS(log_series_from_json(Json::parse(R"({"order":"zero","floor":0,"coeffs":[[-1,"1"]]})")), std::invalid_argument);
    CHECK_THROWS_AS(log_series_from_json(Json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("operator JSON") {
    ArtinOp a = make(op::BernoulliJ{}, 3);
    Json j = to_json(a);
    CHECK(j["lead"] == 0);
    CHECK(j["cap"] == 3);
    CHECK(artin_op_from_json(j) == a);
    CHECK(order_from_string("zero") == Order::Zero);
    CHECK_THROWS(order_from_string("one"));
}

TEST_CASE("table JSON") {
    SeqTable t = emit_table("hermite", -1, 1, 4, {{"sigma", Rat(1)}});
    Json j = to_json(t);
    CHECK(j["rule"] == "hermite");
    CHECK(j["parameters"]["sigma"] == "1");
    CHECK(j["depth"] == 4);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0]["a"] == -1);
    CHECK(log_series_from_json(j["rows"][0]["series"]) == t.rows[0].second);
}

TEST_CASE("LaTeX") {
    LogSeries p(Order::Generic, -3, {{1, 1}, {0, rat(-1, 2)}, {-1, rat(1, 12)}, {-3, rat(-1, 360)}});
    CHECK(latex_series(p) ==
          "\\lambda_{1}^{\\alpha}(x) - \\lambda_{0}^{\\alpha}(x)/2 + \\lambda_{-1}^{\\alpha}(x)/12"
          " - \\lambda_{-3}^{\\alpha}(x)/360 + \\cdots");
    LogSeries q(Order::Zero, 0, {{2, 3}, {0, rat(2, 3)}});
    CHECK(latex_series(q) == "3\\lambda_{2}^{(0)}(x) + \\frac{2}{3}\\lambda_{0}^{(0)}(x)");
    SeqTable t = emit_table("bernoulli", -2, -2, 8);
    CHECK(latex_row_symbol(t, -2) == "B_{-2}^{\\alpha}(x)");
    std::string table = latex_table(t);
    CHECK(table.find("\\begin{array}") != std::string::npos);
    CHECK(table.find("B_{-2}^{\\alpha}(x) &=& \\lambda_{-2}^{\\alpha}(x) + \\lambda_{-3}^{\\alpha}(x)") != std::string::npos);
}
