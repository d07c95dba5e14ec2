// Copyright 2026 The gausskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "gausskit/io.hpp"
#include "test_util.hpp"

namespace gausskit {
namespace {

using namespace test_util;
using io::Json;

std::string field_of(const std::string &text) {
    try {
        io::e2_from_json(io::parse(text));
    } catch (const io::ParseError &e) {
        return e.field();
    }
    return "";
}

TEST(Dump, NumbersAndLayout) {
    EXPECT_EQ(io::dump(Json(0.1)), "0.10000000000000001");
    EXPECT_EQ(io::dump(Json(std::numeric_limits<double>::infinity())), "null");
    EXPECT_EQ(io::dump(Json(3)), "3");
    Json j = Json::object();
    j["b"] = Json::array({1.5, -2.0});
    j["a"] = true;
    EXPECT_EQ(io::dump(j), R"({"b":[1.5,-2],"a":true})");
    EXPECT_EQ(io::dump(j, 2), "{\n  \"b\": [1.5, -2],\n  \"a\": true\n}");
}

TEST(Dump, ParseRoundTripIsExact) {
    Rng rng(111);
    for (int trial = 0; trial < 50; trial++) {
        double x = std::ldexp(uniform(rng, -1, 1), (int)uniform(rng, -40, 40));
        EXPECT_EQ(io::parse(io::dump(Json(x))).get<double>(), x);
    }
}

TEST(E2Json, RoundTrip) {
    Rng rng(112);
    for (size_t n = 1; n <= 3; n++) {
        E2Params p = random_state(n, rng).params();
        Json j = io::to_json(p);
        EXPECT_EQ(j["n"].get<size_t>(), n);
        E2Params back = io::e2_from_json(io::parse(io::dump(j, 2)));
        EXPECT_EQ(back.c, p.c);
        EXPECT_EQ(back.mu, p.mu);
        EXPECT_LT((back.a - p.a).cwiseAbs().maxCoeff(), 1e-16);
        EXPECT_LT((back.lambda - p.lambda).cwiseAbs().maxCoeff(), 1e-16);
    }
}

TEST(E2Json, OptionalFields) {
    E2Params p = io::e2_from_json(io::parse(R"({"A": [[[0.2, 0]]], "Lambda": [[[0, 0]]]})"));
    EXPECT_NEAR(p.c, std::sqrt(1 - 4 * 0.04), 1e-15);
    EXPECT_EQ(p.mu.size(), 1);
    EXPECT_EQ(p.mu(0), cplx(0));
    // Real numbers are accepted where a complex entry is expected.
    p = io::e2_from_json(io::parse(R"({"A": [[0.1]], "Lambda": [[0.2]], "c": 0.5})"));
    EXPECT_EQ(p.c, 0.5);
    EXPECT_EQ(p.lambda(0, 0), cplx(0.2));
}

TEST(E2Json, ErrorsNameTheField) {
    EXPECT_EQ(field_of(R"({"Lambda": [[0]]})"), "A");
    EXPECT_EQ(field_of(R"({"A": [[0]]})"), "Lambda");
    EXPECT_EQ(field_of(R"({"A": [[0, 0.1], [0.2, 0]], "Lambda": [[0, 0], [0, 0]]})"), "A");
    EXPECT_EQ(field_of(R"({"A": [[0]], "Lambda": [[[0, 1]]]})"), "Lambda");
    EXPECT_EQ(field_of(R"({"A": [[0]], "Lambda": [[0], [0, 0]]})"), "Lambda[1]");
    EXPECT_EQ(field_of(R"({"A": [[0]], "Lambda": [[0]], "mu": [[0, 0], [1, 0]]})"), "mu");
    EXPECT_EQ(field_of(R"({"A": [[0]], "Lambda": [[0]], "c": [1, 0.5]})"), "c");
    EXPECT_EQ(field_of(R"({"n": 2, "A": [[0]], "Lambda": [[0]]})"), "n");
    EXPECT_EQ(field_of(R"({"A": [["x"]], "Lambda": [[0]]})"), "A[0][0]");
    EXPECT_EQ(field_of(R"({"A": [[0]], )"), "<document>");
    EXPECT_EQ(field_of("[1, 2]"), "<document>");
}

TEST(CovJson, RoundTripAndErrors) {
    Rng rng(113);
    CovarianceParams cov = random_covariance(2, 0.3, 0.3, 0.4, rng);
    CovarianceParams back = io::cov_from_json(io::parse(io::dump(io::to_json(cov))));
    EXPECT_EQ(back.m, cov.m);
    EXPECT_LT((back.s - cov.s).cwiseAbs().maxCoeff(), 1e-16);
    try {
        io::cov_from_json(io::parse(R"({"m": [[0, 0]], "S": [[1, 0], [0.5, 1]]})"));
        FAIL();
    } catch (const io::ParseError &e) {
        EXPECT_EQ(e.field(), "S");
    }
    try {
        io::cov_from_json(io::parse(R"({"m": [[0, 0]], "S": [[1]]})"));
        FAIL();
    } catch (const io::ParseError &e) {
        EXPECT_EQ(e.field(), "S");
    }
}

TEST(OperatorJson, LayoutAndCsv) {
    TruncatedOperator rho = dmf(CMat::Zero(1, 1), CMat::Constant(1, 1, 0.5), 2);
    Json j = io::to_json(rho);
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["cutoff"], 2);
    EXPECT_EQ(j["basis"].size(), 3u);
    EXPECT_EQ(j["entries"][1][1][0].get<double>(), 0.25);
    std::string csv = io::to_csv(rho);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "t_1,tp_1,re,im");
    std::getline(lines, line);
    EXPECT_EQ(line, "0,0,0.5,0");
    size_t rows = 1;
    while (std::getline(lines, line)) {
        rows++;
    }
    EXPECT_EQ(rows, 9u);

    TruncatedVector psi = pure_state_vector(CMat::Constant(2, 2, 0.1), 2);
    EXPECT_EQ(io::to_json(psi)["entries"].size(), 6u);
    EXPECT_EQ(io::to_csv(psi).substr(0, 14), "t_1,t_2,re,im\n");
}

TEST(RecordsJson, RoundTripAndErrors) {
    E2Params p = E2Params::state(CMat::Zero(2, 2), 0.1 * CMat::Identity(2, 2));
    auto records = simulate(p, full_battery(2), 100, 3);
    Json j;
    j["n"] = 2;
    j["measurements"] = Json::array();
    for (const auto &rec : records) {
        j["measurements"].push_back(io::to_json(rec));
    }
    auto back = io::records_from_json(io::parse(io::dump(j)));
    ASSERT_EQ(back.size(), records.size());
    for (size_t i = 0; i < back.size(); i++) {
        EXPECT_EQ(back[i].spec, records[i].spec);
        EXPECT_EQ(back[i].counts, records[i].counts);
    }
    auto field = [](const std::string &text) {
        try {
            io::records_from_json(io::parse(text));
        } catch (const io::ParseError &e) {
            return e.field();
        }
        return std::string();
    };
    EXPECT_EQ(field(R"({"measurements": []})"), "n");
    EXPECT_EQ(field(R"({"n": 1, "measurements": [{"spec": {"kind": "M0"}, "counts": [1]}]})"),
              "measurements[0].counts");
    EXPECT_EQ(field(R"({"n": 1, "measurements": [{"spec": {"kind": "Mj0", "j": 4}, "counts": [1, 1]}]})"),
              "measurements[0].spec");
    EXPECT_EQ(field(R"({"n": 1, "measurements": [{"spec": {"kind": 3}, "counts": [1, 1]}]})"),
              "measurements[0].spec.kind");
    EXPECT_EQ(field(R"({"n": 1, "measurements": [{"spec": {"kind": "M0"}, "counts": [1, -1]}]})"),
              "measurements[0].counts[1]");
}

}  // namespace
}  // namespace gausskit
