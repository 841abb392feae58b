// Copyright 2026 The minwit Authors
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

#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "cli.h"
#include "json.hpp"
#include "minwit/io.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("minwit_cli_" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    void TearDown() override {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return minwit::cli::run(args, out_, err_);
    }
    void write(const std::string &name, const std::string &text) {
        minwit::write_text_file(path(name), text);
    }
    json load(const std::string &name) {
        return json::parse(minwit::read_text_file(path(name)));
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

const char *kGhzCsv =
    "index,value,stderr\n"
    "3333,0.982,0.003\n3300,0.993,0.002\n0033,0.988,0.002\n3003,0.963,0.004\n"
    "0330,0.969,0.004\n3030,0.972,0.004\n0303,0.960,0.005\n1221,-0.925,0.006\n";

TEST_F(CliTest, BuildThenEvalReproducesTabulatedValue) {
    ASSERT_EQ(run({"build", "--state", "ghz", "--n", "4", "--settings", "3333,1221", "--out", path("w.json")}), 0)
        << err_.str();
    auto w = load("w.json");
    EXPECT_EQ(w["threshold"], "7/11");
    EXPECT_EQ(w["g0"], "11");
    EXPECT_EQ(w["g"], "7");

    write("data.csv", kGhzCsv);
    ASSERT_EQ(run({"eval", "--witness", path("w.json"), "--correlations", path("data.csv"), "--report",
                   path("r.json")}),
              0)
        << err_.str();
    auto r = load("r.json");
    EXPECT_NEAR(r["value"].get<double>(), 0.916, 0.001);
    EXPECT_NEAR(r["stderr"].get<double>(), 0.005, 0.002);
    EXPECT_EQ(r["verdict"], "GenuineMultipartite");
    EXPECT_EQ(r["per_cut"].size(), 7u);
    EXPECT_NE(out_.str().find("GenuineMultipartite"), std::string::npos);
}

TEST_F(CliTest, EvalReturnsThreeWhenNotDetected) {
    ASSERT_EQ(run({"build", "--state", "ghz", "--settings", "3333,1221", "--out", path("w.json")}), 0);
    ASSERT_EQ(run({"simulate", "--state", "ghz", "--noise-p", "0.5", "--settings", "3333,1221", "--shots", "4000",
                   "--seed", "5", "--out", path("c.json")}),
              0)
        << err_.str();
    EXPECT_EQ(run({"eval", "--witness", path("w.json"), "--counts", path("c.json")}), 3);
    auto r = json::parse(out_.str());
    EXPECT_EQ(r["verdict"], "NotDetected");
}

TEST_F(CliTest, SimulateIsDeterministic) {
    std::vector<std::string> args{"simulate", "--state", "psi", "--theta", "pi/16", "--phi", "pi", "--noise-p",
                                  "0.9", "--settings", "3333,1221", "--shots", "4000", "--seed", "11", "--out"};
    auto a = args;
    a.push_back(path("a.json"));
    auto b = args;
    b.push_back(path("b.json"));
    ASSERT_EQ(run(a), 0);
    ASSERT_EQ(run(b), 0);
    EXPECT_EQ(minwit::read_text_file(path("a.json")), minwit::read_text_file(path("b.json")));
    auto recs = minwit::read_counts_json(minwit::read_text_file(path("a.json")));
    EXPECT_EQ(recs.size(), 2u);
}

TEST_F(CliTest, BuildIsDeterministic) {
    ASSERT_EQ(run({"build", "--state", "cluster4", "--settings", "auto", "--out", path("a.json")}), 0);
    ASSERT_EQ(run({"build", "--state", "cluster4", "--settings", "auto", "--out", path("b.json")}), 0);
    EXPECT_EQ(minwit::read_text_file(path("a.json")), minwit::read_text_file(path("b.json")));
    EXPECT_EQ(load("a.json")["threshold"], "2/3");
}

TEST_F(CliTest, SweepWritesThirteenRows) {
    ASSERT_EQ(run({"sweep", "--phi", "pi", "--steps", "13", "--noise-p", "1.0", "--out", path("s.csv")}), 0);
    auto csv = minwit::read_text_file(path("s.csv"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 14);
    ASSERT_EQ(run({"sweep", "--steps", "5", "--fidelity", "0.9", "--out", path("s.json")}), 0);
    EXPECT_EQ(load("s.json").size(), 5u);
}

TEST_F(CliTest, BuildVariants) {
    EXPECT_EQ(run({"build", "--state", "dicke", "--named"}), 0);
    EXPECT_EQ(json::parse(out_.str())["threshold"], "4/5");
    EXPECT_EQ(run({"build", "--state", "ghz", "--n", "12", "--closed-form", "--no-cut-criteria"}), 0);
    EXPECT_EQ(json::parse(out_.str())["threshold"], "2047/3071");
    EXPECT_EQ(run({"build", "--state", "w", "--named"}), 4);
    EXPECT_EQ(run({"build", "--state", "w", "--n", "5", "--named"}), 2);
}

TEST_F(CliTest, VerifyPasses) {
    ASSERT_EQ(run({"build", "--state", "ghz", "--settings", "3333,1221", "--out", path("w.json")}), 0);
    EXPECT_EQ(run({"verify", "--witness", path("w.json"), "--samples", "2000", "--seed", "3", "--restarts", "3",
                   "--report", path("v.json")}),
              0)
        << out_.str();
    auto v = load("v.json");
    EXPECT_GE(v.size(), 4u);
    EXPECT_NE(out_.str().find("witness_threshold"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"frobnicate"}), 2);
    EXPECT_EQ(run({"build"}), 2);
    EXPECT_EQ(run({"build", "--state", "ghz", "--bogus"}), 2);
    EXPECT_EQ(run({"build", "--state", "nosuch"}), 2);
    EXPECT_EQ(run({"build", "--state", "ghz", "--settings", "33"}), 2);
    EXPECT_EQ(run({"simulate", "--state", "ghz", "--settings", "3333", "--noise-p", "2"}), 2);
    EXPECT_EQ(run({"sweep", "--phi", "pi/0"}), 2);
    EXPECT_FALSE(err_.str().empty());
    EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(CliTest, DataErrorsExitFour) {
    ASSERT_EQ(run({"build", "--state", "ghz", "--settings", "3333,1221", "--out", path("w.json")}), 0);
    EXPECT_EQ(run({"eval", "--witness", path("missing.json"), "--correlations", path("x.csv")}), 4);
    write("bad.csv", "index,value,stderr\n3333,1.5,0.1\n");
    EXPECT_EQ(run({"eval", "--witness", path("w.json"), "--correlations", path("bad.csv")}), 4);
    write("short.csv", "index,value,stderr\n3333,0.9,0.1\n");
    EXPECT_EQ(run({"eval", "--witness", path("w.json"), "--correlations", path("short.csv")}), 4);
    EXPECT_NE(err_.str().find("missing correlation"), std::string::npos);
    write("empty.csv", "");
    EXPECT_EQ(run({"eval", "--witness", path("w.json"), "--correlations", path("empty.csv")}), 4);
}

TEST(ParseAngle, AcceptsPiFractions) {
    using minwit::cli::parse_angle;
    constexpr double pi = std::numbers::pi;
    EXPECT_EQ(parse_angle("0"), 0.0);
    EXPECT_EQ(parse_angle("0.25"), 0.25);
    EXPECT_EQ(parse_angle("pi"), pi);
    EXPECT_EQ(parse_angle("pi/8"), pi / 8);
    EXPECT_EQ(parse_angle("-pi/4"), -pi / 4);
    EXPECT_EQ(parse_angle("3pi/16"), 3 * pi / 16);
    EXPECT_EQ(parse_angle("3*pi/16"), 3 * pi / 16);
    EXPECT_EQ(parse_angle(" PI "), pi);
    EXPECT_THROW(parse_angle("pi/"), std::invalid_argument);
    EXPECT_THROW(parse_angle("two"), std::invalid_argument);
    EXPECT_THROW(parse_angle("pi*2"), std::invalid_argument);
}

}  // namespace
