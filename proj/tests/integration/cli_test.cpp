// Copyright 2026 The QTS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"
#include "qts/circuit.hpp"
#include "qts/dataio.hpp"
#include "qts_cli/cli.hpp"

namespace {

namespace fs = std::filesystem;
using qts::cli::run;

struct Invocation {
    int code = 0;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() /
               (std::string("qts_cli_") + info->name() + "_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        ::unsetenv("QTS_SEED");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static Invocation call(std::initializer_list<std::string> args) {
        std::vector<std::string> storage{"qts"};
        storage.insert(storage.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : storage) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        Invocation r;
        r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
        r.out = out.str();
        r.err = err.str();
        return r;
    }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static std::size_t count(const std::string& hay, const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
        return n;
    }

    // gen_ar1(0.8, 0.001, 1040, 42), the synthetic fixture.
    std::string fixture() {
        const std::string p = path("fixture.csv");
        EXPECT_EQ(call({"generate", "--phi", "0.8", "--sigma", "0.001", "--length", "1040", "--seed", "42",
                        "--out", p})
                      .code,
                  0);
        return p;
    }

    fs::path dir_;
};

TEST_F(CliTest, GenerateWritesRequestedRows) {
    const std::string p = path("s.csv");
    ASSERT_EQ(call({"generate", "--phi", "0.8", "--sigma", "0.01", "--length", "1056", "--seed", "42",
                    "--out", p})
                  .code,
              0);
    const qts::TimeSeries s = qts::read_csv(p);
    EXPECT_EQ(s.values.size(), 1056u);
    EXPECT_EQ(s.values, qts::gen_ar1(0.8, 0.01, 1056, 42).values);
}

TEST_F(CliTest, GenerateZeroSigmaGivesZeros) {
    const std::string p = path("z.csv");
    ASSERT_EQ(call({"generate", "--sigma", "0", "--length", "5", "--out", p}).code, 0);
    EXPECT_EQ(qts::read_csv(p).values, std::vector<double>(5, 0.0));
}

TEST_F(CliTest, GenerateRejectsZeroLengthAndNegativeSigma) {
    EXPECT_EQ(call({"generate", "--length", "0", "--out", path("x.csv")}).code, qts::cli::kUsage);
    EXPECT_EQ(call({"generate", "--length", "5", "--sigma", "-1", "--out", path("x.csv")}).code,
              qts::cli::kUsage);
    EXPECT_FALSE(fs::exists(path("x.csv")));
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
    ASSERT_EQ(call({"generate", "--length", "20", "--seed", "42", "--out", path("a.csv")}).code, 0);
    ::setenv("QTS_SEED", "42", 1);
    ASSERT_EQ(call({"generate", "--length", "20", "--out", path("b.csv")}).code, 0);
    ::setenv("QTS_SEED", "not-a-number", 1);
    EXPECT_EQ(call({"generate", "--length", "20", "--out", path("c.csv")}).code, qts::cli::kUsage);
    ::unsetenv("QTS_SEED");
    ASSERT_EQ(call({"generate", "--length", "20", "--out", path("d.csv")}).code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(slurp(path("d.csv")), qts::to_csv(qts::gen_ar1(0.8, 0.01, 20, 0)));
}

TEST_F(CliTest, ForecastFixtureRecordsSixteenPredictions) {
    const std::string in = fixture();
    const std::string out = path("f.json");
    ASSERT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "16", "--variant", "full",
                    "--shots", "0", "--out", out})
                  .code,
              0);
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(j["predictions"].size(), 16u);
    EXPECT_EQ(j["actuals"].size(), 16u);
    EXPECT_EQ(j["meta"]["n"], 10);
    EXPECT_EQ(j["meta"]["variant"], "full");
    EXPECT_TRUE(j["mse"].is_number());
}

TEST_F(CliTest, ForecastFloatsUseSeventeenSignificantDigits) {
    const std::string in = fixture();
    const std::string out = path("f.json");
    ASSERT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "2", "--out", out}).code, 0);
    const std::string text = slurp(out);
    const auto j = nlohmann::json::parse(text);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", j["meta"]["x_min"].get<double>());
    EXPECT_NE(text.find(std::string("\"x_min\": ") + buf), std::string::npos);
}

TEST_F(CliTest, ForecastZeroStepsIsEmpty) {
    const std::string in = fixture();
    const std::string out = path("f.json");
    ASSERT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "0", "--out", out}).code, 0);
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_TRUE(j["predictions"].empty());
    EXPECT_TRUE(j["mse"].is_null());
}

TEST_F(CliTest, ForecastErrorsMapToExitCodes) {
    const std::string in = fixture();
    const std::string out = path("f.json");
    EXPECT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "4", "--variant", "bogus",
                    "--out", out})
                  .code,
              qts::cli::kUsage);
    EXPECT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "4", "--depol", "0.01",
                    "--out", out})
                  .code,
              qts::cli::kUsage);
    EXPECT_EQ(call({"forecast", "--input", in, "--train-len", "1", "--steps", "4", "--out", out}).code,
              qts::cli::kDataError);
    EXPECT_EQ(call({"forecast", "--input", path("missing.csv"), "--train-len", "8", "--steps", "1", "--out",
                    out})
                  .code,
              qts::cli::kDataError);
    EXPECT_FALSE(fs::exists(out));

    const std::string flat = path("flat.csv");
    ASSERT_EQ(call({"generate", "--sigma", "0", "--length", "40", "--out", flat}).code, 0);
    EXPECT_EQ(call({"forecast", "--input", flat, "--train-len", "32", "--steps", "2", "--out", out}).code,
              qts::cli::kNumericError);
}

TEST_F(CliTest, ForecastWithNoiseIsSeeded) {
    const std::string in = fixture();
    for (const char* name : {"a.json", "b.json"}) {
        ASSERT_EQ(call({"forecast", "--input", in, "--train-len", "64", "--steps", "3", "--shots", "500",
                        "--depol", "0.02", "--readout", "0.01", "--seed", "9", "--out", path(name)})
                      .code,
                  0);
    }
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    const auto j = nlohmann::json::parse(slurp(path("a.json")));
    EXPECT_DOUBLE_EQ(j["meta"]["exec"]["noise"]["two_qubit_depol"].get<double>(), 0.02);
}

TEST_F(CliTest, BenchmarkFullModelList) {
    const std::string in = fixture();
    const Invocation r = call({"benchmark", "--input", in, "--train-len", "1024", "--steps", "16", "--models",
                               "ar1,ar2,ar3,arima210,qts-rot,qts-fwd,qts-full", "--seed", "42", "--report",
                               path("r.json"), "--table", path("t.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string table = slurp(path("t.csv"));
    EXPECT_EQ(table.rfind("model,mse\n", 0), 0u);
    EXPECT_EQ(count(table, "\n"), 8u);
    const auto j = nlohmann::json::parse(slurp(path("r.json")));
    ASSERT_EQ(j["models"].size(), 7u);
    EXPECT_EQ(j["meta"]["n"], 10);
    EXPECT_EQ(j["meta"]["steps"], 16);
    for (const auto& m : j["models"]) {
        EXPECT_EQ(m["predictions"].size(), 16u) << m["name"];
        EXPECT_TRUE(m["mse"].is_number()) << m["name"];
    }
}

TEST_F(CliTest, BenchmarkSingleModelAndDuplicates) {
    const std::string in = fixture();
    ASSERT_EQ(call({"benchmark", "--input", in, "--train-len", "1024", "--steps", "8", "--models", "ar1",
                    "--report", path("r.json"), "--table", path("t.csv")})
                  .code,
              0);
    const std::string single = slurp(path("t.csv"));
    EXPECT_EQ(count(single, "\n"), 2u);

    const Invocation dup = call({"benchmark", "--input", in, "--train-len", "1024", "--steps", "8", "--models",
                                 "ar1,ar1", "--report", path("r2.json"), "--table", path("t2.csv")});
    ASSERT_EQ(dup.code, 0);
    EXPECT_NE(dup.err.find("duplicate"), std::string::npos);
    EXPECT_EQ(slurp(path("t2.csv")), single);
}

TEST_F(CliTest, BenchmarkRejectsUnknownModel) {
    const std::string in = fixture();
    EXPECT_EQ(call({"benchmark", "--input", in, "--train-len", "1024", "--steps", "8", "--models", "lstm",
                    "--report", path("r.json"), "--table", path("t.csv")})
                  .code,
              qts::cli::kUsage);
    EXPECT_FALSE(fs::exists(path("r.json")));
}

TEST_F(CliTest, BinaryBenchmarkIsByteIdentical) {
    const std::string in = fixture();
    for (const char* tag : {"a", "b"}) {
        const std::string cmd = std::string("\"") + QTS_CLI_PATH + "\" benchmark --input \"" + in +
                                "\" --train-len 1024 --steps 16 --seed 7 --shots 2000 --report \"" +
                                path(std::string(tag) + ".json") + "\" --table \"" +
                                path(std::string(tag) + ".csv") + "\" > /dev/null 2>&1";
        ASSERT_EQ(std::system(cmd.c_str()), 0);
    }
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
}

TEST_F(CliTest, TranspileCountReports) {
    struct Case {
        const char* qubits;
        const char* variant;
        const char* before;
        const char* after;
    };
    for (const Case& c : {Case{"10", "full", "before: 10 1q / 13 2q", "after: 40 1q / 13 2q"},
                          Case{"1", "rot", "before: 1 1q / 0 2q", "after: 4 1q / 0 2q"},
                          Case{"4", "full", "before: 4 1q / 4 2q", "after: 16 1q / 4 2q"}}) {
        const Invocation r = call({"transpile", "--qubits", c.qubits, "--variant", c.variant});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_NE(r.out.find(c.before), std::string::npos) << r.out;
        EXPECT_NE(r.out.find(c.after), std::string::npos) << r.out;
        const auto pos = r.out.find("max deviation: ");
        ASSERT_NE(pos, std::string::npos);
        EXPECT_LE(std::stod(r.out.substr(pos + 15)), 1e-10);
    }
}

TEST_F(CliTest, TranspileEmitAndReload) {
    const std::string lowered = path("low.txt");
    ASSERT_EQ(call({"transpile", "--qubits", "4", "--variant", "fwd", "--emit", lowered}).code, 0);
    const qts::Circuit c = qts::parse_circuit_text(slurp(lowered));
    EXPECT_EQ(c.num_qubits(), 4u);
    EXPECT_EQ(qts::gate_counts(c).single_qubit, 16u);
    EXPECT_EQ(qts::gate_counts(c).two_qubit, 3u);


    std::ofstream(path("in.txt")) << "QUBITS 3\nRY q0 0.5\nRY q1 1.25\nRY q2 2\nCX q0 q1\nCX q1 q2\n";
    const Invocation from_file = call({"transpile", "--input", path("in.txt"), "--emit", path("in_low.txt")});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_NE(from_file.out.find("before: 3 1q / 2 2q"), std::string::npos) << from_file.out;
    EXPECT_NE(from_file.out.find("after: 12 1q / 2 2q"), std::string::npos) << from_file.out;

    // Lowering expects RY/CX input; already-native ops are refused.
    EXPECT_EQ(call({"transpile", "--input", lowered}).code, qts::cli::kUsage);
}

TEST_F(CliTest, TranspileErrors) {
    EXPECT_EQ(call({"transpile", "--qubits", "0", "--variant", "full"}).code, qts::cli::kUsage);
    EXPECT_EQ(call({"transpile", "--qubits", "25", "--variant", "full"}).code, qts::cli::kUsage);
    EXPECT_EQ(call({"transpile", "--variant", "full"}).code, qts::cli::kUsage);
    std::ofstream(path("bad.txt")) << "QUBITS 2\nCZ q0 q1\n";
    EXPECT_EQ(call({"transpile", "--input", path("bad.txt")}).code, qts::cli::kDataError);
}

TEST_F(CliTest, PlotPolylineStructure) {
    const std::string in = fixture();
    for (const char* v : {"rot", "fwd", "full"}) {
        ASSERT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "8", "--variant", v,
                        "--out", path(std::string(v) + ".json")})
                      .code,
                  0);
    }
    ASSERT_EQ(call({"plot", "--forecast", path("full.json"), "--out", path("one.svg")}).code, 0);
    const std::string one = slurp(path("one.svg"));
    EXPECT_EQ(one.rfind("<svg", 0), 0u);
    EXPECT_EQ(count(one, "<polyline"), 2u);
    EXPECT_EQ(count(one, "class=\"actual\""), 1u);

    ASSERT_EQ(call({"plot", "--forecast", path("rot.json"), "--forecast", path("fwd.json"), "--forecast",
                    path("full.json"), "--out", path("three.svg")})
                  .code,
              0);
    const std::string three = slurp(path("three.svg"));
    EXPECT_EQ(count(three, "<polyline"), 4u);
    EXPECT_NE(three.find("qts-rot"), std::string::npos);

    ASSERT_EQ(call({"plot", "--forecast", path("rot.json"), "--forecast", path("fwd.json"), "--forecast",
                    path("full.json"), "--out", path("three_again.svg")})
                  .code,
              0);
    EXPECT_EQ(slurp(path("three_again.svg")), three);
}

TEST_F(CliTest, PlotEmptyPredictionsShowsActualsOnly) {
    const std::string in = fixture();
    ASSERT_EQ(call({"forecast", "--input", in, "--train-len", "1024", "--steps", "0", "--out", path("e.json")})
                  .code,
              0);
    ASSERT_EQ(call({"plot", "--forecast", path("e.json"), "--out", path("e.svg")}).code, 0);
    const std::string svg = slurp(path("e.svg"));
    EXPECT_EQ(count(svg, "class=\"prediction\""), 0u);
    EXPECT_LE(count(svg, "<polyline"), 1u);
}

TEST_F(CliTest, PlotRejectsMalformedJson) {
    std::ofstream(path("bad.json")) << "{\"predictions\": [1, 2";
    EXPECT_EQ(call({"plot", "--forecast", path("bad.json"), "--out", path("x.svg")}).code,
              qts::cli::kDataError);
    std::ofstream(path("odd.json")) << "{\"predictions\": \"nope\"}";
    EXPECT_EQ(call({"plot", "--forecast", path("odd.json"), "--out", path("x.svg")}).code,
              qts::cli::kDataError);
    EXPECT_FALSE(fs::exists(path("x.svg")));
}

TEST_F(CliTest, HelpAndMissingSubcommand) {
    EXPECT_EQ(call({"--help"}).code, qts::cli::kOk);
    EXPECT_EQ(call({}).code, qts::cli::kUsage);
    EXPECT_EQ(call({"frobnicate"}).code, qts::cli::kUsage);
}

}  // namespace
