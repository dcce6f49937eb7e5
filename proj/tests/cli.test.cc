// Copyright 2026 The qcut Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qcut/ir.h"

using namespace qcut;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result qcut_run(std::vector<std::string> args) {
    args.insert(args.begin(), "qcut");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qcut_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string write(const std::string &name, const std::string &text) const {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }
    std::string demo(const std::string &name) const {
        std::string p = path(name + ".json");
        EXPECT_EQ(qcut_run({"demo", "--name", name, "--out", p}).code, 0);
        return p;
    }
    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, demo_circuits_parse) {
    for (const char *name : {"cccx", "cccx-split", "mcx6"}) {
        auto text = cli::demo_circuit(name);
        ASSERT_TRUE(text.has_value()) << name;
        ASSERT_NO_THROW(parse_circuit(*text)) << name;
        ASSERT_EQ(qcut_run({"demo", "--name", name}).out, *text);
    }
    ASSERT_EQ(qcut_run({"demo", "--name", "nope"}).code, cli::kValidation);
}

TEST_F(CliTest, decompose_report) {
    std::string in = demo("cccx-split");
    Result r = qcut_run({"decompose", "--in", in, "--out", path("d.json"), "--strategy", "dec2a"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = nlohmann::json::parse(r.out);
    ASSERT_EQ(rep["strategy"], "dec2a");
    ASSERT_EQ(rep["crossing_gates"], 2);
    ASSERT_EQ(rep["crossing_wires"], 0);
    ASSERT_EQ(rep["extra_qubits"], 2);
    ASSERT_EQ(rep["cx_count_lowered"], 20);
    ASSERT_EQ(rep["ancillas"][0]["name"], "a0");
    ASSERT_EQ(rep["ancillas"][0]["side"], "A");
    ASSERT_EQ(rep["ancillas"][1]["side"], "B");
    Circuit out = parse_circuit(slurp(path("d.json")));
    ASSERT_EQ(out.num_qubits(), 6u);

    r = qcut_run({"decompose", "--in", in, "--out", path("d1.json"), "--strategy", "dec1"});
    ASSERT_EQ(nlohmann::json::parse(r.out)["cx_count_lowered"], 18);
    ASSERT_EQ(nlohmann::json::parse(r.out)["crossing_wires"], 2);
}

TEST_F(CliTest, decompose_errors) {
    std::string unpartitioned = demo("cccx");
    Result r = qcut_run({"decompose", "--in", unpartitioned, "--out", path("x.json")});
    ASSERT_EQ(r.code, cli::kValidation);
    ASSERT_NE(r.err.find("partition required"), std::string::npos);

    std::string local = write("local.json", R"({"qubits":["a","b","t"],"gates":[{"gate":"ccx","qubits":[0,1,2]}],
        "partition":{"a":"B","b":"B","t":"B"}})");
    ASSERT_EQ(qcut_run({"decompose", "--in", local, "--out", path("x.json")}).code, cli::kUnsupportedSplit);

    std::string in = demo("cccx-split");
    ASSERT_EQ(qcut_run({"decompose", "--in", in, "--out", path("x.json"), "--strategy", "zzz"}).code,
              cli::kValidation);
    ASSERT_EQ(qcut_run({"decompose", "--in", in, "--out", path("x.json"), "--gate", "0"}).code, cli::kValidation);
    ASSERT_EQ(qcut_run({"decompose", "--in", path("missing.json"), "--out", path("x.json")}).code, cli::kFailed);
    ASSERT_EQ(qcut_run({"decompose", "--in", write("bad.json", "{"), "--out", path("x.json")}).code,
              cli::kValidation);
}

TEST_F(CliTest, cut_writes_pairs_and_manifest) {
    std::string in = demo("cccx-split");
    ASSERT_EQ(qcut_run({"decompose", "--in", in, "--out", path("d.json"), "--strategy", "dec2a"}).code, 0);
    Result r = qcut_run({"cut", "--in", path("d.json"), "--out", path("pairs")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto manifest = nlohmann::json::parse(slurp(dir_ / "pairs" / "manifest.json"));
    ASSERT_EQ(manifest["pairs"].size(), 36u);
    ASSERT_EQ(manifest["gamma"], 9.0);
    ASSERT_EQ(manifest["cuts"].size(), 2u);
    ASSERT_EQ(manifest["cuts"][0]["basis"], "cx");
    auto pair = nlohmann::json::parse(slurp(dir_ / "pairs" / "pair_00035.json"));
    ASSERT_EQ(pair["assignment"], nlohmann::json({5, 5}));
    ASSERT_EQ(pair["coefficient"], 0.25);
    ASSERT_NO_THROW(parse_circuit(pair["a"].dump()));
}

TEST_F(CliTest, estimate_exact_and_mc) {
    std::string in = demo("cccx-split");
    for (const char *s : {"dec1", "dec2a", "dec2ad"}) {
        ASSERT_EQ(qcut_run({"decompose", "--in", in, "--out", path("d.json"), "--strategy", s}).code, 0);
        Result exact = qcut_run({"estimate", "--in", path("d.json"), "--observable", "Z3"});
        ASSERT_EQ(exact.code, 0) << exact.err;
        auto doc = nlohmann::json::parse(exact.out);
        ASSERT_NEAR(doc["value"].get<double>(), -1.0, 1e-12) << s;
        ASSERT_EQ(doc["std_error"], 0.0);
    }
    Result mc = qcut_run({"estimate", "--in", path("d.json"), "--observable", "Z3", "--samples", "20000", "--seed",
                          "4"});
    auto doc = nlohmann::json::parse(mc.out);
    ASSERT_EQ(doc["samples"], 20000);
    ASSERT_EQ(doc["gamma"], 3.0);
    ASSERT_LE(std::abs(doc["value"].get<double>() + 1), 5 * doc["std_error"].get<double>());

    Result cc = qcut_run({"estimate", "--in", path("d.json"), "--observable", "Z3", "--classical-comm"});
    doc = nlohmann::json::parse(cc.out);
    ASSERT_EQ(doc["gamma"], 2.0);
    ASSERT_TRUE(doc.contains("warning"));

    Result uncut = qcut_run({"estimate", "--in", in, "--observable", "Z3", "--no-cut"});
    ASSERT_EQ(uncut.out, "{\"value\":-1.0,\"std_error\":0.0,\"gamma\":1.0,\"samples\":0}\n");
}

TEST_F(CliTest, estimate_errors) {
    std::string in = demo("cccx-split");
    ASSERT_EQ(qcut_run({"estimate", "--in", in, "--observable", "Z3"}).code, cli::kValidation);
    ASSERT_EQ(qcut_run({"decompose", "--in", in, "--out", path("d.json")}).code, 0);
    ASSERT_EQ(qcut_run({"estimate", "--in", path("d.json"), "--observable", "Q3"}).code, cli::kObservable);
    ASSERT_EQ(qcut_run({"estimate", "--in", path("d.json"), "--observable", "Z40"}).code, cli::kObservable);
    ASSERT_EQ(qcut_run({"estimate", "--in", path("d.json")}).code, cli::kValidation);
    ASSERT_EQ(qcut_run({"estimate", "--in", path("d.json"), "--observable", "Z3", "--jobs", "0"}).code,
              cli::kValidation);
}

TEST_F(CliTest, run_command) {
    std::string in = write("bell.json", R"({"qubits":["a","b"],"gates":[{"gate":"h","qubits":[0]},
        {"gate":"cx","qubits":[0,1]},{"gate":"measure_z","qubits":[1],"cbit":0}]})");
    Result r = qcut_run({"run", "--in", in, "--observable", "Z0*Z1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["branches"].size(), 2u);
    ASSERT_NEAR(doc["expectation"].get<double>(), 1.0, 1e-12);

    Result shots = qcut_run({"run", "--in", in, "--shots", "1000", "--seed", "3"});
    doc = nlohmann::json::parse(shots.out);
    uint64_t total = 0;
    for (auto &[key, count] : doc["counts"].items()) {
        ASSERT_TRUE(key == "0 00" || key == "1 11") << key;
        total += count.get<uint64_t>();
    }
    ASSERT_EQ(total, 1000u);
}

TEST_F(CliTest, overhead_golden) {
    Result r = qcut_run({"overhead", "--n", "2"});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out,
              "strategy,extra_qubits,n,overhead_no_cc,overhead_cc,analytic_flag\n"
              "prior_work,0,2,1296,1296,all\n"
              "dec2a,2,2,6561,256,cc\n"
              "dec2ad,2,2,81,16,cc\n"
              "dec1,1,2,65536,65536,cc\n");
    ASSERT_EQ(qcut_run({"overhead", "--n", "1", "--strategies", "dec1"}).out,
              "strategy,extra_qubits,n,overhead_no_cc,overhead_cc,analytic_flag\ndec1,1,1,256,256,cc\n");
    ASSERT_EQ(qcut_run({"overhead", "--n", "0"}).code, cli::kValidation);
    ASSERT_EQ(qcut_run({"overhead", "--strategies", "bogus"}).code, cli::kValidation);
}

TEST_F(CliTest, verify_and_qpd) {
    Result r = qcut_run({"verify", "--m1", "2", "--m2", "1", "--strategy", "dec2ad"});
    ASSERT_EQ(r.code, 0);
    ASSERT_EQ(r.out, "PASS strategy=dec2ad m1=2 m2=1 inputs=16 max_deviation=0.000e+00 ancilla_states_ok=true\n");
    ASSERT_EQ(qcut_run({"verify", "--m1", "0"}).code, cli::kValidation);

    Result q = qcut_run({"qpd"});
    ASSERT_EQ(q.out, "cx: 6 terms, gamma 3\ncz: 6 terms, gamma 3\nwire: 8 terms, gamma 4\n");
    ASSERT_EQ(nlohmann::json::parse(qcut_run({"qpd", "--basis", "wire", "--dump"}).out)["gamma"], 4.0);
    ASSERT_EQ(qcut_run({"qpd", "--basis", "swap"}).code, cli::kValidation);
}

TEST_F(CliTest, usage_errors) {
    ASSERT_EQ(qcut_run({}).code, cli::kValidation);
    ASSERT_EQ(qcut_run({"frobnicate"}).code, cli::kValidation);
    ASSERT_EQ(qcut_run({"--help"}).code, 0);
}
