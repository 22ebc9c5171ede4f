// Copyright 2026 The shorsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "commands.hpp"

using namespace shorsim;
using namespace shorsim::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("shorsim_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

ExperimentConfig config(u64 n, std::optional<u64> x, const TempDir &dir, unsigned ell = 1) {
    ExperimentConfig c;
    c.n = n;
    c.x = x;
    c.ell = ell;
    c.output_dir = dir.path.string();
    return c;
}

std::vector<std::string> lines(const fs::path &p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

json read_json(const fs::path &p) {
    std::ifstream in(p);
    return json::parse(in);
}

} // namespace

TEST_CASE("distribution writes 16 rows of 1/16 for n=15, x=7") {
    TempDir dir;
    std::ostringstream out, err;
    CHECK(cmd_distribution(config(15, 7, dir), out, err) == kExitOk);
    const auto rows = lines(dir.path / "distribution.csv");
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "c,y1,probability");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double p = std::stod(rows[i].substr(rows[i].rfind(',') + 1));
        CHECK(p == doctest::Approx(0.0625).epsilon(1e-10));
    }
    const json doc = read_json(dir.path / "distribution.json");
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["config"]["n"] == 15);
    CHECK(doc["r"] == 4);
    CHECK(json::parse(out.str()) == doc);
}

TEST_CASE("distribution with two function registers keeps them equal") {
    TempDir dir;
    std::ostringstream out, err;
    auto c = config(15, 7, dir, 2);
    c.backend = Backend::dense;
    c.qft = QftMethod::gates;
    CHECK(cmd_distribution(c, out, err) == kExitOk);
    const auto rows = lines(dir.path / "distribution.csv");
    CHECK(rows[0] == "c,y1,y2,probability");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream ss(rows[i]);
        std::string c_s, y1, y2;
        std::getline(ss, c_s, ',');
        std::getline(ss, y1, ',');
        std::getline(ss, y2, ',');
        CHECK(y1 == y2);
    }
}

TEST_CASE("even n is rejected") {
    TempDir dir;
    std::ostringstream out, err;
    CHECK(cmd_distribution(config(14, std::nullopt, dir), out, err) == kExitInvalidInput);
    CHECK(err.str().find("unsuitable input") != std::string::npos);
}

TEST_CASE("format selection") {
    TempDir dir;
    std::ostringstream out, err;
    auto c = config(15, 7, dir);
    c.format = OutputFormat::json;
    CHECK(cmd_distribution(c, out, err) == kExitOk);
    CHECK(fs::exists(dir.path / "distribution.json"));
    CHECK_FALSE(fs::exists(dir.path / "distribution.csv"));
}

TEST_CASE("state dump round trips") {
    TempDir dir;
    std::ostringstream out, err;
    auto c = config(15, 7, dir);
    c.dump_state = (dir.path / "state.txt").string();
    CHECK(cmd_distribution(c, out, err) == kExitOk);
    std::ifstream in(*c.dump_state);
    const StateVector s = read_state(in);
    CHECK(std::abs(norm_squared(s) - 1.0) <= 1e-12);
}

TEST_CASE("audit") {
    for (unsigned ell : {2U, 3U}) {
        TempDir dir;
        std::ostringstream out, err;
        CHECK(cmd_audit(config(15, 7, dir, ell), out, err) == kExitOk);
        const json doc = read_json(dir.path / "audit.json");
        CHECK(doc["audit"]["eq2_discrepancy"].get<double>() <= 1e-12);
        CHECK(doc["audit"]["unequal_mass"].get<double>() <= 1e-12);
    }
    TempDir dir;
    std::ostringstream out, err;
    CHECK(cmd_audit(config(15, 7, dir, 1), out, err) == kExitInvalidInput);
    CHECK(err.str().find("usage") != std::string::npos);
}

TEST_CASE("bound") {
    const std::tuple<u64, u64, int> cases[] = {{15, 7, 4}, {21, 2, 6}, {15, 4, 2}};
    for (const auto &[n, x, good] : cases) {
        TempDir dir;
        std::ostringstream out, err;
        CHECK(cmd_bound(config(n, x, dir), out, err) == kExitOk);
        const json doc = read_json(dir.path / "bound.json");
        CHECK(doc["bound"]["good_count"] == good);
        CHECK(doc["bound"]["all_clear"] == true);
        CHECK(fs::exists(dir.path / "bound.csv"));
    }
}

TEST_CASE("factor") {
    const std::pair<u64, std::string> cases[] = {{15, "15 = 3 × 5\n"}, {21, "21 = 3 × 7\n"},
                                                 {35, "35 = 5 × 7\n"}};
    for (const auto &[n, text] : cases) {
        TempDir dir;
        std::ostringstream out, err;
        CHECK(cmd_factor(config(n, std::nullopt, dir), out, err) == kExitOk);
        CHECK(out.str() == text);
        const json doc = read_json(dir.path / "factor.json");
        CHECK(doc["trace"]["n"] == n);
    }
    TempDir dir;
    std::ostringstream out, err;
    CHECK(cmd_factor(config(9, std::nullopt, dir), out, err) == kExitInvalidInput);
    CHECK(err.str().find("prime power") != std::string::npos);
}

TEST_CASE("entanglement") {
    {
        TempDir dir;
        std::ostringstream out, err;
        CHECK(cmd_entanglement(config(15, 7, dir), out, err) == kExitOk);
        const json doc = read_json(dir.path / "entanglement.json");
        const auto &loc = doc["entanglement"]["locality"];
        CHECK(loc["entropy_before"].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(loc["max_deviation"].get<double>() <= 1e-10);
    }
    {
        TempDir dir;
        std::ostringstream out, err;
        CHECK(cmd_entanglement(config(15, 7, dir, 2), out, err) == kExitOk);
        const json doc = read_json(dir.path / "entanglement.json");
        CHECK(doc["entanglement"]["correlations"][0]["p_equal"].get<double>() ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(doc["entanglement"]["locality"]["max_deviation"].get<double>() <= 1e-10);
    }
}

TEST_CASE("commands are deterministic given the seed") {
    TempDir a, b;
    std::ostringstream oa, ob, err;
    auto ca = config(33, std::nullopt, a);
    auto cb = config(33, std::nullopt, b);
    ca.seed = cb.seed = 17;
    ca.trace = cb.trace = true;
    CHECK(cmd_factor(ca, oa, err) == kExitOk);
    CHECK(cmd_factor(cb, ob, err) == kExitOk);
    json ja = read_json(a.path / "factor.json");
    json jb = read_json(b.path / "factor.json");
    ja["config"].erase("output_dir");
    jb["config"].erase("output_dir");
    CHECK(ja == jb);
    CHECK(resolve_base(ca) == resolve_base(cb));
}

TEST_CASE("qubit cap is enforced before allocation") {
    TempDir dir;
    std::ostringstream out, err;
    auto c = config(15, 7, dir, 3);
    c.qubit_cap = 16;
    CHECK(cmd_distribution(c, out, err) == kExitInvalidInput);
    CHECK_FALSE(fs::exists(dir.path / "distribution.csv"));
}
