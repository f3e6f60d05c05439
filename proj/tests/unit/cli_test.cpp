// Copyright 2026 The Amnesia Authors
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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

#include "amnesia/cli/commands.hpp"
#include "amnesia/cli/config.hpp"
#include "amnesia/cli/report.hpp"
#include "amnesia/cli/verify.hpp"
#include "amnesia/info/bounds.hpp"

using namespace amnesia;
using namespace amnesia::cli;

namespace {

ExperimentConfig make(const std::string &sub) {
    ExperimentConfig c;
    c.subcommand = sub;
    return c;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string &args) {
    const std::string cmd = std::string("\"") + AMNESIA_CLI_PATH + "\" " + args;
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "amnesia_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("commit: honest sessions all accept") {
    auto c = make("commit");
    c.lambda = 8;
    c.trials = 1000;
    c.seed = 7;
    const auto r = run_command(c);
    CHECK(r.passed);
    CHECK(r.report["summary"]["acceptance_rate"] == 1.0);
    CHECK(r.report["summary"]["commit_phase_backward_bytes"] == 0);
    CHECK(r.report["rows"].size() == 1000);
}

TEST_CASE("commit: adversaries never talk during the commit phase") {
    for (const auto &adv : commit_adversaries()) {
        auto c = make("commit");
        c.adversary = adv;
        c.trials = 200;
        const auto r = run_command(c);
        CHECK(r.report["summary"]["commit_phase_backward_bytes"] == 0);
        CHECK(r.passed);
    }
    auto c = make("commit");
    c.adversary = "nope";
    CHECK_THROWS_AS(run_command(c), UsageError);
}

TEST_CASE("rot: honest receiver always gets its branch") {
    auto c = make("rot");
    c.lambda = 16;
    c.ell = 2;
    c.trials = 1000;
    const auto r = run_command(c);
    CHECK(r.passed);
    CHECK(r.report["summary"]["match_rate"] == 1.0);
}

TEST_CASE("rot: attacking receivers stay within the bound") {
    auto c = make("rot");
    c.lambda = 12;
    c.ell = 1;
    c.trials = 500;
    c.adversary = "breidbart";
    const auto r = run_command(c);
    const auto &s = r.report["summary"];
    CHECK(s["guess_bound"].get<double>() ==
          doctest::Approx(0.5 + info::receiver_advantage_bound(12, 1)));
    CHECK(s["guess_ci_low"].get<double>() <= s["guess_rate"].get<double>());
}

TEST_CASE("flip: honest coin is unbiased") {
    auto c = make("flip");
    c.trials = 10000;
    const auto r = run_command(c);
    CHECK(r.passed);
    CHECK(std::abs(r.report["summary"]["bias"].get<double>()) < 0.015);
}

TEST_CASE("ot-wrap recovers the chosen input") {
    auto c = make("ot-wrap");
    c.m0 = "1011";
    c.m1 = "0100";
    c.trials = 1000;
    for (unsigned b = 0; b < 2; ++b) {
        c.choice = b;
        const auto r = run_command(c);
        CHECK(r.passed);
        CHECK(r.report["summary"]["output"] == (b ? "0100" : "1011"));
        CHECK(r.report["summary"]["branch_correct_rate"] == 1.0);
    }
    c.m1 = "01";
    CHECK_THROWS_AS(run_command(c), UsageError);
}

TEST_CASE("attack reports carry value, bound and verdict") {
    auto c = make("attack");
    c.adversary = "double-open-breidbart";
    c.lambda = 1;
    c.exact = true;
    const auto r = run_command(c);
    CHECK(r.passed);
    const double cos2 = std::pow(std::cos(std::numbers::pi / 8), 2);
    CHECK(r.report["summary"]["value"].get<double>() == doctest::Approx(cos2).epsilon(1e-12));
    c.adversary = "nope";
    CHECK_THROWS_AS(run_command(c), UsageError);
}

TEST_CASE("attack reports match golden files") {
    struct Golden {
        const char *file;
        const char *id;
        std::size_t lambda;
        double value;
    };
    const double cos2 = std::pow(std::cos(std::numbers::pi / 8), 2);
    const Golden cases[] = {
        {"attack_double_open_breidbart_l1.json", "double-open-breidbart", 1, cos2},
        {"attack_double_open_standard_l1.json", "double-open-standard", 1, 0.75},
        {"attack_double_open_breidbart_l3.json", "double-open-breidbart", 3, std::pow(cos2, 3)},
    };
    for (const auto &g : cases) {
        auto c = make("attack");
        c.adversary = g.id;
        c.lambda = g.lambda;
        c.exact = true;
        const auto r = run_command(c);
        CHECK(r.report["summary"]["value"].get<double>() ==
              doctest::Approx(g.value).epsilon(1e-9));
        const auto expected = slurp(std::filesystem::path(AMNESIA_GOLDEN_DIR) / g.file);
        CHECK(render_report(r.report, "json") == expected);
    }
}

TEST_CASE("verify: single suites and unknown names") {
    auto c = make("verify");
    c.suite = "lhl";
    const auto r = run_command(c);
    CHECK(r.passed);
    CHECK(r.report["summary"]["lhl"]["held"] == 100);
    c.suite = "nope";
    CHECK_THROWS_AS(run_command(c), UsageError);
}

TEST_CASE("reports are deterministic and self-describing") {
    auto c = make("commit");
    c.trials = 50;
    c.seed = 11;
    const auto a = render_report(run_command(c).report, "json");
    c.out = "/somewhere/else.json";
    const auto b = render_report(run_command(c).report, "json");
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["version"] == version_string());
    CHECK(j["seed"] == 11);
    CHECK(j["config"]["trials"] == 50);
}

TEST_CASE("CSV output uses the documented column order") {
    auto c = make("commit");
    c.trials = 3;
    const auto csv = render_report(run_command(c).report, "csv");
    const auto header = csv.substr(0, csv.find('\n'));
    CHECK(header == "trial,b,accepted,both_openings_verify,forced_measurements,"
                    "commit_phase_backward_bytes,transcript_sha256");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK_THROWS_AS(render_report(run_command(c).report, "xml"), UsageError);
}

TEST_CASE("configuration validation") {
    auto c = make("commit");
    c.lambda = 25;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c.lambda = 8;
    c.trials = 0;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c.trials = 1;
    c.format = "xml";
    CHECK_THROWS_AS(c.validate(), UsageError);
    auto a = make("attack");
    a.lambda = 40;
    CHECK_NOTHROW(a.validate());
}

TEST_CASE("sha256 digests") {
    const std::string abc = "abc";
    CHECK(sha256_hex({reinterpret_cast<const std::uint8_t *>(abc.data()), abc.size()}) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("executable: exit codes and precedence") {
    const auto out = scratch("commit.json");
    CHECK(run_cli("commit --trials 5 --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["config"]["trials"] == 5);

    CHECK(setenv("AMNESIA_TRIALS", "3", 1) == 0);
    CHECK(run_cli("commit --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["config"]["trials"] == 3);
    CHECK(run_cli("commit --trials 4 --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["config"]["trials"] == 4);
    CHECK(unsetenv("AMNESIA_TRIALS") == 0);

    CHECK(run_cli("commit --lambda 30 > /dev/null 2>&1") == 2);
    CHECK(run_cli("commit --bogus > /dev/null 2>&1") == 2);
    CHECK(run_cli("attack --adversary nope > /dev/null 2>&1") == 2);
    CHECK(run_cli("verify nope > /dev/null 2>&1") == 2);
    CHECK(run_cli("> /dev/null 2>&1") == 2);
    CHECK(run_cli("--help > /dev/null") == 0);
    CHECK(run_cli("--version > /dev/null") == 0);
    CHECK(run_cli("commit --trials 5 --format csv --out " + out.string()) == 0);
    CHECK(slurp(out).rfind("trial,b,", 0) == 0);
}
