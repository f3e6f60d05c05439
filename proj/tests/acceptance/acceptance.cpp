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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "amnesia/adversary/double_open.hpp"
#include "amnesia/adversary/moe.hpp"
#include "amnesia/adversary/ot_attack.hpp"
#include "amnesia/adversary/ot_evaluation.hpp"
#include "amnesia/adversary/records.hpp"
#include "amnesia/cli/commands.hpp"
#include "amnesia/cli/verify.hpp"
#include "amnesia/common/bits.hpp"
#include "amnesia/info/bounds.hpp"
#include "amnesia/protocol/commitment.hpp"
#include "amnesia/protocol/flip.hpp"
#include "amnesia/protocol/rot.hpp"

using namespace amnesia;

namespace {

const double kCos2 = std::pow(std::cos(std::numbers::pi / 8), 2);

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char *f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

cli::ExperimentConfig config(const std::string &sub) {
    cli::ExperimentConfig c;
    c.subcommand = sub;
    return c;
}

Outcome binding_optimum() {
    const double exact = adversary::double_open_success_exact(adversary::breidbart_double_open(), 1);
    const auto search = adversary::double_open_search(0.001);
    const bool ok = std::abs(exact - kCos2) <= 1e-9 && search.best <= kCos2 + 1e-6 &&
                    std::abs(search.best - kCos2) <= 1e-6;
    return {ok, fmt("exact=%.12f grid-best=%.12f", exact, search.best)};
}

Outcome binding_decay() {
    const auto search = adversary::double_open_search(0.01);
    const auto best = search.strategy();
    double worst = 0.0;
    for (std::size_t lambda = 1; lambda <= 6; ++lambda) {
        const double target = std::pow(kCos2, static_cast<double>(lambda));
        const double product = adversary::double_open_success_exact(best, lambda);
        const double joint = adversary::double_open_success_joint(best, lambda);
        const double breidbart =
            adversary::double_open_success_joint(adversary::breidbart_double_open(), lambda);
        worst = std::max({worst, std::abs(std::max(product, breidbart) - target),
                          std::abs(joint - product)});
    }
    return {worst <= 1e-6, fmt("max deviation from cos^(2 lambda)=%.3e", worst)};
}

Outcome moe_bound() {
    const auto r = cli::verify_moe(1);
    return {r.passed, "checks=" + std::to_string(r.rows.size())};
}

Outcome reduction_soundness() {
    double worst = 0.0;
    std::size_t checks = 0;
    for (const auto &attack : adversary::builtin_attacks()) {
        for (std::size_t lambda = 1; lambda <= 4; ++lambda) {
            const auto game = adversary::reduce_ot_attack_to_moe(attack, lambda);
            const double direct = adversary::ot_joint_x_guess_probability(attack, lambda);
            worst = std::max({worst, std::abs(adversary::moe_game_value(game, lambda) - direct),
                              std::abs(adversary::moe_game_value_entangled(game, lambda) - direct)});
            ++checks;
        }
    }
    return {worst <= 1e-9, fmt("max discrepancy=%.3e over %.0f pairs", worst, double(checks))};
}

Outcome completeness() {
    std::uint64_t sessions = 0, failures = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t a = 0; a < (1u << n); ++a) {
            for (std::uint64_t th = 0; th < (1u << n); ++th) {
                for (std::uint8_t b = 0; b < 2; ++b) {
                    const quantum::BB84Secret s{BitString::from_uint(a, n),
                                                BitString::from_uint(th, n)};
                    protocol::HonestCommitter c(b);
                    protocol::CommitSessionOptions co;
                    co.secret = s;
                    co.open_value = b;
                    failures += !protocol::accepted(protocol::run_amcom(n, c, co).verdict);
                    protocol::HonestRotReceiver r(b);
                    protocol::RotSessionOptions ro;
                    ro.secret = s;
                    const auto session = protocol::run_amrot(n, 1, r, ro);
                    failures += *r.output() != (b ? session.outputs.m1 : session.outputs.m0);
                    sessions += 2;
                }
            }
        }
    }
    auto commit = config("commit");
    commit.lambda = 16;
    commit.trials = 10000;
    const auto cr = cli::run_command(commit);
    auto rot = config("rot");
    rot.lambda = 16;
    rot.trials = 10000;
    const auto rr = cli::run_command(rot);
    const double accept = cr.report["summary"]["acceptance_rate"];
    const double match = rr.report["summary"]["match_rate"];
    const bool ok = failures == 0 && accept == 1.0 && match == 1.0;
    return {ok, fmt("exhaustive sessions=%.0f, lambda=16 accept=%.1f", double(sessions), accept) +
                    fmt(" match=%.1f", match)};
}

Outcome structural_security() {
    std::uint64_t transcripts = 0, bytes = 0;
    for (const auto &adv : cli::commit_adversaries()) {
        auto c = config("commit");
        c.adversary = adv;
        c.trials = 4000;
        const auto r = cli::run_command(c);
        bytes += r.report["summary"]["commit_phase_backward_bytes"].get<std::uint64_t>();
        transcripts += c.trials;
    }
    std::vector<std::string> receivers{"honest"};
    for (const auto &id : adversary::builtin_attack_ids()) {
        receivers.push_back(id);
    }
    for (const auto &adv : receivers) {
        auto c = config("rot");
        c.adversary = adv;
        c.lambda = 12;
        c.trials = 1200;
        const auto r = cli::run_command(c);
        bytes += r.report["summary"]["receiver_to_sender_bytes"].get<std::uint64_t>();
        transcripts += c.trials;
    }
    return {bytes == 0 && transcripts >= 10000,
            fmt("transcripts=%.0f, forbidden bytes=%.0f", double(transcripts), double(bytes))};
}

Outcome coin_flip() {
    bool uniform = true;
    for (std::size_t lambda : {1, 4, 8, 16}) {
        for (std::uint8_t b = 0; b < 2; ++b) {
            int ones = 0;
            for (std::uint8_t a = 0; a < 2; ++a) {
                Rng alice(lambda * 4 + a), bob(lambda * 4 + 2 + b);
                protocol::FlipOptions o;
                o.lambda = lambda;
                o.alice_coin = a;
                o.bob_bit = b;
                const auto f = protocol::amflip_run(alice, bob, o);
                uniform = uniform && f.c_b.has_value() && *f.c_b == (a ^ b);
                ones += f.c_b.value_or(0);
            }
            uniform = uniform && ones == 1;
        }
    }
    auto c = config("flip");
    c.adversary = "breidbart";
    c.lambda = 8;
    c.trials = 100000;
    const auto r = cli::run_command(c);
    const double steer = r.report["summary"]["both_openings_rate"];
    const double bound = std::pow(kCos2, 8);
    const double band = 3 * std::sqrt(bound * (1 - bound) / 1e5);
    return {uniform && steer <= bound + band,
            fmt("fixed-b exact=%.0f, steering=%.5f", uniform, steer) +
                fmt(" vs cos^16(pi/8)+3sigma=%.5f", bound + band)};
}

Outcome splitting() {
    const auto r = cli::verify_split(1);
    return {r.passed, r.summary.dump()};
}

Outcome lhl() {
    const auto r = cli::verify_lhl(1);
    const bool ok = r.passed && r.summary["held"] == 100 && r.summary["instances"] == 100;
    return {ok, "held=" + r.summary["held"].dump() + "/" + r.summary["instances"].dump()};
}

Outcome receiver_advantage() {
    double worst = -std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const auto &id : adversary::builtin_attack_ids()) {
        for (std::size_t lambda : {40, 60}) {
            const auto rec = adversary::evaluate_attack(id, lambda, 1, false, 20000, lambda);
            const double excess = rec.ci_high - 0.5;
            const double bound = info::receiver_advantage_bound(lambda, 1);
            ok = ok && excess < bound;
            worst = std::max(worst, excess - bound);
        }
    }
    return {ok, fmt("max (upper CI - 1/2) - bound=%.4f", worst)};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "amnesia_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> reports;
    for (int run = 0; run < 2; ++run) {
        const auto out = dir / ("verify_" + std::to_string(run) + ".json");
        std::filesystem::remove(out);
        const std::string cmd = std::string("\"") + AMNESIA_CLI_PATH +
                                "\" verify all --seed 1 --out \"" + out.string() + "\"";
        const int status = std::system(cmd.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            return {false, "verify all exited with status " + std::to_string(status)};
        }
        reports.push_back(slurp(out));
    }
    const bool same = !reports[0].empty() && reports[0] == reports[1];
    return {same, fmt("report bytes=%.0f, identical=%.0f", double(reports[0].size()), same)};
}

} // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria = {
        {1, "single-qubit binding optimum", 30, binding_optimum},
        {2, "exponential binding decay", 60, binding_decay},
        {3, "monogamy bound", 120, moe_bound},
        {4, "reduction soundness", 60, reduction_soundness},
        {5, "completeness", 60, completeness},
        {6, "structural perfect security", 60, structural_security},
        {7, "coin-flip one-sided perfection", 120, coin_flip},
        {8, "min-entropy splitting", 180, splitting},
        {9, "leftover hash lemma", 180, lhl},
        {10, "receiver advantage consistency", 300, receiver_advantage},
        {11, "determinism", 600, determinism},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.insert(std::atoi(argv[i]));
    }
    int failures = 0;
    for (const auto &c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = o.passed && in_time;
        failures += !pass;
        std::printf("criterion %2d %s: %s (%.1fs of %.0fs) %s\n", c.id, c.name,
                    pass ? "PASS" : "FAIL", secs, c.limit_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
