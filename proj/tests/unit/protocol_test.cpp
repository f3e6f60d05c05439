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

#include <array>
#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "amnesia/common/rng.hpp"
#include "amnesia/hashing/toeplitz.hpp"
#include "amnesia/protocol/channel.hpp"
#include "amnesia/protocol/commitment.hpp"
#include "amnesia/protocol/flip.hpp"
#include "amnesia/protocol/message.hpp"
#include "amnesia/protocol/rot.hpp"
#include "amnesia/protocol/transcript.hpp"

using namespace amnesia;
using namespace amnesia::protocol;

namespace {

BitString bits(const char *s) { return BitString::from_string(s); }

// Accept iff sigma agrees with a where theta equals b, written out directly.
bool consistent(const quantum::BB84Secret &s, std::uint8_t b, const BitString &sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (s.theta[i] == b && sigma[i] != s.a[i]) {
            return false;
        }
    }
    return true;
}

// Leaves the register alone and records what the stall left behind.
class Bystander final : public CommitterStrategy {
  public:
    std::string id() const override { return "bystander"; }
    void before_stall(quantum::QuantumRegister &, Rng &) override {}
    void after_stall(const HeldRegister &held) override {
        alive_after = held.reg.alive();
        memento = held.forced_outcome;
    }
    Reveal open(std::uint8_t value) const override {
        return {value, memento.value_or(BitString())};
    }
    bool alive_after = true;
    std::optional<BitString> memento;
};

} // namespace

TEST_CASE("receiver init is deterministic and emits register then stall") {
    Rng r1(99), r2(99);
    auto [s1, m1] = amcom_receiver_init(6, r1);
    auto [s2, m2] = amcom_receiver_init(6, r2);
    CHECK(s1.secret.a == s2.secret.a);
    CHECK(s1.secret.theta == s2.secret.theta);
    REQUIRE(m1.size() == 2);
    CHECK(m1[0].kind == MessageKind::kQuantum);
    CHECK(m1[1].kind == MessageKind::kStall);
    CHECK(m1[0].reg->amplitudes() == quantum::prepare_bb84(s1.secret).amplitudes());
    CHECK_THROWS_AS(amcom_receiver_init(0, r1), std::invalid_argument);
    CHECK_THROWS_AS(amcom_receiver_init(25, r1), std::invalid_argument);
}

TEST_CASE("committer outcomes follow the basis rule") {
    Rng rng(4);
    const quantum::BB84Secret secret{bits("10110100"), bits("01010011")};
    std::array<int, 8> ones{};
    const int n = 4000;
    for (int t = 0; t < n; ++t) {
        auto reg = quantum::prepare_bb84(secret);
        const auto cs = amcom_committer_commit(1, reg, rng);
        CHECK_FALSE(reg.alive());
        for (std::size_t i = 0; i < 8; ++i) {
            if (secret.theta[i] == 1) {
                REQUIRE(cs.sigma[i] == secret.a[i]);
            }
            ones[i] += cs.sigma[i];
        }
    }
    for (std::size_t i = 0; i < 8; ++i) {
        if (secret.theta[i] == 0) {
            CHECK(std::abs(ones[i] / double(n) - 0.5) < 3 * 0.5 / std::sqrt(n));
        }
    }
    auto dead = quantum::prepare_bb84(secret);
    dead.destroy();
    CHECK_THROWS_AS(amcom_committer_commit(0, dead, rng), std::logic_error);
    auto reg = quantum::prepare_bb84(secret);
    CHECK_THROWS_AS(amcom_committer_commit(2, reg, rng), std::invalid_argument);
}

TEST_CASE("verification rule") {
    const CommitReceiverState rs{{bits("1011"), bits("0110")}};
    CHECK(amcom_verify(rs, 0, bits("1011")) == Verdict(Accept{0}));
    CHECK(amcom_verify(rs, 0, bits("1101")) == Verdict(Accept{0}));
    CHECK_FALSE(accepted(amcom_verify(rs, 0, bits("0011"))));
    CHECK_FALSE(accepted(amcom_verify(rs, 1, bits("1001"))));
    CHECK_FALSE(accepted(amcom_verify(rs, 0, bits("101"))));
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto sigma = rng.bits(4);
        const std::uint8_t b = rng.bit();
        CHECK(accepted(amcom_verify(rs, b, sigma)) == consistent(rs.secret, b, sigma));
    }
}

TEST_CASE("reveal messages round-trip byte-exactly") {
    for (const auto &r : {Reveal{0, bits("")}, Reveal{1, bits("1")}, Reveal{1, bits("10110")}}) {
        const auto m = amcom_reveal({r.b, r.sigma});
        const auto payload = encode_payload(m);
        CHECK(std::get<Reveal>(decode_classical(payload)) == r);
        const auto frame = encode_frame(m);
        std::size_t used = 0;
        const auto back = decode_frame(frame, &used);
        CHECK(used == frame.size());
        CHECK(encode_frame(back) == frame);
    }
    const auto payload = encode_payload(amcom_reveal({1, bits("101")}));
    CHECK(to_hex(payload) == "010100" "03a0");
    auto trailing = payload;
    trailing.push_back(0);
    CHECK_THROWS_AS(decode_classical(trailing), std::invalid_argument);
    auto bad_pad = payload;
    bad_pad.back() |= 0x01;
    CHECK_THROWS_AS(decode_classical(bad_pad), std::invalid_argument);
}

TEST_CASE("every classical body round-trips") {
    Rng rng(2);
    const Hashes h{hashing::sample_hash(4, 2, rng), hashing::sample_hash(4, 2, rng), bits("0110")};
    const std::vector<ClassicalBody> bodies = {Reveal{1, bits("01")}, h, CoinBit{1},
                                               MaskedPair{bits("101"), bits("011")}};
    for (const auto &b : bodies) {
        const auto m = Message::classical(Direction::kBackward, b);
        CHECK(decode_classical(encode_payload(m)) == b);
    }
    CHECK(encode_payload(Message::stall(Direction::kForward)).empty());
}

TEST_CASE("quantum payloads round-trip in both forms") {
    const auto product = quantum::prepare_bb84({bits("011"), bits("110")});
    const auto p = encode_payload(Message::quantum(Direction::kForward, product));
    CHECK(p.size() == 2 + 32 * 3);
    CHECK(decode_quantum(p).amplitudes() == product.amplitudes());
    const double r = 1.0 / std::sqrt(2.0);
    const quantum::QuantumRegister bell(2, {r, 0.0, 0.0, r});
    const auto d = encode_payload(Message::quantum(Direction::kForward, bell));
    CHECK(d.size() == 2 + 16 * 4);
    CHECK(decode_quantum(d).amplitudes() == bell.amplitudes());
    auto bad = d;
    bad.pop_back();
    CHECK_THROWS_AS(decode_quantum(bad), std::invalid_argument);
    bad = d;
    bad[0] = 7;
    CHECK_THROWS_AS(decode_quantum(bad), std::invalid_argument);
}

TEST_CASE("honest commitments always open") {
    for (std::uint8_t b = 0; b < 2; ++b) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            HonestCommitter c(b);
            CommitSessionOptions o;
            o.seed = seed;
            o.open_value = b;
            const auto s = run_amcom(8, c, o);
            REQUIRE(s.verdict == Verdict(Accept{b}));
            CHECK(s.forced_measurements == 0);
            CHECK(s.commit_phase_backward_bytes == 0);
            CHECK(s.transcript.classical_bytes(Direction::kForward) == 0);
        }
    }
}

TEST_CASE("the stall measures a held register in the standard basis") {
    Bystander c;
    CommitSessionOptions o;
    o.seed = 5;
    o.secret = quantum::BB84Secret{bits("10110"), bits("00000")};
    const auto s = run_amcom(5, c, o);
    CHECK_FALSE(c.alive_after);
    REQUIRE(c.memento.has_value());
    CHECK(*c.memento == bits("10110"));
    CHECK(s.forced_measurements == 1);
    CHECK(s.commit_phase_backward_bytes == 0);
    CHECK(accepted(s.verdict));

    HoldingCommitter hold;
    const auto s2 = run_amcom(5, hold, o);
    CHECK(s2.forced_measurements == 1);
    CHECK(accepted(s2.verdict));
}

TEST_CASE("channel stalls are idempotent and counters match payloads") {
    Transcript t("a->b", "b->a");
    Channel ch(t, Rng(1));
    const auto d = ch.step(Message::quantum(Direction::kForward,
                                            quantum::prepare_bb84({bits("01"), bits("11")})));
    CHECK(d.recipient == Party::kPeer);
    CHECK(ch.live_registers() == 1);
    CHECK(ch.step(Message::stall(Direction::kForward)).forced_measurements == 1);
    CHECK(ch.step(Message::stall(Direction::kForward)).forced_measurements == 0);
    CHECK(ch.live_registers() == 0);
    CHECK_FALSE(ch.held(Party::kPeer, *d.holding).reg.alive());
    CHECK(ch.stalls() == 2);
    ch.step(Message::classical(Direction::kBackward, CoinBit{1}));
    ch.step(Message::classical(Direction::kForward, Reveal{0, bits("1010")}));
    std::size_t sums[2] = {0, 0};
    for (const auto &e : t.entries()) {
        if (e.kind == MessageKind::kClassical) {
            sums[static_cast<int>(e.direction)] += e.payload.size();
        }
        if (e.kind == MessageKind::kStall) {
            CHECK(e.payload.empty());
        }
    }
    CHECK(t.classical_bytes(Direction::kForward) == sums[0]);
    CHECK(t.classical_bytes(Direction::kBackward) == sums[1]);
    const auto j = t.to_json();
    REQUIRE(j.size() == 5);
    CHECK(j[1]["kind"] == "STALL");
    CHECK(j[1]["forced_measurements"] == 1);
    CHECK(j[3]["direction"] == "b->a");
    CHECK(j[3]["payload_hex"] == "0301");
    CHECK(j[0].contains("step"));
}

TEST_CASE("consistent parts use 0-based positions in order") {
    CHECK(consistent_part(bits("1100"), bits("0101"), 0).str() == "10");
    CHECK(consistent_part(bits("1100"), bits("0101"), 1).str() == "10");
    CHECK(consistent_part(bits("1100"), bits("0000"), 1).empty());
}

TEST_CASE("random OT hashing happens only after the stall") {
    Rng rng(3);
    auto [ss, msgs] = amrot_sender_init(4, rng);
    CHECK_THROWS_AS(amrot_sender_hash(ss, 2, rng), std::logic_error);
    amrot_sender_stalled(ss);
    const auto [out, msg] = amrot_sender_hash(ss, 2, rng);
    const auto &h = std::get<Hashes>(*msg.body);
    CHECK(h.theta == ss.secret.theta);
    CHECK(out.m0 == hashing::eval_hash(h.h0, consistent_part(ss.secret.a, h.theta, 0)));
    CHECK(out.m1 == hashing::eval_hash(h.h1, consistent_part(ss.secret.a, h.theta, 1)));
    CHECK(h.h0.max_input_len == 4);
}

TEST_CASE("degenerate bases hash the empty string") {
    HonestRotReceiver receiver(0);
    RotSessionOptions o;
    o.seed = 1;
    o.secret = quantum::BB84Secret{bits("1011"), bits("1111")};
    const auto s = run_amrot(4, 2, receiver, o);
    CHECK(s.outputs.m0.all_zero());
    CHECK(*receiver.output() == s.outputs.m0);
    o.secret = quantum::BB84Secret{bits("1011"), bits("0000")};
    HonestRotReceiver r1(1);
    const auto s1 = run_amrot(4, 3, r1, o);
    CHECK(s1.outputs.m1 == hashing::eval_hash(s1.hashes.h1, BitString()));
    CHECK(*r1.output() == s1.outputs.m1);
}

TEST_CASE("random OT is complete and silent towards the sender") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::uint8_t b = seed % 2;
        HonestRotReceiver receiver(b);
        RotSessionOptions o;
        o.seed = seed;
        const auto s = run_amrot(10, 3, receiver, o);
        REQUIRE(*receiver.output() == (b ? s.outputs.m1 : s.outputs.m0));
        CHECK(s.transcript.classical_bytes(Direction::kBackward) == 0);
        CHECK(s.forced_measurements == 0);
        CHECK(s.sender.phase == RotSenderState::Phase::kHashed);
    }
}

TEST_CASE("random OT outputs are uniform") {
    // 16 cells of (m0, m1) for ell = 2; chi-square critical value at p = 0.01 with 15 dof.
    std::array<int, 16> counts{};
    const int n = 10000;
    for (int t = 0; t < n; ++t) {
        HonestRotReceiver receiver(static_cast<std::uint8_t>(t % 2));
        RotSessionOptions o;
        o.seed = 1000 + static_cast<std::uint64_t>(t);
        const auto s = run_amrot(16, 2, receiver, o);
        ++counts[s.outputs.m0.to_uint() * 4 + s.outputs.m1.to_uint()];
    }
    double chi2 = 0.0;
    for (int c : counts) {
        chi2 += (c - n / 16.0) * (c - n / 16.0) / (n / 16.0);
    }
    CHECK(chi2 < 30.58);
}

TEST_CASE("chosen-input OT returns the chosen branch") {
    const auto m0 = bits("1011"), m1 = bits("0110");
    CHECK(run_ot_wrap(8, m0, m1, 0, 3).output == m0);
    CHECK(run_ot_wrap(8, m0, m1, 1, 3).output == m1);
    const auto r = run_ot_wrap(8, m0, m1, 1, 3);
    CHECK(r.session.transcript.classical_bytes(Direction::kBackward) == 0);
    CHECK_THROWS_AS(run_ot_wrap(8, m0, bits("1"), 0, 3), std::invalid_argument);
    Rng rng(12);
    for (int t = 0; t < 1000; ++t) {
        const auto a = rng.bits(3), b = rng.bits(3);
        const std::uint8_t c = rng.bit();
        REQUIRE(run_ot_wrap(6, a, b, c, 100 + t).output == (c ? b : a));
    }
}

TEST_CASE("honest coin flips agree and are unbiased") {
    int ones = 0;
    const int n = 10000;
    for (int t = 0; t < n; ++t) {
        Rng alice = Rng::for_trial(1, 1, t), bob = Rng::for_trial(1, 2, t);
        const auto f = amflip_run(alice, bob, {});
        REQUIRE(f.c_b.has_value());
        REQUIRE(*f.c_a == *f.c_b);
        ones += *f.c_b;
        CHECK(f.transcript.classical_bytes(Direction::kBackward) > 0);
    }
    CHECK(std::abs(ones / double(n) - 0.5) < 3 * 0.5 / std::sqrt(n));
}

TEST_CASE("a fixed Bob message leaves the coin exactly uniform") {
    for (std::uint8_t b = 0; b < 2; ++b) {
        std::array<int, 2> seen{};
        for (std::uint8_t a = 0; a < 2; ++a) {
            Rng alice(7), bob(8);
            FlipOptions o;
            o.lambda = 2;
            o.alice_coin = a;
            o.bob_bit = b;
            const auto f = amflip_run(alice, bob, o);
            REQUIRE(f.c_b.has_value());
            CHECK(*f.c_b == (a ^ b));
            ++seen[*f.c_b];
        }
        CHECK(seen[0] == 1);
        CHECK(seen[1] == 1);
    }
    Rng alice(1), bob(1);
    FlipOptions bad;
    bad.alice_coin = 2;
    CHECK_THROWS_AS(amflip_run(alice, bob, bad), std::invalid_argument);
}

TEST_CASE("a Breidbart Alice rarely opens both ways") {
    int both = 0;
    const int n = 2000;
    for (int t = 0; t < n; ++t) {
        Rng alice = Rng::for_trial(2, 1, t), bob = Rng::for_trial(2, 2, t);
        auto committer = DoubleOpeningCommitter::breidbart();
        const CheatingAlice cheat{&committer, 1};
        const auto f = amflip_run(alice, bob, {}, &cheat);
        both += f.both_openings_verify;
        if (f.c_b) {
            CHECK(*f.c_b == 1);
        }
    }
    const double p = std::pow(std::cos(3.14159265358979323846 / 8), 16);
    CHECK(both / double(n) <= p + 3 * std::sqrt(p * (1 - p) / n));
}
