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

#include "amnesia/protocol/message.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace amnesia::protocol {

namespace {

constexpr std::uint8_t kDenseForm = 0;
constexpr std::uint8_t kProductForm = 1;

void need(std::span<const std::uint8_t> bytes, std::size_t pos, std::size_t count,
          const char *what) {
    if (pos + count > bytes.size()) {
        throw std::invalid_argument(std::string("truncated message: ") + what);
    }
}

void write_double_le(std::vector<std::uint8_t> &out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (unsigned k = 0; k < 8; ++k) {
        out.push_back(static_cast<std::uint8_t>(bits >> (8U * k)));
    }
}

void write_complex(std::vector<std::uint8_t> &out, quantum::Complex c) {
    write_double_le(out, c.real());
    write_double_le(out, c.imag());
}

double read_double_le(std::span<const std::uint8_t> bytes, std::size_t pos) {
    std::uint64_t bits = 0;
    for (unsigned k = 0; k < 8; ++k) {
        bits |= static_cast<std::uint64_t>(bytes[pos + k]) << (8U * k);
    }
    return std::bit_cast<double>(bits);
}

std::uint8_t read_bit_byte(std::span<const std::uint8_t> bytes, std::size_t &pos) {
    need(bytes, pos, 1, "bit");
    const auto v = bytes[pos++];
    if (v > 1) {
        throw std::invalid_argument("malformed message: bit field must be 0 or 1");
    }
    return v;
}

hashing::HashDescriptor read_hash(std::span<const std::uint8_t> bytes, std::size_t &pos) {
    std::size_t used = 0;
    auto h = hashing::decode(bytes.subspan(pos), &used);
    pos += used;
    return h;
}

struct BodyWriter {
    std::vector<std::uint8_t> &out;

    void operator()(const Reveal &r) const {
        out.push_back(static_cast<std::uint8_t>(ClassicalTag::kReveal));
        out.push_back(r.b);
        write_bits(out, r.sigma);
    }
    void operator()(const Hashes &h) const {
        out.push_back(static_cast<std::uint8_t>(ClassicalTag::kHashes));
        for (const auto *d : {&h.h0, &h.h1}) {
            const auto enc = hashing::encode(*d);
            out.insert(out.end(), enc.begin(), enc.end());
        }
        write_bits(out, h.theta);
    }
    void operator()(const CoinBit &c) const {
        out.push_back(static_cast<std::uint8_t>(ClassicalTag::kCoinBit));
        out.push_back(c.b);
    }
    void operator()(const MaskedPair &p) const {
        out.push_back(static_cast<std::uint8_t>(ClassicalTag::kMaskedPair));
        write_bits(out, p.e0);
        write_bits(out, p.e1);
    }
};

} // namespace

std::string to_string(MessageKind kind) {
    switch (kind) {
    case MessageKind::kQuantum:
        return "QUANTUM";
    case MessageKind::kStall:
        return "STALL";
    case MessageKind::kClassical:
        return "CLASSICAL";
    }
    return "UNKNOWN";
}

Message Message::quantum(Direction d, quantum::QuantumRegister r) {
    Message m;
    m.kind = MessageKind::kQuantum;
    m.direction = d;
    m.reg.emplace(std::move(r));
    return m;
}

Message Message::stall(Direction d) {
    Message m;
    m.kind = MessageKind::kStall;
    m.direction = d;
    return m;
}

Message Message::classical(Direction d, ClassicalBody b) {
    Message m;
    m.kind = MessageKind::kClassical;
    m.direction = d;
    m.body = std::move(b);
    return m;
}

void write_bits(std::vector<std::uint8_t> &out, const BitString &bits) {
    if (bits.size() > 0xFFFF) {
        throw std::length_error("bit string too long for the wire format");
    }
    out.push_back(static_cast<std::uint8_t>(bits.size() >> 8U));
    out.push_back(static_cast<std::uint8_t>(bits.size() & 0xFFU));
    const auto packed = bits.pack();
    out.insert(out.end(), packed.begin(), packed.end());
}

BitString read_bits(std::span<const std::uint8_t> bytes, std::size_t &pos) {
    need(bytes, pos, 2, "bit string length");
    const std::size_t n = (static_cast<std::size_t>(bytes[pos]) << 8U) | bytes[pos + 1];
    pos += 2;
    const std::size_t nbytes = (n + 7) / 8;
    need(bytes, pos, nbytes, "bit string body");
    const auto body = bytes.subspan(pos, nbytes);
    if (n % 8 != 0 && (body.back() & (0xFFU >> (n % 8))) != 0) {
        throw std::invalid_argument("malformed message: non-zero padding bits");
    }
    pos += nbytes;
    return BitString::unpack(body, n);
}

std::vector<std::uint8_t> encode_payload(const Message &m) {
    std::vector<std::uint8_t> out;
    switch (m.kind) {
    case MessageKind::kStall:
        break;
    case MessageKind::kClassical:
        if (!m.body) {
            throw std::invalid_argument("classical message without a body");
        }
        std::visit(BodyWriter{out}, *m.body);
        break;
    case MessageKind::kQuantum: {
        if (!m.reg) {
            throw std::invalid_argument("quantum message without a register");
        }
        const auto &reg = *m.reg;
        if (reg.is_product()) {
            out.push_back(kProductForm);
            out.push_back(static_cast<std::uint8_t>(reg.qubits()));
            for (const auto &f : reg.factors()) {
                write_complex(out, f[0]);
                write_complex(out, f[1]);
            }
            break;
        }
        const auto &amps = reg.amplitudes();
        out.reserve(2 + 16 * amps.size());
        out.push_back(kDenseForm);
        out.push_back(static_cast<std::uint8_t>(reg.qubits()));
        for (const auto &a : amps) {
            write_complex(out, a);
        }
        break;
    }
    }
    return out;
}

ClassicalBody decode_classical(std::span<const std::uint8_t> payload) {
    std::size_t pos = 0;
    need(payload, pos, 1, "classical tag");
    const auto tag = payload[pos++];
    ClassicalBody body;
    switch (static_cast<ClassicalTag>(tag)) {
    case ClassicalTag::kReveal: {
        Reveal r;
        r.b = read_bit_byte(payload, pos);
        r.sigma = read_bits(payload, pos);
        body = std::move(r);
        break;
    }
    case ClassicalTag::kHashes: {
        Hashes h;
        h.h0 = read_hash(payload, pos);
        h.h1 = read_hash(payload, pos);
        h.theta = read_bits(payload, pos);
        body = std::move(h);
        break;
    }
    case ClassicalTag::kCoinBit:
        body = CoinBit{read_bit_byte(payload, pos)};
        break;
    case ClassicalTag::kMaskedPair: {
        MaskedPair p;
        p.e0 = read_bits(payload, pos);
        p.e1 = read_bits(payload, pos);
        body = std::move(p);
        break;
    }
    default:
        throw std::invalid_argument("malformed message: unknown classical tag " +
                                    std::to_string(tag));
    }
    if (pos != payload.size()) {
        throw std::invalid_argument("malformed message: trailing bytes after classical body");
    }
    return body;
}

quantum::QuantumRegister decode_quantum(std::span<const std::uint8_t> payload) {
    need(payload, 0, 2, "register header");
    const std::uint8_t form = payload[0];
    const std::size_t n = payload[1];
    if (n == 0 || n > quantum::kMaxQubits) {
        throw std::invalid_argument("malformed message: qubit count out of range");
    }
    auto complex_at = [&](std::size_t i) {
        return quantum::Complex{read_double_le(payload, 2 + 16 * i),
                                read_double_le(payload, 10 + 16 * i)};
    };
    if (form == kProductForm) {
        if (payload.size() != 2 + 32 * n) {
            throw std::invalid_argument("malformed message: factor block has wrong size");
        }
        std::vector<quantum::Qubit> factors(n);
        for (std::size_t q = 0; q < n; ++q) {
            factors[q] = {complex_at(2 * q), complex_at(2 * q + 1)};
        }
        return quantum::QuantumRegister::product_state(std::move(factors));
    }
    if (form != kDenseForm) {
        throw std::invalid_argument("malformed message: unknown register form");
    }
    const std::size_t dim = std::size_t{1} << n;
    if (payload.size() != 2 + 16 * dim) {
        throw std::invalid_argument("malformed message: amplitude block has wrong size");
    }
    std::vector<quantum::Complex> amps(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] = complex_at(i);
    }
    return quantum::QuantumRegister(n, std::move(amps));
}

std::vector<std::uint8_t> encode_frame(const Message &m) {
    const auto payload = encode_payload(m);
    const std::size_t len = payload.size() + 2;
    if (len > 0xFFFFFFFFULL) {
        throw std::length_error("message too long for a frame");
    }
    std::vector<std::uint8_t> out;
    out.reserve(4 + len);
    for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(len >> static_cast<unsigned>(shift)));
    }
    out.push_back(static_cast<std::uint8_t>(m.kind));
    out.push_back(static_cast<std::uint8_t>(m.direction));
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Message decode_frame(std::span<const std::uint8_t> frame, std::size_t *consumed) {
    need(frame, 0, 6, "frame header");
    std::size_t len = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        len = (len << 8U) | frame[k];
    }
    if (len < 2) {
        throw std::invalid_argument("malformed frame: length below header size");
    }
    need(frame, 4, len, "frame body");
    const auto kind = frame[4];
    const auto dir = frame[5];
    if (dir > 1) {
        throw std::invalid_argument("malformed frame: unknown direction");
    }
    const auto direction = static_cast<Direction>(dir);
    const auto payload = frame.subspan(6, len - 2);
    if (consumed) {
        *consumed = 4 + len;
    }
    switch (static_cast<MessageKind>(kind)) {
    case MessageKind::kStall:
        if (!payload.empty()) {
            throw std::invalid_argument("malformed frame: stall with payload");
        }
        return Message::stall(direction);
    case MessageKind::kClassical:
        return Message::classical(direction, decode_classical(payload));
    case MessageKind::kQuantum:
        return Message::quantum(direction, decode_quantum(payload));
    }
    throw std::invalid_argument("malformed frame: unknown message kind");
}

} // namespace amnesia::protocol
