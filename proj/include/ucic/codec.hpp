#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucic/bitset.hpp"
#include "ucic/code.hpp"
#include "ucic/errors.hpp"
#include "ucic/instance.hpp"

namespace ucic {

/// Uniform-length payload per symbol.
struct PayloadStore {
  int payload_size = 1;
  std::vector<std::vector<std::uint8_t>> payloads;  // indexed by symbol id

  static PayloadStore random(int symbol_count, int payload_size,
                             std::uint64_t seed) {
    PayloadStore store;
    store.payload_size = payload_size;
    store.payloads.resize(symbol_count);
    std::uint64_t state = seed;
    auto next = [&state]() {  // SplitMix64 step
      state += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    for (auto& p : store.payloads) {
      p.resize(payload_size);
      for (auto& byte : p) byte = static_cast<std::uint8_t>(next() & 0xff);
    }
    return store;
  }
};

/// What one client can reconstruct at a point in the simulation.
struct ClientState {
  Bitset known;  // symbol ids the client can reproduce (seeded with its has set)
  std::vector<std::vector<std::uint8_t>> recovered;  // empty vector = unknown

  bool knows(int symbol) const { return known.test(symbol); }
};

inline std::vector<std::vector<std::uint8_t>> encode(const IndexCode& code,
                                                     const PayloadStore& store) {
  std::vector<std::vector<std::uint8_t>> frames;
  frames.reserve(code.transmissions.size());
  for (const auto& t : code.transmissions) {
    std::vector<std::uint8_t> frame(store.payload_size, 0);
    for (int s : t.support) {
      if (s < 0 || s >= static_cast<int>(store.payloads.size()))
        raise(Errc::unknown_symbol, symbol_name(s) + " has no payload");
      for (int b = 0; b < store.payload_size; ++b)
        frame[b] ^= store.payloads[s][b];
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

enum class DecodeMode {
  sequential,  // single pass in transmission order (the contract)
  fixpoint,    // re-scan frames until nothing new decodes (diagnosis only)
};

/// Replays the broadcast for every client. A client holding all but one
/// symbol of a frame's support recovers the missing one; anything else is
/// skipped. Clients start out knowing the payloads of their has sets.
inline std::vector<ClientState> simulate_decode(
    const Instance& inst, const IndexCode& code,
    const std::vector<std::vector<std::uint8_t>>& frames,
    const PayloadStore& store,
    DecodeMode mode = DecodeMode::sequential) {
  if (frames.size() != code.transmissions.size())
    raise(Errc::invalid_instance, "frames do not align with code transmissions");

  std::vector<ClientState> clients(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    clients[i].known = Bitset(inst.k);
    clients[i].recovered.resize(inst.k);
    for (int s : inst.has[i]) {
      clients[i].known.set(s);
      clients[i].recovered[s] = store.payloads[s];
    }
  }

  auto process_frame = [&](ClientState& c, std::size_t t) {
    const auto& support = code.transmissions[t].support;
    int missing = -1;
    for (int s : support) {
      if (c.knows(s)) continue;
      if (missing != -1) return false;  // two unknowns: undecodable
      missing = s;
    }
    if (missing == -1) return false;  // nothing new
    std::vector<std::uint8_t> value = frames[t];
    for (int s : support)
      if (s != missing)
        for (std::size_t b = 0; b < value.size(); ++b)
          value[b] ^= c.recovered[s][b];
    c.known.set(missing);
    c.recovered[missing] = std::move(value);
    return true;
  };

  for (auto& c : clients) {
    if (mode == DecodeMode::sequential) {
      for (std::size_t t = 0; t < frames.size(); ++t) process_frame(c, t);
    } else {
      for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t t = 0; t < frames.size(); ++t)
          progress = process_frame(c, t) || progress;
      }
    }
  }
  return clients;
}

struct VerifyReport {
  bool valid = false;

  struct Unsatisfied {
    int client;
    std::vector<int> missing;  // wanted symbols never recovered
  };
  std::vector<Unsatisfied> unsatisfied;

  std::string to_string() const {
    if (valid) return "valid";
    std::string s = "invalid:";
    for (const auto& u : unsatisfied) {
      s += " " + client_name(u.client) + " misses";
      for (int m : u.missing) s += " " + symbol_name(m);
      s += ";";
    }
    return s;
  }
};

struct VerifyOptions {
  int draws = 3;  // independent random payload draws
  int payload_size = 0;  // 0: use the instance's payload_size_bytes
  std::uint64_t seed = 0x5eedc0dec0ffeeULL;
  DecodeMode mode = DecodeMode::sequential;
};

/// Certifies an index code by payload-level simulation: valid iff after the
/// broadcast every client can reproduce its whole want set, with recovered
/// bytes equal to the stored payloads, in every draw.
inline VerifyReport verify_code_valid(const Instance& inst,
                                      const IndexCode& code,
                                      VerifyOptions opts = {}) {
  int payload_size =
      opts.payload_size > 0 ? opts.payload_size : inst.payload_size_bytes;
  VerifyReport report;
  report.valid = true;
  for (int draw = 0; draw < opts.draws; ++draw) {
    PayloadStore store =
        PayloadStore::random(inst.k, payload_size, opts.seed + draw);
    auto frames = encode(code, store);
    auto clients = simulate_decode(inst, code, frames, store, opts.mode);
    for (int i = 0; i < inst.n; ++i) {
      std::vector<int> missing;
      for (int w : inst.want[i]) {
        if (!clients[i].knows(w) ||
            clients[i].recovered[w] != store.payloads[w])
          missing.push_back(w);
      }
      if (!missing.empty()) {
        report.valid = false;
        if (draw == 0)
          report.unsatisfied.push_back({i, std::move(missing)});
      }
    }
    if (!report.valid && draw > 0) break;
  }
  return report;
}

}  // namespace ucic
