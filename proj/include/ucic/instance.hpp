#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucic/errors.hpp"

namespace ucic {

/// Symbol / client names: 0-based ids internally, 1-based "p1"/"c1" in files
/// and human-readable output.
inline std::string symbol_name(int id) { return "p" + std::to_string(id + 1); }
inline std::string client_name(int id) { return "c" + std::to_string(id + 1); }

/// Parses "p<k>" (1-based, no leading zero) to a 0-based id.
inline std::optional<int> parse_symbol_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'p' || s[1] == '0') return std::nullopt;
  long v = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000'000L) return std::nullopt;
  }
  return static_cast<int>(v - 1);
}

/// An index-coding problem: n clients over a universe of k symbols, each
/// client caching a has set and requesting a want set disjoint from it.
struct Instance {
  int n = 0;  // client count
  int k = 0;  // symbol count
  std::vector<std::vector<int>> has;   // per client, sorted symbol ids
  std::vector<std::vector<int>> want;  // per client, sorted symbol ids
  int payload_size_bytes = 1;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Ratio of symbols delivered to transmissions spent, kept exact.
struct CodingGain {
  int k = 0;    // symbols delivered
  int ell = 1;  // transmissions

  double value() const { return static_cast<double>(k) / ell; }

  std::string to_string() const {
    return std::to_string(k) + "/" + std::to_string(ell);
  }

  /// Decimal rendering with four places, e.g. "1.6667".
  std::string to_decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value());
    return buf;
  }
};

struct Violation {
  int client = -1;  // -1 for instance-level problems
  std::string rule;
  std::string message;
};

namespace detail {
inline bool sorted_unique(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}
}  // namespace detail

/// Checks every Instance invariant; violations are returned as data, never
/// thrown. Empty result means the instance is valid.
inline std::vector<Violation> validate(const Instance& inst) {
  std::vector<Violation> out;
  auto flag = [&](int client, std::string rule, std::string msg) {
    out.push_back({client, std::move(rule), std::move(msg)});
  };
  if (inst.n < 0 || inst.k < 0)
    flag(-1, "counts", "n and k must be non-negative");
  if (static_cast<int>(inst.has.size()) != inst.n ||
      static_cast<int>(inst.want.size()) != inst.n)
    flag(-1, "counts", "has/want lists must have one entry per client");
  if (inst.payload_size_bytes < 1)
    flag(-1, "payload", "payload_size_bytes must be positive");
  int rows = std::min<int>(inst.n, static_cast<int>(
                                       std::min(inst.has.size(), inst.want.size())));
  for (int i = 0; i < rows; ++i) {
    for (const auto* side : {&inst.has[i], &inst.want[i]}) {
      const char* which = side == &inst.has[i] ? "has" : "want";
      if (!detail::sorted_unique(*side))
        flag(i, "ordering", client_name(i) + ": " + which +
                                " set must be strictly increasing");
      for (int s : *side)
        if (s < 0 || s >= inst.k)
          flag(i, "range", client_name(i) + ": symbol id " +
                               std::to_string(s + 1) + " in " + which +
                               " set is outside [p1, " + symbol_name(inst.k - 1) +
                               "]");
    }
    std::vector<int> overlap;
    std::set_intersection(inst.has[i].begin(), inst.has[i].end(),
                          inst.want[i].begin(), inst.want[i].end(),
                          std::back_inserter(overlap));
    for (int s : overlap)
      flag(i, "overlap", client_name(i) + ": " + symbol_name(s) +
                             " is both wanted and cached");
  }
  return out;
}

inline bool is_valid(const Instance& inst) { return validate(inst).empty(); }

/// True when the instance is in reduced form: k = n and client i wants
/// exactly symbol i.
inline bool is_single_unicast(const Instance& inst) {
  if (inst.k != inst.n) return false;
  for (int i = 0; i < inst.n; ++i)
    if (inst.want[i] != std::vector<int>{i}) return false;
  return true;
}

/// Result of the unicast -> single-unicast reduction. client_origin[j] is
/// the original client that virtual client j stands for; symbol_origin[j]
/// is the original id of reduced symbol j (unwanted symbols are dropped and
/// ids compacted).
struct SingleUnicastReduction {
  Instance instance;
  std::vector<int> client_origin;
  std::vector<int> symbol_origin;
};

/// Splits every client into one virtual client per wanted symbol and
/// renumbers symbols so that virtual client j wants symbol j. Requires a
/// unicast input (no symbol wanted twice). Clients wanting nothing are
/// dropped, as are symbols nobody wants.
inline SingleUnicastReduction reduce_to_single_unicast(const Instance& inst) {
  if (!is_valid(inst))
    raise(Errc::invalid_instance, "reduce_to_single_unicast needs a valid instance");

  std::vector<int> wanted_by(inst.k, -1);
  for (int i = 0; i < inst.n; ++i)
    for (int s : inst.want[i]) {
      if (wanted_by[s] != -1)
        raise(Errc::multicast_input,
              symbol_name(s) + " is wanted by both " + client_name(wanted_by[s]) +
                  " and " + client_name(i));
      wanted_by[s] = i;
    }

  SingleUnicastReduction red;
  std::vector<int> new_id(inst.k, -1);
  for (int s = 0; s < inst.k; ++s)
    if (wanted_by[s] != -1) {
      new_id[s] = static_cast<int>(red.symbol_origin.size());
      red.symbol_origin.push_back(s);
      red.client_origin.push_back(wanted_by[s]);
    }

  Instance& out = red.instance;
  out.n = out.k = static_cast<int>(red.symbol_origin.size());
  out.payload_size_bytes = inst.payload_size_bytes;
  out.has.resize(out.n);
  out.want.resize(out.n);
  for (int j = 0; j < out.n; ++j) {
    out.want[j] = {j};
    for (int s : inst.has[red.client_origin[j]])
      if (new_id[s] != -1) out.has[j].push_back(new_id[s]);
    std::sort(out.has[j].begin(), out.has[j].end());
  }
  return red;
}

// ---------------------------------------------------------------------------
// Instance file format: JSON object {"n", "k", "payload_size_bytes"?,
// "clients": [{"has": ["p2"], "want": ["p1"]}, ...]} with 1-based symbol
// names and clients listed in id order. Unknown fields are rejected.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> parse_symbol_list(const nlohmann::json& arr,
                                          int client, const char* field) {
  if (!arr.is_array())
    raise(Errc::parse_error, client_name(client) + ": field '" +
                                 std::string(field) + "' must be an array");
  std::vector<int> out;
  for (const auto& e : arr) {
    if (!e.is_string())
      raise(Errc::parse_error, client_name(client) + ": field '" +
                                   std::string(field) +
                                   "' must contain symbol names");
    auto id = parse_symbol_name(e.get<std::string>());
    if (!id)
      raise(Errc::parse_error, client_name(client) + ": bad symbol name '" +
                                   e.get<std::string>() + "' in field '" +
                                   std::string(field) + "'");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::parse_error, e.what());
  }
  if (!j.is_object()) raise(Errc::parse_error, "top level must be an object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "n" && key != "k" && key != "payload_size_bytes" &&
        key != "clients")
      raise(Errc::parse_error, "unknown field '" + key + "'");
  }
  for (const char* req : {"n", "k", "clients"})
    if (!j.contains(req))
      raise(Errc::parse_error, std::string("missing field '") + req + "'");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
    raise(Errc::parse_error, "fields 'n' and 'k' must be integers");

  Instance inst;
  inst.n = j["n"].get<int>();
  inst.k = j["k"].get<int>();
  if (j.contains("payload_size_bytes")) {
    if (!j["payload_size_bytes"].is_number_integer())
      raise(Errc::parse_error, "field 'payload_size_bytes' must be an integer");
    inst.payload_size_bytes = j["payload_size_bytes"].get<int>();
    if (inst.payload_size_bytes < 1)
      raise(Errc::parse_error, "field 'payload_size_bytes' must be positive");
  }
  const auto& clients = j["clients"];
  if (!clients.is_array())
    raise(Errc::parse_error, "field 'clients' must be an array");
  if (static_cast<int>(clients.size()) != inst.n)
    raise(Errc::parse_error,
          "field 'clients' has " + std::to_string(clients.size()) +
              " entries but n=" + std::to_string(inst.n));
  int ci = 0;
  for (const auto& c : clients) {
    if (!c.is_object())
      raise(Errc::parse_error, client_name(ci) + ": entry must be an object");
    for (const auto& item : c.items())
      if (item.key() != "has" && item.key() != "want")
        raise(Errc::parse_error,
              client_name(ci) + ": unknown field '" + item.key() + "'");
    for (const char* req : {"has", "want"})
      if (!c.contains(req))
        raise(Errc::parse_error, client_name(ci) + ": missing field '" +
                                     std::string(req) + "'");
    inst.has.push_back(detail::parse_symbol_list(c["has"], ci, "has"));
    inst.want.push_back(detail::parse_symbol_list(c["want"], ci, "want"));
    ++ci;
  }
  return inst;
}

inline std::string serialize_instance(const Instance& inst) {
  nlohmann::ordered_json j;
  j["n"] = inst.n;
  j["k"] = inst.k;
  j["payload_size_bytes"] = inst.payload_size_bytes;
  auto names = [](const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int s : ids) out.push_back(symbol_name(s));
    return out;
  };
  j["clients"] = nlohmann::ordered_json::array();
  for (int i = 0; i < inst.n; ++i)
    j["clients"].push_back({{"has", names(inst.has[i])},
                            {"want", names(inst.want[i])}});
  return j.dump(2) + "\n";
}

}  // namespace ucic
