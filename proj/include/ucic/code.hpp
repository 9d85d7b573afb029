#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucic/errors.hpp"
#include "ucic/instance.hpp"

namespace ucic {

/// One broadcast frame: the XOR of the payloads named in `support`.
struct CodedSymbol {
  std::vector<int> support;  // sorted symbol ids, nonempty

  friend bool operator==(const CodedSymbol&, const CodedSymbol&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (i) s += "+";
      s += symbol_name(support[i]);
    }
    return s;
  }
};

inline CodedSymbol coded(std::vector<int> support) {
  std::sort(support.begin(), support.end());
  return CodedSymbol{std::move(support)};
}

/// Ordered transmission schedule; order matters because later decodes may
/// rely on cache entries gained from earlier frames.
struct IndexCode {
  std::vector<CodedSymbol> transmissions;

  int length() const { return static_cast<int>(transmissions.size()); }

  friend bool operator==(const IndexCode&, const IndexCode&) = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < transmissions.size(); ++i) {
      if (i) s += ", ";
      s += transmissions[i].to_string();
    }
    return s + "}";
  }
};

// Code file format: JSON array of transmissions, each an array of symbol
// names, e.g. [["p1","p2"],["p3","p5"],["p2","p3","p4"]].

inline IndexCode parse_code(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(Errc::parse_error, e.what());
  }
  if (!j.is_array()) raise(Errc::parse_error, "code file must be a JSON array");
  IndexCode code;
  for (const auto& t : j) {
    if (!t.is_array() || t.empty())
      raise(Errc::parse_error, "each transmission must be a nonempty array");
    std::vector<int> support;
    for (const auto& s : t) {
      if (!s.is_string())
        raise(Errc::parse_error, "transmissions must contain symbol names");
      auto id = parse_symbol_name(s.get<std::string>());
      if (!id)
        raise(Errc::parse_error,
              "bad symbol name '" + s.get<std::string>() + "'");
      support.push_back(*id);
    }
    code.transmissions.push_back(coded(std::move(support)));
  }
  return code;
}

inline std::string serialize_code(const IndexCode& code) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : code.transmissions) {
    nlohmann::json names = nlohmann::json::array();
    for (int s : t.support) names.push_back(symbol_name(s));
    j.push_back(names);
  }
  return j.dump() + "\n";
}

}  // namespace ucic
