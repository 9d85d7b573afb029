#pragma once

#include <stdexcept>
#include <string>

namespace ucic {

enum class Errc {
  parse_error,
  multicast_input,
  not_single_unicast,
  not_single_uniprior,
  unknown_vertex,
  unknown_symbol,
  unknown_fixture,
  bad_family_params,
  too_large,
  invalid_instance,
  invalid_code_produced,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::multicast_input: return "MulticastInput";
    case Errc::not_single_unicast: return "NotSingleUnicast";
    case Errc::not_single_uniprior: return "NotSingleUniprior";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::bad_family_params: return "BadFamilyParams";
    case Errc::too_large: return "TooLarge";
    case Errc::invalid_instance: return "InvalidInstance";
    case Errc::invalid_code_produced: return "InvalidCodeProduced";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ucic
