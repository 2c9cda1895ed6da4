#pragma once

#include <stdexcept>
#include <string>

namespace fellrep {

// Error taxonomy mirrors the CLI exit contract: input/parse/resource map to
// distinct exit codes at the boundary.
enum class ErrorKind { input, parse, resource };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) {
  throw Error(ErrorKind::input, msg);
}

[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw Error(ErrorKind::parse, msg);
}

[[noreturn]] inline void throw_resource(const std::string& msg) {
  throw Error(ErrorKind::resource, msg);
}

}  // namespace fellrep
