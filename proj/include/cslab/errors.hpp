#ifndef CSLAB_ERRORS_HPP
#define CSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace cslab {

// Two error families, matching the CLI exit-code contract:
// InvalidInput -> exit 2, LimitExceeded -> exit 3.
// `kind` is a stable machine-readable tag, e.g. "RowNotBijective".
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class LimitExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace cslab

#endif
