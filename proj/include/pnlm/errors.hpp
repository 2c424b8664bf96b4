#pragma once

#include <stdexcept>
#include <string>

namespace pnlm {

/// File or format problem (unreadable input, unsupported encoding, bad path).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite value where the pipeline requires a finite one.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pnlm
