#pragma once

#include <stdexcept>
#include <string>

namespace mta {

// All recoverable input and contract failures in the library surface as this type.
class MtaError : public std::runtime_error {
 public:
  explicit MtaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mta
