#pragma once

#include <stdexcept>
#include <string>

namespace plagdet {

// Bad arguments, bad configuration, corpora that cannot be analysed.
// The CLI maps this to exit code 1.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem and encoding failures. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plagdet
