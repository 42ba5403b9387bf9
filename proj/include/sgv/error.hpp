#pragma once

#include <stdexcept>
#include <string>

namespace sgv {

// All kernel-level failures (chart mismatches, parity violations,
// non-invertible bodies, ...) are reported through this type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgv
