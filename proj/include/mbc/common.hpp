#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbc {

/// Bit-set over a ground set of at most 16 elements; element i is bit i.
using Mask = std::uint32_t;

inline constexpr int kMaxPlayers = 16;
inline constexpr const char* kVersion = "1.0.0";

enum class ErrorCode {
    invalid_argument = 1,
    size_limit = 2,
    parse = 3,
    resource_limit = 4,
    internal = 5,
};

/// Single exception type of the library; the code survives the C boundary.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::invalid_argument, what);
}

/// Internal consistency check; failures are library bugs, not user errors.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::internal, what);
}

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }

}  // namespace mbc
