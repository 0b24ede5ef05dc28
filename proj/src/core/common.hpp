#ifndef GFM_CORE_COMMON_HPP
#define GFM_CORE_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gfm {

/// Raised when an operation needs coefficients beyond a truncated window.
class PrecisionError : public std::runtime_error {
  public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when text input does not match one of the element grammars.
class ParseError : public std::invalid_argument {
  public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Exponents and degrees are i64 with loud overflow checks. The searches only
// need exponents around alpha*p + precision, but a silent wrap would corrupt
// exact arithmetic, so every exponent combination goes through these.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in add");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in mul");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in sub");
    return r;
}

/// Identifies GF(p^e). Every element and container carries one; mixing
/// fields in a single operation is a contract violation.
struct FieldId {
    std::uint32_t p = 0;
    std::uint32_t e = 1;

    friend bool operator==(const FieldId&, const FieldId&) = default;
};

inline void require_same_field(const FieldId& a, const FieldId& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": mixed coefficient fields");
}

/// Sentinel for "known to all indices" truncation bounds.
inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

} // namespace gfm

#endif
