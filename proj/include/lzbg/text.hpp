#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzbg {

// 4-byte index type used for every position/rank array.
using Idx = std::int32_t;

// Upper bound on text length so that N+2 sentinels and doubled interleaved
// indices stay representable.
inline constexpr std::int64_t kMaxTextLength = (std::int64_t{1} << 31) - 16;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Thrown by the quadratic reference implementations when the input exceeds
// their configured size cap.
class OracleLimitError : public Error {
public:
    OracleLimitError(std::string_view op, std::int64_t n, std::int64_t cap);
};

// Immutable byte string with 1-based positions. Position 0 is reserved to
// mean "nonexistent" throughout the library.
class Text {
public:
    Text() = default;
    explicit Text(std::vector<std::uint8_t> bytes);
    explicit Text(std::string_view chars);

    Idx length() const { return static_cast<Idx>(bytes_.size()); }

    // 1-based access, valid for 1 <= pos <= length().
    std::uint8_t operator[](Idx pos) const {
        return bytes_[static_cast<std::size_t>(pos) - 1];
    }

    std::span<const std::uint8_t> bytes() const { return bytes_; }

    bool operator==(const Text&) const = default;

    static Text load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

private:
    std::vector<std::uint8_t> bytes_;
};

}  // namespace lzbg
