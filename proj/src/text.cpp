#include "lzbg/text.hpp"

#include <fstream>

namespace lzbg {

namespace {

void check_length(std::int64_t n) {
    if (n > kMaxTextLength)
        throw Error("text length " + std::to_string(n) + " exceeds supported maximum " +
                    std::to_string(kMaxTextLength));
}

}  // namespace

OracleLimitError::OracleLimitError(std::string_view op, std::int64_t n, std::int64_t cap)
    : Error(std::string(op) + ": input length " + std::to_string(n) +
            " exceeds the oracle size cap " + std::to_string(cap)) {}

Text::Text(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
    check_length(static_cast<std::int64_t>(bytes_.size()));
}

Text::Text(std::string_view chars) {
    check_length(static_cast<std::int64_t>(chars.size()));
    bytes_.assign(chars.begin(), chars.end());
}

Text Text::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read error on " + path.string());
    return Text(std::move(bytes));
}

void Text::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes_.data()),
              static_cast<std::streamsize>(bytes_.size()));
    if (!out) throw IoError("write error on " + path.string());
}

}  // namespace lzbg
