#include "lzbg/codec.hpp"

#include <array>

namespace lzbg {

namespace {

constexpr std::array<std::uint8_t, 5> kMagic = {'L', 'Z', 'B', 'G', '1'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t value) {
    for (int shift = 0; shift < 64; shift += 8)
        out.push_back(static_cast<std::uint8_t>(value >> shift));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> stream) : stream_(stream) {}

    std::uint8_t u8() {
        need(1);
        return stream_[pos_++];
    }

    std::uint64_t u64() {
        need(8);
        std::uint64_t value = 0;
        for (int shift = 0; shift < 64; shift += 8)
            value |= static_cast<std::uint64_t>(stream_[pos_++]) << shift;
        return value;
    }

    bool done() const { return pos_ == stream_.size(); }

private:
    void need(std::size_t k) const {
        if (pos_ + k > stream_.size()) throw TruncatedStreamError("stream ends mid-record");
    }

    std::span<const std::uint8_t> stream_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode(const Factorization& f, std::uint64_t text_length) {
    std::vector<std::uint8_t> out;
    out.reserve(kMagic.size() + 16 + f.factors.size() * 17);
    for (std::uint8_t b : kMagic) out.push_back(b);
    put_u64(out, text_length);
    put_u64(out, static_cast<std::uint64_t>(f.factors.size()));
    for (const Factor& factor : f.factors) {
        if (factor.is_literal()) {
            out.push_back(0);
            out.push_back(factor.literal);
        } else {
            out.push_back(1);
            put_u64(out, static_cast<std::uint64_t>(factor.length));
            put_u64(out, static_cast<std::uint64_t>(factor.source));
        }
    }
    return out;
}

Text decode(std::span<const std::uint8_t> stream) {
    Reader in(stream);
    for (std::uint8_t expected : kMagic)
        if (in.u8() != expected) throw BadMagicError("not an LZBG1 stream");
    const std::uint64_t text_length = in.u64();
    const std::uint64_t factor_count = in.u64();
    if (text_length > static_cast<std::uint64_t>(kMaxTextLength))
        throw CodecError("declared text length exceeds supported maximum");

    std::vector<std::uint8_t> out;
    out.reserve(text_length);
    for (std::uint64_t k = 0; k < factor_count; ++k) {
        const std::uint8_t flag = in.u8();
        if (flag == 0) {
            out.push_back(in.u8());
        } else if (flag == 1) {
            const std::uint64_t length = in.u64();
            const std::uint64_t source = in.u64();
            if (length == 0) throw BadRecordError("copy record with zero length");
            if (source == 0 || source > out.size())
                throw InvalidSourceError("copy source " + std::to_string(source) +
                                         " not inside the decoded prefix");
            if (out.size() + length > text_length)
                throw LengthMismatchError("records overrun the declared text length");
            // Byte-at-a-time so self-overlapping copies unfold correctly.
            for (std::uint64_t i = 0; i < length; ++i)
                out.push_back(out[source - 1 + i]);
        } else {
            throw BadRecordError("unknown record flag " + std::to_string(flag));
        }
    }
    if (!in.done()) throw BadRecordError("trailing bytes after the last record");
    if (out.size() != text_length)
        throw LengthMismatchError("decoded " + std::to_string(out.size()) +
                                  " bytes, header declares " + std::to_string(text_length));
    return Text(std::move(out));
}

std::string to_text_format(const Factorization& f) {
    std::string out;
    for (const Factor& factor : f.factors) {
        if (factor.is_literal()) {
            out += "L ";
            out += std::to_string(static_cast<unsigned>(factor.literal));
        } else {
            out += "C ";
            out += std::to_string(factor.length);
            out += ' ';
            out += std::to_string(factor.source);
        }
        out += '\n';
    }
    return out;
}

}  // namespace lzbg
