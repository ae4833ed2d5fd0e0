#pragma once

#include "lzbg/factorizer.hpp"

namespace lzbg {

// On-disk stream: magic "LZBG1", text length and factor count as 8-byte
// little-endian integers, then one record per factor. A record is a flag
// byte (0 = literal, 1 = copy) followed by either one literal byte or two
// 8-byte little-endian integers (length, source).

class CodecError : public Error {
public:
    using Error::Error;
};
class TruncatedStreamError : public CodecError {
public:
    using CodecError::CodecError;
};
class BadMagicError : public CodecError {
public:
    using CodecError::CodecError;
};
class BadRecordError : public CodecError {
public:
    using CodecError::CodecError;
};
class InvalidSourceError : public CodecError {
public:
    using CodecError::CodecError;
};
class LengthMismatchError : public CodecError {
public:
    using CodecError::CodecError;
};

std::vector<std::uint8_t> encode(const Factorization& f, std::uint64_t text_length);

// Inverse of encode. Copies expand byte by byte, left to right, so
// self-overlapping sources reproduce their run.
Text decode(std::span<const std::uint8_t> stream);

// Human-readable form: one factor per line, "L <byte-as-decimal>" or
// "C <length> <source>".
std::string to_text_format(const Factorization& f);

}  // namespace lzbg
