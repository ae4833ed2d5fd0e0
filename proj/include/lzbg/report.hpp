#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lzbg/text.hpp"

namespace lzbg {

enum class Variant { bgs, bgl, bgt, ibgs, ibgl, ibgt };

inline constexpr Variant kAllVariants[] = {Variant::bgs,  Variant::bgl,  Variant::bgt,
                                           Variant::ibgs, Variant::ibgl, Variant::ibgt};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

bool is_stack_variant(Variant v);       // bgs, ibgs
bool is_interleaved_variant(Variant v); // ibgs, ibgl, ibgt
bool is_text_order_variant(Variant v);  // bgt, ibgt

// Working-space model with 4-byte integers: 17N + 4*S_max for the stack
// variants, 17N for lexicographic peak elimination, 13N for text order.
std::uint64_t modeled_bytes(Variant v, std::int64_t text_length, Idx s_max);

// Per-run statistics. post_sa_seconds covers everything a variant does once
// the suffix array is available (inverse/phi scans, neighbor computation and
// the factor loop); suffix array construction is reported separately.
struct RunReport {
    std::string variant;
    std::int64_t text_length = 0;
    std::int64_t factor_count = 0;
    Idx s_max = 0;  // stack variants only
    std::uint64_t comparison_count = 0;
    std::uint64_t modeled_bytes = 0;
    std::uint64_t actual_peak_bytes = 0;  // working arrays actually held
    double sa_build_seconds = 0.0;
    double post_sa_seconds = 0.0;
    int repeats = 1;
};

}  // namespace lzbg
