#include "lzbg/report.hpp"

namespace lzbg {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::bgs: return "bgs";
        case Variant::bgl: return "bgl";
        case Variant::bgt: return "bgt";
        case Variant::ibgs: return "ibgs";
        case Variant::ibgl: return "ibgl";
        case Variant::ibgt: return "ibgt";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (Variant v : kAllVariants)
        if (name == to_string(v)) return v;
    return std::nullopt;
}

bool is_stack_variant(Variant v) { return v == Variant::bgs || v == Variant::ibgs; }

bool is_interleaved_variant(Variant v) {
    return v == Variant::ibgs || v == Variant::ibgl || v == Variant::ibgt;
}

bool is_text_order_variant(Variant v) { return v == Variant::bgt || v == Variant::ibgt; }

std::uint64_t modeled_bytes(Variant v, std::int64_t text_length, Idx s_max) {
    const auto n = static_cast<std::uint64_t>(text_length);
    if (is_text_order_variant(v)) return 13 * n;
    if (is_stack_variant(v)) return 17 * n + 4 * static_cast<std::uint64_t>(s_max);
    return 17 * n;
}

}  // namespace lzbg
