#include "mincodes/error.hpp"

namespace mincodes {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case Errc::field_too_large: return "FieldTooLarge";
        case Errc::invalid_field_order: return "InvalidFieldOrder";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::zero_vector: return "ZeroVector";
        case Errc::rank_deficient: return "RankDeficient";
        case Errc::enumeration_too_large: return "EnumerationTooLarge";
        case Errc::zero_column_present: return "ZeroColumnPresent";
        case Errc::bad_split: return "BadSplit";
        case Errc::target_too_small: return "TargetTooSmall";
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::bad_element_encoding: return "BadElementEncoding";
        case Errc::length_mismatch: return "LengthMismatch";
    }
    return "Unknown";
}

}  // namespace mincodes
