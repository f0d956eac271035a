#pragma once

#include <stdexcept>
#include <string>

namespace mincodes {

enum class Errc {
    non_prime_characteristic,
    field_too_large,
    invalid_field_order,
    division_by_zero,
    dimension_mismatch,
    field_mismatch,
    zero_vector,
    rank_deficient,
    enumeration_too_large,
    zero_column_present,
    bad_split,
    target_too_small,
    malformed_header,
    bad_element_encoding,
    length_mismatch,
};

const char* errc_name(Errc code) noexcept;

// Every domain failure in the library is reported through this type; the
// code lets callers (and the CLI exit-code mapping) dispatch without parsing
// the message.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace mincodes
