#pragma once

#include <stdexcept>
#include <string>

namespace permnet {

enum class Errc {
    parse,
    invalid_permutation,
    degree_mismatch,
    endpoint_out_of_range,
    src_not_less_than_dst,
    duplicate_edge,
    source_sink_overlap,
    missing_b1_edge,
    cap_exceeded,
    malformed_signature,
    incompatible_signature,
    invalid_polyomino,
    f1_violation,
    not_a_cover,
    not_comparable,
    ambiguous,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace permnet
