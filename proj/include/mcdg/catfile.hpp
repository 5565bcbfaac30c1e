#pragma once

#include <string>

#include "mcdg/dgcat.hpp"

namespace mcdg {

/// Parses the JSON category document (format "dg-category") into a raw
/// category. Shape checks only; run validate_category for the axioms.
/// Unknown keys are rejected; duplicate labels are reported by name; scalar
/// and structural errors carry the offending entry. Accepted documents are
/// in canonical order (see emit_category), so emit(parse(doc)) differs from
/// doc by whitespace only.
DGCategory parse_category(const std::string& text);

/// "Q" or "F<p>" (p a prime below 2^31), as used by the ring header of the
/// format and by the --field flag.
Field parse_field_name(const std::string& name);

/// Canonical emission: fixed key order, entries sorted (homs and diffs by
/// object pair and degree, tensor entries by basis triple), two-space
/// indent, canonical scalar text. Field categories only.
std::string emit_category(const DGCategory& P);

/// The same category with every coefficient mapped into k2 by exact
/// reduction. Errors when a denominator is divisible by the characteristic.
/// Shared composition tensors stay shared.
DGCategory reduce_category(const DGCategory& P, const Field& k2);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace mcdg
