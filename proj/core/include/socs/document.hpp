#pragma once

#include <string>

#include "socs/society.hpp"

namespace socs {

/// Parses a `.society.json` document (schema_version 1). Rationals are
/// accepted as JSON integers or as strings "p", "p/q", or exact decimals
/// ("0.2" becomes 1/5); JSON floats are rejected so no binary floating point
/// enters the pipeline. Throws ParseError (syntax, with byte offset),
/// SchemaError (wrong shape, with field path), or ValidationError (society
/// invariant violations).
Society parse_society(const std::string& text);

/// Canonical document form: sorted keys, two-space indentation, rationals in
/// lowest terms ("p" or "p/q"), voters in order, trailing newline.
/// Byte-stable across runs and platforms.
std::string serialize_society(const Society& s);

}  // namespace socs
