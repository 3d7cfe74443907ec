#pragma once

#include <string>

#include "omega/algebra.hpp"

namespace omega {

/// Parses the line-oriented algebra format:
///
///     algebra <name>
///     size <n>
///     add
///     <n rows of n integers>
///     op <name> <arity>
///     <n^(arity-1) rows of n integers>
///
/// `#` starts a comment. Throws ParseError for malformed sections; table
/// and group errors keep their own kind. Every message names a line and column.
FiniteOmegaGroup parse_algebra_file(const std::string& text);

/// Reads and parses a file. Throws ParseError when it cannot be opened.
FiniteOmegaGroup read_algebra_file(const std::string& path);

/// Canonical text: single spaces, no comments or blank lines.
std::string serialize_algebra(const FiniteOmegaGroup& algebra);

/// Comments and blank lines dropped, whitespace collapsed to single spaces.
std::string normalize_algebra_file(const std::string& text);

}  // namespace omega
