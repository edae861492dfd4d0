#pragma once

#include <iosfwd>
#include <string>

#include "loopkit/finite_loop.hpp"

namespace loopkit {

// Cayley table text format:
//
//   n
//   a00 a01 ... a0(n-1)
//   ...
//
// 0-based entries separated by single spaces; lines starting with '#' are
// comments. write_table emits exactly this layout with '\n' line endings and
// no comments, so tables round-trip byte-for-byte.

/// Throws FormatError (with line/column) on bad syntax and StructuralError on
/// a well-formed but non-square or out-of-range table.
CayleyTable read_table(std::istream &in);
CayleyTable read_table_file(const std::string &path);

void write_table(std::ostream &out, const CayleyTable &table);
std::string format_table(const CayleyTable &table);

} // namespace loopkit
