#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "loopkit/extensions.hpp"

namespace loopkit {

// Cocycle file:
//
//   cocycle n=<n> A=z<m>^<k>
//   P 0 0
//   <k lines of k integers>
//   Q 0 0
//   <k lines of k integers>
//   P 0 1
//   ...
//
// Blocks follow (ξ,η) in row-major order, P before Q. '#' lines are comments.

void write_cocycle(std::ostream &out, const Cocycle &c);

/// The base loop is supplied separately; its order must match the header.
Cocycle read_cocycle(std::istream &in, const FiniteLoop &base);
Cocycle read_cocycle_file(const std::string &path, const FiniteLoop &base);

// Phi file: one generator assignment per line,
//
//   perm <n images> -> matrix <k*k entries, row-major>

using PhiAssignments = std::vector<std::pair<Perm, ModMatrix>>;

void write_phi(std::ostream &out, const PhiAssignments &assignments);
PhiAssignments read_phi(std::istream &in, const AbGroup &kernel);
PhiAssignments read_phi_file(const std::string &path, const AbGroup &kernel);

} // namespace loopkit
