#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tav {

// One-line notation on points 0..d-1: point i goes to p[i].
using Perm = std::vector<uint32_t>;

Perm identity_perm(size_t d);
bool is_permutation(const Perm& p);
// a then b
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
// cycle lengths including fixed points, sorted by smallest point
std::vector<size_t> cycle_lengths(const Perm& p);
std::string cycle_string(const Perm& p);
// parse "(0 1)(2 3)" on d points
Perm parse_cycles(const std::string& s, size_t d);

} // namespace tav
