#pragma once

#include <string>
#include <vector>

#include "ngsum/dense.hpp"
#include "ngsum/staircase.hpp"

namespace ngsum {

// Standard graph6 ASCII encoding (bit-packed upper triangle, offset-63
// bytes), orders up to 62. Decode errors carry the byte offset.
std::string graph6_encode(const DenseMatrix& adj);
std::string graph6_encode(const StaircaseMatrix& a);  // symmetric members only
DenseMatrix graph6_decode(const std::string& s);

// Edge-list text: one "u v" pair per line, 1-indexed vertices. Vertices are
// 1..n with n the largest endpoint unless n_hint is larger.
DenseMatrix edge_list_decode(const std::string& text, int n_hint = 0);
std::string edge_list_encode(const DenseMatrix& adj);

}  // namespace ngsum
