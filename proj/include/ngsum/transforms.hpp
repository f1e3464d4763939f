#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ngsum/staircase.hpp"

namespace ngsum {

// Single off-diagonal entry flip, 1-based coordinates.
struct CellEdit {
    int row = 0, col = 0;
    int old_val = 0, new_val = 0;
    bool operator==(const CellEdit&) const = default;
};

struct TransformTrace {
    std::string lemma;  // "L33", "L34", "L35"
    ParamSix before, after;
    std::vector<CellEdit> moved_cells;
};

struct TransformResult {
    StaircaseMatrix result;
    TransformTrace trace;
};

// The stepwise rewrite failed to reach its parameter tuple (flagged for
// review; single-cell moves cannot always close the v-to-(2c-s) gap).
class transform_stall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raise vbar to min{2cbar-sbar, n-c-1} by zeroing column n-cbar below row
// c+1; keeps (c,v,s,cbar), never decreases sbar, phi(Abar) strictly grows.
// Requires A in S*_s(n), c+cbar >= n, vbar < min{2cbar-sbar, n-c-1}.
TransformResult lemma33(const StaircaseMatrix& a);

// Lower v to v_target conserving s+v, keeping c and the barred triple.
// Requires A in S*(n), n-cbar <= v_target < v, vbar = n-c-1.
TransformResult lemma34(const StaircaseMatrix& a, int v_target);

// Lower v until v = 2c-s or v = n-cbar (whichever the stepwise cell moves
// reach first; cell moves cannot raise v, so the max{2c-s, n-cbar} form
// holds exactly when the 2c-s branch binds or the two targets coincide).
// Never decreases s+v, keeps c and the barred triple. Requires A in S*(n),
// n-cbar < v, vbar = 2cbar-sbar.
TransformResult lemma35(const StaircaseMatrix& a);

struct ChainResult {
    StaircaseMatrix oriented;  // input, or its reflected complement
    bool swapped = false;
    std::vector<TransformTrace> traces;
    StaircaseMatrix result;
    bool vbar_capped_regime = false;  // stopped after stage 1: 2cbar1-sbar1 < n-c1-1
};

// The normalization used by the final argument: orient so v >= n-cbar,
// apply lemma33, then (outside the flagged regime) lemma34 down to
// v = n-cbar. Requires A in S*_s(n) with c+cbar >= n and (n, c+cbar)
// different from (3k+2, 4k+1).
ChainResult normalize_chain(const StaircaseMatrix& a);

}  // namespace ngsum
