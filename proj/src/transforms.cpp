#include "ngsum/transforms.hpp"

#include <algorithm>

namespace ngsum {

namespace {

[[noreturn]] void pre_fail(const std::string& op, const std::string& inequality) {
    throw std::invalid_argument(op + ": precondition failed: " + inequality);
}

// Mutable row-sum view of a staircase matrix. Rows stay prefixes minus the
// diagonal; every edit is validated by rebuilding the canonical profile.
struct Editor {
    int n;
    std::vector<int> r;
    std::vector<CellEdit>* log;

    Editor(const StaircaseMatrix& a, std::vector<CellEdit>* edits)
        : n(a.order()), r(a.row_sums()), log(edits) {}

    StaircaseMatrix snapshot() const { return StaircaseMatrix::from_row_sums(r); }

    bool has_entry(int i, int j) const {  // 0-based
        if (i == j) return false;
        const int w = (r[i] <= i) ? r[i] : r[i] + 1;
        return j < w;
    }

    void remove_rightmost(int i) {  // 0-based row
        if (r[i] <= 0) throw std::logic_error("transform: removing from empty row");
        const int col = (r[i] <= i) ? r[i] - 1 : r[i];
        --r[i];
        StaircaseMatrix::from_row_sums(r);  // staircase validity check
        log->push_back({i + 1, col + 1, 1, 0});
    }

    void add_next(int i) {  // 0-based row
        const int col = (r[i] < i) ? r[i] : r[i] + 1;
        ++r[i];
        StaircaseMatrix::from_row_sums(r);
        log->push_back({i + 1, col + 1, 0, 1});
    }

    // topmost row with 0-based index < c_limit that can take one more 1
    int insert_row(int c_limit) const {
        for (int i = 0; i < c_limit; ++i) {
            if (r[i] >= n - 1) continue;  // full
            std::vector<int> trial = r;
            ++trial[i];
            try {
                StaircaseMatrix::from_row_sums(trial);
                return i;
            } catch (const std::invalid_argument&) {
            }
        }
        return -1;
    }
};

}  // namespace

TransformResult lemma33(const StaircaseMatrix& a) {
    const int n = a.order();
    if (!membership(a).in_Sstar_sym) pre_fail("lemma33", "A in S*_s(n)");
    const ParamSix before = full_params(a);
    if (before.c + before.cbar < n) pre_fail("lemma33", "c + cbar >= n");
    const int target0 = std::min(2 * before.cbar - before.sbar, n - before.c - 1);
    if (!(before.vbar < target0)) pre_fail("lemma33", "vbar < min{2cbar - sbar, n - c - 1}");

    TransformTrace trace;
    trace.lemma = "L33";
    trace.before = before;
    Editor ed(a, &trace.moved_cells);

    ParamSix p = before;
    const int col = n - before.cbar - 1;  // 0-based column n - cbar
    for (int guard = 0; guard < n * n; ++guard) {
        const int target = std::min(2 * p.cbar - p.sbar, n - p.c - 1);
        if (p.vbar >= target) break;
        int row = -1;
        for (int i = n - 1; i >= p.c + 1; --i) {
            if (ed.has_entry(i, col)) {
                row = i;
                break;
            }
        }
        if (row < 0)
            throw transform_stall("lemma33: no 1 left in column n-cbar below row c+1");
        while (ed.r[row] > col) ed.remove_rightmost(row);  // truncate to width n-cbar-1
        p = full_params(ed.snapshot());
        if (p.c != before.c || p.v != before.v || p.s != before.s || p.cbar != before.cbar)
            throw transform_stall("lemma33: (c,v,s,cbar) drifted during rewrite");
    }
    const StaircaseMatrix out = ed.snapshot();
    trace.after = full_params(out);
    const int target = std::min(2 * trace.after.cbar - trace.after.sbar, n - trace.after.c - 1);
    if (trace.after.vbar != target || trace.after.sbar < before.sbar)
        throw transform_stall("lemma33: postcondition tuple not reached");
    return {out, trace};
}

TransformResult lemma34(const StaircaseMatrix& a, int v_target) {
    const int n = a.order();
    if (!membership(a).in_Sstar) pre_fail("lemma34", "A in S*(n)");
    const ParamSix before = full_params(a);
    if (before.vbar != n - before.c - 1) pre_fail("lemma34", "vbar = n - c - 1");
    if (!(n - before.cbar <= v_target)) pre_fail("lemma34", "n - cbar <= v_target");
    if (!(v_target < before.v)) pre_fail("lemma34", "v_target < v");

    TransformTrace trace;
    trace.lemma = "L34";
    trace.before = before;
    Editor ed(a, &trace.moved_cells);

    ParamSix p = before;
    while (p.v > v_target) {
        try {
            ed.remove_rightmost(p.c);  // the 1 at position (c+1, v)
        } catch (const std::invalid_argument&) {
            throw transform_stall("lemma34: removing (c+1,v) would break the staircase");
        }
        const int dest = ed.insert_row(p.c);
        if (dest < 0) throw transform_stall("lemma34: no room in the first c rows");
        ed.add_next(dest);
        p = full_params(ed.snapshot());
    }
    const StaircaseMatrix out = ed.snapshot();
    trace.after = p;
    if (p.c != before.c || p.v != v_target || p.s + p.v != before.s + before.v ||
        p.cbar != before.cbar || p.vbar != before.vbar || p.sbar != before.sbar)
        throw transform_stall("lemma34: postcondition tuple not reached");
    return {out, trace};
}

TransformResult lemma35(const StaircaseMatrix& a) {
    const int n = a.order();
    if (!membership(a).in_Sstar) pre_fail("lemma35", "A in S*(n)");
    const ParamSix before = full_params(a);
    if (!(n - before.cbar < before.v)) pre_fail("lemma35", "n - cbar < v");
    if (before.vbar != 2 * before.cbar - before.sbar) pre_fail("lemma35", "vbar = 2cbar - sbar");

    TransformTrace trace;
    trace.lemma = "L35";
    trace.before = before;
    Editor ed(a, &trace.moved_cells);

    // One cell per step, bottom of column v first: s rises by one per step,
    // v falls only when the cell came from row c+1 itself, and c never moves
    // (the insert can push past c(c+1) only when v >= 2c-s, where we stop).
    ParamSix p = before;
    for (int guard = 0; guard < n * n; ++guard) {
        if (p.v <= n - p.cbar || p.v == 2 * p.c - p.s) break;
        const int col = p.v - 1;  // 0-based column v
        int row = -1;
        for (int i = n - 1; i >= p.c; --i) {
            if (ed.has_entry(i, col)) {
                row = i;
                break;
            }
        }
        if (row < 0) throw transform_stall("lemma35: no 1 in column v at rows >= c+1");
        try {
            ed.remove_rightmost(row);
        } catch (const std::invalid_argument&) {
            throw transform_stall("lemma35: removal would break the staircase");
        }
        const int dest = ed.insert_row(p.c);
        if (dest < 0) throw transform_stall("lemma35: no room in the first c rows");
        ed.add_next(dest);
        p = full_params(ed.snapshot());
    }
    const StaircaseMatrix out = ed.snapshot();
    trace.after = p;
    // The rewrite stops at v2 = 2c2-s2 or at the n-cbar floor; the
    // max{2c2-s2, n-cbar} form holds unless the floor is hit with a gap
    // still open (cell moves cannot raise v).
    const bool stopped = (p.v == 2 * p.c - p.s) || (p.v == n - p.cbar);
    if (p.c != before.c || !stopped || p.s + p.v < before.s + before.v ||
        p.cbar != before.cbar || p.vbar != before.vbar || p.sbar != before.sbar)
        throw transform_stall("lemma35: postcondition tuple not reached");
    return {out, trace};
}

ChainResult normalize_chain(const StaircaseMatrix& a) {
    const int n = a.order();
    if (!membership(a).in_Sstar_sym) pre_fail("normalize_chain", "A in S*_s(n)");
    ParamSix p = full_params(a);
    if (p.c + p.cbar < n) pre_fail("normalize_chain", "c + cbar >= n");
    if (n % 3 == 2 && p.c + p.cbar == 4 * (n / 3) + 1)
        pre_fail("normalize_chain", "(n, c+cbar) != (3k+2, 4k+1)");

    ChainResult chain{a, false, {}, a, false};
    if (p.v < n - p.cbar) {
        chain.oriented = reflect_complement(a);
        chain.swapped = true;
        p = full_params(chain.oriented);
    }
    chain.result = chain.oriented;

    if (p.vbar < std::min(2 * p.cbar - p.sbar, n - p.c - 1)) {
        TransformResult stage1 = lemma33(chain.result);
        chain.traces.push_back(stage1.trace);
        chain.result = std::move(stage1.result);
        p = chain.traces.back().after;
    }
    if (2 * p.cbar - p.sbar < n - p.c - 1) {
        chain.vbar_capped_regime = true;
        return chain;
    }
    if (n - p.cbar < p.v) {
        TransformResult stage2 = lemma34(chain.result, n - p.cbar);
        chain.traces.push_back(stage2.trace);
        chain.result = std::move(stage2.result);
        p = chain.traces.back().after;
    }
    if (p.v != n - p.cbar || p.vbar != n - p.c - 1)
        throw transform_stall("normalize_chain: final tuple not normalized");
    return chain;
}

}  // namespace ngsum
