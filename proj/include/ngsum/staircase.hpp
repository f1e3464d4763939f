#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ngsum/dense.hpp"

namespace ngsum {

// The six parameters (c, v, s) of A and (cbar, vbar, sbar) of its reflected
// complement, plus the derived gap term T = (c-cbar)^2 + 2(c-cbar).
struct ParamSix {
    int c = 0, v = 0, s = 0;
    int cbar = 0, vbar = 0, sbar = 0;
    long long T = 0;
    bool operator==(const ParamSix&) const = default;
};

struct ParamTriple {
    int c = 0, v = 0, s = 0;
    bool operator==(const ParamTriple&) const = default;
};

struct Membership {
    bool in_S = false;
    bool in_Sstar = false;
    bool in_Sstar_sym = false;
};

// (0,1)-matrix with zero diagonal whose 1-region is a staircase, encoded by
// the profile vector mu (nonincreasing, mu_i in [0,n]): a_ij = 1 iff
// j <= mu_i and i != j (1-based). A row whose 1s stop just short of the
// diagonal has two encodings; the stored profile is canonical (pointwise
// minimal among the monotone encodings), so equal matrices compare equal.
class StaircaseMatrix {
public:
    // validates (monotone, range) and canonicalizes
    static StaircaseMatrix from_profile(const std::vector<int>& mu);
    // canonical staircase with the given row sums; throws when no staircase
    // has them
    static StaircaseMatrix from_row_sums(const std::vector<int>& r);
    // 0/1 zero-diagonal matrix whose rows are prefixes-minus-diagonal
    static std::optional<StaircaseMatrix> try_from_dense(const DenseMatrix& m);
    // trusted constructor for enumerators emitting canonical profiles
    static StaircaseMatrix from_canonical_unchecked(std::vector<int> mu);

    int order() const { return n_; }
    const std::vector<int>& profile() const { return mu_; }
    const std::vector<int>& row_sums() const { return r_; }
    int row_sum(int i) const { return r_[i]; }

    // 0-based indices
    bool entry(int i, int j) const { return i != j && j < mu_[i]; }

    DenseMatrix to_dense() const;
    bool is_symmetric() const;

    bool operator==(const StaircaseMatrix& o) const = default;

private:
    int n_ = 0;
    std::vector<int> mu_;
    std::vector<int> r_;
};

Membership membership(const StaircaseMatrix& a);

// Anti-diagonal reflection of J - I - A (Eq. a_bar_ij = 1 - a_{n-j+1,n-i+1});
// an involution on S*(n). Requires A in S*(n).
StaircaseMatrix reflect_complement(const StaircaseMatrix& a);

// c = max{ i : r_1+...+r_i > i(i-1) }, v = r_{c+1}, s = sum_{i<=c} r_i - c(c-1).
// Requires A in S*(n).
ParamTriple params(const StaircaseMatrix& a);

// params of A and of reflect_complement(A), plus T.
ParamSix full_params(const StaircaseMatrix& a);

// Reorder a symmetric 0/1 adjacency matrix by nonincreasing degree and read
// it as a staircase; nullopt when the graph is not threshold-orderable.
std::optional<StaircaseMatrix> staircase_from_graph(const DenseMatrix& adj);

// Canonical profile of the complete split graph K_q v N_{n-q}.
StaircaseMatrix split_graph_staircase(int n, int q);
// Canonical profile of K_t + N_{n-t} (disjoint union).
StaircaseMatrix clique_plus_nulls_staircase(int n, int t);

namespace detail {
void check_enum_order(int n, int lo, int hi);
}

// All of S*_s(n) (self-conjugate staircases with the S* corner constraints),
// canonical profiles, lexicographically decreasing. 3 <= n <= 24.
// Parameterized by the strictly decreasing diagonal hook lengths, so each
// matrix appears exactly once.
template <typename F>
void for_each_sstar_sym(int n, F&& fn) {
    detail::check_enum_order(n, 3, 24);
    std::vector<int> head;
    head.reserve(n);
    std::vector<int> full(n);

    auto emit = [&](int t) {
        for (int i = 0; i < t; ++i) full[i] = head[i];
        int p = t;
        for (int j = t + 1; j <= n; ++j) {
            while (p > 0 && head[p - 1] < j) --p;
            full[j - 1] = p;
        }
        if (full[n - 2] > n - 1 || full[n - 1] > n - 2) return;  // S* lower corners
        fn(StaircaseMatrix::from_canonical_unchecked(full));
    };

    auto rec = [&](auto&& self, int t, int maxv) -> void {
        for (int v = std::min(maxv, n); v >= t + 2; --v) {
            head.push_back(v);
            self(self, t + 1, v);
            head.pop_back();
        }
        if (t >= 1) emit(t);
    };
    rec(rec, 0, n);
}

// All of S*(n) (possibly nonsymmetric), canonical profiles, lexicographically
// decreasing. 3 <= n <= 16.
template <typename F>
void for_each_sstar(int n, F&& fn) {
    detail::check_enum_order(n, 3, 16);
    std::vector<int> mu(n);

    // canonical rule: mu_i = i (1-based) forces mu_{i+1} = i
    auto rec = [&](auto&& self, int pos, int prev, int forced) -> void {
        if (pos == n + 1) {
            fn(StaircaseMatrix::from_canonical_unchecked(mu));
            return;
        }
        int hi = std::min(prev, n);
        if (pos == n - 1) hi = std::min(hi, n - 1);
        if (pos == n) hi = std::min(hi, n - 2);
        int lo = 0;
        if (pos == 1) lo = 2;
        if (pos == 2) lo = 1;
        if (forced >= 0) {
            if (forced < lo || forced > hi) return;
            lo = hi = forced;
        }
        for (int v = hi; v >= lo; --v) {
            mu[pos - 1] = v;
            self(self, pos + 1, v, v == pos ? pos : -1);
        }
    };
    rec(rec, 1, n, -1);
}

std::vector<StaircaseMatrix> enumerate_sstar_sym(int n);
std::vector<StaircaseMatrix> enumerate_sstar(int n);

}  // namespace ngsum
