#include "ngsum/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "ngsum/graph6.hpp"

namespace ngsum {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string profile_str(const std::vector<int>& mu) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
    os << "]";
    return os.str();
}

DenseMatrix complement_dense(const DenseMatrix& adj) {
    DenseMatrix c(adj.n);
    for (int i = 0; i < adj.n; ++i)
        for (int j = 0; j < adj.n; ++j)
            if (i != j) c.at(i, j) = 1.0 - adj.at(i, j);
    return c;
}

struct ConjecturedFamily {
    Fingerprint fp;
    std::string label;
};

// the conjectured maximizer families at order n: K_{floor(n/3)} v N and its
// complement, plus the ceil family when n = 2 mod 3
std::vector<ConjecturedFamily> conjectured_families(int n) {
    std::vector<ConjecturedFamily> fams;
    auto add_pair = [&](int q) {
        const StaircaseMatrix split = split_graph_staircase(n, q);
        const DenseMatrix d = split.to_dense();
        fams.push_back({fingerprint(d), "K" + std::to_string(q) + "vN" + std::to_string(n - q)});
        fams.push_back({fingerprint(complement_dense(d)),
                        "K" + std::to_string(n - q) + "+N" + std::to_string(q)});
    };
    add_pair(n / 3);
    if (n % 3 == 2) add_pair(n / 3 + 1);
    return fams;
}

std::string family_label(const Fingerprint& fp, const std::vector<ConjecturedFamily>& fams) {
    for (const auto& f : fams)
        if (f.fp == fp) return f.label;
    return "unidentified";
}

GraphDescription describe(const DenseMatrix& adj, const std::vector<ConjecturedFamily>& fams) {
    GraphDescription d;
    const Fingerprint fp = fingerprint(adj);
    d.graph6 = graph6_encode(adj);
    d.degrees = fp.degrees;
    d.family = family_label(fp, fams);
    if (auto st = staircase_from_graph(adj)) d.profile = st->profile();
    return d;
}

void run_chunked(long long total, int workers,
                 const std::function<void(long long, long long, int)>& body) {
    workers = std::max(1, std::min({workers, 64, static_cast<int>(total)}));
    if (workers == 1) {
        body(0, total, 0);
        return;
    }
    std::vector<std::thread> threads;
    const long long step = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long long lo = w * step, hi = std::min(total, lo + step);
        if (lo >= hi) break;
        threads.emplace_back([&body, lo, hi, w] { body(lo, hi, w); });
    }
    for (auto& t : threads) t.join();
}

struct SweepAccum {
    double best = -1.0;
    std::vector<std::pair<long long, double>> near;  // (index, value) within slack of best

    void add(long long idx, double value, double slack) {
        if (value > best) {
            best = value;
            std::erase_if(near, [&](const auto& p) { return p.second < best - slack; });
        }
        if (value >= best - slack) near.emplace_back(idx, value);
    }

    void merge(const SweepAccum& o, double slack) {
        best = std::max(best, o.best);
        for (const auto& p : o.near)
            if (p.second >= best - slack) near.push_back(p);
        std::erase_if(near, [&](const auto& p) { return p.second < best - slack; });
    }
};

void fill_mask_adjacency(long long mask, int n, DenseMatrix& adj) {
    std::fill(adj.a.begin(), adj.a.end(), 0.0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) {
                adj.at(i, j) = 1.0;
                adj.at(j, i) = 1.0;
            }
}

}  // namespace

Fingerprint fingerprint(const DenseMatrix& adj) {
    Fingerprint fp;
    fp.degrees.resize(adj.n, 0);
    for (int i = 0; i < adj.n; ++i)
        for (int j = 0; j < adj.n; ++j)
            if (j != i && adj.at(i, j) > 0.5) ++fp.degrees[i];
    std::sort(fp.degrees.begin(), fp.degrees.end(), std::greater<int>());
    for (double ev : sym_eigen_all(adj)) fp.spectrum_millionths.push_back(std::llround(ev * 1e6));
    return fp;
}

VerifyReport verify_bruteforce(int n, bool allow_n8, int workers) {
    if (n < 3 || n > (allow_n8 ? 8 : 7))
        throw std::invalid_argument("verify_bruteforce: order must be in [3,7]" +
                                    std::string(allow_n8 ? " (8 opted in)" : ""));
    const auto t0 = clock_type::now();
    const int bits = n * (n - 1) / 2;
    const long long total = 1LL << bits;
    const double slack = 1e-9;

    std::vector<SweepAccum> acc(std::max(1, workers));
    run_chunked(total, workers, [&](long long lo, long long hi, int slot) {
        DenseMatrix adj(n), comp(n);
        std::vector<double> buf, evals;
        SweepAccum local;
        for (long long mask = lo; mask < hi; ++mask) {
            fill_mask_adjacency(mask, n, adj);
            buf = adj.a;
            detail::jacobi_eigen(buf, n, evals);
            double sum = evals.back();
            comp = complement_dense(adj);
            buf = comp.a;
            detail::jacobi_eigen(buf, n, evals);
            sum += evals.back();
            local.add(mask, sum, 2 * slack);
        }
        acc[slot] = std::move(local);
    });
    SweepAccum all;
    for (auto& a : acc) all.merge(a, 2 * slack);
    std::sort(all.near.begin(), all.near.end());

    VerifyReport rep;
    rep.n = n;
    rep.search_space = "all_graphs";
    rep.max_value = all.best;
    rep.instances_checked = total;
    const Rho0Breakdown r0 = rho0(n);
    rep.rho0_expected = r0.rho0;
    rep.gap = rep.max_value - r0.rho0;

    const auto fams = conjectured_families(n);
    std::set<Fingerprint> expected, seen;
    for (const auto& f : fams) expected.insert(f.fp);

    DenseMatrix adj(n);
    for (const auto& [mask, value] : all.near) {
        if (value < all.best - slack) continue;
        fill_mask_adjacency(mask, n, adj);
        const Fingerprint fp = fingerprint(adj);
        if (seen.insert(fp).second) rep.arg_max.push_back(describe(adj, fams));
    }
    if (std::abs(rep.gap) > 1e-9) {
        for (auto& d : rep.arg_max) {
            GraphDescription c = d;
            c.note = "max differs from rho0 by " + std::to_string(rep.gap);
            rep.counterexamples.push_back(std::move(c));
        }
    } else {
        for (auto& d : rep.arg_max)
            if (d.family == "unidentified") {
                GraphDescription c = d;
                c.note = "maximizer outside the conjectured families";
                rep.counterexamples.push_back(std::move(c));
            }
        if (seen != expected) {
            for (const auto& f : fams)
                if (!seen.count(f.fp)) {
                    GraphDescription c;
                    c.family = f.label;
                    c.note = "conjectured family not among the maximizers";
                    rep.counterexamples.push_back(std::move(c));
                }
        }
    }
    rep.pass = rep.counterexamples.empty() && std::abs(rep.gap) <= 1e-9 && seen == expected;
    rep.elapsed = seconds_since(t0);
    return rep;
}

VerifyReport verify_staircase(int n, int workers) {
    const auto t0 = clock_type::now();
    const double slack = 1e-9;

    long long count = 0;
    double best = -1.0;
    // candidates within 2*slack of the running best, in enumeration order
    std::vector<std::pair<std::vector<int>, double>> near;

    auto value_of = [&](const StaircaseMatrix& a) {
        double sum = sym_eigen_max(a.to_dense());
        sum += sym_eigen_max(reflect_complement(a).to_dense());
        return sum;
    };
    auto note = [&](const StaircaseMatrix& a, double v) {
        if (v > best) {
            best = v;
            std::erase_if(near, [&](const auto& p) { return p.second < best - 2 * slack; });
        }
        if (v >= best - 2 * slack) near.emplace_back(a.profile(), v);
    };

    if (workers > 1 && n <= 20) {
        std::vector<std::vector<int>> profiles;
        for_each_sstar_sym(n, [&](const StaircaseMatrix& a) { profiles.push_back(a.profile()); });
        count = static_cast<long long>(profiles.size());
        std::vector<double> values(profiles.size());
        run_chunked(count, workers, [&](long long lo, long long hi, int) {
            for (long long i = lo; i < hi; ++i)
                values[i] = value_of(StaircaseMatrix::from_canonical_unchecked(profiles[i]));
        });
        for (size_t i = 0; i < profiles.size(); ++i)
            note(StaircaseMatrix::from_canonical_unchecked(profiles[i]), values[i]);
    } else {
        for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
            ++count;
            note(a, value_of(a));
        });
    }

    VerifyReport rep;
    rep.n = n;
    rep.search_space = "staircase_sym";
    rep.max_value = best;
    rep.instances_checked = count;
    const Rho0Breakdown r0 = rho0(n);
    rep.rho0_expected = r0.rho0;
    rep.gap = rep.max_value - r0.rho0;

    const auto fams = conjectured_families(n);
    std::set<Fingerprint> expected, seen;
    for (const auto& f : fams) expected.insert(f.fp);

    for (const auto& [mu, value] : near) {
        if (value < best - slack) continue;
        const auto a = StaircaseMatrix::from_canonical_unchecked(mu);
        const DenseMatrix d = a.to_dense();
        const Fingerprint fp = fingerprint(d);
        if (seen.insert(fp).second) {
            GraphDescription g = describe(d, fams);
            g.profile = mu;
            rep.arg_max.push_back(std::move(g));
        }
    }

    if (std::abs(rep.gap) > 1e-9) {
        for (auto& d : rep.arg_max) {
            GraphDescription c = d;
            c.note = "max differs from rho0 by " + std::to_string(rep.gap);
            rep.counterexamples.push_back(std::move(c));
        }
    } else {
        for (auto& d : rep.arg_max)
            if (d.family == "unidentified") {
                GraphDescription c = d;
                c.note = "maximizer outside the conjectured families";
                rep.counterexamples.push_back(std::move(c));
            }
        for (const auto& f : fams)
            if (!seen.count(f.fp)) {
                GraphDescription c;
                c.family = f.label;
                c.note = "conjectured family not among the maximizers";
                rep.counterexamples.push_back(c);
            }
    }

    bool cross_ok = true;
    if (n <= 7) {
        const VerifyReport brute = verify_bruteforce(n, false, workers);
        cross_ok = std::abs(brute.max_value - rep.max_value) <= 1e-9;
        std::set<std::string> bf, sf;
        for (const auto& d : brute.arg_max) bf.insert(d.family);
        for (const auto& d : rep.arg_max) sf.insert(d.family);
        if (bf != sf) cross_ok = false;
        if (!cross_ok) {
            GraphDescription c;
            c.note = "staircase sweep disagrees with the all-graphs sweep (max " +
                     std::to_string(rep.max_value) + " vs " + std::to_string(brute.max_value) + ")";
            rep.counterexamples.push_back(c);
        }
    }

    rep.pass = rep.counterexamples.empty() && std::abs(rep.gap) <= 1e-9 && seen == expected && cross_ok;
    rep.elapsed = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// lemma suite

namespace {

struct CheckCtx {
    LemmaCheck check;

    explicit CheckCtx(std::string id, std::string desc) {
        check.id = std::move(id);
        check.description = std::move(desc);
    }

    void fail(const std::string& msg) {
        if (check.pass) {
            check.pass = false;
            check.first_failure = msg;
        }
    }

    void tick() { ++check.instances; }
};

std::string where(int n, const StaircaseMatrix& a) {
    return "n=" + std::to_string(n) + " mu=" + profile_str(a.profile());
}

}  // namespace

LemmaSuiteReport lemma_suite(int n_max) {
    if (n_max < 3 || n_max > 14)
        throw std::invalid_argument("lemma_suite: n_max must be in [3,14]");
    LemmaSuiteReport rep;
    rep.n_max = n_max;

    // row-sum bound soundness: rho(A) <= phi_ell(A) for every ell, symmetric sweep
    {
        CheckCtx ctx("rowsum-bound-soundness", "rho(A) <= phi_ell(A) for all ell (sym sweep)");
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                ctx.tick();
                const double rho = sym_eigen_max(a.to_dense());
                for (int ell = 1; ell <= n; ++ell)
                    if (rho > phi_ell(a, ell) + 1e-8) {
                        ctx.fail(where(n, a) + " ell=" + std::to_string(ell));
                        return;
                    }
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // numeric equality rho = phi iff a structural witness exists
    {
        CheckCtx ctx("equality-iff-witness", "|rho-phi| <= 1e-8 iff structural witness (sym sweep)");
        for (int n = 3; n <= std::min(10, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                ctx.tick();
                const bool numeric = rho_phi_equal(a);
                const bool witness = equality_case(a).has_value();
                if (numeric != witness)
                    ctx.fail(where(n, a) + (numeric ? " numeric equality without witness"
                                                    : " witness without numeric equality"));
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // parameter inequalities v <= c, 0 < s <= 2c - v over all of S*(n)
    {
        CheckCtx ctx("parameter-inequalities", "v <= c and 0 < s <= 2c-v (S* sweep)");
        for (int n = 3; n <= std::min(10, n_max); ++n) {
            for_each_sstar(n, [&](const StaircaseMatrix& a) {
                ctx.tick();
                const ParamTriple p = params(a);
                if (!(p.v <= p.c && 0 < p.s && p.s <= 2 * p.c - p.v)) ctx.fail(where(n, a));
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // pinching: c-1 < phi <= c, with phi = c iff s+v = 2c
    {
        CheckCtx ctx("phi-pinching", "c-1 < phi(A) <= c with phi = c iff s+v = 2c");
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                ctx.tick();
                const ParamTriple p = params(a);
                const double f = phi(a);
                if (!(p.c - 1 < f && f <= p.c + 1e-12)) {
                    ctx.fail(where(n, a) + " phi out of (c-1, c]");
                    return;
                }
                const bool ceiling = (p.s + p.v == 2 * p.c);
                if (ceiling != (f == static_cast<double>(p.c)))
                    ctx.fail(where(n, a) + " phi = c iff s+v = 2c violated");
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // phi strictly increasing in v and in s
    {
        CheckCtx ctx("phi-monotonicity", "phi grid monotone in v (fixed c,s) and s (fixed c,v)");
        for (int c = 1; c <= 12; ++c)
            for (int v = 0; v <= c; ++v)
                for (int s = 1; s <= 2 * c - v; ++s) {
                    ctx.tick();
                    const double f = phi_from_params(c, v, s);
                    if (v + 1 <= c && s <= 2 * c - (v + 1) &&
                        !(phi_from_params(c, v + 1, s) > f + 1e-10))
                        ctx.fail("c=" + std::to_string(c) + " v=" + std::to_string(v) +
                                 " s=" + std::to_string(s) + " (v step)");
                    if (s + 1 <= 2 * c - v && !(phi_from_params(c, v, s + 1) > f + 1e-10))
                        ctx.fail("c=" + std::to_string(c) + " v=" + std::to_string(v) +
                                 " s=" + std::to_string(s) + " (s step)");
                }
        rep.checks.push_back(ctx.check);
    }

    // equality instances are split-graph pairs with the predicted {c, cbar}
    {
        CheckCtx ctx("equality-split-classification",
                     "rho+rhobar = phi+phibar forces a split pair with the stated {c,cbar}");
        for (int n = 3; n <= std::min(10, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                const StaircaseMatrix abar = reflect_complement(a);
                const double lhs = sym_eigen_max(a.to_dense()) + sym_eigen_max(abar.to_dense());
                const double rhs = phi(a) + phi(abar);
                if (std::abs(lhs - rhs) > 1e-8) return;
                ctx.tick();
                int q_found = -1;
                for (int q = 1; q <= n - 2 && q_found < 0; ++q) {
                    const StaircaseMatrix split = split_graph_staircase(n, q);
                    if (a == split || a == reflect_complement(split)) q_found = q;
                }
                if (q_found < 0) {
                    ctx.fail(where(n, a) + " equality instance is not a split pair");
                    return;
                }
                const auto p = full_params(a);
                const double rho_split = split_rho(n, q_found).first;
                const long long cpred =
                    static_cast<long long>(std::ceil(rho_split - 1e-9));
                std::multiset<long long> got{p.c, p.cbar},
                    want{n - q_found - 1, cpred};
                if (got != want) ctx.fail(where(n, a) + " {c,cbar} mismatch");
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // s + sbar bound, tight when vbar = n-c-1
    {
        CheckCtx ctx("s-sum-bound", "s+sbar <= bound when c+cbar >= n; equality if vbar = n-c-1");
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (p.c + p.cbar < n) return;
                ctx.tick();
                const auto [bound, tight] = s_sum_bound(p, n);
                if (p.s + p.sbar > bound + 1e-9) {
                    ctx.fail(where(n, a) + " s+sbar exceeds the bound");
                    return;
                }
                if (p.vbar == n - p.c - 1 && !tight)
                    ctx.fail(where(n, a) + " equality clause vbar = n-c-1 not tight");
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // global cap c + cbar < 4n/3 + 1/3
    {
        CheckCtx ctx("c-sum-cap", "3(c+cbar) <= 4n on the symmetric sweep");
        for (int n = 3; n <= std::min(14, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                ctx.tick();
                const ParamSix p = full_params(a);
                if (3 * (p.c + p.cbar) > 4 * n) ctx.fail(where(n, a));
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // c + cbar >= rho0 forces the floor dichotomy
    {
        CheckCtx ctx("c-sum-dichotomy",
                     "c+cbar >= rho0 implies c+cbar in {floor(4n/3), floor(4n/3)-1}");
        for (int n = 3; n <= std::min(14, n_max); ++n) {
            const double r0 = rho0(n).rho0;
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                const int cc = p.c + p.cbar;
                if (cc < r0 - 1e-9) return;
                ctx.tick();
                const int fl = 4 * n / 3;
                if (!(cc >= n && (cc == fl || cc == fl - 1))) ctx.fail(where(n, a));
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // the (3k+2, 4k+1) case pins exactly two clique+nulls matrices
    {
        CheckCtx ctx("case-3k2-classification",
                     "qualifying (3k+2,4k+1) instances are K_{2k+2}+N_k or K_{2k+1}+N_{k+1}");
        for (int n = 5; n <= std::min(14, n_max); n += 3) {
            const int k = (n - 2) / 3;
            const double r0 = rho0(n).rho0;
            std::set<std::vector<int>> found;
            const std::set<std::vector<int>> want{
                clique_plus_nulls_staircase(n, 2 * k + 2).profile(),
                clique_plus_nulls_staircase(n, 2 * k + 1).profile()};
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (p.c + p.cbar != 4 * k + 1) return;
                if (p.v < n - p.cbar) return;
                const double sum =
                    sym_eigen_max(a.to_dense()) + sym_eigen_max(reflect_complement(a).to_dense());
                if (sum < r0 - 1e-9) return;
                ctx.tick();
                if (!want.count(a.profile())) {
                    ctx.fail(where(n, a) + " qualifying instance outside the stated pair");
                    return;
                }
                found.insert(a.profile());
            });
            if (found != want)
                ctx.fail("n=" + std::to_string(n) +
                         " qualifying set differs from {K_{2k+2}+N_k, K_{2k+1}+N_{k+1}}");
        }
        rep.checks.push_back(ctx.check);
    }

    // the capped-vbar regime keeps phi + phibar strictly below rho0
    {
        CheckCtx ctx("vbar-capped-strict", "2cbar-sbar < n-c-1 and vbar = 2cbar-sbar force phi sum < rho0");
        for (int n = 3; n <= std::min(10, n_max); ++n) {
            const double r0 = rho0(n).rho0;
            for_each_sstar(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (n % 3 == 2 && p.c + p.cbar == 4 * (n / 3) + 1) return;
                if (!(2 * p.cbar - p.sbar < n - p.c - 1)) return;
                if (p.vbar != 2 * p.cbar - p.sbar) return;
                ctx.tick();
                const double sum = phi_from_params(p.c, p.v, p.s) +
                                   phi_from_params(p.cbar, p.vbar, p.sbar);
                if (!(sum < r0 - 1e-9)) ctx.fail(where(n, a));
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // closed form of E+F and the positivity of the quartic's inner term
    {
        CheckCtx ctx("ef-closed-form", "E+F closed form and (2x-v-vbar+2)^2 > E+F at x = (4n-5)/3");
        for (int n = 3; n <= std::min(10, n_max); ++n) {
            for_each_sstar(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (3 * (p.c + p.cbar) < 4 * n - 5) return;
                if (p.v != n - p.cbar || p.vbar != n - p.c - 1) return;
                ctx.tick();
                const auto [e, f] = ef_terms(p);
                const double closed = e_plus_f_closed(n, p.c, p.cbar);
                if (std::abs(e + f - closed) > 1e-9) {
                    ctx.fail(where(n, a) + " E+F closed form mismatch");
                    return;
                }
                const double x0 = (4.0 * n - 5.0) / 3.0;
                const double u = 2.0 * x0 - p.v - p.vbar + 2.0;
                if (!(u * u - (e + f) > 1e-9)) ctx.fail(where(n, a) + " inner positivity fails");
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // g increasing on [(4n-5)/3, inf) for normalized fixtures
    {
        CheckCtx ctx("g-increasing", "g increasing past (4n-5)/3 on normalized fixtures");
        for (int n = 3; n <= std::min(10, n_max); ++n) {
            for_each_sstar(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (3 * (p.c + p.cbar) < 4 * n - 5) return;
                if (p.v != n - p.cbar || p.vbar != n - p.c - 1) return;
                ctx.tick();
                const Polynomial g = g_quartic(p);
                const double x0 = (4.0 * n - 5.0) / 3.0;
                const double xs[] = {x0, x0 + 0.6, x0 + 1.7, x0 + 3.1, x0 + 2.0 * n};
                for (int i = 0; i + 1 < 5; ++i)
                    if (!(g.eval(xs[i + 1]) > g.eval(xs[i]))) {
                        ctx.fail(where(n, a) + " g not increasing");
                        return;
                    }
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // sign of g(rho0) on the five parameterized (n, c, cbar) cases
    {
        CheckCtx ctx("g-zero-classification",
                     "g(rho0) >= 0 with equality exactly for (3k,2k-1,2k) and (3k+1,2k,2k)");
        auto check_fixture = [&](int n, int c, int cbar, int v, int vbar, int s, int sbar,
                                 bool expect_zero) {
            ctx.tick();
            ParamSix p;
            p.c = c;
            p.v = v;
            p.s = s;
            p.cbar = cbar;
            p.vbar = vbar;
            p.sbar = sbar;
            const long long y = c - cbar;
            p.T = y * y + 2 * y;
            const double r0 = rho0(n).rho0;
            const auto [e, f] = ef_terms(p);
            const double u0 = 2.0 * r0 - v - vbar + 2.0;
            const double scale = u0 * u0 * u0 * u0 + 2.0 * (e + f) * u0 * u0 + (e - f) * (e - f);
            const double tol = 1e-6 * std::max(1.0, scale);
            const double gval = g_quartic(p).eval(r0);
            const std::string tag = "case n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                    " cbar=" + std::to_string(cbar) + " s=" + std::to_string(s);
            if (expect_zero) {
                if (std::abs(gval) > tol) ctx.fail(tag + " expected g(rho0) = 0");
            } else {
                if (!(gval > tol)) ctx.fail(tag + " expected g(rho0) > 0");
            }
        };
        for (int k = 1; k <= 8; ++k) {
            {  // (3k, 2k-1, 2k): s+sbar = 4k-2, zero exactly at s = 3k-2
                const int n = 3 * k;
                for (int s = std::max(1, k - 2); s <= 3 * k - 2; ++s) {
                    const int sbar = 4 * k - 2 - s;
                    if (sbar < 1 || sbar > 3 * k) continue;
                    check_fixture(n, 2 * k - 1, 2 * k, k, k, s, sbar, s == 3 * k - 2);
                }
            }
            if (k >= 2) {  // (3k, 2k, 2k): s+sbar = k
                const int n = 3 * k;
                for (int s = 1; s <= k - 1; ++s)
                    check_fixture(n, 2 * k, 2 * k, k, k - 1, s, k - s, false);
            }
            if (k >= 3) {  // (3k, 2k-1, 2k+1): s+sbar = k-1
                const int n = 3 * k;
                for (int s = 1; s <= k - 2; ++s)
                    check_fixture(n, 2 * k - 1, 2 * k + 1, k - 1, k, s, k - 1 - s, false);
            }
            {  // (3k+1, 2k, 2k): s+sbar = 5k-1, zero exactly at s = 3k-1
                const int n = 3 * k + 1;
                for (int s = std::max(1, 2 * k - 1); s <= 3 * k - 1; ++s) {
                    const int sbar = 5 * k - 1 - s;
                    if (sbar < 1 || sbar > 3 * k) continue;
                    check_fixture(n, 2 * k, 2 * k, k + 1, k, s, sbar, s == 3 * k - 1);
                }
            }
            if (k >= 2) {  // (3k+1, 2k-1, 2k+1): s+sbar = 5k-2, never zero
                const int n = 3 * k + 1;
                for (int s = std::max(1, 2 * k - 3); s <= 3 * k - 2; ++s) {
                    const int sbar = 5 * k - 2 - s;
                    if (sbar < 1 || sbar > 3 * k + 1) continue;
                    check_fixture(n, 2 * k - 1, 2 * k + 1, k, k + 1, s, sbar, false);
                }
            }
            {  // (3k+1, 2k, 2k+1): s+sbar = 2k
                const int n = 3 * k + 1;
                for (int s = 1; s <= 2 * k - 1; ++s)
                    check_fixture(n, 2 * k, 2 * k + 1, k, k, s, 2 * k - s, false);
            }
            {  // (3k+2, 2k, 2k+2): s+sbar = 3k
                const int n = 3 * k + 2;
                for (int s = 1; s <= 3 * k - 1; ++s)
                    check_fixture(n, 2 * k, 2 * k + 2, k, k + 1, s, 3 * k - s, false);
            }
        }
        rep.checks.push_back(ctx.check);
    }

    // lemma33 contract
    {
        CheckCtx ctx("lemma33-contract", "lemma33 parameter tuple and phi monotonicity");
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (p.c + p.cbar < n) return;
                if (!(p.vbar < std::min(2 * p.cbar - p.sbar, n - p.c - 1))) return;
                ctx.tick();
                try {
                    const TransformResult tr = lemma33(a);
                    const ParamSix& q = tr.trace.after;
                    if (!(q.c == p.c && q.v == p.v && q.s == p.s && q.cbar == p.cbar &&
                          q.vbar == std::min(2 * q.cbar - q.sbar, n - q.c - 1) &&
                          q.sbar >= p.sbar)) {
                        ctx.fail(where(n, a) + " parameter tuple");
                        return;
                    }
                    const double phia = phi_from_params(p.c, p.v, p.s);
                    const double phia1 = phi_from_params(q.c, q.v, q.s);
                    const double phib = phi_from_params(p.cbar, p.vbar, p.sbar);
                    const double phib1 = phi_from_params(q.cbar, q.vbar, q.sbar);
                    if (std::abs(phia - phia1) > 1e-10)
                        ctx.fail(where(n, a) + " phi(A) changed");
                    else if (!(phib1 > phib + 1e-10))
                        ctx.fail(where(n, a) + " phi(Abar) not strictly larger");
                } catch (const std::exception& e) {
                    ctx.fail(where(n, a) + " threw: " + e.what());
                }
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // lemma34 contract (every admissible v_target)
    {
        CheckCtx ctx("lemma34-contract", "lemma34 conserves s+v, fixes barred triple, phi iff");
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            for_each_sstar(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (p.vbar != n - p.c - 1) return;
                if (!(p.v > n - p.cbar)) return;
                for (int vt = n - p.cbar; vt < p.v; ++vt) {
                    ctx.tick();
                    try {
                        const TransformResult tr = lemma34(a, vt);
                        const ParamSix& q = tr.trace.after;
                        if (!(q.c == p.c && q.v == vt && q.s + q.v == p.s + p.v &&
                              q.cbar == p.cbar && q.vbar == p.vbar && q.sbar == p.sbar)) {
                            ctx.fail(where(n, a) + " vt=" + std::to_string(vt) + " tuple");
                            return;
                        }
                        const double phia = phi_from_params(p.c, p.v, p.s);
                        const double phia2 = phi_from_params(q.c, q.v, q.s);
                        const bool ceiling = (p.v + p.s == 2 * p.c);
                        if (ceiling ? std::abs(phia2 - phia) > 1e-10
                                    : !(phia2 > phia + 1e-10)) {
                            ctx.fail(where(n, a) + " vt=" + std::to_string(vt) + " phi iff");
                            return;
                        }
                    } catch (const std::exception& e) {
                        ctx.fail(where(n, a) + " vt=" + std::to_string(vt) + " threw: " + e.what());
                        return;
                    }
                }
            });
        }
        rep.checks.push_back(ctx.check);
    }

    // lemma35 contract
    {
        CheckCtx ctx("lemma35-contract", "lemma35 tuple, conservation, and phi monotonicity");
        long long floor_cases = 0;  // stopped at v = n-cbar with 2c-s still above
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            for_each_sstar(n, [&](const StaircaseMatrix& a) {
                const ParamSix p = full_params(a);
                if (!(n - p.cbar < p.v)) return;
                if (p.vbar != 2 * p.cbar - p.sbar) return;
                ctx.tick();
                try {
                    const TransformResult tr = lemma35(a);
                    const ParamSix& q = tr.trace.after;
                    const bool at_target = q.v == 2 * q.c - q.s;
                    const bool at_floor = q.v == n - p.cbar;
                    if (!(q.c == p.c && (at_target || at_floor) && q.s + q.v >= p.s + p.v &&
                          q.cbar == p.cbar && q.vbar == p.vbar && q.sbar == p.sbar)) {
                        ctx.fail(where(n, a) + " tuple");
                        return;
                    }
                    if (!at_target && 2 * q.c - q.s > n - p.cbar) ++floor_cases;
                    const double phia = phi_from_params(p.c, p.v, p.s);
                    const double phia2 = phi_from_params(q.c, q.v, q.s);
                    const double phib = phi_from_params(p.cbar, p.vbar, p.sbar);
                    const double phib2 = phi_from_params(q.cbar, q.vbar, q.sbar);
                    if (phia2 < phia - 1e-10 || phib2 < phib - 1e-10)
                        ctx.fail(where(n, a) + " phi decreased");
                } catch (const std::exception& e) {
                    ctx.fail(where(n, a) + " threw: " + e.what());
                }
            });
        }
        if (floor_cases > 0)
            ctx.check.note = std::to_string(floor_cases) +
                             " instance(s) stopped at the n-cbar floor before v reached 2c-s";
        rep.checks.push_back(ctx.check);
    }

    // rewrite-chain inequalities on the symmetric sweep
    {
        CheckCtx ctx("chain-inequalities", "normalize_chain keeps phi sums nondecreasing");
        for (int n = 3; n <= std::min(12, n_max); ++n) {
            const double r0 = rho0(n).rho0;
            for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
                const ParamSix p0 = full_params(a);
                if (p0.c + p0.cbar < n) return;
                if (n % 3 == 2 && p0.c + p0.cbar == 4 * (n / 3) + 1) return;
                ctx.tick();
                try {
                    const ChainResult ch = normalize_chain(a);
                    const ParamSix po = full_params(ch.oriented);
                    const double rho_sum = sym_eigen_max(a.to_dense()) +
                                           sym_eigen_max(reflect_complement(a).to_dense());
                    double prev = phi_from_params(po.c, po.v, po.s) +
                                  phi_from_params(po.cbar, po.vbar, po.sbar);
                    if (rho_sum > prev + 1e-8) {
                        ctx.fail(where(n, a) + " rho sum above phi sum");
                        return;
                    }
                    for (const auto& t : ch.traces) {
                        const double next = phi_from_params(t.after.c, t.after.v, t.after.s) +
                                            phi_from_params(t.after.cbar, t.after.vbar, t.after.sbar);
                        if (next < prev - 1e-10) {
                            ctx.fail(where(n, a) + " phi sum decreased in " + t.lemma);
                            return;
                        }
                        prev = next;
                    }
                    const ParamSix pf = full_params(ch.result);
                    if (ch.vbar_capped_regime) {
                        if (!(prev < r0 - 1e-9))
                            ctx.fail(where(n, a) + " flagged regime but phi sum >= rho0");
                    } else if (pf.v != n - pf.cbar || pf.vbar != n - pf.c - 1) {
                        ctx.fail(where(n, a) + " final tuple not normalized");
                    } else if (prev >= r0 - 1e-9 &&
                               !(n % 3 == 2 && pf.c == 2 * (n / 3) + 1 && pf.cbar == pf.c)) {
                        // qualifying chains: g(rho0) >= 0 and the zero classification
                        const double gval = g_quartic(pf).eval(r0);
                        const auto [e, f] = ef_terms(pf);
                        const double u0 = 2.0 * r0 - pf.v - pf.vbar + 2.0;
                        const double scale =
                            u0 * u0 * u0 * u0 + 2.0 * (e + f) * u0 * u0 + (e - f) * (e - f);
                        const double tol = 1e-6 * std::max(1.0, scale);
                        const int k = n / 3;
                        const bool zero_case =
                            (n % 3 == 0 && pf.c == 2 * k - 1 && pf.cbar == 2 * k) ||
                            (n % 3 == 1 && pf.c == 2 * k && pf.cbar == 2 * k);
                        if (gval < -tol)
                            ctx.fail(where(n, a) + " g(rho0) < 0 on a qualifying chain");
                        else if (zero_case != (std::abs(gval) <= tol))
                            ctx.fail(where(n, a) + " g(rho0) zero classification");
                    }
                } catch (const std::exception& e) {
                    ctx.fail(where(n, a) + " threw: " + e.what());
                }
            });
        }
        rep.checks.push_back(ctx.check);
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const LemmaCheck& c) { return c.pass; });
    return rep;
}

// ---------------------------------------------------------------------------
// final-case certificate

FinalCaseInstance build_final_case(int k, int s, int a) {
    if (k < 1) throw std::invalid_argument("build_final_case: k >= 1");
    if (s < 1 || s > 3 * k) throw std::invalid_argument("build_final_case: s in [1, 3k]");
    if (a < -k * (k - 1) || a > 0)
        throw std::invalid_argument("build_final_case: a in [-k(k-1), 0]");
    FinalCaseInstance inst;
    inst.k = k;
    inst.s = s;
    inst.a = a;
    inst.m1 = DenseMatrix::from_rows(
        {{2.0 * k, static_cast<double>(s)}, {1.0, static_cast<double>(-k)}});
    inst.m2 = DenseMatrix::from_rows({{k - 1.0, static_cast<double>(k), 3.0 * k + 1 - s - a},
                                      {k + 1.0, static_cast<double>(k), static_cast<double>(a)},
                                      {1.0, 0.0, 0.0}});
    inst.m = kron_sum(inst.m1, inst.m2);
    inst.h = char_poly(inst.m2);
    DenseMatrix shifted = inst.m;
    for (int i = 0; i < 6; ++i) shifted.at(i, i) -= (4.0 * k + 1.0);
    for (double& x : shifted.a) x = -x;
    inst.det_at_4k1 = determinant(shifted);
    return inst;
}

CertificateReport final_case_certificate(int k_max, int workers) {
    if (k_max < 1) throw std::invalid_argument("final_case_certificate: k_max >= 1");
    const auto t0 = clock_type::now();
    CertificateReport rep;
    rep.k_max = k_max;
    rep.rows.resize(k_max);

    run_chunked(k_max, workers, [&](long long lo, long long hi, int) {
        for (long long kk = lo; kk < hi; ++kk) {
            const int k = static_cast<int>(kk) + 1;
            CertificateRow row;
            row.k = k;
            row.min_margin = std::numeric_limits<double>::infinity();
            auto fail = [&](int s, int a, const std::string& msg) {
                if (row.pass) {
                    row.pass = false;
                    row.first_failure = "k=" + std::to_string(k) + " s=" + std::to_string(s) +
                                        " a=" + std::to_string(a) + ": " + msg;
                }
            };
            auto margin = [&](double m) {
                row.min_margin = std::min(row.min_margin, m);
                if (m < 1e-6) ++row.thin_count;
                return m > 1e-9;
            };
            for (int s = 1; s <= 3 * k; ++s) {
                for (int a = -k * (k - 1); a <= 0; ++a) {
                    ++row.instances;
                    const FinalCaseInstance inst = build_final_case(k, s, a);
                    // (i) determinant positivity at 4k+1
                    if (!margin(inst.det_at_4k1)) fail(s, a, "det((4k+1)I - M) not positive");
                    // (ii) sign pattern of h
                    const double h0 = inst.h.eval(0.0);
                    const double h2k = inst.h.eval(2.0 * k);
                    const double h2k1 = inst.h.eval(2.0 * k + 1.0);
                    if (!margin(h0)) fail(s, a, "h(0) not positive");
                    if (!margin(-h2k)) fail(s, a, "h(2k) not negative");
                    if (!margin(h2k1)) fail(s, a, "h(2k+1) not positive");
                    // (iii) alpha bound and beta interleaving
                    const double a1 = rho_r(inst.m1);
                    const double bound1 = inst.m1.inf_norm() + 1.0;
                    const auto alphas = all_real_roots(char_poly(inst.m1), -bound1, bound1);
                    const double a2 = alphas.front();
                    if (a1 > 2.0 * k + 1.0 + 1e-9) fail(s, a, "rho_r(M1) above 2k+1");
                    const double bound2 = inst.m2.inf_norm() + 1.0;
                    const auto betas = all_real_roots(inst.h, -bound2, bound2);
                    if (betas.size() != 3) {
                        fail(s, a, "h does not have three real roots");
                        continue;
                    }
                    const double b3 = betas[0], b2 = betas[1], b1 = betas[2];
                    bool inter = margin(-b3) && margin(b2) && margin(2.0 * k - b2) &&
                                 margin(b1 - 2.0 * k) && margin(2.0 * k + 1.0 - b1);
                    if (!inter) fail(s, a, "beta interleaving fails");
                    // (iv) rho_r(M) < 4k+1, both routes
                    const double rm = rho_r(inst.m);
                    if (!margin(4.0 * k + 1.0 - rm)) fail(s, a, "rho_r(M) not below 4k+1");
                    if (std::abs(rm - (a1 + b1)) > 1e-8)
                        fail(s, a, "rho_r(M) != rho_r(M1) + rho_r(M2)");
                    const double second = std::max(a1 + b2, b1 + a2);
                    if (!margin(4.0 * k + 1.0 - second))
                        fail(s, a, "second largest zero not below 4k+1");
                }
            }
            const long long expect = 3LL * k * (static_cast<long long>(k) * (k - 1) + 1);
            if (row.instances != expect) fail(0, 0, "instance count mismatch");
            rep.rows[kk] = std::move(row);
        }
    });

    rep.all_pass = true;
    for (const auto& r : rep.rows) {
        rep.instances_total += r.instances;
        if (!r.pass) rep.all_pass = false;
        rep.thin_total += r.thin_count;
    }
    rep.elapsed = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// rooted bound check

std::optional<std::string> check_rooted_hypotheses(const DenseMatrix& c, const Partition& pi,
                                                   const DenseMatrix& m) {
    pi.validate(c.n);
    const int l = m.n;
    if (static_cast<int>(pi.blocks.size()) != l)
        return "partition block count differs from the target order";
    const auto mrows = m.row_sums();
    const auto crows = c.row_sums();
    for (int a = 0; a < l; ++a) {
        for (int b = 0; b < l - 1; ++b) {
            double worst = 0.0;
            for (int i : pi.blocks[a]) {
                double sum = 0.0;
                for (int j : pi.blocks[b]) sum += c.at(i, j);
                worst = std::max(worst, sum);
            }
            if (worst > m.at(a, b) + 1e-9)
                return "block (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                       ") row sum " + std::to_string(worst) + " exceeds target entry";
        }
        double worst = 0.0;
        for (int i : pi.blocks[a]) worst = std::max(worst, crows[i]);
        if (worst > mrows[a] + 1e-9)
            return "block " + std::to_string(a + 1) + " total row sum exceeds target";
    }
    return std::nullopt;
}

RootedBoundReport rooted_bound_check(const StaircaseMatrix& a) {
    const int n = a.order();
    if (n % 3 != 2) throw std::invalid_argument("rooted_bound_check: order must be 3k+2");
    const int k = n / 3;
    const ParamSix p = full_params(a);
    if (!a.is_symmetric() || p.c != 2 * k + 1 || p.cbar != 2 * k + 1 || p.v != k + 1 ||
        p.vbar != k)
        throw std::invalid_argument(
            "rooted_bound_check: needs the final-case regime (c=cbar=2k+1, v=k+1, vbar=k)");

    RootedBoundReport rep;
    rep.k = k;
    rep.s = p.s;

    const StaircaseMatrix abar = reflect_complement(a);
    const auto rbar = abar.row_sums();
    const int cbar = p.cbar, vbar = p.vbar;
    int a_val = 0;
    for (int i = vbar; i < cbar; ++i) a_val += rbar[i] - cbar + 1;
    rep.a = a_val;

    int head = 0;
    for (int i = 0; i < vbar; ++i) head += rbar[i] - cbar + 1;
    rep.sums_ok = (head == 3 * k + 1 - p.s - a_val) && (head == p.sbar - a_val) &&
                  (p.s + p.sbar == 3 * k + 1) && (a_val >= -k * (k - 1)) && (a_val <= 0);

    // M3 from the complement's row sums
    DenseMatrix m3(cbar + 1);
    for (int i = 0; i < cbar; ++i)
        for (int j = 0; j < cbar; ++j)
            if (i != j) m3.at(i, j) = 1.0;
    for (int i = 0; i < cbar; ++i) m3.at(i, cbar) = rbar[i] - cbar + 1.0;
    for (int j = 0; j < vbar; ++j) m3.at(cbar, j) = 1.0;

    Partition pi1;
    for (int i = 0; i < cbar; ++i) pi1.blocks.push_back({i});
    std::vector<int> tail;
    for (int i = cbar; i < n; ++i) tail.push_back(i);
    pi1.blocks.push_back(tail);

    const DenseMatrix abar_dense = abar.to_dense();
    const auto hyp = check_rooted_hypotheses(abar_dense, pi1, m3);
    rep.hypotheses_ok = !hyp.has_value();
    if (hyp) rep.detail = *hyp;
    rep.rooted_ok = is_rooted(m3).has_value();

    // Pi2 quotient of M3^T equals M2^T
    Partition pi2;
    std::vector<int> b1, b2;
    for (int i = 0; i < vbar; ++i) b1.push_back(i);
    for (int i = vbar; i < cbar; ++i) b2.push_back(i);
    pi2.blocks = {b1, b2, {cbar}};
    const auto q = quotient(m3.transpose(), pi2);
    const FinalCaseInstance inst = build_final_case(k, p.s, a_val);
    rep.quotient_ok = false;
    if (q) {
        const DenseMatrix m2t = inst.m2.transpose();
        bool same = q->n == m2t.n;
        for (int i = 0; same && i < m2t.n; ++i)
            for (int j = 0; same && j < m2t.n; ++j)
                if (std::abs(q->at(i, j) - m2t.at(i, j)) > 1e-9) same = false;
        rep.quotient_ok = same;
    }

    rep.rho_abar = sym_eigen_max(abar_dense);
    rep.rhor_m3 = rho_r(m3);
    rep.rhor_m2 = rho_r(inst.m2);
    rep.chain_ok = (rep.rho_abar <= rep.rhor_m3 + 1e-8) &&
                   (std::abs(rep.rhor_m3 - rep.rhor_m2) <= 1e-8);

    rep.pass = rep.hypotheses_ok && rep.rooted_ok && rep.quotient_ok && rep.chain_ok && rep.sums_ok;
    return rep;
}

}  // namespace ngsum
