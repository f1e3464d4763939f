#include "ngsum/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ngsum/graph6.hpp"
#include "ngsum/json_io.hpp"

namespace ngsum {

namespace {

int resolved_workers(const CliConfig& c) {
    if (c.parallel > 0) return c.parallel;
    if (const char* env = std::getenv("NG_PARALLEL")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt12(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

StaircaseMatrix load_input(const CliConfig& c) {
    const int provided = (!c.graph6.empty()) + (!c.profile.empty()) + (!c.edges_path.empty());
    if (provided != 1)
        throw std::invalid_argument("provide exactly one of --graph6, --profile, --edges");
    if (!c.graph6.empty()) {
        const DenseMatrix adj = graph6_decode(c.graph6);
        const auto st = staircase_from_graph(adj);
        if (!st)
            throw std::invalid_argument(
                "graph is not threshold-orderable (no staircase vertex ordering exists)");
        return *st;
    }
    if (!c.edges_path.empty()) {
        const DenseMatrix adj = edge_list_decode(read_file(c.edges_path));
        const auto st = staircase_from_graph(adj);
        if (!st)
            throw std::invalid_argument(
                "graph is not threshold-orderable (no staircase vertex ordering exists)");
        return *st;
    }
    std::string text = c.profile;
    if (!text.empty() && text[0] == '@') text = read_file(text.substr(1));
    return parse_profile_json(text);
}

void print_bound_report_text(const BoundReport& r, std::ostream& out) {
    out << "rho       = " << fmt12(r.rho) << "\n";
    out << "rho_bar   = " << fmt12(r.rho_bar) << "\n";
    out << "phi       = " << fmt12(r.phi) << "\n";
    out << "phi_bar   = " << fmt12(r.phi_bar) << "\n";
    out << "phi_ell   =";
    for (double x : r.phi_ell) out << ' ' << fmt12(x);
    out << "\n";
    const auto& p = r.params;
    out << "params    = c=" << p.c << " v=" << p.v << " s=" << p.s << " cbar=" << p.cbar
        << " vbar=" << p.vbar << " sbar=" << p.sbar << " T=" << p.T << "\n";
    out << "equality  = ";
    if (!r.equality_case) {
        out << "none\n";
    } else if (r.equality_case->form == EqualityWitness::Form::clique_plus_nulls) {
        out << "K_" << r.equality_case->m << "+N (clique plus isolated vertices)\n";
    } else {
        out << "(K_" << (r.equality_case->t - 1) << " v N_"
            << (r.equality_case->m + 1 - r.equality_case->t) << ")+N, t=" << r.equality_case->t
            << "\n";
    }
}

void print_verify_text(const VerifyReport& r, std::ostream& out) {
    out << "n=" << r.n << " space=" << r.search_space << " max=" << fmt12(r.max_value)
        << " rho0=" << fmt12(r.rho0_expected) << " gap=" << fmt12(r.gap)
        << " instances=" << r.instances_checked << " elapsed=" << fmt12(r.elapsed) << "s\n";
    for (const auto& d : r.arg_max) {
        out << "arg_max: " << d.family << " g6=" << d.graph6 << " degrees=[";
        for (size_t i = 0; i < d.degrees.size(); ++i) out << (i ? "," : "") << d.degrees[i];
        out << "]\n";
    }
    if (r.counterexamples.empty()) {
        out << "counterexamples: none\n";
    } else {
        for (const auto& d : r.counterexamples)
            out << "counterexample: " << d.family << " " << d.note << "\n";
    }
    out << (r.pass ? "PASS" : "FAIL") << "\n";
}

int cmd_bounds(const CliConfig& c, std::ostream& out) {
    const StaircaseMatrix a = load_input(c);
    const BoundReport r = make_bound_report(a);
    if (c.format == "json")
        out << to_json(r).dump() << "\n";
    else
        print_bound_report_text(r, out);
    return 0;
}

int cmd_params(const CliConfig& c, std::ostream& out) {
    const StaircaseMatrix a = load_input(c);
    const ParamSix p = full_params(a);
    if (c.format == "json") {
        out << to_json(p).dump() << "\n";
    } else {
        out << "c=" << p.c << " v=" << p.v << " s=" << p.s << " cbar=" << p.cbar
            << " vbar=" << p.vbar << " sbar=" << p.sbar << " T=" << p.T << "\n";
    }
    return 0;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
    if (c.n < 3) throw std::invalid_argument("verify: --n is required (>= 3)");
    const int workers = resolved_workers(c);
    const VerifyReport r = (c.space == "all") ? verify_bruteforce(c.n, c.allow_n8, workers)
                                              : verify_staircase(c.n, workers);
    if (c.format == "json")
        out << to_json(r).dump() << "\n";
    else if (c.format == "csv")
        out << verify_csv(r);
    else
        print_verify_text(r, out);
    return r.pass ? 0 : 2;
}

int cmd_enumerate(const CliConfig& c, std::ostream& out) {
    if (c.n < 3) throw std::invalid_argument("enumerate: --n is required (>= 3)");
    auto emit = [&](const StaircaseMatrix& a) {
        if (c.format == "json") {
            out << profile_json(a).dump() << "\n";
        } else if (c.format == "g6") {
            out << graph6_encode(a) << "\n";
        } else {
            const auto& mu = a.profile();
            for (size_t i = 0; i < mu.size(); ++i) out << (i ? " " : "") << mu[i];
            out << "\n";
        }
    };
    if (c.klass == "star") {
        if (c.format == "g6")
            throw std::invalid_argument("enumerate: g6 output needs --class sym (symmetric only)");
        for_each_sstar(c.n, emit);
    } else {
        for_each_sstar_sym(c.n, emit);
    }
    return 0;
}

int cmd_certificate(const CliConfig& c, std::ostream& out) {
    if (c.k_max < 1) throw std::invalid_argument("certificate: --kmax is required (>= 1)");
    const CertificateReport r = final_case_certificate(c.k_max, resolved_workers(c));
    if (c.format == "json") {
        out << to_json(r).dump() << "\n";
    } else if (c.format == "csv") {
        out << certificate_csv(r);
    } else {
        for (const auto& row : r.rows) {
            out << "k=" << row.k << " instances=" << row.instances
                << " min_margin=" << fmt12(row.min_margin) << " thin=" << row.thin_count << " "
                << (row.pass ? "PASS" : ("FAIL " + row.first_failure)) << "\n";
        }
        out << "total instances=" << r.instances_total << " elapsed=" << fmt12(r.elapsed) << "s "
            << (r.all_pass ? "PASS" : "FAIL") << "\n";
    }
    return r.all_pass ? 0 : 2;
}

int cmd_rho0(const CliConfig& c, std::ostream& out) {
    const int from = c.from >= 3 ? c.from : (c.n >= 3 ? c.n : 3);
    const int to = c.to >= from ? c.to : from;
    std::vector<Rho0Breakdown> rows;
    for (int n = from; n <= to; ++n) rows.push_back(rho0(n));
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& b : rows) arr.push_back(to_json(b));
        out << arr.dump() << "\n";
    } else if (c.format == "csv") {
        out << rho0_csv(rows);
    } else {
        out << "n k k_n rho0 u_n best_q\n";
        for (const auto& b : rows) {
            out << b.n << ' ' << b.k << ' ' << b.k_n << ' ' << fmt12(b.rho0) << ' ' << fmt12(b.u_n)
                << ' ';
            for (size_t i = 0; i < b.best_q.size(); ++i) out << (i ? "," : "") << b.best_q[i];
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    try {
        if (!config.out.empty()) {
            file.open(config.out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file: " + config.out);
            sink = &file;
        }
        if (config.command == "bounds") return cmd_bounds(config, *sink);
        if (config.command == "params") return cmd_params(config, *sink);
        if (config.command == "verify") return cmd_verify(config, *sink);
        if (config.command == "enumerate") return cmd_enumerate(config, *sink);
        if (config.command == "certificate") return cmd_certificate(config, *sink);
        if (config.command == "rho0") return cmd_rho0(config, *sink);
        throw std::invalid_argument("unknown command: " + config.command);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ngsum
