#include "ngsum/json_io.hpp"

#include <sstream>

namespace ngsum {

json to_json(const ParamSix& p) {
    return json{{"c", p.c},       {"v", p.v},       {"s", p.s},
                {"cbar", p.cbar}, {"vbar", p.vbar}, {"sbar", p.sbar},
                {"T", p.T}};
}

json to_json(const EqualityWitness& w) {
    json j;
    j["form"] = (w.form == EqualityWitness::Form::clique_plus_nulls) ? "K_m+N" : "(K_{t-1}vN)+N";
    j["m"] = w.m;
    if (w.form == EqualityWitness::Form::split_plus_nulls)
        j["t"] = w.t;
    else
        j["t"] = nullptr;
    return j;
}

json to_json(const BoundReport& r) {
    json j;
    j["rho"] = r.rho;
    j["rho_bar"] = r.rho_bar;
    j["phi"] = r.phi;
    j["phi_bar"] = r.phi_bar;
    j["phi_ell"] = r.phi_ell;
    j["equality_case"] = r.equality_case ? to_json(*r.equality_case) : json(nullptr);
    j["params"] = to_json(r.params);
    return j;
}

json to_json(const Rho0Breakdown& b) {
    return json{{"n", b.n},        {"k", b.k},   {"k_n", b.k_n},
                {"rho0", b.rho0},  {"u_n", b.u_n}, {"f", b.f.c},
                {"best_q", b.best_q}};
}

json to_json(const GraphDescription& d) {
    json j;
    j["graph6"] = d.graph6;
    j["degrees"] = d.degrees;
    j["family"] = d.family;
    j["profile"] = d.profile;
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

json to_json(const VerifyReport& r) {
    json j;
    j["n"] = r.n;
    j["search_space"] = r.search_space;
    j["max_value"] = r.max_value;
    j["arg_max"] = json::array();
    for (const auto& d : r.arg_max) j["arg_max"].push_back(to_json(d));
    j["rho0_expected"] = r.rho0_expected;
    j["gap"] = r.gap;
    j["counterexamples"] = json::array();
    for (const auto& d : r.counterexamples) j["counterexamples"].push_back(to_json(d));
    j["instances_checked"] = r.instances_checked;
    j["elapsed"] = r.elapsed;
    j["pass"] = r.pass;
    return j;
}

json to_json(const TransformTrace& t) {
    json j;
    j["lemma"] = t.lemma;
    j["before"] = to_json(t.before);
    j["after"] = to_json(t.after);
    j["moved_cells"] = json::array();
    for (const auto& e : t.moved_cells)
        j["moved_cells"].push_back(json::array({e.row, e.col, e.old_val, e.new_val}));
    return j;
}

json to_json(const LemmaCheck& c) {
    json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["pass"] = c.pass;
    j["instances"] = c.instances;
    if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json to_json(const LemmaSuiteReport& r) {
    json j;
    j["n_max"] = r.n_max;
    j["checks"] = json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    j["all_pass"] = r.all_pass;
    return j;
}

json to_json(const CertificateRow& r) {
    json j;
    j["k"] = r.k;
    j["instances"] = r.instances;
    j["pass"] = r.pass;
    j["min_margin"] = r.min_margin;
    j["thin_count"] = r.thin_count;
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    return j;
}

json to_json(const CertificateReport& r) {
    json j;
    j["k_max"] = r.k_max;
    j["rows"] = json::array();
    for (const auto& row : r.rows) j["rows"].push_back(to_json(row));
    j["all_pass"] = r.all_pass;
    j["instances_total"] = r.instances_total;
    j["thin_total"] = r.thin_total;
    j["elapsed"] = r.elapsed;
    return j;
}

json to_json(const RootedBoundReport& r) {
    json j;
    j["k"] = r.k;
    j["s"] = r.s;
    j["a"] = r.a;
    j["hypotheses_ok"] = r.hypotheses_ok;
    j["rooted_ok"] = r.rooted_ok;
    j["quotient_ok"] = r.quotient_ok;
    j["chain_ok"] = r.chain_ok;
    j["sums_ok"] = r.sums_ok;
    j["rho_abar"] = r.rho_abar;
    j["rhor_m3"] = r.rhor_m3;
    j["rhor_m2"] = r.rhor_m2;
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["pass"] = r.pass;
    return j;
}

json profile_json(const StaircaseMatrix& a) {
    return json{{"n", a.order()}, {"mu", a.profile()}};
}

StaircaseMatrix parse_profile_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("profile JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("mu"))
        throw std::invalid_argument("profile JSON: expected {\"n\": int, \"mu\": [int,...]}");
    const int n = j["n"].get<int>();
    const auto mu = j["mu"].get<std::vector<int>>();
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("profile JSON: mu length differs from n");
    return StaircaseMatrix::from_profile(mu);
}

std::string verify_csv(const VerifyReport& r, bool header) {
    std::ostringstream os;
    if (header)
        os << "n,search_space,max_value,rho0_expected,gap,arg_max_count,counterexamples,"
              "instances_checked,pass\n";
    os.precision(17);
    os << r.n << ',' << r.search_space << ',' << r.max_value << ',' << r.rho0_expected << ','
       << r.gap << ',' << r.arg_max.size() << ',' << r.counterexamples.size() << ','
       << r.instances_checked << ',' << (r.pass ? 1 : 0) << '\n';
    return os.str();
}

std::string rho0_csv(const std::vector<Rho0Breakdown>& rows) {
    std::ostringstream os;
    os << "n,k,k_n,rho0,u_n,best_q\n";
    os.precision(17);
    for (const auto& b : rows) {
        os << b.n << ',' << b.k << ',' << b.k_n << ',' << b.rho0 << ',' << b.u_n << ',';
        for (size_t i = 0; i < b.best_q.size(); ++i) os << (i ? ";" : "") << b.best_q[i];
        os << '\n';
    }
    return os.str();
}

std::string certificate_csv(const CertificateReport& r) {
    std::ostringstream os;
    os << "k,instances,pass,min_margin,thin_count\n";
    os.precision(17);
    for (const auto& row : r.rows)
        os << row.k << ',' << row.instances << ',' << (row.pass ? 1 : 0) << ',' << row.min_margin
           << ',' << row.thin_count << '\n';
    return os.str();
}

}  // namespace ngsum
