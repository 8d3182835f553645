#include "crkit/serialize.hpp"

#include <sstream>

namespace crkit::serialize {

std::string verdict_name(roots::Verdict v) {
    switch (v) {
        case roots::Verdict::yes: return "yes";
        case roots::Verdict::no: return "no";
        default: return "undetermined";
    }
}

ordered_json to_json(const exact::Scalar& s) { return s.str(); }

ordered_json to_json(const exact::ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json to_json(const exact::Signature& s) {
    return {{"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}};
}

ordered_json to_json(const grassmann::OrbitDescriptor& d) {
    ordered_json j{{"p", d.p}, {"q", d.q}, {"m", d.m}, {"a", d.a}, {"b", d.b}, {"c", d.c()}};
    j["block_sizes"] = d.block_sizes();
    return j;
}

ordered_json to_json(const grassmann::OrbitReport& r) {
    ordered_json j = to_json(r.descriptor);
    j["dims"] = {{"k0", r.dims.k0},
                 {"v0", r.dims.v0},
                 {"v", r.dims.v},
                 {"M0_real", r.dims.m0_real},
                 {"Mminus_complex", r.dims.mminus_complex}};
    j["oracle"] = {{"n", r.oracle.n}, {"k", r.oracle.k}};
    j["formula"] = {{"n", r.formula.n}, {"k", r.formula.k}, {"mu", r.formula.mu}};
    j["flags"] = {{"n_reductive", r.flags.n_reductive},
                  {"hnr", r.flags.hnr},
                  {"open_orbit", r.flags.open_orbit},
                  {"minimal", r.flags.minimal},
                  {"totally_real", r.flags.totally_real}};
    j["hnr_verdict"] = verdict_name(r.hnr_verdict);
    ordered_json ds = ordered_json::array();
    for (const auto& d : r.discrepancies)
        ds.push_back({{"field", d.field},
                      {"formula", d.formula_value},
                      {"oracle", d.oracle_value}});
    j["discrepancies"] = std::move(ds);
    return j;
}

ordered_json to_json(const grassmann::DualityEntry& e) {
    ordered_json j{{"p", e.descriptor.p},
                   {"q", e.descriptor.q},
                   {"m", e.descriptor.m},
                   {"a", e.descriptor.a},
                   {"b", e.descriptor.b}};
    j["plus_tag"] = e.plus_tag;
    j["minus_tag"] = e.minus_tag;
    j["signature"] = to_json(e.signature);
    j["intersection"] = {e.intersection.first, e.intersection.second};
    j["minimal"] = e.minimal;
    j["open_orbit"] = e.open_orbit;
    return j;
}

ordered_json to_json(const levi::LeviReport& r) {
    ordered_json t = ordered_json::array();
    for (const auto& c : r.t_coords) t.push_back(c.str());
    ordered_json j;
    j["t"] = std::move(t);
    j["gram"] = to_json(r.gram);
    j["signature"] = to_json(r.signature);
    j["witt"] = r.witt;
    return j;
}

ordered_json to_json(const levi::PseudoconcavityEstimate& e) {
    ordered_json j;
    j["sampled_min"] = e.sampled_min;
    j["plan"] = {{"seed", e.plan.seed}, {"count", e.plan.count}};
    ordered_json reports = ordered_json::array();
    for (const auto& r : e.reports) reports.push_back(to_json(r));
    j["reports"] = std::move(reports);
    return j;
}

ordered_json to_json(const levi::CohomologyWindow& w) {
    return {{"low_max", w.low_max}, {"high_min", w.high_min}};
}

ordered_json to_json(const mostow::MostowProbeReport& r) {
    ordered_json j;
    j["samples"] = r.samples;
    j["radius"] = r.radius;
    j["min_singular_value"] = r.min_singular_value;
    j["full_rank_everywhere"] = r.full_rank_everywhere;
    j["seed"] = r.seed;
    ordered_json fails = ordered_json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"sample_index", f.sample_index}, {"reason", f.reason}});
    j["failures"] = std::move(fails);
    j["fd_step"] = r.options.fd_step;
    j["rank_threshold"] = r.options.rank_threshold;
    j["unitary_tolerance"] = r.options.unitary_tolerance;
    return j;
}

std::string orbit_csv_header() {
    return "p,q,m,a,b,c,dim_k0,dim_v0,dim_v,dim_M0_real,dim_Mminus_complex,"
           "n,k,formula_n,formula_k,mu,n_reductive,hnr,open_orbit,minimal,"
           "totally_real,discrepancy_fields";
}

std::string orbit_csv_row(const grassmann::OrbitReport& r) {
    std::ostringstream os;
    const auto& d = r.descriptor;
    os << d.p << ',' << d.q << ',' << d.m << ',' << d.a << ',' << d.b << ','
       << d.c() << ',' << r.dims.k0 << ',' << r.dims.v0 << ',' << r.dims.v
       << ',' << r.dims.m0_real << ',' << r.dims.mminus_complex << ','
       << r.oracle.n << ',' << r.oracle.k << ',' << r.formula.n << ','
       << r.formula.k << ',' << r.formula.mu << ',' << int(r.flags.n_reductive)
       << ',' << int(r.flags.hnr) << ',' << int(r.flags.open_orbit) << ','
       << int(r.flags.minimal) << ',' << int(r.flags.totally_real) << ',';
    for (std::size_t j = 0; j < r.discrepancies.size(); ++j)
        os << (j ? "|" : "") << r.discrepancies[j].field;
    return os.str();
}

std::string duality_csv_header() {
    return "p,q,m,a,b,plus_tag,minus_tag,sig_plus,sig_minus,sig_zero,"
           "int_plus,int_minus,minimal,open_orbit";
}

std::string duality_csv_row(const grassmann::DualityEntry& e) {
    std::ostringstream os;
    const auto& d = e.descriptor;
    os << d.p << ',' << d.q << ',' << d.m << ',' << d.a << ',' << d.b << ','
       << '"' << e.plus_tag << '"' << ',' << '"' << e.minus_tag << '"' << ','
       << e.signature.plus << ',' << e.signature.minus << ',' << e.signature.zero
       << ',' << e.intersection.first << ',' << e.intersection.second << ','
       << int(e.minimal) << ',' << int(e.open_orbit);
    return os.str();
}

} // namespace crkit::serialize
