#include "crkit/errors.hpp"
#include "crkit/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace crkit;
using grassmann::OrbitDescriptor;
using grassmann::OrbitReport;
using serialize::ordered_json;

struct Config {
    std::size_t p = 0, q = 0, m = 0, a = 0, b = 0;
    std::string format = "json";
    std::string output;
    std::string preset;
    std::string context;
    std::vector<std::string> gens;
    bool skip_hnr = false;
    bool want_n_reductive = false;
    bool want_hnr = false;
    bool want_levi = false;
    double radius = 0.5;
    std::size_t samples = 100;
    std::uint64_t seed = 42;
};

std::size_t thread_count(std::size_t items) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CRKIT_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0')
            n = std::min<std::size_t>(n, cap == 0 ? 1 : cap);
    }
    return std::max<std::size_t>(1, std::min(n, items));
}

// Index-sliced fan-out with deterministic slot merge; the first failure by
// index is rethrown.
std::vector<OrbitReport> parallel_reports(const std::vector<OrbitDescriptor>& ds,
                                          grassmann::OrbitReportOptions opts) {
    std::vector<std::optional<OrbitReport>> slots(ds.size());
    std::vector<std::exception_ptr> errors(ds.size());
    const std::size_t t = thread_count(ds.size());
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::size_t w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < ds.size(); i += t) {
                try {
                    slots[i] = grassmann::orbit_report(ds[i], opts);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<OrbitReport> out;
    out.reserve(ds.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text, std::size_t count,
                                     const std::string& what) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(piece, &used);
            if (used != piece.size() || v < 0) throw std::invalid_argument(piece);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw invalid_input("cannot parse " + what + ": \"" + text + "\"");
        }
    }
    if (out.size() != count)
        throw invalid_input(what + " needs " + std::to_string(count) +
                            " comma-separated values, got \"" + text + "\"");
    return out;
}

OrbitDescriptor parse_preset(const std::string& preset) {
    const std::string prefix = "grassmann:";
    if (preset.rfind(prefix, 0) != 0)
        throw invalid_input("unknown preset \"" + preset +
                            "\" (expected grassmann:p,q,m,a,b)");
    const auto v = parse_sizes(preset.substr(prefix.size()), 5, "preset");
    return {v[0], v[1], v[2], v[3], v[4]};
}

exact::ExactMatrix parse_matrix(const std::string& text, std::size_t n) {
    std::vector<exact::Scalar> flat;
    std::stringstream rows(text);
    std::string row;
    std::size_t nrows = 0;
    while (std::getline(rows, row, ';')) {
        ++nrows;
        std::stringstream cells(row);
        std::string cell;
        std::size_t ncols = 0;
        while (std::getline(cells, cell, ',')) {
            ++ncols;
            flat.push_back(exact::Scalar::parse(cell));
        }
        if (ncols != n)
            throw invalid_input("generator row has " + std::to_string(ncols) +
                                " entries, expected " + std::to_string(n));
    }
    if (nrows != n)
        throw invalid_input("generator has " + std::to_string(nrows) +
                            " rows, expected " + std::to_string(n));
    return exact::ExactMatrix::from_flat(n, n, flat);
}

// Algebra from either --preset or --context plus --gen matrices.
cralg::CRAlgebra resolve_algebra(const Config& cfg) {
    if (!cfg.preset.empty()) {
        const OrbitDescriptor d = parse_preset(cfg.preset);
        auto ctx = std::make_shared<const cralg::RealFormContext>(d.p, d.q);
        return grassmann::orbit_algebra(ctx, d);
    }
    if (cfg.context.empty())
        throw invalid_input("either --preset or --context with --gen is required");
    const auto pq = parse_sizes(cfg.context, 2, "context");
    auto ctx = std::make_shared<const cralg::RealFormContext>(pq[0], pq[1]);
    std::vector<exact::ExactMatrix> gens;
    gens.reserve(cfg.gens.size());
    for (const auto& g : cfg.gens) gens.push_back(parse_matrix(g, ctx->n_total()));
    try {
        return {ctx, liealg::LieSubalgebra::from_matrices(ctx->n_total(), gens)};
    } catch (const internal_inconsistency&) {
        throw;
    } catch (const invalid_input& e) {
        throw invalid_input("not a subalgebra of the context: " + std::string(e.what()));
    }
}

std::string flag_words(const OrbitReport& r) {
    std::string s;
    auto add = [&](bool on, const char* w) {
        if (!on) return;
        if (!s.empty()) s += ' ';
        s += w;
    };
    add(r.flags.n_reductive, "n-reductive");
    add(r.flags.hnr, "hnr");
    add(r.flags.open_orbit, "open");
    add(r.flags.minimal, "minimal");
    add(r.flags.totally_real, "totally-real");
    return s;
}

std::string pretty_orbit_line(const OrbitReport& r) {
    std::ostringstream os;
    os << "(a,b)=(" << r.descriptor.a << ',' << r.descriptor.b << ") c="
       << r.descriptor.c() << " | n=" << r.oracle.n << " k=" << r.oracle.k
       << " mu=" << r.formula.mu << " | dims k0=" << r.dims.k0 << " v0="
       << r.dims.v0 << " v=" << r.dims.v << " M0=" << r.dims.m0_real
       << " M-=" << r.dims.mminus_complex << " | " << flag_words(r);
    if (!r.discrepancies.empty()) {
        os << " | formula mismatch:";
        for (const auto& d : r.discrepancies) os << ' ' << d.field;
    }
    return os.str();
}

std::string render_orbits(const Config& cfg) {
    const auto ds = grassmann::enumerate_orbits(cfg.p, cfg.q, cfg.m);
    const auto reports = parallel_reports(ds, {.with_hnr = !cfg.skip_hnr});
    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(serialize::to_json(r));
        os << arr.dump() << '\n';
    } else if (cfg.format == "csv") {
        os << serialize::orbit_csv_header() << '\n';
        for (const auto& r : reports) os << serialize::orbit_csv_row(r) << '\n';
    } else {
        os << "orbit catalog p=" << cfg.p << " q=" << cfg.q << " m=" << cfg.m
           << " (" << reports.size() << " orbits)\n";
        for (const auto& r : reports) os << pretty_orbit_line(r) << '\n';
    }
    return os.str();
}

std::string render_duality(const Config& cfg) {
    const auto entries = grassmann::duality_catalog(cfg.p, cfg.q, cfg.m);
    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& e : entries) arr.push_back(serialize::to_json(e));
        os << arr.dump() << '\n';
    } else if (cfg.format == "csv") {
        os << serialize::duality_csv_header() << '\n';
        for (const auto& e : entries) os << serialize::duality_csv_row(e) << '\n';
    } else {
        os << "duality pairing p=" << cfg.p << " q=" << cfg.q << " m=" << cfg.m
           << " (" << entries.size() << " orbit pairs)\n";
        for (const auto& e : entries) {
            os << e.plus_tag << " <-> " << e.minus_tag << " | signature ("
               << e.signature.plus << ',' << e.signature.minus << ','
               << e.signature.zero << ") | intersection (" << e.intersection.first
               << ',' << e.intersection.second << ')';
            if (e.minimal) os << " | minimal";
            if (e.open_orbit) os << " | open";
            os << '\n';
        }
    }
    return os.str();
}

std::string render_report(const Config& cfg) {
    const auto ds = grassmann::enumerate_orbits(cfg.p, cfg.q, cfg.m);
    const auto reports = parallel_reports(ds, {.with_hnr = false});
    ordered_json j{{"p", cfg.p}, {"q", cfg.q}, {"m", cfg.m}};
    j["orbit_count"] = reports.size();
    std::size_t matched = 0;
    ordered_json disc = ordered_json::array();
    for (const auto& r : reports) {
        if (r.discrepancies.empty()) ++matched;
        for (const auto& d : r.discrepancies)
            disc.push_back({{"a", r.descriptor.a},
                            {"b", r.descriptor.b},
                            {"field", d.field},
                            {"formula", d.formula_value},
                            {"oracle", d.oracle_value}});
    }
    j["matched_count"] = matched;
    j["discrepancies"] = std::move(disc);

    std::ostringstream os;
    if (cfg.format == "json") {
        os << j.dump() << '\n';
    } else if (cfg.format == "pretty") {
        os << "formula comparison p=" << cfg.p << " q=" << cfg.q << " m=" << cfg.m
           << ": " << matched << "/" << reports.size() << " orbits match\n";
        for (const auto& d : j["discrepancies"])
            os << "(a,b)=(" << d["a"] << ',' << d["b"] << ") " << d["field"].get<std::string>()
               << ": formula " << d["formula"] << " vs oracle " << d["oracle"] << '\n';
    } else {
        throw invalid_input("format \"csv\" is not available for this subcommand");
    }
    return os.str();
}

std::string render_check(const Config& cfg) {
    const bool all = !cfg.want_n_reductive && !cfg.want_hnr && !cfg.want_levi;
    const cralg::CRAlgebra a = resolve_algebra(cfg);

    ordered_json j;
    j["source"] = cfg.preset.empty() ? std::string("explicit") : cfg.preset;
    j["context"] = {{"p", a.context().p()}, {"q", a.context().q()}};
    j["dims"] = {{"k0", a.context().dim_k0()},
                 {"v", a.v().dim()},
                 {"v_r", a.reductive_part().dim()},
                 {"v_n", a.nilradical_part().dim()},
                 {"v0", a.v0_realified().dim()}};
    j["n"] = a.cr_dimension();
    j["k"] = a.cr_codimension();
    if (all || cfg.want_n_reductive) j["n_reductive"] = a.is_n_reductive();
    if (all || cfg.want_hnr)
        j["hnr_verdict"] =
            a.is_n_reductive() ? serialize::verdict_name(a.is_hnr()) : "unavailable";
    if (all || cfg.want_levi) {
        if (a.is_n_reductive()) {
            const auto est = levi::pseudoconcavity_estimate(a);
            ordered_json l;
            l["sampled_min"] = est.sampled_min;
            l["plan"] = {{"seed", est.plan.seed}, {"count", est.plan.count}};
            l["directions"] = est.reports.size();
            l["cohomology_window"] = serialize::to_json(
                levi::cohomology_window(a.cr_dimension(), est.sampled_min));
            j["levi"] = std::move(l);
        } else {
            j["levi"] = "unavailable";
        }
    }

    std::ostringstream os;
    if (cfg.format == "json") {
        os << j.dump() << '\n';
    } else if (cfg.format == "pretty") {
        os << "source: " << j["source"].get<std::string>() << '\n'
           << "context: (" << a.context().p() << ',' << a.context().q() << ")\n"
           << "dims: k0=" << a.context().dim_k0() << " v=" << a.v().dim()
           << " v_r=" << a.reductive_part().dim() << " v_n="
           << a.nilradical_part().dim() << " v0=" << a.v0_realified().dim() << '\n'
           << "n: " << a.cr_dimension() << '\n'
           << "k: " << a.cr_codimension() << '\n';
        if (j.contains("n_reductive"))
            os << "n-reductive: " << (a.is_n_reductive() ? "yes" : "no") << '\n';
        if (j.contains("hnr_verdict"))
            os << "hnr: " << j["hnr_verdict"].get<std::string>() << '\n';
        if (j.contains("levi") && j["levi"].is_object())
            os << "pseudoconcavity sampled min: " << j["levi"]["sampled_min"] << '\n';
    } else {
        throw invalid_input("format \"csv\" is not available for this subcommand");
    }
    return os.str();
}

std::string render_analyze(const Config& cfg) {
    const OrbitDescriptor d(cfg.p, cfg.q, cfg.m, cfg.a, cfg.b);
    auto ctx = std::make_shared<const cralg::RealFormContext>(d.p, d.q);
    const auto report = grassmann::orbit_report(ctx, d, {.with_hnr = !cfg.skip_hnr});
    const auto algebra = grassmann::orbit_algebra(ctx, d);
    const auto est = levi::pseudoconcavity_estimate(algebra);

    ordered_json j;
    j["report"] = serialize::to_json(report);
    j["pseudoconcavity"] = {{"sampled_min", est.sampled_min},
                            {"plan", {{"seed", est.plan.seed}, {"count", est.plan.count}}},
                            {"directions", est.reports.size()}};
    j["cohomology_window"] = serialize::to_json(
        levi::cohomology_window(report.oracle.n, est.sampled_min));
    j["duality_tags"] = {
        {"plus", "M+(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")"},
        {"minus", "M-(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")"}};

    std::ostringstream os;
    if (cfg.format == "json") {
        os << j.dump() << '\n';
    } else if (cfg.format == "pretty") {
        os << "orbit p=" << d.p << " q=" << d.q << " m=" << d.m << '\n'
           << pretty_orbit_line(report) << '\n'
           << "pseudoconcavity sampled min: " << est.sampled_min << " over "
           << est.reports.size() << " directions\n"
           << "cohomology window: j <= " << j["cohomology_window"]["low_max"]
           << " or j >= " << j["cohomology_window"]["high_min"] << '\n'
           << "duality: " << j["duality_tags"]["plus"].get<std::string>() << " <-> "
           << j["duality_tags"]["minus"].get<std::string>() << '\n';
    } else {
        throw invalid_input("format \"csv\" is not available for this subcommand");
    }
    return os.str();
}

std::string render_probe(const Config& cfg) {
    if (!std::isfinite(cfg.radius) || cfg.radius <= 0.0)
        throw invalid_input("radius must be positive and finite");
    if (cfg.samples == 0) throw invalid_input("at least one sample is required");
    const cralg::CRAlgebra a = resolve_algebra(cfg);
    const auto rep = mostow::jacobian_probe(a, cfg.radius, cfg.samples, cfg.seed);

    std::ostringstream os;
    if (cfg.format == "json") {
        os << serialize::to_json(rep).dump() << '\n';
    } else if (cfg.format == "pretty") {
        os << "samples: " << rep.samples << '\n'
           << "radius: " << rep.radius << '\n'
           << "min singular value: " << rep.min_singular_value << '\n'
           << "full rank everywhere: " << (rep.full_rank_everywhere ? "yes" : "no")
           << '\n'
           << "seed: " << rep.seed << '\n'
           << "failures: " << rep.failures.size() << '\n';
    } else {
        throw invalid_input("format \"csv\" is not available for this subcommand");
    }
    return os.str();
}

void write_output(const Config& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw invalid_input("cannot open output file: " + cfg.output);
    f << text;
    f.flush();
    if (!f) throw invalid_input("failed writing output file: " + cfg.output);
}

void add_format(CLI::App* cmd, Config& cfg) {
    cmd->add_option("-f,--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
}

void add_pqm(CLI::App* cmd, Config& cfg) {
    cmd->add_option("-p", cfg.p, "dimension of the positive block")->required();
    cmd->add_option("-q", cfg.q, "dimension of the negative block")->required();
    cmd->add_option("-m", cfg.m, "plane dimension")->required();
}

void add_algebra_source(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--preset", cfg.preset,
                    "orbit preset grassmann:p,q,m,a,b naming a stabilizer algebra");
    cmd->add_option("--context", cfg.context, "signature p,q of an explicit context");
    cmd->add_option("-g,--gen", cfg.gens,
                    "generator matrix, rows ';'-separated, entries ','-separated "
                    "(repeatable)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CR invariants of compact homogeneous CR manifolds"};
    app.require_subcommand(1);
    Config cfg;

    auto* orbits = app.add_subcommand("orbits", "orbit catalog for (p, q, m)");
    add_pqm(orbits, cfg);
    orbits->add_flag("--skip-hnr", cfg.skip_hnr, "skip the parabolicity certification");
    add_format(orbits, cfg);

    auto* analyze = app.add_subcommand("analyze", "full record for a single orbit");
    add_pqm(analyze, cfg);
    analyze->add_option("-a", cfg.a, "positive intersection index")->required();
    analyze->add_option("-b", cfg.b, "negative intersection index")->required();
    analyze->add_flag("--skip-hnr", cfg.skip_hnr, "skip the parabolicity certification");
    add_format(analyze, cfg);

    auto* check = app.add_subcommand("check", "verdicts for a preset or explicit algebra");
    add_algebra_source(check, cfg);
    check->add_flag("--n-reductive", cfg.want_n_reductive, "check n-reductivity");
    check->add_flag("--hnr", cfg.want_hnr, "certify the normalizer's parabolicity");
    check->add_flag("--levi", cfg.want_levi, "sample Levi forms and pseudoconcavity");
    add_format(check, cfg);

    auto* duality = app.add_subcommand("duality", "orbit pairing catalog for (p, q, m)");
    add_pqm(duality, cfg);
    add_format(duality, cfg);

    auto* probe = app.add_subcommand("mostow-probe",
                                     "numeric Jacobian probe of the fibration map");
    add_algebra_source(probe, cfg);
    probe->add_option("-r,--radius", cfg.radius, "sampling radius")->capture_default_str();
    probe->add_option("-n,--samples", cfg.samples, "number of samples")
        ->capture_default_str();
    probe->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    add_format(probe, cfg);

    auto* report = app.add_subcommand("report", "formula-vs-oracle comparison for (p, q, m)");
    add_pqm(report, cfg);
    add_format(report, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        std::string text;
        if (orbits->parsed()) text = render_orbits(cfg);
        else if (analyze->parsed()) text = render_analyze(cfg);
        else if (check->parsed()) text = render_check(cfg);
        else if (duality->parsed()) text = render_duality(cfg);
        else if (probe->parsed()) text = render_probe(cfg);
        else text = render_report(cfg);
        write_output(cfg, text);
        return 0;
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 2;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
