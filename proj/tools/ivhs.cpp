// Command-line front end: every subcommand validates its parameters, runs
// the corresponding library routine, writes deterministic artifacts under
// the output directory, and drops a manifest with content hashes next to
// them.  Exit codes: 0 verified/completed, 2 completed with inconclusive
// entries, 1 error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivhs/io.hpp"
#include "ivhs/version.hpp"

namespace fs = std::filesystem;
using namespace ivhs;

namespace {

MultiIndex parse_tuple_arg(const std::string& text) {
    std::vector<int> entries;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) entries.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (entries.empty()) throw std::invalid_argument("empty tuple argument");
    return MultiIndex(std::move(entries));
}

struct RunContext {
    std::string command;
    fs::path outdir;
    json config = json::object();
    std::map<std::string, std::string> artifact_hashes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    RunContext(const std::string& cmd, int m, int d, const std::string& out_override)
        : command(cmd) {
        outdir = out_override.empty()
                     ? fs::path("out") / (std::to_string(m) + "-" + std::to_string(d)) / cmd
                     : fs::path(out_override);
        fs::create_directories(outdir);
        config["m"] = m;
        config["d"] = d;
    }

    void write_artifact(const std::string& name, const std::string& content) {
        write_file((outdir / name).string(), content);
        artifact_hashes[name] = sha256_hex(content);
    }

    void finish() {
        json manifest;
        manifest["command"] = command;
        manifest["version"] = kVersion;
        manifest["config"] = config;
        manifest["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
        json arts = json::object();
        for (const auto& [name, hash] : artifact_hashes) arts[name] = hash;
        manifest["artifacts"] = arts;
        write_file((outdir / "manifest.json").string(), manifest.dump(2) + "\n");
        std::cout << "artifacts in " << outdir.string() << "\n";
    }
};

int cmd_bounds(int m, int d, long long trials, std::uint64_t prime, std::uint64_t seed,
               unsigned threads, const std::string& format, const std::string& out) {
    BoundsReport rep = make_bounds_report(m, d, trials, prime, seed, threads);
    RunContext ctx("bounds", m, d, out);
    ctx.config["trials"] = trials;
    ctx.config["field_prime"] = prime;
    ctx.config["seed"] = seed;
    json j = bounds_to_json(rep);
    ctx.write_artifact("bounds.json", j.dump(2) + "\n");
    ctx.write_artifact("bounds.csv", bounds_csv_header() + "\n" + bounds_to_csv_row(rep) + "\n");
    if (format == "csv")
        std::cout << bounds_csv_header() << "\n" << bounds_to_csv_row(rep) << "\n";
    else if (format == "txt")
        std::cout << "a=" << rep.a << " b=" << rep.b << " r=" << rep.r << " smax0=" << rep.smax0
                  << " smax_check=" << rep.smax_check << "\n";
    else
        std::cout << j.dump(2) << "\n";
    ctx.finish();
    return 0;
}

int cmd_matrix(int m, int d, const std::string& kind, const std::string& alpha_s,
               const std::string& j_s, const std::string& out) {
    IvhsMatrix M = [&] {
        if (kind == "M") return build_M(m, d);
        if (kind == "Mcheck") {
            if (alpha_s.empty()) throw std::invalid_argument("--alpha required for kind Mcheck");
            return build_M_check(m, d, parse_tuple_arg(alpha_s));
        }
        if (kind == "N") {
            if (alpha_s.empty() || j_s.empty())
                throw std::invalid_argument("--alpha and --j required for kind N");
            return build_N(m, d, parse_tuple_arg(j_s), parse_tuple_arg(alpha_s));
        }
        throw std::invalid_argument("unknown matrix kind: " + kind);
    }();
    RunContext ctx("matrix", m, d, out);
    ctx.config["kind"] = kind;
    if (!alpha_s.empty()) ctx.config["alpha"] = alpha_s;
    if (!j_s.empty()) ctx.config["j"] = j_s;
    ctx.write_artifact("matrix.json", matrix_to_json(M).dump(2) + "\n");
    ctx.write_artifact("matrix.txt", matrix_to_text(M));
    std::cout << kind << " is " << M.row_count() << "x" << M.col_count() << "\n";
    ctx.finish();
    return 0;
}

int cmd_ideal(int m, int d, int s, const std::string& variant_s, const std::string& out) {
    IdealVariant variant = variant_s == "I1" ? IdealVariant::I1 : IdealVariant::I0;
    IdealSpec spec = make_ideal(m, d, s, variant);
    RunContext ctx("ideal", m, d, out);
    ctx.config["s"] = s;
    ctx.config["variant"] = variant_s;
    std::string text = export_ideal(spec);
    ctx.write_artifact("ideal.txt", text);
    ctx.write_artifact("ideal.json", ideal_manifest(spec, text).dump(2) + "\n");
    std::cout << variant_s << " at s=" << s << ": " << spec.generators.size() << " generators";
    if (spec.note) std::cout << " (" << *spec.note << ")";
    std::cout << "\n";
    ctx.finish();
    return 0;
}

int cmd_certify(int m, int d, const std::string& out) {
    EliminationCertificate cert = elimination_certificate(m, d);
    CertificateVerification ver = verify_certificate(cert);
    RunContext ctx("certify-smax0", m, d, out);
    ctx.write_artifact("certificate.json", certificate_to_json(cert).dump(2) + "\n");
    std::ostringstream log;
    log << ver.summary << "\n";
    for (const std::string& line : ver.chain) log << line << "\n";
    ctx.write_artifact("verify.log", log.str());
    std::cout << ver.summary << "\n";
    std::cout << "certified: smax0 = " << cert.bound - 1 << " (critical rank " << cert.bound
              << ")\n";
    ctx.finish();
    return ver.ok ? 0 : 1;
}

int cmd_probe(int m, int d, long long trials, std::uint64_t prime, std::uint64_t seed,
              unsigned threads, const std::string& out) {
    RankProbeReport rep = random_rank_probe(m, d, trials, prime, seed, threads);
    RunContext ctx("probe", m, d, out);
    ctx.config["trials"] = trials;
    ctx.config["field_prime"] = prime;
    ctx.config["seed"] = seed;
    ctx.write_artifact("probe.json", probe_to_json(rep).dump(2) + "\n");
    std::cout << "max rank " << rep.max_rank << " over " << trials << " trials (floor "
              << rep.critical << ")\n";
    ctx.finish();
    return 0;
}

int cmd_witness(int m, int d, const std::string& out) {
    WitnessVector w = solve_witness(m, d);
    RunContext ctx("witness", m, d, out);
    json j = witness_to_json(w);
    ctx.write_artifact("witness.json", j.dump(2) + "\n");
    // independent re-check of the file we just wrote
    WitnessFileCheck check = verify_witness_json(json::parse(read_file((ctx.outdir / "witness.json").string())));
    std::cout << "witness rank " << w.rank << " (expected " << critical_rank(m, d) << "); "
              << check.detail << "\n";
    ctx.finish();
    return check.ok ? 0 : 1;
}

int cmd_verify_witness(const std::string& path) {
    WitnessFileCheck check = verify_witness_json(json::parse(read_file(path)));
    std::cout << (check.ok ? "OK: " : "FAILED: ") << check.detail << "\n";
    return check.ok ? 0 : 1;
}

int cmd_verify_certificate(const std::string& path) {
    EliminationCertificate cert = certificate_from_json(json::parse(read_file(path)));
    CertificateVerification ver = verify_certificate(cert);
    std::cout << (ver.ok ? "OK: " : "FAILED: ") << ver.summary << "\n";
    return ver.ok ? 0 : 1;
}

int cmd_search(int m, int d, const std::string& variant_s, int degree_cap, double time_cap,
               long long trials, std::uint64_t seed, const std::string& out) {
    IdealVariant variant = variant_s == "I0" ? IdealVariant::I0 : IdealVariant::I1;
    SearchBudget budget;
    budget.degree_cap = degree_cap;
    budget.time_cap_seconds = time_cap;
    budget.probe_trials = trials;
    budget.seed = seed;
    SmaxSearchReport rep = smax_search(m, d, variant, budget);
    RunContext ctx("search-smax1", m, d, out);
    ctx.config["variant"] = variant_s;
    ctx.config["degree_cap"] = degree_cap;
    ctx.config["time_cap"] = time_cap;
    ctx.config["trials"] = trials;
    ctx.config["seed"] = seed;
    ctx.write_artifact("search.json", search_to_json(rep).dump(2) + "\n");
    std::cout << "smax(" << variant_s << ") >= " << rep.certified_lower;
    if (rep.certified_upper) std::cout << ", <= " << *rep.certified_upper;
    std::cout << (rep.resolved() ? " -- resolved" : " -- not resolved") << "\n";
    for (const SStatus& st : rep.statuses) {
        const char* v = st.verdict == SStatus::Verdict::ZeroCertified         ? "zero-at-origin"
                        : st.verdict == SStatus::Verdict::NonzeroCertified ? "nonzero-zero"
                                                                              : "inconclusive";
        std::cout << "  s=" << st.s << ": " << v << " -- " << st.evidence << "\n";
    }
    for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
    ctx.finish();
    return rep.resolved() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact IVHS determinantal computations at the Fermat point"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    int m = 2, d = 5, s = 0;
    long long trials = 1000, search_trials = 32;
    std::uint64_t prime = kDefaultProbePrime, seed = 0;
    unsigned threads = 1;
    int degree_cap = -1;
    double time_cap = 60.0;
    std::string kind = "M", variant = "I0", search_variant = "I1";
    std::string alpha_s, j_s, format = "json", out, path;

    auto add_md = [&](CLI::App* c) {
        c->add_option("--m", m, "fiber dimension (even, >= 2)")->required();
        c->add_option("--d", d, "degree (>= 2)")->required();
        c->add_option("--out", out, "output directory (default out/{m}-{d}/{command})");
    };

    CLI::App* c_bounds = app.add_subcommand("bounds", "dimension counts and closed-form bounds");
    add_md(c_bounds);
    c_bounds->add_option("--trials", trials, "probe trials for the rank estimate");
    c_bounds->add_option("--field-prime", prime, "prime for rank probes");
    c_bounds->add_option("--seed", seed, "probe seed");
    c_bounds->add_option("--threads", threads, "probe worker threads");
    c_bounds->add_option("--format", format, "stdout format: json|csv|txt");

    CLI::App* c_matrix = app.add_subcommand("matrix", "build and export a symbolic matrix");
    add_md(c_matrix);
    c_matrix->add_option("--kind", kind, "M|Mcheck|N");
    c_matrix->add_option("--alpha", alpha_s, "alpha as comma list, e.g. 2,1,1,1");
    c_matrix->add_option("--j", j_s, "replaced column as comma list");

    CLI::App* c_ideal = app.add_subcommand("ideal", "generate a determinantal ideal");
    add_md(c_ideal);
    c_ideal->add_option("--s", s, "rank parameter (minors of size s+1)")->required();
    c_ideal->add_option("--variant", variant, "I0|I1");

    CLI::App* c_cert = app.add_subcommand("certify-smax0",
                                          "emit and verify the elimination certificate");
    add_md(c_cert);

    CLI::App* c_probe = app.add_subcommand("probe", "randomized rank probe over a prime field");
    add_md(c_probe);
    c_probe->add_option("--trials", trials, "number of random assignments");
    c_probe->add_option("--field-prime", prime, "prime modulus");
    c_probe->add_option("--seed", seed, "seed");
    c_probe->add_option("--threads", threads, "worker threads");

    CLI::App* c_wit = app.add_subcommand("witness", "linear-cycle rank witness");
    add_md(c_wit);

    CLI::App* c_search = app.add_subcommand("search-smax1", "budgeted search for the maximum s");
    add_md(c_search);
    c_search->add_option("--variant", search_variant, "I0|I1 (default I1)");
    c_search->add_option("--degree-cap", degree_cap, "basis degree cap (-1: per-s default)");
    c_search->add_option("--time-cap", time_cap, "seconds per s");
    c_search->add_option("--trials", search_trials, "random assignments per s");
    c_search->add_option("--seed", seed, "seed");

    CLI::App* c_vw = app.add_subcommand("verify-witness", "re-check a witness file from scratch");
    c_vw->add_option("file", path, "witness.json path")->required();

    CLI::App* c_vc = app.add_subcommand("verify-certificate", "re-check a certificate file");
    c_vc->add_option("file", path, "certificate.json path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_bounds->parsed())
            return cmd_bounds(m, d, trials, prime, seed, threads, format, out);
        if (c_matrix->parsed()) return cmd_matrix(m, d, kind, alpha_s, j_s, out);
        if (c_ideal->parsed()) return cmd_ideal(m, d, s, variant, out);
        if (c_cert->parsed()) return cmd_certify(m, d, out);
        if (c_probe->parsed()) return cmd_probe(m, d, trials, prime, seed, threads, out);
        if (c_wit->parsed()) return cmd_witness(m, d, out);
        if (c_search->parsed())
            return cmd_search(m, d, search_variant, degree_cap, time_cap, search_trials, seed, out);
        if (c_vw->parsed()) return cmd_verify_witness(path);
        if (c_vc->parsed()) return cmd_verify_certificate(path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
