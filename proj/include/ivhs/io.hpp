#pragma once

// JSON/CSV/text serialization for every artifact the tools emit.  Rationals
// travel as strings ("p/q" or plain integers) since they do not fit JSON
// numbers; index sets serialize as arrays of integer arrays in additive
// order; certificate and witness files are self-contained enough to be
// re-verified from scratch.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivhs/bounds.hpp"
#include "ivhs/certificate.hpp"
#include "ivhs/cyclotomic.hpp"
#include "ivhs/detideal.hpp"
#include "ivhs/groebner.hpp"
#include "ivhs/matrices.hpp"
#include "ivhs/probe.hpp"
#include "ivhs/sha256.hpp"
#include "ivhs/smax.hpp"
#include "ivhs/witness.hpp"

namespace ivhs {

using nlohmann::json;

inline json to_json(const MultiIndex& i) { return json(i.entries()); }

inline MultiIndex multiindex_from_json(const json& j) {
    return MultiIndex(j.get<std::vector<int>>());
}

inline json to_json(const IndexSet& set) {
    json arr = json::array();
    for (const MultiIndex& i : set.members()) arr.push_back(to_json(i));
    return arr;
}

inline std::string rational_to_string(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

// --- matrices ---------------------------------------------------------------

inline json matrix_to_json(const IvhsMatrix& M) {
    json j;
    j["kind"] = kind_name(M.kind());
    j["m"] = M.m();
    j["d"] = M.d();
    if (M.kind() != MatrixKind::M) j["alpha"] = to_json(M.alpha());
    if (M.kind() == MatrixKind::N) j["j"] = to_json(M.replaced_column());
    j["rows"] = to_json(M.rows());
    j["cols"] = to_json(M.cols());
    json entries = json::array();
    for (std::size_t r = 0; r < M.row_count(); ++r)
        for (std::size_t c = 0; c < M.col_count(); ++c) {
            const ScaledVar& e = M.entry(r, c);
            entries.push_back(e.is_zero() ? json::array({0, nullptr})
                                          : json::array({e.coefficient, to_json(e.index.index())}));
        }
    j["entries"] = entries;  // row-major
    return j;
}

/// One nonzero entry per line: "row col coeff x[index]"; for diffing against
/// external computer-algebra output.
inline std::string matrix_to_text(const IvhsMatrix& M) {
    std::ostringstream os;
    for (std::size_t r = 0; r < M.row_count(); ++r)
        for (std::size_t c = 0; c < M.col_count(); ++c) {
            const ScaledVar& e = M.entry(r, c);
            if (e.is_zero()) continue;
            os << M.rows()[r].to_string() << ' ' << M.cols()[c].to_string() << ' '
               << e.coefficient << " x" << e.index.index().to_string() << "\n";
        }
    return os.str();
}

// --- ideals -----------------------------------------------------------------

inline json ideal_manifest(const IdealSpec& spec, const std::string& text_export) {
    json j;
    j["m"] = spec.m;
    j["d"] = spec.d;
    j["s"] = spec.s;
    j["variant"] = variant_name(spec.variant);
    j["generator_count"] = spec.generators.size();
    if (spec.note) j["note"] = *spec.note;
    j["sha256"] = sha256_hex(text_export);
    return j;
}

// --- certificates -----------------------------------------------------------

inline json certificate_to_json(const EliminationCertificate& cert) {
    json steps = json::array();
    for (const CertificateStep& st : cert.steps) {
        json s;
        s["k"] = to_json(st.k);
        s["pair_count"] = st.pair_count;
        json rows = json::array(), cols = json::array();
        for (const auto& i : st.rows) rows.push_back(to_json(i));
        for (const auto& j2 : st.cols) cols.push_back(to_json(j2));
        s["rows"] = rows;
        s["cols"] = cols;
        steps.push_back(std::move(s));
    }
    return json{{"m", cert.m}, {"d", cert.d}, {"bound", cert.bound}, {"steps", steps}};
}

inline EliminationCertificate certificate_from_json(const json& j) {
    EliminationCertificate cert;
    cert.m = j.at("m").get<int>();
    cert.d = j.at("d").get<int>();
    cert.bound = j.at("bound").get<long long>();
    for (const json& s : j.at("steps")) {
        CertificateStep step;
        step.k = multiindex_from_json(s.at("k"));
        step.pair_count = s.at("pair_count").get<long long>();
        for (const json& r : s.at("rows")) step.rows.push_back(multiindex_from_json(r));
        for (const json& c : s.at("cols")) step.cols.push_back(multiindex_from_json(c));
        cert.steps.push_back(std::move(step));
    }
    return cert;
}

// --- cyclotomic values and witnesses ----------------------------------------

inline json cyclotomic_to_json(const CyclotomicField::Element& e) {
    json arr = json::array();
    for (const mpq_class& c : e) arr.push_back(rational_to_string(c));
    return arr;
}

inline CyclotomicField::Element cyclotomic_from_json(const json& j) {
    CyclotomicField::Element e;
    for (const json& c : j) e.push_back(rational_from_string(c.get<std::string>()));
    return e;
}

inline json witness_to_json(const WitnessVector& w) {
    json j;
    j["m"] = w.m;
    j["d"] = w.d;
    j["root_order"] = w.field.order();  // omega is a primitive root of this order
    j["field_degree"] = w.field.degree();
    j["variables"] = to_json(w.vars);
    json assign = json::array();
    for (const auto& e : w.assignment) assign.push_back(cyclotomic_to_json(e));
    j["assignment"] = assign;  // aligned with "variables"
    j["rank"] = w.rank;
    j["solution_space_dim"] = w.solution_space_dim;
    j["free_column"] = w.free_column;
    j["annihilation_checked"] = w.annihilation_checked;
    return j;
}

struct WitnessFileCheck {
    bool ok = false;
    std::string detail;
    std::size_t recomputed_rank = 0;
};

/// Re-checks a serialized witness from scratch: field order, nonzero
/// assignment, exact annihilation of the freshly rebuilt tangent space, and
/// the recorded rank.
inline WitnessFileCheck verify_witness_json(const json& j) {
    WitnessFileCheck out;
    const int m = j.at("m").get<int>();
    const int d = j.at("d").get<int>();
    if (j.at("root_order").get<int>() != 2 * d) {
        out.detail = "root order does not equal 2d";
        return out;
    }
    CyclotomicField F(2 * d);
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    const json& assign = j.at("assignment");
    if (assign.size() != vars.size()) {
        out.detail = "assignment length differs from the variable count";
        return out;
    }
    std::vector<CyclotomicField::Element> x;
    bool nonzero = false;
    for (const json& e : assign) {
        auto v = cyclotomic_from_json(e);
        if (v.size() != F.degree()) {
            out.detail = "coefficient vector of the wrong length";
            return out;
        }
        nonzero = nonzero || !F.is_zero(v);
        x.push_back(std::move(v));
    }
    if (!nonzero) {
        out.detail = "assignment is identically zero";
        return out;
    }
    TangentBasis tb = cycle_tangent_space(m, d);
    if (!witness_annihilates(m, d, F, tb, x)) {
        out.detail = "assignment does not annihilate the cycle tangent space";
        return out;
    }
    out.recomputed_rank = rank_at(m, d, F, x);
    if (out.recomputed_rank != j.at("rank").get<std::size_t>()) {
        out.detail = "recorded rank " + j.at("rank").dump() + " differs from recomputed " +
                     std::to_string(out.recomputed_rank);
        return out;
    }
    out.ok = true;
    out.detail = "witness re-verified: nonzero, annihilating, rank " +
                 std::to_string(out.recomputed_rank);
    return out;
}

// --- probes, bounds, searches -----------------------------------------------

inline json probe_to_json(const RankProbeReport& rep) {
    json j;
    j["m"] = rep.m;
    j["d"] = rep.d;
    j["trials"] = rep.trials;
    j["field"] = rep.field;
    j["prime"] = rep.prime;
    j["seed"] = rep.seed;
    j["max_rank"] = rep.max_rank;
    j["certified_rank_floor"] = rep.critical;
    json hist = json::object();
    for (const auto& [rank, n] : rep.rank_histogram) hist[std::to_string(rank)] = n;
    j["rank_histogram"] = hist;
    json wit = json::object();
    for (const auto& [rank, tw] : rep.witnesses)
        wit[std::to_string(rank)] = json{{"trial", tw.first}, {"assignment", tw.second}};
    j["witnesses"] = wit;
    return j;
}

inline json bounds_to_json(const BoundsReport& rep) {
    json j;
    j["m"] = rep.m;
    j["d"] = rep.d;
    j["a"] = rep.a;
    j["b"] = rep.b;
    j["r"] = rep.r;
    j["smax0"] = rep.smax0;
    j["smax_check"] = rep.smax_check;
    if (rep.corollary_value) j["nl_corollary"] = *rep.corollary_value;
    json table = json::array();
    for (const auto& [s, ok] : rep.transversality_table)
        table.push_back(json{{"s", s}, {"holds", ok}});
    j["transversality"] = table;
    j["madaram"] = json{{"min", rep.madaram.min_count},
                        {"bound", rep.madaram.bound},
                        {"equality_flag", rep.madaram.equality_flag},
                        {"argmin_count", rep.madaram.argmin.size()}};
    json argmin = json::array();
    for (const auto& k : rep.madaram.argmin) argmin.push_back(to_json(k));
    j["madaram"]["argmin"] = argmin;
    j["c_estimate"] = rep.c_estimate;
    j["c_provenance"] = rep.c_provenance;
    if (rep.y0_approx) j["y0_approx_display_only"] = *rep.y0_approx;
    return j;
}

inline std::string bounds_csv_header() {
    return "m,d,a,b,r,smax0,smax_check,nl_corollary,madaram_min,madaram_bound,"
           "madaram_equality,c_estimate,c_provenance";
}

inline std::string bounds_to_csv_row(const BoundsReport& rep) {
    std::ostringstream os;
    os << rep.m << ',' << rep.d << ',' << rep.a << ',' << rep.b << ',' << rep.r << ','
       << rep.smax0 << ',' << rep.smax_check << ','
       << (rep.corollary_value ? std::to_string(*rep.corollary_value) : "") << ','
       << rep.madaram.min_count << ',' << rep.madaram.bound << ','
       << (rep.madaram.equality_flag ? "true" : "false") << ',' << rep.c_estimate << ','
       << rep.c_provenance;
    return os.str();
}

inline json search_to_json(const SmaxSearchReport& rep) {
    json j;
    j["m"] = rep.m;
    j["d"] = rep.d;
    j["variant"] = variant_name(rep.variant);
    j["smax0"] = rep.smax0;
    j["certified_lower"] = rep.certified_lower;
    if (rep.certified_upper) j["certified_upper"] = *rep.certified_upper;
    j["resolved"] = rep.resolved();
    json statuses = json::array();
    for (const SStatus& st : rep.statuses) {
        const char* verdict = st.verdict == SStatus::Verdict::ZeroCertified ? "zero_at_origin"
                              : st.verdict == SStatus::Verdict::NonzeroCertified
                                  ? "nonzero_zero_found"
                                  : "inconclusive";
        statuses.push_back(json{{"s", st.s}, {"verdict", verdict}, {"evidence", st.evidence}});
    }
    j["per_s"] = statuses;
    j["notes"] = rep.notes;
    return j;
}

inline json zero_dim_to_json(const ZeroDimVerdict& v, const IndexSet& vars) {
    json j;
    j["status"] = zero_dim_status_name(v.status);
    j["report"] = v.report;
    j["basis_complete"] = v.basis_complete;
    j["basis_size"] = v.basis_size;
    if (!v.witness.empty()) {
        json w = json::object();
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            if (v.witness[i] != 0)
                w["x" + vars[i].to_string()] = rational_to_string(v.witness[i]);
        j["witness_nonzero_coordinates"] = w;
    }
    return j;
}

// --- files ------------------------------------------------------------------

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace ivhs
