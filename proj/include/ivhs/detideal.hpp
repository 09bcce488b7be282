#pragma once

// Generation of the determinantal ideals attached to M: the minors-only
// ideal (variant I0) and its first-order enlargement (variant I1), whose
// extra generators are, for a fixed block B and a fixed alpha, the sums
// sum_{j in I_d} det(N_{j,alpha}|_B) over every column index j.  For j
// outside the block the replaced column is not part of the slice, so the
// summand is det(M|_B) verbatim; the equality is exercised as a lemma in the
// test suite against fully built N matrices.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ivhs/matrices.hpp"
#include "ivhs/poly.hpp"

namespace ivhs {

/// Exact determinant of a square grid of scaled variables, by Laplace
/// expansion with subset memoization (fraction free, deterministic term
/// order).
inline SparsePoly det_expand(const std::vector<std::vector<ScaledVar>>& slice,
                             const IndexSet& vars) {
    const std::size_t n = slice.size();
    for (const auto& row : slice)
        if (row.size() != n) throw std::invalid_argument("det_expand: slice not square");
    const std::size_t nvars = vars.size();
    if (n == 0) return SparsePoly::constant(nvars, 1);
    if (n > 16) throw std::invalid_argument("det_expand: slice too large");

    auto entry_poly = [&](const ScaledVar& sv) {
        if (sv.is_zero()) return SparsePoly::zero(nvars);
        auto pos = vars.position(sv.index.index());
        if (!pos)
            throw std::invalid_argument("det_expand: entry variable " +
                                        sv.index.index().to_string() +
                                        " outside the variable set");
        SparsePoly p = SparsePoly::variable(nvars, *pos);
        p *= mpq_class(sv.coefficient);
        return p;
    };

    // D[mask] = det of the last popcount(mask) rows against the columns in
    // mask; filled in increasing mask order.
    std::vector<SparsePoly> D(std::size_t(1) << n, SparsePoly::zero(nvars));
    D[0] = SparsePoly::constant(nvars, 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int q = __builtin_popcount(mask);
        const std::size_t row = n - static_cast<std::size_t>(q);
        SparsePoly acc(nvars);
        int sign = 1;  // alternates over the columns present in the mask
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const ScaledVar& sv = slice[row][c];
            if (!sv.is_zero()) {
                SparsePoly term = entry_poly(sv) * D[mask & ~(1u << c)];
                if (sign < 0) term *= mpq_class(-1);
                acc += term;
            }
            sign = -sign;
        }
        D[mask] = std::move(acc);
    }
    return D[(std::size_t(1) << n) - 1];
}

enum class IdealVariant { I0, I1 };

inline std::string variant_name(IdealVariant v) {
    return v == IdealVariant::I0 ? "I0" : "I1";
}

struct MinorSelector {
    std::vector<std::size_t> row_positions;  // strictly increasing
    std::vector<std::size_t> col_positions;  // strictly increasing
};

struct IdealGenerator {
    SparsePoly poly;
    MinorSelector selector;
    std::optional<MultiIndex> alpha;  // set on the first-order sums only
};

struct IdealSpec {
    int m = 0, d = 0, s = 0;
    IdealVariant variant = IdealVariant::I0;
    IndexSet vars;  // the variable index set, additive order
    std::vector<IdealGenerator> generators;
    std::optional<std::string> note;
};

namespace detail {

/// Visits all size-k increasing position subsets of {0..n-1} in lex order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn fn) {
    if (k > n) return;
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        fn(const_cast<const std::vector<std::size_t>&>(comb));
        // advance
        std::size_t i = k;
        while (i-- > 0) {
            if (comb[i] + (k - i) < n) {
                ++comb[i];
                for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

inline std::vector<std::vector<ScaledVar>> take_slice(const IvhsMatrix& M,
                                                      const MinorSelector& sel) {
    std::vector<std::vector<ScaledVar>> slice(sel.row_positions.size());
    for (std::size_t r = 0; r < sel.row_positions.size(); ++r) {
        slice[r].reserve(sel.col_positions.size());
        for (std::size_t c : sel.col_positions)
            slice[r].push_back(M.entry(sel.row_positions[r], c));
    }
    return slice;
}

}  // namespace detail

/// Streams the generators of the chosen ideal variant in their canonical
/// order: the minors of M first (row subsets outer, column subsets inner,
/// lex), then, for variant I1, the summed first-order minors with alpha
/// outermost in additive order.  Returns the note attached to degenerate
/// parameter ranges, if any.
inline std::optional<std::string> for_each_ideal_generator(
    int m, int d, int s, IdealVariant variant,
    const std::function<void(const IdealGenerator&)>& fn) {
    check_hypothesis(m, d);
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    const IvhsMatrix M = build_M(m, d);
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    const std::size_t a = M.row_count(), r = M.col_count();
    const std::size_t size = static_cast<std::size_t>(s) + 1;
    if (size > std::min(a, r))
        return "rank cannot exceed min(a, r) = " + std::to_string(std::min(a, r)) +
               "; no minors of size " + std::to_string(size) + " exist";

    std::vector<MinorSelector> selectors;
    detail::for_each_combination(a, size, [&](const std::vector<std::size_t>& rows) {
        detail::for_each_combination(r, size, [&](const std::vector<std::size_t>& cols) {
            selectors.push_back(MinorSelector{rows, cols});
        });
    });

    for (const MinorSelector& sel : selectors) {
        IdealGenerator gen;
        gen.selector = sel;
        gen.poly = det_expand(detail::take_slice(M, sel), vars);
        fn(gen);
    }
    if (variant == IdealVariant::I0) return std::nullopt;

    const IndexSet& alphas = cached_index_set(m, d, d);
    for (const MultiIndex& alpha : alphas.members()) {
        const IvhsMatrix Mc = build_M_check(m, d, alpha);
        for (const MinorSelector& sel : selectors) {
            SparsePoly det_M_B = det_expand(detail::take_slice(M, sel), vars);
            // Columns outside the block leave the slice untouched, so those
            // r - (s+1) summands are det(M|_B) each.
            SparsePoly sum = det_M_B * mpq_class(static_cast<long>(r - size));
            for (std::size_t cpos = 0; cpos < sel.col_positions.size(); ++cpos) {
                auto slice = detail::take_slice(M, sel);
                for (std::size_t rr = 0; rr < sel.row_positions.size(); ++rr)
                    slice[rr][cpos] = Mc.entry(sel.row_positions[rr], sel.col_positions[cpos]);
                sum += det_expand(slice, vars);
            }
            IdealGenerator gen;
            gen.selector = sel;
            gen.alpha = alpha;
            gen.poly = std::move(sum);
            fn(gen);
        }
    }
    return std::nullopt;
}

inline IdealSpec make_ideal(int m, int d, int s, IdealVariant variant) {
    IdealSpec spec;
    spec.m = m;
    spec.d = d;
    spec.s = s;
    spec.variant = variant;
    spec.vars = cached_index_set(m, d, variable_degree(m, d));
    spec.note = for_each_ideal_generator(
        m, d, s, variant, [&](const IdealGenerator& g) { spec.generators.push_back(g); });
    return spec;
}

inline IdealSpec minors_ideal_0(int m, int d, int s) {
    return make_ideal(m, d, s, IdealVariant::I0);
}
inline IdealSpec minors_ideal_1(int m, int d, int s) {
    return make_ideal(m, d, s, IdealVariant::I1);
}

// ---------------------------------------------------------------------------
// Plain-text export and its inverse.

inline std::string poly_to_text(const SparsePoly& p, const IndexSet& vars) {
    return p.to_string([&](std::size_t v) { return "x" + vars[v].to_string(); });
}

inline std::string export_ideal(const IdealSpec& spec, const std::string& format = "txt") {
    if (format != "txt")
        throw std::invalid_argument("unsupported ideal export format: " + format);
    std::ostringstream os;
    os << "# ideal m=" << spec.m << " d=" << spec.d << " s=" << spec.s
       << " variant=" << variant_name(spec.variant) << "\n";
    os << "# variables:";
    for (const MultiIndex& k : spec.vars.members()) os << " x" << k.to_string();
    os << "\n";
    if (spec.note) os << "# note: " << *spec.note << "\n";
    for (const IdealGenerator& g : spec.generators)
        os << poly_to_text(g.poly, spec.vars) << "\n";
    return os.str();
}

namespace detail {

struct TextScanner {
    const std::string& s;
    std::size_t pos = 0;
    explicit TextScanner(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected integer at " + s.substr(start, 10));
        return std::stol(s.substr(start, pos - start));
    }
};

inline MultiIndex parse_tuple(TextScanner& sc) {
    if (!sc.eat('[')) throw std::invalid_argument("expected '['");
    std::vector<int> entries;
    if (!sc.peek(']')) {
        entries.push_back(static_cast<int>(sc.integer()));
        while (sc.eat(',')) entries.push_back(static_cast<int>(sc.integer()));
    }
    if (!sc.eat(']')) throw std::invalid_argument("expected ']'");
    return MultiIndex(std::move(entries));
}

}  // namespace detail

/// Parses the canonical polynomial text form produced by poly_to_text.
inline SparsePoly parse_poly(const std::string& text, const IndexSet& vars) {
    detail::TextScanner sc(text);
    SparsePoly out(vars.size());
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('-')) sign = -1;
        else if (sc.eat('+')) sign = 1;
        else if (!first) throw std::invalid_argument("expected '+' or '-' between terms");
        first = false;
        if (sc.done()) throw std::invalid_argument("dangling sign");

        mpq_class coeff = 1;
        bool have_factor = false;
        Monomial mono = Monomial::one(vars.size());
        // optional leading rational
        sc.skip_ws();
        if (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) {
            long num = sc.integer();
            if (sc.eat('/')) {
                long den = sc.integer();
                coeff = mpq_class(num) / mpq_class(den);
            } else {
                coeff = num;
            }
            have_factor = true;
            if (!sc.eat('*')) {
                out.add_term(mono, sign * coeff);
                continue;
            }
        }
        // variable factors
        while (true) {
            sc.skip_ws();
            if (sc.pos >= sc.s.size() || sc.s[sc.pos] != 'x')
                throw std::invalid_argument("expected variable factor");
            ++sc.pos;
            MultiIndex k = detail::parse_tuple(sc);
            auto pos = vars.position(k);
            if (!pos) throw std::invalid_argument("unknown variable x" + k.to_string());
            std::uint16_t e = 1;
            if (sc.eat('^')) e = static_cast<std::uint16_t>(sc.integer());
            mono = mono * Monomial::var(vars.size(), *pos, e);
            have_factor = true;
            if (!sc.eat('*')) break;
        }
        if (!have_factor) throw std::invalid_argument("empty term");
        out.add_term(mono, sign * coeff);
    }
    return out;
}

struct ParsedIdeal {
    int m = 0, d = 0, s = 0;
    IdealVariant variant = IdealVariant::I0;
    IndexSet vars;
    std::vector<SparsePoly> generators;
    std::optional<std::string> note;
};

inline ParsedIdeal parse_ideal(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    ParsedIdeal out;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ideal ", 0) == 0) {
            std::istringstream hs(line.substr(8));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "m") out.m = std::stoi(val);
                else if (key == "d") out.d = std::stoi(val);
                else if (key == "s") out.s = std::stoi(val);
                else if (key == "variant")
                    out.variant = val == "I1" ? IdealVariant::I1 : IdealVariant::I0;
            }
            out.vars = cached_index_set(out.m, out.d, variable_degree(out.m, out.d));
            header = true;
            continue;
        }
        if (line.rfind("# note: ", 0) == 0) {
            out.note = line.substr(8);
            continue;
        }
        if (line[0] == '#') continue;
        if (!header) throw std::invalid_argument("ideal text missing header");
        out.generators.push_back(parse_poly(line, out.vars));
    }
    if (!header) throw std::invalid_argument("ideal text missing header");
    return out;
}

}  // namespace ivhs
