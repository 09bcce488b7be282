#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ivhs/certificate.hpp"
#include "ivhs/detideal.hpp"
#include "ivhs/fields.hpp"

using namespace ivhs;

namespace {

// Independent oracle: determinant by explicit permutation expansion.
SparsePoly det_brute(const std::vector<std::vector<ScaledVar>>& slice, const IndexSet& vars) {
    const std::size_t n = slice.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    SparsePoly acc(vars.size());
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SparsePoly term = SparsePoly::constant(vars.size(), sign);
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            const ScaledVar& e = slice[i][perm[i]];
            if (e.is_zero()) {
                zero = true;
                break;
            }
            SparsePoly f = SparsePoly::variable(vars.size(), *vars.position(e.index.index()));
            f *= mpq_class(e.coefficient);
            term = term * f;
        }
        if (!zero) acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

std::vector<std::vector<ScaledVar>> random_slice(std::mt19937_64& rng, const IndexSet& vars,
                                                 std::size_t n) {
    std::uniform_int_distribution<std::size_t> vi(0, vars.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> zero(0, 3);
    std::vector<std::vector<ScaledVar>> slice(n, std::vector<ScaledVar>(n));
    for (auto& row : slice)
        for (auto& e : row)
            e = zero(rng) == 0 ? ScaledVar::zero() : ScaledVar::var(vars[vi(rng)], coeff(rng));
    return slice;
}

}  // namespace

TEST_CASE("det_expand base cases", "[detideal]") {
    const IndexSet& vars = cached_index_set(2, 5, variable_degree(2, 5));
    const MultiIndex a{3, 3, 0, 0}, b{0, 3, 3, 0}, c{0, 0, 3, 3}, e{3, 0, 0, 3};

    auto det1 = det_expand({{ScaledVar::var(a)}}, vars);
    REQUIRE(det1 == SparsePoly::variable(vars.size(), *vars.position(a)));

    auto det2 = det_expand({{ScaledVar::var(a), ScaledVar::var(b)},
                            {ScaledVar::var(c), ScaledVar::var(e)}},
                           vars);
    SparsePoly want = SparsePoly::variable(vars.size(), *vars.position(a)) *
                          SparsePoly::variable(vars.size(), *vars.position(e)) -
                      SparsePoly::variable(vars.size(), *vars.position(b)) *
                          SparsePoly::variable(vars.size(), *vars.position(c));
    REQUIRE(det2 == want);

    auto zero_row = det_expand({{ScaledVar::zero(), ScaledVar::zero()},
                                {ScaledVar::var(a), ScaledVar::var(b)}},
                               vars);
    REQUIRE(zero_row.is_zero());
}

TEST_CASE("det_expand agrees with permutation expansion up to 4x4", "[detideal]") {
    const IndexSet& vars = cached_index_set(2, 5, variable_degree(2, 5));
    std::mt19937_64 rng(41);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            auto slice = random_slice(rng, vars, n);
            REQUIRE(det_expand(slice, vars) == det_brute(slice, vars));
        }
}

TEST_CASE("row swap negates the determinant", "[detideal]") {
    const IndexSet& vars = cached_index_set(2, 5, variable_degree(2, 5));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        auto slice = random_slice(rng, vars, 3);
        SparsePoly before = det_expand(slice, vars);
        std::swap(slice[0], slice[2]);
        REQUIRE(det_expand(slice, vars) == -before);
    }
}

TEST_CASE("symbolic determinant evaluates to the numeric determinant", "[detideal]") {
    const IndexSet& vars = cached_index_set(2, 5, variable_degree(2, 5));
    std::mt19937_64 rng(47);
    RationalField Q;
    for (int trial = 0; trial < 100; ++trial) {
        auto slice = random_slice(rng, vars, 3);
        SparsePoly sym = det_expand(slice, vars);
        std::vector<mpq_class> x(vars.size());
        for (auto& v : x) v = mpq_class(long(rng() % 19)) - 9;
        // numeric determinant of the evaluated slice (hand cofactor)
        auto at = [&](std::size_t r, std::size_t c) -> mpq_class {
            const ScaledVar& e = slice[r][c];
            if (e.is_zero()) return 0;
            return mpq_class(e.coefficient) * x[*vars.position(e.index.index())];
        };
        mpq_class numeric = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                            at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                            at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        REQUIRE(sym.evaluate(Q, x) == numeric);
    }
}

TEST_CASE("minors ideal at (2,4,0) lists the nineteen variables", "[detideal]") {
    IdealSpec spec = minors_ideal_0(2, 4, 0);
    REQUIRE(spec.generators.size() == 19);
    std::set<SparsePoly> distinct;
    for (const auto& g : spec.generators) {
        REQUIRE(g.poly.term_count() == 1);
        REQUIRE(g.poly.degree() == 1);
        distinct.insert(g.poly);
    }
    REQUIRE(distinct.size() == 19);
}

TEST_CASE("distinct minors at (2,5,0) are the distinct nonzero entries of M", "[detideal]") {
    IdealSpec spec = minors_ideal_0(2, 5, 0);
    REQUIRE(spec.generators.size() == 4 * 40);
    std::set<SparsePoly> distinct;
    for (const auto& g : spec.generators)
        if (!g.poly.is_zero()) distinct.insert(g.poly);
    IvhsMatrix M = build_M(2, 5);
    std::set<MultiIndex> entries;
    for (std::size_t r = 0; r < M.row_count(); ++r)
        for (std::size_t c = 0; c < M.col_count(); ++c)
            if (!M.entry(r, c).is_zero()) entries.insert(M.entry(r, c).index.index());
    REQUIRE(distinct.size() == entries.size());
    for (const MultiIndex& k : entries)
        REQUIRE(distinct.count(SparsePoly::variable(spec.vars.size(), *spec.vars.position(k))));
}

TEST_CASE("generator counts and homogeneity via streaming", "[detideal]") {
    // (2,5,2): every plain minor is homogeneous of degree 3
    long long n = 0;
    for_each_ideal_generator(2, 5, 2, IdealVariant::I0, [&](const IdealGenerator& g) {
        ++n;
        REQUIRE(g.poly.is_homogeneous());
        if (!g.poly.is_zero()) REQUIRE(g.poly.degree() == 3);
    });
    REQUIRE(n == binomial(4, 3) * binomial(40, 3));
}

TEST_CASE("a sample of 4x4 minors at (2,5,3) is homogeneous of degree 4", "[detideal]") {
    IvhsMatrix M = build_M(2, 5);
    const IndexSet& vars = cached_index_set(2, 5, variable_degree(2, 5));
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::size_t> ci(0, M.col_count() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        std::set<std::size_t> cols;
        while (cols.size() < 4) cols.insert(ci(rng));
        MinorSelector sel;
        sel.row_positions = {0, 1, 2, 3};
        sel.col_positions.assign(cols.begin(), cols.end());
        SparsePoly p = det_expand(detail::take_slice(M, sel), vars);
        REQUIRE(p.is_homogeneous());
        if (!p.is_zero()) REQUIRE(p.degree() == 4);
    }
}

TEST_CASE("first-order sums at (2,4) are scalar multiples of the plain minors", "[detideal]") {
    IdealSpec spec = minors_ideal_1(2, 4, 0);
    // 19 plain minors followed by 19 alphas x 19 selectors
    REQUIRE(spec.generators.size() == 19 + 19 * 19);
    for (std::size_t i = 19; i < spec.generators.size(); ++i) {
        const IdealGenerator& g = spec.generators[i];
        REQUIRE(g.alpha.has_value());
        // Mcheck = 0, so the replaced column contributes a zero determinant
        // and the sum collapses to (r - 1) copies of the plain minor.
        const IdealGenerator& plain = spec.generators[g.selector.col_positions[0]];
        REQUIRE(g.poly == plain.poly * mpq_class(18));
    }
}

TEST_CASE("containment: the minors ideal is a prefix of the enlarged ideal", "[detideal]") {
    IdealSpec i0 = minors_ideal_0(2, 5, 1);
    IdealSpec i1 = minors_ideal_1(2, 5, 1);
    REQUIRE(i1.generators.size() ==
            i0.generators.size() * (1 + cached_index_set(2, 5, 5).size()));
    for (std::size_t i = 0; i < i0.generators.size(); ++i) {
        REQUIRE(i1.generators[i].poly == i0.generators[i].poly);
        REQUIRE_FALSE(i1.generators[i].alpha.has_value());
    }
    for (std::size_t i = i0.generators.size(); i < i1.generators.size(); ++i)
        REQUIRE(i1.generators[i].alpha.has_value());
}

TEST_CASE("pinned first-order sums at (2,5,1)", "[detideal]") {
    const IndexSet& vars = cached_index_set(2, 5, variable_degree(2, 5));
    IvhsMatrix M = build_M(2, 5);
    auto rpos = [&](const MultiIndex& i) { return *M.rows().position(i); };
    auto cpos = [&](const MultiIndex& j) { return *M.cols().position(j); };
    auto sum_for = [&](const MultiIndex& alpha, MinorSelector sel) {
        std::sort(sel.row_positions.begin(), sel.row_positions.end());
        std::sort(sel.col_positions.begin(), sel.col_positions.end());
        IvhsMatrix Mc = build_M_check(2, 5, alpha);
        SparsePoly sum =
            det_expand(detail::take_slice(M, sel), vars) * mpq_class(long(40 - 2));
        for (std::size_t cp = 0; cp < 2; ++cp) {
            auto slice = detail::take_slice(M, sel);
            for (std::size_t rr = 0; rr < 2; ++rr)
                slice[rr][cp] = Mc.entry(sel.row_positions[rr], sel.col_positions[cp]);
            sum += det_expand(slice, vars);
        }
        return sum;
    };

    // the fixed block with rows (1,0,0,0),(0,1,0,0) and columns (3,1,1,0),(1,3,0,1)
    SparsePoly g1 = sum_for(MultiIndex{2, 1, 1, 1},
                            {{rpos({1, 0, 0, 0}), rpos({0, 1, 0, 0})},
                             {cpos({3, 1, 1, 0}), cpos({1, 3, 0, 1})}});
    REQUIRE(poly_to_text(g1, vars) == "-38*x[2,3,0,1]*x[3,2,1,0]");
    REQUIRE(g1.is_homogeneous());
    REQUIRE(g1.degree() == 2);

    // a block whose plain minor vanishes; the whole value is a correction term
    SparsePoly g2 = sum_for(MultiIndex{0, 0, 2, 3},
                            {{rpos({0, 0, 0, 1}), rpos({0, 0, 1, 0})},
                             {cpos({0, 0, 2, 3}), cpos({0, 1, 1, 3})}});
    REQUIRE(poly_to_text(g2, vars) == "-3*x[0,0,3,3]*x[0,1,3,2]");
}

TEST_CASE("literal sum over all columns equals the shortcut form", "[detideal]") {
    // for j outside the block, N and M have identical slices; spot-check on
    // full N matrices
    const int m = 2, d = 5, s = 1;
    const IndexSet& vars = cached_index_set(m, d, variable_degree(m, d));
    IvhsMatrix M = build_M(m, d);
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<std::size_t> ci(0, M.col_count() - 1);
    std::uniform_int_distribution<std::size_t> ai(0, M.col_count() - 1);
    const auto& alphas = cached_index_set(m, d, d);
    for (int trial = 0; trial < 3; ++trial) {
        MinorSelector sel;
        sel.row_positions = {0, 2};
        std::set<std::size_t> cols;
        while (cols.size() < 2) cols.insert(ci(rng));
        sel.col_positions.assign(cols.begin(), cols.end());
        const MultiIndex alpha = alphas[ai(rng)];
        // literal: sum over every j in I_d of det(N_{j,alpha}|_B)
        SparsePoly literal = SparsePoly::zero(vars.size());
        for (const MultiIndex& j : alphas.members()) {
            IvhsMatrix N = build_N(m, d, j, alpha);
            literal += det_expand(detail::take_slice(N, sel), vars);
        }
        // implementation shortcut
        IvhsMatrix Mc = build_M_check(m, d, alpha);
        SparsePoly shortcut =
            det_expand(detail::take_slice(M, sel), vars) * mpq_class(long(M.col_count() - 2));
        for (std::size_t cp = 0; cp < 2; ++cp) {
            auto slice = detail::take_slice(M, sel);
            for (std::size_t rr = 0; rr < 2; ++rr)
                slice[rr][cp] = Mc.entry(sel.row_positions[rr], sel.col_positions[cp]);
            shortcut += det_expand(slice, vars);
        }
        REQUIRE(literal == shortcut);
    }
}

TEST_CASE("empty ideal beyond the rank range keeps an explanatory note", "[detideal]") {
    IdealSpec spec = minors_ideal_0(2, 4, 1);
    REQUIRE(spec.generators.empty());
    REQUIRE(spec.note.has_value());
    REQUIRE_THAT(*spec.note, Catch::Matchers::ContainsSubstring("rank cannot exceed"));
    std::string text = export_ideal(spec);
    ParsedIdeal back = parse_ideal(text);
    REQUIRE(back.generators.empty());
    REQUIRE(back.note.has_value());
}

TEST_CASE("export has one line per generator and round-trips", "[detideal]") {
    IdealSpec spec = minors_ideal_0(2, 4, 0);
    std::string text = export_ideal(spec);
    long long lines = 0, header = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') ++header;
        else ++lines;
    }
    REQUIRE(lines == 19);
    REQUIRE(header == 2);

    ParsedIdeal back = parse_ideal(text);
    REQUIRE(back.m == 2);
    REQUIRE(back.d == 4);
    REQUIRE(back.s == 0);
    REQUIRE(back.variant == IdealVariant::I0);
    REQUIRE(back.generators.size() == spec.generators.size());
    for (std::size_t i = 0; i < back.generators.size(); ++i)
        REQUIRE(back.generators[i] == spec.generators[i].poly);

    REQUIRE_THROWS_AS(export_ideal(spec, "xml"), std::invalid_argument);
}
