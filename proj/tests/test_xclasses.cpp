#include "capmoments/errors.hpp"
#include "capmoments/xclasses.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using namespace capmoments;

namespace {

std::uint64_t stirling2(int n, int k) {
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<std::uint64_t>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Every function from the cells of the rows to the columns, collapsed to matrices.
// Returns matrix -> number of functions producing it, keeping only all-columns-nonzero ones.
std::map<std::vector<RowVector>, std::uint64_t> matrices_from_functions(const std::vector<Partition>& rows, int cols) {
    std::vector<std::pair<std::size_t, int>> cells;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int part : rows[i].parts()) cells.emplace_back(i, part);
    std::map<std::vector<RowVector>, std::uint64_t> out;
    std::vector<int> assign(cells.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            std::vector<RowVector> x(rows.size(), RowVector(static_cast<std::size_t>(cols), 0));
            for (std::size_t t = 0; t < cells.size(); ++t) x[cells[t].first][static_cast<std::size_t>(assign[t])] += cells[t].second;
            for (int j = 0; j < cols; ++j) {
                bool nonzero = false;
                for (const auto& row : x) nonzero = nonzero || row[static_cast<std::size_t>(j)] != 0;
                if (!nonzero) return;
            }
            ++out[x];
            return;
        }
        for (int j = 0; j < cols; ++j) {
            assign[c] = j;
            rec(c + 1);
        }
    };
    rec(0);
    return out;
}

XMatrix random_orbit_element(const XMatrix& x, std::mt19937& rng) {
    XMatrix y = x;
    for (std::size_t i = 0; i < y.rows.size();) {
        std::size_t j = i;
        while (j < y.rows.size() && y.row_partitions[j] == y.row_partitions[i]) ++j;
        std::shuffle(y.rows.begin() + static_cast<std::ptrdiff_t>(i), y.rows.begin() + static_cast<std::ptrdiff_t>(j), rng);
        i = j;
    }
    std::vector<std::size_t> perm(static_cast<std::size_t>(x.num_cols()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& row : y.rows) {
        RowVector r(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) r[c] = row[perm[c]];
        row = r;
    }
    return y;
}

std::vector<MultiplicityMap> maps_up_to_degree(int max_k, int r) {
    std::vector<MultiplicityMap> out;
    for (int m = 1; m <= max_k; ++m)
        for (const auto& map : enumerate_multiplicity_maps(m, r))
            if (map.degree() <= max_k) out.push_back(map);
    return out;
}

}  // namespace

TEST_CASE("enumerate_row_fillings examples") {
    using M = std::map<RowVector, std::uint64_t>;
    CHECK(enumerate_row_fillings(Partition{1, 1}, 2) == M{{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
    CHECK(enumerate_row_fillings(Partition{2, 1}, 2) == M{{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}});
    CHECK(enumerate_row_fillings(Partition{3}, 1) == M{{{3}, 1}});
}

TEST_CASE("row filling counts total cols^length") {
    for (int r = 1; r <= 5; ++r)
        for (const auto& rho : enumerate_partitions(r))
            for (int cols = 1; cols <= 4; ++cols) {
                std::uint64_t total = 0;
                for (const auto& [v, c] : enumerate_row_fillings(rho, cols)) {
                    CHECK(std::accumulate(v.begin(), v.end(), 0) == r);
                    total += c;
                }
                std::uint64_t expect = 1;
                for (int i = 0; i < rho.length(); ++i) expect *= static_cast<std::uint64_t>(cols);
                CHECK(total == expect);
            }
}

TEST_CASE("enumerate_classes examples") {
    SUBCASE("single part") {
        const auto cls = enumerate_classes(MultiplicityMap(3, {{Partition{3}, 1}}), 1, 3);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].canon.rows == std::vector<RowVector>{{3}});
        CHECK(cls[0].orbit_size == 1);
        CHECK(cls[0].rank_mod_p == 0);
        CHECK(cls[0].kernel_dim() == 1);
    }
    SUBCASE("three unit parts over two columns") {
        const auto cls = enumerate_classes(MultiplicityMap(3, {{Partition{1, 1, 1}, 1}}), 2, 3);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].canon.rows == std::vector<RowVector>{{1, 2}});
        CHECK(cls[0].orbit_size == 2);
        CHECK(cls[0].rank_mod_p == 1);
        const XMatrix listed{{{2, 1}}, {Partition{1, 1, 1}}};
        CHECK(canonical_form(listed) == cls[0].canon);
    }
    SUBCASE("two rows into one column") {
        const auto cls = enumerate_classes(MultiplicityMap(3, {{Partition{1, 1, 1}, 2}}), 1, 3);
        REQUIRE(cls.size() == 1);
        CHECK(cls[0].canon.rows == std::vector<RowVector>{{3}, {3}});
        CHECK(cls[0].rank_mod_p == 0);
        CHECK(cls[0].orbit_size == 1);
    }
    SUBCASE("no valid matrices") {
        CHECK(enumerate_classes(MultiplicityMap(3, {{Partition{3}, 1}}), 2, 3).empty());
        CHECK(enumerate_classes(MultiplicityMap(3, {{Partition{3}, 1}}), 0, 3).empty());
    }
}

TEST_CASE("rank_mod_p examples") {
    CHECK(rank_mod_p(XMatrix{{{3}}, {Partition{3}}}, 3) == 0);
    CHECK(rank_mod_p(XMatrix{{{1, 1, 1}}, {Partition{1, 1, 1}}}, 3) == 1);
    CHECK(rank_mod_p(XMatrix{{{2, 1}, {1, 2}}, {Partition{2, 1}, Partition{2, 1}}}, 3) == 1);
    CHECK(rank_mod_p(XMatrix{{{2, 1}, {1, 2}}, {Partition{2, 1}, Partition{2, 1}}}, 5) == 2);
    CHECK_THROWS_AS(rank_mod_p(XMatrix{{{3}}, {Partition{3}}}, 4), std::invalid_argument);
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("j_poly examples") {
    ExponentPoly x1(1);
    x1.add_term({1}, QRat(1));
    CHECK(j_poly(XMatrix{{{3}}, {Partition{3}}}) == x1);

    ExponentPoly a(2);
    a.add_term({2, 1}, QRat(3));
    CHECK(j_poly(XMatrix{{{2, 1}}, {Partition{1, 1, 1}}}) == a);

    ExponentPoly b(2);
    b.add_term({1, 1}, QRat(1));
    CHECK(j_poly(XMatrix{{{2, 1}}, {Partition{2, 1}}}) == b);

    CHECK_THROWS_AS(j_poly(XMatrix{{{2, 1}}, {Partition{3}}}), ConsistencyError);
}

TEST_CASE("canonical_form golden values") {
    const std::vector<Partition> two{Partition{2, 1}, Partition{2, 1}};
    const XMatrix x{{{2, 1}, {1, 2}}, two};
    const XMatrix expect{{{1, 2}, {2, 1}}, two};
    CHECK(canonical_form(x) == expect);
    CHECK(canonical_form(expect) == expect);
    CHECK(canonical_form(XMatrix{{{0, 3}, {3, 0}}, {Partition{3}, Partition{2, 1}}}) == XMatrix{{{0, 3}, {3, 0}}, {Partition{3}, Partition{2, 1}}});
    CHECK(canonical_form(XMatrix{{{3, 0}, {0, 3}}, {Partition{3}, Partition{2, 1}}}) == XMatrix{{{0, 3}, {3, 0}}, {Partition{3}, Partition{2, 1}}});
}

TEST_CASE("orbit sizes reproduce unconstrained enumeration for k <= 6") {
    for (int r = 1; r <= 3; ++r)
        for (const auto& map : maps_up_to_degree(6, r)) {
            const auto rows = map.row_partitions();
            const int k = map.degree();
            for (int cols = 1; cols <= k; ++cols) {
                const auto brute = matrices_from_functions(rows, cols);
                const auto classes = enumerate_classes(map, cols, 3);
                std::uint64_t orbit_total = 0;
                std::uint64_t weighted = 0;
                std::set<std::vector<RowVector>> canons;
                for (const auto& c : classes) {
                    orbit_total += c.orbit_size;
                    std::uint64_t fill = 1;
                    for (const auto& f : c.j_polys) fill *= f.count;
                    weighted += c.orbit_size * fill;
                    CHECK(canons.insert(c.canon.rows).second);
                    CHECK(brute.count(c.canon.rows) == 1);
                    CHECK(c.canon == canonical_form(c.canon));
                    CHECK((map.row_group_order() * factorial(cols)) % c.orbit_size == 0);
                }
                CHECK(orbit_total == brute.size());
                // Each surjection of cells onto columns yields exactly one valid matrix.
                CHECK(weighted == factorial(cols) * stirling2(k, cols));
            }
        }
}

TEST_CASE("rank and canonical form are orbit invariants") {
    std::mt19937 rng(2024);
    for (int p : {2, 3, 5})
        for (const auto& map : maps_up_to_degree(6, 3))
            for (int cols = 1; cols <= map.degree(); ++cols)
                for (const auto& c : enumerate_classes(map, cols, p))
                    for (int s = 0; s < 5; ++s) {
                        const XMatrix y = random_orbit_element(c.canon, rng);
                        CHECK(rank_mod_p(y, p) == c.rank_mod_p);
                        CHECK(canonical_form(y) == c.canon);
                    }
}

TEST_CASE("j_poly degree and coefficient sums") {
    for (const auto& map : maps_up_to_degree(6, 3))
        for (int cols = 1; cols <= map.degree(); ++cols)
            for (const auto& c : enumerate_classes(map, cols, 3)) {
                const ExponentPoly j = j_poly(c.canon);
                CHECK(j == j_poly(c.j_polys, cols));
                QRat sum;
                for (const auto& [e, coef] : j.terms()) {
                    CHECK(std::accumulate(e.begin(), e.end(), 0) == map.degree());
                    CHECK(coef.den() == QPoly(1));
                    CHECK(coef.num().degree() == 0);
                    CHECK(coef.num().coeff(0) > 0);
                    CHECK(coef.num().coeff(0).get_den() == 1);
                    sum += coef;
                }
                std::uint64_t fill = 1;
                for (const auto& f : c.j_polys) fill *= f.count;
                CHECK(sum == QRat(static_cast<long>(fill)));
            }
}

TEST_CASE("generating-function conservation over all fillings") {
    // Summing J over every matrix (zero columns allowed) gives prod_i (x_1 + ... + x_l)^{l(rho_i)}.
    for (const auto& map : maps_up_to_degree(5, 3))
        for (int cols = 1; cols <= 3; ++cols) {
            const auto rows = map.row_partitions();
            std::vector<std::vector<RowVector>> options;
            for (const auto& rho : rows) {
                std::vector<RowVector> vs;
                for (const auto& [v, c] : enumerate_row_fillings(rho, cols)) vs.push_back(v);
                options.push_back(vs);
            }
            ExponentPoly total(cols);
            std::vector<std::size_t> idx(rows.size(), 0);
            while (true) {
                XMatrix x{{}, rows};
                for (std::size_t i = 0; i < rows.size(); ++i) x.rows.push_back(options[i][idx[i]]);
                const ExponentPoly j = j_poly(x);
                for (const auto& [e, coef] : j.terms()) total.add_term(e, coef);
                std::size_t i = 0;
                while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
                if (i == idx.size()) break;
            }
            ExponentPoly linear(cols);
            for (int j = 0; j < cols; ++j) {
                std::vector<int> e(static_cast<std::size_t>(cols), 0);
                e[static_cast<std::size_t>(j)] = 1;
                linear.add_term(e, QRat(1));
            }
            ExponentPoly expect(cols);
            expect.add_term(std::vector<int>(static_cast<std::size_t>(cols), 0), QRat(1));
            for (const auto& rho : rows)
                for (int b = 0; b < rho.length(); ++b) expect *= linear;
            CHECK(total == expect);
        }
}
