#include "capmoments/characters.hpp"
#include "capmoments/errors.hpp"
#include "capmoments/moments.hpp"
#include "capmoments/oracle.hpp"
#include "capmoments/render.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

using namespace capmoments;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

const QPoly q = QPoly::q();

mpz_class eval_at(const QPoly& f, long x) {
    const mpq_class v = f.eval(mpq_class(x));
    if (v.get_den() != 1) throw ConsistencyError("non-integral value at q = " + std::to_string(x));
    return v.get_num();
}

long pow3(int d) {
    long v = 1;
    for (int i = 0; i < d; ++i) v *= 3;
    return v;
}

Outcome headline() {
    Outcome o;
    const QRat ratio = moment_poly(2, 10, 3, 3).ratio();
    const QRat expect(QPoly(120) * (q * q + QPoly(89) * q - QPoly(540)), (q - QPoly(5)) * (q - QPoly(4)) * (q - QPoly(2)));
    const std::string text = render_text(factor_ratio(ratio));
    if (!(ratio == expect)) o.fail("ratio is " + ratio.to_string());
    o.detail = o.ok ? text : o.detail;
    return o;
}

Outcome vanishing() {
    Outcome o;
    const QPoly f = moment_poly(2, 10, 3, 3).poly;
    for (long x : {1L, 3L, 9L})
        if (eval_at(f, x) != 0) o.fail("F(2,10) nonzero at q = " + std::to_string(x));
    return o;
}

Outcome oracle_equality() {
    Outcome o;
    int cases = 0;
    for (int d = 1; d <= 2; ++d)
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 3; ++m) {
                const mpz_class lhs = eval_at(moment_poly(m, n, 3, 3).poly, pow3(d));
                const mpz_class rhs = brute_force_moment(3, d, 3, m, n);
                ++cases;
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "d=" << d << " n=" << n << " m=" << m << ": " << lhs << " vs " << rhs;
                    o.fail(os.str());
                }
            }
    const mpz_class lhs = eval_at(moment_poly(2, 4, 3, 3).poly, 27);
    const mpz_class rhs = brute_force_moment(3, 3, 3, 2, 4);
    ++cases;
    if (lhs != rhs) o.fail("spot check d=3 n=4 m=2: " + lhs.get_str() + " vs " + rhs.get_str());
    if (o.ok) o.detail = std::to_string(cases) + " cases";
    return o;
}

std::vector<std::pair<int, int>> agreement_grid() {
    std::vector<std::pair<int, int>> grid;
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 10; ++n) grid.emplace_back(m, n);
    for (int n = 0; n <= 6; ++n) grid.emplace_back(3, n);
    return grid;
}

Outcome two_paths() {
    Outcome o;
    for (auto [m, n] : agreement_grid()) {
        const MomentResult a = moment_poly(m, n, 3, 3);
        const MomentResult b = moment_via_theorem1(m, n, 3, 3);
        if (!(a.poly == b.poly)) o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    return o;
}

Outcome degree_bound() {
    Outcome o;
    for (auto [m, n] : agreement_grid()) {
        if (m < 1) continue;
        const QPoly f = moment_poly(m, n, 3, 3).poly;
        if (f.degree() > n - 1) o.fail("deg F(" + std::to_string(m) + "," + std::to_string(n) + ") = " + std::to_string(f.degree()));
    }
    return o;
}

Outcome first_moment() {
    Outcome o;
    const QPoly triples = q * (q - QPoly(1)) * mpq_class(1, 6);
    for (int d = 1; d <= 3; ++d) {
        const FieldSpace space(3, d);
        std::vector<std::uint32_t> all(space.size());
        std::iota(all.begin(), all.end(), 0u);
        const auto count = count_zero_sum_subsets(PointSet(3, d, all), 3);
        if (mpz_class(static_cast<unsigned long>(count)) != eval_at(triples, pow3(d)))
            o.fail("zero-sum triples in F_3^" + std::to_string(d) + " = " + std::to_string(count));
    }
    for (int n = 3; n <= 10; ++n)
        if (!(moment_poly(1, n, 3, 3).poly == triples * binomial_poly(3, n - 3))) o.fail("n=" + std::to_string(n));
    return o;
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(lens);
}

Outcome character_suite() {
    Outcome o;
    for (int k = 1; k <= 8; ++k) {
        const auto table = CharacterTable::of(k);
        const auto& cls = table->classes();
        const std::size_t n = cls.size();
        mpz_class squares = 0;
        for (std::size_t a = 0; a < n; ++a) {
            squares += mpz_class(static_cast<unsigned long>(dim_specht(cls[a]))) * static_cast<unsigned long>(dim_specht(cls[a]));
            for (std::size_t b = 0; b < n; ++b) {
                mpq_class row = 0;
                mpz_class col = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    mpq_class term(table->at(a, c) * table->at(b, c), static_cast<unsigned long>(z_of(cls[c])));
                    term.canonicalize();
                    row += term;
                    col += table->at(c, a) * table->at(c, b);
                }
                if (row != (a == b ? 1 : 0)) o.fail("row orthogonality k=" + std::to_string(k));
                if (col != (a == b ? mpz_class(static_cast<unsigned long>(z_of(cls[a]))) : mpz_class(0)))
                    o.fail("column orthogonality k=" + std::to_string(k));
            }
        }
        if (squares != static_cast<unsigned long>(factorial(k))) o.fail("sum of squares k=" + std::to_string(k));
    }
    for (int k = 1; k <= 5; ++k) {
        std::vector<std::vector<int>> perms;
        std::vector<int> p(static_cast<std::size_t>(k));
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::vector<Partition> types;
        for (const auto& s : perms) types.push_back(cycle_type(s));
        std::map<std::tuple<Partition, Partition, Partition>, long> counts;
        std::vector<int> prod(static_cast<std::size_t>(k));
        for (std::size_t a = 0; a < perms.size(); ++a)
            for (std::size_t b = 0; b < perms.size(); ++b) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
                ++counts[{types[a], types[b], cycle_type(prod)}];
            }
        const auto classes = enumerate_partitions(k);
        for (const auto& x : classes)
            for (const auto& y : classes)
                for (const auto& z : classes) {
                    auto it = counts.find({x, y, z});
                    const long expect = it == counts.end() ? 0 : it->second;
                    if (connection_count(x, y, z) != expect)
                        o.fail("connection count " + x.to_string() + " " + y.to_string() + " " + z.to_string());
                }
    }
    return o;
}

Outcome character_sum() {
    Outcome o;
    std::mt19937 rng(1);
    std::vector<std::uint32_t> all(9);
    std::iota(all.begin(), all.end(), 0u);
    for (int trial = 0; trial < 100; ++trial) {
        std::shuffle(all.begin(), all.end(), rng);
        const PointSet s(3, 2, std::vector<std::uint32_t>(all.begin(), all.begin() + 6));
        if (character_sum_a(s, 3) != count_zero_sum_subsets(s, 3)) o.fail("trial " + std::to_string(trial));
    }
    return o;
}

Outcome g0_arbiter() {
    Outcome o;
    int cases = 0;
    for (int m = 1; m <= 6; ++m)
        for (const auto& map : enumerate_multiplicity_maps(m, 3)) {
            if (map.degree() > 6) continue;
            for (const auto& nu : enumerate_partitions(map.degree())) {
                ++cases;
                if (!(g0_from_classes(map, nu, 3) == g0_direct(map, nu, 3))) o.fail("k=" + std::to_string(map.degree()) + " nu=" + nu.to_string());
            }
        }
    if (o.ok) o.detail = std::to_string(cases) + " cases";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"headline ratio F(2,10)/F(0,10)", headline},
        {"F(2,10) vanishes at q = 1, 3, 9", vanishing},
        {"polynomials match exhaustive counts", oracle_equality},
        {"collapsed and isotypic paths agree", two_paths},
        {"degree bound deg F(m,n) <= n - 1", degree_bound},
        {"first moment closed form", first_moment},
        {"character orthogonality and connection counts", character_suite},
        {"character-sum identity on random subsets", character_sum},
        {"class reconstruction of G0", g0_arbiter},
    };

    bool all_ok = true;
    std::vector<bool> passed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        passed.push_back(o.ok);
        all_ok = all_ok && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
        std::cout << " (" << secs << "s)" << std::endl;
    }

    Outcome arb;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const ConventionRecord rec = arbitrate_conventions(3, 3);
        int survivors = 0;
        for (const auto& c : rec.candidates) survivors += c.survived ? 1 : 0;
        if (survivors != 1) arb.fail(std::to_string(survivors) + " survivors");
        if (!(rec.chosen == kFrozenConventions)) arb.fail("frozen " + kFrozenConventions.to_string() + " but arbitration chose " + rec.chosen.to_string());
        for (std::size_t i = 0; i < 6; ++i)
            if (!passed[i]) arb.fail("frozen choice fails criterion " + std::to_string(i + 1));
        if (arb.ok) arb.detail = rec.chosen.to_string();
    } catch (const std::exception& e) {
        arb.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_ok = all_ok && arb.ok;
    std::cout << (arb.ok ? "PASS" : "FAIL") << " 10 unique convention survives arbitration [" << arb.detail << "] (" << secs << "s)" << std::endl;
    return all_ok ? 0 : 1;
}
