#include "capmoments/errors.hpp"
#include "capmoments/moments.hpp"
#include "capmoments/oracle.hpp"

#include <doctest.h>

using namespace capmoments;

namespace {

const QPoly q = QPoly::q();

QPoly first_moment_closed_form(int n) { return q * (q - QPoly(1)) * mpq_class(1, 6) * binomial_poly(3, n - 3); }

mpz_class eval_integer(const QPoly& f, long x) {
    const mpq_class v = f.eval(mpq_class(x));
    REQUIRE(v.get_den() == 1);
    return v.get_num();
}

}  // namespace

TEST_CASE("trivial moments") {
    for (int n = 0; n <= 8; ++n) {
        const auto zeroth = moment_poly(0, n, 3, 3);
        CHECK(zeroth.poly == binomial_poly(0, n));
        CHECK(zeroth.zeroth == binomial_poly(0, n));
        CHECK(zeroth.ratio() == QRat(1));
    }
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n < 3; ++n) CHECK(moment_poly(m, n, 3, 3).poly.is_zero());
    CHECK(moment_poly(0, 4, 3, 3).poly == q * (q - QPoly(1)) * (q - QPoly(2)) * (q - QPoly(3)) * mpq_class(1, 24));
}

TEST_CASE("the empty multiplicity map contributes the constant 1") {
    const MultiplicityMap zero(3, {});
    const SymPoly f = f_bold_of_map(zero, 3);
    CHECK(f == SymPoly::monomial(Partition(), QRat(1)));
}

TEST_CASE("g0_direct examples") {
    const MultiplicityMap unit(3, {{Partition{1, 1, 1}, 1}});
    CHECK(g0_direct(unit, Partition{3}, 3) == QPoly(2) * q);
    CHECK(g0_direct(unit, Partition{1, 1, 1}, 3) == q * q);
    const MultiplicityMap whole(3, {{Partition{3}, 1}});
    CHECK(g0_direct(whole, Partition{1}, 3) == q);
}

TEST_CASE("g0 from matrix classes matches the direct sum for k <= 6") {
    for (int p : {2, 3})
        for (int r = 2; r <= 3; ++r)
            for (int m = 1; m <= 6; ++m)
                for (const auto& map : enumerate_multiplicity_maps(m, r)) {
                    if (map.degree() > 6) continue;
                    for (const auto& nu : enumerate_partitions(map.degree())) {
                        CAPTURE(map.degree());
                        CHECK(g0_from_classes(map, nu, p) == g0_direct(map, nu, p));
                    }
                }
}

TEST_CASE("h_coord examples") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(h_coord(Partition(), n) == binomial_poly(0, n));
        CHECK(h_coord(Partition{1}, n) == QPoly(n) * binomial_poly(0, n));
    }
}

TEST_CASE("first moment closed form") {
    for (int n = 3; n <= 10; ++n) CHECK(moment_poly(1, n, 3, 3).poly == first_moment_closed_form(n));
    CHECK(eval_integer(moment_poly(1, 4, 3, 3).poly, 9) == 72);
    CHECK(eval_integer(moment_poly(1, 3, 3, 3).poly, 3) == 1);
}

TEST_CASE("collapsed and isotypic paths agree") {
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 7; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(moment_poly(m, n, 3, 3).poly == moment_via_theorem1(m, n, 3, 3).poly);
        }
    for (int n = 0; n <= 5; ++n) CHECK(moment_poly(3, n, 3, 3).poly == moment_via_theorem1(3, n, 3, 3).poly);
    for (int n = 0; n <= 6; ++n) CHECK(moment_poly(2, n, 2, 2).poly == moment_via_theorem1(2, n, 2, 2).poly);
}

TEST_CASE("degree bound and headline vanishing") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 10; ++n) CHECK(moment_poly(m, n, 3, 3).poly.degree() <= n - 1);
    const QPoly f = moment_poly(2, 10, 3, 3).poly;
    for (long x : {1L, 3L, 9L}) CHECK(eval_integer(f, x) == 0);
}

TEST_CASE("small moments match exhaustive counts") {
    for (int d = 1; d <= 2; ++d) {
        long qv = 1;
        for (int i = 0; i < d; ++i) qv *= 3;
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 5; ++n) {
                CAPTURE(d);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(eval_integer(moment_poly(m, n, 3, 3).poly, qv) == brute_force_moment(3, d, 3, m, n));
            }
    }
    // r = 2 over F_2^d: pairs summing to zero never occur.
    for (int n = 0; n <= 4; ++n) CHECK(eval_integer(moment_poly(1, n, 2, 2).poly, 4) == brute_force_moment(2, 2, 2, 1, n));
}

TEST_CASE("convention arbitration selects the frozen choice") {
    const ConventionRecord rec = arbitrate_conventions(3, 3);
    CHECK(rec.chosen == kFrozenConventions);
    int survivors = 0;
    for (const auto& c : rec.candidates) survivors += c.survived ? 1 : 0;
    CHECK(survivors == 1);
    CHECK(rec.candidates.size() == 4);
    CHECK_FALSE(rec.probes.empty());
}

TEST_CASE("rejected conventions do not reproduce the first moment") {
    const Conventions kernel{SymmetrizationNorm::Average, QExponent::KernelDim};
    const QRat wrong = moment_rational(1, 3, 3, 3, kernel);
    CHECK(wrong.eval(3) != 1);
    CHECK(moment_rational(1, 3, 3, 3).eval(3) == 1);
}

TEST_CASE("moment_poly validates input") {
    CHECK_THROWS_AS(moment_poly(1, 3, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(moment_poly(-1, 3, 3, 3), std::invalid_argument);
}
