#include "capmoments/qpoly.hpp"

#include <doctest.h>

using namespace capmoments;

TEST_CASE("qpoly arithmetic") {
    const QPoly q = QPoly::q();
    const QPoly a = q * q - QPoly(1);  // q^2 - 1
    CHECK(a.degree() == 2);
    CHECK(a.eval(3) == 8);
    auto [quot, rem] = a.divmod(q - QPoly(1));
    CHECK(quot == q + QPoly(1));
    CHECK(rem.is_zero());
    CHECK((a - a).is_zero());
    CHECK(QPoly().degree() == -1);
    CHECK_THROWS_AS((void)a.divmod(QPoly()), std::domain_error);
}

TEST_CASE("gcd is monic") {
    const QPoly q = QPoly::q();
    const QPoly a = (q - QPoly(1)) * (q - QPoly(2)) * mpq_class(3);
    const QPoly b = (q - QPoly(1)) * (q + QPoly(5)) * mpq_class(-7, 2);
    CHECK(gcd(a, b) == q - QPoly(1));
    CHECK(gcd(QPoly(), QPoly()).is_zero());
}

TEST_CASE("binomial polynomial") {
    const QPoly c = binomial_poly(0, 4);
    for (int x = 0; x <= 12; ++x) {
        mpz_class expect = 0;
        if (x >= 4) mpz_bin_uiui(expect.get_mpz_t(), static_cast<unsigned long>(x), 4);
        CHECK(c.eval(x) == expect);
    }
    CHECK(binomial_poly(3, 0) == QPoly(1));
}

TEST_CASE("qrat stays reduced with a monic denominator") {
    const QPoly q = QPoly::q();
    QRat r((q - QPoly(1)) * (q - QPoly(2)), (q - QPoly(1)) * mpq_class(4));
    CHECK(r.den() == QPoly(1));
    CHECK(r.is_polynomial());
    CHECK(r.as_poly() == (q - QPoly(2)) * mpq_class(1, 4));

    QRat inv = QRat(1) / QRat(q);
    CHECK(inv == QRat::q_power(-1));
    CHECK((inv * QRat(q)) == QRat(1));
    CHECK((QRat::q_power(-2) + QRat::q_power(-2)).eval(2) == mpq_class(1, 2));
    CHECK_THROWS_AS(QRat(1) / QRat(), std::domain_error);
    CHECK_THROWS_AS(QRat(1, QPoly()), std::domain_error);
}
