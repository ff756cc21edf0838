#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace capmoments {

/// Univariate polynomial in q with exact rational coefficients, stored
/// low-degree-first. The zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);  // NOLINT(google-explicit-constructor)
    QPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    QPoly(std::initializer_list<mpq_class> coeffs);
    explicit QPoly(std::vector<mpq_class> coeffs);

    /// The monomial q^e.
    static QPoly monomial(int e, const mpq_class& c = 1);
    static QPoly q() { return monomial(1); }

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] mpq_class coeff(int i) const;
    [[nodiscard]] const mpq_class& leading() const;
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    [[nodiscard]] mpq_class eval(const mpq_class& x) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const mpq_class& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const mpq_class& c) { return a *= c; }
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Euclidean division; throws std::domain_error on a zero divisor.
    [[nodiscard]] std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    /// Scales to leading coefficient 1; the zero polynomial is returned unchanged.
    [[nodiscard]] QPoly monic() const;

    /// Renders e.g. "3/2*q^2 - q + 1" using the given variable name.
    [[nodiscard]] std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// The binomial polynomial C(q - shift, k) = (q-shift)(q-shift-1)...(q-shift-k+1)/k!.
QPoly binomial_poly(int shift, int k);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Rational function num/den in q, kept in lowest terms with a monic denominator.
class QRat {
public:
    QRat() : den_(1) {}
    QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QRat(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    QRat(QPoly num, QPoly den);

    /// q^e for any integer e.
    static QRat q_power(int e);

    [[nodiscard]] const QPoly& num() const noexcept { return num_; }
    [[nodiscard]] const QPoly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// The numerator, provided the denominator is 1; throws otherwise.
    [[nodiscard]] QPoly as_poly() const;
    [[nodiscard]] mpq_class eval(const mpq_class& x) const;

    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);

    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    QRat operator-() const { return QRat(-num_, den_); }

    friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    [[nodiscard]] std::string to_string(const std::string& var = "q") const;

private:
    void normalize();
    QPoly num_;
    QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

}  // namespace capmoments
