#include "capmoments/qpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace capmoments {

QPoly::QPoly(long c) : coeffs_{mpq_class(c)} { trim(); }

QPoly::QPoly(const mpq_class& c) : coeffs_{c} { trim(); }

QPoly::QPoly(std::initializer_list<mpq_class> coeffs) : coeffs_(coeffs) { trim(); }

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int e, const mpq_class& c) {
    if (e < 0) throw std::invalid_argument("QPoly::monomial: negative exponent");
    std::vector<mpq_class> v(static_cast<std::size_t>(e) + 1);
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const mpq_class& QPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("QPoly division by zero");
    QPoly rem = *this;
    const int dd = divisor.degree();
    if (rem.degree() < dd) return {QPoly(), rem};
    std::vector<mpq_class> quot(static_cast<std::size_t>(rem.degree() - dd) + 1);
    const mpq_class& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        mpq_class factor = rem.leading() / lead;
        quot[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i)
            rem.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    return {QPoly(std::move(quot)), rem};
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r = *this;
    mpq_class inv = 1 / leading();
    r *= inv;
    return r;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly binomial_poly(int shift, int k) {
    if (k < 0) return QPoly();
    QPoly acc(1);
    mpz_class fact = 1;
    for (int i = 0; i < k; ++i) {
        acc *= QPoly{mpq_class(-(shift + i)), mpq_class(1)};
        fact *= i + 1;
    }
    acc *= mpq_class(1, 1) / mpq_class(fact);
    return acc;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
    normalize();
}

QRat QRat::q_power(int e) {
    if (e >= 0) return QRat(QPoly::monomial(e));
    return QRat(QPoly(1), QPoly::monomial(-e));
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        QPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    mpq_class inv = 1 / den_.leading();
    if (inv != 1) {
        num_ *= inv;
        den_ *= inv;
    }
}

QPoly QRat::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial: " + to_string());
    return num_;
}

mpq_class QRat::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw std::domain_error("QRat evaluated at a pole");
    return num_.eval(x) / d;
}

QRat& QRat::operator+=(const QRat& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o) {
    if (o.is_zero()) throw std::domain_error("QRat division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string QRat::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

}  // namespace capmoments
