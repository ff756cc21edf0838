#pragma once

#include "capmoments/partitions.hpp"
#include "capmoments/qpoly.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace capmoments {

/// How the symmetrization map over S_l is normalized.
enum class SymmetrizationNorm {
    Average,  ///< (1/l!) sum over S_l
    Sum,      ///< plain sum over S_l
};

/// Polynomial in a fixed number of variables x_1..x_l, keyed by exponent vector.
class ExponentPoly {
public:
    explicit ExponentPoly(int num_vars) : num_vars_(num_vars) {}

    [[nodiscard]] int num_vars() const noexcept { return num_vars_; }
    [[nodiscard]] const std::map<std::vector<int>, QRat>& terms() const noexcept { return terms_; }

    /// Adds c * x^exponents; the exponent vector must have num_vars() entries.
    void add_term(const std::vector<int>& exponents, const QRat& c);

    ExponentPoly& operator*=(const ExponentPoly& o);
    friend ExponentPoly operator*(ExponentPoly a, const ExponentPoly& b) { return a *= b; }
    friend bool operator==(const ExponentPoly& a, const ExponentPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    /// Evaluates at integer points x_i = values[i].
    [[nodiscard]] QRat eval(const std::vector<int>& values) const;

private:
    int num_vars_;
    std::map<std::vector<int>, QRat> terms_;
};

/// Symmetric polynomial sum_nu c_nu m_nu in the monomial basis, with
/// coefficients rational in q. Zero coefficients are never stored.
class SymPoly {
public:
    SymPoly() = default;
    /// c * m_nu.
    static SymPoly monomial(const Partition& nu, const QRat& c = QRat(1));

    [[nodiscard]] const std::map<Partition, QRat>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// max |nu| over stored terms; -1 for zero.
    [[nodiscard]] int degree() const noexcept;

    void add_term(const Partition& nu, const QRat& c);
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator*=(const QRat& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator*(SymPoly a, const QRat& c) { return a *= c; }
    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

    /// Views the l-variable restriction as an ExponentPoly (l >= max length).
    [[nodiscard]] ExponentPoly to_exponent_poly(int num_vars) const;

private:
    std::map<Partition, QRat> terms_;
};

/// m_nu evaluated at x_i = lambda_i (and 0 beyond l(lambda)).
mpz_class monomial_eval(const Partition& nu, const Partition& lambda);

/// sum_nu c_nu m_nu(lambda).
QRat sympoly_eval(const SymPoly& f, const Partition& lambda);

/// Symmetrization over S_l re-expressed in the monomial basis of l variables.
SymPoly symmetrize(const ExponentPoly& g, SymmetrizationNorm norm = SymmetrizationNorm::Average);

/// Coefficient of m_nu, zero if absent.
QRat coeff(const SymPoly& f, const Partition& nu);

/// Symmetrization of the single monomial x^exponents: returns (nu, c) with
/// symmetrize(x^exponents) = c * m_nu.
std::pair<Partition, mpq_class> symmetrize_monomial(const std::vector<int>& exponents, SymmetrizationNorm norm);

}  // namespace capmoments
