#pragma once

#include "capmoments/moments.hpp"
#include "capmoments/qpoly.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <string>
#include <vector>

namespace capmoments {

/// scalar * prod (q - num_roots[i]) * num_rest / (prod (q - den_roots[i]) * den_rest),
/// with num_rest and den_rest primitive integer polynomials without integer roots
/// and with positive leading coefficients. Text output lists numerator roots
/// increasing and denominator roots decreasing, with q itself first.
struct FactoredRatio {
    mpq_class scalar;
    std::vector<mpz_class> num_roots;  ///< decreasing
    QPoly num_rest;
    std::vector<mpz_class> den_roots;  ///< decreasing
    QPoly den_rest;

    [[nodiscard]] QRat expand() const;
};

FactoredRatio factor_ratio(const QRat& ratio);

/// e.g. "120(q^2 + 89q - 540)/((q - 5)(q - 4)(q - 2))"
std::string render_text(const FactoredRatio& f);
std::string render_latex(const FactoredRatio& f);
/// Integer-style rendering "q^2 + 89q - 540"; rational coefficients print as a/b.
std::string render_poly(const QPoly& p);
std::string render_poly_latex(const QPoly& p);

/// {"p","r","m","n","variable":"q","coeffs":[["num","den"],...]} low degree first.
nlohmann::ordered_json moment_to_json(const MomentResult& res);
/// Reads back the "coeffs" array of moment_to_json.
QPoly poly_from_json(const nlohmann::json& j);

}  // namespace capmoments
