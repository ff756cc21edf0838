#include "capmoments/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace capmoments {

namespace {

// Splits p = content * primitive, primitive having integer coefficients,
// gcd 1 and positive leading coefficient.
std::pair<mpq_class, QPoly> primitive_part(const QPoly& p) {
    if (p.is_zero()) return {0, QPoly()};
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class content(g, lcm_den);
    if (p.leading() < 0) content = -content;
    content.canonicalize();
    QPoly prim = p;
    prim *= mpq_class(1) / content;
    return {content, prim};
}

// Peels off integer roots of a primitive integer polynomial, largest first.
std::vector<mpz_class> extract_integer_roots(QPoly& p) {
    std::vector<mpz_class> roots;
    bool found = true;
    while (found && p.degree() >= 1) {
        found = false;
        if (p.coeff(0) == 0) {
            roots.emplace_back(0);
            p = p.divmod(QPoly::q()).first;
            found = true;
            continue;
        }
        const mpz_class a0 = abs(p.coeff(0).get_num());
        // Candidates divide a0; search up to a fixed bound to stay cheap.
        const mpz_class bound = a0 < 1000000 ? a0 : mpz_class(1000000);
        for (mpz_class x = bound; x >= 1 && !found; --x) {
            if (a0 % x != 0) continue;
            for (const mpz_class& cand : {mpz_class(x), mpz_class(-x)}) {
                if (p.eval(mpq_class(cand)) == 0) {
                    roots.push_back(cand);
                    p = p.divmod(QPoly{mpq_class(-cand), mpq_class(1)}).first;
                    found = true;
                    break;
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::string linear_factor(const mpz_class& root) {
    if (root == 0) return "q";
    return root > 0 ? "(q - " + root.get_str() + ")" : "(q + " + mpz_class(-root).get_str() + ")";
}

std::string poly_body(const QPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const mpq_class c = p.coeff(i);
        if (c == 0) continue;
        const mpq_class a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        std::string coef = a.get_den() == 1 ? a.get_num().get_str()
                                            : (latex ? "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}"
                                                     : a.get_str());
        if (i == 0) {
            os << coef;
            continue;
        }
        if (a != 1) os << (a.get_den() != 1 && !latex ? "(" + coef + ")" : coef);
        os << "q";
        if (i > 1) os << (latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i));
    }
    return os.str();
}

struct Side {
    std::vector<std::string> factors;
    [[nodiscard]] std::string join() const {
        std::string s;
        for (const auto& f : factors) s += f;
        return s;
    }
};

Side side(const mpz_class& scalar, std::vector<mpz_class> roots, const QPoly& rest, bool latex, bool ascending) {
    Side s;
    if (scalar != 1) s.factors.push_back(scalar.get_str());
    if (ascending) std::reverse(roots.begin(), roots.end());
    for (const auto& r : roots)
        if (r == 0) s.factors.push_back(linear_factor(r));
    for (const auto& r : roots)
        if (r != 0) s.factors.push_back(linear_factor(r));
    if (rest.degree() >= 1) {
        const std::string body = poly_body(rest, latex);
        s.factors.push_back(latex ? "\\left(" + body + "\\right)" : "(" + body + ")");
    }
    return s;
}

}  // namespace

QRat FactoredRatio::expand() const {
    QPoly num(scalar);
    for (const auto& r : num_roots) num *= QPoly{mpq_class(-r), mpq_class(1)};
    num *= num_rest;
    QPoly den(1);
    for (const auto& r : den_roots) den *= QPoly{mpq_class(-r), mpq_class(1)};
    den *= den_rest;
    return QRat(num, den);
}

FactoredRatio factor_ratio(const QRat& ratio) {
    FactoredRatio f;
    if (ratio.is_zero()) {
        f.scalar = 0;
        f.num_rest = QPoly(1);
        f.den_rest = QPoly(1);
        return f;
    }
    auto [cn, pn] = primitive_part(ratio.num());
    auto [cd, pd] = primitive_part(ratio.den());
    f.scalar = cn / cd;
    f.num_roots = extract_integer_roots(pn);
    f.den_roots = extract_integer_roots(pd);
    f.num_rest = pn;
    f.den_rest = pd;
    return f;
}

std::string render_text(const FactoredRatio& f) {
    if (f.scalar == 0) return "0";
    const mpz_class sn = abs(f.scalar.get_num());
    Side num = side(sn, f.num_roots, f.num_rest, false, true);
    Side den = side(f.scalar.get_den(), f.den_roots, f.den_rest, false, false);
    std::string out = f.scalar < 0 ? "-" : "";
    out += num.factors.empty() ? "1" : num.join();
    if (den.factors.empty()) return out;
    if (den.factors.size() == 1) return out + "/" + den.join();
    return out + "/(" + den.join() + ")";
}

std::string render_latex(const FactoredRatio& f) {
    if (f.scalar == 0) return "0";
    const mpz_class sn = abs(f.scalar.get_num());
    Side num = side(sn, f.num_roots, f.num_rest, true, true);
    Side den = side(f.scalar.get_den(), f.den_roots, f.den_rest, true, false);
    std::string out = f.scalar < 0 ? "-" : "";
    const std::string top = num.factors.empty() ? "1" : num.join();
    if (den.factors.empty()) return out + top;
    return out + "\\frac{" + top + "}{" + den.join() + "}";
}

std::string render_poly(const QPoly& p) { return poly_body(p, false); }

std::string render_poly_latex(const QPoly& p) { return poly_body(p, true); }

nlohmann::ordered_json moment_to_json(const MomentResult& res) {
    nlohmann::ordered_json j;
    j["p"] = res.p;
    j["r"] = res.r;
    j["m"] = res.m;
    j["n"] = res.n;
    j["variable"] = "q";
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : res.poly.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    j["coeffs"] = std::move(coeffs);
    return j;
}

QPoly poly_from_json(const nlohmann::json& j) {
    std::vector<mpq_class> v;
    for (const auto& pair : j.at("coeffs")) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("poly_from_json: coefficient must be [num, den]");
        mpq_class c(mpz_class(pair[0].get<std::string>()), mpz_class(pair[1].get<std::string>()));
        c.canonicalize();
        v.push_back(c);
    }
    return QPoly(std::move(v));
}

}  // namespace capmoments
