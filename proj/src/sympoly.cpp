#include "capmoments/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace capmoments {

void ExponentPoly::add_term(const std::vector<int>& exponents, const QRat& c) {
    if (static_cast<int>(exponents.size()) != num_vars_) throw std::invalid_argument("ExponentPoly: exponent vector has wrong length");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("ExponentPoly: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExponentPoly& ExponentPoly::operator*=(const ExponentPoly& o) {
    if (o.num_vars_ != num_vars_) throw std::invalid_argument("ExponentPoly: variable count mismatch");
    ExponentPoly out(num_vars_);
    std::vector<int> e(static_cast<std::size_t>(num_vars_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

QRat ExponentPoly::eval(const std::vector<int>& values) const {
    if (static_cast<int>(values.size()) != num_vars_) throw std::invalid_argument("ExponentPoly::eval: wrong point dimension");
    QRat acc;
    for (const auto& [e, c] : terms_) {
        mpz_class mono = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), mpz_class(values[i]).get_mpz_t(), static_cast<unsigned long>(e[i]));
            mono *= pw;
        }
        acc += c * QRat(mpq_class(mono));
    }
    return acc;
}

SymPoly SymPoly::monomial(const Partition& nu, const QRat& c) {
    SymPoly f;
    f.add_term(nu, c);
    return f;
}

int SymPoly::degree() const noexcept {
    int d = -1;
    for (const auto& [nu, c] : terms_) d = std::max(d, nu.weight());
    return d;
}

void SymPoly::add_term(const Partition& nu, const QRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(nu, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [nu, c] : o.terms_) add_term(nu, c);
    return *this;
}

SymPoly& SymPoly::operator*=(const QRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [nu, v] : terms_) v *= c;
    return *this;
}

ExponentPoly SymPoly::to_exponent_poly(int num_vars) const {
    ExponentPoly g(num_vars);
    for (const auto& [nu, c] : terms_) {
        if (nu.length() > num_vars) continue;
        std::vector<int> e(nu.parts());
        e.resize(static_cast<std::size_t>(num_vars), 0);
        std::sort(e.begin(), e.end());
        do {
            g.add_term(e, c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return g;
}

mpz_class monomial_eval(const Partition& nu, const Partition& lambda) {
    if (nu.length() > lambda.length()) return 0;
    // Distinct part values of nu with their multiplicities.
    std::vector<int> values;
    std::vector<int> remaining;
    for (int x : nu.parts()) {
        if (!values.empty() && values.back() == x) {
            ++remaining.back();
        } else {
            values.push_back(x);
            remaining.push_back(1);
        }
    }
    // DP over the variables: state = multiplicities still to be placed.
    std::map<std::vector<int>, mpz_class> states{{remaining, 1}};
    for (int x : lambda.parts()) {
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [state, count] : states) {
            next[state] += count;  // exponent 0 on this variable
            for (std::size_t v = 0; v < values.size(); ++v) {
                if (state[v] == 0) continue;
                auto s = state;
                --s[v];
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(values[v]));
                next[s] += count * pw;
            }
        }
        states = std::move(next);
    }
    auto it = states.find(std::vector<int>(values.size(), 0));
    return it == states.end() ? mpz_class(0) : it->second;
}

QRat sympoly_eval(const SymPoly& f, const Partition& lambda) {
    QRat acc;
    for (const auto& [nu, c] : f.terms()) {
        mpz_class v = monomial_eval(nu, lambda);
        if (v != 0) acc += c * QRat(mpq_class(v));
    }
    return acc;
}

std::pair<Partition, mpq_class> symmetrize_monomial(const std::vector<int>& exponents, SymmetrizationNorm norm) {
    std::vector<int> sorted = exponents;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    // sum over S_l of tau.x^e = |Stab(e)| * m_nu, Stab counting equal exponents including zeros.
    mpz_class stab = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        for (std::size_t t = 2; t <= j - i; ++t) stab *= static_cast<unsigned long>(t);
        i = j;
    }
    mpq_class c(stab);
    if (norm == SymmetrizationNorm::Average) {
        mpz_class lf = 1;
        for (std::size_t t = 2; t <= sorted.size(); ++t) lf *= static_cast<unsigned long>(t);
        c /= lf;
    }
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
    return {Partition(std::move(sorted)), c};
}

SymPoly symmetrize(const ExponentPoly& g, SymmetrizationNorm norm) {
    SymPoly f;
    for (const auto& [e, c] : g.terms()) {
        auto [nu, factor] = symmetrize_monomial(e, norm);
        f.add_term(nu, c * QRat(factor));
    }
    return f;
}

QRat coeff(const SymPoly& f, const Partition& nu) {
    auto it = f.terms().find(nu);
    return it == f.terms().end() ? QRat() : it->second;
}

}  // namespace capmoments
