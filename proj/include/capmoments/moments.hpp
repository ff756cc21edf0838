#pragma once

#include "capmoments/partitions.hpp"
#include "capmoments/qpoly.hpp"
#include "capmoments/sympoly.hpp"

#include <string>
#include <vector>

namespace capmoments {

/// Where the q-power of a matrix class is booked in the collapsed formula.
enum class QExponent {
    KernelDim,  ///< q^{dim ker X}
    NegRank,    ///< q^{-rk X}; the q^{l} lives in the outer q^{l(lambda)}
};

struct Conventions {
    SymmetrizationNorm norm = SymmetrizationNorm::Average;
    QExponent exponent = QExponent::NegRank;

    friend bool operator==(const Conventions&, const Conventions&) = default;
    [[nodiscard]] std::string to_string() const;
};

/// The convention selected by arbitrate_conventions against the brute-force
/// oracle. A test pins the two together.
inline constexpr Conventions kFrozenConventions{SymmetrizationNorm::Average, QExponent::NegRank};

enum class Method { Collapsed, Theorem1, Both };

std::string to_string(Method m);

struct MomentResult {
    int p = 3;
    int r = 3;
    int m = 0;
    int n = 0;
    QPoly poly;     ///< F(m, n)
    QPoly zeroth;   ///< F(0, n) = C(q, n)
    Method method = Method::Collapsed;

    /// F(m, n) / F(0, n) in lowest terms.
    [[nodiscard]] QRat ratio() const;
};

/// Symmetric polynomial attached to one multiplicity map:
/// sum over l and classes [X] of (q-weight) * #[X] * Phi_l(J(X)).
SymPoly f_bold_of_map(const MultiplicityMap& m, int p, Conventions conv = kFrozenConventions);

/// sum over maps of mass m of (m!/prod m(rho)!) prod (sign(rho)/z(rho))^{m(rho)} * f_bold_of_map.
/// Independent of n; memoized on (p, r, m, conv).
SymPoly f_bold(int m, int r, int p, Conventions conv = kFrozenConventions);

/// sum over lambda of n of q^{l(lambda)} sign(lambda)/z(lambda) * f_bold(m)(lambda), unreduced.
QRat moment_rational(int m, int n, int r, int p, Conventions conv = kFrozenConventions);

/// F(m, n) by the collapsed symmetric-function formula. Throws ConsistencyError
/// if the result is not a polynomial or violates deg <= n - 1 (m >= 1).
MomentResult moment_poly(int m, int n, int r, int p, Conventions conv = kFrozenConventions);

/// G_0(m, nu) straight from the definition: sum over set partitions of the k
/// cells with block sizes nu of prod_j (nu_j - 1)! * q^{dim ker X}.
QPoly g0_direct(const MultiplicityMap& m, const Partition& nu, int p);

/// G_0(m, nu) reassembled from the matrix classes.
QPoly g0_from_classes(const MultiplicityMap& m, const Partition& nu, int p,
                      SymmetrizationNorm norm = kFrozenConventions.norm);

/// G(m, mu) = Tr(B_m P_mu), from the matrix classes.
QPoly g_coord(const MultiplicityMap& m, const Partition& mu, int p, SymmetrizationNorm norm = kFrozenConventions.norm);

/// H(mu, n) = trace of the Schur projection P_mu on the n-th exterior power.
QPoly h_coord(const Partition& mu, int n);

/// F(m, n) through the G * H decomposition over Schur-Weyl isotypic blocks.
MomentResult moment_via_theorem1(int m, int n, int r, int p, SymmetrizationNorm norm = kFrozenConventions.norm);

struct ArbitrationProbe {
    int d = 0;
    int n = 0;
    int m = 0;
    std::string expected;  ///< brute-force value, decimal
};

struct ConventionCandidate {
    Conventions conventions;
    bool survived = false;
    std::string detail;  ///< first failing probe, if any
};

struct ConventionRecord {
    Conventions chosen;
    std::vector<ConventionCandidate> candidates;
    std::vector<ArbitrationProbe> probes;
};

/// Tries every normalization candidate against exhaustive counts for
/// p^d, d in {1, 2}, n in {3, 4, 5}, m in {1, 2}. Throws ConsistencyError unless
/// exactly one candidate reproduces every probe.
ConventionRecord arbitrate_conventions(int p, int r);

}  // namespace capmoments
