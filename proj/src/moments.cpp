#include "capmoments/moments.hpp"

#include "capmoments/characters.hpp"
#include "capmoments/errors.hpp"
#include "capmoments/oracle.hpp"
#include "capmoments/xclasses.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace capmoments {

std::string Conventions::to_string() const {
    std::string s = norm == SymmetrizationNorm::Average ? "phi=average" : "phi=sum";
    s += exponent == QExponent::NegRank ? ", weight=q^-rank" : ", weight=q^dimker";
    return s;
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Collapsed: return "collapsed";
        case Method::Theorem1: return "theorem1";
        case Method::Both: return "both";
    }
    return "?";
}

QRat MomentResult::ratio() const { return QRat(poly, zeroth); }

namespace {

mpq_class to_mpq(std::uint64_t v) { return mpq_class(mpz_class(static_cast<unsigned long>(v))); }

mpz_class factorial_mpz(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Accumulates sum_e c_e q^e with possibly negative exponents.
struct LaurentAccumulator {
    std::map<int, mpq_class> coeffs;

    void add(int e, const mpq_class& c) {
        if (c == 0) return;
        coeffs[e] += c;
    }

    [[nodiscard]] QRat to_qrat() const {
        int low = 0;
        for (const auto& [e, c] : coeffs) low = std::min(low, e);
        std::vector<mpq_class> v;
        for (const auto& [e, c] : coeffs) {
            const auto idx = static_cast<std::size_t>(e - low);
            if (v.size() <= idx) v.resize(idx + 1);
            v[idx] += c;
        }
        return QRat(QPoly(std::move(v)), QPoly::monomial(-low));
    }

    [[nodiscard]] QPoly to_qpoly() const { return to_qrat().as_poly(); }
};

// Visits (nu, coefficient of m_nu in Phi_l(J(X))) for every monomial of J(X),
// unmerged: several monomials may land on the same nu.
void for_each_symmetrized_term(const MatrixClass& cls, SymmetrizationNorm norm,
                               const std::function<void(const Partition&, const mpq_class&)>& visit) {
    const ExponentPoly j = j_poly(cls.j_polys, cls.num_cols());
    for (const auto& [e, c] : j.terms()) {
        auto [nu, factor] = symmetrize_monomial(e, norm);
        // J(X) has integer coefficients.
        visit(nu, factor * c.num().coeff(0));
    }
}

}  // namespace

SymPoly f_bold_of_map(const MultiplicityMap& m, int p, Conventions conv) {
    const int k = m.degree();
    if (k == 0) return SymPoly::monomial(Partition(), QRat(1));
    std::map<Partition, LaurentAccumulator> acc;
    for (int cols = 1; cols <= k; ++cols) {
        for (const auto& cls : enumerate_classes(m, cols, p)) {
            const int e = conv.exponent == QExponent::NegRank ? -cls.rank_mod_p : cls.kernel_dim();
            const mpq_class orbit = to_mpq(cls.orbit_size);
            for_each_symmetrized_term(cls, conv.norm, [&](const Partition& nu, const mpq_class& c) {
                acc[nu].add(e, orbit * c);
            });
        }
    }
    SymPoly f;
    for (const auto& [nu, a] : acc) f.add_term(nu, a.to_qrat());
    return f;
}

SymPoly f_bold(int m, int r, int p, Conventions conv) {
    using Key = std::tuple<int, int, int, int, int>;
    static std::mutex mutex;
    static std::map<Key, SymPoly> cache;
    const Key key{m, r, p, static_cast<int>(conv.norm), static_cast<int>(conv.exponent)};
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SymPoly total;
    for (const auto& map : enumerate_multiplicity_maps(m, r)) {
        SymPoly term = f_bold_of_map(map, p, conv);
        term *= QRat(map.expansion_weight());
        total += term;
    }
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(total)).first->second;
}

QRat moment_rational(int m, int n, int r, int p, Conventions conv) {
    if (m < 0 || n < 0) throw std::invalid_argument("moment: m and n must be nonnegative");
    if (r < 1) throw std::invalid_argument("moment: r must be positive");
    if (!is_prime(p)) throw std::invalid_argument("moment: p must be prime");
    const SymPoly f = f_bold(m, r, p, conv);
    QRat total;
    for (const auto& lambda : enumerate_partitions(n)) {
        QRat v = sympoly_eval(f, lambda);
        if (v.is_zero()) continue;
        mpq_class w(sign_char(lambda), 1);
        w /= to_mpq(z_of(lambda));
        total += v * QRat(QPoly::monomial(lambda.length(), w));
    }
    return total;
}

namespace {

void check_moment(const QRat& value, int m, int n, const char* where) {
    if (!value.is_polynomial())
        throw ConsistencyError(std::string(where) + ": F(" + std::to_string(m) + "," + std::to_string(n) +
                               ") is not a polynomial: " + value.to_string());
    if (m >= 1 && value.num().degree() > n - 1)
        throw ConsistencyError(std::string(where) + ": degree bound violated for F(" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
}

}  // namespace

MomentResult moment_poly(int m, int n, int r, int p, Conventions conv) {
    const QRat value = moment_rational(m, n, r, p, conv);
    check_moment(value, m, n, "moment_poly");
    MomentResult res;
    res.p = p;
    res.r = r;
    res.m = m;
    res.n = n;
    res.poly = value.as_poly();
    res.zeroth = binomial_poly(0, n);
    res.method = Method::Collapsed;
    return res;
}

QPoly g0_direct(const MultiplicityMap& m, const Partition& nu, int p) {
    const int k = m.degree();
    if (nu.weight() != k) throw std::invalid_argument("g0_direct: |nu| must equal the tensor degree of the map");
    if (!is_prime(p)) throw std::invalid_argument("g0_direct: p must be prime");
    if (k == 0) return QPoly(1);

    // Cells in block order: (row, part value).
    const auto rows = m.row_partitions();
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int part : rows[i].parts()) cells.emplace_back(static_cast<int>(i), part);

    mpz_class cycle_weight = 1;
    for (int part : nu.parts()) cycle_weight *= factorial_mpz(part - 1);

    const int blocks_wanted = nu.length();
    LaurentAccumulator acc;
    std::vector<int> block(cells.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int used) {
        if (c == cells.size()) {
            if (used != blocks_wanted) return;
            std::vector<int> sizes(static_cast<std::size_t>(used), 0);
            for (int b : block) ++sizes[static_cast<std::size_t>(b)];
            if (Partition(sizes) != nu) return;
            XMatrix x;
            x.row_partitions = rows;
            x.rows.assign(rows.size(), RowVector(static_cast<std::size_t>(used), 0));
            for (std::size_t t = 0; t < cells.size(); ++t)
                x.rows[static_cast<std::size_t>(cells[t].first)][static_cast<std::size_t>(block[t])] += cells[t].second;
            acc.add(used - rank_mod_p(x, p), mpq_class(cycle_weight));
            return;
        }
        const int limit = std::min(used + 1, blocks_wanted);
        for (int b = 0; b < limit; ++b) {
            block[c] = b;
            rec(c + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return acc.to_qpoly();
}

namespace {

// G_0(m, nu) for every nu of k at once.
std::map<Partition, QPoly> g0_all_from_classes(const MultiplicityMap& m, int p, SymmetrizationNorm norm) {
    const int k = m.degree();
    std::map<Partition, LaurentAccumulator> acc;
    if (k == 0) {
        acc[Partition()].add(0, 1);
    }
    for (int cols = 1; cols <= k; ++cols) {
        for (const auto& cls : enumerate_classes(m, cols, p)) {
            const int e = cls.kernel_dim();
            const mpq_class orbit = to_mpq(cls.orbit_size);
            for_each_symmetrized_term(cls, norm, [&](const Partition& nu, const mpq_class& c) {
                // prod_j nu_j! / z(nu)
                mpq_class w(1);
                for (int part : nu.parts()) w *= factorial_mpz(part);
                w /= to_mpq(z_of(nu));
                acc[nu].add(e, orbit * c * w);
            });
        }
    }
    std::map<Partition, QPoly> out;
    for (const auto& nu : enumerate_partitions(k)) {
        auto it = acc.find(nu);
        out.emplace(nu, it == acc.end() ? QPoly() : it->second.to_qpoly());
    }
    return out;
}

QPoly g_from_g0(const std::map<Partition, QPoly>& g0, const Partition& mu) {
    const int k = mu.weight();
    const mpq_class nmu = to_mpq(dim_specht(mu));
    const mpz_class kf = factorial_mpz(k);
    QPoly total;
    for (const auto& [nu, value] : g0) {
        if (value.is_zero()) continue;
        const std::int64_t chi = character(mu, nu);
        if (chi == 0) continue;
        const mpq_class w = nmu * mpq_class(static_cast<long>(chi)) / mpq_class(kf);
        total += value * w;
    }
    return total;
}

const std::map<Partition, QPoly>& g0_all_cached(const MultiplicityMap& m, int p, SymmetrizationNorm norm) {
    using Key = std::tuple<MultiplicityMap, int, int>;
    static std::mutex mutex;
    static std::map<Key, std::map<Partition, QPoly>> cache;
    const Key key{m, p, static_cast<int>(norm)};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto value = g0_all_from_classes(m, p, norm);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

QPoly g0_from_classes(const MultiplicityMap& m, const Partition& nu, int p, SymmetrizationNorm norm) {
    if (nu.weight() != m.degree()) throw std::invalid_argument("g0_from_classes: |nu| must equal the tensor degree of the map");
    return g0_all_cached(m, p, norm).at(nu);
}

QPoly g_coord(const MultiplicityMap& m, const Partition& mu, int p, SymmetrizationNorm norm) {
    if (mu.weight() != m.degree()) throw std::invalid_argument("g_coord: |mu| must equal the tensor degree of the map");
    return g_from_g0(g0_all_cached(m, p, norm), mu);
}

QPoly h_coord(const Partition& mu, int n) {
    if (n < 0) throw std::invalid_argument("h_coord: negative n");
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, QPoly> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({mu, n});
        if (it != cache.end()) return it->second;
    }
    const int k = mu.weight();
    const auto lambdas = enumerate_partitions(n);
    QPoly inner;
    for (const auto& nu : enumerate_partitions(k)) {
        const std::int64_t chi = character(mu, nu);
        if (chi == 0) continue;
        mpq_class wnu(mpz_class(static_cast<long>(chi)));
        for (int part : nu.parts()) wnu /= factorial_mpz(part);
        for (const auto& lambda : lambdas) {
            if (lambda.length() < nu.length()) continue;
            const mpz_class mono = monomial_eval(nu, lambda);
            if (mono == 0) continue;
            mpq_class w = wnu * mpq_class(mono) * sign_char(lambda);
            w /= to_mpq(z_of(lambda));
            inner += QPoly::monomial(lambda.length() - nu.length(), w);
        }
    }
    QPoly h = inner * dim_schur_qpoly(mu) * mpq_class(factorial_mpz(k));
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(mu, n), std::move(h)).first->second;
}

MomentResult moment_via_theorem1(int m, int n, int r, int p, SymmetrizationNorm norm) {
    if (m < 0 || n < 0) throw std::invalid_argument("moment: m and n must be nonnegative");
    if (r < 1) throw std::invalid_argument("moment: r must be positive");
    if (!is_prime(p)) throw std::invalid_argument("moment: p must be prime");
    QRat total;
    for (const auto& map : enumerate_multiplicity_maps(m, r)) {
        const auto& g0 = g0_all_cached(map, p, norm);
        const QRat weight(map.expansion_weight());
        for (const auto& mu : enumerate_partitions(map.degree())) {
            const QPoly g = g_from_g0(g0, mu);
            if (g.is_zero()) continue;
            const QPoly h = h_coord(mu, n);
            if (h.is_zero()) continue;
            const QPoly denom = dim_schur_qpoly(mu) * to_mpq(dim_specht(mu));
            total += weight * QRat(g * h, denom);
        }
    }
    check_moment(total, m, n, "moment_via_theorem1");
    MomentResult res;
    res.p = p;
    res.r = r;
    res.m = m;
    res.n = n;
    res.poly = total.as_poly();
    res.zeroth = binomial_poly(0, n);
    res.method = Method::Theorem1;
    return res;
}

ConventionRecord arbitrate_conventions(int p, int r) {
    ConventionRecord record;
    for (int d = 1; d <= 2; ++d)
        for (int n = 3; n <= 5; ++n)
            for (int m = 1; m <= 2; ++m)
                record.probes.push_back({d, n, m, brute_force_moment(p, d, r, m, n).get_str()});

    const Conventions candidates[] = {
        {SymmetrizationNorm::Average, QExponent::NegRank},
        {SymmetrizationNorm::Average, QExponent::KernelDim},
        {SymmetrizationNorm::Sum, QExponent::NegRank},
        {SymmetrizationNorm::Sum, QExponent::KernelDim},
    };
    int survivors = 0;
    for (const auto& conv : candidates) {
        ConventionCandidate cand{conv, true, ""};
        for (const auto& probe : record.probes) {
            const QRat value = moment_rational(probe.m, probe.n, r, p, conv);
            mpz_class q = 1;
            for (int i = 0; i < probe.d; ++i) q *= p;
            const mpq_class at = value.eval(mpq_class(q));
            if (!value.is_polynomial() || at != mpq_class(mpz_class(probe.expected))) {
                std::ostringstream os;
                os << "F(" << probe.m << "," << probe.n << ") at q=" << q.get_str() << ": got " << at.get_str()
                   << ", expected " << probe.expected << (value.is_polynomial() ? "" : " (not a polynomial)");
                cand.survived = false;
                cand.detail = os.str();
                break;
            }
        }
        if (cand.survived) {
            ++survivors;
            record.chosen = conv;
        }
        record.candidates.push_back(std::move(cand));
    }
    if (survivors != 1)
        throw ConsistencyError("convention arbitration: " + std::to_string(survivors) +
                               " candidates reproduce the oracle probes (expected exactly one)");
    return record;
}

}  // namespace capmoments
