#include "capmoments/oracle.hpp"

#include "capmoments/errors.hpp"
#include "capmoments/xclasses.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace capmoments {

namespace {

constexpr std::uint32_t kMaxPoints = 1u << 20;
constexpr std::uint32_t kAddTableLimit = 1024;

using u128 = unsigned __int128;

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binom_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

FieldSpace::FieldSpace(int p, int d) : p_(p), d_(d), q_(1) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpace: p must be prime");
    if (d < 0) throw std::invalid_argument("FieldSpace: negative dimension");
    for (int i = 0; i < d; ++i) {
        if (static_cast<std::uint64_t>(q_) * static_cast<std::uint64_t>(p) > kMaxPoints)
            throw std::invalid_argument("FieldSpace: p^d exceeds 2^20");
        q_ *= static_cast<std::uint32_t>(p);
    }
    if (q_ <= kAddTableLimit) {
        const FieldSpace slow = *this;  // copied while the table is still empty
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = slow.add(a, b);
    }
}

std::uint32_t FieldSpace::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (int i = 0; i < d_; ++i) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

std::uint32_t FieldSpace::neg(std::uint32_t a) const {
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (int i = 0; i < d_; ++i) {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    return out;
}

int FieldSpace::dot(std::uint32_t a, std::uint32_t b) const {
    const auto p = static_cast<std::uint32_t>(p_);
    std::uint32_t acc = 0;
    for (int i = 0; i < d_; ++i) {
        acc = (acc + (a % p) * (b % p)) % p;
        a /= p;
        b /= p;
    }
    return static_cast<int>(acc);
}

PointSet::PointSet(int p_, int d_, std::vector<std::uint32_t> elems) : p(p_), d(d_), elements(std::move(elems)) {
    const FieldSpace space(p, d);
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw std::invalid_argument("PointSet: duplicate points");
    if (!elements.empty() && elements.back() >= space.size()) throw std::invalid_argument("PointSet: point outside F_p^d");
}

namespace {

// Counts zero-sum r-subsets of `pts` given position lookup `pos` (point -> index or -1).
class ZeroSumCounter {
public:
    ZeroSumCounter(const FieldSpace& space, int r) : space_(space), r_(r) {}

    std::uint64_t count(const std::vector<std::uint32_t>& pts, const std::vector<std::int32_t>& pos) const {
        const auto n = static_cast<std::int64_t>(pts.size());
        if (r_ > n) return 0;
        if (r_ == 3) {
            std::uint64_t total = 0;
            for (std::int64_t i = 0; i < n; ++i)
                for (std::int64_t j = i + 1; j < n; ++j) {
                    const std::uint32_t t = space_.neg(space_.add(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]));
                    if (pos[t] > j) ++total;
                }
            return total;
        }
        std::uint64_t total = 0;
        // Choose r-1 increasing indices; the last point is forced.
        std::function<void(std::int64_t, int, std::uint32_t)> rec = [&](std::int64_t start, int left, std::uint32_t sum) {
            if (left == 0) {
                if (pos[space_.neg(sum)] >= start) ++total;
                return;
            }
            for (std::int64_t i = start; i < n; ++i) rec(i + 1, left - 1, space_.add(sum, pts[static_cast<std::size_t>(i)]));
        };
        rec(0, r_ - 1, 0);
        return total;
    }

private:
    const FieldSpace& space_;
    int r_;
};

void unrank_combination(std::uint64_t rank, std::uint32_t q, std::size_t n, std::vector<std::uint32_t>& out) {
    out.resize(n);
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (true) {
            const std::uint64_t block = binom_sat(q - 1 - x, n - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        out[i] = x++;
    }
}

// Advances to the next n-subset in lex order; returns the first changed index, or -1 when done.
std::int64_t next_combination(std::vector<std::uint32_t>& c, std::uint32_t q) {
    const auto n = static_cast<std::int64_t>(c.size());
    std::int64_t i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - static_cast<std::uint32_t>(n - i)) --i;
    if (i < 0) return -1;
    ++c[static_cast<std::size_t>(i)];
    for (std::int64_t j = i + 1; j < n; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return i;
}

}  // namespace

std::uint64_t count_zero_sum_subsets(const PointSet& s, int r) {
    if (r < 1) throw std::invalid_argument("count_zero_sum_subsets: r must be positive");
    const FieldSpace space(s.p, s.d);
    std::vector<std::int32_t> pos(space.size(), -1);
    for (std::size_t i = 0; i < s.elements.size(); ++i) pos[s.elements[i]] = static_cast<std::int32_t>(i);
    return ZeroSumCounter(space, r).count(s.elements, pos);
}

std::uint64_t character_sum_a(const PointSet& s, int r) {
    if (r < 1) throw std::invalid_argument("character_sum_a: r must be positive");
    const FieldSpace space(s.p, s.d);
    const auto p = static_cast<std::size_t>(s.p);
    using Cyclo = std::vector<mpz_class>;  // coefficients of 1, zeta, ..., zeta^{p-1}
    Cyclo total(p, 0);
    for (std::uint32_t beta = 0; beta < space.size(); ++beta) {
        // e_0..e_r of (zeta^{alpha.beta})_alpha by the usual product recurrence.
        std::vector<Cyclo> e(static_cast<std::size_t>(r) + 1, Cyclo(p, 0));
        e[0][0] = 1;
        for (std::uint32_t alpha : s.elements) {
            const auto shift = static_cast<std::size_t>(space.dot(alpha, beta));
            for (std::size_t j = static_cast<std::size_t>(r); j >= 1; --j)
                for (std::size_t t = 0; t < p; ++t) e[j][(t + shift) % p] += e[j - 1][t];
        }
        for (std::size_t t = 0; t < p; ++t) total[t] += e[static_cast<std::size_t>(r)][t];
    }
    // In Z[zeta], sum c_t zeta^t is rational iff c_1 = ... = c_{p-1}; its value is c_0 - c_1.
    for (std::size_t t = 2; t < p; ++t)
        if (total[t] != total[1]) throw ConsistencyError("character_sum_a: character sum is not a rational integer");
    const mpz_class value = p > 1 ? total[0] - total[1] : total[0];
    if (value % space.size() != 0) throw ConsistencyError("character_sum_a: character sum not divisible by q");
    const mpz_class a = value / space.size();
    if (a < 0) throw ConsistencyError("character_sum_a: negative count");
    return a.get_ui();
}

double oracle_cost(int p, int d, int r, int n) {
    const double q = std::pow(static_cast<double>(p), d);
    if (n > q) return 0;
    const double subsets = std::exp(std::lgamma(q + 1) - std::lgamma(n + 1.0) - std::lgamma(q - n + 1));
    double inner = 1;
    if (r >= 2 && n >= r - 1) inner = std::exp(std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(r)) - std::lgamma(n - r + 2.0));
    return std::round(subsets) * std::max(1.0, std::round(inner));
}

mpz_class Histogram::total() const {
    mpz_class t = 0;
    for (const auto& [a, c] : counts) t += c;
    return t;
}

mpz_class Histogram::moment(int m) const {
    if (m < 0) throw std::invalid_argument("Histogram::moment: negative m");
    mpz_class t = 0;
    for (const auto& [a, c] : counts) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(static_cast<unsigned long>(a)).get_mpz_t(), static_cast<unsigned long>(m));
        t += pw * c;
    }
    return t;
}

std::string Histogram::to_csv() const {
    std::ostringstream os;
    os << "a_value,count\n";
    for (const auto& [a, c] : counts) os << a << "," << c.get_str() << "\n";
    return os.str();
}

std::string Histogram::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["d"] = d;
    j["r"] = r;
    j["n"] = n;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& [a, c] : counts) rows.push_back({{"a_value", a}, {"count", c.get_str()}});
    j["histogram"] = std::move(rows);
    return j.dump(2);
}

Histogram distribution(int p, int d, int r, int n, const OracleOptions& opts) {
    if (r < 1) throw std::invalid_argument("distribution: r must be positive");
    if (n < 0) throw std::invalid_argument("distribution: negative n");
    const FieldSpace space(p, d);
    const std::uint32_t q = space.size();

    const double cost = oracle_cost(p, d, r, n);
    if (cost > opts.cost_cap) {
        std::ostringstream os;
        os << "exhaustive enumeration would cost ~" << cost << " steps (cap " << opts.cost_cap << ")";
        throw ResourceLimitError(os.str(), cost);
    }
    const std::uint64_t total = binom_sat(q, static_cast<std::uint64_t>(n));
    if (total == UINT64_MAX) throw ResourceLimitError("subset count does not fit in 64 bits", cost);

    Histogram hist;
    hist.p = p;
    hist.d = d;
    hist.r = r;
    hist.n = n;
    // No n-subsets exist: the empty histogram.
    if (static_cast<std::uint64_t>(n) > q) return hist;
    if (n == 0) {
        hist.counts[0] = 1;
        return hist;
    }

    const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.threads, total)));
    std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
    const ZeroSumCounter counter(space, r);

    auto run = [&](unsigned w) {
        const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t len = total / workers + (w < total % workers ? 1 : 0);
        if (len == 0) return;
        std::vector<std::uint32_t> comb;
        unrank_combination(begin, q, static_cast<std::size_t>(n), comb);
        std::vector<std::int32_t> pos(q, -1);
        for (std::size_t i = 0; i < comb.size(); ++i) pos[comb[i]] = static_cast<std::int32_t>(i);
        std::vector<std::uint64_t> dense;
        std::vector<std::uint32_t> old;
        for (std::uint64_t step = 0; step < len; ++step) {
            const std::uint64_t a = counter.count(comb, pos);
            if (a >= dense.size()) dense.resize(a + 1, 0);
            ++dense[a];
            if (step + 1 == len) break;
            old = comb;
            const std::int64_t from = next_combination(comb, q);
            for (auto i = static_cast<std::size_t>(from); i < comb.size(); ++i) pos[old[i]] = -1;
            for (auto i = static_cast<std::size_t>(from); i < comb.size(); ++i) pos[comb[i]] = static_cast<std::int32_t>(i);
        }
        for (std::size_t a = 0; a < dense.size(); ++a)
            if (dense[a] != 0) partial[w][a] = dense[a];
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& part : partial)
        for (const auto& [a, c] : part) hist.counts[a] += mpz_class(static_cast<unsigned long>(c));
    return hist;
}

mpz_class brute_force_moment(int p, int d, int r, int m, int n, const OracleOptions& opts) {
    if (m < 0) throw std::invalid_argument("brute_force_moment: negative m");
    return distribution(p, d, r, n, opts).moment(m);
}

}  // namespace capmoments
