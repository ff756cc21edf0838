#include "capmoments/characters.hpp"

#include "capmoments/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace capmoments {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterCache {
    std::shared_mutex mutex;
    std::map<Key, std::int64_t> values;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

// First-column hook lengths of mu padded to `len` rows.
std::vector<int> beta_set(const std::vector<int>& mu, std::size_t len) {
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) {
        int part = i < mu.size() ? mu[i] : 0;
        beta[i] = part + static_cast<int>(len - 1 - i);
    }
    return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> mu;
    const std::size_t len = beta.size();
    for (std::size_t i = 0; i < len; ++i) {
        int part = beta[i] - static_cast<int>(len - 1 - i);
        if (part > 0) mu.push_back(part);
    }
    return mu;
}

std::int64_t mn_rec(const std::vector<int>& mu, const std::vector<int>& nu, std::size_t from) {
    if (from == nu.size()) return mu.empty() ? 1 : 0;

    Key key{mu, std::vector<int>(nu.begin() + static_cast<std::ptrdiff_t>(from), nu.end())};
    auto& cache = character_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }

    // Strip a rim hook of length h = nu[from] in every possible way.
    const int h = nu[from];
    const auto beta = beta_set(mu, mu.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - h;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        auto moved = beta;
        moved[i] = target;
        const std::int64_t sub = mn_rec(from_beta_set(std::move(moved)), nu, from + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }

    std::unique_lock lock(cache.mutex);
    cache.values.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t character(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("character: size mismatch " + mu.to_string() + " vs " + nu.to_string());
    return mn_rec(mu.parts(), nu.parts(), 0);
}

std::uint64_t dim_specht(const Partition& mu) {
    // k! / prod hooks, accumulated in mpz to stay exact for any k.
    mpz_class num = 1;
    for (int i = 2; i <= mu.weight(); ++i) num *= i;
    mpz_class den = 1;
    const auto& rows = mu.parts();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = 0;
            for (std::size_t t = i + 1; t < rows.size() && rows[t] > j; ++t) ++leg;
            den *= arm + leg + 1;
        }
    }
    mpz_class q = num / den;
    return q.get_ui();
}

QPoly dim_schur_qpoly(const Partition& mu) {
    QPoly acc(1);
    const auto& rows = mu.parts();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = 0;
            for (std::size_t t = i + 1; t < rows.size() && rows[t] > j; ++t) ++leg;
            const int content = j - static_cast<int>(i);
            acc *= QPoly{mpq_class(content, arm + leg + 1), mpq_class(1, arm + leg + 1)};
        }
    }
    return acc;
}

mpz_class connection_count(const Partition& nu1, const Partition& nu2, const Partition& nu3) {
    const int k = nu1.weight();
    if (nu2.weight() != k || nu3.weight() != k) throw std::invalid_argument("connection_count: size mismatch");
    mpq_class sum = 0;
    for (const auto& rho : enumerate_partitions(k)) {
        mpz_class prod = character(rho, nu1);
        prod *= character(rho, nu2);
        prod *= character(rho, nu3);
        mpq_class term(prod, mpz_class(dim_specht(rho)));
        term.canonicalize();
        sum += term;
    }
    mpz_class kf = 1;
    for (int i = 2; i <= k; ++i) kf *= i;
    mpz_class zz = mpz_class(z_of(nu1)) * mpz_class(z_of(nu2)) * mpz_class(z_of(nu3));
    mpq_class scale(kf * kf, zz);
    scale.canonicalize();
    mpq_class result = sum * scale;
    if (result.get_den() != 1 || result < 0)
        throw ConsistencyError("connection_count: non-integral result " + result.get_str());
    return result.get_num();
}

std::shared_ptr<const CharacterTable> CharacterTable::of(int k) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CharacterTable>> tables;
    {
        std::lock_guard lock(mutex);
        auto it = tables.find(k);
        if (it != tables.end()) return it->second;
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    auto table = std::make_shared<const CharacterTable>(k);
    std::lock_guard lock(mutex);
    return tables.emplace(k, std::move(table)).first->second;
}

CharacterTable::CharacterTable(int k) : k_(k), classes_(enumerate_partitions(k)) {
    values_.resize(classes_.size() * classes_.size());
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (std::size_t j = 0; j < classes_.size(); ++j) values_[i * classes_.size() + j] = character(classes_[i], classes_[j]);
}

std::size_t CharacterTable::index(const Partition& p) const {
    // classes_ is in decreasing lexicographic order.
    auto it = std::lower_bound(classes_.begin(), classes_.end(), p, std::greater<>());
    if (it == classes_.end() || *it != p) throw std::invalid_argument("CharacterTable: " + p.to_string() + " is not a partition of k");
    return static_cast<std::size_t>(it - classes_.begin());
}

}  // namespace capmoments
