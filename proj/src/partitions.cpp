#include "capmoments/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace capmoments {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> a(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int x : parts_) ++a[static_cast<std::size_t>(x - 1)];
    return a;
}

Partition Partition::ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(v));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions_rec(remaining - x, x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k) {
    if (k < 0) throw std::invalid_argument("enumerate_partitions: negative k");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial: argument outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t z_of(const Partition& nu) {
    std::uint64_t z = 1;
    auto a = nu.multiplicities();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a[i]; ++j) z *= i + 1;
        z *= factorial(a[i]);
    }
    return z;
}

std::uint64_t aut_of(const Partition& nu) {
    std::uint64_t z = 1;
    for (int ai : nu.multiplicities()) z *= factorial(ai);
    return z;
}

int sign_char(const Partition& nu) { return ((nu.weight() - nu.length()) % 2 == 0) ? 1 : -1; }

MultiplicityMap::MultiplicityMap(int r, std::vector<std::pair<Partition, int>> entries) : r_(r) {
    if (r < 1) throw std::invalid_argument("MultiplicityMap: r must be positive");
    for (auto& [rho, c] : entries) {
        if (rho.weight() != r) throw std::invalid_argument("MultiplicityMap: key " + rho.to_string() + " is not a partition of r");
        if (c < 0) throw std::invalid_argument("MultiplicityMap: negative multiplicity");
        if (c > 0) entries_.emplace_back(std::move(rho), c);
    }
    // Key order follows enumerate_partitions, i.e. decreasing lexicographic.
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].first == entries_[i - 1].first) throw std::invalid_argument("MultiplicityMap: duplicate key");
    for (const auto& [rho, c] : entries_) {
        mass_ += c;
        degree_ += c * rho.length();
    }
}

int MultiplicityMap::count(const Partition& rho) const {
    for (const auto& [key, c] : entries_)
        if (key == rho) return c;
    return 0;
}

std::uint64_t MultiplicityMap::multinomial() const { return factorial(mass_) / row_group_order(); }

std::uint64_t MultiplicityMap::row_group_order() const {
    std::uint64_t d = 1;
    for (const auto& [rho, c] : entries_) d *= factorial(c);
    return d;
}

mpq_class MultiplicityMap::power_sum_weight() const {
    mpq_class w = 1;
    for (const auto& [rho, c] : entries_) {
        mpq_class base(sign_char(rho), 1);
        base /= mpz_class(std::to_string(z_of(rho)));
        for (int i = 0; i < c; ++i) w *= base;
    }
    return w;
}

mpq_class MultiplicityMap::expansion_weight() const {
    return power_sum_weight() * mpz_class(std::to_string(multinomial()));
}

std::vector<Partition> MultiplicityMap::row_partitions() const {
    std::vector<Partition> rows;
    for (const auto& [rho, c] : entries_)
        for (int i = 0; i < c; ++i) rows.push_back(rho);
    return rows;
}

std::string MultiplicityMap::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < entries_.size(); ++i)
        os << (i ? ", " : "") << entries_[i].first << "->" << entries_[i].second;
    os << "}";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiplicityMap& m) { return os << m.to_string(); }

std::vector<MultiplicityMap> enumerate_multiplicity_maps(int m, int r) {
    if (m < 0) throw std::invalid_argument("enumerate_multiplicity_maps: negative mass");
    if (r < 1) throw std::invalid_argument("enumerate_multiplicity_maps: r must be positive");
    const auto keys = enumerate_partitions(r);
    std::vector<MultiplicityMap> out;
    std::vector<int> counts(keys.size(), 0);
    // Compositions of m into keys.size() parts, first key varying slowest.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == keys.size()) {
            counts[i] = left;
            std::vector<std::pair<Partition, int>> entries;
            for (std::size_t j = 0; j < keys.size(); ++j) entries.emplace_back(keys[j], counts[j]);
            out.emplace_back(r, std::move(entries));
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[i] = c;
            rec(i + 1, left - c);
        }
    };
    rec(0, m);
    return out;
}

}  // namespace capmoments
