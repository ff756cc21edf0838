#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace capmoments {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Sorts the parts into decreasing order; throws on non-positive parts.
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }

    /// (a_1, a_2, ...) where a_i is the number of parts equal to i.
    [[nodiscard]] std::vector<int> multiplicities() const;

    /// The partition (1^k).
    static Partition ones(int k);

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
    /// Lexicographic order on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Union of parts (multiset concatenation).
Partition concat(const Partition& a, const Partition& b);

/// All partitions of k in reverse lexicographic order: (k), (k-1,1), ..., (1^k).
std::vector<Partition> enumerate_partitions(int k);

/// Centralizer order z(nu) = prod_i i^{a_i} a_i!.
std::uint64_t z_of(const Partition& nu);

/// |Aut(nu)| = prod_i a_i!.
std::uint64_t aut_of(const Partition& nu);

/// (-1)^{|nu| - l(nu)}, the sign character on cycle type nu.
int sign_char(const Partition& nu);

std::uint64_t factorial(int n);

/// A function from the partitions of r to the nonnegative integers. Keys are
/// kept in the order of enumerate_partitions(r); only nonzero entries are stored.
class MultiplicityMap {
public:
    MultiplicityMap(int r, std::vector<std::pair<Partition, int>> entries);

    [[nodiscard]] int r() const noexcept { return r_; }
    [[nodiscard]] const std::vector<std::pair<Partition, int>>& entries() const noexcept { return entries_; }
    [[nodiscard]] int count(const Partition& rho) const;
    /// Total mass sum_rho m(rho).
    [[nodiscard]] int mass() const noexcept { return mass_; }
    /// Tensor degree sum_rho m(rho) l(rho).
    [[nodiscard]] int degree() const noexcept { return degree_; }
    /// Multinomial m! / prod_rho m(rho)!.
    [[nodiscard]] std::uint64_t multinomial() const;
    /// prod_rho (sign(rho) / z(rho))^{m(rho)}.
    [[nodiscard]] mpq_class power_sum_weight() const;
    /// multinomial() * power_sum_weight().
    [[nodiscard]] mpq_class expansion_weight() const;
    /// One partition per row, blocks laid out in key order.
    [[nodiscard]] std::vector<Partition> row_partitions() const;
    /// prod_rho m(rho)!: the size of the row-permutation group.
    [[nodiscard]] std::uint64_t row_group_order() const;

    friend bool operator==(const MultiplicityMap& a, const MultiplicityMap& b) noexcept {
        return a.r_ == b.r_ && a.entries_ == b.entries_;
    }
    friend auto operator<=>(const MultiplicityMap& a, const MultiplicityMap& b) noexcept {
        if (auto c = a.r_ <=> b.r_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    int r_;
    std::vector<std::pair<Partition, int>> entries_;
    int mass_ = 0;
    int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultiplicityMap& m);

/// All multiplicity maps on partitions of r with total mass m.
std::vector<MultiplicityMap> enumerate_multiplicity_maps(int m, int r);

}  // namespace capmoments
