#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace capmoments {

/// Points of F_p^d encoded as base-p integers in [0, p^d); digit i is coordinate i.
class FieldSpace {
public:
    FieldSpace(int p, int d);

    [[nodiscard]] int p() const noexcept { return p_; }
    [[nodiscard]] int d() const noexcept { return d_; }
    [[nodiscard]] std::uint32_t size() const noexcept { return q_; }

    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const;
    /// a . b mod p
    [[nodiscard]] int dot(std::uint32_t a, std::uint32_t b) const;

private:
    int p_;
    int d_;
    std::uint32_t q_;
    std::vector<std::uint32_t> add_table_;  // empty when q is large
};

/// Sorted set of distinct points of F_p^d.
struct PointSet {
    int p = 3;
    int d = 1;
    std::vector<std::uint32_t> elements;

    /// Sorts and validates; throws std::invalid_argument on duplicates or out-of-range points.
    PointSet(int p, int d, std::vector<std::uint32_t> elements);
};

/// Number of r-element subsets of S summing to zero.
std::uint64_t count_zero_sum_subsets(const PointSet& s, int r);

/// a(S) through the character-sum identity
/// a(S) = (1/q) sum_beta e_r(zeta^{a_1.beta}, ..., zeta^{a_n.beta}),
/// evaluated exactly in Z[zeta_p]. Throws ConsistencyError if the value is
/// not a rational integer divisible by q.
std::uint64_t character_sum_a(const PointSet& s, int r);

struct OracleOptions {
    /// Refuse enumerations whose estimated cost (subsets x inner steps) exceeds this.
    double cost_cap = 1e10;
    unsigned threads = 1;
};

/// Estimated work units for enumerating all n-subsets of F_p^d.
double oracle_cost(int p, int d, int r, int n);

struct Histogram {
    int p = 3;
    int d = 1;
    int r = 3;
    int n = 0;
    std::map<std::uint64_t, mpz_class> counts;  ///< a-value -> number of subsets

    [[nodiscard]] mpz_class total() const;
    /// sum over subsets of a(S)^m
    [[nodiscard]] mpz_class moment(int m) const;
    [[nodiscard]] std::string to_csv() const;
    [[nodiscard]] std::string to_json() const;
};

/// Exact histogram of a(S) over all n-subsets of F_p^d. Throws
/// ResourceLimitError when the cost estimate exceeds opts.cost_cap.
Histogram distribution(int p, int d, int r, int n, const OracleOptions& opts = {});

/// sum over n-subsets S of F_p^d of a(S)^m.
mpz_class brute_force_moment(int p, int d, int r, int m, int n, const OracleOptions& opts = {});

}  // namespace capmoments
