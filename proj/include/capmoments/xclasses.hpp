#pragma once

#include "capmoments/partitions.hpp"
#include "capmoments/sympoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace capmoments {

using RowVector = std::vector<int>;

/// Nonnegative integer matrix whose row i distributes the parts of
/// row_partitions[i] over the columns. Entries are never reduced mod p.
struct XMatrix {
    std::vector<RowVector> rows;
    std::vector<Partition> row_partitions;

    [[nodiscard]] int num_rows() const noexcept { return static_cast<int>(rows.size()); }
    [[nodiscard]] int num_cols() const noexcept { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const XMatrix& a, const XMatrix& b) {
        return a.rows == b.rows && a.row_partitions == b.row_partitions;
    }
};

/// For one row partition rho, the ways to assign its parts to columns that
/// produce a given row vector, tracked by how many parts land in each column.
struct RowFilling {
    std::uint64_t count = 0;  ///< number of part-to-column functions giving this row
    std::map<std::vector<int>, std::uint64_t> part_counts;  ///< parts-per-column vector -> multiplicity
};

/// One orbit of valid X-matrices under row permutations within equal-rho
/// blocks and arbitrary column permutations.
struct MatrixClass {
    XMatrix canon;
    std::uint64_t orbit_size = 0;
    int rank_mod_p = 0;
    /// Per row of canon, the filling data realizing that row.
    std::vector<RowFilling> j_polys;

    [[nodiscard]] int num_cols() const noexcept { return canon.num_cols(); }
    [[nodiscard]] int kernel_dim() const noexcept { return num_cols() - rank_mod_p; }
};

/// Row vectors achievable by sending the parts of rho to `cols` columns, with
/// the number of part-to-column functions realizing each.
std::map<RowVector, std::uint64_t> enumerate_row_fillings(const Partition& rho, int cols);

/// Same enumeration keeping the per-column part counts needed for J(X).
std::map<RowVector, RowFilling> enumerate_row_fillings_detailed(const Partition& rho, int cols);

bool is_prime(int p);

/// Rank of X over F_p. Throws std::invalid_argument if p is not prime.
int rank_mod_p(const XMatrix& x, int p);

/// Minimum of the orbit under row-major lexicographic order.
XMatrix canonical_form(const XMatrix& x);

/// J(X): product over rows of the sum over consistent part-to-column assignments
/// of prod_b x_{column(b)}. Throws ConsistencyError on an unachievable row.
ExponentPoly j_poly(const XMatrix& x);

/// J(X) from precomputed row fillings.
ExponentPoly j_poly(const std::vector<RowFilling>& rows, int cols);

/// Every orbit of valid m_rows x cols matrices for the multiplicity map, in
/// increasing order of canonical form.
std::vector<MatrixClass> enumerate_classes(const MultiplicityMap& m, int cols, int p);

}  // namespace capmoments
