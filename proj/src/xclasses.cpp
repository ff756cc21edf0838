#include "capmoments/xclasses.hpp"

#include "capmoments/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace capmoments {

std::string XMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

std::map<RowVector, RowFilling> enumerate_row_fillings_detailed(const Partition& rho, int cols) {
    if (cols < 1) throw std::invalid_argument("enumerate_row_fillings: need at least one column");
    std::map<RowVector, RowFilling> out;
    const auto& parts = rho.parts();
    std::vector<int> assign(parts.size(), 0);
    // Odometer over all cols^{l(rho)} functions parts -> columns.
    while (true) {
        RowVector row(static_cast<std::size_t>(cols), 0);
        std::vector<int> per_col(static_cast<std::size_t>(cols), 0);
        for (std::size_t b = 0; b < parts.size(); ++b) {
            row[static_cast<std::size_t>(assign[b])] += parts[b];
            ++per_col[static_cast<std::size_t>(assign[b])];
        }
        auto& f = out[row];
        ++f.count;
        ++f.part_counts[per_col];

        std::size_t b = 0;
        while (b < assign.size() && ++assign[b] == cols) assign[b++] = 0;
        if (b == assign.size()) break;
    }
    return out;
}

std::map<RowVector, std::uint64_t> enumerate_row_fillings(const Partition& rho, int cols) {
    std::map<RowVector, std::uint64_t> out;
    for (const auto& [row, f] : enumerate_row_fillings_detailed(rho, cols)) out.emplace(row, f.count);
    return out;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int rank_mod_p(const XMatrix& x, int p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    std::vector<std::vector<int>> a = x.rows;
    for (auto& row : a)
        for (auto& v : row) v = ((v % p) + p) % p;
    const int nr = x.num_rows();
    const int nc = x.num_cols();
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int i = rank; i < nr; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        auto& prow = a[static_cast<std::size_t>(rank)];
        // Inverse by Fermat; p is small.
        long inv = 1;
        for (int e = 0; e < p - 2; ++e) inv = inv * prow[static_cast<std::size_t>(col)] % p;
        for (auto& v : prow) v = static_cast<int>(v * inv % p);
        for (int i = 0; i < nr; ++i) {
            if (i == rank) continue;
            auto& row = a[static_cast<std::size_t>(i)];
            const long f = row[static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < nc; ++j)
                row[static_cast<std::size_t>(j)] =
                    static_cast<int>(((row[static_cast<std::size_t>(j)] - f * prow[static_cast<std::size_t>(j)]) % p + p) % p);
        }
        ++rank;
    }
    return rank;
}

namespace {

// All row orderings that only permute rows inside runs of equal row partitions.
std::vector<std::vector<std::size_t>> row_block_permutations(const std::vector<Partition>& row_partitions) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < row_partitions.size();) {
        std::size_t j = i;
        while (j < row_partitions.size() && row_partitions[j] == row_partitions[i]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> order(row_partitions.size());
    std::iota(order.begin(), order.end(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            out.push_back(order);
            return;
        }
        auto [lo, hi] = blocks[bi];
        auto first = order.begin() + static_cast<std::ptrdiff_t>(lo);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(hi);
        std::sort(first, last);
        do {
            rec(bi + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    return out;
}

std::vector<RowVector> sort_columns(const std::vector<RowVector>& rows) {
    if (rows.empty()) return rows;
    const std::size_t nr = rows.size();
    const std::size_t nc = rows.front().size();
    std::vector<std::vector<int>> cols(nc, std::vector<int>(nr));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) cols[j][i] = rows[i][j];
    std::sort(cols.begin(), cols.end());
    std::vector<RowVector> out(nr, RowVector(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out[i][j] = cols[j][i];
    return out;
}

std::vector<RowVector> canonical_rows(const std::vector<RowVector>& rows,
                                      const std::vector<std::vector<std::size_t>>& row_perms) {
    std::vector<RowVector> best;
    std::vector<RowVector> permuted(rows.size());
    for (const auto& perm : row_perms) {
        for (std::size_t i = 0; i < perm.size(); ++i) permuted[i] = rows[perm[i]];
        auto cand = sort_columns(permuted);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

}  // namespace

XMatrix canonical_form(const XMatrix& x) {
    if (x.rows.size() != x.row_partitions.size()) throw std::invalid_argument("canonical_form: row/partition count mismatch");
    if (x.rows.empty()) return x;
    return XMatrix{canonical_rows(x.rows, row_block_permutations(x.row_partitions)), x.row_partitions};
}

ExponentPoly j_poly(const std::vector<RowFilling>& rows, int cols) {
    ExponentPoly acc(cols);
    acc.add_term(std::vector<int>(static_cast<std::size_t>(cols), 0), QRat(1));
    for (const auto& f : rows) {
        ExponentPoly row(cols);
        for (const auto& [e, c] : f.part_counts) row.add_term(e, QRat(mpq_class(mpz_class(c))));
        acc *= row;
    }
    return acc;
}

ExponentPoly j_poly(const XMatrix& x) {
    const int cols = x.num_cols();
    std::vector<RowFilling> rows;
    for (std::size_t i = 0; i < x.rows.size(); ++i) {
        auto fillings = enumerate_row_fillings_detailed(x.row_partitions[i], std::max(cols, 1));
        auto it = fillings.find(x.rows[i]);
        if (it == fillings.end())
            throw ConsistencyError("j_poly: row " + std::to_string(i) + " of " + x.to_string() + " is not achievable from " +
                                   x.row_partitions[i].to_string());
        rows.push_back(it->second);
    }
    return j_poly(rows, cols);
}

std::vector<MatrixClass> enumerate_classes(const MultiplicityMap& m, int cols, int p) {
    if (!is_prime(p)) throw std::invalid_argument("enumerate_classes: " + std::to_string(p) + " is not prime");
    if (cols < 1 || cols > m.degree()) return {};
    const auto row_parts = m.row_partitions();
    const std::size_t nr = row_parts.size();

    std::vector<std::map<RowVector, RowFilling>> fillings;
    std::vector<std::vector<RowVector>> choices;
    for (const auto& rho : row_parts) {
        fillings.push_back(enumerate_row_fillings_detailed(rho, cols));
        std::vector<RowVector> rows;
        for (const auto& [row, f] : fillings.back()) rows.push_back(row);
        choices.push_back(std::move(rows));
    }

    const auto row_perms = row_block_permutations(row_parts);
    std::map<std::vector<RowVector>, std::uint64_t> orbits;
    std::vector<RowVector> current(nr);
    std::vector<int> coverage(static_cast<std::size_t>(cols), 0);

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == nr) {
            for (int c : coverage)
                if (c == 0) return;
            ++orbits[canonical_rows(current, row_perms)];
            return;
        }
        // Prune: the remaining rows must be able to fill every empty column.
        int empty = 0;
        for (int c : coverage) empty += (c == 0);
        int capacity = 0;
        for (std::size_t t = i; t < nr; ++t) capacity += row_parts[t].length();
        if (empty > capacity) return;
        for (const auto& row : choices[i]) {
            current[i] = row;
            for (std::size_t j = 0; j < row.size(); ++j) coverage[j] += row[j];
            rec(i + 1);
            for (std::size_t j = 0; j < row.size(); ++j) coverage[j] -= row[j];
        }
    };
    rec(0);

    std::vector<MatrixClass> out;
    out.reserve(orbits.size());
    for (auto& [rows, count] : orbits) {
        MatrixClass cls;
        cls.canon = XMatrix{rows, row_parts};
        cls.orbit_size = count;
        cls.rank_mod_p = rank_mod_p(cls.canon, p);
        for (std::size_t i = 0; i < nr; ++i) cls.j_polys.push_back(fillings[i].at(rows[i]));
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace capmoments
