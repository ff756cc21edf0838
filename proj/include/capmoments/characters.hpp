#pragma once

#include "capmoments/partitions.hpp"
#include "capmoments/qpoly.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

namespace capmoments {

/// Irreducible character chi^mu at cycle type nu of S_k (Murnaghan-Nakayama).
/// Results are memoized process-wide; safe to call from several threads.
/// Throws std::invalid_argument if |mu| != |nu|.
std::int64_t character(const Partition& mu, const Partition& nu);

/// Dimension of the Specht module S_mu, by the hook length formula.
std::uint64_t dim_specht(const Partition& mu);

/// Dimension of the Schur functor S_mu(C^q) as a polynomial in q:
/// prod over cells (i, j) of (q + j - i) / hook(i, j).
QPoly dim_schur_qpoly(const Partition& mu);

/// Number of pairs (s, t) with s of cycle type nu1, t of cycle type nu2 and
/// s*t of cycle type nu3, computed from characters. Throws ConsistencyError
/// if the character sum is not an integer.
mpz_class connection_count(const Partition& nu1, const Partition& nu2, const Partition& nu3);

/// Full character table of S_k, rows and columns both in enumerate_partitions(k) order.
class CharacterTable {
public:
    /// Shared cached table for k.
    static std::shared_ptr<const CharacterTable> of(int k);

    explicit CharacterTable(int k);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] const std::vector<Partition>& classes() const noexcept { return classes_; }
    [[nodiscard]] std::size_t index(const Partition& p) const;
    /// chi^{classes()[irrep]} at classes()[cls].
    [[nodiscard]] std::int64_t at(std::size_t irrep, std::size_t cls) const { return values_[irrep * classes_.size() + cls]; }
    [[nodiscard]] std::int64_t operator()(const Partition& mu, const Partition& nu) const { return at(index(mu), index(nu)); }

private:
    int k_;
    std::vector<Partition> classes_;
    std::vector<std::int64_t> values_;
};

}  // namespace capmoments
