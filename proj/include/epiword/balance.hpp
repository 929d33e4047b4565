#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "epiword/word.hpp"

namespace epiword {

enum class BalanceVerdict {
    Balanced,     ///< no pair of equal-length factors differs by >= 2 in any letter
    Unbalanced,   ///< a witness pair was found
    Inconclusive, ///< bounded search over an infinite word found no witness
};

/// Two equal-length factors whose counts of `letter` differ by at least 2.
/// factor_u is the one with the larger count. Positions are 0-based indices
/// into the checked word (for infinite words: into the materialized prefix,
/// which is a prefix of the infinite word itself).
struct BalanceWitness {
    Word factor_u;
    Word factor_v;
    Letter letter = 0;
    std::size_t length = 0;
    std::size_t position_u = 0;
    std::size_t position_v = 0;
};

struct BalanceReport {
    BalanceVerdict verdict = BalanceVerdict::Balanced;
    std::optional<BalanceWitness> witness;
    /// Inclusive range of factor lengths examined; empty when max < min.
    std::size_t checked_min = 1;
    std::size_t checked_max = 0;

    std::string str() const;
};

/// Balance check of a finite word over factor lengths 1..max_len.
///
/// For each length the per-letter window counts are computed by sliding-window
/// counting; the first failing length yields the canonical witness: smallest
/// length, then lexicographically smallest pair of window start positions,
/// then smallest letter id.
///
/// Throws std::invalid_argument when max_len > |w|.
BalanceReport balance_check_finite(const Word& w, std::size_t max_len);

/// Balance scan with window start positions restricted to 0..max_positions-1
/// at each length. Used by the exact periodic check, where a bounded set of
/// start positions already covers every distinct factor.
BalanceReport balance_check_prefix_positions(const Word& w, std::size_t max_len,
                                             std::size_t max_positions);

/// Re-checks a reported witness against raw window counts of `w`.
/// True iff the factors match the word at the reported positions, have equal
/// length, and the counts of the reported letter differ by at least 2.
bool validate_witness(const Word& w, const BalanceWitness& witness);

} // namespace epiword
