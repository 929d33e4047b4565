#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "epiword/periodic_word.hpp"
#include "epiword/word.hpp"

namespace epiword {

/// Distinct contiguous factors of length n. Empty set when n > |w|;
/// {epsilon} when n = 0.
std::set<Word> factor_set(const Word& w, std::size_t n);

/// Exact factor set of the infinite word: every length-n factor occurs
/// starting at a position < |preperiod| + |period|.
std::set<Word> factor_set(const EventuallyPeriodicWord& w, std::size_t n);

/// Factors f in f_n with fa and fb in f_next for two distinct letters a, b.
std::set<Word> right_special_factors(const std::set<Word>& f_n,
                                     const std::set<Word>& f_next);

/// Factors f in f_n with af and bf in f_next for two distinct letters a, b.
std::set<Word> left_special_factors(const std::set<Word>& f_n,
                                    const std::set<Word>& f_next);

/// True iff the reversal of every member is a member.
bool is_reversal_closed(const std::set<Word>& factors);

/// p(n) = number of distinct factors of length n, for n = 1..max_n.
struct ComplexityProfile {
    std::vector<std::pair<std::size_t, std::size_t>> values;
    /// True when computed from an exact factor source (an eventually periodic
    /// word); false for a bounded-prefix approximation of an infinite word.
    bool exact = true;
};

ComplexityProfile complexity(const Word& w, std::size_t max_n, bool exact = true);
ComplexityProfile complexity(const EventuallyPeriodicWord& w, std::size_t max_n);

} // namespace epiword
