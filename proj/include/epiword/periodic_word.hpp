#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "epiword/balance.hpp"
#include "epiword/rational.hpp"
#include "epiword/word.hpp"

namespace epiword {

/// An eventually periodic infinite word, stored as preperiod + period and kept
/// in canonical form: the period is primitive (not a power of a shorter word)
/// and the preperiod is minimal (its last letter differs from the period's
/// last letter; any matching tail is absorbed into a rotation of the period).
/// Canonical form makes equality of the underlying infinite words structural.
///
/// Text format: "preperiod(period)", e.g. "(1213121)" for a purely periodic
/// word or "12(31)" for 12 31 31 31 ...
class EventuallyPeriodicWord {
public:
    /// Canonicalizes on construction. The period must be nonempty.
    EventuallyPeriodicWord(Word preperiod, Word period);

    static EventuallyPeriodicWord parse(std::string_view text);
    std::string str() const;

    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }
    bool purely_periodic() const { return preperiod_.empty(); }

    /// Letter at 0-based position i of the infinite word.
    Letter at(std::size_t i) const;

    /// The first n letters.
    Word prefix(std::size_t n) const;

    std::set<Letter> alphabet() const;

    /// Same word with letters renamed by first occurrence; two eventually
    /// periodic words are equal up to letter permutation iff their renamed
    /// forms are equal.
    EventuallyPeriodicWord renamed_by_first_occurrence() const;

    friend bool operator==(const EventuallyPeriodicWord&,
                           const EventuallyPeriodicWord&) = default;

private:
    Word preperiod_;
    Word period_;
};

/// Exact balance verdict for the infinite word.
///
/// With l = |preperiod| and q = |period|, every factor of length n occurs
/// starting at some position < l + q, and an imbalance at any length implies
/// one at a length <= l + 2q (window counts inside the periodic tail reduce
/// modulo the period). Checking lengths 1..(l + 2q) over the prefix of length
/// l + 2q + n - 1 is therefore decisive; the verdict is never Inconclusive.
/// Witness positions index the infinite word.
BalanceReport balance_check_periodic(const EventuallyPeriodicWord& w);

/// Letter frequencies: |period|_a / |period| as exact rationals in lowest
/// terms. They sum to 1.
std::map<Letter, Rational> frequencies(const EventuallyPeriodicWord& w);

/// Smallest period of the finite word w (the classic border-based value:
/// |w| - longest proper border). Returns |w| for an aperiodic-looking word.
std::size_t smallest_period(const Word& w);

} // namespace epiword
