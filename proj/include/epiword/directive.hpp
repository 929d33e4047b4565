#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "epiword/periodic_word.hpp"
#include "epiword/rational.hpp"
#include "epiword/word.hpp"

namespace epiword {

/// Directive sequence of a standard episturmian word, as head . tail^omega.
/// An empty tail denotes a finite directive word (generating a finite word
/// only). Canonical form: the tail is primitive, and trailing head letters
/// that match a rotation of the tail are absorbed into it, so equal infinite
/// directives compare equal.
///
/// Text format: "HEAD(TAIL)" — "123(1)" for 123 1 1 1 ..., "(123)" for the
/// purely periodic directive, "12131" for a finite directive word.
class DirectiveSpec {
public:
    DirectiveSpec() = default;
    DirectiveSpec(Word head, Word tail);

    static DirectiveSpec parse(std::string_view text);
    std::string str() const;

    const Word& head() const { return head_; }
    const Word& tail() const { return tail_; }
    bool is_finite() const { return tail_.empty(); }
    bool single_letter_tail() const { return tail_.size() == 1; }

    /// Letters occurring in the directive at all / infinitely often.
    std::set<Letter> alphabet() const;
    std::set<Letter> ult() const;

    /// Same directive with letters renamed by first occurrence.
    DirectiveSpec renamed_by_first_occurrence() const;

    friend bool operator==(const DirectiveSpec&, const DirectiveSpec&) = default;
    friend auto operator<=>(const DirectiveSpec&, const DirectiveSpec&) = default;

private:
    Word head_;
    Word tail_;
};

/// Incremental builder of iterated palindromic closures.
///
/// Maintains the current palindromic prefix u = Pal(w) together with, for each
/// letter x occurring in w, the length of the longest palindromic prefix of u
/// that is followed by x in u. Each step then costs time proportional to the
/// output growth: if x is new, Pal(wx) = u x u; otherwise Pal(wx) = u with its
/// first h(x) letters re-appended, h(x) being the recorded prefix length.
class PalGenerator {
public:
    void step(Letter x, std::size_t word_cap = kDefaultWordCap);
    const Word& current() const { return current_; }

    /// Recorded prefix length for x, if x has been directed yet.
    const std::map<Letter, std::size_t>& closure_prefix_lengths() const {
        return prefix_len_;
    }

private:
    Word current_;
    std::map<Letter, std::size_t> prefix_len_;
};

/// Iterated palindromic closure Pal(w): fold of the palindromic right closure
/// over the letters of w, starting from the empty word. Uses the incremental
/// rule above.
Word pal(const Word& directive, std::size_t word_cap = kDefaultWordCap);

/// Same value computed by literally folding palindromic_closure; kept as an
/// independent route for cross-checks.
Word pal_naive(const Word& directive, std::size_t word_cap = kDefaultWordCap);

/// Shortest palindromic prefix u_n of the directed word with |u_n| >= min_len.
/// Throws when a finite directive is exhausted first, or when the cap would
/// be exceeded.
Word generate_prefix(const DirectiveSpec& spec, std::size_t min_len,
                     std::size_t word_cap = kDefaultWordCap);

/// The word directed by head . a^omega, which is purely periodic with period
/// Pal(head a) minus its suffix Pal(head). Rejects directives whose tail is
/// not a single letter: all other infinite directives generate aperiodic
/// words.
EventuallyPeriodicWord to_periodic(const DirectiveSpec& spec,
                                   std::size_t word_cap = kDefaultWordCap);

/// True iff every letter of the directive occurs infinitely often in it
/// (Alph = Ult); such directives generate the Arnoux-Rauzy words of their
/// alphabet.
bool is_strict(const DirectiveSpec& spec);

/// Fraenkel word Fr_k: Fr_1 = 1, Fr_k = Fr_{k-1} k Fr_{k-1}. Equals
/// Pal(1 2 ... k) and has length 2^k - 1.
Word fraenkel_word(unsigned k, std::size_t word_cap = kDefaultWordCap);

/// Letter frequencies of the k-letter Fraenkel word repeated periodically:
/// letter i has frequency 2^(k-i) / (2^k - 1). Requires 3 <= k <= 62 so the
/// arithmetic stays exact in 64 bits.
std::map<Letter, Rational> frequencies_closed_form(unsigned k);

} // namespace epiword
