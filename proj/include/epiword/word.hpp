#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace epiword {

/// Letters are positive integers (1-based). Alphabets are never declared up
/// front; every operation infers the alphabet from the letters present.
using Letter = std::uint32_t;

/// Letter -> number of occurrences. Ordered so that iteration is by letter id.
using ParikhVector = std::map<Letter, std::size_t>;

/// Default cap (in letters) for operations that materialize words.
inline constexpr std::size_t kDefaultWordCap = 10'000'000;

/// Thrown when an operation would materialize a word longer than its cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed textual input; the message names the bad token.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite word over positive-integer letters.
///
/// Value type with lexicographic ordering. The empty word is the default
/// value.
///
/// Text format: a word whose letters are all in 1..9 renders as a digit
/// string ("1213121"); a word containing a letter >= 10 renders as
/// dot-separated decimal integers ("1.2.13.1"). The empty word renders as the
/// empty string. parse() accepts both forms.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    static Word parse(std::string_view text);
    std::string str() const;

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter a) { letters_.push_back(a); }
    void append(const Word& w) {
        letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    }

    /// Contiguous subword of `len` letters starting at `pos` (0-based).
    Word subword(std::size_t pos, std::size_t len) const;

    /// True iff `f` occurs as a contiguous factor.
    bool contains(const Word& f) const;

    std::set<Letter> alphabet() const {
        return {letters_.begin(), letters_.end()};
    }

    friend Word operator+(const Word& a, const Word& b) {
        Word r = a;
        r.append(b);
        return r;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

/// The word read right to left. An involution.
Word reversal(const Word& w);

/// True iff w equals its reversal. The empty word is a palindrome.
bool is_palindrome(const Word& w);

/// Length of the longest suffix of w that is a palindrome (0 for the empty
/// word, otherwise >= 1). Linear time via a border computation.
std::size_t longest_palindromic_suffix(const Word& w);

/// Palindromic right closure w^(+): the shortest palindrome having w as a
/// prefix. |result| = 2|w| - longest_palindromic_suffix(w).
Word palindromic_closure(const Word& w, std::size_t word_cap = kDefaultWordCap);

/// Occurrence counts of every letter present in w.
ParikhVector parikh(const Word& w);

/// Renaming of letters by first occurrence: the first distinct letter maps to
/// 1, the second to 2, and so on. Letters absent from `w` are not mapped.
std::map<Letter, Letter> first_occurrence_renaming(const Word& w);

/// Applies a letter map; every letter of w must be in the map's domain.
Word apply_renaming(const Word& w, const std::map<Letter, Letter>& renaming);

} // namespace epiword
