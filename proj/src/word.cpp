#include "epiword/word.hpp"

#include <algorithm>
#include <charconv>

namespace epiword {

namespace {

// Prefix function (KMP borders) over an arbitrary integer sequence.
std::vector<std::size_t> prefix_function(const std::vector<Letter>& s) {
    std::vector<std::size_t> pi(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    return pi;
}

} // namespace

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    if (text.empty()) return Word{};
    if (text.find('.') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view tok = text.substr(
                pos, dot == std::string_view::npos ? text.size() - pos : dot - pos);
            unsigned long value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || p != tok.data() + tok.size() || value == 0)
                throw ParseError("bad letter token '" + std::string(tok) + "' in word '" +
                                 std::string(text) + "'");
            letters.push_back(static_cast<Letter>(value));
            if (dot == std::string_view::npos) break;
            pos = dot + 1;
            if (pos == text.size())
                throw ParseError("trailing '.' in word '" + std::string(text) + "'");
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw ParseError("bad letter character '" + std::string(1, c) +
                                 "' in word '" + std::string(text) + "'");
            letters.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return Word{std::move(letters)};
}

std::string Word::str() const {
    if (empty()) return "";
    bool digits = std::all_of(begin(), end(), [](Letter a) { return a <= 9; });
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (digits) {
            out.push_back(static_cast<char>('0' + letters_[i]));
        } else {
            if (i > 0) out.push_back('.');
            out += std::to_string(letters_[i]);
        }
    }
    return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word{std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len))};
}

bool Word::contains(const Word& f) const {
    if (f.empty()) return true;
    return std::search(letters_.begin(), letters_.end(), f.letters_.begin(),
                       f.letters_.end()) != letters_.end();
}

Word reversal(const Word& w) {
    std::vector<Letter> r(w.letters().rbegin(), w.letters().rend());
    return Word{std::move(r)};
}

bool is_palindrome(const Word& w) {
    const auto& v = w.letters();
    return std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2),
                      v.rbegin());
}

std::size_t longest_palindromic_suffix(const Word& w) {
    if (w.empty()) return 0;
    // A suffix of w of length L is a palindrome iff it equals the prefix of
    // reverse(w) of length L. The longest such L is the last value of the
    // prefix function of reverse(w) # w, with 0 as a separator letter that
    // never occurs in a word.
    std::vector<Letter> t;
    t.reserve(2 * w.size() + 1);
    t.insert(t.end(), w.letters().rbegin(), w.letters().rend());
    t.push_back(0);
    t.insert(t.end(), w.letters().begin(), w.letters().end());
    return prefix_function(t).back();
}

Word palindromic_closure(const Word& w, std::size_t word_cap) {
    std::size_t lps = longest_palindromic_suffix(w);
    std::size_t out_len = 2 * w.size() - lps;
    if (out_len > word_cap)
        throw ResourceLimitError("palindromic closure would need " +
                                 std::to_string(out_len) + " letters (cap " +
                                 std::to_string(word_cap) + ")");
    std::vector<Letter> out = w.letters();
    out.reserve(out_len);
    for (std::size_t i = w.size() - lps; i-- > 0;) out.push_back(w[i]);
    return Word{std::move(out)};
}

ParikhVector parikh(const Word& w) {
    ParikhVector counts;
    for (Letter a : w) ++counts[a];
    return counts;
}

std::map<Letter, Letter> first_occurrence_renaming(const Word& w) {
    std::map<Letter, Letter> renaming;
    Letter next = 1;
    for (Letter a : w)
        if (renaming.emplace(a, next).second) ++next;
    return renaming;
}

Word apply_renaming(const Word& w, const std::map<Letter, Letter>& renaming) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(renaming.at(a));
    return Word{std::move(out)};
}

} // namespace epiword
