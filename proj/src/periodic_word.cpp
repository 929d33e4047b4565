#include "epiword/periodic_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace epiword {

namespace {

Word primitive_root(const Word& w) {
    std::size_t p = smallest_period(w);
    if (p < w.size() && w.size() % p == 0) return w.subword(0, p);
    return w;
}

} // namespace

std::size_t smallest_period(const Word& w) {
    if (w.empty()) return 0;
    const auto& s = w.letters();
    std::vector<std::size_t> pi(s.size(), 0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) k = pi[k - 1];
        if (s[i] == s[k]) ++k;
        pi[i] = k;
    }
    return w.size() - pi.back();
}

EventuallyPeriodicWord::EventuallyPeriodicWord(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty())
        throw std::invalid_argument("eventually periodic word needs a nonempty period");
    period_ = primitive_root(period_);
    // Absorb preperiod letters that merely repeat the periodic tail: while the
    // last preperiod letter equals the last period letter, rotate the period
    // right and drop that letter. Rotations of a primitive word stay primitive.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        std::vector<Letter> rotated = period_.letters();
        std::rotate(rotated.begin(), rotated.end() - 1, rotated.end());
        period_ = Word{std::move(rotated)};
        std::vector<Letter> pre = preperiod_.letters();
        pre.pop_back();
        preperiod_ = Word{std::move(pre)};
    }
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(std::string_view text) {
    std::size_t open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw ParseError("expected 'preperiod(period)' form, got '" +
                         std::string(text) + "'");
    std::string_view pre = text.substr(0, open);
    std::string_view per = text.substr(open + 1, text.size() - open - 2);
    if (per.find('(') != std::string_view::npos ||
        per.find(')') != std::string_view::npos)
        throw ParseError("nested parentheses in '" + std::string(text) + "'");
    if (per.empty())
        throw ParseError("empty period in '" + std::string(text) + "'");
    return EventuallyPeriodicWord(Word::parse(pre), Word::parse(per));
}

std::string EventuallyPeriodicWord::str() const {
    return preperiod_.str() + "(" + period_.str() + ")";
}

Letter EventuallyPeriodicWord::at(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

Word EventuallyPeriodicWord::prefix(std::size_t n) const {
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n && i < preperiod_.size(); ++i)
        out.push_back(preperiod_[i]);
    while (out.size() < n)
        out.push_back(period_[(out.size() - preperiod_.size()) % period_.size()]);
    return Word{std::move(out)};
}

std::set<Letter> EventuallyPeriodicWord::alphabet() const {
    std::set<Letter> a = preperiod_.alphabet();
    auto p = period_.alphabet();
    a.insert(p.begin(), p.end());
    return a;
}

EventuallyPeriodicWord EventuallyPeriodicWord::renamed_by_first_occurrence() const {
    auto renaming = first_occurrence_renaming(preperiod_ + period_);
    return {apply_renaming(preperiod_, renaming), apply_renaming(period_, renaming)};
}

BalanceReport balance_check_periodic(const EventuallyPeriodicWord& w) {
    std::size_t l = w.preperiod().size();
    std::size_t q = w.period().size();
    std::size_t max_len = l + 2 * q;
    // Prefix long enough for the longest checked factor length; window start
    // positions 0..(l+2q-1) cover every distinct factor of each length.
    Word prefix = w.prefix(l + 2 * q + max_len - 1);
    return balance_check_prefix_positions(prefix, max_len, l + 2 * q);
}

std::map<Letter, Rational> frequencies(const EventuallyPeriodicWord& w) {
    std::map<Letter, Rational> freq;
    auto counts = parikh(w.period());
    auto q = static_cast<std::int64_t>(w.period().size());
    for (const auto& [letter, count] : counts)
        freq[letter] = Rational(static_cast<std::int64_t>(count), q);
    return freq;
}

} // namespace epiword
