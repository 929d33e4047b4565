#include "epiword/directive.hpp"

#include <algorithm>
#include <stdexcept>

namespace epiword {

DirectiveSpec::DirectiveSpec(Word head, Word tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
    if (tail_.empty()) return;
    std::size_t p = smallest_period(tail_);
    if (p < tail_.size() && tail_.size() % p == 0) tail_ = tail_.subword(0, p);
    while (!head_.empty() && head_.back() == tail_.back()) {
        std::vector<Letter> rotated = tail_.letters();
        std::rotate(rotated.begin(), rotated.end() - 1, rotated.end());
        tail_ = Word{std::move(rotated)};
        std::vector<Letter> h = head_.letters();
        h.pop_back();
        head_ = Word{std::move(h)};
    }
}

DirectiveSpec DirectiveSpec::parse(std::string_view text) {
    std::size_t open = text.find('(');
    if (open == std::string_view::npos) return {Word::parse(text), Word{}};
    if (text.back() != ')')
        throw ParseError("expected 'HEAD(TAIL)' form, got '" + std::string(text) + "'");
    std::string_view head = text.substr(0, open);
    std::string_view tail = text.substr(open + 1, text.size() - open - 2);
    if (tail.find('(') != std::string_view::npos ||
        tail.find(')') != std::string_view::npos)
        throw ParseError("nested parentheses in '" + std::string(text) + "'");
    if (tail.empty())
        throw ParseError("empty tail in '" + std::string(text) + "'");
    return {Word::parse(head), Word::parse(tail)};
}

std::string DirectiveSpec::str() const {
    if (is_finite()) return head_.str();
    return head_.str() + "(" + tail_.str() + ")";
}

std::set<Letter> DirectiveSpec::alphabet() const {
    std::set<Letter> a = head_.alphabet();
    auto t = tail_.alphabet();
    a.insert(t.begin(), t.end());
    return a;
}

std::set<Letter> DirectiveSpec::ult() const { return tail_.alphabet(); }

DirectiveSpec DirectiveSpec::renamed_by_first_occurrence() const {
    auto renaming = first_occurrence_renaming(head_ + tail_);
    return {apply_renaming(head_, renaming), apply_renaming(tail_, renaming)};
}

void PalGenerator::step(Letter x, std::size_t word_cap) {
    auto it = prefix_len_.find(x);
    std::size_t old_len = current_.size();
    std::size_t new_len = it == prefix_len_.end() ? 2 * old_len + 1
                                                  : 2 * old_len - it->second;
    if (new_len > word_cap)
        throw ResourceLimitError("palindromic prefix would need " +
                                 std::to_string(new_len) + " letters (cap " +
                                 std::to_string(word_cap) + ")");
    if (it == prefix_len_.end()) {
        Word next = current_;
        next.push_back(x);
        next.append(current_);
        current_ = std::move(next);
        prefix_len_.emplace(x, old_len);
    } else {
        std::size_t h = it->second;
        Word next = current_;
        for (std::size_t i = h; i < old_len; ++i) next.push_back(current_[i]);
        current_ = std::move(next);
        it->second = old_len;
    }
}

Word pal(const Word& directive, std::size_t word_cap) {
    PalGenerator gen;
    for (Letter x : directive) gen.step(x, word_cap);
    return gen.current();
}

Word pal_naive(const Word& directive, std::size_t word_cap) {
    Word current;
    for (Letter x : directive) {
        current.push_back(x);
        current = palindromic_closure(current, word_cap);
    }
    return current;
}

Word generate_prefix(const DirectiveSpec& spec, std::size_t min_len,
                     std::size_t word_cap) {
    if (min_len > word_cap)
        throw ResourceLimitError("requested prefix length " + std::to_string(min_len) +
                                 " exceeds the word cap " + std::to_string(word_cap));
    PalGenerator gen;
    std::size_t consumed = 0;
    while (gen.current().size() < min_len) {
        Letter x;
        if (consumed < spec.head().size()) {
            x = spec.head()[consumed];
        } else if (!spec.tail().empty()) {
            x = spec.tail()[(consumed - spec.head().size()) % spec.tail().size()];
        } else {
            throw std::invalid_argument(
                "finite directive '" + spec.str() + "' generates only " +
                std::to_string(gen.current().size()) + " letters; " +
                std::to_string(min_len) + " requested");
        }
        gen.step(x, word_cap);
        ++consumed;
    }
    return gen.current();
}

EventuallyPeriodicWord to_periodic(const DirectiveSpec& spec, std::size_t word_cap) {
    if (spec.is_finite())
        throw std::invalid_argument("finite directive '" + spec.str() +
                                    "' generates a finite word, not a periodic one");
    if (!spec.single_letter_tail())
        throw std::invalid_argument(
            "directive '" + spec.str() +
            "' has a non-constant tail; the generated word is aperiodic");
    Word closed = pal(spec.head() + spec.tail(), word_cap);
    std::size_t base_len = pal(spec.head(), word_cap).size();
    // Pal(head a) = period . Pal(head), so dropping that suffix leaves one
    // full period of the generated word.
    Word period = closed.subword(0, closed.size() - base_len);
    return {Word{}, period};
}

bool is_strict(const DirectiveSpec& spec) { return spec.alphabet() == spec.ult(); }

Word fraenkel_word(unsigned k, std::size_t word_cap) {
    if (k == 0) throw std::invalid_argument("Fraenkel words start at k = 1");
    if (k >= 64 || ((std::size_t{1} << k) - 1) > word_cap)
        throw ResourceLimitError("Fraenkel word for k = " + std::to_string(k) +
                                 " has 2^k - 1 letters, beyond the cap of " +
                                 std::to_string(word_cap));
    Word w{std::vector<Letter>{1}};
    for (unsigned i = 2; i <= k; ++i) {
        Word next = w;
        next.push_back(static_cast<Letter>(i));
        next.append(w);
        w = std::move(next);
    }
    return w;
}

std::map<Letter, Rational> frequencies_closed_form(unsigned k) {
    if (k < 3 || k > 62)
        throw std::invalid_argument("closed-form frequencies need 3 <= k <= 62, got " +
                                    std::to_string(k));
    std::int64_t den = (std::int64_t{1} << k) - 1;
    std::map<Letter, Rational> freq;
    for (unsigned i = 1; i <= k; ++i)
        freq[static_cast<Letter>(i)] = Rational(std::int64_t{1} << (k - i), den);
    return freq;
}

} // namespace epiword
