#include "epiword/factors.hpp"

namespace epiword {

std::set<Word> factor_set(const Word& w, std::size_t n) {
    std::set<Word> out;
    if (n > w.size()) return out;
    if (n == 0) {
        out.insert(Word{});
        return out;
    }
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.subword(i, n));
    return out;
}

std::set<Word> factor_set(const EventuallyPeriodicWord& w, std::size_t n) {
    if (n == 0) return {Word{}};
    std::size_t positions = w.preperiod().size() + w.period().size();
    Word prefix = w.prefix(positions + n - 1);
    std::set<Word> out;
    for (std::size_t i = 0; i < positions; ++i) out.insert(prefix.subword(i, n));
    return out;
}

std::set<Word> right_special_factors(const std::set<Word>& f_n,
                                     const std::set<Word>& f_next) {
    std::set<Word> out;
    for (const Word& f : f_n) {
        std::set<Letter> extensions;
        for (const Word& g : f_next)
            if (g.size() == f.size() + 1 && g.subword(0, f.size()) == f)
                extensions.insert(g.back());
        if (extensions.size() >= 2) out.insert(f);
    }
    return out;
}

std::set<Word> left_special_factors(const std::set<Word>& f_n,
                                    const std::set<Word>& f_next) {
    std::set<Word> out;
    for (const Word& f : f_n) {
        std::set<Letter> extensions;
        for (const Word& g : f_next)
            if (g.size() == f.size() + 1 && g.subword(1, f.size()) == f)
                extensions.insert(g.front());
        if (extensions.size() >= 2) out.insert(f);
    }
    return out;
}

bool is_reversal_closed(const std::set<Word>& factors) {
    for (const Word& f : factors)
        if (!factors.count(reversal(f))) return false;
    return true;
}

ComplexityProfile complexity(const Word& w, std::size_t max_n, bool exact) {
    ComplexityProfile profile;
    profile.exact = exact;
    for (std::size_t n = 1; n <= max_n; ++n)
        profile.values.emplace_back(n, factor_set(w, n).size());
    return profile;
}

ComplexityProfile complexity(const EventuallyPeriodicWord& w, std::size_t max_n) {
    ComplexityProfile profile;
    profile.exact = true;
    for (std::size_t n = 1; n <= max_n; ++n)
        profile.values.emplace_back(n, factor_set(w, n).size());
    return profile;
}

} // namespace epiword
