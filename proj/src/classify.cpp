#include "epiword/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace epiword {

namespace {

Word range_word(std::size_t lo, std::size_t hi) { // lo lo+1 ... hi, empty if lo > hi
    Word w;
    for (std::size_t a = lo; a <= hi; ++a) w.push_back(static_cast<Letter>(a));
    return w;
}

Word repeated(Letter a, std::size_t count) {
    return Word{std::vector<Letter>(count, a)};
}

// Matches the renamed directive against the three family patterns. The
// directive must be canonical, renamed by first occurrence, with a
// single-letter tail and at least three letters.
std::optional<FamilyClass> match_family(const DirectiveSpec& renamed) {
    const Word& head = renamed.head();
    Letter t = renamed.tail()[0];

    // Family A: head = 1^n 2 3 ... (k-1), tail = k.
    {
        std::size_t n = 0;
        while (n < head.size() && head[n] == 1) ++n;
        std::size_t rest = head.size() - n;
        bool shape = n >= 1;
        for (std::size_t i = 0; i < rest && shape; ++i)
            shape = head[n + i] == static_cast<Letter>(i + 2);
        if (shape && rest >= 1 && t == static_cast<Letter>(rest + 2)) {
            FamilyClass fc;
            fc.kind = FamilyClass::Kind::FamilyA;
            fc.n = n;
            fc.k = rest + 2;
            return fc;
        }
    }
    // Family B: head = 1 2 ... (k-1) 1 k ... (k+l-1), tail = k+l, l >= 0.
    {
        std::size_t run = 0;
        while (run < head.size() && head[run] == static_cast<Letter>(run + 1)) ++run;
        std::size_t k = run + 1;
        if (run >= 1 && run < head.size() && head[run] == 1) {
            std::size_t l = head.size() - run - 1;
            bool shape = true;
            for (std::size_t i = 0; i < l && shape; ++i)
                shape = head[run + 1 + i] == static_cast<Letter>(k + i);
            if (shape && t == static_cast<Letter>(k + l) && k + l >= 3) {
                FamilyClass fc;
                fc.kind = FamilyClass::Kind::FamilyB;
                fc.k = k;
                fc.l = l;
                return fc;
            }
        }
    }
    // Family C: head = 1 2 ... k, tail = 1.
    {
        bool shape = head.size() >= 3 && t == 1;
        for (std::size_t i = 0; i < head.size() && shape; ++i)
            shape = head[i] == static_cast<Letter>(i + 1);
        if (shape) {
            FamilyClass fc;
            fc.kind = FamilyClass::Kind::FamilyC;
            fc.k = head.size();
            return fc;
        }
    }
    return std::nullopt;
}

} // namespace

BalanceReport search_unbalance_witness(const DirectiveSpec& spec,
                                       const ClassifyOptions& options) {
    std::size_t bound = std::max<std::size_t>(options.prefix_bound, 1);
    BalanceReport last;
    last.verdict = BalanceVerdict::Inconclusive;
    // Escalating schedule: witnesses are typically short and early, so most
    // searches stop at the first level.
    for (std::size_t target : {std::size_t{256}, std::size_t{1024}, std::size_t{4096},
                               bound}) {
        target = std::min(target, bound);
        std::size_t max_len = std::max<std::size_t>(target / 4, 1);
        Word prefix;
        try {
            prefix = generate_prefix(spec, target, options.word_cap);
        } catch (const std::invalid_argument&) {
            break; // finite directive exhausted; fall through with what we have
        }
        BalanceReport report =
            balance_check_finite(prefix, std::min(max_len, prefix.size()));
        if (report.verdict == BalanceVerdict::Unbalanced) return report;
        last = report;
        last.verdict = BalanceVerdict::Inconclusive;
        if (target >= bound) break;
    }
    return last;
}

FamilyClass classify(const DirectiveSpec& spec, const ClassifyOptions& options) {
    if (spec.is_finite())
        throw std::invalid_argument("classification needs an infinite directive; '" +
                                    spec.str() + "' is finite");
    FamilyClass fc;
    std::size_t alphabet_size = spec.alphabet().size();

    if (alphabet_size >= 3 && spec.single_letter_tail()) {
        if (auto family = match_family(spec.renamed_by_first_occurrence()))
            return *family;
    }

    fc.outside_theorem_scope = alphabet_size < 3;
    if (spec.single_letter_tail()) {
        BalanceReport exact = balance_check_periodic(to_periodic(spec, options.word_cap));
        fc.balance = exact;
        fc.kind = exact.verdict == BalanceVerdict::Unbalanced
                      ? FamilyClass::Kind::NotBalanced
                      : FamilyClass::Kind::Unknown;
        return fc;
    }
    BalanceReport searched = search_unbalance_witness(spec, options);
    fc.balance = searched;
    fc.kind = searched.verdict == BalanceVerdict::Unbalanced
                  ? FamilyClass::Kind::NotBalanced
                  : FamilyClass::Kind::Unknown;
    return fc;
}

DirectiveSpec family_directive(const FamilyClass& fc) {
    switch (fc.kind) {
        case FamilyClass::Kind::FamilyA: {
            if (fc.n < 1 || fc.k < 3)
                throw std::invalid_argument("family A needs n >= 1 and k >= 3");
            Word head = repeated(1, fc.n) + range_word(2, fc.k - 1);
            return {head, Word{static_cast<Letter>(fc.k)}};
        }
        case FamilyClass::Kind::FamilyB: {
            if (fc.k < 2 || fc.k + fc.l < 3)
                throw std::invalid_argument(
                    "family B needs k >= 2 and an alphabet of k + l >= 3 letters");
            Word head = range_word(1, fc.k - 1);
            head.push_back(1);
            head.append(range_word(fc.k, fc.k + fc.l - 1));
            return {head, Word{static_cast<Letter>(fc.k + fc.l)}};
        }
        case FamilyClass::Kind::FamilyC: {
            if (fc.k < 3) throw std::invalid_argument("family C needs k >= 3");
            return {range_word(1, fc.k), Word{1}};
        }
        default:
            throw std::invalid_argument("no directive for a non-family classification");
    }
}

EventuallyPeriodicWord family_word(const FamilyClass& fc, std::size_t word_cap) {
    switch (fc.kind) {
        case FamilyClass::Kind::FamilyA: {
            if (fc.n < 1 || fc.k < 3)
                throw std::invalid_argument("family A needs n >= 1 and k >= 3");
            Word p = pal(repeated(1, fc.n) + range_word(2, fc.k - 2), word_cap);
            auto last = static_cast<Letter>(fc.k - 1);
            auto fresh = static_cast<Letter>(fc.k);
            Word pre = p + Word{last} + p;
            Word per = Word{fresh} + p + Word{last} + p;
            return {pre, per};
        }
        case FamilyClass::Kind::FamilyB: {
            if (fc.k < 2 || fc.k + fc.l < 3)
                throw std::invalid_argument(
                    "family B needs k >= 2 and an alphabet of k + l >= 3 letters");
            if (fc.l == 0) {
                Word head = range_word(1, fc.k - 1);
                head.push_back(1);
                Word x = pal(head, word_cap);
                return {x, Word{static_cast<Letter>(fc.k)} + x};
            }
            Word stem = range_word(1, fc.k - 1);
            stem.push_back(1);
            stem.append(range_word(fc.k, fc.k + fc.l - 2));
            Word p = pal(stem, word_cap);
            auto last = static_cast<Letter>(fc.k + fc.l - 1);
            auto fresh = static_cast<Letter>(fc.k + fc.l);
            Word pre = p + Word{last} + p;
            Word per = Word{fresh} + p + Word{last} + p;
            return {pre, per};
        }
        case FamilyClass::Kind::FamilyC:
            if (fc.k < 3) throw std::invalid_argument("family C needs k >= 3");
            return {Word{}, fraenkel_word(static_cast<unsigned>(fc.k), word_cap)};
        default:
            throw std::invalid_argument("no closed form for a non-family classification");
    }
}

std::string FamilyClass::str() const {
    std::string scope = outside_theorem_scope
                            ? " [outside family-theorem scope: fewer than 3 letters]"
                            : "";
    switch (kind) {
        case Kind::FamilyA:
            return "family A (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
        case Kind::FamilyB:
            return "family B (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
        case Kind::FamilyC:
            return "family C (k=" + std::to_string(k) + ")";
        case Kind::NotBalanced:
            return "not balanced: " + (balance ? balance->str() : std::string("(no report)")) +
                   scope;
        case Kind::Unknown:
            if (balance && balance->verdict == BalanceVerdict::Balanced)
                return "balanced, outside the family classification" + scope + ": " +
                       balance->str();
            return "unknown: " + (balance ? balance->str() : std::string("(no report)")) +
                   scope;
    }
    return "";
}

} // namespace epiword
