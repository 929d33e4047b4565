// Acceptance suite: exact-value and exhaustive checks at pinned bounds, one
// verdict line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "epiword/classify.hpp"
#include "epiword/directive.hpp"
#include "epiword/factors.hpp"
#include "epiword/verifier.hpp"
#include "oracles.hpp"

using namespace epiword;

namespace {

int failures = 0;
int criterion_index = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& run) {
    ++criterion_index;
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion_index,
                name.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

Word range_directive(unsigned k) {
    Word w;
    for (Letter a = 1; a <= k; ++a) w.push_back(a);
    return w;
}

} // namespace

int main() {
    criterion("golden palindromic closures", [](std::string&) {
        return pal(Word::parse("123")).str() == "1213121" &&
               pal(Word::parse("1234")).str() == "121312141213121" &&
               pal(Word::parse("1232")).str() == "1213121213121";
    });

    criterion("Tribonacci prefix of length 27", [](std::string&) {
        return generate_prefix(DirectiveSpec::parse("(123)"), 27).str() ==
               "121312112131212131211213121";
    });

    criterion("Fraenkel words for k = 1..16", [](std::string&) {
        if (fraenkel_word(3).str() != "1213121") return false;
        if (fraenkel_word(4).str() != "121312141213121") return false;
        if (fraenkel_word(5).str() != "1213121412131215121312141213121") return false;
        for (unsigned k = 1; k <= 16; ++k) {
            Word fr = fraenkel_word(k);
            if (fr.size() != (std::size_t{1} << k) - 1) return false;
            if (fr != pal(range_directive(k))) return false;
        }
        return true;
    });

    criterion("family C frequencies for k = 3..10", [](std::string&) {
        for (unsigned k = 3; k <= 10; ++k) {
            FamilyClass fc;
            fc.kind = FamilyClass::Kind::FamilyC;
            fc.k = k;
            auto freqs = frequencies(family_word(fc));
            if (freqs != frequencies_closed_form(k)) return false;
            std::set<Rational> distinct;
            for (const auto& [letter, value] : freqs) distinct.insert(value);
            if (distinct.size() != k) return false;
        }
        return true;
    });

    criterion("witness factor pairs from the worked directives", [](std::string& detail) {
        struct Case {
            const char* spec;
            const char* factor1;
            const char* factor2;
        };
        const Case cases[] = {{"1232(1)", "212", "131"},
                              {"12131(1)", "11211", "21312"},
                              {"12321(1)", "212", "131"},
                              {"12312(1)", "212", "131"}};
        for (const Case& c : cases) {
            DirectiveSpec spec = DirectiveSpec::parse(c.spec);
            FamilyClass fc = classify(spec);
            if (fc.kind != FamilyClass::Kind::NotBalanced) {
                detail = std::string(c.spec) + " not classified unbalanced";
                return false;
            }
            Word prefix = generate_prefix(spec, 200);
            BalanceReport report = balance_check_finite(prefix, 64);
            if (report.verdict != BalanceVerdict::Unbalanced ||
                !validate_witness(prefix, *report.witness)) {
                detail = std::string(c.spec) + " witness missing or invalid";
                return false;
            }
            if (!prefix.contains(Word::parse(c.factor1)) ||
                !prefix.contains(Word::parse(c.factor2))) {
                detail = std::string(c.spec) + " named factors not contained";
                return false;
            }
        }
        return true;
    });

    criterion("incremental closure = naive closure, length <= 10 over <= 4 letters",
              [](std::string& detail) {
        std::size_t mismatches = 0, words = 0;
        for (std::size_t len = 0; len <= 10; ++len) {
            std::vector<Letter> cursor(len, 1);
            do {
                ++words;
                Word d{cursor};
                if (pal(d) != pal_naive(d)) ++mismatches;
            } while (oracle::next_word(cursor, 4));
        }
        detail = std::to_string(words) + " directives, " +
                 std::to_string(mismatches) + " mismatches";
        return mismatches == 0;
    });

    criterion("balance check = all-pairs oracle, length <= 14 over <= 3 letters",
              [](std::string& detail) {
        std::size_t mismatches = 0, words = 0;
        for (std::size_t len = 1; len <= 14; ++len) {
            std::vector<Letter> cursor(len, 1);
            do {
                ++words;
                Word w{cursor};
                BalanceReport fast = balance_check_finite(w, len);
                BalanceReport slow = oracle::balance_all_pairs(w, len);
                bool same = fast.verdict == slow.verdict;
                if (same && fast.verdict == BalanceVerdict::Unbalanced)
                    same = fast.witness->length == slow.witness->length &&
                           fast.witness->letter == slow.witness->letter &&
                           fast.witness->position_u == slow.witness->position_u &&
                           fast.witness->position_v == slow.witness->position_v &&
                           fast.witness->factor_u == slow.witness->factor_u &&
                           fast.witness->factor_v == slow.witness->factor_v;
                if (!same) ++mismatches;
            } while (oracle::next_word(cursor, 3));
        }
        detail = std::to_string(words) + " words, " + std::to_string(mismatches) +
                 " mismatches";
        return mismatches == 0;
    });

    criterion("family classification against exact semantics (default bounds)",
              [](std::string& detail) {
        VerificationReport report = verify_theorem_families(EnumerationConfig{});
        detail = report.str();
        return report.passed() && report.unknowns == 0;
    });

    criterion("periodic forms against the generator (default bounds)",
              [](std::string& detail) {
        FamilyClass c3;
        c3.kind = FamilyClass::Kind::FamilyC;
        c3.k = 3;
        EventuallyPeriodicWord w = family_word(c3);
        if (w != EventuallyPeriodicWord::parse("(1213121)") ||
            w.period().size() != 7 || smallest_period(w.period()) != 7) {
            detail = "family C (k=3) closed form mismatch";
            return false;
        }
        VerificationReport report = verify_periodicity(EnumerationConfig{});
        detail = report.str();
        return report.passed();
    });

    criterion("unique distinct-frequency balanced word for k = 3..5",
              [](std::string& detail) {
        VerificationReport report =
            verify_fraenkel_episturmian(3, 5, EnumerationConfig{});
        detail = report.str();
        return report.passed();
    });

    criterion("episturmian structure of the family words (alphabets <= 5)",
              [](std::string& detail) {
        std::vector<FamilyClass> families;
        for (std::size_t k = 3; k <= 5; ++k) {
            for (std::size_t n = 1; n <= 3; ++n) {
                FamilyClass a;
                a.kind = FamilyClass::Kind::FamilyA;
                a.n = n;
                a.k = k;
                families.push_back(a);
            }
            FamilyClass c;
            c.kind = FamilyClass::Kind::FamilyC;
            c.k = k;
            families.push_back(c);
        }
        for (std::size_t k = 2; k <= 4; ++k)
            for (std::size_t l = 0; k + l <= 5; ++l) {
                if (k + l < 3) continue;
                FamilyClass b;
                b.kind = FamilyClass::Kind::FamilyB;
                b.k = k;
                b.l = l;
                families.push_back(b);
            }
        for (const FamilyClass& fc : families) {
            EventuallyPeriodicWord w = family_word(fc);
            std::size_t period = w.period().size();
            auto current = factor_set(w, 0);
            for (std::size_t n = 0; n <= 2 * period; ++n) {
                auto next = factor_set(w, n + 1);
                if (n >= 1 && !is_reversal_closed(current)) {
                    detail = fc.str() + ": factors of length " + std::to_string(n) +
                             " not closed under reversal";
                    return false;
                }
                if (right_special_factors(current, next).size() > 1) {
                    detail = fc.str() + ": two right special factors at length " +
                             std::to_string(n);
                    return false;
                }
                current = std::move(next);
            }
        }
        Word fib = generate_prefix(DirectiveSpec::parse("(12)"), 2000);
        for (std::size_t n = 1; n <= 20; ++n)
            if (factor_set(fib, n).size() != n + 1) {
                detail = "Fibonacci complexity differs from n+1 at n = " +
                         std::to_string(n);
                return false;
            }
        detail = std::to_string(families.size()) + " family words checked";
        return true;
    });

    if (failures == 0)
        std::printf("all %d acceptance criteria passed\n", criterion_index);
    else
        std::printf("%d of %d acceptance criteria FAILED\n", failures, criterion_index);
    return failures == 0 ? 0 : 1;
}
