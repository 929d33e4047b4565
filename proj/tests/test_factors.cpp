#include <doctest.h>

#include "epiword/directive.hpp"
#include "epiword/factors.hpp"

using namespace epiword;

TEST_CASE("factor sets of a finite word") {
    Word w = Word::parse("1213121");
    CHECK(factor_set(w, 3) == std::set<Word>{Word::parse("121"), Word::parse("213"),
                                             Word::parse("131"), Word::parse("312")});
    CHECK(factor_set(w, 0) == std::set<Word>{Word{}});
    CHECK(factor_set(Word::parse("121"), 4).empty());
}

TEST_CASE("factor sets of a periodic word") {
    EventuallyPeriodicWord w = EventuallyPeriodicWord::parse("(1213121)");
    CHECK(factor_set(w, 1).size() == 3);
    CHECK(factor_set(w, 2).size() == 5);
    CHECK(factor_set(w, 3).size() == 6);
    for (std::size_t n = 4; n <= 16; ++n) CHECK(factor_set(w, n).size() == 7);
}

TEST_CASE("right special factors of the Fibonacci word") {
    Word prefix = generate_prefix(DirectiveSpec::parse("(12)"), 100);
    auto f1 = factor_set(prefix, 1);
    auto f2 = factor_set(prefix, 2);
    CHECK(right_special_factors(f1, f2) == std::set<Word>{Word::parse("1")});
    CHECK(right_special_factors(factor_set(Word::parse("1111"), 1),
                                factor_set(Word::parse("1111"), 2))
              .empty());
    // Three letters extend the empty factor in any Tribonacci prefix.
    Word trib = generate_prefix(DirectiveSpec::parse("(123)"), 30);
    CHECK(right_special_factors(factor_set(trib, 0), factor_set(trib, 1)) ==
          std::set<Word>{Word{}});
}

TEST_CASE("left special factors are prefixes for a standard word") {
    Word prefix = generate_prefix(DirectiveSpec::parse("(123)"), 200);
    for (std::size_t n = 1; n <= 6; ++n) {
        auto special = left_special_factors(factor_set(prefix, n),
                                            factor_set(prefix, n + 1));
        REQUIRE(special.size() == 1);
        CHECK(*special.begin() == prefix.subword(0, n));
    }
}

TEST_CASE("reversal closure") {
    CHECK(is_reversal_closed(factor_set(EventuallyPeriodicWord::parse("(1213121)"), 3)));
    CHECK_FALSE(is_reversal_closed(factor_set(Word::parse("112"), 2)));
    CHECK(is_reversal_closed(factor_set(Word::parse("112"), 0)));
}

TEST_CASE("complexity profiles") {
    EventuallyPeriodicWord w = EventuallyPeriodicWord::parse("(1213121)");
    ComplexityProfile profile = complexity(w, 10);
    CHECK(profile.exact);
    CHECK(profile.values[0] == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(profile.values[2] == std::pair<std::size_t, std::size_t>{3, 6});
    for (std::size_t n = 4; n <= 10; ++n) CHECK(profile.values[n - 1].second == 7);
    // Nondecreasing up to saturation, constant afterwards.
    for (std::size_t i = 1; i < profile.values.size(); ++i)
        CHECK(profile.values[i].second >= profile.values[i - 1].second);

    ComplexityProfile unary = complexity(EventuallyPeriodicWord::parse("(1)"), 5);
    for (const auto& [n, p] : unary.values) CHECK(p == 1);
}
