#include <doctest.h>

#include <random>

#include "epiword/word.hpp"
#include "oracles.hpp"

using namespace epiword;

TEST_CASE("word text round trip") {
    CHECK(Word::parse("").str() == "");
    CHECK(Word::parse("1213121").str() == "1213121");
    CHECK(Word::parse("1.2.13.1").str() == "1.2.13.1");
    CHECK(Word::parse("1.2.3").str() == "123"); // digits once letters allow it
    CHECK(Word::parse("12").letters() == std::vector<Letter>{1, 2});
    CHECK_THROWS_AS(Word::parse("102"), ParseError);
    CHECK_THROWS_AS(Word::parse("1a3"), ParseError);
    CHECK_THROWS_AS(Word::parse("1..2"), ParseError);
    CHECK_THROWS_AS(Word::parse("1.2."), ParseError);
    CHECK_THROWS_AS(Word::parse("1.0"), ParseError);
    CHECK(Word::parse(Word{{1, 2, 13, 1}}.str()) == Word{{1, 2, 13, 1}});
}

TEST_CASE("reversal") {
    CHECK(reversal(Word::parse("")) == Word::parse(""));
    CHECK(reversal(Word::parse("1213")) == Word::parse("3121"));
    CHECK(reversal(Word::parse("1213121")) == Word::parse("1213121"));
}

TEST_CASE("is_palindrome") {
    CHECK(is_palindrome(Word::parse("")));
    CHECK(is_palindrome(Word::parse("121")));
    CHECK_FALSE(is_palindrome(Word::parse("12")));
}

TEST_CASE("palindromic closure examples") {
    CHECK(palindromic_closure(Word::parse("1213")) == Word::parse("1213121"));
    CHECK(palindromic_closure(Word::parse("121")) == Word::parse("121"));
    CHECK(palindromic_closure(Word::parse("12")) == Word::parse("121"));
    CHECK(palindromic_closure(Word::parse("")) == Word::parse(""));
}

TEST_CASE("palindromic closure is the shortest palindromic extension") {
    // Exhaustive over <= 3 letters up to length 12, against the brute-force
    // enumeration of palindromes with the given prefix.
    for (std::size_t len = 0; len <= 12; ++len) {
        std::vector<Letter> cursor(len, 1);
        do {
            Word w{cursor};
            Word closed = palindromic_closure(w);
            CHECK(closed == oracle::shortest_palindrome_with_prefix(w));
            REQUIRE(is_palindrome(closed));
            REQUIRE(closed.subword(0, w.size()) == w);
            REQUIRE(closed.size() ==
                    2 * w.size() - oracle::longest_palindromic_suffix_by_scan(w));
        } while (oracle::next_word(cursor, 3));
    }
}

TEST_CASE("palindromic closure respects the word cap") {
    CHECK_THROWS_AS(palindromic_closure(Word::parse("12"), 2), ResourceLimitError);
}

TEST_CASE("parikh") {
    ParikhVector expected{{1, 4}, {2, 2}, {3, 1}};
    CHECK(parikh(Word::parse("1213121")) == expected);
    CHECK(parikh(Word::parse("")).empty());
    CHECK(parikh(Word::parse("111")) == ParikhVector{{1, 3}});
}

TEST_CASE("reversal involution and parikh invariance") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> letters(rng() % 20);
        for (auto& a : letters) a = 1 + rng() % 4;
        Word w{letters};
        CHECK(reversal(reversal(w)) == w);
        CHECK(parikh(reversal(w)) == parikh(w));
    }
}

TEST_CASE("first occurrence renaming") {
    Word w = Word::parse("31332");
    auto renaming = first_occurrence_renaming(w);
    CHECK(apply_renaming(w, renaming) == Word::parse("12113"));
}
