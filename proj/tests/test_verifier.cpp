#include <doctest.h>

#include <json.hpp>

#include <set>

#include "epiword/json_io.hpp"
#include "epiword/verifier.hpp"
#include "oracles.hpp"

using namespace epiword;

namespace {

std::set<std::string> spec_strings(const std::vector<DirectiveSpec>& specs) {
    std::set<std::string> out;
    for (const auto& s : specs) out.insert(s.str());
    return out;
}

// Independent enumeration: every raw head/tail combination over the full
// alphabet, canonicalized, renamed by first occurrence, and deduplicated.
std::set<std::string> enumeration_oracle(const EnumerationConfig& cfg) {
    std::set<std::string> out;
    for (std::size_t head_len = 0; head_len <= cfg.max_head_len; ++head_len) {
        std::vector<Letter> head(head_len, 1);
        do {
            for (std::size_t tail_len = 1; tail_len <= cfg.max_tail_len; ++tail_len) {
                std::vector<Letter> tail(tail_len, 1);
                do {
                    DirectiveSpec spec{Word{head}, Word{tail}};
                    out.insert(spec.renamed_by_first_occurrence().str());
                } while (oracle::next_word(tail, cfg.max_alphabet));
            }
        } while (oracle::next_word(head, cfg.max_alphabet));
    }
    return out;
}

} // namespace

TEST_CASE("tiny enumerations by hand") {
    EnumerationConfig tiny;
    tiny.max_alphabet = 2;
    tiny.max_head_len = 1;
    tiny.max_tail_len = 1;
    CHECK(spec_strings(enumerate_specs(tiny)) ==
          std::set<std::string>{"(1)", "1(2)"});

    EnumerationConfig pure;
    pure.max_alphabet = 3;
    pure.max_head_len = 0;
    pure.max_tail_len = 3;
    CHECK(spec_strings(enumerate_specs(pure)) ==
          std::set<std::string>{"(1)", "(12)", "(112)", "(121)", "(122)", "(123)"});
}

TEST_CASE("enumeration matches an independent oracle") {
    EnumerationConfig cfg;
    cfg.max_alphabet = 3;
    cfg.max_head_len = 3;
    cfg.max_tail_len = 2;
    auto specs = enumerate_specs(cfg);
    auto strings = spec_strings(specs);
    CHECK(strings.size() == specs.size()); // no duplicates
    CHECK(strings == enumeration_oracle(cfg));

    // Canonical and normalized members only.
    for (const auto& spec : specs) {
        CHECK(spec == spec.renamed_by_first_occurrence());
        CHECK(spec == DirectiveSpec{spec.head(), spec.tail()});
    }

    // Deterministic order.
    auto again = enumerate_specs(cfg);
    CHECK(specs == again);
}

TEST_CASE("theorem families verification on a reduced configuration") {
    EnumerationConfig cfg;
    cfg.max_alphabet = 3;
    cfg.max_head_len = 4;
    cfg.max_tail_len = 2;
    cfg.prefix_bound = 3000;
    VerificationReport report = verify_theorem_families(cfg);
    CHECK(report.passed());
    CHECK(report.unknowns == 0);
    CHECK(report.instances_checked > 0);
    CHECK(report.agreements == report.instances_checked);
}

TEST_CASE("proof shape claims hold on their instance families") {
    EnumerationConfig cfg;
    cfg.max_alphabet = 4;
    cfg.max_head_len = 4;
    for (const auto& id : claim_ids()) {
        if (id == "theorem-families" || id == "periodicity" || id == "fraenkel")
            continue;
        VerificationReport report = verify_unbalance_witnesses(id, cfg);
        INFO(report.str());
        CHECK(report.passed());
        CHECK(report.instances_checked > 0);
        CHECK(report.unknowns == 0);
    }
    CHECK_THROWS_AS(verify_unbalance_witnesses("no-such-claim", cfg),
                    std::invalid_argument);
}

TEST_CASE("periodicity verification on a reduced configuration") {
    EnumerationConfig cfg;
    cfg.max_alphabet = 3;
    cfg.max_head_len = 3;
    cfg.max_tail_len = 2;
    cfg.prefix_bound = 3000;
    VerificationReport report = verify_periodicity(cfg);
    INFO(report.str());
    CHECK(report.passed());
    CHECK(report.instances_checked > 0);
}

TEST_CASE("aperiodicity scan of the Tribonacci prefix") {
    Word prefix =
        generate_prefix(DirectiveSpec::parse("(123)"), 3000).subword(0, 3000);
    CHECK(smallest_period(prefix) > 1000);
    CHECK(smallest_period(to_periodic(DirectiveSpec::parse("123(1)")).period()) == 7);
    CHECK(to_periodic(DirectiveSpec::parse("1(2)")).period().size() == 2);
}

TEST_CASE("fraenkel verification for k = 3") {
    EnumerationConfig cfg;
    cfg.max_head_len = 4;
    cfg.max_tail_len = 2;
    cfg.prefix_bound = 3000;
    VerificationReport report = verify_fraenkel_episturmian(3, 3, cfg);
    INFO(report.str());
    CHECK(report.passed());
    CHECK(report.unknowns == 0);
}

TEST_CASE("report bookkeeping and serialization round trip") {
    EnumerationConfig cfg;
    cfg.max_alphabet = 3;
    cfg.max_head_len = 3;
    cfg.max_tail_len = 2;
    cfg.prefix_bound = 2000;
    VerificationReport report = verify_theorem_families(cfg);
    CHECK(report.agreements + report.disagreements.size() + report.unknowns ==
          report.instances_checked);

    nlohmann::json j = to_json(report);
    auto parsed = nlohmann::json::parse(j.dump());
    CHECK(parsed["claim"] == report.claim);
    CHECK(parsed["passed"] == report.passed());
    CHECK(parsed["instances_checked"] == report.instances_checked);
    CHECK(parsed["agreements"] == report.agreements);
    // Text and structured renderings state the same verdict.
    CHECK(report.str().find(report.passed() ? "PASS" : "FAIL") != std::string::npos);
}
