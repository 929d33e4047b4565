#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "epiword/classify.hpp"
#include "epiword/directive.hpp"

namespace epiword {

/// Bounds for exhaustive enumeration of directive specs.
struct EnumerationConfig {
    unsigned max_alphabet = 4;
    std::size_t max_head_len = 6;
    /// Maximum tail period length; 1 restricts to single-letter tails.
    std::size_t max_tail_len = 3;
    /// Prefix length bound for witness searches and aperiodicity scans.
    std::size_t prefix_bound = 10'000;
    std::size_t word_cap = kDefaultWordCap;

    ClassifyOptions classify_options() const {
        return ClassifyOptions{prefix_bound, word_cap};
    }
};

/// One checked instance whose observed behaviour contradicts the claim.
struct Disagreement {
    std::string instance;
    std::string expected;
    std::string observed;
};

/// Outcome of checking one claim over an enumerated set of instances.
/// agreements + |disagreements| + unknowns = instances_checked.
struct VerificationReport {
    std::string claim;
    std::size_t instances_checked = 0;
    std::size_t agreements = 0;
    std::size_t unknowns = 0;
    std::vector<Disagreement> disagreements;
    std::vector<std::string> notes;

    bool passed() const { return disagreements.empty(); }
    std::string str() const;
};

/// All canonical directive specs with |head| <= max_head_len, tail period
/// length in 1..max_tail_len and letters from 1..max_alphabet, one
/// representative per letter-permutation class (letters renamed by first
/// occurrence), in deterministic order.
std::vector<DirectiveSpec> enumerate_specs(const EnumerationConfig& cfg);

/// Claim ids accepted by verify_claim / the CLI.
std::vector<std::string> claim_ids();

/// Dispatch by claim id; throws std::invalid_argument on an unknown id.
VerificationReport verify_claim(const std::string& claim_id,
                                const EnumerationConfig& cfg);

/// Classifier verdicts against semantic ground truth over the enumerated
/// specs with at least three letters (the hypothesis of the family
/// characterization): every family verdict must be confirmed balanced by the
/// exact periodic check, every NotBalanced verdict must carry a witness that
/// revalidates, and family words must match their closed forms. Unknown
/// verdicts are tallied, not failed.
VerificationReport verify_theorem_families(const EnumerationConfig& cfg);

/// Per-claim check that directives matching a proof hypothesis but violating
/// its conclusion generate unbalanced words, including the factor-pair shapes
/// the proof names. Claim ids: "first-repeat-separation", "repeat-not-first",
/// "leading-block", "second-repeat-separation", "no-third-one",
/// "family-b-shape", "family-c-shape".
VerificationReport verify_unbalance_witnesses(const std::string& claim_id,
                                              const EnumerationConfig& cfg);

/// For each k in k_min..k_max: the k-letter family C word is balanced with
/// pairwise distinct frequencies matching 2^(k-i)/(2^k - 1), and among all
/// enumerated specs over exactly k letters, every balanced one with pairwise
/// distinct frequencies generates that word up to letter permutation.
VerificationReport verify_fraenkel_episturmian(unsigned k_min, unsigned k_max,
                                               const EnumerationConfig& cfg);

/// Single-letter-tail specs generate periodic words matching their direct
/// prefixes; other infinite directives generate prefixes with no period up to
/// prefix_bound / 3 (bounded evidence, not proof); family verdicts only occur
/// for single-letter tails.
VerificationReport verify_periodicity(const EnumerationConfig& cfg);

} // namespace epiword
