#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "epiword/balance.hpp"
#include "epiword/directive.hpp"
#include "epiword/periodic_word.hpp"

namespace epiword {

/// Classification of an infinite directive into the balanced families.
///
/// After renaming letters by first occurrence to 1, 2, 3, ..., the balanced
/// standard episturmian words over at least three letters are exactly those
/// directed by
///   family A:  1^n 2 3 ... (k-1) (k)^w           n >= 1, k >= 3
///   family B:  1 2 ... (k-1) 1 k ... (k+l-1) (k+l)^w   k >= 2, l >= 0
///   family C:  1 2 3 ... k (1)^w                 k >= 3
/// Everything else is unbalanced (NotBalanced carries a witness) or, when the
/// bounded witness search over an aperiodic word comes up empty, Unknown.
///
/// Family B with l = 0 is the degenerate tail-only case (e.g. 1231(4)); with
/// k = 2 its pattern coincides with family A at n = 2, and the classifier
/// prefers the A form.
///
/// Directives whose alphabet has fewer than three letters are outside the
/// scope of the family characterization (two-letter Sturmian words can be
/// balanced yet aperiodic). For those, outside_theorem_scope is set and the
/// verdict falls back to semantics: the exact periodic check when the tail is
/// a single letter, the bounded witness search otherwise; `balance` carries
/// the result and the family kind is NotBalanced or Unknown.
struct FamilyClass {
    enum class Kind { FamilyA, FamilyB, FamilyC, NotBalanced, Unknown };

    Kind kind = Kind::Unknown;
    std::size_t n = 0; ///< family A repetition count
    std::size_t k = 0; ///< family parameter k (A: alphabet size)
    std::size_t l = 0; ///< family B parameter l

    bool outside_theorem_scope = false;
    /// Witness for NotBalanced; exact or bounded balance evidence otherwise.
    std::optional<BalanceReport> balance;

    bool is_family() const {
        return kind == Kind::FamilyA || kind == Kind::FamilyB || kind == Kind::FamilyC;
    }
    std::string str() const;
};

struct ClassifyOptions {
    /// Prefix length bound for the witness search over aperiodic words.
    std::size_t prefix_bound = 10'000;
    std::size_t word_cap = kDefaultWordCap;
};

/// Classifies an infinite directive. Throws std::invalid_argument for finite
/// directives (empty tail).
FamilyClass classify(const DirectiveSpec& spec, const ClassifyOptions& options = {});

/// The directive of a family classification, in canonical letters.
DirectiveSpec family_directive(const FamilyClass& fc);

/// Closed-form periodic word of a family classification:
///   A: p (k-1) p ( k p (k-1) p )^w        with p = Pal(1^n 2 ... (k-2))
///   B, l >= 1: p (k+l-1) p ( (k+l) p (k+l-1) p )^w
///                                          with p = Pal(1 2 ... (k-1) 1 k ... (k+l-2))
///   B, l = 0:  x ( k x )^w                 with x = Pal(1 2 ... (k-1) 1)
///   C: ( Pal(1 2 ... k) )^w
/// Equals to_periodic(family_directive(fc)).
EventuallyPeriodicWord family_word(const FamilyClass& fc,
                                   std::size_t word_cap = kDefaultWordCap);

/// Bounded witness search over the word generated by an arbitrary infinite
/// directive: grows a prefix up to options.prefix_bound letters and scans
/// escalating factor lengths. Returns an Unbalanced report with a witness, or
/// an Inconclusive one.
BalanceReport search_unbalance_witness(const DirectiveSpec& spec,
                                       const ClassifyOptions& options = {});

} // namespace epiword
