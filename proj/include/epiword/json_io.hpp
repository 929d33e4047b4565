#pragma once

#include <json.hpp>

#include "epiword/balance.hpp"
#include "epiword/classify.hpp"
#include "epiword/factors.hpp"
#include "epiword/rational.hpp"
#include "epiword/verifier.hpp"

namespace epiword {

/// Stable machine-readable renderings; the schema is documented in the README
/// and versioned via kSchemaVersion.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const BalanceReport& report);
nlohmann::json to_json(const FamilyClass& fc);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const ComplexityProfile& profile);
nlohmann::json to_json(const std::map<Letter, Rational>& frequencies);

} // namespace epiword
