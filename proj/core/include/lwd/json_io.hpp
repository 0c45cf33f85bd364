#pragma once

#include "lwd/sequence.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace lwd {

using json = nlohmann::json;

json to_json(const SequenceRule& r);
SequenceRule rule_from_json(const json& j);

json to_json(const DominationVector& k);
// A missing "kind" falls back to `default_kind`.
DominationVector domination_from_json(const json& j, WordKind default_kind = WordKind::two_sided);

json to_json(const Word& w);
// Structure only; letter bounds are the caller's business.
Word word_from_json(const json& j, std::optional<WordKind> default_kind = std::nullopt);
Word word_from_json(const json& j, const DominationVector& k);

json to_json(const Substitution& s);
Substitution substitution_from_json(const json& j);
json to_json(const ExtractionPlan& p);
ExtractionPlan plan_from_json(const json& j);

json to_json(const WordSequence& s);
// Accepts rule "diagonal" | "blocks" | "explicit" (the default when "terms" is present).
WordSequence sequence_from_json(const json& j);

std::string canonical(const json& j);
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace lwd
