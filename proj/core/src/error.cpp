#include "lwd/error.hpp"

namespace lwd {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::empty_domain: return "EmptyDomain";
    case Errc::zero_position: return "ZeroPosition";
    case Errc::letter_out_of_bound: return "LetterOutOfBound";
    case Errc::position_out_of_domain: return "PositionOutOfDomain";
    case Errc::domain_overlap: return "DomainOverlap";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::not_variable: return "NotVariable";
    case Errc::substitution_out_of_bound: return "SubstitutionOutOfBound";
    case Errc::not_zero_class: return "NotZeroClass";
    case Errc::invalid_sequence: return "InvalidSequence";
    case Errc::plan_index_out_of_range: return "PlanIndexOutOfRange";
    case Errc::empty_plan: return "EmptyPlan";
    case Errc::one_sided_domain: return "OneSidedDomain";
    case Errc::invalid_domination: return "InvalidDomination";
    case Errc::zero_input: return "ZeroInput";
    case Errc::wrong_domination: return "WrongDomination";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::uncovered_value: return "UncoveredValue";
    case Errc::modulus_unavailable: return "ModulusUnavailable";
    case Errc::chain_budget_exhausted: return "ChainBudgetExhausted";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::missing_table_entry: return "MissingTableEntry";
    case Errc::config: return "ConfigError";
    case Errc::verification_failure: return "VerificationFailure";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

}  // namespace lwd
