#pragma once

#include <stdexcept>
#include <string>

namespace lwd {

enum class Errc {
    empty_domain,
    zero_position,
    letter_out_of_bound,
    position_out_of_domain,
    domain_overlap,
    kind_mismatch,
    not_variable,
    substitution_out_of_bound,
    not_zero_class,
    invalid_sequence,
    plan_index_out_of_range,
    empty_plan,
    one_sided_domain,
    invalid_domination,
    zero_input,
    wrong_domination,
    invalid_argument,
    uncovered_value,
    modulus_unavailable,
    chain_budget_exhausted,
    not_invertible,
    not_commuting,
    missing_table_entry,
    config,
    verification_failure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lwd
