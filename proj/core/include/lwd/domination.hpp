#pragma once

#include "lwd/rule.hpp"

#include <cstdint>

namespace lwd {

enum class WordKind { two_sided, one_sided };

const char* kind_name(WordKind kind) noexcept;

// The bound sequence k: the letter at position n ranges over 1..k(n).
class DominationVector {
public:
    DominationVector(WordKind kind, SequenceRule rule);

    static DominationVector two_sided(SequenceRule rule) { return {WordKind::two_sided, std::move(rule)}; }
    static DominationVector one_sided(SequenceRule rule) { return {WordKind::one_sided, std::move(rule)}; }

    WordKind kind() const { return kind_; }
    const SequenceRule& rule() const { return rule_; }

    // Throws ZeroPosition for 0 and PositionOutOfDomain for n < 0 on one-sided vectors.
    std::int64_t at(std::int64_t n) const;

    friend bool operator==(const DominationVector&, const DominationVector&) = default;

private:
    WordKind kind_;
    SequenceRule rule_;
};

}  // namespace lwd
