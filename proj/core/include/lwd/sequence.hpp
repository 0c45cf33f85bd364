#pragma once

#include "lwd/rational.hpp"
#include "lwd/word.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lwd {

enum class Order { r1, r2 };

inline Order order_for(WordKind kind) { return kind == WordKind::two_sided ? Order::r1 : Order::r2; }

// Finite prefix of a strictly R1- (two-sided) or R2-increasing sequence of variable words.
class WordSequence {
public:
    WordSequence(DominationVector k, std::vector<Word> terms);

    const DominationVector& domination() const { return k_; }
    WordKind kind() const { return k_.kind(); }
    Order order() const { return order_for(k_.kind()); }
    const std::vector<Word>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Word& term(std::size_t index) const;  // 1-based
    WordSequence prefix(std::size_t n) const;

    friend bool operator==(const WordSequence&, const WordSequence&) = default;

private:
    DominationVector k_;
    std::vector<Word> terms_;
};

WordSequence diagonal_sequence(const DominationVector& k, std::size_t length);
// Term n occupies positions (n-1)*width+1 .. n*width (mirrored on the negative side).
// pattern[i] is the symbol at offset i; empty pattern means all variable.
WordSequence block_sequence(const DominationVector& k, std::size_t length, std::size_t width,
                            const std::vector<Letter>& pattern = {});

struct Pick {
    std::size_t index;  // 1-based term index
    Substitution sub;

    friend bool operator==(const Pick&, const Pick&) = default;
};

struct ExtractionPlan {
    std::vector<Pick> picks;

    bool is_variable() const;
    bool is_constant() const { return !is_variable(); }
    std::size_t last_index() const { return picks.empty() ? 0 : picks.back().index; }
    std::string str() const;

    friend bool operator==(const ExtractionPlan&, const ExtractionPlan&) = default;
};

// Constant substitutions legal for term `index` in lexicographic order (p, then q).
std::vector<Substitution> substitution_choices(const WordSequence& seq, std::size_t index);

Word extracted_word(const WordSequence& seq, const ExtractionPlan& plan);

enum class PlanFilter { constant, variable, all };

using PlanVisitor = std::function<bool(const ExtractionPlan&, const Word&)>;

// Visits every plan with 1..max_terms picks drawn from term indices [first, last]
// in lexicographic order, prefixes first; VAR is the last choice per pick.
// Returning false from the visitor stops the walk. last = 0 means the whole sequence.
void for_each_plan(const WordSequence& seq, PlanFilter filter, std::size_t max_terms, const PlanVisitor& visit,
                   std::size_t first = 1, std::size_t last = 0);

std::vector<std::pair<ExtractionPlan, Word>> enumerate_extracted(const WordSequence& seq, bool constant_only,
                                                                 std::size_t max_terms);

BigInt count_plans(const WordSequence& seq, PlanFilter filter, std::size_t max_terms, std::size_t first = 1,
                   std::size_t last = 0);

// The unique plan over `base` producing u, if any (constant or variable).
std::optional<ExtractionPlan> find_plan(const WordSequence& base, const Word& u);

struct ExtractionCheck {
    bool ok = false;
    std::vector<ExtractionPlan> witnesses;
    explicit operator bool() const { return ok; }
};

ExtractionCheck is_extraction(const WordSequence& candidate, const WordSequence& base, std::size_t depth);

}  // namespace lwd
