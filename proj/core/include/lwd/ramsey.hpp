#pragma once

#include "lwd/coloring.hpp"
#include "lwd/sequence.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lwd {

struct SearchBudget {
    Position window = 3;                 // positions within +-window; extraction: base terms per candidate term
    std::size_t max_depth = 4;           // upper bound on extraction terms
    std::size_t max_picks = 0;           // picks per candidate term, 0 = unlimited
    std::uint64_t max_candidates = 1'000'000;
    std::uint64_t seed = 0;
};

enum class SearchStatus { found, exhausted };

// Every constant substitution of u over its full legal range, in lexicographic order.
std::vector<std::pair<Substitution, Word>> all_substitutions(const Word& u, const DominationVector& k);

// Variable words (zero-class when two-sided) with all positions in +-window, ordered by
// max |position|, then number of variable positions, then entries.
std::vector<Word> window_variable_words(const DominationVector& k, Position window);

struct SubstitutionWitness {
    Word word;
    int color;
    std::vector<std::pair<Substitution, Word>> instances;
};

struct SubstitutionSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<SubstitutionWitness> witness;
    std::uint64_t examined = 0;
    bool budget_hit = false;
};

SubstitutionSearchResult search_monochromatic_substitutions(const Coloring& col, const DominationVector& k,
                                                            const SearchBudget& budget);

struct ExtractionWitness {
    WordSequence prefix;
    std::vector<ExtractionPlan> plans;
    int color;
    std::uint64_t words_checked;
};

struct ExtractionSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<ExtractionWitness> witness;
    std::uint64_t examined = 0;
    bool budget_hit = false;
};

struct ExtractionCandidate {
    ExtractionPlan plan;
    Word word;
    std::vector<Word> instances;  // substitutions legal for its slot in the prefix
    std::size_t last;             // largest base index used
};

// Candidate terms per (start index, slot), generated on demand and shared across searches
// over the same base and budget window.
class CandidatePool {
public:
    CandidatePool(const WordSequence& base, const SearchBudget& budget);
    const std::vector<ExtractionCandidate>& at(std::size_t start, std::size_t slot);
    const WordSequence& base() const { return base_; }

private:
    WordSequence base_;
    std::size_t span_;
    std::size_t picks_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ExtractionCandidate>> lists_;
};

// Searches an extraction prefix u_1..u_d of `base` (d = terms_wanted) whose constant
// extracted words all share one color (target_color if given).
ExtractionSearchResult search_monochromatic_extraction(const Coloring& col, const WordSequence& base,
                                                       std::size_t terms_wanted, const SearchBudget& budget,
                                                       std::optional<int> target_color = std::nullopt);
ExtractionSearchResult search_monochromatic_extraction(const Coloring& col, CandidatePool& pool,
                                                       std::size_t terms_wanted, const SearchBudget& budget,
                                                       std::optional<int> target_color = std::nullopt);

// Re-evaluates the coloring on every constant extracted word of the prefix (<= depth terms).
bool verify_monochromatic(const Coloring& col, const WordSequence& prefix, std::size_t depth, int color);

struct HindmanResult {
    std::optional<int> n_star;           // least N with no avoiding coloring of {1..N}
    std::vector<int> avoiding;           // colors of 1..N*-1 (1-based colors), first in enumeration order
    std::vector<std::uint64_t> avoiding_counts;  // per N = 1..n_max, colorings with color(1) = 1
    std::uint64_t colorings_checked = 0;
};

// Exhaustive over colorings of {1..N}, N <= n_max: monochromatic {a, b, a+b}, a < b.
HindmanResult hindman_finite_check(int n_max, int colors = 2);
bool hindman_avoids(const std::vector<int>& coloring);

}  // namespace lwd
