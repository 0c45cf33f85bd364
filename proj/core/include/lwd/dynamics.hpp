#pragma once

#include "lwd/net.hpp"
#include "lwd/ramsey.hpp"
#include "lwd/sequence.hpp"
#include "lwd/system.hpp"

#include <optional>
#include <random>
#include <vector>

namespace lwd {

// Strict comparison d < eps, with eps == 0 meaning equality.
bool within(double d, double eps);

// Random constant word pair w1, w2 with w1 <R1 w2 (two-sided) or w1 <R2 w2 (one-sided).
std::pair<Word, Word> random_related_pair(const DominationVector& k, std::mt19937_64& rng, Position window = 6);

struct LawReport {
    std::size_t samples = 0;
    std::size_t nonzero = 0;
    double max_deviation = 0;
    std::optional<std::pair<Word, Word>> worst;
};

LawReport check_system_law(const WordSystem& sys, std::size_t samples, std::uint64_t seed, Position window = 6);

struct LimitReport {
    bool holds = true;
    std::size_t examined = 0;  // words looked at
    std::size_t checked = 0;   // words past the index threshold
    double worst = 0;
    std::optional<Word> offender;
};

// d(net(w), x0) <= eps for every w with min_index(w) >= n0.
LimitReport r_limit_check(const Net& net, const MetricSpace& space, const Point& x0, double eps, Position n0,
                          const std::vector<Word>& words);
LimitReport r_limit_check(const Net& net, const MetricSpace& space, const Point& x0, double eps, Position n0,
                          const WordSequence& seq, std::size_t depth);

struct IpReport {
    LimitReport r_limit;
    LimitReport uniform_ip;
    std::size_t term_threshold = 0;  // least m with min_index(w_m) >= n0
    bool agree() const { return r_limit.holds == uniform_ip.holds; }
};

// r_limit over extracted words versus the set-indexed enumeration of y_F over all
// substitution choices and all F with min F >= term threshold, |F| <= depth.
IpReport uniform_ip_check(const WordSequence& seq, const Net& net, const MetricSpace& space, const Point& x0, double eps,
                          Position n0, std::size_t depth);

// Constant extracted words of prefix with at most depth terms, in plan order.
std::vector<std::pair<ExtractionPlan, Word>> constant_words(const WordSequence& prefix, std::size_t depth);

struct ConvergentResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<WordSequence> prefix;
    std::vector<ExtractionPlan> plans;
    std::optional<Point> x0;
    std::vector<Ball> balls;           // one per completed level
    std::vector<double> achieved;      // max d(net(w), center_j) per level
    double final_epsilon = 0;          // max d(net(w), x0)
    std::uint64_t candidates = 0;
    std::size_t levels_done = 0;
};

// Level j covers the previous ball with a schedule[j]-net (default 2^-j) and searches an
// extraction of `base` with budget.max_depth terms whose extracted words stay in every ball chosen so far.
ConvergentResult find_convergent_extraction(const Net& net, const MetricSpace& space, const WordSequence& base,
                                            std::size_t levels, const SearchBudget& budget,
                                            std::vector<double> schedule = {});

struct ResidualRow {
    std::size_t depth;
    std::size_t words;
    double orbit;
    double ret;
};

struct RecurrenceResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<WordSequence> prefix;
    std::vector<ExtractionPlan> plans;
    std::optional<Point> x0;
    double achieved = 0;      // max of the two residuals
    double orbit_eps = 0;     // max d(T^w x, x0)
    double return_eps = 0;    // max d(T^w x0, x0)
    double chain_bound = 0;   // max L_w d(T^w1 x, x0) + d(T^(w*w1) x, x0)
    Position n0 = 0;
    std::size_t examined_words = 0;
    std::vector<ResidualRow> residuals;
    std::vector<Ball> balls;
    std::uint64_t candidates = 0;
};

RecurrenceResult find_recurrent_point(SystemPtr sys, const WordSequence& base, const Point& x, std::size_t levels,
                                      const SearchBudget& budget, std::vector<double> schedule = {});

// Recomputes residuals of a prefix and x0 directly; used by search and certificate checks.
RecurrenceResult evaluate_recurrence(const WordSystem& sys, const WordSequence& prefix, std::size_t depth,
                                     const Point& x, const Point& x0);

struct RecurrentWitness {
    Point x;
    Point y;
    Word u;
    ExtractionPlan plan;
    double worst;
};

struct RecurrentSetResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<RecurrentWitness> witnesses;
    std::optional<Point> failed;
    std::uint64_t candidates = 0;
};

// For each x in A: y in A and u in EV(seq) with min_index(u) > m and
// d(T^u(p,q) y, x) < eps for all 1 <= p, q <= m.
RecurrentSetResult recurrent_set_check(const WordSystem& sys, const WordSequence& seq, const std::vector<Point>& A,
                                       double eps, Letter m, const SearchBudget& budget);

struct ChainResult {
    Word u;
    Point z;
    std::vector<Point> chain;
    std::vector<Word> steps;
    std::size_t i = 0;
    std::size_t j = 0;
    double worst = 0;
};

// Builds z_0 = A[0], z_1, ... with T^(u_(r+1)(p,q)) z_(r+1) close to z_r, closes the chain when
// two points are eps/2-close, and returns u = u_(i+1) * ... * u_j. Throws ChainBudgetExhausted.
ChainResult prop12_chain(const WordSystem& sys, const WordSequence& seq, const std::vector<Point>& A, double eps,
                         Letter m, const SearchBudget& budget);

struct MultipleResult {
    SearchStatus status = SearchStatus::exhausted;
    RecurrenceResult recurrence;       // for m = 1, the single-system result; else the product search
    std::optional<Point> x0;
    double achieved = 0;
    std::vector<double> per_system;
    std::optional<Point> quotient_point;  // recurrent point of the quotient systems
    std::uint64_t candidates = 0;
};

// Samples commutativity/invertibility, then recurses on T_i (T_m)^-1 and searches the
// product system from the diagonal.
MultipleResult multiple_recurrence_search(const std::vector<SystemPtr>& systems, const WordSequence& base,
                                          const Point& x, std::size_t levels, const SearchBudget& budget);

// max_i max_w d(T_i^w z, z) over the constant extracted words of prefix.
std::vector<double> diagonal_residuals(const std::vector<SystemPtr>& systems, const WordSequence& prefix,
                                       std::size_t depth, const Point& z);

struct IntersectionResult {
    bool ok = true;
    std::vector<std::pair<Word, std::optional<Point>>> witnesses;
};

IntersectionResult intersection_check(const std::vector<SystemPtr>& systems, const Ball& U, const WordSequence& prefix,
                                      std::size_t depth, const Point& x0);

}  // namespace lwd
