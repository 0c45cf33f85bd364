#include "lwd/sequence.hpp"

#include "lwd/error.hpp"

#include <algorithm>
#include <sstream>

namespace lwd {

WordSequence::WordSequence(DominationVector k, std::vector<Word> terms) : k_(std::move(k)), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Word& w = terms_[i];
        const auto m = static_cast<Position>(i + 1);
        check_bounds(w, k_);
        if (!w.is_variable()) throw Error(Errc::invalid_sequence, "term " + std::to_string(m) + " is constant");
        if (order() == Order::r1) {
            if (!w.is_zero_class()) throw Error(Errc::invalid_sequence, "term " + std::to_string(m) + " is not zero-class");
            if (*w.min_positive() < m || *w.max_negative() > -m)
                throw Error(Errc::invalid_sequence, "term " + std::to_string(m) + " violates index feasibility");
            if (i > 0 && !rel_r1(terms_[i - 1], w))
                throw Error(Errc::invalid_sequence, "terms " + std::to_string(m - 1) + "," + std::to_string(m) + " not R1-increasing");
        } else {
            if (w.min_pos() < m)
                throw Error(Errc::invalid_sequence, "term " + std::to_string(m) + " violates index feasibility");
            if (i > 0 && !rel_r2(terms_[i - 1], w))
                throw Error(Errc::invalid_sequence, "terms " + std::to_string(m - 1) + "," + std::to_string(m) + " not R2-increasing");
        }
    }
}

const Word& WordSequence::term(std::size_t index) const {
    if (index < 1 || index > terms_.size())
        throw Error(Errc::plan_index_out_of_range, "term index " + std::to_string(index));
    return terms_[index - 1];
}

WordSequence WordSequence::prefix(std::size_t n) const {
    if (n > terms_.size()) throw Error(Errc::plan_index_out_of_range, "prefix length " + std::to_string(n));
    return WordSequence(k_, std::vector<Word>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
}

WordSequence diagonal_sequence(const DominationVector& k, std::size_t length) {
    return block_sequence(k, length, 1);
}

WordSequence block_sequence(const DominationVector& k, std::size_t length, std::size_t width,
                            const std::vector<Letter>& pattern) {
    if (width == 0) throw Error(Errc::invalid_argument, "block width 0");
    if (!pattern.empty() && pattern.size() != width)
        throw Error(Errc::invalid_argument, "pattern length differs from block width");
    std::vector<Word> terms;
    terms.reserve(length);
    for (std::size_t n = 1; n <= length; ++n) {
        std::vector<Entry> entries;
        for (std::size_t i = 0; i < width; ++i) {
            const auto pos = static_cast<Position>((n - 1) * width + i + 1);
            const Letter v = pattern.empty() ? kVariable : pattern[i];
            entries.push_back({pos, v});
            if (k.kind() == WordKind::two_sided) entries.push_back({-pos, v});
        }
        terms.push_back(validate_word(std::move(entries), k));
    }
    return WordSequence(k, std::move(terms));
}

bool ExtractionPlan::is_variable() const {
    return std::any_of(picks.begin(), picks.end(), [](const Pick& p) { return p.sub.is_var(); });
}

std::string ExtractionPlan::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < picks.size(); ++i) {
        if (i) os << ", ";
        os << '(' << picks[i].index << ',' << picks[i].sub.str() << ')';
    }
    os << ']';
    return os.str();
}

std::vector<Substitution> substitution_choices(const WordSequence& seq, std::size_t index) {
    const auto n = static_cast<Position>(index);
    const DominationVector& k = seq.domination();
    std::vector<Substitution> out;
    if (seq.kind() == WordKind::two_sided) {
        for (Letter p = 1; p <= k.at(n); ++p)
            for (Letter q = 1; q <= k.at(-n); ++q) out.push_back(Substitution::two(p, q));
    } else {
        for (Letter p = 1; p <= k.at(n); ++p) out.push_back(Substitution::one(p));
    }
    return out;
}

namespace {

void check_pick(const WordSequence& seq, const Pick& pick) {
    if (pick.index < 1 || pick.index > seq.size())
        throw Error(Errc::plan_index_out_of_range, "pick index " + std::to_string(pick.index));
    if (pick.sub.is_var()) return;
    const auto n = static_cast<Position>(pick.index);
    const DominationVector& k = seq.domination();
    const bool two = seq.kind() == WordKind::two_sided;
    if (two != (pick.sub.kind() == Substitution::Kind::two))
        throw Error(Errc::kind_mismatch, "substitution arity does not match sequence kind");
    if (pick.sub.p() < 1 || pick.sub.p() > k.at(n) || (two && (pick.sub.q() < 1 || pick.sub.q() > k.at(-n))))
        throw Error(Errc::substitution_out_of_bound, "pick " + std::to_string(pick.index) + " " + pick.sub.str());
}

}  // namespace

Word extracted_word(const WordSequence& seq, const ExtractionPlan& plan) {
    if (plan.picks.empty()) throw Error(Errc::empty_plan, "plan has no picks");
    std::optional<Word> acc;
    std::size_t prev = 0;
    for (const Pick& pick : plan.picks) {
        check_pick(seq, pick);
        if (pick.index <= prev) throw Error(Errc::plan_index_out_of_range, "pick indices not strictly increasing");
        prev = pick.index;
        Word part = substitute(seq.term(pick.index), pick.sub, seq.domination());
        acc = acc ? concat(*acc, part) : std::move(part);
    }
    return *acc;
}

namespace {

struct Walker {
    const WordSequence& seq;
    PlanFilter filter;
    std::size_t max_terms;
    const PlanVisitor& visit;
    std::size_t last;
    std::vector<std::vector<Substitution>> choices;  // per index, constants then VAR
    std::vector<std::vector<Word>> images;           // substituted term per choice
    ExtractionPlan plan;
    bool stopped = false;

    bool wanted(bool variable) const {
        return filter == PlanFilter::all || (filter == PlanFilter::variable) == variable;
    }

    void run(std::size_t start, const std::optional<Word>& acc, std::size_t var_count) {
        for (std::size_t idx = start; idx <= last && !stopped; ++idx) {
            const auto& subs = choices[idx];
            for (std::size_t c = 0; c < subs.size() && !stopped; ++c) {
                const Word& part = images[idx][c];
                Word next = acc ? concat(*acc, part) : part;
                const std::size_t vars = var_count + (subs[c].is_var() ? 1 : 0);
                plan.picks.push_back({idx, subs[c]});
                if (wanted(vars > 0) && !visit(plan, next)) stopped = true;
                if (!stopped && plan.picks.size() < max_terms) run(idx + 1, next, vars);
                plan.picks.pop_back();
            }
        }
    }
};

}  // namespace

void for_each_plan(const WordSequence& seq, PlanFilter filter, std::size_t max_terms, const PlanVisitor& visit,
                   std::size_t first, std::size_t last) {
    if (last == 0 || last > seq.size()) last = seq.size();
    if (first < 1) first = 1;
    if (max_terms == 0 || first > last) return;
    Walker walker{seq, filter, max_terms, visit, last, {}, {}, {}, false};
    walker.choices.resize(last + 1);
    walker.images.resize(last + 1);
    for (std::size_t idx = first; idx <= last; ++idx) {
        auto subs = substitution_choices(seq, idx);
        subs.push_back(Substitution::var());
        for (const Substitution& s : subs) walker.images[idx].push_back(substitute(seq.term(idx), s, seq.domination()));
        walker.choices[idx] = std::move(subs);
    }
    walker.run(first, std::nullopt, 0);
}

std::vector<std::pair<ExtractionPlan, Word>> enumerate_extracted(const WordSequence& seq, bool constant_only,
                                                                 std::size_t max_terms) {
    if (max_terms > seq.size())
        throw Error(Errc::invalid_argument, "max_terms exceeds sequence length");
    std::vector<std::pair<ExtractionPlan, Word>> out;
    for_each_plan(seq, constant_only ? PlanFilter::constant : PlanFilter::all, max_terms,
                  [&](const ExtractionPlan& p, const Word& w) {
                      out.emplace_back(p, w);
                      return true;
                  });
    return out;
}

BigInt count_plans(const WordSequence& seq, PlanFilter filter, std::size_t max_terms, std::size_t first,
                   std::size_t last) {
    if (last == 0 || last > seq.size()) last = seq.size();
    // e[j] = elementary symmetric sums of per-index choice counts.
    auto elementary = [&](bool with_var) {
        std::vector<BigInt> e(max_terms + 1, BigInt(0));
        e[0] = 1;
        for (std::size_t idx = first; idx <= last; ++idx) {
            BigInt c = static_cast<unsigned long>(substitution_choices(seq, idx).size() + (with_var ? 1 : 0));
            for (std::size_t j = max_terms; j >= 1; --j) e[j] += e[j - 1] * c;
        }
        BigInt total = 0;
        for (std::size_t j = 1; j <= max_terms; ++j) total += e[j];
        return total;
    };
    switch (filter) {
    case PlanFilter::constant: return elementary(false);
    case PlanFilter::all: return elementary(true);
    case PlanFilter::variable: return elementary(true) - elementary(false);
    }
    return 0;
}

std::optional<ExtractionPlan> find_plan(const WordSequence& base, const Word& u) {
    if (u.kind() != base.kind()) return std::nullopt;
    const DominationVector& k = base.domination();
    ExtractionPlan plan;
    std::size_t covered = 0;
    for (std::size_t idx = 1; idx <= base.size(); ++idx) {
        const Word& t = base.term(idx);
        if (base.order() == Order::r2 && t.min_pos() > u.max_pos()) break;
        std::size_t hits = 0;
        for (const Entry& e : t)
            if (u.contains(e.pos)) ++hits;
        if (hits == 0) {
            if (base.order() == Order::r1 && t.min_pos() < u.min_pos() && t.max_pos() > u.max_pos()) break;
            continue;
        }
        if (hits != t.size()) return std::nullopt;
        covered += hits;
        bool any_var = false, any_letter = false;
        Letter p = 0, q = 0;
        for (const Entry& e : t) {
            const Letter got = *u.at(e.pos);
            if (!e.is_variable()) {
                if (got != e.letter) return std::nullopt;
                continue;
            }
            if (got == kVariable) {
                any_var = true;
                continue;
            }
            any_letter = true;
            Letter& slot = e.pos > 0 ? p : q;
            if (slot != 0 && slot != got) return std::nullopt;
            slot = got;
        }
        if (any_var && any_letter) return std::nullopt;
        const auto n = static_cast<Position>(idx);
        if (any_var) {
            plan.picks.push_back({idx, Substitution::var()});
        } else if (base.kind() == WordKind::two_sided) {
            if (p < 1 || q < 1 || p > k.at(n) || q > k.at(-n)) return std::nullopt;
            plan.picks.push_back({idx, Substitution::two(p, q)});
        } else {
            if (p < 1 || p > k.at(n)) return std::nullopt;
            plan.picks.push_back({idx, Substitution::one(p)});
        }
    }
    if (plan.picks.empty() || covered != u.size()) return std::nullopt;
    if (extracted_word(base, plan) != u) return std::nullopt;
    return plan;
}

ExtractionCheck is_extraction(const WordSequence& candidate, const WordSequence& base, std::size_t depth) {
    ExtractionCheck out;
    if (candidate.kind() != base.kind() || !(candidate.domination() == base.domination())) return out;
    if (depth > candidate.size()) return out;
    std::size_t prev_last = 0;
    for (std::size_t m = 1; m <= depth; ++m) {
        auto plan = find_plan(base, candidate.term(m));
        if (!plan || !plan->is_variable()) return ExtractionCheck{};
        // terms of an extraction use disjoint, increasing blocks of base indices
        if (plan->picks.front().index <= prev_last) return ExtractionCheck{};
        prev_last = plan->last_index();
        out.witnesses.push_back(std::move(*plan));
    }
    out.ok = true;
    return out;
}

}  // namespace lwd
