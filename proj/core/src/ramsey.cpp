#include "lwd/ramsey.hpp"

#include "lwd/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace lwd {

std::vector<std::pair<Substitution, Word>> all_substitutions(const Word& u, const DominationVector& k) {
    std::vector<std::pair<Substitution, Word>> out;
    if (u.kind() == WordKind::two_sided) {
        if (!u.is_zero_class()) throw Error(Errc::not_zero_class, u.str());
        const Letter P = k.at(*u.min_positive()), Q = k.at(*u.max_negative());
        for (Letter p = 1; p <= P; ++p)
            for (Letter q = 1; q <= Q; ++q) {
                auto s = Substitution::two(p, q);
                out.emplace_back(s, substitute(u, s, k));
            }
    } else {
        const Letter P = k.at(u.min_pos());
        for (Letter p = 1; p <= P; ++p) {
            auto s = Substitution::one(p);
            out.emplace_back(s, substitute(u, s, k));
        }
    }
    return out;
}

namespace {

std::size_t variable_count(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](const Entry& e) { return e.is_variable(); }));
}

// Variable words whose largest |position| is exactly n.
std::vector<Word> layer_words(const DominationVector& k, Position n) {
    std::vector<Position> positions;
    if (k.kind() == WordKind::two_sided)
        for (Position p = -n; p < 0; ++p) positions.push_back(p);
    for (Position p = 1; p <= n; ++p) positions.push_back(p);
    std::vector<Word> out;
    std::vector<Entry> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == positions.size()) {
            if (cur.empty()) return;
            bool edge = false, var = false, neg = false, pos = false;
            for (const Entry& e : cur) {
                edge |= std::llabs(e.pos) == n;
                if (e.is_variable()) {
                    var = true;
                    (e.pos < 0 ? neg : pos) = true;
                }
            }
            if (!edge || !var) return;
            if (k.kind() == WordKind::two_sided && !(neg && pos)) return;
            out.emplace_back(k.kind(), cur);
            return;
        }
        const Position p = positions[i];
        self(self, i + 1);
        cur.push_back({p, kVariable});
        self(self, i + 1);
        cur.pop_back();
        for (Letter v = 1; v <= k.at(p); ++v) {
            cur.push_back({p, v});
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        const auto va = variable_count(a), vb = variable_count(b);
        if (va != vb) return va < vb;
        return a.entries() < b.entries();
    });
    return out;
}

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.kind() == WordKind::two_sided ? 0x9e3779b97f4a7c15ull : 0x7f4a7c159e3779b9ull;
        for (const Entry& e : w) {
            h ^= std::hash<std::int64_t>{}(e.pos) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= std::hash<std::int64_t>{}(e.letter) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace

std::vector<Word> window_variable_words(const DominationVector& k, Position window) {
    std::vector<Word> out;
    for (Position n = 1; n <= window; ++n) {
        auto layer = layer_words(k, n);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

SubstitutionSearchResult search_monochromatic_substitutions(const Coloring& col, const DominationVector& k,
                                                            const SearchBudget& budget) {
    SubstitutionSearchResult res;
    for (Position n = 1; n <= budget.window; ++n) {
        for (const Word& u : layer_words(k, n)) {
            if (res.examined >= budget.max_candidates) {
                res.budget_hit = true;
                return res;
            }
            ++res.examined;
            auto inst = all_substitutions(u, k);
            const int c = col(inst.front().second);
            bool mono = true;
            for (std::size_t i = 1; i < inst.size() && mono; ++i) mono = col(inst[i].second) == c;
            if (!mono) continue;
            for (const auto& [s, w] : inst)
                if (col(w) != c) throw Error(Errc::verification_failure, "witness recheck failed");
            res.status = SearchStatus::found;
            res.witness = SubstitutionWitness{u, c, std::move(inst)};
            return res;
        }
    }
    return res;
}

namespace {

class ExtractionSearch {
public:
    ExtractionSearch(const Coloring& col, CandidatePool& pool, std::size_t wanted, const SearchBudget& budget)
        : col_(col), pool_(pool), base_(pool.base()), wanted_(wanted), budget_(budget) {}

    ExtractionSearchResult run(std::optional<int> target) {
        ExtractionSearchResult res;
        target_ = target;
        fixed_target_ = target.has_value();
        std::vector<Word> words;
        if (dfs(1, 1, words)) {
            std::vector<Word> terms;
            std::vector<ExtractionPlan> plans;
            for (const ExtractionCandidate* c : chosen_) {
                terms.push_back(c->word);
                plans.push_back(c->plan);
            }
            WordSequence prefix(base_.domination(), std::move(terms));
            if (!is_extraction(prefix, base_, prefix.size()) || !verify_monochromatic(col_, prefix, wanted_, *target_))
                throw Error(Errc::verification_failure, "extraction witness recheck failed");
            res.status = SearchStatus::found;
            res.witness = ExtractionWitness{std::move(prefix), std::move(plans), *target_, words_checked_};
        }
        res.examined = examined_;
        res.budget_hit = budget_hit_;
        return res;
    }

private:
    int color(const Word& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        const int c = col_(w);
        cache_.emplace(w, c);
        return c;
    }

    bool dfs(std::size_t term, std::size_t start, const std::vector<Word>& words) {
        if (start > base_.size()) return false;
        for (const ExtractionCandidate& cand : pool_.at(start, term)) {
            if (examined_ >= budget_.max_candidates) {
                budget_hit_ = true;
                return false;
            }
            ++examined_;
            const std::optional<int> saved = target_;
            std::vector<Word> grown = words;
            bool ok = true;
            for (const Word& inst : cand.instances) {
                if (!accept(inst)) {
                    ok = false;
                    break;
                }
                grown.push_back(inst);
                for (const Word& old : words) {
                    Word w = concat(old, inst);
                    if (!accept(w)) {
                        ok = false;
                        break;
                    }
                    grown.push_back(std::move(w));
                }
                if (!ok) break;
            }
            if (ok) {
                chosen_.push_back(&cand);
                if (term == wanted_) {
                    words_checked_ = grown.size();
                    return true;
                }
                if (dfs(term + 1, cand.last + 1, grown)) return true;
                chosen_.pop_back();
                if (budget_hit_) return false;
            }
            if (!fixed_target_) target_ = saved;
        }
        return false;
    }

    bool accept(const Word& w) {
        const int c = color(w);
        if (!target_) target_ = c;
        return c == *target_;
    }

    const Coloring& col_;
    CandidatePool& pool_;
    const WordSequence& base_;
    std::size_t wanted_;
    SearchBudget budget_;
    std::optional<int> target_;
    bool fixed_target_ = false;
    std::uint64_t examined_ = 0;
    std::uint64_t words_checked_ = 0;
    bool budget_hit_ = false;
    std::vector<const ExtractionCandidate*> chosen_;
    std::unordered_map<Word, int, WordHash> cache_;
};

}  // namespace

CandidatePool::CandidatePool(const WordSequence& base, const SearchBudget& budget)
    : base_(base),
      span_(budget.window > 0 ? static_cast<std::size_t>(budget.window) : base.size()),
      picks_(budget.max_picks > 0 ? budget.max_picks : span_) {}

const std::vector<ExtractionCandidate>& CandidatePool::at(std::size_t start, std::size_t slot) {
    auto key = std::make_pair(start, slot);
    auto it = lists_.find(key);
    if (it != lists_.end()) return it->second;
    std::vector<ExtractionCandidate> out;
    if (start <= base_.size()) {
        const std::size_t last = std::min(base_.size(), start + span_ - 1);
        const DominationVector& k = base_.domination();
        const auto n = static_cast<Position>(slot);
        std::set<std::pair<std::size_t, std::vector<Word>>> seen;
        for_each_plan(
            base_, PlanFilter::variable, picks_,
            [&](const ExtractionPlan& plan, const Word& u) {
                std::vector<Word> inst;
                if (base_.kind() == WordKind::two_sided) {
                    for (Letter p = 1; p <= k.at(n); ++p)
                        for (Letter q = 1; q <= k.at(-n); ++q) inst.push_back(substitute(u, Substitution::two(p, q), k));
                } else {
                    for (Letter p = 1; p <= k.at(n); ++p) inst.push_back(substitute(u, Substitution::one(p), k));
                }
                if (seen.emplace(plan.last_index(), inst).second)
                    out.push_back(ExtractionCandidate{plan, u, std::move(inst), plan.last_index()});
                return true;
            },
            start, last);
        // smallest window first, then fewest picks; plan order breaks ties
        std::stable_sort(out.begin(), out.end(), [](const ExtractionCandidate& a, const ExtractionCandidate& b) {
            return std::make_pair(a.last, a.plan.picks.size()) < std::make_pair(b.last, b.plan.picks.size());
        });
    }
    return lists_.emplace(key, std::move(out)).first->second;
}

ExtractionSearchResult search_monochromatic_extraction(const Coloring& col, CandidatePool& pool,
                                                       std::size_t terms_wanted, const SearchBudget& budget,
                                                       std::optional<int> target_color) {
    if (terms_wanted == 0) throw Error(Errc::invalid_argument, "terms_wanted must be positive");
    if (terms_wanted > budget.max_depth)
        throw Error(Errc::invalid_argument, "terms_wanted exceeds budget depth");
    if (terms_wanted > pool.base().size()) return {};
    return ExtractionSearch(col, pool, terms_wanted, budget).run(target_color);
}

ExtractionSearchResult search_monochromatic_extraction(const Coloring& col, const WordSequence& base,
                                                       std::size_t terms_wanted, const SearchBudget& budget,
                                                       std::optional<int> target_color) {
    CandidatePool pool(base, budget);
    return search_monochromatic_extraction(col, pool, terms_wanted, budget, target_color);
}

bool verify_monochromatic(const Coloring& col, const WordSequence& prefix, std::size_t depth, int color) {
    bool ok = true;
    for_each_plan(prefix, PlanFilter::constant, std::min(depth, prefix.size()), [&](const ExtractionPlan&, const Word& w) {
        ok = col(w) == color;
        return ok;
    });
    return ok;
}

bool hindman_avoids(const std::vector<int>& coloring) {
    const int n = static_cast<int>(coloring.size());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; a + b <= n; ++b)
            if (coloring[a - 1] == coloring[b - 1] && coloring[b - 1] == coloring[a + b - 1]) return false;
    return true;
}

HindmanResult hindman_finite_check(int n_max, int colors) {
    if (n_max < 1 || n_max > 24) throw Error(Errc::invalid_argument, "n_max must be in 1..24");
    if (colors < 1 || colors > 4) throw Error(Errc::invalid_argument, "colors must be in 1..4");
    HindmanResult res;
    std::map<int, std::vector<int>> first_avoiding;
    for (int n = 1; n <= n_max; ++n) {
        // color(1) = 1 fixes the color permutation symmetry for two colors
        std::vector<int> c(static_cast<std::size_t>(n), 1);
        std::uint64_t count = 0;
        while (true) {
            ++res.colorings_checked;
            if (hindman_avoids(c)) {
                if (count == 0) first_avoiding[n] = c;
                ++count;
            }
            int i = n - 1;
            while (i >= 1 && c[static_cast<std::size_t>(i)] == colors) c[static_cast<std::size_t>(i--)] = 1;
            if (i < 1) break;
            ++c[static_cast<std::size_t>(i)];
        }
        res.avoiding_counts.push_back(count);
        if (count == 0 && !res.n_star) res.n_star = n;
    }
    if (res.n_star && *res.n_star > 1) res.avoiding = first_avoiding.at(*res.n_star - 1);
    return res;
}

}  // namespace lwd
