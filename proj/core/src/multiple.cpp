#include "lwd/dynamics.hpp"

#include "lwd/error.hpp"

#include <algorithm>
#include <limits>

namespace lwd {

namespace {

void check_family(const std::vector<SystemPtr>& systems, std::uint64_t seed) {
    const WordSystem& first = *systems.front();
    const json space = first.space().to_json();
    for (const auto& s : systems) {
        if (s->space().to_json() != space) throw Error(Errc::invalid_argument, "systems act on different spaces");
        if (!(s->domination() == first.domination())) throw Error(Errc::invalid_argument, "systems use different dominations");
        if (!s->invertible()) throw Error(Errc::not_invertible, s->describe());
    }
    const double tol = first.exact() ? 0.0 : 1e-9;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 64; ++i) {
        const Word w = random_related_pair(first.domination(), rng, 4).first;
        const Point x = first.space().sample(rng);
        for (std::size_t a = 0; a < systems.size(); ++a) {
            const double inv = first.space().distance(systems[a]->apply_inverse(w, systems[a]->apply(w, x)), x);
            if (inv > tol) throw Error(Errc::not_invertible, systems[a]->describe());
            for (std::size_t b = a + 1; b < systems.size(); ++b) {
                const Point ab = systems[a]->apply(w, systems[b]->apply(w, x));
                const Point ba = systems[b]->apply(w, systems[a]->apply(w, x));
                if (first.space().distance(ab, ba) > tol)
                    throw Error(Errc::not_commuting, systems[a]->describe() + " vs " + systems[b]->describe());
            }
        }
    }
}

}  // namespace

std::vector<double> diagonal_residuals(const std::vector<SystemPtr>& systems, const WordSequence& prefix,
                                       std::size_t depth, const Point& z) {
    std::vector<double> out(systems.size(), 0.0);
    for (const auto& [plan, w] : constant_words(prefix, depth))
        for (std::size_t i = 0; i < systems.size(); ++i)
            out[i] = std::max(out[i], systems[i]->space().distance(systems[i]->apply(w, z), z));
    return out;
}

MultipleResult multiple_recurrence_search(const std::vector<SystemPtr>& systems, const WordSequence& base,
                                          const Point& x, std::size_t levels, const SearchBudget& budget) {
    if (systems.empty()) throw Error(Errc::invalid_argument, "no systems");
    check_family(systems, budget.seed);
    MultipleResult res;
    if (systems.size() == 1) {
        res.recurrence = find_recurrent_point(systems.front(), base, x, levels, budget);
        res.candidates = res.recurrence.candidates;
        if (res.recurrence.status != SearchStatus::found) return res;
        res.status = SearchStatus::found;
        res.x0 = res.recurrence.x0;
        res.achieved = res.recurrence.achieved;
        res.per_system = {res.recurrence.return_eps};
        return res;
    }

    const SystemPtr& last = systems.back();
    std::vector<SystemPtr> quotients;
    for (std::size_t i = 0; i + 1 < systems.size(); ++i)
        quotients.push_back(std::make_shared<QuotientSystem>(systems[i], last));
    MultipleResult inner = multiple_recurrence_search(quotients, base, x, levels, budget);
    res.candidates = inner.candidates;
    if (inner.status != SearchStatus::found) return res;
    const Point y = *inner.x0;
    res.quotient_point = y;

    auto product = std::make_shared<ProductSystem>(systems);
    const auto& pspace = static_cast<const ProductSpace&>(product->space());
    SearchBudget rest = budget;
    rest.max_candidates = budget.max_candidates > res.candidates ? budget.max_candidates - res.candidates : 0;
    res.recurrence = find_recurrent_point(product, base, pspace.diagonal(y), levels, rest);
    res.candidates += res.recurrence.candidates;
    if (res.recurrence.status != SearchStatus::found) return res;

    const WordSequence& prefix = *res.recurrence.prefix;
    std::vector<Point> options{y};
    for (const Point& c : res.recurrence.x0->parts())
        if (std::find(options.begin(), options.end(), c) == options.end()) options.push_back(c);
    double best = std::numeric_limits<double>::infinity();
    for (const Point& z : options) {
        auto per = diagonal_residuals(systems, prefix, prefix.size(), z);
        const double worst = *std::max_element(per.begin(), per.end());
        if (worst < best) {
            best = worst;
            res.x0 = z;
            res.per_system = std::move(per);
        }
    }
    res.achieved = best;
    res.status = SearchStatus::found;
    return res;
}

}  // namespace lwd
