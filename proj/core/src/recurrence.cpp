#include "lwd/dynamics.hpp"

#include "lwd/error.hpp"

#include <algorithm>
#include <limits>

namespace lwd {

RecurrenceResult evaluate_recurrence(const WordSystem& sys, const WordSequence& prefix, std::size_t depth,
                                     const Point& x, const Point& x0) {
    RecurrenceResult res;
    const MetricSpace& space = sys.space();
    const DominationVector& k = prefix.domination();
    if (prefix.size() == 0) throw Error(Errc::invalid_argument, "empty prefix");
    depth = std::min(depth, prefix.size());
    res.prefix = prefix;
    res.x0 = x0;
    res.n0 = min_index(prefix.term(1));
    res.residuals.resize(depth);
    for (std::size_t d = 0; d < depth; ++d) res.residuals[d] = {d + 1, 0, 0.0, 0.0};
    for (const auto& [plan, w] : constant_words(prefix, depth)) {
        const double orbit = space.distance(sys.apply(w, x), x0);
        const double ret = space.distance(sys.apply(w, x0), x0);
        ResidualRow& row = res.residuals[plan.picks.size() - 1];
        ++row.words;
        row.orbit = std::max(row.orbit, orbit);
        row.ret = std::max(row.ret, ret);
        res.orbit_eps = std::max(res.orbit_eps, orbit);
        res.return_eps = std::max(res.return_eps, ret);
        ++res.examined_words;
        const std::size_t t = plan.last_index();
        if (t < prefix.size()) {
            // d(T^w x0, x0) <= L_w d(x0, T^w1 x) + d(T^(w*w1) x, x0) with w1 from a later term
            const auto subs = substitution_choices(prefix, t + 1);
            const Word w1 = substitute(prefix.term(t + 1), subs.front(), k);
            const auto L = sys.lipschitz(w);
            if (!L) throw Error(Errc::modulus_unavailable, sys.describe());
            const double bound =
                *L * space.distance(sys.apply(w1, x), x0) + space.distance(sys.apply(concat(w, w1), x), x0);
            res.chain_bound = std::max(res.chain_bound, bound);
        }
    }
    res.achieved = std::max(res.orbit_eps, res.return_eps);
    res.status = SearchStatus::found;
    return res;
}

RecurrenceResult find_recurrent_point(SystemPtr sys, const WordSequence& base, const Point& x, std::size_t levels,
                                      const SearchBudget& budget, std::vector<double> schedule) {
    sys->space().validate(x);
    if (!(sys->domination() == base.domination()))
        throw Error(Errc::invalid_argument, "system and base use different dominations");
    const Net net = Net::orbit(sys, x);
    ConvergentResult conv = find_convergent_extraction(net, sys->space(), base, levels, budget, std::move(schedule));
    if (conv.status != SearchStatus::found) {
        RecurrenceResult res;
        res.candidates = conv.candidates;
        return res;
    }
    const std::size_t depth = conv.prefix->size();
    std::vector<Point> options{*conv.x0, conv.balls.back().center};
    for (const auto& [p, w] : constant_words(*conv.prefix, depth)) {
        if (options.size() >= 16) break;
        Point v = net(w);
        if (std::find(options.begin(), options.end(), v) == options.end()) options.push_back(std::move(v));
    }
    std::optional<RecurrenceResult> best;
    for (const Point& o : options) {
        RecurrenceResult r = evaluate_recurrence(*sys, *conv.prefix, depth, x, o);
        if (!best || r.achieved < best->achieved) best = std::move(r);
    }
    best->plans = conv.plans;
    best->balls = conv.balls;
    best->candidates = conv.candidates;
    return *best;
}

namespace {

std::vector<Substitution> small_substitutions(WordKind kind, Letter m) {
    std::vector<Substitution> out;
    for (Letter p = 1; p <= m; ++p) {
        if (kind == WordKind::one_sided) {
            out.push_back(Substitution::one(p));
            continue;
        }
        for (Letter q = 1; q <= m; ++q) out.push_back(Substitution::two(p, q));
    }
    return out;
}

double worst_return(const WordSystem& sys, const Word& u, const std::vector<Substitution>& subs, const Point& from,
                    const Point& to) {
    double worst = 0;
    for (const Substitution& s : subs)
        worst = std::max(worst, sys.space().distance(sys.apply(substitute(u, s, sys.domination()), from), to));
    return worst;
}

}  // namespace

RecurrentSetResult recurrent_set_check(const WordSystem& sys, const WordSequence& seq, const std::vector<Point>& A,
                                       double eps, Letter m, const SearchBudget& budget) {
    if (A.empty()) throw Error(Errc::invalid_argument, "empty point set");
    if (m < 1) throw Error(Errc::invalid_argument, "m must be positive");
    const auto subs = small_substitutions(seq.kind(), m);
    RecurrentSetResult res;
    const std::size_t picks = std::min(budget.max_depth, seq.size());
    for (const Point& x : A) {
        std::optional<RecurrentWitness> hit;
        bool out_of_budget = false;
        for_each_plan(seq, PlanFilter::variable, picks, [&](const ExtractionPlan& plan, const Word& u) {
            if (min_index(u) <= m) return true;
            for (const Point& y : A) {
                if (res.candidates >= budget.max_candidates) {
                    out_of_budget = true;
                    return false;
                }
                ++res.candidates;
                const double worst = worst_return(sys, u, subs, y, x);
                if (within(worst, eps)) {
                    hit = RecurrentWitness{x, y, u, plan, worst};
                    return false;
                }
            }
            return true;
        });
        if (!hit || out_of_budget) {
            res.failed = x;
            return res;
        }
        res.witnesses.push_back(std::move(*hit));
    }
    res.status = SearchStatus::found;
    return res;
}

ChainResult prop12_chain(const WordSystem& sys, const WordSequence& seq, const std::vector<Point>& A, double eps,
                         Letter m, const SearchBudget& budget) {
    if (A.empty()) throw Error(Errc::invalid_argument, "empty point set");
    if (m < 1) throw Error(Errc::invalid_argument, "m must be positive");
    const MetricSpace& space = sys.space();
    const DominationVector& k = seq.domination();
    const auto subs = small_substitutions(seq.kind(), m);
    const std::size_t picks = std::min(budget.max_depth, seq.size());

    std::vector<Point> z{A.front()};
    std::vector<Word> us;
    std::size_t after = 0;
    std::uint64_t candidates = 0;

    auto composite = [&](std::size_t i, std::size_t r) {  // u_i * ... * u_r, 1-based
        Word c = us[i - 1];
        for (std::size_t t = i + 1; t <= r; ++t) c = concat(c, us[t - 1]);
        return c;
    };

    for (std::size_t r = 0; r <= A.size(); ++r) {
        double tol = eps / 2;
        if (eps > 0) {
            for (std::size_t i = 1; i <= r; ++i) {
                const Word c = composite(i, r);
                double err = 0, lip = 0;
                for (const Substitution& s : subs) {
                    const Word cw = substitute(c, s, k);
                    err = std::max(err, space.distance(sys.apply(cw, z[r]), z[i - 1]));
                    const auto L = sys.lipschitz(cw);
                    if (!L) throw Error(Errc::modulus_unavailable, sys.describe());
                    lip = std::max(lip, *L);
                }
                tol = std::min(tol, (eps / 2 - err) / std::max(lip, 1.0));
            }
            if (!(tol > 0)) throw Error(Errc::chain_budget_exhausted, "no slack left in the chain");
        }

        std::optional<std::pair<Point, Word>> next;
        std::size_t next_last = 0;
        bool out_of_budget = false;
        for_each_plan(
            seq, PlanFilter::variable, picks,
            [&](const ExtractionPlan& plan, const Word& u) {
                if (min_index(u) <= m) return true;
                for (const Point& y : A) {
                    if (candidates >= budget.max_candidates) {
                        out_of_budget = true;
                        return false;
                    }
                    ++candidates;
                    if (within(worst_return(sys, u, subs, y, z[r]), tol)) {
                        next = std::make_pair(y, u);
                        next_last = plan.last_index();
                        return false;
                    }
                }
                return true;
            },
            after + 1);
        if (!next || out_of_budget)
            throw Error(Errc::chain_budget_exhausted, "no chain step " + std::to_string(r + 1));
        z.push_back(next->first);
        us.push_back(next->second);
        after = next_last;

        const std::size_t j = r + 1;
        for (std::size_t i = 0; i < j; ++i) {
            if (!within(space.distance(z[i], z[j]), eps / 2)) continue;
            const Word u = composite(i + 1, j);
            ChainResult out{u, z[j], z, us, i, j, 0.0};
            out.worst = worst_return(sys, out.u, subs, out.z, out.z);
            if (!within(out.worst, eps)) throw Error(Errc::verification_failure, "chain result fails direct check");
            return out;
        }
    }
    throw Error(Errc::chain_budget_exhausted, "chain did not close");
}

}  // namespace lwd
