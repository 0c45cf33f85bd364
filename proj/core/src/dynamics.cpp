#include "lwd/dynamics.hpp"

#include "lwd/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace lwd {

bool within(double d, double eps) { return eps > 0 ? d < eps : d == 0.0; }

namespace {

Letter random_letter(const DominationVector& k, Position n, std::mt19937_64& rng) {
    return 1 + static_cast<Letter>(rng() % static_cast<std::uint64_t>(k.at(n)));
}

// Nonempty random subset of the nonzero positions in [lo, hi].
std::vector<Position> random_subset(Position lo, Position hi, std::mt19937_64& rng) {
    std::vector<Position> all;
    for (Position p = lo; p <= hi; ++p)
        if (p != 0) all.push_back(p);
    if (all.empty()) return all;
    std::vector<Position> out;
    for (Position p : all)
        if (rng() & 1) out.push_back(p);
    if (out.empty()) out.push_back(all[rng() % all.size()]);
    return out;
}

Word random_word(const DominationVector& k, const std::vector<Position>& dom, std::mt19937_64& rng) {
    std::vector<Entry> es;
    for (Position p : dom) es.push_back({p, random_letter(k, p, rng)});
    return Word(k.kind(), std::move(es));
}

}  // namespace

std::pair<Word, Word> random_related_pair(const DominationVector& k, std::mt19937_64& rng, Position window) {
    const auto W = static_cast<std::uint64_t>(window);
    if (k.kind() == WordKind::one_sided) {
        auto d1 = random_subset(1, 1 + static_cast<Position>(rng() % W), rng);
        const Position top = d1.back();
        auto d2 = random_subset(top + 1, top + 1 + static_cast<Position>(rng() % W), rng);
        return {random_word(k, d1, rng), random_word(k, d2, rng)};
    }
    const Position a = 1 + static_cast<Position>(rng() % W), b = 1 + static_cast<Position>(rng() % W);
    auto d1 = random_subset(-a, b, rng);
    const Position lo = d1.front(), hi = d1.back();
    auto below = random_subset(lo - 1 - static_cast<Position>(rng() % W), lo - 1, rng);
    auto above = random_subset(hi + 1, hi + 1 + static_cast<Position>(rng() % W), rng);
    while (below.empty()) below = random_subset(lo - 2, lo - 1, rng);
    while (above.empty()) above = random_subset(hi + 1, hi + 2, rng);
    below.insert(below.end(), above.begin(), above.end());
    return {random_word(k, d1, rng), random_word(k, below, rng)};
}

LawReport check_system_law(const WordSystem& sys, std::size_t samples, std::uint64_t seed, Position window) {
    std::mt19937_64 rng(seed);
    LawReport rep;
    for (std::size_t i = 0; i < samples; ++i) {
        auto [w1, w2] = random_related_pair(sys.domination(), rng, window);
        const Point x = sys.space().sample(rng);
        const double d = sys.space().distance(sys.apply(w1, sys.apply(w2, x)), sys.apply(concat(w1, w2), x));
        ++rep.samples;
        if (d != 0) ++rep.nonzero;
        if (d > rep.max_deviation || (d == rep.max_deviation && !rep.worst)) {
            rep.max_deviation = d;
            rep.worst = std::make_pair(w1, w2);
        }
    }
    return rep;
}

LimitReport r_limit_check(const Net& net, const MetricSpace& space, const Point& x0, double eps, Position n0,
                          const std::vector<Word>& words) {
    LimitReport rep;
    for (const Word& w : words) {
        ++rep.examined;
        if (min_index(w) < n0) continue;
        ++rep.checked;
        const double d = space.distance(net(w), x0);
        if (d > rep.worst) rep.worst = d;
        if (d > eps && rep.holds) {
            rep.holds = false;
            rep.offender = w;
        }
    }
    return rep;
}

std::vector<std::pair<ExtractionPlan, Word>> constant_words(const WordSequence& prefix, std::size_t depth) {
    std::vector<std::pair<ExtractionPlan, Word>> out;
    for_each_plan(prefix, PlanFilter::constant, std::min(depth, prefix.size()), [&](const ExtractionPlan& p, const Word& w) {
        out.emplace_back(p, w);
        return true;
    });
    return out;
}

LimitReport r_limit_check(const Net& net, const MetricSpace& space, const Point& x0, double eps, Position n0,
                          const WordSequence& seq, std::size_t depth) {
    std::vector<Word> words;
    for (auto& [p, w] : constant_words(seq, depth)) words.push_back(std::move(w));
    return r_limit_check(net, space, x0, eps, n0, words);
}

IpReport uniform_ip_check(const WordSequence& seq, const Net& net, const MetricSpace& space, const Point& x0,
                          double eps, Position n0, std::size_t depth) {
    if (depth > seq.size()) throw Error(Errc::invalid_argument, "depth exceeds sequence length");
    IpReport rep;
    rep.r_limit = r_limit_check(net, space, x0, eps, n0, seq, depth);

    std::size_t m0 = seq.size() + 1;
    for (std::size_t m = 1; m <= seq.size(); ++m)
        if (min_index(seq.term(m)) >= n0) {
            m0 = m;
            break;
        }
    rep.term_threshold = m0;

    // y_F over every F in [m0, len], |F| <= depth, and every choice (p_n, q_n), n in F,
    // built by direct entrywise substitution.
    const DominationVector& k = seq.domination();
    const bool two = seq.kind() == WordKind::two_sided;
    LimitReport& ip = rep.uniform_ip;
    std::vector<std::size_t> F;
    std::vector<std::pair<Letter, Letter>> choice;
    auto evaluate = [&] {
        std::vector<Entry> es;
        for (std::size_t i = 0; i < F.size(); ++i)
            for (const Entry& e : seq.term(F[i]))
                es.push_back({e.pos, e.is_variable() ? (e.pos > 0 ? choice[i].first : choice[i].second) : e.letter});
        Word y(seq.kind(), std::move(es));
        ++ip.examined;
        ++ip.checked;
        const double d = space.distance(net(y), x0);
        if (d > ip.worst) ip.worst = d;
        if (d > eps && ip.holds) {
            ip.holds = false;
            ip.offender = y;
        }
    };
    auto choose = [&](auto&& self, std::size_t i) -> void {
        if (i == F.size()) {
            evaluate();
            return;
        }
        const auto n = static_cast<Position>(F[i]);
        const Letter P = k.at(n), Q = two ? k.at(-n) : 1;
        for (Letter p = 1; p <= P; ++p)
            for (Letter q = 1; q <= Q; ++q) {
                choice[i] = {p, q};
                self(self, i + 1);
            }
    };
    auto subsets = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t n = from; n <= seq.size(); ++n) {
            F.push_back(n);
            choice.emplace_back(1, 1);
            choose(choose, 0);
            if (F.size() < depth) self(self, n + 1);
            F.pop_back();
            choice.pop_back();
        }
    };
    if (depth > 0) subsets(subsets, m0);
    return rep;
}

namespace {

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const Entry& e : w) {
            h = (h ^ static_cast<std::size_t>(e.pos)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(e.letter)) * 1099511628211ull;
        }
        return h;
    }
};

std::vector<double> default_schedule(std::size_t levels) {
    std::vector<double> s;
    for (std::size_t j = 1; j <= levels; ++j) s.push_back(std::ldexp(1.0, -static_cast<int>(j)));
    return s;
}

}  // namespace

ConvergentResult find_convergent_extraction(const Net& net, const MetricSpace& space, const WordSequence& base,
                                            std::size_t levels, const SearchBudget& budget,
                                            std::vector<double> schedule) {
    if (levels == 0) throw Error(Errc::invalid_argument, "levels must be positive");
    if (schedule.empty()) schedule = default_schedule(levels);
    if (schedule.size() < levels) throw Error(Errc::invalid_argument, "schedule shorter than levels");
    ConvergentResult res;
    const std::size_t depth = std::min(budget.max_depth, base.size());
    if (depth == 0) return res;

    auto values = std::make_shared<std::unordered_map<Word, Point, WordHash>>();
    auto value = [&net, values](const Word& w) -> const Point& {
        auto it = values->find(w);
        if (it == values->end()) it = values->emplace(w, net(w)).first;
        return it->second;
    };
    CandidatePool pool(base, budget);
    std::vector<Ball> chain;
    for (std::size_t j = 0; j < levels; ++j) {
        const double r = schedule[j];
        bool found = false;
        for (const Point& c : space.epsilon_net(r)) {
            if (!chain.empty() && space.distance(c, chain.back().center) > chain.back().radius + r) continue;
            std::vector<Ball> balls = chain;
            balls.push_back({c, r});
            Coloring col(2, [&space, &value, balls](const Word& w) {
                const Point& p = value(w);
                for (const Ball& b : balls)
                    if (!in_ball(space, p, b)) return 2;
                return 1;
            });
            if (res.candidates >= budget.max_candidates) return res;
            SearchBudget b = budget;
            b.max_depth = depth;
            b.max_candidates = budget.max_candidates - res.candidates;
            auto sr = search_monochromatic_extraction(col, pool, depth, b, 1);
            res.candidates += sr.examined;
            if (sr.status == SearchStatus::found) {
                chain = std::move(balls);
                res.prefix = sr.witness->prefix;
                res.plans = sr.witness->plans;
                found = true;
                break;
            }
            if (sr.budget_hit) return res;
        }
        if (!found) return res;
        res.levels_done = j + 1;
    }

    // x0: the last center or a net value, whichever is closest to all net values
    const auto words = constant_words(*res.prefix, depth);
    std::vector<Point> options{chain.back().center};
    for (const auto& [p, w] : words) {
        const Point& v = value(w);
        if (std::find(options.begin(), options.end(), v) == options.end()) options.push_back(v);
        if (options.size() > 64) break;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const Point& o : options) {
        double worst = 0;
        for (const auto& [p, w] : words) worst = std::max(worst, space.distance(value(w), o));
        if (worst < best) {
            best = worst;
            res.x0 = o;
        }
    }
    res.final_epsilon = best;
    res.balls = chain;
    for (const Ball& b : chain) {
        double worst = 0;
        for (const auto& [p, w] : words) {
            const double d = space.distance(value(w), b.center);
            if (d > b.radius) throw Error(Errc::verification_failure, "extracted word outside level ball");
            worst = std::max(worst, d);
        }
        res.achieved.push_back(worst);
    }
    res.status = SearchStatus::found;
    return res;
}

IntersectionResult intersection_check(const std::vector<SystemPtr>& systems, const Ball& U, const WordSequence& prefix,
                                      std::size_t depth, const Point& x0) {
    if (systems.empty()) throw Error(Errc::invalid_argument, "no systems");
    const MetricSpace& space = systems.front()->space();
    IntersectionResult res;
    std::vector<Point> extra;
    if (!std::isinf(U.radius) && U.radius > 0) {
        try {
            extra = space.epsilon_net(U.radius / 2);
        } catch (const Error&) {
            extra.clear();
        }
        if (extra.size() > 4096) extra.clear();
    }
    for (const auto& [plan, w] : constant_words(prefix, depth)) {
        std::vector<Point> cands{U.center, x0};
        for (const auto& s : systems)
            if (s->invertible()) cands.push_back(s->apply_inverse(w, U.center));
        cands.insert(cands.end(), extra.begin(), extra.end());
        std::optional<Point> hit;
        for (const Point& p : cands) {
            bool ok = true;
            for (const auto& s : systems)
                if (!in_ball(space, s->apply(w, p), U)) {
                    ok = false;
                    break;
                }
            if (ok) {
                hit = p;
                break;
            }
        }
        if (!hit) res.ok = false;
        res.witnesses.emplace_back(w, hit);
    }
    return res;
}

}  // namespace lwd
