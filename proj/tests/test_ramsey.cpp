#include "support.hpp"

#include "lwd/codecs.hpp"
#include "lwd/coloring.hpp"
#include "lwd/net.hpp"
#include "lwd/ramsey.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <memory>

using namespace lwd;
using namespace lwd::test;

namespace {

const Codec kTernary = Codec::integer(MixedRadix(SequenceRule::constant(3)));

// Integer value of a constant one-sided word in radix 3, alternating signs.
BigInt ternary_value(const std::vector<Entry>& es) {
    BigInt z = 0;
    for (const Entry& e : es) {
        BigInt place = 1;
        for (Position s = 1; s < e.pos; ++s) place *= 3;
        z += (e.pos % 2 == 1 ? 1 : -1) * BigInt(e.letter) * place;
    }
    return z;
}

int parity_color(const std::vector<Entry>& es) {
    const BigInt z = ternary_value(es);
    return static_cast<int>(((z % 2) + 2) % 2) + 1;
}

std::vector<Entry> fill(const std::vector<Entry>& es, Letter p) {
    std::vector<Entry> out = es;
    for (Entry& e : out)
        if (e.letter == V) e.letter = p;
    return out;
}

std::vector<Entry> join(std::vector<Entry> a, const std::vector<Entry>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

// Every variable one-sided word on positions lo..hi with letters {V, 1, 2}.
void each_variable_word(Position lo, Position hi, const std::function<void(const std::vector<Entry>&)>& visit) {
    std::vector<Entry> cur;
    std::function<void(Position)> rec = [&](Position n) {
        if (n > hi) {
            if (std::any_of(cur.begin(), cur.end(), [](const Entry& e) { return e.letter == V; })) visit(cur);
            return;
        }
        rec(n + 1);
        for (Letter l : {V, Letter{1}, Letter{2}}) {
            cur.push_back({n, l});
            rec(n + 1);
            cur.pop_back();
        }
    };
    rec(lo);
}

}  // namespace

TEST_CASE("coloring from net: least covering ball") {
    auto circle = std::make_shared<const CircleSpace>(Precision::exact);
    const Net frac([](const Word& w) { return Point(decode_rational(w).frac()); }, "frac");

    const Coloring one = coloring_from_net(frac, circle, {{Point(Rational(0)), 1.0}});
    CHECK(one(w2({{-2, 1}})) == 1);
    CHECK(one(w2({{-1, 1}, {3, 2}})) == 1);

    const Coloring halves = coloring_from_net(frac, circle, {{Point(Rational(1, 4)), 0.25}, {Point(Rational(3, 4)), 0.25}});
    CHECK(halves(w2({{-2, 1}})) == 1);           // 1/6
    CHECK(halves(w2({{-2, 2}, {-1, 1}})) == 2);  // -1/6 -> 5/6
    CHECK(halves(w2({{-3, 1}})) == 2);           // -1/24 -> 23/24
    CHECK(halves(w2({{-1, 1}})) == 1);           // 1/2 lies in both balls

    const Coloring gap = coloring_from_net(frac, circle, {{Point(Rational(1, 4)), 0.1}});
    CHECK(error_of([&] { gap(w2({{-1, 1}})); }) == Errc::uncovered_value);
}

TEST_CASE("substitution search") {
    const DominationVector k2 = DominationVector::two_sided(SequenceRule::constant(2));

    SUBCASE("constant coloring takes the first candidate") {
        SearchBudget b;
        b.window = 2;
        const auto r = search_monochromatic_substitutions(Coloring::constant(), k2, b);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.witness->word == window_variable_words(k2, 2).front());
        CHECK(r.witness->instances.size() == 4);
        CHECK(r.examined == 1);
    }

    SUBCASE("ternary parity matches an independent scan") {
        const DominationVector& k = kTernary.domination();
        SearchBudget b;
        b.window = 3;
        const auto r = search_monochromatic_substitutions(Coloring::residue(kTernary, 2), k, b);
        REQUIRE(r.status == SearchStatus::found);

        // oracle: least variable word in (max position, variable count, entries) order
        std::vector<std::vector<Entry>> hits;
        each_variable_word(1, 3, [&](const std::vector<Entry>& es) {
            if (parity_color(fill(es, 1)) == parity_color(fill(es, 2))) hits.push_back(es);
        });
        auto key = [](const std::vector<Entry>& es) {
            const auto vars = std::count_if(es.begin(), es.end(), [](const Entry& e) { return e.letter == V; });
            return std::make_tuple(es.back().pos, vars, es);
        };
        std::sort(hits.begin(), hits.end(), [&](const auto& a, const auto& b2) { return key(a) < key(b2); });
        REQUIRE(!hits.empty());
        CHECK(r.witness->word.entries() == hits.front());
        CHECK(r.witness->word == w1({{1, V}, {2, V}}));
        CHECK(r.witness->color == 1);
        for (const auto& [sub, w] : r.witness->instances) CHECK(parity_color(w.entries()) == 1);
    }

    SUBCASE("distinct colors on a one-position window exhaust") {
        std::map<Word, int> t;
        int c = 1;
        for (Letter q = 1; q <= 2; ++q)
            for (Letter p = 1; p <= 2; ++p) t[w2({{-1, q}, {1, p}})] = c++;
        SearchBudget b;
        b.window = 1;
        const auto r = search_monochromatic_substitutions(Coloring::table(4, t), k2, b);
        CHECK(r.status == SearchStatus::exhausted);
        CHECK(!r.witness);
        CHECK(!r.budget_hit);
    }
}

TEST_CASE("extraction search") {
    const DominationVector& k = kTernary.domination();
    const WordSequence base = diagonal_sequence(k, 8);

    SUBCASE("constant coloring returns the base prefix") {
        SearchBudget b;
        b.window = 3;
        const auto r = search_monochromatic_extraction(Coloring::constant(), base, 2, b);
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.witness->prefix == base.prefix(2));
        CHECK(bool(is_extraction(r.witness->prefix, base, 2)));
    }

    SUBCASE("parity agrees with brute force over the same window") {
        const Position span = 4;
        SearchBudget b;
        b.window = span;
        b.max_depth = 2;
        const Coloring col = Coloring::residue(kTernary, 2);
        for (int target : {1, 2}) {
            bool oracle = false;
            each_variable_word(1, span, [&](const std::vector<Entry>& u1) {
                if (oracle) return;
                const Position lo = u1.back().pos + 1;
                each_variable_word(lo, std::min<Position>(lo + span - 1, 8), [&](const std::vector<Entry>& u2) {
                    if (oracle) return;
                    bool ok = true;
                    for (Letter p = 1; p <= 2 && ok; ++p) {
                        ok = parity_color(fill(u1, p)) == target && parity_color(fill(u2, p)) == target;
                        for (Letter p2 = 1; p2 <= 2 && ok; ++p2)
                            ok = parity_color(join(fill(u1, p), fill(u2, p2))) == target;
                    }
                    oracle = ok;
                });
            });
            const auto r = search_monochromatic_extraction(col, base, 2, b, target);
            CHECK(!r.budget_hit);
            CHECK((r.status == SearchStatus::found) == oracle);
            if (r.witness) {
                CHECK(r.witness->color == target);
                CHECK(bool(is_extraction(r.witness->prefix, base, 2)));
                CHECK(verify_monochromatic(col, r.witness->prefix, 2, target));
            }
        }
    }

    SUBCASE("more terms than the base has") {
        SearchBudget b;
        b.max_depth = 10;
        const auto r = search_monochromatic_extraction(Coloring::constant(), base.prefix(3), 4, b);
        CHECK(r.status == SearchStatus::exhausted);
        b.max_depth = 2;
        CHECK(error_of([&] { search_monochromatic_extraction(Coloring::constant(), base, 3, b); }) ==
              Errc::invalid_argument);
    }

    SUBCASE("deterministic") {
        SearchBudget b;
        b.window = 4;
        b.seed = 11;
        const Coloring col = Coloring::residue(kTernary, 2);
        const auto r1 = search_monochromatic_extraction(col, base, 2, b);
        const auto r2 = search_monochromatic_extraction(col, base, 2, b);
        CHECK(r1.status == r2.status);
        CHECK(r1.examined == r2.examined);
        if (r1.witness && r2.witness) {
            CHECK(r1.witness->prefix == r2.witness->prefix);
            CHECK(r1.witness->plans == r2.witness->plans);
        }
    }
}

TEST_CASE("finite sums: Schur-type threshold") {
    CHECK(hindman_avoids({1, 2, 2}));
    CHECK_FALSE(hindman_avoids({1, 1, 1}));  // 1 + 2 = 3

    const HindmanResult r = hindman_finite_check(12);
    REQUIRE(r.n_star);

    // independent oracle: plain bitmask enumeration
    int oracle = 0;
    for (int n = 1; n <= 12 && oracle == 0; ++n) {
        bool any = false;
        for (unsigned mask = 0; mask < (1u << n) && !any; ++mask) {
            bool ok = true;
            for (int a = 1; a <= n && ok; ++a)
                for (int b = a + 1; a + b <= n && ok; ++b) {
                    const auto bit = [&](int x) { return (mask >> (x - 1)) & 1u; };
                    ok = !(bit(a) == bit(b) && bit(b) == bit(a + b));
                }
            any = ok;
        }
        if (!any) oracle = n;
    }
    CHECK(*r.n_star == oracle);
    CHECK(*r.n_star == 9);
    CHECK(r.avoiding.size() == 8);
    CHECK(hindman_avoids(r.avoiding));
    for (int n = 1; n <= 12; ++n) CHECK((r.avoiding_counts[static_cast<std::size_t>(n - 1)] == 0) == (n >= *r.n_star));
    CHECK(error_of([] { hindman_finite_check(30); }) == Errc::invalid_argument);
}
