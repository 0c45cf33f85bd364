#include "support.hpp"

#include "lwd/json_io.hpp"
#include "lwd/sequence.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace lwd;
using namespace lwd::test;

namespace {

const DominationVector kAbs2 = DominationVector::two_sided(SequenceRule::abs());
const DominationVector kAbs1 = DominationVector::one_sided(SequenceRule::abs());

std::vector<Entry> raw(std::initializer_list<std::pair<Position, Letter>> es) {
    std::vector<Entry> v;
    for (auto [p, l] : es) v.push_back({p, l});
    return v;
}

// Random constant two-sided word on positions drawn from [-span, span] \ {0}.
Word random_word(std::mt19937_64& rng, const DominationVector& k, Position span, std::set<Position>& used) {
    std::vector<Entry> es;
    std::uniform_int_distribution<Position> pos(-span, span);
    const int size = 1 + static_cast<int>(rng() % 3);
    for (int tries = 0; static_cast<int>(es.size()) < size && tries < 50; ++tries) {
        const Position p = pos(rng);
        if (p == 0 || used.count(p)) continue;
        used.insert(p);
        es.push_back({p, 1 + static_cast<Letter>(rng() % k.at(p))});
    }
    if (es.empty()) {
        Position p = span + 1;
        while (used.count(p)) ++p;
        used.insert(p);
        es.push_back({p, 1});
    }
    return validate_word(es, k);
}

// Independent plan counter: walks every subset of term indices and multiplies choice counts.
std::uint64_t brute_count(const WordSequence& seq, PlanFilter f, std::size_t max_terms) {
    const std::size_t n = seq.size();
    std::uint64_t total = 0;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i + 1);
        if (idx.size() > max_terms) continue;
        // each picked term: constant choices or VAR
        std::uint64_t all = 1, consts = 1;
        for (auto i : idx) {
            const Word& t = seq.term(i);
            std::uint64_t c = static_cast<std::uint64_t>(seq.domination().at(*t.min_positive()));
            if (seq.kind() == WordKind::two_sided) c *= static_cast<std::uint64_t>(seq.domination().at(*t.max_negative()));
            all *= c + 1;
            consts *= c;
        }
        if (f == PlanFilter::all) total += all;
        else if (f == PlanFilter::constant) total += consts;
        else total += all - consts;
    }
    return total;
}

}  // namespace

TEST_CASE("validate_word classifies and checks bounds") {
    const Word a = validate_word(raw({{1, 1}}), kAbs2);
    CHECK(a.size() == 1);
    CHECK(a.classify() == WordClass::constant);

    const Word b = validate_word(raw({{-2, V}, {1, V}, {3, 2}}), kAbs2);
    CHECK(b.classify() == WordClass::zero_class);
    CHECK(b.is_variable());

    const DominationVector one = DominationVector::two_sided(SequenceRule::constant(1));
    try {
        validate_word(raw({{1, 2}}), one);
        FAIL("expected LetterOutOfBound");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::letter_out_of_bound);
        CHECK(std::string(e.what()).find("(1, 2, 1)") != std::string::npos);
    }
    CHECK(error_of([] { validate_word({}, kAbs2); }) == Errc::empty_domain);
    CHECK(error_of([] { validate_word(raw({{0, 1}}), kAbs2); }) == Errc::zero_position);
    CHECK(error_of([] { validate_word(raw({{-1, 1}}), kAbs1); }) == Errc::kind_mismatch);
    CHECK(validate_word(raw({{2, V}, {1, 1}}), kAbs1).classify() == WordClass::variable);
}

TEST_CASE("domination vectors must be positive and nondecreasing") {
    CHECK(error_of([] { DominationVector::two_sided(SequenceRule::constant(0)); }) == Errc::invalid_domination);
    CHECK(error_of([] { DominationVector::two_sided(SequenceRule::identity()); }) == Errc::invalid_domination);
    CHECK(error_of([] {
              DominationVector::one_sided(SequenceRule::table({{1, 3}, {2, 2}}, SequenceRule::constant(5)));
          }) == Errc::invalid_domination);
    const DominationVector k = DominationVector::two_sided(SequenceRule::affine(2, 1));
    CHECK(k.at(-3) == 7);
    CHECK(error_of([&] { k.at(0); }) == Errc::zero_position);
}

TEST_CASE("concat is a checked disjoint union") {
    CHECK(concat(w2({{1, 1}}), w2({{-1, 1}, {2, 1}})) == w2({{-1, 1}, {1, 1}, {2, 1}}));
    try {
        concat(w2({{1, 1}}), w2({{1, 2}}));
        FAIL("expected DomainOverlap");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::domain_overlap);
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
    const Word a = w2({{-3, 1}}), b = w2({{-1, 1}}), c = w2({{2, 1}});
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(error_of([] { concat(w1({{1, 1}}), w2({{2, 1}})); }) == Errc::kind_mismatch);
    CHECK(concat(w2({{1, 1}}), w2({{2, V}, {-2, V}})).is_variable());
}

TEST_CASE("R1 and R2 relations") {
    CHECK(rel_r1(w2({{1, 1}}), w2({{-1, 1}, {2, 1}})));
    CHECK_FALSE(rel_r1(w2({{1, 1}}), w2({{2, 1}})));
    CHECK(rel_r2(w2({{1, 1}}), w2({{2, 1}})));
    CHECK_FALSE(rel_r2(w2({{2, 1}}), w2({{1, 1}})));
    CHECK_FALSE(rel_r1(w2({{1, 1}}), w2({{-1, 1}, {1, 1}, {2, 1}})));
}

TEST_CASE("substitution") {
    const Word w = w2({{-2, V}, {1, V}, {3, 2}});
    CHECK(substitute(w, Substitution::two(1, 2), kAbs2) == w2({{-2, 2}, {1, 1}, {3, 2}}));
    CHECK(substitute(w, Substitution::var(), kAbs2) == w);
    CHECK(error_of([] { substitute(w2({{-2, V}, {1, V}}), Substitution::two(1, 3), kAbs2); }) ==
          Errc::substitution_out_of_bound);
    CHECK(error_of([] { substitute(w2({{1, V}, {2, 1}}), Substitution::two(1, 1), kAbs2); }) == Errc::not_zero_class);
    CHECK(error_of([] { substitute(w2({{1, 1}}), Substitution::var(), kAbs2); }) == Errc::not_variable);
    CHECK(substitute(w1({{2, V}, {3, V}}), Substitution::one(2), kAbs1) == w1({{2, 2}, {3, 2}}));
    CHECK(error_of([] { substitute(w1({{2, V}}), Substitution::one(3), kAbs1); }) == Errc::substitution_out_of_bound);
}

TEST_CASE("min_index") {
    CHECK(min_index(w2({{-3, 1}, {2, 1}})) == 2);
    CHECK(min_index(w2({{-1, 1}, {5, 1}})) == 1);
    CHECK(min_index(w1({{4, 1}})) == 4);
    CHECK(error_of([] { min_index(w2({{4, 1}})); }) == Errc::one_sided_domain);
}

TEST_CASE("word sequences enforce order and index feasibility") {
    const WordSequence d = diagonal_sequence(kAbs2, 4);
    CHECK(d.term(3) == w2({{-3, V}, {3, V}}));
    CHECK(error_of([] { WordSequence(kAbs2, {w2({{-2, V}, {2, V}}), w2({{-1, V}, {3, V}})}); }) ==
          Errc::invalid_sequence);
    CHECK(error_of([] { WordSequence(kAbs1, {w1({{1, V}}), w1({{1, V}, {2, 1}})}); }) == Errc::invalid_sequence);
    CHECK(error_of([] { WordSequence(kAbs2, {w2({{1, V}, {2, V}})}); }) == Errc::invalid_sequence);
    CHECK(error_of([] { WordSequence(kAbs1, {w1({{1, V}}), w1({{2, 1}})}); }) == Errc::invalid_sequence);
}

TEST_CASE("extracted words") {
    const WordSequence seq = diagonal_sequence(kAbs2, 3);
    CHECK(extracted_word(seq, {{{1, Substitution::var()}}}) == seq.term(1));
    const Word mixed = extracted_word(seq, {{{1, Substitution::two(1, 1)}, {2, Substitution::var()}}});
    CHECK(mixed == concat(substitute(seq.term(1), Substitution::two(1, 1), kAbs2), seq.term(2)));
    CHECK(mixed.is_zero_class());
    // hand evaluation: term1(1,1) = {-1:1, 1:1}, term2(1,2) = {-2:2, 2:1}
    CHECK(extracted_word(seq, {{{1, Substitution::two(1, 1)}, {2, Substitution::two(1, 2)}}}) ==
          w2({{-2, 2}, {-1, 1}, {1, 1}, {2, 1}}));
    CHECK(error_of([&] { extracted_word(seq, {{{4, Substitution::var()}}}); }) == Errc::plan_index_out_of_range);
    CHECK(error_of([&] { extracted_word(seq, {{}}); }) == Errc::empty_plan);
    CHECK(error_of([&] { extracted_word(seq, {{{1, Substitution::two(2, 1)}}}); }) == Errc::substitution_out_of_bound);
}

TEST_CASE("plan enumeration counts") {
    const DominationVector one = DominationVector::two_sided(SequenceRule::constant(1));
    const DominationVector two = DominationVector::two_sided(SequenceRule::constant(2));
    CHECK(enumerate_extracted(diagonal_sequence(one, 1), true, 1).size() == 1);
    CHECK(enumerate_extracted(diagonal_sequence(two, 1), true, 1).size() == 4);

    const DominationVector k = DominationVector::two_sided(SequenceRule::abs_plus_one());
    for (std::size_t len : {2u, 3u, 4u}) {
        const WordSequence seq = diagonal_sequence(k, len);
        for (std::size_t depth = 1; depth <= len; ++depth)
            for (PlanFilter f : {PlanFilter::constant, PlanFilter::variable, PlanFilter::all}) {
                const std::uint64_t expected = brute_count(seq, f, depth);
                CHECK(count_plans(seq, f, depth) == expected);
                std::uint64_t seen = 0;
                for_each_plan(seq, f, depth, [&](const ExtractionPlan&, const Word&) { return ++seen, true; });
                CHECK(seen == expected);
            }
    }
    const WordSequence s1 = diagonal_sequence(DominationVector::one_sided(SequenceRule::abs_plus_one()), 4);
    CHECK(count_plans(s1, PlanFilter::all, 4) == brute_count(s1, PlanFilter::all, 4));
}

TEST_CASE("enumeration is lexicographic, duplicate free and valid") {
    const WordSequence seq = diagonal_sequence(DominationVector::two_sided(SequenceRule::abs()), 3);
    const auto all = enumerate_extracted(seq, false, 3);
    std::set<Word> words;
    for (const auto& [plan, w] : all) {
        CHECK(words.insert(w).second);
        CHECK_NOTHROW(check_bounds(w, seq.domination()));
        CHECK(extracted_word(seq, plan) == w);
        if (plan.is_variable()) CHECK(w.is_zero_class());
    }
    // prefix-first: the single-term plans on term 1 come before anything involving term 2
    CHECK(all.front().first.picks.size() == 1);
    CHECK(all.front().first.picks[0].index == 1);
    CHECK(all.front().first.picks[0].sub == Substitution::two(1, 1));
    CHECK(all[1].first.picks.size() == 2);
    // VAR is the last choice for a pick
    std::size_t last_const = 0, first_var = all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Pick& head = all[i].first.picks.front();
        if (head.index != 1) continue;
        if (head.sub.is_var()) first_var = std::min(first_var, i);
        else last_const = i;
    }
    CHECK(last_const < first_var);
}

TEST_CASE("is_extraction") {
    const WordSequence base = diagonal_sequence(kAbs2, 5);
    for (std::size_t d = 0; d <= 5; ++d) CHECK(is_extraction(base, base, d).ok);

    const WordSequence outside(kAbs2, {w2({{-9, V}, {9, V}})});
    CHECK_FALSE(is_extraction(outside, base, 1).ok);

    const ExtractionPlan p1{{{1, Substitution::two(1, 1)}, {2, Substitution::var()}}};
    const ExtractionPlan p2{{{4, Substitution::var()}, {5, Substitution::two(2, 3)}}};
    const WordSequence cand(kAbs2, {extracted_word(base, p1), extracted_word(base, p2)});
    const auto chk = is_extraction(cand, base, 2);
    REQUIRE(chk.ok);
    CHECK(chk.witnesses == std::vector<ExtractionPlan>{p1, p2});

    // term 4 only half used
    const WordSequence bad(kAbs2, {extracted_word(base, p1), w2({{-3, V}, {3, V}, {4, V}})});
    CHECK_FALSE(is_extraction(bad, base, 2).ok);
}

TEST_CASE("property: concatenation is associative and commutative on disjoint words") {
    std::mt19937_64 rng(11);
    const DominationVector k = DominationVector::two_sided(SequenceRule::abs_plus_one());
    for (int i = 0; i < 500; ++i) {
        std::set<Position> used;
        const Word a = random_word(rng, k, 6, used), b = random_word(rng, k, 6, used), c = random_word(rng, k, 6, used);
        CHECK(concat(a, b) == concat(b, a));
        CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
        CHECK(concat(a, b).size() == a.size() + b.size());
    }
}

TEST_CASE("property: R1 implies disjointness; R2 is a strict order") {
    std::mt19937_64 rng(12);
    const DominationVector k = DominationVector::two_sided(SequenceRule::abs_plus_one());
    for (int i = 0; i < 500; ++i) {
        std::set<Position> ua, ub, uc;
        const Word a = random_word(rng, k, 5, ua), b = random_word(rng, k, 5, ub), c = random_word(rng, k, 5, uc);
        if (rel_r1(a, b)) CHECK(disjoint(a, b));
        CHECK_FALSE(rel_r2(a, a));
        if (rel_r2(a, b)) CHECK_FALSE(rel_r2(b, a));
        if (rel_r2(a, b) && rel_r2(b, c)) CHECK(rel_r2(a, c));
    }
}

TEST_CASE("property: substitution commutes with concatenation") {
    std::mt19937_64 rng(13);
    const DominationVector k = DominationVector::two_sided(SequenceRule::abs_plus_one());
    for (int i = 0; i < 300; ++i) {
        const Position m = 1 + static_cast<Position>(rng() % 3);
        const Word v = w2({{-m, V}, {m, V}});
        const Position lo = -(m + 1 + static_cast<Position>(rng() % 2)), hi = m + 1 + static_cast<Position>(rng() % 3);
        const Word z = validate_word({{lo, V}, {hi, V}, {hi + 1, 1 + static_cast<Letter>(rng() % k.at(hi + 1))}}, k);
        REQUIRE(rel_r1(v, z));
        const Letter p = 1 + static_cast<Letter>(rng() % k.at(m)), q = 1 + static_cast<Letter>(rng() % k.at(-m));
        const Substitution s = Substitution::two(p, q);
        const Word whole = substitute(concat(v, z), s, k);
        CHECK(whole == concat(substitute(v, s, k), substitute(z, s, k)));
        for (const Entry& e : whole) {
            if (e.pos == m || e.pos == hi) CHECK(e.letter == p);
            if (e.pos == -m || e.pos == lo) CHECK(e.letter == q);
        }
    }
}

TEST_CASE("property: extraction is transitive at finite depth") {
    const WordSequence w = diagonal_sequence(kAbs2, 8);
    const WordSequence u(kAbs2, {extracted_word(w, {{{1, Substitution::var()}, {2, Substitution::two(1, 1)}}}),
                                 extracted_word(w, {{{3, Substitution::two(2, 1)}, {4, Substitution::var()}}}),
                                 extracted_word(w, {{{5, Substitution::var()}, {6, Substitution::var()}}}),
                                 extracted_word(w, {{{7, Substitution::var()}, {8, Substitution::two(3, 3)}}})});
    const WordSequence v(kAbs2, {extracted_word(u, {{{1, Substitution::var()}, {2, Substitution::two(1, 1)}}}),
                                 extracted_word(u, {{{3, Substitution::two(1, 2)}, {4, Substitution::var()}}})});
    REQUIRE(is_extraction(u, w, 4).ok);
    REQUIRE(is_extraction(v, u, 2).ok);
    CHECK(is_extraction(v, w, 2).ok);
}

TEST_CASE("canonical JSON round trip") {
    const Word w = w2({{-2, V}, {1, V}, {3, 2}});
    const json j = to_json(w);
    CHECK(canonical(j) == R"({"entries":{"-2":"v","1":"v","3":2},"kind":"two-sided"})");
    CHECK(word_from_json(j) == w);
    CHECK(word_from_json(json::parse(canonical(j)), kAbs2) == w);
    CHECK(domination_from_json(to_json(kAbs2)) == kAbs2);
    const DominationVector t =
        DominationVector::one_sided(SequenceRule::table({{1, 2}, {2, 3}}, SequenceRule::affine(1, 2)));
    CHECK(domination_from_json(json::parse(canonical(to_json(t)))) == t);
    const WordSequence seq = block_sequence(kAbs2, 3, 2, {V, 1});
    CHECK(sequence_from_json(to_json(seq)) == seq);
    const ExtractionPlan p{{{1, Substitution::two(1, 2)}, {3, Substitution::var()}}};
    CHECK(plan_from_json(to_json(p)) == p);
}
