#include "support.hpp"

#include "lwd/dynamics.hpp"
#include "lwd/semigroup.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace lwd;
using namespace lwd::test;

namespace {

const DominationVector kTwo = DominationVector::two_sided(SequenceRule::constant(2));

Element el(std::int64_t v) { return {Rational(v)}; }

}  // namespace

TEST_CASE("phi sums table entries") {
    const SemigroupTable letters = SemigroupTable::letter_value(Carrier::integers());
    CHECK(semigroup_phi(letters, w2({{1, 1}})) == el(1));
    CHECK(semigroup_phi(letters, w2({{-3, 2}, {1, 1}, {4, 2}})) == el(1));

    // the negative-side letter 1 at -2 reads the signed letter -1
    const SemigroupTable t =
        SemigroupTable::explicit_table(Carrier::integers(), {{{-1, -2}, el(10)}, {{2, 1}, el(300)}, {{1, -2}, el(7)}});
    CHECK(signed_letter(-2, 1) == -1);
    CHECK(semigroup_phi(t, w2({{-2, 1}, {1, 2}})) == el(310));
    CHECK(error_of([&] { semigroup_phi(t, w2({{3, 1}})); }) == Errc::missing_table_entry);

    const Word u = w2({{-2, V}, {1, V}});
    CHECK(semigroup_phi(t, u, Substitution::two(2, 1), kTwo) == el(310));
}

TEST_CASE("carriers") {
    const Carrier z5 = Carrier::cyclic(5);
    CHECK(z5.make(el(7)) == el(2));
    CHECK(z5.add(el(3), el(4)) == el(2));
    CHECK(z5.scale(el(3), 2) == el(1));
    const Carrier v2 = Carrier::vectors(2);
    CHECK(v2.add({Rational(1), Rational(2)}, {Rational(3), Rational(-1)}) == Element{Rational(4), Rational(1)});
    CHECK(error_of([&] { Carrier::integers().make({Rational(1, 2)}); }).has_value());
    CHECK(Carrier::from_json(v2.to_json()) == v2);

    // commutativity and associativity on samples
    std::mt19937_64 rng(8);
    for (const Carrier& c : {Carrier::integers(), Carrier::rationals(), z5, v2}) {
        for (int t = 0; t < 50; ++t) {
            auto draw = [&] {
                Element e;
                for (std::size_t i = 0; i < c.dim(); ++i) e.push_back(Rational(static_cast<std::int64_t>(rng() % 41) - 20));
                return c.make(e);
            };
            const Element a = draw(), b = draw(), d = draw();
            CHECK(c.add(a, b) == c.add(b, a));
            CHECK(c.add(c.add(a, b), d) == c.add(a, c.add(b, d)));
        }
    }
}

TEST_CASE("product form decomposition") {
    const SemigroupTable t = SemigroupTable::product_form(Carrier::integers(), {}, SequenceRule::abs(),
                                                          SequenceRule::identity(), SequenceRule::affine(2, 0));
    const Word w = w2({{-3, V}, {-1, 2}, {2, V}, {5, 1}});
    const Decomposition d = decompose(t, w);
    CHECK(d.a == el(2 * 2 * 1 + 1 * 5));  // q(2) y_1 + p(1) y_5
    CHECK(d.b == el(2));
    CHECK(d.c == el(3));
    for (Letter i = 1; i <= 2; ++i)
        for (Letter j = 1; j <= 2; ++j) {
            const Element s = semigroup_phi(t, w, Substitution::two(i, j), kTwo);
            CHECK(s == el(9 + i * 2 + 2 * j * 3));
        }
    CHECK(SemigroupTable::from_json(t.to_json()).to_json() == t.to_json());
}

TEST_CASE("recurrence in Z/5 through phi") {
    auto z5 = std::make_shared<const CyclicSpace>(5);
    const SemigroupTable t = SemigroupTable::product_form(Carrier::integers(), {}, SequenceRule::abs(),
                                                          SequenceRule::identity(), SequenceRule::identity());
    auto sys = std::make_shared<const SemigroupSystem>(z5, kTwo, t, std::vector<Point>{Point::index(1)});
    const WordSequence base = block_sequence(kTwo, 6, 5);

    SearchBudget b;
    b.window = 3;
    b.max_depth = 2;
    b.max_picks = 2;
    const SemigroupReport rep = semigroup_recurrence(sys, base, Point::index(0), 2, b);
    REQUIRE(rep.recurrence.status == SearchStatus::found);
    CHECK(rep.verified);
    CHECK(rep.recurrence.achieved == 0.0);
    CHECK(rep.worst_return == 0.0);
    REQUIRE(rep.rows.size() == 2);
    for (const SemigroupRow& row : rep.rows) {
        REQUIRE(row.split);
        CHECK(row.substitutions == 4);
    }

    // direct residue evaluation: sum of letter * |position| over every extracted word
    for (const auto& [plan, w] : constant_words(*rep.recurrence.prefix, 2)) {
        BigInt s = 0;
        for (const Entry& e : w) s += BigInt(e.letter) * (e.pos < 0 ? -e.pos : e.pos);
        CHECK(s % 5 == 0);
    }

    std::vector<SemigroupRow> tampered = rep.rows;
    tampered[0].split->a = el(1);
    double worst = 0;
    CHECK_FALSE(verify_semigroup_rows(*sys, *rep.recurrence.prefix, *rep.recurrence.x0, tampered, worst));

    CHECK(error_of([&] {
              SemigroupSystem(z5, kTwo, SemigroupTable::letter_value(Carrier::cyclic(3)), {Point::index(1)});
          }) == Errc::invalid_argument);
}
