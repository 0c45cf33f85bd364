#include "support.hpp"

#include "lwd/codecs.hpp"
#include "lwd/dynamics.hpp"
#include "lwd/net.hpp"
#include "lwd/system.hpp"

#include <doctest.h>

#include <cmath>
#include <memory>

using namespace lwd;
using namespace lwd::test;

namespace {

const DominationVector kTwo = DominationVector::two_sided(SequenceRule::constant(2));
const Codec kFactorialCodec = Codec::integer(MixedRadix(SequenceRule::abs_plus_one()));

auto exact_circle() { return std::make_shared<const CircleSpace>(Precision::exact); }
auto fixed_circle() { return std::make_shared<const CircleSpace>(Precision::fixed); }
auto cyclic(std::int64_t m) { return std::make_shared<const CyclicSpace>(m); }

// x -> x + max dom(w): not a word system.
class MaxPosShift final : public WordSystem {
public:
    MaxPosShift() : WordSystem(cyclic(7), kTwo) {}
    std::string describe() const override { return "max-pos shift"; }
    Point apply(const Word& w, const Point& x) const override {
        return space().add(x, Point::index(((w.max_pos() % 7) + 7) % 7));
    }
};

// x -> -x on words of odd size; invertible, no declared modulus.
class Flip final : public WordSystem {
public:
    explicit Flip(DominationVector k) : WordSystem(cyclic(7), std::move(k)) {}
    std::string describe() const override { return "flip"; }
    Point apply(const Word& w, const Point& x) const override { return w.size() % 2 ? space().negate(x) : x; }
    bool invertible() const override { return true; }
    Point apply_inverse(const Word& w, const Point& x) const override { return apply(w, x); }
};

SearchBudget budget(Position window, std::size_t depth, std::size_t picks) {
    SearchBudget b;
    b.window = window;
    b.max_depth = depth;
    b.max_picks = picks;
    return b;
}

}  // namespace

TEST_CASE("within uses strict comparison and exact zero") {
    CHECK(within(0.0, 0.0));
    CHECK_FALSE(within(1e-300, 0.0));
    CHECK(within(0.09, 0.1));
    CHECK_FALSE(within(0.1, 0.1));
}

TEST_CASE("word law") {
    SUBCASE("exact codec rotation") {
        const CodecRotationSystem sys(exact_circle(), Codec::rational(), Point(Rational(17, 29)));
        const LawReport r = check_system_law(sys, 500, 1);
        CHECK(r.samples == 500);
        CHECK(r.nonzero == 0);
        CHECK(r.max_deviation == 0.0);
    }
    SUBCASE("translation on Z/7") {
        const SingleMapSystem sys(cyclic(7), kTwo, MapSpec::translation(Point::index(1)), SequenceRule::constant(1));
        const LawReport r = check_system_law(sys, 500, 2);
        CHECK(r.nonzero == 0);
        CHECK(r.max_deviation == 0.0);
    }
    SUBCASE("broken system is flagged") {
        const LawReport r = check_system_law(MaxPosShift(), 200, 3);
        CHECK(r.nonzero > 0);
        CHECK(r.max_deviation > 0.0);
        CHECK(r.worst.has_value());
    }
    SUBCASE("fixed-precision rotation stays at rounding level") {
        auto fc = fixed_circle();
        const CodecRotationSystem sys(fc, kFactorialCodec, fc->golden());
        const LawReport r = check_system_law(sys, 300, 4);
        CHECK(r.max_deviation <= 10 * 2.3e-16);
    }
}

TEST_CASE("limit checks") {
    auto circle = exact_circle();
    const WordSequence seq = diagonal_sequence(kTwo, 12);
    const Net recip = Net::index_reciprocal(circle);
    const Point zero(Rational(0));

    CHECK(r_limit_check(Net::constant(zero), *circle, zero, 0.0, 1, seq, 2).holds);
    const LimitReport far = r_limit_check(recip, *circle, zero, 0.1, 11, seq, 2);
    CHECK(far.holds);
    CHECK(far.checked > 0);
    const LimitReport near = r_limit_check(recip, *circle, zero, 0.1, 5, seq, 2);
    CHECK_FALSE(near.holds);
    REQUIRE(near.offender);
    CHECK(min_index(*near.offender) < 10);

    const IpReport c = uniform_ip_check(seq, Net::constant(zero), *circle, zero, 0.0, 1, 2);
    CHECK(c.r_limit.holds);
    CHECK(c.uniform_ip.holds);
    const IpReport bad = uniform_ip_check(seq, recip, *circle, zero, 0.1, 5, 2);
    CHECK_FALSE(bad.r_limit.holds);
    CHECK_FALSE(bad.uniform_ip.holds);
    CHECK(bad.r_limit.offender.has_value());
    CHECK(bad.uniform_ip.offender.has_value());
    CHECK(bad.term_threshold == 5);
    const IpReport good = uniform_ip_check(seq, recip, *circle, zero, 0.1, 11, 2);
    CHECK(good.agree());
    CHECK(good.r_limit.holds);
}

TEST_CASE("convergent extraction") {
    SUBCASE("constant net") {
        const Point p(Rational(1, 3));
        const ConvergentResult r = find_convergent_extraction(Net::constant(p), *exact_circle(),
                                                              diagonal_sequence(kTwo, 6), 3, budget(3, 2, 2));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(*r.x0 == p);
        CHECK(r.final_epsilon == 0.0);
    }
    SUBCASE("decoded rotation by 17/29 lands in a quarter ball") {
        auto circle = exact_circle();
        const Net net = Net::decoded(kFactorialCodec, circle, Point(Rational(17, 29)));
        const WordSequence base = diagonal_sequence(kFactorialCodec.domination(), 12);
        const ConvergentResult r = find_convergent_extraction(net, *circle, base, 2, budget(6, 2, 3));
        REQUIRE(r.status == SearchStatus::found);
        REQUIRE(r.balls.size() == 2);
        CHECK(r.balls.back().radius == 0.25);
        CHECK(bool(is_extraction(*r.prefix, base, 2)));
        for (const auto& [plan, w] : constant_words(*r.prefix, 2)) {
            CHECK(circle->distance(net(w), r.balls.back().center) <= 0.25);
            CHECK(circle->distance(net(w), *r.x0) <= r.final_epsilon);
        }
        const IpReport ip = uniform_ip_check(*r.prefix, net, *circle, *r.x0, r.final_epsilon, 1, 2);
        CHECK(ip.r_limit.holds);
        CHECK(ip.uniform_ip.holds);
    }
    SUBCASE("no monochromatic refinement exhausts") {
        // color by domain size: 1 -> 0, 2 -> 1, 3 -> 1, 4 -> 0 has no a, b, a + b triple within sizes 1..2
        const Net net([](const Word& w) { return Point::index(w.size() == 1 || w.size() == 4 ? 0 : 1); }, "size");
        const DominationVector one = DominationVector::one_sided(SequenceRule::constant(1));
        const ConvergentResult r = find_convergent_extraction(net, *cyclic(2), diagonal_sequence(one, 8), 1, budget(2, 2, 2));
        CHECK(r.status == SearchStatus::exhausted);
        CHECK(r.levels_done == 0);
    }
}

TEST_CASE("recurrent point") {
    SUBCASE("identity") {
        auto sys = std::make_shared<const SingleMapSystem>(exact_circle(), kTwo, MapSpec::identity(), SequenceRule::constant(1));
        const Point x(Rational(2, 7));
        const RecurrenceResult r = find_recurrent_point(sys, diagonal_sequence(kTwo, 6), x, 2, budget(3, 2, 2));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(*r.x0 == x);
        CHECK(r.achieved == 0.0);
    }
    SUBCASE("Z/2 shift returns exactly on even values") {
        auto sys = std::make_shared<const CodecRotationSystem>(cyclic(2), kFactorialCodec, Point::index(1));
        const WordSequence base = diagonal_sequence(kFactorialCodec.domination(), 10);
        const RecurrenceResult r = find_recurrent_point(sys, base, Point::index(0), 2, budget(6, 2, 3));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.achieved == 0.0);
        CHECK(r.return_eps == 0.0);
        CHECK(r.prefix->size() == 2);
        for (const auto& [plan, w] : constant_words(*r.prefix, 2)) CHECK(decode_integer(w, kFactorialCodec.radix()) % 2 == 0);
        const RecurrenceResult again = evaluate_recurrence(*sys, *r.prefix, 2, Point::index(0), *r.x0);
        CHECK(again.achieved == r.achieved);
        CHECK(again.residuals.size() == r.residuals.size());
    }
    SUBCASE("missing modulus") {
        const Flip flip(kTwo);
        const WordSequence seq = diagonal_sequence(kTwo, 3);
        CHECK(error_of([&] { evaluate_recurrence(flip, seq, 2, Point::index(0), Point::index(0)); }) ==
              Errc::modulus_unavailable);
    }
}

TEST_CASE("recurrent sets and the chain construction") {
    const WordSequence seq = diagonal_sequence(kTwo, 8);
    auto identity = std::make_shared<const SingleMapSystem>(exact_circle(), kTwo, MapSpec::identity(), SequenceRule::constant(1));
    const std::vector<Point> A{Point(Rational(1, 5)), Point(Rational(3, 5))};

    SUBCASE("identity") {
        const RecurrentSetResult r = recurrent_set_check(*identity, seq, A, 0.01, 1, budget(3, 2, 2));
        REQUIRE(r.status == SearchStatus::found);
        for (const RecurrentWitness& w : r.witnesses) {
            CHECK(w.x == w.y);
            CHECK(min_index(w.u) > 1);
        }
        const ChainResult c = prop12_chain(*identity, seq, A, 0.01, 1, budget(3, 2, 2));
        CHECK(c.worst == 0.0);
        CHECK(c.j == 1);
    }
    SUBCASE("no exact return for an irrational rotation") {
        auto fc = fixed_circle();
        const CodecRotationSystem rot(fc, kFactorialCodec, fc->golden());
        const WordSequence base = diagonal_sequence(kFactorialCodec.domination(), 6);
        const RecurrentSetResult r = recurrent_set_check(rot, base, {fc->golden()}, 0.0, 1, budget(3, 3, 3));
        CHECK(r.status == SearchStatus::exhausted);
        CHECK(r.failed.has_value());
    }
    SUBCASE("Z/4 shift closes by pigeonhole") {
        const CodecRotationSystem sys(cyclic(4), kFactorialCodec, Point::index(1));
        const WordSequence base = diagonal_sequence(kFactorialCodec.domination(), 10);
        const std::vector<Point> all{Point::index(0), Point::index(1), Point::index(2), Point::index(3)};
        const ChainResult c = prop12_chain(sys, base, all, 0.0, 1, budget(3, 2, 2));
        CHECK(c.j <= 5);
        CHECK(c.worst == 0.0);
        const Word u1 = substitute(c.u, Substitution::one(1), kFactorialCodec.domination());
        CHECK(sys.apply(u1, c.z) == c.z);
    }
    SUBCASE("rotation with tolerance") {
        auto fc = fixed_circle();
        const CodecRotationSystem rot(fc, kFactorialCodec, fc->golden());
        const WordSequence base = diagonal_sequence(kFactorialCodec.domination(), 12);
        std::vector<Point> grid;
        for (int i = 0; i < 64; ++i) grid.push_back(fc->from_real(Rational(i, 64)));
        SearchBudget b = budget(4, 2, 2);
        const ChainResult c = prop12_chain(rot, base, grid, 0.05, 2, b);
        CHECK(c.worst < 0.05);
        for (Letter p = 1; p <= 2; ++p) {
            const Word up = substitute(c.u, Substitution::one(p), kFactorialCodec.domination());
            CHECK(fc->distance(rot.apply(up, c.z), c.z) < 0.05);
        }
    }
}

TEST_CASE("multiple recurrence") {
    auto circle = exact_circle();
    const WordSequence base = diagonal_sequence(kFactorialCodec.domination(), 12);

    SUBCASE("identities") {
        auto id = std::make_shared<const CodecRotationSystem>(circle, kFactorialCodec, Point(Rational(0)));
        const MultipleResult r = multiple_recurrence_search({id, id}, base, Point(Rational(1, 3)), 2, budget(4, 2, 2));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.achieved == 0.0);
    }
    SUBCASE("rotations by 17/29 and 34/29") {
        auto t1 = std::make_shared<const CodecRotationSystem>(circle, kFactorialCodec, Point(Rational(17, 29)));
        auto t2 = std::make_shared<const CodecRotationSystem>(circle, kFactorialCodec, circle->from_real(Rational(34, 29)));
        const std::vector<SystemPtr> sys{t1, t2};
        const MultipleResult r = multiple_recurrence_search(sys, base, Point(Rational(0)), 4, budget(8, 2, 3));
        REQUIRE(r.status == SearchStatus::found);
        CHECK(r.achieved == 0.0);
        const WordSequence& prefix = *r.recurrence.prefix;
        for (double d : diagonal_residuals(sys, prefix, 2, *r.x0)) CHECK(d == 0.0);
        for (const auto& [plan, w] : constant_words(prefix, 2))
            CHECK((decode_integer(w, kFactorialCodec.radix()) % 29) == 0);

        const IntersectionResult all = intersection_check(sys, {*r.x0, INFINITY}, prefix, 2, *r.x0);
        CHECK(all.ok);
        const IntersectionResult small = intersection_check(sys, {*r.x0, 0.1}, prefix, 2, *r.x0);
        CHECK(small.ok);
        for (const auto& [w, p] : small.witnesses) {
            REQUIRE(p);
            for (const SystemPtr& s : sys) CHECK(circle->distance(s->apply(w, *p), *r.x0) <= 0.1);
        }
    }
    SUBCASE("m = 1 reproduces the single search") {
        auto t = std::make_shared<const CodecRotationSystem>(circle, kFactorialCodec, Point(Rational(17, 29)));
        SearchBudget b = budget(6, 2, 3);
        b.seed = 7;
        const MultipleResult m = multiple_recurrence_search({t}, base, Point(Rational(0)), 3, b);
        const RecurrenceResult s = find_recurrent_point(t, base, Point(Rational(0)), 3, b);
        CHECK(m.status == s.status);
        CHECK(m.recurrence.prefix == s.prefix);
        CHECK(m.x0 == s.x0);
        CHECK(m.achieved == s.achieved);
        CHECK(m.candidates == s.candidates);
    }
    SUBCASE("disjoint target") {
        auto z = cyclic(29);
        auto t1 = std::make_shared<const CodecRotationSystem>(z, kFactorialCodec, Point::index(1));
        auto t2 = std::make_shared<const CodecRotationSystem>(z, kFactorialCodec, Point::index(2));
        const IntersectionResult r = intersection_check({t1, t2}, {Point::index(0), 0.0}, base.prefix(2), 1, Point::index(0));
        CHECK_FALSE(r.ok);
    }
    SUBCASE("family checks") {
        auto t = std::make_shared<const CodecRotationSystem>(cyclic(7), kFactorialCodec, Point::index(1));
        auto flip = std::make_shared<const Flip>(kFactorialCodec.domination());
        CHECK(error_of([&] { multiple_recurrence_search({t, flip}, base, Point::index(0), 1, budget(3, 2, 2)); }) ==
              Errc::not_commuting);
        auto dbl = std::make_shared<const SingleMapSystem>(circle, kFactorialCodec.domination(), MapSpec::doubling(),
                                                           SequenceRule::constant(1));
        CHECK(error_of([&] { multiple_recurrence_search({dbl}, base, Point(Rational(0)), 1, budget(3, 2, 2)); }) ==
              Errc::not_invertible);
    }
}
