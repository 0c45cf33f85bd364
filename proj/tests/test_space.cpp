#include "support.hpp"

#include "lwd/space.hpp"

#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

using namespace lwd;
using namespace lwd::test;

namespace {

std::vector<SpacePtr> catalog() {
    auto exact = std::make_shared<const CircleSpace>(Precision::exact);
    auto fixed = std::make_shared<const CircleSpace>(Precision::fixed);
    auto z6 = std::make_shared<const CyclicSpace>(6);
    auto torus = std::make_shared<const ProductSpace>(std::vector<SpacePtr>{fixed, fixed});
    auto mixed = std::make_shared<const ProductSpace>(std::vector<SpacePtr>{exact, z6});
    auto hyper = std::make_shared<const HyperspaceSpace>(exact);
    return {exact, fixed, z6, torus, mixed, hyper};
}

}  // namespace

TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(5);
    for (const SpacePtr& s : catalog()) {
        CAPTURE(s->name());
        for (int t = 0; t < 200; ++t) {
            const Point a = s->sample(rng), b = s->sample(rng), c = s->sample(rng);
            CHECK(s->distance(a, a) == 0.0);
            CHECK(s->distance(a, b) == s->distance(b, a));
            CHECK(s->distance(a, b) >= 0.0);
            CHECK(s->distance(a, c) <= s->distance(a, b) + s->distance(b, c) + 1e-12);
            if (!(a == b)) CHECK(s->distance(a, b) > 0.0);
        }
    }
}

TEST_CASE("epsilon nets cover sampled points") {
    std::mt19937_64 rng(9);
    for (const SpacePtr& s : catalog()) {
        CAPTURE(s->name());
        for (double eps : {0.5, 0.2, 0.1}) {
            const auto net = s->epsilon_net(eps);
            REQUIRE(!net.empty());
            for (int t = 0; t < 100; ++t) {
                const Point x = s->sample(rng);
                double best = INFINITY;
                for (const Point& c : net) best = std::min(best, s->distance(x, c));
                CHECK(best <= eps + 1e-12);
            }
        }
    }
    auto exact = std::make_shared<const CircleSpace>(Precision::exact);
    CHECK(error_of([&] { exact->epsilon_net(0); }) == Errc::invalid_argument);
    CHECK(error_of([&] { HyperspaceSpace(exact).epsilon_net(0.01); }) == Errc::invalid_argument);
}

TEST_CASE("circle arithmetic") {
    const CircleSpace ex(Precision::exact);
    const Point a(Rational(17, 29)), b(Rational(20, 29));
    CHECK(ex.add(a, b) == Point(Rational(8, 29)));
    CHECK(ex.negate(a) == Point(Rational(12, 29)));
    CHECK(ex.distance(a, b) == doctest::Approx(3.0 / 29));
    CHECK(ex.distance(Point(Rational(1, 10)), Point(Rational(9, 10))) == doctest::Approx(0.2));
    CHECK(ex.multiple(a, Rational(2)) == Point(Rational(5, 29)));
    CHECK(error_of([&] { ex.golden(); }) == Errc::invalid_argument);

    const CircleSpace fx(Precision::fixed);
    CHECK(turns_to_double(fx.golden().turns()) == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(1e-15));
    const Point g = fx.golden();
    CHECK(fx.point_from_json(fx.point_to_json(g)) == g);
    CHECK(fx.distance(fx.add(g, fx.negate(g)), fx.zero()) == 0.0);
    CHECK(turns_to_double(fx.from_real(Rational(1, 4)).turns()) == 0.25);
}

TEST_CASE("hyperspace of singletons matches the base") {
    auto base = std::make_shared<const CircleSpace>(Precision::exact);
    const HyperspaceSpace h(base);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const Point a = base->sample(rng), b = base->sample(rng);
        CHECK(h.distance(h.make_set({a}), h.make_set({b})) == base->distance(a, b));
    }
    const Point s = h.make_set({Point(Rational(1, 2)), Point(Rational(0)), Point(Rational(1, 2))});
    CHECK(s.parts().size() == 2);
    CHECK(h.distance(s, h.make_set({Point(Rational(0))})) == doctest::Approx(0.5));
}

TEST_CASE("space json") {
    for (const SpacePtr& s : catalog()) {
        CAPTURE(s->name());
        const SpacePtr back = space_from_json(s->to_json());
        CHECK(back->to_json() == s->to_json());
        std::mt19937_64 rng(1);
        const Point p = s->sample(rng);
        CHECK(back->point_from_json(s->point_to_json(p)) == p);
    }
    CHECK(error_of([] { space_from_json(json{{"kind", "sphere"}}); }) == Errc::config);
    CHECK(error_of([] { CyclicSpace(7).validate(Point::index(7)); }).has_value());
}
