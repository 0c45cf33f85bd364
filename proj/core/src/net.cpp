#include "lwd/net.hpp"

#include "lwd/error.hpp"

#include <cmath>

namespace lwd {

Net Net::orbit(SystemPtr sys, Point x) {
    sys->space().validate(x);
    std::string name = "orbit[" + sys->describe() + "]";
    return Net([sys = std::move(sys), x = std::move(x)](const Word& w) { return sys->apply(w, x); }, std::move(name));
}

Net Net::decoded(const Codec& codec, std::shared_ptr<const CircleSpace> circle, Point step) {
    circle->validate(step);
    return Net([codec, circle, step](const Word& w) { return circle->multiple(step, codec.decode(w)); },
               std::string("decoded[") + codec.name() + "]");
}

Net Net::constant(Point p) {
    return Net([p](const Word&) { return p; }, "constant");
}

Net Net::table(std::map<Word, Point> entries, std::optional<Point> fallback) {
    return Net(
        [entries = std::move(entries), fallback = std::move(fallback)](const Word& w) {
            auto it = entries.find(w);
            if (it != entries.end()) return it->second;
            if (!fallback) throw Error(Errc::missing_table_entry, w.str());
            return *fallback;
        },
        "table");
}

Net Net::index_reciprocal(std::shared_ptr<const CircleSpace> circle) {
    return Net([circle](const Word& w) { return circle->from_real(Rational(BigInt(1), BigInt(min_index(w)))); },
               "index_reciprocal");
}

bool in_ball(const MetricSpace& space, const Point& x, const Ball& b) {
    if (std::isinf(b.radius) && b.radius > 0) return true;
    return space.distance(x, b.center) <= b.radius;
}

Coloring coloring_from_net(const Net& net, SpacePtr space, std::vector<Ball> balls) {
    if (balls.empty()) throw Error(Errc::invalid_argument, "coloring_from_net needs at least one ball");
    const int arity = static_cast<int>(balls.size());
    return Coloring(arity, [net, space = std::move(space), balls = std::move(balls)](const Word& w) {
        const Point x = net(w);
        for (std::size_t i = 0; i < balls.size(); ++i)
            if (in_ball(*space, x, balls[i])) return static_cast<int>(i + 1);
        throw Error(Errc::uncovered_value, w.str());
    });
}

}  // namespace lwd
