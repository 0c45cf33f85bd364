#pragma once

#include "lwd/coloring.hpp"
#include "lwd/system.hpp"

#include <functional>
#include <map>
#include <optional>

namespace lwd {

// Word-indexed family of points x_w.
class Net {
public:
    using Fn = std::function<Point(const Word&)>;

    Net(Fn fn, std::string name, json spec = nullptr) : fn_(std::move(fn)), name_(std::move(name)), spec_(std::move(spec)) {}

    Point operator()(const Word& w) const { return fn_(w); }
    const std::string& name() const { return name_; }
    const json& spec() const { return spec_; }

    // w -> T^w(x)
    static Net orbit(SystemPtr sys, Point x);
    // w -> decode(w) * step on a circle
    static Net decoded(const Codec& codec, std::shared_ptr<const CircleSpace> circle, Point step);
    static Net constant(Point p);
    static Net table(std::map<Word, Point> entries, std::optional<Point> fallback = std::nullopt);
    // w -> 1/min_index(w) on a circle
    static Net index_reciprocal(std::shared_ptr<const CircleSpace> circle);

private:
    Fn fn_;
    std::string name_;
    json spec_;
};

// Closed ball d(center, x) <= radius; an infinite radius covers the space.
struct Ball {
    Point center;
    double radius;
};

bool in_ball(const MetricSpace& space, const Point& x, const Ball& b);

// color(w) = least i with net(w) in balls[i-1]; UncoveredValue otherwise.
Coloring coloring_from_net(const Net& net, SpacePtr space, std::vector<Ball> balls);

}  // namespace lwd
