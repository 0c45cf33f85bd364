#pragma once

#include "lwd/json_io.hpp"
#include "lwd/rational.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace lwd {

// Circle points in units of 2^-128 turns; wrapping arithmetic is arithmetic mod 1.
using Turns = unsigned __int128;

struct Point {
    std::variant<Rational, Turns, std::int64_t, std::vector<Point>> v;

    Point() : v(std::int64_t{0}) {}
    Point(Rational r) : v(std::move(r)) {}
    static Point turns(Turns t) { Point p; p.v = t; return p; }
    static Point index(std::int64_t i) { Point p; p.v = i; return p; }
    static Point tuple(std::vector<Point> xs) { Point p; p.v = std::move(xs); return p; }

    const Rational& rational() const { return std::get<Rational>(v); }
    Turns turns() const { return std::get<Turns>(v); }
    std::int64_t index() const { return std::get<std::int64_t>(v); }
    const std::vector<Point>& parts() const { return std::get<std::vector<Point>>(v); }

    friend bool operator==(const Point& a, const Point& b) { return a.v == b.v; }
    friend bool operator<(const Point& a, const Point& b) { return a.v < b.v; }
};

double turns_to_double(Turns t);
Turns double_to_turns(double x);
std::string turns_hex(Turns t);
Turns turns_from_hex(const std::string& s);

enum class Precision { exact, fixed };

class MetricSpace {
public:
    virtual ~MetricSpace() = default;

    virtual std::string name() const = 0;
    virtual double distance(const Point& a, const Point& b) const = 0;
    virtual bool exact() const = 0;
    // Finite cover by closed balls of radius eps.
    virtual std::vector<Point> epsilon_net(double eps) const = 0;
    virtual Point sample(std::mt19937_64& rng) const = 0;
    virtual void validate(const Point& p) const = 0;
    virtual json point_to_json(const Point& p) const = 0;
    virtual Point point_from_json(const json& j) const = 0;
    virtual json to_json() const = 0;

    // Abelian group structure with translation-invariant metric, where available.
    virtual bool is_group() const { return false; }
    virtual Point zero() const;
    virtual Point add(const Point& a, const Point& b) const;
    virtual Point negate(const Point& a) const;
    // e * g for an exact rational multiplier (integer multipliers on discrete groups).
    virtual Point multiple(const Point& g, const Rational& e) const;

    Point sub(const Point& a, const Point& b) const { return add(a, negate(b)); }
};

using SpacePtr = std::shared_ptr<const MetricSpace>;

class CircleSpace final : public MetricSpace {
public:
    explicit CircleSpace(Precision precision) : precision_(precision) {}

    Precision precision() const { return precision_; }
    std::string name() const override;
    double distance(const Point& a, const Point& b) const override;
    bool exact() const override { return precision_ == Precision::exact; }
    std::vector<Point> epsilon_net(double eps) const override;
    Point sample(std::mt19937_64& rng) const override;
    void validate(const Point& p) const override;
    json point_to_json(const Point& p) const override;
    Point point_from_json(const json& j) const override;
    json to_json() const override;

    bool is_group() const override { return true; }
    Point zero() const override;
    Point add(const Point& a, const Point& b) const override;
    Point negate(const Point& a) const override;
    Point multiple(const Point& g, const Rational& e) const override;

    // Point at a real number mod 1 given exactly; "golden" is (sqrt5 - 1)/2.
    Point from_real(const Rational& r) const;
    Point golden() const;
    // Doubling map x -> 2^e x.
    Point doubling(const Point& x, const BigInt& e) const;

private:
    Precision precision_;
};

// Z/m with the discrete metric.
class CyclicSpace final : public MetricSpace {
public:
    explicit CyclicSpace(std::int64_t modulus);

    std::int64_t modulus() const { return m_; }
    std::string name() const override;
    double distance(const Point& a, const Point& b) const override;
    bool exact() const override { return true; }
    std::vector<Point> epsilon_net(double eps) const override;
    Point sample(std::mt19937_64& rng) const override;
    void validate(const Point& p) const override;
    json point_to_json(const Point& p) const override;
    Point point_from_json(const json& j) const override;
    json to_json() const override;

    bool is_group() const override { return true; }
    Point zero() const override { return Point::index(0); }
    Point add(const Point& a, const Point& b) const override;
    Point negate(const Point& a) const override;
    Point multiple(const Point& g, const Rational& e) const override;

private:
    std::int64_t m_;
};

// Finite product with the max metric.
class ProductSpace final : public MetricSpace {
public:
    explicit ProductSpace(std::vector<SpacePtr> factors);

    const std::vector<SpacePtr>& factors() const { return factors_; }
    std::string name() const override;
    double distance(const Point& a, const Point& b) const override;
    bool exact() const override;
    std::vector<Point> epsilon_net(double eps) const override;
    Point sample(std::mt19937_64& rng) const override;
    void validate(const Point& p) const override;
    json point_to_json(const Point& p) const override;
    Point point_from_json(const json& j) const override;
    json to_json() const override;

    bool is_group() const override;
    Point zero() const override;
    Point add(const Point& a, const Point& b) const override;
    Point negate(const Point& a) const override;
    Point multiple(const Point& g, const Rational& e) const override;

    Point diagonal(const Point& x) const;

private:
    std::vector<SpacePtr> factors_;
};

// Nonempty finite subsets of a base space under the Hausdorff metric.
class HyperspaceSpace final : public MetricSpace {
public:
    explicit HyperspaceSpace(SpacePtr base) : base_(std::move(base)) {}

    const MetricSpace& base() const { return *base_; }
    std::string name() const override;
    double distance(const Point& a, const Point& b) const override;
    bool exact() const override { return base_->exact(); }
    // Subsets of the base net; the base net is capped at 12 points.
    std::vector<Point> epsilon_net(double eps) const override;
    Point sample(std::mt19937_64& rng) const override;
    void validate(const Point& p) const override;
    json point_to_json(const Point& p) const override;
    Point point_from_json(const json& j) const override;
    json to_json() const override;

    // Sorted, deduplicated set point.
    Point make_set(std::vector<Point> xs) const;

private:
    SpacePtr base_;
};

double hausdorff(const MetricSpace& base, const std::vector<Point>& a, const std::vector<Point>& b);

SpacePtr space_from_json(const json& j);

}  // namespace lwd
