#include "lwd/space.hpp"

#include "lwd/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace lwd {

namespace {

const BigInt& two128() {
    static const BigInt v = BigInt(1) << 128;
    return v;
}

BigInt to_big(Turns t) {
    BigInt hi = static_cast<std::uint64_t>(t >> 64);
    return (hi << 64) | BigInt(static_cast<std::uint64_t>(t));
}

Turns from_big(const BigInt& b) {
    BigInt r = floor_mod(b, two128());
    const auto lo = static_cast<std::uint64_t>(r & BigInt(std::numeric_limits<std::uint64_t>::max()));
    const auto hi = static_cast<std::uint64_t>(r >> 64);
    return (static_cast<Turns>(hi) << 64) | lo;
}

constexpr std::size_t kMaxNet = 1u << 22;

[[noreturn]] void bad_point(const std::string& space, const std::string& why) {
    throw Error(Errc::invalid_argument, space + " point: " + why);
}

}  // namespace

double turns_to_double(Turns t) { return std::ldexp(static_cast<double>(t), -128); }

Turns double_to_turns(double x) {
    x -= std::floor(x);
    return static_cast<Turns>(std::ldexp(x, 128));
}

std::string turns_hex(Turns t) {
    static const char* digits = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 31; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[static_cast<unsigned>(t & 0xf)];
        t >>= 4;
    }
    return "0x" + s;
}

Turns turns_from_hex(const std::string& s) {
    if (s.size() < 3 || s.size() > 34 || s[0] != '0' || s[1] != 'x') throw Error(Errc::invalid_argument, "bad turns '" + s + "'");
    Turns t = 0;
    for (std::size_t i = 2; i < s.size(); ++i) {
        const char c = s[i];
        unsigned d;
        if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
        else throw Error(Errc::invalid_argument, "bad turns '" + s + "'");
        t = (t << 4) | d;
    }
    return t;
}

Point MetricSpace::zero() const { throw Error(Errc::invalid_argument, name() + " has no group structure"); }
Point MetricSpace::add(const Point&, const Point&) const { return zero(); }
Point MetricSpace::negate(const Point&) const { return zero(); }
Point MetricSpace::multiple(const Point&, const Rational&) const { return zero(); }

// circle

std::string CircleSpace::name() const { return exact() ? "circle(exact)" : "circle(fixed)"; }

double CircleSpace::distance(const Point& a, const Point& b) const {
    if (exact()) {
        Rational r = (a.rational() - b.rational()).frac();
        Rational s = Rational(1) - r;
        return (r < s ? r : s).to_double();
    }
    const Turns d = a.turns() - b.turns();
    const Turns e = b.turns() - a.turns();
    return turns_to_double(d < e ? d : e);
}

std::vector<Point> CircleSpace::epsilon_net(double eps) const {
    if (!(eps > 0)) throw Error(Errc::invalid_argument, "epsilon_net needs eps > 0");
    const double m = std::ceil(1.0 / (2.0 * eps));
    if (m > static_cast<double>(kMaxNet)) throw Error(Errc::invalid_argument, "epsilon_net too fine");
    const auto M = static_cast<std::int64_t>(std::max(1.0, m));
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(M));
    for (std::int64_t k = 0; k < M; ++k) {
        if (exact()) out.emplace_back(Rational(BigInt(k), BigInt(M)));
        else out.push_back(Point::turns(from_big((BigInt(k) << 128) / M)));
    }
    return out;
}

Point CircleSpace::sample(std::mt19937_64& rng) const {
    if (exact()) {
        constexpr std::int64_t D = std::int64_t{1} << 30;
        return Point(Rational(BigInt(static_cast<std::int64_t>(rng() % D)), BigInt(D)));
    }
    const Turns hi = rng(), lo = rng();
    return Point::turns((hi << 64) | lo);
}

void CircleSpace::validate(const Point& p) const {
    if (exact()) {
        if (!std::holds_alternative<Rational>(p.v)) bad_point(name(), "expected a rational");
        const Rational& r = p.rational();
        if (r.sign() < 0 || r >= Rational(1)) bad_point(name(), "outside [0,1)");
    } else if (!std::holds_alternative<Turns>(p.v)) {
        bad_point(name(), "expected turns");
    }
}

json CircleSpace::point_to_json(const Point& p) const {
    validate(p);
    return exact() ? json(p.rational().str()) : json(turns_hex(p.turns()));
}

Point CircleSpace::point_from_json(const json& j) const {
    if (j.is_number_integer()) return from_real(Rational(j.get<std::int64_t>()));
    if (!j.is_string()) bad_point(name(), "expected a string");
    const std::string s = j.get<std::string>();
    if (s == "golden") return golden();
    if (!exact() && s.rfind("0x", 0) == 0) return Point::turns(turns_from_hex(s));
    return from_real(Rational::parse(s));
}

json CircleSpace::to_json() const { return {{"kind", "circle"}, {"precision", exact() ? "exact" : "fixed"}}; }

Point CircleSpace::zero() const { return exact() ? Point(Rational(0)) : Point::turns(0); }

Point CircleSpace::add(const Point& a, const Point& b) const {
    if (exact()) return Point((a.rational() + b.rational()).frac());
    return Point::turns(a.turns() + b.turns());
}

Point CircleSpace::negate(const Point& a) const {
    if (exact()) return Point((-a.rational()).frac());
    return Point::turns(Turns(0) - a.turns());
}

Point CircleSpace::multiple(const Point& g, const Rational& e) const {
    if (exact()) return Point((e * g.rational()).frac());
    const BigInt G = to_big(g.turns());
    if (e.is_integer()) return Point::turns(from_big(e.num()) * g.turns());
    BigInt prod = e.num() * G;
    BigInt q = prod / e.den();
    if (prod.sign() < 0 && q * e.den() != prod) q -= 1;
    return Point::turns(from_big(q));
}

Point CircleSpace::from_real(const Rational& r) const {
    const Rational f = r.frac();
    if (exact()) return Point(f);
    return Point::turns(from_big((f.num() << 128) / f.den()));
}

Point CircleSpace::golden() const {
    if (exact()) throw Error(Errc::invalid_argument, "golden angle is not exactly representable");
    const BigInt root = boost::multiprecision::sqrt(BigInt(5) << 256);
    return Point::turns(from_big((root - two128()) / 2));
}

Point CircleSpace::doubling(const Point& x, const BigInt& e) const {
    if (e.sign() < 0) throw Error(Errc::not_invertible, "doubling map has no negative powers");
    if (exact()) {
        const Rational& r = x.rational();
        const BigInt b = r.den();
        const BigInt num = floor_mod(r.num() * BigInt(boost::multiprecision::powm(BigInt(2), e, b)), b);
        return Point(Rational(num, b));
    }
    if (e >= 128) return Point::turns(0);
    return Point::turns(x.turns() << e.convert_to<unsigned>());
}

// cyclic

CyclicSpace::CyclicSpace(std::int64_t modulus) : m_(modulus) {
    if (m_ < 1) throw Error(Errc::invalid_argument, "modulus must be positive");
}

std::string CyclicSpace::name() const { return "Z/" + std::to_string(m_); }

double CyclicSpace::distance(const Point& a, const Point& b) const { return a.index() == b.index() ? 0.0 : 1.0; }

std::vector<Point> CyclicSpace::epsilon_net(double eps) const {
    if (!(eps > 0)) throw Error(Errc::invalid_argument, "epsilon_net needs eps > 0");
    if (eps >= 1.0) return {Point::index(0)};
    if (static_cast<std::uint64_t>(m_) > kMaxNet) throw Error(Errc::invalid_argument, "epsilon_net too large");
    std::vector<Point> out;
    for (std::int64_t i = 0; i < m_; ++i) out.push_back(Point::index(i));
    return out;
}

Point CyclicSpace::sample(std::mt19937_64& rng) const {
    return Point::index(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m_)));
}

void CyclicSpace::validate(const Point& p) const {
    if (!std::holds_alternative<std::int64_t>(p.v)) bad_point(name(), "expected an integer");
    if (p.index() < 0 || p.index() >= m_) bad_point(name(), "residue out of range");
}

json CyclicSpace::point_to_json(const Point& p) const {
    validate(p);
    return p.index();
}

Point CyclicSpace::point_from_json(const json& j) const {
    if (!j.is_number_integer()) bad_point(name(), "expected an integer");
    const std::int64_t v = j.get<std::int64_t>();
    return Point::index(((v % m_) + m_) % m_);
}

json CyclicSpace::to_json() const { return {{"kind", "cyclic"}, {"modulus", m_}}; }

Point CyclicSpace::add(const Point& a, const Point& b) const { return Point::index((a.index() + b.index()) % m_); }

Point CyclicSpace::negate(const Point& a) const { return Point::index((m_ - a.index()) % m_); }

Point CyclicSpace::multiple(const Point& g, const Rational& e) const {
    if (!e.is_integer()) throw Error(Errc::invalid_argument, "non-integer multiple on " + name());
    return Point::index(floor_mod(e.num() * g.index(), BigInt(m_)).convert_to<std::int64_t>());
}

// product

ProductSpace::ProductSpace(std::vector<SpacePtr> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error(Errc::invalid_argument, "product of no spaces");
}

std::string ProductSpace::name() const {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x " : "") + factors_[i]->name();
    return s + ")";
}

double ProductSpace::distance(const Point& a, const Point& b) const {
    double d = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) d = std::max(d, factors_[i]->distance(a.parts()[i], b.parts()[i]));
    return d;
}

bool ProductSpace::exact() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const SpacePtr& f) { return f->exact(); });
}

std::vector<Point> ProductSpace::epsilon_net(double eps) const {
    std::vector<std::vector<Point>> nets;
    std::size_t total = 1;
    for (const auto& f : factors_) {
        nets.push_back(f->epsilon_net(eps));
        total *= nets.back().size();
        if (total > kMaxNet) throw Error(Errc::invalid_argument, "epsilon_net too large");
    }
    std::vector<Point> out;
    out.reserve(total);
    std::vector<std::size_t> idx(factors_.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::vector<Point> parts;
        for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(nets[i][idx[i]]);
        out.push_back(Point::tuple(std::move(parts)));
        for (std::size_t i = factors_.size(); i-- > 0;) {
            if (++idx[i] < nets[i].size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

Point ProductSpace::sample(std::mt19937_64& rng) const {
    std::vector<Point> parts;
    for (const auto& f : factors_) parts.push_back(f->sample(rng));
    return Point::tuple(std::move(parts));
}

void ProductSpace::validate(const Point& p) const {
    if (!std::holds_alternative<std::vector<Point>>(p.v) || p.parts().size() != factors_.size())
        bad_point(name(), "expected a tuple of " + std::to_string(factors_.size()));
    for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i]->validate(p.parts()[i]);
}

json ProductSpace::point_to_json(const Point& p) const {
    validate(p);
    json out = json::array();
    for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->point_to_json(p.parts()[i]));
    return out;
}

Point ProductSpace::point_from_json(const json& j) const {
    if (!j.is_array() || j.size() != factors_.size()) bad_point(name(), "expected an array");
    std::vector<Point> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->point_from_json(j[i]));
    return Point::tuple(std::move(parts));
}

json ProductSpace::to_json() const {
    json fs = json::array();
    for (const auto& f : factors_) fs.push_back(f->to_json());
    return {{"kind", "product"}, {"factors", fs}};
}

bool ProductSpace::is_group() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const SpacePtr& f) { return f->is_group(); });
}

Point ProductSpace::zero() const {
    std::vector<Point> parts;
    for (const auto& f : factors_) parts.push_back(f->zero());
    return Point::tuple(std::move(parts));
}

Point ProductSpace::add(const Point& a, const Point& b) const {
    std::vector<Point> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->add(a.parts()[i], b.parts()[i]));
    return Point::tuple(std::move(parts));
}

Point ProductSpace::negate(const Point& a) const {
    std::vector<Point> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->negate(a.parts()[i]));
    return Point::tuple(std::move(parts));
}

Point ProductSpace::multiple(const Point& g, const Rational& e) const {
    std::vector<Point> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i) parts.push_back(factors_[i]->multiple(g.parts()[i], e));
    return Point::tuple(std::move(parts));
}

Point ProductSpace::diagonal(const Point& x) const { return Point::tuple(std::vector<Point>(factors_.size(), x)); }

// hyperspace

double hausdorff(const MetricSpace& base, const std::vector<Point>& a, const std::vector<Point>& b) {
    auto directed = [&](const std::vector<Point>& from, const std::vector<Point>& to) {
        double worst = 0;
        for (const Point& x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& y : to) best = std::min(best, base.distance(x, y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::string HyperspaceSpace::name() const { return "F(" + base_->name() + ")"; }

double HyperspaceSpace::distance(const Point& a, const Point& b) const { return hausdorff(*base_, a.parts(), b.parts()); }

std::vector<Point> HyperspaceSpace::epsilon_net(double eps) const {
    const auto net = base_->epsilon_net(eps);
    if (net.size() > 12) throw Error(Errc::invalid_argument, "hyperspace epsilon_net: base net exceeds 12 points");
    std::vector<Point> out;
    for (std::uint32_t mask = 1; mask < (1u << net.size()); ++mask) {
        std::vector<Point> xs;
        for (std::size_t i = 0; i < net.size(); ++i)
            if (mask & (1u << i)) xs.push_back(net[i]);
        out.push_back(make_set(std::move(xs)));
    }
    return out;
}

Point HyperspaceSpace::sample(std::mt19937_64& rng) const {
    const std::size_t n = 1 + rng() % 3;
    std::vector<Point> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(base_->sample(rng));
    return make_set(std::move(xs));
}

void HyperspaceSpace::validate(const Point& p) const {
    if (!std::holds_alternative<std::vector<Point>>(p.v) || p.parts().empty()) bad_point(name(), "expected a nonempty set");
    for (const Point& x : p.parts()) base_->validate(x);
}

json HyperspaceSpace::point_to_json(const Point& p) const {
    validate(p);
    json out = json::array();
    for (const Point& x : p.parts()) out.push_back(base_->point_to_json(x));
    return out;
}

Point HyperspaceSpace::point_from_json(const json& j) const {
    if (!j.is_array() || j.empty()) bad_point(name(), "expected a nonempty array");
    std::vector<Point> xs;
    for (const json& e : j) xs.push_back(base_->point_from_json(e));
    return make_set(std::move(xs));
}

json HyperspaceSpace::to_json() const { return {{"kind", "hyperspace"}, {"base", base_->to_json()}}; }

Point HyperspaceSpace::make_set(std::vector<Point> xs) const {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return Point::tuple(std::move(xs));
}

SpacePtr space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw Error(Errc::config, "space needs a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    auto precision = [&] {
        const std::string p = j.value("precision", std::string("exact"));
        if (p == "exact") return Precision::exact;
        if (p == "fixed") return Precision::fixed;
        throw Error(Errc::config, "unknown precision '" + p + "'");
    };
    if (kind == "circle") return std::make_shared<CircleSpace>(precision());
    if (kind == "cyclic") {
        if (!j.contains("modulus") || !j.at("modulus").is_number_integer()) throw Error(Errc::config, "cyclic space needs 'modulus'");
        return std::make_shared<CyclicSpace>(j.at("modulus").get<std::int64_t>());
    }
    if (kind == "torus") {
        const int dim = j.value("dim", 2);
        if (dim < 1) throw Error(Errc::config, "torus dim must be positive");
        auto c = std::make_shared<CircleSpace>(precision());
        return std::make_shared<ProductSpace>(std::vector<SpacePtr>(static_cast<std::size_t>(dim), c));
    }
    if (kind == "product") {
        std::vector<SpacePtr> fs;
        for (const json& f : j.at("factors")) fs.push_back(space_from_json(f));
        return std::make_shared<ProductSpace>(std::move(fs));
    }
    if (kind == "hyperspace") return std::make_shared<HyperspaceSpace>(space_from_json(j.at("base")));
    throw Error(Errc::config, "unknown space kind '" + kind + "'");
}

}  // namespace lwd
