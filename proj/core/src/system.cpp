#include "lwd/system.hpp"

#include "lwd/error.hpp"

#include <cmath>
#include <limits>

namespace lwd {

namespace {

void require_constant(const Word& w, const DominationVector& k) {
    if (w.is_variable()) throw Error(Errc::invalid_argument, "T^w needs a constant word, got " + w.str());
    check_bounds(w, k);
}

const CircleSpace& as_circle(const MetricSpace& space) {
    auto* c = dynamic_cast<const CircleSpace*>(&space);
    if (!c) throw Error(Errc::invalid_argument, "doubling map needs a circle space");
    return *c;
}

}  // namespace

Point WordSystem::apply_inverse(const Word&, const Point&) const {
    throw Error(Errc::not_invertible, describe());
}

std::optional<double> WordSystem::lipschitz(const Word&) const { return std::nullopt; }

Point TranslationSystem::cached_increment(Position n, Letter v) const {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(n, v);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Point p = increment(n, v);
    cache_.emplace(key, p);
    return p;
}

Point TranslationSystem::translation(const Word& w) const {
    require_constant(w, domination());
    Point acc = space().zero();
    for (const Entry& e : w) acc = space().add(acc, cached_increment(e.pos, e.letter));
    return acc;
}

Point TranslationSystem::apply(const Word& w, const Point& x) const { return space().add(x, translation(w)); }

Point TranslationSystem::apply_inverse(const Word& w, const Point& x) const {
    return space().sub(x, translation(w));
}

Point MapSpec::power(const MetricSpace& space, const BigInt& e, const Point& x) const {
    switch (kind) {
    case Kind::identity: return x;
    case Kind::translation: return space.add(x, space.multiple(step, Rational(e)));
    case Kind::doubling: return as_circle(space).doubling(x, e);
    }
    return x;
}

std::optional<double> MapSpec::lipschitz(const BigInt& e) const {
    if (kind != Kind::doubling) return 1.0;
    if (e > 1023) return std::numeric_limits<double>::infinity();
    return std::ldexp(1.0, e.convert_to<int>());
}

std::string MapSpec::describe(const MetricSpace& space) const {
    switch (kind) {
    case Kind::identity: return "identity";
    case Kind::translation: return "translate(" + space.point_to_json(step).dump() + ")";
    case Kind::doubling: return "doubling";
    }
    return "?";
}

namespace {

void check_map(const MetricSpace& space, const MapSpec& map) {
    if (map.kind == MapSpec::Kind::translation) {
        if (!space.is_group()) throw Error(Errc::invalid_argument, "translation on " + space.name());
        space.validate(map.step);
    } else if (map.kind == MapSpec::Kind::doubling) {
        as_circle(space);
    }
}

}  // namespace

SingleMapSystem::SingleMapSystem(SpacePtr space, DominationVector k, MapSpec map, SequenceRule weights)
    : WordSystem(std::move(space), std::move(k)), map_(std::move(map)), weights_(std::move(weights)) {
    check_map(this->space(), map_);
}

BigInt SingleMapSystem::exponent(const Word& w) const {
    require_constant(w, domination());
    BigInt e = 0;
    for (const Entry& x : w) e += BigInt(weights_(x.pos)) * x.letter;
    return e;
}

std::string SingleMapSystem::describe() const { return "single_map[" + map_.describe(space()) + "]"; }

Point SingleMapSystem::apply(const Word& w, const Point& x) const { return map_.power(space(), exponent(w), x); }

Point SingleMapSystem::apply_inverse(const Word& w, const Point& x) const {
    if (!invertible()) throw Error(Errc::not_invertible, describe());
    return map_.power(space(), -exponent(w), x);
}

std::optional<double> SingleMapSystem::lipschitz(const Word& w) const { return map_.lipschitz(exponent(w)); }

BiSequenceSystem::BiSequenceSystem(SpacePtr space, DominationVector k, MapSpec positive, MapSpec negative,
                                   SequenceRule weights)
    : TranslationSystem(std::move(space), std::move(k)),
      pos_(std::move(positive)),
      neg_(std::move(negative)),
      weights_(std::move(weights)) {
    for (const MapSpec* m : {&pos_, &neg_}) {
        if (m->kind == MapSpec::Kind::doubling)
            throw Error(Errc::invalid_argument, "bi_sequence maps must be translations");
        check_map(this->space(), *m);
    }
    if (!this->space().is_group()) throw Error(Errc::invalid_argument, "bi_sequence needs a group space");
}

std::string BiSequenceSystem::describe() const {
    return "bi_sequence[" + pos_.describe(space()) + ", " + neg_.describe(space()) + "]";
}

Point BiSequenceSystem::increment(Position n, Letter v) const {
    const MapSpec& m = n > 0 ? pos_ : neg_;
    if (m.kind == MapSpec::Kind::identity) return space().zero();
    const BigInt e = BigInt(std::llabs(n)) * weights_(n) * v;
    return space().multiple(m.step, Rational(e));
}

CodecRotationSystem::CodecRotationSystem(SpacePtr space, Codec codec, Point step)
    : TranslationSystem(std::move(space), codec.domination()), codec_(std::move(codec)), step_(std::move(step)) {
    if (!this->space().is_group()) throw Error(Errc::invalid_argument, "codec_rotation needs a group space");
    this->space().validate(step_);
}

std::string CodecRotationSystem::describe() const {
    return std::string("codec_rotation[") + codec_.name() + ", " + space().point_to_json(step_).dump() + "]";
}

Point CodecRotationSystem::increment(Position n, Letter v) const {
    return space().multiple(step_, codec_.weight(n) * Rational(v));
}

namespace {

SpacePtr product_space(const std::vector<SystemPtr>& parts) {
    if (parts.empty()) throw Error(Errc::invalid_argument, "product of no systems");
    std::vector<SpacePtr> fs;
    for (const auto& p : parts) {
        if (!(p->domination() == parts.front()->domination()))
            throw Error(Errc::invalid_argument, "product components use different dominations");
        fs.push_back(p->space_ptr());
    }
    return std::make_shared<ProductSpace>(std::move(fs));
}

}  // namespace

ProductSystem::ProductSystem(std::vector<SystemPtr> components)
    : WordSystem(product_space(components), components.front()->domination()), parts_(std::move(components)) {}

std::string ProductSystem::describe() const {
    std::string s = "product[";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? ", " : "") + parts_[i]->describe();
    return s + "]";
}

Point ProductSystem::apply(const Word& w, const Point& x) const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(parts_[i]->apply(w, x.parts()[i]));
    return Point::tuple(std::move(out));
}

bool ProductSystem::invertible() const {
    for (const auto& p : parts_)
        if (!p->invertible()) return false;
    return true;
}

Point ProductSystem::apply_inverse(const Word& w, const Point& x) const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(parts_[i]->apply_inverse(w, x.parts()[i]));
    return Point::tuple(std::move(out));
}

std::optional<double> ProductSystem::lipschitz(const Word& w) const {
    double l = 0;
    for (const auto& p : parts_) {
        auto pl = p->lipschitz(w);
        if (!pl) return std::nullopt;
        l = std::max(l, *pl);
    }
    return l;
}

bool ProductSystem::exact() const {
    for (const auto& p : parts_)
        if (!p->exact()) return false;
    return true;
}

HyperspaceSystem::HyperspaceSystem(SystemPtr base)
    : WordSystem(std::make_shared<HyperspaceSpace>(base->space_ptr()), base->domination()),
      base_(std::move(base)),
      hyper_(std::static_pointer_cast<const HyperspaceSpace>(space_ptr())) {}

std::string HyperspaceSystem::describe() const { return "hyperspace_lift[" + base_->describe() + "]"; }

Point HyperspaceSystem::apply(const Word& w, const Point& x) const {
    std::vector<Point> out;
    for (const Point& p : x.parts()) out.push_back(base_->apply(w, p));
    return hyper_->make_set(std::move(out));
}

Point HyperspaceSystem::apply_inverse(const Word& w, const Point& x) const {
    std::vector<Point> out;
    for (const Point& p : x.parts()) out.push_back(base_->apply_inverse(w, p));
    return hyper_->make_set(std::move(out));
}

QuotientSystem::QuotientSystem(SystemPtr t, SystemPtr u)
    : WordSystem(t->space_ptr(), t->domination()), t_(std::move(t)), u_(std::move(u)) {
    if (!u_->invertible() || !t_->invertible()) throw Error(Errc::not_invertible, "quotient of non-invertible systems");
    if (!(u_->domination() == t_->domination())) throw Error(Errc::invalid_argument, "quotient of different dominations");
}

std::string QuotientSystem::describe() const { return "quotient[" + t_->describe() + " / " + u_->describe() + "]"; }

Point QuotientSystem::apply(const Word& w, const Point& x) const { return t_->apply(w, u_->apply_inverse(w, x)); }

Point QuotientSystem::apply_inverse(const Word& w, const Point& x) const {
    return u_->apply(w, t_->apply_inverse(w, x));
}

std::optional<double> QuotientSystem::lipschitz(const Word& w) const {
    auto lt = t_->lipschitz(w), lu = u_->lipschitz(w);
    if (lt && lu && *lu == 1.0) return *lt;
    return std::nullopt;
}

}  // namespace lwd
