#pragma once

#include "lwd/codecs.hpp"
#include "lwd/space.hpp"
#include "lwd/word.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace lwd {

// Family of maps T^w on a compact metric space indexed by constant words.
class WordSystem {
public:
    WordSystem(SpacePtr space, DominationVector k) : space_(std::move(space)), k_(std::move(k)) {}
    virtual ~WordSystem() = default;

    const MetricSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }
    const DominationVector& domination() const { return k_; }
    WordKind kind() const { return k_.kind(); }

    virtual std::string describe() const = 0;
    virtual Point apply(const Word& w, const Point& x) const = 0;
    virtual bool invertible() const { return false; }
    virtual Point apply_inverse(const Word& w, const Point& x) const;
    // Lipschitz constant of T^w, when declared.
    virtual std::optional<double> lipschitz(const Word& w) const;
    virtual bool exact() const { return space_->exact(); }

private:
    SpacePtr space_;
    DominationVector k_;
};

using SystemPtr = std::shared_ptr<const WordSystem>;

// T^w(x) = x + sum of per-(position, letter) increments on a group space.
class TranslationSystem : public WordSystem {
public:
    using WordSystem::WordSystem;

    virtual Point increment(Position n, Letter v) const = 0;
    Point translation(const Word& w) const;

    Point apply(const Word& w, const Point& x) const override;
    bool invertible() const override { return true; }
    Point apply_inverse(const Word& w, const Point& x) const override;
    std::optional<double> lipschitz(const Word&) const override { return 1.0; }

protected:
    Point cached_increment(Position n, Letter v) const;

private:
    mutable std::mutex mu_;
    mutable std::map<std::pair<Position, Letter>, Point> cache_;
};

struct MapSpec {
    enum class Kind { identity, translation, doubling };
    Kind kind = Kind::identity;
    Point step;  // translation amount

    static MapSpec identity() { return {}; }
    static MapSpec translation(Point step) { return {Kind::translation, std::move(step)}; }
    static MapSpec doubling() { return {Kind::doubling, Point()}; }

    Point power(const MetricSpace& space, const BigInt& e, const Point& x) const;
    std::optional<double> lipschitz(const BigInt& e) const;
    std::string describe(const MetricSpace& space) const;
};

// T^w = T^(sum l_n w_n) for one map T and integer weights l.
class SingleMapSystem final : public WordSystem {
public:
    SingleMapSystem(SpacePtr space, DominationVector k, MapSpec map, SequenceRule weights);

    BigInt exponent(const Word& w) const;
    std::string describe() const override;
    Point apply(const Word& w, const Point& x) const override;
    bool invertible() const override { return map_.kind != MapSpec::Kind::doubling; }
    Point apply_inverse(const Word& w, const Point& x) const override;
    std::optional<double> lipschitz(const Word& w) const override;

private:
    MapSpec map_;
    SequenceRule weights_;
};

// T^w = T^(sum_{n>0} n l_n w_n) S^(sum_{n<0} |n| l_n w_n) for commuting translations T, S.
class BiSequenceSystem final : public TranslationSystem {
public:
    BiSequenceSystem(SpacePtr space, DominationVector k, MapSpec positive, MapSpec negative, SequenceRule weights);

    std::string describe() const override;
    Point increment(Position n, Letter v) const override;

private:
    MapSpec pos_;
    MapSpec neg_;
    SequenceRule weights_;
};

// T^w = translation by decode(w) * step.
class CodecRotationSystem final : public TranslationSystem {
public:
    CodecRotationSystem(SpacePtr space, Codec codec, Point step);

    const Codec& codec() const { return codec_; }
    const Point& step() const { return step_; }
    std::string describe() const override;
    Point increment(Position n, Letter v) const override;

private:
    Codec codec_;
    Point step_;
};

class ProductSystem final : public WordSystem {
public:
    explicit ProductSystem(std::vector<SystemPtr> components);

    const std::vector<SystemPtr>& components() const { return parts_; }
    std::string describe() const override;
    Point apply(const Word& w, const Point& x) const override;
    bool invertible() const override;
    Point apply_inverse(const Word& w, const Point& x) const override;
    std::optional<double> lipschitz(const Word& w) const override;
    bool exact() const override;

private:
    std::vector<SystemPtr> parts_;
};

// Image map on finite point sets.
class HyperspaceSystem final : public WordSystem {
public:
    explicit HyperspaceSystem(SystemPtr base);

    std::string describe() const override;
    Point apply(const Word& w, const Point& x) const override;
    bool invertible() const override { return base_->invertible(); }
    Point apply_inverse(const Word& w, const Point& x) const override;
    std::optional<double> lipschitz(const Word& w) const override { return base_->lipschitz(w); }

private:
    SystemPtr base_;
    std::shared_ptr<const HyperspaceSpace> hyper_;
};

// S^w = T^w (U^w)^-1.
class QuotientSystem final : public WordSystem {
public:
    QuotientSystem(SystemPtr t, SystemPtr u);

    std::string describe() const override;
    Point apply(const Word& w, const Point& x) const override;
    bool invertible() const override { return true; }
    Point apply_inverse(const Word& w, const Point& x) const override;
    std::optional<double> lipschitz(const Word& w) const override;
    bool exact() const override { return t_->exact() && u_->exact(); }

private:
    SystemPtr t_;
    SystemPtr u_;
};

}  // namespace lwd
