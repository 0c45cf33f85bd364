#include "lwd/domination.hpp"

#include "lwd/error.hpp"

#include <cstdlib>
#include <string>

namespace lwd {

const char* kind_name(WordKind kind) noexcept {
    return kind == WordKind::two_sided ? "two-sided" : "one-sided";
}

namespace {

bool tail_monotone(const SequenceRule& r, int side) {
    switch (r.form()) {
    case SequenceRule::Form::constant:
    case SequenceRule::Form::abs:
    case SequenceRule::Form::abs_plus_one: return true;
    case SequenceRule::Form::affine: return r.a() >= 0;
    case SequenceRule::Form::identity: return side > 0;
    }
    return false;
}

void check_side(const SequenceRule& r, int side) {
    std::int64_t last = 0;
    for (const auto& [n, v] : r.entries()) (void)v, last = std::max<std::int64_t>(last, n < 0 ? -n : n);
    std::int64_t prev = 1;
    for (std::int64_t m = 1; m <= last + 2; ++m) {
        std::int64_t v = r(side * m);
        if (v < 1)
            throw Error(Errc::invalid_domination, "k(" + std::to_string(side * m) + ") = " + std::to_string(v) + " < 1");
        if (v < prev)
            throw Error(Errc::invalid_domination, "k not nondecreasing at " + std::to_string(side * m));
        prev = v;
    }
    if (!tail_monotone(r, side))
        throw Error(Errc::invalid_domination, side > 0 ? "positive tail decreasing" : "negative tail decreasing");
}

}  // namespace

DominationVector::DominationVector(WordKind kind, SequenceRule rule) : kind_(kind), rule_(std::move(rule)) {
    check_side(rule_, 1);
    if (kind_ == WordKind::two_sided) check_side(rule_, -1);
}

std::int64_t DominationVector::at(std::int64_t n) const {
    if (n == 0) throw Error(Errc::zero_position, "position 0");
    if (n < 0 && kind_ == WordKind::one_sided)
        throw Error(Errc::position_out_of_domain, "negative position " + std::to_string(n) + " on one-sided vector");
    return rule_(n);
}

}  // namespace lwd
