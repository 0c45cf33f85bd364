#include "lwd/rule.hpp"

#include "lwd/error.hpp"

#include <cstdlib>

namespace lwd {

SequenceRule SequenceRule::constant(std::int64_t c) {
    SequenceRule r;
    r.form_ = Form::constant;
    r.a_ = 0;
    r.b_ = c;
    return r;
}

SequenceRule SequenceRule::abs() {
    SequenceRule r;
    r.form_ = Form::abs;
    r.a_ = 1;
    r.b_ = 0;
    return r;
}

SequenceRule SequenceRule::abs_plus_one() {
    SequenceRule r;
    r.form_ = Form::abs_plus_one;
    r.a_ = 1;
    r.b_ = 1;
    return r;
}

SequenceRule SequenceRule::affine(std::int64_t a, std::int64_t b) {
    SequenceRule r;
    r.form_ = Form::affine;
    r.a_ = a;
    r.b_ = b;
    return r;
}

SequenceRule SequenceRule::identity() {
    SequenceRule r;
    r.form_ = Form::identity;
    r.a_ = 1;
    r.b_ = 0;
    return r;
}

SequenceRule SequenceRule::table(std::map<std::int64_t, std::int64_t> entries, const SequenceRule& tail) {
    if (tail.has_table()) throw Error(Errc::invalid_argument, "table tail must be a closed form");
    if (entries.count(0)) throw Error(Errc::zero_position, "table entry at position 0");
    SequenceRule r = tail;
    r.table_ = std::move(entries);
    return r;
}

std::int64_t SequenceRule::closed_form(std::int64_t n) const {
    switch (form_) {
    case Form::identity: return n;
    case Form::constant: return b_;
    default: return a_ * std::llabs(n) + b_;
    }
}

std::int64_t SequenceRule::operator()(std::int64_t n) const {
    if (n == 0) throw Error(Errc::zero_position, "rule evaluated at 0");
    if (!table_.empty()) {
        auto it = table_.find(n);
        if (it != table_.end()) return it->second;
    }
    return closed_form(n);
}

}  // namespace lwd
