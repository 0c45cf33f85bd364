#pragma once

#include <cstdint>
#include <map>

namespace lwd {

// Integer-valued rule on nonzero positions: a closed form from a small
// catalog, optionally overridden by a finite table.
class SequenceRule {
public:
    enum class Form { constant, abs, abs_plus_one, affine, identity };

    static SequenceRule constant(std::int64_t c);
    static SequenceRule abs();
    static SequenceRule abs_plus_one();
    static SequenceRule affine(std::int64_t a, std::int64_t b);  // a*|n| + b
    static SequenceRule identity();                              // n, signed
    static SequenceRule table(std::map<std::int64_t, std::int64_t> entries, const SequenceRule& tail);

    std::int64_t operator()(std::int64_t n) const;

    Form form() const { return form_; }
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    const std::map<std::int64_t, std::int64_t>& entries() const { return table_; }
    bool has_table() const { return !table_.empty(); }
    std::int64_t closed_form(std::int64_t n) const;

    friend bool operator==(const SequenceRule&, const SequenceRule&) = default;

private:
    Form form_ = Form::constant;
    std::int64_t a_ = 1;
    std::int64_t b_ = 0;
    std::map<std::int64_t, std::int64_t> table_;
};

}  // namespace lwd
