#pragma once

#include "lwd/domination.hpp"
#include "lwd/rational.hpp"
#include "lwd/word.hpp"

namespace lwd {

// Mixed radix (k_1, k_2, ...) with k_s >= 2, nondecreasing; l_0 = 1, l_s = k_1...k_s.
class MixedRadix {
public:
    explicit MixedRadix(SequenceRule rule);

    std::int64_t at(Position s) const { return radix_.at(s); }
    BigInt place(Position s) const;  // l_s
    const DominationVector& radix() const { return radix_; }
    // Digit bounds k_s - 1 as a one-sided domination vector.
    const DominationVector& digit_bounds() const { return digits_; }

    friend bool operator==(const MixedRadix& a, const MixedRadix& b) { return a.radix_ == b.radix_; }

private:
    DominationVector radix_;
    DominationVector digits_;
};

Rational decode_rational(const Word& w);
Word encode_rational(const Rational& q);

BigInt decode_integer(const Word& w, const MixedRadix& radix);
Word encode_integer(const BigInt& z, const MixedRadix& radix);

BigInt decode_natural(const Word& w, std::int64_t base);
Word encode_natural(const BigInt& n, std::int64_t base);

// value(i, j) = constant + i*plus + j*minus; i fills positive variables, j negative ones.
struct VariableNumber {
    Rational constant;
    Rational plus;
    Rational minus;

    Rational value(Letter i, Letter j = 0) const { return constant + plus * Rational(i) + minus * Rational(j); }
    friend bool operator==(const VariableNumber&, const VariableNumber&) = default;
};

enum class CodecKind { rational, integer, natural };

class Codec {
public:
    static Codec rational();
    static Codec integer(MixedRadix radix);
    static Codec natural(std::int64_t base);

    CodecKind kind() const { return kind_; }
    const char* name() const;
    const DominationVector& domination() const { return domination_; }
    const MixedRadix& radix() const { return radix_; }
    std::int64_t base() const { return base_; }

    // Contribution of letter 1 at position n.
    Rational weight(Position n) const;
    Rational decode(const Word& w) const;
    Word encode(const Rational& v) const;
    VariableNumber lift(const Word& vw) const;

    friend bool operator==(const Codec& a, const Codec& b) {
        return a.kind_ == b.kind_ && a.radix_ == b.radix_ && a.base_ == b.base_;
    }

private:
    Codec(CodecKind kind, MixedRadix radix, std::int64_t base, DominationVector domination);
    CodecKind kind_;
    MixedRadix radix_;
    std::int64_t base_;
    DominationVector domination_;
};

}  // namespace lwd
