#include "lwd/codecs.hpp"

#include "lwd/error.hpp"

#include <map>

namespace lwd {

namespace {

SequenceRule minus_one(const SequenceRule& r) {
    SequenceRule tail = SequenceRule::constant(1);
    switch (r.form()) {
    case SequenceRule::Form::constant: tail = SequenceRule::constant(r.b() - 1); break;
    case SequenceRule::Form::abs: tail = SequenceRule::affine(1, -1); break;
    case SequenceRule::Form::abs_plus_one: tail = SequenceRule::abs(); break;
    case SequenceRule::Form::affine: tail = SequenceRule::affine(r.a(), r.b() - 1); break;
    case SequenceRule::Form::identity: tail = SequenceRule::affine(1, -1); break;
    }
    if (!r.has_table()) return tail;
    std::map<std::int64_t, std::int64_t> entries;
    for (const auto& [n, v] : r.entries()) entries[n] = v - 1;
    return SequenceRule::table(std::move(entries), tail);
}

DominationVector radix_vector(SequenceRule rule) {
    DominationVector k = DominationVector::one_sided(std::move(rule));
    if (k.at(1) < 2) throw Error(Errc::invalid_domination, "mixed radix needs k_s >= 2");
    return k;
}

const DominationVector& rational_domination() {
    static const DominationVector k = DominationVector::two_sided(SequenceRule::abs());
    return k;
}

void require_constant(const Word& w) {
    if (w.is_variable()) throw Error(Errc::invalid_argument, "decode needs a constant word, got " + w.str());
}

void require_valid(const Word& w, const DominationVector& k) {
    try {
        check_bounds(w, k);
    } catch (const Error& e) {
        throw Error(Errc::wrong_domination, e.what());
    }
}

BigInt to_int(std::int64_t v) { return BigInt(v); }

}  // namespace

MixedRadix::MixedRadix(SequenceRule rule)
    : radix_(radix_vector(rule)), digits_(DominationVector::one_sided(minus_one(rule))) {}

BigInt MixedRadix::place(Position s) const {
    BigInt l = 1;
    for (Position i = 1; i <= s; ++i) l *= to_int(at(i));
    return l;
}

Rational decode_rational(const Word& w) {
    require_constant(w);
    require_valid(w, rational_domination());
    // fractional part over (S+1)!, integer part by Horner in the negative factorial base
    Position S = 0;
    Position R = 0;
    for (const Entry& e : w) {
        if (e.pos < 0) S = std::max(S, -e.pos);
        else R = std::max(R, e.pos);
    }
    BigInt N = 0, F = 1;
    for (Position s = 1; s <= S; ++s) {
        const Letter d = w.at(-s).value_or(0);
        N = N * (s + 1) + (s % 2 == 0 ? to_int(d) : BigInt(-to_int(d)));
        F *= s + 1;
    }
    BigInt I = 0;
    for (Position r = R; r >= 1; --r) I = to_int(w.at(r).value_or(0)) - (r + 1) * I;
    return Rational(I) + Rational(N, F);
}

Word encode_rational(const Rational& q) {
    if (q.is_zero()) throw Error(Errc::zero_input, "0 has no expansion");
    const BigInt den = q.den();
    Position S = 0;
    BigInt F = 1;
    while (F % den != 0) {
        ++S;
        F *= S + 1;
    }
    // q = X + N/F with 0 <= N < F; digits of N/F from the bottom radix up
    BigInt X = q.floor();
    BigInt N = (q - Rational(X)).num() * (F / den);
    std::vector<Entry> entries;
    for (Position s = S; s >= 1; --s) {
        const BigInt sign = (s % 2 == 0) ? 1 : -1;
        const BigInt d = floor_mod(sign * N, BigInt(s + 1));
        N = (N - sign * d) / (s + 1);
        if (d != 0) entries.push_back({-s, d.convert_to<Letter>()});
    }
    X += N;
    for (Position r = 1; X != 0; ++r) {
        const BigInt d = floor_mod(X, BigInt(r + 1));
        X = (X - d) / BigInt(-(r + 1));
        if (d != 0) entries.push_back({r, d.convert_to<Letter>()});
    }
    Word w(WordKind::two_sided, std::move(entries));
    if (decode_rational(w) != q) throw Error(Errc::verification_failure, "rational encoding of " + q.str());
    return w;
}

BigInt decode_integer(const Word& w, const MixedRadix& radix) {
    require_constant(w);
    require_valid(w, radix.digit_bounds());
    BigInt acc = 0;
    for (Position s = w.max_pos(); s >= 1; --s) acc = to_int(w.at(s).value_or(0)) - to_int(radix.at(s)) * acc;
    return acc;
}

Word encode_integer(const BigInt& z, const MixedRadix& radix) {
    if (z == 0) throw Error(Errc::zero_input, "0 has no expansion");
    std::vector<Entry> entries;
    BigInt X = z;
    for (Position s = 1; X != 0; ++s) {
        const BigInt k = to_int(radix.at(s));
        const BigInt d = floor_mod(X, k);
        X = (X - d) / BigInt(-k);
        if (d != 0) entries.push_back({s, d.convert_to<Letter>()});
    }
    Word w(WordKind::one_sided, std::move(entries));
    if (decode_integer(w, radix) != z) throw Error(Errc::verification_failure, "integer encoding of " + z.str());
    return w;
}

BigInt decode_natural(const Word& w, std::int64_t base) {
    if (base < 2) throw Error(Errc::invalid_argument, "natural base must be >= 2");
    require_constant(w);
    require_valid(w, DominationVector::one_sided(SequenceRule::constant(base - 1)));
    BigInt acc = 0;
    for (Position s = w.max_pos(); s >= 1; --s) acc = acc * base + to_int(w.at(s).value_or(0));
    return acc;
}

Word encode_natural(const BigInt& n, std::int64_t base) {
    if (base < 2) throw Error(Errc::invalid_argument, "natural base must be >= 2");
    if (n == 0) throw Error(Errc::zero_input, "0 has no expansion");
    if (n < 0) throw Error(Errc::invalid_argument, "natural codec takes positive integers");
    std::vector<Entry> entries;
    BigInt X = n;
    for (Position s = 1; X != 0; ++s) {
        const BigInt d = X % base;
        X /= base;
        if (d != 0) entries.push_back({s, d.convert_to<Letter>()});
    }
    return Word(WordKind::one_sided, std::move(entries));
}

Codec::Codec(CodecKind kind, MixedRadix radix, std::int64_t base, DominationVector domination)
    : kind_(kind), radix_(std::move(radix)), base_(base), domination_(std::move(domination)) {}

Codec Codec::rational() {
    return Codec(CodecKind::rational, MixedRadix(SequenceRule::constant(2)), 0, rational_domination());
}

Codec Codec::integer(MixedRadix radix) {
    DominationVector k = radix.digit_bounds();
    return Codec(CodecKind::integer, std::move(radix), 0, std::move(k));
}

Codec Codec::natural(std::int64_t base) {
    if (base < 2) throw Error(Errc::invalid_argument, "natural base must be >= 2");
    return Codec(CodecKind::natural, MixedRadix(SequenceRule::constant(2)), base,
                 DominationVector::one_sided(SequenceRule::constant(base - 1)));
}

const char* Codec::name() const {
    switch (kind_) {
    case CodecKind::rational: return "rational";
    case CodecKind::integer: return "integer";
    case CodecKind::natural: return "natural";
    }
    return "?";
}

Rational Codec::weight(Position n) const {
    if (n == 0) throw Error(Errc::zero_position, "weight at 0");
    switch (kind_) {
    case CodecKind::rational:
        if (n > 0) return Rational(n % 2 == 1 ? factorial(static_cast<unsigned>(n)) : BigInt(-factorial(static_cast<unsigned>(n))));
        return Rational(BigInt((-n) % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(-n + 1)));
    case CodecKind::integer: {
        if (n < 0) throw Error(Errc::wrong_domination, "negative position for integer codec");
        BigInt l = radix_.place(n - 1);
        return Rational(n % 2 == 1 ? l : BigInt(-l));
    }
    case CodecKind::natural: {
        if (n < 0) throw Error(Errc::wrong_domination, "negative position for natural codec");
        BigInt p = 1;
        for (Position i = 1; i < n; ++i) p *= base_;
        return Rational(p);
    }
    }
    return Rational(0);
}

Rational Codec::decode(const Word& w) const {
    switch (kind_) {
    case CodecKind::rational: return decode_rational(w);
    case CodecKind::integer: return Rational(decode_integer(w, radix_));
    case CodecKind::natural: return Rational(decode_natural(w, base_));
    }
    return Rational(0);
}

Word Codec::encode(const Rational& v) const {
    if (kind_ == CodecKind::rational) return encode_rational(v);
    if (!v.is_integer()) throw Error(Errc::invalid_argument, std::string(name()) + " codec takes integers");
    if (kind_ == CodecKind::integer) return encode_integer(v.num(), radix_);
    return encode_natural(v.num(), base_);
}

VariableNumber Codec::lift(const Word& vw) const {
    require_valid(vw, domination_);
    VariableNumber out{Rational(0), Rational(0), Rational(0)};
    for (const Entry& e : vw) {
        const Rational wt = weight(e.pos);
        if (!e.is_variable()) out.constant += Rational(e.letter) * wt;
        else if (e.pos > 0) out.plus += wt;
        else out.minus += wt;
    }
    return out;
}

}  // namespace lwd
