#include "lwd/word.hpp"

#include "lwd/error.hpp"

#include <algorithm>
#include <sstream>

namespace lwd {

Word::Word(WordKind kind, std::vector<Entry> entries) : kind_(kind), entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(Errc::empty_domain, "word has no entries");
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        if (e.pos == 0) throw Error(Errc::zero_position, "entry at position 0");
        if (kind_ == WordKind::one_sided && e.pos < 0)
            throw Error(Errc::kind_mismatch, "negative position " + std::to_string(e.pos) + " in one-sided word");
        if (e.letter < 0) throw Error(Errc::letter_out_of_bound, "negative letter at " + std::to_string(e.pos));
        if (i > 0 && entries_[i - 1].pos == e.pos)
            throw Error(Errc::domain_overlap, "duplicate position " + std::to_string(e.pos));
    }
}

std::optional<Position> Word::max_negative() const {
    std::optional<Position> out;
    for (const Entry& e : entries_) {
        if (e.pos > 0) break;
        out = e.pos;
    }
    return out;
}

std::optional<Position> Word::min_positive() const {
    auto it = std::upper_bound(entries_.begin(), entries_.end(), Entry{0, 0},
                               [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
    if (it == entries_.end()) return std::nullopt;
    return it->pos;
}

std::optional<Letter> Word::at(Position n) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                               [](const Entry& e, Position p) { return e.pos < p; });
    if (it == entries_.end() || it->pos != n) return std::nullopt;
    return it->letter;
}

bool Word::is_variable() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.is_variable(); });
}

bool Word::is_zero_class() const {
    bool neg = false, pos = false;
    for (const Entry& e : entries_) {
        if (!e.is_variable()) continue;
        (e.pos < 0 ? neg : pos) = true;
    }
    return neg && pos;
}

WordClass Word::classify() const {
    if (is_zero_class()) return WordClass::zero_class;
    return is_variable() ? WordClass::variable : WordClass::constant;
}

std::string Word::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i].pos << ':';
        if (entries_[i].is_variable()) os << 'v';
        else os << entries_[i].letter;
    }
    os << '}';
    return os.str();
}

void check_bounds(const Word& w, const DominationVector& k) {
    if (w.kind() != k.kind())
        throw Error(Errc::kind_mismatch, std::string("word is ") + kind_name(w.kind()) + ", domination is " + kind_name(k.kind()));
    for (const Entry& e : w) {
        if (e.is_variable()) continue;
        std::int64_t bound = k.at(e.pos);
        if (e.letter < 1 || e.letter > bound)
            throw Error(Errc::letter_out_of_bound, "(" + std::to_string(e.pos) + ", " + std::to_string(e.letter) +
                                                       ", " + std::to_string(bound) + ")");
    }
}

Word validate_word(std::vector<Entry> raw, const DominationVector& k) {
    if (raw.empty()) throw Error(Errc::empty_domain, "word has no entries");
    for (const Entry& e : raw)
        if (e.pos == 0) throw Error(Errc::zero_position, "entry at position 0");
    Word w(k.kind(), std::move(raw));
    check_bounds(w, k);
    return w;
}

bool disjoint(const Word& w, const Word& u) {
    auto a = w.begin(), b = u.begin();
    while (a != w.end() && b != u.end()) {
        if (a->pos == b->pos) return false;
        if (a->pos < b->pos) ++a;
        else ++b;
    }
    return true;
}

Word concat(const Word& w, const Word& u) {
    if (w.kind() != u.kind()) throw Error(Errc::kind_mismatch, "concatenating words of different kinds");
    std::vector<Entry> out;
    out.reserve(w.size() + u.size());
    auto a = w.begin(), b = u.begin();
    while (a != w.end() || b != u.end()) {
        if (b == u.end() || (a != w.end() && a->pos < b->pos)) out.push_back(*a++);
        else if (a == w.end() || b->pos < a->pos) out.push_back(*b++);
        else throw Error(Errc::domain_overlap, std::to_string(a->pos));
    }
    return Word(w.kind(), std::move(out));
}

bool rel_r1(const Word& w, const Word& u) {
    bool below = false, above = false;
    for (const Entry& e : u) {
        if (e.pos < w.min_pos()) below = true;
        else if (e.pos > w.max_pos()) above = true;
        else return false;
    }
    return below && above;
}

bool rel_r2(const Word& w, const Word& u) { return w.max_pos() < u.min_pos(); }

std::string Substitution::str() const {
    switch (kind_) {
    case Kind::var: return "VAR";
    case Kind::one: return "(" + std::to_string(p_) + ")";
    case Kind::two: return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    }
    return "?";
}

namespace {

void check_letter(Letter v, std::int64_t bound, const char* which) {
    if (v < 1 || v > bound)
        throw Error(Errc::substitution_out_of_bound,
                    std::string(which) + " = " + std::to_string(v) + " not in 1.." + std::to_string(bound));
}

}  // namespace

Word substitute(const Word& w, const Substitution& sub, const DominationVector& k) {
    if (!w.is_variable()) throw Error(Errc::not_variable, w.str());
    if (sub.is_var()) return w;
    if (w.kind() != k.kind()) throw Error(Errc::kind_mismatch, "word kind differs from domination kind");
    if (sub.kind() == Substitution::Kind::two) {
        if (w.kind() != WordKind::two_sided) throw Error(Errc::kind_mismatch, "(p,q) substitution on a one-sided word");
        if (!w.is_zero_class()) throw Error(Errc::not_zero_class, w.str());
        check_letter(sub.p(), k.at(*w.min_positive()), "p");
        check_letter(sub.q(), k.at(*w.max_negative()), "q");
    } else {
        if (w.kind() != WordKind::one_sided) throw Error(Errc::kind_mismatch, "(p) substitution on a two-sided word");
        check_letter(sub.p(), k.at(w.min_pos()), "p");
    }
    std::vector<Entry> out(w.entries());
    for (Entry& e : out) {
        if (!e.is_variable()) continue;
        e.letter = e.pos > 0 ? sub.p() : sub.q();
        if (e.letter > k.at(e.pos))
            throw Error(Errc::substitution_out_of_bound, "letter exceeds bound at " + std::to_string(e.pos));
    }
    return Word(w.kind(), std::move(out));
}

Position min_index(const Word& w) {
    if (w.kind() == WordKind::one_sided) return w.min_pos();
    auto neg = w.max_negative();
    auto pos = w.min_positive();
    if (!neg || !pos) throw Error(Errc::one_sided_domain, w.str());
    return std::min(-*neg, *pos);
}

}  // namespace lwd
