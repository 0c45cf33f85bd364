#pragma once

#include "lwd/domination.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lwd {

using Position = std::int64_t;
using Letter = std::int64_t;

// Letter value reserved for the variable symbol. A letter v at a negative
// position stands for the negative-side letter of index v.
inline constexpr Letter kVariable = 0;

struct Entry {
    Position pos;
    Letter letter;

    bool is_variable() const { return letter == kVariable; }
    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

enum class WordClass { constant, variable, zero_class };

// Finite nonempty located word, entries strictly sorted by position.
// Letter bounds depend on a DominationVector and are checked by validate_word.
class Word {
public:
    Word(WordKind kind, std::vector<Entry> entries);

    WordKind kind() const { return kind_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    Position min_pos() const { return entries_.front().pos; }
    Position max_pos() const { return entries_.back().pos; }
    std::optional<Position> max_negative() const;
    std::optional<Position> min_positive() const;
    std::optional<Letter> at(Position n) const;
    bool contains(Position n) const { return at(n).has_value(); }

    bool is_variable() const;
    bool is_constant() const { return !is_variable(); }
    bool is_zero_class() const;
    WordClass classify() const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    WordKind kind_;
    std::vector<Entry> entries_;
};

void check_bounds(const Word& w, const DominationVector& k);
Word validate_word(std::vector<Entry> raw, const DominationVector& k);

Word concat(const Word& w, const Word& u);
bool disjoint(const Word& w, const Word& u);
bool rel_r1(const Word& w, const Word& u);
bool rel_r2(const Word& w, const Word& u);

class Substitution {
public:
    enum class Kind { var, one, two };

    static Substitution var() { return Substitution(Kind::var, 0, 0); }
    static Substitution one(Letter p) { return Substitution(Kind::one, p, 0); }
    static Substitution two(Letter p, Letter q) { return Substitution(Kind::two, p, q); }

    Kind kind() const { return kind_; }
    bool is_var() const { return kind_ == Kind::var; }
    Letter p() const { return p_; }
    Letter q() const { return q_; }
    std::string str() const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    Substitution(Kind kind, Letter p, Letter q) : kind_(kind), p_(p), q_(q) {}
    Kind kind_;
    Letter p_;
    Letter q_;
};

Word substitute(const Word& w, const Substitution& sub, const DominationVector& k);

// Convergence index: min(-max dom-, min dom+) for two-sided words, min dom otherwise.
Position min_index(const Word& w);

}  // namespace lwd
