#pragma once

#include "lwd/dynamics.hpp"
#include "lwd/json_io.hpp"
#include "lwd/rule.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lwd {

// Commutative semigroup carriers: (Z,+), (Q,+), Z/m, Z^d.
class Carrier {
public:
    enum class Kind { integers, rationals, cyclic, vectors };
    using Element = std::vector<Rational>;

    static Carrier integers() { return Carrier(Kind::integers, 1, 0); }
    static Carrier rationals() { return Carrier(Kind::rationals, 1, 0); }
    static Carrier cyclic(std::int64_t m);
    static Carrier vectors(std::size_t dim);

    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    std::int64_t modulus() const { return modulus_; }
    std::string name() const;

    Element zero() const { return Element(dim_, Rational(0)); }
    Element make(Element e) const;  // validates and normalizes
    Element add(const Element& a, const Element& b) const;
    Element scale(const Element& a, std::int64_t c) const;

    json element_to_json(const Element& e) const;
    Element element_from_json(const json& j) const;
    json to_json() const;
    static Carrier from_json(const json& j);

    friend bool operator==(const Carrier&, const Carrier&) = default;

private:
    Carrier(Kind kind, std::size_t dim, std::int64_t modulus) : kind_(kind), dim_(dim), modulus_(modulus) {}
    Kind kind_;
    std::size_t dim_;
    std::int64_t modulus_;
};

using Element = Carrier::Element;

// The elements y_(l,n) for signed letters l and positions n. A negative-side letter v of a
// word stands for the signed letter -v.
class SemigroupTable {
public:
    // y_(l,n) = l in a one-dimensional carrier.
    static SemigroupTable letter_value(Carrier carrier);
    // y_(l,n) = p(l) y_n for l > 0 and q(-l) y_n for l < 0.
    static SemigroupTable product_form(Carrier carrier, std::map<Position, Element> y, std::optional<SequenceRule> y_rule,
                                       SequenceRule p, SequenceRule q);
    // Explicit entries keyed by (signed letter, position).
    static SemigroupTable explicit_table(Carrier carrier, std::map<std::pair<std::int64_t, Position>, Element> entries);

    const Carrier& carrier() const { return carrier_; }
    bool is_product_form() const { return form_ == Form::product; }

    Element y(std::int64_t signed_letter, Position n) const;
    Element y_base(Position n) const;  // product form only
    std::int64_t p(std::int64_t i) const { return p_(i); }
    std::int64_t q(std::int64_t j) const { return q_(j); }

    json to_json() const;
    static SemigroupTable from_json(const json& j);

private:
    enum class Form { letter, product, table };
    SemigroupTable(Carrier c, Form f) : carrier_(std::move(c)), form_(f) {}

    Carrier carrier_;
    Form form_;
    std::map<Position, Element> y_;
    std::optional<SequenceRule> y_rule_;
    SequenceRule p_ = SequenceRule::identity();
    SequenceRule q_ = SequenceRule::identity();
    std::map<std::pair<std::int64_t, Position>, Element> entries_;
};

std::int64_t signed_letter(Position n, Letter v);

// phi(w) = sum of y_(w_n, n) over a constant word.
Element semigroup_phi(const SemigroupTable& table, const Word& w);
// s(i, j) = phi(w(i, j)) for a variable word.
Element semigroup_phi(const SemigroupTable& table, const Word& w, const Substitution& sub, const DominationVector& k);

// Product-form split s(i, j) = a + p(i) b + q(j) c.
struct Decomposition {
    Element a;  // constant positions
    Element b;  // positive variable positions
    Element c;  // negative variable positions
};
Decomposition decompose(const SemigroupTable& table, const Word& w);

// T^w = translation by the image of phi(w) under s -> sum_i s_i g_i on a group space.
class SemigroupSystem final : public TranslationSystem {
public:
    SemigroupSystem(SpacePtr space, DominationVector k, SemigroupTable table, std::vector<Point> generators);

    const SemigroupTable& table() const { return table_; }
    Point act(const Element& s) const;
    std::string describe() const override;
    Point increment(Position n, Letter v) const override;

private:
    SemigroupTable table_;
    std::vector<Point> gens_;
};

struct SemigroupRow {
    std::size_t term;  // 1-based index in the extracted prefix
    Word word;
    std::optional<Decomposition> split;
    std::size_t substitutions = 0;  // (i, j) pairs re-verified
};

struct SemigroupReport {
    RecurrenceResult recurrence;
    std::vector<SemigroupRow> rows;
    bool verified = false;
    double worst_return = 0;  // max d(x0 + act(s(i,j)), x0) over rows and substitutions
};

SemigroupReport semigroup_recurrence(std::shared_ptr<const SemigroupSystem> sys, const WordSequence& base,
                                     const Point& x, std::size_t levels, const SearchBudget& budget);

// Re-verifies the rows of a report against a prefix: every s(i, j) equals the split and
// phi of the substituted word, and the return distance is recomputed.
bool verify_semigroup_rows(const SemigroupSystem& sys, const WordSequence& prefix, const Point& x0,
                           std::vector<SemigroupRow>& rows, double& worst_return);

}  // namespace lwd
