#include "lwd/semigroup.hpp"

#include "lwd/error.hpp"

#include <algorithm>

namespace lwd {

Carrier Carrier::cyclic(std::int64_t m) {
    if (m < 1) throw Error(Errc::invalid_argument, "cyclic modulus must be positive");
    return Carrier(Kind::cyclic, 1, m);
}

Carrier Carrier::vectors(std::size_t dim) {
    if (dim < 1) throw Error(Errc::invalid_argument, "vector dimension must be positive");
    return Carrier(Kind::vectors, dim, 0);
}

std::string Carrier::name() const {
    switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::cyclic: return "Z/" + std::to_string(modulus_);
    case Kind::vectors: return "Z^" + std::to_string(dim_);
    }
    return "?";
}

Element Carrier::make(Element e) const {
    if (e.size() != dim_)
        throw Error(Errc::invalid_argument, name() + " element needs " + std::to_string(dim_) + " coordinates");
    for (Rational& r : e) {
        if (kind_ != Kind::rationals && !r.is_integer())
            throw Error(Errc::invalid_argument, name() + " element " + r.str() + " is not an integer");
        if (kind_ == Kind::cyclic) r = Rational(floor_mod(r.num(), modulus_));
    }
    return e;
}

Element Carrier::add(const Element& a, const Element& b) const {
    Element out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = a[i] + b[i];
    return make(std::move(out));
}

Element Carrier::scale(const Element& a, std::int64_t c) const {
    Element out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = a[i] * Rational(c);
    return make(std::move(out));
}

namespace {

json rational_json(const Rational& r) {
    if (r.is_integer() && r.num() >= INT64_MIN && r.num() <= INT64_MAX) return json(static_cast<std::int64_t>(r.num()));
    return json(r.str());
}

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw Error(Errc::config, "expected an integer or a \"p/q\" string");
}

}  // namespace

json Carrier::element_to_json(const Element& e) const {
    if (kind_ != Kind::vectors) return rational_json(e.at(0));
    json arr = json::array();
    for (const Rational& r : e) arr.push_back(rational_json(r));
    return arr;
}

Element Carrier::element_from_json(const json& j) const {
    Element e;
    if (j.is_array())
        for (const json& x : j) e.push_back(rational_from(x));
    else
        e.push_back(rational_from(j));
    return make(std::move(e));
}

json Carrier::to_json() const {
    switch (kind_) {
    case Kind::integers: return {{"kind", "integers"}};
    case Kind::rationals: return {{"kind", "rationals"}};
    case Kind::cyclic: return {{"kind", "cyclic"}, {"modulus", modulus_}};
    case Kind::vectors: return {{"kind", "vectors"}, {"dim", dim_}};
    }
    return {};
}

Carrier Carrier::from_json(const json& j) {
    const std::string kind = j.value("kind", "");
    if (kind == "integers") return integers();
    if (kind == "rationals") return rationals();
    if (kind == "cyclic") return cyclic(j.at("modulus").get<std::int64_t>());
    if (kind == "vectors") return vectors(j.at("dim").get<std::size_t>());
    throw Error(Errc::config, "unknown carrier kind '" + kind + "'");
}

SemigroupTable SemigroupTable::letter_value(Carrier carrier) {
    if (carrier.dim() != 1) throw Error(Errc::invalid_argument, "letter-valued table needs a one-dimensional carrier");
    return SemigroupTable(std::move(carrier), Form::letter);
}

SemigroupTable SemigroupTable::product_form(Carrier carrier, std::map<Position, Element> y,
                                            std::optional<SequenceRule> y_rule, SequenceRule p, SequenceRule q) {
    SemigroupTable t(std::move(carrier), Form::product);
    for (auto& [n, e] : y) {
        if (n == 0) throw Error(Errc::zero_position, "y_0");
        t.y_[n] = t.carrier_.make(std::move(e));
    }
    t.y_rule_ = std::move(y_rule);
    t.p_ = std::move(p);
    t.q_ = std::move(q);
    return t;
}

SemigroupTable SemigroupTable::explicit_table(Carrier carrier,
                                              std::map<std::pair<std::int64_t, Position>, Element> entries) {
    SemigroupTable t(std::move(carrier), Form::table);
    for (auto& [key, e] : entries) t.entries_[key] = t.carrier_.make(std::move(e));
    return t;
}

Element SemigroupTable::y_base(Position n) const {
    if (form_ != Form::product) throw Error(Errc::invalid_argument, "y_n exists only in product form");
    if (auto it = y_.find(n); it != y_.end()) return it->second;
    if (!y_rule_) throw Error(Errc::missing_table_entry, "y_" + std::to_string(n));
    return carrier_.make(Element(carrier_.dim(), Rational((*y_rule_)(n))));
}

Element SemigroupTable::y(std::int64_t l, Position n) const {
    if (l == 0 || n == 0) throw Error(Errc::zero_position, "y_(" + std::to_string(l) + "," + std::to_string(n) + ")");
    switch (form_) {
    case Form::letter: return carrier_.make({Rational(l)});
    case Form::product: return carrier_.scale(y_base(n), l > 0 ? p_(l) : q_(-l));
    case Form::table:
        if (auto it = entries_.find({l, n}); it != entries_.end()) return it->second;
        throw Error(Errc::missing_table_entry, "y_(" + std::to_string(l) + "," + std::to_string(n) + ")");
    }
    return carrier_.zero();
}

json SemigroupTable::to_json() const {
    json j{{"carrier", carrier_.to_json()}};
    switch (form_) {
    case Form::letter: j["form"] = "letter"; break;
    case Form::product: {
        j["form"] = "product";
        json ys = json::array();
        for (const auto& [n, e] : y_) ys.push_back(json::array({n, carrier_.element_to_json(e)}));
        j["y"] = ys;
        if (y_rule_) j["y_rule"] = lwd::to_json(*y_rule_);
        j["p"] = lwd::to_json(p_);
        j["q"] = lwd::to_json(q_);
        break;
    }
    case Form::table: {
        j["form"] = "table";
        json es = json::array();
        for (const auto& [key, e] : entries_) es.push_back(json::array({key.first, key.second, carrier_.element_to_json(e)}));
        j["entries"] = es;
        break;
    }
    }
    return j;
}

SemigroupTable SemigroupTable::from_json(const json& j) {
    const Carrier carrier = Carrier::from_json(j.at("carrier"));
    const std::string form = j.value("form", "letter");
    if (form == "letter") return letter_value(carrier);
    if (form == "product") {
        std::map<Position, Element> y;
        for (const json& row : j.value("y", json::array())) y[row.at(0).get<Position>()] = carrier.element_from_json(row.at(1));
        std::optional<SequenceRule> y_rule;
        if (j.contains("y_rule")) y_rule = rule_from_json(j.at("y_rule"));
        const SequenceRule p = j.contains("p") ? rule_from_json(j.at("p")) : SequenceRule::identity();
        const SequenceRule q = j.contains("q") ? rule_from_json(j.at("q")) : SequenceRule::identity();
        return product_form(carrier, std::move(y), std::move(y_rule), p, q);
    }
    if (form == "table") {
        std::map<std::pair<std::int64_t, Position>, Element> entries;
        for (const json& row : j.at("entries"))
            entries[{row.at(0).get<std::int64_t>(), row.at(1).get<Position>()}] = carrier.element_from_json(row.at(2));
        return explicit_table(carrier, std::move(entries));
    }
    throw Error(Errc::config, "unknown semigroup table form '" + form + "'");
}

std::int64_t signed_letter(Position n, Letter v) {
    return n > 0 ? static_cast<std::int64_t>(v) : -static_cast<std::int64_t>(v);
}

Element semigroup_phi(const SemigroupTable& table, const Word& w) {
    const Carrier& c = table.carrier();
    Element s = c.zero();
    for (const Entry& e : w.entries()) {
        if (e.letter == kVariable) throw Error(Errc::invalid_argument, "phi of a variable word needs a substitution");
        s = c.add(s, table.y(signed_letter(e.pos, e.letter), e.pos));
    }
    return s;
}

Element semigroup_phi(const SemigroupTable& table, const Word& w, const Substitution& sub, const DominationVector& k) {
    return semigroup_phi(table, substitute(w, sub, k));
}

Decomposition decompose(const SemigroupTable& table, const Word& w) {
    const Carrier& c = table.carrier();
    Decomposition d{c.zero(), c.zero(), c.zero()};
    for (const Entry& e : w.entries()) {
        if (e.letter != kVariable)
            d.a = c.add(d.a, table.y(signed_letter(e.pos, e.letter), e.pos));
        else if (e.pos > 0)
            d.b = c.add(d.b, table.y_base(e.pos));
        else
            d.c = c.add(d.c, table.y_base(e.pos));
    }
    return d;
}

SemigroupSystem::SemigroupSystem(SpacePtr space, DominationVector k, SemigroupTable table, std::vector<Point> generators)
    : TranslationSystem(std::move(space), std::move(k)), table_(std::move(table)), gens_(std::move(generators)) {
    const MetricSpace& X = this->space();
    if (!X.is_group()) throw Error(Errc::invalid_argument, X.name() + " has no group structure");
    if (gens_.size() != table_.carrier().dim())
        throw Error(Errc::invalid_argument, "need one generator per carrier coordinate");
    for (const Point& g : gens_) {
        X.validate(g);
        if (table_.carrier().kind() == Carrier::Kind::cyclic &&
            !(X.multiple(g, Rational(table_.carrier().modulus())) == X.zero()))
            throw Error(Errc::invalid_argument, "generator order does not divide the carrier modulus");
    }
}

Point SemigroupSystem::act(const Element& s) const {
    const MetricSpace& X = space();
    Point out = X.zero();
    for (std::size_t i = 0; i < gens_.size(); ++i) out = X.add(out, X.multiple(gens_[i], s.at(i)));
    return out;
}

std::string SemigroupSystem::describe() const {
    return "semigroup(" + table_.carrier().name() + ") on " + space().name();
}

Point SemigroupSystem::increment(Position n, Letter v) const { return act(table_.y(signed_letter(n, v), n)); }

bool verify_semigroup_rows(const SemigroupSystem& sys, const WordSequence& prefix, const Point& x0,
                           std::vector<SemigroupRow>& rows, double& worst_return) {
    const SemigroupTable& table = sys.table();
    const Carrier& c = table.carrier();
    const MetricSpace& X = sys.space();
    const double tol = sys.exact() ? 0.0 : 1e-9;
    bool ok = true;
    worst_return = 0;
    for (SemigroupRow& row : rows) {
        if (row.term < 1 || row.term > prefix.size() || !(prefix.term(row.term) == row.word)) return false;
        if (table.is_product_form()) {
            const Decomposition d = decompose(table, row.word);
            if (row.split && !(row.split->a == d.a && row.split->b == d.b && row.split->c == d.c)) ok = false;
            row.split = d;
        }
        row.substitutions = 0;
        for (const Substitution& sub : substitution_choices(prefix, row.term)) {
            const Word wc = substitute(row.word, sub, prefix.domination());
            const Element s = semigroup_phi(table, wc);
            if (row.split) {
                Element lhs = c.add(row.split->a, c.scale(row.split->b, table.p(sub.p())));
                if (sub.kind() == Substitution::Kind::two) lhs = c.add(lhs, c.scale(row.split->c, table.q(sub.q())));
                if (!(lhs == s)) ok = false;
            }
            const Point moved = X.add(x0, sys.act(s));
            if (X.distance(moved, sys.apply(wc, x0)) > tol) ok = false;
            worst_return = std::max(worst_return, X.distance(moved, x0));
            ++row.substitutions;
        }
    }
    return ok;
}

SemigroupReport semigroup_recurrence(std::shared_ptr<const SemigroupSystem> sys, const WordSequence& base,
                                     const Point& x, std::size_t levels, const SearchBudget& budget) {
    SemigroupReport rep;
    rep.recurrence = find_recurrent_point(sys, base, x, levels, budget);
    if (rep.recurrence.status != SearchStatus::found) return rep;
    const WordSequence& prefix = *rep.recurrence.prefix;
    for (std::size_t t = 1; t <= prefix.size(); ++t) rep.rows.push_back({t, prefix.term(t), std::nullopt, 0});
    rep.verified = verify_semigroup_rows(*sys, prefix, *rep.recurrence.x0, rep.rows, rep.worst_return);
    return rep;
}

}  // namespace lwd
