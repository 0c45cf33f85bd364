#include "lwd/json_io.hpp"

#include "lwd/error.hpp"

#include <cstdio>

namespace lwd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::config, what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

WordKind kind_from_string(const std::string& s) {
    if (s == "two-sided") return WordKind::two_sided;
    if (s == "one-sided") return WordKind::one_sided;
    bad("unknown word kind '" + s + "'");
}

}  // namespace

json to_json(const SequenceRule& r) {
    json tail;
    switch (r.form()) {
    case SequenceRule::Form::constant: tail = {{"rule", "constant"}, {"params", {r.b()}}}; break;
    case SequenceRule::Form::abs: tail = {{"rule", "abs"}, {"params", json::array()}}; break;
    case SequenceRule::Form::abs_plus_one: tail = {{"rule", "abs_plus_one"}, {"params", json::array()}}; break;
    case SequenceRule::Form::affine: tail = {{"rule", "affine"}, {"params", {r.a(), r.b()}}}; break;
    case SequenceRule::Form::identity: tail = {{"rule", "identity"}, {"params", json::array()}}; break;
    }
    if (!r.has_table()) return tail;
    json entries = json::array();
    for (const auto& [n, v] : r.entries()) entries.push_back({n, v});
    return {{"rule", "table"}, {"params", entries}, {"tail", tail}};
}

SequenceRule rule_from_json(const json& j) {
    const std::string name = need(j, "rule").get<std::string>();
    const json params = j.value("params", json::array());
    if (!params.is_array()) bad("rule params must be an array");
    auto param = [&](std::size_t i) {
        if (params.size() <= i) bad("rule '" + name + "' needs " + std::to_string(i + 1) + " params");
        return as_int(params[i], "rule param");
    };
    if (name == "constant") return SequenceRule::constant(param(0));
    if (name == "abs") return SequenceRule::abs();
    if (name == "abs_plus_one") return SequenceRule::abs_plus_one();
    if (name == "affine") return SequenceRule::affine(param(0), param(1));
    if (name == "identity") return SequenceRule::identity();
    if (name == "table") {
        std::map<std::int64_t, std::int64_t> entries;
        for (const json& e : params) {
            if (!e.is_array() || e.size() != 2) bad("table entries are [position, value] pairs");
            entries[as_int(e[0], "table position")] = as_int(e[1], "table value");
        }
        return SequenceRule::table(std::move(entries), rule_from_json(need(j, "tail")));
    }
    bad("unknown rule '" + name + "'");
}

json to_json(const DominationVector& k) {
    json j = to_json(k.rule());
    j["kind"] = kind_name(k.kind());
    return j;
}

DominationVector domination_from_json(const json& j, WordKind default_kind) {
    WordKind kind = j.contains("kind") ? kind_from_string(j.at("kind").get<std::string>()) : default_kind;
    return DominationVector(kind, rule_from_json(j));
}

json to_json(const Word& w) {
    json entries = json::object();
    for (const Entry& e : w) {
        if (e.is_variable()) entries[std::to_string(e.pos)] = "v";
        else entries[std::to_string(e.pos)] = e.letter;
    }
    return {{"kind", kind_name(w.kind())}, {"entries", entries}};
}

Word word_from_json(const json& j, std::optional<WordKind> default_kind) {
    const json& entries = need(j, "entries");
    if (!entries.is_object()) bad("word entries must be an object");
    WordKind kind;
    if (j.contains("kind")) kind = kind_from_string(j.at("kind").get<std::string>());
    else if (default_kind) kind = *default_kind;
    else bad("word kind missing");
    std::vector<Entry> out;
    for (const auto& [key, val] : entries.items()) {
        std::size_t used = 0;
        long long pos = 0;
        try {
            pos = std::stoll(key, &used);
        } catch (const std::exception&) {
            bad("bad position '" + key + "'");
        }
        if (used != key.size() || std::to_string(pos) != key) bad("bad position '" + key + "'");
        if (val.is_string()) {
            if (val.get<std::string>() != "v") bad("unknown symbol at " + key);
            out.push_back({pos, kVariable});
        } else {
            Letter v = as_int(val, "letter");
            if (v < 1) throw Error(Errc::letter_out_of_bound, "letter " + std::to_string(v) + " at " + key);
            out.push_back({pos, v});
        }
    }
    if (out.empty()) throw Error(Errc::empty_domain, "word has no entries");
    return Word(kind, std::move(out));
}

Word word_from_json(const json& j, const DominationVector& k) {
    Word w = word_from_json(j, k.kind());
    check_bounds(w, k);
    return w;
}

json to_json(const Substitution& s) {
    switch (s.kind()) {
    case Substitution::Kind::var: return "VAR";
    case Substitution::Kind::one: return json::array({s.p()});
    case Substitution::Kind::two: return json::array({s.p(), s.q()});
    }
    return nullptr;
}

Substitution substitution_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "VAR") return Substitution::var();
    if (j.is_array() && j.size() == 1) return Substitution::one(as_int(j[0], "p"));
    if (j.is_array() && j.size() == 2) return Substitution::two(as_int(j[0], "p"), as_int(j[1], "q"));
    bad("substitution must be \"VAR\", [p] or [p,q]");
}

json to_json(const ExtractionPlan& p) {
    json out = json::array();
    for (const Pick& pick : p.picks) out.push_back({pick.index, to_json(pick.sub)});
    return out;
}

ExtractionPlan plan_from_json(const json& j) {
    if (!j.is_array()) bad("plan must be an array");
    ExtractionPlan plan;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2) bad("plan picks are [index, substitution]");
        std::int64_t idx = as_int(e[0], "pick index");
        if (idx < 1) throw Error(Errc::plan_index_out_of_range, "pick index " + std::to_string(idx));
        plan.picks.push_back({static_cast<std::size_t>(idx), substitution_from_json(e[1])});
    }
    return plan;
}

json to_json(const WordSequence& s) {
    json terms = json::array();
    for (const Word& w : s.terms()) terms.push_back(to_json(w));
    return {{"rule", "explicit"}, {"domination", to_json(s.domination())}, {"terms", terms}};
}

WordSequence sequence_from_json(const json& j) {
    DominationVector k = domination_from_json(need(j, "domination"));
    std::string rule = j.value("rule", std::string(j.contains("terms") ? "explicit" : "diagonal"));
    if (rule == "explicit") {
        const json& terms = need(j, "terms");
        if (!terms.is_array()) bad("terms must be an array");
        std::vector<Word> out;
        for (const json& t : terms) out.push_back(word_from_json(t, k));
        return WordSequence(k, std::move(out));
    }
    const std::int64_t length = as_int(need(j, "length"), "length");
    if (length < 0) bad("length must be nonnegative");
    if (rule == "diagonal") return diagonal_sequence(k, static_cast<std::size_t>(length));
    if (rule == "blocks") {
        const std::int64_t width = as_int(need(j, "width"), "width");
        if (width < 1) bad("width must be positive");
        std::vector<Letter> pattern;
        if (j.contains("pattern")) {
            for (const json& s : j.at("pattern")) {
                if (s.is_string() && s.get<std::string>() == "v") pattern.push_back(kVariable);
                else pattern.push_back(as_int(s, "pattern letter"));
            }
        }
        return block_sequence(k, static_cast<std::size_t>(length), static_cast<std::size_t>(width), pattern);
    }
    bad("unknown sequence rule '" + rule + "'");
}

std::string canonical(const json& j) { return j.dump(); }

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace lwd
