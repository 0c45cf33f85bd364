#include "lwd/coloring.hpp"

#include "lwd/error.hpp"

namespace lwd {

namespace {

void check_arity(int arity) {
    if (arity < 1 || arity > kMaxColors)
        throw Error(Errc::config, "color count " + std::to_string(arity) + " outside 1.." + std::to_string(kMaxColors));
}

int mod1(const BigInt& v, int arity) { return floor_mod(v, BigInt(arity)).convert_to<int>() + 1; }

}  // namespace

Coloring::Coloring(int arity, Fn fn, json spec) : arity_(arity), fn_(std::move(fn)), spec_(std::move(spec)) {
    check_arity(arity);
}

int Coloring::operator()(const Word& w) const {
    const int c = fn_(w);
    if (c < 1 || c > arity_)
        throw Error(Errc::invalid_argument, "color " + std::to_string(c) + " of " + w.str() + " out of range");
    return c;
}

Coloring Coloring::constant(int arity, int color) {
    return Coloring(arity, [color](const Word&) { return color; },
                    {{"rule", "constant"}, {"colors", arity}, {"color", color}});
}

Coloring Coloring::residue(const Codec& codec, int arity) {
    return Coloring(arity, [codec, arity](const Word& w) { return mod1(codec.decode(w).floor(), arity); },
                    {{"rule", "residue"}, {"colors", arity}, {"codec", to_json(codec)}});
}

Coloring Coloring::letter_sum(int arity) {
    return Coloring(arity,
                    [arity](const Word& w) {
                        BigInt s = 0;
                        for (const Entry& e : w) s += e.letter;
                        return mod1(s, arity);
                    },
                    {{"rule", "letter_sum"}, {"colors", arity}});
}

Coloring Coloring::domain_size(int arity) {
    return Coloring(arity, [arity](const Word& w) { return mod1(BigInt(w.size()), arity); },
                    {{"rule", "domain_size"}, {"colors", arity}});
}

Coloring Coloring::min_position(int arity) {
    return Coloring(arity, [arity](const Word& w) { return mod1(BigInt(std::llabs(w.min_pos())), arity); },
                    {{"rule", "min_position"}, {"colors", arity}});
}

Coloring Coloring::table(int arity, std::map<Word, int> entries, int default_color) {
    json rows = json::array();
    for (const auto& [w, c] : entries) {
        if (c < 1 || c > arity) throw Error(Errc::config, "table color out of range");
        rows.push_back({to_json(w), c});
    }
    json spec = {{"rule", "table"}, {"colors", arity}, {"entries", rows}, {"default", default_color}};
    return Coloring(
        arity,
        [entries = std::move(entries), default_color](const Word& w) {
            auto it = entries.find(w);
            if (it != entries.end()) return it->second;
            if (default_color == 0) throw Error(Errc::missing_table_entry, w.str());
            return default_color;
        },
        std::move(spec));
}

Coloring Coloring::from_json(const json& j) {
    if (!j.is_object() || !j.contains("rule")) throw Error(Errc::config, "coloring needs a 'rule'");
    const std::string rule = j.at("rule").get<std::string>();
    const int arity = j.value("colors", 1);
    check_arity(arity);
    if (rule == "constant") return constant(arity, j.value("color", 1));
    if (rule == "residue") return residue(codec_from_json(j.at("codec")), arity);
    if (rule == "letter_sum") return letter_sum(arity);
    if (rule == "domain_size") return domain_size(arity);
    if (rule == "min_position") return min_position(arity);
    if (rule == "table") {
        std::map<Word, int> entries;
        for (const json& row : j.at("entries")) {
            if (!row.is_array() || row.size() != 2) throw Error(Errc::config, "table rows are [word, color]");
            entries[word_from_json(row[0])] = row[1].get<int>();
        }
        return table(arity, std::move(entries), j.value("default", 0));
    }
    throw Error(Errc::config, "unknown coloring rule '" + rule + "'");
}

json to_json(const Codec& c) {
    switch (c.kind()) {
    case CodecKind::rational: return {{"name", "rational"}};
    case CodecKind::integer: return {{"name", "integer"}, {"radix", to_json(c.radix().radix().rule())}};
    case CodecKind::natural: return {{"name", "natural"}, {"base", c.base()}};
    }
    return nullptr;
}

Codec codec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("name")) throw Error(Errc::config, "codec needs a 'name'");
    const std::string name = j.at("name").get<std::string>();
    if (name == "rational") return Codec::rational();
    if (name == "integer") {
        SequenceRule radix = j.contains("radix") ? rule_from_json(j.at("radix")) : SequenceRule::abs_plus_one();
        return Codec::integer(MixedRadix(radix));
    }
    if (name == "natural") return Codec::natural(j.value("base", std::int64_t{10}));
    throw Error(Errc::config, "unknown codec '" + name + "'");
}

}  // namespace lwd
