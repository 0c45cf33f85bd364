#include "lwd/config.hpp"

#include "lwd/error.hpp"

namespace lwd {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::config, what + " needs '" + key + "'");
    return j.at(key);
}

std::string kind_of(const json& j, const std::string& what) {
    const json& k = field(j, "kind", what);
    if (!k.is_string()) throw Error(Errc::config, what + " 'kind' must be a string");
    return k.get<std::string>();
}

Point point_field(const json& j, const MetricSpace& space, std::initializer_list<const char*> keys, const std::string& what) {
    for (const char* key : keys)
        if (j.contains(key)) return space.point_from_json(j.at(key));
    throw Error(Errc::config, what + " needs '" + *keys.begin() + "'");
}

std::shared_ptr<const CircleSpace> as_circle(const SpacePtr& space, const std::string& what) {
    auto circle = std::dynamic_pointer_cast<const CircleSpace>(space);
    if (!circle) throw Error(Errc::config, what + " needs a circle space");
    return circle;
}

SystemPtr build_system(const json& j) {
    const std::string kind = kind_of(j, "system");
    if (kind == "product") {
        std::vector<SystemPtr> parts;
        for (const json& c : field(j, "components", "product system")) parts.push_back(build_system(c));
        return std::make_shared<ProductSystem>(std::move(parts));
    }
    if (kind == "hyperspace_lift") return std::make_shared<HyperspaceSystem>(build_system(field(j, "base", "hyperspace_lift")));

    const SpacePtr space = space_from_json(field(j, "space", kind));
    if (kind == "codec_rotation") {
        const Codec codec = codec_from_json(field(j, "codec", kind));
        return std::make_shared<CodecRotationSystem>(space, codec, point_field(j, *space, {"angle", "step"}, kind));
    }
    const DominationVector k = domination_from_json(field(j, "domination", kind));
    const SequenceRule weights = j.contains("weights") ? rule_from_json(j.at("weights")) : SequenceRule::constant(1);
    if (kind == "single_map")
        return std::make_shared<SingleMapSystem>(space, k, map_from_json(field(j, "map", kind), *space), weights);
    if (kind == "bi_sequence")
        return std::make_shared<BiSequenceSystem>(space, k, map_from_json(field(j, "positive_map", kind), *space),
                                                  map_from_json(field(j, "negative_map", kind), *space), weights);
    if (kind == "semigroup") {
        const SemigroupTable table = SemigroupTable::from_json(field(j, "table", kind));
        std::vector<Point> gens;
        for (const json& g : field(j, "generators", kind)) gens.push_back(space->point_from_json(g));
        return std::make_shared<SemigroupSystem>(space, k, table, std::move(gens));
    }
    throw Error(Errc::config, "unknown system kind '" + kind + "'");
}

}  // namespace

MapSpec map_from_json(const json& j, const MetricSpace& space) {
    const std::string kind = kind_of(j, "map");
    if (kind == "identity") return MapSpec::identity();
    if (kind == "rotation" || kind == "translation" || kind == "shift")
        return MapSpec::translation(point_field(j, space, {"angle", "step"}, kind));
    if (kind == "doubling") {
        if (!dynamic_cast<const CircleSpace*>(&space)) throw Error(Errc::config, "doubling needs a circle space");
        return MapSpec::doubling();
    }
    throw Error(Errc::config, "unknown map kind '" + kind + "'");
}

SystemPtr system_from_json(const json& j) {
    try {
        return build_system(j);
    } catch (const json::exception& e) {
        throw Error(Errc::config, e.what());
    }
}

Net net_from_json(const json& j, const SpacePtr& space, const SystemPtr& sys) {
    try {
        const std::string kind = kind_of(j, "net");
        if (kind == "orbit") {
            if (!sys) throw Error(Errc::config, "orbit net needs a system");
            return Net::orbit(sys, point_field(j, sys->space(), {"x", "point"}, kind));
        }
        if (kind == "decoded")
            return Net::decoded(codec_from_json(field(j, "codec", kind)), as_circle(space, kind),
                                point_field(j, *space, {"angle", "step"}, kind));
        if (kind == "constant") return Net::constant(point_field(j, *space, {"point", "x"}, kind));
        if (kind == "index_reciprocal") return Net::index_reciprocal(as_circle(space, kind));
        if (kind == "table") {
            std::map<Word, Point> entries;
            for (const json& row : field(j, "entries", kind)) entries.emplace(word_from_json(row.at(0)), space->point_from_json(row.at(1)));
            std::optional<Point> fallback;
            if (j.contains("fallback")) fallback = space->point_from_json(j.at("fallback"));
            return Net::table(std::move(entries), std::move(fallback));
        }
        throw Error(Errc::config, "unknown net kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw Error(Errc::config, e.what());
    }
}

SearchBudget budget_from_json(const json& j, SearchBudget b) {
    if (j.is_null()) return b;
    if (!j.is_object()) throw Error(Errc::config, "budget must be an object");
    try {
        for (const auto& [key, v] : j.items()) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw Error(Errc::config, "budget field '" + key + "' must be a nonnegative integer");
            if (key == "window") b.window = v.get<Position>();
            else if (key == "max_depth") b.max_depth = v.get<std::size_t>();
            else if (key == "max_picks") b.max_picks = v.get<std::size_t>();
            else if (key == "max_candidates") b.max_candidates = v.get<std::uint64_t>();
            else if (key == "seed") b.seed = v.get<std::uint64_t>();
            else throw Error(Errc::config, "unknown budget field '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw Error(Errc::config, e.what());
    }
    return b;
}

json to_json(const SearchBudget& b) {
    return {{"window", b.window}, {"max_depth", b.max_depth}, {"max_picks", b.max_picks},
            {"max_candidates", b.max_candidates}, {"seed", b.seed}};
}

}  // namespace lwd
