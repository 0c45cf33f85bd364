#include "lwd/cli/cli.hpp"

#include "lwd/config.hpp"
#include "lwd/error.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace lwd::cli {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::verification_failure, what); }

const std::map<std::string, std::set<std::string>>& command_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"verify-partition", {"schema", "coloring", "domination", "mode", "sequence", "terms", "budget"}},
        {"find-recurrence", {"schema", "system", "x", "sequence", "levels", "budget", "schedule"}},
        {"multi-recurrence", {"schema", "systems", "x", "sequence", "levels", "budget", "intersection_radius"}},
        {"check-ip", {"schema", "space", "system", "net", "x0", "eps", "n0", "sequence", "depth"}},
        {"semigroup-run", {"schema", "system", "x", "sequence", "levels", "budget"}},
    };
    return keys;
}

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) throw Error(Errc::config, std::string("config needs '") + key + "'");
    return j.at(key);
}

void validate_config(const std::string& command, const json& config) {
    const auto it = command_keys().find(command);
    if (it == command_keys().end()) throw Error(Errc::config, "unknown command '" + command + "'");
    if (!config.is_object()) throw Error(Errc::config, "config must be a JSON object");
    if (config.value("schema", std::string()) != kConfigSchema)
        throw Error(Errc::config, std::string("config 'schema' must be \"") + kConfigSchema + "\"");
    for (const auto& [key, v] : config.items())
        if (!it->second.count(key)) throw Error(Errc::config, "unknown config field '" + key + "'");
}

std::size_t levels_of(const json& config) {
    const json& l = config.value("levels", json(6));
    if (!l.is_number_unsigned() || l.get<std::size_t>() < 1) throw Error(Errc::config, "'levels' must be a positive integer");
    return l.get<std::size_t>();
}

SearchBudget budget_of(const json& config, std::uint64_t seed) {
    SearchBudget b = budget_from_json(config.value("budget", json(nullptr)));
    b.seed = seed;
    return b;
}

json plans_to_json(const std::vector<ExtractionPlan>& plans) {
    json out = json::array();
    for (const auto& p : plans) out.push_back(to_json(p));
    return out;
}

std::vector<ExtractionPlan> verified_plans(const WordSequence& prefix, const WordSequence& base) {
    auto chk = is_extraction(prefix, base, prefix.size());
    if (!chk) fail("prefix is not an extraction of the base sequence");
    return chk.witnesses;
}

// Witness builders. Each takes the structural fields of a witness (prefix, x0, word, ...)
// and recomputes every derived field; certificates are checked by rebuilding and comparing.

json recurrence_witness(const WordSystem& sys, const WordSequence& base, const Point& x, const WordSequence& prefix,
                        const Point& x0) {
    RecurrenceResult r = evaluate_recurrence(sys, prefix, prefix.size(), x, x0);
    json rows = json::array();
    for (const auto& row : r.residuals) rows.push_back(json::array({row.depth, row.words, row.orbit, row.ret}));
    return {{"prefix", to_json(prefix)},
            {"plans", plans_to_json(verified_plans(prefix, base))},
            {"x0", sys.space().point_to_json(x0)},
            {"n0", r.n0},
            {"achieved", r.achieved},
            {"orbit_eps", r.orbit_eps},
            {"return_eps", r.return_eps},
            {"chain_bound", r.chain_bound},
            {"examined_words", r.examined_words},
            {"residuals", rows}};
}

json multi_witness(const std::vector<SystemPtr>& systems, const WordSequence& base, const WordSequence& prefix,
                   const Point& x0, std::optional<double> radius) {
    const MetricSpace& space = systems.front()->space();
    const auto per = diagonal_residuals(systems, prefix, prefix.size(), x0);
    std::vector<std::pair<std::size_t, double>> rows(prefix.size(), {0, 0.0});
    for (const auto& [plan, w] : constant_words(prefix, prefix.size())) {
        auto& row = rows[plan.picks.size() - 1];
        ++row.first;
        for (const auto& s : systems) row.second = std::max(row.second, space.distance(s->apply(w, x0), x0));
    }
    json residuals = json::array();
    for (std::size_t d = 0; d < rows.size(); ++d) residuals.push_back(json::array({d + 1, rows[d].first, rows[d].second}));
    json w{{"prefix", to_json(prefix)},
           {"plans", plans_to_json(verified_plans(prefix, base))},
           {"x0", space.point_to_json(x0)},
           {"per_system", per},
           {"achieved", *std::max_element(per.begin(), per.end())},
           {"residuals", residuals}};
    if (radius) {
        const IntersectionResult ir = intersection_check(systems, Ball{x0, *radius}, prefix, prefix.size(), x0);
        json ws = json::array();
        for (const auto& [word, p] : ir.witnesses)
            ws.push_back(json::array({to_json(word), p ? space.point_to_json(*p) : json(nullptr)}));
        w["intersection"] = {{"radius", *radius}, {"ok", ir.ok}, {"witnesses", ws}};
    }
    return w;
}

json element_json(const Carrier& c, const Element& e) { return c.element_to_json(e); }

json semigroup_witness(const SemigroupSystem& sys, const WordSequence& base, const Point& x, const WordSequence& prefix,
                       const Point& x0) {
    json w = recurrence_witness(sys, base, x, prefix, x0);
    std::vector<SemigroupRow> rows;
    for (std::size_t t = 1; t <= prefix.size(); ++t) rows.push_back({t, prefix.term(t), std::nullopt, 0});
    double worst = 0;
    if (!verify_semigroup_rows(sys, prefix, x0, rows, worst)) fail("semigroup decomposition does not match substitution");
    const Carrier& c = sys.table().carrier();
    json out = json::array();
    for (const auto& row : rows) {
        json r{{"term", row.term}, {"word", to_json(row.word)}, {"substitutions", row.substitutions}};
        if (row.split) {
            r["a"] = element_json(c, row.split->a);
            r["b"] = element_json(c, row.split->b);
            r["c"] = element_json(c, row.split->c);
        }
        out.push_back(r);
    }
    w["rows"] = out;
    w["worst_return"] = worst;
    return w;
}

json substitution_witness(const Coloring& col, const DominationVector& k, const Word& word) {
    check_bounds(word, k);
    if (!word.is_variable()) fail("witness word is not a variable word");
    if (word.kind() == WordKind::two_sided && !word.is_zero_class()) fail("witness word is not zero-class");
    const auto instances = all_substitutions(word, k);
    const int color = col(instances.front().second);
    json inst = json::array();
    for (const auto& [sub, w] : instances) {
        if (col(w) != color) fail("witness is not monochromatic");
        inst.push_back(json::array({to_json(sub), to_json(w)}));
    }
    return {{"word", to_json(word)}, {"color", color}, {"instances", inst}};
}

json extraction_witness(const Coloring& col, const WordSequence& base, const WordSequence& prefix, int color) {
    const auto plans = verified_plans(prefix, base);
    if (!verify_monochromatic(col, prefix, prefix.size(), color)) fail("extracted words are not monochromatic");
    return {{"prefix", to_json(prefix)}, {"plans", plans_to_json(plans)}, {"color", color}};
}

json limit_json(const LimitReport& r) {
    return {{"holds", r.holds},
            {"examined", r.examined},
            {"checked", r.checked},
            {"worst", r.worst},
            {"offender", r.offender ? to_json(*r.offender) : json(nullptr)}};
}

// Parsed pieces of a config shared by the run and check paths.
struct Setup {
    SystemPtr sys;
    std::vector<SystemPtr> systems;
    std::optional<WordSequence> base;
    Point x;
};

Setup recurrence_setup(const json& config) {
    Setup s;
    s.sys = system_from_json(need(config, "system"));
    s.base = sequence_from_json(need(config, "sequence"));
    s.x = s.sys->space().point_from_json(need(config, "x"));
    return s;
}

Setup multi_setup(const json& config) {
    Setup s;
    const json& js = need(config, "systems");
    if (!js.is_array() || js.empty()) throw Error(Errc::config, "'systems' must be a nonempty array");
    for (const json& j : js) s.systems.push_back(system_from_json(j));
    s.base = sequence_from_json(need(config, "sequence"));
    s.x = s.systems.front()->space().point_from_json(need(config, "x"));
    return s;
}

std::shared_ptr<const SemigroupSystem> semigroup_of(const SystemPtr& sys) {
    auto sg = std::dynamic_pointer_cast<const SemigroupSystem>(sys);
    if (!sg) throw Error(Errc::config, "semigroup-run needs a system of kind 'semigroup'");
    return sg;
}

std::optional<double> radius_of(const json& config) {
    if (!config.contains("intersection_radius")) return std::nullopt;
    const json& r = config.at("intersection_radius");
    if (!r.is_number() || r.get<double>() < 0) throw Error(Errc::config, "'intersection_radius' must be a nonnegative number");
    return r.get<double>();
}

json check_ip_witness(const json& config) {
    SystemPtr sys;
    SpacePtr space;
    if (config.contains("system")) {
        sys = system_from_json(config.at("system"));
        space = sys->space_ptr();
    }
    if (config.contains("space")) space = space_from_json(config.at("space"));
    if (!space) throw Error(Errc::config, "check-ip needs 'space' or 'system'");
    const Net net = net_from_json(need(config, "net"), space, sys);
    const WordSequence seq = sequence_from_json(need(config, "sequence"));
    const Point x0 = space->point_from_json(need(config, "x0"));
    const double eps = need(config, "eps").get<double>();
    const Position n0 = need(config, "n0").get<Position>();
    const std::size_t depth = config.value("depth", std::size_t{4});
    if (depth > seq.size()) throw Error(Errc::invalid_argument, "depth exceeds the sequence length");
    const IpReport r = uniform_ip_check(seq, net, *space, x0, eps, n0, depth);
    return {{"r_limit", limit_json(r.r_limit)},
            {"uniform_ip", limit_json(r.uniform_ip)},
            {"term_threshold", r.term_threshold},
            {"agree", r.agree()}};
}

json seal(json cert) {
    cert.erase("digest");
    cert["digest"] = certificate_digest(cert);
    return cert;
}

}  // namespace

bool is_search_command(const std::string& c) {
    return c == "verify-partition" || c == "find-recurrence" || c == "multi-recurrence" || c == "semigroup-run";
}

bool is_certified_command(const std::string& c) { return command_keys().count(c) > 0; }

std::string certificate_digest(const json& cert) {
    json body = cert;
    body.erase("digest");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical(body))));
    return buf;
}

json run_command(const std::string& command, json config, std::uint64_t seed) {
    validate_config(command, config);
    json witness = nullptr;
    json stats = json::object();
    bool found = false;
    try {
        if (command == "verify-partition") {
            const SearchBudget budget = budget_of(config, seed);
            config["budget"] = to_json(budget);
            config["budget"].erase("seed");
            const Coloring col = Coloring::from_json(need(config, "coloring"));
            const std::string mode = config.value("mode", std::string("substitutions"));
            if (mode == "substitutions") {
                const DominationVector k = domination_from_json(need(config, "domination"));
                const auto r = search_monochromatic_substitutions(col, k, budget);
                stats["examined"] = r.examined;
                if ((found = r.status == SearchStatus::found)) witness = substitution_witness(col, k, r.witness->word);
            } else if (mode == "extraction") {
                const WordSequence base = sequence_from_json(need(config, "sequence"));
                const std::size_t terms = config.value("terms", budget.max_depth);
                const auto r = search_monochromatic_extraction(col, base, terms, budget);
                stats["examined"] = r.examined;
                if ((found = r.status == SearchStatus::found))
                    witness = extraction_witness(col, base, r.witness->prefix, r.witness->color);
            } else {
                throw Error(Errc::config, "unknown mode '" + mode + "'");
            }
        } else if (command == "find-recurrence" || command == "semigroup-run") {
            const SearchBudget budget = budget_of(config, seed);
            config["budget"] = to_json(budget);
            config["budget"].erase("seed");
            const Setup s = recurrence_setup(config);
            std::vector<double> schedule;
            if (config.contains("schedule")) schedule = config.at("schedule").get<std::vector<double>>();
            if (command == "semigroup-run") {
                const auto sg = semigroup_of(s.sys);
                const SemigroupReport rep = semigroup_recurrence(sg, *s.base, s.x, levels_of(config), budget);
                stats["candidates"] = rep.recurrence.candidates;
                if ((found = rep.recurrence.status == SearchStatus::found))
                    witness = semigroup_witness(*sg, *s.base, s.x, *rep.recurrence.prefix, *rep.recurrence.x0);
            } else {
                const RecurrenceResult r = find_recurrent_point(s.sys, *s.base, s.x, levels_of(config), budget, schedule);
                stats["candidates"] = r.candidates;
                if ((found = r.status == SearchStatus::found))
                    witness = recurrence_witness(*s.sys, *s.base, s.x, *r.prefix, *r.x0);
            }
        } else if (command == "multi-recurrence") {
            const SearchBudget budget = budget_of(config, seed);
            config["budget"] = to_json(budget);
            config["budget"].erase("seed");
            const Setup s = multi_setup(config);
            const MultipleResult r = multiple_recurrence_search(s.systems, *s.base, s.x, levels_of(config), budget);
            stats["candidates"] = r.candidates;
            if (r.quotient_point) stats["quotient_point"] = s.systems.front()->space().point_to_json(*r.quotient_point);
            if ((found = r.status == SearchStatus::found))
                witness = multi_witness(s.systems, *s.base, *r.recurrence.prefix, *r.x0, radius_of(config));
        } else if (command == "check-ip") {
            witness = check_ip_witness(config);
            found = true;
        }
    } catch (const json::exception& e) {
        throw Error(Errc::config, e.what());
    }
    return seal({{"schema", kCertSchema},
                 {"command", command},
                 {"config", config},
                 {"seed", seed},
                 {"status", found ? "found" : "exhausted"},
                 {"witness", witness},
                 {"stats", stats}});
}

void check_certificate(const json& cert, const std::string& command) {
    try {
        if (!cert.is_object()) fail("certificate must be a JSON object");
        static const std::set<std::string> fields{"schema", "command", "config", "seed", "status", "witness", "stats", "digest"};
        for (const auto& [key, v] : cert.items())
            if (!fields.count(key)) fail("unexpected certificate field '" + key + "'");
        for (const auto& key : fields)
            if (!cert.contains(key)) fail("certificate lacks '" + key + "'");
        if (cert.at("schema") != kCertSchema) fail("unknown certificate schema");
        if (cert.at("digest") != certificate_digest(cert)) fail("digest mismatch");
        const std::string cmd = cert.at("command").get<std::string>();
        if (!command.empty() && cmd != command) fail("certificate was made by '" + cmd + "', not '" + command + "'");
        const json& config = cert.at("config");
        validate_config(cmd, config);
        if (!cert.at("seed").is_number_unsigned()) fail("seed must be a nonnegative integer");
        const std::string status = cert.at("status").get<std::string>();
        const json& w = cert.at("witness");
        if (status == "exhausted") {
            if (!w.is_null()) fail("exhausted certificate carries a witness");
            if (cmd == "check-ip") fail("check-ip cannot be exhausted");
            return;
        }
        if (status != "found") fail("unknown status '" + status + "'");
        if (!w.is_object()) fail("missing witness");

        json rebuilt;
        if (cmd == "verify-partition") {
            const Coloring col = Coloring::from_json(need(config, "coloring"));
            if (config.value("mode", std::string("substitutions")) == "substitutions") {
                const DominationVector k = domination_from_json(need(config, "domination"));
                rebuilt = substitution_witness(col, k, word_from_json(w.at("word"), k));
            } else {
                const WordSequence base = sequence_from_json(need(config, "sequence"));
                rebuilt = extraction_witness(col, base, sequence_from_json(w.at("prefix")), w.at("color").get<int>());
            }
        } else if (cmd == "find-recurrence" || cmd == "semigroup-run") {
            const Setup s = recurrence_setup(config);
            const WordSequence prefix = sequence_from_json(w.at("prefix"));
            const Point x0 = s.sys->space().point_from_json(w.at("x0"));
            rebuilt = cmd == "find-recurrence" ? recurrence_witness(*s.sys, *s.base, s.x, prefix, x0)
                                               : semigroup_witness(*semigroup_of(s.sys), *s.base, s.x, prefix, x0);
        } else if (cmd == "multi-recurrence") {
            const Setup s = multi_setup(config);
            const WordSequence prefix = sequence_from_json(w.at("prefix"));
            const Point x0 = s.systems.front()->space().point_from_json(w.at("x0"));
            rebuilt = multi_witness(s.systems, *s.base, prefix, x0, radius_of(config));
        } else {
            rebuilt = check_ip_witness(config);
        }
        if (rebuilt != w) {
            for (const auto& [key, v] : w.items())
                if (!rebuilt.contains(key) || rebuilt.at(key) != v) fail("witness field '" + key + "' does not match");
            fail("witness is missing fields");
        }
    } catch (const Error& e) {
        if (e.code() == Errc::verification_failure) throw;
        fail(e.what());
    } catch (const std::exception& e) {
        fail(e.what());
    }
}

std::string residual_csv(const json& cert) {
    const std::string cmd = cert.at("command").get<std::string>();
    if (cmd != "find-recurrence" && cmd != "semigroup-run" && cmd != "multi-recurrence")
        throw Error(Errc::config, "--emit-csv applies to recurrence commands only");
    std::ostringstream out;
    out.precision(17);
    const bool multi = cmd == "multi-recurrence";
    out << (multi ? "depth,words,return\n" : "depth,words,orbit,return\n");
    const json& w = cert.at("witness");
    if (w.is_null()) return out.str();
    for (const json& row : w.at("residuals")) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (row[i].is_number_float()) out << row[i].get<double>();
            else out << row[i].dump();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lwd::cli
