#include "lwd/cli/cli.hpp"

#include "lwd/codecs.hpp"
#include "lwd/config.hpp"
#include "lwd/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lwd::cli {

namespace {

int exit_code(Errc c) {
    switch (c) {
    case Errc::config: return kConfigError;
    case Errc::verification_failure: return kVerificationFailure;
    default: return kDomainError;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::config, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::config, what + ": " + e.what());
    }
}

// Inline JSON when the argument starts with '{', a file path otherwise.
json load_config(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return parse_json(arg, "inline config");
    return parse_json(read_file(arg), arg);
}

void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::config, "cannot write '" + tmp.string() + "'");
        out << text;
        if (!out.flush()) throw Error(Errc::config, "write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(Errc::config, "cannot move certificate into '" + path + "'");
    }
}

std::uint64_t env_max_candidates(std::uint64_t fallback) {
    const char* v = std::getenv("LWD_BUDGET_MAX_CANDIDATES");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || v[0] == '-') throw Error(Errc::config, "LWD_BUDGET_MAX_CANDIDATES must be a nonnegative integer");
    return n;
}

struct CodecArgs {
    std::string codec = "rational";
    std::string radix = R"({"rule":"abs_plus_one"})";
    std::int64_t base = 10;

    void add_to(CLI::App* app) {
        app->add_option("--codec", codec, "rational | integer | natural")->check(CLI::IsMember({"rational", "integer", "natural"}));
        app->add_option("--radix", radix, "integer codec radix rule as JSON");
        app->add_option("--base", base, "natural codec base");
    }

    Codec build() const {
        if (codec == "rational") return Codec::rational();
        if (codec == "integer") return Codec::integer(MixedRadix(rule_from_json(parse_json(radix, "--radix"))));
        return Codec::natural(base);
    }
};

struct RunArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string check;
    std::string csv;
};

int run_certified(const std::string& command, const RunArgs& a) {
    if (!a.check.empty()) {
        json cert;
        try {
            cert = json::parse(read_file(a.check));
        } catch (const std::exception& e) {
            throw Error(Errc::verification_failure, std::string("unreadable certificate: ") + e.what());
        }
        check_certificate(cert, command == "check" ? "" : command);
        std::cout << "ok " << cert.at("command").get<std::string>() << " " << cert.at("status").get<std::string>() << "\n";
        return kOk;
    }
    if (a.config.empty()) throw Error(Errc::config, "--config is required");
    if (is_search_command(command) && !a.seed) throw Error(Errc::config, "--seed is required for " + command);
    json config = load_config(a.config);
    if (config.is_object()) {
        // the environment only changes the default; an explicit budget field wins
        json& budget = config["budget"];
        if (budget.is_null()) budget = json::object();
        if (budget.is_object() && !budget.contains("max_candidates") && is_search_command(command))
            budget["max_candidates"] = env_max_candidates(SearchBudget{}.max_candidates);
        if (!is_search_command(command)) config.erase("budget");
    }
    const json cert = run_command(command, std::move(config), a.seed.value_or(0));
    const std::string text = cert.dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        write_atomic(a.out, text);
    if (!a.csv.empty()) write_atomic(a.csv, residual_csv(cert));
    if (!a.out.empty()) std::cout << command << " " << cert.at("status").get<std::string>() << "\n";
    return kOk;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Located words: codecs, Ramsey searches and word-indexed recurrence"};
    app.require_subcommand(1);

    CodecArgs enc_args;
    std::string enc_value;
    CLI::App* enc = app.add_subcommand("encode", "Print the word encoding a number");
    enc_args.add_to(enc);
    enc->add_option("value", enc_value, "rational (p/q or decimal) or integer")->required();

    CodecArgs dec_args;
    std::string dec_word;
    CLI::App* dec = app.add_subcommand("decode", "Print the number a word encodes");
    dec_args.add_to(dec);
    dec->add_option("word", dec_word, "word JSON")->required();

    RunArgs run;
    std::vector<CLI::App*> certified;
    for (const char* name : {"verify-partition", "find-recurrence", "multi-recurrence", "check-ip", "semigroup-run"}) {
        CLI::App* sub = app.add_subcommand(name, std::string("Run ") + name + " and emit a certificate");
        sub->add_option("--config", run.config, "config file or inline JSON");
        sub->add_option("--seed", run.seed, "search seed");
        sub->add_option("--out", run.out, "certificate path (stdout when absent)");
        sub->add_option("--check", run.check, "verify an existing certificate instead of running");
        sub->add_option("--emit-csv", run.csv, "write depth,words,residual rows to a CSV file");
        certified.push_back(sub);
    }
    CLI::App* check = app.add_subcommand("check", "Verify any certificate");
    check->add_option("certificate", run.check, "certificate path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        if (*enc) {
            const Codec codec = enc_args.build();
            const Rational v = Rational::parse(enc_value);
            std::cout << canonical(to_json(codec.encode(v))) << "\n";
            return kOk;
        }
        if (*dec) {
            const Codec codec = dec_args.build();
            const Word w = word_from_json(parse_json(dec_word, "word"), codec.domination().kind());
            std::cout << codec.decode(w).str() << "\n";
            return kOk;
        }
        if (*check) return run_certified("check", run);
        for (CLI::App* sub : certified)
            if (*sub) return run_certified(sub->get_name(), run);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return run.check.empty() ? exit_code(e.code()) : kVerificationFailure;
    } catch (const json::exception& e) {
        std::cerr << "Config: " << e.what() << "\n";
        return run.check.empty() ? kConfigError : kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return run.check.empty() ? kDomainError : kVerificationFailure;
    }
    return kConfigError;
}

}  // namespace lwd::cli
