#pragma once

#include "lwd/codecs.hpp"
#include "lwd/json_io.hpp"
#include "lwd/word.hpp"

#include <functional>
#include <map>

namespace lwd {

inline constexpr int kMaxColors = 16;

// Finite coloring of words with colors 1..arity.
class Coloring {
public:
    using Fn = std::function<int(const Word&)>;

    Coloring(int arity, Fn fn, json spec = nullptr);

    int arity() const { return arity_; }
    int operator()(const Word& w) const;
    // Serializable description; null for colorings built in code.
    const json& spec() const { return spec_; }

    static Coloring constant(int arity = 1, int color = 1);
    // floor(decode(w)) mod arity, plus one.
    static Coloring residue(const Codec& codec, int arity);
    static Coloring letter_sum(int arity);
    static Coloring domain_size(int arity);
    // |min dom(w)| mod arity, plus one.
    static Coloring min_position(int arity);
    // default_color = 0 makes missing words an error.
    static Coloring table(int arity, std::map<Word, int> entries, int default_color = 0);

    static Coloring from_json(const json& j);

private:
    int arity_;
    Fn fn_;
    json spec_;
};

json to_json(const Codec& c);
Codec codec_from_json(const json& j);

}  // namespace lwd
