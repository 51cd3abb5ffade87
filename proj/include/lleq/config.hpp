#ifndef LLEQ_CONFIG_HPP
#define LLEQ_CONFIG_HPP

#include "lleq/lle.hpp"
#include "lleq/parse.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lleq {

class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses {"name", "time", "space": [...], "potential": [{"word", "fn"}]}.
/// "name" defaults to `fallback_name`; "space" and "potential" may be omitted.
inline LLESpec spec_from_json(const nlohmann::json& j, const std::string& fallback_name = "config")
{
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "name" && key != "time" && key != "space" && key != "potential")
            throw ConfigError("config: unknown key '" + key + "'");
    auto text = [](const nlohmann::json& v, const std::string& what) {
        if (!v.is_string()) throw ConfigError("config: " + what + " must be a string");
        return v.get<std::string>();
    };
    auto word = [&](const nlohmann::json& v, const std::string& what) {
        try {
            return Word(text(v, what));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ConfigError("config: " + what + ": " + e.what());
        }
    };

    const std::string name = j.contains("name") ? text(j["name"], "name") : fallback_name;
    if (!j.contains("time")) throw ConfigError("config: missing 'time'");
    const Word time = word(j["time"], "time");

    std::vector<Word> space;
    if (j.contains("space")) {
        if (!j["space"].is_array()) throw ConfigError("config: 'space' must be an array");
        for (const auto& w : j["space"]) space.push_back(word(w, "space word"));
    }

    std::vector<PotentialTerm> potential;
    if (j.contains("potential")) {
        if (!j["potential"].is_array()) throw ConfigError("config: 'potential' must be an array");
        for (const auto& p : j["potential"]) {
            if (!p.is_object() || !p.contains("word") || !p.contains("fn"))
                throw ConfigError("config: potential entries need 'word' and 'fn'");
            const Word w = word(p["word"], "potential word");
            try {
                potential.push_back({w, parse_operator(text(p["fn"], "potential fn"))});
            } catch (const ParseError& e) {
                throw ConfigError(std::string("config: potential fn: ") + e.what());
            }
        }
    }

    try {
        return LLESpec(name, time, space, potential);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

inline LLESpec spec_from_text(const std::string& text, const std::string& fallback_name = "config")
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    return spec_from_json(j, fallback_name);
}

inline LLESpec load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return spec_from_text(buffer.str(), path);
}

inline nlohmann::json to_json(const LLESpec& spec)
{
    nlohmann::json j;
    j["name"] = spec.name();
    j["time"] = spec.time_word().str();
    j["space"] = nlohmann::json::array();
    for (const auto& w : spec.space_words()) j["space"].push_back(w.str());
    j["potential"] = nlohmann::json::array();
    for (const auto& p : spec.potential()) j["potential"].push_back({{"word", p.word.str()}, {"fn", to_string(p.fn)}});
    return j;
}

} // namespace lleq

#endif // LLEQ_CONFIG_HPP
