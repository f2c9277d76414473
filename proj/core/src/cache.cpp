#include "kschur/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "kschur/json_io.hpp"
#include "kschur/kschur.hpp"
#include "kschur/vertex.hpp"

namespace kschur {

namespace {

constexpr int cache_schema = 1;

std::string entry_key(const std::string& kind, int k, int degree) {
    return kind + ":" + std::to_string(k) + ":" + std::to_string(degree);
}

json expansion_terms_json(const expansion<laurent_t>& e) {
    json terms = json::array();
    for (const auto& [p, c] : e.terms())
        terms.push_back(json{{"index", partition_to_json(p)}, {"coeff", coeff_to_json(c)}});
    return terms;
}

expansion<laurent_t> expansion_from_terms(const json& terms) {
    expansion<laurent_t> e(basis_tag{basis::schur, 0});
    for (const auto& term : terms)
        e.add_term(partition_from_json(term.at("index")), laurent_from_json(term.at("coeff")));
    return e;
}

} // namespace

std::optional<std::string> default_cache_path() {
    if (const char* env = std::getenv("KSCHUR_CACHE_PATH")) {
        if (*env == '\0') return std::nullopt; // caching disabled
        return std::string(env);
    }
    const char* home = std::getenv("HOME");
    if (!home || *home == '\0') return std::nullopt;
    return std::string(home) + "/.cache/kschur/cache.json";
}

std::optional<std::string> load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt; // nothing cached yet
    json doc;
    try {
        in >> doc;
        if (!doc.is_object() || doc.at("schema").get<int>() != cache_schema)
            return "cache file has an unknown schema, ignoring it";
        for (auto it = doc.at("entries").begin(); it != doc.at("entries").end(); ++it) {
            const std::string& key = it.key();
            size_t c1 = key.find(':');
            size_t c2 = key.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                return "cache file has a malformed key, ignoring it";
            std::string kind = key.substr(0, c1);
            int k = std::stoi(key.substr(c1 + 1, c2 - c1 - 1));
            for (auto row = it.value().begin(); row != it.value().end(); ++row) {
                partition lam = partition::parse(row.key());
                expansion<laurent_t> value = expansion_from_terms(row.value());
                if (kind == "kschur") seed_k_schur(k, lam, std::move(value));
                else if (kind == "gsplit") seed_k_split_poly(k, lam, std::move(value));
                else if (kind == "hl") seed_hall_littlewood(lam, std::move(value));
                // unknown kinds are skipped, not errors
            }
        }
    } catch (const std::exception& e) {
        return std::string("cache file is corrupt (") + e.what() + "), ignoring it";
    }
    return std::nullopt;
}

void save_cache(const std::string& path) {
    std::map<std::string, json> grouped;
    visit_k_schur_memo([&](int k, const partition& lam, const expansion<laurent_t>& v) {
        grouped[entry_key("kschur", k, lam.degree())][lam.to_string()] = expansion_terms_json(v);
    });
    visit_k_split_memo([&](int k, const partition& lam, const expansion<laurent_t>& v) {
        grouped[entry_key("gsplit", k, lam.degree())][lam.to_string()] = expansion_terms_json(v);
    });
    visit_hall_littlewood_memo([&](const partition& lam, const expansion<laurent_t>& v) {
        grouped[entry_key("hl", 0, lam.degree())][lam.to_string()] = expansion_terms_json(v);
    });
    json doc;
    doc["schema"] = cache_schema;
    json entries = json::object();
    for (const auto& [key, value] : grouped) entries[key] = value;
    doc["entries"] = std::move(entries);

    std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path);
    if (out) out << doc.dump() << '\n';
}

} // namespace kschur
