#ifndef KSCHUR_CACHE_HPP
#define KSCHUR_CACHE_HPP

#include <optional>
#include <string>

namespace kschur {

// Single JSON document keyed by (object-kind, k, degree) holding SCHUR
// expansions.  Purely an accelerator: deleting it never changes any emitted
// value, only runtime.

// Resolved from KSCHUR_CACHE_PATH when set ("" disables caching entirely),
// otherwise ~/.cache/kschur/cache.json.
std::optional<std::string> default_cache_path();

// Seeds the in-process memo tables; returns a warning message for a corrupt
// or unreadable file (missing file is not a warning).
std::optional<std::string> load_cache(const std::string& path);

// Writes every completed memo entry back out; creates parent directories.
void save_cache(const std::string& path);

} // namespace kschur

#endif
