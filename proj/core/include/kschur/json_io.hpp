#ifndef KSCHUR_JSON_IO_HPP
#define KSCHUR_JSON_IO_HPP

#include <json.hpp>

#include "kschur/expansion.hpp"

namespace kschur {

using json = nlohmann::ordered_json;

// All integer payloads are decimal strings; exponent keys are "t^e" and
// "q^a t^b".
json coeff_to_json(const bigint& c);
json coeff_to_json(const laurent_t& c);
json coeff_to_json(const poly_qt& c);
json coeff_to_json(const rat_qt& c);

bigint bigint_from_json(const json& j);
laurent_t laurent_from_json(const json& j);
poly_qt poly_qt_from_json(const json& j);
rat_qt rat_qt_from_json(const json& j);

json partition_to_json(const partition& p);
partition partition_from_json(const json& j);

// Compact polynomial strings ("1+q*t^2", "t^-1", "-t+t^2"); terms ordered by
// ascending (q,t) exponents.  Used by fixtures, text and csv output.
std::string poly_string(const laurent_t& c);
std::string poly_string(const poly_qt& c);
std::string poly_string(const rat_qt& c); // "num / den" unless denominator 1
laurent_t parse_laurent(const std::string& s);
poly_qt parse_poly_qt(const std::string& s);

// Expansion document: {"tool", "version", "basis", "k", "ring", "terms"}.
template <typename R>
json expansion_to_json(const expansion<R>& e) {
    json terms = json::array();
    for (const auto& [p, c] : e.terms())
        terms.push_back(json{{"index", partition_to_json(p)}, {"coeff", coeff_to_json(c)}});
    json doc;
    doc["basis"] = basis_name(e.tag().kind);
    doc["k"] = is_k_indexed(e.tag().kind) ? json(e.tag().k) : json(nullptr);
    doc["ring"] = ring_of<R>::name;
    doc["terms"] = std::move(terms);
    return doc;
}

expansion<laurent_t> laurent_expansion_from_json(const json& doc);

} // namespace kschur

#endif
