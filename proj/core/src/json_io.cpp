#include "kschur/json_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "kschur/errors.hpp"

namespace kschur {

json coeff_to_json(const bigint& c) { return to_string(c); }

json coeff_to_json(const laurent_t& c) {
    json j = json::object();
    for (const auto& [e, v] : c.terms()) j["t^" + std::to_string(e)] = to_string(v);
    return j;
}

json coeff_to_json(const poly_qt& c) {
    // emit in ascending (q, t) lex order
    std::vector<std::pair<qt_exp, bigint>> sorted(c.terms().begin(), c.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.q != b.first.q) return a.first.q < b.first.q;
        return a.first.t < b.first.t;
    });
    json j = json::object();
    for (const auto& [e, v] : sorted)
        j["q^" + std::to_string(e.q) + " t^" + std::to_string(e.t)] = to_string(v);
    return j;
}

json coeff_to_json(const rat_qt& c) {
    return json{{"num", coeff_to_json(c.num())}, {"den", coeff_to_json(c.den())}};
}

bigint bigint_from_json(const json& j) {
    if (!j.is_string()) throw invalid_input("expected decimal string");
    return bigint_from_string(j.get<std::string>());
}

namespace {

int parse_exp_key(const std::string& key, const std::string& prefix) {
    if (key.rfind(prefix, 0) != 0) throw invalid_input("bad exponent key '" + key + "'");
    return std::stoi(key.substr(prefix.size()));
}

} // namespace

laurent_t laurent_from_json(const json& j) {
    laurent_t out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.add_term(parse_exp_key(it.key(), "t^"), bigint_from_json(it.value()));
    return out;
}

poly_qt poly_qt_from_json(const json& j) {
    poly_qt out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        size_t space = key.find(' ');
        if (space == std::string::npos) throw invalid_input("bad qt key '" + key + "'");
        int qe = parse_exp_key(key.substr(0, space), "q^");
        int te = parse_exp_key(key.substr(space + 1), "t^");
        out.add_term(qe, te, bigint_from_json(it.value()));
    }
    return out;
}

rat_qt rat_qt_from_json(const json& j) {
    return rat_qt(poly_qt_from_json(j.at("num")), poly_qt_from_json(j.at("den")));
}

json partition_to_json(const partition& p) {
    json arr = json::array();
    for (int x : p.parts()) arr.push_back(x);
    return arr;
}

partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return partition(std::move(parts));
}

namespace {

void append_term(std::string& out, const bigint& c, const std::string& mono) {
    bool negative = c < 0;
    bigint a = negative ? bigint(-c) : c;
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? '-' : '+';
    }
    if (mono.empty()) {
        out += to_string(a);
    } else {
        if (a != 1) {
            out += to_string(a);
            out += '*';
        }
        out += mono;
    }
}

std::string monomial_string(int qe, int te) {
    std::string m;
    if (qe != 0) {
        m += 'q';
        if (qe != 1) m += '^' + std::to_string(qe);
    }
    if (te != 0) {
        if (!m.empty()) m += '*';
        m += 't';
        if (te != 1) m += '^' + std::to_string(te);
    }
    return m;
}

} // namespace

std::string poly_string(const laurent_t& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [e, v] : c.terms()) append_term(out, v, monomial_string(0, e));
    return out;
}

std::string poly_string(const poly_qt& c) {
    if (c.is_zero()) return "0";
    std::vector<std::pair<qt_exp, bigint>> sorted(c.terms().begin(), c.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.q != b.first.q) return a.first.q < b.first.q;
        return a.first.t < b.first.t;
    });
    std::string out;
    for (const auto& [e, v] : sorted) append_term(out, v, monomial_string(e.q, e.t));
    return out;
}

std::string poly_string(const rat_qt& c) {
    if (c.den().is_one()) return poly_string(c.num());
    return "(" + poly_string(c.num()) + ")/(" + poly_string(c.den()) + ")";
}

namespace {

struct raw_term {
    bigint coeff = 1;
    int qe = 0;
    int te = 0;
};

std::vector<raw_term> parse_terms(const std::string& s) {
    std::vector<raw_term> terms;
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw invalid_input("empty polynomial string");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw invalid_input("expected '+' or '-' in '" + s + "'");
        }
        first = false;
        raw_term term;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (c == '+' || c == '-') break;
            if (c == '*') {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                term.coeff *= bigint_from_string(s.substr(i, j - i));
                i = j;
                saw_factor = true;
                continue;
            }
            if (c == 'q' || c == 't') {
                ++i;
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t j = i;
                    if (j < s.size() && s[j] == '-') ++j;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                    if (j == i) throw invalid_input("bad exponent in '" + s + "'");
                    e = std::stoi(s.substr(i, j - i));
                    i = j;
                }
                (c == 'q' ? term.qe : term.te) += e;
                saw_factor = true;
                continue;
            }
            throw invalid_input("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
        }
        if (!saw_factor) throw invalid_input("dangling sign in '" + s + "'");
        term.coeff *= sign;
        terms.push_back(std::move(term));
    }
    return terms;
}

} // namespace

laurent_t parse_laurent(const std::string& s) {
    laurent_t out;
    for (const auto& t : parse_terms(s)) {
        if (t.qe != 0) throw invalid_input("q appears in a t-polynomial: '" + s + "'");
        out.add_term(t.te, t.coeff);
    }
    return out;
}

poly_qt parse_poly_qt(const std::string& s) {
    poly_qt out;
    for (const auto& t : parse_terms(s)) out.add_term(t.qe, t.te, t.coeff);
    return out;
}

expansion<laurent_t> laurent_expansion_from_json(const json& doc) {
    basis_tag tag{basis_from_name(doc.at("basis").get<std::string>()), 0};
    if (!doc.at("k").is_null()) tag.k = doc.at("k").get<int>();
    expansion<laurent_t> out(tag);
    for (const auto& term : doc.at("terms"))
        out.add_term(partition_from_json(term.at("index")), laurent_from_json(term.at("coeff")));
    return out;
}

} // namespace kschur
