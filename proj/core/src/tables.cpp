#include "kschur/tables.hpp"

#include <algorithm>
#include <sstream>

#include "kschur/kschur.hpp"
#include "kschur/macdonald.hpp"

namespace kschur {

namespace {

// Power-compact label like the published tables: "2^2 1", "1^3".
std::string compact_label(const partition& p) {
    if (p.empty()) return "0";
    std::string out;
    int i = 0;
    while (i < p.length()) {
        int j = i;
        while (j < p.length() && p.part(j) == p.part(i)) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(p.part(i));
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace

json coeff_table::to_json() const {
    json cols = json::array(), rws = json::array();
    for (const auto& c : columns) cols.push_back(c.to_string());
    for (size_t r = 0; r < rows.size(); ++r) {
        json cells = json::array();
        for (const auto& e : entries[r]) cells.push_back(poly_string(e));
        rws.push_back(json{{"index", rows[r].to_string()}, {"cells", std::move(cells)}});
    }
    return json{{"kind", kind}, {"k", k},      {"degree", degree},
                {"columns", std::move(cols)},  {"rows", std::move(rws)}};
}

std::string coeff_table::to_csv() const {
    std::ostringstream os;
    os << "index";
    for (const auto& c : columns) os << ",\"" << c.to_string() << "\"";
    os << '\n';
    for (size_t r = 0; r < rows.size(); ++r) {
        os << '"' << rows[r].to_string() << '"';
        for (const auto& e : entries[r]) os << ",\"" << poly_string(e) << "\"";
        os << '\n';
    }
    return os.str();
}

std::string coeff_table::to_aligned_text() const {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"k=" + std::to_string(k)};
    for (const auto& c : columns) header.push_back(compact_label(c));
    cells.push_back(header);
    for (size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::string> line{compact_label(rows[r])};
        for (const auto& e : entries[r]) line.push_back(e.is_zero() ? "" : poly_string(e));
        cells.push_back(line);
    }
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& line : cells)
        for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    for (const auto& line : cells) {
        for (size_t i = 0; i < line.size(); ++i) {
            std::string pad(width[i] - line[i].size(), ' ');
            os << line[i] << pad << (i + 1 < line.size() ? " & " : " \\\\");
        }
        os << '\n';
    }
    return os.str();
}

coeff_table make_kschur_in_schur(int k, int degree) {
    coeff_table t;
    t.kind = "kschur-in-schur";
    t.k = k;
    t.degree = degree;
    t.columns = partitions_of(degree);
    t.rows = k_bounded_partitions(degree, k);
    for (const auto& lam : t.rows) {
        const auto& exp = *k_schur(k, lam);
        std::vector<poly_qt> line;
        line.reserve(t.columns.size());
        for (const auto& mu : t.columns) line.push_back(poly_qt::from_laurent(exp.coeff(mu)));
        t.entries.push_back(std::move(line));
    }
    return t;
}

coeff_table make_mach_in_kschur(int k, int degree) {
    coeff_table t;
    t.kind = "mach-in-kschur";
    t.k = k;
    t.degree = degree;
    t.columns = k_bounded_partitions(degree, k);
    t.rows = k_bounded_partitions(degree, k);
    for (const auto& lam : t.rows) {
        auto kostka = kschur_qt_kostka(k, lam);
        std::vector<poly_qt> line;
        line.reserve(t.columns.size());
        for (const auto& mu : t.columns) {
            auto it = kostka.find(mu);
            line.push_back(it == kostka.end() ? poly_qt() : it->second);
        }
        t.entries.push_back(std::move(line));
    }
    return t;
}

std::vector<coeff_table> golden_tables(const std::string& kind) {
    json doc = json::parse(golden_tables_json());
    std::string key = kind == "kschur-in-schur" ? "kschur_in_schur" : "mach_in_kschur";
    std::vector<coeff_table> out;
    for (const auto& tj : doc.at(key)) {
        coeff_table t;
        t.kind = kind;
        t.k = tj.at("k").get<int>();
        t.degree = tj.at("degree").get<int>();
        for (const auto& c : tj.at("columns"))
            t.columns.push_back(partition::parse(c.get<std::string>()));
        for (const auto& row : tj.at("rows")) {
            t.rows.push_back(partition::parse(row.at(0).get<std::string>()));
            std::vector<poly_qt> line;
            for (const auto& cell : row.at(1)) line.push_back(parse_poly_qt(cell.get<std::string>()));
            t.entries.push_back(std::move(line));
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::string> compare_tables(const coeff_table& got, const coeff_table& want) {
    std::vector<std::string> diffs;
    auto where = "k=" + std::to_string(want.k) + " degree=" + std::to_string(want.degree);
    if (got.rows != want.rows) {
        diffs.push_back(where + ": row index sets differ");
        return diffs;
    }
    if (got.columns != want.columns) {
        diffs.push_back(where + ": column index sets differ");
        return diffs;
    }
    for (size_t r = 0; r < want.rows.size(); ++r)
        for (size_t c = 0; c < want.columns.size(); ++c)
            if (got.entries[r][c] != want.entries[r][c])
                diffs.push_back(where + " row " + want.rows[r].to_string() + " column " +
                                want.columns[c].to_string() + ": got " +
                                poly_string(got.entries[r][c]) + ", published " +
                                poly_string(want.entries[r][c]));
    return diffs;
}

} // namespace kschur
