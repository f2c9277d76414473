#ifndef KSCHUR_TABLES_HPP
#define KSCHUR_TABLES_HPP

#include <string>
#include <vector>

#include "kschur/expansion.hpp"
#include "kschur/json_io.hpp"

namespace kschur {

// One published-style coefficient table: rows indexed by k-bounded
// partitions of the degree, columns by all partitions (kschur-in-schur) or
// all k-bounded partitions (mach-in-kschur), both in ascending lex order.
struct coeff_table {
    std::string kind; // "kschur-in-schur" | "mach-in-kschur"
    int k = 0;
    int degree = 0;
    std::vector<partition> columns;
    std::vector<partition> rows;
    std::vector<std::vector<poly_qt>> entries; // rows x columns

    json to_json() const;
    std::string to_csv() const;
    std::string to_aligned_text() const; // ampersand-separated, table style
};

coeff_table make_kschur_in_schur(int k, int degree);
coeff_table make_mach_in_kschur(int k, int degree);

// Embedded golden fixtures.
const char* golden_tables_json();
std::vector<coeff_table> golden_tables(const std::string& kind);

// Cell-by-cell comparison; returns human-readable mismatch descriptions
// (empty when equal).
std::vector<std::string> compare_tables(const coeff_table& got, const coeff_table& want);

} // namespace kschur

#endif
