#ifndef KSCHUR_PARTITION_HPP
#define KSCHUR_PARTITION_HPP

#include <string>
#include <vector>

#include "kschur/errors.hpp"

namespace kschur {

// Integer partition: weakly decreasing sequence of positive parts.  The
// universal index type for every basis in the library.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts);
    partition(std::initializer_list<int> parts)
        : partition(std::vector<int>(parts)) {}

    // Drops trailing zeros instead of rejecting them; still requires the
    // positive prefix to be weakly decreasing.
    static partition from_weak(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // parts_[i] for 0 <= i, 0 beyond the end.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }
    int first() const { return part(0); }

    partition conjugate() const;

    // Hook-length of the corner cell: first part + length - 1.
    int main_hook() const;

    bool k_bounded(int k) const { return first() <= k; }

    // this contains other as Ferrers diagrams (other[i] <= this[i]).
    bool contains(const partition& inner) const;

    // Multiset union of parts.
    static partition union_parts(const partition& a, const partition& b);

    // Partition without its first part.
    partition tail() const;
    // (r, *this); requires r >= first part.
    partition prepend(int r) const;

    std::string to_string() const; // "3,2,1"; empty partition is ""
    static partition parse(const std::string& s);

    friend bool operator==(const partition& a, const partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const partition& a, const partition& b) {
        return !(a == b);
    }
    // Total order: degree first, then lex descending.  Within one degree this
    // is the reverse of the dominance-compatible lex order used for output.
    friend bool operator<(const partition& a, const partition& b);

private:
    std::vector<int> parts_;
};

// lambda <= mu in dominance order; requires equal degrees.
bool dominance_leq(const partition& lam, const partition& mu);
// Strict comparability helpers on equal degrees.
bool dominance_lt(const partition& lam, const partition& mu);

// Ascending lex on equal-degree partitions: a linear extension of dominance
// matching the published table ordering.
bool lex_less(const partition& a, const partition& b);

enum class strip_kind { horizontal, vertical };

// outer/inner is a horizontal (resp. vertical) r-strip.
bool is_strip(const partition& inner, const partition& outer, int r, strip_kind kind);

using partition_sequence = std::vector<partition>;

// Concatenation of the elements (in order) as a plain vector.
std::vector<int> concatenate(const partition_sequence& s);
// The concatenation is weakly decreasing, i.e. forms a partition.
bool is_dominant(const partition_sequence& s);
// Degree of the whole sequence.
int sequence_degree(const partition_sequence& s);

std::string to_string(const partition_sequence& s); // "3,2;2,1;1"
partition_sequence parse_sequence(const std::string& s);

// Greedy front-to-back split of a k-bounded partition into blocks of main
// hook exactly k (last block <= k).
partition_sequence k_split(const partition& lam, int k);

// Skew diagram outer/inner in French convention (row 1 at the bottom).
struct skew_shape {
    partition outer, inner;

    skew_shape() = default;
    skew_shape(partition out, partition in);

    int rows() const { return outer.length(); }
    // Columns occupied by row i (1-based from the bottom): [start, end].
    int row_start(int i) const { return inner.part(i - 1) + 1; }
    int row_end(int i) const { return outer.part(i - 1); }
    int row_len(int i) const { return row_end(i) - row_start(i) + 1; }

    // Cells strictly east + strictly north + 1.
    int hook(int row, int col) const;
    int max_hook() const;

    // Row lengths bottom-to-top.
    std::vector<int> row_lengths() const;

    friend bool operator==(const skew_shape&, const skew_shape&) = default;
};

// Prepend a column of m cells in a fresh leftmost column, overlapping the
// top rows of d as much as possible subject to skew-validity and all
// hook-lengths <= k.
skew_shape k_multiply(int m, const skew_shape& d, int k);

// k-conjugate via iterated k-multiplication of the parts right-to-left.
partition k_conjugate(const partition& lam, int k);

// No more than i parts equal to k-i for each i.
bool is_k_irreducible(const partition& lam, int k);

// Enumeration, each list in ascending lex order.
std::vector<partition> partitions_of(int n);
std::vector<partition> k_bounded_partitions(int n, int k);
// The complete finite set (k! elements), ordered by (degree, lex).
std::vector<partition> k_irreducible_partitions(int k);

} // namespace kschur

#endif
