#pragma once

#include <string>
#include <vector>

#include "symdisc/bigint.hpp"

namespace symdisc {

/* Simplex decomposition of a grid T^d.
 *
 * An ordered partition J = J_1,...,J_l of [d] (blocks nonempty, ordered by
 * their minima) together with a permutation sigma of [l] names one
 * l-dimensional simplex: pick values a_1 < ... < a_l from T and write a_{
 * sigma(i)} on every coordinate in block J_i. The simplices over all (J,
 * sigma) partition T^d; there are l! * S(d,l) of dimension l, where S is the
 * Stirling number of the second kind. The l = 1 simplex is the diagonal.
 *
 * Enumeration order is fixed: partitions in restricted-growth-string order,
 * permutations in lexicographic order. Ranks below refer to this order.
 */

struct OrderedPartition {
    int d = 0;
    std::vector<std::vector<int>> blocks; // each ascending, ordered by minimum

    int block_count() const { return static_cast<int>(blocks.size()); }
};

bool operator==(const OrderedPartition& a, const OrderedPartition& b);

struct SimplexId {
    OrderedPartition partition;
    std::vector<int> sigma; // images sigma(1),...,sigma(l); a bijection on [l]

    int dimension() const { return static_cast<int>(sigma.size()); }
};

bool operator==(const SimplexId& a, const SimplexId& b);
bool operator<(const SimplexId& a, const SimplexId& b);

// Stirling numbers of the second kind, two independent routes. The recurrence
// S(d,l) = l*S(d-1,l) + S(d-1,l-1) is the primary one; the alternating-sum
// route accumulates sum_j (-1)^j C(l,j) (l-j)^d and divides by l! once at the
// end, so every intermediate value is an integer. l > d yields 0.
BigInt stirling2(int d, int l);
BigInt stirling2_formula(int d, int l);

// All partitions of [d] into exactly l blocks, restricted-growth-string order.
std::vector<OrderedPartition> enumerate_partitions(int d, int l);

// All simplices of the listed dimensions, ascending dimension, then partition
// order, then lexicographic permutation order.
std::vector<SimplexId> enumerate_simplices(int d, const std::vector<int>& dims);

// The C(|T|,l) points of the simplex inside T^d; empty when |T| < l.
// T must be strictly ascending and positive.
std::vector<std::vector<int>> simplex_points(const SimplexId& id, const std::vector<int>& T);

struct PointClass {
    SimplexId id;
    std::vector<int> alpha; // ascending distinct values of the point
};

// The unique simplex containing x: blocks are the level sets of x ordered by
// least coordinate index, alpha the ascending distinct values, sigma(i) the
// rank of block i's value within alpha.
PointClass classify_point(const std::vector<int>& x);

// Canonical form "k=2;J=1,2|3;sigma=2,1".
std::string to_string(const SimplexId& id);
SimplexId parse_simplex_id(const std::string& s);

// Rank arithmetic in the fixed enumeration order. Counts are kept in 64 bits;
// dimensions whose counts exceed that raise size_cap_error (d <= 17 is safe).
long long partition_count(int d, int l); // S(d,l)
long long simplex_count(int d, int l);   // l! * S(d,l)
long long partition_rank(const OrderedPartition& p);
OrderedPartition partition_unrank(int d, int l, long long rank);
long long permutation_rank(const std::vector<int>& sigma);
std::vector<int> permutation_unrank(int l, long long rank);
long long simplex_rank(const SimplexId& id);
SimplexId simplex_unrank(int d, int l, long long rank);

} // namespace symdisc
