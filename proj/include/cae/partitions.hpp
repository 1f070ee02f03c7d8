#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cae/arcs.hpp"

namespace cae {

using BigInt = boost::multiprecision::cpp_int;

/* A non-exhaustive partition of the ground set [m] = {1, ..., m}, m <= 64:
 * pairwise disjoint non-empty blocks that need not cover [m].  Element e is
 * bit e-1 of a block mask.  Canonical form keeps block masks sorted by their
 * lowest element. */
struct Partition {
    int m = 0;
    std::vector<std::uint64_t> blocks;

    friend bool operator==(const Partition&, const Partition&) = default;
};

inline bool operator<(const Partition& p, const Partition& q)
{
    if (p.m != q.m)
        return p.m < q.m;
    return p.blocks < q.blocks;
}

/* Validating constructor from element lists; canonicalises block order.
 * Throws BadInput on out-of-range elements, empty or overlapping blocks. */
Partition make_partition(int m, const std::vector<std::vector<int>>& blocks);

std::vector<std::vector<int>> block_elements(const Partition& p);

/* The defining pattern: no i < k < j < l with i, j in one block and k, l in
 * another.  Blocks are assumed disjoint. */
bool is_noncrossing(const std::vector<std::uint64_t>& blocks, int m);
bool is_noncrossing(const Partition& p);

/* Even-exclusive: no block is a singleton {e} with e even. */
bool is_even_exclusive(const Partition& p);

/* Meet in NNC_m: blockwise intersections, empties dropped. */
Partition meet_nnc(const Partition& p, const Partition& q);

/* Join in NNC_m: complete both partitions with singletons, take the finest
 * non-crossing partition coarser than both (transitive-closure join, then
 * crossing blocks merged to a fixpoint), then strip singletons of elements
 * covered by neither input. */
Partition join_nnc(const Partition& p, const Partition& q);

/* eta : NNC_2n -> eNNC_2n drops even singletons. */
Partition eta(const Partition& p);

/* Lattice operations of eNNC: the meet is eta(meet in NNC), the join agrees
 * with the NNC join. */
Partition meet_e(const Partition& p, const Partition& q);
Partition join_e(const Partition& p, const Partition& q);

/* zeta : NNC_n -> eNNC_2n doubles the ground set and maps element i to 2i-1. */
Partition zeta(const Partition& p);

/* Refinement order: every block of p is contained in some block of q. */
bool partition_leq(const Partition& p, const Partition& q);

/* Both endpoint sites of the arc lie in a single block of p (ground set
 * [2n] numbered by site_number). */
bool thick_membership(const Arc& x, const Partition& p, const Surface& surface);

struct DirectSum;  // homology.hpp

/* The eNNC_2n partition of the thick closure: one block per homologically
 * connected component, holding the site numbers of the component's orbit. */
Partition thick_closure(const DirectSum& g);

BigInt catalan(int i);
BigInt binomial(int n, int k);
BigInt nnc_count(int n);
BigInt ennc_count(int two_n);

/* All partitions in a canonical deterministic order; throws CapExceeded when
 * m exceeds the cap. */
std::vector<Partition> enumerate_nnc(int m, int cap = 10);
std::vector<Partition> enumerate_ennc(int two_n, int cap = 10);

}  // namespace cae
