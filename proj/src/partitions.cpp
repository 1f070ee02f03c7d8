#include "cae/partitions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cae/homology.hpp"

namespace cae {

namespace {

void canonicalize(Partition& p)
{
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
}

void check_ground(int m)
{
    if (m < 0 || m > 64)
        throw_domain("BadInput", "ground set size must be in [0, 64]");
}

/* Alternation pattern between two disjoint masks along bit positions:
 * crossing iff the membership sequence switches side at least three times
 * (i.e. contains B C B C or C B C B as a subsequence). */
bool masks_cross(std::uint64_t b, std::uint64_t c, int m)
{
    int switches = 0;
    int last = 0;  // 0 none, 1 in b, 2 in c
    for (int i = 0; i < m; ++i) {
        const std::uint64_t bit = 1ULL << i;
        int side = (b & bit) ? 1 : (c & bit) ? 2 : 0;
        if (side == 0)
            continue;
        if (last != 0 && side != last)
            ++switches;
        last = side;
    }
    return switches >= 3;
}

}  // namespace

Partition make_partition(int m, const std::vector<std::vector<int>>& blocks)
{
    check_ground(m);
    Partition p;
    p.m = m;
    std::uint64_t seen = 0;
    for (const auto& blk : blocks) {
        if (blk.empty())
            throw_domain("BadInput", "empty block");
        std::uint64_t mask = 0;
        for (int e : blk) {
            if (e < 1 || e > m)
                throw_domain("BadInput", "block element out of [1, m]");
            mask |= 1ULL << (e - 1);
        }
        if (mask & seen)
            throw_domain("BadInput", "blocks are not disjoint");
        seen |= mask;
        p.blocks.push_back(mask);
    }
    canonicalize(p);
    return p;
}

std::vector<std::vector<int>> block_elements(const Partition& p)
{
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : p.blocks) {
        std::vector<int> blk;
        for (int i = 0; i < p.m; ++i)
            if (mask & (1ULL << i))
                blk.push_back(i + 1);
        out.push_back(std::move(blk));
    }
    return out;
}

bool is_noncrossing(const std::vector<std::uint64_t>& blocks, int m)
{
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (masks_cross(blocks[i], blocks[j], m))
                return false;
    return true;
}

bool is_noncrossing(const Partition& p)
{
    return is_noncrossing(p.blocks, p.m);
}

bool is_even_exclusive(const Partition& p)
{
    for (std::uint64_t mask : p.blocks) {
        if (std::popcount(mask) != 1)
            continue;
        const int e = std::countr_zero(mask) + 1;
        if (e % 2 == 0)
            return false;
    }
    return true;
}

Partition meet_nnc(const Partition& p, const Partition& q)
{
    if (p.m != q.m)
        throw_domain("BadInput", "meet needs a common ground set");
    Partition out;
    out.m = p.m;
    for (std::uint64_t a : p.blocks)
        for (std::uint64_t b : q.blocks)
            if (std::uint64_t c = a & b)
                out.blocks.push_back(c);
    canonicalize(out);
    return out;
}

Partition join_nnc(const Partition& p, const Partition& q)
{
    if (p.m != q.m)
        throw_domain("BadInput", "join needs a common ground set");
    const int m = p.m;

    std::uint64_t covered = 0;
    for (std::uint64_t b : p.blocks)
        covered |= b;
    for (std::uint64_t b : q.blocks)
        covered |= b;

    // Transitive-closure join of the singleton completions.
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    auto merge_block = [&](std::uint64_t mask) {
        int root = -1;
        for (int i = 0; i < m; ++i)
            if (mask & (1ULL << i)) {
                if (root < 0)
                    root = find(i);
                else
                    parent[find(i)] = root;
            }
    };
    for (std::uint64_t b : p.blocks)
        merge_block(b);
    for (std::uint64_t b : q.blocks)
        merge_block(b);

    std::vector<std::uint64_t> masks(m, 0);
    for (int i = 0; i < m; ++i)
        masks[find(i)] |= 1ULL << i;
    std::vector<std::uint64_t> blocks;
    for (std::uint64_t b : masks)
        if (b)
            blocks.push_back(b);

    // Merge crossing blocks until non-crossing; every merge is forced in any
    // non-crossing coarsening, so the fixpoint is the finest one.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < blocks.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j)
                if (masks_cross(blocks[i], blocks[j], m)) {
                    blocks[i] |= blocks[j];
                    blocks.erase(blocks.begin() + static_cast<long>(j));
                    merged = true;
                }
    }

    Partition out;
    out.m = m;
    for (std::uint64_t b : blocks)
        if (std::popcount(b) > 1 || (b & covered))
            out.blocks.push_back(b);
    canonicalize(out);
    return out;
}

Partition eta(const Partition& p)
{
    Partition out;
    out.m = p.m;
    for (std::uint64_t mask : p.blocks) {
        if (std::popcount(mask) == 1) {
            const int e = std::countr_zero(mask) + 1;
            if (e % 2 == 0)
                continue;
        }
        out.blocks.push_back(mask);
    }
    return out;
}

Partition meet_e(const Partition& p, const Partition& q)
{
    return eta(meet_nnc(p, q));
}

Partition join_e(const Partition& p, const Partition& q)
{
    return join_nnc(p, q);
}

Partition zeta(const Partition& p)
{
    check_ground(2 * p.m);
    Partition out;
    out.m = 2 * p.m;
    for (std::uint64_t mask : p.blocks) {
        std::uint64_t img = 0;
        for (int i = 0; i < p.m; ++i)
            if (mask & (1ULL << i))
                img |= 1ULL << (2 * i);  // element i+1 -> 2(i+1)-1, bit 2i
        out.blocks.push_back(img);
    }
    canonicalize(out);
    return out;
}

bool partition_leq(const Partition& p, const Partition& q)
{
    if (p.m != q.m)
        throw_domain("BadInput", "order needs a common ground set");
    for (std::uint64_t b : p.blocks) {
        bool inside = false;
        for (std::uint64_t c : q.blocks)
            if ((b & c) == b) {
                inside = true;
                break;
            }
        if (!inside)
            return false;
    }
    return true;
}

bool thick_membership(const Arc& x, const Partition& p, const Surface& surface)
{
    if (p.m != surface.sites())
        throw_domain("BadInput", "partition ground set must be [2n]");
    std::uint64_t need = 0;
    for (int num : orbit_numbers(x, surface))
        need |= 1ULL << (num - 1);
    for (std::uint64_t b : p.blocks)
        if ((need & b) == need)
            return true;
    return false;
}

Partition thick_closure(const DirectSum& g)
{
    check_ground(g.surface().sites());
    Partition out;
    out.m = g.surface().sites();
    for (const HcComponent& comp : hc_decompose(g)) {
        std::uint64_t mask = 0;
        for (const Site& s : comp.orbit_sites)
            mask |= 1ULL << (site_number(s, g.surface()) - 1);
        out.blocks.push_back(mask);
    }
    canonicalize(out);
    return out;
}

BigInt catalan(int i)
{
    if (i < 0)
        throw_domain("BadInput", "catalan needs a non-negative argument");
    // C_i = C(2i, i) / (i + 1)
    return binomial(2 * i, i) / (i + 1);
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

BigInt nnc_count(int n)
{
    if (n < 0)
        throw_domain("BadInput", "nnc_count needs a non-negative argument");
    BigInt total = 0;
    for (int i = 0; i <= n; ++i)
        total += binomial(n, i) * catalan(i);
    return total;
}

BigInt ennc_count(int two_n)
{
    if (two_n < 0 || two_n % 2 != 0)
        throw_domain("BadInput", "ennc_count needs an even ground set size");
    const int n = two_n / 2;
    BigInt total = 0;
    for (int j = 0; j <= n; ++j) {
        const BigInt term = binomial(n, j) * nnc_count(2 * n - j);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

namespace {

/* Complete non-crossing partitions of the ordered element list (positions in
 * the ground set); blocks are emitted as masks. */
void complete_nc(const std::vector<int>& elems, std::vector<Partition>& out, int m)
{
    if (elems.empty()) {
        out.push_back(Partition{m, {}});
        return;
    }
    const int first = elems[0];
    const std::size_t rest = elems.size() - 1;
    // Choose the rest of the block containing `first`; the block cuts the
    // remaining elements into independent gaps.
    for (std::uint64_t pick = 0; pick < (1ULL << rest); ++pick) {
        std::uint64_t block = 1ULL << first;
        std::vector<std::vector<int>> gaps(1);
        for (std::size_t i = 0; i < rest; ++i) {
            if (pick & (1ULL << i)) {
                block |= 1ULL << elems[i + 1];
                gaps.emplace_back();
            } else {
                gaps.back().push_back(elems[i + 1]);
            }
        }
        // Partition each gap independently and take the cross product.
        std::vector<std::vector<Partition>> sub(gaps.size());
        for (std::size_t gi = 0; gi < gaps.size(); ++gi)
            complete_nc(gaps[gi], sub[gi], m);
        std::vector<std::size_t> idx(gaps.size(), 0);
        while (true) {
            std::vector<std::uint64_t> merged{block};
            for (std::size_t gi = 0; gi < gaps.size(); ++gi)
                for (std::uint64_t b : sub[gi][idx[gi]].blocks)
                    merged.push_back(b);
            Partition p;
            p.m = m;
            p.blocks = std::move(merged);
            canonicalize(p);
            out.push_back(std::move(p));
            std::size_t gi = 0;
            while (gi < gaps.size() && ++idx[gi] == sub[gi].size()) {
                idx[gi] = 0;
                ++gi;
            }
            if (gi == gaps.size())
                break;
        }
    }
}

}  // namespace

std::vector<Partition> enumerate_nnc(int m, int cap)
{
    check_ground(m);
    // |NNC_12| is already 4.3 million; refuse to materialise anything bigger.
    if (m > cap || m > 12)
        throw_domain("CapExceeded", "enumeration ground set exceeds the cap");
    std::vector<Partition> out;
    for (std::uint64_t subset = 0; subset < (1ULL << m); ++subset) {
        std::vector<int> elems;
        for (int i = 0; i < m; ++i)
            if (subset & (1ULL << i))
                elems.push_back(i);
        complete_nc(elems, out, m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> enumerate_ennc(int two_n, int cap)
{
    if (two_n % 2 != 0)
        throw_domain("BadInput", "eNNC ground set size must be even");
    std::vector<Partition> out;
    for (Partition& p : enumerate_nnc(two_n, cap))
        if (is_even_exclusive(p))
            out.push_back(std::move(p));
    return out;
}

}  // namespace cae
