#include "cae/homology.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace cae {

DirectSum::DirectSum(Surface surface, std::vector<Arc> summands)
    : surface_(surface), summands_(std::move(summands))
{
    std::sort(summands_.begin(), summands_.end());
}

DirectSum DirectSum::without(std::size_t index) const
{
    std::vector<Arc> rest = summands_;
    rest.erase(rest.begin() + static_cast<long>(index));
    return DirectSum(surface_, std::move(rest));
}

DirectSum DirectSum::plus(const Arc& extra) const
{
    std::vector<Arc> all = summands_;
    all.push_back(extra);
    return DirectSum(surface_, std::move(all));
}

bool hc_connected_pair(const Arc& x, const Arc& y, const Surface& surface)
{
    const std::vector<int> o1 = orbit_numbers(x, surface);
    const std::vector<int> o2 = orbit_numbers(y, surface);
    for (int a : o1)
        for (int b : o2)
            if (a == b)
                return true;
    if (o1.size() == 2 && o2.size() == 2) {
        // {p, r} and {q, s} alternate iff exactly one of q, s lies in the
        // open interval (p, r) of the number circle.
        const bool q_in = o1[0] < o2[0] && o2[0] < o1[1];
        const bool s_in = o1[0] < o2[1] && o2[1] < o1[1];
        return q_in != s_in;
    }
    return false;
}

std::vector<HcComponent> hc_decompose(const DirectSum& g)
{
    const auto& arcs = g.summands();
    const std::size_t n = arcs.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (hc_connected_pair(arcs[i], arcs[j], g.surface()))
                parent[find(i)] = find(j);

    std::vector<HcComponent> comps;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(slot[root])].summands.push_back(arcs[i]);
    }
    for (HcComponent& c : comps) {
        std::vector<int> nums;
        for (const Arc& a : c.summands)
            for (int num : orbit_numbers(a, g.surface()))
                nums.push_back(num);
        std::sort(nums.begin(), nums.end());
        nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
        for (int num : nums)
            c.orbit_sites.push_back(site_from_number(num, g.surface()));
    }
    // Summands are already canonically sorted, so components come out ordered
    // by their least summand.
    return comps;
}

bool is_hom_connected(const DirectSum& g)
{
    return hc_decompose(g).size() <= 1;
}

std::vector<Site> orbit(const DirectSum& g)
{
    std::vector<int> nums;
    for (const Arc& a : g.summands())
        for (int num : orbit_numbers(a, g.surface()))
            nums.push_back(num);
    std::sort(nums.begin(), nums.end());
    nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
    std::vector<Site> sites;
    for (int num : nums)
        sites.push_back(site_from_number(num, g.surface()));
    return sites;
}

bool has_complete_orbit(const DirectSum& g)
{
    return static_cast<int>(orbit(g).size()) == g.surface().sites();
}

namespace {

bool in_window(const Arc& a, long long window)
{
    auto ok = [window](const MarkedPoint& p) {
        return p.is_acc() || (p.offset >= -window && p.offset <= window);
    };
    return ok(a.a) && ok(a.b);
}

long long max_abs_offset(const Arc& a)
{
    long long m = 0;
    if (a.a.is_reg())
        m = std::max(m, std::llabs(a.a.offset));
    if (a.b.is_reg())
        m = std::max(m, std::llabs(a.b.offset));
    return m;
}

/* Distinct arcs of { G_i[j] : |offsets| <= W }. */
std::set<Arc> shift_nodes(const DirectSum& g, long long window)
{
    std::set<Arc> nodes;
    for (const Arc& a : g.summands()) {
        const long long reach = window + max_abs_offset(a);
        for (long long j = -reach; j <= reach; ++j) {
            const Arc img = suspend(a, j);
            if (in_window(img, window))
                nodes.insert(img);
        }
    }
    return nodes;
}

struct ZigZagGraph {
    std::vector<Arc> nodes;
    std::vector<std::vector<int>> adj;

    explicit ZigZagGraph(const std::set<Arc>& node_set)
        : nodes(node_set.begin(), node_set.end()), adj(nodes.size())
    {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (ext1_dim(nodes[i], nodes[j]) || ext1_dim(nodes[j], nodes[i])) {
                    adj[i].push_back(static_cast<int>(j));
                    adj[j].push_back(static_cast<int>(i));
                }
    }

    std::vector<long long> distances_from(std::size_t src) const
    {
        std::vector<long long> dist(nodes.size(), -1);
        std::deque<std::size_t> queue{src};
        dist[src] = 0;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (int w : adj[v])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[v] + 1;
                    queue.push_back(static_cast<std::size_t>(w));
                }
        }
        return dist;
    }
};

/* Max over pairs of in-window nodes of their zig-zag distance, with paths
 * allowed through a doubled window so that boundary pairs are not starved of
 * intermediates; nullopt if some pair stays disconnected. */
std::optional<long long> diameter_at(const DirectSum& g, long long window)
{
    const ZigZagGraph graph(shift_nodes(g, 2 * window));
    if (graph.nodes.empty())
        return 0;
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        if (in_window(graph.nodes[i], window))
            inner.push_back(i);
    long long best = 0;
    for (std::size_t i : inner) {
        const auto dist = graph.distances_from(i);
        for (std::size_t j : inner) {
            if (dist[j] < 0)
                return std::nullopt;
            best = std::max(best, dist[j]);
        }
    }
    return best;
}

}  // namespace

std::optional<long long> homological_length(const DirectSum& g, long long window)
{
    if (window < 1)
        throw_domain("BadInput", "window must be at least 1");
    if (!is_hom_connected(g))
        throw_domain("NotConnected", "object is not homologically connected");
    if (g.summands().empty())
        return 0;
    const auto v1 = diameter_at(g, window);
    const auto v2 = diameter_at(g, 2 * window);
    if (v1 && v2 && *v1 == *v2)
        return *v1;
    return std::nullopt;
}

bool is_valid_zigzag(const ZigZag& z)
{
    for (std::size_t i = 0; i + 1 < z.nodes.size(); ++i) {
        const Arc& a = z.nodes[i].first;
        const Arc& b = z.nodes[i + 1].first;
        if (!ext1_dim(a, b) && !ext1_dim(b, a))
            return false;
    }
    return true;
}

LevelSets::LevelSets(DirectSum g, long long window) : g_(std::move(g)), window_(window)
{
    if (window < 1)
        throw_domain("BadInput", "window must be at least 1");
    levels_.push_back(shift_nodes(g_, window_));
}

const std::set<Arc>& LevelSets::level(int r)
{
    if (r < 1)
        throw_domain("BadInput", "level index starts at 1");
    while (static_cast<int>(levels_.size()) < r && !fixpoint_)
        extend_once();
    const std::size_t idx = std::min<std::size_t>(levels_.size(), static_cast<std::size_t>(r)) - 1;
    return levels_[idx];
}

void LevelSets::extend_once()
{
    const std::set<Arc>& base = levels_.front();
    const std::set<Arc>& prev = levels_.back();
    std::set<Arc> next = prev;
    for (const Arc& a : prev)
        for (const Arc& b : base) {
            // Middle of a triangle with first term in level r, third in
            // level 1, and the other way round.
            if (ext1_dim(b, a))
                for (const Arc& m : extension_middle(a, b).middle)
                    next.insert(m);
            if (ext1_dim(a, b))
                for (const Arc& m : extension_middle(b, a).middle)
                    next.insert(m);
        }
    if (next == prev)
        fixpoint_ = true;
    levels_.push_back(std::move(next));
}

bool level_membership(const Arc& target, const DirectSum& g, int r, long long window)
{
    if (r < 1)
        throw_domain("BadInput", "level index starts at 1");
    LevelSets levels(g, window);
    return levels.level(r).count(target) > 0;
}

GenerationTime generation_time(const DirectSum& g, long long window)
{
    if (!is_generator(g))
        throw_domain("NotAGenerator", "object is not a classical generator");
    const std::vector<Arc> margin = all_valid_arcs(g.surface(), window / 2);
    LevelSets levels(g, window);
    const int cap = 4 * g.surface().n() + 8;
    for (int m = 0; m <= cap; ++m) {
        const std::set<Arc>& reached = levels.level(m + 1);
        const bool covered = std::all_of(margin.begin(), margin.end(),
                                         [&](const Arc& a) { return reached.count(a) > 0; });
        if (covered)
            return GenerationTime{true, m};
        if (levels.fixpoint_reached())
            return GenerationTime{false, m};
    }
    return GenerationTime{false, cap};
}

bool is_generator(const DirectSum& g)
{
    return is_hom_connected(g) && has_complete_orbit(g);
}

bool is_minimal_generator(const DirectSum& g)
{
    if (!is_generator(g))
        throw_domain("NotAGenerator", "object is not a classical generator");
    for (std::size_t i = 0; i < g.summands().size(); ++i)
        if (is_generator(g.without(i)))
            return false;
    return true;
}

DirectSum standard_generator_E(int n)
{
    const Surface surface(n);
    std::vector<Arc> arcs;
    const MarkedPoint hub = acc_point(surface, 1);
    for (int i = 1; i <= n; ++i)
        arcs.push_back(make_arc(hub, reg_point(surface, i, 0)));
    for (int j = 1; j <= n - 1; ++j)
        arcs.push_back(make_arc(hub, acc_point(surface, j + 1)));
    return DirectSum(surface, std::move(arcs));
}

DirectSum generator_M(int n, int d)
{
    const Surface surface(n);
    if (d < 1 || d > 2 * n - 2)
        throw_domain("OutOfRange", "M_d needs 1 <= d <= 2n-2");
    const MarkedPoint hub = acc_point(surface, 1);
    std::vector<Arc> xs, ys;
    for (int i = 1; i <= n; ++i)
        xs.push_back(make_arc(hub, reg_point(surface, i, 0)));
    for (int j = 1; j <= n - 1; ++j)
        ys.push_back(make_arc(hub, acc_point(surface, j + 1)));
    for (int step = 2; step <= d; ++step) {
        if (step % 2 == 0) {
            const int k = step / 2;
            ys[static_cast<std::size_t>(k - 1)] =
                make_arc(reg_point(surface, k, 0), acc_point(surface, k + 1));
        } else {
            const int k = (step - 1) / 2;
            xs[static_cast<std::size_t>(k)] =
                make_arc(acc_point(surface, k + 1), reg_point(surface, k + 1, 0));
        }
    }
    std::vector<Arc> arcs = std::move(xs);
    arcs.insert(arcs.end(), ys.begin(), ys.end());
    return DirectSum(surface, std::move(arcs));
}

std::vector<Arc> all_valid_arcs(const Surface& surface, long long max_offset)
{
    std::vector<MarkedPoint> points;
    for (int i = 0; i < surface.n(); ++i) {
        points.push_back(acc_point(surface, i));
        for (long long k = -max_offset; k <= max_offset; ++k)
            points.push_back(reg_point(surface, i, k));
    }
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (auto a = try_make_arc(points[i], points[j]))
                arcs.push_back(*a);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

}  // namespace cae
