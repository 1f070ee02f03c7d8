#include "cae/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cae {

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

std::vector<Arc> shifts_in_window(const Arc& a, long long window)
{
    std::vector<Arc> out;
    const long long reach = window + max_abs_offset(a);
    for (long long j = -reach; j <= reach; ++j) {
        const Arc img = suspend(a, j);
        if (in_window(img, window))
            out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FiniteUniverse FiniteUniverse::build(const Surface& surface, long long window)
{
    return FiniteUniverse{surface, window, all_valid_arcs(surface, window)};
}

bool FiniteUniverse::contains(const Arc& a) const
{
    return in_window(a, window);
}

std::set<Arc> brute_closure(const DirectSum& g, long long window)
{
    for (const Arc& a : g.summands())
        if (!in_window(a, window / 2))
            throw_domain("OutOfRange", "summand offsets must lie within window/2");

    std::set<Arc> members;
    std::vector<Arc> list;
    std::size_t next = 0;
    auto add = [&](const Arc& a) {
        if (in_window(a, window) && members.insert(a).second)
            list.push_back(a);
    };
    for (const Arc& a : g.summands())
        add(a);
    while (next < list.size()) {
        const Arc a = list[next++];
        add(suspend(a, 1));
        add(suspend(a, -1));
        // Pair against everything present so far; later members pair with a
        // when their own turn comes.
        const std::size_t snapshot = list.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            const Arc b = list[i];
            if (ext1_dim(b, a))
                for (const Arc& m : extension_middle(a, b).middle)
                    add(m);
            if (ext1_dim(a, b))
                for (const Arc& m : extension_middle(b, a).middle)
                    add(m);
        }
    }
    return members;
}

namespace {

struct NodeGraph {
    std::vector<Arc> nodes;
    std::map<Arc, int> index;

    explicit NodeGraph(std::set<Arc> node_set) : nodes(node_set.begin(), node_set.end())
    {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            index[nodes[i]] = static_cast<int>(i);
    }

    bool edge(int i, int j) const
    {
        return ext1_dim(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]) ||
               ext1_dim(nodes[static_cast<std::size_t>(j)], nodes[static_cast<std::size_t>(i)]);
    }
};

}  // namespace

bool ext_graph_connected(const Surface& surface, const Arc& x, const Arc& y, long long window)
{
    (void)surface;
    const std::vector<Arc> xs = shifts_in_window(x, window);
    const std::vector<Arc> ys = shifts_in_window(y, window);
    std::vector<Arc> nodes = xs;
    nodes.insert(nodes.end(), ys.begin(), ys.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    std::vector<bool> is_target(nodes.size(), false);
    for (const Arc& a : ys)
        is_target[static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), a) - nodes.begin())] = true;

    std::vector<bool> seen(nodes.size(), false);
    std::deque<std::size_t> queue;
    for (const Arc& a : xs) {
        const auto i = static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), a) - nodes.begin());
        if (is_target[i])
            return true;
        if (!seen[i]) {
            seen[i] = true;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < nodes.size(); ++w) {
            if (seen[w])
                continue;
            if (ext1_dim(nodes[v], nodes[w]) || ext1_dim(nodes[w], nodes[v])) {
                if (is_target[w])
                    return true;
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

namespace {

std::optional<std::vector<Arc>> shortest_path(const DirectSum& context, const Arc& x, const Arc& y,
                                              long long window)
{
    if (!in_window(x, window) || !in_window(y, window))
        throw_domain("OutOfRange", "arcs must lie inside the window");
    std::set<Arc> node_set;
    for (const Arc& s : context.summands())
        for (const Arc& a : shifts_in_window(s, window))
            node_set.insert(a);
    node_set.insert(x);
    node_set.insert(y);
    NodeGraph graph(std::move(node_set));
    const int src = graph.index.at(x);
    const int dst = graph.index.at(y);

    std::vector<int> prev(graph.nodes.size(), -2);
    std::deque<int> queue{src};
    prev[static_cast<std::size_t>(src)] = -1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        if (v == dst)
            break;
        for (int w = 0; w < static_cast<int>(graph.nodes.size()); ++w)
            if (prev[static_cast<std::size_t>(w)] == -2 && graph.edge(v, w)) {
                prev[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    if (prev[static_cast<std::size_t>(dst)] == -2)
        return std::nullopt;
    std::vector<Arc> path;
    for (int v = dst; v >= 0; v = prev[static_cast<std::size_t>(v)])
        path.push_back(graph.nodes[static_cast<std::size_t>(v)]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<long long> zigzag_distance(const DirectSum& context, const Arc& x, const Arc& y,
                                         long long window)
{
    const auto path = shortest_path(context, x, y, window);
    if (!path)
        return std::nullopt;
    return static_cast<long long>(path->size()) - 1;
}

std::optional<long long> zigzag_distance(const Surface& surface, const Arc& x, const Arc& y,
                                         long long window)
{
    return zigzag_distance(DirectSum(surface, {x, y}), x, y, window);
}

std::optional<ZigZag> zigzag_path(const DirectSum& context, const Arc& x, const Arc& y,
                                  long long window)
{
    const auto path = shortest_path(context, x, y, window);
    if (!path)
        return std::nullopt;
    ZigZag z;
    for (const Arc& a : *path)
        z.nodes.emplace_back(a, 0);
    return z;
}

Arc sample_arc(const Surface& surface, long long max_offset, std::mt19937& rng)
{
    auto pick_point = [&]() {
        const int n = surface.n();
        const long long span = 2 * max_offset + 1;
        const long long total = n + n * span;
        const long long r = static_cast<long long>(rng() % static_cast<unsigned long>(total));
        if (r < n)
            return acc_point(surface, r);
        const long long rr = r - n;
        return reg_point(surface, rr / span, rr % span - max_offset);
    };
    for (;;) {
        const MarkedPoint p = pick_point();
        const MarkedPoint q = pick_point();
        if (auto a = try_make_arc(p, q))
            return *a;
    }
}

std::vector<DirectSum> sample_objects(const Surface& surface, int count, int max_summands,
                                      long long max_offset, unsigned seed)
{
    std::mt19937 rng(seed);
    std::vector<DirectSum> out;
    for (int i = 0; i < count; ++i) {
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_summands));
        std::vector<Arc> arcs;
        for (int j = 0; j < k; ++j)
            arcs.push_back(sample_arc(surface, max_offset, rng));
        out.emplace_back(surface, std::move(arcs));
    }
    return out;
}

}  // namespace cae
