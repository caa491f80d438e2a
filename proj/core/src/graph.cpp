#include "rml/graph.hpp"

#include "rml/error.hpp"

#include <string>

namespace rml {

Graph::Graph(int n) : adj_(n)
{
    if (n < 0)
        throw PreconditionError("Graph: negative order");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw PreconditionError("Graph: edge endpoint out of range");
    if (u == v)
        throw PreconditionError("Graph: self-loop at vertex " + std::to_string(u));
    adj_.set_edge(u, v);
}

void Graph::remove_edge(int u, int v) { adj_.reset_edge(u, v); }

int Graph::edge_count() const
{
    int sum = 0;
    for (int v = 0; v < order(); ++v)
        sum += degree(v);
    return sum / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int i = 0; i < order(); ++i)
        for_each_bit(neighbours(i), [&](int j) {
            if (j > i)
                out.emplace_back(i, j);
        });
    return out;
}

Graph Graph::complement() const
{
    Graph c(order());
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j)
            if (!has_edge(i, j))
                c.adj_.set_edge(i, j);
    return c;
}

Graph Graph::induced(const std::vector<int>& vertices) const
{
    const int m = static_cast<int>(vertices.size());
    Graph g(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (has_edge(vertices[a], vertices[b]))
                g.adj_.set_edge(a, b);
    return g;
}

bool Graph::connected() const
{
    const int n = order();
    if (n <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for_each_bit(neighbours(v), [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == n;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

} // namespace rml
