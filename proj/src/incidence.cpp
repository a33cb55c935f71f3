#include "opprank/incidence.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace opprank {

namespace {

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
    throw std::runtime_error("ig parse error at line " + std::to_string(lineno) +
                             ": " + msg);
}

// adjacency of the bipartite incidence graph; points 0..P-1, lines P..P+L-1
std::vector<std::vector<int>> incidence_adjacency(const IncidenceGeometry& G) {
    std::vector<std::vector<int>> adj(G.n_points + G.n_lines);
    for (int li = 0; li < G.n_lines; ++li)
        for (int p : G.lines[li]) {
            adj[p].push_back(G.n_points + li);
            adj[G.n_points + li].push_back(p);
        }
    return adj;
}

std::vector<int> bfs(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1);
    std::deque<int> dq{src};
    dist[src] = 0;
    while (!dq.empty()) {
        int u = dq.front();
        dq.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                dq.push_back(w);
            }
    }
    return dist;
}

// shortest cycle through src (exact; standard BFS argument)
int shortest_cycle_through(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1), parent(adj.size(), -1);
    std::deque<int> dq{src};
    dist[src] = 0;
    int best = INT_MAX;
    while (!dq.empty()) {
        int u = dq.front();
        dq.pop_front();
        if (2 * dist[u] >= best) break;
        for (int w : adj[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                dq.push_back(w);
            } else if (parent[u] != w) {
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    return best;
}

}  // namespace

IncidenceGeometry load_geometry(std::istream& in) {
    IncidenceGeometry G;
    std::string line;
    int lineno = 0;
    int stage = 0;  // 0: expect header, 1: points, 2: lines, 3: line data
    int read_lines = 0;
    std::set<std::vector<int>> line_keys;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        if (!sv.empty() && sv.back() == '\r') sv.remove_suffix(1);
        if (sv.empty() || sv.front() == '#') continue;
        std::istringstream iss{std::string(sv)};
        if (stage == 0) {
            std::string word;
            int version = 0;
            if (!(iss >> word >> version) || word != "ig" || version != 1)
                parse_fail(lineno, "expected header 'ig 1'");
            stage = 1;
        } else if (stage == 1) {
            std::string word;
            if (!(iss >> word >> G.n_points) || word != "points" || G.n_points <= 0)
                parse_fail(lineno, "expected 'points N'");
            stage = 2;
        } else if (stage == 2) {
            std::string word;
            if (!(iss >> word >> G.n_lines) || word != "lines" || G.n_lines <= 0)
                parse_fail(lineno, "expected 'lines M'");
            G.lines.reserve(G.n_lines);
            stage = 3;
        } else {
            if (read_lines == G.n_lines)
                parse_fail(lineno, "more line records than declared");
            std::vector<int> pts;
            long idx;
            while (iss >> idx) {
                if (idx < 0 || idx >= G.n_points)
                    parse_fail(lineno, "point index " + std::to_string(idx) +
                                           " out of range [0," +
                                           std::to_string(G.n_points) + ")");
                pts.push_back(int(idx));
            }
            if (!iss.eof()) parse_fail(lineno, "non-integer token in line record");
            if (pts.empty()) parse_fail(lineno, "empty line record");
            auto sorted = pts;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                parse_fail(lineno, "repeated point within a line");
            if (!line_keys.insert(sorted).second)
                parse_fail(lineno, "duplicate line");
            G.lines.push_back(std::move(pts));
            ++read_lines;
        }
    }
    if (stage != 3 || read_lines != G.n_lines)
        parse_fail(lineno, "truncated file: expected " +
                               std::to_string(G.n_lines) + " line records, got " +
                               std::to_string(read_lines));
    return G;
}

PolygonCertificate verify_generalized_polygon(const IncidenceGeometry& G,
                                              int n, int s, int r) {
    PolygonCertificate cert;
    cert.n = n;
    cert.s = s;
    cert.r = r;
    for (int li = 0; li < G.n_lines; ++li)
        if ((int)G.lines[li].size() != s + 1) {
            cert.witness = "line " + std::to_string(li) + " has " +
                           std::to_string(G.lines[li].size()) + " points, expected " +
                           std::to_string(s + 1);
            return cert;
        }
    std::vector<int> degree(G.n_points, 0);
    for (const auto& l : G.lines)
        for (int p : l) ++degree[p];
    for (int p = 0; p < G.n_points; ++p)
        if (degree[p] != r + 1) {
            cert.witness = "point " + std::to_string(p) + " lies on " +
                           std::to_string(degree[p]) + " lines, expected " +
                           std::to_string(r + 1);
            return cert;
        }
    auto adj = incidence_adjacency(G);
    const int N = int(adj.size());
    int diameter = 0;
    for (int v = 0; v < N; ++v) {
        auto dist = bfs(adj, v);
        for (int u = 0; u < N; ++u) {
            if (dist[u] < 0) {
                cert.witness = "incidence graph is disconnected";
                return cert;
            }
            diameter = std::max(diameter, dist[u]);
        }
    }
    if (diameter != n) {
        cert.witness = "incidence graph has diameter " + std::to_string(diameter) +
                       ", expected " + std::to_string(n);
        return cert;
    }
    int girth = INT_MAX;
    for (int v = 0; v < N; ++v)
        girth = std::min(girth, shortest_cycle_through(adj, v));
    if (girth != 2 * n) {
        cert.witness = "incidence graph has girth " + std::to_string(girth) +
                       ", expected " + std::to_string(2 * n);
        return cert;
    }
    cert.ok = true;
    return cert;
}

std::vector<BitMatrix> distance_relation_matrices(const IncidenceGeometry& G) {
    auto adj = incidence_adjacency(G);
    const std::size_t n = G.n_points;
    std::vector<BitMatrix> A(5, BitMatrix(n, n));
    for (std::size_t p = 0; p < n; ++p) {
        auto dist = bfs(adj, int(p));
        for (std::size_t q = 0; q < n; ++q) {
            int d = dist[q];
            if (d < 0 || d % 2 != 0 || d > 8)
                throw std::runtime_error(
                    "distance_relation_matrices: geometry is not a verified "
                    "octagon (point distance " + std::to_string(d) + ")");
            A[d / 2].set(p, q, true);
        }
    }
    return A;
}

}  // namespace opprank
