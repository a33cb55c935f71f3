#include "opprank/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace opprank {

namespace {

using Clock = std::chrono::steady_clock;
using Words = std::vector<uint64_t>;

std::size_t popcount_words(const Words& w) {
    std::size_t s = 0;
    for (uint64_t x : w) s += std::popcount(x);
    return s;
}

void and_row(Words& dst, const uint64_t* row) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= row[i];
}

bool test_bit(const Words& w, std::size_t v) {
    return (w[v / 64] >> (v % 64)) & 1;
}

void clear_bit(Words& w, std::size_t v) { w[v / 64] &= ~(uint64_t(1) << (v % 64)); }
void set_bit(Words& w, std::size_t v) { w[v / 64] |= uint64_t(1) << (v % 64); }

template <typename F>
void for_each_bit(const Words& w, F&& f) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        uint64_t x = w[i];
        while (x) {
            f(i * 64 + std::size_t(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

}  // namespace

Graph Graph::from_bitmatrix(BitMatrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("Graph: adjacency matrix must be square");
    if (!m.is_symmetric())
        throw std::invalid_argument("Graph: adjacency matrix must be symmetric");
    if (!m.zero_diagonal())
        throw std::invalid_argument("Graph: adjacency matrix must have zero diagonal");
    Graph g;
    g.n = m.rows();
    g.adj = std::move(m);
    return g;
}

bool verify_clique(const Graph& g, const std::vector<int>& witness) {
    for (int v : witness)
        if (v < 0 || std::size_t(v) >= g.n) return false;
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j) {
            if (witness[i] == witness[j]) return false;
            if (!g.adjacent(witness[i], witness[j])) return false;
        }
    return true;
}

CliqueResult greedy_lower_bound(const Graph& g, std::size_t restarts,
                                std::uint64_t seed, std::size_t target) {
    auto t0 = Clock::now();
    CliqueResult best;
    best.optimal = false;
    best.bound_used = g.n;
    if (g.n == 0 || restarts == 0) return best;
    const std::size_t words = g.adj.words_per_row();

    std::vector<int> cur, ties, ms;
    Words cand(words);
    for (std::size_t r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + r + 1);
        cur.clear();
        int start = int(rng() % g.n);
        cur.push_back(start);
        std::copy(g.adj.row(start), g.adj.row(start) + words, cand.begin());
        // grow: pick a candidate keeping the most candidates, random ties
        while (true) {
            std::size_t bestkeep = 0;
            ties.clear();
            for_each_bit(cand, [&](std::size_t u) {
                std::size_t keep = 0;
                const uint64_t* row = g.adj.row(u);
                for (std::size_t i = 0; i < words; ++i)
                    keep += std::popcount(cand[i] & row[i]);
                if (keep > bestkeep) {
                    bestkeep = keep;
                    ties.clear();
                    ties.push_back(int(u));
                } else if (keep == bestkeep) {
                    ties.push_back(int(u));
                }
            });
            if (ties.empty()) break;
            int u = ties[rng() % ties.size()];
            cur.push_back(u);
            and_row(cand, g.adj.row(u));
        }
        // (1,2)-swap local improvement
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t drop = 0; drop < cur.size() && !improved; ++drop) {
                Words mask(words, ~uint64_t(0));
                for (std::size_t i = 0; i < cur.size(); ++i)
                    if (i != drop) and_row(mask, g.adj.row(cur[i]));
                clear_bit(mask, cur[drop]);
                ms.clear();
                for_each_bit(mask, [&](std::size_t u) {
                    if (u < g.n) ms.push_back(int(u));
                });
                for (std::size_t a = 0; a < ms.size() && !improved; ++a)
                    for (std::size_t b = a + 1; b < ms.size(); ++b)
                        if (g.adjacent(ms[a], ms[b])) {
                            cur.erase(cur.begin() + drop);
                            cur.push_back(ms[a]);
                            cur.push_back(ms[b]);
                            improved = true;
                            break;
                        }
            }
        }
        if (cur.size() > best.size) {
            best.size = cur.size();
            best.witness = cur;
            if (target && best.size >= target) break;
        }
    }
    if (!verify_clique(g, best.witness))
        throw std::logic_error("greedy_lower_bound: produced an invalid clique");
    best.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    return best;
}

namespace {

struct SearchState {
    const Graph& g;
    std::size_t words;
    std::size_t ub = 0;
    std::atomic<std::size_t> best{0};
    std::vector<int> best_witness;
    std::mutex witness_mu;
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    uint64_t node_budget = UINT64_MAX;
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::vector<int> order;  // static vertex order, degree descending

    explicit SearchState(const Graph& gr) : g(gr), words(gr.adj.words_per_row()) {}

    void offer(const std::vector<int>& clique) {
        std::size_t sz = clique.size();
        std::size_t cur = best.load();
        while (sz > cur && !best.compare_exchange_weak(cur, sz)) {
        }
        if (sz > cur) {
            std::lock_guard<std::mutex> lk(witness_mu);
            if (clique.size() >= best_witness.size()) best_witness = clique;
        }
    }

    bool over_budget() {
        uint64_t n = nodes.load(std::memory_order_relaxed);
        if (n > node_budget) return true;
        if (has_deadline && (n & 0xfff) == 0 && Clock::now() > deadline) return true;
        return false;
    }
};

struct Worker {
    SearchState& st;
    struct Level {
        std::vector<std::pair<int, int>> seq;  // (vertex, color), color ascending
        std::vector<Words> classes;
        Words next;
    };
    std::vector<Level> levels;
    std::vector<int> cur;

    explicit Worker(SearchState& s) : st(s) {}

    Level& level(std::size_t depth) {
        while (levels.size() <= depth) levels.emplace_back();
        return levels[depth];
    }

    // greedy first-fit coloring in static order; seq comes out sorted by
    // color because classes are emitted in creation order
    void color_sort(const Words& P, Level& L) {
        L.seq.clear();
        std::size_t nclasses = 0;
        for (int v : st.order) {
            if (!test_bit(P, std::size_t(v))) continue;
            const uint64_t* row = st.g.adj.row(std::size_t(v));
            std::size_t c = 0;
            for (; c < nclasses; ++c) {
                bool clash = false;
                const Words& cls = L.classes[c];
                for (std::size_t i = 0; i < st.words; ++i)
                    if (cls[i] & row[i]) { clash = true; break; }
                if (!clash) break;
            }
            if (c == nclasses) {
                if (L.classes.size() <= nclasses) L.classes.emplace_back(st.words);
                std::fill(L.classes[c].begin(), L.classes[c].end(), 0);
                ++nclasses;
            }
            set_bit(L.classes[c], std::size_t(v));
        }
        for (std::size_t c = 0; c < nclasses; ++c)
            for_each_bit(L.classes[c],
                         [&](std::size_t v) { L.seq.emplace_back(int(v), int(c) + 1); });
    }

    void expand(const Words& P, std::size_t depth) {
        st.nodes.fetch_add(1, std::memory_order_relaxed);
        if (st.aborted.load(std::memory_order_relaxed)) return;
        if (st.over_budget()) {
            st.aborted.store(true);
            return;
        }
        Level& L = level(depth);
        color_sort(P, L);
        for (std::size_t idx = L.seq.size(); idx-- > 0;) {
            if (st.aborted.load(std::memory_order_relaxed)) return;
            std::size_t bestnow = st.best.load(std::memory_order_relaxed);
            if (bestnow >= st.ub) return;  // caller-asserted bound attained
            auto [v, c] = L.seq[idx];
            if (cur.size() + std::size_t(c) <= bestnow) return;
            Words& P2 = L.next;
            P2.assign(st.words, 0);
            for (std::size_t i = 0; i < idx; ++i)
                set_bit(P2, std::size_t(L.seq[i].first));
            and_row(P2, st.g.adj.row(std::size_t(v)));
            cur.push_back(v);
            if (popcount_words(P2) == 0)
                st.offer(cur);
            else
                expand(P2, depth + 1);
            cur.pop_back();
        }
    }
};

}  // namespace

CliqueResult max_clique_exact(const Graph& g, const ExactOptions& opt) {
    auto t0 = Clock::now();
    CliqueResult res;
    if (g.n == 0) {
        res.optimal = true;
        return res;
    }
    SearchState st(g);
    st.ub = opt.upper_bound ? std::min(opt.upper_bound, g.n) : g.n;
    st.node_budget = opt.node_budget;
    if (opt.time_budget_s > 0) {
        st.has_deadline = true;
        st.deadline = t0 + std::chrono::milliseconds(long(opt.time_budget_s * 1000));
    }
    if (!opt.initial_clique.empty()) {
        if (!verify_clique(g, opt.initial_clique))
            throw std::invalid_argument("max_clique_exact: invalid initial clique");
        st.best.store(opt.initial_clique.size());
        st.best_witness = opt.initial_clique;
    }

    std::vector<std::size_t> deg(g.n);
    for (std::size_t i = 0; i < g.n; ++i) deg[i] = g.degree(i);
    st.order.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) st.order[i] = int(i);
    std::stable_sort(st.order.begin(), st.order.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });

    std::vector<int> root_cur;
    Words P0(st.words, 0);
    if (opt.fix_first_vertex) {
        for (std::size_t v = 1; v < g.n; ++v)
            if (deg[v] != deg[0])
                throw std::invalid_argument(
                    "max_clique_exact: fix_first_vertex needs constant degree");
        auto profile = [&](std::size_t src) {
            std::vector<int> dist(g.n, -1);
            std::vector<std::size_t> prof, frontier{src};
            dist[src] = 0;
            while (!frontier.empty()) {
                prof.push_back(frontier.size());
                std::vector<std::size_t> next;
                for (auto u : frontier)
                    for (std::size_t w = 0; w < g.n; ++w)
                        if (dist[w] < 0 && g.adjacent(u, w)) {
                            dist[w] = dist[u] + 1;
                            next.push_back(w);
                        }
                frontier = std::move(next);
            }
            return prof;
        };
        auto p0 = profile(0);
        for (std::size_t v = 1; v < g.n; ++v)
            if (profile(v) != p0)
                throw std::invalid_argument(
                    "max_clique_exact: fix_first_vertex needs constant BFS profile");
        root_cur.push_back(0);
        std::copy(g.adj.row(0), g.adj.row(0) + st.words, P0.begin());
        if (st.best.load() == 0) {
            st.best.store(1);
            st.best_witness = {0};
        }
    } else {
        for (std::size_t v = 0; v < g.n; ++v) set_bit(P0, v);
    }
    res.bound_used = st.ub;

    // root coloring once; branches are independent and claimed in reverse
    // color order by the workers
    Worker rootw(st);
    rootw.color_sort(P0, rootw.level(0));
    auto rootseq = rootw.level(0).seq;
    if (st.best.load() == 0 && !rootseq.empty()) {
        st.best.store(1);
        st.best_witness = {rootseq[0].first};
    }

    std::atomic<long> next_branch{long(rootseq.size()) - 1};
    std::atomic<bool> root_pruned{false};
    int nthreads = std::max(1, opt.threads);
    auto worker_fn = [&]() {
        Worker w(st);
        Words P2(st.words);
        while (!st.aborted.load() && !root_pruned.load()) {
            long i = next_branch.fetch_sub(1);
            if (i < 0) break;
            std::size_t bestnow = st.best.load();
            if (bestnow >= st.ub) break;
            auto [v, c] = rootseq[std::size_t(i)];
            if (root_cur.size() + std::size_t(c) <= bestnow) {
                root_pruned.store(true);  // all remaining colors are smaller
                break;
            }
            P2.assign(st.words, 0);
            for (long j = 0; j < i; ++j)
                set_bit(P2, std::size_t(rootseq[std::size_t(j)].first));
            and_row(P2, g.adj.row(std::size_t(v)));
            w.cur = root_cur;
            w.cur.push_back(v);
            if (popcount_words(P2) == 0)
                st.offer(w.cur);
            else
                w.expand(P2, 1);
        }
    };
    if (nthreads == 1) {
        worker_fn();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker_fn);
        for (auto& t : pool) t.join();
    }

    res.size = st.best.load();
    res.witness = st.best_witness;
    res.optimal = !st.aborted.load();
    res.nodes = st.nodes.load();
    res.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    if (!verify_clique(g, res.witness) || res.witness.size() != res.size)
        throw std::logic_error("max_clique_exact: inconsistent result");
    return res;
}

}  // namespace opprank
