#include "doctest.h"

#include <random>

#include "opprank/bounds.hpp"
#include "opprank/clique.hpp"
#include "opprank/modrank.hpp"
#include "oracles.hpp"

using namespace opprank;

namespace {

Graph complete_graph(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m.set(i, j, true);
    return Graph::from_bitmatrix(std::move(m));
}

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
    BitMatrix m(n, n);
    std::bernoulli_distribution coin(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
    return Graph::from_bitmatrix(std::move(m));
}

// random graph with a planted clique on `y` random vertices
Graph planted_clique_graph(std::size_t n, std::size_t y, double density,
                           std::mt19937_64& rng, std::vector<int>& planted) {
    BitMatrix m(n, n);
    std::bernoulli_distribution coin(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
    std::vector<int> verts(n);
    for (std::size_t i = 0; i < n; ++i) verts[i] = int(i);
    std::shuffle(verts.begin(), verts.end(), rng);
    planted.assign(verts.begin(), verts.begin() + y);
    for (std::size_t a = 0; a < y; ++a)
        for (std::size_t b = a + 1; b < y; ++b) {
            m.set(planted[a], planted[b], true);
            m.set(planted[b], planted[a], true);
        }
    return Graph::from_bitmatrix(std::move(m));
}

}  // namespace

TEST_CASE("graph construction validates the adjacency matrix") {
    BitMatrix bad(3, 3);
    bad.set(0, 1, true);  // asymmetric
    CHECK_THROWS_AS(Graph::from_bitmatrix(std::move(bad)), std::invalid_argument);
    BitMatrix loop = BitMatrix::identity(3);
    CHECK_THROWS_AS(Graph::from_bitmatrix(std::move(loop)), std::invalid_argument);
}

TEST_CASE("verify_clique") {
    auto g = complete_graph(4);
    CHECK(verify_clique(g, {2}));
    CHECK(verify_clique(g, {0, 1, 2, 3}));
    CHECK_FALSE(verify_clique(g, {0, 0}));
    CHECK_FALSE(verify_clique(g, {0, 4}));
    BitMatrix m(2, 2);
    auto g2 = Graph::from_bitmatrix(std::move(m));
    CHECK_FALSE(verify_clique(g2, {0, 1}));  // non-adjacent pair
}

TEST_CASE("greedy on trivial graphs") {
    auto k5 = complete_graph(5);
    auto res = greedy_lower_bound(k5, 3, 1);
    CHECK(res.size == 5);
    CHECK_FALSE(res.optimal);
    CHECK(verify_clique(k5, res.witness));

    BitMatrix empty(6, 6);
    auto g0 = Graph::from_bitmatrix(std::move(empty));
    CHECK(greedy_lower_bound(g0, 2, 1).size == 1);
}

TEST_CASE("greedy is deterministic under a fixed seed") {
    std::mt19937_64 rng(99);
    auto g = random_graph(60, 0.5, rng);
    auto a = greedy_lower_bound(g, 50, 7);
    auto b = greedy_lower_bound(g, 50, 7);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
}

TEST_CASE("exact solver on trivial graphs") {
    auto k5 = complete_graph(5);
    auto res = max_clique_exact(k5);
    CHECK(res.size == 5);
    CHECK(res.optimal);
    CHECK(verify_clique(k5, res.witness));

    BitMatrix empty(4, 4);
    auto g0 = Graph::from_bitmatrix(std::move(empty));
    auto r0 = max_clique_exact(g0);
    CHECK(r0.size == 1);
    CHECK(r0.optimal);
}

TEST_CASE("exact solver equals brute force on random graphs") {
    std::mt19937_64 rng(314);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 5 + rng() % 36;  // up to 40
        double dens = 0.2 + 0.6 * double(rng() % 100) / 100.0;
        auto g = random_graph(n, dens, rng);
        auto exact = max_clique_exact(g);
        CHECK(exact.optimal);
        CHECK(exact.size == oracle::brute_force_max_clique(g));
        CHECK(verify_clique(g, exact.witness));
        // threads must not change the size
        ExactOptions par;
        par.threads = 2;
        CHECK(max_clique_exact(g, par).size == exact.size);
    }
}

TEST_CASE("lemma 1 holds on planted-clique graphs") {
    std::mt19937_64 rng(2718);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 10 + rng() % 41;
        std::size_t y = 3 + rng() % (n / 2);
        std::vector<int> planted;
        auto g = planted_clique_graph(n, y, 0.3, rng, planted);
        REQUIRE(verify_clique(g, planted));
        std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j);
        for (long p : {2L, 3L, 5L}) {
            auto r = rank_mod_p(a, p).rank;
            CHECK(lemma1_admits(long(r), p, long(y)));
        }
    }
}

TEST_CASE("rank-based pruning is sound") {
    std::mt19937_64 rng(1618);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t n = 12 + rng() % 16;
        auto g = random_graph(n, 0.5, rng);
        std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j);
        long p = 2;
        mpz_class bound = clique_bound_from_rank(long(rank_mod_p(a, p).rank), p);
        ExactOptions opt;
        opt.upper_bound = bound.get_ui();
        auto res = max_clique_exact(g, opt);
        CHECK(res.size <= bound);
        CHECK(res.size == oracle::brute_force_max_clique(g));
    }
}

TEST_CASE("node budget degrades optimal to false, never wrong") {
    std::mt19937_64 rng(555);
    auto g = random_graph(45, 0.7, rng);
    ExactOptions opt;
    opt.node_budget = 3;
    auto res = max_clique_exact(g, opt);
    CHECK_FALSE(res.optimal);
    CHECK(verify_clique(g, res.witness));
    CHECK(res.size <= oracle::brute_force_max_clique(g));
}

TEST_CASE("fix_first_vertex: transitivity guard and correctness on a cycle") {
    // C7 is vertex-transitive with max clique 2
    BitMatrix m(7, 7);
    for (int i = 0; i < 7; ++i) {
        m.set(i, (i + 1) % 7, true);
        m.set((i + 1) % 7, i, true);
    }
    auto c7 = Graph::from_bitmatrix(std::move(m));
    ExactOptions opt;
    opt.fix_first_vertex = true;
    auto res = max_clique_exact(c7, opt);
    CHECK(res.size == 2);
    CHECK(res.optimal);
    // star graph: non-constant degree must be rejected
    BitMatrix s(5, 5);
    for (int i = 1; i < 5; ++i) {
        s.set(0, i, true);
        s.set(i, 0, true);
    }
    auto star = Graph::from_bitmatrix(std::move(s));
    CHECK_THROWS_AS(max_clique_exact(star, opt), std::invalid_argument);
    // constant degree but non-transitive-looking: C3 + C4 (disconnected)
    BitMatrix t(7, 7);
    auto edge = [&](int a, int b) { t.set(a, b, true); t.set(b, a, true); };
    edge(0, 1); edge(1, 2); edge(2, 0);
    edge(3, 4); edge(4, 5); edge(5, 6); edge(6, 3);
    auto mixed = Graph::from_bitmatrix(std::move(t));
    CHECK_THROWS_AS(max_clique_exact(mixed, opt), std::invalid_argument);
}

TEST_CASE("initial clique seeds the incumbent") {
    auto k5 = complete_graph(5);
    ExactOptions opt;
    opt.initial_clique = {0, 1, 2, 3, 4};
    auto res = max_clique_exact(k5, opt);
    CHECK(res.size == 5);
    CHECK(res.optimal);
    opt.initial_clique = {0, 0};
    CHECK_THROWS_AS(max_clique_exact(k5, opt), std::invalid_argument);
}
