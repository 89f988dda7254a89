#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropilift/graph.hpp"

#include <random>

using namespace tropilift;

TEST_CASE("validate_model accepts the circle and flags violations") {
    Graph circle = make_circle(2, 2);
    CHECK(validate_model(circle).empty());

    Graph bad;
    int u = bad.add_vertex("u");
    int v = bad.add_vertex("v");
    bad.add_edge("e", u, v, Length::inf());
    auto diag = validate_model(bad);
    REQUIRE(!diag.empty());
    CHECK(diag.front().find("infinite length") != std::string::npos);

    CHECK_THROWS(bad.add_edge("l", u, u, Length::finite(1)));  // loop edges rejected
}

TEST_CASE("first betti numbers") {
    CHECK(first_betti(make_circle(2)) == 1);
    CHECK(first_betti(make_banana({1, 1, 1, 1})) == 3);
    CHECK(first_betti(make_path(3)) == 0);
}

TEST_CASE("genus adds vertex weights to h1") {
    Graph circle = make_circle(2);
    CHECK(graph_genus(circle) == 1);

    Graph pt;
    pt.add_vertex("p", 2);
    CHECK(graph_genus(pt) == 2);

    CHECK(graph_genus(make_banana({1, 1, 1, 1})) == 3);
}

TEST_CASE("canonical divisor") {
    Graph circle = make_circle(2);
    CHECK(canonical_divisor(circle).empty());

    Graph banana = make_banana({1, 1, 1, 1});
    Divisor k = canonical_divisor(banana);
    CHECK(divisor_degree(k) == 4);  // 2 * genus - 2
    CHECK(k.at(PointLoc::at_vertex(0)) == 2);
    CHECK(k.at(PointLoc::at_vertex(1)) == 2);

    Graph g;
    int p = g.add_vertex("p", 1);
    int q = g.add_vertex("q");
    g.add_edge("e", p, q, Length::finite(1));
    Divisor k2 = canonical_divisor(g);
    CHECK(k2.at(PointLoc::at_vertex(p)) == 1);  // val 1, genus 1
}

TEST_CASE("deg K == 2g-2 on random models") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g;
        int n = 2 + (int)(rng() % 5);
        for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i), (int)(rng() % 3));
        for (int i = 1; i < n; ++i)
            g.add_edge("t" + std::to_string(i), i - 1, i, Length::finite(Rat(1 + (int)(rng() % 4), 1 + (int)(rng() % 3))));
        int extra = (int)(rng() % 4);
        for (int i = 0; i < extra; ++i) {
            int a = (int)(rng() % n), b = (int)(rng() % n);
            if (a == b) continue;
            g.add_edge("x" + std::to_string(i), a, b, Length::finite(1));
        }
        REQUIRE(validate_model(g).empty());
        CHECK(divisor_degree(canonical_divisor(g)) == 2 * graph_genus(g) - 2);
    }
}

TEST_CASE("subdivide splits lengths exactly and preserves invariants") {
    Graph circle = make_circle(2, 2);  // two edges of length 1
    Refinement r = subdivide(circle, {PointLoc::on_edge(0, Rat(1, 3))});
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 3);
    REQUIRE(validate_model(r.graph).empty());
    CHECK(first_betti(r.graph) == 1);
    CHECK(graph_genus(r.graph) == 1);

    // lengths 1/3 and 2/3
    const auto& sp = r.fwd.edge_splits[0];
    CHECK(r.graph.edge(sp.segments[0]).len.value == Rat(1, 3));
    CHECK(r.graph.edge(sp.segments[1]).len.value == Rat(2, 3));

    // no points -> same combinatorics
    Refinement r0 = subdivide(circle, {});
    CHECK(r0.graph.vertex_count() == circle.vertex_count());
    CHECK(r0.graph.edge_count() == circle.edge_count());

    // duplicate locations are deduplicated silently
    Refinement r2 = subdivide(circle, {PointLoc::on_edge(0, Rat(1, 2)), PointLoc::on_edge(0, Rat(1, 2))});
    CHECK(r2.graph.vertex_count() == 3);
}

TEST_CASE("subdivision preserves canonical divisor class support degrees") {
    Graph banana = make_banana({1, 2, 2});
    Refinement r = subdivide(banana, {PointLoc::on_edge(1, 1)});
    CHECK(graph_genus(r.graph) == graph_genus(banana));
    Divisor k_old = canonical_divisor(banana);
    Divisor k_new = canonical_divisor(r.graph);
    // old vertices keep their coefficients; subdivision vertices get 0
    for (const auto& [p, c] : k_old) CHECK(k_new.at(r.fwd.map_point(p)) == c);
    CHECK(divisor_degree(k_new) == divisor_degree(k_old));
}

TEST_CASE("uniformize") {
    SUBCASE("B(1,2,2) becomes the 5-edge unit model") {
        Graph banana = make_banana({1, 2, 2});
        Uniformization u = uniformize(banana);
        CHECK(u.scale == 1);
        CHECK(u.graph.vertex_count() == 4);
        CHECK(u.graph.edge_count() == 5);
        for (int e = 0; e < u.graph.edge_count(); ++e) CHECK(u.graph.edge(e).len.value == 1);
    }
    SUBCASE("all lengths 1/2 scales by 2 with the same combinatorics") {
        Graph g = make_banana({Rat(1, 2), Rat(1, 2)});
        Uniformization u = uniformize(g);
        CHECK(u.scale == 2);
        CHECK(u.graph.vertex_count() == 2);
        CHECK(u.graph.edge_count() == 2);
    }
    SUBCASE("lengths 1/2 and 1/3 scale by 6") {
        Graph g = make_banana({Rat(1, 2), Rat(1, 3)});
        Uniformization u = uniformize(g);
        CHECK(u.scale == 6);
        CHECK(u.graph.edge_count() == 3 + 2);
        CHECK(first_betti(u.graph) == first_betti(g));
    }
}

TEST_CASE("elementary modification and retraction") {
    Graph circle = make_circle(2);
    Modification m = elementary_modification(circle, PointLoc::at_vertex(0));
    REQUIRE(validate_model(m.graph).empty());
    CHECK(graph_genus(m.graph) == 1);  // genus unchanged

    // new infinite leaf has canonical coefficient -1, base point gains +1
    Divisor k = canonical_divisor(m.graph);
    CHECK(k.at(PointLoc::at_vertex(m.leaf_vertex)) == -1);
    CHECK(k.at(PointLoc::at_vertex(m.attach_vertex)) == 1);

    // retraction sends points of the new edge to the base point
    Divisor on_leaf{{PointLoc::on_edge(m.leaf_edge, 1), 1}};
    CHECK(m.retract_divisor(on_leaf) == Divisor{{m.base_point, 1}});

    Divisor mixed{{PointLoc::on_edge(m.leaf_edge, 2), 2}, {PointLoc::at_vertex(m.attach_vertex), -1}};
    Divisor expect{{m.base_point, 1}};
    CHECK(m.retract_divisor(mixed) == expect);

    // round trip: divisors supported on the original graph are unchanged
    Divisor d{{PointLoc::at_vertex(1), 3}, {PointLoc::on_edge(1, Rat(1, 2)), -1}};
    CHECK(m.retract_divisor(m.fwd.map_divisor(d)) == d);
}

TEST_CASE("modification at an edge point splits the edge") {
    Graph circle = make_circle(2);
    Modification m = elementary_modification(circle, PointLoc::on_edge(0, Rat(1, 2)), Length::finite(5));
    REQUIRE(validate_model(m.graph).empty());
    CHECK(m.graph.vertex_count() == 4);
    CHECK(m.graph.edge_count() == 4);
    CHECK_FALSE(m.graph.vertex(m.leaf_vertex).infinite);
    Divisor d{{PointLoc::on_edge(0, Rat(1, 4)), 2}};
    CHECK(m.retract_divisor(m.fwd.map_divisor(d)) == d);
}

TEST_CASE("bridges") {
    Graph path = make_path(2);
    auto rep = bridges(path);
    CHECK(rep.bridges.size() == 2);

    CHECK(bridges(make_circle(3)).bridges.empty());

    // dumbbell: two 2-cycles joined by a segment
    Graph g;
    int a = g.add_vertex("a");
    int b = g.add_vertex("b");
    g.add_loop("la", a, 2);
    g.add_loop("lb", b, 2);
    int joint = g.add_edge("j", a, b, Length::finite(1));
    auto rep2 = bridges(g);
    CHECK(rep2.bridges == std::set<int>{joint});

    Modification m = elementary_modification(make_circle(2), PointLoc::at_vertex(0));
    auto rep3 = bridges(m.graph);
    CHECK(rep3.bridges.empty());
    CHECK(rep3.leaves == std::set<int>{m.leaf_edge});
}

TEST_CASE("essential model suppresses flat vertices and relocates loop breakers") {
    // a path of 3 unit edges: middle vertices suppressed
    Graph p = make_path(3);
    EssentialModel em = essential_model(p);
    CHECK(em.graph.vertex_count() == 2);
    CHECK(em.graph.edge_count() == 1);
    CHECK(em.graph.edge(0).len.value == 3);
    CHECK(em.vertex_pos[1].is_vertex() == false);
    // v1 sits at distance 1 from the v0 end, whichever way the edge is oriented
    {
        const Edge& host = em.graph.edge(em.vertex_pos[1].edge);
        Rat from_v0 = (host.ends[0] == em.graph.find_vertex("v0")) ? em.vertex_pos[1].offset
                                                                   : host.len.value - em.vertex_pos[1].offset;
        CHECK(from_v0 == 1);
    }

    // balloon with an off-center breaker: relocated to the antipode
    Graph g;
    int at = g.add_vertex("at");
    int extra = g.add_vertex("x");
    int c = g.add_vertex("c");
    g.add_edge("s", at, extra, Length::finite(1));
    g.add_edge("s2", extra, at, Length::finite(1));  // 2-cycle so "at" stays essential
    g.add_edge("c1", at, c, Length::finite(1));
    g.add_edge("c2", c, at, Length::finite(3));
    EssentialModel em2 = essential_model(g);
    REQUIRE(validate_model(em2.graph).empty());
    int nc = em2.graph.find_vertex("c");
    REQUIRE(nc >= 0);
    for (const auto& d : em2.graph.incident(nc)) CHECK(em2.graph.edge(d.edge).len.value == 2);

    // genus-positive 2-valent vertices survive
    Graph h = make_path(2);
    h.set_genus(1, 1);
    EssentialModel em3 = essential_model(h);
    CHECK(em3.graph.vertex_count() == 3);
}
