#include <catch2/catch_amalgamated.hpp>

#include "bergekit/berge.hpp"
#include "bergekit/hypergraph.hpp"

using namespace bergekit;

namespace {

// Host for the rotation example. Edges are stored sorted, so the ids are
// 0:{0,1,2}, 1:{0,2,3}, 2:{1,2,3}.
Hypergraph rotation_host() { return Hypergraph(4, 3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}}); }

}  // namespace

TEST_CASE("path verification accepts the documented example") {
    Hypergraph h = rotation_host();
    BergePath p{{0, 1, 2, 3}, {0, 2, 1}};
    VerifyResult v = verify_path(h, p);
    REQUIRE(v.ok);
    REQUIRE(v.position == -1);
}

TEST_CASE("path verification pinpoints the offending slot") {
    Hypergraph h = rotation_host();
    SECTION("pair not inside the slot edge") {
        // {3,0} is not inside edge 0 = {0,1,2}.
        BergePath p{{3, 0, 1, 2}, {0, 2, 1}};
        VerifyResult v = verify_path(h, p);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.position == 0);
        REQUIRE(v.message.find("does not contain the consecutive pair {3,0}") != std::string::npos);
    }
    SECTION("repeated vertex") {
        BergePath p{{0, 1, 0, 3}, {0, 2, 1}};
        VerifyResult v = verify_path(h, p);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.message.find("duplicate vertex 0") != std::string::npos);
    }
    SECTION("repeated edge") {
        BergePath p{{0, 1, 2, 3}, {0, 0, 2}};
        REQUIRE_FALSE(verify_path(h, p).ok);
    }
    SECTION("length zero") {
        BergePath p{{0}, {}};
        VerifyResult v = verify_path(h, p);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.message.find("length 0") != std::string::npos);
    }
    SECTION("count mismatch") {
        BergePath p{{0, 1, 2}, {0, 1, 2}};
        REQUIRE_FALSE(verify_path(h, p).ok);
    }
    SECTION("edge index out of range") {
        BergePath p{{0, 1, 2, 3}, {0, 1, 7}};
        VerifyResult v = verify_path(h, p);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.position == 2);
    }
}

TEST_CASE("cycle verification, including the wraparound slot") {
    Hypergraph h = rotation_host();
    SECTION("two edges sharing two vertices form a 2-cycle") {
        BergeCycle c{{0, 2}, {0, 1}};  // {0,2} lies in both edge 0 and edge 1
        REQUIRE(verify_cycle(h, c).ok);
    }
    SECTION("triangle") {
        BergeCycle c{{0, 1, 3}, {0, 2, 1}};  // {0,1} in e0, {1,3} in e2, {3,0} in e1
        REQUIRE(verify_cycle(h, c).ok);
    }
    SECTION("wraparound violation is labeled") {
        BergeCycle c{{0, 2}, {0, 2}};  // closing pair {2,0} not inside edge 2 = {1,2,3}
        VerifyResult v = verify_cycle(h, c);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.position == 1);
        REQUIRE(v.message.find("closing the cycle") != std::string::npos);
    }
    SECTION("cycles below length 2 are rejected") {
        BergeCycle c{{0}, {0}};
        VerifyResult v = verify_cycle(h, c);
        REQUIRE_FALSE(v.ok);
        REQUIRE(v.message.find("below 2") != std::string::npos);
    }
}

TEST_CASE("reversal") {
    BergePath p{{0, 1, 2, 3}, {0, 1, 2}};
    BergePath r = reversed(p);
    REQUIRE(r.vertices == std::vector<int>{3, 2, 1, 0});
    REQUIRE(r.edge_indexes == std::vector<int>{2, 1, 0});
    REQUIRE(reversed(r) == p);
}

TEST_CASE("rotations at the first terminal") {
    Hypergraph h = rotation_host();
    BergePath p{{0, 1, 2, 3}, {0, 2, 1}};
    std::vector<BergePath> turns = rotations(h, p);
    // Only the defining edge at position 2 (edge id 1 = {0,2,3}) contains the
    // terminal 0, so exactly one rotation exists.
    REQUIRE(turns.size() == 1);
    REQUIRE(turns[0].vertices == std::vector<int>{2, 1, 0, 3});
    REQUIRE(turns[0].edge_indexes == std::vector<int>{2, 0, 1});
    REQUIRE(verify_path(h, turns[0]).ok);
    REQUIRE(rotations(h, BergePath{{0, 1}, {0}}).empty());
    REQUIRE_THROWS_AS(rotations(h, BergePath{{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("endpoint neighborhood excludes defining edges") {
    // Edges: 0:{0,1,2}, 1:{1,2,3}, 2:{0,2,3}, 3:{0,3,4}.
    Hypergraph h(5, 3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 3, 4}});
    BergePath p{{0, 1}, {0}};
    VertexSet head = endpoint_neighborhood(h, p, PathEnd::head);
    // Vertex 0 sits in edges 0 (defining), 2, 3; neighbors through 2 and 3.
    REQUIRE(head.to_vector() == std::vector<int>{2, 3, 4});
    VertexSet tail = endpoint_neighborhood(h, p, PathEnd::tail);
    REQUIRE(tail.to_vector() == std::vector<int>{2, 3});
    REQUIRE(defining_edges_at_terminal(h, p, PathEnd::head) == 1);
}

TEST_CASE("shifting a vertex set back along the path") {
    BergePath p{{4, 2, 0, 3, 1}, {0, 1, 2, 3}};
    VertexSet s = VertexSet::of(5, {0, 1});
    VertexSet one = shift_back(s, p, 1);
    REQUIRE(one.to_vector() == std::vector<int>{2, 3});
    VertexSet two = shift_back(s, p, 2);
    REQUIRE(two.to_vector() == std::vector<int>{0, 4});
    // The head has no predecessor and silently drops out.
    VertexSet head = VertexSet::of(5, {4});
    REQUIRE(shift_back(head, p, 1).size() == 0);
    REQUIRE_THROWS_AS(shift_back(s, p, 3), std::invalid_argument);
    VertexSet off = VertexSet::of(6, {5});
    REQUIRE_THROWS_AS(shift_back(off, p, 1), std::invalid_argument);
}

TEST_CASE("extend_or_rotate grows a tight path to full length") {
    // Chain 0-1-2-3-4 covered by consecutive triples.
    Hypergraph h(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    BergePath seed{{0, 1}, {0}};
    BergePath grown = extend_or_rotate(h, seed);
    REQUIRE(verify_path(h, grown).ok);
    REQUIRE(grown.length() == 3);
}

TEST_CASE("extend_or_rotate works both terminals") {
    // Sorted edges: 0:{0,1,2}, 1:{0,2,3}, 2:{1,2,3}, 3:{3,4,5}. Starting from
    // the middle, the tail run reaches 2 and gets stuck there (all of 2's
    // edges defining), and growth continues at the head through edge 3.
    Hypergraph h(6, 3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {3, 4, 5}});
    BergePath seed{{3, 1}, {2}};
    BergePath grown = extend_or_rotate(h, seed);
    REQUIRE(verify_path(h, grown).ok);
    REQUIRE(grown.length() == 4);
}
