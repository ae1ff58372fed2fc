#pragma once

#include <optional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hermdens/exact.hpp"

namespace hermdens::btree {

// Two divisors on the (p+1)-regular tree: centers at distance d, vertical
// radii m1 <= m2.  The horizontal-horizontal pairing value e is an input
// parameter (it is determined by the pair of special vectors, not by the
// tree data) and is meaningful exactly when the centers coincide (d = 0).
struct TreeConfig {
    long p = 0;
    long m1 = 0, m2 = 0;
    long d = 0;
    std::optional<long> e;

    TreeConfig(long p, long m1, long m2, long d, std::optional<long> e = std::nullopt);
};

// Truncated (p+1)-regular tree containing both balls together with every
// neighbor of each ball vertex.  Vertices 0..d form the spine v_0..v_d.
struct TruncatedTree {
    struct Vertex {
        std::vector<int> nbrs;
        long dist1 = 0, dist2 = 0;
    };
    std::vector<Vertex> v;
    long p = 0;
    long d = 0;  // spine length; v0 = 0, vd = d (0 when the centers coincide)

    size_t size() const { return v.size(); }
};

// Vertical multiplicity m(b, Lambda) at distance `dist` from the center of a
// divisor with ord_p(b,b) = m:  (m-dist)/2 on parity match, (m-dist+1)/2 on
// mismatch, 0 outside the ball; m < 0 means the divisor is zero.
long multiplicity(long m, long dist);

TruncatedTree build_tree(const TreeConfig& cfg);

// <P_Lambda, P_Lambda'>: -(p+1) / 1 / 0 at distance 0 / 1 / >= 2
long pairing_PP(long dist, long p);

// <P_Lambda, Z(b)>: 1 on parity match inside the ball, -p on mismatch,
// 0 outside; m < 0 means zero divisor.
long pairing_P_Z(long dist_to_center, long m, long p);

// <Z(b1), Z(b2)> by the full bilinear expansion over the truncated tree.
Int intersect_bruteforce(const TreeConfig& cfg);

// Closed form: 0 for disjoint balls; ball-containment case
// (m1+m2-d)/2 - p(p^{m1}-1)/(p-1) (+e when d = 0); otherwise
// r - p(p^r-1)/(p-1) with r = (m1+m2-d)/2.
Int intersect_closed(const TreeConfig& cfg);

struct OverlapBall {
    long r = 0;
    long center_spine_pos = 0;  // distance from v_0 along the spine
};

// B(b1) n B(b2) is the ball of radius r = min((m1+m2-d)/2, m1) around the
// spine vertex at distance m1 - r from v_0.
OverlapBall overlap_ball(const TreeConfig& cfg);

// Exponents (a, b) with the pair of divisors matching T ~ diag(p^a, p^b);
// nullopt when the balls are disjoint (T not integral).
std::optional<std::pair<long, long>> diag_invariants(const TreeConfig& cfg);

// DOT dump with per-vertex multiplicities for both divisors.
void write_dot(const TreeConfig& cfg, const TruncatedTree& tree, std::ostream& os);

}  // namespace hermdens::btree
