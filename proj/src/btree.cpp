#include "hermdens/btree.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "hermdens/localfield.hpp"

namespace hermdens::btree {

TreeConfig::TreeConfig(long p_, long m1_, long m2_, long d_, std::optional<long> e_)
    : p(p_), m1(m1_), m2(m2_), d(d_), e(e_) {
    require(localfield::is_prime_ll(p) && p != 2, "p must be an odd prime");
    require(m1 >= 0 && m2 >= 0 && d >= 0, "m1, m2, d must be >= 0");
    require(m1 <= m2, "need m1 <= m2");
    require((m1 + m2 - d) % 2 == 0, "m1 + m2 must have the parity of d");
    if (d == 0) {
        require(e.has_value(), "e is required when the centers coincide (d = 0)");
        require(*e >= 0, "e must be >= 0");
    } else {
        require(!e.has_value(), "e is meaningful only when d = 0");
    }
}

long multiplicity(long m, long dist) {
    if (m < 0 || dist > m) return 0;
    return (m - dist) % 2 == 0 ? (m - dist) / 2 : (m - dist + 1) / 2;
}

TruncatedTree build_tree(const TreeConfig& cfg) {
    TruncatedTree t;
    t.p = cfg.p;
    t.d = cfg.d;
    t.v.resize(static_cast<size_t>(cfg.d) + 1);
    for (long i = 0; i <= cfg.d; ++i) {
        t.v[static_cast<size_t>(i)].dist1 = i;
        t.v[static_cast<size_t>(i)].dist2 = cfg.d - i;
        if (i > 0) {
            t.v[static_cast<size_t>(i)].nbrs.push_back(static_cast<int>(i - 1));
            t.v[static_cast<size_t>(i - 1)].nbrs.push_back(static_cast<int>(i));
        }
    }
    // Grow outward: every vertex inside either ball gets its full p+1
    // neighborhood.  New vertices are leaves one step farther from both
    // centers (the geodesics pass through their parent).
    std::deque<int> queue;
    for (long i = 0; i <= cfg.d; ++i) queue.push_back(static_cast<int>(i));
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        const long d1 = t.v[static_cast<size_t>(id)].dist1;
        const long d2 = t.v[static_cast<size_t>(id)].dist2;
        if (d1 > cfg.m1 && d2 > cfg.m2) continue;
        while (t.v[static_cast<size_t>(id)].nbrs.size() < static_cast<size_t>(cfg.p) + 1) {
            int child = static_cast<int>(t.v.size());
            t.v.push_back({});
            t.v[static_cast<size_t>(child)].dist1 = d1 + 1;
            t.v[static_cast<size_t>(child)].dist2 = d2 + 1;
            t.v[static_cast<size_t>(child)].nbrs.push_back(id);
            t.v[static_cast<size_t>(id)].nbrs.push_back(child);
            queue.push_back(child);
        }
    }

    // Cross-check the bookkeeping distances by breadth-first search.
    auto bfs_check = [&t](int root, long TruncatedTree::Vertex::* field) {
        std::vector<long> dist(t.v.size(), -1);
        std::deque<int> q{root};
        dist[static_cast<size_t>(root)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : t.v[static_cast<size_t>(u)].nbrs)
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    q.push_back(w);
                }
        }
        for (size_t i = 0; i < t.v.size(); ++i)
            internal_check(dist[i] == t.v[i].*field, "tree distance bookkeeping mismatch");
    };
    bfs_check(0, &TruncatedTree::Vertex::dist1);
    bfs_check(static_cast<int>(cfg.d), &TruncatedTree::Vertex::dist2);
    return t;
}

long pairing_PP(long dist, long p) {
    if (dist == 0) return -(p + 1);
    if (dist == 1) return 1;
    return 0;
}

long pairing_P_Z(long dist_to_center, long m, long p) {
    if (m < 0 || dist_to_center > m) return 0;
    return (dist_to_center - m) % 2 == 0 ? 1 : -p;
}

Int intersect_bruteforce(const TreeConfig& cfg) {
    const TruncatedTree t = build_tree(cfg);
    const int v0 = 0, vd = static_cast<int>(cfg.d);

    // <Z1^h, Z2^h>: e when the centers coincide, else 0
    Int total = (cfg.d == 0) ? Int(*cfg.e) : Int(0);
    // <Z1^h, Z2^v> = m(b2, Lambda1)
    total += multiplicity(cfg.m2, t.v[static_cast<size_t>(v0)].dist2);

    // sum over Lambda of m(b1, Lambda) * <P_Lambda, Z2>, with <P_Lambda, Z2>
    // itself expanded as the horizontal base term plus the PP sum.
    for (size_t i = 0; i < t.v.size(); ++i) {
        const long w1 = multiplicity(cfg.m1, t.v[i].dist1);
        if (w1 == 0) continue;
        long pz = (static_cast<int>(i) == vd) ? 1 : 0;
        pz += multiplicity(cfg.m2, t.v[i].dist2) * pairing_PP(0, cfg.p);
        for (int nb : t.v[i].nbrs)
            pz += multiplicity(cfg.m2, t.v[static_cast<size_t>(nb)].dist2) * pairing_PP(1, cfg.p);
        total += Int(w1) * Int(pz);
    }
    return total;
}

namespace {

// p (p^m - 1)/(p - 1) = p + p^2 + ... + p^m
Int ball_term(long p, long m) {
    Int s(0), q(p);
    for (long i = 0; i < m; ++i) {
        s += q;
        q *= p;
    }
    return s;
}

}  // namespace

Int intersect_closed(const TreeConfig& cfg) {
    if (cfg.d > cfg.m1 + cfg.m2) return Int(0);
    if (cfg.d <= cfg.m2 - cfg.m1) {
        Int val = Int((cfg.m1 + cfg.m2 - cfg.d) / 2) - ball_term(cfg.p, cfg.m1);
        if (cfg.d == 0) val += *cfg.e;
        return val;
    }
    const long r = (cfg.m1 + cfg.m2 - cfg.d) / 2;
    return Int(r) - ball_term(cfg.p, r);
}

OverlapBall overlap_ball(const TreeConfig& cfg) {
    require(cfg.d <= cfg.m1 + cfg.m2, "empty overlap");
    OverlapBall ob;
    ob.r = std::min((cfg.m1 + cfg.m2 - cfg.d) / 2, cfg.m1);
    ob.center_spine_pos = cfg.m1 - ob.r;
    return ob;
}

std::optional<std::pair<long, long>> diag_invariants(const TreeConfig& cfg) {
    if (cfg.d > cfg.m1 + cfg.m2) return std::nullopt;
    if (cfg.d == 0) return std::make_pair(cfg.m2 + 2 * *cfg.e, cfg.m1);
    if (cfg.d <= cfg.m2 - cfg.m1) return std::make_pair(cfg.m2 - cfg.d, cfg.m1);
    const long r = (cfg.m1 + cfg.m2 - cfg.d) / 2;
    return std::make_pair(r, r);
}

void write_dot(const TreeConfig& cfg, const TruncatedTree& tree, std::ostream& os) {
    os << "graph btree {\n";
    os << "  // p=" << cfg.p << " m1=" << cfg.m1 << " m2=" << cfg.m2 << " d=" << cfg.d << "\n";
    for (size_t i = 0; i < tree.v.size(); ++i) {
        const auto& vx = tree.v[i];
        os << "  n" << i << " [label=\"" << i << "\\nm1:" << multiplicity(cfg.m1, vx.dist1)
           << " m2:" << multiplicity(cfg.m2, vx.dist2) << "\"";
        if (i == 0 || static_cast<long>(i) == cfg.d) os << " shape=box";
        os << "];\n";
    }
    for (size_t i = 0; i < tree.v.size(); ++i)
        for (int nb : tree.v[i].nbrs)
            if (static_cast<size_t>(nb) > i) os << "  n" << i << " -- n" << nb << ";\n";
    os << "}\n";
}

}  // namespace hermdens::btree
