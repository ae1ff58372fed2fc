#include "hermdens/oracle.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace hermdens::oracle {

using localfield::InertLocalRing;
using localfield::LocalHermitianSpec;
using localfield::ResidueRingElem;

LocalHermitianTarget LocalHermitianTarget::rank1(long long t1) {
    LocalHermitianTarget t;
    t.n = 1;
    t.t1 = t1;
    return t;
}

LocalHermitianTarget LocalHermitianTarget::rank2(long long t1, long long t2, long long off_a,
                                                 long long off_b) {
    LocalHermitianTarget t;
    t.n = 2;
    t.t1 = t1;
    t.t2 = t2;
    t.off_a = off_a;
    t.off_b = off_b;
    return t;
}

OracleJob::OracleJob(InertLocalRing ring_, LocalHermitianSpec s_, LocalHermitianTarget t_)
    : ring(ring_), s(std::move(s_)), t(t_) {
    require(t.n == 1 || t.n == 2, "target rank n must be 1 or 2");
    require(static_cast<int>(s.rank()) >= t.n, "need m >= n");
}

OracleJob OracleJob::refined() const {
    return OracleJob(InertLocalRing(ring.p, ring.k + 1, ring.eps), s, t);
}

namespace {

// p^{2kmn} against the budget without overflow
void check_budget(const OracleJob& job, long long budget) {
    long long size = 1;
    const long long exp = 2LL * job.ring.k * job.m() * job.n();
    for (long long i = 0; i < exp; ++i) {
        if (size > budget / job.ring.p) {
            throw budget_error("instance too large: p^(2kmn) = " + std::to_string(job.ring.p) +
                               "^" + std::to_string(exp) + " exceeds budget " +
                               std::to_string(budget));
        }
        size *= job.ring.p;
    }
}

struct Tables {
    long long pk = 0;    // modulus
    long long q = 0;     // p^{2k}, elements per ring entry
    int m = 1;
    // norm_w[mu*q + v] = p^{e_mu} * N(v) mod p^k, v encoding (a,b) = (v%pk, v/pk)
    std::vector<long long> norm_w;
    // cross re/im: p^{e_mu} * conj(v) * w mod p^k, laid out [mu][v][w]
    std::vector<long long> cross_re, cross_im;

    long long t1 = 0, t2 = 0, off_re = 0, off_im = 0;
};

Tables build_tables(const OracleJob& job) {
    const InertLocalRing& R = job.ring;
    Tables tb;
    tb.pk = R.pk;
    tb.q = R.pk * R.pk;
    tb.m = job.m();

    std::vector<long long> scaled(tb.m);  // p^{e_mu} mod p^k
    for (int mu = 0; mu < tb.m; ++mu) {
        long long s = 1;
        for (long i = 0; i < job.s.diag_exponents[static_cast<size_t>(mu)] && s != 0; ++i)
            s = s * R.p % R.pk;
        scaled[static_cast<size_t>(mu)] = s;
    }

    tb.norm_w.assign(static_cast<size_t>(tb.m) * static_cast<size_t>(tb.q), 0);
    for (int mu = 0; mu < tb.m; ++mu)
        for (long long v = 0; v < tb.q; ++v) {
            ResidueRingElem x{v % tb.pk, v / tb.pk};
            tb.norm_w[static_cast<size_t>(mu) * static_cast<size_t>(tb.q) + static_cast<size_t>(v)] =
                scaled[static_cast<size_t>(mu)] * localfield::norm(R, x) % tb.pk;
        }

    if (job.n() == 2) {
        const size_t q2 = static_cast<size_t>(tb.q) * static_cast<size_t>(tb.q);
        tb.cross_re.assign(static_cast<size_t>(tb.m) * q2, 0);
        tb.cross_im.assign(static_cast<size_t>(tb.m) * q2, 0);
        for (int mu = 0; mu < tb.m; ++mu)
            for (long long v = 0; v < tb.q; ++v) {
                ResidueRingElem xc = localfield::conj(R, ResidueRingElem{v % tb.pk, v / tb.pk});
                for (long long w = 0; w < tb.q; ++w) {
                    ResidueRingElem y{w % tb.pk, w / tb.pk};
                    ResidueRingElem pr = localfield::mul(R, xc, y);
                    size_t idx = static_cast<size_t>(mu) * q2 +
                                 static_cast<size_t>(v) * static_cast<size_t>(tb.q) +
                                 static_cast<size_t>(w);
                    tb.cross_re[idx] = scaled[static_cast<size_t>(mu)] * pr.a % tb.pk;
                    tb.cross_im[idx] = scaled[static_cast<size_t>(mu)] * pr.b % tb.pk;
                }
            }
    }

    auto red = [&](long long x) { return ((x % tb.pk) + tb.pk) % tb.pk; };
    tb.t1 = red(job.t.t1);
    tb.t2 = red(job.t.t2);
    tb.off_re = red(job.t.off_a);
    tb.off_im = red(job.t.off_b);
    return tb;
}

// Count pairs (x1 fixed by digits, x2 ranging over the full column space).
unsigned long long count_inner_full(const Tables& tb, const std::vector<long long>& x1digits) {
    const int m = tb.m;
    const size_t q = static_cast<size_t>(tb.q);
    const size_t q2 = q * q;
    unsigned long long hits = 0;
    std::vector<long long> w(static_cast<size_t>(m), 0);
    for (;;) {
        long long norm2 = 0, cre = 0, cim = 0;
        for (int mu = 0; mu < m; ++mu) {
            const size_t wm = static_cast<size_t>(w[static_cast<size_t>(mu)]);
            norm2 += tb.norm_w[static_cast<size_t>(mu) * q + wm];
            const size_t idx = static_cast<size_t>(mu) * q2 +
                               static_cast<size_t>(x1digits[static_cast<size_t>(mu)]) * q + wm;
            cre += tb.cross_re[idx];
            cim += tb.cross_im[idx];
        }
        if (norm2 % tb.pk == tb.t2 && cre % tb.pk == tb.off_re && cim % tb.pk == tb.off_im) ++hits;
        // odometer
        int mu = 0;
        while (mu < m) {
            if (++w[static_cast<size_t>(mu)] < tb.q) break;
            w[static_cast<size_t>(mu)] = 0;
            ++mu;
        }
        if (mu == m) break;
    }
    return hits;
}

unsigned long long count_range(const Tables& tb, int n, long long lo, long long hi) {
    const int m = tb.m;
    const size_t q = static_cast<size_t>(tb.q);
    unsigned long long hits = 0;
    std::vector<long long> digits(static_cast<size_t>(m));
    for (long long x1 = lo; x1 < hi; ++x1) {
        long long rest = x1;
        long long norm1 = 0;
        for (int mu = 0; mu < m; ++mu) {
            digits[static_cast<size_t>(mu)] = rest % tb.q;
            rest /= tb.q;
            norm1 += tb.norm_w[static_cast<size_t>(mu) * q +
                               static_cast<size_t>(digits[static_cast<size_t>(mu)])];
        }
        if (norm1 % tb.pk != tb.t1) continue;
        if (n == 1)
            ++hits;
        else
            hits += count_inner_full(tb, digits);
    }
    return hits;
}

}  // namespace

unsigned long long count_solutions(const OracleJob& job, int threads, long long budget) {
    check_budget(job, budget);
    Tables tb = build_tables(job);

    long long outer = 1;
    for (int i = 0; i < job.m(); ++i) outer *= tb.q;  // p^{2km}, within budget since n >= 1

    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    threads = static_cast<int>(std::min<long long>(threads, outer));
    threads = std::max(threads, 1);

    if (threads == 1) return count_range(tb, job.n(), 0, outer);

    std::vector<unsigned long long> partial(static_cast<size_t>(threads), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    const long long chunk = (outer + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const long long lo = w * chunk;
        const long long hi = std::min(outer, lo + chunk);
        pool.emplace_back([&tb, n = job.n(), lo, hi, w, &partial] {
            partial[static_cast<size_t>(w)] = lo < hi ? count_range(tb, n, lo, hi) : 0;
        });
    }
    for (auto& th : pool) th.join();
    unsigned long long total = 0;
    for (int w = 0; w < threads; ++w) total += partial[static_cast<size_t>(w)];  // partition order
    return total;
}

Rational density_estimate(const OracleJob& job, int threads, long long budget) {
    unsigned long long c = count_solutions(job, threads, budget);
    const long norm_exp = job.ring.k * job.n() * (2 * job.m() - job.n());
    return Rational(static_cast<unsigned long>(c)) *
           pow_rational(Rational(job.ring.p), -norm_exp);
}

StabilizedDensity stabilized_density(const OracleJob& job, int threads, long long budget) {
    StabilizedDensity out;
    out.at_k = density_estimate(job, threads, budget);
    out.at_k1 = density_estimate(job.refined(), threads, budget);
    out.stabilized = (out.at_k == out.at_k1);
    return out;
}

}  // namespace hermdens::oracle
