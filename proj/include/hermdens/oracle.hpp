#pragma once

#include "hermdens/exact.hpp"
#include "hermdens/localfield.hpp"

namespace hermdens::oracle {

// n x n Hermitian target, n in {1,2}.  Diagonal entries are plain residues
// (Hermitian matrices over the inert ring have conjugation-fixed diagonal);
// only the upper off-diagonal entry is stored, so conjugate symmetry is a
// type invariant rather than a runtime condition.  Entries may be given as
// arbitrary integers; the job reduces them mod p^k, and keeps the raw values
// so the same target can be re-reduced at a higher precision.
struct LocalHermitianTarget {
    int n = 1;
    long long t1 = 0;
    long long t2 = 0;
    long long off_a = 0, off_b = 0;

    static LocalHermitianTarget rank1(long long t1);
    static LocalHermitianTarget rank2(long long t1, long long t2, long long off_a, long long off_b);
};

struct OracleJob {
    localfield::InertLocalRing ring;
    localfield::LocalHermitianSpec s;
    LocalHermitianTarget t;

    OracleJob(localfield::InertLocalRing ring, localfield::LocalHermitianSpec s,
              LocalHermitianTarget t);

    int m() const { return static_cast<int>(s.rank()); }
    int n() const { return t.n; }
    // raise precision by one, same eps and raw target data
    OracleJob refined() const;
};

inline constexpr long long kDefaultBudget = 100000000;  // cap on p^{2kmn}

// #{x in M_{m,n}(o/p^k) : t(x') S x = T mod p^k}.  Internally parallel over
// ranges of the outer column; the reduction is a deterministic sum in
// partition order.  threads = 0 picks the hardware count.
unsigned long long count_solutions(const OracleJob& job, int threads = 0,
                                   long long budget = kDefaultBudget);

// count * p^{-k n (2m - n)}
Rational density_estimate(const OracleJob& job, int threads = 0,
                          long long budget = kDefaultBudget);

struct StabilizedDensity {
    Rational at_k;      // estimate at the job's precision
    Rational at_k1;     // estimate at precision k+1
    bool stabilized;    // the two estimates agree (not a verdict on the limit)
};

StabilizedDensity stabilized_density(const OracleJob& job, int threads = 0,
                                     long long budget = kDefaultBudget);

}  // namespace hermdens::oracle
