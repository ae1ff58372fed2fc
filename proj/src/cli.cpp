#include "hermdens/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hermdens/acceptance.hpp"
#include "hermdens/btree.hpp"
#include "hermdens/errors.hpp"
#include "hermdens/exact.hpp"
#include "hermdens/global.hpp"
#include "hermdens/hironaka.hpp"
#include "hermdens/localfield.hpp"
#include "hermdens/oracle.hpp"

namespace hermdens::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "json";
    unsigned long seed = 20260818;
    bool approx = false;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "seed for randomized property checks")
        ->capture_default_str();
    sub->add_flag("--approx", c.approx, "also render rationals as labeled decimal approximations");
}

// Result under construction: exact strings in outputs, optional decimal
// shadow copies gathered for --approx.
struct ResultBuilder {
    json inputs = json::object();
    json outputs = json::object();
    json checks = json::array();
    json approx = json::object();
    bool any_check_failed = false;

    void rational(const std::string& key, const Rational& v)
    {
        outputs[key] = to_string(v);
        approx[key] = mpq_get_d(v.get_mpq_t());
    }
    void integer(const std::string& key, const Int& v) { outputs[key] = to_string(v); }
    void poly(const std::string& key, const Polynomial& p)
    {
        outputs[key] = coeff_strings(p);
    }
    void check(const std::string& name, bool passed, const std::string& detail = "")
    {
        json c;
        c["name"] = name;
        c["passed"] = passed;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        if (!passed) any_check_failed = true;
    }

    json finish(const std::string& command, const Common& c) const
    {
        json r;
        r["command"] = command;
        r["inputs"] = inputs;
        r["outputs"] = outputs;
        if (c.approx) {
            r["approximate"] = approx;
            r["approximate_note"] = "decimal renderings of the exact outputs, not exact values";
        }
        r["checks"] = checks;
        return r;
    }
};

void render_text(const json& j, std::ostream& os, int indent)
{
    std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        size_t width = 0;
        for (auto& [k, v] : j.items())
            if (!v.is_structured()) width = std::max(width, k.size());
        for (auto& [k, v] : j.items()) {
            if (v.is_structured()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << std::left << std::setw(static_cast<int>(width) + 1) << (k + ":");
                if (v.is_string())
                    os << " " << v.get<std::string>() << "\n";
                else
                    os << " " << v.dump() << "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_structured()) scalars = false;
        if (scalars) {
            os << pad << "[";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                if (j[i].is_string())
                    os << j[i].get<std::string>();
                else
                    os << j[i].dump();
            }
            os << "]\n";
            return;
        }
        for (const auto& e : j) {
            os << pad << "-\n";
            render_text(e, os, indent + 2);
        }
        return;
    }
    os << pad << j.dump() << "\n";
}

int emit(const ResultBuilder& rb, const std::string& command, const Common& c, std::ostream& out)
{
    json r = rb.finish(command, c);
    if (c.format == "text")
        render_text(r, out, 0);
    else
        out << r.dump(2) << "\n";
    return rb.any_check_failed ? 1 : 0;
}

std::vector<long> parse_longs(const std::string& s, const std::string& what)
{
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw precondition_error(what + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw precondition_error(what + ": empty list");
    return out;
}

// "t1" (rank 1) or "t1,t2,ax,ay" (rank 2, off-diagonal ax + ay*delta or
// ax + ay*omega depending on the consumer)
std::vector<long> parse_matrix(const std::string& s, const std::string& what)
{
    auto v = parse_longs(s, what);
    if (v.size() != 1 && v.size() != 4)
        throw precondition_error(what + ": expected 1 entry (t1) or 4 entries (t1,t2,ax,ay)");
    return v;
}

global::GlobalHermitianMatrix parse_global_matrix(const global::QuadField& F, const std::string& s,
                                                  const std::string& what)
{
    auto v = parse_matrix(s, what);
    if (v.size() == 1)
        throw precondition_error(what + ": rank-2 matrix needs 4 entries (t1,t2,ax,ay)");
    return global::GlobalHermitianMatrix(
        F, Int(v[0]), Int(v[1]), global::FieldElem(Rational(v[2]), Rational(v[3])));
}

json matrix_echo(const std::vector<long>& v)
{
    json m = json::array();
    for (long x : v) m.push_back(x);
    return m;
}

// ---- subcommand bodies -------------------------------------------------

struct DensityPolyArgs {
    long p = 0, a = 0, b = 0;
    std::string kind = "all";
    Common common;
};

int cmd_density_poly(const DensityPolyArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    rb.inputs = {{"p", args.p}, {"a", args.a}, {"b", args.b}, {"kind", args.kind}};
    hironaka::DensityTarget t(args.a, args.b, args.p);
    if (args.kind == "all" || args.kind == "nonsplit") rb.poly("nonsplit", hironaka::f_poly_nonsplit(t));
    if (args.kind == "all" || args.kind == "closed") rb.poly("closed", hironaka::f_poly_closed(t));
    if (args.kind == "all" || args.kind == "unimodular")
        rb.poly("unimodular", hironaka::f_poly_nagaoka(t));
    if (args.kind == "all") {
        rb.check("nonsplit equals closed",
                 hironaka::f_poly_nonsplit(t) == hironaka::f_poly_closed(t));
        rb.rational("derivative_at_one", hironaka::alpha_prime(t));
    }
    return emit(rb, "density-poly", args.common, out);
}

struct DensityGeneralArgs {
    long p = 0;
    std::string xi, lambda;
    Common common;
};

int cmd_density_general(const DensityGeneralArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    auto xi = parse_longs(args.xi, "--xi");
    auto lam = parse_longs(args.lambda, "--lambda");
    rb.inputs = {{"p", args.p}, {"xi", matrix_echo(xi)}, {"lambda", matrix_echo(lam)}};
    Rational v = hironaka::alpha_general(hironaka::Partition(xi), hironaka::Partition(lam), args.p);
    rb.rational("alpha", v);
    return emit(rb, "density-general", args.common, out);
}

struct OracleArgs {
    long p = 0;
    int k = 1;
    long eps = 0;  // 0 = default non-residue
    std::string s, t;
    int threads = 0;
    long long budget = oracle::kDefaultBudget;
    bool stabilize = false;
    Common common;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    auto exps = parse_longs(args.s, "--s");
    auto tv = parse_matrix(args.t, "--t");
    rb.inputs = {{"p", args.p},       {"k", args.k},           {"s", matrix_echo(exps)},
                 {"t", matrix_echo(tv)}, {"threads", args.threads}, {"budget", args.budget},
                 {"stabilize", args.stabilize}};
    if (args.eps != 0) rb.inputs["eps"] = args.eps;

    localfield::InertLocalRing ring =
        args.eps != 0 ? localfield::InertLocalRing(args.p, args.k, args.eps)
                      : localfield::InertLocalRing(args.p, args.k);
    oracle::LocalHermitianTarget target =
        tv.size() == 1 ? oracle::LocalHermitianTarget::rank1(tv[0])
                       : oracle::LocalHermitianTarget::rank2(tv[0], tv[1], tv[2], tv[3]);
    oracle::OracleJob job(ring, localfield::LocalHermitianSpec(exps), target);

    if (args.stabilize) {
        auto sd = oracle::stabilized_density(job, args.threads, args.budget);
        rb.rational("density_at_k", sd.at_k);
        rb.rational("density_at_k_plus_1", sd.at_k1);
        rb.outputs["stabilized"] = sd.stabilized;
        rb.outputs["verdict"] = sd.stabilized ? "stabilized" : "undetermined";
    } else {
        unsigned long long n = oracle::count_solutions(job, args.threads, args.budget);
        rb.outputs["count"] = n;
        rb.rational("density", oracle::density_estimate(job, args.threads, args.budget));
    }
    return emit(rb, "oracle", args.common, out);
}

struct TreeArgs {
    long p = 0, m1 = 0, m2 = 0, d = 0;
    long e = -1;  // -1 = not given
    std::string dot;
    Common common;
};

int cmd_tree(const TreeArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    rb.inputs = {{"p", args.p}, {"m1", args.m1}, {"m2", args.m2}, {"d", args.d}};
    std::optional<long> e;
    if (args.e >= 0) {
        e = args.e;
        rb.inputs["e"] = args.e;
    }
    btree::TreeConfig cfg(args.p, args.m1, args.m2, args.d, e);
    Int bf = btree::intersect_bruteforce(cfg);
    Int cl = btree::intersect_closed(cfg);
    rb.integer("bruteforce", bf);
    rb.integer("closed", cl);
    rb.check("bruteforce equals closed", bf == cl);
    auto inv = btree::diag_invariants(cfg);
    if (inv) {
        rb.outputs["invariants"] = {inv->first, inv->second};
        if ((inv->first + inv->second) % 2 == 0) {
            Int m = localfield::mu(inv->first, inv->second, args.p);
            rb.integer("mu", m);
            rb.check("closed equals mu", cl == m);
        }
        auto ball = btree::overlap_ball(cfg);
        rb.outputs["overlap"] = {{"radius", ball.r}, {"center_spine_pos", ball.center_spine_pos}};
    } else {
        rb.outputs["invariants"] = nullptr;
    }
    if (!args.dot.empty()) {
        std::ofstream f(args.dot);
        if (!f) throw precondition_error("cannot open dot output file " + args.dot);
        auto tree = btree::build_tree(cfg);
        btree::write_dot(cfg, tree, f);
        rb.outputs["dot"] = args.dot;
        rb.outputs["tree_vertices"] = tree.size();
    }
    return emit(rb, "tree", args.common, out);
}

struct MuArgs {
    long p = 0, a = 0, b = 0;
    Common common;
};

int cmd_mu(const MuArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    rb.inputs = {{"p", args.p}, {"a", args.a}, {"b", args.b}};
    rb.integer("mu", localfield::mu(args.a, args.b, args.p));
    return emit(rb, "mu", args.common, out);
}

struct IdentityArgs {
    long p = 0, max = 12;
    Common common;
};

int cmd_identity(const IdentityArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    rb.inputs = {{"p", args.p}, {"max", args.max}};
    long pairs = 0;
    for (long b = 0; b <= args.max; ++b)
        for (long a = b; a <= args.max; ++a) {
            if ((a + b) % 2 != 0) continue;
            ++pairs;
            Rational lhs = hironaka::mu_from_densities(hironaka::DensityTarget(a, b, args.p));
            Rational rhs(localfield::mu(a, b, args.p));
            rb.check("(" + std::to_string(a) + "," + std::to_string(b) + ")", lhs == rhs,
                     lhs == rhs ? to_string(lhs) : to_string(lhs) + " vs " + to_string(rhs));
        }
    rb.outputs["pairs"] = pairs;
    rb.outputs["all_passed"] = !rb.any_check_failed;
    return emit(rb, "identity", args.common, out);
}

struct DiffArgs {
    long long disc = 0;
    long long level = 1;
    std::string t;
    Common common;
};

int cmd_diff(const DiffArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    auto tv = parse_matrix(args.t, "--t");
    rb.inputs = {{"disc", args.disc}, {"level", args.level}, {"t", matrix_echo(tv)}};
    global::QuadField F(Int(static_cast<long>(args.disc)));
    global::LevelStructure level(F, Int(static_cast<long>(args.level)));
    auto T = parse_global_matrix(F, args.t, "--t");
    auto diff = global::diff_set(F, level, T);
    json arr = json::array();
    for (const auto& q : diff) arr.push_back(to_string(q));
    rb.outputs["diff"] = arr;
    rb.outputs["size"] = diff.size();
    rb.integer("det", T.det_value);
    return emit(rb, "diff", args.common, out);
}

struct HilbertArgs {
    std::string a, b;
    std::string place;  // empty = product over the relevant places
    Common common;
};

int cmd_hilbert(const HilbertArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    Rational a = rational_from_string(args.a);
    Rational b = rational_from_string(args.b);
    rb.inputs = {{"a", args.a}, {"b", args.b}};
    if (!args.place.empty()) {
        rb.inputs["place"] = args.place;
        global::Place v = args.place == "inf"
                              ? global::Place::at_infinity()
                              : global::Place::finite(Int(args.place));
        rb.outputs["symbol"] = global::hilbert_symbol(a, b, v);
        return emit(rb, "hilbert", args.common, out);
    }
    // no place: every symbol that can be -1 (infinity and primes dividing 2ab)
    require(a != 0 && b != 0, "hilbert symbol needs nonzero arguments");
    Int rel = 2 * abs(a.get_num()) * abs(a.get_den()) * abs(b.get_num()) * abs(b.get_den());
    json table = json::object();
    int prod = global::hilbert_symbol(a, b, global::Place::at_infinity());
    table["inf"] = prod;
    for (const auto& [q, e] : global::factorize(rel)) {
        int s = global::hilbert_symbol(a, b, global::Place::finite(q));
        table[to_string(q)] = s;
        prod *= s;
    }
    rb.outputs["symbols"] = table;
    rb.outputs["product"] = prod;
    rb.check("product formula", prod == 1);
    return emit(rb, "hilbert", args.common, out);
}

struct ClassnumArgs {
    long long disc = 0;
    Common common;
};

int cmd_classnum(const ClassnumArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    rb.inputs = {{"disc", args.disc}};
    global::QuadField F(Int(static_cast<long>(args.disc)));
    auto [h, w] = global::class_number(F);
    rb.integer("h", h);
    rb.outputs["unit_order"] = w;
    rb.rational("two_h_over_unit_order", ratio(2 * h, w));
    return emit(rb, "classnum", args.common, out);
}

struct LocalizeArgs {
    long long disc = 0;
    long p = 0;
    std::string t;
    Common common;
};

int cmd_localize(const LocalizeArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    auto tv = parse_matrix(args.t, "--t");
    rb.inputs = {{"disc", args.disc}, {"p", args.p}, {"t", matrix_echo(tv)}};
    global::QuadField F(Int(static_cast<long>(args.disc)));
    auto T = parse_global_matrix(F, args.t, "--t");
    auto [a, b] = global::localize(F, T, Int(args.p));
    rb.outputs["a"] = a;
    rb.outputs["b"] = b;
    rb.integer("det_ord", Int(a + b));
    if ((a + b) % 2 == 0)
        rb.integer("mu", localfield::mu(a, b, args.p));
    else
        rb.outputs["mu"] = nullptr;
    return emit(rb, "localize", args.common, out);
}

struct RepsArgs {
    long long disc = 0;
    std::string gram, t;
    long p = 0;  // 0 = no local report
    Common common;
};

int cmd_reps(const RepsArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    auto gv = parse_matrix(args.gram, "--gram");
    auto tv = parse_matrix(args.t, "--t");
    rb.inputs = {{"disc", args.disc}, {"gram", matrix_echo(gv)}, {"t", matrix_echo(tv)}};
    global::QuadField F(Int(static_cast<long>(args.disc)));
    auto gram = parse_global_matrix(F, args.gram, "--gram");
    auto T = parse_global_matrix(F, args.t, "--t");
    rb.integer("count", global::count_lattice_reps(F, gram, T));
    auto [h, w] = global::class_number(F);
    rb.integer("h", h);
    rb.outputs["unit_order"] = w;
    rb.rational("two_h_over_unit_order", ratio(2 * h, w));
    if (args.p != 0) {
        rb.inputs["p"] = args.p;
        auto [a, b] = global::localize(F, T, Int(args.p));
        rb.outputs["local_exponents"] = {a, b};
        if ((a + b) % 2 == 0) {
            rb.integer("mu", localfield::mu(a, b, args.p));
            rb.rational("derivative_factor", global::whittaker_derivative_factor(a, b, args.p));
            rb.outputs["derivative_factor_tag"] = "gamma^2 log p";
        }
    }
    return emit(rb, "reps", args.common, out);
}

struct SelftestArgs {
    int threads = 0;
    Common common;
};

int cmd_selftest(const SelftestArgs& args, std::ostream& out)
{
    ResultBuilder rb;
    rb.inputs = {{"seed", args.common.seed}, {"threads", args.threads}};
    auto results = acceptance::run_all(args.common.seed, args.threads);
    for (const auto& r : results)
        rb.check(std::to_string(r.id) + ": " + r.name, r.passed, r.detail);
    rb.outputs["criteria"] = results.size();
    rb.outputs["all_passed"] = !rb.any_check_failed;
    return emit(rb, "selftest", args.common, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact local densities, tree intersection numbers, and the bookkeeping around them"};
    app.require_subcommand(1);

    DensityPolyArgs dp;
    auto* sub_dp = app.add_subcommand("density-poly",
                                      "interpolation polynomial of a rank-2 local density");
    sub_dp->add_option("--p", dp.p, "odd prime")->required();
    sub_dp->add_option("--a", dp.a, "larger diagonal exponent")->required();
    sub_dp->add_option("--b", dp.b, "smaller diagonal exponent")->required();
    sub_dp->add_option("--kind", dp.kind, "which polynomial")
        ->check(CLI::IsMember({"all", "nonsplit", "closed", "unimodular"}))
        ->capture_default_str();
    add_common(sub_dp, dp.common);

    DensityGeneralArgs dg;
    auto* sub_dg = app.add_subcommand("density-general", "general density by the partition sum");
    sub_dg->add_option("--p", dg.p, "odd prime")->required();
    sub_dg->add_option("--xi", dg.xi, "exponents of S, comma-separated, non-increasing")->required();
    sub_dg->add_option("--lambda", dg.lambda, "exponents of T, comma-separated, non-increasing")
        ->required();
    add_common(sub_dg, dg.common);

    OracleArgs oa;
    auto* sub_or = app.add_subcommand("oracle", "solution counting over the finite residue ring");
    sub_or->add_option("--p", oa.p, "odd prime")->required();
    sub_or->add_option("--k", oa.k, "precision: count mod p^k")->capture_default_str();
    sub_or->add_option("--eps", oa.eps, "explicit non-residue for the quadratic ring extension");
    sub_or->add_option("--s", oa.s, "diagonal exponents of S, comma-separated")->required();
    sub_or->add_option("--t", oa.t, "target: t1 or t1,t2,ax,ay (off-diagonal ax + ay*delta)")
        ->required();
    sub_or->add_option("--threads", oa.threads, "worker count, 0 = hardware")->capture_default_str();
    sub_or->add_option("--budget", oa.budget, "cap on the enumeration size p^(2kmn)")
        ->capture_default_str();
    sub_or->add_flag("--stabilize", oa.stabilize, "compare the estimates at k and k+1");
    add_common(sub_or, oa.common);

    TreeArgs ta;
    auto* sub_tr = app.add_subcommand("tree", "intersection of two divisors on the (p+1)-regular tree");
    sub_tr->add_option("--p", ta.p, "odd prime")->required();
    sub_tr->add_option("--m1", ta.m1, "smaller vertical radius")->required();
    sub_tr->add_option("--m2", ta.m2, "larger vertical radius")->required();
    sub_tr->add_option("--d", ta.d, "distance between the centers")->required();
    sub_tr->add_option("--e", ta.e, "horizontal pairing value, required exactly when d = 0");
    sub_tr->add_option("--dot", ta.dot, "write the truncated tree as DOT to this file");
    add_common(sub_tr, ta.common);

    MuArgs ma;
    auto* sub_mu = app.add_subcommand("mu", "closed-form intersection invariant");
    sub_mu->add_option("--p", ma.p, "odd prime")->required();
    sub_mu->add_option("--a", ma.a, "larger exponent")->required();
    sub_mu->add_option("--b", ma.b, "smaller exponent")->required();
    add_common(sub_mu, ma.common);

    IdentityArgs ia;
    auto* sub_id = app.add_subcommand(
        "identity", "derivative identity sweep: density combination against the closed form");
    sub_id->add_option("--p", ia.p, "odd prime")->required();
    sub_id->add_option("--max", ia.max, "largest exponent in the sweep")->capture_default_str();
    add_common(sub_id, ia.common);

    DiffArgs da;
    auto* sub_df = app.add_subcommand("diff", "set of primes where the matrix is locally missed");
    sub_df->add_option("--disc", da.disc, "fundamental discriminant < 0")->required();
    sub_df->add_option("--level", da.level, "squarefree product of inert primes")
        ->capture_default_str();
    sub_df->add_option("--t", da.t, "matrix t1,t2,ax,ay (off-diagonal in the omega basis)")
        ->required();
    add_common(sub_df, da.common);

    HilbertArgs ha;
    auto* sub_hi = app.add_subcommand("hilbert", "hilbert symbol at one place or the product");
    sub_hi->add_option("--a", ha.a, "nonzero rational, e.g. -3 or 5/7")->required();
    sub_hi->add_option("--b", ha.b, "nonzero rational")->required();
    sub_hi->add_option("--place", ha.place, "a prime, or 'inf'; omit for the full product");
    add_common(sub_hi, ha.common);

    ClassnumArgs ca;
    auto* sub_cn = app.add_subcommand("classnum", "class number by reduced-form enumeration");
    sub_cn->add_option("--disc", ca.disc, "fundamental discriminant < 0")->required();
    add_common(sub_cn, ca.common);

    LocalizeArgs la;
    auto* sub_lo = app.add_subcommand("localize", "diagonalization exponents at an inert prime");
    sub_lo->add_option("--disc", la.disc, "fundamental discriminant < 0")->required();
    sub_lo->add_option("--p", la.p, "odd inert prime")->required();
    sub_lo->add_option("--t", la.t, "matrix t1,t2,ax,ay (off-diagonal in the omega basis)")
        ->required();
    add_common(sub_lo, la.common);

    RepsArgs ra;
    auto* sub_re = app.add_subcommand("reps", "lattice vector pairs with prescribed Gram matrix");
    sub_re->add_option("--disc", ra.disc, "fundamental discriminant < 0")->required();
    sub_re->add_option("--gram", ra.gram, "lattice Gram matrix t1,t2,ax,ay")->required();
    sub_re->add_option("--t", ra.t, "target Gram matrix t1,t2,ax,ay")->required();
    sub_re->add_option("--p", ra.p, "also report the local invariants at this inert prime");
    add_common(sub_re, ra.common);

    SelftestArgs sa;
    auto* sub_st = app.add_subcommand("selftest", "run the full verification suite");
    sub_st->add_option("--threads", sa.threads, "worker count for the enumeration checks")
        ->capture_default_str();
    add_common(sub_st, sa.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (sub_dp->parsed()) return cmd_density_poly(dp, out);
        if (sub_dg->parsed()) return cmd_density_general(dg, out);
        if (sub_or->parsed()) return cmd_oracle(oa, out);
        if (sub_tr->parsed()) return cmd_tree(ta, out);
        if (sub_mu->parsed()) return cmd_mu(ma, out);
        if (sub_id->parsed()) return cmd_identity(ia, out);
        if (sub_df->parsed()) return cmd_diff(da, out);
        if (sub_hi->parsed()) return cmd_hilbert(ha, out);
        if (sub_cn->parsed()) return cmd_classnum(ca, out);
        if (sub_lo->parsed()) return cmd_localize(la, out);
        if (sub_re->parsed()) return cmd_reps(ra, out);
        if (sub_st->parsed()) return cmd_selftest(sa, out);
    } catch (const budget_error& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        err << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "precondition: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace hermdens::cli
