// radon-lab: command-line front end for the radon_lab headers.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input or usage,
// 3 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/generators.hpp"
#include "radon_lab/hypergraph.hpp"
#include "radon_lab/invariants.hpp"
#include "radon_lab/io.hpp"
#include "radon_lab/lp.hpp"
#include "radon_lab/random.hpp"
#include "radon_lab/setpairs.hpp"
#include "radon_lab/suite.hpp"

using namespace radon_lab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

/// RADON_LAB_BUDGET overrides the default node budget.
std::uint64_t default_budget()
{
    const char* env = std::getenv("RADON_LAB_BUDGET");
    if (!env || !*env)
        return kDefaultNodeBudget;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0)
            throw std::invalid_argument("");
        return v;
    }
    catch (const std::exception&) {
        throw std::invalid_argument(std::string("RADON_LAB_BUDGET must be a positive integer, got '") + env + "'");
    }
}

std::string join(const std::vector<int>& v, int offset = 0)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i] + offset);
    return out;
}

std::string join(const std::vector<Rational>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + to_string(v[i]);
    return out;
}

std::string sets_string(const std::vector<PointSet>& family)
{
    std::string out;
    for (std::size_t i = 0; i < family.size(); ++i)
        out += (i ? " " : "") + to_string(family[i]);
    return out;
}

/// First keyword of the first non-comment line.
std::string file_kind(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open file");
    std::string line;
    while (std::getline(in, line)) {
        line = line.substr(0, line.find('#'));
        std::istringstream words(line);
        std::string word;
        if (words >> word)
            return word;
    }
    throw InputError(path + ": empty file");
}

struct LoadedSpace {
    ConvexitySpace space;
    std::vector<PointSet> tau_family;
    std::string family_name;
};

/// A space file, or the associated space of a hypergraph file.
LoadedSpace load_any_space(const std::string& path)
{
    if (file_kind(path) == "hypergraph") {
        auto a = associated_space(load_hypergraph(path));
        return {std::move(a.space), std::move(a.vertex_stars), "stars"};
    }
    auto s = load_space(path);
    auto fam = basis_family(s);
    return {std::move(s), std::move(fam), "basis"};
}

std::string row_id(const std::string& path)
{
    auto name = path.substr(path.find_last_of('/') + 1);
    return name.substr(0, name.find('.'));
}

void emit(std::ostream& out, const std::string& key, const std::string& value) { out << key << '=' << value << '\n'; }

// ---------------------------------------------------------------------------

struct SpaceGenOptions {
    std::string kind = "interval";
    int n = 4;
    std::vector<int> dims;
    std::uint64_t seed = 1;
    int gens = 4;
    std::string out;
};

int run_space_gen(const SpaceGenOptions& o)
{
    ConvexitySpace s = [&] {
        if (o.kind == "interval")
            return interval_space(o.n);
        if (o.kind == "powerset")
            return powerset_space(o.n);
        if (o.kind == "gridbox")
            return grid_box_space({o.dims});
        if (o.kind == "lattice")
            return lattice_window_space({o.dims});
        auto rng = Rng::stream(o.seed, "space.gen", 0);
        return random_space(rng, o.n, o.gens);
    }();
    if (o.out.empty()) {
        write_space(std::cout, s);
        return kExitOk;
    }
    std::ofstream f(o.out);
    if (!f)
        throw InputError(o.out + ": cannot write file");
    write_space(f, s);
    emit(std::cout, "wrote", o.out);
    emit(std::cout, "points", std::to_string(s.ground_size()));
    emit(std::cout, "sets", std::to_string(s.size()));
    return kExitOk;
}

int run_space_check(const std::string& path)
{
    const auto s = load_space(path);
    emit(std::cout, "points", std::to_string(s.ground_size()));
    emit(std::cout, "sets", std::to_string(s.size()));
    emit(std::cout, "basis", std::to_string(s.basis().size()));
    emit(std::cout, "halfspaces", std::to_string(halfspaces(s).size()));
    const auto sep = is_separable(s);
    emit(std::cout, "separable", sep.separable ? "yes" : "no");
    if (!sep.separable)
        emit(std::cout, "separable.failure", to_string(*sep.convex_set) + " vs " + std::to_string(sep.point));
    emit(std::cout, "axioms", "pass");
    return kExitOk;
}

struct InvariantOptions {
    std::string path;
    int k = 3;
    std::uint64_t budget = kDefaultNodeBudget;
    bool machine = false;
};

int run_invariants(const InvariantOptions& o)
{
    const auto in = load_any_space(o.path);
    const auto& s = in.space;
    auto& out = std::cout;
    emit(out, "points", std::to_string(s.ground_size()));
    emit(out, "sets", std::to_string(s.size()));
    const auto r = radon_number(s, true, o.budget);
    emit(out, "radon", std::to_string(r.value));
    emit(out, "radon.exact", r.exact ? "yes" : "no");
    emit(out, "radon.free_set", to_string(r.witness_free_set));
    if (r.witness_partition)
        emit(out, "radon.partition",
             to_string(r.witness_partition->first) + " " + to_string(r.witness_partition->second));
    const auto t = tverberg_number(s, o.k, o.budget);
    emit(out, "tverberg.k", std::to_string(o.k));
    emit(out, "tverberg", std::to_string(t.value));
    emit(out, "tverberg.exact", t.exact ? "yes" : "no");
    emit(out, "tverberg.free_multiset", join(t.witness_free_multiset));
    const auto h = helly_number(s, o.budget);
    emit(out, "helly", std::to_string(h.value));
    emit(out, "helly.exact", h.exact ? "yes" : "no");
    emit(out, "helly.witness", sets_string(h.witness_family));
    const auto hc = colorful_helly_number(s, o.budget);
    emit(out, "colorful_helly", std::to_string(hc.value));
    emit(out, "colorful_helly.exact", hc.exact ? "yes" : "no");
    emit(out, "colorful_helly.minimal_families", std::to_string(hc.minimal_families));
    for (std::size_t i = 0; i < hc.obstruction.size(); ++i) {
        std::vector<PointSet> cls;
        for (auto m : hc.obstruction[i])
            cls.push_back(m);
        emit(out, "colorful_helly.obstruction." + std::to_string(i + 1), sets_string(cls));
    }
    const auto tau = transversal(in.tau_family);
    emit(out, "tau.family", in.family_name);
    emit(out, "tau", std::to_string(tau.tau));
    emit(out, "tau.pierce", join(tau.pierce_points));
    emit(out, "tau_star", to_string(tau.tau_star));
    emit(out, "tau_star.weights", join(tau.weights));
    if (!o.machine) {
        SpaceRow row;
        row.id = row_id(o.path);
        row.points = s.ground_size();
        row.sets = s.size();
        row.r_lb = r.value;
        if (r.exact)
            row.r = row.t2 = r.value;
        row.t3_lb = t.value;
        if (t.exact)
            row.t3 = t.value;
        row.h_lb = h.value;
        if (h.exact)
            row.h = h.value;
        row.hc_lb = hc.value;
        if (hc.exact)
            row.hc = hc.value;
        row.tau = tau.tau;
        row.tau_star = tau.tau_star;
        out << '\n';
        write_rows_human(out, {row});
    }
    return kExitOk;
}

struct FamilyOptions {
    std::string space;
    std::string sets;
    int p = 0, q = 0, k = 0;
};

int run_family(const FamilyOptions& o)
{
    const auto s = load_space(o.space);
    const auto fam = load_sets(o.sets, s.ground_size());
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (!s.contains(fam[i]))
            throw InputError(o.sets + ": member " + std::to_string(i + 1) + " " + to_string(fam[i]) + " is not convex");
    auto& out = std::cout;
    emit(out, "members", std::to_string(fam.size()));
    const auto t = transversal(fam);
    emit(out, "tau", std::to_string(t.tau));
    emit(out, "tau.pierce", join(t.pierce_points));
    emit(out, "tau_star", to_string(t.tau_star));
    emit(out, "tau_star.weights", join(t.weights));
    if (o.p || o.q) {
        const auto pq = pq_property(fam, o.p, o.q);
        emit(out, "pq", std::to_string(o.p) + "," + std::to_string(o.q));
        emit(out, "pq.holds", pq.holds ? "yes" : "no");
        if (!pq.holds)
            emit(out, "pq.violating", join(pq.violating, 1));
    }
    if (o.k) {
        const auto f = fractional_helly_profile(s, fam, o.k);
        emit(out, "fractional.k", std::to_string(f.k));
        emit(out, "fractional.alpha", to_string(f.alpha));
        emit(out, "fractional.intersecting_tuples", std::to_string(f.intersecting_tuples));
        emit(out, "fractional.total_tuples", std::to_string(f.total_tuples));
        emit(out, "fractional.max_depth", std::to_string(f.max_depth));
        emit(out, "fractional.deepest_point", std::to_string(f.deepest_point));
        emit(out, "fractional.beta_observed", to_string(f.beta_observed));
    }
    return kExitOk;
}

struct HgOptions {
    std::string path;
    int m = 0;
    int cap = 16;
    std::uint64_t budget = kDefaultNodeBudget;
};

int run_hg(const HgOptions& o)
{
    const auto h = load_hypergraph(o.path);
    auto& out = std::cout;
    emit(out, "vertices", std::to_string(h.vertex_count()));
    emit(out, "k", std::to_string(h.uniformity()));
    emit(out, "edges", std::to_string(h.edge_count()));
    const auto mis = maximal_independent_sets(h);
    emit(out, "maximal_independent_sets", std::to_string(mis.size()));
    if (h.vertex_count() <= kMaxChromaticVertices) {
        const auto chi = chromatic_number(h);
        emit(out, "chi", std::to_string(chi.chi));
        emit(out, "chi.coloring", join(chi.coloring));
        const auto om = clique_number(h);
        emit(out, "omega", std::to_string(om.omega));
        emit(out, "omega.clique", to_string(om.clique));
    }
    const auto mm = min_m_Tk(h, o.cap, o.budget);
    emit(out, "min_m", mm.value ? std::to_string(*mm.value) : "above " + std::to_string(o.cap));
    emit(out, "min_m.largest_failing", join(mm.largest_failing, 1));
    if (o.m) {
        const auto t = has_property_Tkm(h, o.m, o.budget);
        emit(out, "Tkm.m", std::to_string(o.m));
        emit(out, "Tkm", t.holds ? "yes" : "no");
        if (t.fewer_edges_than_m)
            emit(out, "Tkm.fewer_edges_than_m", "yes");
        if (!t.holds)
            emit(out, "Tkm.violating", join(t.violating, 1));
        const auto d = has_property_delta_km(h, o.m);
        emit(out, "delta_km", d.holds ? "yes" : "no");
        if (!d.holds)
            emit(out, "delta_km.witness", join(d.witness, 1));
        const auto dd = has_property_Dkm(h, o.m);
        emit(out, "Dkm", dd.holds ? "yes" : "no");
        if (!dd.holds)
            emit(out, "Dkm.witness", join(dd.witness, 1));
        if (!t.holds && mis.size() <= static_cast<std::size_t>(kMaxGround)) {
            const auto c = radon_free_certificate(h, o.m, o.budget);
            emit(out, "certificate.needed", std::to_string(c.needed));
            emit(out, "certificate.largest_free", std::to_string(c.largest_free));
            if (c.certificate) {
                emit(out, "certificate.free_points", join(c.certificate->free_points));
                emit(out, "certificate.edges", sets_string(c.certificate->edges));
                emit(out, "certificate.pairs_verified", verify(c.certificate->pairs).ok ? "yes" : "no");
            }
        }
    }
    return kExitOk;
}

struct SetpairBuildOptions {
    int m = 0, k = 0;
    std::string order;
    std::string out;
};

int run_setpairs_build(const SetpairBuildOptions& o)
{
    SetPairFamily f;
    if (o.order.empty()) {
        f = build(o.m, o.k);
    }
    else {
        if (o.k < 2 || o.m < o.k)
            throw std::invalid_argument("setpairs build needs m >= k >= 2");
        if (o.m > kMaxBuildM || o.k > kMaxBuildK)
            throw CapExceeded("build supports m <= 8 and k <= 4", static_cast<std::size_t>(o.m));
        f = extend(build_base(o.k, load_subset_order(o.order, o.k)), o.m);
    }
    if (o.out.empty()) {
        write_setpairs(std::cout, f);
        return kExitOk;
    }
    std::ofstream file(o.out);
    if (!file)
        throw InputError(o.out + ": cannot write file");
    write_setpairs(file, f);
    emit(std::cout, "wrote", o.out);
    emit(std::cout, "N", std::to_string(f.n));
    return kExitOk;
}

int run_setpairs_verify(const std::string& path, int k)
{
    const auto f = load_setpairs(path, k);
    const auto r = verify(f);
    emit(std::cout, "m", std::to_string(f.m()));
    emit(std::cout, "k", std::to_string(f.k));
    emit(std::cout, "N", std::to_string(f.n));
    emit(std::cout, "verify", r.ok ? "pass" : "fail");
    if (!r.ok)
        emit(std::cout, "verify.message", r.message);
    return r.ok ? kExitOk : kExitCheckFailed;
}

int run_lp(const std::string& path)
{
    const auto lp = load_lp(path);
    const auto r = solve_min(lp);
    emit(std::cout, "status", to_string(r.status));
    if (r.status == LpStatus::Optimal) {
        emit(std::cout, "value", to_string(r.value));
        emit(std::cout, "solution", join(r.solution));
        emit(std::cout, "dual", join(r.dual));
    }
    emit(std::cout, "pivots", std::to_string(r.pivots.size()));
    return kExitOk;
}

struct VerifyOptions {
    SuiteConfig cfg;
    bool machine = false;
    std::string out;
};

int run_verify(const VerifyOptions& o)
{
    const auto result = run_suite(o.cfg);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f)
            throw InputError(o.out + ": cannot write file");
        write_suite_machine(f, result);
    }
    if (o.machine)
        write_suite_machine(std::cout, result);
    else
        write_suite_human(std::cout, result);
    return result.passed() ? kExitOk : kExitCheckFailed;
}

struct ReportOptions {
    std::vector<std::string> inputs;
    std::uint64_t budget = kDefaultNodeBudget;
    bool machine = false;
    bool tverberg3 = true;
};

int run_report(const ReportOptions& o)
{
    std::vector<SpaceRow> rows;
    RowOptions opt;
    opt.budget = o.budget;
    opt.tverberg3 = o.tverberg3;
    for (const auto& path : o.inputs) {
        const auto in = load_any_space(path);
        rows.push_back(compute_row(row_id(path), in.space, in.tau_family, in.family_name, opt));
    }
    CheckResult chain = start_check("chain", 10, "");
    for (const auto& row : rows) {
        check_chain(row, chain);
        write_row_machine(std::cout, row);
    }
    emit(std::cout, "chain", chain.passed ? "pass" : "fail: " + chain.first_failure);
    if (!o.machine) {
        std::cout << '\n';
        write_rows_human(std::cout, rows);
    }
    return chain.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"radon-lab: finite convexity spaces, hypergraph properties and set-pair families"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::uint64_t budget = 0;
    try {
        budget = default_budget();
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }

    auto* space = app.add_subcommand("space", "generate or check convexity space files");
    space->require_subcommand(1);
    SpaceGenOptions gen;
    auto* sgen = space->add_subcommand("gen", "write a generated space");
    sgen->add_option("--kind", gen.kind, "interval, gridbox, lattice, powerset or random")
        ->check(CLI::IsMember({"interval", "gridbox", "lattice", "powerset", "random"}))
        ->capture_default_str();
    sgen->add_option("--n", gen.n, "points (interval, powerset, random)")->capture_default_str();
    sgen->add_option("--dims", gen.dims, "side lengths (gridbox, lattice)")->delimiter(',');
    sgen->add_option("--seed", gen.seed, "seed (random)")->capture_default_str();
    sgen->add_option("--gens", gen.gens, "generator count (random)")->capture_default_str();
    sgen->add_option("-o,--out", gen.out, "output file (default stdout)");
    sgen->callback([&] { action = [&] { return run_space_gen(gen); }; });
    std::string check_path;
    auto* scheck = space->add_subcommand("check", "validate a space file and describe it");
    scheck->add_option("file", check_path)->required();
    scheck->callback([&] { action = [&] { return run_space_check(check_path); }; });

    InvariantOptions inv;
    inv.budget = budget;
    auto* invc = app.add_subcommand("invariants", "Radon, Tverberg, Helly, colorful Helly and transversal numbers");
    invc->add_option("file", inv.path, "space or hypergraph file")->required();
    invc->add_option("--k", inv.k, "Tverberg parts")->check(CLI::Range(2, 16))->capture_default_str();
    invc->add_option("--budget", inv.budget, "search node budget per invariant");
    invc->add_flag("--machine", inv.machine, "key=value lines only");
    invc->callback([&] { action = [&] { return run_invariants(inv); }; });

    FamilyOptions fam;
    auto* famc = app.add_subcommand("family", "transversals, (p,q) and fractional Helly data of a family");
    famc->add_option("--space", fam.space, "space file")->required();
    famc->add_option("--sets", fam.sets, "family file of 'set' lines")->required();
    auto* p_opt = famc->add_option("--p", fam.p, "(p,q) property: p");
    auto* q_opt = famc->add_option("--q", fam.q, "(p,q) property: q");
    p_opt->needs(q_opt);
    q_opt->needs(p_opt);
    famc->add_option("--k", fam.k, "fractional Helly tuple size")->check(CLI::PositiveNumber);
    famc->callback([&] { action = [&] { return run_family(fam); }; });

    HgOptions hg;
    hg.budget = budget;
    auto* hgc = app.add_subcommand("hg", "hypergraph properties T_k(m), delta_k(m), D_k(m)");
    hgc->add_option("file", hg.path, "hypergraph file")->required();
    hgc->add_option("--m", hg.m, "check the properties for this m");
    hgc->add_option("--cap", hg.cap, "largest m tried for the least m")->check(CLI::Range(2, 64))->capture_default_str();
    hgc->add_option("--budget", hg.budget, "search node budget");
    hgc->callback([&] { action = [&] { return run_hg(hg); }; });

    auto* sp = app.add_subcommand("setpairs", "build or verify set-pair families");
    sp->require_subcommand(1);
    SetpairBuildOptions spb;
    auto* spbc = sp->add_subcommand("build", "build m pairs with property (ii) for k-tuples");
    spbc->add_option("--m", spb.m, "pairs")->required();
    spbc->add_option("--k", spb.k, "tuple size")->required();
    spbc->add_option("--order", spb.order, "subset order file for the base family ('T ...' lines)");
    spbc->add_option("-o,--out", spb.out, "output file (default stdout)");
    spbc->callback([&] { action = [&] { return run_setpairs_build(spb); }; });
    std::string spv_path;
    int spv_k = 0;
    auto* spvc = sp->add_subcommand("verify", "check properties (i) and (ii) of a set-pair file");
    spvc->add_option("file", spv_path)->required();
    spvc->add_option("--k", spv_k, "tuple size")->required()->check(CLI::Range(2, 16));
    spvc->callback([&] { action = [&] { return run_setpairs_verify(spv_path, spv_k); }; });

    std::string lp_path;
    auto* lpc = app.add_subcommand("lp", "solve a minimisation LP exactly");
    lpc->add_option("file", lp_path)->required();
    lpc->callback([&] { action = [&] { return run_lp(lp_path); }; });

    VerifyOptions ver;
    ver.cfg.budget = budget;
    auto* verc = app.add_subcommand("verify-theorems", "run every seeded check");
    verc->add_option("--seed", ver.cfg.seed)->capture_default_str();
    verc->add_option("--jobs", ver.cfg.jobs, "worker threads (output order is fixed)")->capture_default_str();
    verc->add_option("--budget", ver.cfg.budget, "search node budget per call");
    verc->add_option("--colorful-pool", ver.cfg.colorful_pool)->capture_default_str();
    verc->add_option("--hull-pool", ver.cfg.hull_pool)->capture_default_str();
    verc->add_option("--graphs", ver.cfg.random_graphs)->capture_default_str();
    verc->add_option("--lps", ver.cfg.random_lps)->capture_default_str();
    verc->add_option("--spaces", ver.cfg.random_spaces)->capture_default_str();
    verc->add_flag("--machine", ver.machine, "key=value lines instead of the summary");
    verc->add_option("--out", ver.out, "also write key=value lines to this file");
    verc->callback([&] { action = [&] { return run_verify(ver); }; });

    ReportOptions rep;
    rep.budget = budget;
    auto* repc = app.add_subcommand("report", "parameter table for space and hypergraph files");
    repc->add_option("files", rep.inputs)->required();
    repc->add_option("--budget", rep.budget, "search node budget per invariant");
    repc->add_flag("--machine", rep.machine, "key=value lines only");
    repc->add_flag("!--no-t3", rep.tverberg3, "skip the Tverberg k=3 column");
    repc->callback([&] { action = [&] { return run_report(rep); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return action ? action() : kExitInput;
    }
    catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
