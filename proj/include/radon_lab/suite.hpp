#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/generators.hpp"
#include "radon_lab/hypergraph.hpp"
#include "radon_lab/invariants.hpp"
#include "radon_lab/io.hpp"
#include "radon_lab/lp.hpp"
#include "radon_lab/random.hpp"
#include "radon_lab/setpairs.hpp"

namespace radon_lab {

struct SuiteConfig {
    std::uint64_t seed = 1;
    int colorful_pool = 100;      ///< random hypergraphs compared by colorful Helly
    int hull_pool = 100;          ///< random hypergraphs for the hull-star and chi checks
    int random_graphs = 200;      ///< 6-7 vertex graphs for the induced-matching check
    int random_lps = 100;
    int random_spaces = 40;
    std::uint64_t budget = kDefaultNodeBudget;
    int min_m_cap = 16;
    int jobs = 1;

    void validate() const
    {
        if (colorful_pool < 1 || hull_pool < 1 || random_graphs < 1 || random_lps < 1 ||
            random_spaces < 1)
            throw std::invalid_argument("suite instance counts must be at least 1");
        if (budget < 1)
            throw std::invalid_argument("suite budget must be positive");
        if (min_m_cap < 3)
            throw std::invalid_argument("suite min-m cap must be at least 3");
        if (jobs < 1)
            throw std::invalid_argument("--jobs must be at least 1");
    }
};

struct CheckResult {
    std::string id;
    /// Acceptance criterion number, 0 for module properties.
    int criterion = 0;
    std::string title;
    bool passed = true;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::vector<std::pair<std::string, std::string>> details;

    void count(std::uint64_t n = 1) { instances += n; }

    void fail(const std::string& what)
    {
        if (passed)
            first_failure = what;
        passed = false;
        ++failures;
    }

    void expect(bool ok, const std::function<std::string()>& what)
    {
        if (!ok)
            fail(what());
    }

    void note(std::string key, std::string value)
    {
        details.emplace_back(std::move(key), std::move(value));
    }
};

inline CheckResult start_check(std::string id, int criterion, std::string title)
{
    CheckResult c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.title = std::move(title);
    return c;
}

/// One line of the parameter table. Empty optionals print as CAPPED.
struct SpaceRow {
    std::string id;
    int points = 0;
    std::size_t sets = 0;
    std::optional<int> r, t2, t3, h, hc;
    /// Lower bounds reached when a search ran out of budget.
    int r_lb = 0, t3_lb = 0, h_lb = 0, hc_lb = 0;
    std::string tau_family;
    std::optional<int> tau;
    std::optional<Rational> tau_star;
};

struct RowOptions {
    bool tverberg3 = true;
    std::uint64_t budget = kDefaultNodeBudget;
};

namespace detail {

/// Runs f(i) for i in [0, n) on `jobs` threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, int jobs, const std::function<T(std::size_t)>& f)
{
    std::vector<T> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    out[i] = f(i);
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

inline std::string opt_string(const std::optional<int>& v, int lower_bound)
{
    if (v)
        return std::to_string(*v);
    return "CAPPED(>=" + std::to_string(lower_bound) + ")";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// Nonempty meet-irreducible sets: the default family for tau columns.
inline std::vector<PointSet> basis_family(const ConvexitySpace& space)
{
    std::vector<PointSet> out;
    for (auto b : space.basis())
        if (b != 0)
            out.emplace_back(space.ground_size(), b);
    return out;
}

inline SpaceRow compute_row(const std::string& id, const ConvexitySpace& space,
                            const std::vector<PointSet>& tau_family, const std::string& family_name,
                            const RowOptions& opt)
{
    SpaceRow row;
    row.id = id;
    row.points = space.ground_size();
    row.sets = space.size();
    const auto r = radon_number(space, true, opt.budget);
    row.r_lb = r.value;
    if (r.exact)
        row.r = r.value;
    const auto t2 = tverberg_number(space, 2, opt.budget);
    if (t2.exact)
        row.t2 = t2.value;
    if (opt.tverberg3) {
        const auto t3 = tverberg_number(space, 3, opt.budget);
        row.t3_lb = t3.value;
        if (t3.exact)
            row.t3 = t3.value;
    }
    const auto h = helly_number(space, opt.budget);
    row.h_lb = h.value;
    if (h.exact)
        row.h = h.value;
    const auto hc = colorful_helly_number(space, opt.budget);
    row.hc_lb = hc.value;
    if (hc.exact)
        row.hc = hc.value;
    row.tau_family = family_name;
    const auto t = transversal(tau_family);
    row.tau = t.tau;
    row.tau_star = t.tau_star;
    return row;
}

/// Checks h <= r - 1, h <= h_c, t_2 = r and tau* <= tau where all are known.
/// Returns the number of inequalities that could be evaluated.
inline int check_chain(const SpaceRow& row, CheckResult& out)
{
    int evaluated = 0;
    if (row.h && row.r) {
        ++evaluated;
        out.expect(*row.h <= *row.r - 1, [&] { return row.id + ": h > r - 1"; });
    }
    if (row.h && row.hc) {
        ++evaluated;
        out.expect(*row.h <= *row.hc, [&] { return row.id + ": h > h_c"; });
    }
    if (row.t2 && row.r) {
        ++evaluated;
        out.expect(*row.t2 == *row.r, [&] { return row.id + ": t_2 != r"; });
    }
    if (row.tau && row.tau_star) {
        ++evaluated;
        out.expect(*row.tau_star <= *row.tau, [&] { return row.id + ": tau* > tau"; });
    }
    return evaluated;
}

/// Machine form of a row: "row.<id>.<key>=<value>" lines.
inline void write_row_machine(std::ostream& out, const SpaceRow& row)
{
    const std::string p = "row." + row.id + ".";
    auto cap = [](const std::optional<int>& v, int lb) { return detail::opt_string(v, lb); };
    out << p << "points=" << row.points << '\n';
    out << p << "sets=" << row.sets << '\n';
    out << p << "r=" << cap(row.r, row.r_lb) << '\n';
    out << p << "t2=" << cap(row.t2, row.r_lb) << '\n';
    out << p << "t3=" << (row.t3 || row.t3_lb ? cap(row.t3, row.t3_lb) : "-") << '\n';
    out << p << "h=" << cap(row.h, row.h_lb) << '\n';
    out << p << "h_c=" << cap(row.hc, row.hc_lb) << '\n';
    out << p << "h_f=" << (row.hc ? "<=" + std::to_string(*row.hc) : "-") << '\n';
    out << p << "tau_family=" << row.tau_family << '\n';
    out << p << "tau=" << (row.tau ? std::to_string(*row.tau) : "-") << '\n';
    out << p << "tau_star=" << (row.tau_star ? to_string(*row.tau_star) : "-") << '\n';
    out << p << "h<r=" << (row.h && row.r ? detail::yes_no(*row.h < *row.r) : "-") << '\n';
    out << p << "h<=h_c=" << (row.h && row.hc ? detail::yes_no(*row.h <= *row.hc) : "-") << '\n';
}

/// Aligned human table of rows.
inline void write_rows_human(std::ostream& out, const std::vector<SpaceRow>& rows)
{
    const std::vector<std::string> head{"id", "|X|", "|C|", "r", "t3", "h", "h_c", "tau", "tau*"};
    std::vector<std::vector<std::string>> cells{head};
    auto cap = [](const std::optional<int>& v, int lb) {
        return v ? std::to_string(*v) : ">=" + std::to_string(lb);
    };
    for (const auto& r : rows)
        cells.push_back({r.id, std::to_string(r.points), std::to_string(r.sets), cap(r.r, r.r_lb),
                         r.t3 || r.t3_lb ? cap(r.t3, r.t3_lb) : "-", cap(r.h, r.h_lb),
                         cap(r.hc, r.hc_lb), r.tau ? std::to_string(*r.tau) : "-",
                         r.tau_star ? to_string(*r.tau_star) : "-"});
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    for (const auto& line : cells) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
            std::string cell = line[c];
            cell.resize(width[c], ' ');
            text += (c ? "  " : "") + cell;
        }
        while (!text.empty() && text.back() == ' ')
            text.pop_back();
        out << text << '\n';
    }
}

// ---------------------------------------------------------------------------
// Instance pools

/// A hypergraph with everything the criteria need about its associated space.
struct HypergraphCase {
    std::string id;
    std::optional<Hypergraph> graph;
    std::optional<AssociatedSpace> assoc;
    std::optional<int> min_m;
    std::optional<ColorfulResult> colorful;
    std::optional<RadonResult> radon;
};

inline Hypergraph matching_graph(int s, int k)
{
    std::vector<std::vector<int>> e;
    for (int i = 0; i < s; ++i) {
        std::vector<int> edge;
        for (int j = 0; j < k; ++j)
            edge.push_back(i * k + j);
        e.push_back(edge);
    }
    return Hypergraph::from_lists(s * k, k, e);
}

inline Hypergraph cycle_graph(int n)
{
    std::vector<std::vector<int>> e;
    for (int i = 0; i < n; ++i)
        e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return Hypergraph::from_lists(n, 2, e);
}

struct SuiteResult {
    SuiteConfig config;
    std::vector<CheckResult> checks;
    std::vector<SpaceRow> rows;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

struct SuiteContext {
    SuiteConfig cfg;
    std::vector<HypergraphCase> colorful_pool;
    std::vector<Hypergraph> hull_pool;
    std::vector<std::pair<std::string, ConvexitySpace>> random_spaces;
    std::vector<SpaceRow> named_rows;
    std::vector<SpaceRow> extra_rows;
};

inline HypergraphCase analyse_case(std::string id, Hypergraph h, const SuiteConfig& cfg)
{
    HypergraphCase c;
    c.id = std::move(id);
    c.assoc = associated_space(h);
    c.min_m = min_m_Tk(h, cfg.min_m_cap, cfg.budget).value;
    c.colorful = colorful_helly_number(c.assoc->space, cfg.budget);
    c.radon = radon_number(c.assoc->space, true, cfg.budget);
    c.graph = std::move(h);
    return c;
}

inline SuiteContext build_context(const SuiteConfig& cfg)
{
    SuiteContext ctx;
    ctx.cfg = cfg;

    // Colorful pool: random hypergraphs, k in {2,3}, n <= 7, |E| <= 10, then
    // the k = 2 matchings of size 1..3.
    std::vector<std::pair<std::string, Hypergraph>> specs;
    for (int i = 0; static_cast<int>(specs.size()) < cfg.colorful_pool; ++i) {
        auto rng = Rng::stream(cfg.seed, "pool.colorful", static_cast<std::uint64_t>(i));
        const int k = 2 + static_cast<int>(rng.below(2));
        const int n = rng.between(k + 1, 7);
        auto h = random_hypergraph(rng, n, k, 10);
        if (maximal_independent_sets(h).size() > static_cast<std::size_t>(kMaxGround))
            continue;
        specs.emplace_back("hg" + std::to_string(i), std::move(h));
    }
    for (int s = 1; s <= 3; ++s)
        specs.emplace_back("matching" + std::to_string(s), matching_graph(s, 2));
    ctx.colorful_pool = parallel_map<HypergraphCase>(specs.size(), cfg.jobs, [&](std::size_t i) {
        return analyse_case(specs[i].first, specs[i].second, cfg);
    });

    // Hull pool: random hypergraphs on at most 8 vertices plus C5.
    ctx.hull_pool.push_back(cycle_graph(5));
    for (int i = 0; static_cast<int>(ctx.hull_pool.size()) < cfg.hull_pool; ++i) {
        auto rng = Rng::stream(cfg.seed, "pool.hull", static_cast<std::uint64_t>(i));
        const int k = 2 + static_cast<int>(rng.below(2));
        const int n = rng.between(k + 1, 8);
        ctx.hull_pool.push_back(random_hypergraph(rng, n, k, 12));
    }

    for (int i = 0; i < cfg.random_spaces; ++i) {
        auto rng = Rng::stream(cfg.seed, "pool.space", static_cast<std::uint64_t>(i));
        const int n = rng.between(2, 9);
        ctx.random_spaces.emplace_back("space" + std::to_string(i),
                                       random_space(rng, n, rng.between(1, 6), 1, 2));
    }

    RowOptions opt;
    opt.budget = cfg.budget;
    std::vector<std::pair<std::string, ConvexitySpace>> named{
        {"interval6", interval_space(6)},
        {"gridbox4x4", grid_box_space({{4, 4}})},
        {"gridbox2x2", grid_box_space({{2, 2}})},
        {"lattice3x3", lattice_window_space({{3, 3}})},
        {"powerset3", powerset_space(3)},
    };
    ctx.named_rows = parallel_map<SpaceRow>(named.size(), cfg.jobs, [&](std::size_t i) {
        return compute_row(named[i].first, named[i].second, basis_family(named[i].second),
                           "basis", opt);
    });
    return ctx;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Checks

namespace checks {

inline std::string render(const SetPairFamily& f)
{
    std::ostringstream out;
    write_setpairs(out, f);
    return out.str();
}

/// The k = 3 order T = {}, {1}, {1,2}, {1,3}, {1,2,3}, {2}, {2,3}, {3}.
inline SubsetOrder example_order_k3() { return {3, {0b000, 0b001, 0b011, 0b101, 0b111, 0b010, 0b110, 0b100}}; }

inline const char* kExampleTable = "setpairs 3 8\n"
                                   "A 1 2 3 4 5\n"
                                   "B 1 1 6 7 8\n"
                                   "A 2 3 5 6 7\n"
                                   "B 2 1 2 4 8\n"
                                   "A 3 4 5 7 8\n"
                                   "B 3 1 2 3 6\n";

inline CheckResult setpair_example(const detail::SuiteContext&)
{
    auto c = start_check("setpair_example", 1, "k=3 set pairs reproduce the example table");
    const auto f = build_base(3, example_order_k3());
    const std::string text = render(f);
    c.count();
    c.expect(text == kExampleTable, [&] { return "table differs:\n" + text; });
    const auto v = verify(f);
    c.expect(v.ok, [&] { return v.message; });
    c.note("fnv1a", std::to_string(fnv1a(text)));
    return c;
}

inline CheckResult setpair_build(const detail::SuiteContext&)
{
    auto c = start_check("setpair_build", 2, "build(m,k) verifies with N <= C(m,k) 2^k");
    for (int k = 2; k <= 4; ++k)
        for (int m = k; m <= 6; ++m) {
            const auto f = build(m, k);
            const auto bound = binomial(m, k) * (std::uint64_t{1} << k);
            const auto v = verify(f);
            c.count();
            c.expect(v.ok, [&] { return "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + v.message; });
            c.expect(static_cast<std::uint64_t>(f.n) <= bound, [&] {
                return "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": N=" +
                       std::to_string(f.n) + " exceeds " + std::to_string(bound);
            });
            c.note("N[m=" + std::to_string(m) + ",k=" + std::to_string(k) + "]", std::to_string(f.n));
        }
    return c;
}

inline CheckResult induced_matching(const detail::SuiteContext& ctx)
{
    auto c = start_check("induced_matching", 3, "T_2(2) iff no induced 2-matching");
    auto compare = [&](const Hypergraph& g, const std::string& label) {
        c.count();
        const bool t = has_property_Tkm(g, 2, ctx.cfg.budget).holds;
        const bool o = induced_matching_oracle(g, 2);
        c.expect(t == o, [&] { return label + ": T_2(2)=" + detail::yes_no(t) + " oracle=" + detail::yes_no(o); });
    };
    std::uint64_t exhaustive = 0;
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::uint64_t> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pairs.push_back(bit(a) | bit(b));
        for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << pairs.size()); ++sel) {
            std::vector<PointSet> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (sel & bit(static_cast<int>(i)))
                    edges.emplace_back(n, pairs[i]);
            compare(Hypergraph(n, 2, std::move(edges)), "n=" + std::to_string(n) + " graph " + std::to_string(sel));
            ++exhaustive;
        }
    }
    for (int i = 0; i < ctx.cfg.random_graphs; ++i) {
        auto rng = Rng::stream(ctx.cfg.seed, "induced_matching", static_cast<std::uint64_t>(i));
        const int n = rng.between(6, 7);
        std::vector<PointSet> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.chance(1, 3))
                    edges.emplace_back(n, bit(a) | bit(b));
        if (edges.empty())
            edges.emplace_back(n, bit(0) | bit(1));
        compare(Hypergraph(n, 2, std::move(edges)), "random graph " + std::to_string(i));
    }
    c.note("exhaustive_graphs", std::to_string(exhaustive));
    c.note("random_graphs", std::to_string(ctx.cfg.random_graphs));
    return c;
}

inline CheckResult colorful_vs_tkm(const detail::SuiteContext& ctx)
{
    auto c = start_check("colorful_vs_tkm", 4, "least m with T_k(m) equals h_c of the associated space");
    for (const auto& hc : ctx.colorful_pool) {
        c.count();
        if (!hc.min_m || !hc.colorful->exact) {
            c.fail(hc.id + ": undecided within budget");
            continue;
        }
        c.expect(*hc.min_m == hc.colorful->value, [&] {
            return hc.id + ": min m=" + std::to_string(*hc.min_m) + " h_c=" + std::to_string(hc.colorful->value);
        });
        if (hc.id.rfind("matching", 0) == 0) {
            const int s = std::stoi(hc.id.substr(8));
            c.expect(*hc.min_m == s + 1 && hc.colorful->value == s + 1,
                     [&] { return hc.id + ": expected s+1 = " + std::to_string(s + 1); });
        }
        c.note(hc.id, std::to_string(*hc.min_m));
    }
    return c;
}

inline CheckResult radon_bound(const detail::SuiteContext& ctx)
{
    auto c = start_check("radon_bound", 5, "r of the associated space <= C(m,k) 2^k");
    for (const auto& hc : ctx.colorful_pool) {
        if (!hc.min_m)
            continue;
        c.count();
        const int k = hc.graph->uniformity();
        const auto bound = binomial(*hc.min_m, k) * (std::uint64_t{1} << k);
        const auto& r = *hc.radon;
        c.expect(static_cast<std::uint64_t>(r.value) <= bound, [&] {
            return hc.id + ": r" + (r.exact ? "=" : ">=") + std::to_string(r.value) + " exceeds " + std::to_string(bound);
        });
        c.expect(r.exact, [&] { return hc.id + ": radon search out of budget"; });
        c.note(hc.id, std::to_string(r.value) + "<=" + std::to_string(bound));
    }
    return c;
}

inline CheckResult matching_radon(const detail::SuiteContext& ctx)
{
    auto c = start_check("matching_radon", 6, "matching of size 3: r >= 4");
    const auto a = associated_space(matching_graph(3, 2));
    const auto r = radon_number(a.space, true, ctx.cfg.budget);
    c.count();
    c.expect(r.exact, [] { return std::string("radon search out of budget"); });
    c.expect(r.value >= 4, [&] { return "r=" + std::to_string(r.value); });
    c.note("r", std::to_string(r.value));
    c.note("free_set", to_string(r.witness_free_set));
    return c;
}

inline CheckResult hull_star_tau_chi(const detail::SuiteContext& ctx)
{
    auto c = start_check("hull_star_tau_chi", 7, "hull(A) = star(meet A) and tau(stars) = chi");
    std::uint64_t subsets = 0;
    for (std::size_t i = 0; i < ctx.hull_pool.size(); ++i) {
        const auto& h = ctx.hull_pool[i];
        const std::string id = i == 0 ? "C5" : "hg" + std::to_string(i);
        const auto a = associated_space(h);
        c.count();
        const int x = static_cast<int>(a.mis.size());
        if (x <= 12) {
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << x); ++sub) {
                std::uint64_t common = h.all_vertices();
                for (int j = 0; j < x; ++j)
                    if (sub & bit(j))
                        common &= a.mis[static_cast<std::size_t>(j)].bits();
                const auto want = star(a.mis, PointSet(h.vertex_count(), common)).bits();
                c.expect(a.space.hull(sub) == want, [&] {
                    return id + ": hull differs from star at " + to_string(PointSet(x, sub));
                });
                ++subsets;
            }
        }
        const int tau = transversal(a.vertex_stars).tau;
        const int chi = chromatic_number(h).chi;
        c.expect(tau == chi, [&] { return id + ": tau=" + std::to_string(tau) + " chi=" + std::to_string(chi); });
        if (i == 0)
            c.expect(tau == 3 && chi == 3, [] { return std::string("C5: expected tau = chi = 3"); });
    }
    c.note("hull_subsets", std::to_string(subsets));
    return c;
}

inline CheckResult named_values(const detail::SuiteContext& ctx)
{
    auto c = start_check("named_values", 8, "named invariant values");
    auto find = [&](const std::string& id) -> const SpaceRow& {
        for (const auto& r : ctx.named_rows)
            if (r.id == id)
                return r;
        throw std::logic_error("missing row " + id);
    };
    auto want = [&](const std::string& id, const char* what, const std::optional<int>& v, int expected) {
        c.count();
        c.expect(v && *v == expected, [&] {
            return id + ": " + what + "=" + (v ? std::to_string(*v) : std::string("CAPPED")) +
                   " expected " + std::to_string(expected);
        });
        c.note(id + "." + what, v ? std::to_string(*v) : "CAPPED");
    };
    want("interval6", "h", find("interval6").h, 2);
    want("interval6", "r", find("interval6").r, 3);
    want("gridbox4x4", "h", find("gridbox4x4").h, 2);
    want("gridbox2x2", "h_c", find("gridbox2x2").hc, 3);
    want("lattice3x3", "h", find("lattice3x3").h, 4);
    want("powerset3", "r", find("powerset3").r, 4);
    want("powerset3", "h", find("powerset3").h, 3);
    return c;
}

inline CheckResult lp_exact(const detail::SuiteContext& ctx)
{
    auto c = start_check("lp_exact", 9, "exact fractional transversals and strong duality");
    const auto c5 = associated_space(cycle_graph(5));
    const auto t5 = transversal(c5.vertex_stars);
    c.count();
    c.expect(t5.tau_star == Rational(5, 2), [&] { return "C5 tau*=" + to_string(t5.tau_star); });
    c.note("C5.tau_star", to_string(t5.tau_star));
    const std::vector<PointSet> tri{PointSet::of(3, {0, 1}), PointSet::of(3, {1, 2}), PointSet::of(3, {0, 2})};
    const auto tt = transversal(tri);
    c.count();
    c.expect(tt.tau_star == Rational(3, 2), [&] { return "triangle tau*=" + to_string(tt.tau_star); });
    c.note("triangle.tau_star", to_string(tt.tau_star));
    for (int i = 0; i < ctx.cfg.random_lps; ++i) {
        auto rng = Rng::stream(ctx.cfg.seed, "lp", static_cast<std::uint64_t>(i));
        const auto lp = random_lp(rng, 8, 12);
        c.count();
        const auto r = solve_min(lp);
        if (r.status != LpStatus::Optimal) {
            c.fail("lp " + std::to_string(i) + ": status " + to_string(r.status));
            continue;
        }
        Rational dual;
        for (std::size_t j = 0; j < lp.rhs.size(); ++j)
            dual += lp.rhs[j] * r.dual[j];
        c.expect(dual == r.value, [&] { return "lp " + std::to_string(i) + ": primal " + to_string(r.value) + " dual " + to_string(dual); });
        c.note("lp" + std::to_string(i), to_string(r.value));
    }
    return c;
}

inline CheckResult inequality_chain(const detail::SuiteContext& ctx)
{
    auto c = start_check("inequality_chain", 10, "h <= r-1, h <= h_c, t_2 = r, tau* <= tau");
    std::uint64_t evaluated = 0, spaces = 0, partial = 0;
    auto run = [&](const SpaceRow& row) {
        ++spaces;
        const int e = check_chain(row, c);
        evaluated += static_cast<std::uint64_t>(e);
        if (e < 4)
            ++partial;
    };
    for (const auto& r : ctx.named_rows)
        run(r);
    for (const auto& r : ctx.extra_rows)
        run(r);
    c.count(spaces);
    c.note("spaces", std::to_string(spaces));
    c.note("inequalities", std::to_string(evaluated));
    c.note("spaces_with_capped_values", std::to_string(partial));
    return c;
}

// Module properties -------------------------------------------------------

inline CheckResult core_properties(const detail::SuiteContext& ctx)
{
    auto c = start_check("core_properties", 0, "hull closure laws, generated axioms, halfspaces, nerves");
    for (const auto& [id, s] : ctx.random_spaces) {
        c.count();
        const auto report = verify_axioms(s);
        c.expect(report.passed(), [&, id = id] { return id + ": " + report.describe(); });
        for (std::uint64_t y = 0; y <= s.full(); ++y) {
            const auto h = s.hull(y);
            const bool ok = s.contains(h) && (y & ~h) == 0 && s.hull(h) == h;
            c.expect(ok, [&, id = id] { return id + ": hull law fails at " + to_string(PointSet(s.ground_size(), y)); });
            for (std::uint64_t r = s.full() & ~y; r != 0; r &= r - 1)
                c.expect((h & ~s.hull(y | (r & (~r + 1)))) == 0,
                         [&, id = id] { return id + ": hull not monotone"; });
        }
        const auto sets = s.sets();
        c.expect(closure_from_generators(s.ground_size(), sets) == s, [&, id = id] { return id + ": closure not idempotent"; });
        for (const auto& hs : halfspaces(s))
            c.expect(s.contains(hs.complement()), [&, id = id] { return id + ": halfspace complement not convex"; });
        // Dual of the maximal convex proper subsets (an antichain).
        std::vector<PointSet> maximal;
        for (auto m : s.masks()) {
            if (m == s.full() || m == 0)
                continue;
            bool top = true;
            for (auto o : s.masks())
                if (o != s.full() && o != m && (m & ~o) == 0)
                    top = false;
            if (top)
                maximal.emplace_back(s.ground_size(), m);
        }
        if (!maximal.empty())
            c.expect(verify_axioms(dual_space(maximal)).passed(), [&, id = id] { return id + ": dual space fails axioms"; });
        std::vector<PointSet> fam(sets.begin(), sets.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(sets.size(), 12)));
        const auto nv = nerve(fam);
        for (const auto& face : nv.maximal_faces) {
            const auto members = face.members();
            for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << members.size()); ++sub) {
                std::uint64_t meet = s.full();
                for (std::size_t j = 0; j < members.size(); ++j)
                    if (sub & bit(static_cast<int>(j)))
                        meet &= fam[static_cast<std::size_t>(members[j])].bits();
                c.expect(meet != 0, [&, id = id] { return id + ": nerve face with empty intersection"; });
            }
        }
    }
    return c;
}

inline CheckResult generator_properties(const detail::SuiteContext&)
{
    auto c = start_check("generator_properties", 0, "generated spaces are closure systems; box hull is the bounding box");
    const std::vector<std::pair<std::string, ConvexitySpace>> spaces{
        {"interval10", interval_space(10)},       {"gridbox3x4", grid_box_space({{3, 4}})},
        {"gridbox2x2x3", grid_box_space({{2, 2, 3}})}, {"lattice3x3", lattice_window_space({{3, 3}})},
        {"lattice2x2x2", lattice_window_space({{2, 2, 2}})}, {"powerset6", powerset_space(6)}};
    for (const auto& [id, s] : spaces) {
        c.count();
        c.expect(verify_axioms(s).passed(), [&, id = id] { return id + ": axioms fail"; });
    }
    // Lattice window: all pairwise intersections of convex sets are convex.
    const auto lat = lattice_window_space({{3, 3}});
    const LatticeWindow win(LatticeWindowSpec{{3, 3}});
    for (auto a : lat.masks())
        for (auto b : lat.masks())
            c.expect(win.closure(a & b) == (a & b), [] { return std::string("lattice3x3: intersection not closed"); });
    // Box hull equals coordinate bounding box.
    const auto box = grid_box_space({{3, 4}});
    for (std::uint64_t y = 1; y < (std::uint64_t{1} << 12); ++y) {
        int lo0 = 9, hi0 = -1, lo1 = 9, hi1 = -1;
        for (int p = 0; p < 12; ++p)
            if (y & bit(p)) {
                lo0 = std::min(lo0, p % 3), hi0 = std::max(hi0, p % 3);
                lo1 = std::min(lo1, p / 3), hi1 = std::max(hi1, p / 3);
            }
        std::uint64_t want = 0;
        for (int p = 0; p < 12; ++p)
            if (p % 3 >= lo0 && p % 3 <= hi0 && p / 3 >= lo1 && p / 3 <= hi1)
                want |= bit(p);
        c.expect(box.hull(y) == want, [] { return std::string("gridbox3x4: hull is not the bounding box"); });
    }
    return c;
}

inline CheckResult invariant_properties(const detail::SuiteContext& ctx)
{
    auto c = start_check("invariant_properties", 0, "transversal feasibility, (p,q) monotonicity, colorful merge");
    for (int i = 0; i < ctx.cfg.random_spaces; ++i) {
        auto rng = Rng::stream(ctx.cfg.seed, "invariants.family", static_cast<std::uint64_t>(i));
        const int n = rng.between(1, 8);
        std::vector<PointSet> fam;
        for (int j = 0, f = rng.between(1, 9); j < f; ++j)
            fam.emplace_back(n, 1 + rng.below(full_mask(n)));
        c.count();
        const auto t = transversal(fam);
        for (const auto& m : fam) {
            Rational w;
            for (int x = 0; x < n; ++x)
                if (m.contains(x))
                    w += t.weights[static_cast<std::size_t>(x)];
            c.expect(w >= 1, [&] { return "family " + std::to_string(i) + ": member weight below 1"; });
            c.expect(std::any_of(t.pierce_points.begin(), t.pierce_points.end(), [&](int x) { return m.contains(x); }),
                     [&] { return "family " + std::to_string(i) + ": member not pierced"; });
        }
        c.expect(t.tau_star <= t.tau && t.tau <= n, [&] { return "family " + std::to_string(i) + ": tau* <= tau <= n fails"; });
        for (int q = 2; q <= 3; ++q)
            for (int p = q; p <= 5; ++p)
                if (pq_property(fam, p, q).holds)
                    c.expect(pq_property(fam, p + 1, q).holds, [&] { return "family " + std::to_string(i) + ": (p,q) not monotone"; });
    }
    for (const auto& hc : ctx.colorful_pool) {
        const auto& obs = hc.colorful->obstruction;
        if (obs.size() < 2)
            continue;
        c.count();
        const int n = hc.assoc->space.ground_size();
        c.expect(is_colorful_obstruction(obs, n), [&] { return hc.id + ": witness is not an obstruction"; });
        c.expect(is_colorful_obstruction(merge_last_two(obs), n), [&] { return hc.id + ": merged witness is not an obstruction"; });
    }
    return c;
}

inline CheckResult hypergraph_properties(const detail::SuiteContext& ctx)
{
    auto c = start_check("hypergraph_properties", 0, "star meets, T_k(m) monotone, T_k(m) implies delta_k(m)");
    for (std::size_t i = 0; i < ctx.hull_pool.size(); ++i) {
        const auto& h = ctx.hull_pool[i];
        c.count();
        const auto mis = maximal_independent_sets(h);
        const int n = h.vertex_count();
        for (const auto& s : mis)
            c.expect(is_maximal_independent(h, s.bits()), [&] { return "hg" + std::to_string(i) + ": non-maximal set"; });
        if (mis.size() <= static_cast<std::size_t>(kMaxGround)) {
            auto rng = Rng::stream(ctx.cfg.seed, "hypergraph.star", i);
            for (int t = 0; t < 20; ++t) {
                const PointSet a(n, rng.below(full_mask(n) + 1));
                const PointSet b(n, rng.below(full_mask(n) + 1));
                c.expect((star(mis, a) & star(mis, b)) == star(mis, a | b), [&] { return "hg" + std::to_string(i) + ": star meet law fails"; });
            }
        }
        if (h.edge_count() > 8)
            continue;
        for (int m = h.uniformity(); m <= 5; ++m)
            if (has_property_Tkm(h, m, ctx.cfg.budget).holds) {
                c.expect(has_property_Tkm(h, m + 1, ctx.cfg.budget).holds, [&] { return "hg" + std::to_string(i) + ": T_k not monotone"; });
                c.expect(has_property_delta_km(h, m).holds, [&] { return "hg" + std::to_string(i) + ": T_k without delta_k"; });
            }
    }
    return c;
}

inline CheckResult setpair_properties(const detail::SuiteContext&)
{
    auto c = start_check("setpair_properties", 0, "base family balance and unique pattern witnesses");
    for (int k = 2; k <= 6; ++k) {
        const auto order = SubsetOrder::binary_counter(k);
        const auto f = build_base(k, order);
        c.count();
        for (const auto& p : f.pairs)
            c.expect(p.a.count() == (std::size_t{1} << (k - 1)) && p.b.count() == (std::size_t{1} << (k - 1)),
                     [&] { return "k=" + std::to_string(k) + ": unbalanced pair"; });
        for (std::uint32_t sides = 0; sides < (1u << k); ++sides) {
            Bits meet(static_cast<std::size_t>(f.n));
            meet.set();
            for (int j = 0; j < k; ++j)
                meet &= ((sides >> j) & 1u) ? f.pairs[static_cast<std::size_t>(j)].a : f.pairs[static_cast<std::size_t>(j)].b;
            c.expect(meet.count() == 1 && order.sequence[meet.find_first()] == sides,
                     [&] { return "k=" + std::to_string(k) + ": pattern witness not unique"; });
        }
    }
    return c;
}

using CheckFn = CheckResult (*)(const detail::SuiteContext&);

inline const std::vector<CheckFn>& all()
{
    static const std::vector<CheckFn> list{
        setpair_example,  setpair_build,     induced_matching,     colorful_vs_tkm,
        radon_bound,      matching_radon,    hull_star_tau_chi,    named_values,
        lp_exact,         inequality_chain,  core_properties,      generator_properties,
        invariant_properties, hypergraph_properties, setpair_properties};
    return list;
}

}  // namespace checks

/// Builds every instance pool from the seed and runs all checks. Output
/// depends only on the configuration, never on --jobs.
inline SuiteResult run_suite(const SuiteConfig& cfg)
{
    cfg.validate();
    auto ctx = detail::build_context(cfg);

    // Every space built anywhere in the suite feeds the inequality chain.
    std::vector<std::pair<std::string, std::function<SpaceRow()>>> extra;
    RowOptions opt;
    opt.tverberg3 = false;
    opt.budget = cfg.budget;
    for (const auto& hc : ctx.colorful_pool)
        extra.emplace_back(hc.id, [&hc, opt] {
            return compute_row("assoc." + hc.id, hc.assoc->space, hc.assoc->vertex_stars, "stars", opt);
        });
    for (const auto& [id, s] : ctx.random_spaces)
        extra.emplace_back(id, [&s = s, id = id, opt] { return compute_row(id, s, basis_family(s), "basis", opt); });
    ctx.extra_rows = detail::parallel_map<SpaceRow>(extra.size(), cfg.jobs,
                                                   [&](std::size_t i) { return extra[i].second(); });

    SuiteResult result;
    result.config = cfg;
    const auto& list = checks::all();
    result.checks = detail::parallel_map<CheckResult>(list.size(), cfg.jobs,
                                                      [&](std::size_t i) { return list[i](ctx); });
    result.rows = ctx.named_rows;
    return result;
}

inline void write_suite_machine(std::ostream& out, const SuiteResult& r)
{
    out << "suite.seed=" << r.config.seed << '\n';
    out << "suite.budget=" << r.config.budget << '\n';
    out << "suite.checks=" << r.checks.size() << '\n';
    std::size_t failed = 0;
    for (const auto& c : r.checks)
        failed += c.passed ? 0 : 1;
    out << "suite.failed=" << failed << '\n';
    out << "suite.status=" << (failed == 0 ? "pass" : "fail") << '\n';
    for (const auto& c : r.checks) {
        const std::string p = "check." + c.id + ".";
        out << p << "criterion=" << c.criterion << '\n';
        out << p << "status=" << (c.passed ? "pass" : "fail") << '\n';
        out << p << "instances=" << c.instances << '\n';
        out << p << "failures=" << c.failures << '\n';
        if (!c.passed)
            out << p << "first_failure=" << c.first_failure << '\n';
        for (const auto& [k, v] : c.details)
            out << p << k << '=' << v << '\n';
    }
    for (const auto& row : r.rows)
        write_row_machine(out, row);
}

inline void write_suite_human(std::ostream& out, const SuiteResult& r)
{
    std::size_t width = 0;
    for (const auto& c : r.checks)
        width = std::max(width, c.id.size());
    for (const auto& c : r.checks) {
        std::string id = c.id;
        id.resize(width, ' ');
        out << (c.passed ? "PASS  " : "FAIL  ") << id << "  "
            << (c.criterion ? "criterion " + std::to_string(c.criterion) : std::string("property   "))
            << "  instances=" << c.instances << "  " << c.title << '\n';
        if (!c.passed)
            out << "      first failure: " << c.first_failure << '\n';
    }
    out << '\n';
    write_rows_human(out, r.rows);
    out << '\n' << (r.passed() ? "suite: pass" : "suite: FAIL") << '\n';
}

}  // namespace radon_lab
