#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "radon_lab/convexity_space.hpp"
#include "radon_lab/hypergraph.hpp"
#include "radon_lab/lp.hpp"
#include "radon_lab/setpairs.hpp"

namespace radon_lab {

/// Malformed or unreadable input; carries "source:line: message".
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

/// Non-empty, non-comment lines split on whitespace.
inline std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        const auto hash = text.find('#');
        if (hash != std::string::npos)
            text.erase(hash);
        std::istringstream ss(text);
        Line line{number, {}};
        for (std::string tok; ss >> tok;)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(int line, const std::string& what) const
    {
        throw InputError(source_ + ":" + std::to_string(line) + ": " + what);
    }

    long long integer(const Line& line, std::size_t i) const
    {
        const std::string& t = line.tokens.at(i);
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size())
            fail(line.number, "expected an integer, got '" + t + "'");
        return v;
    }

    int in_range(const Line& line, std::size_t i, long long lo, long long hi) const
    {
        const long long v = integer(line, i);
        if (v < lo || v > hi)
            fail(line.number, "value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "]");
        return static_cast<int>(v);
    }

    Rational rational(const Line& line, std::size_t i) const
    {
        try {
            return parse_rational(line.tokens.at(i));
        }
        catch (const std::invalid_argument& e) {
            fail(line.number, e.what());
        }
    }

    void header(const std::vector<Line>& lines, const std::string& keyword, std::size_t args) const
    {
        if (lines.empty())
            fail(0, "empty file, expected '" + keyword + "' header");
        const Line& h = lines.front();
        if (h.tokens[0] != keyword || h.tokens.size() != args + 1)
            fail(h.number, "expected header '" + keyword + "' with " + std::to_string(args) +
                               " argument(s)");
    }

    const std::string& source() const { return source_; }

private:
    std::string source_;
};

inline std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open file");
    return in;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spaces: "space n", then "set ..." lines (explicit) or "gen ..." lines.

inline ConvexitySpace read_space(std::istream& in, const std::string& source = "<space>")
{
    const auto lines = detail::tokenize(in);
    detail::Parser p(source);
    p.header(lines, "space", 1);
    const int n = p.in_range(lines[0], 1, 1, kMaxGround);
    std::vector<PointSet> sets;
    std::string mode;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const std::string& kw = line.tokens[0];
        if (kw != "set" && kw != "gen")
            p.fail(line.number, "expected 'set' or 'gen', got '" + kw + "'");
        if (!mode.empty() && kw != mode)
            p.fail(line.number, "cannot mix 'set' and 'gen' lines");
        mode = kw;
        std::uint64_t mask = 0;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            mask |= bit(p.in_range(line, i, 0, n - 1));
        sets.emplace_back(n, mask);
    }
    if (mode == "gen")
        return closure_from_generators(n, sets);
    const auto report = verify_axioms(n, sets);
    if (!report.passed())
        p.fail(lines[0].number, "axiom check failed: " + report.describe());
    return {n, std::move(sets)};
}

inline ConvexitySpace load_space(const std::string& path)
{
    auto in = detail::open_input(path);
    return read_space(in, path);
}

inline void write_space(std::ostream& out, const ConvexitySpace& space)
{
    out << "space " << space.ground_size() << '\n';
    for (const auto& s : space.sets()) {
        out << "set";
        if (!s.is_empty())
            out << ' ' << to_list(s);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Families of point sets: one "set ..." line per member, order kept.

inline std::vector<PointSet> read_sets(std::istream& in, int ground,
                                       const std::string& source = "<sets>")
{
    const auto lines = detail::tokenize(in);
    detail::Parser p(source);
    std::vector<PointSet> out;
    for (const auto& line : lines) {
        if (line.tokens[0] != "set")
            p.fail(line.number, "expected 'set', got '" + line.tokens[0] + "'");
        std::uint64_t mask = 0;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            mask |= bit(p.in_range(line, i, 0, ground - 1));
        out.emplace_back(ground, mask);
    }
    return out;
}

inline std::vector<PointSet> load_sets(const std::string& path, int ground)
{
    auto in = detail::open_input(path);
    return read_sets(in, ground, path);
}

// ---------------------------------------------------------------------------
// Hypergraphs: "hypergraph k n", then one edge per line (0-based).

inline Hypergraph read_hypergraph(std::istream& in, const std::string& source = "<hypergraph>")
{
    const auto lines = detail::tokenize(in);
    detail::Parser p(source);
    p.header(lines, "hypergraph", 2);
    const int k = p.in_range(lines[0], 1, 2, kMaxGround);
    const int n = p.in_range(lines[0], 2, k, kMaxGround);
    std::vector<PointSet> edges;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        if (static_cast<int>(line.tokens.size()) != k)
            p.fail(line.number, "edge must list exactly " + std::to_string(k) + " vertices");
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < line.tokens.size(); ++i)
            mask |= bit(p.in_range(line, i, 0, n - 1));
        if (popcount(mask) != k)
            p.fail(line.number, "edge has repeated vertices");
        edges.emplace_back(n, mask);
    }
    try {
        return {n, k, std::move(edges)};
    }
    catch (const std::invalid_argument& e) {
        p.fail(lines[0].number, e.what());
    }
}

inline Hypergraph load_hypergraph(const std::string& path)
{
    auto in = detail::open_input(path);
    return read_hypergraph(in, path);
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << "hypergraph " << h.uniformity() << ' ' << h.vertex_count() << '\n';
    for (const auto& e : h.edges())
        out << to_list(e) << '\n';
}

// ---------------------------------------------------------------------------
// Set pairs: "setpairs m N", then "A i ..." / "B i ..." lines, all 1-based.
// The format does not record k, so readers take it as a parameter.

inline void write_setpairs(std::ostream& out, const SetPairFamily& f)
{
    out << "setpairs " << f.m() << ' ' << f.n << '\n';
    auto side = [&](char tag, int i, const Bits& b) {
        out << tag << ' ' << i + 1;
        for (std::size_t j = b.find_first(); j != Bits::npos; j = b.find_next(j))
            out << ' ' << j + 1;
        out << '\n';
    };
    for (int i = 0; i < f.m(); ++i) {
        side('A', i, f.pairs[static_cast<std::size_t>(i)].a);
        side('B', i, f.pairs[static_cast<std::size_t>(i)].b);
    }
}

inline SetPairFamily read_setpairs(std::istream& in, int k, const std::string& source = "<setpairs>")
{
    const auto lines = detail::tokenize(in);
    detail::Parser p(source);
    p.header(lines, "setpairs", 2);
    const int m = p.in_range(lines[0], 1, 0, 4096);
    const int n = p.in_range(lines[0], 2, 0, 1 << 20);
    if (lines.size() != static_cast<std::size_t>(2 * m + 1))
        p.fail(lines[0].number, "expected " + std::to_string(2 * m) + " A/B lines, found " +
                                    std::to_string(lines.size() - 1));
    SetPairFamily f;
    f.k = k;
    f.n = n;
    for (int i = 0; i < m; ++i) {
        SetPair pair{Bits(static_cast<std::size_t>(n)), Bits(static_cast<std::size_t>(n))};
        for (int s = 0; s < 2; ++s) {
            const auto& line = lines[static_cast<std::size_t>(1 + 2 * i + s)];
            const std::string want = s == 0 ? "A" : "B";
            if (line.tokens[0] != want || line.tokens.size() < 2)
                p.fail(line.number, "expected '" + want + " " + std::to_string(i + 1) + " ...'");
            if (p.integer(line, 1) != i + 1)
                p.fail(line.number, "pairs must appear in order; expected index " +
                                        std::to_string(i + 1));
            Bits& target = s == 0 ? pair.a : pair.b;
            for (std::size_t t = 2; t < line.tokens.size(); ++t)
                target.set(static_cast<std::size_t>(p.in_range(line, t, 1, n) - 1));
        }
        f.pairs.push_back(std::move(pair));
    }
    return f;
}

inline SetPairFamily load_setpairs(const std::string& path, int k)
{
    auto in = detail::open_input(path);
    return read_setpairs(in, k, path);
}

/// One "T ..." line per subset of [k], elements 1-based; "T" alone is empty.
inline SubsetOrder read_subset_order(std::istream& in, int k, const std::string& source = "<order>")
{
    const auto lines = detail::tokenize(in);
    detail::Parser p(source);
    SubsetOrder order;
    order.k = k;
    for (const auto& line : lines) {
        if (line.tokens[0] != "T")
            p.fail(line.number, "expected 'T', got '" + line.tokens[0] + "'");
        std::uint32_t t = 0;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            t |= 1u << (p.in_range(line, i, 1, k) - 1);
        order.sequence.push_back(t);
    }
    try {
        order.validate();
    }
    catch (const std::invalid_argument& e) {
        p.fail(lines.empty() ? 0 : lines.back().number, e.what());
    }
    return order;
}

inline SubsetOrder load_subset_order(const std::string& path, int k)
{
    auto in = detail::open_input(path);
    return read_subset_order(in, k, path);
}

// ---------------------------------------------------------------------------
// Linear programs: "min c1 ... cn", then "row a1 ... an >= b" lines.

inline LinearProgram read_lp(std::istream& in, const std::string& source = "<lp>")
{
    const auto lines = detail::tokenize(in);
    detail::Parser p(source);
    if (lines.empty() || lines[0].tokens[0] != "min")
        p.fail(lines.empty() ? 0 : lines[0].number, "expected 'min c1 ... cn' objective line");
    LinearProgram lp;
    for (std::size_t i = 1; i < lines[0].tokens.size(); ++i)
        lp.objective.push_back(p.rational(lines[0], i));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const auto& t = line.tokens;
        if (t[0] != "row" || t.size() < 3 || t[t.size() - 2] != ">=")
            p.fail(line.number, "expected 'row a1 ... an >= b'");
        std::vector<Rational> row;
        for (std::size_t i = 1; i + 2 < t.size(); ++i)
            row.push_back(p.rational(line, i));
        if (row.size() != lp.objective.size())
            p.fail(line.number, "dimension mismatch: row has " + std::to_string(row.size()) +
                                    " coefficients, objective has " +
                                    std::to_string(lp.objective.size()));
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(p.rational(line, t.size() - 1));
    }
    try {
        lp.validate();
    }
    catch (const std::invalid_argument& e) {
        p.fail(lines[0].number, e.what());
    }
    return lp;
}

inline LinearProgram load_lp(const std::string& path)
{
    auto in = detail::open_input(path);
    return read_lp(in, path);
}

}  // namespace radon_lab
