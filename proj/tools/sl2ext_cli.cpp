// sl2ext: Ext dimension vectors for SL2 / quantum GL2 from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sl2ext/cache.hpp"
#include "sl2ext/ext_engine.hpp"
#include "sl2ext/quantum.hpp"
#include "sl2ext/verify.hpp"

namespace {

using namespace sl2ext;
using json = nlohmann::ordered_json;
using F = FormalModule;

constexpr int kSchemaVersion = 1;
constexpr std::size_t kMaxTableCells = 10000;

/// Malformed input; exit 1.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::optional<unsigned> p;
    std::string lambda;
    std::string mu;
    std::optional<Weight> max_degree;
    std::string format = "text";
    bool sparse = false;
    std::optional<unsigned> quantum_l;
    unsigned base_char = 0;
    std::string suite = "all";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 7;
    std::optional<Weight> max_weight;
    std::string cache_path;
    bool paranoid = false;
    std::string cache_action;
};

Weight parse_natural(const std::string& text, const char* what)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
        throw BadInput(std::string(what) + " must be a natural number, got '" + text + "'");
    return std::stoull(text);
}

/// "a..b" or a single value.
std::pair<Weight, Weight> parse_range(const std::string& text, const char* what)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Weight v = parse_natural(text, what);
        return {v, v};
    }
    const Weight lo = parse_natural(text.substr(0, dots), what);
    const Weight hi = parse_natural(text.substr(dots + 2), what);
    if (lo > hi)
        throw BadInput(std::string(what) + " range is empty: " + text);
    return {lo, hi};
}

unsigned require_prime(const Options& o)
{
    if (!o.p)
        throw BadInput("--p is required");
    if (!is_prime(*o.p))
        throw BadInput("--p must be prime, got " + std::to_string(*o.p));
    return *o.p;
}

std::pair<F, F> family_modules(const std::string& family, Weight lambda, Weight mu, unsigned p)
{
    if (family == "delta-delta")
        return {F::weyl(lambda), F::weyl(mu)};
    if (family == "delta-simple")
        return {F::weyl(lambda), F::simple(mu)};
    if (family == "simple-delta")
        return {F::simple(lambda), F::weyl(mu)};
    if (family == "simple-simple")
        return {F::simple(lambda), F::simple(mu)};
    if (family == "tilting-delta")
        return {F::tilting(lambda), F::weyl(mu)};
    if (family == "nabla-nabla")
        return {F::induced(lambda), F::induced(mu)};
    if (family == "twist-closed-form")
        return {F::twist(F::weyl(lambda / p), static_cast<unsigned>(lambda % p)),
                F::twist(F::induced(mu / p), static_cast<unsigned>(mu % p))};
    throw BadInput("unknown family: " + family);
}

struct Cell {
    std::string lambda;
    std::string mu;
    ExtVector v;
    bool linked = true;
};

json cell_json(const Options& o, const Cell& c, bool quantum)
{
    json j;
    j["dims"] = c.v.dims;
    j["cutoff"] = c.v.cutoff;
    j["family"] = o.family;
    j["p"] = quantum ? o.base_char : o.p.value_or(0);
    if (quantum)
        j["l"] = *o.quantum_l;
    if (quantum) {
        j["lambda"] = c.lambda;
        j["mu"] = c.mu;
    } else {
        j["lambda"] = std::stoull(c.lambda);
        j["mu"] = std::stoull(c.mu);
    }
    j["block"] = c.linked ? "linked" : "unlinked";
    j["schema"] = kSchemaVersion;
    return j;
}

std::string csv_quote_free(const std::string& s)
{
    // quantum weights carry a comma; keep the CSV unquoted by using ':'
    std::string out = s;
    for (auto& ch : out)
        if (ch == ',')
            ch = ':';
    return out;
}

void render(std::ostream& out, const Options& o, const std::vector<Cell>& cells, bool quantum, bool table)
{
    if (o.format == "json") {
        if (!table) {
            out << cell_json(o, cells.front(), quantum).dump() << '\n';
            return;
        }
        json arr = json::array();
        for (const auto& c : cells)
            if (!o.sparse || !c.v.is_zero())
                arr.push_back(cell_json(o, c, quantum));
        out << arr.dump() << '\n';
        return;
    }
    if (o.format == "csv") {
        out << "lambda,mu,q,dim\n";
        for (const auto& c : cells)
            for (std::size_t q = 0; q < c.v.dims.size(); ++q) {
                if (o.sparse && c.v.dims[q] == 0)
                    continue;
                out << csv_quote_free(c.lambda) << ',' << csv_quote_free(c.mu) << ',' << q << ',' << c.v.dims[q] << '\n';
            }
        return;
    }
    for (const auto& c : cells) {
        if (table && o.sparse && c.v.is_zero())
            continue;
        if (table) {
            out << c.lambda << ' ' << c.mu << ' ' << c.v.to_string() << '\n';
            continue;
        }
        out << "family  " << o.family << '\n';
        if (quantum)
            out << "ring    quantum l=" << *o.quantum_l << " over characteristic " << o.base_char << '\n';
        else
            out << "p       " << *o.p << '\n';
        out << "lambda  " << c.lambda << '\n';
        out << "mu      " << c.mu << '\n';
        out << "block   " << (c.linked ? "linked" : "unlinked") << '\n';
        out << "dims    " << c.v.to_string() << '\n';
        out << "cutoff  " << c.v.cutoff << '\n';
    }
}

ExtVector cut(ExtVector v, const std::optional<Weight>& max_degree)
{
    if (max_degree && v.dims.size() > *max_degree + 1) {
        v.dims.resize(*max_degree + 1);
        while (!v.dims.empty() && v.dims.back() == 0)
            v.dims.pop_back();
    }
    return v;
}

Cell quantum_cell(const Options& o)
{
    if (o.family != "delta-delta")
        throw UnsupportedFamily("quantum queries cover the delta-delta family only, not " + o.family);
    if (*o.quantum_l < 2)
        throw BadInput("--quantum-l must be at least 2");
    if (o.base_char != 0 && !is_prime(o.base_char))
        throw BadInput("--base-char must be 0 or a prime");
    if (!o.cache_path.empty())
        throw BadInput("--cache applies to classical queries only");
    quantum::GL2Weight lhs;
    quantum::GL2Weight rhs;
    try {
        lhs = quantum::GL2Weight::parse(o.lambda);
        rhs = quantum::GL2Weight::parse(o.mu);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    const quantum::QuantumEngine engine({*o.quantum_l, o.base_char});
    Cell c{o.lambda, o.mu, cut(engine.qext_weyl_weyl(lhs, rhs), o.max_degree)};
    c.linked = lhs.degree() == rhs.degree() &&
               engine.tower().normalize(F::weyl(lhs.sl2()), F::weyl(rhs.sl2())).family != "zero";
    return c;
}

Cell classical_cell(const ExtEngine& engine, const Options& o, Weight lambda, Weight mu)
{
    const auto [src, tgt] = family_modules(o.family, lambda, mu, engine.context().p());
    Cell c{std::to_string(lambda), std::to_string(mu), engine.query(src, tgt, o.max_degree)};
    c.linked = engine.normalize(src, tgt).family != "zero";
    return c;
}

/// Loads the cache into the engine; returns the keys already on disk.
std::set<std::string> load_cache(const ExtEngine& engine, const Options& o)
{
    std::ifstream in(o.cache_path);
    if (!in)
        return {};
    const auto report = cache::import_records(in, engine, o.paranoid);
    for (const auto& w : report.warnings)
        std::cerr << "cache warning: " << w << '\n';
    return report.keys;
}

void append_cache(const ExtEngine& engine, const Options& o, const std::set<std::string>& known)
{
    std::ofstream out(o.cache_path, std::ios::app);
    if (!out)
        throw BadInput("cannot write cache file " + o.cache_path);
    for (const auto& [key, dims] : engine.memo_entries())
        if (!known.count(key))
            out << cache::record_line({key, dims}) << '\n';
}

int cmd_ext(const Options& o)
{
    if (o.family.empty())
        throw BadInput("--family is required");
    if (o.lambda.empty() || o.mu.empty())
        throw BadInput("--lambda and --mu are required");
    if (o.quantum_l) {
        const Cell c = quantum_cell(o);
        render(std::cout, o, {c}, true, false);
        return 0;
    }
    const unsigned p = require_prime(o);
    const Weight lambda = parse_natural(o.lambda, "--lambda");
    const Weight mu = parse_natural(o.mu, "--mu");
    const ExtEngine engine(WeightContext::characteristic(p));
    std::set<std::string> known;
    if (!o.cache_path.empty())
        known = load_cache(engine, o);
    const Cell c = classical_cell(engine, o, lambda, mu);
    std::ostringstream out;
    render(out, o, {c}, false, false);
    if (!o.cache_path.empty())
        append_cache(engine, o, known);
    std::cout << out.str();
    return 0;
}

int cmd_table(const Options& o)
{
    if (o.family.empty())
        throw BadInput("--family is required");
    if (o.quantum_l)
        throw BadInput("table runs classical families only");
    const unsigned p = require_prime(o);
    const auto [l0, l1] = parse_range(o.lambda, "--lambda");
    const auto [m0, m1] = parse_range(o.mu, "--mu");
    const double cells = (static_cast<double>(l1 - l0) + 1) * (static_cast<double>(m1 - m0) + 1);
    if (cells > static_cast<double>(kMaxTableCells))
        throw BadInput("table has " + std::to_string(static_cast<std::uint64_t>(cells)) + " cells, limit is " +
                       std::to_string(kMaxTableCells));
    const ExtEngine engine(WeightContext::characteristic(p));
    std::vector<Cell> rows;
    for (Weight l = l0; l <= l1; ++l)
        for (Weight m = m0; m <= m1; ++m)
            rows.push_back(classical_cell(engine, o, l, m));
    // assembled fully before printing: no partial tables on failure
    std::ostringstream out;
    render(out, o, rows, false, true);
    std::cout << out.str();
    return 0;
}

int cmd_verify(const Options& o)
{
    verify::SuiteOptions so;
    if (o.p) {
        if (!is_prime(*o.p))
            throw BadInput("--p must be prime, got " + std::to_string(*o.p));
        so.p = o.p;
    }
    so.max_weight = o.max_weight;
    so.trials = o.trials;
    so.seed = o.seed;
    bool ok = true;
    for (const auto& outcome : verify::run_suite(o.suite, so)) {
        std::cout << outcome.summary() << '\n';
        for (const auto& note : outcome.notes)
            std::cout << "  " << note << '\n';
        ok = ok && outcome.passed();
    }
    return ok ? 0 : 1;
}

int cmd_cache(const Options& o)
{
    if (o.cache_path.empty())
        throw BadInput("--cache <path> is required");
    const unsigned p = require_prime(o);
    const ExtEngine engine(WeightContext::characteristic(p));
    if (o.cache_action == "export") {
        if (o.max_weight) {
            for (Weight l = 0; l <= *o.max_weight; ++l)
                for (Weight m = 0; m <= *o.max_weight; ++m) {
                    engine.query(F::weyl(l), F::weyl(m));
                    engine.query(F::weyl(l), F::simple(m));
                }
        }
        std::ofstream out(o.cache_path, std::ios::trunc);
        if (!out)
            throw BadInput("cannot write cache file " + o.cache_path);
        const auto n = cache::export_records(out, engine);
        std::cout << "exported " << n << " records\n";
        return 0;
    }
    std::ifstream in(o.cache_path);
    if (!in)
        throw BadInput("cannot read cache file " + o.cache_path);
    const auto report = cache::import_records(in, engine, o.paranoid);
    for (const auto& w : report.warnings)
        std::cerr << "cache warning: " << w << '\n';
    std::cout << "imported " << report.imported << " records, " << report.warning_count() << " warnings\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Ext groups between Weyl, induced, simple and tilting modules for SL2"};
    app.require_subcommand(1);

    auto add_query_flags = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "delta-delta, delta-simple, simple-delta, simple-simple, "
                                              "tilting-delta, nabla-nabla or twist-closed-form");
        sub->add_option("--p", o.p, "characteristic (prime)");
        sub->add_option("--lambda", o.lambda, "source weight (w1,w2 for quantum queries)");
        sub->add_option("--mu", o.mu, "target weight (w1,w2 for quantum queries)");
        sub->add_option("--max-degree", o.max_degree, "truncate the vector above this degree");
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* ext = app.add_subcommand("ext", "dimension vector of one Ext query");
    add_query_flags(ext);
    ext->add_option("--quantum-l", o.quantum_l, "order of the root of unity (quantum GL2)");
    ext->add_option("--base-char", o.base_char, "characteristic of the field for quantum queries (0 or prime)");
    ext->add_option("--cache", o.cache_path, "line-delimited JSON result cache to read and extend");
    ext->add_flag("--paranoid", o.paranoid, "re-derive every cache record before trusting it");

    auto* table = app.add_subcommand("table", "Ext vectors over lambda and mu ranges (a..b)");
    add_query_flags(table);
    table->add_flag("--sparse", o.sparse, "omit zero entries");

    auto* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("--suite", o.suite)->check(CLI::IsMember({"euler", "duality", "collapse", "resolution", "all"}));
    ver->add_option("--p", o.p, "restrict weight suites to one prime");
    ver->add_option("--max-weight", o.max_weight, "weight bound for the Euler and duality suites");
    ver->add_option("--trials", o.trials, "bicomplexes per collapse mode");
    ver->add_option("--seed", o.seed);

    auto* cache_cmd = app.add_subcommand("cache", "import or export the result cache");
    cache_cmd->add_option("action", o.cache_action)->required()->check(CLI::IsMember({"import", "export"}));
    cache_cmd->add_option("--cache", o.cache_path, "cache file")->required();
    cache_cmd->add_option("--p", o.p, "characteristic (prime)")->required();
    cache_cmd->add_option("--max-weight", o.max_weight, "export: fill weights 0..N first");
    cache_cmd->add_flag("--paranoid", o.paranoid, "import: re-derive every record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*ext)
            return cmd_ext(o);
        if (*table)
            return cmd_table(o);
        if (*ver)
            return cmd_verify(o);
        return cmd_cache(o);
    } catch (const UnsupportedFamily& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const WeightOverflow& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
