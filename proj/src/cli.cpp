#include "thrackle/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "thrackle/bipartite.hpp"
#include "thrackle/groebner.hpp"
#include "thrackle/lattice.hpp"
#include "thrackle/matroid.hpp"
#include "thrackle/numeric.hpp"
#include "thrackle/thrackle.hpp"
#include "thrackle/triangulation.hpp"

namespace thrackle {

namespace {

int default_threads() {
    if (const char* env = std::getenv("THRACKLE_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Chunked parallel loop; results must be written to disjoint slots so the
// output is independent of the schedule.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const auto workers = static_cast<std::size_t>(
        std::min<std::size_t>(static_cast<std::size_t>(threads), count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::string poly_to_string(const EhrhartPoly& poly) {
    std::ostringstream os;
    bool first = true;
    for (int i = poly.degree(); i >= 0; --i) {
        const Rational& c = poly.coefficients()[static_cast<std::size_t>(i)];
        if (c == 0 && !(first && i == 0)) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = c < 0 ? Rational(-c) : c;
        if (a != 1 || i == 0) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << "k";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

struct CountMethods {
    bool closed = false, recurrence = false, enumerate = false, brute = false;
};

int cmd_count(int s, int t, const std::vector<std::string>& methods, std::ostream& out,
              std::ostream& err) {
    std::vector<BigInt> values;
    for (const std::string& m : methods) {
        if (m == "closed") {
            values.push_back(count_closed_form(s, t));
        } else if (m == "recurrence") {
            values.push_back(count_recurrence(s, t));
        } else if (m == "enum") {
            SpanningThrackleEnumerator en(s, t);
            BigInt c = 0;
            while (en.next()) ++c;
            values.push_back(c);
        } else if (m == "brute") {
            values.push_back(BigInt(brute_force_spanning_thrackles(s, t).size()));
        } else {
            err << "count: unknown method '" << m
                << "' (expected closed|recurrence|enum|brute)\n";
            return 2;
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    if (values.size() > 1) {
        bool agree = std::all_of(values.begin(), values.end(),
                                 [&](const BigInt& v) { return v == values[0]; });
        out << (agree ? " OK" : " MISMATCH") << "\n";
        if (!agree) {
            err << "count: methods disagree\n";
            return 1;
        }
    } else {
        out << "\n";
    }
    return 0;
}

int cmd_enum(int s, int t, const std::string& format, std::ostream& out) {
    SpanningThrackleEnumerator en(s, t);
    EmbeddedBipartite g(s, t);
    std::size_t index = 0;
    while (auto h = en.next()) {
        if (format == "json") {
            out << to_json(*h).dump() << "\n";
        } else if (format == "dot") {
            out << to_dot(g, h->edges(), "thrackle_" + std::to_string(index));
        } else {  // intervals
            const auto& bp = h->breakpoints();
            if (bp.empty()) out << "-";
            for (std::size_t i = 0; i < bp.size(); ++i) out << (i ? " " : "") << bp[i];
            out << "\n";
        }
        ++index;
    }
    return 0;
}

int cmd_phi(int s, int t, const std::string& invert, std::ostream& out) {
    if (!invert.empty()) {
        out << to_json(phi_inverse(invert, s, t)).dump() << "\n";
        return 0;
    }
    SpanningThrackleEnumerator en(s, t);
    while (auto h = en.next()) {
        out << phi(*h) << " ";
        const auto& bp = h->breakpoints();
        if (bp.empty()) out << "-";
        for (std::size_t i = 0; i < bp.size(); ++i) out << (i ? "," : "") << bp[i];
        out << "\n";
    }
    return 0;
}

int cmd_groebner(int r, int n, const std::string& format, std::ostream& out) {
    const auto cg = generate_cg(r, n);
    if (format == "json") {
        out << cg_to_json(cg).dump(2) << "\n";
    } else {
        out << "C_g(" << r << "," << n << "): " << cg.size() << " binomials\n";
        for (const Binomial& b : cg) out << b.str() << "\n";
    }
    const bool ok = buchberger_check(r, n);
    out << "groebner: " << (ok ? "PASS" : "FAIL") << " (" << cg.size()
        << " generators, S-pairs and reducedness "
        << (ok ? "verified" : "NOT verified") << ")\n";
    return ok ? 0 : 1;
}

int cmd_triangulate(int r, int n, const std::string& format, std::ostream& out) {
    Triangulation t = build_triangulation(r, n);
    if (format == "csv")
        out << to_csv(t);
    else
        out << to_json(t).dump(2) << "\n";
    return 0;
}

int cmd_verify(int r, int n, int samples, std::uint64_t seed, int threads,
               const std::string& format, std::ostream& out, std::ostream& err) {
    Triangulation t = build_triangulation(r, n);
    const BigInt expected = count_closed_form(r, n - r);
    const std::size_t cells = t.simplices.size();

    std::vector<BigInt> volumes(cells);
    parallel_for(cells, threads, [&](std::size_t i) {
        volumes[i] = normalized_simplex_volume(t.simplices[i], r, n);
    });
    std::size_t unimodular =
        static_cast<std::size_t>(std::count(volumes.begin(), volumes.end(), BigInt(1)));

    bool volume_checked = n <= 8;
    BigInt volume_oracle = 0;
    BigInt volume_total = 0;
    for (const BigInt& v : volumes) volume_total += v;
    if (volume_checked) volume_oracle = ehrhart_normalized_volume(ehrhart_fit(r, n), n - 2);

    CoveringSampleReport cover = sample_covering(t, samples, seed);

    const bool count_ok = BigInt(cells) == expected;
    const bool unimodular_ok = unimodular == cells;
    const bool volume_ok = !volume_checked || volume_total == volume_oracle;
    const bool cover_ok = cover.failures == 0;
    const bool ok = count_ok && unimodular_ok && volume_ok && cover_ok;

    if (format == "csv") {
        out << "r,n,count,expected,unimodular,volume_ok\n";
        out << r << ',' << n << ',' << cells << ',' << expected << ','
            << (unimodular_ok ? "true" : "false") << ','
            << (volume_checked ? (volume_ok ? "true" : "false") : "skipped") << "\n";
    } else {
        out << "r=" << r << " n=" << n << " count=" << cells << " expected=" << expected
            << " unimodular=" << unimodular << "/" << cells << " volume=";
        if (volume_checked)
            out << volume_total << "/" << volume_oracle;
        else
            out << "skipped";
        out << " samples=" << cover.tested - cover.failures << "/" << cover.tested
            << " skipped=" << cover.skipped << " seed=" << seed << "\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (!ok) {
        if (!count_ok)
            err << "verify: simplex count differs from C(n-2, r-1)\n";
        else if (!unimodular_ok)
            err << "verify: a simplex has normalized volume != 1\n";
        else if (!volume_ok)
            err << "verify: simplex volumes do not add up to the Ehrhart volume\n";
        else
            err << "verify: a sampled interior point is not in exactly one simplex\n";
        return 1;
    }
    return 0;
}

int cmd_ehrhart(int r, int n, int kmax, const std::string& format, std::ostream& out) {
    std::vector<BigInt> counts;
    for (int k = 0; k <= kmax; ++k) counts.push_back(count_lattice_points(r, n, k));
    EhrhartPoly poly = ehrhart_fit(r, n);
    BigInt volume = ehrhart_normalized_volume(poly, n - 2);
    if (format == "csv") {
        out << "k,count\n";
        for (int k = 0; k <= kmax; ++k) out << k << ',' << counts[static_cast<std::size_t>(k)] << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["r"] = r;
        j["n"] = n;
        auto values = nlohmann::json::array();
        for (int k = 0; k <= kmax; ++k)
            values.push_back({k, counts[static_cast<std::size_t>(k)].convert_to<long long>()});
        j["values"] = std::move(values);
        auto coeffs = nlohmann::json::array();
        for (const Rational& c : poly.coefficients())
            coeffs.push_back({boost::multiprecision::numerator(c).convert_to<long long>(),
                              boost::multiprecision::denominator(c).convert_to<long long>()});
        j["coefficients"] = std::move(coeffs);
        j["normalized_volume"] = volume.convert_to<long long>();
        out << j.dump(2) << "\n";
    } else {
        for (int k = 0; k <= kmax; ++k)
            out << "k=" << k << " count=" << counts[static_cast<std::size_t>(k)] << "\n";
        out << "i(k) = " << poly_to_string(poly) << "\n";
        out << "normalized_volume = " << volume << "\n";
    }
    return 0;
}

std::vector<int> parse_basis_list(const std::string& text) {
    std::vector<int> basis;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        basis.push_back(std::stoi(item));
    }
    return basis;
}

// Maximal-thrackle count under an arbitrary relabeling of B and its
// complement, given by permutations of the rows and columns.
BigInt relabeled_count(const TangentSubgraph& sub, const EmbeddedBipartite& g,
                       const std::vector<int>& row_perm, const std::vector<int>& col_perm) {
    std::vector<Edge> edges;
    edges.reserve(sub.edges.size());
    const int r = static_cast<int>(row_perm.size());
    for (const Edge& e : sub.edges)
        edges.push_back(Edge{row_perm[static_cast<std::size_t>(e.left) - 1],
                             r + 1 + col_perm[static_cast<std::size_t>(e.right) - 1 -
                                              static_cast<std::size_t>(r)]});
    return BigInt(maximal_thrackles(g, edges).size());
}

int cmd_matroid(const std::string& input, const std::string& basis_flag, bool all_relabelings,
                const std::string& format, std::ostream& out, std::ostream& err) {
    std::ifstream in(input);
    if (!in) {
        err << "matroid: cannot open '" << input << "'\n";
        return 2;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        err << "matroid: malformed JSON: " << e.what() << "\n";
        return 2;
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("bases")) {
        err << "matroid: expected {\"n\", \"r\", \"bases\"}\n";
        return 2;
    }
    int n, r;
    std::vector<std::vector<int>> base_list;
    try {
        n = j.at("n").get<int>();
        r = j.at("r").get<int>();
        base_list = j.at("bases").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        err << "matroid: malformed JSON: " << e.what() << "\n";
        return 2;
    }
    std::unique_ptr<MatroidBases> m;
    try {
        m = std::make_unique<MatroidBases>(n, r, std::move(base_list), false);
    } catch (const std::invalid_argument& e) {
        err << "matroid: " << e.what() << "\n";
        return 2;
    }
    if (!validate_bases(*m)) {
        err << "matroid: basis-exchange property fails\n";
        return 1;
    }

    std::vector<std::vector<int>> selected;
    if (!basis_flag.empty()) {
        auto basis = parse_basis_list(basis_flag);
        std::sort(basis.begin(), basis.end());
        if (!m->contains(basis)) {
            err << "matroid: --basis is not a basis of the input matroid\n";
            return 2;
        }
        selected.push_back(std::move(basis));
    } else {
        selected = m->bases();
    }

    auto reports = nlohmann::json::array();
    for (const auto& basis : selected) {
        ThrackleCountReport report = tangent_cone_simplex_count(basis, *m);
        nlohmann::json rj = report_to_json(report);
        if (all_relabelings && r < n) {
            const int cols = n - r;
            BigInt perms = factorial(r) * factorial(cols);
            if (perms > 20000) {
                err << "matroid: --all-relabelings limited to r!*(n-r)! <= 20000\n";
                return 2;
            }
            EmbeddedBipartite g(r, cols);
            std::vector<int> row_perm(static_cast<std::size_t>(r));
            std::iota(row_perm.begin(), row_perm.end(), 1);
            BigInt lo = report.count, hi = report.count;
            do {
                std::vector<int> col_perm(static_cast<std::size_t>(cols));
                std::iota(col_perm.begin(), col_perm.end(), 0);
                do {
                    BigInt c = relabeled_count(report.subgraph, g, row_perm, col_perm);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                } while (std::next_permutation(col_perm.begin(), col_perm.end()));
            } while (std::next_permutation(row_perm.begin(), row_perm.end()));
            rj["relabeling_count_min"] = lo.convert_to<long long>();
            rj["relabeling_count_max"] = hi.convert_to<long long>();
        }
        reports.push_back(std::move(rj));
    }

    if (format == "json") {
        nlohmann::json top;
        top["n"] = m->n();
        top["r"] = m->r();
        top["per_basis"] = std::move(reports);
        out << top.dump(2) << "\n";
    } else {
        for (const auto& rj : reports) {
            out << "basis={";
            const auto& basis = rj.at("basis");
            for (std::size_t i = 0; i < basis.size(); ++i)
                out << (i ? "," : "") << basis[i].get<int>();
            out << "} edges=[";
            const auto& edges = rj.at("edges");
            for (std::size_t i = 0; i < edges.size(); ++i)
                out << (i ? "," : "") << "(" << edges[i][0].get<int>() << ","
                    << edges[i][1].get<int>() << ")";
            out << "] count=" << rj.at("maximal_thrackle_count").get<long long>()
                << " equal_cardinality="
                << (rj.at("equal_cardinality").get<bool>() ? "yes" : "no")
                << " max_cardinality=" << rj.at("max_cardinality").get<int>();
            if (rj.contains("relabeling_count_min"))
                out << " relabeling_count_min=" << rj.at("relabeling_count_min").get<long long>()
                    << " relabeling_count_max=" << rj.at("relabeling_count_max").get<long long>();
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact triangulations of uniform matroid tangent cones via spanning thrackles"};
    app.name("thrackle");
    app.require_subcommand(1);

    int s = 0, t = 0, r = 0, n = 0;
    int samples = 100, kmax = -1, threads = default_threads();
    std::uint64_t seed = 0;
    std::string enum_format, groebner_format, tri_format, verify_format, ehrhart_format,
        matroid_format;
    std::string invert, input, basis_flag;
    std::vector<std::string> methods{"closed"};
    bool all_relabelings = false;

    auto positive = CLI::Range(1, 1 << 20);

    CLI::App* c_count = app.add_subcommand("count", "count spanning thrackles of K_{s,t}");
    c_count->add_option("--s", s, "left part size")->required()->check(positive);
    c_count->add_option("--t", t, "right part size")->required()->check(positive);
    c_count->add_option("--method", methods, "closed|recurrence|enum|brute, comma separated")
        ->delimiter(',');

    CLI::App* c_enum = app.add_subcommand("enum", "stream spanning thrackles of K_{s,t}");
    c_enum->add_option("--s", s, "left part size")->required()->check(positive);
    c_enum->add_option("--t", t, "right part size")->required()->check(positive);
    c_enum->add_option("--format", enum_format, "json|dot|intervals")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "dot", "intervals"}));

    CLI::App* c_phi = app.add_subcommand("phi", "bit-string bijection for spanning thrackles");
    c_phi->add_option("--s", s, "left part size")->required()->check(positive);
    c_phi->add_option("--t", t, "right part size")->required()->check(positive);
    c_phi->add_option("--invert", invert, "bit string to map back to a thrackle");

    CLI::App* c_groebner =
        app.add_subcommand("groebner-check", "certify the quadratic binomial basis");
    c_groebner->add_option("--r", r, "rank")->required()->check(positive);
    c_groebner->add_option("--n", n, "ground set size")->required()->check(positive);
    c_groebner->add_option("--format", groebner_format, "text|json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* c_tri = app.add_subcommand("triangulate", "emit the thrackle triangulation");
    c_tri->add_option("--r", r, "rank")->required()->check(positive);
    c_tri->add_option("--n", n, "ground set size")->required()->check(positive);
    c_tri->add_option("--format", tri_format, "json|csv")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* c_verify =
        app.add_subcommand("verify", "check count, unimodularity, volume, covering");
    c_verify->add_option("--r", r, "rank")->required()->check(positive);
    c_verify->add_option("--n", n, "ground set size")->required()->check(positive);
    c_verify->add_option("--samples", samples, "number of interior sample points")
        ->default_val(100)
        ->check(CLI::Range(0, 1 << 20));
    c_verify->add_option("--seed", seed, "sampling seed")->default_val(0);
    c_verify->add_option("--threads", threads, "worker threads (default THRACKLE_THREADS or 1)")
        ->check(positive);
    c_verify->add_option("--format", verify_format, "human|csv")
        ->default_val("human")
        ->check(CLI::IsMember({"human", "csv"}));

    CLI::App* c_ehrhart = app.add_subcommand("ehrhart", "lattice point counts and polynomial");
    c_ehrhart->add_option("--r", r, "rank")->required()->check(positive);
    c_ehrhart->add_option("--n", n, "ground set size")->required()->check(positive);
    c_ehrhart->add_option("--kmax", kmax, "largest dilation to print (default n)");
    c_ehrhart->add_option("--format", ehrhart_format, "table|csv|json")
        ->default_val("table")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* c_matroid =
        app.add_subcommand("matroid", "tangent subgraphs and thrackle counts from a basis list");
    c_matroid->add_option("--input", input, "matroid JSON file")->required();
    c_matroid->add_option("--basis", basis_flag, "restrict to one basis, comma separated");
    c_matroid->add_flag("--all-relabelings", all_relabelings,
                        "try every relabeling of the basis and its complement");
    c_matroid->add_option("--format", matroid_format, "human|json")
        ->default_val("human")
        ->check(CLI::IsMember({"human", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(c_count)) return cmd_count(s, t, methods, out, err);
        if (app.got_subcommand(c_enum)) return cmd_enum(s, t, enum_format, out);
        if (app.got_subcommand(c_phi)) return cmd_phi(s, t, invert, out);
        if (app.got_subcommand(c_groebner)) {
            if (r >= n) {
                err << "groebner-check: need r < n\n";
                return 2;
            }
            return cmd_groebner(r, n, groebner_format, out);
        }
        if (app.got_subcommand(c_tri)) {
            if (r >= n) {
                err << "triangulate: need r < n\n";
                return 2;
            }
            return cmd_triangulate(r, n, tri_format, out);
        }
        if (app.got_subcommand(c_verify)) {
            if (r >= n) {
                err << "verify: need r < n\n";
                return 2;
            }
            return cmd_verify(r, n, samples, seed, threads, verify_format, out, err);
        }
        if (app.got_subcommand(c_ehrhart)) {
            if (r >= n) {
                err << "ehrhart: need r < n\n";
                return 2;
            }
            if (kmax < 0) kmax = n;
            return cmd_ehrhart(r, n, kmax, ehrhart_format, out);
        }
        if (app.got_subcommand(c_matroid))
            return cmd_matroid(input, basis_flag, all_relabelings, matroid_format, out, err);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

}  // namespace thrackle
