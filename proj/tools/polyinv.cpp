// Command-line front end: exact inversion of maps X - H over the rationals,
// nilpotency classification, fern-sum checks, tree census, degree bounds, and
// the reproducible corpus suite.
//
// Exit codes: 0 success / all pass, 1 I/O or parse error, 2 verification
// failure, 3 weakly-but-not-strongly nilpotent, 4 not nilpotent.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyinv/polyinv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitVerification = 2;
constexpr int kExitWeaklyOnly = 3;
constexpr int kExitNotNilpotent = 4;

polyinv::HPart load_map(const std::string& path) {
    return polyinv::mapfile_to_hpart(polyinv::read_mapfile(path));
}

/// Parse "3,0,2,1" into a multi-index.
polyinv::MultiIndex parse_alpha(const std::string& text) {
    std::vector<int> e;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int value = std::stoi(part, &used);
        if (used != part.size() || value < 0)
            throw std::invalid_argument("alpha entries must be nonnegative integers");
        e.push_back(value);
    }
    if (e.empty()) throw std::invalid_argument("alpha must have at least one entry");
    return polyinv::MultiIndex(e);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw polyinv::ParseError("cannot write " + out_path);
    out << text;
}

int run_nilpotency(const std::string& path) {
    polyinv::HPart h = load_map(path);
    polyinv::NilpotencyReport report = polyinv::nilpotency_report(h);
    std::cout << polyinv::render_report(report);
    if (report.strong) return kExitOk;
    if (report.weak) return kExitWeaklyOnly;
    return kExitNotNilpotent;
}

int run_ferncheck(const std::string& path, int max_alpha) {
    polyinv::HPart h = load_map(path);
    auto p = polyinv::strong_index(h);
    if (!p) {
        auto e = polyinv::weak_index(h);
        std::cout << "no strong nilpotency index within the dimension cap\n";
        return e ? kExitWeaklyOnly : kExitNotNilpotent;
    }
    int cap = max_alpha > 0 ? max_alpha : std::max(1, h.degree());
    polyinv::FernCheckResult res = polyinv::exhaustive_fern_check(h, *p, cap);
    std::cout << "strong index p = " << *p << ", generation cap |alpha| <= " << cap << "\n";
    std::cout << res.candidates << " live generations, " << res.towers_checked
              << " towers checked\n";
    if (res.all_vanish) {
        std::cout << "all vanish\n";
        return kExitOk;
    }
    const polyinv::FernSpec& v = *res.violation;
    std::cout << "violation: root " << v.root_type << ", sink " << v.sink_type << ", generations";
    for (const auto& a : v.generations) std::cout << " " << a.to_string();
    std::cout << ", sum " << res.violation_value.to_string() << "\n";
    return kExitVerification;
}

int run_treecount(int root_type, const std::string& alpha_text, int max_outdeg, int max_height) {
    polyinv::MultiIndex alpha = parse_alpha(alpha_text);
    polyinv::TreeEnumOptions opt;
    if (max_outdeg > 0) opt.max_outdeg = max_outdeg;
    if (max_height >= 0) opt.max_height = max_height;
    std::cout << polyinv::count_trees(root_type, alpha, opt) << "\n";
    return kExitOk;
}

int run_bound(const std::string& path) {
    polyinv::HPart h = load_map(path);
    polyinv::BoundCertificate cert = polyinv::degree_bound_report(h);
    std::cout << polyinv::render_certificate(cert);
    // The proven bounds are the applicable ones: the general bound and, when a
    // strong index exists, the strong bound. The weak-index analogue is a
    // disproved conjecture and is reported for information only.
    bool ok = cert.inverse_found && cert.holds_general.value_or(false) &&
              (!cert.strong || cert.holds_strong.value_or(false));
    return ok ? kExitOk : kExitVerification;
}

int run_invert(const std::string& path, const std::string& method, int degree,
               const std::string& out_path) {
    polyinv::HPart h = load_map(path);
    polyinv::BoundCertificate cert = polyinv::degree_bound_report(h);

    int cap = degree;
    if (cap <= 0) {
        unsigned long d = static_cast<unsigned long>(cert.degree_f);
        mpz_class z = cert.strong
                          ? polyinv::int_pow(d, static_cast<unsigned long>(*cert.strong - 1))
                          : polyinv::int_pow(d, h.n() >= 1 ? h.n() - 1 : 0);
        cap = z.fits_sint_p() ? static_cast<int>(z.get_si()) : 0;
        if (cap < 1) {
            std::cerr << "error: default truncation degree overflows; pass --degree\n";
            return kExitVerification;
        }
    }

    polyinv::InverseSeries series;
    if (method == "trees") {
        series = polyinv::invert_via_trees(h, cap);
    } else if (method == "both") {
        series = polyinv::invert_fixed_point(h, cap);
        polyinv::InverseSeries alt = polyinv::invert_via_trees(h, cap);
        if (series.components != alt.components) {
            std::cerr << "error: tree route and fixed-point route disagree\n";
            return kExitVerification;
        }
        std::cout << "tree route and fixed-point route agree up to degree " << cap << "\n";
    } else {
        series = polyinv::invert_fixed_point(h, cap);
    }

    std::ostringstream block;
    block << polyinv::render_certificate(cert);
    if (!cert.inverse_found) {
        std::cout << block.str();
        std::cerr << "error: no verified polynomial inverse at the search cap\n";
        return kExitVerification;
    }

    // F^{-1} = X + G; the file stores the G components under the X+H sign.
    polyinv::MapFile inv_file;
    inv_file.dimension = h.n();
    inv_file.convention = "X+H";
    for (std::size_t i = 1; i <= h.n(); ++i)
        inv_file.components.push_back(series.components[i - 1] -
                                      polyinv::Poly::variable(h.n(), i));
    std::string rendered = polyinv::serialize_mapfile(inv_file);

    if (out_path.empty()) {
        std::cout << block.str();
        std::cout << rendered;
    } else {
        emit(rendered, out_path);
        std::cout << block.str();
        std::cout << "inverse written to " << out_path << "\n";
    }
    return kExitOk;
}

int run_suite(const std::string& corpus_dir, std::uint64_t seed, const std::string& out_path,
              bool as_json, polyinv::SuiteCaps caps) {
    caps.seed = seed;
    std::vector<polyinv::CorpusEntry> corpus = polyinv::load_corpus(corpus_dir);
    polyinv::SuiteReport report = polyinv::run_suite(corpus, caps);
    emit(as_json ? report.to_json() : report.to_text(), out_path);
    if (!out_path.empty())
        std::cout << "report written to " << out_path << (report.all_pass() ? " (PASS)" : " (FAIL)")
                  << "\n";
    return report.all_pass() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact inversion and nilpotency analysis of polynomial maps X - H"};
    app.require_subcommand(1);

    std::string map_path, out_path, method = "fixedpoint", alpha_text, corpus_dir = "corpus";
    int degree = 0, max_alpha = 0, max_outdeg = 0, max_height = -1, root_type = 1;
    bool as_json = false;
    std::uint64_t seed = 42;
    polyinv::SuiteCaps caps;

    CLI::App* suite = app.add_subcommand("suite", "run every check on a corpus of maps");
    suite->add_option("--corpus", corpus_dir, "corpus directory with corpus.json");
    suite->add_option("--seed", seed, "seed for the generated-map block");
    suite->add_option("--out", out_path, "write the report to a file");
    suite->add_flag("--json", as_json, "machine-readable report");
    suite->add_option("--cross-degree", caps.cross_degree, "tree/fixed-point cross-check degree");
    suite->add_option("--cross-max-n", caps.cross_max_n, "dimension cap for tree-route checks");
    suite->add_option("--truncation-alpha", caps.truncation_alpha_cap,
                      "|alpha| cap for truncation equality");
    suite->add_option("--fern-alpha", caps.fern_alpha_cap, "|alpha| cap for fern checks, 0 = deg H");
    suite->add_option("--shuffle-alpha", caps.shuffle_alpha_cap, "|alpha| cap for shuffle classes");
    suite->add_option("--generated", caps.generated_maps, "number of generated maps");

    CLI::App* invert = app.add_subcommand("invert", "invert a map and verify by composition");
    invert->add_option("mapfile", map_path, "map file")->required();
    invert->add_option("--method", method, "trees | fixedpoint | both")
        ->check(CLI::IsMember({"trees", "fixedpoint", "both"}));
    invert->add_option("--degree", degree, "series truncation degree (default: proven bound)");
    invert->add_option("--out", out_path, "write the inverse map file here");

    CLI::App* nilp = app.add_subcommand("nilpotency", "weak/strong nilpotency with witnesses");
    nilp->add_option("mapfile", map_path, "map file")->required();

    CLI::App* fern = app.add_subcommand("ferncheck", "exhaustive fern-sum vanishing at p");
    fern->add_option("mapfile", map_path, "map file")->required();
    fern->add_option("--max-alpha", max_alpha, "generation size cap, 0 = deg H");

    CLI::App* tree = app.add_subcommand("treecount", "count labeled tree classes");
    tree->add_option("root", root_type, "root type")->required();
    tree->add_option("alpha", alpha_text, "leaf multi-index, e.g. 3,0,2,1")->required();
    tree->add_option("--max-outdeg", max_outdeg, "cap on children per vertex");
    tree->add_option("--max-height", max_height, "cap on tree height");

    CLI::App* bound = app.add_subcommand("bound", "degree bound certificate");
    bound->add_option("mapfile", map_path, "map file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (suite->parsed()) return run_suite(corpus_dir, seed, out_path, as_json, caps);
        if (invert->parsed()) return run_invert(map_path, method, degree, out_path);
        if (nilp->parsed()) return run_nilpotency(map_path);
        if (fern->parsed()) return run_ferncheck(map_path, max_alpha);
        if (tree->parsed()) return run_treecount(root_type, alpha_text, max_outdeg, max_height);
        if (bound->parsed()) return run_bound(map_path);
    } catch (const polyinv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const polyinv::VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
