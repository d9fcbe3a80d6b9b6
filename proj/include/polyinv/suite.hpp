#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polyinv/corpus.hpp"
#include "polyinv/inversion.hpp"

namespace polyinv {

/// Work caps for the reproducible corpus suite. The tree route is exponential,
/// so the cross checks are restricted to small dimensions; every cap is part
/// of the report so runs are comparable.
struct SuiteCaps {
    int cross_degree = 4;            // trees vs fixed point, coefficientwise
    std::size_t cross_max_n = 3;     // tree-route checks only below this dimension
    int truncation_alpha_cap = 4;    // |alpha| cap for height-restricted sums
    int fern_alpha_cap = 0;          // 0 = use deg(H)
    int shuffle_alpha_cap = 4;       // |alpha| cap for class cancellation
    int generated_maps = 4;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EntryResult {
    std::string id;
    std::vector<CheckResult> checks;
};

struct SuiteReport {
    SuiteCaps caps;
    std::vector<EntryResult> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            for (const auto& c : e.checks)
                if (!c.pass) return false;
        return true;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "corpus suite report\n";
        os << "seed: " << caps.seed << "\n";
        os << "caps: cross_degree=" << caps.cross_degree << " cross_max_n=" << caps.cross_max_n
           << " truncation_alpha_cap=" << caps.truncation_alpha_cap
           << " fern_alpha_cap=" << caps.fern_alpha_cap
           << " shuffle_alpha_cap=" << caps.shuffle_alpha_cap
           << " generated_maps=" << caps.generated_maps << "\n";
        std::size_t total = 0, passed = 0;
        for (const auto& e : entries) {
            os << "entry " << e.id << "\n";
            for (const auto& c : e.checks) {
                os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
                ++total;
                if (c.pass) ++passed;
            }
        }
        os << "summary: " << entries.size() << " entries, " << passed << "/" << total
           << " checks passed, " << (all_pass() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["seed"] = caps.seed;
        j["caps"] = {{"cross_degree", caps.cross_degree},
                     {"cross_max_n", caps.cross_max_n},
                     {"truncation_alpha_cap", caps.truncation_alpha_cap},
                     {"fern_alpha_cap", caps.fern_alpha_cap},
                     {"shuffle_alpha_cap", caps.shuffle_alpha_cap},
                     {"generated_maps", caps.generated_maps}};
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json je;
            je["id"] = e.id;
            je["checks"] = nlohmann::ordered_json::array();
            for (const auto& c : e.checks)
                je["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            j["entries"].push_back(std::move(je));
        }
        j["pass"] = all_pass();
        return j.dump(2) + "\n";
    }
};

namespace detail {

inline void check_corpus_entry(const CorpusEntry& entry, const SuiteCaps& caps, EntryResult& res) {
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        res.checks.push_back({name, pass, detail});
    };

    // Byte-exact serialization round trip against the stored file.
    if (!entry.raw.empty()) {
        std::string rendered = serialize_mapfile(entry.map);
        add("round-trip", rendered == entry.raw,
            rendered == entry.raw ? "serialized form matches the file byte for byte"
                                  : "serialized form differs from the file");
    }

    HPart h = mapfile_to_hpart(entry.map);
    int d = std::max(1, h.degree());

    bool keller = keller_check(h);
    if (entry.expected.keller.stated) {
        bool want = entry.expected.keller.value.value_or(false);
        add("keller", keller == want,
            "computed " + std::string(keller ? "true" : "false") + ", expected (" +
                entry.expected.keller.source + ") " + (want ? "true" : "false"));
    }

    auto e = weak_index(h);
    auto p = strong_index(h);
    auto show = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("absent");
    };
    if (entry.expected.weak.stated)
        add("weak-index", e == entry.expected.weak.value,
            "computed " + show(e) + ", expected (" + entry.expected.weak.source + ") " +
                show(entry.expected.weak.value));
    if (entry.expected.strong.stated)
        add("strong-index", p == entry.expected.strong.value,
            "computed " + show(p) + ", expected (" + entry.expected.strong.source + ") " +
                show(entry.expected.strong.value));
    if (e && p)
        add("index-order", *e <= *p, "weak " + show(e) + " <= strong " + show(p));

    // Inversion and degree bounds.
    BoundCertificate cert = degree_bound_report(h);
    if (entry.expected.inverse_degree.stated) {
        const auto& want = entry.expected.inverse_degree.value;
        bool ok;
        std::string detail;
        if (want) {
            ok = cert.inverse_found && cert.inverse_degree == want;
            detail = "computed " +
                     (cert.inverse_found ? std::to_string(*cert.inverse_degree)
                                         : std::string("no inverse")) +
                     ", expected (" + entry.expected.inverse_degree.source + ") " +
                     std::to_string(*want);
        } else {
            ok = !cert.inverse_found;
            detail = cert.inverse_found ? "unexpected polynomial inverse found"
                                        : "no inverse up to the search cap, as expected";
        }
        add("inverse-degree", ok, detail);
    }
    if (cert.inverse_found) {
        add("general-bound", cert.holds_general.value_or(false),
            "deg " + std::to_string(*cert.inverse_degree) + " vs d^(n-1) = " +
                cert.bound_general.get_str());
        if (p)
            add("strong-bound", cert.holds_strong.value_or(false),
                "deg " + std::to_string(*cert.inverse_degree) + " vs d^(p-1) = " +
                    cert.bound_strong->get_str());
        if (e) {
            bool holds = cert.holds_weak.value_or(false);
            if (entry.expected.weak_bound_counterexample)
                add("weak-bound", !holds,
                    holds ? "expected a violation of d^(e-1) but the bound holds"
                          : "violates d^(e-1) = " + cert.bound_weak->get_str() +
                                ", EXPECTED (known counterexample)");
            else
                add("weak-bound", holds,
                    "deg " + std::to_string(*cert.inverse_degree) + " vs d^(e-1) = " +
                        cert.bound_weak->get_str());
        }
    }

    if (p && keller) {
        // Exhaustive fern vanishing at the strong index over live generations.
        int cap = caps.fern_alpha_cap > 0 ? caps.fern_alpha_cap : d;
        FernCheckResult fern = exhaustive_fern_check(h, *p, cap);
        add("fern-vanishing", fern.all_vanish,
            fern.all_vanish ? std::to_string(fern.towers_checked) + " towers over " +
                                  std::to_string(fern.candidates) + " live generations, all vanish"
                            : "nonzero fern sum found");

        // Shuffle-class cancellation among tall trees with nonzero energy.
        std::size_t classes = 0;
        bool cancel_ok = true;
        std::set<std::string> seen;
        for (std::size_t i = 1; i <= h.n() && cancel_ok; ++i) {
            for_each_multi_index(h.n(), 2, caps.shuffle_alpha_cap, [&](const MultiIndex& alpha) {
                if (!cancel_ok) return;
                for_each_tree_with_energy(
                    h, static_cast<int>(i), alpha, {},
                    [&](const TypedTree& t, const Rat&) {
                        if (height(t) < *p) return true;
                        auto members = shuffle_class(t, *p);
                        // Class id: the member with all interior spine types 1.
                        if (!seen.insert(canonical_key(members.front())).second) return true;
                        ++classes;
                        Rat sum(0);
                        for (const auto& m : members) sum += energy(m, h);
                        if (!sum.is_zero()) cancel_ok = false;
                        return cancel_ok;
                    });
            });
        }
        add("shuffle-cancellation", cancel_ok,
            cancel_ok ? std::to_string(classes) + " classes of tall trees sum to zero" +
                            (classes == 0 ? " (no tall trees with nonzero energy)" : "")
                      : "a shuffle class has nonzero energy sum");
    }

    if (p && h.n() <= caps.cross_max_n) {
        // Tree route against the fixed-point route, coefficient by coefficient.
        InverseSeries via_trees = invert_via_trees(h, caps.cross_degree);
        InverseSeries via_fp = invert_fixed_point(h, caps.cross_degree);
        add("oracle-cross-check", via_trees.components == via_fp.components,
            "series agree up to degree " + std::to_string(caps.cross_degree));

        // Height truncation at p changes nothing.
        bool trunc_ok = true;
        for (std::size_t i = 1; i <= h.n() && trunc_ok; ++i)
            for_each_multi_index(h.n(), 2, caps.truncation_alpha_cap, [&](const MultiIndex& alpha) {
                if (!trunc_ok) return;
                if (g_coefficient_truncated(h, *p, i, alpha) != g_coefficient_full(h, i, alpha))
                    trunc_ok = false;
            });
        add("height-truncation", trunc_ok,
            "restricting to height < p changes no coefficient up to |alpha| = " +
                std::to_string(caps.truncation_alpha_cap));
    }
}

inline void check_generated_entry(std::uint64_t seed, int k, const SuiteCaps& caps,
                                  EntryResult& res) {
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        res.checks.push_back({name, pass, detail});
    };
    GeneratorSpec spec;
    spec.n = 3 + static_cast<std::size_t>(k % 2);
    spec.degree = 2 + (k % 3 == 0 ? 1 : 0);
    spec.seed = seed * 1000 + static_cast<std::uint64_t>(k);
    HPart base = generate_triangular(spec);

    auto p0 = strong_index(base);
    add("triangular-strong", p0.has_value(),
        p0 ? "strong index " + std::to_string(*p0) + " within the cap n = " + std::to_string(spec.n)
           : "strictly triangular map without a strong index");
    add("triangular-keller", keller_check(base), "det(I - JH) == 1");

    if (p0) {
        CertifiedInverse inv = invert_strongly_nilpotent(base);
        add("certified-inverse",
            inv.certificate.composition_forward && inv.certificate.composition_backward &&
                inv.certificate.holds_strong.value_or(false),
            "inverse degree " + std::to_string(*inv.certificate.inverse_degree) +
                " within d^(p-1) = " + inv.certificate.bound_strong->get_str());
    }

    SplitMix64 rng(spec.seed ^ 0xc0ffee);
    GeneratorSpec conj = spec;
    conj.conjugation = random_unimodular(spec.n, rng);
    HPart moved = generate_triangular(conj);
    auto p1 = strong_index(moved);
    add("conjugation-invariance", p0 == p1,
        "strong index " + (p0 ? std::to_string(*p0) : std::string("absent")) + " -> " +
            (p1 ? std::to_string(*p1) : std::string("absent")) + " under a unimodular change");

    std::string rendered = serialize_mapfile(hpart_to_mapfile(base, "X-H"));
    add("round-trip", serialize_mapfile(parse_mapfile(rendered)) == rendered,
        "generated map serializes stably");
}

}  // namespace detail

/// Run every check on the corpus plus a block of seeded generated maps.
/// Output is deterministic: same corpus, caps and seed give identical bytes.
inline SuiteReport run_suite(const std::vector<CorpusEntry>& corpus, const SuiteCaps& caps) {
    SuiteReport report;
    report.caps = caps;
    for (const auto& entry : corpus) {
        EntryResult res;
        res.id = entry.id;
        detail::check_corpus_entry(entry, caps, res);
        report.entries.push_back(std::move(res));
    }
    for (int k = 1; k <= caps.generated_maps; ++k) {
        EntryResult res;
        res.id = "gen-" + std::to_string(caps.seed) + "-" + std::to_string(k);
        detail::check_generated_entry(caps.seed, k, caps, res);
        report.entries.push_back(std::move(res));
    }
    return report;
}

}  // namespace polyinv
