#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyinv/mapfile.hpp"
#include "polyinv/poly_map.hpp"

namespace polyinv {

/// splitmix64: the 64-bit mixing generator of Steele, Lea and Flood. Chosen
/// because its whole state is the seed, so streams are reproducible across
/// platforms from a single integer.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound must be positive. The modulo
    /// bias is irrelevant for test-data generation.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64: zero bound");
        return next() % bound;
    }
};

/// Recipe for a seeded strictly triangular map, optionally conjugated by an
/// invertible linear change of coordinates.
struct GeneratorSpec {
    std::size_t n = 3;
    int degree = 2;               // max total degree of H terms, >= 2
    int terms_per_component = 2;  // before merging collisions
    std::uint64_t seed = 0;
    std::vector<long> coefficient_pool = {1, -1, 2, -2, 3};
    std::optional<RatMatrix> conjugation;
};

/// Strictly triangular H: component i only uses variables i+1..n, so JH is
/// strictly upper triangular and the map is strongly nilpotent by
/// construction. Deterministic in the seed.
inline HPart generate_triangular(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate_triangular: n must be >= 1");
    if (spec.degree < 2) throw std::invalid_argument("generate_triangular: degree must be >= 2");
    if (spec.terms_per_component < 1)
        throw std::invalid_argument("generate_triangular: need at least one term per component");
    if (spec.coefficient_pool.empty())
        throw std::invalid_argument("generate_triangular: empty coefficient pool");
    for (long c : spec.coefficient_pool)
        if (c == 0) throw std::invalid_argument("generate_triangular: zero in coefficient pool");

    SplitMix64 rng(spec.seed);
    std::vector<Poly> comps;
    comps.reserve(spec.n);
    for (std::size_t i = 1; i <= spec.n; ++i) {
        Poly p(spec.n);
        if (i < spec.n) {
            for (int t = 0; t < spec.terms_per_component; ++t) {
                int td = 2 + static_cast<int>(spec.degree > 2 ? rng.below(spec.degree - 1) : 0);
                std::vector<int> e(spec.n, 0);
                for (int step = 0; step < td; ++step) {
                    std::size_t j = i + 1 + rng.below(spec.n - i);
                    ++e[j - 1];
                }
                long c = spec.coefficient_pool[rng.below(spec.coefficient_pool.size())];
                p.add_term(MultiIndex(e), Rat(c));  // collisions merge and may cancel
            }
        }
        comps.push_back(std::move(p));
    }
    HPart h(std::move(comps));
    if (spec.conjugation) return linear_conjugate(h, *spec.conjugation);
    return h;
}

/// Product of random elementary integer shears: determinant 1, integer
/// entries, integer inverse.
inline RatMatrix random_unimodular(std::size_t n, SplitMix64& rng, std::size_t shears = 0) {
    if (n < 1) throw std::invalid_argument("random_unimodular: n must be >= 1");
    if (shears == 0) shears = 2 * n;
    RatMatrix t = RatMatrix::identity(n);
    if (n == 1) return t;
    const long coeffs[4] = {-2, -1, 1, 2};
    for (std::size_t s = 0; s < shears; ++s) {
        std::size_t i = 1 + rng.below(n);
        std::size_t j = 1 + rng.below(n - 1);
        if (j >= i) ++j;  // j != i
        Rat c(coeffs[rng.below(4)]);
        for (std::size_t col = 1; col <= n; ++col) t.at(i, col) += c * t.at(j, col);
    }
    return t;
}

/// Expected value of one corpus property; value == nullopt means the property
/// is expected to be absent (no index within the cap, or no polynomial
/// inverse). source records whether the number was stated with the map or
/// derived with this library and frozen.
template <typename T>
struct Expected {
    bool stated = false;
    std::optional<T> value;
    std::string source;  // "known" or "derived"
};

struct CorpusExpectation {
    Expected<bool> keller;
    Expected<int> weak, strong;
    Expected<int> inverse_degree;  // absent value = expected not invertible
    bool weak_bound_counterexample = false;  // known violation of d^(e-1)
};

struct CorpusEntry {
    std::string id;
    std::string file;        // path relative to the corpus directory; empty for generated maps
    std::string provenance;  // where the map comes from
    std::string raw;         // exact bytes of the map file, for round-trip checks
    MapFile map;
    CorpusExpectation expected;
};

namespace detail {

template <typename T>
Expected<T> parse_expected(const nlohmann::json& obj, const std::string& key) {
    Expected<T> e;
    if (!obj.contains(key)) return e;
    const auto& f = obj[key];
    if (!f.is_object() || !f.contains("value") || !f.contains("source"))
        throw ParseError("corpus: expected." + key + " needs value and source");
    e.stated = true;
    e.source = f["source"].get<std::string>();
    if (e.source != "known" && e.source != "derived")
        throw ParseError("corpus: expected." + key + " source must be known or derived");
    if (!f["value"].is_null()) e.value = f["value"].get<T>();
    return e;
}

}  // namespace detail

/// Load the corpus index dir/corpus.json and every map file it references.
inline std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    std::ifstream in(dir + "/corpus.json", std::ios::binary);
    if (!in) throw ParseError("corpus: cannot read " + dir + "/corpus.json");
    std::ostringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("corpus: invalid JSON index: ") + e.what());
    }
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ParseError("corpus: index needs an entries array");

    std::vector<CorpusEntry> out;
    for (const auto& je : j["entries"]) {
        CorpusEntry entry;
        entry.id = je.at("id").get<std::string>();
        entry.file = je.at("file").get<std::string>();
        entry.provenance = je.value("provenance", std::string{});
        std::ifstream mf(dir + "/" + entry.file, std::ios::binary);
        if (!mf) throw ParseError("corpus: cannot read " + dir + "/" + entry.file);
        std::ostringstream mbuf;
        mbuf << mf.rdbuf();
        entry.raw = mbuf.str();
        entry.map = parse_mapfile(entry.raw);
        if (je.contains("expected")) {
            const auto& ex = je["expected"];
            entry.expected.keller = detail::parse_expected<bool>(ex, "keller");
            entry.expected.weak = detail::parse_expected<int>(ex, "weak_index");
            entry.expected.strong = detail::parse_expected<int>(ex, "strong_index");
            entry.expected.inverse_degree = detail::parse_expected<int>(ex, "inverse_degree");
            entry.expected.weak_bound_counterexample = ex.value("weak_bound_counterexample", false);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace polyinv
