#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyinv/poly_map.hpp"

namespace polyinv {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// On-disk form of a map X - H or X + H: the stored components are the H part
/// in the file's own sign convention, exactly as written.
struct MapFile {
    std::size_t dimension = 0;
    std::string convention;  // "X-H" or "X+H"
    std::vector<Poly> components;
};

inline bool valid_convention(const std::string& c) { return c == "X-H" || c == "X+H"; }

/// Canonical serialization: fixed two-space indentation, one term per line,
/// terms ascending graded-lex, coefficients in lowest terms as decimal strings.
/// Files written here and re-parsed round-trip byte for byte.
inline std::string serialize_mapfile(const MapFile& mf) {
    if (!valid_convention(mf.convention))
        throw std::invalid_argument("serialize_mapfile: convention must be \"X-H\" or \"X+H\"");
    if (mf.components.size() != mf.dimension)
        throw std::invalid_argument("serialize_mapfile: component count differs from dimension");
    std::ostringstream os;
    os << "{\n";
    os << "  \"dimension\": " << mf.dimension << ",\n";
    os << "  \"convention\": \"" << mf.convention << "\",\n";
    os << "  \"components\": [\n";
    for (std::size_t i = 0; i < mf.components.size(); ++i) {
        const Poly& p = mf.components[i];
        if (p.n() != mf.dimension)
            throw std::invalid_argument("serialize_mapfile: component dimension mismatch");
        if (p.is_zero()) {
            os << "    []";
        } else {
            os << "    [\n";
            std::size_t k = 0;
            for (const auto& [m, c] : p.terms()) {
                os << "      {\"exponents\": [";
                for (std::size_t j = 1; j <= mf.dimension; ++j) {
                    if (j > 1) os << ", ";
                    os << m[j];
                }
                os << "], \"num\": \"" << c.num().get_str() << "\", \"den\": \"" << c.den().get_str()
                   << "\"}";
                os << (++k < p.terms().size() ? ",\n" : "\n");
            }
            os << "    ]";
        }
        os << (i + 1 < mf.components.size() ? ",\n" : "\n");
    }
    os << "  ]\n";
    os << "}\n";
    return os.str();
}

inline MapFile parse_mapfile(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("mapfile: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("mapfile: top level must be an object");
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
        throw ParseError("mapfile: missing or invalid \"dimension\"");
    if (!j.contains("convention") || !j["convention"].is_string())
        throw ParseError("mapfile: missing or invalid \"convention\"");
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("mapfile: missing or invalid \"components\"");

    MapFile mf;
    mf.dimension = j["dimension"].get<std::size_t>();
    if (mf.dimension < 1) throw ParseError("mapfile: dimension must be >= 1");
    mf.convention = j["convention"].get<std::string>();
    if (!valid_convention(mf.convention))
        throw ParseError("mapfile: convention must be \"X-H\" or \"X+H\"");
    const auto& comps = j["components"];
    if (comps.size() != mf.dimension)
        throw ParseError("mapfile: expected " + std::to_string(mf.dimension) + " components");

    auto digits_only = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t k = (allow_sign && s[0] == '-') ? 1 : 0;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') return false;
        return true;
    };

    for (const auto& comp : comps) {
        if (!comp.is_array()) throw ParseError("mapfile: each component must be an array of terms");
        Poly p(mf.dimension);
        std::set<std::vector<int>> seen;
        for (const auto& term : comp) {
            if (!term.is_object() || !term.contains("exponents") || !term.contains("num") ||
                !term.contains("den"))
                throw ParseError("mapfile: each term needs exponents, num, den");
            const auto& ex = term["exponents"];
            if (!ex.is_array() || ex.size() != mf.dimension)
                throw ParseError("mapfile: exponent vector of wrong length");
            std::vector<int> e;
            e.reserve(mf.dimension);
            for (const auto& v : ex) {
                if (!v.is_number_integer() || v.get<long long>() < 0)
                    throw ParseError("mapfile: exponents must be nonnegative integers");
                e.push_back(static_cast<int>(v.get<long long>()));
            }
            if (!seen.insert(e).second)
                throw ParseError("mapfile: duplicate exponent vector in a component");
            if (!term["num"].is_string() || !term["den"].is_string())
                throw ParseError("mapfile: num and den must be strings");
            std::string num = term["num"].get<std::string>();
            std::string den = term["den"].get<std::string>();
            if (!digits_only(num, true)) throw ParseError("mapfile: num must be an integer string");
            if (!digits_only(den, false) || den == "0")
                throw ParseError("mapfile: den must be a positive integer string");
            Rat c = Rat::from_strings(num, den);
            if (c.is_zero()) throw ParseError("mapfile: zero coefficients are not stored");
            p.add_term(MultiIndex(e), c);
        }
        mf.components.push_back(std::move(p));
    }
    return mf;
}

inline MapFile read_mapfile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("mapfile: cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_mapfile(buf.str());
}

inline void write_mapfile(const std::string& path, const MapFile& mf) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("mapfile: cannot write " + path);
    out << serialize_mapfile(mf);
}

/// The H part of F = X - H described by the file. An "X+H" file stores the
/// components of X + C, so H = -C; the sign is normalized here and restored
/// on the way out by hpart_to_mapfile.
inline HPart mapfile_to_hpart(const MapFile& mf) {
    std::vector<Poly> comps;
    comps.reserve(mf.components.size());
    for (const auto& p : mf.components) comps.push_back(mf.convention == "X+H" ? -p : p);
    try {
        return HPart(std::move(comps));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("mapfile: ") + e.what());
    }
}

inline MapFile hpart_to_mapfile(const HPart& h, const std::string& convention) {
    if (!valid_convention(convention))
        throw std::invalid_argument("hpart_to_mapfile: convention must be \"X-H\" or \"X+H\"");
    MapFile mf;
    mf.dimension = h.n();
    mf.convention = convention;
    for (const auto& p : h.components()) mf.components.push_back(convention == "X+H" ? -p : p);
    return mf;
}

}  // namespace polyinv
