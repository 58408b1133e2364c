#include "leibniz/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace leibniz {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character
        const std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
        throw ParseError("malformed JSON at line " + std::to_string(line_of(text, pos)) + ": " + e.what());
    }
}

template <class T>
T get_field(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string(where) + ": \"" + key + "\" has the wrong type");
    }
}

std::uint64_t get_unsigned(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string(where) + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

LeibnizAlgebra parse_algebra_unchecked(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("algebra file: top level must be an object");
    const std::uint64_t p = get_unsigned(get_field<json>(doc, "field", "algebra file"), "p", "field");
    if (p < 2 || p > (1u << 16) || !is_prime(static_cast<std::uint32_t>(p)))
        throw ParseError("field: p = " + std::to_string(p) + " is not a supported prime");
    const PrimeField F(static_cast<std::uint32_t>(p));
    const std::uint64_t n = get_unsigned(doc, "dim", "algebra file");
    if (n == 0 || n > 64) throw ParseError("algebra file: dim must be between 1 and 64");

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = get_field<std::vector<std::string>>(doc, "labels", "algebra file");
        if (labels.size() != n) throw ParseError("algebra file: expected " + std::to_string(n) + " labels");
    }
    LeibnizAlgebra L(F, n);
    std::vector<bool> seen(n * n, false);
    const json products = doc.contains("products") ? doc.at("products") : json::array();
    if (!products.is_array()) throw ParseError("algebra file: \"products\" must be an array");
    for (std::size_t e = 0; e < products.size(); ++e) {
        const json& entry = products[e];
        const std::string where = "products[" + std::to_string(e) + "]";
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() || !entry[1].is_number_unsigned() ||
            !entry[2].is_array())
            throw ParseError(where + ": expected [i, j, [coefficients]]");
        const auto i = entry[0].get<std::uint64_t>();
        const auto j = entry[1].get<std::uint64_t>();
        if (i >= n || j >= n) throw ParseError(where + ": index out of range");
        if (seen[i * n + j]) throw ParseError(where + ": duplicate product");
        seen[i * n + j] = true;
        const json& c = entry[2];
        if (c.size() != n) throw ParseError(where + ": coefficient vector must have length " + std::to_string(n));
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (!c[k].is_number_unsigned() || c[k].get<std::uint64_t>() >= p)
                throw ParseError(where + ": coefficients must be integers in [0, " + std::to_string(p) + ")");
            v[k] = static_cast<Residue>(c[k].get<std::uint64_t>());
        }
        L.set_product(i, j, v);
    }
    if (!labels.empty()) L.set_labels(std::move(labels));
    return L;
}

LeibnizAlgebra parse_algebra(std::string_view text) {
    LeibnizAlgebra L = parse_algebra_unchecked(text);
    require_left_leibniz(L);
    return L;
}

LeibnizAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

namespace {

ordered_json algebra_object(const LeibnizAlgebra& L) {
    ordered_json doc;
    doc["field"] = {{"p", L.field().p()}};
    doc["dim"] = L.dim();
    if (!L.labels().empty()) doc["labels"] = L.labels();
    ordered_json products = ordered_json::array();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            auto v = L.product(i, j);
            if (is_zero(v)) continue;
            products.push_back(ordered_json::array({i, j, std::vector<Residue>(v.begin(), v.end())}));
        }
    doc["products"] = products;
    return doc;
}

}  // namespace

std::string serialize_algebra(const LeibnizAlgebra& L) { return algebra_object(L).dump(2) + "\n"; }

Polynomial parse_polynomial(PrimeField field, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");
    const auto p = static_cast<std::int64_t>(field.p());
    std::vector<Residue> coeffs;
    auto add_term = [&](std::int64_t c, std::size_t e) {
        if (e > 4096) throw ParseError("polynomial degree too large");
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] = field.add(coeffs[e], static_cast<Residue>(((c % p) + p) % p));
    };
    auto fail = [&](std::size_t at) {
        throw ParseError("cannot parse polynomial \"" + std::string(text) + "\" near position " + std::to_string(at));
    };
    auto read_int = [&](std::size_t& i, std::int64_t& out) {
        const std::size_t start = i;
        out = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out = out * 10 + (s[i] - '0');
            if (out > (1LL << 40)) fail(start);
            ++i;
        }
        return i > start;
    };
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail(i);
        }
        first = false;
        std::int64_t c = 1;
        const bool has_coeff = read_int(i, c);
        if (!has_coeff) c = 1;
        if (has_coeff && i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            std::int64_t e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (!read_int(i, e)) fail(i);
            }
            add_term(sign * c, static_cast<std::size_t>(e));
        } else {
            if (!has_coeff) fail(i);
            add_term(sign * c, 0);
        }
    }
    return Polynomial(field, std::move(coeffs));
}

std::string format_vector(const LeibnizAlgebra& L, std::span<const Residue> v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (v[k] != 1) out += std::to_string(v[k]);
        out += L.label(k);
    }
    return out.empty() ? "0" : out;
}

std::string format_subspace(const LeibnizAlgebra& L, const Subspace& S) {
    if (S.dim() == 0) return "0";
    std::string out = "<";
    for (std::size_t i = 0; i < S.dim(); ++i) out += (i ? ", " : "") + format_vector(L, S.basis()[i]);
    return out + ">";
}

std::string lattice_json(const LeibnizAlgebra& L, const SubalgebraLattice& lat) {
    ordered_json doc;
    doc["algebra"] = algebra_object(L);
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const Subspace& s = lat.node(i);
        ordered_json basis = ordered_json::array();
        for (const auto& b : s.basis()) basis.push_back(b);
        nodes.push_back({{"index", i},
                         {"dim", s.dim()},
                         {"basis", basis},
                         {"label", format_subspace(L, s)},
                         {"kernel", lat.kernel_node() == i}});
    }
    doc["nodes"] = nodes;
    ordered_json covers = ordered_json::array();
    for (auto [lo, hi] : lat.covers()) covers.push_back({lo, hi});
    doc["covers"] = covers;
    if (lat.kernel_node()) doc["kernel"] = *lat.kernel_node();
    else doc["kernel"] = nullptr;
    const auto pent = find_pentagon(lat.order());
    doc["modular"] = !pent.has_value();
    if (pent) doc["pentagon"] = {pent->bottom, pent->low, pent->high, pent->side, pent->top};
    return doc.dump(2) + "\n";
}

std::string lattice_dot(const LeibnizAlgebra& L, const SubalgebraLattice& lat) {
    std::ostringstream out;
    out << "digraph subalgebras {\n  rankdir=BT;\n  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const Subspace& s = lat.node(i);
        out << "  n" << i << " [label=\"" << format_subspace(L, s) << "\\ndim " << s.dim() << "\"";
        if (lat.kernel_node() == i) out << ", shape=doublecircle, style=filled, fillcolor=lightgrey";
        out << "];\n";
    }
    for (auto [lo, hi] : lat.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

VerificationSpecFile parse_spec_file(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("spec file: top level must be an object");
    VerificationSpecFile out;
    if (doc.contains("isomorphism_cap")) out.options.isomorphism_cap = get_unsigned(doc, "isomorphism_cap", "spec file");
    const json catalogs = get_field<json>(doc, "catalogs", "spec file");
    if (!catalogs.is_array()) throw ParseError("spec file: \"catalogs\" must be an array");
    for (std::size_t e = 0; e < catalogs.size(); ++e) {
        const json& c = catalogs[e];
        const std::string where = "catalogs[" + std::to_string(e) + "]";
        const auto mode = get_field<std::string>(c, "mode", where.c_str());
        const auto p = static_cast<std::uint32_t>(get_unsigned(c, "p", where.c_str()));
        CatalogSpec spec;
        if (mode == "exhaustive") {
            const bool full = c.contains("allow_full_sweep") && get_field<bool>(c, "allow_full_sweep", where.c_str());
            spec = CatalogSpec::exhaustive(p, get_unsigned(c, "dim", where.c_str()), full);
        } else if (mode == "sampled") {
            if (!c.contains("seed")) throw ParseError(where + ": sampled catalogs need an explicit seed");
            spec = CatalogSpec::sampled(p, get_unsigned(c, "dim", where.c_str()), get_unsigned(c, "count", where.c_str()),
                                        get_unsigned(c, "seed", where.c_str()));
        } else if (mode == "one_generator") {
            spec = CatalogSpec::one_generator(p, get_unsigned(c, "max_deg", where.c_str()));
        } else {
            throw ParseError(where + ": unknown mode \"" + mode + "\"");
        }
        out.catalogs.push_back(spec);
    }
    return out;
}

namespace {

const char* mode_name(CatalogMode m) {
    switch (m) {
    case CatalogMode::Exhaustive: return "exhaustive";
    case CatalogMode::Sampled: return "sampled";
    case CatalogMode::OneGenerator: return "one_generator";
    }
    return "";
}

}  // namespace

std::string report_json(const VerificationReport& r, bool include_runtime) {
    ordered_json doc;
    doc["passed"] = r.passed();
    ordered_json catalogs = ordered_json::array();
    ordered_json seeds = ordered_json::array();
    for (const auto& c : r.catalogs) {
        ordered_json entry{{"spec", c.spec.to_string()}, {"mode", mode_name(c.spec.mode)}, {"p", c.spec.p}};
        switch (c.spec.mode) {
        case CatalogMode::Exhaustive: entry["dim"] = c.spec.dim; break;
        case CatalogMode::Sampled:
            entry["dim"] = c.spec.dim;
            entry["count"] = c.spec.count;
            entry["seed"] = c.spec.seed;
            seeds.push_back(c.spec.seed);
            break;
        case CatalogMode::OneGenerator: entry["max_deg"] = c.spec.max_deg; break;
        }
        entry["size"] = c.size;
        catalogs.push_back(entry);
    }
    doc["catalogs"] = catalogs;
    doc["seeds"] = seeds;
    doc["counts"] = {{"algebras_checked", r.algebras_checked},
                     {"lattices_built", r.lattices_built},
                     {"isomorphisms_checked", r.isomorphisms_checked},
                     {"kernel_fixed_checked", r.kernel_fixed_checked},
                     {"pairs_checked", r.pairs_checked},
                     {"isomorphic_pairs", r.isomorphic_pairs},
                     {"cap_hits", r.cap_hits},
                     {"classifications_checked", r.classifications_checked},
                     {"classification_failures", r.classification_failures},
                     {"signature_checks", r.signature_checks},
                     {"signature_mismatches", r.signature_mismatches},
                     {"onegen_recognition_checks", r.onegen_recognition_checks},
                     {"onegen_recognition_failures", r.onegen_recognition_failures},
                     {"diamond_exceptions", r.diamond_exceptions},
                     {"non_diamond_kernel_moves", r.non_diamond_kernel_moves},
                     {"violations", r.violations.size()}};
    doc["diamond_exception_confirmed"] = r.diamond_exception_confirmed;
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json algebras = ordered_json::array();
        for (std::size_t i = 0; i < v.algebras.size(); ++i) {
            ordered_json a = algebra_object(v.algebras[i]);
            a["id"] = i < v.algebra_ids.size() ? v.algebra_ids[i] : "";
            algebras.push_back(a);
        }
        violations.push_back({{"kind", v.kind},
                              {"algebras", algebras},
                              {"map", v.map.image},
                              {"expected_kernel_node", v.expected_node},
                              {"mapped_kernel_node", v.mapped_node}});
    }
    doc["violations"] = violations;
    doc["errors"] = r.errors;
    if (include_runtime) doc["runtime_seconds"] = r.runtime_seconds;
    return doc.dump(2) + "\n";
}

}  // namespace leibniz
