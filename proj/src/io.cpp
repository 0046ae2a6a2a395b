#include "eghforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eghforge {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error(what);
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(std::string("expected integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path) {
    std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail("parse error in '" + path + "': " + e.what());
    }
}

Json to_json(const Int& v) {
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer())
        return Int(j.get<long long>());
    if (j.is_string())
        return Int(j.get<std::string>());
    fail("expected an integer or a decimal string");
}

Json to_json(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v)
        arr.push_back(to_json(x));
    return arr;
}

std::vector<Int> ints_from_json(const Json& j) {
    if (!j.is_array())
        fail("expected an array of integers");
    std::vector<Int> out;
    for (const Json& x : j)
        out.push_back(int_from_json(x));
    return out;
}

Json to_json(const MonomialIdeal& I) {
    Json j;
    j["vars"] = I.n;
    Json gens = Json::array();
    for (const Monomial& g : I.gens)
        gens.push_back(to_string(g));
    j["gens"] = std::move(gens);
    return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
    int n = int_field(j, "vars");
    if (n < 0)
        fail("'vars' must be non-negative");
    if (!j.contains("gens") || !j["gens"].is_array())
        fail("expected array field 'gens'");
    std::vector<Monomial> gens;
    for (const Json& g : j["gens"]) {
        if (!g.is_string())
            fail("generators must be monomial strings");
        gens.push_back(parse_monomial(g.get<std::string>(), n));
    }
    return minimalize(n, std::move(gens));
}

MonomialIdeal load_ideal(const std::string& path) {
    std::string text = read_file(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return ideal_from_json(load_json(path));

    // plain-text sugar: `vars: n` header, then one monomial per line
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Monomial> gens;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos)
            continue;
        std::string body = line.substr(start);
        if (body.rfind("#", 0) == 0)
            continue;
        if (n < 0) {
            if (body.rfind("vars:", 0) != 0)
                fail(path + ":" + std::to_string(lineno) + ": expected 'vars: n' header");
            n = std::stoi(body.substr(5));
            if (n < 0)
                fail(path + ":" + std::to_string(lineno) + ": negative variable count");
            continue;
        }
        try {
            gens.push_back(parse_monomial(body, n));
        } catch (const std::exception& e) {
            fail(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (n < 0)
        fail(path + ": missing 'vars: n' header");
    return minimalize(n, std::move(gens));
}

Json to_json(const HilbertSeries& s) {
    Json j;
    std::vector<Int> coeffs = s.numerator.c;
    j["numerator"] = to_json(coeffs);
    j["denom_power"] = s.n;
    j["display"] = to_string(s);
    return j;
}

Json to_json(const QPolynomial& q) {
    Json j;
    j["coefficients"] = to_json(q.q.c);
    j["dim"] = q.dim;
    return j;
}

Json to_json(const CapVector& ring) {
    Json j;
    j["vars"] = ring.n;
    j["caps"] = ring.caps;
    return j;
}

CapVector cap_vector_from_json(const Json& j) {
    int n = int_field(j, "vars");
    if (!j.contains("caps") || !j["caps"].is_array())
        fail("expected array field 'caps'");
    std::vector<int> caps;
    for (const Json& c : j["caps"])
        caps.push_back(c.get<int>());
    return make_cap_vector(n, std::move(caps));
}

Json to_json(const SimplicialComplex& c) {
    Json j;
    j["vertices"] = c.vertices;
    Json facets = Json::array();
    for (uint64_t f : c.facets) {
        Json facet = Json::array();
        for (int v = 0; v < c.vertex_count(); ++v)
            if (f & (uint64_t{1} << v))
                facet.push_back(c.vertices[static_cast<size_t>(v)]);
        facets.push_back(std::move(facet));
    }
    j["facets"] = std::move(facets);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail("expected array field 'vertices'");
    std::vector<std::string> vertices;
    for (const Json& v : j["vertices"]) {
        if (v.is_string())
            vertices.push_back(v.get<std::string>());
        else
            vertices.push_back(v.dump());
    }
    if (!j.contains("facets") || !j["facets"].is_array())
        fail("expected array field 'facets'");
    std::vector<uint64_t> facets;
    for (const Json& f : j["facets"]) {
        if (!f.is_array())
            fail("each facet must be an array of vertex labels");
        uint64_t mask = 0;
        for (const Json& v : f) {
            std::string label = v.is_string() ? v.get<std::string>() : v.dump();
            auto it = std::find(vertices.begin(), vertices.end(), label);
            if (it == vertices.end())
                fail("facet vertex '" + label + "' is not in the vertex list");
            mask |= uint64_t{1} << (it - vertices.begin());
        }
        facets.push_back(mask);
    }
    return make_complex(std::move(vertices), std::move(facets));
}

SimplicialComplex load_complex(const std::string& path) {
    return complex_from_json(load_json(path));
}

Json to_json(const VertexPartition& p) {
    Json j;
    j["blocks"] = p.blocks;
    j["bounds"] = p.bounds;
    return j;
}

VertexPartition partition_from_json(const Json& j) {
    if (!j.contains("blocks") || !j["blocks"].is_array())
        fail("expected array field 'blocks'");
    if (!j.contains("bounds") || !j["bounds"].is_array())
        fail("expected array field 'bounds'");
    VertexPartition p;
    for (const Json& block : j["blocks"]) {
        std::vector<std::string> labels;
        for (const Json& v : block)
            labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        p.blocks.push_back(std::move(labels));
    }
    for (const Json& b : j["bounds"])
        p.bounds.push_back(b.get<int>());
    return p;
}

VertexPartition load_partition(const std::string& path) {
    return partition_from_json(load_json(path));
}

Json to_json(const std::vector<ProductOfLinearForms>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs)
        arr.push_back(to_string(f));
    return arr;
}

std::vector<ProductOfLinearForms> products_from_json(const Json& j, std::optional<int> vars) {
    const Json* list = &j;
    if (j.is_object()) {
        if (j.contains("vars"))
            vars = int_field(j, "vars");
        if (!j.contains("products") || !j["products"].is_array())
            fail("expected array field 'products'");
        list = &j["products"];
    } else if (!j.is_array()) {
        fail("expected a JSON list of products or {vars, products}");
    }
    std::vector<std::string> texts;
    for (const Json& f : *list) {
        if (!f.is_string())
            fail("each product must be a string of ';'-joined linear forms");
        texts.push_back(f.get<std::string>());
    }
    int n = vars.value_or(0);
    if (!vars) {
        // infer the ambient count from the largest index mentioned
        for (const std::string& t : texts) {
            for (size_t i = 0; i + 1 < t.size(); ++i) {
                if (t[i] != 'x' || !std::isdigit(static_cast<unsigned char>(t[i + 1])))
                    continue;
                size_t k = i + 1;
                while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k])))
                    ++k;
                n = std::max(n, std::stoi(t.substr(i + 1, k - i - 1)));
            }
        }
    }
    std::vector<ProductOfLinearForms> out;
    for (const std::string& t : texts)
        out.push_back(parse_product(t, n));
    return out;
}

std::vector<ProductOfLinearForms> load_products(const std::string& path, std::optional<int> vars) {
    return products_from_json(load_json(path), vars);
}

Json to_json(const WitnessResult& w) {
    Json j;
    j["witness"] = to_json(w.witness);
    j["caps"] = w.ring.caps;
    j["certified"] = w.certified;
    j["horizon"] = w.horizon;
    Json per = Json::array();
    for (const PerDegreeReport& r : w.per_degree) {
        Json row;
        row["d"] = r.d;
        row["target"] = to_json(r.target);
        row["segment"] = to_json(r.segment);
        per.push_back(std::move(row));
    }
    j["per_degree"] = std::move(per);
    return j;
}

Json to_json(const WitnessReport& r) {
    Json j;
    j["series_equal"] = r.series_equal;
    j["powers_contained"] = r.powers_contained;
    j["lex_plus_powers"] = r.lex_plus_powers;
    j["all_pass"] = r.all();
    return j;
}

Json to_json(const Polarization& p) {
    Json j;
    j["ideal"] = to_json(p.ideal);
    j["labels"] = p.labels();
    Json blocks = Json::array();
    for (const auto& block : p.block_labels)
        blocks.push_back(block);
    j["blocks"] = std::move(blocks);
    return j;
}

Json to_json(const TransferResult& t) {
    Json j;
    j["stanley_reisner"] = to_json(t.sr);
    j["height"] = t.t;
    j["flag"] = t.flag;
    if (t.suggested_caps)
        j["suggested_caps"] = *t.suggested_caps;
    else
        j["suggested_caps"] = nullptr;
    j["caps"] = t.caps;
    if (t.certificate)
        j["certificate"] = to_json(*t.certificate);
    else
        j["certificate"] = nullptr;
    j["h_input"] = to_json(t.h);
    j["artinian_witness"] = to_json(t.artinian);
    j["polarized"] = to_json(t.polarized);
    j["gamma"] = to_json(t.gamma);
    j["partition"] = to_json(t.partition);
    j["h_gamma"] = to_json(t.h_gamma);
    j["omitted_vertices"] = t.omitted;
    j["char"] = t.characteristic ? Json(*t.characteristic) : Json(nullptr);
    Json assertions;
    assertions["h_equal"] = t.h_equal;
    assertions["balanced"] = t.balanced;
    assertions["input_cm"] = t.input_cm ? Json(*t.input_cm) : Json(nullptr);
    assertions["gamma_cm"] = t.gamma_cm ? Json(*t.gamma_cm) : Json(nullptr);
    j["assertions"] = std::move(assertions);
    return j;
}

}  // namespace eghforge
