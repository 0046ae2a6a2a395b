#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "eghforge/simplicial.hpp"

namespace eghforge {

inline constexpr const char* kToolName = "eghforge";
inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

Json to_json(const Int& v);  // decimal string
Int int_from_json(const Json& j);
Json to_json(const std::vector<Int>& v);
std::vector<Int> ints_from_json(const Json& j);

Json to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const Json& j);

// JSON object {"vars": n, "gens": [...]} or the plain-text sugar form
// (`vars: n` header, one monomial per line, input only).
MonomialIdeal load_ideal(const std::string& path);

Json to_json(const HilbertSeries& s);
Json to_json(const QPolynomial& q);

Json to_json(const CapVector& ring);
CapVector cap_vector_from_json(const Json& j);

Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex load_complex(const std::string& path);

Json to_json(const VertexPartition& p);
VertexPartition partition_from_json(const Json& j);
VertexPartition load_partition(const std::string& path);

Json to_json(const std::vector<ProductOfLinearForms>& fs);
// A JSON list of `;`-joined factor strings, or {"vars": n, "products": [...]}.
// Without an explicit or given `vars`, the ambient count is the largest
// variable index mentioned.
std::vector<ProductOfLinearForms> products_from_json(const Json& j, std::optional<int> vars);
std::vector<ProductOfLinearForms> load_products(const std::string& path, std::optional<int> vars);

Json to_json(const WitnessResult& w);
Json to_json(const WitnessReport& r);
Json to_json(const Polarization& p);
Json to_json(const TransferResult& t);

Json load_json(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace eghforge
