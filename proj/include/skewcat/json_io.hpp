#pragma once

#include "skewcat/equivmod.hpp"
#include "skewcat/orbit.hpp"

#include <json.hpp>

namespace skewcat {

using Json = nlohmann::ordered_json;

/* JSON schemas (all files carry "schema": 1 and a "kind"):
 *   complex     field, dims {degree: dim}, differential {degree: [[entries]]}
 *   dgcat       field, objects, homs {"X|Y": {degree: [names]}},
 *               differentials / compositions as sparse coefficient records,
 *               units {"X": {name: coeff}}
 *   action      monoid, category (a dgcat), functors {g: {objects, homs}}
 *   module      dim, action {basis name: matrix}, optional algebra (a dgcat)
 *   equivariant module, u {g: matrix}, optional action
 * Scalars are strings: "a/b" or "a" over Q, the decimal representative over F_p. */

Json load_json_file(const std::string& path);       // throws ParseError
void write_json_file(const std::string& path, const Json& j);
std::string json_kind(const Json& j);               // validates "schema": 1

Json to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, std::size_t rows, std::size_t cols, const Json& j);

Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

Json dgcat_to_json(const DgCategory& c);
DgCategory dgcat_from_json(const Json& j);

Json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const Json& j);

Json functor_to_json(const DgFunctor& f, const DgCategory& src, const DgCategory& dst);
DgFunctor functor_from_json(const Json& j, const DgCategory& src, const DgCategory& dst);

Json action_to_json(const StrictAction& rho);
StrictAction action_from_json(const Json& j);

Json module_to_json(const RightModule& m, bool include_algebra = true);
RightModule module_from_json(const Json& j, const std::optional<Algebra>& context = std::nullopt);

Json equivariant_to_json(const EquivariantModule& e, const FiniteMonoid& mon,
                         bool include_algebra = true, const StrictAction* embed_action = nullptr);
EquivariantModule equivariant_from_json(const Json& j, const StrictAction& rho);
// the action embedded in an equivariant file, when present
std::optional<StrictAction> embedded_action(const Json& j);

Json graded_dims_to_json(const GradedDims& d);

}  // namespace skewcat
