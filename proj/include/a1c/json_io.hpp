#pragma once

// JSON encodings of the library's values. Integers are written as numbers
// when they fit in 64 bits and as decimal strings otherwise; both forms are
// accepted on input.

#include <optional>
#include <string>

#include "json.hpp"

#include "a1c/comb.hpp"
#include "a1c/cone.hpp"
#include "a1c/dfchart.hpp"
#include "a1c/fsmonoid.hpp"
#include "a1c/intlattice.hpp"
#include "a1c/wonderful.hpp"

namespace a1c::json {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Vec& v);
Json to_json(const std::vector<Vec>& vs);
/// List of rows.
Json to_json(const IntMatrix& m);
Json to_json(const FsMonoid& m);
/// {"rank": n, "rays": [...]}
Json to_json(const Cone& c);
Json to_json(const DFChart& c);
Json to_json(const CombData& c);
Json to_json(const SphericalData& d);
Json to_json(const MonoidDiagram& d);
Json to_json(const CokernelStructure& c);

Integer integer_from(const Json& j);
Vec vec_from(const Json& j, std::optional<std::size_t> length = std::nullopt);
/// Shape hints resolve empty row lists and empty rows.
IntMatrix matrix_from(const Json& j, std::optional<std::size_t> rows = std::nullopt,
                      std::optional<std::size_t> cols = std::nullopt);
FsMonoid monoid_from(const Json& j);
/// Accepts "rays" or "inequalities".
Cone cone_from(const Json& j);
DFChart chart_from(const Json& j);
CombData comb_from(const Json& j);
SphericalData spherical_from(const Json& j);
MonoidDiagram diagram_from(const Json& j);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace a1c::json
