#include "a1c/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace a1c::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_from(const Json& j, const char* what) {
  Integer x = integer_from(j);
  if (x < 0) throw Error(std::string(what) + " must be nonnegative");
  if (x > 1000000) throw Error(std::string(what) + " is unreasonably large");
  return static_cast<std::size_t>(x);
}

bool bool_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw Error(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::vector<Vec> vecs_from(const Json& j, std::size_t length) {
  if (!j.is_array()) throw Error("expected a list of integer vectors");
  std::vector<Vec> out;
  for (const Json& v : j) out.push_back(vec_from(v, length));
  return out;
}

}  // namespace

Json to_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
  return x.str();
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(to_json(v));
  return a;
}

Json to_json(const IntMatrix& m) { return to_json(m.row_vectors()); }

Json to_json(const FsMonoid& m) {
  Json j;
  j["rank"] = m.ambient_rank();
  j["generators"] = to_json(m.generators());
  return j;
}

Json to_json(const Cone& c) {
  Json j;
  j["rank"] = c.ambient_rank();
  j["rays"] = to_json(c.rays());
  return j;
}

Json to_json(const DFChart& c) {
  Json j;
  j["monoid"] = to_json(c.monoid());
  j["pic_rank"] = c.pic_rank();
  j["L"] = to_json(c.L());
  return j;
}

Json to_json(const CombData& c) {
  Json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["genus"] = c.genus;
  j["teeth"] = to_json(c.teeth);
  j["handle_normal_degrees"] = to_json(c.handle_normal_degrees);
  if (c.c_infty) j["c_infty"] = to_json(*c.c_infty);
  return j;
}

Json to_json(const SphericalData& d) {
  Json j;
  j["lambda_rank"] = d.lambda_rank;
  j["valuation_cone"] = to_json(d.valuation_cone);
  Json colors = Json::array();
  for (const Color& c : d.colors) {
    Json e;
    e["name"] = c.name;
    e["valuation"] = to_json(c.valuation);
    e["type"] = to_string(c.type);
    colors.push_back(e);
  }
  j["colors"] = colors;
  if (d.boundary_valuations) j["boundary_valuations"] = to_json(*d.boundary_valuations);
  if (d.intersection_matrix) j["intersection_matrix"] = to_json(*d.intersection_matrix);
  j["intersection_is_kronecker"] = d.intersection_is_kronecker;
  j["hyp_knop_asserted"] = d.hyp_knop_asserted;
  if (!d.coordinate_basis.empty()) j["coordinate_basis"] = d.coordinate_basis;
  return j;
}

Json to_json(const MonoidDiagram& d) {
  Json j;
  j["objects"] = Json::array();
  for (const FsMonoid& m : d.objects()) j["objects"].push_back(to_json(m));
  j["arrows"] = Json::array();
  for (const DiagramArrow& a : d.arrows()) {
    Json e;
    e["source"] = a.source;
    e["target"] = a.target;
    e["matrix"] = to_json(a.morphism.matrix());
    j["arrows"].push_back(e);
  }
  return j;
}

Json to_json(const CokernelStructure& c) {
  Json j;
  j["free_rank"] = c.free_rank;
  j["torsion"] = to_json(c.torsion_factors);
  return j;
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw Error("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw Error("expected an integer, got " + j.dump());
}

Vec vec_from(const Json& j, std::optional<std::size_t> length) {
  if (!j.is_array()) throw Error("expected an integer vector, got " + j.dump());
  Vec v;
  for (const Json& x : j) v.push_back(integer_from(x));
  if (length && v.size() != *length)
    throw Error("vector " + j.dump() + " should have length " + std::to_string(*length));
  return v;
}

IntMatrix matrix_from(const Json& j, std::optional<std::size_t> rows,
                      std::optional<std::size_t> cols) {
  if (!j.is_array()) throw Error("expected a matrix as a list of rows");
  std::size_t r = j.size();
  if (rows && r != *rows)
    throw Error("matrix should have " + std::to_string(*rows) + " rows");
  std::size_t c = cols ? *cols : (r ? j[0].size() : 0);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    Vec row = vec_from(j[i], c);
    for (std::size_t k = 0; k < c; ++k) m(i, k) = row[k];
  }
  return m;
}

FsMonoid monoid_from(const Json& j) {
  std::size_t n = count_from(field(j, "rank"), "rank");
  return FsMonoid(n, vecs_from(field(j, "generators"), n));
}

Cone cone_from(const Json& j) {
  std::size_t n = count_from(field(j, "rank"), "rank");
  bool has_rays = j.contains("rays"), has_ineq = j.contains("inequalities");
  if (has_rays == has_ineq) throw Error("cone needs exactly one of \"rays\" or \"inequalities\"");
  if (has_rays) return Cone(n, vecs_from(j["rays"], n));
  return Cone::from_inequalities(n, vecs_from(j["inequalities"], n));
}

DFChart chart_from(const Json& j) {
  FsMonoid P = monoid_from(field(j, "monoid"));
  std::size_t pic = count_from(field(j, "pic_rank"), "pic_rank");
  return DFChart(P, pic, matrix_from(field(j, "L"), pic, P.ambient_rank()));
}

CombData comb_from(const Json& j) {
  CombData c;
  c.n = count_from(field(j, "n"), "n");
  c.m = count_from(field(j, "m"), "m");
  Integer g = integer_from(field(j, "genus"));
  if (g < 0 || g > 1000000) throw Error("comb genus out of range");
  c.genus = static_cast<std::int64_t>(g);
  c.teeth = vecs_from(field(j, "teeth"), c.n);
  c.handle_normal_degrees = vec_from(field(j, "handle_normal_degrees"), c.n);
  if (j.contains("c_infty")) c.c_infty = vec_from(j["c_infty"], c.n);
  validate(c);
  return c;
}

SphericalData spherical_from(const Json& j) {
  SphericalData d;
  d.lambda_rank = count_from(field(j, "lambda_rank"), "lambda_rank");
  d.valuation_cone = cone_from(field(j, "valuation_cone"));
  const Json& colors = field(j, "colors");
  if (!colors.is_array()) throw Error("\"colors\" must be a list");
  for (const Json& c : colors) {
    const Json& name = field(c, "name");
    const Json& type = field(c, "type");
    if (!name.is_string() || !type.is_string())
      throw Error("color name and type must be strings");
    d.colors.push_back({name.get<std::string>(), vec_from(field(c, "valuation"), d.lambda_rank),
                        parse_color_type(type.get<std::string>())});
  }
  if (j.contains("boundary_valuations"))
    d.boundary_valuations = matrix_from(j["boundary_valuations"], std::nullopt, d.lambda_rank);
  if (j.contains("intersection_matrix"))
    d.intersection_matrix =
        matrix_from(j["intersection_matrix"], d.colors.size(), d.colors.size());
  d.intersection_is_kronecker = bool_from(j, "intersection_is_kronecker");
  d.hyp_knop_asserted = bool_from(j, "hyp_knop_asserted");
  if (j.contains("coordinate_basis")) {
    if (!j["coordinate_basis"].is_string()) throw Error("coordinate_basis must be a string");
    d.coordinate_basis = j["coordinate_basis"].get<std::string>();
  }
  validate(d);
  return d;
}

MonoidDiagram diagram_from(const Json& j) {
  const Json& objects = field(j, "objects");
  if (!objects.is_array()) throw Error("\"objects\" must be a list");
  MonoidDiagram d;
  for (const Json& o : objects) d.add_object(monoid_from(o));
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw Error("\"arrows\" must be a list");
    for (const Json& a : j["arrows"]) {
      std::size_t s = count_from(field(a, "source"), "source");
      std::size_t t = count_from(field(a, "target"), "target");
      if (s >= d.objects().size() || t >= d.objects().size())
        throw Error("diagram arrow endpoint out of range");
      d.add_arrow(s, t,
                  matrix_from(field(a, "matrix"), d.objects()[t].ambient_rank(),
                              d.objects()[s].ambient_rank()));
    }
  }
  return d;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace a1c::json
