#include "a1c/wonderful.hpp"

#include <algorithm>
#include <functional>
#include <regex>

namespace a1c {

namespace {

using Gram = std::vector<std::vector<long long>>;

void link(Gram& g, std::size_t i, std::size_t j, long long v) {
  g[i - 1][j - 1] = v;
  g[j - 1][i - 1] = v;
}

Gram chain(std::size_t n) {
  Gram g(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
  for (std::size_t i = 1; i < n; ++i) link(g, i, i + 1, -1);
  return g;
}

// Gram matrix of the simple roots, short roots of squared length 2 except
// in B_n where the single short root has length 1.
Gram gram_matrix(char letter, std::size_t n) {
  switch (letter) {
    case 'A':
      return chain(n);
    case 'B': {
      Gram g = chain(n);
      g[n - 1][n - 1] = 1;
      return g;
    }
    case 'C': {
      Gram g = chain(n);
      g[n - 1][n - 1] = 4;
      link(g, n - 1, n, -2);
      return g;
    }
    case 'D': {
      Gram g = chain(n);
      link(g, n - 1, n, 0);
      link(g, n - 2, n, -1);
      return g;
    }
    case 'E': {
      Gram g(n, std::vector<long long>(n, 0));
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      link(g, 1, 3, -1);
      link(g, 2, 4, -1);
      for (std::size_t i = 3; i < n; ++i) link(g, i, i + 1, -1);
      return g;
    }
    case 'F': {
      Gram g = chain(4);
      g[0][0] = g[1][1] = 4;
      link(g, 1, 2, -2);
      link(g, 2, 3, -2);
      return g;
    }
    case 'G':
      return {{2, -3}, {-3, 6}};
  }
  throw Error("unknown root system type");
}

bool supported(char letter, std::size_t n) {
  switch (letter) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
  }
  return false;
}

Integer expected_determinant(char letter, std::size_t n) {
  switch (letter) {
    case 'A': return Integer(n + 1);
    case 'B':
    case 'C': return 2;
    case 'D': return 4;
    case 'E': return Integer(9 - n);
    default: return 1;
  }
}

IntMatrix leading_minor(const IntMatrix& m, std::size_t k) {
  IntMatrix r(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r(i, j) = m(i, j);
  return r;
}

Vec ones(std::size_t n) { return Vec(n, Integer(1)); }

}  // namespace

RootSystem build_root_system(const std::string& type_label) {
  static const std::regex pattern("^([A-G])_?([0-9]{1,2})$");
  std::smatch mt;
  if (!std::regex_match(type_label, mt, pattern))
    throw Error("unknown root system type: " + type_label);
  char letter = mt[1].str()[0];
  std::size_t n = std::stoul(mt[2].str());
  if (!supported(letter, n)) throw Error("unknown root system type: " + type_label);

  Gram g = gram_matrix(letter, n);
  RootSystem rs;
  rs.type_label = std::string(1, letter) + std::to_string(n);
  rs.rank = n;
  rs.cartan = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan(i, j) = 2 * g[i][j] / g[j][j];
  validate_cartan(rs);
  return rs;
}

void validate_cartan(const RootSystem& rs) {
  const IntMatrix& c = rs.cartan;
  const std::size_t n = rs.rank;
  auto fail = [&](const std::string& why) {
    throw Error("invalid Cartan matrix for " + rs.type_label + ": " + why);
  };
  if (c.rows() != n || c.cols() != n) fail("wrong shape");
  std::size_t edges = 0;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (c(i, i) != 2) fail("diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) fail("positive off-diagonal entry");
      if ((c(i, j) == 0) != (c(j, i) == 0)) fail("zero pattern is not symmetric");
      Integer bond = c(i, j) * c(j, i);
      if (bond > 3) fail("bond of multiplicity above 3");
      if (i < j && bond != 0) {
        ++edges;
        parent[find(i)] = find(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (find(i) != find(0)) fail("Dynkin graph is disconnected");
  if (edges + 1 != n) fail("Dynkin graph is not a tree");
  for (std::size_t k = 1; k <= n; ++k)
    if (determinant(leading_minor(c, k)) <= 0) fail("not positive definite");
  if (rs.type_label.empty() ||
      determinant(c) != expected_determinant(rs.type_label[0], n))
    fail("determinant does not match the type");
}

std::vector<std::string> simple_types_up_to_rank(std::size_t max_rank) {
  std::vector<std::string> out;
  for (char letter : std::string("ABCDEFG"))
    for (std::size_t n = 1; n <= max_rank; ++n)
      if (supported(letter, n)) out.push_back(std::string(1, letter) + std::to_string(n));
  return out;
}

std::string to_string(ColorType t) {
  switch (t) {
    case ColorType::a: return "a";
    case ColorType::a_prime: return "a'";
    case ColorType::b: return "b";
  }
  return "b";
}

ColorType parse_color_type(const std::string& s) {
  if (s == "a") return ColorType::a;
  if (s == "a'") return ColorType::a_prime;
  if (s == "b") return ColorType::b;
  throw Error("unknown color type: " + s);
}

void validate(const SphericalData& data) {
  const std::size_t r = data.lambda_rank;
  if (r == 0) throw Error("spherical data of rank 0");
  if (data.valuation_cone.ambient_rank() != r)
    throw Error("valuation cone lives in the wrong lattice");
  if (!data.valuation_cone.is_pointed() || !data.valuation_cone.is_full_dimensional())
    throw Error("valuation cone must be pointed and full-dimensional");
  if (data.colors.empty()) throw Error("spherical data without colors");
  for (const Color& col : data.colors)
    if (col.valuation.size() != r)
      throw Error("color " + col.name + " has a valuation of wrong length");
  if (data.boundary_valuations && data.boundary_valuations->cols() != r)
    throw Error("boundary valuations must have lambda_rank columns");
  if (data.intersection_matrix) {
    const std::size_t s = data.colors.size();
    const IntMatrix& im = *data.intersection_matrix;
    if (im.rows() != s || im.cols() != s)
      throw Error("intersection matrix must be square of size #colors");
    if ((im == IntMatrix::identity(s)) != data.intersection_is_kronecker)
      throw Error("intersection matrix contradicts intersection_is_kronecker");
  }
}

SphericalData group_wonderful_data(const RootSystem& rs, Isogeny isogeny) {
  const std::size_t n = rs.rank;
  SphericalData d;
  d.lambda_rank = n;
  std::vector<Vec> ineq;
  if (isogeny == Isogeny::simply_connected) {
    // V = {x : <alpha_j, x> <= 0}; in coroot coordinates <alpha_j, x> = (C x)_j.
    d.coordinate_basis = "coroot";
    for (std::size_t j = 0; j < n; ++j) ineq.push_back(negate(rs.cartan.row(j)));
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      d.colors.push_back({"D" + std::to_string(i + 1), e, ColorType::b});
    }
  } else {
    d.coordinate_basis = "coweight";
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n);
      e[j] = -1;
      ineq.push_back(e);
    }
    for (std::size_t i = 0; i < n; ++i)
      d.colors.push_back({"D" + std::to_string(i + 1), rs.cartan.column(i), ColorType::b});
  }
  d.valuation_cone = Cone::from_inequalities(n, ineq);
  d.intersection_is_kronecker = true;
  d.hyp_knop_asserted = true;
  return d;
}

IntMatrix valuation_matrix(const SphericalData& data) {
  std::vector<Vec> cols;
  for (const Color& c : data.colors) cols.push_back(c.valuation);
  return IntMatrix::from_columns(cols, data.lambda_rank);
}

DFChart distinguished_chart(const SphericalData& data) {
  validate(data);
  FsMonoid P(data.lambda_rank, hilbert_basis(dual(data.valuation_cone)));
  return DFChart(P, data.colors.size(), -valuation_matrix(data).transpose());
}

HypothesisReport check_hypotheses(const SphericalData& data) {
  validate(data);
  HypothesisReport h;
  h.knop = data.intersection_is_kronecker && data.hyp_knop_asserted;
  std::vector<Vec> rho;
  for (const Color& c : data.colors) rho.push_back(c.valuation);
  h.cone = contains_cone(Cone(data.lambda_rank, rho), negate(data.valuation_cone));
  h.all_colors_type_b = std::all_of(data.colors.begin(), data.colors.end(),
                                    [](const Color& c) { return c.type == ColorType::b; });
  return h;
}

std::vector<ClassifiedClass> classify_curve_classes(const SphericalData& data,
                                                    const Integer& bound) {
  HypothesisReport h = check_hypotheses(data);
  if (!h.knop || !h.cone) throw Error("classification formula not available");
  if (!h.all_colors_type_b)
    throw Error("classification formula not available: colors not all of type b");
  const std::size_t s = data.colors.size();
  DFChart chart = distinguished_chart(data);
  std::vector<ClassifiedClass> out;
  for (AdmissibleClass& a : enumerate_admissible(chart, Cone::orthant(s), ones(s), bound)) {
    bool a1 = !is_zero(a.contact);
    out.push_back({std::move(a.curve_class), std::move(a.contact), a1});
  }
  return out;
}

bool verify_theorem_G(const RootSystem& rs, const Integer& bound) {
  SphericalData data = group_wonderful_data(rs, Isogeny::simply_connected);
  IntMatrix rho = valuation_matrix(data);
  std::vector<Vec> classified;
  for (const ClassifiedClass& c : classify_curve_classes(data, bound))
    classified.push_back(rho.apply(c.curve_class));

  // Dominant points sum a_i alpha_i^v: <alpha_j, .> = (C a)_j >= 0.
  Cone dominant = Cone::from_inequalities(rs.rank, rs.cartan.row_vectors());
  std::vector<Vec> direct = enumerate_bounded(dominant, ones(rs.rank), bound);
  std::sort(classified.begin(), classified.end());
  std::sort(direct.begin(), direct.end());
  return classified == direct;
}

IsogenyInvariants isogeny_invariants(const SphericalData& data, const DFChart& chart) {
  validate(data);
  std::vector<Vec> rho;
  for (const Color& c : data.colors) rho.push_back(c.valuation);
  SpanReport span = span_report(rho, data.lambda_rank);
  if (!span.spans_rationally) throw Error("valuation cone hypothesis violated");
  IsogenyInvariants out;
  out.pi1_order = *span.index;
  out.character_group = cokernel_structure(chart.L());
  out.primitive = out.character_group.torsion_free();
  return out;
}

}  // namespace a1c
