#pragma once

// Root systems and the colored-cone combinatorics of wonderful
// compactifications: distinguished chart, hypotheses, curve classes and
// isogeny invariants.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "a1c/cone.hpp"
#include "a1c/dfchart.hpp"
#include "a1c/intlattice.hpp"

namespace a1c {

/// Cartan entries c_ij = <alpha_i, alpha_j^v>, Bourbaki numbering.
struct RootSystem {
  std::string type_label;  // normalized, e.g. "A2", "E8"
  IntMatrix cartan;
  std::size_t rank = 0;
};

/// Accepts "A2" or "A_2". Supported: A_n (n>=1), B_n (n>=2), C_n (n>=3),
/// D_n (n>=4), E6, E7, E8, F4, G2.
RootSystem build_root_system(const std::string& type_label);

/// Throws unless the matrix satisfies the Cartan axioms, has a connected
/// tree as Dynkin graph, positive leading minors and the determinant of the
/// named type.
void validate_cartan(const RootSystem& rs);

/// Every supported type of rank <= max_rank, in a fixed order.
std::vector<std::string> simple_types_up_to_rank(std::size_t max_rank);

enum class ColorType { a, a_prime, b };
std::string to_string(ColorType t);
ColorType parse_color_type(const std::string& s);

struct Color {
  std::string name;
  Vec valuation;
  ColorType type = ColorType::b;
};

enum class Isogeny { simply_connected, adjoint };

struct SphericalData {
  std::size_t lambda_rank = 0;
  Cone valuation_cone;
  std::vector<Color> colors;
  std::optional<IntMatrix> boundary_valuations;
  /// Optional B_i . D_j table backing the Kronecker assertion.
  std::optional<IntMatrix> intersection_matrix;
  bool intersection_is_kronecker = false;
  bool hyp_knop_asserted = false;
  /// Names the basis of N the coordinates are written in.
  std::string coordinate_basis;
};

/// Throws on malformed data: V not pointed or not full-dimensional, no
/// colors, wrong vector lengths, or an intersection table contradicting the
/// Kronecker flag.
void validate(const SphericalData& data);

/// Simply connected: coroot basis of N, rho(D_i) = e_i. Adjoint: coweight
/// basis, rho(D_i) = column i of the Cartan matrix. V is the negative Weyl
/// chamber in either basis.
SphericalData group_wonderful_data(const RootSystem& rs, Isogeny isogeny);

/// Columns are the color valuations.
IntMatrix valuation_matrix(const SphericalData& data);

/// P = cone(V)^dual cap Lambda, L = -rho^T.
DFChart distinguished_chart(const SphericalData& data);

struct HypothesisReport {
  bool knop = false;
  bool cone = false;
  bool all_colors_type_b = false;
};

HypothesisReport check_hypotheses(const SphericalData& data);

struct ClassifiedClass {
  CurveClass curve_class;
  Vec contact;
  bool is_A1_class = false;
};

/// Classes a in N^colors with sum a_i <= bound and -rho(a) in V.
std::vector<ClassifiedClass> classify_curve_classes(const SphericalData& data,
                                                    const Integer& bound);

/// Compares the classification on simply connected data with a direct
/// enumeration of dominant coroot-lattice points.
bool verify_theorem_G(const RootSystem& rs, const Integer& bound);

struct IsogenyInvariants {
  Integer pi1_order;
  bool primitive = false;
  CokernelStructure character_group;
};

IsogenyInvariants isogeny_invariants(const SphericalData& data, const DFChart& chart);

}  // namespace a1c
