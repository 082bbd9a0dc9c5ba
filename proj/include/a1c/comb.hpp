#pragma once

// Combs: a handle C0 through a center with n boundary divisors and m rational
// teeth attached at nodes. Builds the edge system, its minimal monoid, and the
// degree bookkeeping for lifting and smoothing.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "a1c/fsmonoid.hpp"
#include "a1c/intlattice.hpp"

namespace a1c {

struct CombData {
  std::size_t n = 1;
  std::size_t m = 0;
  std::int64_t genus = 0;
  /// teeth[i][j]: contact of tooth i with divisor j.
  std::vector<Vec> teeth;
  /// Degree of the normal bundle of D_j restricted to the handle.
  Vec handle_normal_degrees;
  /// Optional contact vector at the handle marking; must agree with the
  /// degree identity when given.
  std::optional<Vec> c_infty;
};

/// Throws on malformed data, including "tooth with trivial contact".
void validate(const CombData& comb);

/// Objects N^n, then N^(n+1) per tooth; arrow i is [I; c_i^T].
MonoidDiagram build_system(const CombData& comb);

struct MinimalMonoidResult {
  FsMonoid monoid;
  std::vector<MonoidMorphism> chi_maps;    // P_i -> M
  std::vector<MonoidMorphism> theta_maps;  // N_i -> M
  bool admissible = false;
  std::vector<Integer> group_torsion;
};

MinimalMonoidResult minimal_monoid(const CombData& comb);

enum class LiftVerdict { lifts, degree_consistent_only, fails };
std::string to_string(LiftVerdict v);

struct LiftResult {
  Vec c_infty;
  LiftVerdict verdict = LiftVerdict::fails;
  /// Lifts with exactly one marking of nontrivial contact.
  bool a1_curve = false;
};

/// c_inf = d + sum_i c_i. Only genus 0 is decided; higher genus reports the
/// necessary degree condition.
LiftResult lift_contact_vector(const CombData& comb);

struct FreenessReport {
  bool fully_free = false;
  bool primitive = false;
  std::optional<Integer> index;
};

/// Span predicates of contact orders in the dual of P^gp.
FreenessReport center_freeness(const std::vector<Vec>& contact_orders, const FsMonoid& P);

struct SmoothingProfile {
  std::size_t rank = 0;
  Integer transform_degree;
  bool spanning = false;
};

/// Rank and degree of the elementary transform along the teeth, plus
/// whether the teeth rationally span. Necessary data only.
SmoothingProfile smoothing_profile(const CombData& comb);

}  // namespace a1c
