#pragma once

// Global monoid charts P -> Pic presented by a matrix, contact orders of
// numerical curve classes and the admissibility condition co(F) in P^dual.

#include <cstddef>
#include <vector>

#include "a1c/cone.hpp"
#include "a1c/fsmonoid.hpp"
#include "a1c/intlattice.hpp"

namespace a1c {

/// Coefficients of a curve class against a fixed basis of numerical classes;
/// it pairs with Pic by the dot product.
using CurveClass = Vec;

class DFChart {
 public:
  /// P must be sharp and saturated; L is pic_rank x P.ambient_rank.
  DFChart(FsMonoid P, std::size_t pic_rank, IntMatrix L);

  const FsMonoid& monoid() const { return P_; }
  std::size_t pic_rank() const { return pic_rank_; }
  const IntMatrix& L() const { return L_; }
  /// cone(P)^dual, where admissible contact orders live.
  const Cone& dual_cone() const { return dual_; }

  bool operator==(const DFChart& o) const {
    return P_ == o.P_ && pic_rank_ == o.pic_rank_ && L_ == o.L_;
  }

 private:
  FsMonoid P_;
  std::size_t pic_rank_;
  IntMatrix L_;
  Cone dual_;
};

/// L^T F: the covector delta -> <L(delta), F>.
Vec contact_order(const DFChart& chart, const CurveClass& F);
bool is_admissible(const DFChart& chart, const CurveClass& F);

struct AdmissibleClass {
  CurveClass curve_class;
  Vec contact;
};

/// Admissible classes F in effective_cone with <height, F> <= bound, in the
/// order of enumerate_bounded.
std::vector<AdmissibleClass> enumerate_admissible(const DFChart& chart,
                                                  const Cone& effective_cone,
                                                  const Vec& height,
                                                  const Integer& bound);

}  // namespace a1c
