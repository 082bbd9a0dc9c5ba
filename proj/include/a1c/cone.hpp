#pragma once

// Rational polyhedral cones in Z^n given by generators, with a lazily
// computed inequality description.

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "a1c/intlattice.hpp"

namespace a1c {

/// Generators of {y : <a, y> >= 0 for every a in inequalities}, split into a
/// lineality basis (a saturated basis in Hermite form) and extreme rays
/// modulo lineality (primitive, lexicographic).
struct ConeGenerators {
  std::vector<Vec> lineality;
  std::vector<Vec> rays;
};

/// Double description method. Inequalities are inserted in lexicographic
/// order.
ConeGenerators double_description(std::vector<Vec> inequalities,
                                  std::size_t ambient_rank);

class Cone {
 public:
  Cone() : Cone(0, {}) {}
  /// Rays are made primitive, zero rays dropped, duplicates removed and the
  /// remainder sorted lexicographically.
  Cone(std::size_t ambient_rank, std::vector<Vec> rays);

  static Cone zero(std::size_t ambient_rank);
  static Cone orthant(std::size_t ambient_rank);
  /// Cone cut out by <a, x> >= 0 for every given a.
  static Cone from_inequalities(std::size_t ambient_rank,
                                std::vector<Vec> inequalities);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Vec>& rays() const { return rays_; }

  /// Irredundant inequalities <f, x> >= 0. When the cone is not
  /// full-dimensional they are representatives modulo equations().
  const std::vector<Vec>& facets() const;
  /// Basis of the orthogonal complement of the linear span: <e, x> = 0.
  const std::vector<Vec>& equations() const;

  bool contains(const Vec& v) const;
  std::size_t dimension() const;
  bool is_pointed() const;
  bool is_full_dimensional() const;

  /// Rays that span extreme faces; only meaningful for pointed cones.
  std::vector<Vec> extreme_rays() const;
  /// Saturated basis of the lineality space C intersect -C.
  std::vector<Vec> lineality_basis() const;
  /// A covector positive on every nonzero point of a pointed cone.
  Vec interior_grading() const;

  /// Same generator set.
  bool operator==(const Cone& other) const {
    return rank_ == other.rank_ && rays_ == other.rays_;
  }

 private:
  struct Description {
    std::once_flag once;
    std::vector<Vec> facets;
    std::vector<Vec> equations;
  };
  const Description& description() const;

  std::size_t rank_;
  std::vector<Vec> rays_;
  std::shared_ptr<Description> desc_;
};

/// {y : <y, r> >= 0 for all rays r}.
Cone dual(const Cone& c);
Cone negate(const Cone& c);
bool contains_cone(const Cone& outer, const Cone& inner);
/// Equality as sets of points.
bool same_set(const Cone& a, const Cone& b);

struct ShapeFlags {
  bool pointed = false;
  bool full_dimensional = false;
};
ShapeFlags shape_flags(const Cone& c);

/// Simplicial cones (each a list of linearly independent rays) covering a
/// pointed cone: the pulling triangulation over the canonical ray order.
std::vector<std::vector<Vec>> triangulate(const Cone& c);

/// Lattice points sum lambda_i r_i with lambda in [0,1)^k for linearly
/// independent rays r_i, relative to Z^n. Includes 0.
std::vector<Vec> fundamental_parallelepiped(const std::vector<Vec>& rays,
                                            std::size_t ambient_rank);

/// Minimal generating set of C intersect Z^n, lexicographic order.
std::vector<Vec> hilbert_basis(const Cone& c);

/// Generators of C intersect Z^n for any cone: the Hilbert basis of the
/// pointed quotient lifted back, plus plus/minus a lineality basis.
std::vector<Vec> lattice_generators(const Cone& c);

/// All v in C intersect Z^n with <height, v> <= bound, ordered by height
/// and then lexicographically.
std::vector<Vec> enumerate_bounded(const Cone& c, const Vec& height,
                                   const Integer& bound);

}  // namespace a1c
