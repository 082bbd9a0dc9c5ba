#pragma once

// Fine monoids embedded in Z^n, their morphisms, and finite colimits in the
// category of fine saturated sharp monoids.

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "a1c/cone.hpp"
#include "a1c/intlattice.hpp"

namespace a1c {

/// A finitely generated submonoid of Z^n. Generators are kept nonzero,
/// deduplicated and in lexicographic order. Saturation is relative to the
/// ambient lattice.
class FsMonoid {
 public:
  FsMonoid() : FsMonoid(0, {}) {}
  FsMonoid(std::size_t ambient_rank, std::vector<Vec> generators);

  /// N^n with the standard basis.
  static FsMonoid free(std::size_t rank);
  static FsMonoid trivial(std::size_t ambient_rank = 0);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const Cone& cone() const { return cone_; }

  bool is_fine() const { return true; }
  bool is_sharp() const;
  bool is_saturated() const;

  /// Exact membership. Non-saturated monoids with units are rejected.
  bool contains(const Vec& v) const;

  bool operator==(const FsMonoid& other) const {
    return rank_ == other.rank_ && gens_ == other.gens_;
  }

 private:
  struct Flags {
    std::once_flag once;
    bool sharp = false;
    bool saturated = false;
  };
  const Flags& flags() const;
  bool generated_contains(const Vec& v) const;

  std::size_t rank_;
  std::vector<Vec> gens_;
  Cone cone_;
  std::shared_ptr<Flags> flags_;
};

/// Same ambient rank and same saturation (compared by lattice generators).
bool same_saturation(const FsMonoid& a, const FsMonoid& b);

class MonoidMorphism {
 public:
  /// Validates dimensions and that every source generator lands in target.
  MonoidMorphism(FsMonoid source, FsMonoid target, IntMatrix matrix);

  const FsMonoid& source() const { return source_; }
  const FsMonoid& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  Vec operator()(const Vec& v) const { return matrix_.apply(v); }

 private:
  FsMonoid source_;
  FsMonoid target_;
  IntMatrix matrix_;
};

struct DiagramArrow {
  std::size_t source;
  std::size_t target;
  MonoidMorphism morphism;
};

class MonoidDiagram {
 public:
  MonoidDiagram() = default;
  explicit MonoidDiagram(std::vector<FsMonoid> objects)
      : objects_(std::move(objects)) {}

  std::size_t add_object(FsMonoid m);
  void add_arrow(std::size_t source, std::size_t target, IntMatrix matrix);

  const std::vector<FsMonoid>& objects() const { return objects_; }
  const std::vector<DiagramArrow>& arrows() const { return arrows_; }

 private:
  std::vector<FsMonoid> objects_;
  std::vector<DiagramArrow> arrows_;
};

/// Hilbert-basis presentation of cone(M) cap Z^n. Requires M sharp.
FsMonoid saturate(const FsMonoid& m);

struct SharpenResult {
  FsMonoid sharp;
  std::size_t unit_rank = 0;
  /// Surjection Z^n -> Z^(n - unit_rank) killing the units.
  IntMatrix projection;
};

/// Quotient by the saturated unit lattice (lineality of the cone).
SharpenResult sharpen(const FsMonoid& m);

/// Lattice generators of dual(cone(M)) in the dual lattice.
FsMonoid dual_monoid(const FsMonoid& m);

struct ColimitResult {
  FsMonoid colimit;
  /// One structure map per diagram object, in object order.
  std::vector<MonoidMorphism> structure_maps;
  /// Torsion of the group colimit, discarded by the saturate-and-sharpen step.
  std::vector<Integer> group_torsion;
  /// Rank of units killed when sharpening the generated monoid.
  std::size_t unit_rank = 0;
};

/// Group colimit (cokernel of the relation matrix), image monoid, sharpen,
/// saturate. The colimit lattice basis is the Hermite form of the relation
/// left kernel taken with later objects' coordinates first.
ColimitResult fs_colimit(const MonoidDiagram& d);

/// True iff no nonzero element of cone(source) maps to 0.
bool zero_preimage_trivial(const MonoidMorphism& f);

}  // namespace a1c
