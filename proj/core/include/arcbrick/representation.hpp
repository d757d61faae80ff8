#pragma once

// Representations of the doubled type-A quiver over Q, i.e. modules over the
// preprojective algebra once the vertex relations hold.
//
// The relation at v_i is a_{i-1} a_{i-1}^- - a_i^- a_i, read as the 2-cycle
// through v_{i-1} minus the 2-cycle through v_{i+1}, with the out-of-range
// terms treated as zero.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcbrick/arc.hpp"
#include "arcbrick/linalg.hpp"
#include "arcbrick/quiver.hpp"

namespace arcbrick {

class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  /// 1-based.
  int at(int vertex) const { return entries_.at(static_cast<std::size_t>(vertex - 1)); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int total() const noexcept;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> entries_;
};

DimVector operator+(const DimVector& x, const DimVector& y);

/// (x,y) = sum 2 x_i y_i - sum over arrows i->j (both directions) x_i y_j.
int bilinear(const DimVector& x, const DimVector& y);
/// q(x) = x_1^2 + sum (x_i - x_{i+1})^2 + x_n^2.
int quad(const DimVector& x);

class Representation {
 public:
  /// Zero maps of the right shapes.
  Representation(int n, DimVector dims);

  static Representation zero(int n) {
    return Representation(n, DimVector(std::vector<int>(static_cast<std::size_t>(n), 0)));
  }
  /// Simple module at vertex v.
  static Representation simple(int n, int vertex);

  int rank() const noexcept { return n_; }
  const DimVector& dims() const noexcept { return dims_; }
  int dim(int vertex) const { return dims_.at(vertex); }

  const Matrix& map(const Arrow& a) const;
  /// Throws PreconditionError on a shape mismatch or an arrow outside Q.
  void set_map(const Arrow& a, Matrix m);

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::size_t slot(const Arrow& a) const;

  int n_;
  DimVector dims_;
  std::vector<Matrix> forward_;   // a_i, i = 1..n-1
  std::vector<Matrix> backward_;  // a_i^-, i = 1..n-1
};

/// The relation at v_i as a dim_i x dim_i matrix.
Matrix relation_at(const Representation& m, int vertex);
bool check_relations(const Representation& m);

/// A family of vertex maps phi_i : M_i -> N_i commuting with every arrow.
class Morphism {
 public:
  /// Throws PreconditionError on shape mismatch or failure to commute.
  Morphism(Representation source, Representation target, std::vector<Matrix> components);

  static Morphism identity(const Representation& m);
  static Morphism zero(const Representation& source, const Representation& target);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  /// 1-based vertex.
  const Matrix& component(int vertex) const {
    return components_.at(static_cast<std::size_t>(vertex - 1));
  }
  const std::vector<Matrix>& components() const noexcept { return components_; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;

 private:
  Representation source_;
  Representation target_;
  std::vector<Matrix> components_;
};

/// The representation of an arc on 1..n+1: K on v_p..v_{q-1}; for each
/// interior point m the identity sits on a_{m-1} if the arc passes below m,
/// on a_{m-1}^- if it passes above.
Representation arc_module(const Arc& alpha, int n);

/// Basis of Hom(M, N) from the reduced echelon form of the commuting-square
/// system; unknowns are ordered by vertex, then row-major within phi_i.
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

struct MorphismParts {
  Representation kernel;
  Representation image;
  Representation cokernel;
};

MorphismParts morphism_parts(const Morphism& f);

/// hom(M,N) + hom(N,M) - (dim M, dim N). Throws InconsistencyError if the
/// value comes out negative.
int ext1_dim(const Representation& m, const Representation& n);

bool is_brick(const Representation& m);
bool is_semibrick(std::span<const Representation> modules);

/// The composite of the path's arrows acting on M is zero. Throws
/// PreconditionError if the path leaves the quiver of M.
bool path_action_is_zero(const Representation& m, const Path& path);

/// Dimension vectors agree and Hom(M,N) contains an isomorphism.
bool is_isomorphic(const Representation& m, const Representation& n);

}  // namespace arcbrick
