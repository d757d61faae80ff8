#pragma once

// Mutation of double arc diagrams and of the corresponding 2-term
// simple-minded collections.

#include <optional>
#include <string>
#include <vector>

#include "arcbrick/arc.hpp"
#include "arcbrick/permutation.hpp"
#include "arcbrick/representation.hpp"

namespace arcbrick {

enum class MutationDirection { Left, Right };

std::string to_string(MutationDirection direction);

/// Joins the endpoints of `pivot` and `other` that they do not share.
///
/// Interior points of the result take the side of whichever input arc has the
/// point strictly inside its span. The shared point itself, when it ends up
/// interior (pivot and other sit end to end), is passed above if the pivot
/// lies to the left for a left twist and below for a right twist; the
/// opposite twist mirrors this. Throws PreconditionError unless the arcs
/// share exactly one endpoint.
Arc half_twist(const Arc& pivot, const Arc& other,
               MutationDirection direction = MutationDirection::Left);

/// Left mutation needs a green pivot at position i, right mutation a red one.
/// Without an explicit direction it is inferred from the pivot color.
/// Throws PreconditionError on a color mismatch or i out of range.
ColoredDiagram mutate_dad(const ColoredDiagram& d, int i,
                          std::optional<MutationDirection> direction = std::nullopt);

struct ShiftedModule {
  Representation module;
  int shift;  // 0: in mod, 1: in mod[1]
};

/// Position-indexed members of a collection in the derived category, each
/// concentrated in a single degree.
class TwoTermCollection {
 public:
  TwoTermCollection(int n, std::vector<ShiftedModule> members);

  int rank() const noexcept { return n_; }
  const std::vector<ShiftedModule>& members() const& noexcept { return members_; }
  std::vector<ShiftedModule> members() && noexcept { return std::move(members_); }
  /// 1-based.
  const ShiftedModule& at(int position) const {
    return members_.at(static_cast<std::size_t>(position - 1));
  }

 private:
  int n_;
  std::vector<ShiftedModule> members_;
};

/// Green arcs at shift 0, red arcs at shift 1, positions preserved.
TwoTermCollection psi(const ColoredDiagram& d);

struct SmcReport {
  bool sm1 = true;  // every member is a brick
  bool sm2 = true;  // no Hom between distinct members
  bool sm3 = true;  // no Hom into negative shifts
  bool sm4 = true;  // signed dimension vectors form a Z-basis
  std::string failure;

  bool ok() const noexcept { return sm1 && sm2 && sm3 && sm4; }
};

/// For members X[0], Y[1]: Hom(X,Y[1]) = Ext^1(X,Y) enters sm2 and
/// Hom(X,Y) = Hom(X, Y[1][-1]) enters sm3; Hom from Y[1] to X[m] vanishes for
/// m <= 0. The last axiom is replaced by the determinant test on signed
/// dimension vectors, a necessary condition for thick generation.
SmcReport smc_axiom_report(const TwoTermCollection& x);
bool smc_axiom_check(const TwoTermCollection& x);

/// No graph map from a green arc of `du` to a red arc of `dw`.
bool smc_leq(const ColoredDiagram& du, const ColoredDiagram& dw);

/// Left mutation of a 2-term collection at a shift-0 pivot, computed from the
/// modules alone: extension middle terms are found by searching all arcs, and
/// shifted neighbors are replaced by the cokernel or shifted kernel of the
/// unique morphism into the pivot.
TwoTermCollection mutate_smc_modules(const TwoTermCollection& x, int i);

struct MutationEdge {
  std::size_t from;
  std::size_t to;
  int position;
};

/// Vertices: D(w) for w in lexicographic order; one edge per green position.
struct MutationGraph {
  int n;
  std::vector<ColoredDiagram> vertices;
  std::vector<Permutation> labels;
  std::vector<MutationEdge> edges;
};

inline constexpr int kMaxHasseRank = 6;

MutationGraph hasse(int n);

}  // namespace arcbrick
