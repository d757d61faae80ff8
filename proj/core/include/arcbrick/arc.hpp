#pragma once

// Arcs on the points 1..n+1 and the diagrams built from them.
//
// An arc joins p < q and passes either above or below each point strictly
// between them; that data determines its isotopy class. Sides are kept as a
// bitmask over the interior points (bit k <-> point p+1+k, set = Above).

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcbrick/permutation.hpp"

namespace arcbrick {

enum class Side : std::uint8_t { Below, Above };
enum class Color : std::uint8_t { Green, Red };

std::string to_string(Side side);
std::string to_string(Color color);

class Arc {
 public:
  /// Largest supported span q - p.
  static constexpr int kMaxSpan = 62;

  /// `above` lists interior points passed above; every other interior point
  /// is passed below.
  Arc(int left, int right, std::span<const int> above = {});
  Arc(int left, int right, std::initializer_list<int> above)
      : Arc(left, right, std::span<const int>(above.begin(), above.size())) {}

  /// Bit k of `mask` is the side of point left + 1 + k.
  static Arc from_mask(int left, int right, std::uint64_t mask);

  int left() const noexcept { return left_; }
  int right() const noexcept { return right_; }
  std::uint64_t above_mask() const noexcept { return mask_; }
  int interior_count() const noexcept { return right_ - left_ - 1; }

  bool has_interior(int point) const noexcept { return left_ < point && point < right_; }
  bool has_endpoint(int point) const noexcept { return point == left_ || point == right_; }
  /// Side at an interior point; throws PreconditionError otherwise.
  Side side(int point) const;
  std::vector<int> above_points() const;

  /// "arc(1,7;2v,3v,4^,5v,6^)"; "arc(2,3)" without interior points.
  std::string to_string() const;

  friend bool operator==(const Arc&, const Arc&) = default;
  /// Lexicographic on (left, right, side bitmask).
  friend std::strong_ordering operator<=>(const Arc& a, const Arc& b) {
    if (auto c = a.left_ <=> b.left_; c != 0) return c;
    if (auto c = a.right_ <=> b.right_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  Arc() = default;

  int left_ = 1;
  int right_ = 2;
  std::uint64_t mask_ = 0;
};

/// True iff two distinct arcs must intersect at a non-endpoint. Throws
/// PreconditionError for identical arcs.
///
/// At each integer point in the closed overlap of the spans the vertical order
/// of the two arcs is read off: points interior to both with opposite sides,
/// or an endpoint of one arc lying strictly inside the other. The arcs cross
/// iff both orders occur. Shared endpoints and same-side points carry no
/// information.
bool is_crossing(const Arc& alpha, const Arc& beta);

/// (nc1) pairwise non-crossing and (nc2) no shared left or right endpoints.
bool check_nad(std::span<const Arc> arcs);

/// A set of arcs on 1..n+1 satisfying (nc1) and (nc2), kept sorted.
class NoncrossingDiagram {
 public:
  /// Throws PreconditionError if an arc leaves [1, n+1] or the set fails
  /// check_nad.
  NoncrossingDiagram(int n, std::vector<Arc> arcs);

  int rank() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const& noexcept { return arcs_; }
  std::vector<Arc> arcs() && noexcept { return std::move(arcs_); }
  std::size_t size() const noexcept { return arcs_.size(); }
  bool empty() const noexcept { return arcs_.empty(); }

  friend bool operator==(const NoncrossingDiagram&, const NoncrossingDiagram&) = default;
  friend auto operator<=>(const NoncrossingDiagram& a, const NoncrossingDiagram& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
};

struct ColoredArc {
  Arc arc;
  Color color;

  friend bool operator==(const ColoredArc&, const ColoredArc&) = default;
};

/// Position-indexed colored arcs; entry i (1-based) sits between the values
/// at positions i and i+1 of the underlying permutation.
class ColoredDiagram {
 public:
  /// Checks that there are exactly n entries, all on 1..n+1, pairwise
  /// non-crossing.
  ColoredDiagram(int n, std::vector<ColoredArc> entries);

  int rank() const noexcept { return n_; }
  const std::vector<ColoredArc>& entries() const& noexcept { return entries_; }
  std::vector<ColoredArc> entries() && noexcept { return std::move(entries_); }
  /// 1-based.
  const ColoredArc& at(int position) const {
    return entries_.at(static_cast<std::size_t>(position - 1));
  }

  friend bool operator==(const ColoredDiagram&, const ColoredDiagram&) = default;

 private:
  int n_;
  std::vector<ColoredArc> entries_;
};

/// D(w): entry i joins w_i and w_{i+1}; an interior value k passes below when
/// it sits left of position i and above when it sits right of position i+1;
/// green iff w_i > w_{i+1}.
ColoredDiagram double_diagram(const Permutation& w);

NoncrossingDiagram restrict_green(const ColoredDiagram& d);
NoncrossingDiagram restrict_red(const ColoredDiagram& d);
inline NoncrossingDiagram green_diagram(const Permutation& w) {
  return restrict_green(double_diagram(w));
}
inline NoncrossingDiagram red_diagram(const Permutation& w) {
  return restrict_red(double_diagram(w));
}

/// Reads the permutation back off a colored diagram by walking the chain of
/// shared endpoints. Throws PreconditionError if the entries do not form
/// such a chain with colors matching the order of the values.
Permutation underlying_permutation(const ColoredDiagram& d);

/// The single-descent permutation whose green diagram is {alpha}.
Permutation arc_to_join_irreducible(const Arc& alpha, int n);

/// Join of the join-irreducibles of the arcs; identity for the empty diagram.
Permutation diagram_to_permutation(const NoncrossingDiagram& g);

/// Number of arcs on n+1 points: 2^{n+1} - n - 2.
std::uint64_t arc_count(int n);

/// Caps for the exhaustive enumerators.
inline constexpr int kMaxArcRank = 20;
inline constexpr int kMaxDiagramRank = 8;

/// All arcs on 1..n+1 in (left, right, mask) order.
std::vector<Arc> enumerate_arcs(int n);

/// Visits every noncrossing diagram on 1..n+1 (arcs sorted within each
/// diagram, diagrams in lexicographic order).
void for_each_nad(int n, const std::function<void(std::span<const Arc>)>& visit);

/// Visits every noncrossing subset of `arcs` (which must be sorted), in
/// lexicographic order.
void for_each_noncrossing(std::span<const Arc> arcs,
                          const std::function<void(std::span<const Arc>)>& visit);

std::vector<NoncrossingDiagram> enumerate_nad(int n);

}  // namespace arcbrick
