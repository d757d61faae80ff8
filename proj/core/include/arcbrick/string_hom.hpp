#pragma once

// Combinatorial Hom spaces between arc modules.
//
// An arc's arrow sequence is a word in the letters a_i (direct) and a_i^-
// (inverse) with consecutive indices. Splitting it as b.c.d gives quotient
// factorizations (S(alpha) ->> S(c)) and submodule factorizations
// (S(c) >-> S(alpha)); pairing a quotient factorization of alpha with a
// submodule factorization of beta that has the same middle piece yields a
// graph map S(alpha) -> S(beta). The graph maps form a basis of the Hom space.

#include <string>
#include <vector>

#include "arcbrick/arc.hpp"
#include "arcbrick/quiver.hpp"
#include "arcbrick/representation.hpp"

namespace arcbrick {

/// Letters covering the vertex interval [first, last]; letter k joins v_{first+k}
/// and v_{first+k+1}. A single vertex (no letters) is the idempotent e_first.
class ArrowSequence {
 public:
  ArrowSequence(int first, int last, std::vector<Arrow> letters);
  static ArrowSequence idempotent(int vertex) { return ArrowSequence(vertex, vertex, {}); }

  int first_vertex() const noexcept { return first_; }
  int last_vertex() const noexcept { return last_; }
  const std::vector<Arrow>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_idempotent() const noexcept { return letters_.empty(); }

  /// The sub-sequence on vertices [first, last].
  ArrowSequence slice(int first, int last) const;

  /// "a1 a2 a3- a4 a5-" or "e3".
  std::string to_string() const;

  friend bool operator==(const ArrowSequence&, const ArrowSequence&) = default;

 private:
  int first_;
  int last_;
  std::vector<Arrow> letters_;
};

ArrowSequence arrow_sequence(const Arc& alpha);

enum class FactorizationKind { Quotient, Submodule };

/// (b, c, d) with b.c.d the arrow sequence of the arc. b and d are plain
/// letter lists (possibly empty); c keeps its vertex interval.
struct Factorization {
  FactorizationKind kind;
  std::vector<Arrow> before;
  ArrowSequence middle;
  std::vector<Arrow> after;

  std::string to_string() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// All factorizations of the given kind ordered by (|b|, |c|).
///
/// Quotient: b empty or ending in an inverse letter, d empty or starting with
/// a direct letter. Submodule: b empty or ending in a direct letter, d empty
/// or starting with an inverse letter.
std::vector<Factorization> factorizations(const Arc& alpha, FactorizationKind kind);

struct GraphMap {
  Factorization quotient;   // of the source arc
  Factorization submodule;  // of the target arc
};

/// Pairs (quotient of alpha, submodule of beta) whose middles agree letter for
/// letter on the same vertex interval.
std::vector<GraphMap> graph_maps(const Arc& alpha, const Arc& beta);
int graph_map_count(const Arc& alpha, const Arc& beta);

/// The morphism S(alpha) -> S(beta) that is the identity on the shared
/// middle support and zero elsewhere.
Morphism materialize(const GraphMap& g, const Arc& alpha, const Arc& beta, int n);

}  // namespace arcbrick
