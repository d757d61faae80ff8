#pragma once

// Noncrossing arc diagrams whose arc modules are killed by a monomial ideal
// of the preprojective algebra.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcbrick/arc.hpp"
#include "arcbrick/quiver.hpp"

namespace arcbrick {

/// Two-sided ideal generated by paths. Membership of S(alpha) I = 0 is then
/// a matter of matrix products.
class MonomialIdealSpec {
 public:
  MonomialIdealSpec() = default;
  /// Throws PreconditionError on an empty generator.
  explicit MonomialIdealSpec(std::vector<Path> generators);

  /// JSON list of path strings, e.g. ["a1-","a2 a3"].
  static MonomialIdealSpec from_json(std::string_view text);

  const std::vector<Path>& generators() const noexcept { return generators_; }
  /// Throws PreconditionError if a generator uses arrows outside rank n.
  void require_fits(int n) const;

 private:
  std::vector<Path> generators_;
};

/// All 2-cycles a_i a_i^- and a_i^- a_i.
MonomialIdealSpec two_cycle_ideal(int n);
/// <a_1^-, ..., a_{n-1}^->; the quotient is the linearly oriented path algebra.
MonomialIdealSpec linear_orientation_ideal(int n);
/// All paths of length two.
MonomialIdealSpec radical_square_ideal(int n);

/// Every generator acts as zero on S(alpha).
bool arc_annihilated(const Arc& alpha, int n, const MonomialIdealSpec& ideal);

std::vector<NoncrossingDiagram> nad_ideal_filter(int n, const MonomialIdealSpec& ideal);

/// Passes below every interior point (only direct letters).
bool is_right_arc(const Arc& alpha);
/// Interior sides alternate with parity: all even points on one side, all odd
/// points on the other. Arcs without interior points qualify.
bool is_alternating_arc(const Arc& alpha);

enum class Family { Nad, Rnad, Anad, Custom };

std::string to_string(Family family);
/// "nad", "rnad", "anad", "custom"; throws ParseError.
Family parse_family(std::string_view text);

inline constexpr int kMaxCountRank = 8;

/// Exhaustive count. Rnad and Anad use the side predicates; Custom requires
/// an ideal and filters by annihilation.
std::uint64_t family_count(int n, Family family,
                           const std::optional<MonomialIdealSpec>& ideal = std::nullopt);

}  // namespace arcbrick
