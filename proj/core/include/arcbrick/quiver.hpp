#pragma once

// The doubled type-A quiver v_1 <-> v_2 <-> ... <-> v_n.
//
// a_i : v_i -> v_{i+1} (direct) and a_i^- : v_{i+1} -> v_i (inverse),
// 1 <= i <= n-1. Text forms: "a3", "a3-", idempotents "e3".

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace arcbrick {

struct Arrow {
  int index = 1;
  bool inverse = false;

  int source() const noexcept { return inverse ? index + 1 : index; }
  int target() const noexcept { return inverse ? index : index + 1; }
  bool direct() const noexcept { return !inverse; }

  std::string to_string() const;
  /// "a3" or "a3-"; throws ParseError.
  static Arrow parse(std::string_view text);

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// A path in the doubled quiver, composed left to right: the first arrow is
/// applied first. An empty path is the idempotent at `start`.
class Path {
 public:
  /// Throws PreconditionError if consecutive arrows are not composable or
  /// the first arrow does not leave `start`.
  Path(int start, std::vector<Arrow> arrows);
  /// Non-empty path starting at the source of the first arrow.
  explicit Path(std::vector<Arrow> arrows);

  static Path idempotent(int vertex) { return Path(vertex, {}); }
  /// "a1 a2-" or "e3"; throws ParseError / PreconditionError.
  static Path parse(std::string_view text);

  int start() const noexcept { return start_; }
  int end() const noexcept { return arrows_.empty() ? start_ : arrows_.back().target(); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  /// Largest vertex index touched.
  int max_vertex() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  int start_;
  std::vector<Arrow> arrows_;
};

/// All arrows of the doubled quiver of rank n: a_1..a_{n-1}, a_1^-..a_{n-1}^-.
std::vector<Arrow> all_arrows(int n);

}  // namespace arcbrick
