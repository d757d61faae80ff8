#pragma once

// Permutations of [n+1] under the (right) weak order.
//
// A permutation is stored by its one-line word w_1 ... w_{n+1}. Inversions are
// VALUE pairs (a,b), a < b, with b appearing before a in the word; the weak
// order is inclusion of inversion sets and its covers swap adjacent positions.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcbrick {

/// A set of value pairs (a,b) with 1 <= a < b <= size, stored as a dense
/// upper-triangular bit table.
class InversionSet {
 public:
  InversionSet() = default;
  explicit InversionSet(int size);

  /// Number of values (n+1 for a permutation of rank n).
  int size() const noexcept { return size_; }
  bool contains(int a, int b) const;
  void insert(int a, int b);
  void erase(int a, int b);
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  /// Pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  bool is_subset_of(const InversionSet& other) const;

  /// a<b<c: {(a,b),(b,c)} in S implies (a,c) in S.
  bool is_closed() const;
  /// a<b<c: (a,c) in S implies (a,b) in S or (b,c) in S.
  bool is_coclosed() const;
  bool is_biclosed() const { return is_closed() && is_coclosed(); }

  /// Smallest closed superset.
  InversionSet transitive_closure() const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  std::size_t slot(int a, int b) const;

  int size_ = 0;
  std::vector<std::uint8_t> bits_;
};

InversionSet set_union(const InversionSet& lhs, const InversionSet& rhs);

class Permutation {
 public:
  /// Validates that `word` is a bijection of [word.size()] with at least two
  /// entries; throws PreconditionError otherwise.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// The longest element (n+1) n ... 1.
  static Permutation longest(int n);

  /// Parses "4312" (digits, only when n+1 <= 9) or "10,3,1,...".
  static Permutation parse(std::string_view text);

  /// Rank: the permutation acts on 1..n+1.
  int rank() const noexcept { return static_cast<int>(word_.size()) - 1; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const noexcept { return word_; }
  /// 1-based entry w_i.
  int at(int position) const { return word_.at(static_cast<std::size_t>(position - 1)); }
  /// 1-based position of `value` in the word.
  int position_of(int value) const {
    return positions_.at(static_cast<std::size_t>(value - 1));
  }
  const InversionSet& inversions() const noexcept { return inversions_; }
  std::size_t length() const noexcept { return inversions_.count(); }

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
  std::vector<int> positions_;
  InversionSet inversions_;
};

enum class CoverDirection { Up, Down };

InversionSet inversions(const Permutation& w);

/// inv(u) is a subset of inv(w). Throws PreconditionError on rank mismatch.
bool weak_leq(const Permutation& u, const Permutation& w);

/// Permutations covering (Up) or covered by (Down) `w`, ordered by the
/// position of the swapped pair.
std::vector<Permutation> covers(const Permutation& w, CoverDirection direction);

Permutation join(const Permutation& u, const Permutation& w);
Permutation meet(const Permutation& u, const Permutation& w);

/// The unique permutation with the given inversion set; throws
/// PreconditionError unless `set` is biclosed.
Permutation from_inversions(const InversionSet& set);

/// s_i w: exchanges the entries at positions i and i+1 (1 <= i <= n).
Permutation left_multiply_simple(int i, const Permutation& w);

/// Positions i with w_i > w_{i+1}.
std::vector<int> descents(const Permutation& w);

/// c(w)_i = n + 2 - w_i; an anti-automorphism of the weak order.
Permutation value_complement(const Permutation& w);

/// All (n+1)! permutations in lexicographic order of their words.
std::vector<Permutation> all_permutations(int n);

/// Permutations with exactly one descent.
std::vector<Permutation> join_irreducibles(int n);

}  // namespace arcbrick
