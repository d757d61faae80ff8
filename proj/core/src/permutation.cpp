#include "arcbrick/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "arcbrick/errors.hpp"

namespace arcbrick {

namespace {

constexpr int kMaxEnumeratedRank = 10;

void require_same_rank(const Permutation& u, const Permutation& w) {
  if (u.rank() != w.rank()) {
    throw PreconditionError("rank mismatch: " + std::to_string(u.rank()) +
                            " vs " + std::to_string(w.rank()));
  }
}

}  // namespace

InversionSet::InversionSet(int size) : size_(size) {
  if (size < 0) throw PreconditionError("negative inversion set size");
  bits_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
}

std::size_t InversionSet::slot(int a, int b) const {
  if (a < 1 || b > size_ || a >= b) {
    throw PreconditionError("invalid inversion pair (" + std::to_string(a) +
                            "," + std::to_string(b) + ")");
  }
  return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(size_) +
         static_cast<std::size_t>(b - 1);
}

bool InversionSet::contains(int a, int b) const { return bits_[slot(a, b)] != 0; }

void InversionSet::insert(int a, int b) { bits_[slot(a, b)] = 1; }

void InversionSet::erase(int a, int b) { bits_[slot(a, b)] = 0; }

std::size_t InversionSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<int, int>> InversionSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= size_; ++a)
    for (int b = a + 1; b <= size_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool InversionSet::is_subset_of(const InversionSet& other) const {
  if (size_ != other.size_) return false;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !other.bits_[k]) return false;
  return true;
}

bool InversionSet::is_closed() const {
  for (int a = 1; a <= size_; ++a)
    for (int b = a + 1; b <= size_; ++b) {
      if (!contains(a, b)) continue;
      for (int c = b + 1; c <= size_; ++c)
        if (contains(b, c) && !contains(a, c)) return false;
    }
  return true;
}

bool InversionSet::is_coclosed() const {
  for (int a = 1; a <= size_; ++a)
    for (int c = a + 2; c <= size_; ++c) {
      if (!contains(a, c)) continue;
      for (int b = a + 1; b < c; ++b)
        if (!contains(a, b) && !contains(b, c)) return false;
    }
  return true;
}

InversionSet InversionSet::transitive_closure() const {
  InversionSet out = *this;
  // Warshall on the relation a -> b for (a,b) in S; every edge goes up in
  // value, so a single pass over intermediate values suffices.
  for (int b = 1; b <= size_; ++b)
    for (int a = 1; a < b; ++a) {
      if (!out.contains(a, b)) continue;
      for (int c = b + 1; c <= size_; ++c)
        if (out.contains(b, c)) out.insert(a, c);
    }
  return out;
}

InversionSet set_union(const InversionSet& lhs, const InversionSet& rhs) {
  if (lhs.size() != rhs.size()) throw PreconditionError("inversion set size mismatch");
  InversionSet out = lhs;
  for (auto [a, b] : rhs.pairs()) out.insert(a, b);
  return out;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int m = static_cast<int>(word_.size());
  if (m < 2) throw PreconditionError("a permutation needs at least two entries (rank >= 1)");
  positions_.assign(static_cast<std::size_t>(m), 0);
  for (int pos = 1; pos <= m; ++pos) {
    const int v = word_[static_cast<std::size_t>(pos - 1)];
    if (v < 1 || v > m || positions_[static_cast<std::size_t>(v - 1)] != 0) {
      throw PreconditionError("not a permutation of [" + std::to_string(m) + "]");
    }
    positions_[static_cast<std::size_t>(v - 1)] = pos;
  }
  inversions_ = InversionSet(m);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (position_of(a) > position_of(b)) inversions_.insert(a, b);
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n + 1));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::longest(int n) {
  std::vector<int> word(static_cast<std::size_t>(n + 1));
  std::iota(word.rbegin(), word.rend(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      if (token.empty() ||
          !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("malformed permutation entry '" + token + "'");
      }
      word.push_back(std::stoi(token));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("malformed permutation '" + std::string(text) + "'");
      word.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("malformed permutation '") + std::string(text) + "': " + e.what());
  }
}

std::string Permutation::to_string() const {
  std::string out;
  const bool digits = size() <= 9;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(word_[k]);
  }
  return out;
}

InversionSet inversions(const Permutation& w) { return w.inversions(); }

bool weak_leq(const Permutation& u, const Permutation& w) {
  require_same_rank(u, w);
  return u.inversions().is_subset_of(w.inversions());
}

std::vector<Permutation> covers(const Permutation& w, CoverDirection direction) {
  std::vector<Permutation> out;
  for (int i = 1; i <= w.rank(); ++i) {
    const bool descent = w.at(i) > w.at(i + 1);
    if (descent == (direction == CoverDirection::Down)) {
      out.push_back(left_multiply_simple(i, w));
    }
  }
  return out;
}

Permutation join(const Permutation& u, const Permutation& w) {
  require_same_rank(u, w);
  return from_inversions(set_union(u.inversions(), w.inversions()).transitive_closure());
}

Permutation meet(const Permutation& u, const Permutation& w) {
  require_same_rank(u, w);
  return value_complement(join(value_complement(u), value_complement(w)));
}

Permutation from_inversions(const InversionSet& set) {
  if (set.size() < 2) throw PreconditionError("inversion set on fewer than two values");
  if (!set.is_biclosed()) throw PreconditionError("inversion set is not biclosed");
  std::vector<int> word(static_cast<std::size_t>(set.size()));
  std::iota(word.begin(), word.end(), 1);
  // a precedes b (a < b) iff (a,b) is not an inversion; biclosedness makes
  // this a strict total order.
  std::sort(word.begin(), word.end(), [&](int x, int y) {
    if (x == y) return false;
    return x < y ? !set.contains(x, y) : set.contains(y, x);
  });
  Permutation out(std::move(word));
  if (!(out.inversions() == set)) throw InconsistencyError("from_inversions round trip failed");
  return out;
}

Permutation left_multiply_simple(int i, const Permutation& w) {
  if (i < 1 || i > w.rank()) {
    throw PreconditionError("simple generator index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(w.rank()));
  }
  std::vector<int> word = w.word();
  std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
  return Permutation(std::move(word));
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.rank(); ++i)
    if (w.at(i) > w.at(i + 1)) out.push_back(i);
  return out;
}

Permutation value_complement(const Permutation& w) {
  std::vector<int> word = w.word();
  for (int& v : word) v = w.size() + 1 - v;
  return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  if (n > kMaxEnumeratedRank) {
    throw CapExceeded("permutation enumeration capped at rank " +
                      std::to_string(kMaxEnumeratedRank));
  }
  std::vector<int> word(static_cast<std::size_t>(n + 1));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> join_irreducibles(int n) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (descents(w).size() == 1) out.push_back(std::move(w));
  return out;
}

}  // namespace arcbrick
