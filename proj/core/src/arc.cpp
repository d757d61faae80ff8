#include "arcbrick/arc.hpp"

#include <algorithm>

#include "arcbrick/errors.hpp"

namespace arcbrick {

std::string to_string(Side side) { return side == Side::Above ? "above" : "below"; }

std::string to_string(Color color) { return color == Color::Green ? "green" : "red"; }

Arc::Arc(int left, int right, std::span<const int> above) : left_(left), right_(right) {
  if (left < 1 || right <= left) {
    throw PreconditionError("invalid arc endpoints (" + std::to_string(left) + "," +
                            std::to_string(right) + ")");
  }
  if (right - left > kMaxSpan) throw PreconditionError("arc span too large");
  for (int m : above) {
    if (!has_interior(m)) {
      throw PreconditionError("point " + std::to_string(m) + " is not interior to arc (" +
                              std::to_string(left) + "," + std::to_string(right) + ")");
    }
    mask_ |= std::uint64_t{1} << (m - left - 1);
  }
}

Arc Arc::from_mask(int left, int right, std::uint64_t mask) {
  Arc a(left, right);
  const int k = a.interior_count();
  if (k < 64 && (mask >> k) != 0) throw PreconditionError("side mask exceeds arc interior");
  a.mask_ = mask;
  return a;
}

Side Arc::side(int point) const {
  if (!has_interior(point)) {
    throw PreconditionError("point " + std::to_string(point) + " is not interior to " +
                            to_string());
  }
  return (mask_ >> (point - left_ - 1)) & 1U ? Side::Above : Side::Below;
}

std::vector<int> Arc::above_points() const {
  std::vector<int> out;
  for (int m = left_ + 1; m < right_; ++m)
    if (side(m) == Side::Above) out.push_back(m);
  return out;
}

std::string Arc::to_string() const {
  std::string out = "arc(" + std::to_string(left_) + "," + std::to_string(right_);
  for (int m = left_ + 1; m < right_; ++m) {
    out += (m == left_ + 1) ? ";" : ",";
    out += std::to_string(m) + (side(m) == Side::Above ? "^" : "v");
  }
  return out + ")";
}

namespace {

// +1: alpha above beta at `m`, -1: below, 0: no information.
int vertical_order(const Arc& alpha, const Arc& beta, int m) {
  const bool in_a = alpha.has_interior(m);
  const bool in_b = beta.has_interior(m);
  if (in_a && in_b) {
    const Side sa = alpha.side(m);
    const Side sb = beta.side(m);
    if (sa == sb) return 0;
    return sa == Side::Above ? 1 : -1;
  }
  if (in_a && beta.has_endpoint(m)) return alpha.side(m) == Side::Above ? 1 : -1;
  if (in_b && alpha.has_endpoint(m)) return beta.side(m) == Side::Above ? -1 : 1;
  return 0;
}

void require_on_points(const Arc& a, int n) {
  if (a.right() > n + 1) {
    throw PreconditionError(a.to_string() + " does not fit on points 1.." + std::to_string(n + 1));
  }
}

}  // namespace

bool is_crossing(const Arc& alpha, const Arc& beta) {
  if (alpha == beta) throw PreconditionError("is_crossing called on identical arcs");
  const int lo = std::max(alpha.left(), beta.left());
  const int hi = std::min(alpha.right(), beta.right());
  bool above = false;
  bool below = false;
  for (int m = lo; m <= hi; ++m) {
    const int r = vertical_order(alpha, beta, m);
    above |= r > 0;
    below |= r < 0;
  }
  return above && below;
}

bool check_nad(std::span<const Arc> arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc& a = arcs[i];
      const Arc& b = arcs[j];
      if (a.left() == b.left() || a.right() == b.right()) return false;
      if (is_crossing(a, b)) return false;
    }
  return true;
}

NoncrossingDiagram::NoncrossingDiagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  for (const Arc& a : arcs_) require_on_points(a, n);
  std::sort(arcs_.begin(), arcs_.end());
  if (!check_nad(arcs_)) throw PreconditionError("arcs do not form a noncrossing arc diagram");
}

ColoredDiagram::ColoredDiagram(int n, std::vector<ColoredArc> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  if (static_cast<int>(entries_.size()) != n) {
    throw PreconditionError("a double arc diagram of rank " + std::to_string(n) + " has " +
                            std::to_string(n) + " entries, got " +
                            std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) require_on_points(e.arc, n);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[i].arc == entries_[j].arc) {
        throw PreconditionError("repeated arc " + entries_[i].arc.to_string());
      }
      if (is_crossing(entries_[i].arc, entries_[j].arc)) {
        throw PreconditionError("arcs " + entries_[i].arc.to_string() + " and " +
                                entries_[j].arc.to_string() + " cross");
      }
    }
}

ColoredDiagram double_diagram(const Permutation& w) {
  const int n = w.rank();
  std::vector<ColoredArc> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int a = w.at(i);
    const int b = w.at(i + 1);
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    std::vector<int> above;
    for (int k = lo + 1; k < hi; ++k)
      if (w.position_of(k) > i + 1) above.push_back(k);
    entries.push_back({Arc(lo, hi, above), a > b ? Color::Green : Color::Red});
  }
  return ColoredDiagram(n, std::move(entries));
}

namespace {

NoncrossingDiagram restrict_to(const ColoredDiagram& d, Color color) {
  std::vector<Arc> arcs;
  for (const auto& e : d.entries())
    if (e.color == color) arcs.push_back(e.arc);
  return NoncrossingDiagram(d.rank(), std::move(arcs));
}

}  // namespace

NoncrossingDiagram restrict_green(const ColoredDiagram& d) { return restrict_to(d, Color::Green); }

NoncrossingDiagram restrict_red(const ColoredDiagram& d) { return restrict_to(d, Color::Red); }

Permutation underlying_permutation(const ColoredDiagram& d) {
  const int n = d.rank();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n + 1));
  const ColoredArc& first = d.at(1);
  word.push_back(first.color == Color::Green ? first.arc.right() : first.arc.left());
  for (int i = 1; i <= n; ++i) {
    const ColoredArc& e = d.at(i);
    const int current = word.back();
    int next;
    if (e.arc.left() == current) {
      next = e.arc.right();
    } else if (e.arc.right() == current) {
      next = e.arc.left();
    } else {
      throw PreconditionError("entry " + std::to_string(i) + " does not continue the chain at value " +
                              std::to_string(current));
    }
    if ((current > next) != (e.color == Color::Green)) {
      throw PreconditionError("color of entry " + std::to_string(i) + " contradicts its values");
    }
    word.push_back(next);
  }
  return Permutation(std::move(word));
}

Permutation arc_to_join_irreducible(const Arc& alpha, int n) {
  require_on_points(alpha, n);
  std::vector<int> first;
  std::vector<int> second;
  for (int v = 1; v <= n + 1; ++v) {
    if (v < alpha.left()) {
      first.push_back(v);
    } else if (v == alpha.left()) {
      second.push_back(v);
    } else if (v < alpha.right()) {
      (alpha.side(v) == Side::Below ? first : second).push_back(v);
    } else if (v == alpha.right()) {
      first.push_back(v);
    } else {
      second.push_back(v);
    }
  }
  first.insert(first.end(), second.begin(), second.end());
  return Permutation(std::move(first));
}

Permutation diagram_to_permutation(const NoncrossingDiagram& g) {
  Permutation w = Permutation::identity(g.rank());
  for (const Arc& a : g.arcs()) w = join(w, arc_to_join_irreducible(a, g.rank()));
  return w;
}

std::uint64_t arc_count(int n) {
  if (n < 1 || n > kMaxArcRank) throw CapExceeded("arc count supported for 1 <= n <= 20");
  return (std::uint64_t{1} << (n + 1)) - static_cast<std::uint64_t>(n) - 2;
}

std::vector<Arc> enumerate_arcs(int n) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  if (n > kMaxArcRank) {
    throw CapExceeded("arc enumeration capped at rank " + std::to_string(kMaxArcRank));
  }
  std::vector<Arc> out;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n + 1; ++q) {
      const std::uint64_t masks = std::uint64_t{1} << (q - p - 1);
      for (std::uint64_t mask = 0; mask < masks; ++mask) out.push_back(Arc::from_mask(p, q, mask));
    }
  return out;
}

void for_each_noncrossing(std::span<const Arc> arcs,
                          const std::function<void(std::span<const Arc>)>& visit) {
  const std::size_t m = arcs.size();
  const std::size_t words = (m + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  // compatible[i]: arcs that may coexist with arc i in a noncrossing diagram.
  std::vector<Bits> compatible(m, Bits(words, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Arc pair[] = {arcs[i], arcs[j]};
      if (check_nad(pair)) {
        compatible[i][j / 64] |= std::uint64_t{1} << (j % 64);
        compatible[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }

  std::vector<Arc> current;
  std::function<void(const Bits&, std::size_t)> extend = [&](const Bits& candidates, std::size_t from) {
    visit(current);
    for (std::size_t k = from; k < m; ++k) {
      if (!((candidates[k / 64] >> (k % 64)) & 1U)) continue;
      Bits next(words);
      for (std::size_t w = 0; w < words; ++w) next[w] = candidates[w] & compatible[k][w];
      current.push_back(arcs[k]);
      extend(next, k + 1);
      current.pop_back();
    }
  };
  Bits all(words, ~std::uint64_t{0});
  extend(all, 0);
}

void for_each_nad(int n, const std::function<void(std::span<const Arc>)>& visit) {
  if (n > kMaxDiagramRank) {
    throw CapExceeded("diagram enumeration capped at rank " + std::to_string(kMaxDiagramRank));
  }
  const std::vector<Arc> arcs = enumerate_arcs(n);
  for_each_noncrossing(arcs, visit);
}

std::vector<NoncrossingDiagram> enumerate_nad(int n) {
  std::vector<NoncrossingDiagram> out;
  for_each_nad(n, [&](std::span<const Arc> arcs) {
    out.emplace_back(n, std::vector<Arc>(arcs.begin(), arcs.end()));
  });
  return out;
}

}  // namespace arcbrick
