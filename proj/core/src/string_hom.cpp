#include "arcbrick/string_hom.hpp"

#include <algorithm>

#include "arcbrick/errors.hpp"

namespace arcbrick {

ArrowSequence::ArrowSequence(int first, int last, std::vector<Arrow> letters)
    : first_(first), last_(last), letters_(std::move(letters)) {
  if (first < 1 || last < first) throw PreconditionError("invalid vertex interval");
  if (static_cast<int>(letters_.size()) != last - first) {
    throw PreconditionError("arrow sequence length does not match its vertex interval");
  }
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k].index != first + static_cast<int>(k)) {
      throw PreconditionError("arrow sequence indices must increase by one");
    }
  }
}

ArrowSequence ArrowSequence::slice(int first, int last) const {
  if (first < first_ || last > last_ || last < first) throw PreconditionError("slice out of range");
  std::vector<Arrow> letters(letters_.begin() + (first - first_), letters_.begin() + (last - first_));
  return ArrowSequence(first, last, std::move(letters));
}

std::string ArrowSequence::to_string() const {
  if (letters_.empty()) return "e" + std::to_string(first_);
  std::string out;
  for (const Arrow& a : letters_) {
    if (!out.empty()) out += ' ';
    out += a.to_string();
  }
  return out;
}

ArrowSequence arrow_sequence(const Arc& alpha) {
  std::vector<Arrow> letters;
  for (int m = alpha.left() + 1; m < alpha.right(); ++m) {
    letters.push_back({m - 1, alpha.side(m) == Side::Above});
  }
  return ArrowSequence(alpha.left(), alpha.right() - 1, std::move(letters));
}

namespace {

std::string letters_to_string(const std::vector<Arrow>& letters) {
  if (letters.empty()) return "()";
  std::string out;
  for (const Arrow& a : letters) {
    if (!out.empty()) out += ' ';
    out += a.to_string();
  }
  return out;
}

}  // namespace

std::string Factorization::to_string() const {
  return "(" + letters_to_string(before) + " | " + middle.to_string() + " | " +
         letters_to_string(after) + ")";
}

std::vector<Factorization> factorizations(const Arc& alpha, FactorizationKind kind) {
  const ArrowSequence whole = arrow_sequence(alpha);
  const int lo = whole.first_vertex();
  const int hi = whole.last_vertex();
  // The letter joining v_{k} and v_{k+1} is whole.letters()[k - lo].
  auto letter = [&](int k) { return whole.letters()[static_cast<std::size_t>(k - lo)]; };
  // Quotients need inverse letters flowing out of c on the left and direct
  // letters flowing out on the right; submodules the reverse.
  const bool left_inverse = kind == FactorizationKind::Quotient;

  std::vector<Factorization> out;
  for (int s = lo; s <= hi; ++s)
    for (int t = s; t <= hi; ++t) {
      if (s > lo && letter(s - 1).inverse != left_inverse) continue;
      if (t < hi && letter(t).inverse == left_inverse) continue;
      std::vector<Arrow> before(whole.letters().begin(), whole.letters().begin() + (s - lo));
      std::vector<Arrow> after(whole.letters().begin() + (t - lo), whole.letters().end());
      out.push_back({kind, std::move(before), whole.slice(s, t), std::move(after)});
    }
  std::stable_sort(out.begin(), out.end(), [](const Factorization& a, const Factorization& b) {
    if (a.before.size() != b.before.size()) return a.before.size() < b.before.size();
    return a.middle.length() < b.middle.length();
  });
  return out;
}

std::vector<GraphMap> graph_maps(const Arc& alpha, const Arc& beta) {
  std::vector<GraphMap> out;
  const auto quotients = factorizations(alpha, FactorizationKind::Quotient);
  const auto submodules = factorizations(beta, FactorizationKind::Submodule);
  for (const auto& q : quotients)
    for (const auto& s : submodules)
      if (q.middle == s.middle) out.push_back({q, s});
  return out;
}

int graph_map_count(const Arc& alpha, const Arc& beta) {
  return static_cast<int>(graph_maps(alpha, beta).size());
}

Morphism materialize(const GraphMap& g, const Arc& alpha, const Arc& beta, int n) {
  const Representation source = arc_module(alpha, n);
  const Representation target = arc_module(beta, n);
  std::vector<Matrix> phi;
  for (int v = 1; v <= n; ++v) {
    Matrix c = Matrix::zero(static_cast<std::size_t>(target.dim(v)),
                            static_cast<std::size_t>(source.dim(v)));
    if (g.quotient.middle.first_vertex() <= v && v <= g.quotient.middle.last_vertex()) c(0, 0) = 1;
    phi.push_back(std::move(c));
  }
  return Morphism(source, target, std::move(phi));
}

}  // namespace arcbrick
