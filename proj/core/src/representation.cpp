#include "arcbrick/representation.hpp"

#include <numeric>
#include <random>

#include "arcbrick/errors.hpp"

namespace arcbrick {

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int x : entries_)
    if (x < 0) throw PreconditionError("dimension vectors are nonnegative");
}

int DimVector::total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

DimVector operator+(const DimVector& x, const DimVector& y) {
  if (x.size() != y.size()) throw PreconditionError("dimension vector length mismatch");
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.entries()[i] + y.entries()[i];
  return DimVector(std::move(out));
}

int bilinear(const DimVector& x, const DimVector& y) {
  if (x.size() != y.size()) throw PreconditionError("dimension vector length mismatch");
  const auto& a = x.entries();
  const auto& b = y.entries();
  int value = 0;
  for (std::size_t i = 0; i < a.size(); ++i) value += 2 * a[i] * b[i];
  for (std::size_t i = 0; i + 1 < a.size(); ++i) value -= a[i] * b[i + 1] + a[i + 1] * b[i];
  return value;
}

int quad(const DimVector& x) {
  const auto& a = x.entries();
  if (a.empty()) return 0;
  int value = a.front() * a.front() + a.back() * a.back();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) value += (a[i] - a[i + 1]) * (a[i] - a[i + 1]);
  return value;
}

Representation::Representation(int n, DimVector dims) : n_(n), dims_(std::move(dims)) {
  if (n < 1) throw PreconditionError("rank must be >= 1");
  if (static_cast<int>(dims_.size()) != n) {
    throw PreconditionError("dimension vector must have " + std::to_string(n) + " entries");
  }
  for (int i = 1; i < n; ++i) {
    forward_.push_back(Matrix::zero(static_cast<std::size_t>(dims_.at(i + 1)),
                                    static_cast<std::size_t>(dims_.at(i))));
    backward_.push_back(Matrix::zero(static_cast<std::size_t>(dims_.at(i)),
                                     static_cast<std::size_t>(dims_.at(i + 1))));
  }
}

Representation Representation::simple(int n, int vertex) {
  if (vertex < 1 || vertex > n) throw PreconditionError("vertex out of range");
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  dims[static_cast<std::size_t>(vertex - 1)] = 1;
  return Representation(n, DimVector(std::move(dims)));
}

std::size_t Representation::slot(const Arrow& a) const {
  if (a.index < 1 || a.index >= n_) {
    throw PreconditionError("arrow " + a.to_string() + " is not in the quiver of rank " +
                            std::to_string(n_));
  }
  return static_cast<std::size_t>(a.index - 1);
}

const Matrix& Representation::map(const Arrow& a) const {
  return a.inverse ? backward_[slot(a)] : forward_[slot(a)];
}

void Representation::set_map(const Arrow& a, Matrix m) {
  Matrix& dst = a.inverse ? backward_[slot(a)] : forward_[slot(a)];
  if (m.rows() != dst.rows() || m.cols() != dst.cols()) {
    throw PreconditionError("matrix for " + a.to_string() + " must be " +
                            std::to_string(dst.rows()) + "x" + std::to_string(dst.cols()));
  }
  dst = std::move(m);
}

Matrix relation_at(const Representation& m, int vertex) {
  const int n = m.rank();
  if (vertex < 1 || vertex > n) throw PreconditionError("vertex out of range");
  const auto d = static_cast<std::size_t>(m.dim(vertex));
  Matrix value = Matrix::zero(d, d);
  if (vertex > 1) {
    const int i = vertex - 1;
    value = value + m.map({i, false}) * m.map({i, true});
  }
  if (vertex < n) {
    const int i = vertex;
    value = value - m.map({i, true}) * m.map({i, false});
  }
  return value;
}

bool check_relations(const Representation& m) {
  for (int v = 1; v <= m.rank(); ++v)
    if (!relation_at(m, v).is_zero()) return false;
  return true;
}

namespace {

void require_same_quiver(const Representation& a, const Representation& b) {
  if (a.rank() != b.rank()) throw PreconditionError("representations of different rank");
}

bool commutes(const Representation& source, const Representation& target,
              const std::vector<Matrix>& phi) {
  for (const Arrow& a : all_arrows(source.rank())) {
    const Matrix& lhs_phi = phi[static_cast<std::size_t>(a.target() - 1)];
    const Matrix& rhs_phi = phi[static_cast<std::size_t>(a.source() - 1)];
    if (!(lhs_phi * source.map(a) == target.map(a) * rhs_phi)) return false;
  }
  return true;
}

}  // namespace

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_quiver(source_, target_);
  if (static_cast<int>(components_.size()) != source_.rank()) {
    throw PreconditionError("a morphism needs one matrix per vertex");
  }
  for (int v = 1; v <= source_.rank(); ++v) {
    const Matrix& c = component(v);
    if (c.rows() != static_cast<std::size_t>(target_.dim(v)) ||
        c.cols() != static_cast<std::size_t>(source_.dim(v))) {
      throw PreconditionError("morphism component at v" + std::to_string(v) + " has wrong shape");
    }
  }
  if (!commutes(source_, target_, components_)) {
    throw PreconditionError("vertex maps do not commute with the arrows");
  }
}

Morphism Morphism::identity(const Representation& m) {
  std::vector<Matrix> c;
  for (int v = 1; v <= m.rank(); ++v) c.push_back(Matrix::identity(static_cast<std::size_t>(m.dim(v))));
  return Morphism(m, m, std::move(c));
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  require_same_quiver(source, target);
  std::vector<Matrix> c;
  for (int v = 1; v <= source.rank(); ++v) {
    c.push_back(Matrix::zero(static_cast<std::size_t>(target.dim(v)),
                             static_cast<std::size_t>(source.dim(v))));
  }
  return Morphism(source, target, std::move(c));
}

bool Morphism::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

bool Morphism::is_injective() const {
  for (const auto& c : components_)
    if (rank(c) != c.cols()) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (const auto& c : components_)
    if (rank(c) != c.rows()) return false;
  return true;
}

bool Morphism::is_isomorphism() const { return is_injective() && is_surjective(); }

Representation arc_module(const Arc& alpha, int n) {
  if (alpha.right() > n + 1) {
    throw PreconditionError(alpha.to_string() + " does not fit on points 1.." + std::to_string(n + 1));
  }
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  for (int v = alpha.left(); v < alpha.right(); ++v) dims[static_cast<std::size_t>(v - 1)] = 1;
  Representation m(n, DimVector(std::move(dims)));
  for (int point = alpha.left() + 1; point < alpha.right(); ++point) {
    const Arrow a{point - 1, alpha.side(point) == Side::Above};
    m.set_map(a, Matrix::identity(1));
  }
  return m;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  const int r = m.rank();
  // Offsets of the unknown blocks phi_v (dim N_v x dim M_v, row-major).
  std::vector<std::size_t> offset(static_cast<std::size_t>(r) + 1, 0);
  for (int v = 1; v <= r; ++v) {
    offset[static_cast<std::size_t>(v)] =
        offset[static_cast<std::size_t>(v - 1)] +
        static_cast<std::size_t>(n.dim(v)) * static_cast<std::size_t>(m.dim(v));
  }
  const std::size_t unknowns = offset.back();
  auto var = [&](int v, std::size_t row, std::size_t col) {
    return offset[static_cast<std::size_t>(v - 1)] + row * static_cast<std::size_t>(m.dim(v)) + col;
  };

  std::vector<std::vector<Rational>> rows;
  for (const Arrow& a : all_arrows(r)) {
    const int s = a.source();
    const int t = a.target();
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    // (phi_t * M(a) - N(a) * phi_s)(i, j) = 0
    for (std::size_t i = 0; i < static_cast<std::size_t>(n.dim(t)); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(m.dim(s)); ++j) {
        std::vector<Rational> row(unknowns, Rational(0));
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.dim(t)); ++k)
          if (ma(k, j) != 0) row[var(t, i, k)] += ma(k, j);
        for (std::size_t k = 0; k < static_cast<std::size_t>(n.dim(s)); ++k)
          if (na(i, k) != 0) row[var(s, k, j)] -= na(i, k);
        rows.push_back(std::move(row));
      }
  }
  Matrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) system(i, j) = rows[i][j];

  const Matrix kernel = nullspace(system);
  std::vector<Morphism> basis;
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    std::vector<Matrix> phi;
    for (int v = 1; v <= r; ++v) {
      Matrix c(static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = kernel(var(v, i, j), k);
      phi.push_back(std::move(c));
    }
    basis.emplace_back(m, n, std::move(phi));
  }
  return basis;
}

int hom_dim(const Representation& m, const Representation& n) {
  return static_cast<int>(hom_basis(m, n).size());
}

MorphismParts morphism_parts(const Morphism& f) {
  const Representation& src = f.source();
  const Representation& tgt = f.target();
  const int r = src.rank();
  std::vector<Matrix> ker_basis;
  std::vector<Matrix> im_basis;
  std::vector<Matrix> coker_section;
  std::vector<Matrix> coker_projection;
  std::vector<int> ker_dims;
  std::vector<int> im_dims;
  std::vector<int> coker_dims;
  for (int v = 1; v <= r; ++v) {
    const Matrix& phi = f.component(v);
    ker_basis.push_back(nullspace(phi));
    im_basis.push_back(column_space(phi));
    const auto dim = static_cast<std::size_t>(tgt.dim(v));
    Matrix complement = complement_basis(im_basis.back(), dim);
    const Matrix change = inverse(Matrix::hstack(im_basis.back(), complement));
    Matrix projection(complement.cols(), dim);
    for (std::size_t i = 0; i < complement.cols(); ++i)
      for (std::size_t j = 0; j < dim; ++j) projection(i, j) = change(im_basis.back().cols() + i, j);
    ker_dims.push_back(static_cast<int>(ker_basis.back().cols()));
    im_dims.push_back(static_cast<int>(im_basis.back().cols()));
    coker_dims.push_back(static_cast<int>(complement.cols()));
    coker_section.push_back(std::move(complement));
    coker_projection.push_back(std::move(projection));
  }

  Representation kernel(r, DimVector(ker_dims));
  Representation image(r, DimVector(im_dims));
  Representation cokernel(r, DimVector(coker_dims));
  for (const Arrow& a : all_arrows(r)) {
    const auto s = static_cast<std::size_t>(a.source() - 1);
    const auto t = static_cast<std::size_t>(a.target() - 1);
    kernel.set_map(a, solve_in_basis(ker_basis[t], src.map(a) * ker_basis[s]));
    image.set_map(a, solve_in_basis(im_basis[t], tgt.map(a) * im_basis[s]));
    cokernel.set_map(a, coker_projection[t] * tgt.map(a) * coker_section[s]);
  }
  return {std::move(kernel), std::move(image), std::move(cokernel)};
}

int ext1_dim(const Representation& m, const Representation& n) {
  const int value = hom_dim(m, n) + hom_dim(n, m) - bilinear(m.dims(), n.dims());
  if (value < 0) {
    throw InconsistencyError("negative Ext^1 dimension " + std::to_string(value) +
                             " (relations violated?)");
  }
  return value;
}

bool is_brick(const Representation& m) { return hom_dim(m, m) == 1; }

bool is_semibrick(std::span<const Representation> modules) {
  for (const auto& m : modules)
    if (!is_brick(m)) return false;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (std::size_t j = 0; j < modules.size(); ++j)
      if (i != j && hom_dim(modules[i], modules[j]) != 0) return false;
  return true;
}

bool path_action_is_zero(const Representation& m, const Path& path) {
  if (path.max_vertex() > m.rank()) {
    throw PreconditionError("path " + path.to_string() + " leaves the quiver of rank " +
                            std::to_string(m.rank()));
  }
  Matrix acc = Matrix::identity(static_cast<std::size_t>(m.dim(path.start())));
  for (const Arrow& a : path.arrows()) acc = m.map(a) * acc;
  return acc.is_zero();
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.rank() != n.rank() || m.dims() != n.dims()) return false;
  const auto basis = hom_basis(m, n);
  if (m.dims().total() == 0) return true;
  for (const auto& f : basis)
    if (f.is_isomorphism()) return true;
  if (basis.size() < 2) return false;
  // Isomorphisms form a Zariski-open subset of Hom(M,N); a generic
  // combination lies in it whenever it is nonempty.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coefficient(1, 1'000'003);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs.emplace_back(coefficient(rng));
    std::vector<Matrix> phi;
    for (int v = 1; v <= m.rank(); ++v) {
      Matrix c = Matrix::zero(static_cast<std::size_t>(n.dim(v)), static_cast<std::size_t>(m.dim(v)));
      for (std::size_t k = 0; k < basis.size(); ++k) c = c + basis[k].component(v).scaled(coeffs[k]);
      phi.push_back(std::move(c));
    }
    if (Morphism(m, n, std::move(phi)).is_isomorphism()) return true;
  }
  return false;
}

}  // namespace arcbrick
