#include "hgl/matrix_groups.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace hgl {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::vector<std::vector<Elem>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix rows");
    for (Elem x : r) {
      if (x >= field_->q()) throw InvalidInput("matrix entry outside the field");
      a_.push_back(x);
    }
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || field_ != rhs.field_) throw InvalidInput("matrix shape or field mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Elem x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = f.add(out(i, j), f.mul(x, rhs(k, j)));
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::frobenius(unsigned k) const {
  Matrix out = *this;
  std::uint64_t power = 1;
  for (unsigned i = 0; i < k; ++i) power *= field_->p();
  for (auto& x : out.a_) x = field_->pow(x, power);
  return out;
}

Matrix Matrix::pow(std::uint64_t k) const {
  if (rows_ != cols_) throw InvalidInput("power of a non-square matrix");
  Matrix result = identity(field_, rows_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Matrix Matrix::rref() const {
  Matrix m = *this;
  const Field& f = *field_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(piv, j));
    Elem s = f.inv(m(r, c));
    for (std::size_t j = 0; j < cols_; ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Elem t = m(i, c);
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    ++r;
  }
  return m;
}

std::size_t Matrix::rank() const {
  Matrix m = rref();
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (m(i, j) != 0) {
        ++r;
        break;
      }
  return r;
}

Matrix::Elem Matrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  Matrix m = *this;
  const Field& f = *field_;
  Elem det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m(piv, c) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(c, j), m(piv, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    Elem s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m(i, c) == 0) continue;
      Elem t = f.mul(m(i, c), s);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(c, j)));
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
  std::size_t n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  Matrix r = aug.rref();
  Matrix out(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (r(i, i) != 1) throw DomainError("singular matrix");
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(field_->to_string((*this)(i, j)));
  return out;
}

// ---------------------------------------------------------------------------

Point mobius_image(const Field& f, Matrix::Elem a, Matrix::Elem b, Matrix::Elem c, Matrix::Elem d,
                   Point pt) {
  const Point inf = f.q();
  if (pt == inf) return c == 0 ? inf : f.div(a, c);
  Matrix::Elem num = f.add(f.mul(a, pt), b);
  Matrix::Elem den = f.add(f.mul(c, pt), d);
  if (den == 0) return inf;
  return f.div(num, den);
}

PermGroup projective_group(ProjectiveKind kind, std::uint32_t q) {
  std::uint64_t p;
  unsigned e;
  if (!prime_power(q, p, e)) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  if (q > (1u << 14)) throw CapExceeded("projective group: q above 2^14");
  FieldPtr f = Field::make(static_cast<std::uint32_t>(p), e);
  const std::size_t n = q + 1;
  auto mobius = [&](Matrix::Elem a, Matrix::Elem b, Matrix::Elem c, Matrix::Elem d) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) img[x] = mobius_image(*f, a, b, c, d, x);
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  // Translations by the additive basis 1, x, ..., x^(e-1) and z -> -1/z.
  Matrix::Elem basis = 1;
  for (unsigned i = 0; i < e; ++i, basis *= static_cast<Matrix::Elem>(p)) gens.push_back(mobius(1, basis, 0, 1));
  gens.push_back(mobius(0, f->neg(1), 1, 0));
  if (kind != ProjectiveKind::PSL2) gens.push_back(mobius(f->generator(), 0, 0, 1));
  if (kind == ProjectiveKind::PGammaL2 && e > 1) {
    std::vector<Point> img(n);
    for (Point x = 0; x < q; ++x) img[x] = f->frobenius(x);
    img[q] = q;
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup::from_generators(std::move(gens));
}

// ---------------------------------------------------------------------------

FieldPtr gf4() { return Field::make(2, 2); }

Matrix su42_form() {
  return Matrix(gf4(), {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

bool su42_contains(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4 || m.field()->q() != 4 || m.field()->p() != 2)
    throw InvalidInput("su42_contains expects a 4x4 matrix over GF(4)");
  if (m.determinant() != 1) return false;
  static const Matrix F = su42_form();
  return m * F * m.frobenius().transpose() == F;
}

Field::Elem su42_pair(const std::vector<Field::Elem>& v, const std::vector<Field::Elem>& w) {
  static const FieldPtr field = gf4();
  const Field& f = *field;
  // F pairs coordinate 0 with 1 and 2 with 3.
  static constexpr int partner[4] = {1, 0, 3, 2};
  Field::Elem s = 0;
  for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(v[i], f.frobenius(w[partner[i]])));
  return s;
}

namespace {

std::vector<Field::Elem> row(const Matrix& m, std::size_t i) {
  return {m(i, 0), m(i, 1), m(i, 2), m(i, 3)};
}

struct PlaneTable {
  std::vector<IsotropicPlane> planes;
  std::map<std::vector<Field::Elem>, std::size_t> index;
};

const PlaneTable& plane_table() {
  static const PlaneTable table = [] {
    FieldPtr f = gf4();
    std::map<std::vector<Field::Elem>, Matrix> found;
    for (Field::Elem a = 1; a < 256; ++a)
      for (Field::Elem b = a + 1; b < 256; ++b) {
        Matrix m(f, 2, 4);
        for (int j = 0; j < 4; ++j) {
          m(0, j) = (a >> (2 * j)) & 3;
          m(1, j) = (b >> (2 * j)) & 3;
        }
        if (m.rank() != 2) continue;
        Matrix r = m.rref();
        auto v = row(r, 0), w = row(r, 1);
        if (su42_pair(v, v) || su42_pair(v, w) || su42_pair(w, v) || su42_pair(w, w)) continue;
        found.emplace(r.entries(), r);
      }
    PlaneTable t;
    for (auto& [key, m] : found) {
      t.index.emplace(key, t.planes.size());
      t.planes.push_back({m});
    }
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<IsotropicPlane>& isotropic_planes() { return plane_table().planes; }

std::size_t plane_index(const Matrix& rows) {
  if (rows.rows() != 2 || rows.cols() != 4) throw InvalidInput("plane basis must be 2x4");
  Matrix r = rows.rref();
  auto it = plane_table().index.find(r.entries());
  if (it == plane_table().index.end()) throw DomainError("rows do not span an isotropic plane");
  return it->second;
}

std::size_t plane_w_index() {
  return plane_index(Matrix(gf4(), {{1, 0, 0, 0}, {0, 0, 1, 0}}));
}

Permutation action_on_planes(const Matrix& m) {
  if (!su42_contains(m)) throw DomainError("matrix is not in SU_4(2)");
  const auto& planes = isotropic_planes();
  std::vector<Point> img(planes.size());
  for (std::size_t i = 0; i < planes.size(); ++i)
    img[i] = static_cast<Point>(plane_index(planes[i].basis * m));
  return Permutation(std::move(img));
}

std::pair<Matrix, Matrix> su42_witness_matrices() {
  // Encodings: 1 -> 1, w -> 2, w^2 -> 3.
  const Field::Elem o = 1, w = 2, w2 = 3;
  Matrix a(gf4(), {{o, w, o, w2}, {w2, o, w, o}, {o, w2, o, w}, {w2, w, w, w2}});
  Matrix b(gf4(), {{1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  return {a, b};
}

std::vector<Matrix> su42_generators(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Field::Elem> entry(0, 3);
  std::vector<Matrix> gens;
  PermGroup g = PermGroup::trivial(27);
  for (std::uint64_t trial = 0; g.order() < 25920; ++trial) {
    if (trial > 100'000'000) throw Error("su42_generators: random search did not converge");
    Matrix m(gf4(), 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
    if (!su42_contains(m)) continue;
    Permutation a = action_on_planes(m);
    if (g.contains(a)) continue;
    g = g.with_generators({a});
    gens.push_back(m);
  }
  return gens;
}

PermGroup su42_plane_group(std::uint64_t seed) {
  std::vector<Permutation> perms;
  for (const auto& m : su42_generators(seed)) perms.push_back(action_on_planes(m));
  return PermGroup::from_generators(std::move(perms));
}

}  // namespace hgl
