#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgl/field.hpp"
#include "hgl/perm.hpp"

namespace hgl {

/// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  using Elem = Field::Elem;

  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::vector<std::vector<Elem>> rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;
  /// Entrywise image under the field automorphism x -> x^(p^k).
  Matrix frobenius(unsigned k = 1) const;
  Matrix pow(std::uint64_t k) const;

  Elem determinant() const;
  std::size_t rank() const;
  /// Throws DomainError when singular.
  Matrix inverse() const;

  /// Reduced row echelon form (square or not).
  Matrix rref() const;

  bool is_identity() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  const std::vector<Elem>& entries() const { return a_; }

  /// Row-major nested lists of element strings.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

enum class ProjectiveKind { PSL2, PGL2, PGammaL2 };

/// The group acting on the q+1 points of the projective line over GF(q).
/// Point [x:1] has index x (the field encoding) and the point at infinity
/// has index q.
PermGroup projective_group(ProjectiveKind kind, std::uint32_t q);

/// Image of the projective point with index `pt` under z -> (az+b)/(cz+d).
Point mobius_image(const Field& f, Matrix::Elem a, Matrix::Elem b, Matrix::Elem c,
                   Matrix::Elem d, Point pt);

// ---------------------------------------------------------------------------
// SU_4(2) on the 27 totally isotropic planes of GF(4)^4.
//
// Coordinates are ordered e1, f1, e2, f2 with (e_i, f_j) = delta_ij and all
// other basis pairings zero. Vectors are rows and matrices act on the right.

FieldPtr gf4();

/// The Gram matrix of the form in the basis e1, f1, e2, f2.
Matrix su42_form();

/// det M = 1 and M F conj(M)^T = F.
bool su42_contains(const Matrix& m);

/// Sesquilinear pairing (v, w) = v F conj(w)^T.
Field::Elem su42_pair(const std::vector<Field::Elem>& v, const std::vector<Field::Elem>& w);

/// A totally isotropic 2-dimensional subspace, stored as its 2x4 RREF basis.
struct IsotropicPlane {
  Matrix basis;
  friend bool operator==(const IsotropicPlane& a, const IsotropicPlane& b) {
    return a.basis == b.basis;
  }
};

/// All 27 planes, sorted by RREF entries; list position is the point index.
const std::vector<IsotropicPlane>& isotropic_planes();

/// Index of the plane spanned by the rows of a rank-2 2x4 matrix.
std::size_t plane_index(const Matrix& rows);

/// Index of W = span(e1, e2).
std::size_t plane_w_index();

/// Permutation i -> index(P_i M). For products this is a right action:
/// action(M N) = action(N) * action(M).
Permutation action_on_planes(const Matrix& m);

/// The two order-27 generators: A of order 9, B of order 3 with BA = A^4 B.
std::pair<Matrix, Matrix> su42_witness_matrices();

/// Elements of SU_4(2) found by seeded random search whose plane actions
/// generate a group of order 25920.
std::vector<Matrix> su42_generators(std::uint64_t seed = 1);

/// The plane-action group of SU_4(2) (degree 27, order 25920).
PermGroup su42_plane_group(std::uint64_t seed = 1);

}  // namespace hgl
