#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "latnorm/numeric.hpp"

namespace latnorm {

/// Exact integer vector of the character lattice M (d = 2 or 3). The same
/// type carries covectors of the dual lattice N (facet normals, slicing
/// directions); the pairing is dot().
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<Int> coords);
  Vec(Int x, Int y);
  Vec(Int x, Int y, Int z);
  Vec(std::initializer_list<long long> coords);

  static Vec zero(int dim);

  int dim() const { return static_cast<int>(c_.size()); }
  const Int& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& coords() const { return c_; }

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Int& k) const;

  bool operator==(const Vec& o) const { return c_ == o.c_; }
  bool operator!=(const Vec& o) const { return c_ != o.c_; }
  // Lexicographic; the ordering used for every deterministically emitted set.
  bool operator<(const Vec& o) const;

  bool is_zero() const;
  Int dot(const Vec& o) const;
  // gcd of absolute values of the entries (0 for the zero vector).
  Int content() const;
  // this / content(); zero vector unchanged.
  Vec primitive() const;
  // Sign-normalized representative of {v, -v}: first nonzero entry positive.
  Vec canonical_sign() const;

  std::string str() const;

 private:
  std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const Vec& v);

using Point = Vec;
using Covector = Vec;

/// Rational point, used only for hyperplane sections and H-to-V solves.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::vector<Rat> coords);
  explicit RatVec(const Vec& v);

  int dim() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  bool operator==(const RatVec& o) const { return c_ == o.c_; }
  bool operator<(const RatVec& o) const;

  bool is_integral() const;
  Vec to_vec() const;  // requires is_integral()
  Rat dot(const Vec& w) const;

  std::string str() const;

 private:
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const RatVec& v);

/// Small dense integer matrix (d <= 3 in practice).
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);
  static Mat identity(int d);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Vec apply(const Vec& v) const;     // matrix * column vector
  RatVec apply(const RatVec& v) const;
  Mat mul(const Mat& o) const;
  Int det() const;                   // square, size <= 3
  // Exact inverse of a matrix with det = +-1.
  Mat inverse_unimodular() const;

  bool operator==(const Mat& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// det[b-a, c-a] for 2D points; works for Int coordinates.
Int cross2(const Vec& a, const Vec& b, const Vec& c);

/// Basis data for the affine lattice hyperplane {x : <normal, x> = offset}
/// with primitive normal: to_plane is a bijection from hyperplane lattice
/// points onto Z^(d-1), from_plane its inverse.
class PlaneBasis {
 public:
  PlaneBasis(const Covector& normal, const Int& offset);

  Vec to_plane(const Point& p) const;       // p must satisfy the equation
  Point from_plane(const Vec& plane_coords) const;

 private:
  Covector normal_;
  Int offset_;
  Mat v_;      // unimodular, normal * v_ = e1
  Mat v_inv_;
};

}  // namespace latnorm
