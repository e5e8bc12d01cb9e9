#include "latnorm/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "latnorm/error.hpp"

namespace latnorm {

Vec::Vec(std::vector<Int> coords) : c_(std::move(coords)) {}

Vec::Vec(Int x, Int y) { c_ = {std::move(x), std::move(y)}; }

Vec::Vec(Int x, Int y, Int z) { c_ = {std::move(x), std::move(y), std::move(z)}; }

Vec::Vec(std::initializer_list<long long> coords) {
  c_.reserve(coords.size());
  for (long long v : coords) c_.emplace_back(v);
}

Vec Vec::zero(int dim) {
  return Vec(std::vector<Int>(static_cast<std::size_t>(dim), Int(0)));
}

namespace {

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "mixing vectors of dimension " + std::to_string(a.dim()) +
                    " and " + std::to_string(b.dim()));
  }
}

}  // namespace

Vec Vec::operator+(const Vec& o) const {
  require_same_dim(*this, o);
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
  return Vec(std::move(r));
}

Vec Vec::operator-(const Vec& o) const {
  require_same_dim(*this, o);
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return Vec(std::move(r));
}

Vec Vec::operator-() const {
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Vec(std::move(r));
}

Vec Vec::scaled(const Int& k) const {
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return Vec(std::move(r));
}

bool Vec::operator<(const Vec& o) const {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

bool Vec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

Int Vec::dot(const Vec& o) const {
  require_same_dim(*this, o);
  Int s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * o.c_[i];
  return s;
}

Int Vec::content() const {
  Int g = 0;
  for (const Int& v : c_) g = gcd(g, v);
  return g;
}

Vec Vec::primitive() const {
  Int g = content();
  if (g <= 1) return *this;
  std::vector<Int> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
  return Vec(std::move(r));
}

Vec Vec::canonical_sign() const {
  for (const Int& v : c_) {
    if (v > 0) return *this;
    if (v < 0) return -*this;
  }
  return *this;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Vec& v) { return os << v.str(); }

RatVec::RatVec(std::vector<Rat> coords) : c_(std::move(coords)) {}

RatVec::RatVec(const Vec& v) {
  c_.reserve(static_cast<std::size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) c_.emplace_back(v[i]);
}

bool RatVec::operator<(const RatVec& o) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

bool RatVec::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rat& r) { return latnorm::is_integral(r); });
}

Vec RatVec::to_vec() const {
  std::vector<Int> r;
  r.reserve(c_.size());
  for (const Rat& x : c_) {
    if (!latnorm::is_integral(x)) {
      throw Error(ErrorKind::Internal, "to_vec on non-integral point " + str());
    }
    r.push_back(boost::multiprecision::numerator(x));
  }
  return Vec(std::move(r));
}

Rat RatVec::dot(const Vec& w) const {
  if (dim() != w.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "rational dot dimension mismatch");
  }
  Rat s = 0;
  for (int i = 0; i < dim(); ++i) s += c_[static_cast<std::size_t>(i)] * Rat(w[i]);
  return s;
}

std::string RatVec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatVec& v) {
  return os << v.str();
}

Mat::Mat(int rows, int cols)
    : rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows * cols), Int(0)) {}

Mat Mat::identity(int d) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyInput, "matrix with no rows");
  Mat m(static_cast<int>(rows.size()), rows[0].dim());
  for (int i = 0; i < m.rows_; ++i) {
    if (rows[static_cast<std::size_t>(i)].dim() != m.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][j];
  }
  return m;
}

Vec Mat::row(int i) const {
  std::vector<Int> r(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
  return Vec(std::move(r));
}

Vec Mat::col(int j) const {
  std::vector<Int> r(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) r[static_cast<std::size_t>(i)] = at(i, j);
  return Vec(std::move(r));
}

Vec Mat::apply(const Vec& v) const {
  if (v.dim() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector dimension mismatch");
  }
  std::vector<Int> r(static_cast<std::size_t>(rows_), Int(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(i)] += at(i, j) * v[j];
  }
  return Vec(std::move(r));
}

RatVec Mat::apply(const RatVec& v) const {
  if (v.dim() != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector dimension mismatch");
  }
  std::vector<Rat> r(static_cast<std::size_t>(rows_), Rat(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      r[static_cast<std::size_t>(i)] += Rat(at(i, j)) * v[j];
    }
  }
  return RatVec(std::move(r));
}

Mat Mat::mul(const Mat& o) const {
  if (cols_ != o.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
  }
  Mat m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  }
  return m;
}

Int Mat::det() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "det of non-square matrix");
  switch (rows_) {
    case 1:
      return at(0, 0);
    case 2:
      return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    case 3:
      return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
             at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
             at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    default:
      throw Error(ErrorKind::DimensionMismatch, "det only implemented for d <= 3");
  }
}

Mat Mat::inverse_unimodular() const {
  Int d = det();
  if (d != 1 && d != -1) {
    throw Error(ErrorKind::NotUnimodular, "matrix determinant is " + d.str());
  }
  Mat inv(rows_, cols_);
  if (rows_ == 1) {
    inv.at(0, 0) = d;  // 1/d == d for d = +-1
    return inv;
  }
  if (rows_ == 2) {
    inv.at(0, 0) = at(1, 1) * d;
    inv.at(0, 1) = -at(0, 1) * d;
    inv.at(1, 0) = -at(1, 0) * d;
    inv.at(1, 1) = at(0, 0) * d;
    return inv;
  }
  // adjugate / det for 3x3
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor expansion written cyclically so no sign bookkeeping is needed
      inv.at(j, i) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * d;
    }
  }
  return inv;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Int cross2(const Vec& a, const Vec& b, const Vec& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

PlaneBasis::PlaneBasis(const Covector& normal, const Int& offset)
    : normal_(normal), offset_(offset) {
  if (normal.is_zero() || normal.content() != 1) {
    throw Error(ErrorKind::ConstraintViolation,
                "plane normal must be primitive, got " + normal.str());
  }
  int d = normal.dim();
  Mat v = Mat::identity(d);
  std::vector<Int> work = normal.coords();

  auto nonzero_count = [&work]() {
    int c = 0;
    for (const Int& x : work) c += (x != 0);
    return c;
  };
  auto smallest_nonzero = [&work, d]() {
    int best = -1;
    for (int j = 0; j < d; ++j) {
      const Int& x = work[static_cast<std::size_t>(j)];
      if (x == 0) continue;
      if (best < 0 || boost::multiprecision::abs(x) <
                          boost::multiprecision::abs(work[static_cast<std::size_t>(best)])) {
        best = j;
      }
    }
    return best;
  };

  while (nonzero_count() > 1) {
    int j0 = smallest_nonzero();
    for (int j = 0; j < d; ++j) {
      if (j == j0 || work[static_cast<std::size_t>(j)] == 0) continue;
      Int q = work[static_cast<std::size_t>(j)] / work[static_cast<std::size_t>(j0)];
      work[static_cast<std::size_t>(j)] -= q * work[static_cast<std::size_t>(j0)];
      for (int i = 0; i < d; ++i) v.at(i, j) -= q * v.at(i, j0);
    }
  }

  int k = smallest_nonzero();
  if (k != 0) {
    for (int i = 0; i < d; ++i) std::swap(v.at(i, 0), v.at(i, k));
    std::swap(work[0], work[static_cast<std::size_t>(k)]);
  }
  if (work[0] < 0) {
    for (int i = 0; i < d; ++i) v.at(i, 0) = -v.at(i, 0);
    work[0] = -work[0];
  }
  if (work[0] != 1) {
    throw Error(ErrorKind::Internal, "plane basis reduction failed");
  }
  v_ = v;
  v_inv_ = v.inverse_unimodular();
}

Vec PlaneBasis::to_plane(const Point& p) const {
  if (normal_.dot(p) != offset_) {
    throw Error(ErrorKind::Internal,
                "point " + p.str() + " is not on the plane");
  }
  Vec y = v_inv_.apply(p);
  std::vector<Int> r;
  r.reserve(static_cast<std::size_t>(y.dim() - 1));
  for (int i = 1; i < y.dim(); ++i) r.push_back(y[i]);
  return Vec(std::move(r));
}

Point PlaneBasis::from_plane(const Vec& plane_coords) const {
  std::vector<Int> y;
  y.reserve(static_cast<std::size_t>(plane_coords.dim() + 1));
  y.push_back(offset_);
  for (int i = 0; i < plane_coords.dim(); ++i) y.push_back(plane_coords[i]);
  return v_.apply(Vec(std::move(y)));
}

}  // namespace latnorm
