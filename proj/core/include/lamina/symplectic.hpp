#pragma once

#include <optional>

#include "lamina/complexification.hpp"
#include "lamina/linalg.hpp"

namespace lamina {

using Mat = Matrix<ValuedScalar>;
using CMat = Matrix<ComplexScalar>;

// standard symplectic form <(x1,y1),(x2,y2)> = x1^T y2 - y1^T x2
Mat symplectic_form(int n, FieldPtr f);

// Lagrangian subspace of F^{2n}: either the chart <(X; Id)> with X symmetric,
// the distinguished ell_infinity = <(Id; 0)>, or a rank-n isotropic frame.
// Frames transverse to ell_infinity are reduced to charts eagerly.
class Lagrangian {
 public:
  static Lagrangian chart(Mat x);              // X symmetric (checked)
  static Lagrangian infinity(int n, FieldPtr f);
  static Lagrangian frame(Mat b);              // 2n x n, isotropic, full rank (checked)
  static Lagrangian zero_chart(int n, FieldPtr f) {
    return chart(Mat::zero(n, n, f));
  }

  int n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  bool is_infinity() const { return infinity_; }
  bool has_chart() const { return !infinity_; }
  const Mat& chart_matrix() const;
  Mat frame_matrix() const;  // canonical frame: (X; Id) or (Id; 0)

  bool same_mod_precision(const Lagrangian& o) const;

  Lagrangian() = default;  // empty placeholder; only assigned-to

 private:
  int n_ = 0;
  FieldPtr field_;
  bool infinity_ = false;
  Mat chart_;  // valid when !infinity_
};

// element of Sp(2n, F); the block relations are verified on construction
class SpElement {
 public:
  explicit SpElement(Mat m);
  static SpElement identity(int n, FieldPtr f);
  static SpElement from_blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d);
  // [[I, S], [0, I]] for symmetric S
  static SpElement translation(const Mat& s);
  // [[U, 0], [0, U^-T]] for invertible U
  static SpElement gl_block(const Mat& u);
  // the standard symplectic involution J
  static SpElement j_involution(int n, FieldPtr f);

  int n() const { return n_; }
  const Mat& matrix() const { return m_; }
  FieldPtr field() const { return m_.field(); }
  Mat block_a() const { return m_.block(0, 0, n_, n_); }
  Mat block_b() const { return m_.block(0, n_, n_, n_); }
  Mat block_c() const { return m_.block(n_, 0, n_, n_); }
  Mat block_d() const { return m_.block(n_, n_, n_, n_); }

  SpElement operator*(const SpElement& o) const;
  SpElement inverse() const;  // exact: J^-1 g^T J rearrangement, no division

  Lagrangian apply(const Lagrangian& l) const;

 private:
  SpElement() = default;
  int n_;
  Mat m_;
};

bool is_symplectic(const Mat& m);

// det of the stacked frame [F1 F2] distinguishable from zero
bool transverse(const Lagrangian& l1, const Lagrangian& l2);

// Maslov form Q_{(l1,l2,l3)}(v) = <v, v'> on l1, v' in l3 with v + v' in l2,
// expressed in the canonical frame basis of l1.
Mat maslov_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);
Signature maslov(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);
int maslov_tau(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

bool is_maximal(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);
bool is_minimal(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);
// every cyclically consecutive triple maximal
bool is_maximal_quadruple(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                          const Lagrangian& l4);

// m in the open interval (l, l'): the triple (l, m, l') is maximal
inline bool interval_member(const Lagrangian& l, const Lagrangian& m, const Lagrangian& lp) {
  return is_maximal(l, m, lp);
}

// crossratio endomorphism of l1: project onto l4 parallel to l3, then onto l1
// parallel to l2; returned in the canonical frame basis of l1
Mat crossratio_matrix(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                      const Lagrangian& l4);

// chart-coordinate formula (X1-X2)^-1 (X2-X4)(X3-X4)^-1 (X1-X3); requires all
// four charts
Mat crossratio_matrix_chart(const Mat& x1, const Mat& x2, const Mat& x3, const Mat& x4);

// det R, inverse-free: det[F2 F4] det[F1 F3] / (det[F1 F2] det[F3 F4]) on
// stacked frames; agrees with det(crossratio_matrix) and handles
// ell_infinity without chart moves
ValuedScalar det_crossratio(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3,
                            const Lagrangian& l4);

// M in Sp(2n) with M ell_0 = l1 and M ell_infinity = l3 (columns: a frame of
// l3 and the symplectically dual frame of l1)
SpElement symplectic_basis(const Lagrangian& l1, const Lagrangian& l3);

}  // namespace lamina
