#pragma once

#include <vector>

#include "fredkit/numkit.hpp"

namespace fredkit::laurent {

// Finite-dimensional base ring: a direct sum of full matrix blocks,
// described by their sizes. The scalar model is a single block of size 1.
class BaseRing {
 public:
  explicit BaseRing(std::vector<int> block_sizes);
  static BaseRing scalar() { return BaseRing({1}); }

  int block_count() const { return static_cast<int>(sizes_.size()); }
  int block_size(int b) const { return sizes_.at(static_cast<size_t>(b)); }
  int total_dim() const;

  bool operator==(const BaseRing& other) const { return sizes_ == other.sizes_; }
  bool operator!=(const BaseRing& other) const { return !(*this == other); }

  const std::vector<int>& sizes() const { return sizes_; }

 private:
  std::vector<int> sizes_;
};

// One block-diagonal coefficient: a square matrix per ring block.
using BlockCoeff = std::vector<num::ComplexMatrix>;

inline constexpr int kDegreeCap = 12;
inline constexpr double kDefaultRootMargin = 0.1;
inline constexpr int kSupNormGridSize = 1024;

// Finitely supported Laurent symbol with block-diagonal coefficients.
// The edge coefficients of the support range are kept nonzero.
class LaurentPoly {
 public:
  explicit LaurentPoly(BaseRing ring);

  static LaurentPoly zero(const BaseRing& ring) { return LaurentPoly(ring); }
  static LaurentPoly one(const BaseRing& ring);
  // scale * z^degree times the ring identity
  static LaurentPoly monomial(const BaseRing& ring, int degree,
                              num::Complex scale = num::Complex(1.0, 0.0));
  // Per-block monomials z^{degree_b} (identity coefficient in each block).
  static LaurentPoly block_monomials(const BaseRing& ring,
                                     const std::vector<long>& degrees);
  // Scalar-ring convenience: coefficients for degrees lo, lo+1, ...
  static LaurentPoly scalar_poly(int lo, const std::vector<num::Complex>& coeffs);

  const BaseRing& ring() const { return ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }

  BlockCoeff coeff(int degree) const;
  num::ComplexMatrix coeff_block(int degree, int block) const;

  void add_term(int degree, const BlockCoeff& c);
  void add_term_block(int degree, int block, const num::ComplexMatrix& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(num::Complex scale);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(num::Complex s, LaurentPoly f) { return f *= s; }
  LaurentPoly operator-() const;

  num::ComplexMatrix eval_block(int block, num::Complex z) const;

  // Largest entry magnitude over all coefficients; 0 for the zero symbol.
  double max_abs() const;
  // Drop coefficients whose entries are all <= eps in magnitude and
  // re-tighten the support range.
  void trim(double eps = 0.0);

 private:
  void ensure_degree(int degree);
  BlockCoeff zero_coeff() const;

  BaseRing ring_;
  int lo_ = 0;
  std::vector<BlockCoeff> coeffs_;  // degree lo_ + i; empty means zero
};

LaurentPoly symbol_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly symbol_adjoint(const LaurentPoly& f);

// Certified upper bound for sup_{|z|=1} ||f(z)||: per block the smaller of
// the coefficient-norm sum and the grid bound over kSupNormGridSize roots of
// unity with a first-derivative correction, maximized over blocks.
double sup_norm_upper(const LaurentPoly& f);

// Determinant of one block as a scalar-ring Laurent symbol (Leibniz
// expansion; block sizes up to 3).
LaurentPoly block_determinant(const LaurentPoly& f, int block);

// Roots of a polynomial given by ascending coefficients, via the companion
// matrix. The leading coefficient must be nonzero after trimming.
std::vector<num::Complex> polynomial_roots(std::vector<num::Complex> coeffs);

// Winding number of the block determinants around the origin. Fails with
// RootNearCircle when any determinant root has modulus within margin of 1.
std::vector<long> winding_number(const LaurentPoly& f,
                                 double margin = kDefaultRootMargin);

struct WienerHopf {
  LaurentPoly minus;          // polynomial in z^{-1}, outer roots after inversion
  std::vector<long> winding;  // per block
  LaurentPoly plus;           // polynomial in z, roots outside the closed disc

  // Per-block monomial z^{winding_b}, so that f = minus * shift() * plus.
  LaurentPoly shift() const;
};

// Wiener-Hopf factorization of a symbol with scalar blocks.
WienerHopf wiener_hopf_factorize(const LaurentPoly& f,
                                 double margin = kDefaultRootMargin);

}  // namespace fredkit::laurent
