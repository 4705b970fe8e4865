#include "fredkit/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace fredkit::laurent {

namespace {

using num::Complex;
using num::ComplexMatrix;

double coeff_max_abs(const BlockCoeff& c) {
  double m = 0.0;
  for (const auto& blk : c) {
    if (blk.size() > 0) m = std::max(m, blk.cwiseAbs().maxCoeff());
  }
  return m;
}

}  // namespace

BaseRing::BaseRing(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
  if (sizes_.empty()) raise(ErrorCode::ParseError, "ring needs at least one block");
  for (int s : sizes_) {
    if (s < 1) raise(ErrorCode::ParseError, "ring block sizes must be positive");
  }
}

int BaseRing::total_dim() const {
  int d = 0;
  for (int s : sizes_) d += s;
  return d;
}

LaurentPoly::LaurentPoly(BaseRing ring) : ring_(std::move(ring)) {}

BlockCoeff LaurentPoly::zero_coeff() const {
  BlockCoeff c;
  c.reserve(static_cast<size_t>(ring_.block_count()));
  for (int b = 0; b < ring_.block_count(); ++b) {
    const int n = ring_.block_size(b);
    c.push_back(ComplexMatrix::Zero(n, n));
  }
  return c;
}

LaurentPoly LaurentPoly::one(const BaseRing& ring) {
  return monomial(ring, 0);
}

LaurentPoly LaurentPoly::monomial(const BaseRing& ring, int degree, Complex scale) {
  LaurentPoly f(ring);
  BlockCoeff c;
  for (int b = 0; b < ring.block_count(); ++b) {
    const int n = ring.block_size(b);
    c.push_back(scale * ComplexMatrix::Identity(n, n));
  }
  f.add_term(degree, c);
  return f;
}

LaurentPoly LaurentPoly::block_monomials(const BaseRing& ring,
                                         const std::vector<long>& degrees) {
  if (static_cast<int>(degrees.size()) != ring.block_count()) {
    raise(ErrorCode::RingMismatch, "one degree per ring block expected");
  }
  LaurentPoly f(ring);
  for (int b = 0; b < ring.block_count(); ++b) {
    const int n = ring.block_size(b);
    f.add_term_block(static_cast<int>(degrees[static_cast<size_t>(b)]), b,
                     ComplexMatrix::Identity(n, n));
  }
  return f;
}

LaurentPoly LaurentPoly::scalar_poly(int lo, const std::vector<Complex>& coeffs) {
  LaurentPoly f(BaseRing::scalar());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    ComplexMatrix c(1, 1);
    c(0, 0) = coeffs[i];
    f.add_term_block(lo + static_cast<int>(i), 0, c);
  }
  f.trim();
  return f;
}

BlockCoeff LaurentPoly::coeff(int degree) const {
  if (is_zero() || degree < lo_ || degree > hi()) return zero_coeff();
  return coeffs_[static_cast<size_t>(degree - lo_)];
}

ComplexMatrix LaurentPoly::coeff_block(int degree, int block) const {
  if (is_zero() || degree < lo_ || degree > hi()) {
    const int n = ring_.block_size(block);
    return ComplexMatrix::Zero(n, n);
  }
  return coeffs_[static_cast<size_t>(degree - lo_)][static_cast<size_t>(block)];
}

void LaurentPoly::ensure_degree(int degree) {
  if (coeffs_.empty()) {
    lo_ = degree;
    coeffs_.push_back(zero_coeff());
    return;
  }
  while (degree < lo_) {
    coeffs_.insert(coeffs_.begin(), zero_coeff());
    --lo_;
  }
  while (degree > hi()) {
    coeffs_.push_back(zero_coeff());
  }
}

void LaurentPoly::add_term(int degree, const BlockCoeff& c) {
  if (static_cast<int>(c.size()) != ring_.block_count()) {
    raise(ErrorCode::RingMismatch, "coefficient has wrong number of blocks");
  }
  ensure_degree(degree);
  auto& dst = coeffs_[static_cast<size_t>(degree - lo_)];
  for (int b = 0; b < ring_.block_count(); ++b) {
    const auto& blk = c[static_cast<size_t>(b)];
    if (blk.rows() != ring_.block_size(b) || blk.cols() != ring_.block_size(b)) {
      raise(ErrorCode::RingMismatch, "coefficient block has wrong size");
    }
    dst[static_cast<size_t>(b)] += blk;
  }
  trim();
}

void LaurentPoly::add_term_block(int degree, int block, const ComplexMatrix& c) {
  if (block < 0 || block >= ring_.block_count()) {
    raise(ErrorCode::RingMismatch, "block index out of range");
  }
  if (c.rows() != ring_.block_size(block) || c.cols() != ring_.block_size(block)) {
    raise(ErrorCode::RingMismatch, "coefficient block has wrong size");
  }
  ensure_degree(degree);
  coeffs_[static_cast<size_t>(degree - lo_)][static_cast<size_t>(block)] += c;
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (ring_ != other.ring_) raise(ErrorCode::RingMismatch, "symbol rings differ");
  if (other.is_zero()) return *this;
  ensure_degree(other.lo_);
  ensure_degree(other.hi());
  for (int d = other.lo_; d <= other.hi(); ++d) {
    auto& dst = coeffs_[static_cast<size_t>(d - lo_)];
    const auto& src = other.coeffs_[static_cast<size_t>(d - other.lo_)];
    for (size_t b = 0; b < dst.size(); ++b) dst[b] += src[b];
  }
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return *this += -other;
}

LaurentPoly& LaurentPoly::operator*=(Complex scale) {
  if (scale == Complex(0.0, 0.0)) {
    coeffs_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) {
    for (auto& blk : c) blk *= scale;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) {
    for (auto& blk : c) blk = -blk;
  }
  return out;
}

ComplexMatrix LaurentPoly::eval_block(int block, Complex z) const {
  const int n = ring_.block_size(block);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  if (is_zero()) return acc;
  // Horner over the polynomial part z^{-lo} f(z), then multiply back.
  for (int d = hi(); d >= lo_; --d) {
    acc = acc * z + coeffs_[static_cast<size_t>(d - lo_)][static_cast<size_t>(block)];
  }
  return acc * std::pow(z, lo_);
}

double LaurentPoly::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, coeff_max_abs(c));
  return m;
}

void LaurentPoly::trim(double eps) {
  while (!coeffs_.empty() && coeff_max_abs(coeffs_.back()) <= eps) {
    coeffs_.pop_back();
  }
  while (!coeffs_.empty() && coeff_max_abs(coeffs_.front()) <= eps) {
    coeffs_.erase(coeffs_.begin());
    ++lo_;
  }
  if (coeffs_.empty()) lo_ = 0;
  if (eps > 0.0) {
    for (auto& c : coeffs_) {
      for (auto& blk : c) {
        blk = blk.unaryExpr([eps](Complex v) {
          return std::abs(v) <= eps ? Complex(0.0, 0.0) : v;
        });
      }
    }
  }
}

LaurentPoly symbol_mul(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.ring() != g.ring()) raise(ErrorCode::RingMismatch, "symbol rings differ");
  LaurentPoly out(f.ring());
  if (f.is_zero() || g.is_zero()) return out;
  for (int df = f.lo(); df <= f.hi(); ++df) {
    for (int dg = g.lo(); dg <= g.hi(); ++dg) {
      for (int b = 0; b < f.ring().block_count(); ++b) {
        const ComplexMatrix prod = f.coeff_block(df, b) * g.coeff_block(dg, b);
        if (prod.isZero(0.0)) continue;
        out.add_term_block(df + dg, b, prod);
      }
    }
  }
  return out;
}

LaurentPoly symbol_adjoint(const LaurentPoly& f) {
  LaurentPoly out(f.ring());
  if (f.is_zero()) return out;
  for (int d = f.lo(); d <= f.hi(); ++d) {
    for (int b = 0; b < f.ring().block_count(); ++b) {
      const ComplexMatrix c = f.coeff_block(d, b);
      if (c.isZero(0.0)) continue;
      out.add_term_block(-d, b, c.adjoint());
    }
  }
  return out;
}

double sup_norm_upper(const LaurentPoly& f) {
  if (f.is_zero()) return 0.0;
  double bound = 0.0;
  for (int b = 0; b < f.ring().block_count(); ++b) {
    double coeff_sum = 0.0;
    double derivative_sum = 0.0;
    for (int d = f.lo(); d <= f.hi(); ++d) {
      const double nrm = num::spectral_norm(f.coeff_block(d, b));
      coeff_sum += nrm;
      derivative_sum += std::abs(d) * nrm;
    }
    double grid_max = 0.0;
    for (int k = 0; k < kSupNormGridSize; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / kSupNormGridSize;
      const Complex z(std::cos(theta), std::sin(theta));
      grid_max = std::max(grid_max, num::spectral_norm(f.eval_block(b, z)));
    }
    const double grid_bound =
        grid_max + std::numbers::pi * derivative_sum / kSupNormGridSize;
    bound = std::max(bound, std::min(coeff_sum, grid_bound));
  }
  return bound;
}

LaurentPoly block_determinant(const LaurentPoly& f, int block) {
  const int n = f.ring().block_size(block);
  if (n > 3) {
    raise(ErrorCode::DegreeCapExceeded,
          "block determinant supports block sizes up to 3");
  }
  // Entry (i,j) of the block as a scalar symbol.
  auto entry = [&](int i, int j) {
    std::vector<Complex> c;
    LaurentPoly s(BaseRing::scalar());
    for (int d = f.lo(); d <= f.hi(); ++d) {
      ComplexMatrix blk = f.coeff_block(d, block);
      ComplexMatrix v(1, 1);
      v(0, 0) = blk(i, j);
      if (v(0, 0) != Complex(0.0, 0.0)) s.add_term_block(d, 0, v);
    }
    return s;
  };
  if (f.is_zero()) return LaurentPoly::zero(BaseRing::scalar());
  if (n == 1) return entry(0, 0);

  static const std::vector<std::vector<int>> perms2 = {{0, 1}, {1, 0}};
  static const std::vector<int> signs2 = {1, -1};
  static const std::vector<std::vector<int>> perms3 = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
  static const std::vector<int> signs3 = {1, 1, 1, -1, -1, -1};

  const auto& perms = (n == 2) ? perms2 : perms3;
  const auto& signs = (n == 2) ? signs2 : signs3;

  LaurentPoly det = LaurentPoly::zero(BaseRing::scalar());
  for (size_t p = 0; p < perms.size(); ++p) {
    LaurentPoly term = LaurentPoly::one(BaseRing::scalar());
    for (int i = 0; i < n; ++i) term = symbol_mul(term, entry(i, perms[p][i]));
    term *= Complex(static_cast<double>(signs[p]), 0.0);
    det += term;
  }
  return det;
}

std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
  const double scale = [&] {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }();
  while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-14 * scale) {
    coeffs.pop_back();
  }
  if (coeffs.size() <= 1) return {};
  const int d = static_cast<int>(coeffs.size()) - 1;
  ComplexMatrix companion = ComplexMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = Complex(1.0, 0.0);
  for (int i = 0; i < d; ++i) {
    companion(i, d - 1) = -coeffs[static_cast<size_t>(i)] / coeffs.back();
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(companion, false);
  std::vector<Complex> roots(es.eigenvalues().begin(), es.eigenvalues().end());
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

namespace {

// Scalar symbol as ascending coefficient vector plus its low degree.
struct ScalarParts {
  int lo = 0;
  std::vector<Complex> coeffs;
};

ScalarParts scalar_parts(const LaurentPoly& det) {
  ScalarParts out;
  if (det.is_zero()) return out;
  out.lo = det.lo();
  for (int d = det.lo(); d <= det.hi(); ++d) {
    out.coeffs.push_back(det.coeff_block(d, 0)(0, 0));
  }
  return out;
}

long winding_of_scalar(const ScalarParts& p, double margin) {
  if (p.coeffs.empty()) {
    raise(ErrorCode::RootNearCircle, "zero symbol cannot be invertible");
  }
  if (static_cast<int>(p.coeffs.size()) - 1 > kDegreeCap) {
    raise(ErrorCode::DegreeCapExceeded,
          "polynomial degree exceeds the supported cap");
  }
  long w = p.lo;
  for (const Complex& root : polynomial_roots(p.coeffs)) {
    const double r = std::abs(root);
    if (std::abs(r - 1.0) < margin) {
      raise(ErrorCode::RootNearCircle,
            "symbol root at modulus " + std::to_string(r));
    }
    if (r < 1.0) ++w;
  }
  return w;
}

}  // namespace

std::vector<long> winding_number(const LaurentPoly& f, double margin) {
  std::vector<long> out;
  out.reserve(static_cast<size_t>(f.ring().block_count()));
  for (int b = 0; b < f.ring().block_count(); ++b) {
    out.push_back(winding_of_scalar(scalar_parts(block_determinant(f, b)), margin));
  }
  return out;
}

LaurentPoly WienerHopf::shift() const {
  return LaurentPoly::block_monomials(minus.ring(), winding);
}

WienerHopf wiener_hopf_factorize(const LaurentPoly& f, double margin) {
  for (int b = 0; b < f.ring().block_count(); ++b) {
    if (f.ring().block_size(b) != 1) {
      raise(ErrorCode::ShapeViolation,
            "wiener_hopf_factorize requires scalar blocks");
    }
  }
  WienerHopf out{LaurentPoly(f.ring()), {}, LaurentPoly(f.ring())};
  for (int b = 0; b < f.ring().block_count(); ++b) {
    const ScalarParts parts = scalar_parts(block_determinant(f, b));
    if (parts.coeffs.empty()) {
      raise(ErrorCode::RootNearCircle, "zero symbol cannot be factorized");
    }
    if (static_cast<int>(parts.coeffs.size()) - 1 > kDegreeCap) {
      raise(ErrorCode::DegreeCapExceeded,
            "polynomial degree exceeds the supported cap");
    }
    std::vector<Complex> inside, outside;
    for (const Complex& root : polynomial_roots(parts.coeffs)) {
      const double r = std::abs(root);
      if (std::abs(r - 1.0) < margin) {
        raise(ErrorCode::RootNearCircle,
              "symbol root at modulus " + std::to_string(r));
      }
      (r < 1.0 ? inside : outside).push_back(root);
    }
    out.winding.push_back(parts.lo + static_cast<long>(inside.size()));

    // f = c z^{lo} prod (z - r_in) prod (z - r_out)
    //   = [prod (1 - r_in z^{-1})] z^{lo + #in} [c prod (z - r_out)].
    std::vector<Complex> minus = {Complex(1.0, 0.0)};  // in z^{-1}, ascending
    for (const Complex& r : inside) {
      std::vector<Complex> next(minus.size() + 1, Complex(0.0, 0.0));
      for (size_t i = 0; i < minus.size(); ++i) {
        next[i] += minus[i];
        next[i + 1] -= r * minus[i];
      }
      minus = std::move(next);
    }
    std::vector<Complex> plus = {parts.coeffs.back()};
    for (const Complex& r : outside) {
      std::vector<Complex> next(plus.size() + 1, Complex(0.0, 0.0));
      for (size_t i = 0; i < plus.size(); ++i) {
        next[i] -= r * plus[i];
        next[i + 1] += plus[i];
      }
      plus = std::move(next);
    }
    for (size_t i = 0; i < minus.size(); ++i) {
      ComplexMatrix c(1, 1);
      c(0, 0) = minus[i];
      if (c(0, 0) != Complex(0.0, 0.0)) {
        out.minus.add_term_block(-static_cast<int>(i), b, c);
      }
    }
    for (size_t i = 0; i < plus.size(); ++i) {
      ComplexMatrix c(1, 1);
      c(0, 0) = plus[i];
      if (c(0, 0) != Complex(0.0, 0.0)) {
        out.plus.add_term_block(static_cast<int>(i), b, c);
      }
    }
  }
  return out;
}

}  // namespace fredkit::laurent
