/**
 * Copyright 2026, the qmv authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

/**
 * @file    core.hpp
 * @brief   Exact rationals, dense complex/rational matrices and the Choi calculus
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>
#include <json.hpp>

namespace qmv {

using Rational = mpq_class;
using Integer = mpz_class;
using complex_t = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// All numerical tolerances live here.
struct Tolerances {
  static constexpr double herm = 1e-12;
  static constexpr double trace = 1e-12;
  static constexpr double psd = 1e-10;
  static constexpr double cptp = 1e-10;
  static constexpr double rank = 1e-8;
};

class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string &s) {
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational &r) { return r.get_str(); }

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

//============================================================================
// QMatrix: exact rational dense matrix, row-major
//============================================================================

class QMatrix {
public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static QMatrix identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; i++)
      m(i, i) = 1;
    return m;
  }

  // Build from an integer table and a common denominator.
  static QMatrix from_ints(const std::vector<std::vector<long>> &rows, long denom = 1) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < m.rows_; i++) {
      if (rows[i].size() != m.cols_)
        throw dimension_error("QMatrix::from_ints: ragged rows");
      for (size_t j = 0; j < m.cols_; j++)
        m(i, j) = make_rational(rows[i][j], denom);
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational &operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  QMatrix operator+(const QMatrix &o) const {
    check_same(o);
    QMatrix r(*this);
    for (size_t k = 0; k < data_.size(); k++)
      r.data_[k] += o.data_[k];
    return r;
  }
  QMatrix operator-(const QMatrix &o) const {
    check_same(o);
    QMatrix r(*this);
    for (size_t k = 0; k < data_.size(); k++)
      r.data_[k] -= o.data_[k];
    return r;
  }
  QMatrix operator*(const Rational &s) const {
    QMatrix r(*this);
    for (auto &x : r.data_)
      x *= s;
    return r;
  }
  QMatrix operator*(const QMatrix &o) const {
    if (cols_ != o.rows_)
      throw dimension_error("QMatrix product: inner dimension mismatch");
    QMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; i++)
      for (size_t k = 0; k < cols_; k++) {
        const Rational &a = (*this)(i, k);
        if (a == 0)
          continue;
        for (size_t j = 0; j < o.cols_; j++)
          r(i, j) += a * o(k, j);
      }
    return r;
  }
  bool operator==(const QMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const QMatrix &o) const { return !(*this == o); }

  QMatrix transpose() const {
    QMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; i++)
      for (size_t j = 0; j < cols_; j++)
        r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

  Rational trace() const {
    Rational t = 0;
    for (size_t i = 0; i < std::min(rows_, cols_); i++)
      t += (*this)(i, i);
    return t;
  }

  CMatrix to_cmatrix() const {
    CMatrix m(rows_, cols_);
    for (size_t i = 0; i < rows_; i++)
      for (size_t j = 0; j < cols_; j++)
        m(i, j) = (*this)(i, j).get_d();
    return m;
  }

  // Row i as a vector of entries (for printing tables).
  const std::vector<Rational> &data() const { return data_; }

private:
  void check_same(const QMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw dimension_error("QMatrix: shape mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

//============================================================================
// Kronecker products and partial traces
//============================================================================

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); i++)
    for (Eigen::Index j = 0; j < a.cols(); j++)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

inline QMatrix kron(const QMatrix &a, const QMatrix &b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); i++)
    for (size_t j = 0; j < a.cols(); j++) {
      if (a(i, j) == 0)
        continue;
      for (size_t k = 0; k < b.rows(); k++)
        for (size_t l = 0; l < b.cols(); l++)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

enum class Subsystem { first, second };

namespace detail {
template <class M, class Get, class Make>
auto partial_trace_impl(const M &m, size_t rows, size_t d1, size_t d2, Subsystem which,
                        Get get, Make make) {
  if (rows != d1 * d2)
    throw dimension_error("partial_trace: matrix dimension is not d1*d2");
  if (which == Subsystem::second) {
    auto r = make(d1);
    for (size_t a = 0; a < d1; a++)
      for (size_t b = 0; b < d1; b++)
        for (size_t k = 0; k < d2; k++)
          get(r, a, b) += get(m, a * d2 + k, b * d2 + k);
    return r;
  }
  auto r = make(d2);
  for (size_t a = 0; a < d2; a++)
    for (size_t b = 0; b < d2; b++)
      for (size_t k = 0; k < d1; k++)
        get(r, a, b) += get(m, k * d2 + a, k * d2 + b);
  return r;
}
} // namespace detail

inline CMatrix partial_trace(const CMatrix &m, size_t d1, size_t d2, Subsystem which) {
  if (m.rows() != m.cols())
    throw dimension_error("partial_trace: matrix not square");
  return detail::partial_trace_impl(
      m, static_cast<size_t>(m.rows()), d1, d2, which,
      [](auto &x, size_t i, size_t j) -> decltype(auto) { return x(i, j); },
      [](size_t d) -> CMatrix { return CMatrix::Zero(d, d); });
}

inline QMatrix partial_trace(const QMatrix &m, size_t d1, size_t d2, Subsystem which) {
  if (m.rows() != m.cols())
    throw dimension_error("partial_trace: matrix not square");
  return detail::partial_trace_impl(
      m, m.rows(), d1, d2, which,
      [](auto &x, size_t i, size_t j) -> decltype(auto) { return x(i, j); },
      [](size_t d) { return QMatrix(d, d); });
}

//============================================================================
// Choi calculus. Convention: J = sum_ij Phi(|i><j|) (x) |i><j|, output first.
//============================================================================

// Tr_2[J (I (x) rho^T)]; entry (a,b) = sum_{x,y} J[(a,x),(b,y)] rho[x,y].
inline CMatrix choi_apply(const CMatrix &j, const CMatrix &rho, size_t d_out, size_t d_in) {
  if (static_cast<size_t>(j.rows()) != d_out * d_in || j.rows() != j.cols())
    throw dimension_error("choi_apply: Choi matrix dimension mismatch");
  if (static_cast<size_t>(rho.rows()) != d_in || rho.rows() != rho.cols())
    throw dimension_error("choi_apply: input dimension mismatch");
  CMatrix out = CMatrix::Zero(d_out, d_out);
  for (size_t a = 0; a < d_out; a++)
    for (size_t b = 0; b < d_out; b++)
      out(a, b) = (j.block(a * d_in, b * d_in, d_in, d_in).array() * rho.array()).sum();
  return out;
}

inline QMatrix choi_apply(const QMatrix &j, const QMatrix &rho, size_t d_out, size_t d_in) {
  if (j.rows() != d_out * d_in || j.rows() != j.cols())
    throw dimension_error("choi_apply: Choi matrix dimension mismatch");
  if (rho.rows() != d_in || rho.cols() != d_in)
    throw dimension_error("choi_apply: input dimension mismatch");
  QMatrix out(d_out, d_out);
  for (size_t a = 0; a < d_out; a++)
    for (size_t b = 0; b < d_out; b++)
      for (size_t x = 0; x < d_in; x++)
        for (size_t y = 0; y < d_in; y++)
          out(a, b) += j(a * d_in + x, b * d_in + y) * rho(x, y);
  return out;
}

// J = sum_i |K_i>><<K_i| with |K>> = sum_ij K_ij |i>|j>.
inline CMatrix choi_from_kraus(const std::vector<CMatrix> &kraus) {
  if (kraus.empty())
    throw dimension_error("choi_from_kraus: empty Kraus list");
  const auto d_out = kraus[0].rows(), d_in = kraus[0].cols();
  CMatrix j = CMatrix::Zero(d_out * d_in, d_out * d_in);
  for (const auto &k : kraus) {
    CVector v(d_out * d_in);
    for (Eigen::Index a = 0; a < d_out; a++)
      for (Eigen::Index x = 0; x < d_in; x++)
        v(a * d_in + x) = k(a, x);
    j += v * v.adjoint();
  }
  return j;
}

inline CMatrix kraus_apply(const std::vector<CMatrix> &kraus, const CMatrix &rho) {
  CMatrix out = CMatrix::Zero(kraus.at(0).rows(), kraus.at(0).rows());
  for (const auto &k : kraus)
    out += k * rho * k.adjoint();
  return out;
}

inline Eigen::VectorXd hermitian_eigenvalues(const CMatrix &m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

struct CptpReport {
  bool is_cp = false;
  bool is_tp = false;
  double min_eigenvalue = 0;
  double tp_residual = 0;
};

inline CptpReport check_cptp(const CMatrix &j, size_t d_out, size_t d_in) {
  if (static_cast<size_t>(j.rows()) != d_out * d_in || j.rows() != j.cols())
    throw dimension_error("check_cptp: dimension mismatch");
  CptpReport r;
  CMatrix h = (j + j.adjoint()) / 2.0;
  r.min_eigenvalue = hermitian_eigenvalues(h).minCoeff();
  CMatrix tr1 = partial_trace(j, d_out, d_in, Subsystem::first);
  r.tp_residual = (tr1 - CMatrix::Identity(d_in, d_in)).cwiseAbs().maxCoeff();
  r.is_cp = r.min_eigenvalue >= -Tolerances::cptp &&
            (j - j.adjoint()).cwiseAbs().maxCoeff() <= Tolerances::cptp;
  r.is_tp = r.tp_residual <= Tolerances::cptp;
  return r;
}

inline CptpReport check_cptp(const QMatrix &j, size_t d_out, size_t d_in) {
  return check_cptp(j.to_cmatrix(), d_out, d_in);
}

// <psi|rho|psi>
inline double fidelity(const CVector &psi, const CMatrix &rho) {
  if (psi.size() != rho.rows() || rho.rows() != rho.cols())
    throw dimension_error("fidelity: dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("fidelity: psi is not normalized");
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

struct DensityReport {
  double herm_residual = 0;
  double trace_residual = 0;
  double min_eigenvalue = 0;
  bool ok = false;
};

inline DensityReport check_density(const CMatrix &rho) {
  DensityReport r;
  r.herm_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  r.trace_residual = std::abs(rho.trace() - complex_t(1.0));
  r.min_eigenvalue = hermitian_eigenvalues((rho + rho.adjoint()) / 2.0).minCoeff();
  r.ok = r.herm_residual <= Tolerances::herm && r.trace_residual <= Tolerances::trace &&
         r.min_eigenvalue >= -Tolerances::psd;
  return r;
}

inline double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("max_abs_diff: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

// Bloch-vector qubit state 1/2 (I + x X + y Y + z Z).
inline CMatrix bloch_state(double x, double y, double z) {
  CMatrix r(2, 2);
  r << complex_t(1 + z, 0) / 2.0, complex_t(x, -y) / 2.0, complex_t(x, y) / 2.0,
      complex_t(1 - z, 0) / 2.0;
  return r;
}

// Best rational approximation with denominator <= max_den (continued fractions).
inline Rational rationalize(double x, long max_den = 1000000) {
  if (!std::isfinite(x))
    throw std::domain_error("rationalize: non-finite value");
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; it++) {
    double a = std::floor(v);
    if (std::abs(a) > 1e15)
      break;
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den)
      break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - a;
    if (std::abs(frac) < 1e-14 || std::abs(static_cast<double>(p1) / q1 - x) < 1e-15)
      break;
    v = 1.0 / frac;
  }
  return make_rational(p1, q1);
}

//============================================================================
// JSON serialization: {"rows":r,"cols":c,"entries":[...]} row-major
//============================================================================

inline nlohmann::json to_json(const QMatrix &m) {
  nlohmann::json e = nlohmann::json::array();
  for (size_t i = 0; i < m.rows(); i++)
    for (size_t j = 0; j < m.cols(); j++)
      e.push_back(m(i, j).get_str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

inline nlohmann::json to_json(const CMatrix &m) {
  nlohmann::json e = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); i++)
    for (Eigen::Index j = 0; j < m.cols(); j++)
      e.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

inline QMatrix qmatrix_from_json(const nlohmann::json &j) {
  const size_t r = j.at("rows"), c = j.at("cols");
  const auto &e = j.at("entries");
  if (e.size() != r * c)
    throw dimension_error("qmatrix_from_json: entry count mismatch");
  QMatrix m(r, c);
  for (size_t k = 0; k < r * c; k++)
    m(k / c, k % c) = parse_rational(e[k].get<std::string>());
  return m;
}

inline CMatrix cmatrix_from_json(const nlohmann::json &j) {
  const size_t r = j.at("rows"), c = j.at("cols");
  const auto &e = j.at("entries");
  if (e.size() != r * c)
    throw dimension_error("cmatrix_from_json: entry count mismatch");
  CMatrix m(r, c);
  for (size_t k = 0; k < r * c; k++)
    m(k / c, k % c) = complex_t(e[k][0].get<double>(), e[k][1].get<double>());
  return m;
}

} // namespace qmv
