#include "rcgeom/projective.hpp"

#include <cmath>
#include <sstream>

#include "rcgeom/errors.hpp"

namespace rc {

ProjPoint parse_point(std::string_view text) {
  ProjPoint x;
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    std::size_t end = text.find_first_of(":,", start);
    if (k == 3) end = text.size();
    if (end == std::string_view::npos)
      fail(ErrorKind::InvalidInput, "surface", "expected four homogeneous coordinates", std::string(text));
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    x[k] = parse_scalar(tok);
    start = end + 1;
  }
  if (is_zero(x)) fail(ErrorKind::InvalidInput, "surface", "all homogeneous coordinates are zero", std::string(text));
  return x;
}

std::string format_point(const Vec4& x) {
  return to_string(x[0]) + ":" + to_string(x[1]) + ":" + to_string(x[2]) + ":" + to_string(x[3]);
}

bool is_zero(const Vec4& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

bool proportional(const Vec4& x, const Vec4& y) {
  if (is_zero(x) || is_zero(y)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

Vec4 canonical(const Vec4& x) {
  const Scalar f = canonical_scale(x);
  return {x[0] * f, x[1] * f, x[2] * f, x[3] * f};
}

ApproxPoint to_approx(const Vec4& x) {
  return {x[0].to_complex(), x[1].to_complex(), x[2].to_complex(), x[3].to_complex()};
}

double projective_distance(const ApproxPoint& x, const ApproxPoint& y) {
  // Lagrange identity |x|²|y|² − |⟨x,y⟩|² = Σ_{i<j} |x_i y_j − x_j y_i|²,
  // which keeps full relative accuracy for nearly equal points.
  double nx = 0, ny = 0, wedge = 0;
  for (int k = 0; k < 4; ++k) {
    nx += std::norm(x[k]);
    ny += std::norm(y[k]);
    for (int j = k + 1; j < 4; ++j) wedge += std::norm(x[k] * y[j] - x[j] * y[k]);
  }
  if (nx == 0 || ny == 0) return 1.0;
  return std::min(1.0, std::sqrt(wedge / (nx * ny)));
}

QuadricForm::QuadricForm() : m_(4, Vector(4, Scalar(0))) {}

QuadricForm::QuadricForm(Matrix m) : m_(std::move(m)) {
  if (m_.size() != 4) fail(ErrorKind::InvalidInput, "surface", "quadric matrix must be 4x4");
  for (const auto& row : m_)
    if (row.size() != 4) fail(ErrorKind::InvalidInput, "surface", "quadric matrix must be 4x4");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m_[i][j] != m_[j][i]) fail(ErrorKind::InvalidInput, "surface", "quadric matrix must be symmetric");
}

QuadricForm QuadricForm::from_upper(const std::array<Scalar, 10>& e) {
  Matrix m(4, Vector(4));
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) m[i][j] = m[j][i] = e[k++];
  return QuadricForm(std::move(m));
}

QuadricForm QuadricForm::from_hompoly(const HomPoly& f) {
  if (!f.is_zero() && f.degree() != 2) fail(ErrorKind::InvalidInput, "surface", "quadric form must have degree 2");
  Matrix m(4, Vector(4, Scalar(0)));
  for (const auto& [e, c] : f.terms()) {
    int idx[2], n = 0;
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r < e[j]; ++r) idx[n++] = j;
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] = c;
    } else {
      m[idx[0]][idx[1]] = m[idx[1]][idx[0]] = c / Scalar(2);
    }
  }
  return QuadricForm(std::move(m));
}

QuadricForm QuadricForm::square(const Plane& u) {
  Matrix m(4, Vector(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = u[i] * u[j];
  return QuadricForm(std::move(m));
}

std::array<Scalar, 10> QuadricForm::upper() const {
  std::array<Scalar, 10> e;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) e[k++] = m_[i][j];
  return e;
}

HomPoly QuadricForm::to_hompoly() const {
  HomPoly f(2);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      HomPoly::Exponent e{0, 0, 0, 0};
      ++e[i];
      ++e[j];
      f.add_term(e, i == j ? m_[i][j] : m_[i][j] * Scalar(2));
    }
  return f;
}

bool QuadricForm::is_zero() const {
  for (const auto& row : m_)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

Scalar QuadricForm::eval(const Vec4& x) const { return bilinear(x, x); }

Scalar QuadricForm::bilinear(const Vec4& x, const Vec4& y) const {
  Scalar acc(0);
  for (int i = 0; i < 4; ++i) {
    if (x[i].is_zero()) continue;
    Scalar row(0);
    for (int j = 0; j < 4; ++j)
      if (!y[j].is_zero()) row += m_[i][j] * y[j];
    acc += x[i] * row;
  }
  return acc;
}

std::complex<double> QuadricForm::eval(const ApproxPoint& x) const {
  std::complex<double> acc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += x[i] * m_[i][j].to_complex() * x[j];
  return acc;
}

Plane QuadricForm::polar(const Vec4& a) const {
  Plane u;
  for (int i = 0; i < 4; ++i) {
    Scalar acc(0);
    for (int j = 0; j < 4; ++j) acc += m_[i][j] * a[j];
    u[i] = acc;
  }
  return u;
}

int QuadricForm::rank() const { return rc::rank(m_); }

QuadricForm QuadricForm::canonical() const {
  const auto e = upper();
  return canonical_scale(e) * *this;
}

bool QuadricForm::proportional(const QuadricForm& o) const {
  if (is_zero() || o.is_zero()) return false;
  const auto x = upper(), y = o.upper();
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

bool QuadricForm::is_sphere() const {
  // Contains the absolute conic x0 = 0, x1² + x2² + x3² = 0 and is regular.
  const Scalar& d = m_[1][1];
  if (d.is_zero() || m_[2][2] != d || m_[3][3] != d) return false;
  if (!m_[1][2].is_zero() || !m_[1][3].is_zero() || !m_[2][3].is_zero()) return false;
  return rank() == 4;
}

QuadricForm& QuadricForm::operator+=(const QuadricForm& o) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m_[i][j] += o.m_[i][j];
  return *this;
}

QuadricForm& QuadricForm::operator*=(const Scalar& c) {
  for (auto& row : m_)
    for (auto& x : row) x *= c;
  return *this;
}

std::string QuadricForm::to_string() const { return to_hompoly().to_string(); }

}  // namespace rc
