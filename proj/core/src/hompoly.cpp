#include "rcgeom/hompoly.hpp"

#include <cctype>
#include <sstream>

#include "rcgeom/errors.hpp"

namespace rc {

HomPoly HomPoly::variable(int j) {
  HomPoly r(1);
  Exponent e{0, 0, 0, 0};
  e[j] = 1;
  r.add_term(e, Scalar(1));
  return r;
}

HomPoly HomPoly::constant(Scalar c) {
  HomPoly r(0);
  r.add_term({0, 0, 0, 0}, c);
  return r;
}

HomPoly HomPoly::linear(const Vec4& u) {
  HomPoly r(1);
  for (int j = 0; j < 4; ++j) {
    Exponent e{0, 0, 0, 0};
    e[j] = 1;
    r.add_term(e, u[j]);
  }
  return r;
}

Scalar HomPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void HomPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e[0] + e[1] + e[2] + e[3] != degree_)
    fail(ErrorKind::Internal, "exactmath", "monomial degree does not match the form degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar HomPoly::eval(const Vec4& x) const {
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar m = c;
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < e[j]; ++k) m *= x[j];
    acc += m;
  }
  return acc;
}

std::complex<double> HomPoly::eval(const std::array<std::complex<double>, 4>& x) const {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> m = c.to_complex();
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < e[j]; ++k) m *= x[j];
    acc += m;
  }
  return acc;
}

HomPoly HomPoly::partial(int j) const {
  HomPoly r(degree_ > 0 ? degree_ - 1 : 0);
  if (degree_ == 0) return r;
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponent f = e;
    --f[j];
    r.add_term(f, c * Scalar(e[j]));
  }
  return r;
}

HomPoly HomPoly::directional(const Vec4& a) const {
  HomPoly r(degree_ > 0 ? degree_ - 1 : 0);
  for (int j = 0; j < 4; ++j)
    if (!a[j].is_zero()) r += partial(j) * a[j];
  return r;
}

HomPoly HomPoly::canonical() const {
  if (is_zero()) return *this;
  std::vector<Scalar> cs;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) cs.push_back(it->second);
  return *this * canonical_scale(cs);
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HomPoly& HomPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  HomPoly r(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
  return r;
}

std::string HomPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = rc::to_string(c);
    if (!c.is_real() && sgn(c.re()) != 0) cs = "(" + cs + ")";
    const bool neg = cs[0] == '-';
    if (!first) os << (neg ? " - " : " + ");
    if (!first && neg) cs = cs.substr(1);
    first = false;
    std::string mono;
    for (int j = 0; j < 4; ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (!mono.empty() && cs == "1") cs.clear();
    else if (!mono.empty() && cs == "-1") cs = "-";
    else if (!mono.empty()) cs += "*";
    os << cs << mono;
  }
  return os.str();
}

std::vector<HomPoly::Exponent> monomials(int d) {
  std::vector<HomPoly::Exponent> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) out.push_back({a, b, c, d - a - b - c});
  return out;
}

namespace {

class HomParser {
 public:
  explicit HomParser(const std::string& s) : s_(s) {}

  HomPoly parse() {
    std::vector<std::pair<HomPoly::Exponent, Scalar>> terms;
    skip();
    if (pos_ == s_.size()) bad("empty polynomial");
    while (pos_ < s_.size()) {
      Scalar sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = Scalar(-1);
        ++pos_;
        skip();
      } else if (!terms.empty()) {
        bad("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      skip();
    }
    const int d = terms.front().first[0] + terms.front().first[1] + terms.front().first[2] + terms.front().first[3];
    HomPoly out(d);
    for (auto& [e, c] : terms) {
      if (e[0] + e[1] + e[2] + e[3] != d) bad("polynomial is not homogeneous");
      out.add_term(e, c);
    }
    return out;
  }

 private:
  std::pair<HomPoly::Exponent, Scalar> term(Scalar coeff) {
    HomPoly::Exponent e{0, 0, 0, 0};
    bool any = false;
    while (true) {
      skip();
      if (peek() == 'x') {
        ++pos_;
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') bad("variable must be x0..x3");
        const int j = s_[pos_++] - '0';
        int p = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          p = static_cast<int>(number());
        }
        e[j] += p;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Rational num(number());
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          const long den = number();
          if (den == 0) bad("zero denominator");
          num /= Rational(den);
        }
        coeff *= Scalar(num);
      } else {
        bad("unexpected character");
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) bad("empty term");
    return {e, coeff};
  }

  long number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 15) bad("expected a number");
    return std::stol(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void bad(const std::string& why) const {
    fail(ErrorKind::InvalidInput, "exactmath", "cannot parse form: " + why, s_);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

HomPoly parse_hompoly(const std::string& text) { return HomParser(text).parse(); }

}  // namespace rc
