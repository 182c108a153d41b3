#include "rcgeom/json_io.hpp"

#include <algorithm>

namespace rc::json_io {
namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
  std::string text = j.dump();
  if (text.size() > 200) text = text.substr(0, 200) + "...";
  fail(ErrorKind::InvalidInput, "json", what, text);
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || (n != 0 && j.size() != n)) bad(std::string("expected ") + what, j);
  return j;
}

int int_from_json(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer exponent", j);
  const auto v = j.get<long long>();
  if (v < 0 || v > 10000) bad("exponent out of range", j);
  return static_cast<int>(v);
}

}  // namespace

Json to_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(static_cast<long>(j.get<long long>())));
  if (!j.is_string()) bad("expected an exact scalar string such as \"3/4\"", j);
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error&) {
    bad("malformed scalar", j);
  }
}

Json to_json(const UniPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

UniPoly unipoly_from_json(const Json& j) {
  array_of(j, 0, "a coefficient list");
  std::vector<Scalar> c;
  for (const auto& x : j) c.push_back(scalar_from_json(x));
  return UniPoly(std::move(c));
}

Json to_json(const BiPoly& f) {
  Json out = Json::array();
  for (const auto& [k, c] : f.terms()) out.push_back(Json::array({k.first, k.second, to_json(c)}));
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  array_of(j, 0, "a list of [du, dv, c] entries");
  BiPoly f;
  for (const auto& e : j) {
    array_of(e, 3, "a [du, dv, c] entry");
    f.add_term(int_from_json(e[0]), int_from_json(e[1]), scalar_from_json(e[2]));
  }
  return f;
}

Json to_json(const HomPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e[0], e[1], e[2], e[3], to_json(c)}));
  return out;
}

HomPoly hompoly_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_hompoly(j.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorKind::InvalidInput, "json", std::string("malformed polynomial: ") + e.what(), j.get<std::string>());
    }
  }
  array_of(j, 0, "a list of [e0, e1, e2, e3, c] entries");
  if (j.empty()) bad("empty homogeneous polynomial", j);
  std::optional<HomPoly> f;
  for (const auto& t : j) {
    array_of(t, 5, "a [e0, e1, e2, e3, c] entry");
    HomPoly::Exponent e{int_from_json(t[0]), int_from_json(t[1]), int_from_json(t[2]), int_from_json(t[3])};
    if (!f) f.emplace(e[0] + e[1] + e[2] + e[3]);
    if (e[0] + e[1] + e[2] + e[3] != f->degree()) bad("polynomial is not homogeneous", j);
    f->add_term(e, scalar_from_json(t[4]));
  }
  return *f;
}

Json to_json(const Vec4& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(to_json(c));
  return out;
}

Vec4 vec4_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_point(j.get<std::string>());
    } catch (const Error&) {
      bad("malformed point \"x0:x1:x2:x3\"", j);
    }
  }
  array_of(j, 4, "4 homogeneous coordinates");
  Vec4 x;
  for (int k = 0; k < 4; ++k) x[k] = scalar_from_json(j[k]);
  if (is_zero(x)) bad("the zero vector is not a projective point", j);
  return x;
}

Json to_json(const CurveMap& c) {
  Json out = Json::array();
  for (int k = 0; k < 4; ++k) out.push_back(to_json(c[k]));
  return out;
}

CurveMap curve_from_json(const Json& j) {
  array_of(j, 4, "4 coordinate polynomials");
  PolyVec4 x;
  for (int k = 0; k < 4; ++k) x[k] = unipoly_from_json(j[k]);
  if (std::all_of(x.begin(), x.end(), [](const UniPoly& f) { return f.is_zero(); }))
    bad("curve map is identically zero", j);
  return CurveMap(x);
}

Json to_json(const RuledSurface& R) { return Json{{"p", to_json(R.p())}, {"q", to_json(R.q())}}; }

RuledSurface surface_from_json(const Json& j, bool allow_developable) {
  if (!j.is_object()) bad("expected a surface object {\"p\", \"q\"}", j);
  if (!j.contains("p") && j.contains("P")) return affine_surface_from_json(j).to_projective(allow_developable);
  try {
    return RuledSurface(curve_from_json(member(j, "p")), curve_from_json(member(j, "q")), allow_developable);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidInput) throw;
    fail(ErrorKind::InvalidInput, "json", std::string("invalid surface: ") + e.what(), e.detail());
  }
}

Json to_json(const AffineRuledSurface& R) {
  Json P = Json::array(), q = Json::array();
  for (int k = 0; k < 3; ++k) {
    P.push_back(to_json(R.P[k]));
    q.push_back(to_json(R.qbar[k]));
  }
  return Json{{"P", P}, {"qbar", q}};
}

AffineRuledSurface affine_surface_from_json(const Json& j) {
  if (!j.is_object()) bad("expected a surface object", j);
  if (j.contains("p")) return AffineRuledSurface::from_projective(surface_from_json(j, true));
  const Json& P = array_of(member(j, "P"), 3, "3 directrix polynomials");
  const Json& q = array_of(member(j, "qbar"), 3, "3 direction polynomials");
  PolyVec3 a, b;
  for (int k = 0; k < 3; ++k) {
    a[k] = unipoly_from_json(P[k]);
    b[k] = unipoly_from_json(q[k]);
  }
  try {
    return AffineRuledSurface(a, b);
  } catch (const Error& e) {
    fail(ErrorKind::InvalidInput, "json", e.what());
  }
}

Json to_json(const QuadricForm& Q) {
  Json out = Json::array();
  for (const auto& c : Q.upper()) out.push_back(to_json(c));
  return out;
}

QuadricForm quadric_from_json(const Json& j) {
  if (j.is_string()) {
    const HomPoly f = hompoly_from_json(j);
    if (f.degree() != 2) bad("quadric expression must have degree 2", j);
    return QuadricForm::from_hompoly(f);
  }
  array_of(j, 10, "10 upper-triangle entries");
  std::array<Scalar, 10> u;
  for (int k = 0; k < 10; ++k) u[k] = scalar_from_json(j[k]);
  return QuadricForm::from_upper(u);
}

Json to_json(const Conic& C) { return Json{{"G", to_json(C.G)}, {"H", to_json(C.H)}}; }

Conic conic_from_json(const Json& j) {
  if (!j.is_object()) bad("expected a conic object {\"G\", \"H\"}", j);
  return Conic{quadric_from_json(member(j, "G")), vec4_from_json(member(j, "H"))};
}

Json to_json(const MobiusTransform& m) {
  const MobiusTransform c = m.canonical();
  return Json{{"a", to_json(c.a())}, {"b", to_json(c.b())}, {"c", to_json(c.c())}, {"d", to_json(c.d())},
              {"text", c.to_string()}};
}

Json to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ComplexApprox& z) {
  return Json{{"re", z.value.real()}, {"im", z.value.imag()}, {"radius", z.radius}};
}

Json to_json(const ApproxPoint& x) {
  Json out = Json::array();
  for (const auto& c : x) out.push_back(to_json(c));
  return out;
}

Json to_json(const Root& r) {
  return Json{{"approx", to_json(r.approx)},
              {"exact", r.exact ? to_json(*r.exact) : Json(nullptr)},
              {"multiplicity", r.multiplicity}};
}

Json to_json(const Error& e) {
  return Json{{"error",
               {{"kind", std::string(to_string(e.kind()))},
                {"module", e.module()},
                {"message", e.what()},
                {"detail", e.detail()}}}};
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"", j);
  return j.at(key);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidInput, "json", "JSON syntax error", e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rc::json_io
