#pragma once

#include <nlohmann/json.hpp>

#include "rcgeom/bipoly.hpp"
#include "rcgeom/contour.hpp"
#include "rcgeom/errors.hpp"
#include "rcgeom/hompoly.hpp"
#include "rcgeom/isophote.hpp"
#include "rcgeom/mobius.hpp"
#include "rcgeom/roots.hpp"
#include "rcgeom/ruled_surface.hpp"

/// Canonical JSON encoding. Objects use sorted keys (nlohmann::json's
/// default std::map), exact scalars are "num/den" strings (Gaussian
/// values "a+bi"), and numeric approximations carry an explicit radius.
/// Every reader throws rc::Error{InvalidInput, "json"} on malformed data.
namespace rc::json_io {

using Json = nlohmann::json;

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

/// Dense ascending coefficient list.
Json to_json(const UniPoly& f);
UniPoly unipoly_from_json(const Json& j);

/// List of [du, dv, "c"] entries.
Json to_json(const BiPoly& f);
BiPoly bipoly_from_json(const Json& j);

/// List of [e0, e1, e2, e3, "c"] entries. The reader also accepts an
/// expression string such as "x0^2 - x1*x3".
Json to_json(const HomPoly& f);
HomPoly hompoly_from_json(const Json& j);

/// List of 4 scalars; the reader also accepts "x0:x1:x2:x3".
Json to_json(const Vec4& x);
Vec4 vec4_from_json(const Json& j);

Json to_json(const CurveMap& c);
CurveMap curve_from_json(const Json& j);

/// {"p": [4 lists], "q": [4 lists]}.
Json to_json(const RuledSurface& R);
RuledSurface surface_from_json(const Json& j, bool allow_developable = false);

/// {"P": [3 lists], "qbar": [3 lists]}.
Json to_json(const AffineRuledSurface& R);
AffineRuledSurface affine_surface_from_json(const Json& j);

/// 10 upper-triangle entries (00, 01, 02, 03, 11, 12, 13, 22, 23, 33);
/// the reader also accepts a quadratic expression string.
Json to_json(const QuadricForm& Q);
QuadricForm quadric_from_json(const Json& j);

/// {"G": quadric, "H": plane}.
Json to_json(const Conic& C);
Conic conic_from_json(const Json& j);

Json to_json(const MobiusTransform& m);
Json to_json(const ComplexApprox& z);
Json to_json(std::complex<double> z);
Json to_json(const ApproxPoint& x);
Json to_json(const Root& r);

/// {"error": {"kind", "module", "message", "detail"}}.
Json to_json(const Error& e);

/// Required member lookup with a typed error.
const Json& member(const Json& j, const char* key);
/// Parses text; throws InvalidInput on syntax errors.
Json parse(const std::string& text);
/// Deterministic two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace rc::json_io
