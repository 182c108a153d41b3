#include "rcgeom_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rcgeom/contour.hpp"
#include "rcgeom/isophote.hpp"
#include "rcgeom/json_io.hpp"
#include "rcgeom/quadric_reconstruct.hpp"
#include "rcgeom/random.hpp"
#include "rcgeom/ruled_reconstruct.hpp"
#include "rcgeom/syzygy.hpp"

namespace rc::cli {
namespace {

using json_io::Json;
using json_io::member;
using json_io::to_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cli", "cannot open input file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return json_io::parse(read_file(path)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

Vec3 parse_direction(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) fail(ErrorKind::InvalidInput, "cli", "--dir expects a1,a2,a3", text);
  return {parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2])};
}

// A surface file holds either a ruled surface ({"p","q"} or {"P","qbar"})
// or a quadric ({"quadric": ...}).
bool is_quadric_input(const Json& j) { return j.is_object() && j.contains("quadric"); }

Json marks_json(const std::vector<SilhouetteMark>& marks) {
  Json out = Json::array();
  for (const auto& m : marks)
    out.push_back(Json{{"parameter", to_json(m.parameter)},
                       {"point", m.exact ? to_json(*m.exact) : Json(nullptr)},
                       {"approx", to_json(m.approx)}});
  return out;
}

Json curve_or_conic(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::InvalidInput, "json", std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// ---------------------------------------------------------------- commands

Json cmd_contour(const std::string& surface_path, const std::string& viewpoint, const std::string& screen,
                 bool require_screen) {
  const Json in = read_json(surface_path);
  const Vec4 a = json_io::vec4_from_json(Json(viewpoint));
  if (require_screen && screen.empty()) fail(ErrorKind::InvalidInput, "cli", "--screen is required");
  Json out;
  out["viewpoint"] = to_json(a);
  if (is_quadric_input(in)) {
    const QuadricForm Q = json_io::quadric_from_json(in.at("quadric"));
    out["contour"] = to_json(conic_contour(Q, a));
    if (!screen.empty()) {
      const Plane H = json_io::vec4_from_json(Json(screen));
      out["screen"] = to_json(H);
      out["silhouette"] = to_json(conic_silhouette(Q, a, H));
    }
    return out;
  }
  const RuledSurface R = json_io::surface_from_json(in);
  const ContourCurve C = contour(R, a);
  out["contour"] = to_json(C.map);
  out["degree"] = C.map.degree();
  out["degree_bound"] = 2 * R.ruling_degree() - 2;
  if (!screen.empty()) {
    const Plane H = json_io::vec4_from_json(Json(screen));
    out["screen"] = to_json(H);
    out["silhouette"] = to_json(silhouette(C, H).map);
  }
  return out;
}

Json job_quadric2c(const Json& job) {
  const Json& cs = member(job, "contours");
  if (!cs.is_array() || cs.size() != 2) fail(ErrorKind::InvalidInput, "json", "quadric2c needs 2 contours");
  std::vector<ContourConic> c;
  for (const auto& x : cs)
    c.push_back({json_io::conic_from_json(curve_or_conic(x, "conic")), json_io::vec4_from_json(member(x, "viewpoint"))});
  return Json{{"quadric", to_json(quadric_from_two_contours(c[0], c[1]).canonical())}};
}

Json job_quadric3s(const Json& job) {
  const Json& ss = member(job, "silhouettes");
  if (!ss.is_array() || ss.size() != 3) fail(ErrorKind::InvalidInput, "json", "quadric3s needs 3 silhouettes");
  std::vector<SilhouetteConic> s;
  for (const auto& x : ss)
    s.push_back({json_io::conic_from_json(curve_or_conic(x, "conic")), json_io::vec4_from_json(member(x, "viewpoint"))});
  const auto rep = quadric_from_three_silhouettes(s[0], s[1], s[2]);
  Json planes = Json::array();
  for (const auto& H : rep.contour_planes) planes.push_back(to_json(canonical(H)));
  Json pairs = Json::array();
  for (const auto& pr : rep.point_pairs) pairs.push_back(Json::array({to_json(pr[0]), to_json(pr[1])}));
  return Json{{"quadric", to_json(rep.quadric.canonical())},
              {"diagnostics", {{"contour_planes", planes}, {"point_pairs", pairs}}}};
}

Json job_ruled2c(const Json& job) {
  const Json& cs = member(job, "contours");
  if (!cs.is_array() || cs.size() != 2) fail(ErrorKind::InvalidInput, "json", "ruled2c needs 2 contours");
  const CurveMap ca = json_io::curve_from_json(curve_or_conic(cs[0], "curve"));
  const CurveMap cb = json_io::curve_from_json(curve_or_conic(cs[1], "curve"));
  const auto rep = ruled_from_two_contours(ca, json_io::vec4_from_json(member(cs[0], "viewpoint")), cb,
                                           json_io::vec4_from_json(member(cs[1], "viewpoint")));
  Json cands = Json::array();
  for (const auto& c : rep.candidates)
    cands.push_back(Json{{"factor", to_json(c.factor.poly())},
                         {"mobius", to_json(c.psi)},
                         {"consistent", c.consistent},
                         {"note", c.note}});
  return Json{{"surface", to_json(rep.surface())},
              {"diagnostics", {{"delta", to_json(rep.delta)}, {"candidates", cands}, {"accepted", rep.accepted}}},
              {"warnings", Json::array()}};
}

Json job_ruled2s(const Json& job) {
  const Json& ss = member(job, "silhouettes");
  if (!ss.is_array() || ss.size() != 2) fail(ErrorKind::InvalidInput, "json", "ruled2s needs 2 silhouettes");
  const CurveMap sa = json_io::curve_from_json(curve_or_conic(ss[0], "curve"));
  const CurveMap sb = json_io::curve_from_json(curve_or_conic(ss[1], "curve"));
  const auto rep = ruled_from_two_silhouettes(sa, json_io::vec4_from_json(member(ss[0], "viewpoint")), sb,
                                              json_io::vec4_from_json(member(ss[1], "viewpoint")));
  Json pairing = Json::array();
  for (std::size_t i = 0; i < rep.pairing.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rep.pairing[i].size(); ++j)
      row.push_back(rep.pairing_exact[i][j] ? to_json(*rep.pairing_exact[i][j]) : to_json(rep.pairing[i][j]));
    pairing.push_back(row);
  }
  Json matching = Json::array();
  for (const auto& [i, j] : rep.matching) matching.push_back(Json::array({i, j}));
  return Json{{"surface", to_json(*rep.surface)},
              {"diagnostics",
               {{"marks_a", marks_json(rep.marks_a)},
                {"marks_b", marks_json(rep.marks_b)},
                {"mark_polynomial_a", to_json(rep.marks_a_polynomial)},
                {"mark_polynomial_b", to_json(rep.marks_b_polynomial)},
                {"pairing", pairing},
                {"matching", matching},
                {"mobius", to_json(rep.phi)},
                {"contour_a", to_json(rep.c_a)},
                {"contour_b", to_json(rep.c_b)}}},
              {"warnings", rep.warnings}};
}

Json job_syzygy(const Json& job) {
  const Json& gs = member(job, "G");
  if (!gs.is_array() || gs.empty()) fail(ErrorKind::InvalidInput, "json", "syzygy needs a nonempty list G");
  std::vector<HomPoly> G;
  for (const auto& g : gs) G.push_back(json_io::hompoly_from_json(g));
  const Json& dj = member(job, "degree");
  if (!dj.is_number_integer() || dj.get<int>() < 1 || dj.get<int>() > 12)
    fail(ErrorKind::InvalidInput, "json", "degree must be an integer in [1, 12]");
  const auto res = syzygy_surfaces(G, json_io::vec4_from_json(member(job, "viewpoint")), dj.get<int>());
  Json sols = Json::array();
  for (const auto& s : res.solutions) {
    Json H = Json::array(), L = Json::array();
    for (const auto& h : s.H) H.push_back(to_json(h));
    for (const auto& l : s.L) L.push_back(to_json(l));
    sols.push_back(Json{{"F", to_json(s.F)}, {"F_text", s.F.to_string()}, {"H", H}, {"L", L}, {"spurious", s.spurious}});
  }
  return Json{{"solutions", sols},
              {"dimension", res.solutions.size()},
              {"spurious_dimension", res.spurious_dimension},
              {"warnings", Json::array()}};
}

Json cmd_reconstruct(const std::string& job_path) {
  const Json job = read_json(job_path);
  const std::string kind = [&] {
    const Json& k = member(job, "kind");
    if (!k.is_string()) fail(ErrorKind::InvalidInput, "json", "\"kind\" must be a string");
    return k.get<std::string>();
  }();
  Json out;
  if (kind == "quadric2c") out = job_quadric2c(job);
  else if (kind == "quadric3s") out = job_quadric3s(job);
  else if (kind == "ruled2c") out = job_ruled2c(job);
  else if (kind == "ruled2s") out = job_ruled2s(job);
  else if (kind == "syzygy") out = job_syzygy(job);
  else fail(ErrorKind::InvalidInput, "cli", "unknown job kind", kind);
  out["kind"] = kind;
  return out;
}

struct IsophoteArgs {
  std::string surface, dir, alpha, trace;
  bool verify = false, allow_complex = false;
  double from = -10, to = 10;
  int n = 200;
};

Json cmd_isophote(const IsophoteArgs& args, std::uint64_t seed) {
  const Json in = read_json(args.surface);
  Rng rng(seed);
  IsophoteSpec spec;
  std::string assumption;
  if (args.dir.empty()) {
    do {
      spec.direction = {Scalar(rng.rational(9)), Scalar(rng.rational(9)), Scalar(rng.rational(9))};
    } while (std::all_of(spec.direction.begin(), spec.direction.end(), [](const Scalar& c) { return c.is_zero(); }));
    assumption = "direction drawn from seed " + std::to_string(seed) + "; assumed generic";
  } else {
    spec.direction = parse_direction(args.dir);
    assumption = "direction supplied; assumed generic";
  }
  if (args.alpha.empty()) {
    spec.alpha = Scalar(Rational(static_cast<long>(rng.uniform(1, 9)), 10));
    assumption += "; alpha drawn from seed " + std::to_string(seed);
  } else {
    spec.alpha = parse_scalar(args.alpha);
  }
  spec.allow_complex = args.allow_complex;
  spec.validate();
  const Json direction =
      Json::array({to_json(spec.direction[0]), to_json(spec.direction[1]), to_json(spec.direction[2])});
  if (is_quadric_input(in)) {
    // Implicit quadrics carry no parameterization: genus data only.
    if (args.verify || !args.trace.empty())
      fail(ErrorKind::InvalidInput, "cli", "--verify and --trace need a parameterized surface");
    const QuadricForm Q = json_io::quadric_from_json(in.at("quadric"));
    Json out{{"curve", nullptr},
             {"direction", direction},
             {"alpha", to_json(spec.alpha)},
             {"reducible", is_offset_reducible(Q)},
             {"assumption", assumption}};
    if (Q.rank() == 4 && Q.is_sphere()) {
      out["genus"] = nullptr;
      out["ramification"] = nullptr;
      out["real_component_bound"] = nullptr;
      out["note"] = "sphere: the isophote splits into two components";
    } else {
      const int g = isophote_genus(Q);
      out["genus"] = g;
      out["ramification"] = 2 * (g + 1);
      out["real_component_bound"] = g + 1;
    }
    return out;
  }
  const AffineRuledSurface A = json_io::affine_surface_from_json(in);
  const RuledSurface R = A.to_projective(true);
  const BiPoly curve = isophote_curve(A, spec);
  Json out{{"curve", to_json(curve)},
           {"direction", direction},
           {"alpha", to_json(spec.alpha)},
           {"reducible", is_offset_reducible(A)},
           {"assumption", assumption}};
  if (is_sphere_surface(R)) {
    out["genus"] = nullptr;
    out["ramification"] = nullptr;
    out["real_component_bound"] = nullptr;
    out["note"] = "sphere: the isophote splits into two components";
  } else {
    out["genus"] = isophote_genus(R);
    out["ramification"] = ramification_count(R);
    out["real_component_bound"] = real_component_bound(R);
  }
  if (args.verify) {
    const auto t = tangency_count(R, spec);
    Json roots = Json::array();
    for (const auto& z : t.roots) roots.push_back(to_json(z));
    out["verify"] = Json{{"tangency_polynomial", to_json(t.polynomial)},
                         {"roots", roots},
                         {"at_infinity", t.at_infinity},
                         {"count", t.count},
                         {"expected", t.expected},
                         {"merge_tolerance", t.merge_tolerance},
                         {"agrees", t.count == t.expected}};
  }
  if (!args.trace.empty()) {
    const auto rows = isophote_trace(A, curve, args.from, args.to, args.n);
    std::ofstream csv(args.trace);
    if (!csv) fail(ErrorKind::InvalidInput, "cli", "cannot open trace output", args.trace);
    csv << "s,t,x,y,z\n" << std::setprecision(17);
    for (const auto& r : rows) csv << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << r[4] << '\n';
    out["trace_rows"] = rows.size();
  }
  return out;
}

Json cmd_check(const std::string& what, const std::string& surface_path, std::uint64_t seed) {
  const Json in = read_json(surface_path);
  if (what == "pn") {
    if (is_quadric_input(in)) {
      const QuadricForm Q = json_io::quadric_from_json(in.at("quadric"));
      return Json{{"offset_reducible", is_offset_reducible(Q)}, {"path", "quadric"}};
    }
    const auto rep = offset_reducibility(json_io::affine_surface_from_json(in));
    Json out{{"offset_reducible", rep.reducible},
             {"pn_discriminant", to_json(rep.discriminant)},
             {"common_factor", to_json(rep.common_factor)},
             {"path", "ruled"}};
    if (rep.sigma) {
      out["sigma"] = to_json(*rep.sigma);
      out["sigma_scale"] = to_json(rep.sigma_scale);
    }
    return out;
  }
  if (is_quadric_input(in)) fail(ErrorKind::InvalidInput, "cli", "check " + what + " expects a ruled surface");
  const RuledSurface R = json_io::surface_from_json(in, true);
  if (what == "developable")
    return Json{{"developable", is_developable(R)}, {"torsal_polynomial", to_json(torsal_polynomial(R))}};
  Rng rng(seed);
  return Json{{"degree", surface_degree(R, rng)},
              {"ruling_degree", R.ruling_degree()},
              {"infinite_rulings", infinite_rulings_count(R)}};
}

Json cmd_sample(const std::string& curve_path, double from, double to, int n, const std::string& csv_path) {
  const Json in = read_json(curve_path);
  const Json* cj = &in;
  for (const char* key : {"curve", "contour", "silhouette"})
    if (in.is_object() && in.contains(key)) {
      cj = &in.at(key);
      break;
    }
  const CurveMap c = json_io::curve_from_json(*cj);
  if (n < 1 || n > 10'000'000) fail(ErrorKind::InvalidInput, "cli", "--n must be in [1, 1e7]");
  const auto rows = sample_curve(c, from, to, n);
  if (csv_path.empty()) fail(ErrorKind::InvalidInput, "cli", "--out is required for sample");
  std::ofstream csv(csv_path);
  if (!csv) fail(ErrorKind::InvalidInput, "cli", "cannot open CSV output", csv_path);
  write_samples_csv(csv, rows);
  return Json{{"rows", rows.size()}, {"csv", csv_path}};
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return kInputError;
    case ErrorKind::Degenerate:
    case ErrorKind::Inconsistent: return kDegenerate;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (const char* env = std::getenv("RC_SEED"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end && *end == '\0') return v;
    fail(ErrorKind::InvalidInput, "cli", "RC_SEED is not an integer", env);
  }
  return flag.value_or(kDefaultSeed);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rcgeom: contours, silhouettes, isophotes and reconstruction of rational ruled surfaces and quadrics"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed_flag;
  std::string out_path;
  app.add_option("--seed", seed_flag, "seed for generic choices (default 0xC0FFEE; RC_SEED overrides)");
  app.add_option("--out", out_path, "write the result JSON here instead of stdout");

  std::string surface, viewpoint, screen;
  auto* contour_cmd = app.add_subcommand("contour", "contour of a surface from a viewpoint");
  contour_cmd->add_option("--surface", surface, "surface JSON")->required();
  contour_cmd->add_option("--viewpoint", viewpoint, "x0:x1:x2:x3")->required();
  contour_cmd->add_option("--screen", screen, "u0:u1:u2:u3 (adds the silhouette)");

  auto* sil_cmd = app.add_subcommand("silhouette", "silhouette of a surface on a screen");
  sil_cmd->add_option("--surface", surface, "surface JSON")->required();
  sil_cmd->add_option("--viewpoint", viewpoint, "x0:x1:x2:x3")->required();
  sil_cmd->add_option("--screen", screen, "u0:u1:u2:u3")->required();

  std::string job;
  auto* rec_cmd = app.add_subcommand("reconstruct", "reconstruct a surface from a JSON job");
  rec_cmd->add_option("--job", job, "job JSON")->required();

  IsophoteArgs iso;
  auto* iso_cmd = app.add_subcommand("isophote", "isophote curve and genus data");
  iso_cmd->add_option("--surface", iso.surface, "surface JSON")->required();
  iso_cmd->add_option("--dir", iso.dir, "a1,a2,a3 (default: drawn from the seed)");
  iso_cmd->add_option("--alpha", iso.alpha, "cosine of the angle, num/den (default: drawn from the seed)");
  iso_cmd->add_flag("--verify", iso.verify, "count tangency solutions numerically");
  iso_cmd->add_flag("--allow-complex", iso.allow_complex, "permit complex direction or alpha");
  iso_cmd->add_option("--trace", iso.trace, "write real isophote samples (s,t,x,y,z) as CSV");
  iso_cmd->add_option("--from", iso.from, "trace start parameter");
  iso_cmd->add_option("--to", iso.to, "trace end parameter");
  iso_cmd->add_option("--n", iso.n, "trace sample count");

  std::string check_what;
  auto* check_cmd = app.add_subcommand("check", "surface predicates");
  check_cmd->add_option("what", check_what, "pn | developable | degree")
      ->required()
      ->check(CLI::IsMember({"pn", "developable", "degree"}));
  check_cmd->add_option("--surface", surface, "surface JSON")->required();

  std::string curve, csv;
  double from = -10, to = 10;
  int n = 200;
  auto* sample_cmd = app.add_subcommand("sample", "evaluate a curve map at real parameters (CSV)");
  sample_cmd->add_option("--curve", curve, "curve JSON")->required();
  sample_cmd->add_option("--from", from, "first parameter");
  sample_cmd->add_option("--to", to, "last parameter");
  sample_cmd->add_option("--n", n, "number of samples");
  sample_cmd->add_option("--csv", csv, "CSV output path");

  auto emit = [&](const Json& j) {
    const std::string text = json_io::dump(j);
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      out << text;
      return;
    }
    f << text;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << app.help();
    emit(json_io::to_json(Error(ErrorKind::InvalidInput, "cli", e.what())));
    return kInputError;
  }

  // `sample` writes its CSV to --csv, or to --out when only that is given.
  if (sample_cmd->parsed() && csv.empty()) std::swap(csv, out_path);

  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    Json result;
    if (contour_cmd->parsed()) result = cmd_contour(surface, viewpoint, screen, false);
    else if (sil_cmd->parsed()) result = cmd_contour(surface, viewpoint, screen, true);
    else if (rec_cmd->parsed()) result = cmd_reconstruct(job);
    else if (iso_cmd->parsed()) result = cmd_isophote(iso, seed);
    else if (check_cmd->parsed()) result = cmd_check(check_what, surface, seed);
    else result = cmd_sample(curve, from, to, n, csv);
    result["seed"] = seed;
    emit(result);
    return kOk;
  } catch (const Error& e) {
    emit(json_io::to_json(e));
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    emit(json_io::to_json(Error(ErrorKind::Internal, "cli", e.what())));
    return kInternal;
  }
}

}  // namespace rc::cli
