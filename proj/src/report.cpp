#include "nctorus/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "nctorus/errors.hpp"

namespace nctorus {

using Json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(parse_integer(value.dump()));
  throw InvalidInput(where + ": expected a string like \"-3/7\" or an integer");
}

Integer positive_integer_from_json(const Json& value, const std::string& where) {
  Integer x;
  if (value.is_string()) {
    x = parse_integer(value.get<std::string>());
  } else if (value.is_number_integer()) {
    x = parse_integer(value.dump());
  } else {
    throw InvalidInput(where + ": expected an integer");
  }
  if (x <= 0) throw InvalidInput(where + ": must be positive");
  return x;
}

}  // namespace

SkewRationalMatrix parse_matrix_shorthand(std::string_view text) {
  const auto rows = split(text, ';');
  std::vector<std::vector<Rational>> parsed;
  for (const auto& row : rows) {
    std::vector<Rational> entries;
    for (const auto& cell : split(row, ',')) entries.push_back(parse_rational(cell));
    parsed.push_back(std::move(entries));
  }
  const std::size_t n = parsed.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (parsed[i].size() != n) {
      throw InvalidInput("matrix is not square: row " + std::to_string(i + 1) + " has " +
                         std::to_string(parsed[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parsed[i][j];
  }
  return SkewRationalMatrix(std::move(m));
}

ReportInput parse_input_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("input: top level must be an object");
  if (!doc.contains("n")) throw InvalidInput("input: missing field 'n'");
  if (!doc.contains("entries")) throw InvalidInput("input: missing field 'entries'");
  const Integer n_big = positive_integer_from_json(doc["n"], "input.n");
  if (n_big > 64) throw InvalidInput("input.n: too large");
  const std::size_t n = n_big.get_ui();
  const Json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != n) {
    throw InvalidInput("input.entries: expected " + std::to_string(n) + " rows");
  }
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != n) {
      throw InvalidInput("matrix is not square: input.entries[" + std::to_string(i) + "] must have " +
                         std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = rational_from_json(row[j], "input.entries[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  ReportInput input;
  input.theta = SkewRationalMatrix(std::move(m));
  if (doc.contains("n_tensor")) input.n_tensor = positive_integer_from_json(doc["n_tensor"], "input.n_tensor");
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw InvalidInput("input.kind: expected a string");
    input.kind = parse_algebra_kind(doc["kind"].get<std::string>());
  }
  return input;
}

FaceFilter parse_face_filter(std::string_view text) {
  if (text == "all") return FaceFilter::all;
  if (text == "maximal") return FaceFilter::maximal;
  if (text == "jump") return FaceFilter::jump;
  throw InvalidInput("unknown face filter '" + std::string(text) + "'");
}

InvariantReport build_report(const ReportInput& input, const ReportOptions& options) {
  const SkewRationalMatrix& theta = input.theta;
  const std::size_t n = theta.size();
  const ThetaProfile p = profile(theta);
  const std::vector<FaceInvariants> faces = all_face_invariants(p, options.enumeration);

  InvariantReport r;
  r.input = input;
  r.profile.ell = p.ell;
  r.profile.h = p.h;
  r.profile.pi_degree = p.pi_degree;
  r.profile.q = p.q;
  for (std::size_t i = 0; i < p.kernel.rank(); ++i) {
    const auto row = p.kernel.basis().row(i);
    r.profile.kernel_basis.emplace_back(row.begin(), row.end());
  }
  r.profile.divisors = p.normal_form.divisors;
  r.profile.zero_rank = p.normal_form.zero_rank;

  const TorusDecomposition d = decompose(theta);
  r.decomposition.k = d.k;
  r.decomposition.factors = d.factors;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = d.witness.row(i);
    r.decomposition.witness.emplace_back(row.begin(), row.end());
  }

  r.azumaya = is_azumaya(theta);
  JumpComplex jump{n, {}};
  for (const FaceInvariants& f : faces) {
    if (f.h < p.h) {
      jump.faces.push_back(f.face);
    } else {
      r.azumaya_faces.push_back(f.face);
    }
  }
  for (Face f : jump.faces)
    for (std::size_t v : f.vertices())
      if (!jump.contains(f.without(v))) throw std::logic_error("jump family is not downward closed");
  r.jump_complex = jump.faces;

  std::vector<Face> shown;
  switch (options.faces) {
    case FaceFilter::all:
      for (const auto& f : faces) shown.push_back(f.face);
      break;
    case FaceFilter::jump:
      shown = jump.faces;
      break;
    case FaceFilter::maximal:
      shown = jump.facets();
      shown.push_back(Face::full(n));
      std::sort(shown.begin(), shown.end(), face_order);
      shown.erase(std::unique(shown.begin(), shown.end()), shown.end());
      break;
  }
  const CenterSkeleton skeleton = center_skeleton(p, faces);
  r.center_skeleton.dim_x = skeleton.dim_x;
  r.center_skeleton.sphere_sufficient = skeleton.sphere_sufficient;
  std::size_t cursor = 0;
  for (Face f : shown) {
    // `shown` and `faces` are both in report order
    while (faces[cursor].face != f) ++cursor;
    r.center_skeleton.faces.push_back(skeleton.faces[cursor]);
    const FiberStructure fs = fiber_structure(faces[cursor], input.n_tensor);
    r.fiber_table.push_back({f, fs.block_size, fs.block_count, fs.total_dim});
  }
  r.center_finiteness = center_finiteness(theta);

  if (options.oracle) {
    std::vector<oracle::OracleReport> reports;
    reports.push_back(oracle::compare("h:image_count", p.h, oracle::brute_image_count(p.scaled, p.ell)));
    reports.push_back(oracle::compare("h:coset_index", p.h, oracle::brute_coset_index(p.kernel, Lattice::standard(n))));
    reports.push_back(oracle::compare("cover_degree:" + Face::full(n).to_string(), faces.back().cover_degree,
                                      oracle::brute_coset_index(Lattice::diagonal(p.q), p.kernel)));
    for (Face f : shown) {
      const auto it = std::find_if(faces.begin(), faces.end(), [f](const FaceInvariants& x) { return x.face == f; });
      const oracle::BlockStructure b = oracle::twisted_block_structure(theta, f, p.ell);
      reports.push_back(oracle::compare("pi_degree:" + f.to_string(), it->pi_degree, b.block_size));
    }
    r.oracle_reports = std::move(reports);
  }
  check_report(r);
  return r;
}

void check_report(const InvariantReport& r) {
  auto fail = [](const std::string& what) { throw std::logic_error("report self-check failed: " + what); };
  const std::size_t n = r.input.theta.size();
  if (r.profile.pi_degree * r.profile.pi_degree != r.profile.h) fail("pi_degree^2 != h");
  if (n > 0 && r.center_skeleton.dim_x != 2 * n - 1) fail("dim_X != 2n - 1");
  if (r.jump_complex.size() + r.azumaya_faces.size() != (std::size_t{1} << n)) fail("faces do not partition 2^[n]");
  std::vector<Face> all = r.jump_complex;
  all.insert(all.end(), r.azumaya_faces.begin(), r.azumaya_faces.end());
  std::sort(all.begin(), all.end(), face_order);
  for (Face f : all)
    if (!f.is_subset_of(Face::full(n))) fail("face outside [n]");
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) fail("jump and Azumaya faces overlap");
  if (r.azumaya != r.jump_complex.empty()) fail("Azumaya verdict disagrees with the jump complex");
  if (r.center_finiteness.algebraically_finite != r.azumaya) fail("center-finiteness disagrees with Azumaya verdict");
  for (const FiberRow& row : r.fiber_table) {
    if (row.total_dim != row.block_count * row.block_size * row.block_size) fail("fiber dimension mismatch");
    if (row.face == Face::full(n)) {
      if (row.block_count != 1) fail("full-face fiber is not a single block");
      if (row.block_size != r.input.n_tensor * r.profile.pi_degree) fail("full-face block size != n_tensor * pi_degree");
    }
  }
}

namespace {

Json face_json(Face f) { return Json(f.one_based()); }

Face face_from(const Json& j) { return Face::from_one_based(j.get<std::vector<std::size_t>>()); }

Json faces_json(const std::vector<Face>& faces) {
  Json a = Json::array();
  for (Face f : faces) a.push_back(face_json(f));
  return a;
}

std::vector<Face> faces_from(const Json& j) {
  std::vector<Face> out;
  for (const auto& x : j) out.push_back(face_from(x));
  return out;
}

Json integers_json(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

std::vector<Integer> integers_from(const Json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(parse_integer(x.get<std::string>()));
  return out;
}

Json vectors_json(const std::vector<IntVector>& rows) {
  Json a = Json::array();
  for (const auto& row : rows) a.push_back(integers_json(row));
  return a;
}

std::vector<IntVector> vectors_from(const Json& j) {
  std::vector<IntVector> out;
  for (const auto& x : j) out.push_back(integers_from(x));
  return out;
}

Integer integer_from(const Json& j) { return parse_integer(j.get<std::string>()); }

}  // namespace

std::string to_json(const InvariantReport& r) {
  Json doc;
  const std::size_t n = r.input.theta.size();
  Json entries = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(r.input.theta(i, j).get_str());
    entries.push_back(row);
  }
  doc["input"] = {{"n", n}, {"entries", entries}, {"n_tensor", r.input.n_tensor.get_str()},
                  {"kind", std::string(to_string(r.input.kind))}};
  doc["profile"] = {{"ell", r.profile.ell.get_str()},
                    {"h", r.profile.h.get_str()},
                    {"pi_degree", r.profile.pi_degree.get_str()},
                    {"q", integers_json(r.profile.q)},
                    {"kernel_basis", vectors_json(r.profile.kernel_basis)},
                    {"divisors", integers_json(r.profile.divisors)},
                    {"zero_rank", r.profile.zero_rank}};
  Json factors = Json::array();
  for (const auto& f : r.decomposition.factors) factors.push_back(f.get_str());
  doc["decomposition"] = {{"k", r.decomposition.k}, {"factors", factors}, {"witness", vectors_json(r.decomposition.witness)}};
  doc["azumaya"] = r.azumaya;
  doc["jump_complex"] = faces_json(r.jump_complex);
  doc["azumaya_faces"] = faces_json(r.azumaya_faces);
  Json skeleton_faces = Json::array();
  for (const auto& f : r.center_skeleton.faces) {
    skeleton_faces.push_back({{"face", face_json(f.face)}, {"torus_rank", f.torus_rank}, {"cover_degree", f.cover_degree.get_str()}});
  }
  doc["center_skeleton"] = {{"dim_X", r.center_skeleton.dim_x},
                            {"sphere_sufficient", r.center_skeleton.sphere_sufficient},
                            {"faces", skeleton_faces}};
  Json fibers = Json::array();
  for (const auto& row : r.fiber_table) {
    fibers.push_back({{"face", face_json(row.face)},
                      {"block_size", row.block_size.get_str()},
                      {"block_count", row.block_count.get_str()},
                      {"total_dim", row.total_dim.get_str()}});
  }
  doc["fiber_table"] = fibers;
  doc["center_finiteness"] = {{"algebraically_finite", r.center_finiteness.algebraically_finite},
                              {"topologically_finite", r.center_finiteness.topologically_finite}};
  if (r.oracle_reports) {
    Json reports = Json::array();
    for (const auto& o : *r.oracle_reports) {
      reports.push_back({{"checked_quantity", o.checked_quantity},
                         {"main_value", o.main_value.get_str()},
                         {"oracle_value", o.oracle_value.get_str()},
                         {"agrees", o.agrees}});
    }
    doc["oracle_reports"] = reports;
  }
  return doc.dump(2) + "\n";
}

InvariantReport report_from_json(std::string_view text) {
  const Json doc = Json::parse(text);
  InvariantReport r;
  try {
    r.input = parse_input_document(doc.at("input").dump());
    const Json& p = doc.at("profile");
    r.profile.ell = integer_from(p.at("ell"));
    r.profile.h = integer_from(p.at("h"));
    r.profile.pi_degree = integer_from(p.at("pi_degree"));
    r.profile.q = integers_from(p.at("q"));
    r.profile.kernel_basis = vectors_from(p.at("kernel_basis"));
    r.profile.divisors = integers_from(p.at("divisors"));
    r.profile.zero_rank = p.at("zero_rank").get<std::size_t>();
    const Json& d = doc.at("decomposition");
    r.decomposition.k = d.at("k").get<std::size_t>();
    for (const auto& f : d.at("factors")) r.decomposition.factors.push_back(parse_rational(f.get<std::string>()));
    r.decomposition.witness = vectors_from(d.at("witness"));
    r.azumaya = doc.at("azumaya").get<bool>();
    r.jump_complex = faces_from(doc.at("jump_complex"));
    r.azumaya_faces = faces_from(doc.at("azumaya_faces"));
    const Json& s = doc.at("center_skeleton");
    r.center_skeleton.dim_x = s.at("dim_X").get<std::size_t>();
    r.center_skeleton.sphere_sufficient = s.at("sphere_sufficient").get<bool>();
    for (const auto& f : s.at("faces")) {
      r.center_skeleton.faces.push_back(
          {face_from(f.at("face")), f.at("torus_rank").get<std::size_t>(), integer_from(f.at("cover_degree"))});
    }
    for (const auto& row : doc.at("fiber_table")) {
      r.fiber_table.push_back({face_from(row.at("face")), integer_from(row.at("block_size")),
                               integer_from(row.at("block_count")), integer_from(row.at("total_dim"))});
    }
    const Json& c = doc.at("center_finiteness");
    r.center_finiteness = {c.at("algebraically_finite").get<bool>(), c.at("topologically_finite").get<bool>()};
    if (doc.contains("oracle_reports")) {
      std::vector<oracle::OracleReport> reports;
      for (const auto& o : doc.at("oracle_reports")) {
        reports.push_back({o.at("checked_quantity").get<std::string>(), integer_from(o.at("main_value")),
                           integer_from(o.at("oracle_value")), o.at("agrees").get<bool>()});
      }
      r.oracle_reports = std::move(reports);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  return r;
}

namespace {

std::string join_faces(const std::vector<Face>& faces) {
  if (faces.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) s += ' ';
    s += faces[i].to_string();
  }
  return s;
}

std::string join_integers(const std::vector<Integer>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i].get_str();
  }
  return s + ")";
}

}  // namespace

std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  const std::size_t n = r.input.theta.size();
  os << "theta (" << n << "x" << n << ", " << to_string(r.input.kind) << ", n_tensor = " << r.input.n_tensor.get_str()
     << ")\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "  ";
    for (std::size_t j = 0; j < n; ++j) os << (j ? "  " : "") << r.input.theta(i, j).get_str();
    os << '\n';
  }
  os << "\n[center and rank]\n";
  os << "  ell (common denominator)                 " << r.profile.ell.get_str() << '\n';
  os << "  h = [(Z^n + theta Z^n) : Z^n]            " << r.profile.h.get_str() << '\n';
  os << "  PI degree = sqrt(h)                      " << r.profile.pi_degree.get_str() << '\n';
  os << "  q_i = lcm of row denominators            " << join_integers(r.profile.q) << '\n';
  os << "  integral kernel theta^perp (HNF basis)  ";
  for (const auto& row : r.profile.kernel_basis) os << ' ' << join_integers(row);
  os << '\n';
  os << "  skew divisors of ell*theta               " << join_integers(r.profile.divisors) << ", zero rank "
     << r.profile.zero_rank << '\n';
  os << "\n[torus decomposition C(T^k) (x) A_theta_1 (x) ...]\n";
  os << "  k = " << r.decomposition.k << ", factors:";
  if (r.decomposition.factors.empty()) os << " (none)";
  for (const auto& f : r.decomposition.factors) os << ' ' << f.get_str();
  os << '\n';
  os << "\n[Azumaya locus]\n";
  os << "  Azumaya (theta integral)                 " << (r.azumaya ? "yes" : "no") << '\n';
  os << "  jump complex {F : h_F < h}               " << join_faces(r.jump_complex) << '\n';
  os << "  Azumaya faces {F : h_F = h}              " << join_faces(r.azumaya_faces) << '\n';
  os << "\n[center skeleton]\n";
  os << "  dim X = (n-1) + rank theta^perp          " << r.center_skeleton.dim_x << '\n';
  os << "  theta^perp = prod q_i Z (sphere)         " << (r.center_skeleton.sphere_sufficient ? "yes" : "no") << '\n';
  os << "  face        torus rank  cover degree  block size  blocks  fiber dim\n";
  for (std::size_t i = 0; i < r.fiber_table.size(); ++i) {
    const auto& s = r.center_skeleton.faces[i];
    const auto& f = r.fiber_table[i];
    std::string label = s.face.to_string();
    label.resize(std::max<std::size_t>(label.size(), 12), ' ');
    os << "  " << label << std::string(10 - std::min<std::size_t>(10, std::to_string(s.torus_rank).size()), ' ')
       << s.torus_rank << "  " << std::string(12 - std::min<std::size_t>(12, s.cover_degree.get_str().size()), ' ')
       << s.cover_degree.get_str() << "  "
       << std::string(10 - std::min<std::size_t>(10, f.block_size.get_str().size()), ' ') << f.block_size.get_str()
       << "  " << std::string(6 - std::min<std::size_t>(6, f.block_count.get_str().size()), ' ')
       << f.block_count.get_str() << "  "
       << std::string(9 - std::min<std::size_t>(9, f.total_dim.get_str().size()), ' ') << f.total_dim.get_str() << '\n';
  }
  os << "\n[center finiteness]\n";
  os << "  finitely generated over the center       " << (r.center_finiteness.algebraically_finite ? "yes" : "no")
     << '\n';
  os << "  topologically center-finite              " << (r.center_finiteness.topologically_finite ? "yes" : "no")
     << '\n';
  if (r.oracle_reports) {
    os << "\n[oracle cross-checks]\n";
    for (const auto& o : *r.oracle_reports) {
      os << "  " << (o.agrees ? "ok  " : "FAIL") << "  " << o.checked_quantity << "  main " << o.main_value.get_str()
         << "  oracle " << o.oracle_value.get_str() << '\n';
    }
  }
  return os.str();
}

}  // namespace nctorus
