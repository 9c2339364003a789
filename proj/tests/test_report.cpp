#include <doctest.h>

#include "nctorus/errors.hpp"
#include "nctorus/report.hpp"
#include "support.hpp"

using namespace nctorus;
using namespace nctorus::testing;

namespace {

constexpr const char* kS5 = R"({"n": 3, "entries": [["0","1/2","1/2"],["-1/2","0","1/2"],["-1/2","-1/2","0"]]})";

}  // namespace

TEST_CASE("input document parsing") {
  const ReportInput in = parse_input_document(kS5);
  CHECK(in.theta == s5_matrix());
  CHECK(in.n_tensor == 1);
  CHECK(in.kind == AlgebraKind::sphere);

  const ReportInput mixed =
      parse_input_document(R"({"n": 2, "entries": [[0, "1/3"], ["-1/3", 0]], "n_tensor": 4, "kind": "torus"})");
  CHECK(mixed.theta == two_by_two(Rational(1, 3)));
  CHECK(mixed.n_tensor == 4);
  CHECK(mixed.kind == AlgebraKind::torus);
}

TEST_CASE("malformed input documents") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"entries": [["0"]]})",
      R"({"n": 2})",
      R"({"n": 2, "entries": [["0","1"],["1","0"]]})",
      R"({"n": 2, "entries": [["0","1"]]})",
      R"({"n": 2, "entries": [["0","1"],["-1"]]})",
      R"({"n": 2, "entries": [[0, 0.5],[-0.5, 0]]})",
      R"({"n": 2, "entries": [["0","1/0"],["-1/0","0"]]})",
      R"({"n": 2, "entries": [["1","0"],["0","0"]]})",
      R"({"n": 0, "entries": []})",
      R"({"n": 1, "entries": [["0"]], "kind": "cube"})",
      R"({"n": 1, "entries": [["0"]], "n_tensor": 0})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_input_document(text), InvalidInput);
  }
}

TEST_CASE("matrix shorthand") {
  CHECK(parse_matrix_shorthand("0,1/2,1/2;-1/2,0,1/2;-1/2,-1/2,0") == s5_matrix());
  CHECK(parse_matrix_shorthand(" 0 , 2/5 ; -2/5 , 0 ") == two_by_two(Rational(2, 5)));
  CHECK_THROWS_AS(parse_matrix_shorthand("0,1;1"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix_shorthand("0,0.5;-0.5,0"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix_shorthand(""), InvalidInput);
}

TEST_CASE("s5 report contents") {
  ReportOptions opts;
  opts.oracle = true;
  const InvariantReport r = build_report(parse_input_document(kS5), opts);
  CHECK(r.profile.h == 4);
  CHECK(r.profile.pi_degree == 2);
  CHECK(r.jump_complex == std::vector<Face>{Face{}, Face{0}, Face{1}, Face{2}});
  CHECK_FALSE(r.center_skeleton.sphere_sufficient);
  CHECK_FALSE(r.azumaya);
  REQUIRE(r.oracle_reports.has_value());
  CHECK_FALSE(r.oracle_reports->empty());
  for (const auto& o : *r.oracle_reports) CHECK(o.agrees);
}

TEST_CASE("json round trip and determinism") {
  std::mt19937_64 rng(600);
  for (int trial = 0; trial < 40; ++trial) {
    ReportInput in;
    in.theta = random_skew(rng, 1 + trial % 5, 8);
    in.n_tensor = 1 + trial % 3;
    in.kind = trial % 2 ? AlgebraKind::torus : AlgebraKind::sphere;
    ReportOptions opts;
    opts.oracle = trial % 4 == 0 && in.theta.common_denominator() <= 12;
    opts.faces = static_cast<FaceFilter>(trial % 3);
    const InvariantReport r = build_report(in, opts);
    const std::string json = to_json(r);
    REQUIRE(report_from_json(json) == r);
    REQUIRE(to_json(report_from_json(json)) == json);
    REQUIRE(to_json(build_report(in, opts)) == json);
    REQUIRE(to_text(r) == to_text(build_report(in, opts)));
  }
}

TEST_CASE("face filters") {
  const ReportInput in = parse_input_document(kS5);
  ReportOptions opts;
  opts.faces = FaceFilter::all;
  CHECK(build_report(in, opts).fiber_table.size() == 8);
  opts.faces = FaceFilter::jump;
  CHECK(build_report(in, opts).fiber_table.size() == 4);
  opts.faces = FaceFilter::maximal;
  CHECK(build_report(in, opts).fiber_table.size() == 4);
  CHECK(parse_face_filter("maximal") == FaceFilter::maximal);
  CHECK_THROWS_AS(parse_face_filter("some"), InvalidInput);
}

TEST_CASE("self check rejects tampered reports") {
  InvariantReport r = build_report(parse_input_document(kS5));
  CHECK_NOTHROW(check_report(r));
  InvariantReport bad_h = r;
  bad_h.profile.h = 9;
  CHECK_THROWS_AS(check_report(bad_h), std::logic_error);
  InvariantReport bad_flag = r;
  bad_flag.azumaya = true;
  CHECK_THROWS_AS(check_report(bad_flag), std::logic_error);
  CHECK_THROWS_AS(report_from_json(R"({"input": 1})"), InvalidInput);
}
