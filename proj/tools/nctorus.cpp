// nctorus: invariants of rational noncommutative tori and spheres.
//
//   nctorus report [FILE|-] [--matrix "0,1/2;-1/2,0"] [--format json|text] ...
//   nctorus iso sphere3|torus2 THETA N THETA' N'
//   nctorus congruence --matrix A --other B
//
// Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 enumeration guard.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "nctorus/classification.hpp"
#include "nctorus/errors.hpp"
#include "nctorus/report.hpp"

namespace {

using namespace nctorus;

constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReportInput load_input(const std::string& path, const std::string& matrix) {
  if (!path.empty() && !matrix.empty()) throw InvalidInput("give either an input file or --matrix, not both");
  if (path.empty() && matrix.empty()) throw InvalidInput("no input: give a file path, '-' for stdin, or --matrix");
  if (!matrix.empty()) return ReportInput{parse_matrix_shorthand(matrix), 1, AlgebraKind::sphere};
  return parse_input_document(read_source(path));
}

std::string chain_text(const SkewNormalForm& nf) {
  std::string s = "(";
  for (std::size_t i = 0; i < nf.divisors.size(); ++i) s += (i ? ", " : "") + nf.divisors[i].get_str();
  return s + ") zero_rank " + std::to_string(nf.zero_rank);
}

std::string class_text(const Rational& theta, const Integer& n) {
  const CharClass c = characteristic_two_class(theta.get_num(), theta.get_den(), n);
  return c.residue.get_str() + " mod " + c.modulus.get_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of rational noncommutative tori and spheres"};
  app.require_subcommand(1);

  std::string input_path;
  std::string matrix;
  std::string format = "json";
  std::string faces = "all";
  std::string kind_override;
  std::string n_tensor_override;
  bool run_oracles = false;
  std::size_t max_bits = 20;

  auto* report = app.add_subcommand("report", "Compute the full invariant report for a deformation matrix");
  report->add_option("input", input_path, "JSON input document, or '-' for stdin");
  report->add_option("--matrix", matrix, "Inline matrix, rows separated by ';', e.g. \"0,1/2;-1/2,0\"");
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  report->add_option("--faces", faces, "Faces listed in the per-face tables")
      ->check(CLI::IsMember({"all", "maximal", "jump"}));
  report->add_option("--n-tensor", n_tensor_override, "Matrix tensorand size (overrides the input document)");
  report->add_option("--kind", kind_override, "torus or sphere (overrides the input document)")
      ->check(CLI::IsMember({"torus", "sphere"}));
  report->add_flag("--oracle", run_oracles, "Append brute-force oracle cross-checks");
  report->add_option("--max-bits", max_bits, "Largest n for subset enumeration")->check(CLI::Range(0, 30));

  std::string iso_kind;
  std::string theta_text;
  std::string n_text;
  std::string theta_prime_text;
  std::string n_prime_text;
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of 3-sphere or 2-torus algebras tensored with M_n");
  iso->add_option("kind", iso_kind, "sphere3 or torus2")->required()->check(CLI::IsMember({"sphere3", "torus2"}));
  iso->add_option("theta", theta_text, "First parameter, e.g. 1/3")->required();
  iso->add_option("n", n_text, "First tensorand size")->required();
  iso->add_option("theta_prime", theta_prime_text, "Second parameter")->required();
  iso->add_option("n_prime", n_prime_text, "Second tensorand size")->required();

  std::string matrix_a;
  std::string matrix_b;
  std::string file_a;
  std::string file_b;
  auto* congruence = app.add_subcommand("congruence", "Decide GL_n(Z)-congruence of two deformation matrices");
  congruence->add_option("--matrix", matrix_a, "First matrix (inline form)");
  congruence->add_option("--other", matrix_b, "Second matrix (inline form)");
  congruence->add_option("--file", file_a, "First matrix as a JSON input document");
  congruence->add_option("--other-file", file_b, "Second matrix as a JSON input document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*report) {
      ReportInput input = load_input(input_path, matrix);
      if (!n_tensor_override.empty()) {
        input.n_tensor = parse_integer(n_tensor_override);
        if (input.n_tensor <= 0) throw InvalidInput("--n-tensor must be positive");
      }
      if (!kind_override.empty()) input.kind = parse_algebra_kind(kind_override);
      ReportOptions options;
      options.faces = parse_face_filter(faces);
      options.oracle = run_oracles;
      options.enumeration.max_vertices = max_bits;
      const InvariantReport r = build_report(input, options);
      std::cout << (format == "json" ? to_json(r) : to_text(r));
      if (r.oracle_reports) {
        for (const auto& o : *r.oracle_reports)
          if (!o.agrees) {
            std::cerr << "oracle disagreement on " << o.checked_quantity << '\n';
            return kExitInternal;
          }
      }
      return 0;
    }
    if (*iso) {
      const Rational theta = parse_rational(theta_text);
      const Rational theta_prime = parse_rational(theta_prime_text);
      const Integer n = parse_integer(n_text);
      const Integer n_prime = parse_integer(n_prime_text);
      if (n <= 0 || n_prime <= 0) throw InvalidInput("tensorand sizes must be positive");
      const IsoRelation relation = iso_relation(theta, n, theta_prime, n_prime);
      const bool yes = relation == IsoRelation::shift || relation == IsoRelation::reflection;
      std::cout << (yes ? "ISOMORPHIC" : "NOT ISOMORPHIC") << " (" << describe(relation) << ")\n";
      std::cout << "class(theta)  = " << class_text(theta, n) << '\n';
      std::cout << "class(theta') = " << class_text(theta_prime, n_prime) << '\n';
      return 0;
    }
    if (*congruence) {
      const SkewRationalMatrix a =
          !matrix_a.empty() ? parse_matrix_shorthand(matrix_a) : load_input(file_a, "").theta;
      const SkewRationalMatrix b =
          !matrix_b.empty() ? parse_matrix_shorthand(matrix_b) : load_input(file_b, "").theta;
      if (a.size() != b.size()) {
        std::cout << "NOT CONGRUENT (sizes " << a.size() << " and " << b.size() << ")\n";
        return 0;
      }
      const Integer ell = lcm(a.common_denominator(), b.common_denominator());
      const bool yes = congruent_over_z(a, b);
      std::cout << (yes ? "CONGRUENT" : "NOT CONGRUENT") << " (ell = " << ell.get_str() << ")\n";
      std::cout << "divisors(ell * theta)  = " << chain_text(scaled_normal_form(a, ell)) << '\n';
      std::cout << "divisors(ell * theta') = " << chain_text(scaled_normal_form(b, ell)) << '\n';
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
