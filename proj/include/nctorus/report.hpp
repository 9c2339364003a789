#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nctorus/classification.hpp"
#include "nctorus/face_geometry.hpp"
#include "nctorus/oracles.hpp"
#include "nctorus/theta.hpp"

namespace nctorus {

struct ReportInput {
  SkewRationalMatrix theta;
  Integer n_tensor = 1;
  AlgebraKind kind = AlgebraKind::sphere;

  friend bool operator==(const ReportInput&, const ReportInput&) = default;
};

/// Parses {"n": ..., "entries": [["0","1/2"], ...], "n_tensor": ..., "kind": ...}.
/// Entries must be strings or JSON integers; floats are rejected.
ReportInput parse_input_document(std::string_view text);

/// Parses the inline form "0,1/2;-1/2,0" (rows separated by ';').
SkewRationalMatrix parse_matrix_shorthand(std::string_view text);

struct ProfileSummary {
  Integer ell;
  Integer h;
  Integer pi_degree;
  std::vector<Integer> q;
  std::vector<IntVector> kernel_basis;
  std::vector<Integer> divisors;  // skew elementary divisors of ell * theta
  std::size_t zero_rank = 0;

  friend bool operator==(const ProfileSummary&, const ProfileSummary&) = default;
};

struct DecompositionSummary {
  std::size_t k = 0;
  std::vector<Rational> factors;
  std::vector<IntVector> witness;

  friend bool operator==(const DecompositionSummary&, const DecompositionSummary&) = default;
};

struct SkeletonSummary {
  std::size_t dim_x = 0;
  bool sphere_sufficient = false;
  std::vector<SkeletonFace> faces;

  friend bool operator==(const SkeletonSummary&, const SkeletonSummary&) = default;
};

struct FiberRow {
  Face face;
  Integer block_size;
  Integer block_count;
  Integer total_dim;

  friend bool operator==(const FiberRow&, const FiberRow&) = default;
};

struct InvariantReport {
  ReportInput input;
  ProfileSummary profile;
  DecompositionSummary decomposition;
  bool azumaya = false;
  std::vector<Face> jump_complex;
  std::vector<Face> azumaya_faces;
  SkeletonSummary center_skeleton;
  std::vector<FiberRow> fiber_table;
  CenterFiniteness center_finiteness;
  std::optional<std::vector<oracle::OracleReport>> oracle_reports;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Which faces appear in the per-face tables (skeleton and fiber table).
enum class FaceFilter {
  all,      // every subset of [n]
  maximal,  // facets of the jump complex plus the full face
  jump,     // members of the jump complex
};
FaceFilter parse_face_filter(std::string_view text);

struct ReportOptions {
  FaceFilter faces = FaceFilter::all;
  bool oracle = false;
  EnumerationOptions enumeration;
};

/// Computes every invariant and runs check_report before returning.
InvariantReport build_report(const ReportInput& input, const ReportOptions& options = {});

/// Internal-consistency assertions; throws std::logic_error on violation.
void check_report(const InvariantReport& report);

std::string to_json(const InvariantReport& report);
InvariantReport report_from_json(std::string_view text);
std::string to_text(const InvariantReport& report);

}  // namespace nctorus
