#pragma once

#include "fibtop/fourman.hpp"
#include "fibtop/surface.hpp"
#include "fibtop/torus3.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fibtop {

/// Everything the pipeline computes for one monodromy.
struct ReportDocument {
  int genus = 1;
  std::string twist_word;
  std::size_t invariant_kernel_dim = 0;  // dim ker(phi^* - 1)

  // Y
  std::size_t b1_y = 0;
  std::string h1_y;
  LaurentPoly alexander_full;
  LaurentPoly alexander_t;
  LaurentPoly milnor_torsion;
  LaurentPoly sw_y;

  // X
  std::vector<Integer> euler_class;
  std::size_t b1_x = 0;
  std::size_t b2_x = 0;
  std::size_t b3_x = 0;
  long euler_characteristic = 0;
  std::optional<long> signature;
  std::optional<std::size_t> b_plus;
  std::optional<std::size_t> b_minus;
  std::string intersection_form;
  LaurentPoly sw_x;
  std::optional<std::vector<Integer>> canonical_class;
  std::optional<Integer> k_squared;
  std::optional<Integer> k_dot_omega;
  std::optional<std::string> kodaira;
  std::optional<Integer> dim_canonical;
  std::string lefschetz_verdict;
  std::vector<std::vector<Integer>> annihilator;
  bool symplectic = false;
  bool taubes_axiom = false;
  bool sw_nonzero = false;
  bool wall_crossing_trivial = false;
  std::string psc_verdict;
  std::string complex_verdict;
  bool sw_simple_type = false;

  // Independent cross-checks.
  LaurentPoly charpoly;
  std::optional<LaurentPoly> charpoly_over_delta;
  bool betti_wang_agrees = false;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument build_report(const MappingClass& mc);

/// Violated internal identities (empty when consistent): chi_top = 2 - 2 b1 + b2
/// and kappa matching (K^2, K.[omega]).
std::vector<std::string> consistency_violations(const ReportDocument& doc);

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ReportDocument& doc);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
ReportDocument report_from_json(const nlohmann::json& j);

/// `key: value` lines carrying the same content as the JSON form.
std::string to_text(const ReportDocument& doc);

}  // namespace fibtop
