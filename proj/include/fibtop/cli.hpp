#pragma once

#include "fibtop/report.hpp"
#include "fibtop/torus3.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fibtop {

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitUsage = 2 };

struct AlexanderResult {
  GroupPresentation presentation;
  Abelianization abelianization;
  std::size_t matrix_rows = 0;
  std::size_t matrix_cols = 0;
  AlexanderPolynomial delta;
  /// Absent when E_1 = 0.
  std::optional<Symmetrized> symmetrized;
};

/// Alexander invariants of a presentation in text form. `vars`, when nonempty,
/// names the free H_1 coordinates. Throws ParseError or std::invalid_argument.
AlexanderResult cmd_alexander(std::string_view presentation_text, const std::vector<std::string>& vars = {});

struct FoxResult {
  Alphabet alphabet;
  GroupRingElem derivative;
  LaurentPoly abelianized;  // each generator its own variable
};

/// Fox derivative of `word` by `gen`. Without `gens` the alphabet is the
/// generators of the word in order of appearance.
FoxResult cmd_fox(std::string_view word, std::string_view gen, const std::vector<std::string>& gens = {});

ReportDocument cmd_report(int genus);
ReportDocument cmd_twists(std::string_view word, int genus);

/// argv[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fibtop
