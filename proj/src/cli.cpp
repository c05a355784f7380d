#include "fibtop/cli.hpp"

#include "fibtop/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fibtop {

AlexanderResult cmd_alexander(std::string_view presentation_text, const std::vector<std::string>& vars) {
  AlexanderResult r;
  r.presentation = GroupPresentation::parse(presentation_text);
  r.abelianization = abelianization(r.presentation);
  if (!vars.empty()) {
    if (vars.size() != r.abelianization.group.free_rank)
      throw std::invalid_argument("--vars names " + std::to_string(vars.size()) + " variables but H_1 has free rank " +
                                  std::to_string(r.abelianization.group.free_rank));
    r.abelianization = abelianization(r.presentation, vars);
  }
  PolyMatrix m = alexander_matrix(r.presentation, r.abelianization.map);
  r.matrix_rows = m.rows();
  r.matrix_cols = m.cols();
  r.delta = alexander_polynomial(r.presentation, r.abelianization);
  if (!r.delta.full.is_zero() && r.abelianization.map.vars.size() > 0)
    r.symmetrized = symmetrize(r.delta.full, r.abelianization.map.vars.name(0));
  return r;
}

FoxResult cmd_fox(std::string_view word, std::string_view gen, const std::vector<std::string>& gens) {
  std::vector<std::string> names = gens;
  if (names.empty()) {
    std::istringstream in{std::string(word)};
    std::string tok;
    while (in >> tok) {
      std::string name = tok.substr(0, tok.find('^'));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
  }
  FoxResult r;
  try {
    r.alphabet = Alphabet(names);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  const Word w = r.alphabet.parse(word);
  r.derivative = fox_derivative(w, gen, r.alphabet);
  AbelianizationMap amap;
  amap.vars = VarSet(names);
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::vector<Integer> img(names.size(), Integer(0));
    img[i] = 1;
    amap.images.push_back(img);
  }
  r.abelianized = amap.apply(r.derivative);
  return r;
}

ReportDocument cmd_report(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  return build_report(family_phi(genus));
}

ReportDocument cmd_twists(std::string_view word, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  return build_report(parse_twist_word(word, genus));
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int emit_report(const ReportDocument& doc, bool json_out, std::ostream& out, std::ostream& err) {
  if (json_out)
    out << to_json(doc).dump(2) << '\n';
  else
    out << to_text(doc);
  if (doc.invariant_kernel_dim != 1)
    err << "note: dim ker(phi^* - 1) = " << doc.invariant_kernel_dim << ", not 1\n";
  const auto bad = consistency_violations(doc);
  for (const auto& b : bad) err << "consistency check failed: " << b << '\n';
  return bad.empty() ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of mapping tori and circle bundles over them"};
  app.require_subcommand(1);

  int genus = 0;
  bool json_out = false;
  auto* report = app.add_subcommand("report", "full pipeline for the standard monodromy of genus G");
  report->add_option("--genus", genus, "surface genus")->required();
  report->add_flag("--json", json_out, "emit JSON");

  std::string twist_word;
  auto* twists = app.add_subcommand("twists", "full pipeline for a product of Dehn twists");
  twists->add_option("word", twist_word, "e.g. \"Tb2 Ta2^-1 Ta1\"")->required();
  twists->add_option("--genus", genus, "surface genus")->required();
  twists->add_flag("--json", json_out, "emit JSON");

  std::string file;
  std::string vars;
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a presentation file");
  alex->add_option("file", file, "presentation file")->required();
  alex->add_option("--vars", vars, "comma-separated names for the H_1 coordinates");

  std::string fox_word;
  std::string fox_gen;
  std::string fox_gens;
  auto* fox = app.add_subcommand("fox", "Fox derivative of a word");
  fox->add_option("word", fox_word, "word, e.g. \"a b a^-1 b^-1\"")->required();
  fox->add_option("gen", fox_gen, "generator")->required();
  fox->add_option("--gens", fox_gens, "comma-separated alphabet (default: generators of the word)");

  // CLI11 consumes a reversed argument vector without the program name.
  std::vector<std::string> rev;
  for (std::size_t i = args.size(); i-- > 1;) rev.push_back(args[i]);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*report) return emit_report(cmd_report(genus), json_out, out, err);
    if (*twists) return emit_report(cmd_twists(twist_word, genus), json_out, out, err);
    if (*alex) {
      std::ifstream in(file);
      if (!in) {
        err << "error: cannot read '" << file << "'\n";
        return kExitUsage;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      const AlexanderResult r = cmd_alexander(buf.str(), split_commas(vars));
      out << "H1: " << r.abelianization.group.to_string() << '\n';
      out << "variables: ";
      for (std::size_t i = 0; i < r.abelianization.map.vars.size(); ++i)
        out << (i ? "," : "") << r.abelianization.map.vars.name(i);
      out << '\n';
      out << "alexander_matrix: " << r.matrix_rows << "x" << r.matrix_cols << '\n';
      out << "E1: " << r.delta.full.to_string() << '\n';
      out << "E1_t: " << r.delta.in_t.to_string() << '\n';
      out << "symmetrized: " << (r.symmetrized ? r.symmetrized->poly.to_string() : std::string("undefined (E1 = 0)"))
          << '\n';
      return kExitOk;
    }
    if (*fox) {
      const FoxResult r = cmd_fox(fox_word, fox_gen, split_commas(fox_gens));
      out << r.derivative.to_string(r.alphabet) << '\n';
      out << "abelianized: " << r.abelianized.to_string() << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace fibtop
