#include "fibtop/report.hpp"

#include <sstream>
#include <stdexcept>

namespace fibtop {

using nlohmann::json;

namespace {

json int_to_json(const Integer& z) {
  if (z.fits_slong_p() && sizeof(long) >= 8) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer int_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw std::invalid_argument("expected an integer");
}

json vec_to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const Integer& z : v) a.push_back(int_to_json(z));
  return a;
}

std::vector<Integer> vec_from_json(const json& j) {
  std::vector<Integer> v;
  for (const json& e : j) v.push_back(int_from_json(e));
  return v;
}

template <class T, class F>
json opt_to_json(const std::optional<T>& o, F f) {
  return o ? f(*o) : json(nullptr);
}

template <class T, class F>
std::optional<T> opt_from_json(const json& j, F f) {
  if (j.is_null()) return std::nullopt;
  return f(j);
}

std::string vec_text(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json::array({json(e), int_to_json(c)}));
  return json{{"text", p.to_string()}, {"vars", p.vars().names()}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
  VarSet vars(j.at("vars").get<std::vector<std::string>>());
  LaurentPoly::TermMap terms;
  for (const json& t : j.at("terms")) terms[t.at(0).get<Exponents>()] += int_from_json(t.at(1));
  LaurentPoly p = LaurentPoly::from_terms(vars, terms);
  if (j.contains("text") && j.at("text").get<std::string>() != p.to_string())
    throw std::invalid_argument("polynomial text '" + j.at("text").get<std::string>() + "' disagrees with its terms");
  return p;
}

ReportDocument build_report(const MappingClass& mc) {
  ReportDocument d;
  d.genus = mc.genus;
  d.twist_word = format_twist_word(mc);
  {
    IntMatrix a = cohomology_action(mc);
    d.invariant_kernel_dim = nullity(a - identity_matrix(a.rows()));
  }

  MappingTorusY y(mc);
  d.b1_y = y.betti1();
  d.h1_y = y.abelianization().group.to_string();
  const AlexanderPolynomial delta = alexander_polynomial(y);
  d.alexander_full = delta.full;
  d.alexander_t = delta.in_t;
  if (!delta.full.is_zero()) {
    d.milnor_torsion = milnor_torsion(delta).poly;
    d.sw_y = sw3(d.milnor_torsion);
  } else {
    d.milnor_torsion = delta.full;
    d.sw_y = delta.full;
  }
  d.betti_wang_agrees = betti_wang(mc) == y.abelianization().group.free_rank;

  d.charpoly = charpoly_oracle(mc);
  if (!delta.in_t.is_zero()) {
    if (auto q = try_exact_div(d.charpoly, delta.in_t.embed(d.charpoly.vars())))
      d.charpoly_over_delta = normalize_unit(*q);
  }

  CircleBundleX x(std::move(y));
  d.euler_class = x.euler_class();
  const FourManifoldInvariants inv = analyze(x, d.sw_y);
  d.b1_x = inv.betti.b1;
  d.b2_x = inv.betti.b2;
  d.b3_x = inv.betti.b3;
  d.euler_characteristic = inv.betti.euler_characteristic;
  d.signature = inv.form.signature;
  d.b_plus = inv.form.b_plus;
  d.b_minus = inv.form.b_minus;
  d.intersection_form = inv.form.to_string();
  d.sw_x = inv.sw.poly;
  if (inv.canonical) {
    d.canonical_class = inv.canonical->coords;
    d.k_squared = inv.canonical->square;
    d.k_dot_omega = inv.canonical->dot_omega;
  }
  if (inv.kodaira) d.kodaira = to_string(*inv.kodaira);
  d.dim_canonical = inv.dim_canonical;
  d.lefschetz_verdict = inv.lefschetz.verdict();
  for (std::size_t i = 0; i < inv.lefschetz.annihilator.rows(); ++i) {
    std::vector<Integer> r;
    for (std::size_t j = 0; j < inv.lefschetz.annihilator.cols(); ++j) r.push_back(inv.lefschetz.annihilator(i, j));
    d.annihilator.push_back(std::move(r));
  }
  d.symplectic = inv.symplectic;
  const ObstructionReport rep = obstruction_report(inv);
  d.taubes_axiom = rep.taubes_axiom;
  d.sw_nonzero = rep.sw_nonzero;
  d.wall_crossing_trivial = rep.wall_crossing_trivial;
  d.psc_verdict = rep.psc_verdict;
  d.complex_verdict = rep.complex_verdict;
  d.sw_simple_type = rep.sw_simple_type;
  return d;
}

std::vector<std::string> consistency_violations(const ReportDocument& d) {
  std::vector<std::string> out;
  const long expected = 2 - 2 * static_cast<long>(d.b1_x) + static_cast<long>(d.b2_x);
  if (d.euler_characteristic != expected)
    out.push_back("euler characteristic " + std::to_string(d.euler_characteristic) + " != 2 - 2 b1 + b2 = " +
                  std::to_string(expected));
  if (d.kodaira) {
    if (!d.k_squared || !d.k_dot_omega) {
      out.push_back("kodaira dimension reported without K^2 and K.[omega]");
    } else {
      try {
        const std::string k = to_string(kodaira_dimension(*d.k_squared, *d.k_dot_omega));
        if (k != *d.kodaira) out.push_back("kodaira dimension " + *d.kodaira + " inconsistent with (K^2, K.[omega])");
      } catch (const std::invalid_argument& e) {
        out.push_back(e.what());
      }
    }
  }
  if (d.b_plus && d.b_minus && d.signature &&
      static_cast<long>(*d.b_plus) - static_cast<long>(*d.b_minus) != *d.signature)
    out.push_back("signature differs from b+ - b-");
  if (!d.betti_wang_agrees) out.push_back("Wang-sequence b1 disagrees with the abelianization");
  return out;
}

json to_json(const ReportDocument& d) {
  json j;
  j["genus"] = d.genus;
  j["twist_word"] = d.twist_word;
  j["invariant_kernel_dim"] = d.invariant_kernel_dim;
  j["b1_y"] = d.b1_y;
  j["h1_y"] = d.h1_y;
  j["alexander_full"] = poly_to_json(d.alexander_full);
  j["alexander_t"] = poly_to_json(d.alexander_t);
  j["milnor_torsion"] = poly_to_json(d.milnor_torsion);
  j["sw_y"] = poly_to_json(d.sw_y);
  j["euler_class"] = vec_to_json(d.euler_class);
  j["b1_x"] = d.b1_x;
  j["b2_x"] = d.b2_x;
  j["b3_x"] = d.b3_x;
  j["euler_characteristic"] = d.euler_characteristic;
  j["signature"] = opt_to_json(d.signature, [](long v) { return json(v); });
  j["b_plus"] = opt_to_json(d.b_plus, [](std::size_t v) { return json(v); });
  j["b_minus"] = opt_to_json(d.b_minus, [](std::size_t v) { return json(v); });
  j["intersection_form"] = d.intersection_form;
  j["sw_x"] = poly_to_json(d.sw_x);
  j["canonical_class"] = opt_to_json(d.canonical_class, vec_to_json);
  j["k_squared"] = opt_to_json(d.k_squared, int_to_json);
  j["k_dot_omega"] = opt_to_json(d.k_dot_omega, int_to_json);
  j["kodaira"] = opt_to_json(d.kodaira, [](const std::string& s) { return json(s); });
  j["dim_canonical"] = opt_to_json(d.dim_canonical, int_to_json);
  j["lefschetz_verdict"] = d.lefschetz_verdict;
  json ann = json::array();
  for (const auto& r : d.annihilator) ann.push_back(vec_to_json(r));
  j["annihilator"] = ann;
  j["symplectic"] = d.symplectic;
  j["taubes_axiom"] = d.taubes_axiom;
  j["sw_nonzero"] = d.sw_nonzero;
  j["wall_crossing_trivial"] = d.wall_crossing_trivial;
  j["psc_verdict"] = d.psc_verdict;
  j["complex_verdict"] = d.complex_verdict;
  j["sw_simple_type"] = d.sw_simple_type;
  j["oracles"] = {
      {"charpoly", poly_to_json(d.charpoly)},
      {"charpoly_over_delta", opt_to_json(d.charpoly_over_delta, poly_to_json)},
      {"betti_wang_agrees", d.betti_wang_agrees},
  };
  return j;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument d;
  d.genus = j.at("genus").get<int>();
  d.twist_word = j.at("twist_word").get<std::string>();
  d.invariant_kernel_dim = j.at("invariant_kernel_dim").get<std::size_t>();
  d.b1_y = j.at("b1_y").get<std::size_t>();
  d.h1_y = j.at("h1_y").get<std::string>();
  d.alexander_full = poly_from_json(j.at("alexander_full"));
  d.alexander_t = poly_from_json(j.at("alexander_t"));
  d.milnor_torsion = poly_from_json(j.at("milnor_torsion"));
  d.sw_y = poly_from_json(j.at("sw_y"));
  d.euler_class = vec_from_json(j.at("euler_class"));
  d.b1_x = j.at("b1_x").get<std::size_t>();
  d.b2_x = j.at("b2_x").get<std::size_t>();
  d.b3_x = j.at("b3_x").get<std::size_t>();
  d.euler_characteristic = j.at("euler_characteristic").get<long>();
  d.signature = opt_from_json<long>(j.at("signature"), [](const json& v) { return v.get<long>(); });
  d.b_plus = opt_from_json<std::size_t>(j.at("b_plus"), [](const json& v) { return v.get<std::size_t>(); });
  d.b_minus = opt_from_json<std::size_t>(j.at("b_minus"), [](const json& v) { return v.get<std::size_t>(); });
  d.intersection_form = j.at("intersection_form").get<std::string>();
  d.sw_x = poly_from_json(j.at("sw_x"));
  d.canonical_class = opt_from_json<std::vector<Integer>>(j.at("canonical_class"), vec_from_json);
  d.k_squared = opt_from_json<Integer>(j.at("k_squared"), int_from_json);
  d.k_dot_omega = opt_from_json<Integer>(j.at("k_dot_omega"), int_from_json);
  d.kodaira = opt_from_json<std::string>(j.at("kodaira"), [](const json& v) { return v.get<std::string>(); });
  d.dim_canonical = opt_from_json<Integer>(j.at("dim_canonical"), int_from_json);
  d.lefschetz_verdict = j.at("lefschetz_verdict").get<std::string>();
  for (const json& r : j.at("annihilator")) d.annihilator.push_back(vec_from_json(r));
  d.symplectic = j.at("symplectic").get<bool>();
  d.taubes_axiom = j.at("taubes_axiom").get<bool>();
  d.sw_nonzero = j.at("sw_nonzero").get<bool>();
  d.wall_crossing_trivial = j.at("wall_crossing_trivial").get<bool>();
  d.psc_verdict = j.at("psc_verdict").get<std::string>();
  d.complex_verdict = j.at("complex_verdict").get<std::string>();
  d.sw_simple_type = j.at("sw_simple_type").get<bool>();
  const json& o = j.at("oracles");
  d.charpoly = poly_from_json(o.at("charpoly"));
  d.charpoly_over_delta = opt_from_json<LaurentPoly>(o.at("charpoly_over_delta"), poly_from_json);
  d.betti_wang_agrees = o.at("betti_wang_agrees").get<bool>();
  return d;
}

std::string to_text(const ReportDocument& d) {
  std::ostringstream s;
  auto opt = [](const auto& o, auto f) -> std::string { return o ? f(*o) : std::string("unknown"); };
  auto num = [](const auto& v) { return std::to_string(v); };
  auto big = [](const Integer& v) { return v.get_str(); };
  s << "genus: " << d.genus << '\n';
  s << "twist_word: " << (d.twist_word.empty() ? "(identity)" : d.twist_word) << '\n';
  s << "invariant_kernel_dim: " << d.invariant_kernel_dim << '\n';
  s << "b1_y: " << d.b1_y << '\n';
  s << "h1_y: " << d.h1_y << '\n';
  s << "alexander_full: " << d.alexander_full.to_string() << '\n';
  s << "alexander_t: " << d.alexander_t.to_string() << '\n';
  s << "milnor_torsion: " << d.milnor_torsion.to_string() << '\n';
  s << "sw_y: " << d.sw_y.to_string() << '\n';
  s << "euler_class: " << vec_text(d.euler_class) << '\n';
  s << "b1_x: " << d.b1_x << '\n';
  s << "b2_x: " << d.b2_x << '\n';
  s << "b3_x: " << d.b3_x << '\n';
  s << "euler_characteristic: " << d.euler_characteristic << '\n';
  s << "signature: " << opt(d.signature, num) << '\n';
  s << "b_plus: " << opt(d.b_plus, num) << '\n';
  s << "b_minus: " << opt(d.b_minus, num) << '\n';
  s << "intersection_form: " << d.intersection_form << '\n';
  s << "sw_x: " << d.sw_x.to_string() << '\n';
  s << "canonical_class: " << opt(d.canonical_class, vec_text) << '\n';
  s << "k_squared: " << opt(d.k_squared, big) << '\n';
  s << "k_dot_omega: " << opt(d.k_dot_omega, big) << '\n';
  s << "kodaira: " << opt(d.kodaira, [](const std::string& v) { return v; }) << '\n';
  s << "dim_canonical: " << opt(d.dim_canonical, big) << '\n';
  s << "lefschetz_verdict: " << d.lefschetz_verdict << '\n';
  s << "annihilator:";
  if (d.annihilator.empty()) s << " (none)";
  for (const auto& r : d.annihilator) s << ' ' << vec_text(r);
  s << '\n';
  s << "symplectic: " << (d.symplectic ? "yes" : "no") << '\n';
  s << "taubes_axiom: " << (d.taubes_axiom ? "yes" : "no") << '\n';
  s << "sw_nonzero: " << (d.sw_nonzero ? "yes" : "no") << '\n';
  s << "wall_crossing_trivial: " << (d.wall_crossing_trivial ? "yes" : "no") << '\n';
  s << "psc_verdict: " << d.psc_verdict << '\n';
  s << "complex_verdict: " << d.complex_verdict << '\n';
  s << "sw_simple_type: " << (d.sw_simple_type ? "yes" : "no") << '\n';
  s << "oracle_charpoly: " << d.charpoly.to_string() << '\n';
  s << "oracle_charpoly_over_delta: "
    << opt(d.charpoly_over_delta, [](const LaurentPoly& p) { return p.to_string(); }) << '\n';
  s << "oracle_betti_wang_agrees: " << (d.betti_wang_agrees ? "yes" : "no") << '\n';
  return s.str();
}

}  // namespace fibtop
