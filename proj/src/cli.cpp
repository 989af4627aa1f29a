#include "capcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "capcalc/bounds.hpp"
#include "capcalc/cotangent.hpp"
#include "capcalc/lattice.hpp"
#include "capcalc/lefschetz.hpp"
#include "capcalc/surfaces.hpp"

namespace capcalc::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

std::vector<Integer> integers(const std::vector<std::string>& words, std::size_t from = 0) {
  std::vector<Integer> out;
  for (std::size_t i = from; i < words.size(); ++i) out.push_back(parse_integer(words[i]));
  return out;
}

std::vector<Rational> rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InputError("empty area list");
  return out;
}

void require_args(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
  if (args.size() != count) throw InputError("usage: " + usage);
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

Json invariants_json(const lattice::FormInvariants& inv) {
  Json j;
  j["rank"] = inv.rank;
  j["corank"] = inv.corank;
  j["signature"] = Json::array({inv.signature.positive, inv.signature.zero, inv.signature.negative});
  j["sigma"] = inv.signature.value();
  j["parity"] = lattice::to_string(inv.parity);
  j["determinant"] = integer_json(inv.determinant);
  j["definiteness"] = lattice::to_string(inv.definiteness);
  return j;
}

Json cokernel_json(const lattice::CokernelGroup& c) {
  Json j;
  j["group"] = c.describe();
  j["free_rank"] = c.free_rank;
  Json t = Json::array();
  for (const auto& x : c.torsion) t.push_back(integer_json(x));
  j["torsion"] = std::move(t);
  j["torsion_order"] = integer_json(c.torsion_order());
  return j;
}

IntVector parse_int_vector(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw InputError("expected an integer vector such as [1,0,-1], got '" + text + "'");
  }
  if (!doc.is_array()) throw InputError("expected an integer vector, got '" + text + "'");
  IntVector v;
  for (const auto& x : doc) {
    if (!x.is_number_integer()) throw InputError("vector entries must be integers");
    v.emplace_back(std::to_string(x.get<long long>()));
  }
  return v;
}

// Any integer matrix literal, or a named lattice expression.
IntMatrix parse_matrix_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw InputError("malformed matrix literal '" + text + "'");
    }
    if (!doc.is_array() || doc.empty()) throw InputError("matrix literal must be a nonempty array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : doc) {
      if (!r.is_array()) throw InputError("matrix rows must be arrays");
      std::vector<Integer> row;
      for (const auto& x : r) {
        if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
        row.emplace_back(std::to_string(x.get<long long>()));
      }
      rows.push_back(std::move(row));
    }
    return IntMatrix::from_rows(rows);
  }
  return lattice::build_lattice(text).gram();
}

// ---------------------------------------------------------------------------

Json run_lattice(const std::string& op, const std::vector<std::string>& args, int bound, bool serial) {
  Json r;
  r["operation"] = op;
  if (op == "build" || op == "invariants") {
    require_args(args, 1, "lattice " + op + " EXPR");
    const auto l = lattice::build_lattice(args[0]);
    r["gram"] = matrix_json(l.gram());
    r["invariants"] = invariants_json(lattice::form_invariants(l));
  } else if (op == "snf") {
    require_args(args, 1, "lattice snf MATRIX");
    const auto snf = lattice::smith_normal_form(parse_matrix_arg(args[0]));
    Json d = Json::array();
    for (const auto& x : snf.invariant_factors()) d.push_back(integer_json(x));
    r["invariant_factors"] = std::move(d);
    r["left"] = matrix_json(snf.left);
    r["diagonal"] = matrix_json(snf.diagonal);
    r["right"] = matrix_json(snf.right);
  } else if (op == "cokernel") {
    require_args(args, 1, "lattice cokernel MATRIX");
    r["cokernel"] = cokernel_json(lattice::cokernel_group(parse_matrix_arg(args[0])));
  } else if (op == "complement") {
    if (args.size() < 2) throw InputError("usage: lattice complement EXPR VECTOR [VECTOR ...]");
    const auto l = lattice::build_lattice(args[0]);
    std::vector<IntVector> vectors;
    for (std::size_t i = 1; i < args.size(); ++i) vectors.push_back(parse_int_vector(args[i]));
    const auto c = lattice::orthogonal_complement_with_basis(l, vectors);
    const auto inv = lattice::form_invariants(c.lattice);
    r["gram"] = matrix_json(c.lattice.gram());
    Json basis = Json::array();
    for (const auto& b : c.basis) basis.push_back(vector_json(b));
    r["basis"] = std::move(basis);
    r["invariants"] = invariants_json(inv);
    if (inv.unimodular() && inv.definiteness == lattice::Definiteness::indefinite)
      r["name"] = lattice::classify_indefinite_unimodular(inv.rank, inv.signature.value(), inv.parity);
  } else if (op == "classify") {
    require_args(args, 3, "lattice classify RANK SIGNATURE even|odd");
    const long rank = to_long(parse_integer(args[0]));
    if (rank < 0) throw InputError("rank must be nonnegative");
    const long sig = to_long(parse_integer(args[1]));
    if (args[2] != "even" && args[2] != "odd") throw InputError("parity must be 'even' or 'odd'");
    const auto parity = args[2] == "even" ? lattice::Parity::even : lattice::Parity::odd;
    r["name"] = lattice::classify_indefinite_unimodular(static_cast<std::size_t>(rank), sig, parity);
  } else if (op == "equiv") {
    require_args(args, 2, "lattice equiv EXPR1 EXPR2 [--bound N]");
    const auto a = lattice::build_lattice(args[0]);
    const auto b = lattice::build_lattice(args[1]);
    r["bound"] = bound;
    const auto t = lattice::equivalence_search_small(a, b, bound);
    r["found"] = t.has_value();
    if (t) r["transform"] = matrix_json(*t);
  } else if (op == "census") {
    require_args(args, 2, "lattice census SIZE BOUND [--serial]");
    const long size = to_long(parse_integer(args[0]));
    const long entry_bound = to_long(parse_integer(args[1]));
    if (size < 0) throw DomainError("size must be positive");
    const auto census = serial ? lattice::enumerate_forms_by_cokernel_serial(static_cast<std::size_t>(size),
                                                                             static_cast<int>(entry_bound))
                               : lattice::enumerate_forms_by_cokernel(static_cast<std::size_t>(size),
                                                                      static_cast<int>(entry_bound));
    Json groups = Json::array();
    for (const auto& [group, tuples] : census) {
      Json g;
      g["cokernel"] = group.describe();
      Json ts = Json::array();
      for (const auto& [tuple, count] : tuples) {
        Json t;
        t["signature"] = Json::array({tuple.signature.positive, tuple.signature.zero, tuple.signature.negative});
        t["parity"] = lattice::to_string(tuple.parity);
        t["determinant"] = integer_json(tuple.determinant);
        t["count"] = count;
        ts.push_back(std::move(t));
      }
      g["tuples"] = std::move(ts);
      groups.push_back(std::move(g));
    }
    r["groups"] = std::move(groups);
  } else {
    throw InputError("unknown lattice operation '" + op +
                     "' (build, invariants, snf, cokernel, complement, classify, equiv, census)");
  }
  return r;
}

Json surface_json(const surfaces::SurfaceClass& s) {
  Json j;
  j["genus"] = integer_json(s.genus);
  j["square"] = integer_json(s.square);
  return j;
}

Json run_surfaces(const std::string& op, const std::vector<std::string>& args, bool nontrivial) {
  using namespace surfaces;
  Json r;
  r["operation"] = op;
  const auto n = integers(args);
  if (op == "adjunction-genus") {
    require_args(args, 2, "surfaces adjunction-genus SQUARE C1_PAIRING");
    r["genus"] = integer_json(adjunction_genus(n[0], n[1]));
  } else if (op == "copies") {
    require_args(args, 3, "surfaces copies GENUS SQUARE N");
    r["result"] = surface_json(resolve_copies({n[0], n[1]}, n[2]));
  } else if (op == "pair") {
    require_args(args, 5, "surfaces pair G1 S1 G2 S2 M");
    r["result"] = surface_json(resolve_pair({n[0], n[1]}, {n[2], n[3]}, n[4]));
  } else if (op == "min-copies") {
    require_args(args, 2, "surfaces min-copies GENUS SQUARE");
    const SurfaceClass s{n[0], n[1]};
    const Integer copies = min_copies_adjunction(s);
    r["copies"] = integer_json(copies);
    r["result"] = surface_json(resolve_copies(s, copies));
  } else if (op == "uniruled") {
    require_args(args, 2, "surfaces uniruled GENUS SQUARE [--nontrivial]");
    r["certificate"] = uniruled_certificate({n[0], n[1]}, nontrivial);
    r["rule"] = "square >= max(2g-1, 0); square 0 needs a nontrivial sphere";
  } else if (op == "ruled-square") {
    if (args.size() < 2) throw InputError("usage: surfaces ruled-square F S [E ...]");
    RuledClass c{Integer(0), n[0], n[1], std::vector<Integer>(n.begin() + 2, n.end())};
    r["square"] = integer_json(ruled_square(c));
  } else if (op == "base-genus") {
    if (args.size() < 3) throw InputError("usage: surfaces base-genus SURFACE_GENUS F S [E ...]");
    RuledClass c{Integer(0), n[1], n[2], std::vector<Integer>(n.begin() + 3, n.end())};
    const auto b = base_genus_bound(c, n[0]);
    r["square"] = integer_json(ruled_square(c));
    r["degree"] = integer_json(b.degree);
    r["max_base_genus"] = integer_json(b.max_base_genus);
  } else if (op == "riemann-hurwitz") {
    require_args(args, 2, "surfaces riemann-hurwitz TOTAL_GENUS DEGREE");
    r["max_base_genus"] = integer_json(riemann_hurwitz_bound(n[0], n[1]));
  } else if (op == "weiyi") {
    require_args(args, 3, "surfaces weiyi C1_SQ C1_DOT_D D_SQ");
    const auto w = weiyi_check(n[0], n[1], n[2]);
    r["value"] = integer_json(w.value);
    r["satisfied"] = w.satisfied;
    r["note"] = "hypothesis [D].e > 0 for exceptional classes is the caller's responsibility";
  } else {
    throw InputError("unknown surfaces operation '" + op +
                     "' (adjunction-genus, copies, pair, min-copies, uniruled, ruled-square, base-genus, "
                     "riemann-hurwitz, weiyi)");
  }
  return r;
}

struct BoundsInput {
  std::optional<Integer> e, sigma, b1, b1_plus_b3, g_max, g_min, g_s;
  Integer b1_boundary = 0;
  std::optional<surfaces::SurfaceClass> surface;
  bounds::CapBetti cap_betti{Integer(0), Integer(0), Integer(0)};
  std::optional<std::pair<bounds::Sign, bounds::Sign>> kodaira;
};

std::optional<Integer> optional_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  const Json& v = doc.at(key);
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw InputError(std::string("bounds field '") + key + "' must be an integer");
}

void read_bounds_json(const std::string& text, BoundsInput& in) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("bounds record is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("bounds record must be a JSON object");
  in.e = optional_field(doc, "e");
  in.sigma = optional_field(doc, "sigma");
  in.b1 = optional_field(doc, "b1");
  in.b1_plus_b3 = optional_field(doc, "b1_plus_b3");
  in.g_max = optional_field(doc, "g_max");
  in.g_min = optional_field(doc, "g_min");
  in.g_s = optional_field(doc, "g_s_upper");
  if (auto b = optional_field(doc, "b1_boundary")) in.b1_boundary = *b;
  if (doc.contains("surface")) {
    const Json& s = doc.at("surface");
    auto g = optional_field(s, "genus");
    auto sq = optional_field(s, "square");
    if (!g || !sq) throw InputError("'surface' needs genus and square");
    in.surface = surfaces::SurfaceClass{*g, *sq};
  }
  if (doc.contains("cap_betti")) {
    const Json& b = doc.at("cap_betti");
    if (!b.is_array() || b.size() != 3) throw InputError("'cap_betti' must be [b1, b2, b3]");
    in.cap_betti = {Integer(std::to_string(b[0].get<long long>())), Integer(std::to_string(b[1].get<long long>())),
                    Integer(std::to_string(b[2].get<long long>()))};
  }
  if (doc.contains("kodaira")) {
    const Json& k = doc.at("kodaira");
    if (!k.is_array() || k.size() != 2 || !k[0].is_string() || !k[1].is_string())
      throw InputError("'kodaira' must be [sign of K.w, sign of K.K]");
    in.kodaira = std::make_pair(bounds::parse_sign(k[0].get<std::string>()), bounds::parse_sign(k[1].get<std::string>()));
  }
}

Json filling_json(const bounds::FillingBounds& b) {
  Json j;
  j["e_plus_sigma_interval"] = Json::array({integer_json(b.lo), integer_json(b.hi)});
  if (b.b1_plus_b3_upper) j["b1_plus_b3_upper"] = integer_json(*b.b1_plus_b3_upper);
  if (b.g_stein_max_upper) j["g_stein_max_upper"] = integer_json(*b.g_stein_max_upper);
  j["notes"] = b.notes;
  return j;
}

Json betti_json(const bounds::BettiTriple& t) {
  return Json::array({integer_json(t.b1), integer_json(t.b2), integer_json(t.b3)});
}

Json run_bounds(const BoundsInput& in) {
  Json r;
  bool any = false;
  if (in.kodaira) {
    r["kodaira_dimension"] = bounds::to_string(bounds::kodaira_dimension(in.kodaira->first, in.kodaira->second));
    any = true;
  }
  if (in.e && in.sigma) {
    bounds::CapInvariants cap;
    cap.e = *in.e;
    cap.sigma = *in.sigma;
    cap.b1 = in.b1.value_or(Integer(0));
    cap.b1_plus_b3 = in.b1_plus_b3.value_or(cap.b1);
    cap.g_max = in.g_max;
    cap.g_min = in.g_min;
    cap.g_s_upper = in.g_s;
    cap.validate();
    Json c;
    c["e"] = integer_json(cap.e);
    c["sigma"] = integer_json(cap.sigma);
    c["alpha"] = integer_json(cap.alpha());
    r["cap"] = std::move(c);
    if (cap.g_max && cap.g_min) {
      r["strong"] = filling_json(bounds::strong_filling_bounds(cap, in.b1_boundary));
    } else {
      r["strong"] = "refused: g_max and g_min must both be supplied";
    }
    r["stein"] = filling_json(bounds::stein_filling_bounds(cap));
    any = true;
  } else if (in.e || in.sigma) {
    throw InputError("cap invariants need both --e and --sigma");
  }
  if (in.surface) {
    const auto rep = bounds::cy_exact_filling_bounds(*in.surface, in.cap_betti, in.b1_boundary);
    Json c;
    c["surface"] = surface_json(*in.surface);
    c["c1_squared_lower"] = integer_json(rep.c1_squared_lower);
    c["b2_plus"] = integer_json(rep.b2_plus);
    c["uniruled_b1_max"] = integer_json(rep.uniruled_b1_max);
    c["uniruled_b2_minus_max"] = integer_json(rep.uniruled_b2_minus_max);
    c["uniruled_b2_max"] = integer_json(rep.uniruled_b2_max);
    Json models = Json::array();
    for (const auto& m : rep.cy_models) {
      Json mj;
      mj["name"] = m.name;
      mj["b1_max"] = integer_json(m.b1_max);
      mj["b2_max"] = integer_json(m.b2_max);
      mj["e"] = integer_json(m.euler);
      models.push_back(std::move(mj));
    }
    c["calabi_yau_models"] = std::move(models);
    c["closed_betti_max"] = betti_json(rep.closed_max);
    c["filling_betti_max"] = betti_json(rep.filling_max);
    c["cap_betti"] = betti_json({rep.cap_betti.b1, rep.cap_betti.b2, rep.cap_betti.b3});
    c["notes"] = rep.notes;
    r["calabi_yau_exact"] = std::move(c);
    any = true;
  }
  if (!any) throw InputError("bounds: nothing to compute (give --e/--sigma, --surface-genus/--surface-square or --kodaira)");
  return r;
}

Json run_cotangent(const Integer& g) {
  const auto data = cotangent::cap_lattice_data(g);
  const auto k3 = lattice::k3();
  Json r;
  r["genus"] = integer_json(g);

  Json cap;
  cap["A"] = vector_json(data.a);
  cap["B"] = vector_json(data.b);
  cap["A.A"] = integer_json(k3.square(data.a));
  cap["A.B"] = integer_json(k3.pairing(data.a, data.b));
  cap["B.B"] = integer_json(k3.square(data.b));
  cap["L.L"] = integer_json(k3.square(data.lagrangian));
  cap["orth.orth"] = integer_json(k3.square(data.orth_class));
  cap["L.orth"] = integer_json(k3.pairing(data.lagrangian, data.orth_class));
  cap["cap_form"] = "2(-E8) ⊕ 2H ⊕ <" + Integer(2 - 2 * g).get_str() + "> ⊕ 0^" + Integer(2 * g).get_str();
  cap["cap_form_invariants"] = invariants_json(lattice::form_invariants(data.cap_form));
  r["cap"] = std::move(cap);

  const auto comp = cotangent::complement_profile(g);
  Json c;
  c["first_name"] = comp.first_name;
  c["first_invariants"] = invariants_json(comp.first_invariants);
  c["second_name"] = comp.second_name;
  c["second_gram"] = matrix_json(comp.second.gram());
  const auto t = lattice::equivalence_search_small(comp.second, lattice::hyperbolic(), 2);
  c["second_equivalent_to_H"] = t.has_value();
  r["complement"] = std::move(c);

  const auto prof = cotangent::exact_filling_profile(g);
  Json p;
  p["e"] = integer_json(prof.e);
  p["sigma"] = integer_json(prof.sigma);
  p["H1"] = prof.h1.describe();
  p["H2"] = prof.h2.describe();
  p["H3"] = prof.h3.describe();
  p["generator_square"] = integer_json(prof.generator_square);
  p["c1_vanishes"] = prof.c1_vanishes;
  p["cap_e"] = integer_json(prof.cap_e);
  p["cap_sigma"] = integer_json(prof.cap_sigma);
  p["novikov_e"] = integer_json(prof.cap_e + prof.e);
  p["novikov_sigma"] = integer_json(prof.cap_sigma + prof.sigma);
  p["justification"] = prof.justification;
  r["exact_filling_profile"] = std::move(p);

  Json tm = Json::array();
  for (int k = 1; k <= 3; ++k) {
    const auto m = cotangent::torsion_match(g, Integer(k));
    Json j;
    j["k"] = k;
    j["filling_torsion"] = m.filling_torsion.describe();
    j["boundary_torsion"] = m.boundary_torsion.describe();
    j["accepted"] = m.accepted;
    tm.push_back(std::move(j));
  }
  r["torsion_match"] = std::move(tm);
  return r;
}

Json run_lefschetz(const lefschetz::MonodromyData& d) {
  using namespace lefschetz;
  Json r;
  r["g"] = integer_json(d.g);
  r["k"] = integer_json(d.k);
  Json ex = Json::array();
  for (const auto& e : d.exponents) ex.push_back(integer_json(e));
  r["exponents"] = std::move(ex);
  r["vanishing_cycles"] = d.cycles.size();

  const Integer b1 = cap_b1_from_cycles(d.g, d.cycles);
  r["cap_b1"] = integer_json(b1);
  r["cycle_quotient"] = cycle_quotient(d.g, d.cycles).describe();
  r["stein_constant_e_plus_sigma"] = stein_constant_check(b1);

  const auto cap = plumbing::plumbing_topology(plumbing::lf(d.g, d.exponents));
  Json c;
  c["e"] = integer_json(cap.e);
  c["sigma"] = integer_json(cap.sigma);
  c["e_plus_sigma"] = integer_json(cap.e + cap.sigma);
  r["lf_cap"] = std::move(c);

  const Integer n = static_cast<unsigned long>(d.cycles.size());
  const Integer disk = lefschetz_euler(d.g, n, Base::disk, d.k);
  r["filling_euler"] = integer_json(disk);
  r["glued_euler"] = integer_json(disk + cap.e);
  r["notes"] = Json::array({"only homology classes of vanishing cycles are modeled; homotopical "
                            "nontriviality is a caller attestation"});
  return r;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cap calculus for symplectic fillings", "capcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "Analyze a graph file (stdin when omitted)");
  std::string analyze_file;
  std::string mode_name = "positive";
  std::string with_areas;
  bool require_feasible = false;
  analyze->add_option("file", analyze_file, "Graph JSON file or '-'");
  analyze->add_option("--mode", mode_name, "GS sign mode")->check(CLI::IsMember({"positive", "negative"}));
  analyze->add_option("--with-areas", with_areas, "Comma-separated exact areas, e.g. 3,1,1/2");
  analyze->add_flag("--require-feasible", require_feasible, "Exit 2 when the GS system is infeasible");

  auto* example = app.add_subcommand("example", "Analyze or emit a builtin configuration");
  std::string example_name;
  std::vector<std::string> example_params;
  bool emit_graph = false;
  example->add_option("name", example_name, "gay, lf, cy_example, ohta_ono, cp2_triangle, fiber_section, adjunction_pair")
      ->required();
  example->add_option("params", example_params, "Integer parameters");
  example->add_flag("--emit", emit_graph, "Print the graph file instead of the analysis");

  auto* bounds_cmd = app.add_subcommand("bounds", "Filling bounds from cap invariants");
  std::string bounds_json;
  BoundsInput bin;
  std::string kodaira_text;
  std::optional<long long> surface_genus, surface_square;
  std::vector<long long> cap_betti;
  auto add_int = [&](const char* name, std::optional<Integer>& slot, const char* help) {
    bounds_cmd->add_option_function<long long>(name, [&slot](const long long& v) { slot = Integer(std::to_string(v)); }, help);
  };
  bounds_cmd->add_option("--json", bounds_json, "JSON record with the same fields ('-' for stdin)");
  add_int("--e", bin.e, "Euler characteristic of the cap");
  add_int("--sigma", bin.sigma, "Signature of the cap");
  add_int("--b1", bin.b1, "b1 of the cap");
  add_int("--b1-plus-b3", bin.b1_plus_b3, "(b1 + b3) of the cap");
  add_int("--g-max", bin.g_max, "Maximal base genus");
  add_int("--g-min", bin.g_min, "Minimal base genus");
  add_int("--g-s", bin.g_s, "Upper bound for the surface genus g_s");
  bounds_cmd->add_option_function<long long>(
      "--b1-boundary", [&bin](const long long& v) { bin.b1_boundary = Integer(std::to_string(v)); },
      "b1 of the contact boundary");
  bounds_cmd->add_option("--surface-genus", surface_genus, "Genus of S (Calabi-Yau exact bounds)");
  bounds_cmd->add_option("--surface-square", surface_square, "Square of S (Calabi-Yau exact bounds)");
  bounds_cmd->add_option("--cap-betti", cap_betti, "b1 b2 b3 of the cap")->expected(3)->delimiter(',');
  bounds_cmd->add_option("--kodaira", kodaira_text, "Signs of K.w and K.K, e.g. pos,zero");

  auto* lattice_cmd = app.add_subcommand("lattice", "Lattice operations");
  std::string lattice_op;
  std::vector<std::string> lattice_args;
  int equiv_bound = 2;
  bool census_serial = false;
  lattice_cmd->add_option("op", lattice_op, "build, invariants, snf, cokernel, complement, classify, equiv, census")
      ->required();
  lattice_cmd->add_option("args", lattice_args, "Operation arguments");
  lattice_cmd->add_option("--bound", equiv_bound, "Coefficient bound for equiv");
  lattice_cmd->add_flag("--serial", census_serial, "Use the single-threaded census");

  auto* cotangent_cmd = app.add_subcommand("cotangent", "Exact fillings of the unit cotangent bundle of a surface");
  long long cot_genus = 0;
  cotangent_cmd->add_option("--genus", cot_genus, "Surface genus (>= 2)")->required();

  auto* lefschetz_cmd = app.add_subcommand("lefschetz", "Invariants from monodromy data (stdin when omitted)");
  std::string lefschetz_file;
  lefschetz_cmd->add_option("file", lefschetz_file, "MonodromyData JSON file or '-'");

  auto* surfaces_cmd = app.add_subcommand("surfaces", "Surface class calculus");
  std::string surfaces_op;
  std::vector<std::string> surfaces_args;
  bool nontrivial = false;
  surfaces_cmd->add_option("op", surfaces_op, "Operation name")->required();
  surfaces_cmd->add_option("args", surfaces_args, "Integer arguments");
  surfaces_cmd->add_flag("--nontrivial", nontrivial, "The class is homologically nontrivial");

  try {
    // CLI11 splits "[a,b]" into several values; a trailing blank defeats that
    // and is ignored later by the JSON reader.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    for (auto& a : reversed)
      if (a.size() > 1 && a.front() == '[' && a.back() == ']') a.push_back(' ');
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const Format format = format_name == "json" ? Format::json : Format::text;
  try {
    if (*analyze) {
      auto g = parse_graph(read_source(analyze_file, in));
      if (!with_areas.empty()) g = g.with_areas(rational_list(with_areas));
      const auto mode = mode_name == "negative" ? plumbing::GsMode::negative : plumbing::GsMode::positive;
      if (require_feasible && !g.has_all_areas())
        throw DomainError("--require-feasible needs areas on every vertex");
      const Json report = analyze_report(g, mode);
      emit(report, format, out);
      if (require_feasible && !report["gs"]["feasible"].get<bool>()) {
        err << "capcalc: GS system is infeasible in " << mode_name << " mode\n";
        return kExitDomain;
      }
    } else if (*example) {
      const auto g = plumbing::builtin_graph(example_name, integers(example_params));
      if (emit_graph)
        out << graph_to_json(g).dump(2) << "\n";
      else
        emit(analyze_report(g, plumbing::GsMode::positive), format, out);
    } else if (*bounds_cmd) {
      if (!bounds_json.empty()) read_bounds_json(read_source(bounds_json, in), bin);
      if (surface_genus || surface_square) {
        if (!surface_genus || !surface_square)
          throw InputError("--surface-genus and --surface-square go together");
        bin.surface = surfaces::SurfaceClass{Integer(std::to_string(*surface_genus)),
                                             Integer(std::to_string(*surface_square))};
      }
      if (!cap_betti.empty())
        bin.cap_betti = {Integer(std::to_string(cap_betti[0])), Integer(std::to_string(cap_betti[1])),
                         Integer(std::to_string(cap_betti[2]))};
      if (!kodaira_text.empty()) {
        const auto comma = kodaira_text.find(',');
        if (comma == std::string::npos) throw InputError("--kodaira expects two signs, e.g. pos,zero");
        bin.kodaira = std::make_pair(bounds::parse_sign(kodaira_text.substr(0, comma)),
                                     bounds::parse_sign(kodaira_text.substr(comma + 1)));
      }
      emit(run_bounds(bin), format, out);
    } else if (*lattice_cmd) {
      emit(run_lattice(lattice_op, lattice_args, equiv_bound, census_serial), format, out);
    } else if (*cotangent_cmd) {
      emit(run_cotangent(Integer(std::to_string(cot_genus))), format, out);
    } else if (*lefschetz_cmd) {
      emit(run_lefschetz(parse_monodromy(read_source(lefschetz_file, in))), format, out);
    } else if (*surfaces_cmd) {
      emit(run_surfaces(surfaces_op, surfaces_args, nontrivial), format, out);
    }
  } catch (const InputError& e) {
    err << "capcalc: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "capcalc: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace capcalc::cli
