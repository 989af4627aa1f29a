#include <ostream>
#include <sstream>

#include "capcalc/cli.hpp"

namespace capcalc::cli {

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

const Json& field(const Json& obj, const char* key, const char* context) {
  if (!obj.is_object() || !obj.contains(key))
    throw InputError(std::string(context) + " is missing field '" + key + "'");
  return obj.at(key);
}

Integer json_integer(const Json& v, const char* what) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) return parse_integer(v.get<std::string>());
  throw InputError(std::string(what) + " must be an integer");
}

Rational json_rational(const Json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer() || v.is_number_unsigned()) return Rational(json_integer(v, what));
  throw InputError(std::string(what) + " must be an exact rational string such as \"3/2\"");
}

std::string json_string(const Json& v, const char* what) {
  if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

plumbing::AugmentedGraph parse_graph(std::string_view text) {
  const Json doc = parse_json(text, "graph file");
  const Json& vertices = field(doc, "vertices", "graph file");
  if (!vertices.is_array() || vertices.empty()) throw InputError("graph file needs a nonempty 'vertices' array");

  std::vector<plumbing::Vertex> vs;
  for (const auto& v : vertices) {
    plumbing::Vertex vx;
    vx.id = json_string(field(v, "id", "vertex"), "vertex id");
    vx.genus = json_integer(field(v, "genus", "vertex"), "genus");
    vx.self_intersection = json_integer(field(v, "self_intersection", "vertex"), "self_intersection");
    if (v.contains("area") && !v.at("area").is_null()) vx.area = json_rational(v.at("area"), "area");
    vs.push_back(std::move(vx));
  }

  std::vector<std::pair<std::string, std::string>> es;
  if (doc.contains("edges")) {
    const Json& edges = doc.at("edges");
    if (!edges.is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex ids");
      es.emplace_back(json_string(e[0], "edge endpoint"), json_string(e[1], "edge endpoint"));
    }
  }
  return plumbing::AugmentedGraph(std::move(vs), std::move(es));
}

Json graph_to_json(const plumbing::AugmentedGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    Json j;
    j["id"] = v.id;
    j["genus"] = integer_json(v.genus);
    j["self_intersection"] = integer_json(v.self_intersection);
    if (v.area) j["area"] = rational_json(*v.area);
    vertices.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({g.vertices()[a].id, g.vertices()[b].id}));
  Json out;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

lefschetz::MonodromyData parse_monodromy(std::string_view text) {
  const Json doc = parse_json(text, "monodromy file");
  lefschetz::MonodromyData data;
  data.g = json_integer(field(doc, "g", "monodromy file"), "g");
  data.k = json_integer(field(doc, "k", "monodromy file"), "k");
  if (doc.contains("exponents")) {
    if (!doc.at("exponents").is_array()) throw InputError("'exponents' must be an array");
    for (const auto& e : doc.at("exponents")) data.exponents.push_back(json_integer(e, "exponent"));
  }
  if (doc.contains("cycles")) {
    if (!doc.at("cycles").is_array()) throw InputError("'cycles' must be an array");
    for (const auto& c : doc.at("cycles")) {
      if (!c.is_array()) throw InputError("each cycle must be an array of integers");
      IntVector v;
      for (const auto& x : c) v.push_back(json_integer(x, "cycle entry"));
      data.cycles.push_back(std::move(v));
    }
  }
  data.validate();
  return data;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json rational_json(const Rational& q) { return Json(to_string(q)); }

// ---------------------------------------------------------------------------
// Text rendering

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool all_scalars(const Json& arr) {
  for (const auto& x : arr)
    if (!is_scalar(x)) return false;
  return true;
}

std::string inline_list(const Json& arr) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : arr) {
    if (!first) s += ", ";
    s += scalar_text(x);
    first = false;
  }
  return s + "]";
}

bool is_matrix(const Json& arr) {
  if (!arr.is_array() || arr.empty()) return false;
  for (const auto& row : arr)
    if (!row.is_array() || !all_scalars(row)) return false;
  return true;
}

void render(const Json& j, int indent, std::ostringstream& os);

void render_value(const std::string& label, const Json& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(v)) {
    os << pad << label << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << label << ": " << inline_list(v) << "\n";
  } else if (is_matrix(v)) {
    os << pad << label << ":\n";
    for (const auto& row : v) os << pad << "  " << inline_list(row) << "\n";
  } else {
    os << pad << label << ":\n";
    render(v, indent + 2, os);
  }
}

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_value(key, value, indent, os);
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_scalar(item)) {
        os << pad << "- " << scalar_text(item) << "\n";
      } else {
        os << pad << "-\n";
        render(item, indent + 2, os);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

void emit(const Json& report, Format format, std::ostream& out) {
  if (format == Format::json)
    out << report.dump(2) << "\n";
  else
    out << render_text(report);
}

// ---------------------------------------------------------------------------
// Graph analysis report

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rational_vector_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

}  // namespace

Json analyze_report(const plumbing::AugmentedGraph& g, plumbing::GsMode mode) {
  using namespace plumbing;
  Json report;

  Json graph;
  graph["vertices"] = g.vertex_count();
  graph["edges"] = g.edge_count();
  Json ids = Json::array();
  for (const auto& v : g.vertices()) ids.push_back(v.id);
  graph["ids"] = std::move(ids);
  if (g.has_all_areas()) graph["areas"] = rational_vector_json(g.areas());
  report["graph"] = std::move(graph);

  const auto topo = plumbing_topology(g);
  const auto inv = lattice::form_invariants(topo.q);
  Json form;
  form["gram"] = matrix_json(topo.q.gram());
  form["rank"] = inv.rank;
  form["corank"] = inv.corank;
  form["signature"] = Json::array({inv.signature.positive, inv.signature.zero, inv.signature.negative});
  form["determinant"] = integer_json(inv.determinant);
  form["parity"] = lattice::to_string(inv.parity);
  form["definiteness"] = lattice::to_string(inv.definiteness);
  form["degenerate"] = !inv.nondegenerate();
  report["intersection_form"] = std::move(form);

  Json t;
  t["e"] = integer_json(topo.e);
  t["sigma"] = integer_json(topo.sigma);
  t["e_plus_sigma"] = integer_json(topo.e + topo.sigma);
  Json betti = Json::array();
  for (const auto& b : topo.betti) betti.push_back(integer_json(b));
  t["betti"] = std::move(betti);
  t["boundary_b1"] = integer_json(topo.boundary_b1);
  t["boundary_h1"] = topo.boundary_h1.describe();
  t["boundary_rational_homology_sphere"] = topo.boundary_b1 == 0;
  t["rules"] = Json::array({"e = sum(2 - 2 g_i) - |E|", "b1 = 2 sum g_i + b1(graph), b2 = |V|, b3 = 0",
                            "sigma = signature of Q", "H1(boundary) = coker(Q) ⊕ Z^(2 sum g_i + b1(graph))"});
  report["topology"] = std::move(t);

  const auto chern = chern_coefficients(g);
  Json c;
  Json kappa = Json::array();
  for (const auto& k : chern_pairings(g)) kappa.push_back(integer_json(k));
  c["pairings"] = std::move(kappa);
  c["consistent"] = chern.consistent;
  if (chern.consistent) {
    c["coefficients"] = rational_vector_json(chern.particular);
    Json kernel = Json::array();
    for (const auto& k : chern.kernel) kernel.push_back(rational_vector_json(k));
    c["kernel"] = std::move(kernel);
    c["unique"] = chern.unique();
  }
  c["rule"] = "solve Q a = kappa with kappa_i = s_i + 2 - 2 g_i (adjunction formula)";
  report["chern"] = std::move(c);

  if (g.has_all_areas()) {
    Json gs;
    gs["mode"] = to_string(mode);
    const auto z = gs_feasible(g, mode);
    gs["feasible"] = z.has_value();
    if (z) gs["z"] = rational_vector_json(*z);
    gs["rule"] = mode == GsMode::positive ? "Q z = a with every z_i > 0" : "Q z = a with every z_i <= 0";
    report["gs"] = std::move(gs);
  }

  const auto cls = classify_cap(g);
  Json k;
  k["calabi_yau"] = cls.is_calabi_yau;
  k["uniruled"] = to_string(cls.uniruled);
  k["adjunction"] = to_string(cls.adjunction);
  k["concave_after_deformation"] = to_string(cls.concave_deformable);
  Json certs = Json::array();
  for (const auto& cert : cls.certificates) {
    Json j;
    j["subject"] = cert.subject;
    if (cert.subject != "divisor") {
      j["genus"] = integer_json(cert.genus);
      j["square"] = integer_json(cert.square);
    }
    j["rule"] = cert.rule;
    if (cert.value) j["value"] = rational_json(*cert.value);
    certs.push_back(std::move(j));
  }
  k["certificates"] = std::move(certs);
  report["classification"] = std::move(k);
  return report;
}

}  // namespace capcalc::cli
