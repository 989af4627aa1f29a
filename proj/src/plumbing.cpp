#include "capcalc/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "capcalc/linear_feasibility.hpp"
#include "capcalc/surfaces.hpp"

namespace capcalc::plumbing {

AugmentedGraph::AugmentedGraph(std::vector<Vertex> vertices,
                               std::vector<std::pair<std::string, std::string>> edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("graph has no vertices");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.id.empty()) throw InputError("vertex id must be nonempty");
    if (!index.emplace(v.id, i).second) throw InputError("duplicate vertex id '" + v.id + "'");
    if (v.genus < 0) throw InputError("vertex '" + v.id + "' has negative genus");
    if (v.area && *v.area <= 0) throw InputError("vertex '" + v.id + "' has nonpositive area");
  }
  for (const auto& [a, b] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InputError("edge endpoint '" + (ia == index.end() ? a : b) + "' is not a vertex");
    if (ia->second == ib->second) throw InputError("self-loop at vertex '" + a + "'");
    edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
  }

  // Connectivity by union-find.
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (const auto& [a, b] : edges_) {
    const auto ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) throw InputError("graph is not connected");
}

std::size_t AugmentedGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  throw InputError("no vertex named '" + id + "'");
}

std::size_t AugmentedGraph::multiplicity(std::size_t i, std::size_t j) const {
  const auto key = std::make_pair(std::min(i, j), std::max(i, j));
  return static_cast<std::size_t>(std::count(edges_.begin(), edges_.end(), key));
}

bool AugmentedGraph::has_all_areas() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.area.has_value(); });
}

std::vector<Rational> AugmentedGraph::areas() const {
  std::vector<Rational> out;
  for (const auto& v : vertices_) {
    if (!v.area) throw DomainError("vertex '" + v.id + "' has no declared area");
    out.push_back(*v.area);
  }
  return out;
}

AugmentedGraph AugmentedGraph::with_areas(std::span<const Rational> areas) const {
  if (areas.size() != vertices_.size())
    throw InputError("expected " + std::to_string(vertices_.size()) + " areas, got " +
                     std::to_string(areas.size()));
  AugmentedGraph copy = *this;
  for (std::size_t i = 0; i < areas.size(); ++i) {
    if (areas[i] <= 0) throw InputError("areas must be positive");
    copy.vertices_[i].area = areas[i];
  }
  return copy;
}

const char* to_string(Verdict v) {
  return v == Verdict::yes_with_certificate ? "yes_with_certificate" : "no_certificate_found";
}

const char* to_string(Concavity c) {
  switch (c) {
    case Concavity::yes: return "yes";
    case Concavity::no: return "no";
    case Concavity::conditional: return "conditional";
  }
  return "?";
}

const char* to_string(GsMode m) { return m == GsMode::positive ? "positive" : "negative"; }

lattice::IntegerLattice intersection_matrix(const AugmentedGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix q(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    q(i, i) = g.vertices()[i].self_intersection;
    labels.push_back(g.vertices()[i].id);
  }
  for (const auto& [a, b] : g.edges()) {
    q(a, b) += 1;
    q(b, a) += 1;
  }
  return lattice::IntegerLattice(std::move(q), std::move(labels));
}

PlumbingTopology plumbing_topology(const AugmentedGraph& g) {
  PlumbingTopology out;
  out.q = intersection_matrix(g);
  Integer genus_sum = 0;
  Integer euler = 0;
  for (const auto& v : g.vertices()) {
    genus_sum += v.genus;
    euler += 2 - 2 * v.genus;
  }
  euler -= static_cast<unsigned long>(g.edge_count());

  const auto inv = lattice::form_invariants(out.q);
  const Integer loops = static_cast<unsigned long>(g.cycle_rank());
  out.e = euler;
  out.sigma = inv.signature.value();
  out.betti = {Integer(1), Integer(2 * genus_sum + loops), Integer(static_cast<unsigned long>(g.vertex_count())),
               Integer(0)};

  // H1 of the boundary: coker(Q) ⊕ Z^(2 sum g + b1(graph)).
  out.boundary_h1 = lattice::cokernel_group(out.q.gram());
  const Integer extra = 2 * genus_sum + loops;
  out.boundary_h1.free_rank += static_cast<std::size_t>(to_long(extra));
  out.boundary_b1 = static_cast<unsigned long>(out.boundary_h1.free_rank);
  return out;
}

std::optional<RatVector> gs_feasible(const AugmentedGraph& g, GsMode mode, GsRoute route) {
  const RatVector a = g.areas();
  const auto q = intersection_matrix(g);
  const RatMatrix qr = to_rational(q.gram());
  const std::size_t n = a.size();

  if (route == GsRoute::automatic && lattice::form_invariants(q).nondegenerate()) {
    const auto sol = solve_affine(qr, a);
    const RatVector& z = sol.particular;
    const bool ok = mode == GsMode::positive
                        ? std::all_of(z.begin(), z.end(), [](const Rational& x) { return x > 0; })
                        : std::all_of(z.begin(), z.end(), [](const Rational& x) { return x <= 0; });
    if (!ok) return std::nullopt;
    return z;
  }

  LinearProgram lp;
  if (mode == GsMode::negative) {
    // z = -y with y >= 0: -Q y = a.
    lp.constraints = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) lp.constraints(i, j) = -qr(i, j);
    lp.rhs = a;
    lp.cost.assign(n, Rational(0));
    const auto res = solve_linear_program(lp);
    if (res.status != LpStatus::optimal) return std::nullopt;
    RatVector z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = -res.solution[i];
    return z;
  }

  // Positive: z = w + t 1 with w >= 0 and 0 <= t <= 1; maximize t.
  // Columns: w_0..w_{n-1}, t, slack u (t + u = 1).
  lp.constraints = RatMatrix(n + 1, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    Rational row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      lp.constraints(i, j) = qr(i, j);
      row_sum += qr(i, j);
    }
    lp.constraints(i, n) = row_sum;
  }
  lp.constraints(n, n) = 1;
  lp.constraints(n, n + 1) = 1;
  lp.rhs = a;
  lp.rhs.push_back(Rational(1));
  lp.cost.assign(n + 2, Rational(0));
  lp.cost[n] = -1;
  const auto res = solve_linear_program(lp);
  if (res.status != LpStatus::optimal) return std::nullopt;
  const Rational t = res.solution[n];
  if (t <= 0) return std::nullopt;
  RatVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = res.solution[i] + t;
  return z;
}

Concavity concave_after_deformation(const AugmentedGraph& g) {
  const auto inv = lattice::form_invariants(intersection_matrix(g));
  if (inv.definiteness == lattice::Definiteness::negative_definite) return Concavity::no;
  return inv.nondegenerate() ? Concavity::yes : Concavity::conditional;
}

std::vector<Integer> chern_pairings(const AugmentedGraph& g) {
  std::vector<Integer> kappa;
  for (const auto& v : g.vertices()) kappa.push_back(v.self_intersection + 2 - 2 * v.genus);
  return kappa;
}

AffineSolution chern_coefficients(const AugmentedGraph& g) {
  const auto q = intersection_matrix(g);
  const auto kappa = chern_pairings(g);
  const RatVector rhs = to_rational(kappa);
  return solve_affine(to_rational(q.gram()), rhs);
}

namespace {

// Connected vertex subsets of size >= 2 smoothed into one surface, added in
// BFS order so each step resolves the new vertex against the blob so far.
void smoothed_configurations(const AugmentedGraph& g, std::vector<Certificate>& out) {
  constexpr std::size_t kMaxSubsetSearch = 14;
  const std::size_t n = g.vertex_count();

  auto smooth = [&](const std::vector<std::size_t>& members) -> std::optional<Certificate> {
    std::vector<bool> in(n, false);
    for (auto v : members) in[v] = true;
    std::vector<std::size_t> order{members.front()};
    std::vector<bool> placed(n, false);
    placed[members.front()] = true;
    const auto& v0 = g.vertices()[members.front()];
    surfaces::SurfaceClass blob{v0.genus, v0.self_intersection};
    std::string name = v0.id;
    while (order.size() < members.size()) {
      bool grew = false;
      for (auto v : members) {
        if (placed[v]) continue;
        std::size_t m = 0;
        for (auto u : order) m += g.multiplicity(u, v);
        if (m == 0) continue;
        const auto& vx = g.vertices()[v];
        blob = surfaces::resolve_pair(blob, {vx.genus, vx.self_intersection}, Integer(static_cast<unsigned long>(m)));
        placed[v] = true;
        order.push_back(v);
        grew = true;
      }
      if (!grew) return std::nullopt;  // subset not connected
    }
    std::vector<std::string> ids;
    for (auto v : members) ids.push_back(g.vertices()[v].id);
    name.clear();
    for (const auto& id : ids) name += (name.empty() ? "" : "+") + id;
    return Certificate{name, blob.genus, blob.square, "", std::nullopt};
  };

  if (n <= kMaxSubsetSearch) {
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
      if (__builtin_popcountl(mask) < 2) continue;
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1UL << i)) members.push_back(i);
      if (auto c = smooth(members)) out.push_back(std::move(*c));
    }
  } else {
    std::set<std::pair<std::size_t, std::size_t>> seen(g.edges().begin(), g.edges().end());
    for (const auto& [a, b] : seen)
      if (auto c = smooth({a, b})) out.push_back(std::move(*c));
  }
}

}  // namespace

CapClassification classify_cap(const AugmentedGraph& g) {
  CapClassification out;
  const auto kappa = chern_pairings(g);
  const auto& vs = g.vertices();

  out.is_calabi_yau = std::all_of(vs.begin(), vs.end(), [](const Vertex& v) {
    return v.self_intersection == 2 * v.genus - 2;
  });
  out.concave_deformable = concave_after_deformation(g);

  // Uniruled, vertex route: nonnegative square and positive c1 pairing.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].self_intersection >= 0 && kappa[i] > 0) {
      out.uniruled = Verdict::yes_with_certificate;
      out.certificates.push_back({vs[i].id, vs[i].genus, vs[i].self_intersection,
                                  "uniruled: square >= 0 and c1 pairing > 0", Rational(kappa[i])});
    }
  }

  // Uniruled, divisor-cap pairing route: c1 . [(w, a)] = sum z_i kappa_i,
  // well defined when kappa lies in the image of Q.
  if (g.has_all_areas()) {
    const auto chern = chern_coefficients(g);
    if (chern.consistent) {
      if (const auto z = gs_feasible(g, GsMode::positive)) {
        Rational value = 0;
        for (std::size_t i = 0; i < z->size(); ++i) value += (*z)[i] * kappa[i];
        if (value > 0) {
          out.uniruled = Verdict::yes_with_certificate;
          out.certificates.push_back({"divisor", Integer(0), Integer(0),
                                      "uniruled: c1 pairs positively with the relative symplectic class",
                                      value});
        }
      }
    }
  }

  // Adjunction: vertex classes, then smoothed connected configurations.
  std::vector<Certificate> candidates;
  for (const auto& v : vs) candidates.push_back({v.id, v.genus, v.self_intersection, "", std::nullopt});
  smoothed_configurations(g, candidates);
  for (auto& c : candidates) {
    if (!surfaces::uniruled_certificate({c.genus, c.square}, true)) continue;
    out.adjunction = Verdict::yes_with_certificate;
    c.rule = c.subject.find('+') == std::string::npos ? "adjunction: vertex square >= max(2g-1, 0)"
                                                      : "adjunction: smoothed configuration square >= max(2g-1, 0)";
    out.certificates.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

Vertex vertex(std::string id, const Integer& genus, const Integer& square) {
  return Vertex{std::move(id), genus, square, std::nullopt};
}

void require_nonnegative(const Integer& x, const char* what) {
  if (x < 0) throw InputError(std::string(what) + " must be nonnegative");
}

}  // namespace

AugmentedGraph gay(const Integer& genus, const Integer& square) {
  require_nonnegative(genus, "genus");
  return AugmentedGraph({vertex("v1", genus, square)}, {});
}

AugmentedGraph lf(const Integer& genus, std::span<const Integer> exponents) {
  require_nonnegative(genus, "genus");
  std::vector<Vertex> vs{vertex("v1", genus, Integer(0))};
  std::vector<std::pair<std::string, std::string>> es;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 1) throw InputError("boundary twist exponents must be >= 1");
    const std::string id = "v" + std::to_string(j + 2);
    vs.push_back(vertex(id, Integer(0), -exponents[j]));
    es.emplace_back("v1", id);
  }
  return AugmentedGraph(std::move(vs), std::move(es));
}

AugmentedGraph cy_example(const Integer& genus) {
  require_nonnegative(genus, "genus");
  return AugmentedGraph({vertex("v1", genus, 2 * genus - 2), vertex("v2", 0, -2), vertex("v3", 0, -2),
                         vertex("v4", 0, -2)},
                        {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}});
}

AugmentedGraph ohta_ono(const Integer& n) {
  if (n < 1) throw InputError("ohta_ono parameter must be >= 1");
  return AugmentedGraph({vertex("v1", 0, -1), vertex("v2", 0, -3), vertex("v3", 0, -2), vertex("v4", 0, -n)},
                        {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}});
}

AugmentedGraph cp2_triangle() {
  return AugmentedGraph({vertex("v1", 0, 1), vertex("v2", 0, 1), vertex("v3", 0, 1)},
                        {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}});
}

AugmentedGraph fiber_section(const Integer& genus, const Integer& square) {
  require_nonnegative(genus, "genus");
  return AugmentedGraph({vertex("v1", 0, 0), vertex("v2", genus, square)}, {{"v1", "v2"}});
}

AugmentedGraph adjunction_pair(const Integer& n, const Integer& k) {
  require_nonnegative(n, "n");
  return AugmentedGraph({vertex("v1", 0, 0), vertex("v2", 2 * n, k)}, {{"v1", "v2"}, {"v1", "v2"}});
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"gay",          "lf",           "cy_example",     "ohta_ono",
                                              "cp2_triangle", "fiber_section", "adjunction_pair"};
  return names;
}

AugmentedGraph builtin_graph(const std::string& name, std::span<const Integer> params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError(name + " expects " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(params.size()));
  };
  if (name == "gay") {
    expect(2);
    return gay(params[0], params[1]);
  }
  if (name == "lf") {
    if (params.size() < 2) throw InputError("lf expects: g k [i_1 .. i_k]");
    const Integer& k = params[1];
    if (k < 0) throw InputError("lf boundary count must be nonnegative");
    const auto count = static_cast<std::size_t>(to_long(k));
    if (params.size() == 2) {
      const std::vector<Integer> ones(count, Integer(1));
      return lf(params[0], ones);
    }
    if (params.size() != count + 2) throw InputError("lf expects exactly k exponents");
    return lf(params[0], params.subspan(2));
  }
  if (name == "cy_example") {
    expect(1);
    return cy_example(params[0]);
  }
  if (name == "ohta_ono") {
    expect(1);
    return ohta_ono(params[0]);
  }
  if (name == "cp2_triangle") {
    expect(0);
    return cp2_triangle();
  }
  if (name == "fiber_section") {
    expect(2);
    return fiber_section(params[0], params[1]);
  }
  if (name == "adjunction_pair") {
    expect(2);
    return adjunction_pair(params[0], params[1]);
  }
  throw InputError("unknown example '" + name + "'");
}

}  // namespace capcalc::plumbing
