#pragma once

// Augmented plumbing graphs (symplectic divisors) and what can be read off
// them exactly: the intersection form, the plumbed 4-manifold's topology,
// the concavity (GS) linear system, c1 and the cap classification.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capcalc/arith.hpp"
#include "capcalc/lattice.hpp"
#include "capcalc/linalg.hpp"

namespace capcalc::plumbing {

struct Vertex {
  std::string id;
  Integer genus;
  Integer self_intersection;
  std::optional<Rational> area;
};

/// Connected multigraph of weighted surfaces. Construction validates the
/// invariants and throws InputError on violation.
class AugmentedGraph {
 public:
  AugmentedGraph(std::vector<Vertex> vertices,
                 std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Edges as vertex-index pairs (i < j), one entry per edge.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t index_of(const std::string& id) const;
  std::size_t multiplicity(std::size_t i, std::size_t j) const;
  /// b1 of the underlying graph, |E| - |V| + 1.
  std::size_t cycle_rank() const { return edges_.size() + 1 - vertices_.size(); }

  bool has_all_areas() const;
  std::vector<Rational> areas() const;  // DomainError if any is missing
  /// Copy with every area replaced; InputError on count mismatch or a
  /// nonpositive value.
  AugmentedGraph with_areas(std::span<const Rational> areas) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

struct PlumbingTopology {
  lattice::IntegerLattice q;
  Integer e;
  Integer sigma;
  std::array<Integer, 4> betti;  // b0, b1, b2, b3
  Integer boundary_b1;
  lattice::CokernelGroup boundary_h1;
};

enum class GsMode { positive, negative };

/// How gs_feasible chooses its solver. `automatic` solves nondegenerate
/// systems directly and falls back to linear programming otherwise.
enum class GsRoute { automatic, linear_program };

enum class Verdict { yes_with_certificate, no_certificate_found };
enum class Concavity { yes, no, conditional };

struct Certificate {
  std::string subject;  // vertex id, or "v1+v2" for a smoothed configuration
  Integer genus;
  Integer square;
  std::string rule;
  std::optional<Rational> value;
};

struct CapClassification {
  bool is_calabi_yau = false;
  Verdict uniruled = Verdict::no_certificate_found;
  Verdict adjunction = Verdict::no_certificate_found;
  Concavity concave_deformable = Concavity::no;
  std::vector<Certificate> certificates;
};

const char* to_string(Verdict v);
const char* to_string(Concavity c);
const char* to_string(GsMode m);

lattice::IntegerLattice intersection_matrix(const AugmentedGraph& g);

PlumbingTopology plumbing_topology(const AugmentedGraph& g);

/// Exact z with Q z = a and z > 0 (positive mode, strict) or z <= 0
/// (negative mode, closed); nullopt when infeasible. DomainError when an
/// area is missing.
std::optional<RatVector> gs_feasible(const AugmentedGraph& g, GsMode mode,
                                     GsRoute route = GsRoute::automatic);

Concavity concave_after_deformation(const AugmentedGraph& g);

/// kappa_i = s_i + 2 - 2 g_i, the value of c1 on vertex i.
std::vector<Integer> chern_pairings(const AugmentedGraph& g);

/// Solves Q a = kappa; `consistent == false` when kappa is outside the image.
AffineSolution chern_coefficients(const AugmentedGraph& g);

CapClassification classify_cap(const AugmentedGraph& g);

/// Builtin configurations:
///   gay g k | lf g k i_1..i_k | cy_example g | ohta_ono n | cp2_triangle |
///   fiber_section g s2 | adjunction_pair n K
/// Parameters are integers; InputError for unknown names or bad params.
AugmentedGraph builtin_graph(const std::string& name, std::span<const Integer> params);
const std::vector<std::string>& builtin_names();

AugmentedGraph gay(const Integer& genus, const Integer& square);
AugmentedGraph lf(const Integer& genus, std::span<const Integer> exponents);
AugmentedGraph cy_example(const Integer& genus);
AugmentedGraph ohta_ono(const Integer& n);
AugmentedGraph cp2_triangle();
AugmentedGraph fiber_section(const Integer& genus, const Integer& square);
AugmentedGraph adjunction_pair(const Integer& n, const Integer& k);

}  // namespace capcalc::plumbing
