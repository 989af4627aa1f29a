#pragma once

// Topological bounds on fillings obtained from a cap: Kodaira dimension of the
// glued manifold, e + sigma intervals from base-genus invariants, and Betti
// bounds for exact fillings of Calabi-Yau caps.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "capcalc/arith.hpp"
#include "capcalc/surfaces.hpp"

namespace capcalc::bounds {

enum class Sign { neg, zero, pos };
enum class Kodaira { minus_infinity, zero, one, two };

const char* to_string(Kodaira k);
Sign parse_sign(const std::string& text);

/// Kodaira dimension of a minimal symplectic 4-manifold from the signs of
/// K.[w] and K.K. DomainError for (zero, pos), which no minimal manifold has.
Kodaira kodaira_dimension(Sign k_dot_omega, Sign k_squared);

struct CapInvariants {
  Integer e;
  Integer sigma;
  Integer b1;
  Integer b1_plus_b3;
  std::optional<Integer> g_max;
  std::optional<Integer> g_min;
  std::optional<Integer> g_s_upper;

  /// DomainError if g_max < g_min or g_max > g_s_upper.
  void validate() const;
  Integer alpha() const { return 4 - (e + sigma); }
};

struct FillingBounds {
  Integer lo;
  Integer hi;
  std::optional<Integer> b1_plus_b3_upper;
  std::optional<Integer> g_stein_max_upper;
  std::vector<std::string> notes;
};

/// [alpha - 4 g_max, alpha - 4 g_min] and b1 + b3 <= 4 g_max + 2 b1(Y) - (b1 + b3)(cap).
/// DomainError when either genus invariant is unknown.
FillingBounds strong_filling_bounds(const CapInvariants& cap, const Integer& b1_boundary);

/// Stein fillings: maximal base genus at most floor(b1(cap) / 2).
FillingBounds stein_filling_bounds(const CapInvariants& cap);

struct CapBetti {
  Integer b1;
  Integer b2;
  Integer b3;
};

struct BettiTriple {
  Integer b1;
  Integer b2;
  Integer b3;
};

struct CalabiYauModel {
  std::string name;
  Integer b1_max;
  Integer b2_max;
  Integer euler;
};

struct CyFillingReport {
  // Uniruled closed manifold branch.
  Integer c1_squared_lower;
  Integer b2_plus;
  Integer uniruled_b1_max;
  Integer uniruled_b2_minus_max;
  Integer uniruled_b2_max;
  // Minimal Calabi-Yau branch.
  std::vector<CalabiYauModel> cy_models;
  BettiTriple closed_max;   // maxima over both branches
  BettiTriple filling_max;  // after Mayer-Vietoris subtraction
  CapBetti cap_betti;
  std::vector<std::string> notes;
};

/// The three homological models of minimal symplectic Calabi-Yau surfaces.
const std::vector<CalabiYauModel>& calabi_yau_models();

/// Requires surface.square >= max(1, genus - 1).
CyFillingReport cy_exact_filling_bounds(const surfaces::SurfaceClass& surface, const CapBetti& cap_betti,
                                        const Integer& b1_boundary);

/// (e + sigma) of a (possibly blown-up) ruled surface over a base of the given genus.
Integer uniruled_e_sigma(const Integer& base_genus);

/// Componentwise sum over pieces glued along closed 3-manifolds.
std::pair<Integer, Integer> novikov_sum(const std::vector<std::pair<Integer, Integer>>& parts);

bool b2_zero_bound_check(const Integer& b2_zero, const Integer& b1_boundary);

struct RealizedGenera {
  Integer g_max;
  Integer g_min;
  Integer g_delta() const { return g_max - g_min; }
};

/// Base genera h = (alpha(cap) - (e + sigma)(N)) / 4 realized by gluing the cap
/// to each listed filling. DomainError on an empty list or a non-integral h.
RealizedGenera realized_genera(const Integer& cap_e_plus_sigma, const std::vector<Integer>& filling_e_plus_sigma);

}  // namespace capcalc::bounds
