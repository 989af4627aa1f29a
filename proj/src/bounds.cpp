#include "capcalc/bounds.hpp"

#include <algorithm>

namespace capcalc::bounds {

const char* to_string(Kodaira k) {
  switch (k) {
    case Kodaira::minus_infinity: return "-infinity";
    case Kodaira::zero: return "0";
    case Kodaira::one: return "1";
    case Kodaira::two: return "2";
  }
  return "?";
}

Sign parse_sign(const std::string& text) {
  if (text == "neg" || text == "-") return Sign::neg;
  if (text == "zero" || text == "0") return Sign::zero;
  if (text == "pos" || text == "+") return Sign::pos;
  throw InputError("sign must be one of neg, zero, pos (got '" + text + "')");
}

Kodaira kodaira_dimension(Sign k_dot_omega, Sign k_squared) {
  if (k_dot_omega == Sign::neg || k_squared == Sign::neg) return Kodaira::minus_infinity;
  if (k_dot_omega == Sign::zero && k_squared == Sign::zero) return Kodaira::zero;
  if (k_dot_omega == Sign::zero) throw DomainError("no minimal symplectic 4-manifold has K.[w] = 0 and K.K > 0");
  return k_squared == Sign::zero ? Kodaira::one : Kodaira::two;
}

void CapInvariants::validate() const {
  if (g_max && g_min && *g_max < *g_min) throw DomainError("g_max must be >= g_min");
  if (g_max && g_s_upper && *g_max > *g_s_upper) throw DomainError("g_max must be <= the surface genus bound g_s");
  if (g_min && *g_min < 0) throw DomainError("g_min must be nonnegative");
}

FillingBounds strong_filling_bounds(const CapInvariants& cap, const Integer& b1_boundary) {
  cap.validate();
  if (!cap.g_max || !cap.g_min) throw DomainError("strong filling bounds need both g_max and g_min");
  const Integer alpha = cap.alpha();
  FillingBounds out;
  out.lo = alpha - 4 * *cap.g_max;
  out.hi = alpha - 4 * *cap.g_min;
  out.b1_plus_b3_upper = 4 * *cap.g_max + 2 * b1_boundary - cap.b1_plus_b3;
  out.notes.push_back("alpha = 4 - (e+sigma)(cap) = " + alpha.get_str());
  out.notes.push_back("e+sigma of a strong filling lies in [alpha - 4 g_max, alpha - 4 g_min]");
  out.notes.push_back("(b1+b3)(filling) <= 4 g_max + 2 b1(Y) - (b1+b3)(cap)");
  if (*cap.g_max == *cap.g_min) out.notes.push_back("g_max = g_min: e+sigma is constant over strong fillings");
  return out;
}

FillingBounds stein_filling_bounds(const CapInvariants& cap) {
  cap.validate();
  if (cap.b1 < 0) throw DomainError("b1 must be nonnegative");
  const Integer alpha = cap.alpha();
  Integer upper;
  mpz_fdiv_q_ui(upper.get_mpz_t(), cap.b1.get_mpz_t(), 2);
  const Integer lower = cap.g_min ? std::max(*cap.g_min, Integer(0)) : Integer(0);
  FillingBounds out;
  out.g_stein_max_upper = upper;
  out.lo = alpha - 4 * upper;
  out.hi = alpha - 4 * lower;
  out.notes.push_back("b1 of a uniruled manifold is even, so g_max over Stein fillings <= floor(b1(cap)/2) = " +
                      upper.get_str());
  if (!cap.g_min) out.notes.push_back("g_min unknown; Stein minimum taken as 0");
  if (out.lo > out.hi) {
    // g_min exceeds the Stein maximum: no Stein filling can realize it.
    out.notes.push_back("empty interval: no Stein filling is compatible with the supplied g_min");
  }
  return out;
}

const std::vector<CalabiYauModel>& calabi_yau_models() {
  // Torus bundles over the torus have b1 in {2,3,4}, e = 0, b2 = 2 b1 - 2.
  static const std::vector<CalabiYauModel> models{
      {"K3", Integer(0), Integer(22), Integer(24)},
      {"Enriques", Integer(0), Integer(10), Integer(12)},
      {"torus bundle over torus", Integer(4), Integer(6), Integer(0)},
  };
  return models;
}

CyFillingReport cy_exact_filling_bounds(const surfaces::SurfaceClass& surface, const CapBetti& cap_betti,
                                        const Integer& b1_boundary) {
  const Integer& g = surface.genus;
  const Integer& s = surface.square;
  if (g < 0) throw DomainError("surface genus must be nonnegative");
  if (s < 1) throw DomainError("surface must have positive square");
  if (s < g - 1) throw DomainError("surface must satisfy square >= genus - 1 (use min_copies_adjunction)");
  if (b1_boundary < 0) throw DomainError("b1(Y) must be nonnegative");

  CyFillingReport out;
  out.cap_betti = cap_betti;
  out.b2_plus = 1;
  out.c1_squared_lower = s - 2 * (2 * g - 2);
  out.uniruled_b1_max = 2 * g;
  // c1^2 = 9 - 4 b1 - b2^-, worst case b1 = 0.
  out.uniruled_b2_minus_max = std::max(Integer(0), Integer(9 - out.c1_squared_lower));
  out.uniruled_b2_max = out.b2_plus + out.uniruled_b2_minus_max;
  out.cy_models = calabi_yau_models();

  Integer b1 = out.uniruled_b1_max;
  Integer b2 = out.uniruled_b2_max;
  for (const auto& m : out.cy_models) {
    b1 = std::max(b1, m.b1_max);
    b2 = std::max(b2, m.b2_max);
  }
  out.closed_max = {b1, b2, b1};  // b3 = b1 for closed 4-manifolds
  out.filling_max = {b1 + b1_boundary, b2 + b1_boundary, b1};

  out.notes.push_back("uniruled branch: base genus <= g(S), so b1(X) <= 2 g(S)");
  out.notes.push_back("uniruled branch: c1(X)^2 >= s - 2(2g(S) - 2) and c1^2 = 9 - 4 b1 - b2^- with b2^+ = 1");
  out.notes.push_back("Calabi-Yau branch: K3, Enriques or torus bundle over torus Betti profiles");
  out.notes.push_back("filling: b1(N) <= b1(X) + b1(Y), b2(N) <= b2(X) + b1(Y), b3(N) <= b3(X)");
  return out;
}

Integer uniruled_e_sigma(const Integer& base_genus) {
  if (base_genus < 0) throw DomainError("base genus must be nonnegative");
  return 4 - 4 * base_genus;
}

std::pair<Integer, Integer> novikov_sum(const std::vector<std::pair<Integer, Integer>>& parts) {
  if (parts.empty()) throw DomainError("novikov_sum needs at least one piece");
  std::pair<Integer, Integer> out{0, 0};
  for (const auto& [e, sigma] : parts) {
    out.first += e;
    out.second += sigma;
  }
  return out;
}

bool b2_zero_bound_check(const Integer& b2_zero, const Integer& b1_boundary) { return b2_zero <= b1_boundary; }

RealizedGenera realized_genera(const Integer& cap_e_plus_sigma, const std::vector<Integer>& filling_e_plus_sigma) {
  if (filling_e_plus_sigma.empty()) throw DomainError("no realized fillings supplied");
  std::vector<Integer> genera;
  for (const auto& f : filling_e_plus_sigma) {
    const Integer total = cap_e_plus_sigma + f;  // = 4 - 4h
    const Integer num = 4 - total;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 4) || num < 0)
      throw DomainError("(e+sigma) = " + total.get_str() + " is not that of a ruled surface");
    genera.push_back(num / 4);
  }
  return {*std::max_element(genera.begin(), genera.end()), *std::min_element(genera.begin(), genera.end())};
}

}  // namespace capcalc::bounds
