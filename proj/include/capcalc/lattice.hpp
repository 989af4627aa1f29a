#pragma once

// Integral symmetric bilinear forms: standard lattices, Smith normal form,
// exact signatures, cokernels, orthogonal complements and small-scale
// classification. No floating point anywhere in this module.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capcalc/arith.hpp"

namespace capcalc::lattice {

/// A symmetric integer Gram matrix with a labeled basis.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Throws InputError unless `gram` is square and exactly symmetric.
  explicit IntegerLattice(IntMatrix gram, std::vector<std::string> labels = {});

  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return gram_.rows(); }

  Integer pairing(std::span<const Integer> x, std::span<const Integer> y) const;
  Integer square(std::span<const Integer> x) const { return pairing(x, x); }

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  std::vector<std::string> labels_;
};

/// left * M * right == diagonal, with left/right unimodular and the diagonal
/// nonnegative, each entry dividing the next, zeros last.
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::vector<Integer> invariant_factors() const;  // the min(rows, cols) diagonal entries
};

enum class Parity { even, odd };
enum class Definiteness {
  positive_definite,
  negative_definite,
  positive_semidefinite,
  negative_semidefinite,
  indefinite,
  zero
};

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  long value() const {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }
  auto operator<=>(const Signature&) const = default;
};

struct FormInvariants {
  std::size_t rank = 0;
  std::size_t corank = 0;
  Signature signature;
  Parity parity = Parity::even;
  Integer determinant;
  Definiteness definiteness = Definiteness::zero;

  bool nondegenerate() const { return corank == 0; }
  bool unimodular() const { return determinant == 1 || determinant == -1; }
};

/// Z^free_rank ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ..., every t_i > 1.
struct CokernelGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  /// Number of torsion elements (product of the torsion coefficients).
  Integer torsion_order() const;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z^4", "Z^2 ⊕ Z/2 ⊕ Z/6".
  std::string describe() const;

  friend bool operator==(const CokernelGroup&, const CokernelGroup&) = default;
  friend bool operator<(const CokernelGroup& a, const CokernelGroup& b);
};

const char* to_string(Parity p);
const char* to_string(Definiteness d);

// Standard lattices. E8 uses the positive-definite Dynkin Gram (diagonal 2).
IntegerLattice e8();
IntegerLattice hyperbolic();
IntegerLattice diagonal(std::span<const Integer> entries);
IntegerLattice negate(const IntegerLattice& l);
IntegerLattice direct_sum(std::span<const IntegerLattice> parts);
/// 3H ⊕ 2(-E8), rank 22.
IntegerLattice k3();

/// Parses expressions over the standard names, e.g. "K3", "H", "diag(1,-1)",
/// "negate(E8)", "direct_sum(H,H,negate(E8))", or a JSON-style literal
/// "[[0,1],[1,0]]". Throws InputError for unknown names or empty diag lists.
IntegerLattice build_lattice(std::string_view expression);

SmithDecomposition smith_normal_form(const IntMatrix& m);

FormInvariants form_invariants(const IntegerLattice& l);

/// Cokernel of the square matrix viewed as a map Z^n -> Z^n.
CokernelGroup cokernel_group(const IntMatrix& m);

/// Gram matrix of {x : x.v = 0 for every v} in an integral basis of that
/// (saturated) annihilator. Throws DomainError when the vectors are dependent.
IntegerLattice orthogonal_complement(const IntegerLattice& l,
                                     std::span<const IntVector> sublattice);

/// Also returns the basis used (columns, coordinates in the ambient basis).
struct Complement {
  IntegerLattice lattice;
  std::vector<IntVector> basis;
};
Complement orthogonal_complement_with_basis(const IntegerLattice& l,
                                            std::span<const IntVector> sublattice);

/// Canonical name of an indefinite unimodular form: "3⟨1⟩ ⊕ 2⟨-1⟩" (odd) or
/// "2H ⊕ 2(-E8)" (even). Throws DomainError for definite input or an even
/// signature not divisible by 8.
std::string classify_indefinite_unimodular(std::size_t rank, long long signature, Parity parity);

/// Gram matrix of the canonical representative named above.
IntegerLattice canonical_unimodular(std::size_t rank, long long signature, Parity parity);

/// Bounded search for T with T^t gram(from) T = gram(to), |det T| = 1 and
/// entries in [-bound, bound]. nullopt means "not found within bound".
std::optional<IntMatrix> equivalence_search_small(const IntegerLattice& from,
                                                  const IntegerLattice& to, int bound);

// Census of forms grouped by cokernel.

struct InvariantTuple {
  Signature signature;
  Parity parity = Parity::even;
  Integer determinant;

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
  friend bool operator<(const InvariantTuple& a, const InvariantTuple& b);
};

using FormCensus = std::map<CokernelGroup, std::map<InvariantTuple, std::uint64_t>>;

inline constexpr std::size_t kCensusMaxSize = 3;
inline constexpr int kCensusMaxBound = 4;

/// Enumerates every symmetric size x size matrix with |entries| <= entry_bound
/// and tallies invariant tuples per cokernel group. Runs in parallel when built
/// with OpenMP; the result does not depend on scheduling.
FormCensus enumerate_forms_by_cokernel(std::size_t size, int entry_bound);

/// Single-threaded reference for enumerate_forms_by_cokernel.
FormCensus enumerate_forms_by_cokernel_serial(std::size_t size, int entry_bound);

/// Decodes census index `index` into its symmetric matrix (upper triangle in
/// row-major order, each entry in [-bound, bound]).
IntMatrix census_matrix(std::size_t size, int entry_bound, std::uint64_t index);
std::uint64_t census_count(std::size_t size, int entry_bound);

}  // namespace capcalc::lattice
