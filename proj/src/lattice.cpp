#include "capcalc/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

namespace capcalc::lattice {

IntegerLattice::IntegerLattice(IntMatrix gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
  if (!gram_.square()) throw InputError("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw InputError("Gram matrix must be symmetric");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("v" + std::to_string(i + 1));
  } else if (labels_.size() != gram_.rows()) {
    throw InputError("basis label count does not match Gram size");
  }
}

Integer IntegerLattice::pairing(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != size() || y.size() != size()) throw InputError("vector length does not match lattice rank");
  Integer total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < size(); ++j) total += x[i] * gram_(i, j) * y[j];
  }
  return total;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(diagonal(i, i));
  return out;
}

Integer CokernelGroup::torsion_order() const {
  Integer out = 1;
  for (const auto& t : torsion) out *= t;
  return out;
}

std::string CokernelGroup::describe() const {
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " ⊕ ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) append("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

bool operator<(const CokernelGroup& a, const CokernelGroup& b) {
  if (a.free_rank != b.free_rank) return a.free_rank < b.free_rank;
  if (a.torsion.size() != b.torsion.size()) return a.torsion.size() < b.torsion.size();
  return std::lexicographical_compare(a.torsion.begin(), a.torsion.end(), b.torsion.begin(),
                                      b.torsion.end());
}

bool operator<(const InvariantTuple& a, const InvariantTuple& b) {
  if (a.signature != b.signature) return a.signature < b.signature;
  if (a.parity != b.parity) return a.parity < b.parity;
  return a.determinant < b.determinant;
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::positive_semidefinite: return "positive_semidefinite";
    case Definiteness::negative_semidefinite: return "negative_semidefinite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::zero: return "zero";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Standard lattices

IntegerLattice e8() {
  // Chain e1..e7 with e8 attached to e5: arms of length 4, 2, 1 off the branch node.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  auto link = [&g](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = -1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) link(i, i + 1);
  link(4, 7);
  return IntegerLattice(std::move(g), {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"});
}

IntegerLattice hyperbolic() {
  return IntegerLattice(IntMatrix::from_rows({{0, 1}, {1, 0}}), {"x", "y"});
}

IntegerLattice diagonal(std::span<const Integer> entries) {
  if (entries.empty()) throw InputError("diag requires at least one entry");
  IntMatrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return IntegerLattice(std::move(g));
}

IntegerLattice negate(const IntegerLattice& l) {
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = -g(i, j);
  return IntegerLattice(std::move(g), l.labels());
}

IntegerLattice direct_sum(std::span<const IntegerLattice> parts) {
  if (parts.empty()) throw InputError("direct_sum requires at least one summand");
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  IntMatrix g(n, n);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) g(offset + i, offset + j) = p.gram()(i, j);
      labels.push_back(p.labels()[i] + "_" + std::to_string(k + 1));
    }
    offset += p.size();
  }
  return IntegerLattice(std::move(g), std::move(labels));
}

IntegerLattice k3() {
  const IntegerLattice h = hyperbolic();
  const IntegerLattice minus_e8 = negate(e8());
  const std::vector<IntegerLattice> parts{h, h, h, minus_e8, minus_e8};
  return direct_sum(parts);
}

// ---------------------------------------------------------------------------
// Expression parser for build_lattice

namespace {

class LatticeParser {
 public:
  explicit LatticeParser(std::string_view text) : text_(text) {}

  IntegerLattice parse() {
    IntegerLattice out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse lattice '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    for (auto& c : id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return id;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return parse_integer(text_.substr(start, pos_ - start));
  }

  std::vector<std::vector<Integer>> literal() {
    std::vector<std::vector<Integer>> rows;
    if (accept(']')) fail("empty matrix literal");
    do {
      expect('[');
      std::vector<Integer> row;
      do {
        row.push_back(integer());
      } while (accept(','));
      expect(']');
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    return rows;
  }

  IntegerLattice expression() {
    if (accept('[')) return IntegerLattice(IntMatrix::from_rows(literal()));
    const std::string name = identifier();
    if (name.empty()) fail("expected a lattice name");
    if (name == "e8") return e8();
    if (name == "h") return hyperbolic();
    if (name == "k3") return k3();
    if (name == "diag") {
      expect('(');
      std::vector<Integer> entries;
      if (!accept(')')) {
        do {
          entries.push_back(integer());
        } while (accept(','));
        expect(')');
      }
      return diagonal(entries);
    }
    if (name == "negate") {
      expect('(');
      IntegerLattice inner = expression();
      expect(')');
      return negate(inner);
    }
    if (name == "direct_sum") {
      expect('(');
      std::vector<IntegerLattice> parts;
      if (!accept(')')) {
        do {
          parts.push_back(expression());
        } while (accept(','));
        expect(')');
      }
      return direct_sum(parts);
    }
    throw InputError("unknown lattice name '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntegerLattice build_lattice(std::string_view expression) {
  return LatticeParser(expression).parse();
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithDecomposition out{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = out.diagonal;
  IntMatrix& u = out.left;
  IntMatrix& v = out.right;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs(d(i, j));
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return out;

      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = -(d(i, t) / d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = -(d(t, j) / d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Signature by congruence diagonalization

FormInvariants form_invariants(const IntegerLattice& l) {
  const std::size_t n = l.size();
  RatMatrix a = to_rational(l.gram());

  FormInvariants out;
  out.parity = Parity::even;
  for (std::size_t i = 0; i < n; ++i)
    if (mpz_odd_p(l.gram()(i, i).get_mpz_t())) out.parity = Parity::odd;

  auto symmetric_swap = [&a](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };

  Rational det = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: fold an off-diagonal entry onto the diagonal (x -> x + y).
      bool folded = false;
      for (std::size_t i = k; i < n && !folded; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a(i, j) == 0) continue;
          a.add_row_multiple(i, j, Rational(1));
          a.add_col_multiple(i, j, Rational(1));
          pivot = i;
          folded = true;
          break;
        }
      if (!folded) break;  // trailing block is identically zero
    }
    symmetric_swap(k, pivot);

    const Rational p = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / p;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(r, k) = a(k, r) = 0;
    det *= p;
    if (p > 0)
      ++out.signature.positive;
    else
      ++out.signature.negative;
  }
  out.signature.zero = n - k;
  out.rank = k;
  out.corank = n - k;
  out.determinant = out.corank == 0 ? Integer(det.get_num()) : Integer(0);

  const auto& s = out.signature;
  if (s.positive == 0 && s.negative == 0)
    out.definiteness = Definiteness::zero;
  else if (s.positive > 0 && s.negative > 0)
    out.definiteness = Definiteness::indefinite;
  else if (s.positive > 0)
    out.definiteness = s.zero == 0 ? Definiteness::positive_definite : Definiteness::positive_semidefinite;
  else
    out.definiteness = s.zero == 0 ? Definiteness::negative_definite : Definiteness::negative_semidefinite;
  return out;
}

CokernelGroup cokernel_group(const IntMatrix& m) {
  if (!m.square()) throw InputError("cokernel_group expects a square matrix");
  const auto snf = smith_normal_form(m);
  CokernelGroup out;
  for (const auto& d : snf.invariant_factors()) {
    if (d == 0)
      ++out.free_rank;
    else if (d > 1)
      out.torsion.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal complements

Complement orthogonal_complement_with_basis(const IntegerLattice& l,
                                            std::span<const IntVector> sublattice) {
  const std::size_t n = l.size();
  IntMatrix vectors(sublattice.size(), n);
  for (std::size_t i = 0; i < sublattice.size(); ++i) {
    if (sublattice[i].size() != n) throw InputError("sublattice vector length does not match lattice rank");
    for (std::size_t j = 0; j < n; ++j) vectors(i, j) = sublattice[i][j];
  }
  if (!sublattice.empty()) {
    std::size_t independent = 0;
    for (const auto& d : smith_normal_form(vectors).invariant_factors())
      if (d != 0) ++independent;
    if (independent != sublattice.size()) throw DomainError("sublattice vectors are linearly dependent");
  }

  // Pairing matrix P = V G; its integer kernel is saturated by construction.
  const IntMatrix pairing = vectors * l.gram();
  const auto snf = smith_normal_form(pairing);
  std::size_t nonzero = 0;
  for (const auto& d : snf.invariant_factors())
    if (d != 0) ++nonzero;

  Complement out;
  IntMatrix basis(n, n - nonzero);
  for (std::size_t c = nonzero; c < n; ++c) {
    IntVector col = snf.right.column(c);
    for (std::size_t i = 0; i < n; ++i) basis(i, c - nonzero) = col[i];
    out.basis.push_back(std::move(col));
  }
  out.lattice = IntegerLattice(basis.transpose() * l.gram() * basis);
  return out;
}

IntegerLattice orthogonal_complement(const IntegerLattice& l, std::span<const IntVector> sublattice) {
  return orthogonal_complement_with_basis(l, sublattice).lattice;
}

// ---------------------------------------------------------------------------
// Indefinite unimodular classification

namespace {

struct UnimodularShape {
  std::size_t positive;
  std::size_t negative;
};

UnimodularShape check_indefinite(std::size_t rank, long long signature, Parity parity) {
  const long long r = static_cast<long long>(rank);
  if (r == 0 || std::llabs(signature) > r || (r + signature) % 2 != 0)
    throw DomainError("rank " + std::to_string(rank) + " and signature " + std::to_string(signature) +
                      " are inconsistent");
  if (std::llabs(signature) == r) throw DomainError("form is definite; classification requires indefinite input");
  if (parity == Parity::even && signature % 8 != 0)
    throw DomainError("even unimodular form requires signature divisible by 8");
  return {static_cast<std::size_t>((r + signature) / 2), static_cast<std::size_t>((r - signature) / 2)};
}

std::string with_count(std::size_t count, const std::string& name) {
  return count == 1 ? name : std::to_string(count) + name;
}

}  // namespace

std::string classify_indefinite_unimodular(std::size_t rank, long long signature, Parity parity) {
  const auto shape = check_indefinite(rank, signature, parity);
  if (parity == Parity::odd)
    return with_count(shape.positive, "⟨1⟩") + " ⊕ " + with_count(shape.negative, "⟨-1⟩");
  const std::size_t e8_copies = static_cast<std::size_t>(std::llabs(signature) / 8);
  const std::size_t h_copies = (rank - 8 * e8_copies) / 2;
  std::string out = with_count(h_copies, "H");
  if (e8_copies > 0) out += " ⊕ " + with_count(e8_copies, signature > 0 ? "E8" : "(-E8)");
  return out;
}

IntegerLattice canonical_unimodular(std::size_t rank, long long signature, Parity parity) {
  const auto shape = check_indefinite(rank, signature, parity);
  if (parity == Parity::odd) {
    std::vector<Integer> entries(shape.positive, Integer(1));
    entries.insert(entries.end(), shape.negative, Integer(-1));
    return diagonal(entries);
  }
  const std::size_t e8_copies = static_cast<std::size_t>(std::llabs(signature) / 8);
  const std::size_t h_copies = (rank - 8 * e8_copies) / 2;
  std::vector<IntegerLattice> parts(h_copies, hyperbolic());
  const IntegerLattice block = signature > 0 ? e8() : negate(e8());
  parts.insert(parts.end(), e8_copies, block);
  return direct_sum(parts);
}

// ---------------------------------------------------------------------------
// Bounded equivalence search

std::optional<IntMatrix> equivalence_search_small(const IntegerLattice& from, const IntegerLattice& to,
                                                  int bound) {
  if (from.size() != to.size()) throw DomainError("equivalence search needs lattices of equal rank");
  if (bound < 0) throw DomainError("coefficient bound must be nonnegative");
  const std::size_t n = from.size();
  if (n == 0) return IntMatrix();

  // All coefficient vectors in the box, ordered by L1 norm, then by first
  // nonzero position, then lexicographically with 0 < 1 < -1 < 2 < -2 ...
  std::vector<IntVector> box;
  {
    const long side = 2L * bound + 1;
    long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= side;
    box.reserve(static_cast<std::size_t>(total));
    for (long idx = 0; idx < total; ++idx) {
      IntVector v(n);
      long rest = idx;
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = rest % side - bound;
        rest /= side;
        if (v[i] != 0) nonzero = true;
      }
      if (nonzero) box.push_back(std::move(v));
    }
    auto rank_of = [](const Integer& x) -> Integer { return 2 * abs(x) - (x > 0 ? 1 : 0); };
    auto key = [&](const IntVector& v) {
      Integer l1 = 0;
      std::size_t first = v.size();
      for (std::size_t i = 0; i < v.size(); ++i) {
        l1 += abs(v[i]);
        if (first == v.size() && v[i] != 0) first = i;
      }
      return std::make_pair(l1, first);
    };
    std::stable_sort(box.begin(), box.end(), [&](const IntVector& a, const IntVector& b) {
      const auto ka = key(a), kb = key(b);
      if (ka != kb) return ka < kb;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const Integer ra = rank_of(a[i]), rb = rank_of(b[i]);
        if (ra != rb) return ra < rb;
      }
      return false;
    });
  }

  // Norm pruning: candidates for column j must have square gram(to)[j][j].
  std::vector<std::vector<const IntVector*>> candidates(n);
  for (const auto& v : box) {
    const Integer sq = from.square(v);
    for (std::size_t j = 0; j < n; ++j)
      if (sq == to.gram()(j, j)) candidates[j].push_back(&v);
  }

  std::vector<const IntVector*> chosen(n, nullptr);
  std::optional<IntMatrix> result;
  std::function<bool(std::size_t)> extend = [&](std::size_t j) -> bool {
    if (j == n) {
      IntMatrix t(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) t(r, c) = (*chosen[c])[r];
      const Integer det = determinant(t);
      if (det != 1 && det != -1) return false;
      result = std::move(t);
      return true;
    }
    for (const IntVector* v : candidates[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = from.pairing(*chosen[i], *v) == to.gram()(i, j);
      if (!ok) continue;
      chosen[j] = v;
      if (extend(j + 1)) return true;
    }
    return false;
  };
  extend(0);
  return result;
}

}  // namespace capcalc::lattice
