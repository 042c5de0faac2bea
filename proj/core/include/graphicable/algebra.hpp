#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphicable/errors.hpp"
#include "graphicable/graph.hpp"
#include "graphicable/matrix.hpp"
#include "graphicable/rational.hpp"

namespace graphicable {

using RationalMatrix = SquareMatrix<Rational>;

/// Element of an evolution algebra, written in the generator basis e_1..e_n.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::size_t dimension) : coefficients_(dimension) {}
  explicit AlgebraElement(std::vector<Rational> coefficients)
      : coefficients_(std::move(coefficients)) {}

  /// The generator e_i (1-based).
  static AlgebraElement generator(std::size_t dimension, std::size_t i);

  std::size_t dimension() const noexcept { return coefficients_.size(); }
  /// Coefficient of e_i, 1-based.
  const Rational& operator[](std::size_t i) const { return coefficients_.at(i - 1); }
  Rational& operator[](std::size_t i) { return coefficients_.at(i - 1); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Evolution algebra: e_i * e_j = 0 for i != j and e_i^2 = sum_j a_{ji} e_j.
/// structure()(j, i) holds a_{ji}, so column i describes e_i^2.
class EvolutionAlgebra {
 public:
  explicit EvolutionAlgebra(RationalMatrix structure);

  std::size_t dimension() const noexcept { return structure_.size(); }
  const RationalMatrix& structure() const noexcept { return structure_; }
  /// a_{ji}: the coefficient of e_j in e_i^2.
  const Rational& coefficient(std::size_t j, std::size_t i) const { return structure_(j, i); }

  /// Every structure constant is 0 or 1.
  bool is_graphicable() const noexcept { return graphicable_; }
  bool is_zero() const;

  /// Nonzero entries of column i as (j, a_{ji}) pairs, ascending j.
  const std::vector<std::pair<std::size_t, Rational>>& square_terms(std::size_t i) const {
    return columns_.at(i - 1);
  }

  friend bool operator==(const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    return a.structure_ == b.structure_;
  }

 private:
  RationalMatrix structure_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns_;
  bool graphicable_ = true;
};

/// Row-of-rows input; throws InvalidArgument unless every row has
/// rows.size() entries. rows[j-1][i-1] is a_{ji}.
EvolutionAlgebra from_structure_matrix(const std::vector<std::vector<Rational>>& rows);

/// A(G): e_i^2 is the sum of the generators adjacent to e_i.
EvolutionAlgebra algebra_from_graph(const Graph& g);

/// Arc (i, j) whenever e_j appears in e_i^2. Throws InvalidArgument if the
/// algebra is not graphicable.
Digraph digraph_from_algebra(const EvolutionAlgebra& a);

/// First reason a structure matrix fails to describe a simple graph.
struct SGraphicableViolation {
  enum class Kind { NonBinary, Diagonal, Asymmetric };
  Kind kind;
  std::size_t row;     // j in a_{ji}
  std::size_t column;  // i in a_{ji}

  std::string describe() const;
};

/// Scans entries in row-major order: non-0/1 values first, then the
/// diagonal, then symmetry.
std::optional<SGraphicableViolation> s_graphicable_violation(const EvolutionAlgebra& a);

inline bool is_s_graphicable(const EvolutionAlgebra& a) {
  return !s_graphicable_violation(a).has_value();
}

/// Thrown by graph_from_algebra; carries the offending entry.
class NotSGraphicable : public InvalidArgument {
 public:
  explicit NotSGraphicable(SGraphicableViolation v)
      : InvalidArgument("algebra is not S-graphicable: " + v.describe()), violation_(v) {}
  const SGraphicableViolation& violation() const noexcept { return violation_; }

 private:
  SGraphicableViolation violation_;
};

/// Inverse of algebra_from_graph. Throws NotSGraphicable.
Graph graph_from_algebra(const EvolutionAlgebra& a);

/// x * y = sum_i x_i y_i e_i^2. Throws InvalidArgument on dimension mismatch.
AlgebraElement multiply(const EvolutionAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);

/// e_i^2 as an element (column i of the structure matrix).
AlgebraElement generator_square(const EvolutionAlgebra& a, std::size_t i);

struct IdentityWitness {
  std::string identity;  // "commutativity" or "flexibility"
  AlgebraElement x;
  AlgebraElement y;
  AlgebraElement left;
  AlgebraElement right;
};

struct IdentityReport {
  std::size_t trials = 0;
  std::size_t commutativity_failures = 0;
  std::size_t flexibility_failures = 0;
  std::optional<IdentityWitness> first_violation;

  bool passed() const { return commutativity_failures == 0 && flexibility_failures == 0; }
};

/// Checks x*y = y*x and (x*y)*x = x*(y*x) on `trials` pseudorandom pairs with
/// integer coefficients in [-coefficient_range, coefficient_range], drawn
/// from a std::mt19937_64 seeded with `seed`.
IdentityReport check_identities(const EvolutionAlgebra& a, std::size_t trials,
                                std::int64_t coefficient_range, std::uint64_t seed);

struct AssociatorWitness {
  AlgebraElement x;
  AlgebraElement y;
  AlgebraElement z;
  AlgebraElement left;   // (x*y)*z
  AlgebraElement right;  // x*(y*z)
};

/// First (x, y, z) with (x*y)*z != x*(y*z). Searches basis triples
/// (e_i, e_j, e_k) in ascending lexicographic order, then all triples drawn
/// from the 0/1 vectors of support 1 or 2, ordered by their support tuples
/// (1) < (1,2) < ... < (1,n) < (2) < (2,3) < ... . nullopt once that grid
/// is exhausted; the zero algebra short-circuits to nullopt.
std::optional<AssociatorWitness> find_nonassociative_witness(const EvolutionAlgebra& a);

}  // namespace graphicable
