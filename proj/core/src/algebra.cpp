#include "graphicable/algebra.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace graphicable {

namespace {

void require_same_dimension(std::size_t expected, const AlgebraElement& x, const char* name) {
  if (x.dimension() != expected) {
    throw InvalidArgument(std::string(name) + " has dimension " + std::to_string(x.dimension()) +
                          ", algebra has " + std::to_string(expected));
  }
}

}  // namespace

AlgebraElement AlgebraElement::generator(std::size_t dimension, std::size_t i) {
  if (i < 1 || i > dimension) throw InvalidArgument("generator index out of range");
  AlgebraElement e(dimension);
  e[i] = 1;
  return e;
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c == 0; });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.dimension() != dimension()) throw InvalidArgument("element dimension mismatch");
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  if (other.dimension() != dimension()) throw InvalidArgument("element dimension mismatch");
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

EvolutionAlgebra::EvolutionAlgebra(RationalMatrix structure)
    : structure_(std::move(structure)), columns_(structure_.size()) {
  const std::size_t n = structure_.size();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational& value = structure_(j, i);
      if (value != 0) columns_[i - 1].emplace_back(j, value);
      if (value != 0 && value != 1) graphicable_ = false;
    }
  }
}

bool EvolutionAlgebra::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

EvolutionAlgebra from_structure_matrix(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  RationalMatrix m(n);
  for (std::size_t j = 1; j <= n; ++j) {
    if (rows[j - 1].size() != n) {
      throw InvalidArgument("structure matrix is not square: row " + std::to_string(j) + " has " +
                            std::to_string(rows[j - 1].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t i = 1; i <= n; ++i) m(j, i) = rows[j - 1][i - 1];
  }
  return EvolutionAlgebra(std::move(m));
}

EvolutionAlgebra algebra_from_graph(const Graph& g) {
  RationalMatrix m(g.vertex_count());
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = 1;
    m(e.v, e.u) = 1;
  }
  return EvolutionAlgebra(std::move(m));
}

Digraph digraph_from_algebra(const EvolutionAlgebra& a) {
  if (!a.is_graphicable()) throw InvalidArgument("algebra is not graphicable (entries outside {0,1})");
  std::vector<Digraph::Arc> arcs;
  for (std::size_t i = 1; i <= a.dimension(); ++i) {
    for (const auto& [j, value] : a.square_terms(i)) {
      arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Digraph::make(a.dimension(), arcs);
}

std::string SGraphicableViolation::describe() const {
  const std::string where = "a_{" + std::to_string(row) + "," + std::to_string(column) + "}";
  switch (kind) {
    case Kind::NonBinary:
      return "entry " + where + " is not 0 or 1";
    case Kind::Diagonal:
      return "diagonal entry " + where + " is nonzero";
    case Kind::Asymmetric:
      return "entry " + where + " differs from a_{" + std::to_string(column) + "," +
             std::to_string(row) + "}";
  }
  return where;
}

std::optional<SGraphicableViolation> s_graphicable_violation(const EvolutionAlgebra& a) {
  using Kind = SGraphicableViolation::Kind;
  const std::size_t n = a.dimension();
  const auto& m = a.structure();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (m(j, i) != 0 && m(j, i) != 1) return SGraphicableViolation{Kind::NonBinary, j, i};
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    if (m(i, i) != 0) return SGraphicableViolation{Kind::Diagonal, i, i};
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = j + 1; i <= n; ++i) {
      if (m(j, i) != m(i, j)) return SGraphicableViolation{Kind::Asymmetric, j, i};
    }
  }
  return std::nullopt;
}

Graph graph_from_algebra(const EvolutionAlgebra& a) {
  if (auto violation = s_graphicable_violation(a)) throw NotSGraphicable(*violation);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= a.dimension(); ++i) {
    for (const auto& [j, value] : a.square_terms(i)) {
      if (j > i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph::make(a.dimension(), edges);
}

namespace {

std::optional<std::int64_t> small_integer(const Rational& r) {
  if (denominator(r) != 1) return std::nullopt;
  const auto num = numerator(r);
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return num.convert_to<std::int64_t>();
}

// 0/1 structure with integer factors: plain int64 sums, nullopt on overflow.
std::optional<AlgebraElement> multiply_integral(const EvolutionAlgebra& a, const AlgebraElement& x,
                                                const AlgebraElement& y) {
  const std::size_t n = a.dimension();
  std::vector<std::int64_t> sum(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i] == 0 || y[i] == 0 || a.square_terms(i).empty()) continue;
    const auto xi = small_integer(x[i]);
    const auto yi = small_integer(y[i]);
    std::int64_t weight;
    if (!xi || !yi || __builtin_mul_overflow(*xi, *yi, &weight)) return std::nullopt;
    for (const auto& term : a.square_terms(i)) {
      if (__builtin_add_overflow(sum[term.first - 1], weight, &sum[term.first - 1])) return std::nullopt;
    }
  }
  AlgebraElement result(n);
  for (std::size_t j = 1; j <= n; ++j) result[j] = sum[j - 1];
  return result;
}

}  // namespace

AlgebraElement multiply(const EvolutionAlgebra& a, const AlgebraElement& x,
                        const AlgebraElement& y) {
  require_same_dimension(a.dimension(), x, "left factor");
  require_same_dimension(a.dimension(), y, "right factor");
  if (a.is_graphicable()) {
    if (auto fast = multiply_integral(a, x, y)) return std::move(*fast);
  }
  AlgebraElement result(a.dimension());
  for (std::size_t i = 1; i <= a.dimension(); ++i) {
    if (x[i] == 0 || y[i] == 0) continue;
    const Rational weight = x[i] * y[i];
    for (const auto& [j, value] : a.square_terms(i)) result[j] += weight * value;
  }
  return result;
}

AlgebraElement generator_square(const EvolutionAlgebra& a, std::size_t i) {
  if (i < 1 || i > a.dimension()) {
    throw InvalidArgument("generator e_" + std::to_string(i) + " outside e_1..e_" +
                          std::to_string(a.dimension()));
  }
  AlgebraElement square(a.dimension());
  for (const auto& [j, value] : a.square_terms(i)) square[j] = value;
  return square;
}

IdentityReport check_identities(const EvolutionAlgebra& a, std::size_t trials,
                                std::int64_t coefficient_range, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coefficient(-coefficient_range, coefficient_range);
  auto random_element = [&] {
    AlgebraElement e(a.dimension());
    for (std::size_t i = 1; i <= a.dimension(); ++i) e[i] = coefficient(rng);
    return e;
  };

  IdentityReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const AlgebraElement x = random_element();
    const AlgebraElement y = random_element();
    const AlgebraElement xy = multiply(a, x, y);
    const AlgebraElement yx = multiply(a, y, x);
    if (xy != yx) {
      ++report.commutativity_failures;
      if (!report.first_violation) report.first_violation = IdentityWitness{"commutativity", x, y, xy, yx};
    }
    const AlgebraElement left = multiply(a, xy, x);
    const AlgebraElement right = multiply(a, x, yx);
    if (left != right) {
      ++report.flexibility_failures;
      if (!report.first_violation) report.first_violation = IdentityWitness{"flexibility", x, y, left, right};
    }
  }
  return report;
}

std::optional<AssociatorWitness> find_nonassociative_witness(const EvolutionAlgebra& a) {
  if (a.is_zero()) return std::nullopt;
  const std::size_t n = a.dimension();

  auto test = [&](const AlgebraElement& x, const AlgebraElement& y,
                  const AlgebraElement& z) -> std::optional<AssociatorWitness> {
    AlgebraElement left = multiply(a, multiply(a, x, y), z);
    AlgebraElement right = multiply(a, x, multiply(a, y, z));
    if (left == right) return std::nullopt;
    return AssociatorWitness{x, y, z, std::move(left), std::move(right)};
  };

  std::vector<AlgebraElement> basis;
  for (std::size_t i = 1; i <= n; ++i) basis.push_back(AlgebraElement::generator(n, i));
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) {
        if (auto w = test(x, y, z)) return w;
      }
    }
  }

  std::vector<AlgebraElement> grid;
  for (std::size_t i = 1; i <= n; ++i) {
    grid.push_back(basis[i - 1]);
    for (std::size_t j = i + 1; j <= n; ++j) grid.push_back(basis[i - 1] + basis[j - 1]);
  }
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      for (const auto& z : grid) {
        if (auto w = test(x, y, z)) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace graphicable
