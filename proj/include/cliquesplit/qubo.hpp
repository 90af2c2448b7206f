#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliquesplit/errors.hpp"
#include "cliquesplit/graph.hpp"
#include "cliquesplit/text.hpp"

namespace cliquesplit {

/// One bit per variable, stored as 0/1 bytes.
using BinaryAssignment = std::vector<std::uint8_t>;

using VariablePair = std::pair<std::size_t, std::size_t>;

/// H(x) = sum_i a_i x_i + sum_{i<j} a_ij x_i x_j over x in {0,1}^N.
/// Zero coefficients are never stored.
class Qubo {
 public:
  Qubo() = default;
  explicit Qubo(std::size_t num_variables) : n_(num_variables) {}

  std::size_t num_variables() const noexcept { return n_; }

  void add_linear(std::size_t i, double coeff) {
    check(i);
    accumulate(linear_, i, coeff);
  }

  /// Adds a_ij x_i x_j. i == j folds into the linear term (x^2 = x).
  void add_quadratic(std::size_t i, std::size_t j, double coeff) {
    check(i);
    check(j);
    if (i == j) {
      accumulate(linear_, i, coeff);
      return;
    }
    accumulate(quadratic_, VariablePair{std::min(i, j), std::max(i, j)}, coeff);
  }

  double linear(std::size_t i) const {
    auto it = linear_.find(i);
    return it == linear_.end() ? 0.0 : it->second;
  }

  double quadratic(std::size_t i, std::size_t j) const {
    auto it = quadratic_.find({std::min(i, j), std::max(i, j)});
    return it == quadratic_.end() ? 0.0 : it->second;
  }

  const std::map<std::size_t, double>& linear_terms() const noexcept { return linear_; }
  const std::map<VariablePair, double>& quadratic_terms() const noexcept { return quadratic_; }

  friend bool operator==(const Qubo&, const Qubo&) = default;

 private:
  void check(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("QUBO variable index out of range");
  }

  template <class Map, class Key>
  static void accumulate(Map& m, const Key& key, double coeff) {
    auto [it, inserted] = m.try_emplace(key, 0.0);
    it->second += coeff;
    if (it->second == 0.0) m.erase(it);
  }

  std::size_t n_ = 0;
  std::map<std::size_t, double> linear_;
  std::map<VariablePair, double> quadratic_;
};

/// Reward A per selected vertex, penalty B per selected non-adjacent pair.
struct PenaltyParams {
  double reward = 1.0;   // A
  double penalty = 2.0;  // B
};

inline double evaluate(const Qubo& q, const BinaryAssignment& x) {
  if (x.size() != q.num_variables()) throw std::invalid_argument("assignment length mismatch");
  double energy = 0.0;
  for (const auto& [i, a] : q.linear_terms()) {
    if (x[i]) energy += a;
  }
  for (const auto& [ij, a] : q.quadratic_terms()) {
    if (x[ij.first] && x[ij.second]) energy += a;
  }
  return energy;
}

/// Maximum-clique QUBO: -A sum x_i + B sum_{(i,j) not in E} x_i x_j.
/// Variable i is local vertex i of g. With the default A=1, B=2 the minimum
/// energy is -omega(g).
inline Qubo mc_to_qubo(const Graph& g, PenaltyParams params = {}) {
  if (g.empty()) throw std::invalid_argument("graph has no vertices");
  if (!(params.reward > 0.0) || !(params.penalty > params.reward)) {
    throw std::invalid_argument("penalty parameters need B > A > 0");
  }
  const std::size_t n = g.num_vertices();
  Qubo q(n);
  for (Vertex u = 0; u < n; ++u) {
    q.add_linear(u, -params.reward);
    auto nb = g.neighbors(u);
    std::size_t k = 0;
    for (Vertex v = 0; v < n; ++v) {
      while (k < nb.size() && nb[k] < v) ++k;
      if (v > u && (k == nb.size() || nb[k] != v)) q.add_quadratic(u, v, params.penalty);
    }
  }
  return q;
}

/// Flat neighbor-list view of a Qubo for the inner loops of the heuristics.
struct CompiledQubo {
  std::vector<double> linear;
  std::vector<std::vector<std::pair<std::size_t, double>>> couplings;

  explicit CompiledQubo(const Qubo& q) : linear(q.num_variables(), 0.0), couplings(q.num_variables()) {
    for (const auto& [i, a] : q.linear_terms()) linear[i] = a;
    for (const auto& [ij, a] : q.quadratic_terms()) {
      couplings[ij.first].emplace_back(ij.second, a);
      couplings[ij.second].emplace_back(ij.first, a);
    }
  }

  std::size_t size() const noexcept { return linear.size(); }

  /// Energy change from flipping bit i of x.
  double flip_delta(const BinaryAssignment& x, std::size_t i) const {
    double field = linear[i];
    for (const auto& [j, a] : couplings[i]) {
      if (x[j]) field += a;
    }
    return x[i] ? -field : field;
  }
};

struct QuboMinimum {
  BinaryAssignment assignment;
  double energy = 0.0;
};

/// Exhaustive minimum for N <= 24. Ties go to the first minimum in counting
/// order with variable 0 as the least significant bit.
inline QuboMinimum brute_force_min(const Qubo& q) {
  const std::size_t n = q.num_variables();
  if (n > 24) throw std::invalid_argument("brute force limited to 24 variables");
  const CompiledQubo cq(q);
  // Gray-code walk; the mask is tracked to apply the counting-order tie-break.
  BinaryAssignment x(n, 0);
  std::uint32_t mask = 0;
  double energy = 0.0;
  std::uint32_t best_mask = 0;
  double best = 0.0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    energy += cq.flip_delta(x, bit);
    x[bit] ^= 1;
    mask ^= std::uint32_t{1} << bit;
    if (energy < best || (energy == best && mask < best_mask)) {
      best = energy;
      best_mask = mask;
    }
  }
  QuboMinimum out;
  out.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.assignment[i] = (best_mask >> i) & 1U;
  out.energy = evaluate(q, out.assignment);
  return out;
}

// ---------------------------------------------------------------------------
// Ising form

/// E(s) = offset + sum_i h_i s_i + sum_{i<j} J_ij s_i s_j over s in {-1,+1}^N.
struct IsingModel {
  std::vector<double> h;
  std::map<VariablePair, double> couplings;
  double offset = 0.0;

  double energy(const std::vector<int>& spins) const {
    if (spins.size() != h.size()) throw std::invalid_argument("spin vector length mismatch");
    double e = offset;
    for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spins[i];
    for (const auto& [ij, j] : couplings) e += j * spins[ij.first] * spins[ij.second];
    return e;
  }
};

/// Substitutes x = (1 + s) / 2.
inline IsingModel qubo_to_ising(const Qubo& q) {
  IsingModel m;
  m.h.assign(q.num_variables(), 0.0);
  for (const auto& [i, a] : q.linear_terms()) {
    m.h[i] += a / 2.0;
    m.offset += a / 2.0;
  }
  for (const auto& [ij, a] : q.quadratic_terms()) {
    const double quarter = a / 4.0;
    m.couplings[ij] = quarter;
    m.h[ij.first] += quarter;
    m.h[ij.second] += quarter;
    m.offset += quarter;
  }
  return m;
}

inline std::vector<int> to_spins(const BinaryAssignment& x) {
  std::vector<int> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? 1 : -1;
  return s;
}

// ---------------------------------------------------------------------------
// Decoding

/// Non-adjacent selected pairs, in label ids.
using Violations = std::vector<Edge>;

inline std::variant<CliqueResult, Violations> assignment_to_clique(const Graph& g,
                                                                   const BinaryAssignment& x) {
  if (x.size() != g.num_vertices()) throw std::invalid_argument("assignment length mismatch");
  std::vector<Vertex> selected;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (x[v]) selected.push_back(v);
  }
  Violations bad;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (std::size_t j = i + 1; j < selected.size(); ++j) {
      if (!g.adjacent(selected[i], selected[j])) {
        const Vertex a = g.label(selected[i]);
        const Vertex b = g.label(selected[j]);
        bad.push_back({std::min(a, b), std::max(a, b)});
      }
    }
  }
  if (!bad.empty()) return bad;
  CliqueResult r;
  r.vertices = to_labels(g, selected);
  return r;
}

// ---------------------------------------------------------------------------
// Text format: "N <n>", "L i coeff", "Q i j coeff", one per line, 0-based.
// Lines starting with '#' or 'c' are comments.

inline void write_qubo(const Qubo& q, std::ostream& out) {
  out << "N " << q.num_variables() << '\n';
  for (const auto& [i, a] : q.linear_terms()) out << "L " << i << ' ' << format_number(a) << '\n';
  for (const auto& [ij, a] : q.quadratic_terms()) {
    out << "Q " << ij.first << ' ' << ij.second << ' ' << format_number(a) << '\n';
  }
}

inline std::string write_qubo(const Qubo& q) {
  std::ostringstream out;
  write_qubo(q, out);
  return out.str();
}

inline Qubo parse_qubo(std::istream& in) {
  std::optional<Qubo> q;
  std::string line;
  std::size_t line_no = 0;
  auto index = [&](std::string_view tok) {
    auto v = parse_unsigned(tok);
    if (!v) throw ParseError(line_no, "bad index '" + std::string(tok) + "'");
    if (*v >= q->num_variables()) throw ParseError(line_no, "variable index out of range");
    return static_cast<std::size_t>(*v);
  };
  auto coeff = [&](std::string_view tok) {
    auto v = parse_number(tok);
    if (!v) throw ParseError(line_no, "bad coefficient '" + std::string(tok) + "'");
    return *v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0][0] == '#' || tok[0] == "c") continue;
    if (tok[0] == "N") {
      if (q) throw ParseError(line_no, "duplicate N line");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'N <count>'");
      auto n = parse_unsigned(tok[1]);
      if (!n) throw ParseError(line_no, "bad variable count");
      q.emplace(static_cast<std::size_t>(*n));
    } else if (tok[0] == "L" || tok[0] == "Q") {
      if (!q) throw ParseError(line_no, "term before N line");
      if (tok[0] == "L") {
        if (tok.size() != 3) throw ParseError(line_no, "expected 'L i coeff'");
        q->add_linear(index(tok[1]), coeff(tok[2]));
      } else {
        if (tok.size() != 4) throw ParseError(line_no, "expected 'Q i j coeff'");
        q->add_quadratic(index(tok[1]), index(tok[2]), coeff(tok[3]));
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!q) throw ParseError(line_no, "missing N line");
  return std::move(*q);
}

inline Qubo parse_qubo(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qubo(in);
}

}  // namespace cliquesplit
