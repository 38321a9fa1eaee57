#pragma once

#include <string>
#include <vector>

#include "netavg/graph.hpp"
#include "netavg/rational.hpp"

namespace netavg {

enum class WeightForm { Floating, Rational };

// Symmetric doubly stochastic mixing matrix. The rational form is required
// for quantized runs, where the dynamics argument needs exact a/b weights;
// the floating form is used everywhere else for speed.
class WeightMatrix {
 public:
  static WeightMatrix floating(int n, std::vector<double> entries);
  static WeightMatrix rational(int n, std::vector<Rat> entries);

  int n() const { return n_; }
  WeightForm form() const { return form_; }

  double at(int i, int j) const;
  const Rat& rat_at(int i, int j) const;

  // Dense row-major text grid; rational mode writes exact p/q tokens.
  std::string to_text() const;
  static WeightMatrix from_text(const std::string& text);

 private:
  WeightMatrix() = default;
  int n_ = 0;
  WeightForm form_ = WeightForm::Floating;
  std::vector<double> wf_;
  std::vector<Rat> wr_;
};

// w_ij = 1 / (1 + max(d_i, d_j)) on edges, diagonal completes the row.
WeightMatrix metropolis(const Graph& g);

// w_ij = 1 / (C * (1 + max(d_i, d_j))) on edges, exact rationals, C > 1.
// Throws if any diagonal entry fails w_ii > 1/2.
WeightMatrix modified_metropolis(const Graph& g, const Rat& c);

struct ValidationReport {
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Symmetry, double stochasticity, positive diagonal; the graph overload also
// checks that off-diagonal support matches the edge set.
ValidationReport validate_assumption1(const WeightMatrix& w, double tol);
ValidationReport validate_assumption1(const WeightMatrix& w, const Graph& g,
                                      double tol);

// Dominant diagonal (w_ii > 1/2) and rational off-diagonal entries in (0, 1)
// on the support. Rejects floating-form input.
ValidationReport validate_assumption4(const WeightMatrix& w);

// Keeps off-diagonal entries on active edges, zeroes the rest, and
// recomputes the diagonal so every row still sums to one. Active edges must
// lie inside w's support.
WeightMatrix mask_to_active(const WeightMatrix& w, const Graph& active);

}  // namespace netavg
