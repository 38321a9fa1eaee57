#include "netavg/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace netavg {

WeightMatrix WeightMatrix::floating(int n, std::vector<double> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("weight matrix entry count mismatch");
  }
  WeightMatrix w;
  w.n_ = n;
  w.form_ = WeightForm::Floating;
  w.wf_ = std::move(entries);
  return w;
}

WeightMatrix WeightMatrix::rational(int n, std::vector<Rat> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("weight matrix entry count mismatch");
  }
  WeightMatrix w;
  w.n_ = n;
  w.form_ = WeightForm::Rational;
  w.wr_ = std::move(entries);
  return w;
}

double WeightMatrix::at(int i, int j) const {
  const std::size_t k = static_cast<std::size_t>(i) * n_ + j;
  return form_ == WeightForm::Floating ? wf_.at(k) : to_double(wr_.at(k));
}

const Rat& WeightMatrix::rat_at(int i, int j) const {
  if (form_ != WeightForm::Rational) {
    throw std::logic_error("rat_at on a floating-form weight matrix");
  }
  return wr_.at(static_cast<std::size_t>(i) * n_ + j);
}

std::string WeightMatrix::to_text() const {
  std::ostringstream out;
  out << "w " << n_ << ' '
      << (form_ == WeightForm::Rational ? "rational" : "floating") << '\n';
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out << ' ';
      if (form_ == WeightForm::Rational) {
        out << rat_to_string(rat_at(i, j));
      } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", at(i, j));
        out << buf;
      }
    }
    out << '\n';
  }
  return out.str();
}

WeightMatrix WeightMatrix::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag, kind;
  int n = 0;
  if (!(in >> tag >> n >> kind) || tag != "w" ||
      (kind != "rational" && kind != "floating") || n < 1) {
    throw std::invalid_argument("malformed weight matrix header");
  }
  if (kind == "rational") {
    std::vector<Rat> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    std::string token;
    while (in >> token) entries.push_back(parse_rational(token));
    return rational(n, std::move(entries));
  }
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  double v = 0;
  while (in >> v) entries.push_back(v);
  return floating(n, std::move(entries));
}

WeightMatrix metropolis(const Graph& g) {
  if (g.is_directed()) {
    throw std::invalid_argument("metropolis weights need an undirected graph");
  }
  const int n = g.n();
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [i, j] : g.edges()) {
    const double v = 1.0 / (1 + std::max(g.degree(i), g.degree(j)));
    w[static_cast<std::size_t>(i) * n + j] = v;
    w[static_cast<std::size_t>(j) * n + i] = v;
  }
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) off += w[static_cast<std::size_t>(i) * n + j];
    }
    w[static_cast<std::size_t>(i) * n + i] = 1.0 - off;
  }
  return WeightMatrix::floating(n, std::move(w));
}

WeightMatrix modified_metropolis(const Graph& g, const Rat& c) {
  if (g.is_directed()) {
    throw std::invalid_argument(
        "modified metropolis weights need an undirected graph");
  }
  if (!(c > 1)) throw std::invalid_argument("scaling constant must be > 1");
  const int n = g.n();
  std::vector<Rat> w(static_cast<std::size_t>(n) * n, Rat(0));
  for (auto [i, j] : g.edges()) {
    const Rat v = Rat(1) / (c * (1 + std::max(g.degree(i), g.degree(j))));
    w[static_cast<std::size_t>(i) * n + j] = v;
    w[static_cast<std::size_t>(j) * n + i] = v;
  }
  for (int i = 0; i < n; ++i) {
    Rat off(0);
    for (int j = 0; j < n; ++j) {
      if (j != i) off += w[static_cast<std::size_t>(i) * n + j];
    }
    const Rat diag = Rat(1) - off;
    if (!(diag > Rat(1, 2))) {
      throw std::invalid_argument(
          "diagonal entry " + rat_to_string(diag) + " at vertex " +
          std::to_string(i) + " is not dominant; raise C");
    }
    w[static_cast<std::size_t>(i) * n + i] = diag;
  }
  return WeightMatrix::rational(n, std::move(w));
}

namespace {

void check_core(const WeightMatrix& w, double tol, ValidationReport& report) {
  const int n = w.n();
  const bool exact = w.form() == WeightForm::Rational;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool sym = exact ? w.rat_at(i, j) == w.rat_at(j, i)
                             : std::abs(w.at(i, j) - w.at(j, i)) <= tol;
      if (!sym) {
        report.violations.push_back("asymmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    const bool pos_diag =
        exact ? w.rat_at(i, i) > 0 : w.at(i, i) > 0.0;
    if (!pos_diag) {
      report.violations.push_back("nonpositive diagonal at " +
                                  std::to_string(i));
    }
    for (int j = 0; j < n; ++j) {
      const bool nonneg = exact ? w.rat_at(i, j) >= 0 : w.at(i, j) >= -tol;
      if (!nonneg) {
        report.violations.push_back("negative entry at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
    bool row_ok = true, col_ok = true;
    if (exact) {
      Rat row(0), col(0);
      for (int j = 0; j < n; ++j) {
        row += w.rat_at(i, j);
        col += w.rat_at(j, i);
      }
      row_ok = row == 1;
      col_ok = col == 1;
    } else {
      double row = 0, col = 0;
      for (int j = 0; j < n; ++j) {
        row += w.at(i, j);
        col += w.at(j, i);
      }
      row_ok = std::abs(row - 1.0) <= tol;
      col_ok = std::abs(col - 1.0) <= tol;
    }
    if (!row_ok) {
      report.violations.push_back("row " + std::to_string(i) +
                                  " does not sum to one");
    }
    if (!col_ok) {
      report.violations.push_back("column " + std::to_string(i) +
                                  " does not sum to one");
    }
  }
}

}  // namespace

ValidationReport validate_assumption1(const WeightMatrix& w, double tol) {
  ValidationReport report;
  check_core(w, tol, report);
  return report;
}

ValidationReport validate_assumption1(const WeightMatrix& w, const Graph& g,
                                      double tol) {
  ValidationReport report;
  if (g.is_directed() || g.n() != w.n()) {
    report.violations.push_back("graph must be undirected on n vertices");
    return report;
  }
  check_core(w, tol, report);
  const bool exact = w.form() == WeightForm::Rational;
  for (int i = 0; i < w.n(); ++i) {
    for (int j = 0; j < w.n(); ++j) {
      if (i == j || g.has_edge(i, j)) continue;
      const bool zero = exact ? w.rat_at(i, j) == 0 : w.at(i, j) == 0.0;
      if (!zero) {
        report.violations.push_back("nonzero weight on non-edge (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
    }
  }
  return report;
}

ValidationReport validate_assumption4(const WeightMatrix& w) {
  if (w.form() != WeightForm::Rational) {
    throw std::invalid_argument(
        "dominant-diagonal validation requires the exact rational form");
  }
  ValidationReport report;
  for (int i = 0; i < w.n(); ++i) {
    if (!(w.rat_at(i, i) > Rat(1, 2))) {
      report.violations.push_back("diagonal at " + std::to_string(i) +
                                  " is not > 1/2");
    }
    for (int j = 0; j < w.n(); ++j) {
      if (i == j) continue;
      const Rat& v = w.rat_at(i, j);
      if (v == 0) continue;
      if (!(v > 0 && v < 1)) {
        report.violations.push_back("off-diagonal at (" + std::to_string(i) +
                                    "," + std::to_string(j) +
                                    ") outside (0,1)");
      }
    }
  }
  return report;
}

WeightMatrix mask_to_active(const WeightMatrix& w, const Graph& active) {
  if (active.is_directed() || active.n() != w.n()) {
    throw std::invalid_argument(
        "active graph must be undirected on the matrix dimension");
  }
  const int n = w.n();
  for (auto [i, j] : active.edges()) {
    const bool in_support = w.form() == WeightForm::Rational
                                ? w.rat_at(i, j) != 0
                                : w.at(i, j) != 0.0;
    if (!in_support) {
      throw std::invalid_argument("active edge (" + std::to_string(i) + "," +
                                  std::to_string(j) +
                                  ") is outside the matrix support");
    }
  }
  if (w.form() == WeightForm::Rational) {
    std::vector<Rat> out(static_cast<std::size_t>(n) * n, Rat(0));
    for (auto [i, j] : active.edges()) {
      out[static_cast<std::size_t>(i) * n + j] = w.rat_at(i, j);
      out[static_cast<std::size_t>(j) * n + i] = w.rat_at(j, i);
    }
    for (int i = 0; i < n; ++i) {
      Rat off(0);
      for (int j = 0; j < n; ++j) {
        if (j != i) off += out[static_cast<std::size_t>(i) * n + j];
      }
      out[static_cast<std::size_t>(i) * n + i] = Rat(1) - off;
    }
    return WeightMatrix::rational(n, std::move(out));
  }
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [i, j] : active.edges()) {
    out[static_cast<std::size_t>(i) * n + j] = w.at(i, j);
    out[static_cast<std::size_t>(j) * n + i] = w.at(j, i);
  }
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) off += out[static_cast<std::size_t>(i) * n + j];
    }
    out[static_cast<std::size_t>(i) * n + i] = 1.0 - off;
  }
  return WeightMatrix::floating(n, std::move(out));
}

}  // namespace netavg
