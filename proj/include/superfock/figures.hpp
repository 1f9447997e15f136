#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "superfock/entanglement.hpp"
#include "superfock/observables.hpp"
#include "superfock/types.hpp"

namespace superfock {

/// Grid resolutions for the emitted figure data.
struct FigureConfig {
  int fig1_points = 181;  // theta samples on [0, pi]
  int grid_c = 101;       // concurrence samples on [0, 1]
  int grid_phi = 101;     // phase samples on [0, 2 pi]
};

struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 17 significant digits: enough for exact double round-trips, so identical
/// configurations produce byte-identical files.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return xs;
}

}  // namespace detail

/// Figure data:
///   1: concurrence and entropy of both one-superparticle families vs theta
///   2, 3: quadrature means over (C, phi) at alpha = (1+i)/sqrt(2)
///   4: uncertainty product over (C, phi)
///   5: X dispersion over (C, phi)
///   6: both dispersions vs C at phi in {0, pi}
/// Row order is lexicographic in the sweep indices. Every value comes from the
/// closed-form operations, never from a parallel formula.
inline DataTable figure_table(int id, const FigureConfig& config = {}) {
  if (id < 1 || id > 6) {
    throw InvalidArgumentError("figure id must be in 1..6, got " + std::to_string(id));
  }
  DataTable table;
  const std::complex<double> alpha_fixed =
      std::complex<double>(1.0, 1.0) / std::sqrt(2.0);  // figures 2-3

  if (id == 1) {
    table.columns = {"theta", "concurrence_supernumber", "concurrence_superqubit",
                     "entropy_supernumber", "entropy_superqubit"};
    for (double theta : detail::linspace(0.0, pi, config.fig1_points)) {
      const double c_number = std::sin(theta);
      const double s = std::sin(theta / 2.0);
      const double c_qubit = s * s;
      table.rows.push_back({theta, c_number, c_qubit, entropy_from_concurrence(c_number),
                            entropy_from_concurrence(c_qubit)});
    }
    return table;
  }

  if (id == 6) {
    table.columns = {"phi", "concurrence", "var_x", "var_p"};
    for (double phi : {0.0, pi}) {
      for (double c : detail::linspace(0.0, 1.0, config.grid_c)) {
        const auto [vx, vp] = dispersion_closed_form(c, phi);
        table.rows.push_back({phi, c, vx, vp});
      }
    }
    return table;
  }

  const auto cs = detail::linspace(0.0, 1.0, config.grid_c);
  const auto phis = detail::linspace(0.0, two_pi, config.grid_phi);
  switch (id) {
    case 2:
      table.columns = {"concurrence", "phi", "mean_x"};
      break;
    case 3:
      table.columns = {"concurrence", "phi", "mean_p"};
      break;
    case 4:
      table.columns = {"concurrence", "phi", "uncertainty_product"};
      break;
    case 5:
      table.columns = {"concurrence", "phi", "var_x"};
      break;
  }
  for (double c : cs) {
    for (double phi : phis) {
      double value = 0;
      switch (id) {
        case 2: value = mean_closed_form(alpha_fixed, c, phi).first; break;
        case 3: value = mean_closed_form(alpha_fixed, c, phi).second; break;
        case 4: value = uncertainty_product(c, phi); break;
        case 5: value = dispersion_closed_form(c, phi).first; break;
      }
      table.rows.push_back({c, phi, value});
    }
  }
  return table;
}

inline void write_csv(const DataTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << '\n';
  }
}

inline void write_json(const DataTable& table, std::ostream& out) {
  out << "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "  {";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? ", " : "") << '"' << table.columns[i] << "\": "
          << format_double(table.rows[r][i]);
    }
    out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
  }
  out << "]\n";
}

}  // namespace superfock
