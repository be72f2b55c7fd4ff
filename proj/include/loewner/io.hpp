#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "loewner/diffusion.hpp"
#include "loewner/error.hpp"
#include "loewner/loewner_flow.hpp"
#include "loewner/stationary.hpp"
#include "loewner/stats.hpp"
#include "loewner/time_change.hpp"

// Tabular exports. Every schema is a named column list; a Table serializes
// to CSV (header + rows) or JSON ({"columns": [...], "rows": [[...], ...]}).
// Doubles are printed in shortest round-trip form so reruns are byte-identical.

namespace loewner::io {

enum class Format { csv, json };

inline const char* extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

using Cell = std::variant<std::monostate, double, bool, std::string>;

inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) {
    require(row.size() == columns.size(), "row width does not match the header");
    rows.push_back(std::move(row));
  }
};

inline std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::visit(
          [&out](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) out += format_double(v);
            else if constexpr (std::is_same_v<V, bool>) out += v ? "true" : "false";
            else if constexpr (std::is_same_v<V, std::string>) out += v;
          },
          row[i]);
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) {
      std::visit(
          [&r](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::monostate>) r.push_back(nullptr);
            else if constexpr (std::is_same_v<V, double>) r.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(format_double(v)));
            else r.push_back(v);
          },
          c);
    }
    rows.push_back(std::move(r));
  }
  return {{"columns", t.columns}, {"rows", std::move(rows)}};
}

inline void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), "cannot open " + file.string() + " for writing");
  out << text;
  require(static_cast<bool>(out), "failed writing " + file.string());
}

inline void write_table(const std::filesystem::path& file, const Table& t, Format f) {
  write_text(file, f == Format::csv ? to_csv(t) : to_json(t).dump(1) + "\n");
}

// --- schemas ---------------------------------------------------------------

inline Table flow_table(const FlowPath& path) {
  Table t{{"t", "x", "y"}, {}};
  t.rows.reserve(path.states.size());
  for (const auto& s : path.states) t.add({s.t, s.x, s.y});
  return t;
}

inline nlohmann::json flow_sidecar(const FlowPath& path) {
  return {{"kappa", path.kappa.value()},
          {"dt", path.dt},
          {"seed", path.seed},
          {"horizon", path.horizon()},
          {"grid", path.grid == FlowGrid::uniform ? "uniform" : "scaled"}};
}

inline Table time_change_table(const TimeChangeMap& map) {
  Table t{{"t", "u"}, {}};
  t.rows.reserve(map.t_grid.size());
  for (std::size_t k = 0; k < map.t_grid.size(); ++k) t.add({map.t_grid[k], map.u_values[k]});
  return t;
}

inline Table diffusion_table(const DiffusionPath& path) {
  Table t{{"u", "T"}, {}};
  t.rows.reserve(path.T_values.size());
  for (std::size_t k = 0; k < path.T_values.size(); ++k) t.add({path.u_grid[k], path.T_values[k]});
  return t;
}

inline Table ensemble_table(std::span<const DiffusionPath> paths) {
  Table t{{"path_id", "u", "T"}, {}};
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t k = 0; k < paths[p].T_values.size(); ++k) {
      t.add({static_cast<double>(p), paths[p].u_grid[k], paths[p].T_values[k]});
    }
  }
  return t;
}

inline Table terminal_table(std::span<const double> finals) {
  Table t{{"path_id", "T_final"}, {}};
  for (std::size_t p = 0; p < finals.size(); ++p) t.add({static_cast<double>(p), finals[p]});
  return t;
}

inline Table phase_table(std::span<const PhaseRow> rows) {
  Table t{{"kappa", "exponent", "normalizable", "C_inverse"}, {}};
  for (const auto& r : rows) {
    t.add({r.kappa.value(), r.exponent, r.normalizable,
           r.inverse_normalization ? Cell{*r.inverse_normalization} : Cell{}});
  }
  return t;
}

inline Table histogram_table(std::span<const stats::HistogramBin> bins) {
  Table t{{"center", "density"}, {}};
  for (const auto& b : bins) t.add({b.center, b.density});
  return t;
}

}  // namespace loewner::io
