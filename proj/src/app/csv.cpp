#include "matrep/app/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "matrep/app/potential_parser.hpp"

namespace matrep::app {

namespace {

std::vector<std::string> split(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

void expect_header(std::istream &in, const std::string &header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ParseError("csv: expected header '" + header + "'");
  }
}

std::vector<std::vector<double>> read_rows(std::istream &in, std::size_t width) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != width) throw ParseError("csv: wrong field count in '" + line + "'");
    std::vector<double> row;
    for (const auto &f : fields) row.push_back(parse_double(f, "csv field"));
    rows.push_back(std::move(row));
  }
  return rows;
}

UniformAxis axis_from(const std::vector<double> &coords) {
  if (coords.size() < 2) return UniformAxis(coords.front(), coords.front(), 1.0);
  const double step = (coords.back() - coords.front()) / static_cast<double>(coords.size() - 1);
  return UniformAxis(coords.front(), coords.back(), step);
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_grid(std::ostream &out, const KernelGrid &grid) {
  out << "r,s,value\n";
  for (Eigen::Index i = 0; i < grid.values.rows(); ++i) {
    const std::string r = format_number(grid.r_axis.at(static_cast<std::size_t>(i)));
    for (Eigen::Index j = 0; j < grid.values.cols(); ++j) {
      out << r << ',' << format_number(grid.s_axis.at(static_cast<std::size_t>(j))) << ','
          << format_number(grid.values(i, j)) << '\n';
    }
  }
}

void write_curve(std::ostream &out, const CurveSeries &curve) {
  out << "x,value\n";
  for (std::size_t i = 0; i < curve.x.size(); ++i) {
    out << format_number(curve.x[i]) << ',' << format_number(curve.y[i]) << '\n';
  }
}

void write_cuts(std::ostream &out, const std::vector<CurveSeries> &cuts) {
  out << "s,x,value\n";
  for (const auto &cut : cuts) {
    const std::string s = format_number(cut.position);
    for (std::size_t i = 0; i < cut.x.size(); ++i) {
      out << s << ',' << format_number(cut.x[i]) << ',' << format_number(cut.y[i]) << '\n';
    }
  }
}

void write_spectrum(std::ostream &out, const Spectrum &spectrum) {
  for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
    out << "eigenvalue " << format_number(spectrum.eigenvalues(k)) << '\n';
    for (Eigen::Index i = 0; i < spectrum.vectors.rows(); ++i) {
      out << format_number(spectrum.vectors(i, k)) << '\n';
    }
  }
}

KernelGrid read_grid(std::istream &in) {
  expect_header(in, "r,s,value");
  const auto rows = read_rows(in, 3);
  if (rows.empty()) throw ParseError("csv: empty grid");
  std::vector<double> s_coords;
  for (const auto &row : rows) {
    if (row[0] != rows.front()[0]) break;
    s_coords.push_back(row[1]);
  }
  const std::size_t ns = s_coords.size();
  if (rows.size() % ns != 0) throw ParseError("csv: grid is not rectangular");
  const std::size_t nr = rows.size() / ns;
  std::vector<double> r_coords;
  for (std::size_t i = 0; i < nr; ++i) r_coords.push_back(rows[i * ns][0]);

  KernelGrid grid;
  grid.r_axis = axis_from(r_coords);
  grid.s_axis = axis_from(s_coords);
  grid.values.resize(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(ns));
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < ns; ++j) {
      const auto &row = rows[i * ns + j];
      if (row[0] != r_coords[i] || row[1] != s_coords[j]) {
        throw ParseError("csv: grid rows out of order");
      }
      grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[2];
    }
  }
  return grid;
}

CurveSeries read_curve(std::istream &in) {
  expect_header(in, "x,value");
  CurveSeries c;
  for (const auto &row : read_rows(in, 2)) {
    c.x.push_back(row[0]);
    c.y.push_back(row[1]);
  }
  return c;
}

std::vector<CurveSeries> read_cuts(std::istream &in) {
  expect_header(in, "s,x,value");
  std::vector<CurveSeries> cuts;
  for (const auto &row : read_rows(in, 3)) {
    if (cuts.empty() || cuts.back().position != row[0]) {
      cuts.push_back({});
      cuts.back().label = CurveLabel::Cut;
      cuts.back().position = row[0];
    }
    cuts.back().x.push_back(row[1]);
    cuts.back().y.push_back(row[2]);
  }
  return cuts;
}

Spectrum read_spectrum(std::istream &in) {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("eigenvalue ", 0) == 0) {
      values.push_back(parse_double(line.substr(11), "eigenvalue"));
      vectors.emplace_back();
    } else {
      if (vectors.empty()) throw ParseError("spectrum: coefficient before eigenvalue line");
      vectors.back().push_back(parse_double(line, "coefficient"));
    }
  }
  Spectrum sp;
  const auto k = static_cast<Eigen::Index>(values.size());
  const auto n = k ? static_cast<Eigen::Index>(vectors.front().size()) : 0;
  sp.eigenvalues.resize(k);
  sp.vectors.resize(n, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (static_cast<Eigen::Index>(vectors[j].size()) != n) {
      throw ParseError("spectrum: ragged coefficient blocks");
    }
    sp.eigenvalues(j) = values[j];
    for (Eigen::Index i = 0; i < n; ++i) sp.vectors(i, j) = vectors[j][i];
  }
  return sp;
}

}  // namespace matrep::app
