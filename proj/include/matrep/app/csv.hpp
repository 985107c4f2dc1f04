#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "matrep/eigen.hpp"
#include "matrep/kernels.hpp"

namespace matrep::app {

/// 17 significant digits: parses back to the identical double.
std::string format_number(double x);

/// Header `r,s,value`, one row per sample, r outer, s inner.
void write_grid(std::ostream &out, const KernelGrid &grid);
/// Header `x,value`.
void write_curve(std::ostream &out, const CurveSeries &curve);
/// Header `s,x,value`: several cuts in one table, in request order.
void write_cuts(std::ostream &out, const std::vector<CurveSeries> &cuts);
/// For each eigenpair a line `eigenvalue <value>` followed by one coefficient
/// per line.
void write_spectrum(std::ostream &out, const Spectrum &spectrum);

/// Readers for the formats above. Axes are rebuilt from the first and last
/// coordinate and the sample count; the kernel kind is not stored.
KernelGrid read_grid(std::istream &in);
CurveSeries read_curve(std::istream &in);
std::vector<CurveSeries> read_cuts(std::istream &in);
Spectrum read_spectrum(std::istream &in);

}  // namespace matrep::app
