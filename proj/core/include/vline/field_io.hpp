#pragma once

#include <string>

#include "vline/grid.hpp"

namespace vline {

// Portable field file: one text header line
//   VLF1 <n> <half_extent> <ncomp>\n
// followed by ncomp * n * n little-endian 64-bit floats, row-major
// (values[i*n + j], first index over x), components concatenated.

void write_field(const std::string& path, const ScalarField& f);
void write_field(const std::string& path, const VectorField& f);

/// Number of components stored in a field file (1 or 2).
int field_file_components(const std::string& path);

ScalarField read_scalar_field(const std::string& path);
VectorField read_vector_field(const std::string& path);

}  // namespace vline
