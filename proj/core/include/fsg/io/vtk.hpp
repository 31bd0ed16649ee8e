#pragma once

#include <filesystem>
#include <string>

#include "fsg/field.hpp"

namespace fsg::io {

enum class ExportQuantity { U, SinHalfU };

ExportQuantity parse_export_quantity(const std::string& name);

/// Legacy VTK structured-points text, x fastest. Node j sits at a + j*h.
std::string structured_points_text(const Field& physical, ExportQuantity quantity, const std::string& title);

void export_structured_grid(const std::filesystem::path& snapshot, const std::filesystem::path& out,
                            ExportQuantity quantity);

}  // namespace fsg::io
