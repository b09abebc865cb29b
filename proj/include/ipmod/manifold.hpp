#pragma once

#include <filesystem>
#include <string>

#include "ipmod/ip_module.hpp"
#include "ipmod/persistence.hpp"

namespace ipmod {

/// Flat-connection table of a homology sphere: generators with grading and cs, plus the differential.
struct ManifoldData {
    std::string name;
    FilteredComplex complex;
};

/// Parses the manifest format
///   {"name": str, "generators": [{"label": str, "grading": int, "cs": "p/q"}], "boundary": [[from, to]]}.
/// Syntax errors report line and column; semantic errors name the offending generator or pair.
/// Everything is raised as validation_error.
ManifoldData parse_manifold(const std::string& text);

ManifoldData load_manifold(const std::filesystem::path& path);

/// Manifest text for `m`, the inverse of parse_manifold.
std::string dump_manifold(const ManifoldData& m);

IPModule ip_module_of(const ManifoldData& m);

ExtendedRational ell_of(const ManifoldData& m);

}  // namespace ipmod
