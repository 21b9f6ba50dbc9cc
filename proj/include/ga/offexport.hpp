#pragma once

#include "ga/golden.hpp"

#include <string>
#include <vector>

namespace ga {

/**
 * Mesh with exact coordinates.  Floats appear only in the OFF text, via
 * GoldenNumber::to_double at write time; the exact values travel in a JSON
 * sidecar next to the OFF file so a reload reproduces them bit for bit.
 */
struct MeshDocument {
    std::vector<std::vector<GoldenNumber>> vertices;  // uniform dimension, 3 or 4
    std::vector<std::vector<int>> faces;
};

/// The OFF text: "OFF", counts line, vertex lines with 17 significant
/// digits, face lines.  Deterministic, order-preserving.
std::string off_text(const MeshDocument& mesh);

/// Write the OFF file plus the "<path>.exact.json" sidecar.
void write_off(const MeshDocument& mesh, const std::string& path);

/// Reload the exact mesh from a sidecar written by write_off.
MeshDocument read_exact_sidecar(const std::string& sidecar_path);

std::string sidecar_path_for(const std::string& off_path);

}  // namespace ga
