#include "ga/offexport.hpp"

#include "ga/jsonio.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ga {

std::string off_text(const MeshDocument& mesh) {
    std::string out = "OFF\n";
    out += std::to_string(mesh.vertices.size()) + " " + std::to_string(mesh.faces.size()) +
           " 0\n";
    char buf[64];
    for (const auto& v : mesh.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", v[i].to_double());
            if (i) out += " ";
            out += buf;
        }
        out += "\n";
    }
    for (const auto& f : mesh.faces) {
        out += std::to_string(f.size());
        for (int idx : f) out += " " + std::to_string(idx);
        out += "\n";
    }
    return out;
}

std::string sidecar_path_for(const std::string& off_path) { return off_path + ".exact.json"; }

void write_off(const MeshDocument& mesh, const std::string& path) {
    for (const auto& v : mesh.vertices)
        if (v.size() != mesh.vertices.front().size())
            throw std::invalid_argument("write_off: mixed vertex dimensions");

    std::ofstream off(path);
    if (!off) throw std::runtime_error("write_off: cannot open " + path);
    off << off_text(mesh);
    if (!off) throw std::runtime_error("write_off: write failed for " + path);

    Json sidecar;
    sidecar["schema_version"] = 1;
    Json verts = Json::array();
    for (const auto& v : mesh.vertices) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(golden_to_json(x));
        verts.push_back(std::move(row));
    }
    sidecar["vertices"] = std::move(verts);
    sidecar["faces"] = mesh.faces;

    std::ofstream side(sidecar_path_for(path));
    if (!side) throw std::runtime_error("write_off: cannot open sidecar for " + path);
    side << sidecar.dump(2) << "\n";
}

MeshDocument read_exact_sidecar(const std::string& sidecar_path) {
    std::ifstream in(sidecar_path);
    if (!in) throw std::runtime_error("read_exact_sidecar: cannot open " + sidecar_path);
    Json j = Json::parse(in);
    MeshDocument mesh;
    for (const auto& row : j.at("vertices")) {
        std::vector<GoldenNumber> v;
        for (const auto& x : row) v.push_back(golden_from_json(x));
        mesh.vertices.push_back(std::move(v));
    }
    mesh.faces = j.at("faces").get<std::vector<std::vector<int>>>();
    return mesh;
}

}  // namespace ga
