/*
 * Copyright 2026 The meshfield authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "meshfield/mesh/io.hpp"

#include "meshfield/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace meshfield {

namespace {

struct ObjCorner {
  int v = -1;   // 0-based vertex index
  int vt = -1;  // 0-based uv index, -1 when absent
};

// Parses "v", "v/t", "v//n", "v/t/n". Indices are one-based positives.
ObjCorner parse_corner(const std::string& token, std::size_t line_no,
                       std::size_t nv, std::size_t nvt) {
  ObjCorner c;
  std::array<long, 3> idx = {0, 0, 0};
  std::array<bool, 3> given = {false, false, false};
  std::size_t field = 0, pos = 0;
  while (pos < token.size() && field < 3) {
    if (token[pos] == '/') {
      ++field;
      ++pos;
      continue;
    }
    std::size_t end = token.find('/', pos);
    if (end == std::string::npos) end = token.size();
    const std::string num = token.substr(pos, end - pos);
    char* stop = nullptr;
    const long value = std::strtol(num.c_str(), &stop, 10);
    if (stop == num.c_str() || *stop != '\0')
      throw ParseError("line " + std::to_string(line_no) + ": bad face corner '" +
                       token + "'");
    idx[field] = value;
    given[field] = true;
    pos = end;
  }
  if (!given[0])
    throw ParseError("line " + std::to_string(line_no) + ": face corner missing vertex");
  if (idx[0] < 1 || static_cast<std::size_t>(idx[0]) > nv)
    throw ParseError("line " + std::to_string(line_no) + ": vertex index " +
                     std::to_string(idx[0]) + " out of range (one-based)");
  c.v = static_cast<int>(idx[0] - 1);
  if (given[1]) {
    if (idx[1] < 1 || static_cast<std::size_t>(idx[1]) > nvt)
      throw ParseError("line " + std::to_string(line_no) + ": uv index " +
                       std::to_string(idx[1]) + " out of range (one-based)");
    c.vt = static_cast<int>(idx[1] - 1);
  }
  return c;
}

TriangleMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");

  std::vector<Eigen::Vector3d> positions;
  std::vector<Eigen::Vector2d> uvs;
  std::vector<std::array<ObjCorner, 3>> tris;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Eigen::Vector3d p;
      if (!(ls >> p.x() >> p.y() >> p.z()))
        throw ParseError("line " + std::to_string(line_no) + ": malformed vertex");
      positions.push_back(p);
    } else if (tag == "vt") {
      Eigen::Vector2d t;
      if (!(ls >> t.x() >> t.y()))
        throw ParseError("line " + std::to_string(line_no) + ": malformed vt");
      uvs.push_back(t);
    } else if (tag == "f") {
      std::vector<ObjCorner> corners;
      std::string token;
      while (ls >> token)
        corners.push_back(parse_corner(token, line_no, positions.size(), uvs.size()));
      if (corners.size() < 3)
        throw ParseError("line " + std::to_string(line_no) + ": face needs >= 3 corners");
      for (std::size_t k = 1; k + 1 < corners.size(); ++k)
        tris.push_back({corners[0], corners[k], corners[k + 1]});
    }
    // other tags (vn, usemtl, o, g, s, mtllib, ...) are ignored
  }
  if (positions.empty()) throw ParseError("'" + path + "' contains no vertices");

  // Seam handling: uv is stored per vertex, so a vertex that appears with
  // two different vt indices is split into copies. The first (v, vt) pair
  // seen keeps the original vertex slot, which preserves vertex order (and
  // count, for seam-free meshes).
  const bool has_uv = std::any_of(tris.begin(), tris.end(), [](const auto& t) {
    return t[0].vt >= 0 || t[1].vt >= 0 || t[2].vt >= 0;
  });

  std::vector<Eigen::Vector3d> out_pos = positions;
  std::vector<Eigen::Vector2d> out_uv;
  if (has_uv) out_uv.assign(positions.size(), Eigen::Vector2d::Zero());
  std::vector<int> claimed_vt(positions.size(), -2);  // -2 = slot unclaimed
  std::map<std::pair<int, int>, int> remap;

  FaceMat faces(static_cast<Eigen::Index>(tris.size()), 3);
  for (std::size_t f = 0; f < tris.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      const ObjCorner c = tris[f][static_cast<std::size_t>(k)];
      int slot;
      if (claimed_vt[static_cast<std::size_t>(c.v)] == -2 ||
          claimed_vt[static_cast<std::size_t>(c.v)] == c.vt) {
        slot = c.v;
        claimed_vt[static_cast<std::size_t>(c.v)] = c.vt;
      } else {
        auto [it, inserted] = remap.try_emplace({c.v, c.vt}, -1);
        if (inserted) {
          it->second = static_cast<int>(out_pos.size());
          out_pos.push_back(positions[static_cast<std::size_t>(c.v)]);
          if (has_uv) out_uv.push_back(Eigen::Vector2d::Zero());
        }
        slot = it->second;
      }
      if (has_uv && c.vt >= 0) out_uv[static_cast<std::size_t>(slot)] = uvs[static_cast<std::size_t>(c.vt)];
      faces(static_cast<Eigen::Index>(f), k) = slot;
    }
  }

  TriangleMesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(out_pos.size()), 3);
  for (std::size_t i = 0; i < out_pos.size(); ++i) mesh.vertices.row(static_cast<Eigen::Index>(i)) = out_pos[i];
  mesh.faces = std::move(faces);
  if (has_uv) {
    MatX uv(static_cast<Eigen::Index>(out_uv.size()), 2);
    for (std::size_t i = 0; i < out_uv.size(); ++i) uv.row(static_cast<Eigen::Index>(i)) = out_uv[i];
    mesh.uv = std::move(uv);
  }
  mesh.source_path = path;
  return mesh;
}

struct PlyProperty {
  std::string name;
  std::string type;       // float, double, uchar, int, ...
  bool is_list = false;
  std::string count_type;
};

std::size_t ply_type_size(const std::string& t) {
  if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
  if (t == "short" || t == "ushort" || t == "int16" || t == "uint16") return 2;
  if (t == "int" || t == "uint" || t == "int32" || t == "uint32" || t == "float" ||
      t == "float32")
    return 4;
  if (t == "double" || t == "float64" || t == "int64" || t == "uint64") return 8;
  throw ParseError("unknown ply type '" + t + "'");
}

double read_binary_scalar(std::istream& in, const std::string& type) {
  unsigned char buf[8];
  const std::size_t sz = ply_type_size(type);
  in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(sz));
  if (!in) throw ParseError("unexpected end of ply payload");
  if (type == "float" || type == "float32") {
    float v;
    std::memcpy(&v, buf, 4);
    return v;
  }
  if (type == "double" || type == "float64") {
    double v;
    std::memcpy(&v, buf, 8);
    return v;
  }
  if (type == "uchar" || type == "uint8") return buf[0];
  if (type == "char" || type == "int8") return static_cast<signed char>(buf[0]);
  if (type == "ushort" || type == "uint16") {
    std::uint16_t v;
    std::memcpy(&v, buf, 2);
    return v;
  }
  if (type == "short" || type == "int16") {
    std::int16_t v;
    std::memcpy(&v, buf, 2);
    return v;
  }
  if (type == "uint" || type == "uint32") {
    std::uint32_t v;
    std::memcpy(&v, buf, 4);
    return v;
  }
  if (type == "int" || type == "int32") {
    std::int32_t v;
    std::memcpy(&v, buf, 4);
    return v;
  }
  throw ParseError("unsupported ply scalar type '" + type + "'");
}

TriangleMesh load_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line) || line.substr(0, 3) != "ply")
    throw ParseError("'" + path + "' is not a ply file");

  bool binary = false;
  struct Element {
    std::string name;
    std::size_t count = 0;
    std::vector<PlyProperty> props;
  };
  std::vector<Element> elements;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "comment") continue;
    if (tag == "format") {
      std::string fmt;
      ls >> fmt;
      if (fmt == "binary_little_endian")
        binary = true;
      else if (fmt != "ascii")
        throw ParseError("unsupported ply format '" + fmt + "'");
    } else if (tag == "element") {
      Element e;
      ls >> e.name >> e.count;
      elements.push_back(e);
    } else if (tag == "property") {
      if (elements.empty()) throw ParseError("ply property before element");
      PlyProperty p;
      std::string t;
      ls >> t;
      if (t == "list") {
        p.is_list = true;
        ls >> p.count_type >> p.type >> p.name;
      } else {
        p.type = t;
        ls >> p.name;
      }
      elements.back().props.push_back(p);
    } else if (tag == "end_header") {
      break;
    } else if (!tag.empty()) {
      throw ParseError("unexpected ply header line '" + line + "'");
    }
  }

  TriangleMesh mesh;
  std::vector<std::array<int, 3>> tri_list;

  for (const auto& elem : elements) {
    if (elem.name == "vertex") {
      int xi = -1, yi = -1, zi = -1;
      for (std::size_t i = 0; i < elem.props.size(); ++i) {
        if (elem.props[i].is_list) throw ParseError("list property on ply vertex");
        if (elem.props[i].name == "x") xi = static_cast<int>(i);
        if (elem.props[i].name == "y") yi = static_cast<int>(i);
        if (elem.props[i].name == "z") zi = static_cast<int>(i);
      }
      if (xi < 0 || yi < 0 || zi < 0) throw ParseError("ply vertex element lacks x/y/z");
      mesh.vertices.resize(static_cast<Eigen::Index>(elem.count), 3);
      for (std::size_t v = 0; v < elem.count; ++v) {
        std::vector<double> row(elem.props.size());
        for (std::size_t p = 0; p < elem.props.size(); ++p) {
          if (binary) {
            row[p] = read_binary_scalar(in, elem.props[p].type);
          } else {
            if (!(in >> row[p])) throw ParseError("truncated ply vertex data");
          }
        }
        mesh.vertices(static_cast<Eigen::Index>(v), 0) = row[static_cast<std::size_t>(xi)];
        mesh.vertices(static_cast<Eigen::Index>(v), 1) = row[static_cast<std::size_t>(yi)];
        mesh.vertices(static_cast<Eigen::Index>(v), 2) = row[static_cast<std::size_t>(zi)];
      }
    } else if (elem.name == "face") {
      if (elem.props.size() != 1 || !elem.props[0].is_list)
        throw ParseError("ply face element must be a single list property");
      const auto& p = elem.props[0];
      for (std::size_t f = 0; f < elem.count; ++f) {
        std::size_t cnt;
        std::vector<long> idx;
        if (binary) {
          cnt = static_cast<std::size_t>(read_binary_scalar(in, p.count_type));
          idx.resize(cnt);
          for (std::size_t k = 0; k < cnt; ++k)
            idx[k] = static_cast<long>(read_binary_scalar(in, p.type));
        } else {
          if (!(in >> cnt)) throw ParseError("truncated ply face data");
          idx.resize(cnt);
          for (std::size_t k = 0; k < cnt; ++k)
            if (!(in >> idx[k])) throw ParseError("truncated ply face data");
        }
        if (cnt < 3) throw ParseError("ply face with fewer than 3 indices");
        for (std::size_t k = 1; k + 1 < cnt; ++k)
          tri_list.push_back({static_cast<int>(idx[0]), static_cast<int>(idx[k]),
                              static_cast<int>(idx[k + 1])});
      }
    } else {
      // Skip unknown elements (ascii only; binary would need full sizes).
      if (binary) throw ParseError("unknown binary ply element '" + elem.name + "'");
      for (std::size_t i = 0; i < elem.count; ++i) std::getline(in, line);
    }
  }

  mesh.faces.resize(static_cast<Eigen::Index>(tri_list.size()), 3);
  for (std::size_t f = 0; f < tri_list.size(); ++f)
    for (int k = 0; k < 3; ++k) mesh.faces(static_cast<Eigen::Index>(f), k) = tri_list[f][static_cast<std::size_t>(k)];
  mesh.source_path = path;
  return mesh;
}

} // namespace

MeshFormat format_from_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == "ply" ? MeshFormat::ply : MeshFormat::obj;
}

TriangleMesh load_mesh(const std::string& path, MeshFormat format) {
  TriangleMesh mesh = format == MeshFormat::obj ? load_obj(path) : load_ply(path);
  mesh.validate();
  return mesh;
}

TriangleMesh load_mesh(const std::string& path) {
  return load_mesh(path, format_from_path(path));
}

void save_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  char buf[128];
  for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", mesh.vertices(v, 0),
                  mesh.vertices(v, 1), mesh.vertices(v, 2));
    out << buf;
  }
  if (mesh.uv) {
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
      std::snprintf(buf, sizeof buf, "vt %.17g %.17g\n", (*mesh.uv)(v, 0), (*mesh.uv)(v, 1));
      out << buf;
    }
    for (Eigen::Index f = 0; f < mesh.face_count(); ++f)
      out << "f " << mesh.faces(f, 0) + 1 << '/' << mesh.faces(f, 0) + 1 << ' '
          << mesh.faces(f, 1) + 1 << '/' << mesh.faces(f, 1) + 1 << ' '
          << mesh.faces(f, 2) + 1 << '/' << mesh.faces(f, 2) + 1 << '\n';
  } else {
    for (Eigen::Index f = 0; f < mesh.face_count(); ++f)
      out << "f " << mesh.faces(f, 0) + 1 << ' ' << mesh.faces(f, 1) + 1 << ' '
          << mesh.faces(f, 2) + 1 << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

void save_ply(const TriangleMesh& mesh, const std::string& path, bool binary,
              const std::optional<MatX>& colors) {
  if (colors && (colors->rows() != mesh.vertex_count() || colors->cols() != 3))
    throw ShapeMismatch("color matrix must be n x 3");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");

  out << "ply\nformat " << (binary ? "binary_little_endian" : "ascii")
      << " 1.0\nelement vertex " << mesh.vertex_count()
      << "\nproperty float x\nproperty float y\nproperty float z\n";
  if (colors)
    out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  out << "element face " << mesh.face_count()
      << "\nproperty list uchar int vertex_indices\nend_header\n";

  auto quantize = [](double c) {
    const double v = std::min(1.0, std::max(0.0, c));
    return static_cast<unsigned char>(v * 255.0 + 0.5);
  };

  if (binary) {
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
      float xyz[3] = {static_cast<float>(mesh.vertices(v, 0)),
                      static_cast<float>(mesh.vertices(v, 1)),
                      static_cast<float>(mesh.vertices(v, 2))};
      out.write(reinterpret_cast<const char*>(xyz), 12);
      if (colors) {
        unsigned char rgb[3] = {quantize((*colors)(v, 0)), quantize((*colors)(v, 1)),
                                quantize((*colors)(v, 2))};
        out.write(reinterpret_cast<const char*>(rgb), 3);
      }
    }
    for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
      const unsigned char cnt = 3;
      out.write(reinterpret_cast<const char*>(&cnt), 1);
      std::int32_t idx[3] = {mesh.faces(f, 0), mesh.faces(f, 1), mesh.faces(f, 2)};
      out.write(reinterpret_cast<const char*>(idx), 12);
    }
  } else {
    char buf[160];
    for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
      std::snprintf(buf, sizeof buf, "%.9g %.9g %.9g", mesh.vertices(v, 0),
                    mesh.vertices(v, 1), mesh.vertices(v, 2));
      out << buf;
      if (colors)
        out << ' ' << static_cast<int>(quantize((*colors)(v, 0))) << ' '
            << static_cast<int>(quantize((*colors)(v, 1))) << ' '
            << static_cast<int>(quantize((*colors)(v, 2)));
      out << '\n';
    }
    for (Eigen::Index f = 0; f < mesh.face_count(); ++f)
      out << "3 " << mesh.faces(f, 0) << ' ' << mesh.faces(f, 1) << ' '
          << mesh.faces(f, 2) << '\n';
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace meshfield
