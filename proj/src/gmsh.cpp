// Copyright the helmholtz-mortar authors.
// SPDX-License-Identifier: Apache-2.0

#include "mortar/gmsh.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mortar
{

namespace
{

class LineReader
{
public:
  explicit LineReader(std::istream &in) : in_(in) {}

  // Next non-empty line; throws at end of input.
  std::string next(const char *expecting)
  {
    std::string line;
    while (std::getline(in_, line))
    {
      line_++;
      if (!line.empty() && line.back() == '\r')
      {
        line.pop_back();
      }
      if (line.find_first_not_of(" \t") != std::string::npos)
      {
        return line;
      }
    }
    throw ParseError(std::string("unexpected end of file, expecting ") + expecting, line_);
  }

  bool eof()
  {
    std::string line;
    auto pos = in_.tellg();
    while (in_.peek() != EOF)
    {
      std::getline(in_, line);
      if (line.find_first_not_of(" \t\r") != std::string::npos)
      {
        in_.clear();
        in_.seekg(pos);
        return false;
      }
      line_++;
      pos = in_.tellg();
    }
    return true;
  }

  int line() const { return line_; }

private:
  std::istream &in_;
  int line_ = 0;
};

std::string trim(const std::string &s)
{
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

VolumeMesh read_gmsh(std::istream &in)
{
  LineReader reader(in);
  if (trim(reader.next("$MeshFormat")) != "$MeshFormat")
  {
    throw ParseError("expected $MeshFormat", reader.line());
  }
  {
    std::istringstream ss(reader.next("format line"));
    std::string version;
    int file_type = -1, data_size = 0;
    if (!(ss >> version >> file_type >> data_size))
    {
      throw ParseError("malformed format line", reader.line());
    }
    if (version.rfind("2.", 0) != 0)
    {
      throw ParseError("unsupported MSH version " + version + " (only 2.2 is supported)",
                       reader.line());
    }
    if (file_type != 0)
    {
      throw ParseError("binary MSH files are not supported", reader.line());
    }
  }
  if (trim(reader.next("$EndMeshFormat")) != "$EndMeshFormat")
  {
    throw ParseError("expected $EndMeshFormat", reader.line());
  }

  VolumeMesh mesh;
  std::map<long, int> node_index;
  std::map<std::array<int, 4>, int> tet_lines;
  bool have_nodes = false, have_elements = false;

  while (!reader.eof())
  {
    const std::string section = trim(reader.next("section"));
    if (section == "$Nodes")
    {
      const int count_line = reader.line();
      long count = -1;
      {
        std::istringstream ss(reader.next("node count"));
        if (!(ss >> count) || count < 0)
        {
          throw ParseError("malformed node count", count_line + 1);
        }
      }
      for (long i = 0; i < count; i++)
      {
        std::istringstream ss(reader.next("node"));
        long id;
        double x, y, z;
        if (!(ss >> id >> x >> y >> z))
        {
          throw ParseError("malformed node record", reader.line());
        }
        if (!node_index.emplace(id, static_cast<int>(mesh.vertices.size())).second)
        {
          throw ParseError("duplicate node id " + std::to_string(id), reader.line());
        }
        mesh.vertices.emplace_back(x, y, z);
      }
      if (trim(reader.next("$EndNodes")) != "$EndNodes")
      {
        throw ParseError("expected $EndNodes", reader.line());
      }
      have_nodes = true;
    }
    else if (section == "$Elements")
    {
      if (!have_nodes)
      {
        throw ParseError("$Elements before $Nodes", reader.line());
      }
      long count = -1;
      {
        std::istringstream ss(reader.next("element count"));
        if (!(ss >> count) || count < 0)
        {
          throw ParseError("malformed element count", reader.line());
        }
      }
      for (long i = 0; i < count; i++)
      {
        std::istringstream ss(reader.next("element"));
        long id;
        int type, ntags;
        if (!(ss >> id >> type >> ntags) || ntags < 0)
        {
          throw ParseError("malformed element record", reader.line());
        }
        std::vector<long> tags(ntags);
        for (auto &t : tags)
        {
          if (!(ss >> t))
          {
            throw ParseError("malformed element tags", reader.line());
          }
        }
        int nnodes;
        if (type == 2)
        {
          nnodes = 3;
        }
        else if (type == 4)
        {
          nnodes = 4;
        }
        else
        {
          throw ParseError("unsupported element type " + std::to_string(type) +
                               " (only triangles and tetrahedra)",
                           reader.line());
        }
        std::array<int, 4> v{};
        for (int j = 0; j < nnodes; j++)
        {
          long nid;
          if (!(ss >> nid))
          {
            throw ParseError("missing element node", reader.line());
          }
          auto it = node_index.find(nid);
          if (it == node_index.end())
          {
            throw ParseError("unknown node id " + std::to_string(nid), reader.line());
          }
          v[j] = it->second;
        }
        if (type != 4)
        {
          continue;
        }
        auto key = v;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
        {
          throw ParseError("degenerate tetrahedron", reader.line());
        }
        if (!tet_lines.emplace(key, reader.line()).second)
        {
          throw ParseError("duplicate element (first defined on line " +
                               std::to_string(tet_lines[key]) + ")",
                           reader.line());
        }
        const Vec3 &a = mesh.vertices[v[0]], &b = mesh.vertices[v[1]],
                   &c = mesh.vertices[v[2]], &d = mesh.vertices[v[3]];
        const double vol = (b - a).dot((c - a).cross(d - a));
        if (vol == 0.0)
        {
          throw ParseError("zero-volume tetrahedron", reader.line());
        }
        if (vol < 0.0)
        {
          std::swap(v[2], v[3]);
        }
        mesh.tets.push_back(v);
        mesh.region.push_back(tags.empty() ? 0 : static_cast<int>(tags[0]));
      }
      if (trim(reader.next("$EndElements")) != "$EndElements")
      {
        throw ParseError("expected $EndElements", reader.line());
      }
      have_elements = true;
    }
    else if (!section.empty() && section[0] == '$')
    {
      // Skip unknown sections ($PhysicalNames, $NodeData, ...).
      const std::string end = "$End" + section.substr(1);
      while (trim(reader.next(end.c_str())) != end)
      {
      }
    }
    else
    {
      throw ParseError("unexpected content '" + section + "'", reader.line());
    }
  }
  if (!have_elements || mesh.tets.empty())
  {
    throw ParseError("no tetrahedra found", reader.line());
  }
  // Drop vertices that only belonged to surface elements.
  std::vector<int> used(mesh.vertices.size(), -1);
  std::vector<Vec3> compact;
  for (auto &t : mesh.tets)
  {
    for (auto &v : t)
    {
      if (used[v] < 0)
      {
        used[v] = static_cast<int>(compact.size());
        compact.push_back(mesh.vertices[v]);
      }
      v = used[v];
    }
  }
  mesh.vertices = std::move(compact);
  check_conforming(mesh);
  return mesh;
}

VolumeMesh load_gmsh(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error("load_gmsh: cannot open " + path);
  }
  return read_gmsh(in);
}

}  // namespace mortar
