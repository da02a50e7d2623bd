#include "qtensor/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qtensor {

int Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == label) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> labels(vertices.begin(), vertices.end());
  if (static_cast<int>(labels.size()) != num_vertices())
    throw ParseError("duplicate vertex labels");
  std::set<std::string> names;
  for (const Arrow& a : arrows) {
    if (!names.insert(a.name).second) throw ParseError("duplicate arrow name '" + a.name + "'");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
      throw ParseError("arrow '" + a.name + "' has an endpoint outside the vertex set");
  }
  if (num_vertices() == 0) throw ParseError("quiver has no vertices");
}

std::string quiver_hash(const Quiver& q) {
  std::ostringstream canon;
  for (const auto& v : q.vertices) canon << 'v' << v.size() << ':' << v << ';';
  for (const auto& a : q.arrows)
    canon << 'a' << a.name.size() << ':' << a.name << ':' << a.source << ">" << a.target << ';';
  // FNV-1a, 64 bit
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex;
  for (int i = 15; i >= 0; --i) hex << "0123456789abcdef"[(h >> (4 * i)) & 0xf];
  return hex.str();
}

bool lex_less(const DimVector& a, const DimVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

static void check_same_size(const DimVector& a, const DimVector& b, const char* op) {
  if (a.size() != b.size())
    throw DimensionMismatchError(std::string(op) + ": vectors live on different quivers");
}

DimVector pointwise_product(const DimVector& a, const DimVector& b) {
  check_same_size(a, b, "pointwise_product");
  return a.cwiseProduct(b);
}

bool dominates(const DimVector& a, const DimVector& b) {
  check_same_size(a, b, "dominates");
  return (a.array() >= b.array()).all();
}

int m_value(const DimVector& d) {
  int m = 0;
  for (int x : d)
    if (x > 0 && (m == 0 || x < m)) m = x;
  if (m == 0) throw InvalidArgumentError("m_value: zero vector");
  return m;
}

int vector_length(const DimVector& d) { return d.sum(); }

std::vector<int> support(const DimVector& d) {
  std::vector<int> s;
  for (int i = 0; i < d.size(); ++i)
    if (d[i] != 0) s.push_back(i);
  return s;
}

std::string root_id(const DimVector& d) {
  std::ostringstream os;
  for (int i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  return os.str();
}

DimVector parse_root_id(const std::string& id, int expected_size) {
  std::vector<int> entries;
  std::istringstream is(id);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(part, &pos);
      if (pos != part.size() || v < 0) throw std::invalid_argument(part);
      entries.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad root id entry '" + part + "' in '" + id + "'");
    }
  }
  if (static_cast<int>(entries.size()) != expected_size)
    throw ParseError("root id '" + id + "' has wrong length");
  return Eigen::Map<DimVector>(entries.data(), static_cast<int>(entries.size()));
}

}  // namespace qtensor
