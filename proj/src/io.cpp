#include "qtensor/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace qtensor {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int vertex_of(const Quiver& q, const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a vertex label");
  const int idx = q.vertex_index(j.get<std::string>());
  if (idx < 0) throw ParseError("unknown vertex '" + j.get<std::string>() + "'");
  return idx;
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
  Quiver q;
  for (const Json& v : field(j, "vertices")) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    q.vertices.push_back(v.get<std::string>());
  }
  for (const Json& a : field(j, "arrows")) {
    Arrow arrow;
    arrow.name = field(a, "name").get<std::string>();
    arrow.source = vertex_of(q, field(a, "source"), "arrow source");
    arrow.target = vertex_of(q, field(a, "target"), "arrow target");
    q.arrows.push_back(std::move(arrow));
  }
  q.validate();
  return q;
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows)
    arrows.push_back({{"name", a.name},
                      {"source", q.vertices[a.source]},
                      {"target", q.vertices[a.target]}});
  return Json{{"vertices", q.vertices}, {"arrows", arrows}};
}

Representation representation_from_json(const Quiver& q, const Json& j) {
  Representation m;
  const Json& dims = field(j, "dims");
  if (!dims.is_array() || static_cast<int>(dims.size()) != q.num_vertices())
    throw ParseError("dims must list one entry per vertex");
  m.dims.resize(q.num_vertices());
  for (int i = 0; i < q.num_vertices(); ++i) {
    if (!dims[i].is_number_integer() || dims[i].get<int>() < 0)
      throw ParseError("dims entries must be nonnegative integers");
    m.dims[i] = dims[i].get<int>();
  }
  const Json& maps = field(j, "maps");
  m.maps.resize(q.num_arrows());
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    const Arrow& a = q.arrows[ai];
    const int rows = m.dims[a.target], cols = m.dims[a.source];
    RatMatrix mat = RatMatrix::Zero(rows, cols);
    if (maps.contains(a.name)) {
      const Json& rowsj = maps.at(a.name);
      if (!rowsj.is_array() || static_cast<int>(rowsj.size()) != rows)
        throw ParseError("map for arrow '" + a.name + "' has the wrong row count");
      for (int r = 0; r < rows; ++r) {
        const Json& rowj = rowsj[r];
        if (!rowj.is_array() || static_cast<int>(rowj.size()) != cols)
          throw ParseError("map for arrow '" + a.name + "' has the wrong column count");
        for (int c = 0; c < cols; ++c) {
          const Json& cell = rowj[c];
          if (cell.is_string())
            mat(r, c) = parse_rational(cell.get<std::string>());
          else if (cell.is_number_integer())
            mat(r, c) = Rational(cell.get<long long>());
          else
            throw ParseError("matrix entries must be rational strings");
        }
      }
    } else if (rows > 0 && cols > 0) {
      throw ParseError("missing map for arrow '" + a.name + "'");
    }
    m.maps[ai] = std::move(mat);
  }
  m.validate(q);
  return m;
}

Json representation_to_json(const Quiver& q, const Representation& m) {
  Json maps = Json::object();
  for (int ai = 0; ai < q.num_arrows(); ++ai) {
    Json rows = Json::array();
    for (int r = 0; r < m.maps[ai].rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.maps[ai].cols(); ++c) row.push_back(format_rational(m.maps[ai](r, c)));
      rows.push_back(std::move(row));
    }
    maps[q.arrows[ai].name] = std::move(rows);
  }
  Json dims = Json::array();
  for (int i = 0; i < m.dims.size(); ++i) dims.push_back(m.dims[i]);
  return Json{{"dims", dims}, {"maps", maps}};
}

Decomposition decomposition_from_json(const RootSystem& rs, const Json& j) {
  Decomposition a = zero_decomposition(rs);
  for (const auto& [key, value] : field(j, "entries").items()) {
    const DimVector v = parse_root_id(key, rs.quiver.num_vertices());
    const int idx = rs.index_of(v);
    if (idx < 0) throw ParseError("'" + key + "' is not a positive root of this quiver");
    Integer mult;
    try {
      mult = Integer(value.is_string() ? value.get<std::string>()
                                       : std::to_string(value.get<long long>()));
    } catch (const std::exception&) {
      throw ParseError("bad multiplicity for root '" + key + "'");
    }
    if (mult < 0) throw ParseError("negative multiplicity for root '" + key + "'");
    a[idx] = mult;
  }
  return a;
}

Json decomposition_to_json(const RootSystem& rs, const Decomposition& a) {
  Json entries = Json::object();
  for (int d = 0; d < rs.root_count(); ++d)
    if (a[d] != 0) entries[root_id(rs.roots[d].vec)] = a[d].str();
  return Json{{"entries", entries}};
}

Decomposition module_from_json(const RootSystem& rs, const Json& j) {
  if (j.is_object() && j.contains("entries")) return decomposition_from_json(rs, j);
  if (j.is_object() && j.contains("dims"))
    return decompose(rs, representation_from_json(rs.quiver, j));
  throw ParseError("module file must contain either 'entries' or 'dims'/'maps'");
}

PartitioningMorphismSpec partition_from_json(const Quiver& q, const Json& j) {
  PartitioningMorphismSpec p;
  p.n_vertices = q.num_vertices();
  p.blocks.resize(p.n_vertices);
  for (const auto& [label, pairs] : field(j, "E").items()) {
    const int k = q.vertex_index(label);
    if (k < 0) throw ParseError("unknown block vertex '" + label + "'");
    if (!pairs.is_array()) throw ParseError("block '" + label + "' must be a list of pairs");
    for (const Json& pr : pairs) {
      if (!pr.is_array() || pr.size() != 2)
        throw ParseError("block '" + label + "' contains a malformed pair");
      p.blocks[k].push_back({vertex_of(q, pr[0], "pair entry"), vertex_of(q, pr[1], "pair entry")});
    }
    std::sort(p.blocks[k].begin(), p.blocks[k].end());
  }
  return p;
}

Json partition_to_json(const Quiver& q, const PartitioningMorphismSpec& p) {
  Json blocks = Json::object();
  for (int k = 0; k < p.n_vertices; ++k) {
    Json pairs = Json::array();
    for (const auto& [i, j2] : p.blocks[k])
      pairs.push_back(Json::array({q.vertices[i], q.vertices[j2]}));
    blocks[q.vertices[k]] = std::move(pairs);
  }
  return Json{{"E", blocks}};
}

Json validation_report_to_json(const Quiver& q, const ValidationReport& rep) {
  auto pair_list = [&](const std::vector<std::pair<int, int>>& pairs) {
    Json out = Json::array();
    for (const auto& [i, j] : pairs) out.push_back(Json::array({q.vertices[i], q.vertices[j]}));
    return out;
  };
  Json bad_blocks = Json::array();
  for (int k : rep.bad_diagonal_blocks) bad_blocks.push_back(q.vertices[k]);
  return Json{{"valid", rep.valid()},
              {"disjoint", rep.disjoint},
              {"covers", rep.covers},
              {"diagonal", rep.diagonal},
              {"duplicated_pairs", pair_list(rep.duplicated_pairs)},
              {"missing_pairs", pair_list(rep.missing_pairs)},
              {"bad_diagonal_blocks", bad_blocks}};
}

std::optional<FusionTable> load_fusion_cache(const std::string& path, const Quiver& q) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  Json j;
  try {
    j = read_json_file(path);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (!j.is_object() || j.value("version", -1) != kFusionCacheVersion) return std::nullopt;
  if (j.value("quiver_hash", std::string()) != quiver_hash(q)) return std::nullopt;
  try {
    RootSystem rs = root_system(q, detect_shape(q));
    FusionTable t;
    const Json& pairs = field(j, "pairs");
    const Json& hom = field(j, "hom");
    if (static_cast<int>(hom.size()) != rs.root_count()) return std::nullopt;
    for (int i = 0; i < rs.root_count(); ++i)
      for (int k = 0; k < rs.root_count(); ++k)
        if (rs.hom(i, k) != hom[i][k].get<int>()) return std::nullopt;
    t.basis = std::move(rs);
    const int r = t.basis.root_count();
    t.pairs.resize(FusionTable::pair_index(r - 1, r - 1) + 1);
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k <= i; ++k) {
        const std::string key = std::to_string(i) + "," + std::to_string(k);
        t.pairs[FusionTable::pair_index(i, k)] =
            decomposition_from_json(t.basis, field(pairs, key.c_str()));
      }
    }
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void save_fusion_cache(const std::string& path, const FusionTable& t) {
  const int r = t.basis.root_count();
  Json hom = Json::array();
  for (int i = 0; i < r; ++i) {
    Json row = Json::array();
    for (int k = 0; k < r; ++k) row.push_back(t.basis.hom(i, k));
    hom.push_back(std::move(row));
  }
  Json pairs = Json::object();
  for (int i = 0; i < r; ++i)
    for (int k = 0; k <= i; ++k)
      pairs[std::to_string(i) + "," + std::to_string(k)] =
          decomposition_to_json(t.basis, t.product(i, k));
  const Json j{{"version", kFusionCacheVersion},
               {"quiver_hash", quiver_hash(t.basis.quiver)},
               {"hom", hom},
               {"pairs", pairs}};
  write_text_file(path, j.dump(2) + "\n");
}

FusionTable cached_fusion_table(const Quiver& q, const std::string& cache_dir, int max_l) {
  if (cache_dir.empty()) return fusion_table(q, max_l);
  std::filesystem::create_directories(cache_dir);
  const std::string path =
      (std::filesystem::path(cache_dir) / ("fusion-" + quiver_hash(q) + ".json")).string();
  if (auto cached = load_fusion_cache(path, q)) return std::move(*cached);
  FusionTable t = fusion_table(q, max_l);
  save_fusion_cache(path, t);
  return t;
}

}  // namespace qtensor
