#include "tcent/jobspec.hpp"

#include <set>

#include <fmt/format.h>

namespace tcent {

using nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const ordered_json& j, const std::set<std::string>& known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) {
      throw ValidationError(fmt::format("unknown key '{}' in {}", it.key(), where));
    }
  }
}

int require_int(const ordered_json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ValidationError(fmt::format("{} requires integer field '{}'", where, key));
  }
  return j[key].get<int>();
}

std::string require_string(const ordered_json& j, const std::string& key,
                           const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ValidationError(fmt::format("{} requires string field '{}'", where, key));
  }
  return j[key].get<std::string>();
}

Boundary parse_boundary_word(const std::string& s, const std::string& where) {
  if (s == "periodic") return Boundary::Periodic;
  if (s == "smooth") return Boundary::Smooth;
  if (s == "rough") return Boundary::Rough;
  throw ValidationError(fmt::format("{}: unknown boundary '{}'", where, s));
}

Face parse_face(const std::string& s, const std::string& where) {
  auto f = face_from_name(s);
  if (!f) throw ValidationError(fmt::format("{}: unknown face '{}'", where, s));
  return *f;
}

std::vector<EdgeCoord> parse_edge_list(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(fmt::format("{} must be a nonempty list of [x,y,z,axis]", where));
  }
  std::vector<EdgeCoord> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) {
      throw ValidationError(fmt::format("{}: each edge is [x,y,z,axis]", where));
    }
    EdgeCoord ec;
    for (int i = 0; i < 3; ++i) ec.v[i] = e[i].get<int>();
    std::string axis = e[3].is_string() ? e[3].get<std::string>()
                                        : std::string(1, "xyz"[e[3].get<int>()]);
    if (axis == "x") {
      ec.axis = 0;
    } else if (axis == "y") {
      ec.axis = 1;
    } else if (axis == "z") {
      ec.axis = 2;
    } else {
      throw ValidationError(fmt::format("{}: axis must be x, y or z", where));
    }
    edges.push_back(ec);
  }
  return edges;
}

}  // namespace

LatticeSpec parse_lattice_spec(const ordered_json& j) {
  if (!j.is_object()) throw ValidationError("'lattice' must be an object");
  reject_unknown_keys(j, {"dimension", "extents", "boundary"}, "lattice");
  LatticeSpec spec;
  spec.dimension = require_int(j, "dimension", "lattice");
  if (!j.contains("extents") || !j["extents"].is_array()) {
    throw ValidationError("lattice requires an 'extents' array");
  }
  auto ext = j["extents"];
  if (static_cast<int>(ext.size()) != spec.dimension) {
    throw ValidationError("'extents' length must match the dimension");
  }
  for (int a = 0; a < spec.dimension; ++a) spec.extents[a] = ext[a].get<int>();
  if (spec.dimension == 2) spec.extents[2] = 1;

  if (j.contains("boundary")) {
    const auto& b = j["boundary"];
    if (!b.is_object()) throw ValidationError("'boundary' must be an object");
    reject_unknown_keys(b, {"x", "y", "z"}, "boundary");
    const char* axes = "xyz";
    for (int a = 0; a < spec.dimension; ++a) {
      std::string key(1, axes[a]);
      if (!b.contains(key)) continue;
      const auto& v = b[key];
      if (v.is_string()) {
        Boundary kind = parse_boundary_word(v.get<std::string>(), "boundary." + key);
        spec.boundary[a] = {kind, kind};
      } else if (v.is_array() && v.size() == 2) {
        spec.boundary[a] = {
            parse_boundary_word(v[0].get<std::string>(), "boundary." + key),
            parse_boundary_word(v[1].get<std::string>(), "boundary." + key)};
      } else {
        throw ValidationError(
            fmt::format("boundary.{} must be a word or a [lo, hi] pair", key));
      }
    }
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(fmt::format("lattice: {}", e.what()));
  }
  return spec;
}

namespace {

Task parse_task(const ordered_json& j, std::size_t index) {
  std::string where = fmt::format("tasks[{}]", index);
  if (!j.is_object()) throw ValidationError(where + " must be an object");
  std::string name = require_string(j, "task", where);
  where += " (" + name + ")";

  if (name == "entropy") {
    reject_unknown_keys(j, {"task", "region", "method", "predict"}, where);
    EntropyTask t;
    t.region = require_string(j, "region", where);
    if (j.contains("method")) t.method = j["method"].get<std::string>();
    if (t.method != "both" && t.method != "restricted-rank" &&
        t.method != "fattal-pairs") {
      throw ValidationError(where + ": method must be restricted-rank, fattal-pairs "
                                    "or both");
    }
    if (j.contains("predict")) t.predict = j["predict"].get<bool>();
    return t;
  }
  if (name == "invariant") {
    reject_unknown_keys(j, {"task", "kind", "face", "params"}, where);
    InvariantTask t;
    t.kind = require_string(j, "kind", where);
    if (t.kind != "point" && t.kind != "line" && t.kind != "2d") {
      throw ValidationError(where + ": kind must be point, line or 2d");
    }
    if (j.contains("face")) t.face = parse_face(j["face"].get<std::string>(), where);
    if (t.kind != "2d" && !t.face) {
      throw ValidationError(where + ": point/line invariants require a face");
    }
    if (j.contains("params")) t.params = j["params"];
    return t;
  }
  if (name == "graph-reduce") {
    reject_unknown_keys(j, {"task", "region", "excluded_plane_y", "order_seed", "dump"},
                        where);
    GraphReduceTask t;
    t.region = require_string(j, "region", where);
    t.excluded_plane_y = require_int(j, "excluded_plane_y", where);
    if (j.contains("order_seed")) t.order_seed = j["order_seed"].get<uint64_t>();
    if (j.contains("dump")) t.dump = j["dump"].get<bool>();
    return t;
  }
  if (name == "excitation-check") {
    reject_unknown_keys(
        j, {"task", "check", "face", "kind", "edges", "edges_def", "membrane_box"},
        where);
    ExcitationTask t;
    t.check = require_string(j, "check", where);
    if (t.check == "condensation") {
      t.face = parse_face(require_string(j, "face", where), where);
      t.kind = require_string(j, "kind", where);
      if (t.kind != "point" && t.kind != "line") {
        throw ValidationError(where + ": condensation kind must be point or line");
      }
      return t;
    }
    if (t.check == "syndrome" || t.check == "deformable" || t.check == "monodromy") {
      t.kind = j.contains("kind") ? j["kind"].get<std::string>() : "z-string";
      if (t.kind != "z-string" && t.kind != "x-membrane") {
        throw ValidationError(where + ": kind must be z-string or x-membrane");
      }
      t.edges = parse_edge_list(j.at("edges"), where + ".edges");
      if (t.check == "deformable") {
        t.edges_def = parse_edge_list(j.at("edges_def"), where + ".edges_def");
      }
      if (t.check == "monodromy") {
        if (!j.contains("membrane_box") || !j["membrane_box"].is_array() ||
            j["membrane_box"].size() != 2) {
          throw ValidationError(where + ": monodromy requires membrane_box [lo, hi]");
        }
        std::array<std::array<int, 3>, 2> box{};
        for (int s = 0; s < 2; ++s) {
          for (int i = 0; i < 3; ++i) box[s][i] = j["membrane_box"][s][i].get<int>();
        }
        t.membrane_box = box;
      }
      return t;
    }
    throw ValidationError(where + ": check must be condensation, syndrome, deformable "
                                  "or monodromy");
  }
  if (name == "verify-suite") {
    reject_unknown_keys(j, {"task", "suite"}, where);
    VerifySuiteTask t;
    t.suite = require_string(j, "suite", where);
    static const std::set<std::string> suites{"engine-triangle", "dense", "le-ge",
                                              "ssa", "all"};
    if (!suites.count(t.suite)) {
      throw ValidationError(where + ": unknown suite '" + t.suite + "'");
    }
    return t;
  }
  if (name == "reproduce-paper") {
    reject_unknown_keys(j, {"task"}, where);
    return ReproduceTask{};
  }
  throw ValidationError(where + ": unknown task '" + name + "'");
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("job document is not valid JSON: {}", e.what()));
  }
  return parse_job(doc);
}

JobSpec parse_job(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("job document must be a JSON object");
  reject_unknown_keys(doc, {"schema", "lattice", "regions", "tasks", "seed", "threads"},
                      "job");
  JobSpec job;
  if (doc.contains("schema")) {
    if (!doc["schema"].is_number_integer()) throw ParseError("'schema' must be an integer");
    job.schema = doc["schema"].get<int>();
    if (job.schema != 1) {
      throw ValidationError(fmt::format("unsupported schema version {}", job.schema));
    }
  }
  if (!doc.contains("lattice")) throw ValidationError("job requires a 'lattice'");
  job.lattice = parse_lattice_spec(doc["lattice"]);

  if (doc.contains("regions")) {
    if (!doc["regions"].is_object()) throw ValidationError("'regions' must be an object");
    for (auto it = doc["regions"].begin(); it != doc["regions"].end(); ++it) {
      job.region_defs.emplace_back(it.key(), it.value());
    }
  }
  if (doc.contains("tasks")) {
    if (!doc["tasks"].is_array()) throw ValidationError("'tasks' must be an array");
    std::size_t i = 0;
    for (const auto& t : doc["tasks"]) job.tasks.push_back(parse_task(t, i++));
  }
  if (doc.contains("seed")) job.seed = doc["seed"].get<uint64_t>();
  if (doc.contains("threads")) {
    job.threads = doc["threads"].get<int>();
    if (job.threads < 1) throw ValidationError("'threads' must be >= 1");
  }
  job.echo = doc;

  // Region names referenced by tasks must exist.
  std::set<std::string> names;
  for (const auto& [name, def] : job.region_defs) names.insert(name);
  for (const auto& t : job.tasks) {
    const std::string* region = nullptr;
    if (const auto* e = std::get_if<EntropyTask>(&t)) region = &e->region;
    if (const auto* g = std::get_if<GraphReduceTask>(&t)) region = &g->region;
    if (region && !names.count(*region)) {
      throw ValidationError(fmt::format("task references undefined region '{}'", *region));
    }
  }
  return job;
}

PointPartitionParams parse_point_params(const ordered_json& p, Face face) {
  PointPartitionParams prm;
  prm.face = face;
  if (p.is_null()) return prm;
  for (auto it = p.begin(); it != p.end(); ++it) {
    const std::string& k = it.key();
    if (k == "slab") {
      prm.slab = it->get<int>();
    } else if (k == "bridge") {
      prm.bridge = it->get<int>();
    } else if (k == "width") {
      prm.width = it->get<int>();
    } else if (k == "height") {
      prm.height = it->get<int>();
    } else if (k == "wrap") {
      prm.wrap = it->get<int>();
    } else if (k == "origin") {
      prm.origin = {(*it)[0].get<int>(), (*it)[1].get<int>()};
    } else {
      throw ValidationError("unknown point-partition parameter '" + k + "'");
    }
  }
  return prm;
}

LinePartitionParams parse_line_params(const ordered_json& p, Face face) {
  LinePartitionParams prm;
  prm.face = face;
  if (p.is_null()) return prm;
  for (auto it = p.begin(); it != p.end(); ++it) {
    const std::string& k = it.key();
    if (k == "core") {
      prm.core = it->get<int>();
    } else if (k == "ring") {
      prm.ring = it->get<int>();
    } else if (k == "ring_height") {
      prm.ring_height = it->get<int>();
    } else if (k == "column") {
      prm.column = it->get<int>();
    } else if (k == "hood") {
      prm.hood = it->get<int>();
    } else if (k == "origin") {
      prm.origin = {(*it)[0].get<int>(), (*it)[1].get<int>()};
    } else {
      throw ValidationError("unknown line-partition parameter '" + k + "'");
    }
  }
  return prm;
}

TwoDPartitionParams parse_2d_params(const ordered_json& p) {
  TwoDPartitionParams prm;
  if (p.is_null()) return prm;
  for (auto it = p.begin(); it != p.end(); ++it) {
    const std::string& k = it.key();
    if (k == "outer") {
      prm.outer = it->get<int>();
    } else if (k == "hole") {
      prm.hole = it->get<int>();
    } else {
      throw ValidationError("unknown 2d-partition parameter '" + k + "'");
    }
  }
  return prm;
}

namespace {

PartitionABCD build_partition(const CodeLattice& lattice, const ordered_json& arg,
                              const std::string& where) {
  reject_unknown_keys(arg, {"kind", "face", "params", "part"}, where);
  std::string kind = require_string(arg, "kind", where);
  ordered_json params = arg.contains("params") ? arg["params"] : ordered_json{};
  try {
    if (kind == "point") {
      Face face = parse_face(require_string(arg, "face", where), where);
      return partition_point(lattice, parse_point_params(params, face));
    }
    if (kind == "line") {
      Face face = parse_face(require_string(arg, "face", where), where);
      return partition_line(lattice, parse_line_params(params, face));
    }
    if (kind == "2d") {
      return partition_2d(lattice, parse_2d_params(params));
    }
  } catch (const std::invalid_argument& e) {
    throw ValidationError(fmt::format("{}: {}", where, e.what()));
  }
  throw ValidationError(where + ": partition kind must be point, line or 2d");
}

}  // namespace

std::vector<std::pair<std::string, Region>> build_regions(
    const CodeLattice& lattice,
    const std::vector<std::pair<std::string, ordered_json>>& defs) {
  std::vector<std::pair<std::string, Region>> out;
  auto lookup = [&](const std::string& name, const std::string& where) -> const Region& {
    for (const auto& [n, r] : out) {
      if (n == name) return r;
    }
    throw ValidationError(
        fmt::format("{} references region '{}' before its definition", where, name));
  };

  for (const auto& [name, def] : defs) {
    std::string where = "region '" + name + "'";
    if (!def.is_object() || def.size() != 1) {
      throw ValidationError(where + " must be an object with exactly one operation");
    }
    const std::string op = def.begin().key();
    const ordered_json& arg = def.begin().value();
    Region r;
    if (op == "box") {
      if (!arg.is_array() || static_cast<int>(arg.size()) != lattice.spec().dimension) {
        throw ValidationError(where + ": 'box' needs one [lo, hi] pair per axis");
      }
      Box box;
      for (int a = 0; a < lattice.spec().dimension; ++a) {
        if (!arg[a].is_array() || arg[a].size() != 2) {
          throw ValidationError(where + ": each box axis is [lo, hi]");
        }
        box.lo[a] = arg[a][0].get<double>();
        box.hi[a] = arg[a][1].get<double>();
      }
      r = box_region(lattice, box);
    } else if (op == "union" || op == "intersection") {
      if (!arg.is_array() || arg.empty()) {
        throw ValidationError(where + ": '" + op + "' needs a list of region names");
      }
      r = lookup(arg[0].get<std::string>(), where);
      for (std::size_t i = 1; i < arg.size(); ++i) {
        const Region& o = lookup(arg[i].get<std::string>(), where);
        r = op == "union" ? (r | o) : (r & o);
      }
    } else if (op == "difference") {
      if (!arg.is_array() || arg.size() != 2) {
        throw ValidationError(where + ": 'difference' needs [a, b]");
      }
      r = lookup(arg[0].get<std::string>(), where) -
          lookup(arg[1].get<std::string>(), where);
    } else if (op == "complement") {
      r = lookup(arg.get<std::string>(), where).complement();
    } else if (op == "qubits") {
      if (!arg.is_array()) throw ValidationError(where + ": 'qubits' needs an id list");
      std::vector<uint32_t> qs;
      for (const auto& q : arg) qs.push_back(q.get<uint32_t>());
      try {
        r = Region::from_qubits(lattice.n_qubits(), qs, name);
      } catch (const std::out_of_range& e) {
        throw ValidationError(where + ": " + e.what());
      }
    } else if (op == "partition") {
      PartitionABCD p = build_partition(lattice, arg, where);
      std::string part = require_string(arg, "part", where);
      if (part == "a") {
        r = p.a;
      } else if (part == "b") {
        r = p.b;
      } else if (part == "c") {
        r = p.c;
      } else if (part == "d") {
        r = p.d;
      } else {
        throw ValidationError(where + ": part must be a, b, c or d");
      }
    } else {
      throw ValidationError(where + ": unknown operation '" + op + "'");
    }
    r.set_provenance(name);
    out.emplace_back(name, std::move(r));
  }
  return out;
}

}  // namespace tcent
