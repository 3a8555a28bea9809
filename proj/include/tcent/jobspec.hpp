#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tcent/lattice.hpp"
#include "tcent/region.hpp"

namespace tcent {

/// Input document did not parse (malformed JSON, wrong value types). Exit 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Document parsed but failed semantic validation (unknown keys, undefined
/// region names, inconsistent lattice specs). Exit 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EntropyTask {
  std::string region;
  std::string method = "both";  // restricted-rank | fattal-pairs | both
  bool predict = true;
};

struct InvariantTask {
  std::string kind;  // point | line | 2d
  std::optional<Face> face;
  nlohmann::ordered_json params;  // validated against the partition structs
};

struct GraphReduceTask {
  std::string region;
  int excluded_plane_y = 0;
  std::optional<uint64_t> order_seed;
  bool dump = false;  // include the vertex/edge incidence lists
};

struct ExcitationTask {
  std::string check;  // condensation | syndrome | deformable | monodromy
  std::optional<Face> face;
  std::string kind;  // point | line (condensation); z-string | x-membrane
  std::vector<EdgeCoord> edges, edges_def;
  std::optional<std::array<std::array<int, 3>, 2>> membrane_box;  // lo, hi
};

struct VerifySuiteTask {
  std::string suite;  // engine-triangle | dense | le-ge | ssa | all
};

struct ReproduceTask {};

using Task =
    std::variant<EntropyTask, InvariantTask, GraphReduceTask, ExcitationTask,
                 VerifySuiteTask, ReproduceTask>;

struct JobSpec {
  int schema = 1;
  LatticeSpec lattice;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> region_defs;
  std::vector<Task> tasks;
  uint64_t seed = 1;
  int threads = 1;
  nlohmann::ordered_json echo;  // the validated input document
};

/// Parses and validates a job document. Unknown keys are rejected.
JobSpec parse_job(const std::string& text);
JobSpec parse_job(const nlohmann::ordered_json& doc);

/// Builds the named regions against a lattice; later entries may reference
/// earlier ones.
std::vector<std::pair<std::string, Region>> build_regions(
    const CodeLattice& lattice,
    const std::vector<std::pair<std::string, nlohmann::ordered_json>>& defs);

LatticeSpec parse_lattice_spec(const nlohmann::ordered_json& j);

PointPartitionParams parse_point_params(const nlohmann::ordered_json& j, Face face);
LinePartitionParams parse_line_params(const nlohmann::ordered_json& j, Face face);
TwoDPartitionParams parse_2d_params(const nlohmann::ordered_json& j);

}  // namespace tcent
