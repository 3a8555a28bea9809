#pragma once

#include <json.hpp>

#include "tcent/jobspec.hpp"

namespace tcent {

/// Executed job: a deterministic results payload (identical input documents
/// produce byte-identical `results`), wall-clock timing kept separate, and
/// the exit status the CLI should adopt.
struct ReportDocument {
  nlohmann::ordered_json json;  // full document: tool, version, input, results, ...
  int exit_code = 0;            // 0 ok, 3 when a paper target failed

  std::string results_text() const { return json.at("results").dump(2); }
  std::string text() const { return json.dump(2); }
};

ReportDocument run(const JobSpec& job);

/// Flat CSV view of the tabular results (entropy, invariant, graph-reduce
/// rows); other task kinds are summarised by a status column.
std::string to_csv(const ReportDocument& report);

}  // namespace tcent
