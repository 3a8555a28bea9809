#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include <fmt/format.h>

#include "tcent/acceptance.hpp"
#include "tcent/jobspec.hpp"
#include "tcent/report.hpp"
#include "tcent/version.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string out;
  std::string format = "json";
  uint64_t seed = 1;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "write the report here instead of stdout");
  cmd->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", opts.seed, "seed for randomized property suites");
  cmd->add_option("--threads", opts.threads, "task-level worker count")
      ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw tcent::ParseError(fmt::format("cannot open '{}'", path));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json parse_json_file(const std::string& path, const char* what) {
  try {
    return ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw tcent::ParseError(fmt::format("{} '{}' is not valid JSON: {}", what, path,
                                        e.what()));
  }
}

int emit(const tcent::ReportDocument& report, const CommonOpts& opts) {
  std::string payload =
      opts.format == "csv" ? tcent::to_csv(report) : report.text() + "\n";
  if (opts.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.out);
    if (!out) {
      std::cerr << "error: cannot write to '" << opts.out << "'\n";
      return 1;
    }
    out << payload;
  }
  return report.exit_code;
}

ordered_json job_skeleton(const std::string& lattice_file, const std::string& regions_file,
                          const CommonOpts& opts) {
  ordered_json job;
  job["schema"] = 1;
  job["lattice"] = parse_json_file(lattice_file, "lattice spec");
  if (!regions_file.empty()) {
    job["regions"] = parse_json_file(regions_file, "regions spec");
  }
  job["tasks"] = ordered_json::array();
  job["seed"] = opts.seed;
  job["threads"] = opts.threads;
  return job;
}

int run_job_json(const ordered_json& doc, const CommonOpts& opts) {
  tcent::JobSpec job = tcent::parse_job(doc);
  tcent::ReportDocument report = tcent::run(job);
  return emit(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entanglement entropies and boundary invariants of toric-code "
               "stabilizer states"};
  app.set_version_flag("--version", tcent::kVersion);
  app.require_subcommand(1);

  // run: execute a full job document.
  std::string job_file;
  CommonOpts run_opts;
  auto* cmd_run = app.add_subcommand("run", "execute a job document");
  cmd_run->add_option("--job", job_file, "job JSON document")->required();
  add_common(cmd_run, run_opts);

  // entropy: one region, both engines.
  std::string lattice_file, regions_file, region_name, method{"both"};
  CommonOpts ent_opts;
  auto* cmd_ent = app.add_subcommand("entropy", "entropy of one named region");
  cmd_ent->add_option("--lattice", lattice_file, "lattice spec JSON")->required();
  cmd_ent->add_option("--regions", regions_file, "regions JSON")->required();
  cmd_ent->add_option("--region", region_name, "region name")->required();
  cmd_ent->add_option("--method", method, "engine")
      ->check(CLI::IsMember({"restricted-rank", "fattal-pairs", "both"}));
  add_common(cmd_ent, ent_opts);

  // invariant: gamma_point / gamma_line / 2d combination.
  std::string inv_lattice, inv_kind, inv_face, inv_params;
  CommonOpts inv_opts;
  auto* cmd_inv = app.add_subcommand("invariant", "boundary invariant");
  cmd_inv->add_option("--lattice", inv_lattice, "lattice spec JSON")->required();
  cmd_inv->add_option("--kind", inv_kind, "point | line | 2d")
      ->required()
      ->check(CLI::IsMember({"point", "line", "2d"}));
  cmd_inv->add_option("--face", inv_face, "physical face (e.g. z_lo)");
  cmd_inv->add_option("--params", inv_params, "partition parameters as JSON");
  add_common(cmd_inv, inv_opts);

  // reduce: restriction-graph reduction of a region.
  std::string red_lattice, red_regions, red_region;
  int red_plane = 0;
  bool red_dump = false;
  CommonOpts red_opts;
  auto* cmd_red = app.add_subcommand("reduce", "graph-reduction entropy of a region");
  cmd_red->add_option("--lattice", red_lattice, "lattice spec JSON")->required();
  cmd_red->add_option("--regions", red_regions, "regions JSON")->required();
  cmd_red->add_option("--region", red_region, "region name")->required();
  cmd_red->add_option("--plane-y", red_plane, "excluded xz-plaquette plane");
  cmd_red->add_flag("--dump", red_dump, "include the vertex/edge incidence lists");
  add_common(cmd_red, red_opts);

  // verify: property suites.
  std::string suite{"all"};
  CommonOpts ver_opts;
  auto* cmd_ver = app.add_subcommand("verify", "randomized verification suites");
  cmd_ver->add_option("--suite", suite, "suite name")
      ->check(CLI::IsMember({"engine-triangle", "dense", "le-ge", "ssa", "all"}));
  add_common(cmd_ver, ver_opts);

  // reproduce: the full acceptance table.
  CommonOpts rep_opts;
  bool quiet = false;
  auto* cmd_rep = app.add_subcommand("reproduce", "run every acceptance target");
  cmd_rep->add_flag("--quiet", quiet, "suppress the per-criterion lines");
  add_common(cmd_rep, rep_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      ordered_json doc;
      try {
        doc = ordered_json::parse(read_file(job_file));
      } catch (const nlohmann::json::parse_error& e) {
        throw tcent::ParseError(
            fmt::format("job '{}' is not valid JSON: {}", job_file, e.what()));
      }
      // Command-line knobs override the document's values when given.
      if (doc.is_object()) {
        if (cmd_run->count("--seed")) doc["seed"] = run_opts.seed;
        if (cmd_run->count("--threads")) doc["threads"] = run_opts.threads;
      }
      return run_job_json(doc, run_opts);
    }
    if (cmd_ent->parsed()) {
      ordered_json job = job_skeleton(lattice_file, regions_file, ent_opts);
      job["tasks"].push_back(ordered_json{
          {"task", "entropy"}, {"region", region_name}, {"method", method}});
      return run_job_json(job, ent_opts);
    }
    if (cmd_inv->parsed()) {
      ordered_json job = job_skeleton(inv_lattice, "", inv_opts);
      ordered_json task{{"task", "invariant"}, {"kind", inv_kind}};
      if (!inv_face.empty()) task["face"] = inv_face;
      if (!inv_params.empty()) {
        try {
          task["params"] = ordered_json::parse(inv_params);
        } catch (const nlohmann::json::parse_error& e) {
          throw tcent::ParseError(fmt::format("--params is not valid JSON: {}", e.what()));
        }
      }
      job["tasks"].push_back(task);
      return run_job_json(job, inv_opts);
    }
    if (cmd_red->parsed()) {
      ordered_json job = job_skeleton(red_lattice, red_regions, red_opts);
      job["tasks"].push_back(ordered_json{{"task", "graph-reduce"},
                                          {"region", red_region},
                                          {"excluded_plane_y", red_plane},
                                          {"dump", red_dump}});
      return run_job_json(job, red_opts);
    }
    if (cmd_ver->parsed()) {
      ordered_json job{{"schema", 1},
                       {"lattice",
                        {{"dimension", 2}, {"extents", {2, 2}}}},
                       {"tasks", {{{"task", "verify-suite"}, {"suite", suite}}}},
                       {"seed", ver_opts.seed},
                       {"threads", ver_opts.threads}};
      return run_job_json(job, ver_opts);
    }
    if (cmd_rep->parsed()) {
      auto results = tcent::accept::run_all(rep_opts.seed);
      bool all_pass = true;
      for (const auto& r : results) {
        if (!quiet) std::cout << tcent::accept::format_line(r) << "\n";
        all_pass = all_pass && r.pass;
      }
      ordered_json doc{{"tool", "tcent"},
                       {"version", tcent::kVersion},
                       {"schema", tcent::kReportSchema},
                       {"results", ordered_json::array()}};
      for (const auto& r : results) {
        doc["results"].push_back(ordered_json{{"index", r.index},
                                              {"name", r.name},
                                              {"pass", r.pass},
                                              {"detail", r.detail}});
      }
      doc["status"] = all_pass ? "ok" : "paper-target-failure";
      tcent::ReportDocument report{doc, all_pass ? 0 : 3};
      if (!rep_opts.out.empty() || rep_opts.format == "csv") {
        int rc = emit(report, rep_opts);
        return rc != 0 ? rc : (all_pass ? 0 : 3);
      }
      if (quiet) std::cout << report.text() << "\n";
      return all_pass ? 0 : 3;
    }
  } catch (const tcent::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const tcent::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
