// Command line front end: construct symmetry breaking sets, look up the
// point-group tables, identify groups from matrices, and run the built-in
// verification suites. All machine output is JSON on stdout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sbs/json_io.hpp"
#include "sbs/oracles.hpp"
#include "sbs/sbs_engine.hpp"

namespace {

using nlohmann::json;

int exit_code_for(const sbs::Error& e) {
  switch (e.code()) {
    case sbs::errc::unknown_name:
    case sbs::errc::invalid_input:
      return 2;
    case sbs::errc::bad_parameter:
    case sbs::errc::not_symmetry_breaking:
    case sbs::errc::not_partial_breaking:
    case sbs::errc::not_partial_sbs:
    case sbs::errc::not_nested:
    case sbs::errc::not_normal:
    case sbs::errc::hypothesis_unmet:
      return 3;
    case sbs::errc::infinite_normalizer:
    case sbs::errc::symbolic_group:
      return 4;
    case sbs::errc::not_a_point_group:
      return 5;
    default:
      return 1;
  }
}

sbs::Mat3 parse_orientation(const std::string& text) {
  json j = json::parse(text);
  sbs::Mat3 m;
  if (j.is_object() && j.contains("axis") && j.contains("angle")) {
    const auto& ja = j["axis"];
    sbs::Vec3 axis(ja.at(0).get<double>(), ja.at(1).get<double>(), ja.at(2).get<double>());
    m = sbs::rotation_about(axis, j["angle"].get<double>());
  } else {
    m = sbs::mat3_from_json(j);
  }
  if (!sbs::is_o3_element(m, 1e-6))
    sbs::fail(sbs::errc::invalid_input, "orientation must be orthogonal with det +-1");
  return m;
}

struct GroupArgs {
  std::string name;
  int n = 0;
  std::string orientation;

  sbs::PointGroup build() const {
    sbs::PgName pg = sbs::parse_pg_name(name);
    sbs::Mat3 g = orientation.empty() ? sbs::Mat3::Identity() : parse_orientation(orientation);
    if (sbs::is_finite_name(pg)) return sbs::oriented_point_group(g, pg, n);
    return sbs::symbolic_point_group(g, pg);
  }
};

void print_reports(const std::vector<sbs::OracleReport>& reports, bool pretty) {
  if (pretty) {
    int failed = 0;
    for (const auto& r : reports) {
      if (!r.pass) ++failed;
      std::cout << (r.pass ? "[ ok ] " : "[FAIL] ") << r.claim << " — " << r.instance
                << " (expected " << r.expected << ", observed " << r.observed << ")\n";
    }
    std::cout << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return;
  }
  json out = json::array();
  for (const auto& r : reports) {
    json jr;
    jr["claim"] = r.claim;
    jr["instance"] = r.instance;
    jr["expected"] = r.expected;
    jr["observed"] = r.observed;
    jr["pass"] = r.pass;
    jr["elapsed_seconds"] = r.elapsed_seconds;
    out.push_back(std::move(jr));
  }
  std::cout << out.dump(2) << "\n";
}

json sbspec_json(const sbs::SBSpec& b) {
  json j;
  j["object"] = sbs::to_json(b.object);
  j["orbit_group"] = sbs::to_json(b.orbit_group);
  j["kind"] = b.kind == sbs::SbsKind::full ? "full" : "partial";
  if (!b.extra_seeds.empty()) {
    json seeds = json::array();
    for (const auto& s : b.extra_seeds) seeds.push_back(sbs::to_json(s));
    j["extra_seeds"] = std::move(seeds);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant symmetry breaking sets for the point groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "json";
  app.add_option("--output", output, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  uint64_t seed = 0;
  app.add_option("--seed", seed, "random seed");
  double tol = 1e-8;
  app.add_option("--tol", tol, "numeric tolerance");
  int max_order = 1024;
  app.add_option("--max-order", max_order, "largest materialized group order");

  GroupArgs sargs, kargs;
  std::string object_text;
  int count = 0;

  auto add_group_flags = [&](CLI::App* cmd, bool with_k) {
    cmd->add_option("--group", sargs.name, "Schoenflies family token")->required();
    cmd->add_option("--n", sargs.n, "axial order parameter");
    cmd->add_option("--orientation", sargs.orientation,
                    "9 floats (row-major) or {\"axis\":[..],\"angle\":t} as JSON");
    if (with_k) {
      cmd->add_option("--K", kargs.name, "shared-symmetry family token");
      cmd->add_option("--K-n", kargs.n, "axial order of K");
      cmd->add_option("--K-orientation", kargs.orientation, "orientation of K");
    }
  };

  auto* cmd_full = app.add_subcommand("full", "equivariant full symmetry breaking set");
  add_group_flags(cmd_full, false);
  cmd_full->add_option("--object", object_text, "breaking object as JSON (canonical frame)");
  cmd_full->add_option("--count", count, "cap on listed set elements");

  auto* cmd_partial = app.add_subcommand("partial", "equivariant partial symmetry breaking set");
  add_group_flags(cmd_partial, true);
  cmd_partial->add_option("--object", object_text, "breaking object as JSON (canonical frame)");
  cmd_partial->add_option("--count", count, "cap on listed set elements");

  auto* cmd_ideal = app.add_subcommand("ideal", "existence of an ideal (partial) set");
  add_group_flags(cmd_ideal, true);

  auto* cmd_sample = app.add_subcommand("sample", "sample objects from a set");
  add_group_flags(cmd_sample, true);
  cmd_sample->add_option("--object", object_text, "breaking object as JSON (canonical frame)");
  cmd_sample->add_option("--count", count, "number of samples")->required();

  std::string suite;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("suite", suite, "wreath, theorems or tables")
      ->required()
      ->check(CLI::IsMember({"wreath", "theorems", "tables"}));

  std::string matrices_path;
  auto* cmd_identify = app.add_subcommand("identify", "name a group given its matrices");
  cmd_identify->add_option("matrices", matrices_path, "JSON file: array of 9-float matrices")
      ->required();

  auto* cmd_tables = app.add_subcommand("tables", "point group table data");
  auto* cmd_tables_dump = cmd_tables->add_subcommand("dump", "dump the tables as JSON");

  CLI11_PARSE(app, argc, argv);
  const bool pretty = output == "pretty";

  try {
    if (*cmd_full || *cmd_partial || *cmd_sample) {
      std::optional<sbs::IrrepObject> obj;
      if (!object_text.empty()) obj = sbs::irrep_object_from_json(json::parse(object_text));
      sbs::PointGroup s = sargs.build();
      sbs::SBSpec spec;
      json extra;
      if (*cmd_partial || (*cmd_sample && !kargs.name.empty())) {
        sbs::PointGroup k = kargs.build();
        spec = sbs::partial_sbs(s, k, obj);
        extra["generalized_normalizer"] = sbs::to_json(sbs::generalized_normalizer_group(s, k));
      } else {
        spec = sbs::full_sbs(s, obj);
      }
      json out;
      out["sbs"] = sbspec_json(spec);
      for (auto& [key, val] : extra.items()) out[key] = val;
      if (*cmd_sample) {
        json set = json::array();
        for (const auto& o : sbs::enumerate_or_sample(spec, count, seed))
          set.push_back(sbs::to_json(o));
        out["samples"] = std::move(set);
      } else if (spec.orbit_group.finite()) {
        std::vector<sbs::IrrepObject> set = sbs::materialize(spec);
        json jset = json::array();
        int limit = count > 0 ? count : static_cast<int>(set.size());
        for (int i = 0; i < static_cast<int>(set.size()) && i < limit; ++i)
          jset.push_back(sbs::to_json(set[i]));
        out["set"] = std::move(jset);
        out["set_size"] = set.size();
      } else {
        out["set"] = nullptr;  // symbolic orbit group: sample instead
      }
      std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
      return 0;
    }

    if (*cmd_ideal) {
      sbs::PointGroup s = sargs.build();
      json out;
      if (kargs.name.empty()) {
        auto comp = sbs::complement_in_normalizer(sbs::parse_pg_name(sargs.name), sargs.n);
        out["exists"] = comp.has_value();
        if (comp) {
          sbs::PointGroup h = comp->second;
          if (h.finite())
            h = sbs::oriented_point_group(s.orientation * h.orientation, h.name, h.n);
          else
            h = sbs::symbolic_point_group(s.orientation * h.orientation, h.name);
          out["H"] = sbs::to_json(h);
          out["generator_words"] = comp->first;
          out["degeneracy_bound"] = 1;
        } else {
          out["degeneracy_bound"] = "infinite";
        }
      } else {
        sbs::PointGroup k = kargs.build();
        auto hk = sbs::ideal_partial_object_symmetry(s, k);
        out["exists"] = hk.has_value();
        if (hk) {
          out["H"] = sbs::to_json(hk->first);
          out["K"] = sbs::to_json(hk->second);
          out["degeneracy_bound"] = 1;
        } else {
          out["degeneracy_bound"] = nullptr;
        }
      }
      std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      std::vector<sbs::OracleReport> reports;
      if (suite == "wreath") reports = sbs::wreath_counterexample();
      else if (suite == "theorems") reports = sbs::theorem_corpus_verification();
      else reports = sbs::tables_verification();
      print_reports(reports, pretty);
      for (const auto& r : reports)
        if (!r.pass) return 1;
      return 0;
    }

    if (*cmd_identify) {
      std::ifstream in(matrices_path);
      if (!in) sbs::fail(sbs::errc::invalid_input, "cannot open " + matrices_path);
      json j = json::parse(in);
      std::vector<sbs::Mat3> mats;
      for (const auto& jm : j) mats.push_back(sbs::mat3_from_json(jm));
      sbs::MatrixGroup g = sbs::MatrixGroup::from_elements(std::move(mats));
      sbs::PointGroup p = sbs::identify_point_group(g, std::max(tol, 1e-6));
      json out = sbs::to_json(p);
      out["order"] = g.order();
      std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
      return 0;
    }

    if (*cmd_tables_dump) {
      std::cout << sbs::tables_json_dump() << "\n";
      return 0;
    }
    std::cerr << "tables: specify a subcommand (dump)\n";
    return 2;
  } catch (const sbs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
