#include "g2/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "g2/cache_io.hpp"
#include "g2/errors.hpp"

namespace g2 {

namespace {

std::string grouped(const Rational& r) { return r.is_integer() ? group_digits(r.numerator()) : r.to_string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

nlohmann::ordered_json to_json(const Genus2Report& r, bool show_intermediates) {
  nlohmann::ordered_json j;
  j["ambient"] = r.profile.ambient == 2 ? "p2" : "p3";
  j["degree"] = std::to_string(r.profile.degree);
  j["constraints"] = {{"points", std::to_string(r.profile.points)}, {"lines", std::to_string(r.profile.lines)}};
  j["rt"] = r.rt.to_string();
  j["cr"] = r.cr.to_string();
  j["n2"] = r.n2.to_string();
  j["intermediates"] = nlohmann::ordered_json::object();
  if (show_intermediates) {
    for (const auto& [name, value] : r.intermediates) j["intermediates"][name] = value.to_string();
  }
  return j;
}

}  // namespace

void render(const std::vector<Genus2Report>& reports, int ambient, OutputFormat format, bool show_intermediates,
            bool single, std::ostream& out) {
  const bool p3 = ambient == 3;
  switch (format) {
    case OutputFormat::Json: {
      if (single && reports.size() == 1) {
        out << to_json(reports.front(), show_intermediates).dump(2) << '\n';
      } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, show_intermediates));
        out << arr.dump(2) << '\n';
      }
      return;
    }
    case OutputFormat::Csv: {
      out << "ambient,degree,points,lines,rt,cr,n2";
      if (show_intermediates && !reports.empty()) {
        for (const auto& [name, value] : reports.front().intermediates) out << ',' << csv_field(name);
      }
      out << '\n';
      for (const auto& r : reports) {
        out << (p3 ? "p3" : "p2") << ',' << r.profile.degree << ',' << r.profile.points << ',' << r.profile.lines
            << ',' << r.rt << ',' << r.cr << ',' << r.n2;
        if (show_intermediates) {
          for (const auto& [name, value] : r.intermediates) out << ',' << value;
        }
        out << '\n';
      }
      return;
    }
    case OutputFormat::Table: {
      out << (p3 ? "| d | p | q | RT | CR | n2 |\n|---:|---:|---:|---:|---:|---:|\n"
                 : "| d | RT | CR | n2 |\n|---:|---:|---:|---:|\n");
      for (const auto& r : reports) {
        out << "| " << r.profile.degree << " | ";
        if (p3) out << r.profile.points << " | " << r.profile.lines << " | ";
        out << grouped(r.rt) << " | " << grouped(r.cr) << " | " << grouped(r.n2) << " |\n";
      }
      if (!show_intermediates) return;
      for (const auto& r : reports) {
        out << "\nd=" << r.profile.degree;
        if (p3) out << ", p=" << r.profile.points << ", q=" << r.profile.lines;
        out << "\n\n| quantity | value |\n|---|---:|\n";
        for (const auto& [name, value] : r.intermediates) out << "| " << name << " | " << grouped(value) << " |\n";
      }
      return;
    }
  }
}

namespace {

struct RunConfig {
  std::string ambient;
  int degree = 0;
  int max_degree = 0;
  std::optional<int> points;
  std::optional<int> lines;
  OutputFormat format = OutputFormat::Table;
  bool show_intermediates = false;
  bool stats = false;
  std::string cache;
  int threads = 1;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  cmd->add_option("ambient", cfg.ambient, "Ambient space")->required()->check(CLI::IsMember({"p2", "p3"}));
  cmd->add_option("--format", cfg.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_flag("--show-intermediates", cfg.show_intermediates, "Print tau counts, pairings and components");
  cmd->add_option("--cache", cfg.cache, "Genus-zero cache file (default: $G2ENUM_CACHE)");
  cmd->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 256));
  cmd->add_flag("--stats", cfg.stats, "Report genus-zero table statistics on stderr");
}

std::vector<Genus2Report> compute(Genus2Engine& engine, const RunConfig& cfg, bool table) {
  std::vector<Genus2Report> reports;
  if (cfg.ambient == "p2") {
    if (table) {
      if (cfg.max_degree < 0) throw ValidationError("--max-degree must be nonnegative");
      for (int d = 1; d <= cfg.max_degree; ++d) reports.push_back(engine.n2_p2(d));
      return reports;
    }
    if (cfg.lines.value_or(0) != 0) throw ValidationError("line constraints are not used in P^2");
    if (cfg.degree < 1) throw ValidationError("--degree must be positive");
    if (cfg.points && *cfg.points != 3 * cfg.degree - 2) {
      throw ValidationError("P^2 counts need exactly 3d-2 points");
    }
    reports.push_back(engine.n2_p2(cfg.degree));
    return reports;
  }
  if (cfg.degree < 1) throw ValidationError("--degree must be positive");
  if (table) {
    for (int p = (4 * cfg.degree - 3) / 2; p >= 0; --p) {
      reports.push_back(engine.n2_p3({3, cfg.degree, p, 4 * cfg.degree - 3 - 2 * p}));
    }
    return reports;
  }
  if (!cfg.points || !cfg.lines) throw ValidationError("P^3 needs --points and --lines");
  reports.push_back(engine.n2_p3({3, cfg.degree, *cfg.points, *cfg.lines}));
  return reports;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-two enumerative invariants of P^2 and P^3", "g2enum"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute_cmd = app.add_subcommand("compute", "Compute one genus-two count");
  add_common(compute_cmd, cfg);
  compute_cmd->add_option("--degree", cfg.degree, "Curve degree")->required();
  compute_cmd->add_option("--points", cfg.points, "Point constraints");
  compute_cmd->add_option("--lines", cfg.lines, "Line constraints (P^3)");

  auto* table_cmd = app.add_subcommand("table", "Compute a table of genus-two counts");
  add_common(table_cmd, cfg);
  table_cmd->add_option("--max-degree", cfg.max_degree, "Largest degree (P^2)");
  table_cmd->add_option("--degree", cfg.degree, "Degree; rows cover every admissible (p, q) (P^3)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool table = table_cmd->parsed();
  if (table && cfg.ambient == "p2" && table_cmd->count("--degree") > 0) {
    err << "error: use --max-degree for P^2 tables\n";
    return 2;
  }
  if (table && cfg.ambient == "p3" && table_cmd->count("--degree") == 0) {
    err << "error: P^3 tables need --degree\n";
    return 2;
  }
  if (cfg.cache.empty()) {
    if (const char* env = std::getenv("G2ENUM_CACHE")) cfg.cache = env;
  }

  try {
    Genus2Engine engine(cfg.threads);
    if (!cfg.cache.empty() && std::filesystem::exists(cfg.cache)) load_cache(engine.genus_zero(), cfg.cache);
    const auto reports = compute(engine, cfg, table);
    render(reports, cfg.ambient == "p3" ? 3 : 2, cfg.format, cfg.show_intermediates, !table, out);
    for (const auto& r : reports) {
      for (const auto& w : r.warnings) err << "warning: d=" << r.profile.degree << ": " << w << '\n';
    }
    if (!cfg.cache.empty()) save_cache(engine.genus_zero(), cfg.cache);
    if (cfg.stats) {
      const auto s = engine.genus_zero().stats();
      err << "gw0 table: entries=" << s.entries << " hits=" << s.hits << " misses=" << s.misses
          << " preloaded_hits=" << s.preloaded_hits << '\n';
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace g2
