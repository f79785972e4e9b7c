#include <charconv>

#include "CLI11.hpp"
#include "octic_cli/cli.hpp"

namespace octic::cli {

namespace {

constexpr long kMaxRangeLength = 1'000'000;

long parse_long(std::string_view text, std::string_view what) {
  std::string cleaned(text);
  if (cleaned.rfind("−", 0) == 0) cleaned = "-" + cleaned.substr(3);
  long value = 0;
  const auto* end = cleaned.data() + cleaned.size();
  auto [ptr, ec] = std::from_chars(cleaned.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  return value;
}

Rational parse_rational(const std::string& text, std::string_view what) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("malformed rational for " + std::string(what) + ": " + e.what());
  }
}

Family parse_family(const std::string& text) {
  if (text == "doubly-even") return Family::doubly_even;
  if (text == "palindromic") return Family::palindromic;
  throw UsageError("unknown family '" + text + "' (expected doubly-even or palindromic)");
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::classify, Command::irreducible, Command::resolvent, Command::verify, Command::batch,
                    Command::info}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown command '" + text + "'");
}

void validate(const JobSpec& job) {
  switch (job.command) {
    case Command::info:
      return;
    case Command::batch:
      if (job.family_template) {
        if (!job.t_range) throw UsageError("batch --template requires --t-range");
        return;
      }
      if (!job.a && !job.a_range) throw UsageError("batch requires -a or --a-range");
      if (!job.b && !job.b_range && !job.k_range) throw UsageError("batch requires -b, --b-range or --k-range");
      if (job.k_range && job.family != Family::doubly_even) throw UsageError("--k-range applies to doubly-even only");
      return;
    default:
      if (!job.a || !job.b) throw UsageError(std::string(to_string(job.command)) + " requires -a and -b");
  }
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::classify: return "classify";
    case Command::irreducible: return "irreducible";
    case Command::resolvent: return "resolvent";
    case Command::verify: return "verify";
    case Command::batch: return "batch";
    case Command::info: return "info";
  }
  return "?";
}

std::string_view to_string(Family family) {
  return family == Family::doubly_even ? "doubly-even" : "palindromic";
}

IntRange IntRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw UsageError("range must look like lo..hi, got '" + std::string(text) + "'");
  IntRange r{parse_long(text.substr(0, dots), "range bound"), parse_long(text.substr(dots + 2), "range bound")};
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  if (r.hi - r.lo >= kMaxRangeLength) throw UsageError("range '" + std::string(text) + "' is too long");
  return r;
}

std::string IntRange::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

JobSpec parse_command_line(const std::vector<std::string>& args, std::string* help) {
  CLI::App app{"Galois groups of doubly even and palindromic even octics", "octic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  struct Raw {
    std::string family = "doubly-even";
    std::string a, b, a_range, b_range, k_range, t_range, templ;
    std::string output = "text";
    bool refine = false, verify = false, external = false;
  } raw;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", raw.family, "doubly-even | palindromic");
    sub->add_option("-a,--a", raw.a, "coefficient a (p or p/q)");
    sub->add_option("-b,--b", raw.b, "coefficient b (p or p/q)");
    sub->add_option("--output", raw.output, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--external-data", raw.external, "include group orders not stated with the classification");
    sub->add_flag("--refine", raw.refine, "narrow inexact candidate sets with the factorization oracle");
  };
  const std::pair<const char*, const char*> singles[] = {
      {"classify", "Galois group of a single octic"},
      {"irreducible", "irreducibility verdict with a factor witness"},
      {"resolvent", "degree-28 linear resolvent and its closed-form blocks"},
      {"verify", "check every closed-form identity against exact resolvents"}};
  for (const auto& [name, description] : singles) {
    auto* sub = app.add_subcommand(name, description);
    add_common(sub);
    if (std::string_view(name) == "classify") sub->add_flag("--verify", raw.verify, "also run the resolvent checks");
  }
  auto* batch = app.add_subcommand("batch", "classify a grid of inputs, one report per line");
  add_common(batch);
  batch->add_option("--a-range", raw.a_range, "lo..hi");
  batch->add_option("--b-range", raw.b_range, "lo..hi");
  batch->add_option("--k-range", raw.k_range, "lo..hi with b = k^2");
  batch->add_option("--template", raw.templ, "ft: x^8 + (t^2-2)x^4 + 1")->check(CLI::IsMember({"ft"}));
  batch->add_option("--t-range", raw.t_range, "lo..hi");
  auto* info = app.add_subcommand("info", "group table metadata");
  info->add_option("--output", raw.output, "text | json")->check(CLI::IsMember({"text", "json"}));
  info->add_flag("--external-data", raw.external, "include group orders not stated with the classification");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return {};
  } catch (const CLI::CallForAllHelp&) {
    if (help) *help = app.help("", CLI::AppFormatMode::All);
    return {};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  JobSpec job;
  job.command = parse_command(app.get_subcommands().front()->get_name());
  job.family = parse_family(raw.family);
  if (!raw.a.empty()) job.a = parse_rational(raw.a, "-a");
  if (!raw.b.empty()) job.b = parse_rational(raw.b, "-b");
  if (!raw.a_range.empty()) job.a_range = IntRange::parse(raw.a_range);
  if (!raw.b_range.empty()) job.b_range = IntRange::parse(raw.b_range);
  if (!raw.k_range.empty()) job.k_range = IntRange::parse(raw.k_range);
  if (!raw.t_range.empty()) job.t_range = IntRange::parse(raw.t_range);
  if (!raw.templ.empty()) job.family_template = Template::ft;
  job.refine = raw.refine;
  job.verify = raw.verify;
  job.data_mode = raw.external ? DataMode::external_augmented : DataMode::paper_sourced;
  job.output = raw.output == "json" ? OutputFormat::json : OutputFormat::text;
  validate(job);
  return job;
}

JobSpec job_from_report(const Json& report) {
  try {
    if (report.at("schema").get<std::string>() != kReportSchema) throw UsageError("unsupported report schema");
    JobSpec job;
    job.command = parse_command(report.at("command").get<std::string>());
    if (job.command == Command::info) {
      job.data_mode = report.at("data_mode").get<std::string>() == to_string(DataMode::external_augmented)
                          ? DataMode::external_augmented
                          : DataMode::paper_sourced;
      job.output = OutputFormat::json;
      return job;
    }
    if (job.command == Command::batch) throw UsageError("batch lines are not re-runnable reports");
    job.family = parse_family(report.at("family").get<std::string>());
    const Json& input = report.at("input");
    job.a = parse_rational(input.at("a").get<std::string>(), "a");
    job.b = parse_rational(input.at("b").get<std::string>(), "b");
    const Json& options = report.at("options");
    job.refine = options.at("refine").get<bool>();
    job.verify = options.at("verify").get<bool>();
    job.data_mode = options.at("data_mode").get<std::string>() == to_string(DataMode::external_augmented)
                        ? DataMode::external_augmented
                        : DataMode::paper_sourced;
    job.output = OutputFormat::json;
    return job;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace octic::cli
