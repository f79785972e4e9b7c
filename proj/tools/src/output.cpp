#include <sstream>

#include "octic_cli/cli.hpp"

namespace octic::cli {

namespace {

std::string text_list(const Json& array) {
  std::string out;
  for (const auto& item : array) {
    if (!out.empty()) out += ", ";
    out += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return out;
}

void write_text(const Json& r, std::ostream& out) {
  const std::string command = r.at("command").get<std::string>();
  if (command == "info") {
    out << "group table format " << r.at("format_version") << " (" << r.at("data_mode").get<std::string>() << ")\n";
    for (const auto& g : r.at("groups")) {
      out << "  " << g.at("id").get<std::string>() << "  orbits " << g.at("orbit_pattern").get<std::string>()
          << "  order " << (g.at("order").is_null() ? std::string("-") : g.at("order").dump()) << "\n";
    }
    for (const auto& [quartic, stages] : r.at("candidates").items()) {
      out << "  " << quartic << ": " << text_list(stages.at("subfield_parity")) << "  ->  "
          << text_list(stages.at("orbit_pattern")) << "\n";
    }
    return;
  }
  if (r.contains("template")) {
    out << "t=" << r.at("t") << "  [" << text_list(r.at("polynomial")) << "]  ";
    out << (r.at("irreducible").get<bool>() ? r.at("group").get<std::string>() : std::string("reducible")) << "\n";
    return;
  }
  const Json& in = r.at("input");
  out << r.at("family").get<std::string>() << " a=" << in.at("a").get<std::string>()
      << " b=" << in.at("b").get<std::string>() << ": ";
  const std::string status = r.at("status").get<std::string>();
  if (status == "reducible") {
    out << "reducible";
    for (const auto& f : r.at("witness")) out << "  [" << text_list(f) << "]";
    out << "\n";
    return;
  }
  if (status != "ok" && !r.contains("verification")) {
    out << status << ": " << r.at("message").get<std::string>() << "\n";
    return;
  }
  if (command == "irreducible") {
    out << (r.at("irreducible").get<bool>() ? "irreducible" : "reducible");
    if (r.contains("witness")) {
      for (const auto& f : r.at("witness")) out << "  [" << text_list(f) << "]";
    }
    out << "\n";
    return;
  }
  if (command == "resolvent") {
    out << "linear resolvent of degree " << r.at("degree") << ", closed form "
        << (r.at("identity_holds").get<bool>() ? "matches" : "DOES NOT match") << "\n";
    out << "  [" << text_list(r.at("resolvent")) << "]\n";
    return;
  }
  if (r.at("exact").get<bool>()) {
    out << r.at("group").get<std::string>() << "\n";
  } else {
    out << "one of " << text_list(r.at("candidates")) << "\n";
  }
  out << "  quartic subfield group " << r.at("quartic_group").get<std::string>() << "\n";
  for (const auto& e : r.at("trace")) {
    out << "  " << e.at("label").get<std::string>() << " = " << e.at("value").get<std::string>()
        << (e.at("in_q2").get<bool>() ? "  square" : "  not a square") << "\n";
  }
  if (!r.at("refined_by_pattern").is_null()) {
    out << "  refined by orbit pattern " << r.at("refined_by_pattern").get<std::string>() << "\n";
  }
  if (r.contains("verification")) {
    const Json& v = r.at("verification");
    out << "  verification " << (v.at("ok").get<bool>() ? "passed" : "FAILED") << ", pattern "
        << v.at("observed_pattern").get<std::string>() << "\n";
    for (const auto& c : v.at("checks")) {
      out << "    [" << (c.at("passed").get<bool>() ? "ok" : "FAIL") << "] " << c.at("name").get<std::string>() << "\n";
    }
  }
}

}  // namespace

void write_reports(const RunResult& result, OutputFormat format, std::ostream& out) {
  for (const Json& report : result.reports) {
    if (format == OutputFormat::json) {
      out << report.dump() << "\n";
    } else {
      write_text(report, out);
    }
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  try {
    std::string help;
    job = parse_command_line(args, &help);
    if (!help.empty()) {
      out << help;
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "octic: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const RunResult result = run(job);
    write_reports(result, job.output, out);
    return result.exit_code;
  } catch (const std::exception& e) {
    err << "octic: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace octic::cli
