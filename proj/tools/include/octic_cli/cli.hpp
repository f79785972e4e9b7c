#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "octic/group_tables.hpp"
#include "octic/polynomial.hpp"
#include "octic/rational.hpp"

namespace octic::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kReportSchema = "octic-report/1";

enum class Command { classify, irreducible, resolvent, verify, batch, info };
enum class Family { doubly_even, palindromic };
enum class OutputFormat { text, json };
enum class Template { ft };  // x^8 + (t^2 - 2) x^4 + 1

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitOutOfScope = 2,
  kExitReducible = 3,
  kExitVerification = 4,
};

// Inclusive integer range written "lo..hi".
struct IntRange {
  long lo = 0;
  long hi = 0;
  static IntRange parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct JobSpec {
  Command command = Command::classify;
  Family family = Family::doubly_even;
  std::optional<Rational> a;
  std::optional<Rational> b;
  std::optional<IntRange> a_range;
  std::optional<IntRange> b_range;
  std::optional<IntRange> k_range;  // b = k^2 in doubly even sweeps
  std::optional<Template> family_template;
  std::optional<IntRange> t_range;
  bool refine = false;
  bool verify = false;
  DataMode data_mode = DataMode::paper_sourced;
  OutputFormat output = OutputFormat::text;
};

// Thrown for malformed command lines and unreadable job descriptions.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses argv (without the program name). Throws UsageError; a request for
// help is reported through `help` instead of a job.
JobSpec parse_command_line(const std::vector<std::string>& args, std::string* help = nullptr);

// Rebuilds the job that produced a JSON report.
JobSpec job_from_report(const Json& report);

struct RunResult {
  int exit_code = kExitOk;
  // One report per input; batch jobs produce one per sample.
  std::vector<Json> reports;
};

RunResult run(const JobSpec& job);

void write_reports(const RunResult& result, OutputFormat format, std::ostream& out);

// Full command-line entry point.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FamilyMember {
  long t = 0;
  UniPoly polynomial;
  bool irreducible = false;
  std::optional<GroupId> group;
};

// Instantiates the template over the range and classifies the irreducible members.
std::vector<FamilyMember> family_search(Template family_template, const IntRange& t_range);

std::string_view to_string(Command command);
std::string_view to_string(Family family);

}  // namespace octic::cli
