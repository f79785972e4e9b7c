#include <functional>

#include "octic/doubly_even.hpp"
#include "octic/octic_irred.hpp"
#include "octic/palindromic.hpp"
#include "octic/resolvent_verifier.hpp"
#include "octic_cli/cli.hpp"

namespace octic::cli {

namespace {

Json poly_json(const UniPoly& p) {
  Json out = Json::array();
  for (const Rational& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Json groups_json(const std::vector<GroupId>& groups) {
  Json out = Json::array();
  for (GroupId g : groups) out.push_back(g.to_string());
  return out;
}

Json group_info_json(GroupId id, DataMode mode) {
  const GroupInfo& info = GroupTable::builtin().info(id);
  const auto order = group_order(id, mode);
  Json out{{"id", id.to_string()}, {"orbit_pattern", format_pattern(info.orbit_pattern)}};
  out["order"] = order ? Json(*order) : Json(nullptr);
  out["order_source"] = !order ? Json(nullptr) : Json(info.order_from_paper ? "paper" : "external");
  out["in_a8"] = info.in_a8;
  return out;
}

Json trace_json(const ConditionTrace& trace) {
  Json out = Json::array();
  for (const auto& e : trace.entries()) {
    out.push_back({{"label", e.label}, {"value", e.value.to_string()}, {"in_q2", e.in_q2}});
  }
  return out;
}

UniPoly family_polynomial(Family family, const Rational& a, const Rational& b) {
  return family == Family::doubly_even ? doubly_even_octic(a, b) : palindromic_octic(a, b);
}

Json base_report(const JobSpec& job, const Rational& a, const Rational& b) {
  return Json{{"schema", kReportSchema},
              {"command", to_string(job.command)},
              {"family", to_string(job.family)},
              {"input", {{"a", a.to_string()}, {"b", b.to_string()}, {"polynomial", poly_json(family_polynomial(job.family, a, b))}}},
              {"options", {{"refine", job.refine}, {"verify", job.verify}, {"data_mode", to_string(job.data_mode)}}}};
}

void add_classification(Json& report, const Classification& c, DataMode mode) {
  report["irreducible"] = true;
  report["group"] = c.exact ? Json(c.group().to_string()) : Json(nullptr);
  report["candidates"] = groups_json(c.groups);
  report["exact"] = c.exact;
  report["quartic_group"] = to_string(c.quartic_group);
  report["trace"] = trace_json(c.trace);
  report["split_blocks"] = c.split_blocks;
  report["refined_by_pattern"] = c.refined_by_pattern ? Json(format_pattern(*c.refined_by_pattern)) : Json(nullptr);
  Json info = Json::array();
  for (GroupId g : c.groups) info.push_back(group_info_json(g, mode));
  report["group_info"] = std::move(info);
}

Json verification_json(const VerificationReport& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"ok", v.ok()}, {"observed_pattern", format_pattern(v.observed_pattern)}, {"checks", std::move(checks)}};
}

Classification classify_family(const JobSpec& job, const Rational& a, const Rational& b) {
  if (job.family == Family::doubly_even) return doubly_even::classify(a, b);
  return job.refine ? classify_palindromic_refined(a, b) : palindromic::classify(a, b);
}

VerificationReport verify_family(Family family, const Rational& a, const Rational& b) {
  return family == Family::doubly_even ? verify_doubly_even(a, b) : verify_palindromic(a, b);
}

int run_command(const JobSpec& job, const Rational& a, const Rational& b, Json& report) {
  switch (job.command) {
    case Command::classify:
    case Command::batch: {
      add_classification(report, classify_family(job, a, b), job.data_mode);
      if (job.verify) {
        const auto v = verify_family(job.family, a, b);
        report["verification"] = verification_json(v);
        if (!v.ok()) return kExitVerification;
      }
      return kExitOk;
    }
    case Command::irreducible: {
      const UniPoly quartic = job.family == Family::doubly_even ? even_quartic(a, b) : palindromic_quartic(a, b);
      bool irreducible = false;
      if (job.family == Family::doubly_even) {
        irreducible = even_quartic_irreducible(a, b) && doubly_even_irreducible(a, b);
      } else {
        irreducible = palindromic_octic_irreducible(a, b);
      }
      report["irreducible"] = irreducible;
      if (!irreducible) {
        Json witness = Json::array();
        for (const UniPoly& f : power_comp_factor_witness(quartic).value_or(std::vector<UniPoly>{})) {
          witness.push_back(poly_json(f));
        }
        report["witness"] = std::move(witness);
      }
      return kExitOk;
    }
    case Command::resolvent: {
      UniPoly expected;
      Json blocks = Json::array();
      if (job.family == Family::doubly_even) {
        const auto in = doubly_even::Input::make(a, b);
        const auto r = doubly_even::build_resolvent_factors(in);
        expected = UniPoly::monomial(1, 4) * compose_power(r.r1, 2) * compose_power(r.r2, 2) * compose_power(r.r3, 2);
        blocks = Json{{{"name", "R1"}, {"polynomial", poly_json(r.r1)}},
                      {{"name", "R2"}, {"polynomial", poly_json(r.r2)}},
                      {{"name", "R3"}, {"polynomial", poly_json(r.r3)}}};
      } else {
        const auto in = palindromic::Input::make(a, b);
        const UniPoly r16 = palindromic::build_R16(a, b);
        const auto [r1, r2] = palindromic::build_quartic_resolvent_factors(a, b);
        expected = UniPoly::monomial(1, 4) * r16 * r1 * r2;
        blocks = Json{{{"name", "R16"}, {"polynomial", poly_json(r16)}},
                      {{"name", "R1"}, {"polynomial", poly_json(r1)}},
                      {{"name", "R2"}, {"polynomial", poly_json(r2)}}};
      }
      const UniPoly resolvent = linear_resolvent(family_polynomial(job.family, a, b));
      report["irreducible"] = true;
      report["resolvent"] = poly_json(resolvent);
      report["degree"] = resolvent.degree();
      report["closed_form_blocks"] = std::move(blocks);
      report["identity_holds"] = resolvent == expected;
      return resolvent == expected ? kExitOk : kExitVerification;
    }
    case Command::verify: {
      const auto v = verify_family(job.family, a, b);
      add_classification(report, v.classification, job.data_mode);
      report["verification"] = verification_json(v);
      return v.ok() ? kExitOk : kExitVerification;
    }
    case Command::info:
      break;
  }
  throw UsageError("unsupported command");
}

// Runs one input, translating library errors into report status and exit code.
int report_one(const JobSpec& job, const Rational& a, const Rational& b, Json& report) {
  report = base_report(job, a, b);
  const auto fail = [&](std::string_view status, const std::exception& e, int code) {
    report["status"] = status;
    report["message"] = e.what();
    return code;
  };
  try {
    const int code = run_command(job, a, b, report);
    report["status"] = code == kExitOk ? "ok" : "verification_mismatch";
    return code;
  } catch (const ReducibleInputError& e) {
    report["irreducible"] = false;
    Json witness = Json::array();
    for (const UniPoly& f : e.witness()) witness.push_back(poly_json(f));
    report["witness"] = std::move(witness);
    return fail("reducible", e, kExitReducible);
  } catch (const OutOfScopeError& e) {
    return fail("out_of_scope", e, kExitOutOfScope);
  } catch (const VerificationError& e) {
    return fail("verification_mismatch", e, kExitVerification);
  } catch (const PrecisionError& e) {
    return fail("verification_mismatch", e, kExitVerification);
  } catch (const Error& e) {
    return fail("error", e, kExitUsage);
  }
}

Json info_report(const JobSpec& job) {
  const GroupTable& table = GroupTable::builtin();
  Json groups = Json::array();
  for (const GroupInfo& g : table.groups()) groups.push_back(group_info_json(g.id, job.data_mode));
  Json candidates = Json::object();
  for (QuarticGroup q : {QuarticGroup::E4, QuarticGroup::C4, QuarticGroup::D4}) {
    candidates[std::string(to_string(q))] = {
        {"subfield_parity", groups_json(table.candidates(q, FilterStage::subfield_parity))},
        {"orbit_pattern", groups_json(table.candidates(q, FilterStage::orbit_pattern))}};
  }
  return Json{{"schema", kReportSchema},
              {"command", "info"},
              {"format_version", table.format_version()},
              {"data_mode", to_string(job.data_mode)},
              {"groups", std::move(groups)},
              {"candidates", std::move(candidates)},
              {"doubly_even_groups", groups_json(table.doubly_even_groups())}};
}

std::vector<long> values(const std::optional<IntRange>& range) {
  if (range) {
    std::vector<long> out;
    for (long v = range->lo; v <= range->hi; ++v) out.push_back(v);
    return out;
  }
  return {};
}

}  // namespace

RunResult run(const JobSpec& job) {
  RunResult result;
  if (job.command == Command::info) {
    result.reports.push_back(info_report(job));
    return result;
  }
  if (job.command != Command::batch) {
    Json report;
    result.exit_code = report_one(job, *job.a, *job.b, report);
    result.reports.push_back(std::move(report));
    return result;
  }
  if (job.family_template) {
    for (const FamilyMember& m : family_search(*job.family_template, *job.t_range)) {
      result.reports.push_back({{"schema", kReportSchema},
                                {"command", "batch"},
                                {"template", "ft"},
                                {"t", m.t},
                                {"polynomial", poly_json(m.polynomial)},
                                {"irreducible", m.irreducible},
                                {"group", m.group ? Json(m.group->to_string()) : Json(nullptr)}});
    }
    return result;
  }
  std::vector<Rational> as;
  std::vector<Rational> bs;
  if (job.a) as.push_back(*job.a);
  for (long v : values(job.a_range)) as.emplace_back(v);
  if (job.b) bs.push_back(*job.b);
  for (long v : values(job.b_range)) bs.emplace_back(v);
  if (job.k_range) {
    for (long k = job.k_range->lo; k <= job.k_range->hi; ++k) bs.push_back(Rational(k) * Rational(k));
  }
  for (const Rational& a : as) {
    for (const Rational& b : bs) {
      Json report;
      if (report_one(job, a, b, report) == kExitVerification) result.exit_code = kExitVerification;
      result.reports.push_back(std::move(report));
    }
  }
  return result;
}

}  // namespace octic::cli
