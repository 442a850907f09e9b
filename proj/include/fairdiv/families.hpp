#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairdiv/instance.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv {

// Knobs for the hard-coded lower-bound instance families. Fields a family
// does not use are ignored; n = 0 / k = 0 / unset eps mean "family default".
struct FamilyParams {
  int n = 0;
  int k = 0;                    // goods_e_mms block length (default 2)
  std::optional<Rational> eps;  // default 1/100 (chores_e_prop1: 1/1000)
};

// Canonical names (underscore form). Lookups also accept hyphenated spellings.
const std::vector<std::string>& family_names();

bool family_uses_eps(const std::string& family);
bool family_uses_k(const std::string& family);
// False for the fixed-size families (n2_*, chores_e_prop1_n3).
bool family_uses_n(const std::string& family);

// Builds the family's instance exactly (rows sum to +-1 with no rounding).
// Parameter range violations raise ValidationError.
Instance make_family_instance(const std::string& family, const FamilyParams& params);

struct FamilyReport {
  std::string family;
  int n = 0;
  std::string params;     // "k=2" / "eps=1/100" / ""
  std::string setting;    // allocation routine that ran
  Allocation algo_alloc;  // its output, re-checked against the routine's guarantees
  Rational algo_welfare;  // that output's welfare, same kind as the ratio below
  PofReport pof;
};

// Runs one allocation setting — goods-util-mms, goods-egal-mms, goods-prop1,
// chores-mms, chores-prop1, or two-agent — and re-checks the routine's own
// fairness and welfare guarantees before returning (GuaranteeError otherwise).
Allocation run_setting_checked(const Instance& inst, const std::string& setting);

// Builds the instance, runs the matching allocation routine, re-verifies its
// fairness and welfare guarantees, then computes the exact optimal-vs-best-fair
// ratio with the oracle.
FamilyReport run_family_report(const std::string& family, const FamilyParams& params,
                               const OracleLimits& lim = {});

nlohmann::json pof_report_to_json(const PofReport& rep);
nlohmann::json family_report_to_json(const FamilyReport& rep);

// Columns: family,n,params,opt,best_fair,ratio
std::string family_report_csv_header();
std::string family_report_csv_row(const FamilyReport& rep);

}  // namespace fairdiv
