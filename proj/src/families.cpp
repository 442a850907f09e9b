#include "fairdiv/families.hpp"

#include <algorithm>
#include <sstream>

#include "fairdiv/chores.hpp"
#include "fairdiv/goods.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/mms.hpp"
#include "fairdiv/two_agent.hpp"

namespace fairdiv {

namespace {

const std::vector<std::string> kFamilies = {
    "goods_u_mms",   "goods_u_prop1",     "goods_e_mms",    "goods_e_prop1",
    "chores_u_mms",  "chores_e_mms",      "chores_u_prop1", "chores_e_prop1_n3",
    "chores_e_prop1", "n2_goods_mms",     "n2_goods_prop1", "n2_chores_mms",
    "n2_chores_prop1"};

std::string canonical(const std::string& name) {
  std::string out = name;
  std::replace(out.begin(), out.end(), '-', '_');
  if (std::find(kFamilies.begin(), kFamilies.end(), out) == kFamilies.end()) {
    std::string known;
    for (const auto& f : kFamilies) known += (known.empty() ? "" : ", ") + f;
    throw ValidationError("unknown family '" + name + "' (known: " + known + ")");
  }
  return out;
}

bool is_square(int n, int& root) {
  for (int s = 1; s * s <= n; ++s) {
    if (s * s == n) {
      root = s;
      return true;
    }
  }
  return false;
}

int resolve_n(const std::string& fam, int n) {
  if (fam == "n2_goods_mms" || fam == "n2_goods_prop1" || fam == "n2_chores_mms" ||
      fam == "n2_chores_prop1") {
    if (n != 0 && n != 2) throw ValidationError(fam + " is a two-agent family; n is fixed at 2");
    return 2;
  }
  if (fam == "chores_e_prop1_n3") {
    if (n != 0 && n != 3) throw ValidationError(fam + " is defined for n = 3 only");
    return 3;
  }
  if (fam == "goods_u_mms" || fam == "goods_u_prop1") {
    if (n == 0) n = 9;
    int s = 0;
    if (n < 9 || !is_square(n, s))
      throw ValidationError(fam + " needs a perfect-square n >= 9, got " + std::to_string(n));
    return n;
  }
  if (fam == "chores_u_prop1") {
    if (n == 0) n = 4;
    if (n < 4 || n % 2 != 0)
      throw ValidationError(fam + " needs an even n >= 4, got " + std::to_string(n));
    return n;
  }
  if (fam == "chores_e_prop1") {
    if (n == 0) n = 4;
    if (n < 4) throw ValidationError(fam + " needs n >= 4, got " + std::to_string(n));
    return n;
  }
  if (n == 0) n = 3;
  if (n < 3) throw ValidationError(fam + " needs n >= 3, got " + std::to_string(n));
  return n;
}

// Largest eps the family's strict inequalities tolerate; families without an
// eps knob return nullopt.
std::optional<Rational> eps_cap(const std::string& fam, int n) {
  if (fam == "chores_e_mms")
    return std::min(Rational(n - 2, 4 * n), Rational(1, 2 * n));
  if (fam == "chores_e_prop1") return Rational(1, 2 * n);
  if (fam == "chores_e_prop1_n3") return Rational(1, 18);
  if (fam == "n2_goods_mms" || fam == "n2_chores_mms") return Rational(1, 4);
  if (fam == "n2_goods_prop1") return Rational(1, 8);
  if (fam == "n2_chores_prop1") return Rational(1, 10);
  return std::nullopt;
}

Rational resolve_eps(const std::string& fam, int n, const std::optional<Rational>& eps) {
  Rational cap = *eps_cap(fam, n);
  if (eps) {
    if (*eps <= 0 || *eps >= cap)
      throw ValidationError(fam + " needs eps in (0, " + format_rational(cap) + "), got " +
                            format_rational(*eps));
    return *eps;
  }
  Rational fallback = fam == "chores_e_prop1" ? Rational(1, 1000) : Rational(1, 100);
  if (fallback >= cap) fallback = cap / 2;  // large n squeezes the default out
  return fallback;
}

Instance build(Kind kind, std::vector<std::vector<Rational>> vals) {
  Instance inst;
  inst.kind = kind;
  inst.n = static_cast<int>(vals.size());
  inst.m = static_cast<int>(vals[0].size());
  inst.values = std::move(vals);
  check_instance(inst);
  return inst;
}

std::vector<Rational> row(int m, const Rational& fill) { return std::vector<Rational>(m, fill); }

Instance gen_goods_u_mms(int n) {
  int s = 0;
  is_square(n, s);
  int m = 2 * n;
  std::vector<std::vector<Rational>> vals;
  for (int i = 1; i <= s; ++i) {
    auto r = row(m, Rational(0));
    for (int j = 2 * (i - 1) * s + 1; j <= 2 * i * s; ++j) r[j - 1] = Rational(1, 2 * s);
    vals.push_back(std::move(r));
  }
  for (int i = s + 1; i <= n; ++i) vals.push_back(row(m, Rational(1, 2 * n)));
  return build(Kind::Goods, std::move(vals));
}

Instance gen_goods_u_prop1(int n) {
  int s = 0;
  is_square(n, s);
  int m = n + 1;
  std::vector<std::vector<Rational>> vals;
  for (int i = 1; i <= s; ++i) {
    auto r = row(m, Rational(0));
    for (int j = (i - 1) * s + 1; j <= i * s; ++j) r[j - 1] = Rational(1, s);
    vals.push_back(std::move(r));
  }
  for (int i = s + 1; i <= n; ++i) vals.push_back(row(m, Rational(1, n + 1)));
  return build(Kind::Goods, std::move(vals));
}

Instance gen_goods_e_mms(int n, int k) {
  int m = k * n + 1;
  Integer nk = 1;
  for (int t = 0; t < k; ++t) nk *= n;  // n^k
  Integer small_den = Integer(n) * k;
  Integer tiny_den = Integer(k) * nk * n;
  std::vector<std::vector<Rational>> vals;
  for (int i = 1; i <= n - 2; ++i) {
    auto r = row(m, Rational(Integer(1), small_den));
    r[m - 1] = Rational(0);
    vals.push_back(std::move(r));
  }
  for (int i = n - 1; i <= n; ++i) {
    auto r = row(m, Rational(Integer(1), tiny_den));
    r[m - 1] = Rational(1) - Rational(Integer(1), nk);
    vals.push_back(std::move(r));
  }
  return build(Kind::Goods, std::move(vals));
}

Instance gen_goods_e_prop1(int n) {
  Integer sq = Integer(n) * n;
  auto r = row(n + 1, Rational(Integer(1), sq));
  r[n] = Rational(1) - Rational(1, n);
  return build(Kind::Goods, std::vector<std::vector<Rational>>(n, r));
}

Instance gen_chores_u_mms(int n) {
  int m = 3 * n - 2;
  Integer sq = Integer(n) * n;
  std::vector<std::vector<Rational>> vals;
  auto r1 = row(m, Rational(-1, n));
  for (int j = 1; j <= 2 * n; ++j) r1[j - 1] = Rational(Integer(-1), sq);
  vals.push_back(std::move(r1));
  for (int i = 2; i <= n; ++i) {
    auto r = row(m, Rational(0));
    for (int j = 1; j <= 2 * n; ++j) r[j - 1] = Rational(-1, 2 * n);
    vals.push_back(std::move(r));
  }
  return build(Kind::Chores, std::move(vals));
}

Instance gen_chores_e_mms(int n, const Rational& eps) {
  int m = n + 2;
  auto r1 = row(m, Rational(-1, n));
  r1[1] = -eps;
  r1[2] = -eps;
  r1[3] = Rational(-1, n) + eps;
  r1[4] = Rational(-1, n) + eps;
  std::vector<std::vector<Rational>> vals{std::move(r1)};
  for (int i = 2; i <= n; ++i) {
    auto r = row(m, Rational(0));
    r[0] = Rational(-1, 2);
    r[2] = Rational(-1, 2);
    vals.push_back(std::move(r));
  }
  return build(Kind::Chores, std::move(vals));
}

Instance gen_chores_u_prop1(int n) {
  int m = n + 1;
  Integer sq = Integer(n) * n;
  auto r1 = row(m, Rational(Integer(-2), sq));
  r1[m - 1] = Rational(-(n - 2), n);
  std::vector<std::vector<Rational>> vals{std::move(r1)};
  for (int i = 2; i <= n; ++i) vals.push_back(row(m, Rational(-1, n + 1)));
  return build(Kind::Chores, std::move(vals));
}

Instance gen_chores_e_prop1_n3(const Rational& eps) {
  Rational third(1, 3);
  std::vector<std::vector<Rational>> vals;
  vals.push_back({Rational(0), Rational(0), Rational(0), -third, -eps, -third - 5 * eps,
                  -third + 6 * eps});
  std::vector<Rational> r = {-eps, -third, -eps, -eps, -eps, Rational(-2, 3) + 4 * eps,
                             Rational(0)};
  vals.push_back(r);
  vals.push_back(r);
  return build(Kind::Chores, std::move(vals));
}

Instance gen_chores_e_prop1(int n, const Rational& eps) {
  int m = n + 2;
  auto r1 = row(m, Rational(-1, n));
  r1[0] = -eps;
  r1[2] = -eps;
  r1[m - 1] = Rational(-1, n) + 2 * eps;
  std::vector<std::vector<Rational>> vals{std::move(r1)};
  for (int i = 2; i <= n; ++i) {
    auto r = row(m, Rational(0));
    r[0] = Rational(-1, 2);
    r[2] = Rational(-1, 2);
    vals.push_back(std::move(r));
  }
  return build(Kind::Chores, std::move(vals));
}

Instance gen_n2_goods_mms(const Rational& eps) {
  Rational half(1, 2);
  return build(Kind::Goods, {{half, half - eps, eps}, {half, eps, half - eps}});
}

Instance gen_n2_goods_prop1(const Rational& eps) {
  Rational half(1, 2), quarter(1, 4);
  return build(Kind::Goods, {{eps, eps, half - eps, half - eps},
                             {quarter - eps, quarter - eps, eps, half + eps}});
}

Instance gen_n2_chores_mms(const Rational& eps) {
  Rational half(1, 2);
  return build(Kind::Chores, {{-half, -half + eps, -eps}, {-half, -eps, -half + eps}});
}

Instance gen_n2_chores_prop1(const Rational& eps) {
  Rational half(1, 2), quarter(1, 4), eighth(1, 8);
  return build(Kind::Chores,
               {{-eps, -eps, -half, -eps, -half + 5 * eps, -eps, -eps},
                {-quarter + eps, -quarter + eps, Rational(0), -eighth - eps, -eighth - eps,
                 -quarter + eps, -eps}});
}

struct Plan {
  const char* setting;
  WelfareKind welfare;
  FairnessFilter filter;
  bool repair;  // re-balance the chores sweep when n >= 4
};

Plan plan_for(const std::string& fam) {
  if (fam == "goods_u_mms") return {"goods-util-mms", WelfareKind::Utilitarian, FairnessFilter::Mms, false};
  if (fam == "goods_u_prop1") return {"goods-prop1", WelfareKind::Utilitarian, FairnessFilter::Prop1, false};
  if (fam == "goods_e_mms") return {"goods-egal-mms", WelfareKind::Egalitarian, FairnessFilter::Mms, false};
  if (fam == "goods_e_prop1") return {"goods-prop1", WelfareKind::Egalitarian, FairnessFilter::Prop1, false};
  if (fam == "chores_u_mms") return {"chores-mms", WelfareKind::Utilitarian, FairnessFilter::Mms, false};
  if (fam == "chores_e_mms") return {"chores-mms", WelfareKind::Egalitarian, FairnessFilter::Mms, true};
  if (fam == "chores_u_prop1") return {"chores-prop1", WelfareKind::Utilitarian, FairnessFilter::Prop1, false};
  if (fam == "chores_e_prop1_n3") return {"chores-prop1", WelfareKind::Egalitarian, FairnessFilter::Prop1, true};
  if (fam == "chores_e_prop1") return {"chores-prop1", WelfareKind::Egalitarian, FairnessFilter::Prop1, true};
  FairnessFilter f = fam == "n2_goods_mms" || fam == "n2_chores_mms" ? FairnessFilter::Mms
                                                                     : FairnessFilter::Prop1;
  return {"two-agent", WelfareKind::Utilitarian, f, false};
}

void require_guarantee(bool ok, const std::string& what) {
  if (!ok) throw GuaranteeError("family report: " + what);
}

}  // namespace

const std::vector<std::string>& family_names() { return kFamilies; }

bool family_uses_eps(const std::string& family) {
  return eps_cap(canonical(family), 4).has_value();
}

bool family_uses_k(const std::string& family) { return canonical(family) == "goods_e_mms"; }

bool family_uses_n(const std::string& family) {
  std::string fam = canonical(family);
  return fam.rfind("n2_", 0) != 0 && fam != "chores_e_prop1_n3";
}

Instance make_family_instance(const std::string& family, const FamilyParams& params) {
  std::string fam = canonical(family);
  int n = resolve_n(fam, params.n);
  if (params.k != 0 && fam != "goods_e_mms")
    throw ValidationError(fam + " takes no k parameter");
  if (params.eps && !eps_cap(fam, n))
    throw ValidationError(fam + " takes no eps parameter");

  if (fam == "goods_u_mms") return gen_goods_u_mms(n);
  if (fam == "goods_u_prop1") return gen_goods_u_prop1(n);
  if (fam == "goods_e_mms") {
    int k = params.k == 0 ? 2 : params.k;
    if (k < 1) throw ValidationError("goods_e_mms needs k >= 1, got " + std::to_string(k));
    return gen_goods_e_mms(n, k);
  }
  if (fam == "goods_e_prop1") return gen_goods_e_prop1(n);
  if (fam == "chores_u_mms") return gen_chores_u_mms(n);
  if (fam == "chores_u_prop1") return gen_chores_u_prop1(n);

  Rational eps = resolve_eps(fam, n, params.eps);
  if (fam == "chores_e_mms") return gen_chores_e_mms(n, eps);
  if (fam == "chores_e_prop1_n3") return gen_chores_e_prop1_n3(eps);
  if (fam == "chores_e_prop1") return gen_chores_e_prop1(n, eps);
  if (fam == "n2_goods_mms") return gen_n2_goods_mms(eps);
  if (fam == "n2_goods_prop1") return gen_n2_goods_prop1(eps);
  if (fam == "n2_chores_mms") return gen_n2_chores_mms(eps);
  return gen_n2_chores_prop1(eps);
}

Allocation run_setting_checked(const Instance& inst, const std::string& setting) {
  Allocation alloc;
  if (setting == "goods-util-mms") {
    alloc = goods_util_mms(inst);
    require_guarantee(is_mms_fair(inst, alloc, mms_profile(inst)), "share floor violated");
    require_guarantee(utilitarian_welfare(inst, alloc) >= Rational(1, 4),
                      "welfare floor 1/4 violated");
  } else if (setting == "goods-egal-mms") {
    EgalResult res = goods_egal_mms(inst);
    alloc = res.alloc;
    require_guarantee(is_mms_fair(inst, alloc, mms_profile(inst)), "share floor violated");
    require_guarantee(egalitarian_welfare(inst, alloc) >= res.o_star / (2 * inst.n),
                      "egalitarian floor o*/(2n) violated");
  } else if (setting == "goods-prop1") {
    alloc = goods_prop1(inst);
    require_guarantee(is_prop1_all(inst, alloc), "adjusted proportionality violated");
    require_guarantee(utilitarian_welfare(inst, alloc) >= Rational(1, 2),
                      "welfare floor 1/2 violated");
  } else if (setting == "chores-mms") {
    alloc = chores_mms(inst);
    require_guarantee(is_mms_fair(inst, alloc, mms_profile(inst)), "share floor violated");
    require_guarantee(utilitarian_welfare(inst, alloc) >= Rational(-3), "welfare floor -3 violated");
  } else if (setting == "chores-prop1") {
    alloc = chores_prop1(inst);
    require_guarantee(is_prop1_all(inst, alloc), "adjusted proportionality violated");
    require_guarantee(utilitarian_welfare(inst, alloc) > Rational(-3), "welfare floor -3 violated");
  } else if (setting == "two-agent") {
    alloc = two_agent_best(inst);
    require_guarantee(is_mms_fair(inst, alloc, mms_profile(inst)) && is_prop1_all(inst, alloc),
                      "two-agent fairness violated");
    Rational floor = inst.kind == Kind::Goods ? Rational(1) : Rational(-1);
    require_guarantee(utilitarian_welfare(inst, alloc) >= floor,
                      "two-agent welfare floor violated");
  } else {
    throw ValidationError("unknown setting '" + setting +
                          "' (known: goods-util-mms, goods-egal-mms, goods-prop1, chores-mms, "
                          "chores-prop1, two-agent)");
  }
  require_valid(inst, alloc);
  return alloc;
}

FamilyReport run_family_report(const std::string& family, const FamilyParams& params,
                               const OracleLimits& lim) {
  std::string fam = canonical(family);
  int n = resolve_n(fam, params.n);
  Instance inst = make_family_instance(fam, params);
  Plan plan = plan_for(fam);

  std::ostringstream ps;
  if (fam == "goods_e_mms") ps << "k=" << (params.k == 0 ? 2 : params.k);
  if (eps_cap(fam, n)) ps << "eps=" << format_rational(resolve_eps(fam, n, params.eps));

  Allocation alloc = run_setting_checked(inst, plan.setting);
  if (plan.repair && n >= 4) {
    ChoresFairness mode = plan.filter == FairnessFilter::Mms ? ChoresFairness::Mms
                                                             : ChoresFairness::Prop1;
    alloc = chores_egal_repair(inst, mode, alloc);
    bool still_fair = mode == ChoresFairness::Mms ? is_mms_fair(inst, alloc, mms_profile(inst))
                                                  : is_prop1_all(inst, alloc);
    require_guarantee(still_fair, "fairness lost in re-balance");
    require_valid(inst, alloc);
  }

  FamilyReport rep;
  rep.family = fam;
  rep.n = n;
  rep.params = ps.str();
  rep.setting = plan.setting;
  rep.algo_alloc = alloc;
  rep.algo_welfare = plan.welfare == WelfareKind::Utilitarian ? utilitarian_welfare(inst, alloc)
                                                              : egalitarian_welfare(inst, alloc);
  rep.pof = pof_ratio(inst, plan.welfare, plan.filter, lim);
  // the routine's output passes the filter, so the oracle must rank at least as high
  require_guarantee(rep.algo_welfare <= rep.pof.best_fair_welfare,
                    "oracle ranked the routine's output above the fair optimum");
  return rep;
}

nlohmann::json pof_report_to_json(const PofReport& rep) {
  return nlohmann::json{{"kind", kind_name(rep.kind)},
                        {"welfare", welfare_name(rep.welfare)},
                        {"fairness", fairness_name(rep.filter)},
                        {"opt", format_rational(rep.opt_welfare)},
                        {"best_fair", format_rational(rep.best_fair_welfare)},
                        {"ratio", format_extended(rep.ratio)},
                        {"opt_witness", allocation_to_json(rep.opt_witness)},
                        {"fair_witness", allocation_to_json(rep.fair_witness)}};
}

nlohmann::json family_report_to_json(const FamilyReport& rep) {
  return nlohmann::json{{"family", rep.family},
                        {"n", rep.n},
                        {"params", rep.params},
                        {"setting", rep.setting},
                        {"allocation", allocation_to_json(rep.algo_alloc)},
                        {"allocation_welfare", format_rational(rep.algo_welfare)},
                        {"pof", pof_report_to_json(rep.pof)}};
}

std::string family_report_csv_header() { return "family,n,params,opt,best_fair,ratio"; }

std::string family_report_csv_row(const FamilyReport& rep) {
  std::ostringstream out;
  out << rep.family << ',' << rep.n << ',' << rep.params << ','
      << format_rational(rep.pof.opt_welfare) << ',' << format_rational(rep.pof.best_fair_welfare)
      << ',' << format_extended(rep.pof.ratio);
  return out.str();
}

}  // namespace fairdiv
