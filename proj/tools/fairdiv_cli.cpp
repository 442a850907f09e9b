#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fairdiv/chores.hpp"
#include "fairdiv/families.hpp"
#include "fairdiv/goods.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/mms.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/two_agent.hpp"

using namespace fairdiv;

namespace {

Instance load_instance(const std::string& path, bool normalize) {
  if (path == "-") return parse_instance(std::cin, normalize);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  return parse_instance(in, normalize);
}

Allocation load_allocation(const std::string& path) {
  if (path == "-") return parse_allocation(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open allocation file: " + path);
  return parse_allocation(in);
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write to " + out_path);
  out << doc.dump(2) << "\n";
}

std::string block_str(const Block& b) {
  return "[" + std::to_string(b.lo) + "," + std::to_string(b.hi) + ")";
}

std::string partition_str(const Allocation& alloc) {
  std::string out;
  for (const auto& b : alloc.bundles) {
    if (!out.empty()) out += " ";
    out += block_str(b);
  }
  return out;
}

WelfareKind parse_welfare(const std::string& s) {
  if (s == "uw") return WelfareKind::Utilitarian;
  if (s == "ew") return WelfareKind::Egalitarian;
  throw ValidationError("welfare must be uw or ew, got '" + s + "'");
}

FairnessFilter parse_fairness(const std::string& s) {
  if (s == "none") return FairnessFilter::None;
  if (s == "mms") return FairnessFilter::Mms;
  if (s == "prop1") return FairnessFilter::Prop1;
  throw ValidationError("fairness must be none, mms, or prop1, got '" + s + "'");
}

int cmd_mms(const std::string& path, bool normalize, int agent, bool partition) {
  Instance inst = load_instance(path, normalize);
  MmsProfile prof = mms_profile(inst);
  if (agent != 0) {
    if (agent < 1 || agent > inst.n)
      throw ValidationError("agent must be in 1.." + std::to_string(inst.n));
    std::cout << format_rational(prof.mms[agent - 1]) << "\n";
    if (partition) std::cout << "partition: " << partition_str(prof.partition[agent - 1]) << "\n";
    return 0;
  }
  for (int i = 0; i < inst.n; ++i) {
    std::cout << "agent " << i + 1 << ": " << format_rational(prof.mms[i]);
    if (partition) std::cout << " | " << partition_str(prof.partition[i]);
    std::cout << "\n";
  }
  return 0;
}

int cmd_allocate(const std::string& path, bool normalize, const std::string& setting,
                 const std::string& out) {
  Instance inst = load_instance(path, normalize);
  Allocation alloc = run_setting_checked(inst, setting);
  emit(allocation_to_json(alloc), out);
  std::cerr << "uw = " << format_rational(utilitarian_welfare(inst, alloc)) << "\n";
  std::cerr << "ew = " << format_rational(egalitarian_welfare(inst, alloc)) << "\n";
  return 0;
}

int cmd_oracle(const std::string& path, bool normalize, const std::string& welfare,
               const std::string& fairness, const std::string& out) {
  Instance inst = load_instance(path, normalize);
  PofReport rep = pof_ratio(inst, parse_welfare(welfare), parse_fairness(fairness));
  emit(pof_report_to_json(rep), out);
  return 0;
}

int cmd_family(const std::string& name, int n, int k, const std::string& eps,
               const std::string& out, bool report, bool csv) {
  FamilyParams params;
  params.n = n;
  params.k = k;
  if (!eps.empty()) params.eps = parse_rational(eps);
  if (!report) {
    emit(instance_to_json(make_family_instance(name, params)), out);
    return 0;
  }
  if (!out.empty()) emit(instance_to_json(make_family_instance(name, params)), out);
  FamilyReport rep = run_family_report(name, params);
  if (csv) {
    std::cout << family_report_csv_header() << "\n" << family_report_csv_row(rep) << "\n";
  } else {
    emit(nlohmann::json::array({family_report_to_json(rep)}), "");
  }
  return 0;
}

int cmd_check(const std::string& inst_path, bool normalize, const std::string& alloc_path,
              const std::string& fairness) {
  Instance inst = load_instance(inst_path, normalize);
  Allocation alloc = load_allocation(alloc_path);
  require_valid(inst, alloc);
  bool all_ok = true;
  if (fairness == "mms") {
    MmsProfile prof = mms_profile(inst);
    for (int i = 0; i < inst.n; ++i) {
      Rational v = value(inst, i, alloc.bundles[i]);
      bool ok = v >= prof.mms[i];
      all_ok = all_ok && ok;
      std::cout << "agent " << i + 1 << ": " << (ok ? "pass" : "FAIL") << " value "
                << format_rational(v) << " vs mms " << format_rational(prof.mms[i]) << "\n";
    }
  } else if (fairness == "prop1") {
    Rational share = Rational(inst.kind == Kind::Goods ? 1 : -1, inst.n);
    for (int i = 0; i < inst.n; ++i) {
      Rational v = value(inst, i, alloc.bundles[i]);
      bool ok = is_prop1(inst, alloc, i);
      all_ok = all_ok && ok;
      std::cout << "agent " << i + 1 << ": " << (ok ? "pass" : "FAIL") << " value "
                << format_rational(v) << " vs share " << format_rational(share)
                << " (one adjustment allowed)\n";
    }
  } else {
    throw ValidationError("fairness must be mms or prop1, got '" + fairness + "'");
  }
  return all_ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for contiguous fair division on a line"};
  app.require_subcommand(1);

  std::string mms_instance;
  int mms_agent = 0;
  bool mms_partition = false, mms_normalize = false;
  auto* mms_cmd = app.add_subcommand("mms", "Print exact maximin share values");
  mms_cmd->add_option("--instance", mms_instance, "instance JSON ('-' for stdin)")->required();
  mms_cmd->add_option("--agent", mms_agent, "1-based agent: print only her value");
  mms_cmd->add_flag("--partition", mms_partition, "also print defining partitions");
  mms_cmd->add_flag("--normalize", mms_normalize, "rescale rows to +-1 before use");

  std::string al_instance, al_setting, al_out;
  bool al_normalize = false;
  auto* al_cmd = app.add_subcommand("allocate", "Run an allocation routine, self-checked");
  al_cmd->add_option("--instance", al_instance, "instance JSON ('-' for stdin)")->required();
  al_cmd
      ->add_option("--setting", al_setting,
                   "goods-util-mms | goods-egal-mms | goods-prop1 | chores-mms | chores-prop1 | "
                   "two-agent")
      ->required();
  al_cmd->add_option("--out", al_out, "write allocation JSON here instead of stdout");
  al_cmd->add_flag("--normalize", al_normalize, "rescale rows to +-1 before use");

  std::string or_instance, or_welfare, or_fairness = "none", or_out;
  bool or_normalize = false;
  auto* or_cmd = app.add_subcommand("oracle", "Exact optimal vs best-fair welfare ratio");
  or_cmd->add_option("--instance", or_instance, "instance JSON ('-' for stdin)")->required();
  or_cmd->add_option("--welfare", or_welfare, "uw | ew")->required();
  or_cmd->add_option("--fairness", or_fairness, "none | mms | prop1");
  or_cmd->add_option("--out", or_out, "write report JSON here instead of stdout");
  or_cmd->add_flag("--normalize", or_normalize, "rescale rows to +-1 before use");

  std::string fa_name, fa_eps, fa_out;
  int fa_n = 0, fa_k = 0;
  bool fa_report = false, fa_csv = false;
  auto* fa_cmd = app.add_subcommand("family", "Generate a lower-bound instance family member");
  fa_cmd->add_option("family", fa_name, "family name, e.g. chores-e-mms")->required();
  fa_cmd->add_option("--n", fa_n, "agent count (where the family allows it)");
  fa_cmd->add_option("--k", fa_k, "block length (goods-e-mms)");
  fa_cmd->add_option("--eps", fa_eps, "epsilon as p/q (where the family takes one)");
  fa_cmd->add_option("--out", fa_out, "write the instance JSON here");
  fa_cmd->add_flag("--report", fa_report, "run the allocation routine and the ratio oracle");
  fa_cmd->add_flag("--csv", fa_csv, "emit the report as CSV instead of JSON");

  std::string ch_instance, ch_alloc, ch_fairness;
  bool ch_normalize = false;
  auto* ch_cmd = app.add_subcommand("check", "Verify an allocation against a fairness notion");
  ch_cmd->add_option("--instance", ch_instance, "instance JSON ('-' for stdin)")->required();
  ch_cmd->add_option("--allocation", ch_alloc, "allocation JSON ('-' for stdin)")->required();
  ch_cmd->add_option("--fairness", ch_fairness, "mms | prop1")->required();
  ch_cmd->add_flag("--normalize", ch_normalize, "rescale rows to +-1 before use");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mms_cmd) return cmd_mms(mms_instance, mms_normalize, mms_agent, mms_partition);
    if (*al_cmd) return cmd_allocate(al_instance, al_normalize, al_setting, al_out);
    if (*or_cmd) return cmd_oracle(or_instance, or_normalize, or_welfare, or_fairness, or_out);
    if (*fa_cmd) return cmd_family(fa_name, fa_n, fa_k, fa_eps, fa_out, fa_report, fa_csv);
    if (*ch_cmd) return cmd_check(ch_instance, ch_normalize, ch_alloc, ch_fairness);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const GuaranteeError& e) {
    std::cerr << "guarantee violation: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
