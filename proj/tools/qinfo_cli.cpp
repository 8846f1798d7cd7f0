// qinfo: operational information measures over complete sets of mutually
// complementary (mutually unbiased) qubit measurements.
//
// Subcommands: info, mub, invariance, conserve, distribute, mzi.
// Exit codes: 0 = pass, 1 = numerical tolerance failure (report still
// emitted), 2 = input/usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qinfo/qinfo.hpp"

namespace {

using namespace qinfo;

struct Options {
  std::string state_path;
  int k = 1;
  double phi = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  int trials = 100;
  int mzi_samples = 64; // mzi reuses --trials as the phase sample count
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::string out;
  std::string format;
};

void add_common_flags(CLI::App *cmd, Options &opt) {
  cmd->add_option("--seed", opt.seed, "random seed (echoed in output headers)");
  cmd->add_option("--tol", opt.tol, "pass/fail tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opt.out, "output file (default: stdout)");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "human"}));
}

void emit(const Options &opt, const std::string &text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open output file '" + opt.out + "'");
  f << text;
}

// complementary set used for a k-qubit state; phi parameters apply for k <= 2
MubSet set_for(int k, const Options &opt) {
  switch (k) {
  case 1:
    return spin_triple(opt.phi);
  case 2:
    return two_qubit_set(opt.phi1, opt.phi2);
  case 3:
    return pauli_partition_mubs(3);
  default:
    throw std::invalid_argument("no complementary-set construction for k=" +
                                std::to_string(k) + " (supported: 1, 2, 3)");
  }
}

std::string header_line(const std::string &cmd, const Options &opt, int k) {
  std::ostringstream os;
  os << "# qinfo " << cmd << " state=" << opt.state_path << " k=" << k;
  if (k == 1)
    os << " phi=" << fmt_phi(opt.phi);
  if (k == 2)
    os << " phi1=" << fmt_phi(opt.phi1) << " phi2=" << fmt_phi(opt.phi2);
  os << " trials=" << opt.trials << " seed=" << opt.seed
     << " tol=" << fmt_num(opt.tol) << "\n";
  return os.str();
}

std::string set_description(int k) {
  switch (k) {
  case 1:
    return "spin_triple(phi)";
  case 2:
    return "two_qubit_set(phi1, phi2)";
  default:
    return "pauli_partition_mubs(" + std::to_string(k) + ")";
  }
}

int cmd_info(const Options &opt) {
  const QState st = load_qstate(opt.state_path);
  const int k = qstate_num_qubits(st);
  const DensityMatrix rho = qstate_density(st);
  const InformationReport rep = total_information(rho, set_for(k, opt));
  const bool pass = rep.deviation() < opt.tol;

  std::ostringstream os;
  os << header_line("info", opt, k);
  if (opt.format == "csv") {
    os << kReportCsvHeader << "\n";
    append_report_rows(os, 0, std::to_string(opt.seed), rep.per_basis,
                       rep.total_sum, rep.closed_form, rep.deviation());
    if (rep.individual) {
      os << "# individual_1=" << fmt_num((*rep.individual)[0])
         << " individual_2=" << fmt_num((*rep.individual)[1])
         << " joint=" << fmt_num(*rep.joint) << "\n";
    }
  } else {
    os << "state       : " << (std::holds_alternative<PureState>(st) ? "pure" : "density")
       << " (k=" << k << ")\n";
    os << "set         : " << set_description(k) << "\n";
    os << "purity      : " << fmt_human(rep.purity) << "\n";
    for (const auto &[label, bits] : rep.per_basis)
      os << "I[" << label << "]   : " << fmt_human(bits) << " bits\n";
    os << "total       : " << fmt_human(rep.total_sum) << " bits\n";
    os << "closed_form : " << fmt_human(rep.closed_form) << " bits\n";
    os << "deviation   : " << fmt_num(rep.deviation()) << "\n";
    if (rep.individual)
      os << "individual  : " << fmt_human((*rep.individual)[0]) << " "
         << fmt_human((*rep.individual)[1]) << " bits\n"
         << "joint       : " << fmt_human(*rep.joint) << " bits\n";
    os << "result      : " << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(opt, os.str());
  return pass ? 0 : 1;
}

int cmd_invariance(const Options &opt) {
  const QState st = load_qstate(opt.state_path);
  const int k = qstate_num_qubits(st);
  const SweepReport rep =
      invariance_sweep(qstate_density(st), k, opt.trials, opt.seed);
  const bool pass = rep.passed(opt.tol);

  std::ostringstream os;
  os << header_line("invariance", opt, k);
  if (opt.format == "csv") {
    os << sweep_to_csv(rep);
  } else {
    for (const auto &t : rep.trials)
      os << "trial " << t.trial << " total=" << fmt_human(t.total)
         << " deviation=" << fmt_num(t.deviation) << "\n";
    os << "closed_form   : " << fmt_human(rep.closed_form) << " bits\n";
    os << "max deviation : " << fmt_num(rep.max_deviation) << "\n";
    os << "result        : " << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(opt, os.str());
  return pass ? 0 : 1;
}

int cmd_conserve(const Options &opt) {
  const QState st = load_qstate(opt.state_path);
  const int k = qstate_num_qubits(st);
  const DensityMatrix rho = qstate_density(st);

  std::vector<std::uint64_t> subseeds;
  std::vector<Matrix> unitaries;
  for (int i = 0; i < opt.trials; ++i) {
    subseeds.push_back(derive_subseed(opt.seed, static_cast<std::uint64_t>(i)));
    unitaries.push_back(random_unitary(rho.dim(), subseeds.back()));
  }
  const ConservationReport rep =
      conservation_check(rho, unitaries, set_for(k, opt));
  const bool pass = rep.passed(opt.tol);

  std::ostringstream os;
  os << header_line("conserve", opt, k);
  if (opt.format == "csv") {
    os << kReportCsvHeader << "\n";
    for (const auto &s : rep.steps) {
      // step 0 is the initial state and has no driving sub-seed
      const std::string tag = s.step == 0 ? "0" : std::to_string(subseeds[s.step - 1]);
      append_report_rows(os, s.step, tag, s.per_basis, s.total, rep.closed_form,
                         s.drift);
    }
  } else {
    for (const auto &s : rep.steps)
      os << "step " << s.step << " total=" << fmt_human(s.total)
         << " drift=" << fmt_num(s.drift) << "\n";
    os << "max drift : " << fmt_num(rep.max_drift) << "\n";
    os << "result    : " << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(opt, os.str());
  return pass ? 0 : 1;
}

int cmd_distribute(const Options &opt) {
  const QState st = load_qstate(opt.state_path);
  if (qstate_num_qubits(st) != 2)
    throw std::invalid_argument("distribute: requires a two-qubit state");
  const DensityMatrix rho = qstate_density(st);
  const DistributionResult d = information_distribution(rho);
  const double total = closed_form_total(rho);

  std::ostringstream os;
  os << header_line("distribute", opt, 2);
  if (opt.format == "csv") {
    os << "individual_1,individual_2,joint,total_bits\n"
       << fmt_num(d.individual_1) << ',' << fmt_num(d.individual_2) << ','
       << fmt_num(d.joint) << ',' << fmt_num(total) << "\n";
  } else {
    os << "individual_1 : " << fmt_human(d.individual_1) << " bits\n"
       << "individual_2 : " << fmt_human(d.individual_2) << " bits\n"
       << "joint        : " << fmt_human(d.joint) << " bits\n"
       << "total        : " << fmt_human(total) << " bits\n";
  }
  emit(opt, os.str());
  return 0;
}

int cmd_mub(const Options &opt) {
  const MubSet set = set_for(opt.k, opt);
  const MubValidationReport rep = validate_mub(set, opt.tol);

  std::ostringstream os;
  os << header_line("mub", opt, opt.k);
  os << to_text(set);
  os << rep.summary() << "\n";
  emit(opt, os.str());
  return rep.pass ? 0 : 1;
}

int cmd_mzi(Options opt) {
  opt.trials = opt.mzi_samples;
  const QState st = load_qstate(opt.state_path);
  if (qstate_num_qubits(st) != 1)
    throw std::invalid_argument("mzi: requires a single-qubit state");
  const MziSweepTable table = phi_sweep(qstate_density(st), opt.trials);

  std::ostringstream os;
  os << header_line("mzi", opt, 1);
  if (opt.format == "csv") {
    os << sweep_to_csv(table);
  } else {
    for (const auto &r : table.rows)
      os << "phi=" << fmt_human(r.phi) << " p_upper=(" << fmt_human(r.p_upper_a)
         << ", " << fmt_human(r.p_upper_b) << ", " << fmt_human(r.p_upper_c)
         << ") I=(" << fmt_human(r.i_a) << ", " << fmt_human(r.i_b) << ", "
         << fmt_human(r.i_c) << ") I_total=" << fmt_human(r.i_total) << "\n";
    os << "I_total spread : " << fmt_num(table.max_total_spread) << "\n";
  }
  emit(opt, os.str());
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"operational information over complete complementary measurement sets"};
  app.require_subcommand(1);

  Options opt;

  auto *info = app.add_subcommand(
      "info", "total information of a state over its complementary set");
  info->add_option("--state", opt.state_path, "QSTATE file")->required();
  info->add_option("--phi", opt.phi, "triple direction angle (k=1)");
  info->add_option("--phi1", opt.phi1, "particle-1 angle (k=2)");
  info->add_option("--phi2", opt.phi2, "particle-2 angle (k=2)");
  add_common_flags(info, opt);

  auto *mub = app.add_subcommand("mub", "construct and validate a complete MUB set");
  mub->add_option("--k", opt.k, "qubit count (1, 2 or 3)")->required();
  mub->add_option("--phi", opt.phi, "triple direction angle (k=1)");
  mub->add_option("--phi1", opt.phi1, "particle-1 angle (k=2)");
  mub->add_option("--phi2", opt.phi2, "particle-2 angle (k=2)");
  add_common_flags(mub, opt);

  auto *inv = app.add_subcommand(
      "invariance", "total information under random rotations of the set");
  inv->add_option("--state", opt.state_path, "QSTATE file")->required();
  inv->add_option("--trials", opt.trials, "number of random set choices")
      ->check(CLI::PositiveNumber);
  add_common_flags(inv, opt);

  auto *con = app.add_subcommand(
      "conserve", "total information along seeded random unitary evolution");
  con->add_option("--state", opt.state_path, "QSTATE file")->required();
  con->add_option("--phi", opt.phi, "triple direction angle (k=1)");
  con->add_option("--phi1", opt.phi1, "particle-1 angle (k=2)");
  con->add_option("--phi2", opt.phi2, "particle-2 angle (k=2)");
  con->add_option("--trials", opt.trials, "number of evolution steps")
      ->check(CLI::PositiveNumber);
  add_common_flags(con, opt);

  auto *dis = app.add_subcommand(
      "distribute", "individual vs joint information of a two-qubit state");
  dis->add_option("--state", opt.state_path, "QSTATE file")->required();
  add_common_flags(dis, opt);

  auto *mzi = app.add_subcommand(
      "mzi", "Mach-Zehnder phase sweep of a single-qubit state");
  mzi->add_option("--state", opt.state_path, "QSTATE file")->required();
  mzi->add_option("--trials", opt.mzi_samples, "number of phase samples")
      ->check(CLI::PositiveNumber);
  add_common_flags(mzi, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  // human output for single reports, csv for tables, unless overridden
  if (opt.format.empty())
    opt.format = (inv->parsed() || con->parsed() || mzi->parsed()) ? "csv" : "human";

  try {
    if (info->parsed())
      return cmd_info(opt);
    if (mub->parsed())
      return cmd_mub(opt);
    if (inv->parsed())
      return cmd_invariance(opt);
    if (con->parsed())
      return cmd_conserve(opt);
    if (dis->parsed())
      return cmd_distribute(opt);
    if (mzi->parsed())
      return cmd_mzi(opt);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
