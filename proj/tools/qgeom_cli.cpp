// Copyright 2026 The qgeom Authors
// SPDX-License-Identifier: Apache-2.0

// qgeom command-line front end. Every command writes CSV: a header row, data
// rows, and '#'-prefixed summary lines. Units: hbar = k_B = 1; energies are in
// units of the coupling (J, t or mu).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgeom/capacity.hpp"
#include "qgeom/discord.hpp"
#include "qgeom/fermion.hpp"
#include "qgeom/measures.hpp"
#include "qgeom/thermal_xx.hpp"

using namespace qgeom;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

  void header(const std::vector<std::string>& cols) { row_strings(cols); }
  void row(const std::vector<double>& vals) {
    std::vector<std::string> s;
    for (double v : vals) s.push_back(num(v));
    row_strings(s);
  }
  void row_strings(const std::vector<std::string>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) os() << (i ? "," : "") << cols[i];
    os() << '\n';
  }
  void summary(const std::string& key, double v) { os() << "# " << key << " = " << num(v) << '\n'; }
  void summary(const std::string& key, const std::string& v) { os() << "# " << key << " = " << v << '\n'; }
  void summary(const std::string& key, const RVec& v) {
    std::string s;
    for (int i = 0; i < v.size(); ++i) s += (i ? " " : "") + num(v(i));
    summary(key, s);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> grid(double lo, double hi, int steps) {
  if (steps < 1) throw InvalidInput("--steps must be >= 1");
  if (hi < lo) throw InvalidInput("range maximum is below minimum");
  std::vector<double> g;
  if (steps == 1) return {lo};
  for (int i = 0; i < steps; ++i) g.push_back(lo + (hi - lo) * i / (steps - 1));
  return g;
}

// Common options shared by every leaf command.
struct Common {
  std::string out;
};

void add_out(CLI::App* app, Common& c) { app->add_option("--out", c.out, "output file (default: standard output)"); }

// ---- capacity

struct CapacityOpts {
  Common common;
  double mu1 = 1.0, mu2 = 1.0, mu3 = 0.0;
  int sweep = 101;
  bool isotropic = false;
  double mu = 1.0;
  std::vector<double> mu_list;
  int restarts = 50;
  std::uint64_t seed = 1;
};

int run_capacity_two_qubit(const CapacityOpts& o) {
  CouplingSpec::two_qubit(o.mu1, o.mu2, o.mu3).validate();
  if (o.sweep < 2) throw InvalidInput("--sweep-p must be >= 2");
  CsvWriter w(o.common.out);
  w.header({"p", "f_p", "gamma_E"});
  const double scale = o.mu1 + o.mu2;
  for (int i = 0; i < o.sweep; ++i) {
    const double p = 0.5 * i / (o.sweep - 1);
    w.row({p, f_rate(p), f_vn(p) * scale});
  }
  const P0Result r = find_p0();
  w.summary("p0", r.p0);
  w.summary("gamma_max", r.gamma_max * scale);
  w.summary("gamma_max_per_unit", r.gamma_max);
  return 0;
}

int run_capacity_opt(const CapacityOpts& o, SystemKind kind) {
  CouplingSpec c;
  if (o.isotropic) {
    if (!o.mu_list.empty()) throw InvalidInput("--isotropic and --mu-list are exclusive");
    c = CouplingSpec::isotropic(kind, o.mu);
  } else if (kind == SystemKind::two_qutrit) {
    c = CouplingSpec::two_qutrit(o.mu_list);
  } else {
    if (o.mu_list.size() != 9) throw InvalidInput("three-qubit --mu-list needs 9 values (AB, BC, AC)");
    const auto& m = o.mu_list;
    c = CouplingSpec::three_qubit({m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]});
  }
  if (o.restarts < 1) throw InvalidInput("--restarts must be >= 1");
  const OptimizationReport r = maximize_rate(c, o.restarts, o.seed);
  CsvWriter w(o.common.out);
  w.header({"restart", "gamma"});
  for (size_t i = 0; i < r.values.size(); ++i) w.row({static_cast<double>(i), r.values[i]});
  w.summary("best_value", r.best_value);
  w.summary("seed", std::to_string(r.seed));
  w.summary("iterations", std::to_string(r.iterations));
  w.summary("converged_restarts", std::to_string(r.converged_restarts));
  w.summary("converged", r.converged ? "true" : "false");
  if (r.isotropic) {
    w.summary("entanglement", r.entanglement);
    if (kind == SystemKind::two_qutrit) w.summary("schmidt", r.schmidt);
    if (kind == SystemKind::three_qubit) w.summary("tangle", r.tangle);
    w.summary("local_purities", r.local_purities);
  }
  RVec re(r.best_state.amp.size()), im(r.best_state.amp.size());
  for (int i = 0; i < re.size(); ++i) {
    re(i) = r.best_state.amp(i).real();
    im(i) = r.best_state.amp(i).imag();
  }
  w.summary("best_state_re", re);
  w.summary("best_state_im", im);
  return r.converged ? 0 : kExitNoConvergence;
}

// ---- hubbard

struct HubbardOpts {
  Common common;
  double lo = 1.0, hi = 100.0;
  int steps = 100;
  int modes = 4, particles = 2;
  std::string partition;
  int restarts = 20;
  std::uint64_t seed = 1;
};

int run_dimer(const HubbardOpts& o) {
  if (o.lo < 1.0) throw InvalidInput("alpha must be >= 1");
  CsvWriter w(o.common.out);
  w.header({"alpha", "E_g", "E_s", "E_vn", "E_unequal"});
  int negative = 0;
  for (double a : grid(o.lo, o.hi, o.steps)) {
    const DimerEntanglements e = dimer_entanglements(a);
    for (double v : {e.E_g, e.E_s, e.E_unequal}) negative += v < 0.0;
    w.row({a, e.E_g, e.E_s, e.E_vn, e.E_unequal});
  }
  w.summary("negative_E", std::to_string(negative));
  return 0;
}

int run_trimer(const HubbardOpts& o) {
  if (o.lo < 0.0) throw InvalidInput("beta must be >= 0");
  CsvWriter w(o.common.out);
  w.header({"beta", "E_six", "E_site3", "E_bi", "E_vn"});
  int negative = 0;
  for (double b : grid(o.lo, o.hi, o.steps)) {
    const TrimerEntanglements e = trimer_entanglements(b);
    for (double v : {e.E_six, e.E_site3, e.E_bi}) negative += v < 0.0;
    w.row({b, e.E_six, e.E_site3, e.E_bi, e.E_vn});
  }
  w.summary("negative_E", std::to_string(negative));
  return 0;
}

int run_maximize(const HubbardOpts& o) {
  if (o.modes < 2 || o.modes > 12) throw InvalidInput("--modes must lie in [2, 12]");
  if (o.particles < 0 || o.particles > o.modes) throw InvalidInput("--particles out of range");
  if (o.restarts < 1) throw InvalidInput("--restarts must be >= 1");
  const PartitionSpec part = parse_partition(o.partition, Dims(o.modes, 2));
  const NumberSector sector = number_sector(o.modes, o.particles);
  const BoundReport r = maximize_partition_entanglement(sector, part, o.restarts, o.seed);
  CsvWriter w(o.common.out);
  w.header({"restart", "E"});
  int negative = 0;
  for (size_t i = 0; i < r.values.size(); ++i) {
    negative += r.values[i] < 0.0;
    w.row({static_cast<double>(i), r.values[i]});
  }
  w.summary("E_max", r.best_value);
  w.summary("seed", std::to_string(r.seed));
  w.summary("iterations", std::to_string(r.iterations));
  w.summary("converged_restarts", std::to_string(r.converged_restarts));
  w.summary("converged", r.converged ? "true" : "false");
  w.summary("negative_E", std::to_string(negative));
  return r.converged ? 0 : kExitNoConvergence;
}

// ---- xx

struct XXOpts {
  Common common;
  double J = 1.0;
  double T = 1.5;
  double ratio = 1.0;
  bool uniform = false;
  double b1 = 0.0, b2 = 0.0;
  double lo = 0.0, hi = 3.0;
  int steps = 61;
  bool temp_set = false;
};

int run_sweep_field(const XXOpts& o) {
  CsvWriter w(o.common.out);
  w.header({"B1", "QD", "CC", "EN"});
  for (double b : grid(o.lo, o.hi, o.steps)) {
    XXParams p{o.J, b, o.uniform ? b : -o.ratio * b, o.T};
    p.validate();
    const ThermalState s = thermal_state(p);
    const QdCc q = qd_cc(s.rho);
    w.row({b, q.QD, q.CC, eof_from_concurrence(concurrence(s.rho))});
  }
  w.summary("T", o.T);
  w.summary("B2_rule", o.uniform ? std::string("B2 = B1") : "B2 = -" + num(o.ratio) + " B1");
  return 0;
}

int run_sweep_temp(const XXOpts& o) {
  CsvWriter w(o.common.out);
  w.header({"T", "QD", "CC", "EN"});
  for (double t : grid(o.lo, o.hi, o.steps)) {
    XXParams p{o.J, o.b1, o.b2, t};
    p.validate();
    const ThermalState s = thermal_state(p);
    const QdCc q = qd_cc(s.rho);
    w.row({t, q.QD, q.CC, eof_from_concurrence(concurrence(s.rho))});
  }
  w.summary("B1", o.b1);
  w.summary("B2", o.b2);
  return 0;
}

int run_monogamy(const XXOpts& o) {
  CsvWriter w(o.common.out);
  // With --temp the field is swept (B2 = -ratio B1 or B1); otherwise T is swept at --b1/--b2.
  w.header({o.temp_set ? "B1" : "T", "EN_AB", "QD_AB", "CC_AB", "S_A", "EN_AE", "QD_AE", "CC_AE",
            "identity_residual"});
  double worst = 0.0;
  for (double v : grid(o.lo, o.hi, o.steps)) {
    XXParams p = o.temp_set ? XXParams{o.J, v, o.uniform ? v : -o.ratio * v, o.T} : XXParams{o.J, o.b1, o.b2, v};
    p.validate();
    const Monogamy m = monogamy(p);
    worst = std::max(worst, std::abs(m.identity_residual));
    w.row({v, m.EN_AB, m.QD_AB, m.CC_AB, m.S_A, m.EN_AE, m.QD_AE, m.CC_AE, m.identity_residual});
  }
  w.summary("max_abs_identity_residual", worst);
  return 0;
}

// ---- discord

struct DiscordOpts {
  Common common;
  std::string state_file;
  bool bruteforce = false;
  int restarts = 200;
  std::uint64_t seed = 1;
  int m = 3;
  double lo = -1.0, hi = 1.0;
  int steps = 41;
  int which = 2;
};

int run_discord_geometric(const DiscordOpts& o) {
  const DensityMatrix rho = read_density_file(o.state_file);
  DiscordReport r = geometric_discord_mn(rho);
  if (o.bruteforce) r.D_bruteforce = bruteforce_geometric_discord(rho, o.restarts, o.seed);
  CsvWriter w(o.common.out);
  w.header({"D_formula", "D_lower_bound", "D_bruteforce"});
  w.row_strings({num(r.D_formula), num(r.D_lower_bound), r.D_bruteforce ? num(*r.D_bruteforce) : ""});
  w.summary("G_eigenvalues", r.G_eigenvalues);
  std::string idx;
  for (int i : r.chosen_eigen_indices) idx += (idx.empty() ? "" : " ") + std::to_string(i);
  w.summary("chosen_eigen_indices", idx);
  if (r.D_bruteforce) w.summary("gap_bruteforce_minus_formula", *r.D_bruteforce - r.D_formula);
  return 0;
}

int run_discord_werner(const DiscordOpts& o) {
  if (o.lo < -1.0 || o.hi > 1.0) throw InvalidInput("z must lie in [-1, 1]");
  CsvWriter w(o.common.out);
  w.header({"z", "D_closed", "D_formula", "D_lower_bound"});
  for (double z : grid(o.lo, o.hi, o.steps)) {
    const DiscordReport r = geometric_discord_mn(werner_state(o.m, z));
    w.row({z, werner_discord(o.m, z), r.D_formula, r.D_lower_bound});
  }
  w.summary("m", std::to_string(o.m));
  return 0;
}

int run_discord_examples(const DiscordOpts& o) {
  CsvWriter w(o.common.out);
  if (o.which == 2) {
    const DiscordReport r = geometric_discord_mn(from_pure(discord_example2_state()));
    w.header({"D_formula", "D_lower_bound"});
    w.row({r.D_formula, r.D_lower_bound});
    w.summary("G_diagonal", RVec(r.G.diagonal()));
    w.summary("G_eigenvalues", r.G_eigenvalues);
    return 0;
  }
  if (o.which != 3 && o.which != 4) throw InvalidInput("--which must be 2, 3 or 4");
  w.header({"p", "D_formula", "D_lower_bound"});
  for (double p : grid(0.0, 1.0, o.steps)) {
    const DensityMatrix rho = o.which == 3 ? discord_example3_state(p) : discord_example4_state(p);
    const DiscordReport r = geometric_discord_mn(rho);
    w.row({p, r.D_formula, r.D_lower_bound});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgeom: geometric entanglement, capacities, fermionic entanglement and discord (hbar = k = 1)"};
  app.require_subcommand(1);
  app.footer("Quantities are unitless. Optimizer restarts run on QGEOM_THREADS worker threads\n"
             "(default: hardware concurrency); results do not depend on the thread count.");
  std::function<int()> action;

  // capacity
  auto* cap = app.add_subcommand("capacity", "entanglement-generation rates");
  cap->require_subcommand(1);
  CapacityOpts co;
  auto* c2 = cap->add_subcommand("two-qubit", "f(p) sweep and the analytic optimum");
  c2->add_option("--mu1", co.mu1);
  c2->add_option("--mu2", co.mu2);
  c2->add_option("--mu3", co.mu3);
  c2->add_option("--sweep-p", co.sweep, "number of p points on [0, 1/2]");
  add_out(c2, co.common);
  c2->callback([&] { action = [&] { return run_capacity_two_qubit(co); }; });
  for (auto [name, kind] : {std::pair{"qutrit", SystemKind::two_qutrit}, {"three-qubit", SystemKind::three_qubit}}) {
    auto* s = cap->add_subcommand(name, "multi-start rate maximization");
    s->add_flag("--isotropic", co.isotropic, "all couplings equal to --mu");
    s->add_option("--mu", co.mu);
    s->add_option("--mu-list", co.mu_list, "explicit couplings (qutrit: 8, three-qubit: 9 as AB, BC, AC)");
    s->add_option("--restarts", co.restarts);
    s->add_option("--seed", co.seed);
    add_out(s, co.common);
    s->callback([&, kind] { action = [&, kind] { return run_capacity_opt(co, kind); }; });
  }

  // hubbard
  auto* hub = app.add_subcommand("hubbard", "fermionic mode entanglement (energies in units of t)");
  hub->require_subcommand(1);
  HubbardOpts ho, to, mo_;
  auto* dim = hub->add_subcommand("dimer", "two-site ground state versus alpha");
  dim->add_option("--alpha-min", ho.lo);
  dim->add_option("--alpha-max", ho.hi);
  dim->add_option("--steps", ho.steps);
  add_out(dim, ho.common);
  dim->callback([&] { action = [&] { return run_dimer(ho); }; });
  auto* tri = hub->add_subcommand("trimer", "three-site ring ground state versus beta = U/t");
  tri->add_option("--beta-min", to.lo)->default_val(0.0);
  tri->add_option("--beta-max", to.hi)->default_val(50.0);
  tri->add_option("--steps", to.steps)->default_val(51);
  add_out(tri, to.common);
  tri->callback([&] { action = [&] { return run_trimer(to); }; });
  auto* mx = hub->add_subcommand("maximize", "upper bound of E over a number sector");
  mx->add_option("--modes", mo_.modes)->required();
  mx->add_option("--particles", mo_.particles)->required();
  mx->add_option("--partition", mo_.partition, "e.g. 0,1;2,3 (zero-based modes)")->required();
  mx->add_option("--restarts", mo_.restarts);
  mx->add_option("--seed", mo_.seed);
  add_out(mx, mo_.common);
  mx->callback([&] { action = [&] { return run_maximize(mo_); }; });

  // xx
  auto* xx = app.add_subcommand("xx", "two-qubit XX chain in nonuniform fields (units of J)");
  xx->require_subcommand(1);
  XXOpts xo, xt, xm;
  auto* sf = xx->add_subcommand("sweep-field", "sweep B1 at fixed T");
  sf->add_option("--temp", xo.T);
  sf->add_option("--J", xo.J);
  sf->add_option("--ratio", xo.ratio, "B2 = -ratio * B1");
  sf->add_flag("--uniform", xo.uniform, "B2 = B1");
  sf->add_option("--b1-min", xo.lo);
  sf->add_option("--b1-max", xo.hi);
  sf->add_option("--steps", xo.steps);
  add_out(sf, xo.common);
  sf->callback([&] { action = [&] { return run_sweep_field(xo); }; });
  auto* st = xx->add_subcommand("sweep-temp", "sweep T at fixed fields");
  st->add_option("--J", xt.J);
  st->add_option("--b1", xt.b1);
  st->add_option("--b2", xt.b2);
  st->add_option("--t-min", xt.lo)->default_val(0.05);
  st->add_option("--t-max", xt.hi)->default_val(3.0);
  st->add_option("--steps", xt.steps);
  add_out(st, xt.common);
  st->callback([&] { action = [&] { return run_sweep_temp(xt); }; });
  auto* mo = xx->add_subcommand("monogamy", "environment quantities; --temp sweeps B1, otherwise T is swept");
  mo->add_option("--J", xm.J);
  auto* temp_opt = mo->add_option("--temp", xm.T);
  mo->add_option("--ratio", xm.ratio);
  mo->add_flag("--uniform", xm.uniform);
  mo->add_option("--b1", xm.b1);
  mo->add_option("--b2", xm.b2);
  mo->add_option("--min", xm.lo);
  mo->add_option("--max", xm.hi);
  mo->add_option("--steps", xm.steps);
  add_out(mo, xm.common);
  mo->callback([&, temp_opt] {
    xm.temp_set = temp_opt->count() > 0;
    action = [&] { return run_monogamy(xm); };
  });

  // discord
  auto* dis = app.add_subcommand("discord", "geometric discord with measurement on the first party");
  dis->require_subcommand(1);
  DiscordOpts dopt, dw_o, de_o;
  auto* dg = dis->add_subcommand("geometric", "evaluate a state from a density-matrix file");
  dg->add_option("--state-file", dopt.state_file)->required();
  dg->add_flag("--bruteforce", dopt.bruteforce);
  dg->add_option("--restarts", dopt.restarts);
  dg->add_option("--seed", dopt.seed);
  add_out(dg, dopt.common);
  dg->callback([&] { action = [&] { return run_discord_geometric(dopt); }; });
  auto* dw = dis->add_subcommand("werner", "closed form against the general formula");
  dw->add_option("--m", dw_o.m);
  dw->add_option("--z-min", dw_o.lo);
  dw->add_option("--z-max", dw_o.hi);
  dw->add_option("--steps", dw_o.steps);
  add_out(dw, dw_o.common);
  dw->callback([&] { action = [&] { return run_discord_werner(dw_o); }; });
  auto* de = dis->add_subcommand("examples", "two-qutrit worked examples");
  de->add_option("--which", de_o.which)->required();
  de->add_option("--steps", de_o.steps)->default_val(51);
  add_out(de, de_o.common);
  de->callback([&] { action = [&] { return run_discord_examples(de_o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  try {
    return action();
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNoConvergence;
  }
}
