#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jumploci/decomposition.hpp"
#include "jumploci/io.hpp"
#include "jumploci/report.hpp"

namespace {

using jumploci::IoError;
using ordered = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct FieldGuard {
  std::string expected;  // empty: accept whatever the files declare

  void check(jumploci::Field actual, const std::string& what) const {
    if (!expected.empty() && jumploci::field_name(actual) != expected)
      throw IoError(what + " declares field '" + jumploci::field_name(actual) +
                    "' but --field " + expected + " was requested");
  }
};

ordered poly_json(const jumploci::MultiPoly& p) {
  ordered cell = ordered::array();
  for (const auto& [e, c] : p.terms()) {
    ordered exps = ordered::array();
    for (unsigned x : e) exps.push_back(x);
    std::ostringstream re;
    re << c.re();
    if (c.im() == 0) {
      cell.push_back(ordered::array({exps, ordered(re.str())}));
    } else {
      std::ostringstream im;
      im << c.im();
      cell.push_back(ordered::array({exps, ordered::array({re.str(), im.str()})}));
    }
  }
  return cell;
}

/* Emits the report on stdout, the human summary and wall time on stderr;
   timing stays out of stdout so reruns are byte-identical. */
int finish_report(jumploci::VerificationReport rep,
                  const std::vector<std::pair<std::string, std::string>>& input_files,
                  std::chrono::steady_clock::time_point started) {
  for (const auto& [name, path] : input_files)
    rep.inputs.emplace_back(name, jumploci::file_hash(path));
  std::cout << jumploci::report_json(rep);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << jumploci::report_summary(rep);
  std::cerr << "wall_time_ms: " << elapsed.count() << "\n";
  return rep.pass() ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomology jump loci toolkit: arrangements, flat connections, "
               "group representations"};
  app.require_subcommand(1);
  // global flags may trail the subcommand arguments
  app.fallthrough();

  FieldGuard field;
  app.add_option("--field", field.expected, "expected scalar field of all inputs")
      ->check(CLI::IsMember({"rational", "gaussian"}));

  // os
  auto* cmd_os = app.add_subcommand("os", "Orlik-Solomon algebra of an arrangement");
  std::string os_arr, os_out;
  cmd_os->add_option("--arr", os_arr, "arrangement file")->required();
  cmd_os->add_option("--out", os_out, "write the algebra here instead of stdout");

  // multinets
  auto* cmd_nets = app.add_subcommand("multinets", "enumerate multinets on an arrangement");
  std::string nets_arr, nets_out;
  std::size_t nets_k = 3;
  unsigned nets_mult = 1;
  cmd_nets->add_option("--arr", nets_arr, "arrangement file")->required();
  cmd_nets->add_option("--k", nets_k, "number of classes (3 or 4)");
  cmd_nets->add_option("--max-mult", nets_mult, "multiplicity bound (1 or 2)");
  cmd_nets->add_option("--out", nets_out, "write the list here instead of stdout");

  // verify decomposition | hirsch
  auto* cmd_verify = app.add_subcommand("verify", "run a seeded verification suite");
  cmd_verify->require_subcommand(1);

  auto* cmd_dec = cmd_verify->add_subcommand(
      "decomposition", "flat/resonance decomposition over an arrangement");
  std::string dec_arr, dec_lie = "sl2", dec_rep = "adjoint", dec_nets;
  std::size_t dec_samples = 100;
  std::uint64_t dec_seed = 7;
  std::size_t dec_k = 3;
  unsigned dec_mult = 1;
  cmd_dec->add_option("--arr", dec_arr, "arrangement file")->required();
  cmd_dec->add_option("--lie", dec_lie, "Lie algebra preset")
      ->check(CLI::IsMember({"sl2", "borel2"}));
  cmd_dec->add_option("--rep", dec_rep, "Lie representation preset")
      ->check(CLI::IsMember({"adjoint", "standard"}));
  cmd_dec->add_option("--samples", dec_samples, "samples per check");
  cmd_dec->add_option("--seed", dec_seed, "PRNG seed");
  cmd_dec->add_option("--multinets", dec_nets,
                      "use this multinet file instead of enumerating");
  cmd_dec->add_option("--k", dec_k, "classes for enumeration");
  cmd_dec->add_option("--max-mult", dec_mult, "multiplicity bound for enumeration");

  auto* cmd_hirsch = cmd_verify->add_subcommand(
      "hirsch", "degree-1 extension decomposition over a zero-differential base");
  std::string hi_base, hi_tau, hi_lie = "sl2", hi_rep = "adjoint";
  std::size_t hi_samples = 100;
  std::uint64_t hi_seed = 7;
  cmd_hirsch->add_option("--base", hi_base, "base algebra file")->required();
  cmd_hirsch->add_option("--tau", hi_tau, "extension data file")->required();
  cmd_hirsch->add_option("--lie", hi_lie, "Lie algebra preset")
      ->check(CLI::IsMember({"sl2", "borel2"}));
  cmd_hirsch->add_option("--rep", hi_rep, "Lie representation preset")
      ->check(CLI::IsMember({"adjoint", "standard"}));
  cmd_hirsch->add_option("--samples", hi_samples, "samples per check");
  cmd_hirsch->add_option("--seed", hi_seed, "PRNG seed");

  // twisted-h
  auto* cmd_th = app.add_subcommand("twisted-h",
                                    "twisted cohomology of a presentation 2-complex");
  std::string th_pres, th_rep;
  int th_degree = 1;
  cmd_th->add_option("--pres", th_pres, "presentation file")->required();
  cmd_th->add_option("--rep", th_rep, "representation file")->required();
  cmd_th->add_option("--degree", th_degree, "cohomological degree")
      ->check(CLI::Range(0, 2));

  // mc check | equations | lift | gauge
  auto* cmd_mc = app.add_subcommand("mc", "Maurer-Cartan utilities");
  cmd_mc->require_subcommand(1);

  std::string mc_alg, mc_lie = "sl2", mc_ring, mc_omega, mc_alpha;
  unsigned mc_order = 1;
  auto* mc_check_cmd = cmd_mc->add_subcommand("check", "is the connection flat?");
  mc_check_cmd->add_option("--alg", mc_alg, "algebra file")->required();
  mc_check_cmd->add_option("--lie", mc_lie, "Lie preset or file");
  mc_check_cmd->add_option("--omega", mc_omega, "connection file")->required();

  auto* mc_eq_cmd = cmd_mc->add_subcommand("equations", "flatness equations");
  mc_eq_cmd->add_option("--alg", mc_alg, "algebra file")->required();
  mc_eq_cmd->add_option("--lie", mc_lie, "Lie preset or file");

  auto* mc_lift_cmd = cmd_mc->add_subcommand(
      "lift", "extend a connection flat mod m^k to one flat mod m^(k+1)");
  mc_lift_cmd->add_option("--alg", mc_alg, "algebra file")->required();
  mc_lift_cmd->add_option("--lie", mc_lie, "Lie preset or file");
  mc_lift_cmd->add_option("--ring", mc_ring, "truncated ring file")->required();
  mc_lift_cmd->add_option("--omega", mc_omega, "polynomial connection file")->required();
  mc_lift_cmd->add_option("--order", mc_order, "order k of the lift step")->required();

  auto* mc_gauge_cmd = cmd_mc->add_subcommand("gauge", "apply a gauge transformation");
  mc_gauge_cmd->add_option("--alg", mc_alg, "algebra file")->required();
  mc_gauge_cmd->add_option("--lie", mc_lie, "Lie preset or file");
  mc_gauge_cmd->add_option("--ring", mc_ring, "truncated ring file")->required();
  mc_gauge_cmd->add_option("--alpha", mc_alpha, "gauge element file")->required();
  mc_gauge_cmd->add_option("--omega", mc_omega, "polynomial connection file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    if (*cmd_os) {
      jumploci::Arrangement arr = jumploci::load_arrangement(os_arr);
      field.check(arr.field, os_arr);
      jumploci::Cdga a = jumploci::os_algebra(arr);
      std::string text = jumploci::cdga_to_json(a);
      if (os_out.empty())
        std::cout << text;
      else
        jumploci::save_cdga(a, os_out);
      std::cerr << "b1=" << jumploci::cohomology_dim(a, 1)
                << " b2=" << jumploci::cohomology_dim(a, 2) << " (degree 2 truncated)\n";
      return kExitPass;
    }
    if (*cmd_nets) {
      jumploci::Arrangement arr = jumploci::load_arrangement(nets_arr);
      field.check(arr.field, nets_arr);
      auto nets = jumploci::multinet_enumerate(arr, nets_k, nets_mult);
      std::string text = jumploci::multinets_to_json(arr, nets);
      if (nets_out.empty())
        std::cout << text;
      else {
        std::ofstream out(nets_out);
        out << text;
      }
      std::cerr << "multinets: " << nets.size() << "\n";
      return kExitPass;
    }
    if (*cmd_dec) {
      jumploci::Arrangement arr = jumploci::load_arrangement(dec_arr);
      field.check(arr.field, dec_arr);
      std::vector<jumploci::Multinet> nets;
      std::vector<std::pair<std::string, std::string>> inputs = {{"arr", dec_arr}};
      if (dec_nets.empty()) {
        nets = jumploci::multinet_enumerate(arr, dec_k, dec_mult);
      } else {
        nets = jumploci::load_multinets(arr, dec_nets);
        inputs.emplace_back("multinets", dec_nets);
      }
      auto rep = jumploci::verify_arrangement_decomposition(arr, nets, dec_lie, dec_rep,
                                                            dec_samples, dec_seed);
      return finish_report(std::move(rep), inputs, started);
    }
    if (*cmd_hirsch) {
      jumploci::Cdga base = jumploci::load_cdga(hi_base);
      field.check(base.field, hi_base);
      jumploci::HirschData tau = jumploci::load_hirsch(base, hi_tau);
      auto rep = jumploci::verify_hirsch(base, tau, hi_lie, hi_rep, hi_samples, hi_seed);
      return finish_report(std::move(rep), {{"base", hi_base}, {"tau", hi_tau}}, started);
    }
    if (*cmd_th) {
      jumploci::GroupPresentation p = jumploci::load_presentation(th_pres);
      jumploci::Representation rho = jumploci::load_group_rep(p, th_rep);
      std::cout << jumploci::twisted_h(p, rho, th_degree) << "\n";
      return kExitPass;
    }
    if (*mc_check_cmd) {
      jumploci::Cdga a = jumploci::load_cdga(mc_alg);
      field.check(a.field, mc_alg);
      jumploci::LieAlgebra g = jumploci::lie_from_arg(mc_lie);
      jumploci::FlatConnection omega = jumploci::load_flat_connection(mc_omega);
      bool flat = jumploci::mc_check(a, g, omega);
      ordered out;
      out["command"] = "mc-check";
      out["flat"] = flat;
      std::cout << out.dump(2) << "\n";
      return flat ? kExitPass : kExitVerifyFail;
    }
    if (*mc_eq_cmd) {
      jumploci::Cdga a = jumploci::load_cdga(mc_alg);
      field.check(a.field, mc_alg);
      jumploci::LieAlgebra g = jumploci::lie_from_arg(mc_lie);
      ordered out;
      out["command"] = "mc-equations";
      out["variables"] = jumploci::mc_variables(a, g);
      out["equations"] = ordered::array();
      for (const auto& e : jumploci::mc_equations(a, g)) out["equations"].push_back(e.str());
      std::cout << out.dump(2) << "\n";
      return kExitPass;
    }
    if (*mc_lift_cmd) {
      jumploci::Cdga a = jumploci::load_cdga(mc_alg);
      field.check(a.field, mc_alg);
      jumploci::LieAlgebra g = jumploci::lie_from_arg(mc_lie);
      jumploci::TruncatedRing ring = jumploci::load_ring(mc_ring);
      jumploci::ArtinConnection omega = jumploci::load_artin_connection(ring, mc_omega);
      jumploci::LiftResult lift = jumploci::mc_lift(a, g, ring, omega, mc_order);
      ordered out;
      out["command"] = "mc-lift";
      out["lifted"] = lift.lifted;
      if (lift.lifted) {
        out["lift"] = ordered::array();
        for (const auto& row : lift.lift.grid) {
          ordered r = ordered::array();
          for (const auto& cell : row) r.push_back(poly_json(cell));
          out["lift"].push_back(std::move(r));
        }
      } else {
        out["obstruction"] = lift.obstruction_str;
      }
      std::cout << out.dump(2) << "\n";
      return lift.lifted ? kExitPass : kExitVerifyFail;
    }
    if (*mc_gauge_cmd) {
      jumploci::Cdga a = jumploci::load_cdga(mc_alg);
      field.check(a.field, mc_alg);
      jumploci::LieAlgebra g = jumploci::lie_from_arg(mc_lie);
      jumploci::TruncatedRing ring = jumploci::load_ring(mc_ring);
      jumploci::GaugeElement alpha = jumploci::load_gauge_element(ring, mc_alpha);
      jumploci::ArtinConnection omega = jumploci::load_artin_connection(ring, mc_omega);
      jumploci::ArtinConnection moved = jumploci::gauge_act(a, g, ring, alpha, omega);
      ordered out;
      out["command"] = "mc-gauge";
      out["result"] = ordered::array();
      for (const auto& row : moved.grid) {
        ordered r = ordered::array();
        for (const auto& cell : row) r.push_back(poly_json(cell));
        out["result"].push_back(std::move(r));
      }
      std::cout << out.dump(2) << "\n";
      return kExitPass;
    }
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitInputError;
}
