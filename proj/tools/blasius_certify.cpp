// Command-line front end: certify the quasi-solution pipeline, run the
// matching iteration, or compare against the reference ODE solver.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "blasius/pipeline.hpp"

using namespace blasius;

namespace {

constexpr int kExitCertFailure = 2;
constexpr int kExitSoundnessAlarm = 3;

void print_sections(const nlohmann::ordered_json& rep, bool failures_only) {
  for (const auto& [section, entries] : rep.at("sections").items()) {
    bool printed_header = false;
    for (const auto& e : entries) {
      std::string status = e.at("status");
      if (failures_only && status != "fail") continue;
      if (!printed_header) {
        std::cout << "[" << section << "]\n";
        printed_header = true;
      }
      std::cout << "  " << status << "  " << e.at("name").get<std::string>();
      if (e.contains("computed") && e.at("computed").is_object()) {
        const auto& c = e.at("computed");
        if (c.contains("hi"))
          std::cout << "  computed=[" << c.at("lo").get<double>() << ", "
                    << c.at("hi").get<double>() << "]";
        else if (c.contains("value"))
          std::cout << "  computed=" << c.at("value").get<double>();
      }
      std::cout << "\n";
    }
  }
}

int finish_report(const CertReport& rep, const std::string& out_path, bool soundness_alarm) {
  if (!out_path.empty()) rep.write(out_path);
  print_sections(rep.to_json(), /*failures_only=*/true);
  std::cout << rep.summary_line() << "\n";
  if (soundness_alarm) return kExitSoundnessAlarm;
  return rep.all_certified() ? 0 : kExitCertFailure;
}

std::vector<Rational> load_cells(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open cells file " + path);
  auto j = nlohmann::json::parse(f);
  std::vector<Rational> cells;
  for (const auto& v : j) cells.push_back(Rational::parse(v.get<std::string>()));
  if (cells.size() < 2 || cells.front() != Rational(0) || cells.back() != Rational(5, 2))
    throw std::runtime_error("cells file must span [0, 5/2]");
  for (size_t i = 0; i + 1 < cells.size(); ++i)
    if (!(cells[i] < cells[i + 1])) throw std::runtime_error("cells must be strictly increasing");
  return cells;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blasius-certify: validated bounds for the Blasius similarity quasi-solution"};
  app.require_subcommand(1);

  std::string alpha_str = "0";
  std::string method = "taylor";
  std::string cells_path, out_path, csv_path, in_path;
  double tol = 1e-13;
  bool family = false, continuity = false, no_oracle = false;

  auto* certify = app.add_subcommand("certify", "run the certification pipeline");
  certify->add_option("--alpha", alpha_str, "exact rational alpha, e.g. 0 or 3/50");
  certify->add_flag("--family", family, "certify uniformly over the whole alpha interval");
  certify->add_option("--method", method, "residual method: taylor | chebyshev")
      ->check(CLI::IsMember({"taylor", "chebyshev"}));
  certify->add_option("--cells", cells_path, "JSON file with residual partition breakpoints");
  certify->add_option("--out", out_path, "write the JSON report here");
  certify->add_option("--tol", tol, "oracle tolerance for the validation section");
  certify->add_flag("--no-oracle", no_oracle, "skip the oracle validation section");

  auto* match = app.add_subcommand("match", "fixed point of the matching map");
  match->add_option("--alpha", alpha_str, "exact rational alpha");
  match->add_flag("--continuity", continuity, "iterate to 1e-14 for the C2 triple");
  match->add_option("--out", out_path, "write a JSON summary here");

  auto* compare_cmd = app.add_subcommand("compare", "oracle trajectory vs quasi-solution");
  compare_cmd->add_option("--alpha", alpha_str, "exact rational alpha");
  compare_cmd->add_option("--tol", tol, "oracle tolerance")->check(CLI::Range(1e-15, 1e-6));
  compare_cmd->add_option("--out-csv", csv_path, "dump the trajectory as CSV");
  compare_cmd->add_option("--out", out_path, "write the JSON report here");

  auto* report_cmd = app.add_subcommand("report", "summarize a previously written report");
  report_cmd->add_option("--in", in_path, "report JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify->parsed()) {
      Rational alpha = Rational::parse(alpha_str);
      if (family) {
        FamilyCertification fc = run_family_certification();
        return finish_report(make_family_report(fc), out_path, false);
      }
      if (alpha.is_zero()) {
        std::optional<std::vector<Rational>> cells;
        if (!cells_path.empty()) cells = load_cells(cells_path);
        BaseCertification bc = run_base_certification(!no_oracle, tol, cells ? &*cells : nullptr);
        ResidualMethod rm =
            method == "taylor" ? ResidualMethod::TaylorCells : ResidualMethod::ChebyshevL1;
        bool alarm = bc.deviation && bc.deviation->violations > 0;
        return finish_report(make_base_report(bc, rm), out_path, alarm);
      }
      AlphaCertification ac = run_alpha_certification(alpha, !no_oracle, tol);
      bool alarm = ac.deviation && ac.deviation->violations > 0;
      return finish_report(make_alpha_report(ac), out_path, alarm);
    }

    if (match->parsed()) {
      Rational alpha = Rational::parse(alpha_str);
      MatchState st = match_fixed_point(alpha, continuity ? 1e-14 : 1e-8);
      WallStress ws = wall_stress(st.a);
      std::cout.precision(14);
      std::cout << "alpha             = " << alpha.to_string() << "\n"
                << "iterations        = " << st.iterations
                << (st.converged ? "" : " (no convergence)") << "\n"
                << "a                 = " << st.a.mid() << "\n"
                << "b                 = " << st.b.mid() << "\n"
                << "c                 = " << st.c.mid() << "\n"
                << "residual norm     <= " << st.residual_norm.hi << "\n"
                << "wall stress       = " << ws.scaled.mid() << "  (original variables "
                << ws.original.mid() << ")\n"
                << "trust region kept = " << (st.stayed_in_trust_region ? "yes" : "no") << "\n";
      if (!out_path.empty()) {
        nlohmann::ordered_json j{{"alpha", alpha.to_string()},
                                 {"iterations", st.iterations},
                                 {"converged", st.converged},
                                 {"a", st.a.mid()},
                                 {"b", st.b.mid()},
                                 {"c", st.c.mid()},
                                 {"residual_norm_hi", st.residual_norm.hi},
                                 {"wall_stress", ws.scaled.mid()},
                                 {"wall_stress_original", ws.original.mid()}};
        std::ofstream(out_path) << j.dump(2) << "\n";
      }
      return st.converged ? 0 : kExitCertFailure;
    }

    if (compare_cmd->parsed()) {
      Rational alpha = Rational::parse(alpha_str);
      OracleTrajectory traj = integrate(alpha.to_double(), 0.0, 20.0, tol);
      if (!csv_path.empty()) traj.dump_csv(csv_path);
      CertReport rep(alpha.to_string(), "compare", "oracle");
      DeviationReport dev;
      if (alpha.is_zero()) {
        BaseCertification bc = run_base_certification(false);
        MatchTriple triple{bc.fixed_point.a, bc.fixed_point.b, bc.fixed_point.c, rho0_base()};
        dev = compare(traj, build_inner_base(), triple, bc.chain.E_sup.hi, bc.chain.E1_sup.hi,
                      bc.chain.E2_sup.hi, bc.far.e_const.hi, bc.far.de_const.hi,
                      bc.far.dde_const.hi);
      } else {
        AlphaCertification ac = run_alpha_certification(alpha, false);
        MatchTriple triple{ac.fixed_point.a, ac.fixed_point.b, ac.fixed_point.c, rho0_general()};
        dev = compare(traj, build_inner_general(alpha), triple, ac.chain.E_sup.hi,
                      ac.chain.E1_sup.hi, ac.chain.E2_sup.hi, ac.far.e_const.hi,
                      ac.far.de_const.hi, ac.far.dde_const.hi);
      }
      for (const char* s : {"residual", "coefficients", "energy", "inner_error", "far_field",
                            "matching"})
        rep.add_skipped(s, "compare_mode", "comparison runs only populate the validation section");
      rep.add_scalar("validation", "oracle.a_inf", traj.a_inf, CertReport::Status::NonRigorous);
      rep.add_scalar("validation", "oracle.max_inner_dev_F", dev.inner_max_F,
                     CertReport::Status::NonRigorous);
      rep.add_scalar("validation", "oracle.max_inner_dev_dF", dev.inner_max_dF,
                     CertReport::Status::NonRigorous);
      rep.add_scalar("validation", "oracle.max_inner_dev_ddF", dev.inner_max_ddF,
                     CertReport::Status::NonRigorous);
      rep.add_scalar("validation", "oracle.bound_violations", dev.violations,
                     dev.violations == 0 ? CertReport::Status::Pass : CertReport::Status::Fail);
      std::cout.precision(6);
      std::cout << "max inner deviations: F " << dev.inner_max_F << "  F' " << dev.inner_max_dF
                << "  F'' " << dev.inner_max_ddF << "\n"
                << "certified inner bounds: " << dev.inner_bound_F << " " << dev.inner_bound_dF
                << " " << dev.inner_bound_ddF << "\n"
                << "bound violations: " << dev.violations << "\n";
      if (!out_path.empty()) rep.write(out_path);
      return dev.violations == 0 ? 0 : kExitSoundnessAlarm;
    }

    if (report_cmd->parsed()) {
      std::ifstream f(in_path);
      if (!f) throw std::runtime_error("cannot open " + in_path);
      auto j = nlohmann::ordered_json::parse(f);
      print_sections(j, /*failures_only=*/false);
      bool certified = j.at("summary").at("certified").get<bool>();
      std::cout << (certified ? "certified" : "NOT certified") << "\n";
      return certified ? 0 : kExitCertFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertFailure;
  }
  return 0;
}
