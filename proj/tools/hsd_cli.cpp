// Command-line surface over the library: every subcommand is a thin
// adapter over one library operation. JSON on stdout (CSV with
// --format csv where supported), diagnostics on stderr.
// Exit codes: 0 pass, 1 computation error or failed verification,
// 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "hsd/json_io.hpp"
#include "hsd/levi.hpp"
#include "hsd/verify.hpp"

using namespace hsd;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 20240901;
  long samples = 0;
  double tol = kDefaultTol;
  int truncation = 200;
  std::string format = "json";
  int threads = 0;
};

std::string region_name(HartogsRegion r) {
  switch (r) {
    case HartogsRegion::Interior: return "interior";
    case HartogsRegion::Boundary0: return "boundary0";
    case HartogsRegion::BoundaryBase: return "boundary_base";
    case HartogsRegion::Exterior: return "exterior";
  }
  return "?";
}

std::string region_name(Region r) {
  switch (r) {
    case Region::Interior: return "interior";
    case Region::Boundary: return "boundary";
    case Region::Exterior: return "exterior";
  }
  return "?";
}

Json report_to_json(const SuiteReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j = {{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}};
    if (c.statistical) {
      j["estimate"] = c.estimate;
      j["stderr"] = c.se;
      j["target"] = c.target;
    }
    checks.push_back(j);
  }
  return {{"suite", rep.suite}, {"pass", rep.pass}, {"wall_ms", rep.wall_ms},
          {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational kit for Hartogs domains over homogeneous Siegel domains"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "generator seed");
  app.add_option("--samples", g.samples, "sample count override");
  app.add_option("--tol", g.tol, "membership/check tolerance");
  app.add_option("--truncation", g.truncation, "series truncation per index");
  app.add_option("--format", g.format, "output format: json or csv");
  app.add_option("--threads", g.threads, "worker threads (affects speed only)");

  std::string domain_arg, point_arg, p_arg, q_arg, map_arg, stratum = "b0", suite_name;
  std::vector<std::string> maps_arg;
  long pairs = 100, count = 100;

  auto* domain_show = app.add_subcommand("domain", "domain descriptor utilities")
                          ->add_subcommand("show", "normalize and echo a descriptor");
  domain_show->add_option("--domain", domain_arg, "descriptor (inline JSON or file)")->required();

  auto* member = app.add_subcommand("member", "membership classification");
  member->add_option("--domain", domain_arg)->required();
  member->add_option("--point", point_arg)->required();

  auto* kernel = app.add_subcommand("kernel", "Bergman kernel evaluation");
  auto* kernel_eval_cmd = kernel->add_subcommand("eval", "K(p, q)");
  kernel_eval_cmd->add_option("--domain", domain_arg)->required();
  kernel_eval_cmd->add_option("--p", p_arg)->required();
  kernel_eval_cmd->add_option("--q", q_arg, "defaults to p");
  auto* kernel_jet_cmd = kernel->add_subcommand("jet", "value, gradient, Hessian of log K");
  kernel_jet_cmd->add_option("--domain", domain_arg)->required();
  kernel_jet_cmd->add_option("--point", point_arg)->required();
  auto* kernel_cmp = kernel->add_subcommand("compare", "operator formula vs series oracle");
  kernel_cmp->add_option("--domain", domain_arg)->required();
  kernel_cmp->add_option("--pairs", pairs);

  auto* aut = app.add_subcommand("aut", "automorphisms");
  auto* aut_apply = aut->add_subcommand("apply", "apply a map to a point");
  aut_apply->add_option("--map", map_arg)->required();
  aut_apply->add_option("--point", point_arg)->required();
  auto* aut_compose = aut->add_subcommand("compose", "compose induced maps (left first)");
  aut_compose->add_option("--maps", maps_arg)->expected(2, -1);
  auto* aut_inverse = aut->add_subcommand("inverse", "invert an induced map");
  aut_inverse->add_option("--map", map_arg)->required();
  auto* aut_jac = aut->add_subcommand("jacobian", "block structure at a fixed point");
  aut_jac->add_option("--map", map_arg)->required();
  aut_jac->add_option("--point", point_arg)->required();

  auto* shilov = app.add_subcommand("shilov", "Shilov boundary")
                     ->add_subcommand("check", "membership in the Shilov boundary");
  shilov->add_option("--domain", domain_arg)->required();
  shilov->add_option("--point", point_arg)->required();

  auto* levi = app.add_subcommand("levi", "Levi form certificates");
  auto* levi_check = levi->add_subcommand("check", "certificate at one boundary point");
  levi_check->add_option("--domain", domain_arg)->required();
  levi_check->add_option("--point", point_arg)->required();
  auto* levi_batch_cmd = levi->add_subcommand("batch", "certificates at sampled points");
  levi_batch_cmd->add_option("--domain", domain_arg)->required();
  levi_batch_cmd->add_option("--count", count);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "one of the named suites")->required();

  auto* sample = app.add_subcommand("sample", "samplers")
                     ->add_subcommand("boundary", "boundary stratum samples");
  sample->add_option("--domain", domain_arg)->required();
  sample->add_option("--stratum", stratum, "b0 or base");
  sample->add_option("--count", count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  par::set_threads(g.threads);

  try {
    if (domain_show->parsed()) {
      Json j = load_json_arg(domain_arg);
      if (is_hartogs_descriptor(j))
        std::cout << hartogs_to_json(hartogs_from_json(j)).dump() << "\n";
      else
        std::cout << domain_to_json(*domain_from_json(j)).dump() << "\n";
      return 0;
    }

    if (member->parsed()) {
      Json dj = load_json_arg(domain_arg);
      Json pj = load_json_arg(point_arg);
      if (is_hartogs_descriptor(dj)) {
        HartogsDomain H = hartogs_from_json(dj);
        HartogsPoint p = point_from_json(pj, H.base->dim(), H.N);
        HartogsClass c = hartogs_contains(H, p, g.tol);
        Json out = {{"status", region_name(c.status)}};
        if (c.h_defined) out["h"] = c.h;
        std::cout << out.dump() << "\n";
      } else {
        DomainPtr D = domain_from_json(dj);
        HartogsPoint p = point_from_json(pj, D->dim(), 0);
        Classification c = D->contains(p.z, g.tol);
        std::cout << Json{{"status", region_name(c.status)}, {"defect", c.defect}}.dump()
                  << "\n";
      }
      return 0;
    }

    if (kernel_eval_cmd->parsed()) {
      Json dj = load_json_arg(domain_arg);
      if (is_hartogs_descriptor(dj)) {
        HartogsDomain H = hartogs_from_json(dj);
        HartogsKernel kernel(H);
        HartogsPoint p = point_from_json(load_json_arg(p_arg), H.base->dim(), H.N);
        HartogsPoint q = q_arg.empty()
                             ? p
                             : point_from_json(load_json_arg(q_arg), H.base->dim(), H.N);
        std::cout << Json{{"value", to_json(kernel.eval(p, q))}}.dump() << "\n";
      } else {
        DomainPtr D = domain_from_json(dj);
        KernelModel model(*D);
        CVector p = point_from_json(load_json_arg(p_arg), D->dim(), 0).z;
        CVector q = q_arg.empty() ? p : point_from_json(load_json_arg(q_arg), D->dim(), 0).z;
        std::cout << Json{{"value", to_json(model.eval(p, q))}}.dump() << "\n";
      }
      return 0;
    }

    if (kernel_jet_cmd->parsed()) {
      DomainPtr D = domain_from_json(load_json_arg(domain_arg));
      CVector p = point_from_json(load_json_arg(point_arg), D->dim(), 0).z;
      KernelJet jet = kernel_jet(*D, p);
      std::cout << Json{{"value", jet.value},
                        {"grad", to_json(jet.grad)},
                        {"hess", to_json(jet.hess)}}
                       .dump()
                << "\n";
      return 0;
    }

    if (kernel_cmp->parsed()) {
      Json dj = load_json_arg(domain_arg);
      require(is_hartogs_descriptor(dj), "kernel compare expects a Hartogs descriptor");
      HartogsDomain H = hartogs_from_json(dj);
      HartogsKernel kernel(H);
      double worst = 0.0;
      for (long i = 0; i < pairs; ++i) {
        Rng rng(g.seed, 50000 + static_cast<std::uint64_t>(i));
        HartogsPoint p = sample_hartogs_interior(H, rng, 0.8);
        HartogsPoint q = sample_hartogs_interior(H, rng, 0.8);
        p.z *= 0.75;
        q.z *= 0.75;
        SeriesResult sr = hartogs_kernel_series(H, p, q, g.truncation);
        if (!sr.converged) {
          worst = 1.0;
          continue;
        }
        worst = std::max(worst, std::abs(kernel.eval(p, q) - sr.value) / std::abs(sr.value));
      }
      bool pass = worst <= 1e-8;
      std::cout << Json{{"pairs", pairs}, {"max_relative_discrepancy", worst}, {"pass", pass}}
                       .dump()
                << "\n";
      return pass ? 0 : 1;
    }

    if (aut_apply->parsed()) {
      Json mj = load_json_arg(map_arg);
      Json pj = load_json_arg(point_arg);
      if (mj.contains("kind") && mj["kind"] == "induced") {
        InducedAut Phi = induced_from_json(mj);
        HartogsPoint p = point_from_json(pj, Phi.phi->src()->dim(), Phi.U.rows());
        std::cout << point_to_json(apply(Phi, p)).dump() << "\n";
      } else {
        BaseMapPtr phi = map_from_json(mj);
        HartogsPoint p = point_from_json(pj, phi->src()->dim(), -1);
        CVector out = phi->apply(p.z);
        std::cout << Json{{"z", to_json(out)}}.dump() << "\n";
      }
      return 0;
    }

    if (aut_compose->parsed()) {
      InducedAut acc = induced_from_json(load_json_arg(maps_arg[0]));
      double defect = 0.0;
      for (std::size_t i = 1; i < maps_arg.size(); ++i) {
        InducedAut next = induced_from_json(load_json_arg(maps_arg[i]));
        ComposeResult r = compose(next, acc);
        acc = r.map;
        defect = std::max(defect, std::abs(r.phase_defect));
      }
      Json out = induced_to_json(acc);
      std::cout << Json{{"map", out}, {"max_phase_defect", defect}}.dump() << "\n";
      return 0;
    }

    if (aut_inverse->parsed()) {
      InducedAut Phi = induced_from_json(load_json_arg(map_arg));
      std::cout << induced_to_json(inverse(Phi)).dump() << "\n";
      return 0;
    }

    if (aut_jac->parsed()) {
      InducedAut Phi = induced_from_json(load_json_arg(map_arg));
      HartogsPoint p = point_from_json(load_json_arg(point_arg), Phi.phi->src()->dim(),
                                       Phi.U.rows());
      JacobianBlockReport rep = jacobian_block(Phi, p);
      std::cout << Json{{"jacobian", to_json(rep.full)},
                        {"f2_z_block_norm", rep.f2_z_norm},
                        {"f2_zeta_unitary_defect", rep.f2_zeta_unitary_defect},
                        {"fd_consistency", rep.fd_consistency}}
                       .dump()
                << "\n";
      return 0;
    }

    if (shilov->parsed()) {
      DomainPtr D = domain_from_json(load_json_arg(domain_arg));
      require(D->kind() == Domain::Kind::Siegel, "shilov check expects a Siegel domain");
      const auto& S = D->siegel_data();
      HartogsPoint p = point_from_json(load_json_arg(point_arg), D->dim(), 0);
      ShilovResult r = shilov_membership(S, unpack_siegel(S, p.z), g.tol);
      std::cout << Json{{"on_shilov", r.on_shilov}, {"residual", r.residual}}.dump() << "\n";
      return 0;
    }

    if (levi_check->parsed()) {
      HartogsDomain H = hartogs_from_json(load_json_arg(domain_arg));
      HartogsPoint p = point_from_json(load_json_arg(point_arg), H.base->dim(), H.N);
      LeviReport rep = levi_certificate(H, p);
      std::cout << Json{{"min_eig", rep.min_eig},
                        {"fd_residual", rep.fd_residual},
                        {"closed_form_residual", rep.closed_form_residual},
                        {"strongly_pseudoconvex", rep.strongly_pseudoconvex}}
                       .dump()
                << "\n";
      return 0;
    }

    if (levi_batch_cmd->parsed()) {
      HartogsDomain H = hartogs_from_json(load_json_arg(domain_arg));
      auto reports = levi_batch(H, static_cast<int>(count), g.seed);
      if (g.format == "csv") {
        std::cout << "index,point,min_eig,fd_residual\n";
        for (std::size_t i = 0; i < reports.size(); ++i)
          std::cout << i << ",\"" << point_to_json(reports[i].point).dump() << "\","
                    << reports[i].min_eig << "," << reports[i].fd_residual << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& r : reports)
          arr.push_back({{"point", point_to_json(r.point)},
                         {"min_eig", r.min_eig},
                         {"fd_residual", r.fd_residual}});
        std::cout << arr.dump() << "\n";
      }
      bool all = true;
      for (const auto& r : reports) all = all && r.min_eig > 0.0;
      return all ? 0 : 1;
    }

    if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.suite = suite_name;
      cfg.samples = g.samples;
      cfg.seed = g.seed;
      cfg.truncation = g.truncation;
      SuiteReport rep = run_suite(cfg);
      if (g.format == "csv") {
        std::cout << "check,residual,tol,pass\n";
        for (const auto& c : rep.checks)
          std::cout << '"' << c.name << "\"," << c.residual << "," << c.tol << ","
                    << (c.pass ? 1 : 0) << "\n";
      } else {
        std::cout << report_to_json(rep).dump(2) << "\n";
      }
      return rep.pass ? 0 : 1;
    }

    if (sample->parsed()) {
      HartogsDomain H = hartogs_from_json(load_json_arg(domain_arg));
      require(stratum == "b0" || stratum == "base", "stratum must be b0 or base");
      Json arr = Json::array();
      for (long i = 0; i < count; ++i) {
        Rng rng(g.seed, static_cast<std::uint64_t>(i));
        HartogsPoint p = stratum == "b0" ? sample_hartogs_boundary0(H, rng)
                                         : sample_hartogs_boundary_base(H, rng);
        arr.push_back(point_to_json(p));
      }
      std::cout << arr.dump() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand handled\n";
  return 2;
}
