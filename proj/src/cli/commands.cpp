#include "blowup/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "blowup/checks.hpp"
#include "blowup/cli/manifest.hpp"
#include "blowup/exact/rational.hpp"
#include "blowup/period.hpp"
#include "blowup/quadrature.hpp"
#include "blowup/rank.hpp"
#include "blowup/report.hpp"
#include "blowup/sampling.hpp"
#include "blowup/weinstein.hpp"

namespace blowup::cli {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

LocalHamiltonian local_hamiltonian(const CircleLoopSpec& loop) {
  return {loop.weights, to_double(loop.C), {}};
}

int cmd_lift(const Manifest& m, const std::string& name, std::ostream& out) {
  const CircleLoopSpec& loop = m.loop(name);
  const WeinsteinValue v = lift_value_circle(loop, m.manifold);
  const PeriodLattice base = PeriodLattice::make(m.manifold.period());
  out << "loop " << loop.name << "\n";
  out << "base class " << render(v.base_value) << " in R/" << base.describe() << "\n";
  out << "lifted class " << render(v.lifted_value) << " in R/" << v.lattice.describe() << "\n";
  out << "blow-up lattice " << v.lattice.describe() << "\n";
  if (m.local_model) {
    const double rho = m.local_model->rho;
    out << "value at rho=" << fmt_double(rho) << ": " << fmt_double(v.lifted_value.eval_at(std::numbers::pi * rho * rho))
        << "\n";
  }
  return kOk;
}

int cmd_order(const Manifest& m, const std::string& name, std::ostream& out) {
  const CircleLoopSpec& loop = m.loop(name);
  const WeinsteinValue v = lift_value_circle(loop, m.manifold);
  const ClassOrder base = class_order({v.base_value, PeriodLattice::make(m.manifold.period())});
  const ClassOrder lifted = class_order(v.lifted_class());
  out << "base order " << base.str() << ", lifted order " << lifted.str() << "\n";
  out << "certificate: integer solutions (k, A, B) of k*x = A*a + B*t for x = " << render(v.lifted_value) << "\n";
  if (lifted.relations.empty()) {
    out << "  none (solution lattice is trivial)\n";
  }
  for (const auto& rel : lifted.relations) {
    out << "  (";
    for (std::size_t i = 0; i < rel.size(); ++i) {
      out << (i ? "," : "") << rel[i];
    }
    out << ")\n";
  }
  if (lifted.is_infinite()) {
    out << "no relation has k != 0\n";
  }
  return kOk;
}

int cmd_rank(const Manifest& m, std::ostream& out) {
  if (m.loops.empty()) {
    throw SchemaError("rank needs at least one loop");
  }
  const RankCertificate cert = certify_rank(m.loops, m.manifold);
  out << cert.report;
  if (!cert.report.empty() && cert.report.back() != '\n') {
    out << "\n";
  }
  return kOk;
}

int cmd_eval(const Manifest& m, const std::string& name, double rho, std::ostream& out) {
  const CircleLoopSpec& loop = m.loop(name);
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw SchemaError("weight must be positive");
  }
  const double tau = std::numbers::pi * rho * rho;
  if (m.manifold.gromov_width() && !(tau < *m.manifold.gromov_width())) {
    throw SchemaError("ball of capacity " + fmt_double(tau) + " exceeds the gromov width bound " +
                      fmt_double(*m.manifold.gromov_width()));
  }
  if (!(m.manifold.blowup_volume().eval_at(tau) > 0.0)) {
    throw SchemaError("blow-up volume V - t^n is not positive at t = " + fmt_double(tau));
  }
  const WeinsteinValue v = lift_value_circle(loop, m.manifold);
  out << "t = " << fmt_double(tau) << "\n";
  out << "base " << fmt_double(v.base_value.eval_at(tau)) << "\n";
  out << "lifted " << fmt_double(v.lifted_value.eval_at(tau)) << "\n";
  return kOk;
}

std::vector<CheckResult> tagged(std::vector<CheckResult> results, const std::string& tag) {
  for (auto& r : results) {
    r.check += ":" + tag;
  }
  return results;
}

CheckResult integral_result(std::string name, double deviation, std::size_t order, double tolerance) {
  CheckResult r;
  r.check = std::move(name);
  r.samples = order;
  r.max_deviation = deviation;
  r.tolerance = tolerance;
  r.pass = deviation <= tolerance;
  return r;
}

std::vector<CheckResult> run_checks(const Manifest& m, const std::string& which) {
  if (!m.local_model) {
    throw SchemaError("verify needs a local_model section");
  }
  std::optional<LocalModelParams> maybe;
  try {
    maybe = LocalModelParams::make(m.manifold.n(), m.local_model->rho, m.local_model->delta, m.local_model->r);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("local_model: ") + e.what());
  }
  const LocalModelParams& params = *maybe;
  const std::uint64_t seed = m.seed;
  const bool all = which == "all";
  std::vector<CheckResult> results;
  auto append = [&](std::vector<CheckResult> more) { results.insert(results.end(), more.begin(), more.end()); };

  if (all || which == "beta") {
    append(beta_profile_check(params));
  }
  for (std::size_t li = 0; li < m.loops.size(); ++li) {
    const CircleLoopSpec& loop = m.loops[li];
    const LocalHamiltonian h = local_hamiltonian(loop);
    const UnitaryLoop unitary = UnitaryLoop::diagonal(loop.weights);
    const std::uint64_t loop_seed = seed + 1000 * li;
    if (all || which == "pullback") {
      SampleRng rng(loop_seed, 0);
      const CMat psi = unitary.at(rng.uniform());
      const ChartMap map = [&](const CVec& z) -> CVec { return psi * z; };
      PullbackOptions options;
      options.seed = loop_seed;
      const PullbackResult standard = symplectic_pullback_check(map, params, options);
      options.reference = ReferenceForm::blowup;
      options.form_tolerance = 1e-4;
      const PullbackResult blowup = symplectic_pullback_check(map, params, options);
      append(tagged({standard.conjugation, standard.form, blowup.form}, loop.name));
    }
    if (all || which == "vector-field") {
      VectorFieldOptions options;
      options.seed = loop_seed;
      append(tagged({vector_field_relation_check(unitary, params, options)}, loop.name));
    }
    if (all || which == "s1") {
      const ScalarField field = [&](const CVec& z) { return h(z, 0.0); };
      std::vector<CheckResult> s1{s1_invariance_check(field, params.n(), params.r(), 500, loop_seed),
                                  near_divisor_identity_check(h, params, 1000, loop_seed)};
      for (auto& r : divisor_branch_check(h, params, 200, loop_seed)) {
        s1.push_back(r);
      }
      append(tagged(std::move(s1), loop.name));
    }
    if (all || which == "integrals") {
      QuadratureOptions options;
      options.seed = loop_seed;
      const AnnulusComparison annulus = verify_annulus_pushforward(h, params, Scheme::product_gauss, options);
      const double outside = -integrate_ball(h, params.r(), params.n(), Scheme::product_gauss, options).value;
      const NormalizedLemmaResult lemma = verify_normalized_lemma(h, params, outside, Scheme::product_gauss, options);
      append(tagged({integral_result("annulus-pushforward", annulus.relative_deviation,
                                     static_cast<std::size_t>(options.radial_order), 1e-4),
                     integral_result("normalized-lemma", lemma.relative_deviation,
                                     static_cast<std::size_t>(options.radial_order), 1e-4)},
                    loop.name));
    }
  }
  return results;
}

int cmd_verify(const Manifest& m, const std::string& which, const std::string& format, std::ostream& out) {
  const std::vector<CheckResult> results = run_checks(m, which);
  if (format == "json") {
    out << to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << format_line(r) << "\n";
    }
    out << (all_pass(results) ? "all checks passed" : "verification failed") << " (" << results.size()
        << " checks)\n";
  }
  return all_pass(results) ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weinstein morphism toolkit for one-point blow-ups", "blowup"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::string loop_name;
  std::string which = "all";
  std::string format = "text";
  double rho = 0.0;

  auto* lift = app.add_subcommand("lift", "exact lifted class of a circle loop");
  lift->add_option("manifest", manifest_path)->required();
  lift->add_option("--loop", loop_name)->required();
  auto* order = app.add_subcommand("order", "orders of the base and lifted classes");
  order->add_option("manifest", manifest_path)->required();
  order->add_option("--loop", loop_name)->required();
  auto* rank = app.add_subcommand("rank", "rank certificate for the loops of a manifest");
  rank->add_option("manifest", manifest_path)->required();
  auto* verify = app.add_subcommand("verify", "numerical checks of the local model and the integrals");
  verify->add_option("manifest", manifest_path)->required();
  verify->add_option("--check", which)
      ->check(CLI::IsMember({"beta", "pullback", "vector-field", "s1", "integrals", "all"}));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* eval = app.add_subcommand("eval", "evaluate the lifted class at a numeric weight");
  eval->add_option("manifest", manifest_path)->required();
  eval->add_option("--loop", loop_name)->required();
  eval->add_option("--rho", rho)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Manifest m = load_manifest(manifest_path);
    if (lift->parsed()) {
      return cmd_lift(m, loop_name, out);
    }
    if (order->parsed()) {
      return cmd_order(m, loop_name, out);
    }
    if (rank->parsed()) {
      return cmd_rank(m, out);
    }
    if (verify->parsed()) {
      return cmd_verify(m, which, format, out);
    }
    return cmd_eval(m, loop_name, rho, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace blowup::cli
