#include "arrcoh/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrcoh/dcp_model.hpp"
#include "arrcoh/lattice_io.hpp"
#include "arrcoh/presentations.hpp"
#include "arrcoh/verify.hpp"

namespace arrcoh {

namespace {

struct RunConfig {
  std::string input;
  std::string builtin;
  std::string format = "json";
  int dcp_degree = 0;
  bool integral = false;
  std::size_t max_atoms = 8;
  std::uint64_t seed = 1;
  // kequal
  int n = 0, k = 0;
  std::optional<int> ell;
  bool full_report = false;
  int max_n = 7;
};

LabeledLattice load(const RunConfig& c) {
  if (c.input.empty() == c.builtin.empty()) throw ValidationError("give exactly one of --input and --builtin");
  return c.input.empty() ? builtin_lattice(c.builtin) : read_lattice_file(c.input);
}

std::string source_name(const RunConfig& c) { return c.input.empty() ? "builtin:" + c.builtin : c.input; }

// kequal:N:K with K ≥ 3 and no ℓ: the rank-split table applies.
std::optional<std::pair<int, int>> kequal_params(const RunConfig& c) {
  if (c.builtin.rfind("kequal:", 0) != 0) return std::nullopt;
  int n = 0, k = 0;
  char tail = 0;
  if (std::sscanf(c.builtin.c_str(), "kequal:%d:%d%c", &n, &k, &tail) != 2 || k < 3) return std::nullopt;
  return std::make_pair(n, k);
}

nlohmann::json components_json(const LabeledLattice& l) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, d] : component_dims_cm(l))
    out.push_back({{"element", key.first}, {"name", l.element_name(key.first)}, {"q", key.second}, {"dim", d}});
  return out;
}

nlohmann::json table_json(const std::vector<KequalRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"dim_u", r.dim_u}, {"size", r.size}, {"p", r.p}, {"rank", r.rank}, {"s", r.s},
                   {"n_sigma", r.n_sigma}, {"q", r.q}, {"dim", r.dim}});
  return out;
}

nlohmann::json integral_json(const std::vector<IntegralDegree>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& d : v) {
    std::vector<std::string> torsion;
    for (const auto& t : d.torsion) torsion.push_back(t.get_str());
    out.push_back({{"q", d.q}, {"free_rank", d.free_rank}, {"torsion", torsion}});
  }
  return out;
}

void emit(std::ostream& out, const RunConfig& c, const nlohmann::json& j, const std::string& tsv) {
  if (c.format == "tsv")
    out << tsv;
  else
    out << j.dump(2) << '\n';
}

int cmd_betti(const RunConfig& c, std::ostream& out) {
  const auto l = load(c);
  const auto gm = betti_gm(l), cm = betti_cm(l);
  nlohmann::json j = {{"input", source_name(c)},
                      {"abstract_input", l.abstract_input()},
                      {"elements", l.size()},
                      {"betti_gm", betti_to_json(gm)},
                      {"betti_cm", betti_to_json(cm)},
                      {"poincare", cm},
                      {"components", components_json(l)}};
  std::ostringstream tsv;
  tsv << "q\tgm\tcm\n";
  for (std::size_t q = 0; q < cm.size(); ++q) tsv << q << '\t' << gm[q] << '\t' << cm[q] << '\n';
  if (auto nk = kequal_params(c)) {
    KequalOptions opt;
    opt.ring_checks = false;
    opt.max_n = std::max(opt.max_n, nk->first);
    opt.max_atoms = c.max_atoms;
    auto rep = kequal_analysis(nk->first, nk->second, opt);
    j["kequal_table"] = table_json(rep.table);
    tsv << kequal_to_tsv(rep);
  }
  if (c.integral) {
    auto integ = integral_betti_experimental(l);
    j["integral_experimental"] = integral_json(integ);
    for (const auto& d : integ) {
      tsv << "integral\t" << d.q << '\t' << d.free_rank;
      for (const auto& t : d.torsion) tsv << '\t' << t.get_str();
      tsv << '\n';
    }
  }
  emit(out, c, j, tsv.str());
  if (gm != cm) throw InvariantError("betti: GM and CM Betti numbers differ");
  return kExitOk;
}

int cmd_ring(const RunConfig& c, std::ostream& out) {
  const auto l = load(c);
  GradedRing ring(l);
  nlohmann::json j = ring_to_json(ring);
  j["input"] = source_name(c);
  j["abstract_input"] = l.abstract_input();
  std::ostringstream tsv;
  const auto b = ring.betti();
  tsv << "q\tdim\n";
  for (std::size_t q = 0; q < b.size(); ++q) tsv << q << '\t' << b[q] << '\n';
  tsv << "q1\tq2\timage_rank\n";
  for (const auto& [qq, r] : product_image_ranks(ring)) tsv << qq.first << '\t' << qq.second << '\t' << r << '\n';
  tsv << "i\tj\tk\tcoeff\n";
  for (const auto& [ij, v] : ring.products())
    for (const auto& [k, x] : v.entries()) tsv << ij.first << '\t' << ij.second << '\t' << k << '\t' << to_string(x) << '\n';
  if (c.integral) j["integral_experimental"] = integral_json(integral_betti_experimental(l));
  emit(out, c, j, tsv.str());
  return kExitOk;
}

std::string checks_tsv(const std::vector<Check>& checks) {
  std::ostringstream tsv;
  tsv << "check\tok\tcases\tdetail\n";
  for (const auto& ch : checks) tsv << ch.name << '\t' << (ch.ok ? "ok" : "FAIL") << '\t' << ch.cases << '\t' << ch.detail << '\n';
  return tsv.str();
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto l = load(c);
  VerifyOptions opt;
  opt.dcp_degree = c.dcp_degree;
  opt.seed = c.seed;
  auto rep = verify_all(l, opt);
  nlohmann::json j = verify_to_json(rep);
  j["input"] = source_name(c);
  emit(out, c, j, checks_tsv(rep.checks));
  return rep.ok() ? kExitOk : kExitInvariant;
}

int cmd_dcp(const RunConfig& c, std::ostream& out) {
  if (c.dcp_degree < 2) throw ValidationError("dcp-check needs --max-degree D with D >= 2");
  const auto l = load(c);
  auto rep = dcp_check(l, c.dcp_degree);
  nlohmann::json checks = nlohmann::json::array();
  std::vector<Check> rows;
  for (const auto& ch : rep.checks) {
    checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
    Check row;
    row.name = ch.name;
    row.ok = ch.ok;
    row.cases = 1;
    row.detail = ch.detail;
    rows.push_back(row);
  }
  nlohmann::json j = {{"input", source_name(c)},
                      {"max_degree", rep.max_degree},
                      {"slice_dims", rep.slice_dims},
                      {"basic_counts", rep.basic_counts},
                      {"m_cohomology", rep.m_cohomology},
                      {"cm_cohomology", rep.cm_cohomology},
                      {"checks", checks},
                      {"ok", rep.ok()}};
  std::ostringstream tsv;
  tsv << "degree\tslice_dim\tbasic_count\n";
  for (std::size_t d = 0; d < rep.slice_dims.size(); ++d)
    tsv << d << '\t' << rep.slice_dims[d] << '\t' << rep.basic_counts[d] << '\n';
  tsv << "q\tH_M\tH_CM\n";
  for (std::size_t q = 0; q < rep.m_cohomology.size(); ++q)
    tsv << q << '\t' << rep.m_cohomology[q] << '\t' << rep.cm_cohomology[q] << '\n';
  tsv << checks_tsv(rows);
  emit(out, c, j, tsv.str());
  return rep.ok() ? kExitOk : kExitInvariant;
}

int cmd_present(const RunConfig& c, std::ostream& out) {
  const auto l = load(c);
  auto rep = geometric_presentation(l, c.max_atoms);
  nlohmann::json j = presentation_to_json(rep);
  j["input"] = source_name(c);
  std::ostringstream tsv;
  tsv << "generators\t" << rep.generators << "\nlinear_relations\t" << rep.linear_relations
      << "\nmultiplicative_relations\t" << rep.multiplicative_relations << "\nfailed_relations\t"
      << rep.failed_relations << "\nindependence_agrees\t" << (rep.independence_agrees ? "yes" : "no") << '\n';
  tsv << "q\tpresentation\tmoebius\tring\n";
  for (std::size_t q = 0; q < rep.betti_ring.size(); ++q)
    tsv << q << '\t' << rep.betti_presentation[q] << '\t' << rep.betti_moebius[q] << '\t' << rep.betti_ring[q] << '\n';
  emit(out, c, j, tsv.str());
  return rep.ok() ? kExitOk : kExitInvariant;
}

int cmd_kequal(const RunConfig& c, std::ostream& out) {
  KequalOptions opt;
  opt.full_report = c.full_report;
  opt.max_n = c.max_n;
  opt.max_atoms = c.max_atoms;
  if (c.ell) opt.ells = {0, *c.ell};
  if (c.ell && *c.ell == 0) opt.ells = {0};
  auto rep = kequal_analysis(c.n, c.k, opt);
  emit(out, c, kequal_to_json(rep), kequal_to_tsv(rep));
  return rep.ok() ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Cohomology rings of subspace arrangement complements", "arrcoh"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", c.input, "lattice or arrangement JSON file");
    auto* bi = sub->add_option("--builtin", c.builtin, "oneline, boolean:N, braid:N, kequal:N:K[:ELL]");
    in->excludes(bi);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--max-atoms", c.max_atoms, "cap on independent atom set size");
    sub->add_option("--seed", c.seed, "seed for sampled sweeps");
  };

  auto* betti = app.add_subcommand("betti", "Betti numbers, GM and CM");
  add_input(betti);
  add_common(betti);
  betti->add_flag("--integral", c.integral, "EXPERIMENTAL integral ranks and torsion");

  auto* ring = app.add_subcommand("ring", "cohomology ring with structure constants");
  add_input(ring);
  add_common(ring);
  ring->add_flag("--integral", c.integral, "EXPERIMENTAL integral ranks and torsion");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_input(verify);
  add_common(verify);
  verify->add_option("--dcp-degree", c.dcp_degree, "also run the DCP checks up to this degree");

  auto* dcp = app.add_subcommand("dcp-check", "truncated De Concini-Procesi model checks");
  add_input(dcp);
  add_common(dcp);
  dcp->add_option("--max-degree,--dcp-degree", c.dcp_degree, "truncation degree D >= 2")->required();

  auto* present = app.add_subcommand("present", "explicit presentations");
  present->require_subcommand(1);
  auto* geometric = present->add_subcommand("geometric", "generators and relations of a geometric lattice");
  add_input(geometric);
  add_common(geometric);

  auto* kequal = app.add_subcommand("kequal", "analysis of the k-equal lattice");
  kequal->add_option("--n", c.n)->required();
  kequal->add_option("--k", c.k)->required();
  kequal->add_option("--ell", c.ell, "also check spanning on this recursion lattice");
  kequal->add_flag("--full-report", c.full_report, "include the pairing surjectivity check");
  kequal->add_option("--max-n", c.max_n, "cap on n");
  add_common(kequal);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (betti->parsed()) return cmd_betti(c, out);
    if (ring->parsed()) return cmd_ring(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (dcp->parsed()) return cmd_dcp(c, out);
    if (geometric->parsed()) return cmd_present(c, out);
    if (kequal->parsed()) return cmd_kequal(c, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitValidation;
}

}  // namespace arrcoh
