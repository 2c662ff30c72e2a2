// pshkit: exact computations in the Schur-basis Hopf algebra, explicit finite
// group character tables, and the wreath-product verification suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "psh/character.hpp"
#include "psh/graded.hpp"
#include "psh/group.hpp"
#include "psh/hopf_matrix.hpp"
#include "psh/jobs.hpp"
#include "psh/rep_maps.hpp"
#include "psh/schur.hpp"
#include "psh/restricted.hpp"
#include "psh/serialize.hpp"

using namespace psh;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

GroupPtr group_arg(const std::string& name) {
  if (name.rfind("file:", 0) == 0) return load_group_file(name.substr(5));
  return catalog_group(name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// thrown by callbacks to signal a verification failure (exit code 1)
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_subcommands(CLI::App& app) {
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lam_{mu nu}");
  auto lr_lam = std::make_shared<std::string>();
  auto lr_mu = std::make_shared<std::string>();
  auto lr_nu = std::make_shared<std::string>();
  lr->add_option("lam", *lr_lam)->required();
  lr->add_option("mu", *lr_mu)->required();
  lr->add_option("nu", *lr_nu)->required();
  lr->callback([lr_lam, lr_mu, lr_nu] {
    std::cout << lr_coeff(parse_partition(*lr_lam), parse_partition(*lr_mu),
                          parse_partition(*lr_nu))
                     .str()
              << '\n';
  });

  auto* mulc = app.add_subcommand("mul", "product of two Schur expressions");
  auto mul_a = std::make_shared<std::string>();
  auto mul_b = std::make_shared<std::string>();
  mulc->add_option("a", *mul_a)->required();
  mulc->add_option("b", *mul_b)->required();
  mulc->callback([mul_a, mul_b] {
    std::cout << mul(parse_schur(*mul_a), parse_schur(*mul_b)).to_string() << '\n';
  });

  auto* comulc = app.add_subcommand("comul", "comultiplication of a Schur expression");
  auto comul_a = std::make_shared<std::string>();
  comulc->add_option("a", *comul_a)->required();
  comulc->callback(
      [comul_a] { std::cout << comul(parse_schur(*comul_a)).to_string() << '\n'; });

  auto* hpc = app.add_subcommand("hopf-power", "Hopf k-th power map");
  auto hp_k = std::make_shared<int>(1);
  auto hp_a = std::make_shared<std::string>();
  hpc->add_option("k", *hp_k)->required();
  hpc->add_option("a", *hp_a)->required();
  hpc->callback([hp_k, hp_a] {
    std::cout << hopf_power(*hp_k, parse_schur(*hp_a)).to_string() << '\n';
  });

  auto* pmc = app.add_subcommand("psi-matrix", "matrix Hopf map Psi^M");
  auto pm_file = std::make_shared<std::string>();
  auto pm_expr = std::make_shared<std::string>();
  pmc->add_option("-M,--matrix", *pm_file, "file with 'rows cols' then entries")
      ->required();
  pmc->add_option("expr", *pm_expr)->required();
  pmc->callback([pm_file, pm_expr] {
    HopfMatrix m = HopfMatrix::parse(read_file(*pm_file));
    std::cout << psi_matrix(m, parse_graded(*pm_expr, m.cols)).to_string() << '\n';
  });

  auto* ctc = app.add_subcommand("char-table", "character table of a group");
  auto ct_group = std::make_shared<std::string>();
  auto ct_cap = std::make_shared<int>(500);
  ctc->add_option("--group", *ct_group)->required();
  ctc->add_option("--cap", *ct_cap, "order cap (default 500)");
  ctc->callback([ct_group, ct_cap] {
    auto t = character_table(group_arg(*ct_group), *ct_cap);
    std::cout << character_table_csv(t);
  });

  auto* mhgc = app.add_subcommand("mhg", "restriction multiplicity matrix M_{H,G}");
  auto mhg_group = std::make_shared<std::string>();
  auto mhg_sub = std::make_shared<std::string>();
  mhgc->add_option("--group", *mhg_group)->required();
  mhgc->add_option("--subgroup", *mhg_sub)->required();
  mhgc->callback([mhg_group, mhg_sub] {
    auto g = group_arg(*mhg_group);
    auto emb = resolve_subgroup(g, *mhg_sub);
    std::cout << restriction_matrix(character_table(emb.sub), character_table(g), emb)
                     .to_string();
  });

  auto* ver = app.add_subcommand("verify", "run one verification check");
  auto v_check = std::make_shared<std::string>();
  auto v_group = std::make_shared<std::string>();
  auto v_sub = std::make_shared<std::string>("1");
  auto v_format = std::make_shared<std::string>("text");
  auto v_cutoff = std::make_shared<int>(2);
  auto v_n = std::make_shared<int>(2);
  auto v_m = std::make_shared<int>(2);
  auto v_refl = std::make_shared<std::vector<int>>();
  ver->add_option("check", *v_check)->required();
  ver->add_option("--group", *v_group);
  ver->add_option("--subgroup", *v_sub);
  ver->add_option("--cutoff", *v_cutoff);
  ver->add_option("--n", *v_n);
  ver->add_option("--m", *v_m);
  ver->add_option("--reflection", *v_refl, "m p n for G(m,p,n) = G_n(Z/m, pZ/m)")
      ->expected(3);
  ver->add_option("--format", *v_format)->check(CLI::IsMember({"text", "structured"}));
  ver->callback([v_check, v_group, v_sub, v_format, v_cutoff, v_n, v_m, v_refl] {
    JobSpec spec;
    spec.check = *v_check;
    if (!v_group->empty()) spec.params["group"] = *v_group;
    spec.params["subgroup"] = *v_sub;
    spec.params["cutoff"] = std::to_string(*v_cutoff);
    spec.params["n"] = std::to_string(*v_n);
    spec.params["m"] = std::to_string(*v_m);
    if (v_refl->size() == 3)
      spec.params["reflection"] = std::to_string((*v_refl)[0]) + "," +
                                  std::to_string((*v_refl)[1]) + "," +
                                  std::to_string((*v_refl)[2]);
    CheckResult r = run_check(spec);
    if (*v_format == "structured")
      std::cout << check_to_json(r) << '\n';
    else {
      std::cout << r.name << ": " << r.status() << " (checked " << r.checked << ")\n";
      if (!r.witness.empty()) std::cout << "witness: " << r.witness << '\n';
      for (const auto& note : r.notes) std::cout << "note: " << note << '\n';
    }
    if (!r.informational && !r.pass)
      throw VerificationFailure("check failed: " + r.name);
  });

  auto* rs = app.add_subcommand("run-suite", "run a suite file and emit a report");
  auto rs_config = std::make_shared<std::string>();
  auto rs_format = std::make_shared<std::string>("text");
  auto rs_out = std::make_shared<std::string>();
  auto rs_jobs = std::make_shared<int>(1);
  rs->add_option("config", *rs_config)->required();
  rs->add_option("--jobs", *rs_jobs, "concurrent jobs")->check(CLI::PositiveNumber);
  rs->add_option("--format", *rs_format)
      ->check(CLI::IsMember({"text", "csv", "structured"}));
  rs->add_option("--out", *rs_out, "write the report to a file instead of stdout");
  rs->callback([rs_config, rs_format, rs_out, rs_jobs] {
    auto jobs = load_suite_file(*rs_config);
    SuiteReport report = run_suite(jobs, *rs_jobs);
    std::string body = *rs_format == "csv"          ? report.to_csv()
                       : *rs_format == "structured" ? report.to_json() + "\n"
                                                    : report.to_text();
    if (rs_out->empty())
      std::cout << body;
    else {
      std::ofstream out(*rs_out);
      out << body;
    }
    if (!report.all_ok()) throw VerificationFailure("suite had failing jobs");
  });

  auto* rg = app.add_subcommand("reflection-group",
                                "build G(m,p,n) = G_n(Z/m, pZ/m) and print its table");
  auto rg_m = std::make_shared<int>(0);
  auto rg_p = std::make_shared<int>(0);
  auto rg_n = std::make_shared<int>(0);
  rg->add_option("m", *rg_m)->required();
  rg->add_option("p", *rg_p)->required();
  rg->add_option("n", *rg_n)->required();
  rg->callback([rg_m, rg_p, rg_n] {
    if (*rg_m < 1 || *rg_p < 1 || *rg_m % *rg_p != 0)
      throw std::invalid_argument("G(m,p,n) needs p | m");
    auto zm = cyclic_group(*rg_m);
    std::vector<int> elems;
    for (int x = 0; x < *rg_m; x += *rg_p) elems.push_back(x);
    auto emb = subgroup_from_elements(zm, elems);
    RWreath w = build_restricted(zm, emb, *rg_n);
    std::cout << "G(" << *rg_m << ',' << *rg_p << ',' << *rg_n << ") order "
              << w.group->order() << "\n";
    std::cout << character_table_csv(character_table(w.group));
  });

  auto* lsc = app.add_subcommand("checks", "list registered verification checks");
  lsc->callback([] {
    for (const auto& name : known_checks()) std::cout << name << '\n';
  });

  app.require_subcommand(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact PSH-algebra computations and wreath-product verification"};
  add_subcommands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitInputError;
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const IntegralityError& e) {
    std::cerr << "integrality guard: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return 0;
}
