#include "psh/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "psh/graded.hpp"
#include "psh/restricted.hpp"
#include "psh/serialize.hpp"
#include "psh/wreath.hpp"

namespace psh {

std::string JobSpec::key() const {
  std::ostringstream os;
  os << check;
  for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
  return os.str();
}

bool JobOutcome::ok() const {
  if (error) return false;
  if (spec.expect == "info") return result.informational;
  return result.status() == "pass";
}

namespace {

int get_int(const JobSpec& s, const std::string& k, int fallback = -1) {
  auto it = s.params.find(k);
  if (it == s.params.end()) {
    if (fallback >= 0) return fallback;
    throw InputError("job " + s.check + ": missing parameter '" + k + "'");
  }
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw InputError("job " + s.check + ": parameter '" + k + "' is not an integer");
  }
}

std::string get_str(const JobSpec& s, const std::string& k, const std::string& fb = "") {
  auto it = s.params.find(k);
  if (it == s.params.end()) {
    if (!fb.empty()) return fb;
    throw InputError("job " + s.check + ": missing parameter '" + k + "'");
  }
  return it->second;
}

GroupPtr get_group(const JobSpec& s, const std::string& k = "group") {
  std::string name = get_str(s, k);
  try {
    if (name.rfind("file:", 0) == 0) return load_group_file(name.substr(5));
    return catalog_group(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

SubgroupEmbedding get_subgroup(const JobSpec& s, const GroupPtr& g,
                               const std::string& k = "subgroup") {
  try {
    return resolve_subgroup(g, get_str(s, k));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// ---- criterion 1: the symmetric-function core ----

CheckResult run_schur_core(const JobSpec& s) {
  CheckResult r;
  r.name = "schur-core";
  const int dim_n = get_int(s, "dims", 8);
  const int hopf_deg = get_int(s, "hopf", 5);
  const int antipode_deg = get_int(s, "antipode", 6);

  Int fact = 1;
  for (int n = 1; n <= dim_n; ++n) {
    fact *= n;
    Int total = 0;
    for (const auto& lam : partitions_of(n)) {
      Int d = schur_dimension(lam);
      total += d * d;
    }
    ++r.checked;
    if (total != fact) {
      r.fail("sum of squared dimensions in degree " + std::to_string(n) + " is " +
             total.str() + ", not " + fact.str());
      return r;
    }
  }

  for (int n = 2; n <= hopf_deg; ++n) {
    for (int a = 1; a < n; ++a) {
      for (const auto& mu : partitions_of(a)) {
        for (const auto& nu : partitions_of(n - a)) {
          ++r.checked;
          auto smu = SchurVector::basis(mu);
          auto snu = SchurVector::basis(nu);
          if (comul(mul(smu, snu)) != tensor_mul(comul(smu), comul(snu))) {
            r.fail("Hopf axiom fails at " + mu.to_string() + " * " + nu.to_string());
            return r;
          }
        }
      }
    }
  }
  for (int n = 1; n <= hopf_deg; ++n) {
    for (const auto& lam : partitions_of(n)) {
      GradedVector d = comul(SchurVector::basis(lam));
      for (int a = 0; a <= n; ++a)
        for (const auto& mu : partitions_of(a))
          for (const auto& nu : partitions_of(n - a)) {
            ++r.checked;
            Int lhs = inner(mul(SchurVector::basis(mu), SchurVector::basis(nu)),
                            SchurVector::basis(lam));
            if (lhs != d.coeff({mu, nu})) {
              r.fail("mul/comul adjointness fails at <" + mu.to_string() + "*" +
                     nu.to_string() + ", " + lam.to_string() + ">");
              return r;
            }
          }
    }
  }
  for (int n = 1; n <= antipode_deg; ++n) {
    for (const auto& lam : partitions_of(n)) {
      ++r.checked;
      SchurVector acc;
      GradedVector d = comul(SchurVector::basis(lam));
      for (const auto& [t, c] : d.terms()) {
        SchurVector prod = mul(SchurVector::basis(t[0]), antipode(SchurVector::basis(t[1])));
        prod *= c;
        acc += prod;
      }
      if (!acc.is_zero()) {
        r.fail("antipode identity fails at " + lam.to_string());
        return r;
      }
    }
  }
  return r;
}

// ---- criterion 2: the Psi-calculus ----

std::vector<PartitionTuple> tuples_up_to(int arity, int maxdeg) {
  std::vector<PartitionTuple> out;
  PartitionTuple cur(arity);
  std::function<void(int, int)> rec = [&](int slot, int budget) {
    if (slot == arity) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= budget; ++a)
      for (const auto& lam : partitions_of(a)) {
        cur[slot] = lam;
        rec(slot + 1, budget - a);
      }
  };
  rec(0, maxdeg);
  return out;
}

CheckResult run_psi_calculus(const JobSpec& s) {
  CheckResult r;
  r.name = "psi-calculus";
  const int instances = get_int(s, "instances", 20);
  const int maxdeg = get_int(s, "maxdeg", 4);
  std::mt19937 rng(get_int(s, "seed", 20250810));
  auto random_matrix = [&](int l, int k) {
    HopfMatrix m(l, k, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < k; ++j) m.m[i][j] = int(rng() % 4);
    return m;
  };

  for (int trial = 0; trial < instances && r.pass; ++trial) {
    const int l = 1 + int(rng() % 3), k = 1 + int(rng() % 3), mid = 1 + int(rng() % 3);
    HopfMatrix M = random_matrix(l, k);
    HopfMatrix M2 = random_matrix(l, k);
    HopfMatrix N = random_matrix(k, mid);
    auto k_tuples = tuples_up_to(k, maxdeg);
    auto l_tuples = tuples_up_to(l, maxdeg);
    auto m_tuples = tuples_up_to(mid, maxdeg);

    // (1) (Psi^M)* = Psi^{M^T} through the pairing
    for (const auto& u : k_tuples) {
      GradedVector mu_img = psi_matrix(M, GradedVector::basis(u));
      for (const auto& w : l_tuples) {
        if (tuple_degree(u) != tuple_degree(w)) continue;
        ++r.checked;
        Int lhs = tensor_inner(mu_img, GradedVector::basis(w));
        Int rhs = tensor_inner(GradedVector::basis(u),
                               psi_matrix(M.transpose(), GradedVector::basis(w)));
        if (lhs != rhs) {
          r.fail("(Psi^M)* != Psi^{M^T} at instance " + std::to_string(trial));
          break;
        }
      }
      if (!r.pass) break;
    }
    if (!r.pass) break;

    // (2) Psi^M Psi^N = Psi^{MN}
    for (const auto& u : m_tuples) {
      ++r.checked;
      if (psi_matrix(M, psi_matrix(N, GradedVector::basis(u))) !=
          psi_matrix(M * N, GradedVector::basis(u))) {
        r.fail("Psi^M Psi^N != Psi^{MN} at instance " + std::to_string(trial));
        break;
      }
    }
    if (!r.pass) break;

    // (3) mu_l (Psi^{M1} (x) Psi^{M2}) mu_k* = Psi^{M1+M2}
    for (const auto& u : k_tuples) {
      ++r.checked;
      GradedVector split = tensor_comul_iter(GradedVector::basis(u), 2);
      GradedVector acc(l);
      for (const auto& [t, c] : split.terms()) {
        PartitionTuple t1(t.begin(), t.begin() + k), t2(t.begin() + k, t.end());
        GradedVector prod = tensor_mul(psi_matrix(M, GradedVector::basis(t1)),
                                       psi_matrix(M2, GradedVector::basis(t2)));
        prod *= c;
        acc += prod;
      }
      if (acc != psi_matrix(M + M2, GradedVector::basis(u))) {
        r.fail("sum identity fails at instance " + std::to_string(trial));
        break;
      }
    }
    if (!r.pass) break;

    // (4) Psi^{nI} is the Hopf power of the tensor algebra
    const int n_pow = int(rng() % 3);
    HopfMatrix nid = HopfMatrix::identity(k);
    for (auto& row : nid.m)
      for (auto& e : row) e *= n_pow;
    for (const auto& u : k_tuples) {
      ++r.checked;
      if (psi_matrix(nid, GradedVector::basis(u)) !=
          tensor_hopf_power(n_pow, GradedVector::basis(u))) {
        r.fail("Psi^{nI} != tensor Hopf power at instance " + std::to_string(trial));
        break;
      }
    }
  }

  // Prop 5 on R itself
  for (int k = 0; k <= 3 && r.pass; ++k)
    for (int l = 0; l <= 3 && r.pass; ++l)
      for (int n = 0; n <= maxdeg && r.pass; ++n)
        for (const auto& lam : partitions_of(n)) {
          ++r.checked;
          auto sl = SchurVector::basis(lam);
          if (hopf_power(k, hopf_power(l, sl)) != hopf_power(k * l, sl)) {
            r.fail("Psi^k Psi^l != Psi^{kl}");
            break;
          }
          SchurVector acc;
          GradedVector d = comul(sl);
          for (const auto& [t, c] : d.terms()) {
            SchurVector prod = mul(hopf_power(k, SchurVector::basis(t[0])),
                                   hopf_power(l, SchurVector::basis(t[1])));
            prod *= c;
            acc += prod;
          }
          if (acc != hopf_power(k + l, sl)) {
            r.fail("mul(Psi^k (x) Psi^l)comul != Psi^{k+l}");
            break;
          }
        }
  return r;
}

// ---- the mhg job ----

CheckResult run_mhg(const JobSpec& s) {
  CheckResult r;
  auto g = get_group(s);
  auto emb = get_subgroup(s, g);
  r.name = "mhg(" + emb.sub->name() + " in " + g->name() + ")";
  auto ht = character_table(emb.sub);
  auto gt = character_table(g);
  IntMatrix m = restriction_matrix(ht, gt, emb);
  r.checked = m.rows * m.cols;
  r.notes.push_back(m.to_string());
  auto it = s.params.find("expect-matrix");
  if (it != s.params.end()) {
    // rows separated by ';', entries by ','
    IntMatrix expect(m.rows, m.cols);
    std::stringstream rows(it->second);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
      std::stringstream cells(row);
      std::string cell;
      int j = 0;
      while (std::getline(cells, cell, ',')) {
        if (i >= m.rows || j >= m.cols) throw InputError("expect-matrix shape mismatch");
        expect.at(i, j) = std::stoll(cell);
        ++j;
      }
      if (j != m.cols) throw InputError("expect-matrix shape mismatch");
      ++i;
    }
    if (i != m.rows) throw InputError("expect-matrix shape mismatch");
    if (!(m == expect))
      r.fail("restriction matrix differs from the expected one:\n" + m.to_string());
  }
  return r;
}

CheckResult run_guard_stats(const JobSpec&) {
  CheckResult r;
  r.name = "guard-stats";
  GuardStats st = guard_stats();
  r.checked = st.count;
  r.notes.push_back("rounded quantities: " + std::to_string(st.count));
  r.notes.push_back("max deviation (nano-units): " +
                    std::to_string((long long)std::llround(st.max_deviation * 1e9)));
  if (st.max_deviation > kIntegralityTol)
    r.fail("guard saw a deviation above 1e-6");  // unreachable: the guard throws first
  return r;
}

using JobFn = std::function<CheckResult(const JobSpec&)>;

const std::map<std::string, JobFn>& registry() {
  static const std::map<std::string, JobFn> reg = {
      {"schur-core", run_schur_core},
      {"psi-calculus", run_psi_calculus},
      {"power-law",
       [](const JobSpec& s) { return verify_power_law(get_int(s, "m"), get_int(s, "n")); }},
      {"theorem20",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return verify_theorem20(get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"theorem16",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return verify_theorem16(get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"theorem21",
       [](const JobSpec& s) {
         auto g = get_group(s);
         auto emb = get_subgroup(s, g);
         return verify_theorem21(character_table(emb.sub), character_table(g), emb);
       }},
      {"prop18",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return verify_prop18(get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"corollary22",
       [](const JobSpec& s) { return verify_corollary22(get_group(s), get_int(s, "cutoff")); }},
      {"prop12",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return verify_prop12_wreath(get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"theorem13",
       [](const JobSpec& s) {
         if (get_str(s, "side", "wreath") == "tensor")
           return verify_theorem13_tensor(get_group(s), get_int(s, "cutoff"));
         auto g = get_group(s);
         return verify_theorem13_wreath(get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"prop15",
       [](const JobSpec& s) {
         auto g = get_group(s);
         auto emb = get_subgroup(s, g);
         const int n = get_int(s, "n");
         CheckResult all;
         all.name = "prop15(" + emb.sub->name() + " in " + g->name() + ", n=" +
                    std::to_string(n) + ")";
         for (int p = 0; p <= n; ++p)
           for (int rr = 0; rr <= n; ++rr)
             all.merge(verify_prop15(emb, p, n - p, rr, n - rr));
         return all;
       }},
      {"theorem28",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return verify_theorem28(g, get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"appendix-props",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return verify_appendix_props(g, get_subgroup(s, g), get_int(s, "cutoff"));
       }},
      {"corollary30",
       [](const JobSpec& s) { return verify_corollary30(get_group(s), get_int(s, "cutoff")); }},
      {"hopf-defect",
       [](const JobSpec& s) {
         auto g = get_group(s);
         return measure_hopf_defect(g, get_subgroup(s, g), get_int(s, "cutoff", 2));
       }},
      {"phi-product",
       [](const JobSpec& s) {
         return verify_phi_g_product_compat(get_group(s), get_int(s, "cutoff"));
       }},
      {"mhg", run_mhg},
      {"guard-stats", run_guard_stats},
  };
  return reg;
}

}  // namespace

std::vector<std::string> known_checks() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

namespace {

// --reflection m p n sugar: G(m,p,n) is G_n(Z/m, pZ/m), so it expands to
// group=Zm, subgroup=multiples of p, cutoff=n when those are absent.
JobSpec expand_reflection(JobSpec spec) {
  auto it = spec.params.find("reflection");
  if (it == spec.params.end()) return spec;
  int m = 0, p = 0, n = 0;
  if (std::sscanf(it->second.c_str(), "%d,%d,%d", &m, &p, &n) != 3)
    throw InputError("reflection parameter must be m,p,n");
  if (m < 1 || p < 1 || m % p != 0)
    throw InputError("reflection: p must divide m");
  spec.params["group"] = "Z" + std::to_string(m);
  std::string elems = "elems:0";
  for (int x = p; x < m; x += p) elems += "," + std::to_string(x);
  spec.params["subgroup"] = elems;
  if (!spec.params.count("cutoff")) spec.params["cutoff"] = std::to_string(n);
  return spec;
}

}  // namespace

CheckResult run_check(const JobSpec& spec) {
  auto it = registry().find(spec.check);
  if (it == registry().end()) throw InputError("unknown check: " + spec.check);
  return it->second(expand_reflection(spec));
}

std::vector<JobSpec> parse_suite(const std::string& text) {
  std::vector<JobSpec> jobs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "suite") continue;  // optional name line
    if (first != "job")
      throw InputError("suite line " + std::to_string(lineno) + ": expected 'job'");
    JobSpec spec;
    if (!(ls >> spec.check))
      throw InputError("suite line " + std::to_string(lineno) + ": missing check name");
    std::string kv;
    while (ls >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw InputError("suite line " + std::to_string(lineno) + ": expected key=value");
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      if (key == "expect")
        spec.expect = value;
      else
        spec.params[key] = value;
    }
    if (spec.expect != "pass" && spec.expect != "info")
      throw InputError("suite line " + std::to_string(lineno) + ": expect must be pass|info");
    jobs.push_back(std::move(spec));
  }
  return jobs;
}

std::vector<JobSpec> load_suite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open suite file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_suite(ss.str());
}

bool SuiteReport::all_ok() const {
  for (const auto& o : outcomes)
    if (!o.ok()) return false;
  return true;
}

std::string SuiteReport::to_text(bool include_wall) const {
  std::ostringstream os;
  for (const auto& o : outcomes) {
    os << "job " << o.spec.key() << " status=" << (o.error ? "error" : o.result.status())
       << " expected=" << o.spec.expect << " checked=" << o.result.checked
       << " ok=" << (o.ok() ? "yes" : "no");
    if (!o.result.witness.empty()) {
      std::string w = o.result.witness;
      for (auto& ch : w)
        if (ch == '\n') ch = ' ';
      os << " witness=\"" << w << '"';
    }
    if (o.error) os << " error=\"" << o.error_text << '"';
    os << '\n';
    for (const auto& note : o.result.notes) {
      std::istringstream ns(note);
      std::string nl;
      while (std::getline(ns, nl)) os << "  note " << nl << '\n';
    }
  }
  os << "summary jobs=" << outcomes.size() << " ok=" << (all_ok() ? "yes" : "no")
     << " rounding_count=" << rounding_count << " rounding_max_nano=" << rounding_max_nano
     << '\n';
  if (include_wall) os << "wall_seconds " << wall_seconds << '\n';
  return os.str();
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os << "job,status,expected,checked,ok\n";
  for (const auto& o : outcomes)
    os << '"' << o.spec.key() << "\"," << (o.error ? "error" : o.result.status()) << ','
       << o.spec.expect << ',' << o.result.checked << ',' << (o.ok() ? "yes" : "no")
       << '\n';
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json out;
  out["jobs"] = nlohmann::json::array();
  for (const auto& o : outcomes) {
    nlohmann::json j;
    j["check"] = o.spec.check;
    j["params"] = o.spec.params;
    j["expected"] = o.spec.expect;
    j["status"] = o.error ? "error" : o.result.status();
    j["checked"] = o.result.checked;
    j["witness"] = o.error ? o.error_text : o.result.witness;
    j["notes"] = o.result.notes;
    j["ok"] = o.ok();
    out["jobs"].push_back(std::move(j));
  }
  out["rounding_count"] = rounding_count;
  out["rounding_max_nano"] = rounding_max_nano;
  out["ok"] = all_ok();
  out["wall_seconds"] = wall_seconds;  // the one nondeterministic field
  return out.dump(2);
}

SuiteReport run_suite(const std::vector<JobSpec>& jobs, int threads) {
  SuiteReport report;
  report.outcomes.resize(jobs.size());
  const auto t0 = std::chrono::steady_clock::now();
  // guard-stats jobs observe the global rounding accounting, so they form a
  // barrier: they run strictly after everything else
  std::vector<size_t> parallel_ids, barrier_ids;
  for (size_t i = 0; i < jobs.size(); ++i)
    (jobs[i].check == "guard-stats" ? barrier_ids : parallel_ids).push_back(i);
  std::atomic<size_t> next{0};
  auto run_one = [&](size_t i) {
    JobOutcome& o = report.outcomes[i];
    o.spec = jobs[i];
    const auto s0 = std::chrono::steady_clock::now();
    try {
      o.result = run_check(jobs[i]);
    } catch (const InputError& e) {
      o.error = true;
      o.error_text = e.what();
    } catch (const std::exception& e) {
      o.result.name = jobs[i].check;
      o.result.fail(std::string("exception: ") + e.what());
    }
    o.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
  };
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= parallel_ids.size()) return;
      run_one(parallel_ids[i]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (size_t i : barrier_ids) run_one(i);
  std::sort(report.outcomes.begin(), report.outcomes.end(),
            [](const JobOutcome& a, const JobOutcome& b) { return a.spec.key() < b.spec.key(); });
  GuardStats st = guard_stats();
  report.rounding_count = st.count;
  report.rounding_max_nano = (long long)std::llround(st.max_deviation * 1e9);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // input errors surface as exceptions for the caller to map to exit code 2
  for (const auto& o : report.outcomes)
    if (o.error) throw InputError(o.spec.key() + ": " + o.error_text);
  return report;
}

std::map<int, std::vector<JobSpec>> acceptance_criteria() {
  auto J = [](const std::string& check,
              std::initializer_list<std::pair<std::string, std::string>> kv,
              const std::string& expect = "pass") {
    JobSpec s;
    s.check = check;
    for (auto& [k, v] : kv) s.params[k] = v;
    s.expect = expect;
    return s;
  };
  std::map<int, std::vector<JobSpec>> out;
  out[1] = {J("schur-core", {})};
  out[2] = {J("psi-calculus", {})};
  out[3] = {J("power-law", {{"m", "2"}, {"n", "4"}}), J("power-law", {{"m", "3"}, {"n", "4"}})};
  out[4] = {J("theorem20", {{"group", "Z2"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("theorem20", {{"group", "Z3"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("theorem20", {{"group", "S3"}, {"subgroup", "1"}, {"cutoff", "2"}}),
            J("theorem20", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
            J("theorem20", {{"group", "S3"}, {"subgroup", "A3"}, {"cutoff", "2"}}),
            J("theorem20", {{"group", "S3"}, {"subgroup", "Z2"}, {"cutoff", "2"}})};
  out[5] = {J("theorem16", {{"group", "Z2"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("theorem16", {{"group", "Z3"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("theorem16", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
            J("theorem16", {{"group", "Z2"}, {"subgroup", "self"}, {"cutoff", "3"}}),
            J("theorem16", {{"group", "Z3"}, {"subgroup", "self"}, {"cutoff", "2"}})};
  out[6] = [&] {
    std::vector<JobSpec> jobs;
    for (const auto& name : catalog_names())
      jobs.push_back(J("theorem21", {{"group", name}, {"subgroup", "1"}}));
    jobs.push_back(J("theorem21", {{"group", "Z4"}, {"subgroup", "Z2"}}));
    jobs.push_back(J("theorem21", {{"group", "Q8"}, {"subgroup", "center"}}));
    jobs.push_back(J("theorem21", {{"group", "S3"}, {"subgroup", "A3"}}, "info"));
    return jobs;
  }();
  out[7] = {J("prop18", {{"group", "Z2"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("prop18", {{"group", "Z3"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("prop18", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
            J("prop18", {{"group", "Q8"}, {"subgroup", "center"}, {"cutoff", "1"}})};
  out[8] = {J("corollary22", {{"group", "Z2"}, {"cutoff", "3"}}),
            J("corollary22", {{"group", "Z3"}, {"cutoff", "2"}}),
            J("corollary22", {{"group", "S3"}, {"cutoff", "2"}})};
  out[9] = {J("prop12", {{"group", "Z2"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("prop12", {{"group", "Z3"}, {"subgroup", "1"}, {"cutoff", "3"}}),
            J("prop12", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
            J("prop12", {{"group", "Z2"}, {"subgroup", "self"}, {"cutoff", "3"}})};
  out[10] = {J("theorem13", {{"group", "Z2"}, {"subgroup", "1"}, {"cutoff", "3"}}),
             J("theorem13", {{"group", "Z3"}, {"subgroup", "1"}, {"cutoff", "3"}}),
             J("theorem13", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
             J("theorem13", {{"group", "Z2"}, {"subgroup", "self"}, {"cutoff", "3"}}),
             J("theorem13", {{"group", "Z2"}, {"cutoff", "3"}, {"side", "tensor"}}),
             J("theorem13", {{"group", "Z3"}, {"cutoff", "2"}, {"side", "tensor"}}),
             J("theorem13", {{"group", "S3"}, {"cutoff", "2"}, {"side", "tensor"}})};
  out[11] = {J("prop15", {{"group", "Z2"}, {"subgroup", "1"}, {"n", "0"}}),
             J("prop15", {{"group", "Z2"}, {"subgroup", "1"}, {"n", "1"}}),
             J("prop15", {{"group", "Z2"}, {"subgroup", "1"}, {"n", "2"}}),
             J("prop15", {{"group", "Z4"}, {"subgroup", "Z2"}, {"n", "1"}}),
             J("prop15", {{"group", "Z4"}, {"subgroup", "Z2"}, {"n", "2"}})};
  out[12] = {J("theorem28", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
             J("theorem28", {{"group", "Z2"}, {"subgroup", "1"}, {"cutoff", "3"}}),
             J("theorem28", {{"group", "Z6"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
             J("theorem28", {{"group", "Z6"}, {"subgroup", "Z3"}, {"cutoff", "2"}}),
             J("appendix-props", {{"group", "Z4"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
             J("appendix-props", {{"group", "Z6"}, {"subgroup", "Z2"}, {"cutoff", "2"}}),
             J("appendix-props", {{"group", "Z6"}, {"subgroup", "Z3"}, {"cutoff", "2"}}),
             J("corollary30", {{"group", "Z2"}, {"cutoff", "3"}}),
             J("corollary30", {{"group", "Z3"}, {"cutoff", "2"}})};
  out[13] = {J("guard-stats", {})};
  return out;
}

}  // namespace psh
