#include "psh/serialize.hpp"

#include <json.hpp>

namespace psh {

using nlohmann::json;

std::string schur_to_json(const SchurVector& v) {
  json out = json::array();
  for (const auto& [lam, c] : v.terms()) {
    json rec;
    rec["partition"] = lam.parts();
    rec["coeff"] = int_to_string(c);
    out.push_back(std::move(rec));
  }
  return out.dump();
}

SchurVector schur_from_json(const std::string& text) {
  SchurVector v;
  json in = json::parse(text);
  for (const auto& rec : in) {
    std::vector<int> parts = rec.at("partition").get<std::vector<int>>();
    v.add_term(Partition(std::move(parts)), int_from_string(rec.at("coeff")));
  }
  return v;
}

namespace {

json basis_id_json(BasisId b) { return json::array({b.deg, b.idx}); }
BasisId basis_id_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json tvec_json(const TVec& v) {
  json out = json::array();
  for (const auto& [b, c] : v)
    out.push_back(json::array({b.deg, b.idx, int_to_string(c)}));
  return out;
}

TVec tvec_from(const json& j) {
  TVec out;
  for (const auto& e : j)
    add_to(out, {e.at(0).get<int>(), e.at(1).get<int>()}, int_from_string(e.at(2)));
  return out;
}

json tvec2_json(const TVec2& v) {
  json out = json::array();
  for (const auto& [p, c] : v)
    out.push_back(json::array(
        {p.first.deg, p.first.idx, p.second.deg, p.second.idx, int_to_string(c)}));
  return out;
}

TVec2 tvec2_from(const json& j) {
  TVec2 out;
  for (const auto& e : j)
    add_to(out,
           {{e.at(0).get<int>(), e.at(1).get<int>()},
            {e.at(2).get<int>(), e.at(3).get<int>()}},
           int_from_string(e.at(4)));
  return out;
}

json algebra_json(const AlgebraTable& alg) {
  json out;
  out["name"] = alg.name();
  out["cutoff"] = alg.cutoff();
  json basis = json::array();
  for (int d = 1; d <= alg.cutoff(); ++d) {
    json labels = json::array();
    for (int i = 0; i < alg.basis_size(d); ++i) labels.push_back(alg.label({d, i}));
    basis.push_back(std::move(labels));
  }
  out["basis"] = std::move(basis);
  json mul = json::array();
  for (int da = 1; da <= alg.cutoff(); ++da)
    for (int db = 1; da + db <= alg.cutoff(); ++db)
      for (const auto& a : alg.basis_of_degree(da))
        for (const auto& b : alg.basis_of_degree(db))
          mul.push_back(json{{"a", basis_id_json(a)},
                             {"b", basis_id_json(b)},
                             {"out", tvec_json(alg.mul_basis(a, b))}});
  out["mul"] = std::move(mul);
  json comul = json::array();
  for (int d = 1; d <= alg.cutoff(); ++d)
    for (const auto& c : alg.basis_of_degree(d))
      comul.push_back(json{{"c", basis_id_json(c)}, {"out", tvec2_json(alg.comul_basis(c))}});
  out["comul"] = std::move(comul);
  return out;
}

AlgebraPtr algebra_from(const json& j) {
  auto alg = std::make_shared<AlgebraTable>(j.at("name").get<std::string>(),
                                            j.at("cutoff").get<int>());
  int d = 1;
  for (const auto& labels : j.at("basis")) {
    for (const auto& l : labels) alg->add_basis(d, l.get<std::string>());
    ++d;
  }
  for (const auto& e : j.at("mul"))
    alg->set_mul(basis_id_from(e.at("a")), basis_id_from(e.at("b")),
                 tvec_from(e.at("out")));
  for (const auto& e : j.at("comul"))
    alg->set_comul(basis_id_from(e.at("c")), tvec2_from(e.at("out")));
  return alg;
}

}  // namespace

std::string module_to_json(const ModuleTable& m) {
  json out;
  out["name"] = m.name();
  out["twist"] = m.twist();
  out["cutoff"] = m.cutoff();
  out["algebra"] = algebra_json(*m.algebra());
  json basis = json::array();
  for (int d = 0; d <= m.cutoff(); ++d) {
    json labels = json::array();
    for (int i = 0; i < m.basis_size(d); ++i) labels.push_back(m.label({d, i}));
    basis.push_back(std::move(labels));
  }
  out["basis"] = std::move(basis);
  json action = json::array();
  const auto& alg = *m.algebra();
  for (int dh = 1; dh <= m.cutoff(); ++dh)
    for (int dm = 0; dh + dm <= m.cutoff(); ++dm)
      for (const auto& h : alg.basis_of_degree(dh))
        for (const auto& b : m.basis_of_degree(dm))
          action.push_back(json{{"h", basis_id_json(h)},
                                {"m", basis_id_json(b)},
                                {"out", tvec_json(m.act_basis(h, b))}});
  out["action"] = std::move(action);
  json coaction = json::array();
  for (int d = 0; d <= m.cutoff(); ++d)
    for (const auto& b : m.basis_of_degree(d))
      coaction.push_back(
          json{{"m", basis_id_json(b)}, {"out", tvec2_json(m.coact_basis(b))}});
  out["coaction"] = std::move(coaction);
  return out.dump();
}

ModuleTable module_from_json(const std::string& text) {
  json j = json::parse(text);
  AlgebraPtr alg = algebra_from(j.at("algebra"));
  ModuleTable m(j.at("name").get<std::string>(), alg, j.at("twist").get<int>());
  int d = 0;
  for (const auto& labels : j.at("basis")) {
    for (const auto& l : labels) m.add_basis(d, l.get<std::string>());
    ++d;
  }
  for (const auto& e : j.at("action"))
    m.set_action(basis_id_from(e.at("h")), basis_id_from(e.at("m")),
                 tvec_from(e.at("out")));
  for (const auto& e : j.at("coaction"))
    m.set_coaction(basis_id_from(e.at("m")), tvec2_from(e.at("out")));
  return m;
}

std::string check_to_json(const CheckResult& r) {
  json out;
  out["check"] = r.name;
  out["status"] = r.status();
  out["checked"] = r.checked;
  out["witness"] = r.witness;
  out["notes"] = r.notes;
  return out.dump();
}

}  // namespace psh
