#include "psh/rep_maps.hpp"

#include <sstream>
#include <stdexcept>

namespace psh {

void CheckResult::merge(const CheckResult& o) {
  checked += o.checked;
  if (!o.pass && pass) witness = o.name.empty() ? o.witness : o.name + ": " + o.witness;
  pass = pass && o.pass;
  notes.insert(notes.end(), o.notes.begin(), o.notes.end());
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMatrix product shape mismatch");
  IntMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < o.cols; ++j) {
      long long s = 0;
      for (int t = 0; t < cols; ++t) s += at(i, t) * o.at(t, j);
      out.at(i, j) = s;
    }
  return out;
}

IntMatrix IntMatrix::scalar(int n, long long v) {
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = v;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix IntMatrix::parse(const std::string& text, int rows, int cols) {
  IntMatrix out(rows, cols);
  std::istringstream is(text);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!(is >> out.at(i, j))) throw std::invalid_argument("matrix text too short");
  return out;
}

IntMatrix restriction_matrix(const CharacterTable& sub_t, const CharacterTable& sup_t,
                             const SubgroupEmbedding& emb) {
  IntMatrix m(sub_t.irr_count(), sup_t.irr_count());
  for (int j = 0; j < sup_t.irr_count(); ++j) {
    ClassFunction res = restricted(emb, sub_t.g, sup_t.irr(j));
    for (int i = 0; i < sub_t.irr_count(); ++i)
      m.at(i, j) = guarded_round(cf_inner(sub_t.irr(i), res),
                                 "restriction multiplicity <" + std::to_string(i) + "," +
                                     std::to_string(j) + ">");
  }
  return m;
}

IntMatrix induction_matrix(const CharacterTable& sub_t, const CharacterTable& sup_t,
                           const SubgroupEmbedding& emb) {
  IntMatrix m(sub_t.irr_count(), sup_t.irr_count());
  for (int i = 0; i < sub_t.irr_count(); ++i) {
    ClassFunction ind = induced(emb, sup_t.g, sub_t.irr(i));
    for (int j = 0; j < sup_t.irr_count(); ++j)
      m.at(i, j) = guarded_round(cf_inner(ind, sup_t.irr(j)),
                                 "induction multiplicity <" + std::to_string(i) + "," +
                                     std::to_string(j) + ">");
  }
  return m;
}

bool is_normal(const SubgroupEmbedding& emb) {
  const auto pre = emb.preimage_table();
  for (int g = 0; g < emb.sup->order(); ++g)
    for (int h : emb.map)
      if (pre[emb.sup->conj(g, h)] < 0) return false;
  return true;
}

bool inner_condition(const SubgroupEmbedding& emb) {
  if (!is_normal(emb)) return false;
  const auto pre = emb.preimage_table();
  for (int g = 0; g < emb.sup->order(); ++g) {
    bool found = false;
    for (int h = 0; h < emb.sub->order() && !found; ++h) {
      bool agrees = true;
      for (int x = 0; x < emb.sub->order() && agrees; ++x) {
        int lhs = pre[emb.sup->conj(g, emb.map[x])];
        int rhs = emb.sub->conj(h, x);
        agrees = lhs == rhs;
      }
      found = agrees;
    }
    if (!found) return false;
  }
  return true;
}

bool centralizing_reps_exist(const SubgroupEmbedding& emb) {
  const auto pre = emb.preimage_table();
  const int n = emb.sup->order();
  std::vector<char> covered(n, 0);
  int found = 0;
  const long long target = emb.index();
  for (int g = 0; g < n; ++g) {
    if (covered[g]) continue;
    // mark the whole coset gH
    std::vector<int> coset;
    for (int h : emb.map) coset.push_back(emb.sup->mul(g, h));
    bool has_central = false;
    for (int c : coset) {
      bool central = true;
      for (int h : emb.map)
        if (emb.sup->mul(c, h) != emb.sup->mul(h, c)) {
          central = false;
          break;
        }
      if (central) {
        has_central = true;
        break;
      }
    }
    if (!has_central) return false;
    for (int c : coset) covered[c] = 1;
    ++found;
  }
  return found == target;
}

CheckResult verify_theorem21(const CharacterTable& sub_t, const CharacterTable& sup_t,
                             const SubgroupEmbedding& emb) {
  CheckResult r;
  r.name = "theorem21(" + emb.sub->name() + " in " + emb.sup->name() + ")";
  IntMatrix m = restriction_matrix(sub_t, sup_t, emb);
  IntMatrix prod = m * m.transpose();
  IntMatrix expect = IntMatrix::scalar(sub_t.irr_count(), emb.index());
  r.checked = prod.rows * prod.cols;
  if (!inner_condition(emb)) {
    r.informational = true;
    r.notes.push_back("inner-automorphism hypothesis fails; M M^T recorded:");
    r.notes.push_back(prod.to_string());
    r.notes.push_back(std::string("equals [G:H] I: ") + (prod == expect ? "yes" : "no"));
    return r;
  }
  if (!(prod == expect))
    r.fail("M M^T != [G:H] I:\n" + prod.to_string());
  return r;
}

}  // namespace psh
