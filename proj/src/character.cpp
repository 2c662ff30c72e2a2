#include "psh/character.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace psh {

std::shared_ptr<const Classes> conjugacy_classes(const GroupPtr& g) {
  const int n = g->order();
  auto cls = std::make_shared<Classes>();
  cls->class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (cls->class_of[x] >= 0) continue;
    const int id = cls->count();
    cls->reps.push_back(x);  // x is minimal in its class: smaller elements are classified
    int size = 0;
    for (int t = 0; t < n; ++t) {
      int y = g->conj(t, x);
      if (cls->class_of[y] < 0) {
        cls->class_of[y] = id;
        ++size;
      }
    }
    cls->sizes.push_back(size);
  }
  return cls;
}

GroupData make_group_data(const GroupPtr& g) { return {g, conjugacy_classes(g)}; }

ClassFunction::ClassFunction(GroupData g, std::vector<Complex> values)
    : g_(std::move(g)), vals_(std::move(values)) {
  if (static_cast<int>(vals_.size()) != g_.classes->count())
    throw std::invalid_argument("class function length mismatch");
}

Complex cf_inner(const ClassFunction& a, const ClassFunction& b) {
  const auto& cls = *a.carrier().classes;
  Complex total = 0;
  for (int c = 0; c < cls.count(); ++c)
    total += double(cls.sizes[c]) * a.at_class(c) * std::conj(b.at_class(c));
  return total / double(a.carrier().group->order());
}

ClassFunction cf_pointwise_mul(const ClassFunction& a, const ClassFunction& b) {
  std::vector<Complex> vals(a.values());
  for (int c = 0; c < a.class_count(); ++c) vals[c] *= b.at_class(c);
  return ClassFunction(a.carrier(), std::move(vals));
}

namespace {

// Class multiplication constants a_{ijk}: K_i K_j = sum_k a_{ijk} K_k.
std::vector<std::vector<std::vector<long long>>> class_constants(const GroupPtr& g,
                                                                 const Classes& cls) {
  const int r = cls.count();
  std::vector<std::vector<std::vector<long long>>> a(
      r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
  const int n = g->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ++a[cls.class_of[x]][cls.class_of[y]][cls.class_of[g->mul(x, y)]];
  // counted over all pairs with product in class k: divide by |C_k|
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        if (a[i][j][k] % cls.sizes[k] != 0)
          throw std::logic_error("class constant not divisible by class size");
        a[i][j][k] /= cls.sizes[k];
      }
  return a;
}

struct RowKey {
  int degree;
  std::vector<std::pair<long long, long long>> vals;
  bool operator<(const RowKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    return vals > o.vals;  // larger value sequence first
  }
};

}  // namespace

CharacterTable character_table(const GroupPtr& g, int order_cap) {
  if (g->order() > order_cap)
    throw std::invalid_argument("group " + g->name() + " of order " +
                                std::to_string(g->order()) + " exceeds the cap " +
                                std::to_string(order_cap));
  GroupData gd = make_group_data(g);
  const Classes& cls = *gd.classes;
  const int r = cls.count();
  const int n = g->order();
  const auto a = class_constants(g, cls);

  // B_i with (B_i)_{jk} = a_{ijk}; the vectors (|C_k| chi(g_k)/chi(1))_k are
  // the common right eigenvectors.
  std::vector<Eigen::MatrixXcd> B(r, Eigen::MatrixXcd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) B[i](j, k) = double(a[i][j][k]);

  for (int attempt = 0; attempt < 10; ++attempt) {
    std::mt19937 rng(20250 + attempt);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(r, r);
    for (int i = 0; i < r; ++i) M += Complex(unif(rng), unif(rng)) * B[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M);
    if (solver.info() != Eigen::Success) continue;

    std::vector<std::vector<Complex>> rows;
    std::vector<int> degrees;
    bool ok = true;
    for (int v = 0; v < r && ok; ++v) {
      Eigen::VectorXcd w = solver.eigenvectors().col(v);
      if (std::abs(w(0)) < 1e-12) {
        ok = false;
        break;
      }
      w /= w(0);  // identity class entry is |C_0| chi(1)/chi(1) = 1
      double norm = 0;
      for (int k = 0; k < r; ++k) norm += std::norm(w(k)) / double(cls.sizes[k]);
      const double d = std::sqrt(double(n) / norm);
      if (std::abs(d - std::round(d)) > kDegreeTol || std::round(d) < 1) {
        ok = false;
        break;
      }
      std::vector<Complex> chi(r);
      for (int k = 0; k < r; ++k) chi[k] = d * w(k) / double(cls.sizes[k]);
      rows.push_back(std::move(chi));
      degrees.push_back(int(std::lround(d)));
    }
    if (!ok) continue;

    // row orthonormality within 1e-8
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j) {
        Complex ip = 0;
        for (int k = 0; k < r; ++k)
          ip += double(cls.sizes[k]) * rows[i][k] * std::conj(rows[j][k]);
        ip /= double(n);
        if (std::abs(ip - (i == j ? 1.0 : 0.0)) > 1e-7) ok = false;
      }
    if (!ok) continue;

    long long sq = 0;
    for (int d : degrees) sq += (long long)d * d;
    if (sq != n) continue;

    // snap values that are numerically integral, then sort canonically
    std::vector<int> order(r);
    std::vector<RowKey> keys(r);
    for (int i = 0; i < r; ++i) {
      order[i] = i;
      keys[i].degree = degrees[i];
      for (int k = 0; k < r; ++k)
        keys[i].vals.emplace_back(std::llround(rows[i][k].real() * 1e6),
                                  std::llround(rows[i][k].imag() * 1e6));
    }
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return keys[x] < keys[y]; });

    CharacterTable t;
    t.g = gd;
    for (int i : order) {
      t.chi.push_back(std::move(rows[i]));
      t.degrees.push_back(degrees[i]);
    }
    return t;
  }
  throw std::runtime_error("character table for " + g->name() +
                           ": eigensolver failed to produce an orthonormal table");
}

ClassFunction induced(const SubgroupEmbedding& emb, const GroupData& sup,
                      const ClassFunction& f) {
  const auto pre = emb.preimage_table();
  const int nsup = emb.sup->order();
  std::vector<Complex> vals(sup.classes->count(), 0.0);
  for (int c = 0; c < sup.classes->count(); ++c) {
    const int w = sup.classes->reps[c];
    Complex total = 0;
    for (int x = 0; x < nsup; ++x) {
      int y = emb.sup->conj(emb.sup->inv(x), w);  // x^-1 w x
      if (pre[y] >= 0) total += f.at_element(pre[y]);
    }
    vals[c] = total / double(emb.sub->order());
  }
  return ClassFunction(sup, std::move(vals));
}

ClassFunction restricted(const SubgroupEmbedding& emb, const GroupData& sub,
                         const ClassFunction& f) {
  std::vector<Complex> vals(sub.classes->count());
  for (int c = 0; c < sub.classes->count(); ++c)
    vals[c] = f.at_element(emb.map[sub.classes->reps[c]]);
  return ClassFunction(sub, std::move(vals));
}

ClassFunction outer_tensor(const GroupData& prod, const ClassFunction& a,
                           const ClassFunction& b) {
  const int nb = b.carrier().group->order();
  std::vector<Complex> vals(prod.classes->count());
  for (int c = 0; c < prod.classes->count(); ++c) {
    const int x = prod.classes->reps[c];
    vals[c] = a.at_element(x / nb) * b.at_element(x % nb);
  }
  return ClassFunction(prod, std::move(vals));
}

std::vector<long long> decompose(const CharacterTable& t, const ClassFunction& f,
                                 const std::string& what) {
  std::vector<long long> mults(t.irr_count());
  for (int i = 0; i < t.irr_count(); ++i)
    mults[i] = guarded_round(cf_inner(f, t.irr(i)), what);
  return mults;
}

namespace {
std::string fmt_value(const Complex& z) {
  auto fmt_real = [](double x) {
    double snapped = std::round(x);
    if (std::abs(x - snapped) < 1e-8) {
      std::ostringstream os;
      os << (long long)snapped;
      return os.str();
    }
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << x;
    return os.str();
  };
  if (std::abs(z.imag()) < 1e-8) return fmt_real(z.real());
  return fmt_real(z.real()) + (z.imag() >= 0 ? "+" : "") + fmt_real(z.imag()) + "i";
}
}  // namespace

std::string character_table_csv(const CharacterTable& t) {
  std::ostringstream os;
  os << "class_size";
  for (int c = 0; c < t.g.classes->count(); ++c) os << ',' << t.g.classes->sizes[c];
  os << '\n';
  for (int i = 0; i < t.irr_count(); ++i) {
    os << "chi_" << i;
    for (int c = 0; c < t.g.classes->count(); ++c) os << ',' << fmt_value(t.chi[i][c]);
    os << '\n';
  }
  return os.str();
}

}  // namespace psh
