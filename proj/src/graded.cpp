#include "psh/graded.hpp"

#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace psh {

int tuple_degree(const PartitionTuple& t) {
  int d = 0;
  for (const auto& p : t) d += p.size();
  return d;
}

std::string tuple_to_string(const PartitionTuple& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << "(x)";
    os << 's' << t[i].to_string();
  }
  return os.str();
}

bool TupleLess::operator()(const PartitionTuple& a, const PartitionTuple& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Partition& x, const Partition& y) { return x < y; });
}

GradedVector::GradedVector(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("graded vector arity must be >= 1");
}

GradedVector GradedVector::unit(int arity) {
  return basis(PartitionTuple(arity));
}

GradedVector GradedVector::basis(PartitionTuple t) {
  GradedVector v(static_cast<int>(t.size()));
  v.terms_[std::move(t)] = 1;
  return v;
}

Int GradedVector::coeff(const PartitionTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Int(0) : it->second;
}

void GradedVector::add_term(const PartitionTuple& t, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(t.size()) != arity_)
    throw std::invalid_argument("tuple arity mismatch");
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch in +=");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch in -=");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

GradedVector& GradedVector::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

GradedVector GradedVector::homogeneous(int n) const {
  GradedVector out(arity_);
  for (const auto& [t, c] : terms_)
    if (tuple_degree(t) == n) out.terms_[t] = c;
  return out;
}

std::string GradedVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (first) {
      os << c.str();
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ") << Int(abs(c)).str();
    }
    os << '*' << tuple_to_string(t);
  }
  return os.str();
}

GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }

GradedVector to_graded(const SchurVector& a) {
  GradedVector v(1);
  for (const auto& [lam, c] : a.terms()) v.add_term({lam}, c);
  return v;
}

SchurVector to_schur(const GradedVector& a) {
  if (a.arity() != 1) throw std::invalid_argument("to_schur requires arity 1");
  SchurVector out;
  for (const auto& [t, c] : a.terms()) out.add_term(t[0], c);
  return out;
}

GradedVector tensor_mul(const GradedVector& a, const GradedVector& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor_mul arity mismatch");
  const int k = a.arity();
  GradedVector out(k);
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      // componentwise LR products, then the cartesian expansion
      std::vector<SchurVector> comps(k);
      for (int i = 0; i < k; ++i)
        comps[i] = mul(SchurVector::basis(s[i]), SchurVector::basis(t[i]));
      PartitionTuple tup(k);
      Int base = cs * ct;
      std::function<void(int, const Int&)> expand = [&](int i, const Int& c) {
        if (i == k) {
          out.add_term(tup, c);
          return;
        }
        for (const auto& [lam, cl] : comps[i].terms()) {
          tup[i] = lam;
          expand(i + 1, c * cl);
        }
      };
      expand(0, base);
    }
  }
  return out;
}

GradedVector tensor_concat(const GradedVector& a, const GradedVector& b) {
  GradedVector out(a.arity() + b.arity());
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      PartitionTuple tup = s;
      tup.insert(tup.end(), t.begin(), t.end());
      out.add_term(tup, cs * ct);
    }
  }
  return out;
}

Int tensor_inner(const GradedVector& a, const GradedVector& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("tensor_inner arity mismatch");
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  Int total = 0;
  for (const auto& [t, c] : small.terms()) total += c * large.coeff(t);
  return total;
}

GradedVector comul_iter(const SchurVector& a, int k) {
  if (k < 1) throw std::invalid_argument("comul_iter needs k >= 1");
  if (k == 1) return to_graded(a);
  // peel one factor, recurse on the rest: Delta^(k) = (1^(k-2) (x) Delta) Delta^(k-1)
  GradedVector prev = comul_iter(a, k - 1);
  GradedVector out(k);
  for (const auto& [t, c] : prev.terms()) {
    const Partition& last = t[k - 2];
    for (int m = 0; m <= last.size(); ++m) {
      for (const auto& mu : partitions_of(m)) {
        if (!last.contains(mu)) continue;
        for (const auto& nu : partitions_of(last.size() - m)) {
          Int lr = lr_coeff(last, mu, nu);
          if (lr == 0) continue;
          PartitionTuple tup(t.begin(), t.end() - 1);
          tup.push_back(mu);
          tup.push_back(nu);
          out.add_term(tup, c * lr);
        }
      }
    }
  }
  return out;
}

namespace {
std::mutex g_psi_mutex;
std::map<std::pair<std::vector<int>, int>, SchurVector> g_psi_memo;

SchurVector hopf_power_basis(const Partition& lam, int k) {
  {
    std::lock_guard<std::mutex> lock(g_psi_mutex);
    auto it = g_psi_memo.find({lam.parts(), k});
    if (it != g_psi_memo.end()) return it->second;
  }
  SchurVector result;
  GradedVector split = comul_iter(SchurVector::basis(lam), k);
  for (const auto& [t, c] : split.terms()) {
    SchurVector prod = SchurVector::unit();
    for (const auto& p : t) prod = mul(prod, SchurVector::basis(p));
    prod *= c;
    result += prod;
  }
  std::lock_guard<std::mutex> lock(g_psi_mutex);
  return g_psi_memo.emplace(std::make_pair(lam.parts(), k), std::move(result)).first->second;
}
}  // namespace

SchurVector hopf_power(int k, const SchurVector& a) {
  if (k < 0) throw std::invalid_argument("hopf_power needs k >= 0");
  if (k == 0) {
    // e e*: projection onto the degree-0 component
    SchurVector out;
    out.add_term(Partition{}, a.coeff(Partition{}));
    return out;
  }
  if (k == 1) return a;
  SchurVector out;
  for (const auto& [lam, c] : a.terms()) {
    SchurVector part = hopf_power_basis(lam, k);
    part *= c;
    out += part;
  }
  return out;
}

GradedVector tensor_comul_iter(const GradedVector& v, int n) {
  if (n < 1) throw std::invalid_argument("tensor_comul_iter needs n >= 1");
  const int k = v.arity();
  if (n == 1) return v;
  GradedVector prev = tensor_comul_iter(v, n - 1);  // arity (n-1)k
  GradedVector out(n * k);
  for (const auto& [t, c] : prev.terms()) {
    // comultiply the last block componentwise
    PartitionTuple head(t.begin(), t.end() - k);
    std::vector<GradedVector> splits;
    splits.reserve(k);
    for (int i = 0; i < k; ++i)
      splits.push_back(comul_iter(SchurVector::basis(t[t.size() - k + i]), 2));
    PartitionTuple left(k), right(k);
    std::function<void(int, const Int&)> expand = [&](int i, const Int& cc) {
      if (i == k) {
        PartitionTuple tup = head;
        tup.insert(tup.end(), left.begin(), left.end());
        tup.insert(tup.end(), right.begin(), right.end());
        out.add_term(tup, cc);
        return;
      }
      for (const auto& [pair_t, pc] : splits[i].terms()) {
        left[i] = pair_t[0];
        right[i] = pair_t[1];
        expand(i + 1, cc * pc);
      }
    };
    expand(0, c);
  }
  return out;
}

GradedVector tensor_mul_blocks(const GradedVector& w, int k, int n) {
  if (w.arity() != n * k) throw std::invalid_argument("tensor_mul_blocks arity mismatch");
  GradedVector out(k);
  for (const auto& [t, c] : w.terms()) {
    std::vector<SchurVector> comps(k);
    for (int i = 0; i < k; ++i) {
      SchurVector prod = SchurVector::unit();
      for (int b = 0; b < n; ++b) prod = mul(prod, SchurVector::basis(t[b * k + i]));
      comps[i] = std::move(prod);
    }
    PartitionTuple tup(k);
    std::function<void(int, const Int&)> expand = [&](int i, const Int& cc) {
      if (i == k) {
        out.add_term(tup, cc);
        return;
      }
      for (const auto& [lam, cl] : comps[i].terms()) {
        tup[i] = lam;
        expand(i + 1, cc * cl);
      }
    };
    expand(0, c);
  }
  return out;
}

SchurVector hopf_power_via_tensor(int k, const SchurVector& a) {
  if (k == 0) return hopf_power(0, a);
  return to_schur(tensor_hopf_power(k, to_graded(a)));
}

GradedVector tensor_hopf_power(int n, const GradedVector& v) {
  if (n == 0) {
    GradedVector out(v.arity());
    Int c = v.coeff(PartitionTuple(v.arity()));
    out.add_term(PartitionTuple(v.arity()), c);
    return out;
  }
  return tensor_mul_blocks(tensor_comul_iter(v, n), v.arity(), n);
}

GradedVector parse_graded(const std::string& text, int arity) {
  // reuse the schur parser termwise: terms are coeff*s[..](x)s[..](x)...
  GradedVector out(arity);
  size_t i = 0;
  auto skip_ws = [&](size_t& j) {
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
  };
  skip_ws(i);
  if (i < text.size() && text[i] == '0' && text.find_first_not_of(" \t", i + 1) == std::string::npos)
    return out;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  while (i < text.size()) {
    skip_ws(i);
    Int coeff = 1;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coeff = Int(text.substr(start, i - start));
      skip_ws(i);
      if (i < text.size() && text[i] == '*') ++i;
    }
    PartitionTuple tup;
    for (int comp = 0; comp < arity; ++comp) {
      skip_ws(i);
      if (comp > 0) {
        if (text.compare(i, 3, "(x)") != 0)
          throw std::invalid_argument("expected (x) in tensor term: " + text);
        i += 3;
        skip_ws(i);
      }
      if (i >= text.size() || text[i] != 's')
        throw std::invalid_argument("expected 's[' in tensor term: " + text);
      ++i;
      size_t close = text.find(']', i);
      if (close == std::string::npos) throw std::invalid_argument("missing ']' in " + text);
      tup.push_back(parse_partition(text.substr(i, close - i + 1)));
      i = close + 1;
    }
    out.add_term(tup, sign * coeff);
    skip_ws(i);
    if (i >= text.size()) break;
    if (text[i] == '+')
      sign = 1;
    else if (text[i] == '-')
      sign = -1;
    else
      throw std::invalid_argument("unexpected character in tensor expression: " + text);
    ++i;
  }
  return out;
}

}  // namespace psh
