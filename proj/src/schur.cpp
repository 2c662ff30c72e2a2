#include "psh/schur.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace psh {

SchurVector SchurVector::basis(const Partition& lam) {
  SchurVector v;
  v.terms_[lam] = 1;
  return v;
}

Int SchurVector::coeff(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurVector::add_term(const Partition& lam, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurVector& SchurVector::operator+=(const SchurVector& o) {
  for (const auto& [lam, c] : o.terms_) add_term(lam, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& o) {
  for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
  return *this;
}

SchurVector& SchurVector::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, v] : terms_) v *= c;
  return *this;
}

SchurVector SchurVector::homogeneous(int n) const {
  SchurVector out;
  for (const auto& [lam, c] : terms_)
    if (lam.size() == n) out.terms_[lam] = c;
  return out;
}

int SchurVector::max_degree() const {
  int d = 0;
  for (const auto& [lam, c] : terms_) d = std::max(d, lam.size());
  return d;
}

bool SchurVector::is_positive() const {
  if (terms_.empty()) return false;
  for (const auto& [lam, c] : terms_)
    if (c <= 0) return false;
  return true;
}

std::string SchurVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    if (first) {
      os << c.str();
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ") << Int(abs(c)).str();
    }
    os << "*s" << lam.to_string();
  }
  return os.str();
}

SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }
SchurVector operator*(const Int& c, SchurVector a) { return a *= c; }

namespace {

// Backtracking count of LR skew tableaux: shape lam/mu, content nu, rows
// weakly increasing, columns strictly increasing, and the reverse reading
// word (right to left, top to bottom) a lattice word.
class LrCounter {
 public:
  LrCounter(const Partition& lam, const Partition& mu, const Partition& nu)
      : lam_(lam), mu_(mu), nu_(nu), letters_(nu.rows()) {
    for (int i = 0; i < lam.rows(); ++i)
      for (int j = lam.part(i) - 1; j >= mu_.part(i); --j) cells_.push_back({i, j});
    entry_.assign(lam.rows() == 0 ? 0 : lam.rows(),
                  std::vector<int>(lam.rows() == 0 ? 0 : lam.part(0), 0));
    used_.assign(letters_ + 1, 0);
  }

  Int count() { return place(0); }

 private:
  Int place(size_t k) {
    if (k == cells_.size()) return 1;
    auto [r, c] = cells_[k];
    // column-strict bound from the cell above (only if it lies in the skew)
    int lo = 1;
    if (r > 0 && c >= mu_.part(r - 1) && c < lam_.part(r - 1)) lo = entry_[r - 1][c] + 1;
    // row bound from the right neighbour (already placed)
    int hi = letters_;
    if (c + 1 < lam_.part(r)) hi = std::min(hi, entry_[r][c + 1]);
    Int total = 0;
    for (int a = lo; a <= hi; ++a) {
      if (used_[a] >= nu_.part(a - 1)) continue;          // content bound
      if (a > 1 && used_[a] + 1 > used_[a - 1]) continue;  // lattice condition
      entry_[r][c] = a;
      ++used_[a];
      total += place(k + 1);
      --used_[a];
    }
    entry_[r][c] = 0;
    return total;
  }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& nu_;
  int letters_;
  std::vector<std::pair<int, int>> cells_;  // reading-word order
  std::vector<std::vector<int>> entry_;
  std::vector<int> used_;
};

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
std::mutex g_lr_mutex;
std::map<LrKey, Int> g_lr_memo;

}  // namespace

Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (!lam.contains(mu)) return 0;
  if (nu.size() == 0) return lam == mu ? 1 : 0;
  LrKey key{lam.parts(), mu.parts(), nu.parts()};
  {
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    auto it = g_lr_memo.find(key);
    if (it != g_lr_memo.end()) return it->second;
  }
  Int value = LrCounter(lam, mu, nu).count();
  std::lock_guard<std::mutex> lock(g_lr_mutex);
  return g_lr_memo.emplace(std::move(key), std::move(value)).first->second;
}

SchurVector mul(const SchurVector& a, const SchurVector& b) {
  SchurVector out;
  for (const auto& [mu, ca] : a.terms()) {
    for (const auto& [nu, cb] : b.terms()) {
      const Int c = ca * cb;
      // lambda-outer enumeration keeps the candidate set small
      for (const auto& lam : partitions_of_containing(mu.size() + nu.size(), mu)) {
        Int lr = lr_coeff(lam, mu, nu);
        if (lr != 0) out.add_term(lam, c * lr);
      }
    }
  }
  return out;
}

SchurVector operator*(const SchurVector& a, const SchurVector& b) { return mul(a, b); }

Int inner(const SchurVector& a, const SchurVector& b) {
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  Int total = 0;
  for (const auto& [lam, c] : small.terms()) total += c * large.coeff(lam);
  return total;
}

SchurVector antipode(const SchurVector& a) {
  SchurVector out;
  for (const auto& [lam, c] : a.terms())
    out.add_term(lam.conjugate(), lam.size() % 2 == 0 ? c : -c);
  return out;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// term := [int '*'] 's[' parts ']'
std::pair<Partition, Int> parse_term(const std::string& s, size_t& i) {
  skip_ws(s, i);
  Int coeff = 1;
  size_t start = i;
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) ++i;
  if (i > start) {
    coeff = Int(s.substr(start, i - start));
    skip_ws(s, i);
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws(s, i);
    }
  }
  if (i >= s.size() || s[i] != 's') throw std::invalid_argument("expected 's[' in " + s);
  ++i;
  if (i >= s.size() || s[i] != '[') throw std::invalid_argument("expected '[' in " + s);
  size_t close = s.find(']', i);
  if (close == std::string::npos) throw std::invalid_argument("missing ']' in " + s);
  Partition lam = parse_partition(s.substr(i, close - i + 1));
  i = close + 1;
  return {lam, coeff};
}

}  // namespace

SchurVector parse_schur(const std::string& text) {
  SchurVector out;
  size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '0' && i + 1 >= text.size()) return out;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  while (i < text.size()) {
    auto [lam, c] = parse_term(text, i);
    out.add_term(lam, sign * c);
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] == '+')
      sign = 1;
    else if (text[i] == '-')
      sign = -1;
    else
      throw std::invalid_argument("unexpected character in schur expression: " + text);
    ++i;
  }
  return out;
}

}  // namespace psh
