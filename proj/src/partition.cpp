#include "psh/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace psh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition{};
  out.resize(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j) {
    int count = 0;
    for (int p : parts_)
      if (p > j) ++count;
    out[j] = count;
  }
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 0; i < mu.rows(); ++i)
    if (part(i) < mu.part(i)) return false;
  return true;
}

bool operator<(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  // reverse-lex: larger leading part first
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                      a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ']';
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    stack.push_back(k);
    gen_partitions(n - k, k, stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> stack;
  gen_partitions(n, n == 0 ? 1 : n, stack, out);
  return out;
}

std::vector<Partition> partitions_of_containing(int n, const Partition& mu) {
  std::vector<Partition> out;
  for (auto& lam : partitions_of(n))
    if (lam.contains(mu)) out.push_back(lam);
  return out;
}

Int hook_product(const Partition& lam) {
  const Partition conj = lam.conjugate();
  Int prod = 1;
  for (int i = 0; i < lam.rows(); ++i)
    for (int j = 0; j < lam.part(i); ++j)
      prod *= lam.part(i) - j + conj.part(j) - i - 1;
  return prod;
}

Int partition_dimension(const Partition& lam) {
  Int fact = 1;
  for (int i = 2; i <= lam.size(); ++i) fact *= i;
  // hook length formula; the division is exact
  return fact / hook_product(lam);
}

Partition cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::vector<int> lens;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

Partition parse_partition(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unbalanced bracket in partition");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + tok + "' in '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

}  // namespace psh
