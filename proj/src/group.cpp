#include "psh/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace psh {

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // (p q)(i) = p(q(i))
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

void FiniteGroup::finish_validation() {
  const int n = order_;
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument(name_ + ": element 0 is not an identity");
  }
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw std::invalid_argument(name_ + ": one-sided inverse");
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw std::invalid_argument(name_ + ": missing inverse");
  }
  // associativity spot check on random triples
  std::mt19937 rng(12345);
  const int trials = std::min(5000, n * n * n);
  for (int t = 0; t < trials; ++t) {
    int a = int(rng() % n), b = int(rng() % n), c = int(rng() % n);
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument(name_ + ": multiplication table is not associative");
  }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::string name,
                                                           std::vector<int> table) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  int n = 0;
  while (n * n < static_cast<int>(table.size())) ++n;
  if (n * n != static_cast<int>(table.size()) || n == 0)
    throw std::invalid_argument("Cayley table is not square");
  for (int v : table)
    if (v < 0 || v >= n) throw std::invalid_argument("Cayley table entry out of range");
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_ = std::move(table);
  g->finish_validation();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_generators(
    std::string name, int degree, const std::vector<std::vector<int>>& gens) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw std::invalid_argument("generator degree mismatch");
    std::vector<int> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++)
        throw std::invalid_argument("generator is not a permutation");
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : gens) {
      auto next = compose(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second)
        elems.push_back(std::move(next));
    }
    if (elems.size() > 100000) throw std::invalid_argument("generated group too large");
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_ = std::move(table);
  g->perms_ = std::move(elems);
  g->finish_validation();
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void SubgroupEmbedding::validate() const {
  if (!sub || !sup) throw std::invalid_argument("embedding with null groups");
  if (static_cast<int>(map.size()) != sub->order())
    throw std::invalid_argument("embedding map size mismatch");
  if (map[0] != 0) throw std::invalid_argument("embedding must send identity to identity");
  std::vector<char> hit(sup->order(), 0);
  for (int v : map) {
    if (v < 0 || v >= sup->order() || hit[v]) throw std::invalid_argument("embedding not injective");
    hit[v] = 1;
  }
  for (int a = 0; a < sub->order(); ++a)
    for (int b = 0; b < sub->order(); ++b)
      if (map[sub->mul(a, b)] != sup->mul(map[a], map[b]))
        throw std::invalid_argument("embedding does not preserve products");
  if (sup->order() % sub->order() != 0)
    throw std::invalid_argument("Lagrange violation");  // unreachable if the above hold
}

std::vector<int> SubgroupEmbedding::preimage_table() const {
  std::vector<int> pre(sup->order(), -1);
  for (int a = 0; a < sub->order(); ++a) pre[map[a]] = a;
  return pre;
}

GroupPtr trivial_group() {
  static GroupPtr g = FiniteGroup::from_table("1", {0});
  return g;
}

GroupPtr cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic_group order must be >= 1");
  std::vector<int> table(size_t(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a * m + b] = (a + b) % m;
  return FiniteGroup::from_table("Z" + std::to_string(m), std::move(table));
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group degree must be >= 1");
  if (n == 1) return trivial_group();
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return FiniteGroup::from_generators("S" + std::to_string(n), n, {transposition, cycle});
}

GroupPtr alternating_group(int n) {
  if (n < 3) throw std::invalid_argument("alternating_group needs degree >= 3");
  std::vector<std::vector<int>> gens;
  // 3-cycles (0 1 k)
  for (int k = 2; k < n; ++k) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_generators("A" + std::to_string(n), n, gens);
}

GroupPtr dihedral_group(int m) {
  if (m < 3) throw std::invalid_argument("dihedral_group needs m >= 3");
  std::vector<int> rot(m), refl(m);
  for (int i = 0; i < m; ++i) rot[i] = (i + 1) % m;
  for (int i = 0; i < m; ++i) refl[i] = (m - i) % m;
  return FiniteGroup::from_generators("D" + std::to_string(m), m, {rot, refl});
}

GroupPtr quaternion_group() {
  // units +-1, +-i, +-j, +-k as integer quaternions
  struct Quat {
    int w, x, y, z;
    bool operator==(const Quat&) const = default;
  };
  const std::vector<Quat> units = {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
                                   {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1}};
  auto qmul = [](const Quat& a, const Quat& b) {
    return Quat{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  };
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      Quat q = qmul(units[a], units[b]);
      table[a * 8 + b] =
          int(std::find(units.begin(), units.end(), q) - units.begin());
    }
  return FiniteGroup::from_table("Q8", std::move(table));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order(), n = na * nb;
  std::vector<int> table(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ax = x / nb, bx = x % nb, ay = y / nb, by = y % nb;
      table[x * n + y] = a->mul(ax, ay) * nb + b->mul(bx, by);
    }
  return FiniteGroup::from_table(a->name() + "x" + b->name(), std::move(table));
}

GroupPtr catalog_group(const std::string& name) {
  auto x = name.find('x');
  if (x != std::string::npos)
    return direct_product(catalog_group(name.substr(0, x)), catalog_group(name.substr(x + 1)));
  if (name == "1" || name == "Z1" || name == "triv") return trivial_group();
  if (name.size() > 1 && name[0] == 'Z') {
    int m = std::stoi(name.substr(1));
    if (m < 1 || m > 12) throw std::invalid_argument("cyclic catalog covers Z1..Z12");
    return cyclic_group(m);
  }
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "A3") return alternating_group(3);
  if (name == "A4") return alternating_group(4);
  if (name == "D4") return dihedral_group(4);
  if (name == "D6") return dihedral_group(6);
  if (name == "Q8") return quaternion_group();
  throw std::invalid_argument("unknown group name: " + name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int m = 1; m <= 12; ++m) names.push_back("Z" + std::to_string(m));
  names.insert(names.end(), {"S3", "S4", "A4", "D4", "D6", "Q8", "Z2xZ2"});
  return names;
}

SubgroupEmbedding subgroup_from_elements(const GroupPtr& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  std::map<int, int> local;
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
  const int h = static_cast<int>(elems.size());
  std::vector<int> table(size_t(h) * h);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      int prod = g->mul(elems[a], elems[b]);
      auto it = local.find(prod);
      if (it == local.end())
        throw std::invalid_argument("element set is not closed under products");
      table[a * h + b] = it->second;
    }
  SubgroupEmbedding emb;
  emb.sub = FiniteGroup::from_table(g->name() + "-sub" + std::to_string(h), std::move(table));
  emb.sup = g;
  emb.map = std::move(elems);
  emb.validate();
  return emb;
}

SubgroupEmbedding trivial_subgroup(const GroupPtr& g) {
  return subgroup_from_elements(g, {0});
}

SubgroupEmbedding full_subgroup(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  SubgroupEmbedding emb;
  emb.sub = g;
  emb.sup = g;
  emb.map = std::move(all);
  return emb;
}

SubgroupEmbedding center_subgroup(const GroupPtr& g) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order() && central; ++b) central = g->mul(a, b) == g->mul(b, a);
    if (central) z.push_back(a);
  }
  return subgroup_from_elements(g, std::move(z));
}

SubgroupEmbedding cyclic_subgroup(const GroupPtr& g, int k) {
  for (int a = 0; a < g->order(); ++a) {
    int power = a, ord = 1;
    while (power != 0) {
      power = g->mul(power, a);
      ++ord;
    }
    if (ord == k) {
      std::vector<int> elems;
      int x = 0;
      do {
        elems.push_back(x);
        x = g->mul(x, a);
      } while (x != 0);
      return subgroup_from_elements(g, std::move(elems));
    }
  }
  throw std::invalid_argument(g->name() + " has no element of order " + std::to_string(k));
}

SubgroupEmbedding resolve_subgroup(const GroupPtr& g, const std::string& spec) {
  if (spec == "1" || spec == "trivial") return trivial_subgroup(g);
  if (spec == "self" || spec == "full" || spec == "G" || spec == g->name())
    return full_subgroup(g);
  if (spec == "center") return center_subgroup(g);
  if (spec.rfind("elems:", 0) == 0) {
    std::vector<int> elems;
    std::stringstream ss(spec.substr(6));
    std::string tok;
    while (std::getline(ss, tok, ',')) elems.push_back(std::stoi(tok));
    return subgroup_from_elements(g, std::move(elems));
  }
  if (spec.rfind("file:", 0) == 0) {
    // file format: optional comments, then "elems i1 i2 ..." with labels of g
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open subgroup file: " + spec.substr(5));
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag != "elems")
        throw std::invalid_argument("subgroup file: expected an 'elems' line");
      std::vector<int> elems;
      int v;
      while (ls >> v) elems.push_back(v);
      return subgroup_from_elements(g, std::move(elems));
    }
    throw std::invalid_argument("subgroup file: no 'elems' line found");
  }
  if ((spec.size() > 1 && spec[0] == 'Z') || spec == "A3")
    return cyclic_subgroup(g, spec == "A3" ? 3 : std::stoi(spec.substr(1)));
  throw std::invalid_argument("unknown subgroup spec: " + spec);
}

GroupPtr parse_group_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line, kind;
  int n = 0;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (kind.empty()) {
      kind = first;
      if (!(ls >> n)) throw std::invalid_argument("group file: expected size after '" + kind + "'");
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty()) body.push_back(rest);
    } else {
      body.push_back(line);
    }
  }
  if (kind == "cayley") {
    std::vector<int> table;
    for (const auto& row : body) {
      std::istringstream rs(row);
      int v;
      while (rs >> v) table.push_back(v);
    }
    if (static_cast<int>(table.size()) != n * n)
      throw std::invalid_argument("group file: expected " + std::to_string(n * n) + " entries");
    return FiniteGroup::from_table(name, std::move(table));
  }
  if (kind == "perm") {
    std::vector<std::vector<int>> gens;
    for (const auto& row : body) {
      std::istringstream rs(row);
      std::string tag;
      rs >> tag;
      if (tag != "gen") throw std::invalid_argument("group file: expected 'gen' line");
      std::vector<int> images;
      int v;
      while (rs >> v) images.push_back(v - 1);  // file uses 1-based images
      if (static_cast<int>(images.size()) != n)
        throw std::invalid_argument("group file: generator has wrong degree");
      gens.push_back(std::move(images));
    }
    if (gens.empty()) throw std::invalid_argument("group file: no generators");
    return FiniteGroup::from_generators(name, n, gens);
  }
  throw std::invalid_argument("group file: unknown kind '" + kind + "'");
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path;
  auto slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  return parse_group_text(ss.str(), base);
}

}  // namespace psh
