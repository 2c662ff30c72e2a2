#pragma once

#include <string>
#include <vector>

#include "psh/character.hpp"
#include "psh/report.hpp"

namespace psh {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  long long& at(int i, int j) { return a[size_t(i) * cols + j]; }
  long long at(int i, int j) const { return a[size_t(i) * cols + j]; }
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  static IntMatrix scalar(int n, long long v);
  std::string to_string() const;  // rows as "a b c", newline separated
  static IntMatrix parse(const std::string& text, int rows, int cols);
};

// m_{pi rho} = <pi, res_H^G rho>: rows over irr(H), columns over irr(G),
// both in canonical table order.
IntMatrix restriction_matrix(const CharacterTable& sub_t, const CharacterTable& sup_t,
                             const SubgroupEmbedding& emb);

// Independent route: <ind pi, rho> via the induced-character formula.  Equal
// to restriction_matrix by Frobenius reciprocity; the tests assert that.
IntMatrix induction_matrix(const CharacterTable& sub_t, const CharacterTable& sup_t,
                           const SubgroupEmbedding& emb);

bool is_normal(const SubgroupEmbedding& emb);

// H normal in G and every inner automorphism of G restricts to an inner
// automorphism of H (decided exhaustively).
bool inner_condition(const SubgroupEmbedding& emb);

// Whether coset representatives of G/H can be chosen centralizing H.
bool centralizing_reps_exist(const SubgroupEmbedding& emb);

// M M^T = [G:H] I.  When the inner condition fails the result is reported as
// informational and carries the actual product matrix.
CheckResult verify_theorem21(const CharacterTable& sub_t, const CharacterTable& sup_t,
                             const SubgroupEmbedding& emb);

}  // namespace psh
