#include "mcg/closure.hpp"

#include <string>
#include <unordered_set>

namespace mcg::cert {

using gf2::Matrix;

std::vector<Matrix> brute_force_closure(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw Error("brute_force_closure: no generators");
  const int n = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != n || g.cols() != n) throw ShapeError("brute_force_closure: mixed dimensions");

  // pack the n*n bit matrix into a byte string key
  auto key = [n](const Matrix& m) {
    std::string k((size_t(n) * n + 7) / 8, '\0');
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++bit)
        if (m.get(i, j)) k[size_t(bit / 8)] |= char(1 << (bit % 8));
    return k;
  };

  std::unordered_set<std::string> seen;
  std::vector<Matrix> elems;
  elems.push_back(Matrix::identity(n));
  seen.insert(key(elems[0]));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    Matrix cur = elems[head];  // copy: elems may reallocate
    for (const auto& s : gens) {
      Matrix next = mat_mul(cur, s);
      if (seen.insert(key(next)).second) {
        if (elems.size() >= cap)
          throw OracleOverflowError("brute_force_closure: cap " + std::to_string(cap) +
                                    " exceeded");
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

}  // namespace mcg::cert
