#include "pg/groups.hpp"

#include <array>

namespace pg {

PGroup group_from_table(std::vector<std::string> names, ElementId unit,
                        const std::vector<std::vector<ElementId>>& mul) {
  std::size_t n = names.size();
  std::vector<ElementId> flat(n * n);
  std::vector<ElementId> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n) throw std::invalid_argument("group_from_table: ragged table");
    for (std::size_t j = 0; j < n; ++j) {
      flat[i * n + j] = mul[i][j];
      if (mul[i][j] == unit && inv[i] < 0) inv[i] = static_cast<ElementId>(j);
    }
  }
  return make_partial_group(std::move(names), unit, std::move(inv), full_domain(std::move(flat), n));
}

PGroup trivial_group() { return make_partial_group({"1"}, 0, {0}, full_domain({0}, 1)); }

PGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<ElementId>> mul(n, std::vector<ElementId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = static_cast<ElementId>((i + j) % n);
  }
  return group_from_table(std::move(names), 0, mul);
}

PGroup klein_group() {
  // 1, x, y, xy with every nonunit an involution
  std::vector<std::vector<ElementId>> mul = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return group_from_table({"1", "x", "y", "xy"}, 0, mul);
}

PGroup symmetric3() {
  // permutations of {0,1,2}: e, r=(012), r2, s=(01), sr, sr2; composition left-to-right
  auto compose3 = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return std::array<int, 3>{b[a[0]], b[a[1]], b[a[2]]};
  };
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "rs"};
  std::vector<std::vector<ElementId>> mul(6, std::vector<ElementId>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto c = compose3(perms[i], perms[j]);
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) mul[i][j] = static_cast<ElementId>(k);
    }
  return group_from_table(std::move(names), 0, mul);
}

PGroup dihedral4() {
  // <r, s | r^4 = s^2 = 1, srs = r^-1>, elements r^i s^j
  std::vector<std::string> names;
  std::vector<std::vector<ElementId>> mul(8, std::vector<ElementId>(8));
  auto id = [](int i, int j) { return static_cast<ElementId>((i & 3) * 2 + (j & 1)); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      names.push_back("r" + std::to_string(i) + (j ? "s" : ""));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^(i + k*(-1)^j) s^(j+l)
          int exp = j ? (i - k) : (i + k);
          mul[static_cast<std::size_t>(id(i, j))][static_cast<std::size_t>(id(k, l))] =
              id((exp % 4 + 4) % 4, j + l);
        }
  return group_from_table(std::move(names), 0, mul);
}

PGroup quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k}
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](ElementId x) { return static_cast<ElementId>(x ^ 1); };
  std::vector<std::vector<ElementId>> mul(8, std::vector<ElementId>(8));
  // base table on {1, i, j, k} with signs: i*i = -1, i*j = k, j*i = -k, ...
  auto base = [&](int a, int b, int& sign) -> int {
    // 0=1, 1=i, 2=j, 3=k
    static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sgn[a][b];
    return tbl[a][b];
  };
  for (int a = 0; a < 4; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < 4; ++b)
        for (int sb = 0; sb < 2; ++sb) {
          int sign;
          int c = base(a, b, sign);
          ElementId result = static_cast<ElementId>(2 * c);
          if ((sa + sb + (sign < 0 ? 1 : 0)) % 2) result = neg(result);
          mul[static_cast<std::size_t>(2 * a + sa)][static_cast<std::size_t>(2 * b + sb)] = result;
        }
  return group_from_table(std::move(names), 0, mul);
}

}  // namespace pg
