#include "profin/catalog.hpp"

#include <stdexcept>

namespace profin {

GroupPtr cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return make_group("C" + std::to_string(n), n, std::move(table));
}

GroupPtr dihedral_group(int n) {
  if (n < 2) throw std::invalid_argument("dihedral_group: need n >= 2");
  auto cn = cyclic_group(n);
  std::vector<std::vector<Index>> act(2, std::vector<Index>(n));
  for (int x = 0; x < n; ++x) {
    act[0][x] = x;
    act[1][x] = (n - x) % n;
  }
  auto sd = semidirect_product(cn, cyclic_group(2), act);
  return make_group("D" + std::to_string(n), sd.group->order(),
                    sd.group->table());
}

GroupPtr symmetric3() {
  auto g = dihedral_group(3);
  return make_group("S3", g->order(), g->table());
}

GroupPtr klein4() { return abelian_group({2, 2}, "V4"); }

GroupPtr alternating4() {
  // V_4 ⋊ C_3, the action cycling the three involutions.
  auto v4 = klein4();  // elements 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1)
  std::vector<std::vector<Index>> act = {
      {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  auto sd = semidirect_product(v4, cyclic_group(3), act);
  return make_group("A4", sd.group->order(), sd.group->table());
}

GroupPtr quaternion8() {
  // {1, -1, i, -i, j, -j, k, -k} as 0..7.
  auto neg = [](int x) { return x < 2 ? 1 - x : (x % 2 ? x - 1 : x + 1); };
  std::vector<std::vector<Index>> rows(8, std::vector<Index>(8));
  auto set = [&](int a, int b, int c) { rows[a][b] = c; };
  // Base products on {1, i, j, k} (indices 0, 2, 4, 6).
  int unit[4] = {0, 2, 4, 6};
  int prod[4][4];     // result unit index
  bool minus[4][4];   // sign
  const int I = 1, J = 2, K = 3;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      prod[a][b] = a == 0 ? b : (b == 0 ? a : -1);
      minus[a][b] = false;
    }
  prod[I][I] = 0; minus[I][I] = true;
  prod[J][J] = 0; minus[J][J] = true;
  prod[K][K] = 0; minus[K][K] = true;
  prod[I][J] = K; prod[J][I] = K; minus[J][I] = true;
  prod[J][K] = I; prod[K][J] = I; minus[K][J] = true;
  prod[K][I] = J; prod[I][K] = J; minus[I][K] = true;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      bool sa = a % 2, sb = b % 2;
      int r = unit[prod[ua][ub]];
      bool s = sa ^ sb ^ minus[ua][ub];
      set(a, b, s ? neg(r) : r);
    }
  return make_group("Q8", rows);
}

GroupPtr c7_c3() {
  auto c7 = cyclic_group(7);
  std::vector<std::vector<Index>> act(3, std::vector<Index>(7));
  for (int x = 0; x < 7; ++x) {
    act[0][x] = x;
    act[1][x] = (2 * x) % 7;
    act[2][x] = (4 * x) % 7;
  }
  auto sd = semidirect_product(c7, cyclic_group(3), act);
  return make_group("C7:C3", sd.group->order(), sd.group->table());
}

GroupPtr catalog_group(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name == "V4") return klein4();
  if (name == "A4") return alternating4();
  if (name == "Q8") return quaternion8();
  if (name == "C7:C3") return c7_c3();
  if (name.size() > 1 && name[0] == 'D') {
    int n = std::stoi(name.substr(1));
    return dihedral_group(n);
  }
  if (name.rfind("Cn:", 0) == 0) return cyclic_group(std::stoi(name.substr(3)));
  if (name.size() > 1 && name[0] == 'C' && name.find(':') == std::string::npos)
    return cyclic_group(std::stoi(name.substr(1)));
  if (name.rfind("Ab:", 0) == 0) {
    std::vector<long long> factors;
    std::string rest = name.substr(3);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t next = rest.find(',', pos);
      if (next == std::string::npos) next = rest.size();
      factors.push_back(std::stoll(rest.substr(pos, next - pos)));
      pos = next + 1;
    }
    return abelian_group(factors);
  }
  throw std::invalid_argument("unknown catalog group: " + name);
}

std::vector<std::string> catalog_names() {
  return {"S3", "V4", "A4", "Q8", "C7:C3", "D2", "D3", "D4", "D5", "D6",
          "Cn:k", "Ab:d1,d2,..."};
}

}  // namespace profin
