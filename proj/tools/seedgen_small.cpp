#include <algorithm>
#include <functional>
#include <map>

#include "seedgen.hpp"

namespace seedgen {

using namespace transcat;

namespace {

PermGroup perm(int n, const char* text) { return PermGroup(n, parse_generators(text, n)); }

// Regular representation on the sorted element list, identity first.
std::vector<Permutation> regular(const PermGroup& g) {
  auto elems = g.elements();
  std::sort(elems.begin(), elems.end());
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<int> img;
    for (const auto& e : elems) img.push_back(index.at(e * x));
    gens.push_back(Permutation::from_images(img));
  }
  return gens;
}

// Group on the elements 0..order-1 with the given multiplication, acting on
// itself by right multiplication with the listed generators.
PermGroup from_table(int order, const std::function<int(int, int)>& mul, const std::vector<int>& gens) {
  std::vector<Permutation> out;
  for (int g : gens) {
    std::vector<int> img;
    for (int x = 0; x < order; ++x) img.push_back(mul(x, g));
    out.push_back(Permutation::from_images(img));
  }
  return PermGroup(order, out);
}

// <a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>; element a^i b^j is i + m j.
PermGroup metacyclic(int m, int n, int t, int r) {
  int rn = 1;
  for (int i = 0; i < n; ++i) rn = (rn * r) % m;
  if (rn != 1 % m || (t * r - t) % m != 0) throw Error("inconsistent metacyclic parameters");
  auto rpow = [&](int j) {
    int x = 1;
    for (int i = 0; i < j; ++i) x = (x * r) % m;
    return x;
  };
  auto mul = [&](int x, int y) {
    const int i = x % m, j = x / m, k = y % m, l = y / m;
    int a = (i + k * rpow(j)) % m;
    int b = j + l;
    if (b >= n) {
      b -= n;
      a = (a + t) % m;
    }
    return a + m * b;
  };
  return from_table(m * n, mul, {1 % (m * n), m % (m * n)});
}

PermGroup cyclic(int n) { return n == 1 ? PermGroup::trivial(1) : PermGroup::cyclic(n); }
PermGroup dihedral(int order) { return metacyclic(order / 2, 2, 0, order / 2 - 1); }

PermGroup direct(const PermGroup& a, const PermGroup& b) {
  const int n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& x : a.generators()) gens.push_back(x.extended(n));
  for (const auto& y : b.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i < a.degree() ? i : a.degree() + y[i - a.degree()];
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(n, gens);
}

PermGroup direct(std::initializer_list<PermGroup> gs) {
  auto it = gs.begin();
  PermGroup g = *it;
  for (++it; it != gs.end(); ++it) g = direct(g, *it);
  return g;
}

// (Z4 x Z2) : Z2 with the involution acting as `act`; element (x, y, z) is
// x + 4y + 8z.
PermGroup c4c2_by_c2(const std::function<std::pair<int, int>(int, int)>& act) {
  auto mul = [&](int u, int v) {
    int x1 = u % 4, y1 = (u / 4) % 2, z1 = u / 8;
    int x2 = v % 4, y2 = (v / 4) % 2, z2 = v / 8;
    if (z1) std::tie(x2, y2) = act(x2, y2);
    return (x1 + x2) % 4 + 4 * ((y1 + y2) % 2) + 8 * ((z1 + z2) % 2);
  };
  return from_table(16, mul, {1, 4, 8});
}

PermGroup sl23() {
  // SL(2,3) on the 8 non-zero vectors of F3^2 (vector x + 3y - 1).
  auto mat = [](int a, int b, int c, int d) {
    std::vector<int> img;
    for (int v = 1; v < 9; ++v) {
      const int x = v % 3, y = v / 3;
      img.push_back((x * a + y * c) % 3 + 3 * ((x * b + y * d) % 3) - 1);
    }
    return Permutation::from_images(img);
  };
  return PermGroup(8, {mat(1, 1, 0, 1), mat(1, 0, 1, 1)});
}

PermGroup heisenberg3() {
  // Upper unitriangular 3x3 matrices over F3 on row vectors (27 points).
  auto mat = [](int a, int b, int c) {
    std::vector<int> img;
    for (int v = 0; v < 27; ++v) {
      const int x = v % 3, y = (v / 3) % 3, z = v / 9;
      const int y2 = (y + a * x) % 3, z2 = (z + b * x + c * y) % 3;
      img.push_back(x + 3 * y2 + 9 * z2);
    }
    return Permutation::from_images(img);
  };
  return PermGroup(27, {mat(1, 0, 0), mat(0, 0, 1)});
}

}  // namespace

std::vector<SmallGroupSeed> small_group_seeds(int max_order) {
  const auto c2 = cyclic(2), c3 = cyclic(3), c4 = cyclic(4);
  const auto s3 = PermGroup::symmetric(3), a4 = PermGroup::alternating(4), d8 = dihedral(8);
  const auto q8 = metacyclic(4, 2, 2, 3), dic3 = metacyclic(6, 2, 3, 5);
  std::vector<std::pair<std::string, PermGroup>> list = {
      {"1", PermGroup::trivial(1)},
      {"C2", c2},
      {"C3", c3},
      {"C4", c4},
      {"C2xC2", direct(c2, c2)},
      {"C5", cyclic(5)},
      {"S3", s3},
      {"C6", cyclic(6)},
      {"C7", cyclic(7)},
      {"C8", cyclic(8)},
      {"C4xC2", direct(c4, c2)},
      {"D8", d8},
      {"Q8", q8},
      {"C2^3", direct({c2, c2, c2})},
      {"C9", cyclic(9)},
      {"C3xC3", direct(c3, c3)},
      {"D10", dihedral(10)},
      {"C10", cyclic(10)},
      {"C11", cyclic(11)},
      {"C3:C4", dic3},
      {"C12", cyclic(12)},
      {"A4", a4},
      {"D12", dihedral(12)},
      {"C6xC2", direct(cyclic(6), c2)},
      {"C13", cyclic(13)},
      {"D14", dihedral(14)},
      {"C14", cyclic(14)},
      {"C15", cyclic(15)},
      {"C16", cyclic(16)},
      {"C4xC4", direct(c4, c4)},
      {"(C4xC2):C2", c4c2_by_c2([](int x, int y) { return std::pair{x, (y + x) % 2}; })},
      {"C4:C4", metacyclic(4, 4, 0, 3)},
      {"C8xC2", direct(cyclic(8), c2)},
      {"M16", metacyclic(8, 2, 0, 5)},
      {"D16", dihedral(16)},
      {"QD16", metacyclic(8, 2, 0, 3)},
      {"Q16", metacyclic(8, 2, 4, 7)},
      {"C4xC2xC2", direct({c4, c2, c2})},
      {"C2xD8", direct(c2, d8)},
      {"C2xQ8", direct(c2, q8)},
      {"C4oD8", c4c2_by_c2([](int x, int y) { return std::pair{(x + 2 * y) % 4, y}; })},
      {"C2^4", direct({c2, c2, c2, c2})},
      {"C17", cyclic(17)},
      {"D18", dihedral(18)},
      {"C18", cyclic(18)},
      {"C3xS3", metacyclic(3, 6, 0, 2)},
      {"(C3xC3):C2", perm(6, "(0 1 2); (3 4 5); (1 2)(4 5)")},
      {"C6xC3", direct(cyclic(6), c3)},
      {"C19", cyclic(19)},
      {"C5:C4", metacyclic(10, 2, 5, 9)},
      {"C20", cyclic(20)},
      {"F20", metacyclic(5, 4, 0, 2)},
      {"D20", dihedral(20)},
      {"C10xC2", direct(cyclic(10), c2)},
      {"C7:C3", metacyclic(7, 3, 0, 2)},
      {"C21", cyclic(21)},
      {"D22", dihedral(22)},
      {"C22", cyclic(22)},
      {"C23", cyclic(23)},
      {"C3:C8", metacyclic(3, 8, 0, 2)},
      {"C24", cyclic(24)},
      {"SL(2,3)", sl23()},
      {"C3:Q8", metacyclic(12, 2, 6, 11)},
      {"C4xS3", direct(c4, s3)},
      {"D24", dihedral(24)},
      {"C2xDic3", direct(c2, dic3)},
      {"(C6xC2):C2", perm(7, "(0 1 2 3)(5 6); (1 3); (4 5 6)")},
      {"C12xC2", direct(cyclic(12), c2)},
      {"C3xD8", direct(c3, d8)},
      {"C3xQ8", direct(c3, q8)},
      {"S4", PermGroup::symmetric(4)},
      {"C2xA4", direct(c2, a4)},
      {"C2xC2xS3", direct({c2, c2, s3})},
      {"C6xC2xC2", direct({cyclic(6), c2, c2})},
      {"C25", cyclic(25)},
      {"C5xC5", direct(cyclic(5), cyclic(5))},
      {"D26", dihedral(26)},
      {"C26", cyclic(26)},
      {"C27", cyclic(27)},
      {"C9xC3", direct(cyclic(9), c3)},
      {"(C3xC3):C3", heisenberg3()},
      {"C9:C3", metacyclic(9, 3, 0, 4)},
      {"C3^3", direct({c3, c3, c3})},
      {"C7:C4", metacyclic(14, 2, 7, 13)},
      {"C28", cyclic(28)},
      {"D28", dihedral(28)},
      {"C14xC2", direct(cyclic(14), c2)},
      {"C29", cyclic(29)},
      {"C5xS3", metacyclic(3, 10, 0, 2)},
      {"C3xD10", metacyclic(5, 6, 0, 4)},
      {"D30", dihedral(30)},
      {"C30", cyclic(30)},
      {"C31", cyclic(31)},
  };
  std::vector<SmallGroupSeed> out;
  std::map<int, int> next;
  for (const auto& [name, g] : list) {
    const int order = static_cast<int>(g.order());
    if (order > max_order) continue;
    out.push_back({order, ++next[order], name, order == 1 ? std::vector<Permutation>{} : regular(g)});
  }
  return out;
}

}  // namespace seedgen
