#include "transcat/orbitals.hpp"

#include <algorithm>

namespace transcat {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

OrbitalStructure orbital_structure(const PermGroup& g) {
  const int n = g.degree();
  OrbitalStructure os;
  os.n = n;
  os.index.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const std::size_t start = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
      if (os.index[start] >= 0) continue;
      const int id = os.count();
      os.rep.emplace_back(a, b);
      os.diagonal.push_back(a == b);
      os.index[start] = id;
      queue.assign(1, static_cast<int>(start));
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i] / n;
        const int y = queue[i] % n;
        for (const auto& s : g.generators()) {
          const std::size_t t = static_cast<std::size_t>(s[x]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(s[y]);
          if (os.index[t] < 0) {
            os.index[t] = id;
            queue.push_back(static_cast<int>(t));
          }
        }
      }
      os.size.push_back(static_cast<int>(queue.size()));
    }
  }
  os.paired.resize(os.rep.size());
  for (int o = 0; o < os.count(); ++o) {
    const auto [a, b] = os.rep[static_cast<std::size_t>(o)];
    os.paired[static_cast<std::size_t>(o)] = os.at(b, a);
  }
  return os;
}

std::vector<std::uint64_t> orbital_colors(const OrbitalStructure& os) {
  const int r = os.count();
  const int n = os.n;
  std::vector<std::uint64_t> color(static_cast<std::size_t>(r));
  for (int o = 0; o < r; ++o) {
    color[static_cast<std::size_t>(o)] =
        mix(static_cast<std::uint64_t>(os.size[static_cast<std::size_t>(o)]) * 4 +
            (os.diagonal[static_cast<std::size_t>(o)] ? 2 : 0) + (os.self_paired(o) ? 1 : 0));
  }
  auto distinct = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return std::unique(v.begin(), v.end()) - v.begin();
  };
  auto classes = distinct(color);
  std::vector<std::uint64_t> path;
  for (int round = 0; round < r + 1; ++round) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(r));
    for (int o = 0; o < r; ++o) {
      const auto [a, b] = os.rep[static_cast<std::size_t>(o)];
      path.clear();
      for (int x = 0; x < n; ++x) {
        path.push_back(mix(color[static_cast<std::size_t>(os.at(a, x))] * 3 + color[static_cast<std::size_t>(os.at(x, b))]));
      }
      std::sort(path.begin(), path.end());
      std::uint64_t h = mix(color[static_cast<std::size_t>(o)] ^ (color[static_cast<std::size_t>(os.paired[static_cast<std::size_t>(o)])] << 1));
      for (auto p : path) h = mix(h ^ p);
      next[static_cast<std::size_t>(o)] = h;
    }
    const auto c = distinct(next);
    color = std::move(next);
    if (c == classes) break;
    classes = c;
  }
  return color;
}

ColoredDigraph orbital_digraph(const OrbitalStructure& os) {
  ColoredDigraph d(os.n);
  for (int a = 0; a < os.n; ++a) {
    for (int b = 0; b < os.n; ++b) {
      if (a == b) {
        d.vertex_color[static_cast<std::size_t>(a)] = os.at(a, a);
      } else {
        d.set_arc(a, b, static_cast<std::uint16_t>(os.at(a, b) + 1));
      }
    }
  }
  return d;
}

}  // namespace transcat
