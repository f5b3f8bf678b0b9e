#include "transcat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <ostream>
#include <sstream>

namespace transcat {

Permutation::Permutation(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw Error("permutation degree out of range: " + std::to_string(degree));
  }
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<Point>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error("image list is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
    p.img_[static_cast<std::size_t>(i)] = static_cast<Point>(v);
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::array<bool, kMaxDegree> used{};
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i];
      const int b = cyc[(i + 1) % cyc.size()];
      if (a < 0 || a >= degree || b < 0 || b >= degree || used[static_cast<std::size_t>(a)]) {
        throw Error("invalid cycle notation");
      }
      used[static_cast<std::size_t>(a)] = true;
      p.img_[static_cast<std::size_t>(a)] = static_cast<Point>(b);
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) {
    r.img_[static_cast<std::size_t>(i)] = rhs.img_[img_[static_cast<std::size_t>(i)]];
  }
  return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (&rhs == this) {
    *this = *this * rhs;
    return *this;
  }
  for (int i = 0; i < degree_; ++i) {
    img_[static_cast<std::size_t>(i)] = rhs.img_[img_[static_cast<std::size_t>(i)]];
  }
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) r.img_[img_[static_cast<std::size_t>(i)]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result(degree_);
  while (k > 0) {
    if (k & 1ULL) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate(const Permutation& c) const {
  // c^-1 * this * c maps c(x) to c(this(x)).
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) {
    r.img_[c.img_[static_cast<std::size_t>(i)]] = c.img_[img_[static_cast<std::size_t>(i)]];
  }
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

int Permutation::fixed_points() const {
  int c = 0;
  for (int i = 0; i < degree_; ++i) c += (img_[static_cast<std::size_t>(i)] == i);
  return c;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || img_[static_cast<std::size_t>(i)] == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation Permutation::extended(int new_degree) const {
  Permutation r(new_degree);
  for (int i = 0; i < degree_; ++i) r.img_[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)];
  return r;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < degree_; ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[static_cast<std::size_t>(i)]);
  }
  return s;
}

std::string Permutation::to_cycle_string(bool one_based) const {
  const auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::string s;
  for (const auto& c : cyc) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + (one_based ? 1 : 0));
    }
    s += ')';
  }
  return s;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the used prefix.
  std::size_t h = 1469598103934665603ULL ^ degree_;
  for (int i = 0; i < degree_; ++i) {
    h ^= img_[static_cast<std::size_t>(i)];
    h *= 1099511628211ULL;
  }
  return h;
}

bool operator==(const Permutation& a, const Permutation& b) {
  return a.degree_ == b.degree_ && std::memcmp(a.img_.data(), b.img_.data(), a.degree_) == 0;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const int c = std::memcmp(a.img_.data(), b.img_.data(), a.degree_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_ints(std::string_view s) {
  std::vector<int> out;
  std::string buf(s);
  for (char& ch : buf) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(buf);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw Error("bad integer in permutation: '" + tok + "'");
    }
    if (pos != tok.size()) throw Error("bad integer in permutation: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (degree <= 0) throw Error("cycle notation requires an explicit degree");
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      if (text[i] != '(') throw Error("malformed cycle notation");
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw Error("unterminated cycle");
      auto pts = parse_ints(text.substr(i + 1, close - i - 1));
      if (pts.size() > 1) cycles.push_back(std::move(pts));
      i = close + 1;
    }
    return Permutation::from_cycles(degree, cycles);
  }
  const auto ints = parse_ints(text);
  if (degree > 0 && static_cast<int>(ints.size()) != degree) {
    throw Error("image list has " + std::to_string(ints.size()) + " entries, expected " +
                std::to_string(degree));
  }
  return Permutation::from_images(ints);
}

std::vector<Permutation> parse_generators(std::string_view text, int degree) {
  std::vector<Permutation> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto piece = trim(text.substr(start, end - start));
    if (!piece.empty()) {
      gens.push_back(parse_permutation(piece, degree));
      if (degree <= 0) degree = gens.back().degree();
      if (gens.back().degree() != degree) throw Error("generators of differing degree");
    }
    start = end + 1;
  }
  return gens;
}

std::string format_generators(std::span<const Permutation> gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += "; ";
    s += gens[i].to_string();
  }
  return s;
}

}  // namespace transcat
