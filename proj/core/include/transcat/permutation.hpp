#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace transcat {

inline constexpr int kMaxDegree = 64;

using Point = std::uint8_t;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t size)
      : Error(what + " (size " + std::to_string(size) + ")"), size_(size) {}
  std::uint64_t size() const { return size_; }

 private:
  std::uint64_t size_;
};

/// A permutation of {0, ..., degree-1} stored as an image table.
///
/// Products compose left to right: (a * b)(x) = b(a(x)).  Conjugation
/// follows the same convention, g^c = c^-1 * g * c, so c maps the cycles
/// of g onto the cycles of g^c.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);

  /// Throws Error unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return degree_; }
  int operator[](int p) const { return img_[static_cast<std::size_t>(p)]; }
  int image(int p) const { return img_[static_cast<std::size_t>(p)]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(long long e) const;
  Permutation conjugate(const Permutation& c) const;

  bool is_identity() const;
  std::uint64_t order() const;
  int fixed_points() const;
  int support_size() const { return degree_ - fixed_points(); }
  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;

  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(int new_degree) const;

  std::string to_string() const;
  std::string to_cycle_string(bool one_based = false) const;

  std::size_t hash() const;
  const Point* data() const { return img_.data(); }

  friend bool operator==(const Permutation& a, const Permutation& b);
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  std::array<Point, kMaxDegree> img_{};
  std::uint8_t degree_ = 0;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

/// Parses one permutation: either a space-separated image list or cycle
/// notation such as "(0 1 2)(3 4)".  Points are 0-based.
Permutation parse_permutation(std::string_view text, int degree);

/// Parses `;`-separated generators.  With degree <= 0 the degree is taken
/// from the first image list.
std::vector<Permutation> parse_generators(std::string_view text, int degree = 0);

std::string format_generators(std::span<const Permutation> gens);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace transcat
