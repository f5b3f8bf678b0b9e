#pragma once

#include <vector>

#include "transcat/seeds.hpp"

namespace seedgen {

/// GF(p^e) with elements 0..q-1 as base-p digit vectors of polynomials.
struct Field {
  Field(int p, int e);
  int p, e, q;
  int add(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, int k) const;
  /// A generator of the multiplicative group.
  int gen() const { return exp_[1]; }

 private:
  int times_x(int a, int tail) const;
  std::vector<int> log_;
  std::vector<int> exp_;
};

std::vector<transcat::PrimitiveSeed> primitive_seeds(int max_degree);
std::vector<transcat::SmallGroupSeed> small_group_seeds(int max_order);

}  // namespace seedgen
