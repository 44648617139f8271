#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framecover/cover.hpp"

namespace framecover {

/// Square +1/-1 matrix. Construction checks only shape and entries; whether
/// it is Hadamard is decided by verify_hadamard.
class SignMatrix {
 public:
  SignMatrix(int order, std::vector<std::int8_t> entries);
  /// Rows of '+' and '-' characters.
  static SignMatrix from_strings(const std::vector<std::string>& rows);

  int order() const { return order_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
  void negate_row(int i);
  void negate_column(int j);
  bool normalized() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int order_;
  std::vector<std::int8_t> entries_;
};

using HadamardMatrix = SignMatrix;

/// Order 2^k by repeated doubling [[H, H], [H, -H]].
HadamardMatrix sylvester(int k);

/// H * H^T == n * I.
bool verify_hadamard(const SignMatrix& h);

/// Negates rows, then columns, so the first column and first row are all +1.
SignMatrix normalize(SignMatrix h);

/// 2d-cover of K_{8d} with 4d bicliques from a Hadamard matrix of order 4d.
/// Vertex u_i is id i-1, v_i is id 4d+i-1. Column j gives
///   X_j = {u_i : h_ij = +1} + {v_i : h_ij = -1},  Y_j the rest.
BicliqueCover k8d_cover(const HadamardMatrix& h);

/// d-cover of K-_{8d-2,8d-2} with 4d bicliques from a normalized Hadamard
/// matrix of order 4d with its first row deleted. Left ids: u_i = i-1,
/// v_i = 4d-1+i-1; right ids offset by m = 8d-2, with u_i u'_i and v_i v'_i
/// the removed matching.
BicliqueCover kmm_minus_cover(const HadamardMatrix& h);

}  // namespace framecover
