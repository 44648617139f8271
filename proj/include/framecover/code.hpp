#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framecover/bitvec.hpp"

namespace framecover {

/// A (v,t)-code: t codewords of length v, stored as rows of the incidence
/// matrix. Row indices are user ids; positions are 0-based.
class BinaryCode {
 public:
  /// Throws ParameterError on an empty code, zero length or ragged rows.
  explicit BinaryCode(std::vector<BitVec> rows);
  static BinaryCode from_strings(const std::vector<std::string>& rows);

  int size() const { return static_cast<int>(rows_.size()); }
  int length() const { return length_; }
  const BitVec& row(int i) const { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }
  /// Column j as a bit vector over rows.
  BitVec column(int j) const;

  /// First pair of identical rows (i < j), if any.
  std::optional<std::pair<int, int>> duplicate_rows() const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  std::vector<BitVec> rows_;
  int length_ = 0;
};

/// Sorted, distinct row indices. Nonempty.
using Coalition = std::vector<int>;

/// Validates and sorts; throws ParameterError for empty or out-of-range input.
Coalition make_coalition(const BinaryCode& code, std::vector<int> members);

/// Positions where all members agree, split by the agreed value.
struct AgreementProfile {
  BitVec ones;   // every member has 1
  BitVec zeros;  // every member has 0
  BitVec undetectable() const { return ones | zeros; }
};

AgreementProfile agreement(const BinaryCode& code, const Coalition& c);

/// U(C): positions where every member of c agrees.
BitVec undetectable_positions(const BinaryCode& code, const Coalition& c);

/// x is in F(C) iff x matches the coalition on every undetectable position.
bool in_feasible_set(const BinaryCode& code, const Coalition& c, const BitVec& x);

struct Separation {
  bool disjoint = false;
  std::optional<int> position;  // lowest separating position
};

/// F(c1) and F(c2) are disjoint iff some position is undetectable for both
/// coalitions with different agreed values. Overlapping coalitions are allowed.
Separation feasible_sets_disjoint(const BinaryCode& code, const Coalition& c1, const Coalition& c2);

struct VerifyOptions {
  /// Check only coalitions of size exactly r. Sound when t >= 2r.
  bool size_r_only = false;
};

struct SfpcVerdict {
  bool pass = true;
  Coalition c1, c2;  // least violating pair when !pass, c1 < c2
};

/// r-secure frameproof check over all disjoint coalition pairs of size <= r.
/// Parallel scan; the reported witness is the lexicographically least pair.
SfpcVerdict is_sfpc(const BinaryCode& code, int r, VerifyOptions opts = {});

struct FrameproofVerdict {
  bool pass = true;
  Coalition coalition;  // least coalition that frames someone
  int framed = -1;      // least row outside it lying in F(coalition)
};

/// r-frameproof check: no coalition of size <= r has a foreign row in F(C).
FrameproofVerdict is_frameproof(const BinaryCode& code, int r);

/// Position-wise majority of an odd-size coalition.
BitVec majority_word(const BinaryCode& code, const Coalition& d);

namespace serial {
/// Single-threaded reference for is_sfpc; identical contract.
SfpcVerdict is_sfpc(const BinaryCode& code, int r, VerifyOptions opts = {});
}  // namespace serial

}  // namespace framecover
