#include "framecover/code.hpp"

#include <algorithm>
#include <limits>

#include "framecover/errors.hpp"
#include "framecover/subset.hpp"

namespace framecover {

BinaryCode::BinaryCode(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ParameterError("a code needs at least one codeword");
  length_ = static_cast<int>(rows_.front().size());
  if (length_ < 1) throw ParameterError("codewords need length >= 1");
  for (const auto& row : rows_)
    if (static_cast<int>(row.size()) != length_) throw ParameterError("codewords differ in length");
}

BinaryCode BinaryCode::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> bits;
  bits.reserve(rows.size());
  for (const auto& r : rows) bits.push_back(BitVec::from_string(r));
  return BinaryCode(std::move(bits));
}

BitVec BinaryCode::column(int j) const {
  BitVec col(rows_.size());
  for (int i = 0; i < size(); ++i)
    if (rows_[i].test(j)) col.set(i);
  return col;
}

std::optional<std::pair<int, int>> BinaryCode::duplicate_rows() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (rows_[i] == rows_[j]) return std::pair{i, j};
  return std::nullopt;
}

Coalition make_coalition(const BinaryCode& code, std::vector<int> members) {
  if (members.empty()) throw ParameterError("coalitions must be nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.front() < 0 || members.back() >= code.size())
    throw ParameterError("coalition member outside [0, " + std::to_string(code.size()) + ")");
  return members;
}

AgreementProfile agreement(const BinaryCode& code, const Coalition& c) {
  if (c.empty()) throw ParameterError("coalitions must be nonempty");
  AgreementProfile p{code.row(c.front()), ~code.row(c.front())};
  for (std::size_t k = 1; k < c.size(); ++k) {
    p.ones &= code.row(c[k]);
    p.zeros &= ~code.row(c[k]);
  }
  return p;
}

BitVec undetectable_positions(const BinaryCode& code, const Coalition& c) { return agreement(code, c).undetectable(); }

bool in_feasible_set(const BinaryCode& code, const Coalition& c, const BitVec& x) {
  const AgreementProfile p = agreement(code, c);
  return p.ones.subset_of(x) && !p.zeros.intersects(x);
}

namespace {

bool separated(const AgreementProfile& a, const AgreementProfile& b) {
  return a.ones.intersects(b.zeros) || a.zeros.intersects(b.ones);
}

}  // namespace

Separation feasible_sets_disjoint(const BinaryCode& code, const Coalition& c1, const Coalition& c2) {
  const AgreementProfile a = agreement(code, c1);
  const AgreementProfile b = agreement(code, c2);
  const BitVec sep = (a.ones & b.zeros) | (a.zeros & b.ones);
  if (sep.none()) return {};
  return {true, static_cast<int>(sep.first())};
}

namespace {

std::vector<Coalition> coalitions_for(const BinaryCode& code, int r, VerifyOptions opts) {
  const int t = code.size();
  if (t < 2) throw ParameterError("secure frameproof checks need at least two codewords");
  if (r < 1 || r >= t)
    throw ParameterError("coalition bound r=" + std::to_string(r) + " outside [1, t-1] for t=" + std::to_string(t));
  if (opts.size_r_only && t < 2 * r) throw ParameterError("size-r-only mode requires t >= 2r");
  std::vector<Coalition> all = combinations_up_to(t, r);
  if (opts.size_r_only)
    std::erase_if(all, [r](const Coalition& c) { return static_cast<int>(c.size()) != r; });
  return all;
}

bool disjoint_members(const Coalition& a, const Coalition& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

/// First j > i whose coalition is disjoint from and not separated from i.
int first_violation(const std::vector<Coalition>& cs, const std::vector<AgreementProfile>& ps, std::size_t i) {
  for (std::size_t j = i + 1; j < cs.size(); ++j)
    if (disjoint_members(cs[i], cs[j]) && !separated(ps[i], ps[j])) return static_cast<int>(j);
  return -1;
}

}  // namespace

SfpcVerdict is_sfpc(const BinaryCode& code, int r, VerifyOptions opts) {
  const std::vector<Coalition> cs = coalitions_for(code, r, opts);
  const long n = static_cast<long>(cs.size());
  std::vector<AgreementProfile> ps(cs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) ps[i] = agreement(code, cs[i]);

  // the least violating i carries the least witness; scan chunks in parallel
  // and reduce on the index
  long best_i = std::numeric_limits<long>::max();
  std::vector<int> partner(cs.size(), -1);
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best_i)
  for (long i = 0; i < n; ++i) {
    if (i > best_i) continue;
    partner[i] = first_violation(cs, ps, static_cast<std::size_t>(i));
    if (partner[i] >= 0) best_i = std::min(best_i, i);
  }
  if (best_i == std::numeric_limits<long>::max()) return {};
  return {false, cs[best_i], cs[partner[best_i]]};
}

namespace serial {

SfpcVerdict is_sfpc(const BinaryCode& code, int r, VerifyOptions opts) {
  const std::vector<Coalition> cs = coalitions_for(code, r, opts);
  std::vector<AgreementProfile> ps;
  ps.reserve(cs.size());
  for (const auto& c : cs) ps.push_back(agreement(code, c));
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (int j = first_violation(cs, ps, i); j >= 0) return {false, cs[i], cs[j]};
  return {};
}

}  // namespace serial

FrameproofVerdict is_frameproof(const BinaryCode& code, int r) {
  const int t = code.size();
  if (r < 1) throw ParameterError("coalition bound r must be >= 1");
  for (const Coalition& c : combinations_up_to(t, std::min(r, t))) {
    const AgreementProfile p = agreement(code, c);
    for (int x = 0; x < t; ++x) {
      if (std::binary_search(c.begin(), c.end(), x)) continue;
      if (p.ones.subset_of(code.row(x)) && !p.zeros.intersects(code.row(x))) return {false, c, x};
    }
  }
  return {};
}

BitVec majority_word(const BinaryCode& code, const Coalition& d) {
  if (d.empty() || d.size() % 2 == 0) throw ParameterError("majority needs an odd-size coalition");
  BitVec out(code.length());
  const std::size_t half = d.size() / 2;
  for (int pos = 0; pos < code.length(); ++pos) {
    std::size_t ones = 0;
    for (int m : d) ones += code.row(m).test(pos);
    if (ones > half) out.set(pos);
  }
  return out;
}

}  // namespace framecover
