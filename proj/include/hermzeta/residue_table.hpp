#pragma once

// Fast representation counts for long truncated zeta sums.
//
// The count of (x, y) mod M with N(x + y w) = delta mod M is multiplicative
// in M (CRT), so it suffices to tabulate full residue histograms of the norm
// form for the prime powers dividing the requested moduli. Each histogram is
// built row by row with the SIMD row kernels.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hermzeta/discriminants.hpp"
#include "hermzeta/hermitian_count.hpp"
#include "hermzeta/kernels/residue_row.hpp"

namespace hermzeta {

/// histogram[v] = #{(x, y) mod modulus : form(x, y) = v mod modulus}.
/// Rows x and modulus - x carry the same multiset of values, so only half of
/// the rows are walked.
std::vector<std::uint64_t> norm_residue_histogram(const NormForm& form, std::uint32_t modulus,
                                                  kernels::SimdLevel level);

class ResidueCountTable {
 public:
  ResidueCountTable(const FundamentalDiscriminant& D, std::span<const std::uint64_t> moduli,
                    unsigned threads = 1,
                    kernels::SimdLevel level = kernels::detected_simd_level());

  /// Table for r(delta, n), n = 1..max_n.
  static ResidueCountTable for_r(const FundamentalDiscriminant& D, std::uint64_t max_n,
                                 unsigned threads = 1);
  /// Table for r*(delta, n), n = 1..max_n (moduli n|D|).
  static ResidueCountTable for_r_star(const FundamentalDiscriminant& D, std::uint64_t max_n,
                                      unsigned threads = 1);

  const FundamentalDiscriminant& discriminant() const { return disc_; }

  /// #{(x, y) mod modulus : N = delta mod modulus}; every prime power of
  /// modulus must have been tabulated (std::out_of_range otherwise).
  std::uint64_t raw_count(std::int64_t delta, std::uint64_t modulus) const;

  std::uint64_t r(std::int64_t delta, std::uint64_t n) const { return raw_count(delta, n); }
  /// Throws InterpretationError when the raw count is not divisible by |D|.
  std::uint64_t r_star(std::int64_t delta, std::uint64_t n) const;

  std::size_t prime_power_count() const { return histograms_.size(); }

 private:
  FundamentalDiscriminant disc_;
  std::map<std::uint64_t, std::vector<std::uint64_t>> histograms_;
};

struct TruncatedSum {
  double value;      // sum_{n <= N} count(n) / n^{2k+1}
  double last_term;  // count(N) / N^{2k+1}
};

/// Partial sum of Z(delta, 2k) = sum r(delta, n) / n^{2k+1}, accumulated in
/// 256-bit floating point. The table must cover n = 1..terms.
TruncatedSum truncated_Z(const ResidueCountTable& table, std::int64_t delta, unsigned k,
                         std::uint64_t terms);
/// Same for Z*(delta, 2k) with r*.
TruncatedSum truncated_Z_star(const ResidueCountTable& table, std::int64_t delta, unsigned k,
                              std::uint64_t terms);

/// Convenience overloads that build their own table.
TruncatedSum truncated_Z(std::int64_t delta, const FundamentalDiscriminant& D, unsigned k,
                         std::uint64_t terms);
TruncatedSum truncated_Z_star(std::int64_t delta, const FundamentalDiscriminant& D, unsigned k,
                              std::uint64_t terms);

}  // namespace hermzeta
