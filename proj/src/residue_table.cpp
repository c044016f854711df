#include "hermzeta/residue_table.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "hermzeta/errors.hpp"
#include "hermzeta/exact_arith.hpp"
#include "hermzeta/parallel.hpp"

namespace hermzeta {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t m) {
  const std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

constexpr unsigned kSumPrecisionBits = 256;

}  // namespace

std::vector<std::uint64_t> norm_residue_histogram(const NormForm& form, std::uint32_t modulus,
                                                  kernels::SimdLevel level) {
  if (modulus == 0 || modulus > kernels::kMaxRowModulus) {
    throw std::invalid_argument("norm_residue_histogram: modulus out of range");
  }
  std::vector<std::uint64_t> hist(modulus, 0);
  const std::uint64_t m = modulus;
  const std::uint32_t a_mod = reduce(form.a, modulus);
  const std::uint32_t b_mod = reduce(form.b, modulus);
  const std::uint32_t c_mod = reduce(form.c, modulus);

  // Row x: a x^2 + (b x) y + c y^2.
  auto row_for = [&](std::uint64_t x) {
    kernels::RowParams row{};
    row.modulus = modulus;
    row.constant = static_cast<std::uint32_t>(a_mod * (x * x % m) % m);
    row.linear = static_cast<std::uint32_t>(b_mod * x % m);
    row.quadratic = c_mod;
    return row;
  };

  kernels::accumulate_row(row_for(0), 1, hist, level);
  for (std::uint64_t x = 1; 2 * x < m; ++x) kernels::accumulate_row(row_for(x), 2, hist, level);
  if (m % 2 == 0 && m > 1) kernels::accumulate_row(row_for(m / 2), 1, hist, level);
  return hist;
}

ResidueCountTable::ResidueCountTable(const FundamentalDiscriminant& D,
                                     std::span<const std::uint64_t> moduli, unsigned threads,
                                     kernels::SimdLevel level)
    : disc_(D) {
  const QuadraticIntegerRing ring(D);
  std::set<std::uint64_t> prime_powers;
  for (std::uint64_t modulus : moduli) {
    if (modulus == 0) throw std::invalid_argument("ResidueCountTable: modulus must be >= 1");
    for (const auto& [p, e] : factorize(static_cast<std::int64_t>(modulus))) {
      std::uint64_t q = 1;
      for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
      if (q > kernels::kMaxRowModulus) throw std::invalid_argument("ResidueCountTable: prime power too large");
      prime_powers.insert(q);
    }
  }

  // Largest first so the long jobs start early.
  const std::vector<std::uint64_t> order(prime_powers.rbegin(), prime_powers.rend());
  std::vector<std::vector<std::uint64_t>> built(order.size());
  parallel_for(order.size(), threads, [&](std::size_t i) {
    built[i] = norm_residue_histogram(ring.norm_form(), static_cast<std::uint32_t>(order[i]), level);
  });
  for (std::size_t i = 0; i < order.size(); ++i) histograms_.emplace(order[i], std::move(built[i]));
}

ResidueCountTable ResidueCountTable::for_r(const FundamentalDiscriminant& D, std::uint64_t max_n,
                                           unsigned threads) {
  std::vector<std::uint64_t> moduli;
  for (std::uint64_t n = 1; n <= max_n; ++n) moduli.push_back(n);
  return ResidueCountTable(D, moduli, threads);
}

ResidueCountTable ResidueCountTable::for_r_star(const FundamentalDiscriminant& D, std::uint64_t max_n,
                                                unsigned threads) {
  std::vector<std::uint64_t> moduli;
  const auto abs_d = static_cast<std::uint64_t>(D.abs());
  for (std::uint64_t n = 1; n <= max_n; ++n) moduli.push_back(n * abs_d);
  return ResidueCountTable(D, moduli, threads);
}

std::uint64_t ResidueCountTable::raw_count(std::int64_t delta, std::uint64_t modulus) const {
  if (modulus == 0) throw std::invalid_argument("raw_count: modulus must be >= 1");
  std::uint64_t count = 1;
  for (const auto& [p, e] : factorize(static_cast<std::int64_t>(modulus))) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
    const auto it = histograms_.find(q);
    if (it == histograms_.end()) {
      throw std::out_of_range("ResidueCountTable: prime power " + std::to_string(q) + " not tabulated");
    }
    const std::int64_t r = delta % static_cast<std::int64_t>(q);
    count *= it->second[static_cast<std::size_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r)];
  }
  return count;
}

std::uint64_t ResidueCountTable::r_star(std::int64_t delta, std::uint64_t n) const {
  const auto abs_d = static_cast<std::uint64_t>(disc_.abs());
  const std::uint64_t raw = raw_count(delta, n * abs_d);
  if (raw % abs_d != 0) {
    throw InterpretationError("ResidueCountTable::r_star: raw count not divisible by |D| at n = " +
                              std::to_string(n));
  }
  return raw / abs_d;
}

namespace {

template <typename CountFn>
TruncatedSum truncated_sum(CountFn count, unsigned k, std::uint64_t terms) {
  if (k < 1 || terms < 1) throw std::invalid_argument("truncated sum: need k >= 1 and terms >= 1");
  mpf_class acc(0, kSumPrecisionBits);
  mpf_class term(0, kSumPrecisionBits);
  mpf_class power(0, kSumPrecisionBits);
  const unsigned exponent = 2 * k + 1;
  for (std::uint64_t n = 1; n <= terms; ++n) {
    const std::uint64_t c = count(n);
    if (c == 0) {
      term = 0;
      continue;
    }
    mpf_pow_ui(power.get_mpf_t(), mpf_class(static_cast<unsigned long>(n), kSumPrecisionBits).get_mpf_t(),
               exponent);
    term = mpf_class(static_cast<unsigned long>(c), kSumPrecisionBits) / power;
    acc += term;
  }
  return {acc.get_d(), term.get_d()};
}

}  // namespace

TruncatedSum truncated_Z(const ResidueCountTable& table, std::int64_t delta, unsigned k,
                         std::uint64_t terms) {
  return truncated_sum([&](std::uint64_t n) { return table.r(delta, n); }, k, terms);
}

TruncatedSum truncated_Z_star(const ResidueCountTable& table, std::int64_t delta, unsigned k,
                              std::uint64_t terms) {
  return truncated_sum([&](std::uint64_t n) { return table.r_star(delta, n); }, k, terms);
}

TruncatedSum truncated_Z(std::int64_t delta, const FundamentalDiscriminant& D, unsigned k,
                         std::uint64_t terms) {
  return truncated_Z(ResidueCountTable::for_r(D, terms, default_thread_count()), delta, k, terms);
}

TruncatedSum truncated_Z_star(std::int64_t delta, const FundamentalDiscriminant& D, unsigned k,
                              std::uint64_t terms) {
  return truncated_Z_star(ResidueCountTable::for_r_star(D, terms, default_thread_count()), delta, k,
                          terms);
}

}  // namespace hermzeta
