#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mta/series.hpp"

namespace mta {

/// Index of a SAX bucket; 0 is the lowest. Rendered as 'a' + index.
using Symbol = std::uint8_t;
using SymbolString = std::vector<Symbol>;

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 26;

struct SaxConfig {
  std::size_t symbol_length = 10;  // points per window / symbol (s)
  int alphabet_size = 10;          // number of buckets (a)

  /// Throws unless 1 <= symbol_length and 2 <= alphabet_size <= 26.
  void validate() const;
};

struct Breakpoints {
  std::vector<double> cuts;  // a - 1 strictly increasing cut points
};

/// Inverse of the standard normal CDF for p in (0, 1). Wichura's AS241
/// (PPND16), relative accuracy about 1e-16.
double inverse_normal_cdf(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// cuts[i] = Phi^-1((i + 1) / a), splitting N(0,1) into a equiprobable areas.
Breakpoints gaussian_breakpoints(int alphabet_size);

/// Bucket of a value: the number of cuts at or below it, so a value exactly
/// on a cut lands in the bucket above the cut.
Symbol bucket_of(double value, const Breakpoints& breakpoints);

/// Symbol of one window, taken from the window mean.
Symbol window_symbol(std::span<const double> window, const Breakpoints& breakpoints);

/// One symbol per sliding window of length s: symbols[i] covers points i .. i+s-1.
struct SymbolMatrix {
  std::vector<Symbol> symbols;  // length m - s + 1
  SaxConfig config;
  std::size_t series_length = 0;

  std::size_t size() const { return symbols.size(); }
};

SymbolMatrix build_symbol_matrix(const NormalizedSeries& norm, const SaxConfig& config);

char render_symbol(Symbol symbol);
std::string render(std::span<const Symbol> text);

}  // namespace mta
