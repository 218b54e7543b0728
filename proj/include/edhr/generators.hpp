#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "edhr/instance.hpp"

namespace edhr {

/// The five random families:
///   UC  uncorrelated             p in [1,R],       w in [1,R]
///   WC  weakly correlated        w in [R/5+1, R],  p in [w-R/5, w+R/5]
///   SC  strongly correlated      w in [1,R],       p = w + R/5
///   IC  inverse strongly corr.   p in [1,R],       w = p + R/5
///   ASC almost strongly corr.    w in [1,R],       p in [w+R/10-R/50, w+R/10+R/50]
/// All divisions are floored; WC profits are clamped up to 1 where the lower
/// end of the interval would drop below it.
enum class Family { UC, WC, SC, IC, ASC };

Family family_from_string(const std::string& name);
std::string to_string(Family family);

struct GeneratorConfig {
  Family family = Family::UC;
  std::size_t n = 0;
  std::int64_t range = 1000;
  std::uint64_t seed = 0;
  bool force_break = true;
};

/// Draws an instance from the configured family with a fixed portable stream
/// (std::mt19937_64 seeded with the config seed, bounded draws by unbiased
/// rejection), so equal configs give bit-identical instances on every
/// platform.
///
/// With force_break the break-item convention is applied: items are sorted
/// by density, the item at position floor(n/2) (1-based) is overwritten with
/// w_b = floor(R/5) (IC: w_b = 2*floor(R/5), p_b = floor(R/5); SC: p_b =
/// w_b + floor(R/5); UC/WC/ASC: p_b redrawn per the family rule against the
/// new w_b), and the capacity is set to the post-override weight sum of
/// positions 1..b minus one. The overwritten item keeps its position even
/// when its new density no longer fits the slot; density_order_intact
/// flags affected instances. Without force_break the capacity is half the
/// total weight, clamped into the valid range.
Instance generate(const GeneratorConfig& cfg);

/// True when the item list is already in non-increasing density order
/// (exact cross-multiplication test). Generated force_break instances that
/// fail this re-sort differently, so their break item moves away from
/// position n/2.
bool density_order_intact(const Instance& inst);

/// Worst-case construction showing the reduction parameter is unbounded:
/// 2m + r + 1 unit items (p = w = 1) followed by two copies of
/// (p = 2m, w = 2m + r), capacity = unit count + r. The break item is the
/// first heavy copy, the residual equals r, and the unit items enter
/// N_{i,1} exactly when i > 2m. The constructor re-checks that membership
/// threshold before returning.
struct AdversaryConfig {
  std::int64_t m = 1;
  std::int64_t r = 1;
};

Instance make_adversary(const AdversaryConfig& cfg);

/// Parse failure with 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Native instance text format: line 1 is "n C", lines 2..n+1 are "p w" in
/// original order, trailing newline. The reader tolerates extra whitespace
/// and blank lines and validates the model assumptions; the writer is
/// deterministic.
Instance read_instance(std::istream& in);
Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& inst, std::ostream& out);
void write_instance(const Instance& inst, const std::filesystem::path& path);

/// Jooken-style layout: line 1 is n, the next n lines are "index profit
/// weight" with indices required to run 1..n in order, the final line is the
/// capacity.
Instance read_jooken(std::istream& in);
Instance read_jooken(const std::filesystem::path& path);
void write_jooken(const Instance& inst, std::ostream& out);
void write_jooken(const Instance& inst, const std::filesystem::path& path);

}  // namespace edhr
