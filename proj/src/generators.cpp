#include "edhr/generators.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "edhr/reduction.hpp"

namespace edhr {
namespace {

// Unbiased bounded draw on top of the fixed mt19937_64 stream (rejection on
// the low 2^64 mod bound values), so instances are reproducible across
// platforms and standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

std::int64_t draw_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Item draw_item(std::mt19937_64& rng, Family family, std::int64_t range) {
  const std::int64_t r5 = range / 5;
  const std::int64_t r10 = range / 10;
  const std::int64_t r50 = range / 50;
  Item it;
  switch (family) {
    case Family::UC:
      it.profit = draw_in(rng, 1, range);
      it.weight = draw_in(rng, 1, range);
      break;
    case Family::WC:
      it.weight = draw_in(rng, r5 + 1, range);
      it.profit = std::max<std::int64_t>(1, draw_in(rng, it.weight - r5, it.weight + r5));
      break;
    case Family::SC:
      it.weight = draw_in(rng, 1, range);
      it.profit = it.weight + r5;
      break;
    case Family::IC:
      it.profit = draw_in(rng, 1, range);
      it.weight = it.profit + r5;
      break;
    case Family::ASC:
      it.weight = draw_in(rng, 1, range);
      it.profit = draw_in(rng, it.weight + r10 - r50, it.weight + r10 + r50);
      break;
  }
  return it;
}

// Break-item override: w_b = floor(R/5) except IC, profit per family rule.
Item draw_break_item(std::mt19937_64& rng, Family family, std::int64_t range) {
  const std::int64_t r5 = range / 5;
  const std::int64_t r10 = range / 10;
  const std::int64_t r50 = range / 50;
  Item it;
  it.weight = r5;
  switch (family) {
    case Family::UC:
      it.profit = draw_in(rng, 1, range);
      break;
    case Family::WC:
      it.profit = std::max<std::int64_t>(1, draw_in(rng, it.weight - r5, it.weight + r5));
      break;
    case Family::SC:
      it.profit = it.weight + r5;
      break;
    case Family::IC:
      it.weight = 2 * r5;
      it.profit = r5;
      break;
    case Family::ASC:
      it.profit = draw_in(rng, it.weight + r10 - r50, it.weight + r10 + r50);
      break;
  }
  return it;
}

void sort_by_density(std::vector<Item>& items) {
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    const auto cross_a = static_cast<__int128>(a.profit) * b.weight;
    const auto cross_b = static_cast<__int128>(b.profit) * a.weight;
    if (cross_a != cross_b) return cross_a > cross_b;
    return a.weight < b.weight;
  });
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "UC") return Family::UC;
  if (name == "WC") return Family::WC;
  if (name == "SC") return Family::SC;
  if (name == "IC") return Family::IC;
  if (name == "ASC") return Family::ASC;
  throw std::invalid_argument("unknown family: " + name +
                              " (expected UC, WC, SC, IC or ASC)");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::UC: return "UC";
    case Family::WC: return "WC";
    case Family::SC: return "SC";
    case Family::IC: return "IC";
    case Family::ASC: return "ASC";
  }
  return "?";
}

Instance generate(const GeneratorConfig& cfg) {
  if (cfg.range < 10) {
    throw std::invalid_argument("range must be at least 10 (floor(R/5) would degenerate)");
  }
  if (cfg.force_break) {
    if (cfg.n < 4 || cfg.n % 2 != 0) {
      throw std::invalid_argument(
          "force_break needs an even item count of at least 4, got " +
          std::to_string(cfg.n));
    }
  } else if (cfg.n < 2) {
    throw std::invalid_argument("item count must be at least 2");
  }

  std::mt19937_64 rng(cfg.seed);
  Instance inst;
  inst.items.reserve(cfg.n);
  for (std::size_t j = 0; j < cfg.n; ++j) {
    inst.items.push_back(draw_item(rng, cfg.family, cfg.range));
  }

  if (cfg.force_break) {
    sort_by_density(inst.items);
    const std::size_t b = cfg.n / 2;  // 1-based break position
    inst.items[b - 1] = draw_break_item(rng, cfg.family, cfg.range);
    std::int64_t prefix = 0;
    for (std::size_t k = 0; k < b; ++k) prefix += inst.items[k].weight;
    inst.capacity = prefix - 1;
  } else {
    std::int64_t total = 0, max_weight = 0;
    for (const Item& it : inst.items) {
      total += it.weight;
      max_weight = std::max(max_weight, it.weight);
    }
    if (max_weight + 1 > total - 1) {
      throw std::invalid_argument("degenerate draw: one item carries the whole weight");
    }
    inst.capacity = std::clamp(total / 2, max_weight + 1, total - 1);
  }
  return inst;
}

bool density_order_intact(const Instance& inst) {
  for (std::size_t j = 0; j + 1 < inst.size(); ++j) {
    if (denser(inst.items[j + 1], inst.items[j])) return false;
  }
  return true;
}

Instance make_adversary(const AdversaryConfig& cfg) {
  if (cfg.m < 1 || cfg.r < 1) {
    throw std::invalid_argument("adversary needs m >= 1 and r >= 1");
  }
  const std::int64_t units = 2 * cfg.m + cfg.r + 1;
  Instance inst;
  inst.items.assign(static_cast<std::size_t>(units), Item{1, 1});
  inst.items.push_back(Item{2 * cfg.m, 2 * cfg.m + cfg.r});
  inst.items.push_back(Item{2 * cfg.m, 2 * cfg.m + cfg.r});
  inst.capacity = units + cfg.r;

  // The whole point of the construction: the unit items cross into N_{i,1}
  // exactly at i = 2m + 1.
  const SortedInstance s = normalize_and_sort(inst);
  const auto in_n1 = [&](std::int64_t i) {
    const auto& n1 = edhr_partition(s, i).n1;
    return std::find(n1.begin(), n1.end(), std::size_t{0}) != n1.end();
  };
  if (s.break_item().profit != 2 * cfg.m || s.residual != cfg.r ||
      in_n1(2 * cfg.m) || !in_n1(2 * cfg.m + 1)) {
    throw std::logic_error("adversary construction failed its postcondition");
  }
  return inst;
}

namespace {

std::vector<std::vector<std::int64_t>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::int64_t>> lines;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::int64_t> values;
    std::istringstream words(raw);
    std::string word;
    while (words >> word) {
      std::int64_t value = 0;
      const auto* first = word.data();
      const auto* last = word.data() + word.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, "invalid integer '" + word + "'");
      }
      values.push_back(value);
    }
    if (!values.empty()) {
      values.push_back(static_cast<std::int64_t>(line_no));  // trailing: source line
      lines.push_back(std::move(values));
    }
  }
  return lines;
}

std::size_t line_of(const std::vector<std::int64_t>& tokens) {
  return static_cast<std::size_t>(tokens.back());
}

void validate_parsed(const Instance& inst) {
  try {
    validate(inst);
  } catch (const InvalidInstance& e) {
    throw ParseError(1, std::string("instance violates model assumptions: ") + e.what());
  }
}

}  // namespace

Instance read_instance(std::istream& in) {
  const auto lines = tokenize_lines(in);
  if (lines.empty()) throw ParseError(1, "empty instance file");
  if (lines[0].size() != 3) {
    throw ParseError(line_of(lines[0]), "expected header 'n C'");
  }
  const std::int64_t n = lines[0][0];
  if (n < 0) throw ParseError(line_of(lines[0]), "negative item count");
  Instance inst;
  inst.capacity = lines[0][1];
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError(lines.size() < static_cast<std::size_t>(n) + 1
                         ? line_of(lines.back()) + 1
                         : line_of(lines[static_cast<std::size_t>(n) + 1]),
                     "expected " + std::to_string(n) + " item lines");
  }
  for (std::int64_t j = 1; j <= n; ++j) {
    const auto& tokens = lines[static_cast<std::size_t>(j)];
    if (tokens.size() != 3) {
      throw ParseError(line_of(tokens), "expected 'profit weight'");
    }
    inst.items.push_back(Item{tokens[0], tokens[1]});
  }
  validate_parsed(inst);
  return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
  out << inst.size() << ' ' << inst.capacity << '\n';
  for (const Item& it : inst.items) {
    out << it.profit << ' ' << it.weight << '\n';
  }
}

Instance read_jooken(std::istream& in) {
  const auto lines = tokenize_lines(in);
  if (lines.empty()) throw ParseError(1, "empty instance file");
  if (lines[0].size() != 2) {
    throw ParseError(line_of(lines[0]), "expected item count on the first line");
  }
  const std::int64_t n = lines[0][0];
  if (n < 0) throw ParseError(line_of(lines[0]), "negative item count");
  if (lines.size() < static_cast<std::size_t>(n) + 2) {
    throw ParseError(line_of(lines.back()) + 1,
                     "truncated file: expected " + std::to_string(n) +
                         " item lines plus a capacity line");
  }
  if (lines.size() > static_cast<std::size_t>(n) + 2) {
    throw ParseError(line_of(lines[static_cast<std::size_t>(n) + 2]),
                     "unexpected trailing content");
  }
  Instance inst;
  for (std::int64_t j = 1; j <= n; ++j) {
    const auto& tokens = lines[static_cast<std::size_t>(j)];
    if (tokens.size() != 4) {
      throw ParseError(line_of(tokens), "expected 'index profit weight'");
    }
    if (tokens[0] != j) {
      throw ParseError(line_of(tokens), "item index " + std::to_string(tokens[0]) +
                                            " out of order, expected " +
                                            std::to_string(j));
    }
    inst.items.push_back(Item{tokens[1], tokens[2]});
  }
  const auto& last = lines[static_cast<std::size_t>(n) + 1];
  if (last.size() != 2) {
    throw ParseError(line_of(last), "expected capacity on the final line");
  }
  inst.capacity = last[0];
  validate_parsed(inst);
  return inst;
}

void write_jooken(const Instance& inst, std::ostream& out) {
  out << inst.size() << '\n';
  for (std::size_t j = 0; j < inst.size(); ++j) {
    out << (j + 1) << ' ' << inst.items[j].profit << ' ' << inst.items[j].weight
        << '\n';
  }
  out << inst.capacity << '\n';
}

namespace {

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string() + " for reading");
  }
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  return out;
}

}  // namespace

Instance read_instance(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_instance(in);
}

void write_instance(const Instance& inst, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_instance(inst, out);
}

Instance read_jooken(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_jooken(in);
}

void write_jooken(const Instance& inst, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_jooken(inst, out);
}

}  // namespace edhr
