#include "tangentia/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace tangentia {

DivisorClass DivisorClass::exceptional(int index) {
  if (index < 1 || index > 6) throw std::invalid_argument("exceptional index must be in 1..6");
  DivisorClass c;
  c.a[static_cast<std::size_t>(index - 1)] = -1;
  return c;
}

DivisorClass DivisorClass::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty divisor class literal");
  const auto fail = [&](const std::string& why) {
    return std::invalid_argument("bad divisor class '" + std::string(text) + "': " + why);
  };
  if (s == "0") return {};

  DivisorClass c;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    long coeff = 1;
    const std::size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > digits_begin) coeff = std::stol(s.substr(digits_begin, pos - digits_begin));
    if (pos >= s.size()) throw fail("missing H or E<i>");
    if (s[pos] == 'H') {
      c.e += sign * coeff;
      ++pos;
    } else if (s[pos] == 'E') {
      ++pos;
      if (pos >= s.size() || s[pos] < '1' || s[pos] > '6') throw fail("exceptional index must be 1..6");
      c.a[static_cast<std::size_t>(s[pos] - '1')] -= sign * coeff;
      ++pos;
    } else {
      throw fail(std::string("unexpected '") + s[pos] + "'");
    }
  }
  return c;
}

std::string DivisorClass::str() const {
  std::string out;
  const auto term = [&out](long coeff, const std::string& symbol) {
    if (coeff == 0) return;
    if (coeff < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const long mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += symbol;
  };
  term(e, "H");
  for (std::size_t i = 0; i < a.size(); ++i) term(-a[i], "E" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

long pairing(const DivisorClass& c1, const DivisorClass& c2) {
  return c1.e * c2.e - std::inner_product(c1.a.begin(), c1.a.end(), c2.a.begin(), 0L);
}

long arithmetic_genus(const DivisorClass& c) {
  long g = (c.e - 1) * (c.e - 2) / 2;
  for (long ai : c.a) g -= ai * (ai - 1) / 2;
  return g;
}

long tangency_degree(const DivisorClass& c) {
  return 3 * c.e - std::accumulate(c.a.begin(), c.a.end(), 0L);
}

long ordered_count(const std::array<long, 6>& values) {
  std::map<long, long> mult;
  for (long v : values) ++mult[v];
  long count = 720;
  for (const auto& [value, m] : mult)
    for (long k = 2; k <= m; ++k) count /= k;
  return count;
}

long ClassTable::ordered_total(long p_a) const {
  long total = 0;
  for (const auto& row : rows)
    if (row.p_a == p_a) total += row.ordered_count;
  return total;
}

namespace {

// Calls visit on every non-decreasing sequence in [0, max_value]^6 summing to
// `sum`.
void for_each_multiset(long max_value, long sum, const std::function<void(const std::array<long, 6>&)>& visit) {
  std::array<long, 6> cur{};
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t idx, long lo, long remaining) {
    if (idx == cur.size()) {
      if (remaining == 0) visit(cur);
      return;
    }
    const long slots = static_cast<long>(cur.size() - idx);
    for (long v = lo; v <= max_value && v * slots <= remaining; ++v) {
      if (remaining - v > max_value * (slots - 1)) continue;
      cur[idx] = v;
      rec(idx + 1, v, remaining - v);
    }
  };
  rec(0, 0, sum);
}

}  // namespace

ClassTable enumerate_classes(long target_degree) {
  if (target_degree < 1) throw std::invalid_argument("target degree must be positive");
  ClassTable table;
  table.target_degree = target_degree;
  table.validated = target_degree == 4;
  const long e_max = 7 * target_degree / 3;
  for (long e = 2; e <= e_max; ++e) {
    const long sum = 3 * e - target_degree;
    if (sum < 0) continue;
    for_each_multiset(target_degree, sum, [&](const std::array<long, 6>& a) {
      const DivisorClass c{e, a};
      const long pa = arithmetic_genus(c);
      if (pa < 0) return;
      table.rows.push_back({e, a, pa, ordered_count(a)});
    });
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const ClassTableRow& x, const ClassTableRow& y) {
    return std::tie(x.e, x.a_multiset) < std::tie(y.e, y.a_multiset);
  });
  return table;
}

std::vector<DivisorClass> enumerate_ordered_classes(long target_degree) {
  std::vector<DivisorClass> out;
  for (const auto& row : enumerate_classes(target_degree).rows) {
    auto a = row.a_multiset;
    do {
      out.push_back({row.e, a});
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return out;
}

DivisorClass quadratic_transform(const DivisorClass& c, int i, int j, int k) {
  if (i == j || j == k || i == k || i < 0 || j < 0 || k < 0 || i > 5 || j > 5 || k > 5)
    throw std::invalid_argument("quadratic transform needs three distinct indices in 0..5");
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j), uk = static_cast<std::size_t>(k);
  DivisorClass out = c;
  out.e = 2 * c.e - c.a[ui] - c.a[uj] - c.a[uk];
  out.a[ui] = c.e - c.a[uj] - c.a[uk];
  out.a[uj] = c.e - c.a[ui] - c.a[uk];
  out.a[uk] = c.e - c.a[ui] - c.a[uj];
  return out;
}

std::vector<DivisorClass> cremona_trace(const DivisorClass& c) {
  const long pa = arithmetic_genus(c);
  if (tangency_degree(c) != 4 || (pa != 0 && pa != 1))
    throw std::invalid_argument("cremona reduction needs tangency degree 4 and p_a in {0,1}: " + c.str());

  std::vector<DivisorClass> trace{c};
  for (int iter = 0; iter < kCremonaIterationCap; ++iter) {
    const DivisorClass& cur = trace.back();
    long best = 0;
    std::array<int, 3> centre{-1, -1, -1};
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          const long s = cur.a[static_cast<std::size_t>(i)] + cur.a[static_cast<std::size_t>(j)] +
                         cur.a[static_cast<std::size_t>(k)];
          // Strict comparison keeps the lexicographically first maximal triple.
          if (centre[0] < 0 || s > best) {
            best = s;
            centre = {i, j, k};
          }
        }
    if (best <= cur.e) return trace;
    trace.push_back(quadratic_transform(cur, centre[0], centre[1], centre[2]));
  }
  throw std::runtime_error("cremona reduction did not terminate within " + std::to_string(kCremonaIterationCap) +
                           " steps for " + c.str());
}

DivisorClass cremona_reduce(const DivisorClass& c) {
  DivisorClass out = cremona_trace(c).back();
  std::sort(out.a.begin(), out.a.end(), std::greater<>());
  const long pa = arithmetic_genus(c);
  const DivisorClass expected = pa == 0 ? DivisorClass{2, {1, 1, 0, 0, 0, 0}} : DivisorClass{3, {1, 1, 1, 1, 1, 0}};
  if (out != expected)
    throw std::runtime_error("cremona reduction of " + c.str() + " ended at unexpected class " + out.str());
  return out;
}

}  // namespace tangentia
