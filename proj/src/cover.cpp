#include "tangentia/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tangentia {

namespace {

void require_positive(long v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(v));
}

Rat inverse_square(long d) { return Rat(BigInt(1), BigInt(d) * BigInt(d)); }

}  // namespace

Rat multiple_cover(long w, long d) {
  require_positive(w, "w");
  require_positive(d, "d");
  return Rat(binomial(d * (w - 1) - 1, d - 1)) * inverse_square(d);
}

Rat local_cover(long n, long d) {
  require_positive(n, "n");
  require_positive(d, "d");
  // Only the parity of n(d-1) matters.
  const bool odd = (n % 2 != 0) && ((d - 1) % 2 != 0);
  return odd ? -inverse_square(d) : inverse_square(d);
}

std::vector<long> divisors(long n) {
  require_positive(n, "n");
  std::vector<long> out;
  for (long k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

std::vector<Rat> instanton_numbers(long w, long d_max) {
  require_positive(w, "w");
  require_positive(d_max, "d_max");
  std::vector<Rat> m;
  m.reserve(static_cast<std::size_t>(d_max));
  for (long d = 1; d <= d_max; ++d) {
    Rat value = multiple_cover(w, d);
    for (long d1 : divisors(d)) {
      if (d1 == d) break;
      value -= local_cover(d1 * w, d / d1) * m[static_cast<std::size_t>(d1 - 1)];
    }
    m.push_back(value);  // M'_{dw}[1] = 1
  }
  return m;
}

std::vector<Rat> resum_instantons(long w, const std::vector<Rat>& instantons) {
  require_positive(w, "w");
  std::vector<Rat> out;
  const long d_max = static_cast<long>(instantons.size());
  for (long d = 1; d <= d_max; ++d) {
    Rat sum;
    for (long d1 : divisors(d)) sum += local_cover(d1 * w, d / d1) * instantons[static_cast<std::size_t>(d1 - 1)];
    out.push_back(sum);
  }
  return out;
}

CoverTable CoverTable::relative(long w_max, long d_max) {
  CoverTable t(CoverKind::Relative);
  for (long w = 1; w <= w_max; ++w)
    for (long d = 1; d <= d_max; ++d) t.entries_.emplace(std::pair{w, d}, multiple_cover(w, d));
  return t;
}

CoverTable CoverTable::local(long n_max, long d_max) {
  CoverTable t(CoverKind::Local);
  for (long n = 1; n <= n_max; ++n)
    for (long d = 1; d <= d_max; ++d) t.entries_.emplace(std::pair{n, d}, local_cover(n, d));
  return t;
}

CoverTable CoverTable::instanton(long w_max, long d_max) {
  CoverTable t(CoverKind::Instanton);
  for (long w = 1; w <= w_max; ++w) {
    const auto m = instanton_numbers(w, d_max);
    for (long d = 1; d <= d_max; ++d) t.entries_.emplace(std::pair{w, d}, m[static_cast<std::size_t>(d - 1)]);
  }
  return t;
}

const Rat& CoverTable::at(long w, long d) const {
  const auto it = entries_.find({w, d});
  if (it == entries_.end())
    throw std::out_of_range("no table entry for (" + std::to_string(w) + ", " + std::to_string(d) + ")");
  return it->second;
}

bool CoverTable::consistent() const {
  for (const auto& [key, value] : entries_) {
    const auto [w, d] = key;
    switch (kind_) {
      case CoverKind::Relative:
        if (value != multiple_cover(w, d)) return false;
        break;
      case CoverKind::Local:
        if (value != local_cover(w, d)) return false;
        break;
      case CoverKind::Instanton: {
        for (long d1 : divisors(d))
          if (!entries_.contains({w, d1})) return false;
        if (value != instanton_numbers(w, d).back()) return false;
        break;
      }
    }
  }
  return true;
}

bool IntegralityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const IntegralityEntry& e) { return e.pass; });
}

IntegralityReport integrality_report(long w_max, long d_max) {
  require_positive(w_max, "w_max");
  require_positive(d_max, "d_max");
  IntegralityReport report{w_max, d_max, {}};
  for (long w = 1; w <= w_max; ++w) {
    const auto m = instanton_numbers(w, d_max);
    for (long d = 1; d <= d_max; ++d) {
      IntegralityEntry e;
      e.w = w;
      e.d = d;
      e.value = m[static_cast<std::size_t>(d - 1)];
      e.integer = e.value.is_integer();
      e.positive = e.value.sign() > 0;
      e.in_observed_range = w >= 3;
      e.pass = e.integer && (e.positive || (!e.in_observed_range && e.value.sign() >= 0));
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace tangentia
