#include "egh/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace egh {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::invalid_input: return "invalid-input";
    case Errc::invalid_degree_sequence: return "invalid-degree-sequence";
    case Errc::infeasible_value: return "infeasible-value";
    case Errc::insufficient_range: return "insufficient-range";
    case Errc::precondition: return "precondition";
    case Errc::inconsistent_link: return "inconsistent-link";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::regularity_failure: return "regularity-failure";
    case Errc::hard_failure: return "hard-failure";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // result * (n - k + i) / i stays integral at each step; the product is
  // computed in 128 bits and checked against the 64-bit range.
  __int128 result = 1;
  for (Count i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<Count>::max())
      throw Error(Errc::invalid_input, "binomial coefficient overflows 64 bits");
  }
  return static_cast<Count>(result);
}

RingContext::RingContext(int n) : n_(n) {
  if (n < 1) throw Error(Errc::invalid_input, "ring needs at least one variable");
}

Count RingContext::slice_dim(int j) const {
  if (j < 0) return 0;
  return binomial(n_ - 1 + j, j);
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw Error(Errc::invalid_input, "monomial needs at least one variable");
  for (int e : exps_) {
    if (e < 0) throw Error(Errc::invalid_input, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::power(int n, int var, int e) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v.at(static_cast<std::size_t>(var)) = e;
  return Monomial(std::move(v));
}

static void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n())
    throw Error(Errc::dimension_mismatch, "monomials in " + std::to_string(a.n()) + " and " +
                                              std::to_string(b.n()) + " variables");
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<int> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw Error(Errc::invalid_input, "monomial division is not exact");
  std::vector<int> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.exps_[i];
  return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<int> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], other.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ring(*this, other);
  std::vector<int> v(exps_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(v[i], other.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::times_var(int var) const {
  std::vector<int> v(exps_);
  ++v.at(static_cast<std::size_t>(var));
  return Monomial(std::move(v));
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.n(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void fill_descending(int var, int remaining, std::vector<int>& cur, std::vector<Monomial>& out) {
  const int n = static_cast<int>(cur.size());
  if (var == n - 1) {
    cur[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(var)] = e;
    fill_descending(var + 1, remaining - e, cur, out);
  }
  cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const RingContext& ring, int j) {
  std::vector<Monomial> out;
  if (j < 0) return out;
  out.reserve(static_cast<std::size_t>(ring.slice_dim(j)));
  std::vector<int> cur(static_cast<std::size_t>(ring.n()), 0);
  fill_descending(0, j, cur, out);
  return out;
}

// Monomials strictly above m agree with m on x_1..x_{i-1} and carry a larger
// exponent on x_i; summing those blocks with the hockey-stick identity gives
// C(k + r - e_i - 1, r - e_i - 1) per position, k = variables after x_i.
Count lex_rank(const Monomial& m) {
  const int n = m.n();
  Count rank = 0;
  int remaining = m.degree();
  for (int i = 0; i + 1 < n; ++i) {
    const int k = n - i - 1;
    const int gap = remaining - m[i];
    if (gap >= 1) rank += binomial(k + gap - 1, gap - 1);
    remaining -= m[i];
  }
  return rank;
}

Monomial lex_unrank(const RingContext& ring, int j, Count rank) {
  if (j < 0 || rank < 0 || rank >= ring.slice_dim(j))
    throw Error(Errc::invalid_input, "lex rank out of range");
  const int n = ring.n();
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  int remaining = j;
  for (int i = 0; i + 1 < n; ++i) {
    const int k = n - i - 1;
    for (int e = remaining; e >= 0; --e) {
      const Count block = binomial(k - 1 + remaining - e, remaining - e);
      if (rank < block) {
        v[static_cast<std::size_t>(i)] = e;
        remaining -= e;
        break;
      }
      rank -= block;
    }
  }
  v[static_cast<std::size_t>(n - 1)] = remaining;
  return Monomial(std::move(v));
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < m.n(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::parse_error, "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int n) {
  const std::string_view body = trim(text);
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  if (body == "1") return Monomial(std::move(v));
  if (body.empty()) throw Error(Errc::parse_error, "empty monomial");
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t star = body.find('*', start);
    const std::string_view factor =
        trim(body.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    if (factor.size() < 2 || factor.front() != 'x')
      throw Error(Errc::parse_error, "bad factor in '" + std::string(body) + "'");
    const std::size_t caret = factor.find('^');
    const int var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), body);
    const int e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), body);
    if (var < 1 || var > n)
      throw Error(Errc::parse_error, "variable x" + std::to_string(var) + " outside 1.." + std::to_string(n));
    if (e < 0) throw Error(Errc::parse_error, "negative exponent in '" + std::string(body) + "'");
    v[static_cast<std::size_t>(var - 1)] += e;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(v));
}

}  // namespace egh
