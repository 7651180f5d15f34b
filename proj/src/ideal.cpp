#include "egh/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace egh {

DegreeSequence::DegreeSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::invalid_degree_sequence, "degree sequence is empty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw Error(Errc::invalid_degree_sequence, "degrees must be positive");
    if (i > 0 && entries_[i] < entries_[i - 1])
      throw Error(Errc::invalid_degree_sequence, "degrees must be nondecreasing: " + to_string(*this));
  }
}

DegreeSequence DegreeSequence::prefix(int k) const {
  if (k < 1 || k > h()) throw Error(Errc::invalid_degree_sequence, "prefix length out of range");
  return DegreeSequence(std::vector<int>(entries_.begin(), entries_.begin() + k));
}

int socle_degree(std::span<const int> powers) {
  int s = 0;
  for (int p : powers) s += p - 1;
  return s;
}

int socle_degree(const DegreeSequence& d) { return socle_degree(std::span<const int>(d.entries())); }

std::string to_string(const DegreeSequence& d) {
  std::string out = "(";
  for (int i = 0; i < d.h(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ')';
}

DegreeSequence parse_degree_sequence(std::string_view text, bool allow_unsorted, bool* was_sorted) {
  std::vector<int> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(Errc::parse_error, "bad degree sequence '" + std::string(text) + "'");
    v.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const bool sorted = std::is_sorted(v.begin(), v.end());
  if (!sorted && allow_unsorted) std::sort(v.begin(), v.end());
  if (was_sorted) *was_sorted = !sorted && allow_unsorted;
  return DegreeSequence(std::move(v));
}

namespace {

struct GeneratorOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_compare(a, b) > 0;
  }
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), GeneratorOrder{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<Monomial> generators) : ring_(ring) {
  for (const auto& g : generators)
    if (g.n() != ring_.n()) throw Error(Errc::dimension_mismatch, "generator " + to_string(g) + " has wrong arity");
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::pure_powers(RingContext ring, std::span<const int> powers) {
  if (static_cast<int>(powers.size()) > ring.n())
    throw Error(Errc::invalid_degree_sequence, "more pure powers than variables");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < powers.size(); ++i) gens.push_back(Monomial::power(ring.n(), static_cast<int>(i), powers[i]));
  return MonomialIdeal(ring, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> MonomialIdeal::component(int j) const {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ring_, j))
    if (contains(m)) out.push_back(std::move(m));
  return out;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  if (!(ring_ == other.ring_)) throw Error(Errc::dimension_mismatch, "ideals in different rings");
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (!(ring_ == other.ring_)) throw Error(Errc::dimension_mismatch, "ideals in different rings");
  std::vector<Monomial> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) gens.push_back(a.lcm(b));
  return MonomialIdeal(ring_, std::move(gens));
}

std::string to_string(const MonomialIdeal& I) {
  std::string out = "(";
  for (std::size_t i = 0; i < I.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(I.generators()[i]);
  }
  return out + ')';
}

MonomialIdeal parse_ideal(std::istream& in, const RingContext& ring) {
  std::vector<Monomial> gens;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
    if (view.empty() || view.front() == '#') continue;
    gens.push_back(parse_monomial(view, ring.n()));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal parse_ideal_text(std::string_view text, const RingContext& ring) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in, ring);
}

std::string_view to_string(Side side) { return side == Side::ideal ? "ideal" : "quotient"; }

HilbertTable::HilbertTable(RingContext ring, Side side, std::vector<Count> values)
    : ring_(ring), side_(side), values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::insufficient_range, "Hilbert table needs at least degree 0");
  for (int j = 0; j <= jmax(); ++j) {
    const Count v = values_[static_cast<std::size_t>(j)];
    if (v < 0 || v > ring_.slice_dim(j))
      throw Error(Errc::infeasible_value, "HF value " + std::to_string(v) + " at degree " + std::to_string(j) +
                                              " outside [0, " + std::to_string(ring_.slice_dim(j)) + "]");
  }
}

Count HilbertTable::at(int j) const {
  if (j < 0 || j > jmax())
    throw Error(Errc::insufficient_range, "degree " + std::to_string(j) + " outside table range [0, " +
                                              std::to_string(jmax()) + "]");
  return values_[static_cast<std::size_t>(j)];
}

HilbertTable HilbertTable::to_side(Side side) const {
  if (side == side_) return *this;
  std::vector<Count> v(values_.size());
  for (int j = 0; j <= jmax(); ++j) v[static_cast<std::size_t>(j)] = ring_.slice_dim(j) - values_[static_cast<std::size_t>(j)];
  return HilbertTable(ring_, side, std::move(v));
}

HilbertTable HilbertTable::truncated(int new_jmax) const {
  if (new_jmax > jmax()) throw Error(Errc::insufficient_range, "cannot extend a table by truncation");
  return HilbertTable(ring_, side_, std::vector<Count>(values_.begin(), values_.begin() + new_jmax + 1));
}

Count hilbert_function(const MonomialIdeal& I, int j) {
  if (j < 0) return 0;
  Count count = 0;
  for (const auto& m : monomials_of_degree(I.ring(), j))
    if (I.contains(m)) ++count;
  return count;
}

HilbertTable hilbert_table(const MonomialIdeal& I, int jmax, Side side) {
  std::vector<Count> v;
  for (int j = 0; j <= jmax; ++j) v.push_back(hilbert_function(I, j));
  return HilbertTable(I.ring(), Side::ideal, std::move(v)).to_side(side);
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring())) throw Error(Errc::dimension_mismatch, "colon of ideals in different rings");
  if (J.is_zero()) throw Error(Errc::invalid_input, "colon by the zero ideal");
  std::optional<MonomialIdeal> acc;
  for (const auto& g : J.generators()) {
    std::vector<Monomial> quotients;
    for (const auto& m : I.generators()) quotients.push_back(m / m.gcd(g));
    MonomialIdeal part(I.ring(), std::move(quotients));
    acc = acc ? acc->intersect(part) : std::move(part);
  }
  return *acc;
}

HilbertTable ci_hilbert_table(const RingContext& ring, std::span<const int> powers, int jmax) {
  if (static_cast<int>(powers.size()) > ring.n())
    throw Error(Errc::invalid_degree_sequence, "h = " + std::to_string(powers.size()) + " exceeds n = " +
                                                   std::to_string(ring.n()));
  if (jmax < 0) throw Error(Errc::insufficient_range, "jmax must be nonnegative");
  std::vector<Count> series(static_cast<std::size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) series[static_cast<std::size_t>(j)] = ring.slice_dim(j);
  for (int p : powers) {
    if (p < 1) throw Error(Errc::invalid_degree_sequence, "pure power degree must be positive");
    for (int j = jmax; j >= p; --j) series[static_cast<std::size_t>(j)] -= series[static_cast<std::size_t>(j - p)];
  }
  return HilbertTable(ring, Side::quotient, std::move(series));
}

HilbertTable ci_hilbert_table(const RingContext& ring, const DegreeSequence& d, int jmax) {
  return ci_hilbert_table(ring, std::span<const int>(d.entries()), jmax);
}

}  // namespace egh
