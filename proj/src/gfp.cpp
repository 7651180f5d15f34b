#include "egh/gfp.hpp"

#include <limits>
#include <string>
#include <utility>

namespace egh {

namespace {

Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Form multiply(const RingContext& ring, const Form& a, const Form& b, Residue p) {
  const auto ma = monomials_of_degree(ring, a.degree);
  const auto mb = monomials_of_degree(ring, b.degree);
  Form out{a.degree + b.degree, std::vector<Residue>(static_cast<std::size_t>(ring.slice_dim(a.degree + b.degree)), 0)};
  for (std::size_t s = 0; s < ma.size(); ++s) {
    if (a.coeffs[s] == 0) continue;
    for (std::size_t t = 0; t < mb.size(); ++t) {
      if (b.coeffs[t] == 0) continue;
      auto& c = out.coeffs[static_cast<std::size_t>(lex_rank(ma[s] * mb[t]))];
      c = (c + mul_mod(a.coeffs[s], b.coeffs[t], p)) % p;
    }
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(Errc::invalid_input, "modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Residue inverse_mod(Residue a, Residue p) {
  if (a % p == 0) throw Error(Errc::invalid_input, "zero has no inverse");
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return static_cast<Residue>((s0 % static_cast<std::int64_t>(p) + p) % p);
}

Form random_form(const RingContext& ring, int degree, Residue p, std::mt19937_64& rng) {
  Form f{degree, std::vector<Residue>(static_cast<std::size_t>(ring.slice_dim(degree)))};
  for (auto& c : f.coeffs) c = static_cast<Residue>(rng() % p);
  return f;
}

Form substitute_linear(const RingContext& source, const Form& f, const RingContext& target,
                       std::span<const Form> images, Residue p) {
  if (static_cast<int>(images.size()) != source.n())
    throw Error(Errc::dimension_mismatch, "one image per source variable is required");
  for (const auto& g : images)
    if (g.degree != 1 || static_cast<Count>(g.coeffs.size()) != target.n())
      throw Error(Errc::invalid_input, "images must be linear forms of the target ring");

  // powers[i][k] = images[i]^k
  std::vector<std::vector<Form>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(Form{0, {1}});
    for (int k = 1; k <= f.degree; ++k) powers[i].push_back(multiply(target, powers[i].back(), images[i], p));
  }

  Form out{f.degree, std::vector<Residue>(static_cast<std::size_t>(target.slice_dim(f.degree)), 0)};
  const auto terms = monomials_of_degree(source, f.degree);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (f.coeffs[t] == 0) continue;
    Form term{0, {f.coeffs[t]}};
    for (int i = 0; i < source.n(); ++i)
      if (terms[t][i] > 0) term = multiply(target, term, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(terms[t][i])], p);
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = (out.coeffs[k] + term.coeffs[k]) % p;
  }
  return out;
}

EchelonBasis::EchelonBasis(std::size_t cols, Residue p) : p_(p), pivots_(cols) {
  require_prime(p);
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
  lazy_limit_ = sq == 0 ? std::numeric_limits<std::uint64_t>::max()
                        : (std::numeric_limits<std::uint64_t>::max() - p) / sq;
}

bool EchelonBasis::insert(std::vector<std::uint64_t> row) {
  if (row.size() != pivots_.size()) throw Error(Errc::dimension_mismatch, "row length differs from column count");
  const std::size_t cols = row.size();
  std::uint64_t pending = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    const auto v = static_cast<Residue>(row[c] % p_);
    if (v == 0) continue;
    const auto& piv = pivots_[c];
    if (piv.empty()) {
      const Residue inv = inverse_mod(v, p_);
      std::vector<Residue> stored(cols - c);
      for (std::size_t k = c; k < cols; ++k) stored[k - c] = mul_mod(static_cast<Residue>(row[k] % p_), inv, p_);
      pivots_[c] = std::move(stored);
      ++rank_;
      return true;
    }
    if (pending == lazy_limit_) {
      for (std::size_t k = c; k < cols; ++k) row[k] %= p_;
      pending = 0;
    }
    const std::uint64_t factor = p_ - v;
    std::uint64_t* tail = row.data() + c;
    const Residue* src = piv.data();
    for (std::size_t k = 1; k < piv.size(); ++k) tail[k] += factor * src[k];
    row[c] = 0;
    ++pending;
  }
  return false;
}

std::size_t rank_mod_p(const std::vector<std::vector<Residue>>& rows, Residue p) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size(), p);
  for (const auto& r : rows) basis.insert(std::vector<std::uint64_t>(r.begin(), r.end()));
  return basis.rank();
}

Count ideal_dimension(const RingContext& ring, std::span<const Form> gens, int j, Residue p) {
  const Count dim = ring.slice_dim(j);
  EchelonBasis basis(static_cast<std::size_t>(dim), p);
  for (const auto& g : gens) {
    if (g.degree > j) continue;
    if (static_cast<Count>(g.coeffs.size()) != ring.slice_dim(g.degree))
      throw Error(Errc::dimension_mismatch, "form has the wrong number of coefficients");
    const auto terms = monomials_of_degree(ring, g.degree);
    for (const auto& m : monomials_of_degree(ring, j - g.degree)) {
      std::vector<std::uint64_t> row(static_cast<std::size_t>(dim), 0);
      for (std::size_t t = 0; t < terms.size(); ++t)
        if (g.coeffs[t] != 0) row[static_cast<std::size_t>(lex_rank(m * terms[t]))] = g.coeffs[t];
      basis.insert(std::move(row));
      if (static_cast<Count>(basis.rank()) == dim) return dim;
    }
  }
  return static_cast<Count>(basis.rank());
}

HilbertTable hilbert_table_mod_p(const RingContext& ring, std::span<const Form> gens, int jmax, Residue p) {
  require_prime(p);
  std::vector<Count> values;
  bool full = false;
  for (int j = 0; j <= jmax; ++j) {
    // I_j = S_j forces I_{j+1} = S_{j+1}
    if (!full) {
      values.push_back(ideal_dimension(ring, gens, j, p));
      full = values.back() == ring.slice_dim(j);
    } else {
      values.push_back(ring.slice_dim(j));
    }
  }
  return HilbertTable(ring, Side::ideal, std::move(values));
}

}  // namespace egh
