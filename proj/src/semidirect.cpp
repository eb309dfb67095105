#include "schur/semidirect.hpp"

#include <numeric>

#include "schur/errors.hpp"
#include "schur/number_theory.hpp"

namespace schur {

namespace {

void partitions(unsigned n, unsigned largest, JordanType& prefix, std::vector<JordanType>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(n, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

Matrix multiply(const Matrix& a, const Matrix& b, std::uint64_t p) {
  const std::size_t r = a.size();
  Matrix c(r, std::vector<std::uint64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < r; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

}  // namespace

std::vector<JordanType> unipotent_jordan_types(std::uint64_t p, unsigned rank) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<JordanType> all;
  JordanType prefix;
  partitions(rank, unsigned(std::min<std::uint64_t>(p, rank)), prefix, all);
  std::erase_if(all, [](const JordanType& t) { return t.empty() || t.front() == 1; });
  return all;
}

FiniteGroup unipotent_semidirect_product(std::uint64_t p, std::span<const unsigned> jordan_type, std::size_t max_order) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const unsigned rank = std::accumulate(jordan_type.begin(), jordan_type.end(), 0u);
  for (unsigned b : jordan_type)
    if (b == 0 || b > p) throw DomainError("Jordan blocks must have size 1..p for an action of order p");
  const std::uint64_t base = checked_pow(p, rank);
  const std::uint64_t n = base * p;
  if (n > max_order)
    throw SizeError("semidirect product of order " + std::to_string(n) + " exceeds the cap " +
                    std::to_string(max_order));

  Matrix a(rank, std::vector<std::uint64_t>(rank));
  unsigned offset = 0;
  for (unsigned b : jordan_type) {
    for (unsigned i = 0; i < b; ++i) {
      a[offset + i][offset + i] = 1;
      if (i + 1 < b) a[offset + i][offset + i + 1] = 1;
    }
    offset += b;
  }
  std::vector<Matrix> powers{Matrix(rank, std::vector<std::uint64_t>(rank))};
  for (unsigned i = 0; i < rank; ++i) powers[0][i][i] = 1;
  for (std::uint64_t s = 1; s < p; ++s) powers.push_back(multiply(powers.back(), a, p));

  auto digits = [&](std::uint64_t x) {
    std::vector<std::uint64_t> v(rank);
    for (unsigned i = 0; i < rank; ++i, x /= p) v[i] = x % p;
    return v;
  };
  // acted[s][w] = index of A^s w
  std::vector<std::vector<std::uint64_t>> acted(p, std::vector<std::uint64_t>(base));
  for (std::uint64_t s = 0; s < p; ++s)
    for (std::uint64_t w = 0; w < base; ++w) {
      auto v = digits(w);
      std::uint64_t idx = 0;
      for (unsigned i = rank; i-- > 0;) {
        std::uint64_t x = 0;
        for (unsigned j = 0; j < rank; ++j) x += powers[s][i][j] * v[j];
        idx = idx * p + x % p;
      }
      acted[s][w] = idx;
    }
  std::vector<std::vector<std::uint64_t>> add(base, std::vector<std::uint64_t>(base));
  for (std::uint64_t x = 0; x < base; ++x) {
    auto u = digits(x);
    for (std::uint64_t y = 0; y < base; ++y) {
      auto v = digits(y);
      std::uint64_t idx = 0;
      for (unsigned i = rank; i-- > 0;) idx = idx * p + (u[i] + v[i]) % p;
      add[x][y] = idx;
    }
  }

  std::vector<Element> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t s = x / base, v = x % base;
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t t = y / base, w = y % base;
      table[x * n + y] = Element(((s + t) % p) * base + add[v][acted[s][w]]);
    }
  }
  return FiniteGroup::from_table(n, std::move(table));
}

std::vector<SemidirectCandidate> semidirect_search(std::uint64_t p, unsigned rank, std::uint64_t order_of_action,
                                                   std::size_t max_order) {
  if (p == 2 || !is_prime(p)) throw DomainError("semidirect search needs an odd prime");
  if (order_of_action != p) throw DomainError("only actions of order p are searched");
  if (checked_pow(p, rank + 1) > max_order)
    throw SizeError("p^(rank+1) = " + std::to_string(checked_pow(p, rank + 1)) + " exceeds the cap " +
                    std::to_string(max_order));
  std::vector<SemidirectCandidate> out;
  for (auto& type : unipotent_jordan_types(p, rank)) {
    FiniteGroup g = unipotent_semidirect_product(p, type, max_order);
    out.push_back({std::move(type), std::move(g)});
  }
  return out;
}

}  // namespace schur
