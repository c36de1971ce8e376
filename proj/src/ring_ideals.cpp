#include "zdlat/ring_ideals.hpp"

#include <algorithm>
#include <numeric>

namespace zdlat {

MultLattice ideal_lattice_zn(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_modulus, "modulus must be at least 2, got " + std::to_string(n));
  if (n > kMaxModulus)
    throw Error(ErrorCode::size_guard, "modulus " + std::to_string(n) + " exceeds " + std::to_string(kMaxModulus));

  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) divisors.push_back(n / d);
    }
  if (divisors.size() > kMaxIdealCount)
    throw Error(ErrorCode::size_guard, std::to_string(n) + " has more than " + std::to_string(kMaxIdealCount) + " divisors");
  std::sort(divisors.begin(), divisors.end(), std::greater<>());

  const std::size_t k = divisors.size();
  std::vector<std::string> labels;
  for (std::uint64_t d : divisors) labels.push_back(d == n ? "(0)" : "(" + std::to_string(d) + ")");
  auto index = [&](std::uint64_t d) {
    return static_cast<Element>(std::find(divisors.begin(), divisors.end(), d) - divisors.begin());
  };

  std::vector<bool> leq(k * k, false);
  std::vector<Element> table(k * k);
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      leq[a * k + b] = divisors[a] % divisors[b] == 0;
      table[a * k + b] = index(std::gcd(divisors[a] * divisors[b], n));
    }
  return attach_multiplication(FiniteLattice::from_order(std::move(labels), std::move(leq)), std::move(table));
}

MultLattice product(const MultLattice& first, const MultLattice& second) {
  FiniteLattice base = product_lattice(first.lattice(), second.lattice());
  const std::size_t n2 = second.size(), n = base.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      table[x * n + y] = first.mult(x / n2, y / n2) * n2 + second.mult(x % n2, y % n2);
  return attach_multiplication(std::move(base), std::move(table));
}

MultLattice ideal_lattice_product(const std::vector<std::uint64_t>& moduli) {
  if (moduli.empty()) throw Error(ErrorCode::invalid_modulus, "need at least one modulus");
  MultLattice acc = ideal_lattice_zn(moduli.front());
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    MultLattice next = ideal_lattice_zn(moduli[i]);
    if (acc.size() * next.size() > kMaxIdealCount)
      throw Error(ErrorCode::size_guard, "product ring has more than " + std::to_string(kMaxIdealCount) + " ideals");
    acc = product(acc, next);
  }
  return acc;
}

MultLattice with_trivial_mult(const FiniteLattice& L) {
  const std::size_t n = L.size();
  if (n >= 2) {
    const auto covers = L.lower_covers(L.top());
    if (covers.size() != 1)
      throw Error(ErrorCode::top_join_reducible,
                  "top is join-reducible: '" + L.label(covers[0]) + "' v '" + L.label(covers[1]) + "' = '" +
                      L.label(L.top()) + "'",
                  {covers[0], covers[1]});
  }
  std::vector<Element> table(n * n, L.bottom());
  for (Element x = 0; x < n; ++x) {
    table[x * n + L.top()] = x;
    table[L.top() * n + x] = x;
  }
  return attach_multiplication(L, std::move(table));
}

MultLattice with_meet_mult(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = b; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          throw Error(ErrorCode::not_distributive,
                      "lattice is not distributive at (" + L.label(a) + ", " + L.label(b) + ", " + L.label(c) + ")",
                      {a, b, c});
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a * n + b] = L.meet(a, b);
  return attach_multiplication(L, std::move(table));
}

Element annihilator(const MultLattice& m, Element a) { return residual(m, m.bottom(), a); }

}  // namespace zdlat
