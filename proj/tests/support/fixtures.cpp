#include "fixtures.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace infocast::testing {

ExampleState example_state() {
  ExampleState st;
  st.own = {0, BitVector::from_string("1111")};
  st.table.add(1, BitVector::from_string("1011"));
  st.table.add(2, BitVector::from_string("0100"));
  st.table.add(3, BitVector::from_string("0101"));
  return st;
}

bool is_example_ideal(const std::vector<SymbolId>& combined) {
  std::vector<SymbolId> c = combined;
  std::sort(c.begin(), c.end());
  return c == std::vector<SymbolId>{0, 1} || c == std::vector<SymbolId>{1, 2};
}

std::size_t ScriptedChooser::pick(std::size_t options) {
  offered_.push_back(options);
  if (options == 1) return 0;
  if (next_ >= script_.size()) throw std::logic_error("ScriptedChooser: script exhausted");
  const std::size_t v = script_[next_++];
  if (v >= options) throw std::logic_error("ScriptedChooser: pick out of range");
  return v;
}

namespace {

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Fraction& Fraction::operator+=(const Fraction& other) {
  const auto g = gcd128(den, other.den);
  const auto l = den / g * other.den;
  num = num * (l / den) + other.num * (l / other.den);
  den = l;
  const auto r = gcd128(num, den);
  if (r > 1) {
    num /= r;
    den /= r;
  }
  return *this;
}

ExampleState random_instance(std::mt19937_64& rng, std::size_t n, std::size_t m, double own_density,
                             double neighbor_density) {
  std::bernoulli_distribution own_bit(own_density);
  std::bernoulli_distribution nb_bit(neighbor_density);
  ExampleState st;
  st.own = {0, BitVector(n)};
  for (std::size_t s = 0; s < n; ++s) {
    if (own_bit(rng)) st.own.recovered.set(s);
  }
  for (std::size_t j = 0; j < m; ++j) {
    BitVector b(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (nb_bit(rng)) b.set(s);
    }
    st.table.add(static_cast<NodeId>(j + 1), std::move(b));
  }
  return st;
}

std::vector<std::size_t> exact_degree_table(std::size_t n) {
  using boost::multiprecision::cpp_int;
  auto binom = [](std::size_t a, std::size_t b) {
    if (b > a) return cpp_int(0);
    cpp_int v = 1;
    for (std::size_t i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v;
  };
  std::vector<std::size_t> out(n + 1, 1);
  for (std::size_t r = 0; r <= n; ++r) {
    // Compare C(r,d-1)(n-r)/C(n,d) across d by cross-multiplication.
    std::size_t best = 1;
    cpp_int best_num = binom(r, 0) * (n - r);
    cpp_int best_den = binom(n, 1);
    for (std::size_t d = 2; d <= std::min(r + 1, n); ++d) {
      cpp_int num = binom(r, d - 1) * (n - r);
      cpp_int den = binom(n, d);
      if (num * best_den > best_num * den) {
        best = d;
        best_num = num;
        best_den = den;
      }
    }
    out[r] = best;
  }
  return out;
}

}  // namespace infocast::testing
