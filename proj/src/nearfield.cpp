#include "pnr/nearfield.hpp"

#include <algorithm>
#include <sstream>

#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

struct PrimePower {
  int p;
  int k;
};

std::optional<PrimePower> as_prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return PrimePower{p, k};
}

// Low-order coefficients of the monic reduction polynomial, c0 + c1 x + ... + c_{k-1} x^{k-1},
// meaning x^k = -(c0 + c1 x + ...).
std::vector<int> reduction_polynomial(int q) {
  switch (q) {
    case 4: return {1, 1};        // x^2 + x + 1
    case 8: return {1, 1, 0};     // x^3 + x + 1
    case 9: return {1, 0};        // x^2 + 1
    case 16: return {1, 1, 0, 0}; // x^4 + x + 1
    default: return {};
  }
}

std::vector<int> digits(int x, int p, int k) {
  std::vector<int> d(idx(k));
  for (int i = 0; i < k; ++i) {
    d[idx(i)] = x % p;
    x /= p;
  }
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

}  // namespace

std::optional<std::string> nearfield_axiom_violation(const CayleyTable& add, const CayleyTable& mul) {
  if (auto v = group_axiom_violation(add)) return "addition: " + *v;
  const int n = add.size();
  if (mul.size() != n) return "table sizes differ";
  if (n < 2) return "a nearfield has at least two elements";
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return "addition is not commutative";
      if (mul(a, b) < 0 || mul(a, b) >= n) return "multiplication entry out of range";
    }
  for (Element a = 0; a < n; ++a)
    if (mul(0, a) != 0 || mul(a, 0) != 0) return "0 is not absorbing at " + std::to_string(a);
  // Nonzero elements: closure, identity, inverses, associativity.
  std::optional<Element> one;
  for (Element e = 1; e < n && !one; ++e) {
    bool ok = true;
    for (Element a = 1; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) one = e;
  }
  if (!one) return "no multiplicative identity";
  for (Element a = 1; a < n; ++a) {
    bool inv = false;
    for (Element b = 1; b < n && !inv; ++b) inv = mul(a, b) == *one && mul(b, a) == *one;
    if (!inv) return "no multiplicative inverse for " + std::to_string(a);
    for (Element b = 1; b < n; ++b)
      if (mul(a, b) == 0) return "zero divisor " + std::to_string(a) + "*" + std::to_string(b);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          std::ostringstream os;
          os << "multiplication not associative at (" << a << ',' << b << ',' << c << ')';
          return os.str();
        }
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
          std::ostringstream os;
          os << "right distributivity fails at (" << a << ',' << b << ',' << c << ')';
          return os.str();
        }
      }
  return std::nullopt;
}

Nearfield::Nearfield(std::string name, CayleyTable add, CayleyTable mul)
    : name_(std::move(name)), add_(std::move(add)), mul_(std::move(mul)), group_(name_ + "+", add_) {
  if (auto v = nearfield_axiom_violation(add_, mul_)) throw ValidationError("nearfield " + name_ + ": " + *v);
  const int n = order();
  for (Element e = 1; e < n; ++e)
    if (mul_(e, e) == e) {
      one_ = e;
      break;
    }
  inverse_.assign(idx(n), 0);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      if (mul_(a, b) == one_) inverse_[idx(a)] = b;
}

bool Nearfield::is_field() const { return !left_distributivity_failure(*this).has_value(); }

std::optional<DistributivityWitness> left_distributivity_failure(const Nearfield& f) {
  const int n = f.order();
  for (Element d = 0; d < n; ++d)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (f.mul(d, f.add(a, b)) != f.add(f.mul(d, a), f.mul(d, b))) return DistributivityWitness{d, a, b};
  return std::nullopt;
}

Nearfield make_field(int q) {
  auto pp = as_prime_power(q);
  if (!pp) throw ArgumentError("field order " + std::to_string(q) + " is not a prime power");
  const auto [p, k] = *pp;
  if (q > 16) throw ArgumentError("field order " + std::to_string(q) + " exceeds 16");
  const std::vector<int> red = reduction_polynomial(q);
  if (k > 1 && red.empty()) throw ArgumentError("no reduction polynomial for order " + std::to_string(q));

  CayleyTable add(q), mul(q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto da = digits(a, p, k), db = digits(b, p, k);
      std::vector<int> s(idx(k));
      for (int i = 0; i < k; ++i) s[idx(i)] = (da[idx(i)] + db[idx(i)]) % p;
      add(a, b) = from_digits(s, p);

      std::vector<int> prod(idx(2 * k - 1), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[idx(i + j)] = (prod[idx(i + j)] + da[idx(i)] * db[idx(j)]) % p;
      // x^m = x^{m-k} x^k = -x^{m-k} (c0 + c1 x + ...), highest degree first.
      for (int m = 2 * k - 2; m >= k; --m) {
        int c = prod[idx(m)];
        if (c == 0) continue;
        prod[idx(m)] = 0;
        for (int i = 0; i < k; ++i) prod[idx(m - k + i)] = ((prod[idx(m - k + i)] - c * red[idx(i)]) % p + p) % p;
      }
      prod.resize(idx(k));
      mul(a, b) = from_digits(prod, p);
    }
  return Nearfield("GF(" + std::to_string(q) + ")", std::move(add), std::move(mul));
}

Nearfield make_dickson_nearfield_9() {
  const Nearfield f = make_field(9);
  std::vector<char> square(9, 0);
  for (Element y = 1; y < 9; ++y) square[idx(f.mul(y, y))] = 1;
  CayleyTable mul(9);
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) {
      Element a3 = f.mul(f.mul(a, a), a);
      mul(a, b) = (b == 0 || square[idx(b)]) ? f.mul(a, b) : f.mul(a3, b);
    }
  return Nearfield("Dickson(9)", f.add_table(), std::move(mul));
}

ElementSet kern(const Nearfield& f) {
  ElementSet out;
  const int n = f.order();
  for (Element d = 0; d < n; ++d) {
    bool distributive = true;
    for (Element a = 0; a < n && distributive; ++a)
      for (Element b = 0; b < n && distributive; ++b)
        distributive = f.mul(d, f.add(a, b)) == f.add(f.mul(d, a), f.mul(d, b));
    if (distributive) out.push_back(d);
  }
  return out;
}

ElementSet multiplicative_centre(const Nearfield& f) {
  ElementSet out{0};
  for (Element c = 1; c < f.order(); ++c) {
    bool central = true;
    for (Element x = 0; x < f.order() && central; ++x) central = f.mul(c, x) == f.mul(x, c);
    if (central) out.push_back(c);
  }
  return out;
}

std::vector<Permutation> nearfield_automorphisms(const Nearfield& f) {
  std::vector<Permutation> out;
  for (auto& sigma : group_isomorphisms(f.additive_group(), f.additive_group())) {
    bool multiplicative = true;
    for (Element a = 0; a < f.order() && multiplicative; ++a)
      for (Element b = 0; b < f.order() && multiplicative; ++b)
        multiplicative = sigma[idx(f.mul(a, b))] == f.mul(sigma[idx(a)], sigma[idx(b)]);
    if (multiplicative) out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int multiplicative_order(const Nearfield& f, Element a) {
  if (a == 0) throw ArgumentError("0 has no multiplicative order");
  int k = 1;
  for (Element x = a; x != f.one(); x = f.mul(x, a)) ++k;
  return k;
}

}  // namespace pnr
