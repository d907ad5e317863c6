#include "order_mod.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace quivhom {

namespace {

// -------- dense polynomials over F_p, lowest coefficient first --------

using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }
bool is_one(const Poly& f) { return f.size() == 1 && f[0] == 1; }

Poly mul(const Poly& a, const Poly& b, const FieldPrime& p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = p.add(c[i + j], p.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

// remainder of a mod b (b nonzero)
Poly rem(Poly a, const Poly& b, const FieldPrime& p) {
  trim(a);
  uint32_t lead_inv = p.inv(b.back());
  while (a.size() >= b.size()) {
    uint32_t q = p.mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = p.sub(a[shift + i], p.mul(q, b[i]));
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly quot(Poly a, const Poly& b, const FieldPrime& p) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  uint32_t lead_inv = p.inv(b.back());
  while (a.size() >= b.size()) {
    uint32_t c = p.mul(a.back(), lead_inv);
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] = p.sub(a[shift + i], p.mul(c, b[i]));
    trim(a);
    if (a.empty()) break;
  }
  return q;
}

Poly monic(Poly f, const FieldPrime& p) {
  trim(f);
  if (f.empty()) return f;
  uint32_t inv = p.inv(f.back());
  for (uint32_t& c : f) c = p.mul(c, inv);
  return f;
}

Poly gcd(Poly a, Poly b, const FieldPrime& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& f, const FieldPrime& p) {
  Poly d;
  for (size_t i = 1; i < f.size(); ++i)
    d.push_back(p.mul(f[i], static_cast<uint32_t>(i % p.modulus())));
  trim(d);
  return d;
}

Poly powmod(Poly base, uint64_t e, const Poly& mod, const FieldPrime& p) {
  Poly acc{1};
  base = rem(std::move(base), mod, p);
  while (e) {
    if (e & 1) acc = rem(mul(acc, base, p), mod, p);
    base = rem(mul(base, base, p), mod, p);
    e >>= 1;
  }
  return acc;
}

// f(t) = w(t^p) with coefficients in F_p has the p-th root w.
Poly pth_root(const Poly& f, const FieldPrime& p) {
  Poly w;
  for (size_t i = 0; i < f.size(); i += p.modulus()) w.push_back(f[i]);
  trim(w);
  return w;
}

// monic squarefree decomposition: f = prod g_j ^ j over the returned pairs
void squarefree(const Poly& f, const FieldPrime& p, uint64_t mult,
                std::vector<std::pair<Poly, uint64_t>>& out) {
  if (degree(f) == 0) return;
  Poly d = derivative(f, p);
  if (d.empty()) {
    squarefree(pth_root(f, p), p, mult * p.modulus(), out);
    return;
  }
  Poly c = gcd(f, d, p);
  Poly w = quot(f, c, p);
  uint64_t i = 1;
  while (!is_one(w)) {
    Poly y = gcd(w, c, p);
    Poly z = quot(w, y, p);
    if (degree(z) > 0) out.emplace_back(monic(z, p), mult * i);
    ++i;
    w = std::move(y);
    c = quot(c, w, p);
  }
  if (!is_one(c)) squarefree(pth_root(c, p), p, mult * p.modulus(), out);
}

// distinct-degree split of a squarefree monic polynomial: (factor, degree)
std::vector<std::pair<Poly, size_t>> distinct_degree(Poly f, const FieldPrime& p) {
  std::vector<std::pair<Poly, size_t>> out;
  Poly frob{0, 1};  // t
  size_t k = 0;
  while (degree(f) > 0) {
    ++k;
    if (2 * k > degree(f)) {
      out.emplace_back(f, degree(f));
      break;
    }
    frob = powmod(std::move(frob), p.modulus(), f, p);
    Poly diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = p.sub(diff[1], 1);
    trim(diff);
    Poly g = diff.empty() ? f : gcd(f, diff, p);
    if (degree(g) > 0) {
      out.emplace_back(g, k);
      f = quot(f, g, p);
      frob = rem(std::move(frob), f, p);
    }
  }
  return out;
}

// -------- integer factorization (for the group orders p^k - 1) --------

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t pollard_rho(uint64_t n) {
  if ((n & 1) == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod_u64(x, x, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_u64(uint64_t n, std::vector<uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  for (uint64_t d = 2; d < 100000 && d * d <= n; ++d) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
    if (n == 1) return;
  }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_u64(d, primes);
  factor_u64(n / d, primes);
}

// multiplicative order of t modulo the squarefree degree-k part, a divisor
// of p^k - 1
uint64_t order_of_t(const Poly& modpoly, size_t k, const FieldPrime& p) {
  unsigned __int128 group = 1;
  for (size_t i = 0; i < k; ++i) {
    group *= p.modulus();
    if (group > (static_cast<unsigned __int128>(1) << 62))
      throw_contract("stable power index: group order exceeds 2^62");
  }
  uint64_t n = static_cast<uint64_t>(group - 1);
  std::vector<uint64_t> primes;
  factor_u64(n, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  uint64_t ord = n;
  Poly t{0, 1};
  for (uint64_t q : primes) {
    while (ord % q == 0 && is_one(powmod(t, ord / q, modpoly, p))) ord /= q;
  }
  return ord;
}

uint64_t lcm_checked(uint64_t a, uint64_t b) {
  unsigned __int128 l = static_cast<unsigned __int128>(a) / std::gcd(a, b) * b;
  if (l > (static_cast<unsigned __int128>(1) << 62))
    throw_contract("stable power index: period exceeds 2^62");
  return static_cast<uint64_t>(l);
}

}  // namespace

uint64_t stable_power_index(const MatrixModP& l, const MatrixModP& x) {
  const FieldPrime p = l.field();
  const size_t d = l.rows();
  if (l.cols() != d || x.rows() != d || x.cols() != 1)
    throw_contract("stable_power_index: shape mismatch");

  // minimal polynomial of x under L from the Krylov chain
  Poly g;
  {
    MatrixModP krylov(d, 0, p);
    MatrixModP cur = x;
    for (size_t k = 0;; ++k) {
      auto dep = solve(krylov, cur);
      if (dep) {
        g.assign(k + 1, 0);
        for (size_t i = 0; i < k; ++i) g[i] = p.neg(dep->at(i, 0));
        g[k] = 1;
        break;
      }
      krylov = MatrixModP::hstack(krylov, cur);
      cur = l * cur;
      if (k > d) throw_contract("stable_power_index: Krylov chain failed to close");
    }
  }

  // g = t^a * h with h(0) != 0
  size_t a = 0;
  while (a < g.size() && g[a] == 0) ++a;
  if (a == g.size()) throw_contract("stable_power_index: zero minimal polynomial");
  Poly h(g.begin() + a, g.end());
  h = monic(std::move(h), p);

  uint64_t period = 1;
  if (degree(h) > 0) {
    std::vector<std::pair<Poly, uint64_t>> sq;
    squarefree(h, p, 1, sq);
    for (const auto& [part, mult] : sq) {
      for (const auto& [factor, deg] : distinct_degree(part, p)) {
        uint64_t base = order_of_t(factor, deg, p);
        if (mult > 1) {
          // ord(t mod factor^mult) = base * p^s for the least s that works
          Poly mod_pow{1};
          for (uint64_t i = 0; i < mult; ++i) mod_pow = mul(mod_pow, factor, p);
          uint64_t ord = base;
          while (!is_one(powmod(Poly{0, 1}, ord, mod_pow, p))) {
            unsigned __int128 next = static_cast<unsigned __int128>(ord) * p.modulus();
            if (next > (static_cast<unsigned __int128>(1) << 62))
              throw_contract("stable power index: period exceeds 2^62");
            ord = static_cast<uint64_t>(next);
          }
          base = ord;
        }
        period = lcm_checked(period, base);
      }
    }
  }

  // least multiple of the period that is >= a + 1
  uint64_t lower = static_cast<uint64_t>(a) + 1;
  uint64_t m = period * ((lower + period - 1) / period);
  return m;
}

}  // namespace quivhom
