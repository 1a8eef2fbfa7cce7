#include "ffla/field.hpp"

#include <map>
#include <memory>

#include "support/util.hpp"

namespace ffla {
namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as digit vectors, low to high, used only during table
// construction.
using PolyP = std::vector<uint16_t>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& mod, uint32_t p) {
  PolyP r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint16_t>((r[i + j] + a[i] * b[j]) % p);
  }
  // mod is monic of degree k
  size_t k = mod.size() - 1;
  for (size_t d = r.size(); d-- > k;) {
    uint16_t c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (size_t j = 0; j < k; ++j) {
      uint32_t sub = (static_cast<uint32_t>(c) * mod[j]) % p;
      r[d - k + j] = static_cast<uint16_t>((r[d - k + j] + p - sub) % p);
    }
  }
  r.resize(k);
  return r;
}

uint16_t encode(const PolyP& f, uint32_t p) {
  uint32_t v = 0, mult = 1;
  for (uint16_t c : f) {
    v += c * mult;
    mult *= p;
  }
  return static_cast<uint16_t>(v);
}

PolyP decode(uint16_t v, uint32_t p, uint32_t k) {
  PolyP f(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    f[i] = static_cast<uint16_t>(v % p);
    v = static_cast<uint16_t>(v / p);
  }
  return f;
}

// Divides f by monic g in F_p[x], true when remainder is zero.
bool divides(const PolyP& g, PolyP f, uint32_t p) {
  trim(f);
  size_t dg = g.size() - 1;
  while (f.size() > dg) {
    uint16_t c = f.back();
    size_t shift = f.size() - 1 - dg;
    if (c != 0) {
      // g monic: inverse of leading coeff of g is 1
      for (size_t j = 0; j < g.size(); ++j) {
        uint32_t sub = (static_cast<uint32_t>(c) * g[j]) % p;
        f[shift + j] = static_cast<uint16_t>((f[shift + j] + p - sub) % p);
      }
    }
    trim(f);
    if (f.empty()) return true;
  }
  return f.empty();
}

bool irreducible(const PolyP& f, uint32_t p) {
  uint32_t deg = static_cast<uint32_t>(f.size()) - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      PolyP g(d + 1, 0);
      uint64_t v = code;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint16_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

Field::Field(uint32_t p, uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) wb::fail_validation("field characteristic must be prime, got " + std::to_string(p));
  if (k < 1) wb::fail_validation("field extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) wb::fail_validation("field size p^k exceeds 2^16");
  }
  q_ = static_cast<uint32_t>(q);

  if (k_ > 1) {
    // lexicographically least monic irreducible of degree k (by encoding of
    // the low coefficients)
    for (uint32_t code = 0;; ++code) {
      if (code >= q_) wb::fail_internal("no irreducible polynomial found");
      PolyP f = decode(static_cast<uint16_t>(code), p_, k_);
      f.push_back(1);
      if (irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
    // multiplicative generator by ascending encoding
    auto fs = prime_factors(q_ - 1);
    uint16_t gen = 0;
    for (uint32_t c = 2; c < q_; ++c) {
      bool ok = true;
      for (uint32_t ell : fs) {
        // c^((q-1)/ell) via repeated squaring in the poly representation
        uint64_t e = (q_ - 1) / ell;
        PolyP acc(1, 1), base = decode(static_cast<uint16_t>(c), p_, k_);
        while (e) {
          if (e & 1) acc = mul_mod(acc, base, modulus_, p_);
          base = mul_mod(base, base, modulus_, p_);
          e >>= 1;
        }
        if (encode(acc, p_) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = static_cast<uint16_t>(c);
        break;
      }
    }
    if (gen == 0) wb::fail_internal("no multiplicative generator found");
    exp_t_.assign(q_ - 1, 0);
    log_t_.assign(q_, 0);
    PolyP acc(1, 1), g = decode(gen, p_, k_);
    for (uint32_t i = 0; i < q_ - 1; ++i) {
      uint16_t e = encode(acc, p_);
      exp_t_[i] = e;
      log_t_[e] = static_cast<uint16_t>(i);
      acc = mul_mod(acc, g, modulus_, p_);
    }
  }

  if (q_ <= 256) {
    add_t_.assign(static_cast<size_t>(q_) * q_, 0);
    mul_t_.assign(static_cast<size_t>(q_) * q_, 0);
    neg_t_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = 0; b < q_; ++b) {
        add_t_[a * q_ + b] = add_slow(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
        mul_t_[a * q_ + b] = mul_slow(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
      }
    for (uint32_t a = 0; a < q_; ++a) neg_t_[a] = neg_slow(static_cast<uint16_t>(a));
  }
  inv_t_.assign(q_, 0);
  for (uint32_t a = 1; a < q_; ++a) {
    // a^(q-2) via repeated squaring
    uint64_t e = q_ - 2;
    uint16_t r = 1, base = static_cast<uint16_t>(a);
    while (e) {
      if (e & 1) r = mul_slow(r, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    if (mul_slow(static_cast<uint16_t>(a), r) != 1)
      wb::fail_internal("element without inverse in field construction");
    inv_t_[a] = r;
  }
}

uint16_t Field::add_slow(uint16_t a, uint16_t b) const {
  if (k_ == 1) return static_cast<uint16_t>((a + b) % p_);
  uint32_t r = 0, mult = 1, x = a, y = b;
  for (uint32_t i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<uint16_t>(r);
}

uint16_t Field::neg_slow(uint16_t a) const {
  if (k_ == 1) return static_cast<uint16_t>((p_ - a) % p_);
  uint32_t r = 0, mult = 1, x = a;
  for (uint32_t i = 0; i < k_; ++i) {
    r += ((p_ - x % p_) % p_) * mult;
    x /= p_;
    mult *= p_;
  }
  return static_cast<uint16_t>(r);
}

uint16_t Field::mul_poly(uint16_t a, uint16_t b) const {
  PolyP r = mul_mod(decode(a, p_, k_), decode(b, p_, k_), modulus_, p_);
  return encode(r, p_);
}

uint16_t Field::mul_slow(uint16_t a, uint16_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<uint16_t>((static_cast<uint32_t>(a) * b) % p_);
  if (!exp_t_.empty())
    return exp_t_[(static_cast<uint32_t>(log_t_[a]) + log_t_[b]) % (q_ - 1)];
  return mul_poly(a, b);
}

uint16_t Field::inv(uint16_t a) const {
  if (a == 0) wb::fail_internal("division by zero in field");
  return inv_t_[a];
}

uint16_t Field::pow(uint16_t a, uint64_t e) const {
  uint16_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint16_t Field::from_int(int64_t v) const {
  if (k_ == 1) {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<uint16_t>(m);
  }
  if (v < 0 || v >= static_cast<int64_t>(q_))
    wb::fail_validation("scalar " + std::to_string(v) + " out of range for q=" + std::to_string(q_));
  return static_cast<uint16_t>(v);
}

const Field& Field::get(uint32_t p, uint32_t k) {
  static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> cache;
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Field>(new Field(p, k))).first;
  return *it->second;
}

}  // namespace ffla
