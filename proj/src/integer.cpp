#include "pshua/integer.hpp"

#include <algorithm>
#include <numeric>

#include "pshua/errors.hpp"

namespace pshua {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

mpz_class floor_root(const mpz_class& x, unsigned k) {
  if (k == 0) throw DomainError("floor_root: k must be positive");
  if (x < 0) throw DomainError("floor_root: negative radicand");
  if (x < 2 || k == 1) return x;
  // x < 2^bits, so the root is below 2^(ceil(bits/k)).
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  mpz_class lo = 1;
  mpz_class hi;
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, (bits + k - 1) / k);
  // invariant: lo^k <= x < hi^k
  mpz_class mid, power;
  while (hi - lo > 1) {
    mid = (lo + hi) / 2;
    mpz_pow_ui(power.get_mpz_t(), mid.get_mpz_t(), k);
    if (power <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

mpz_class ceil_root(const mpz_class& x, unsigned k) {
  mpz_class r = floor_root(x, k);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), r.get_mpz_t(), k);
  if (power < x) ++r;
  return r;
}

u64 icbrt(u64 n) {
  u64 lo = 0;
  u64 hi = 2642246;  // 2642246^3 > 2^64
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    const unsigned __int128 cube = static_cast<unsigned __int128>(mid) * mid * mid;
    if (cube <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 0) return 0;
  u64 phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(u64 n) {
  if (n == 0) return 0;
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpq_class parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw DomainError("malformed fraction: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw DomainError("malformed fraction: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw DomainError("malformed fraction: '" + text + "'");
    }
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(parse_int(text));
  } else {
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    q = mpq_class(parse_int(text.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pshua
