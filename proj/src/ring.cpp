#include "sandwich/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in multiplication");
  return r;
}

// Inverse of a modulo m for gcd(a, m) = 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return mod(old_s, m);
}

// Packed base-p digit helpers for F_p[t]/(t^k).
struct Digits {
  std::array<std::int64_t, 32> d{};
};

Digits unpack(std::int64_t v, int p, int k) {
  Digits out;
  for (int i = 0; i < k; ++i) {
    out.d[i] = v % p;
    v /= p;
  }
  return out;
}

std::int64_t pack(const Digits& d, int p, int k) {
  std::int64_t v = 0;
  for (int i = k - 1; i >= 0; --i) v = v * p + d.d[i];
  return v;
}

std::int64_t poly_mul(std::int64_t a, std::int64_t b, int p, int k) {
  Digits x = unpack(a, p, k), y = unpack(b, p, k), z;
  for (int i = 0; i < k; ++i) {
    if (x.d[i] == 0) continue;
    for (int j = 0; i + j < k; ++j) z.d[i + j] = (z.d[i + j] + x.d[i] * y.d[j]) % p;
  }
  return pack(z, p, k);
}

std::int64_t poly_add(std::int64_t a, std::int64_t b, int p, int k) {
  Digits x = unpack(a, p, k), y = unpack(b, p, k);
  for (int i = 0; i < k; ++i) x.d[i] = (x.d[i] + y.d[i]) % p;
  return pack(x, p, k);
}

std::int64_t poly_neg(std::int64_t a, int p, int k) {
  Digits x = unpack(a, p, k);
  for (int i = 0; i < k; ++i) x.d[i] = (p - x.d[i]) % p;
  return pack(x, p, k);
}

std::int64_t poly_inv(std::int64_t a, int p, int k) {
  // a = c (1 + n) with n nilpotent, so a^{-1} = c^{-1} sum_i (-n)^i.
  Digits x = unpack(a, p, k);
  std::int64_t c_inv = inv_mod(x.d[0], p);
  std::int64_t scaled = poly_mul(a, c_inv, p, k);  // 1 + n
  std::int64_t minus_n = poly_neg(poly_add(scaled, poly_neg(1, p, k), p, k), p, k);
  std::int64_t sum = 1, power = 1;
  for (int i = 1; i < k; ++i) {
    power = poly_mul(power, minus_n, p, k);
    sum = poly_add(sum, power, p, k);
  }
  return poly_mul(sum, c_inv, p, k);
}

std::string poly_to_string(std::int64_t v, int p, int k) {
  Digits x = unpack(v, p, k);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < k; ++i) {
    if (x.d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << x.d[i];
    } else {
      if (x.d[i] != 1) os << x.d[i] << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::int64_t Factor::cardinality() const {
  return kind == FactorKind::integers ? 0 : ipow(p, k);
}

std::string Factor::name() const {
  switch (kind) {
    case FactorKind::integers:
      return "z";
    case FactorKind::zmod:
      return "z" + std::to_string(ipow(p, k));
    case FactorKind::poly:
      return "f" + std::to_string(p) + "t" + std::to_string(k);
  }
  return "?";
}

struct Ring::Data {
  std::vector<Factor> factors;
  std::vector<std::int64_t> moduli;  // p^k per factor (0 for integers)
};

Ring::Ring() : data_(std::make_shared<Data>()) {}

Ring::Ring(std::vector<Factor> factors) {
  if (factors.empty()) throw DomainError("a ring needs at least one factor");
  if (factors.size() > kMaxFactors) throw DomainError("too many ring factors");
  auto data = std::make_shared<Data>();
  for (const Factor& f : factors) {
    if (f.kind == FactorKind::integers) {
      if (factors.size() != 1) throw DomainError("the integers must be the only factor");
      data->moduli.push_back(0);
      continue;
    }
    if (!is_prime(f.p)) throw DomainError("factor characteristic must be prime");
    if (f.k < 1 || f.k > 30) throw DomainError("factor length out of range");
    std::int64_t m = 1;
    for (int i = 0; i < f.k; ++i) {
      m *= f.p;
      if (m > (std::int64_t{1} << 31)) throw DomainError("factor too large");
    }
    data->moduli.push_back(m);
  }
  data->factors = std::move(factors);
  data_ = std::move(data);
}

Ring Ring::integers() { return Ring({Factor{FactorKind::integers, 0, 0}}); }
Ring Ring::zmod(int p, int k) { return Ring({Factor{FactorKind::zmod, p, k}}); }
Ring Ring::poly(int p, int k) { return Ring({Factor{FactorKind::poly, p, k}}); }

Ring Ring::zmod_n(std::int64_t n) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (n == 1) return Ring();
  std::vector<Factor> fs;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) fs.push_back({FactorKind::zmod, static_cast<int>(p), k});
  }
  if (n > 1) fs.push_back({FactorKind::zmod, static_cast<int>(n), 1});
  return Ring(std::move(fs));
}

Ring Ring::parse(std::string_view text) {
  std::vector<Factor> fs;
  std::size_t start = 0;
  std::string s(text);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  while (start <= s.size()) {
    std::size_t end = s.find_first_of("*x", start);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(start, end - start);
    auto to_int = [&](std::string_view v) {
      std::int64_t out = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
      if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
        throw UsageError("bad ring name: " + std::string(text));
      return out;
    };
    if (tok == "z" || tok == "zz" || tok == "integers") {
      fs.push_back({FactorKind::integers, 0, 0});
    } else if (!tok.empty() && tok[0] == 'z') {
      Ring r = zmod_n(to_int(std::string_view(tok).substr(1)));
      for (const Factor& f : r.factors()) fs.push_back(f);
    } else if (!tok.empty() && tok[0] == 'f' && tok.find('t') != std::string::npos) {
      std::size_t tpos = tok.find('t');
      int p = static_cast<int>(to_int(std::string_view(tok).substr(1, tpos - 1)));
      int k = static_cast<int>(to_int(std::string_view(tok).substr(tpos + 1)));
      fs.push_back({FactorKind::poly, p, k});
    } else {
      throw UsageError("bad ring name: " + std::string(text));
    }
    start = end + 1;
  }
  return Ring(std::move(fs));
}

const std::vector<Factor>& Ring::factors() const { return data_->factors; }

bool Ring::is_integers() const {
  return data_->factors.size() == 1 && data_->factors[0].kind == FactorKind::integers;
}

std::uint64_t Ring::size() const {
  if (is_integers()) throw Unsupported("the integers are infinite");
  std::uint64_t n = 1;
  for (auto m : data_->moduli) n *= static_cast<std::uint64_t>(m);
  return n;
}

std::string Ring::name() const {
  const auto& fs = factors();
  if (fs.empty()) return "z1";
  bool all_zmod = std::all_of(fs.begin(), fs.end(), [](const Factor& f) { return f.kind == FactorKind::zmod; });
  if (all_zmod) {
    std::int64_t n = 1;
    for (auto m : data_->moduli) n *= m;
    return "z" + std::to_string(n);
  }
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? "*" : "") + fs[i].name();
  return out;
}

bool Ring::operator==(const Ring& other) const {
  return data_ == other.data_ || data_->factors == other.data_->factors;
}

Residues Ring::one_res() const { return from_int_res(1); }

Residues Ring::from_int_res(std::int64_t n) const {
  Residues out;
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        out.r[i] = n;
        break;
      case FactorKind::zmod:
        out.r[i] = mod(n, data_->moduli[i]);
        break;
      case FactorKind::poly:
        out.r[i] = mod(n, fs[i].p);
        break;
    }
  }
  return out;
}

Residues Ring::add(const Residues& a, const Residues& b) const {
  Residues out;
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        out.r[i] = checked_add(a.r[i], b.r[i]);
        break;
      case FactorKind::zmod: {
        std::int64_t s = a.r[i] + b.r[i];
        out.r[i] = s >= data_->moduli[i] ? s - data_->moduli[i] : s;
        break;
      }
      case FactorKind::poly:
        out.r[i] = fs[i].p == 2 ? (a.r[i] ^ b.r[i]) : poly_add(a.r[i], b.r[i], fs[i].p, fs[i].k);
        break;
    }
  }
  return out;
}

Residues Ring::neg(const Residues& a) const {
  Residues out;
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        out.r[i] = checked_mul(a.r[i], -1);
        break;
      case FactorKind::zmod:
        out.r[i] = a.r[i] == 0 ? 0 : data_->moduli[i] - a.r[i];
        break;
      case FactorKind::poly:
        out.r[i] = fs[i].p == 2 ? a.r[i] : poly_neg(a.r[i], fs[i].p, fs[i].k);
        break;
    }
  }
  return out;
}

Residues Ring::sub(const Residues& a, const Residues& b) const { return add(a, neg(b)); }

Residues Ring::mul(const Residues& a, const Residues& b) const {
  Residues out;
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        out.r[i] = checked_mul(a.r[i], b.r[i]);
        break;
      case FactorKind::zmod:
        out.r[i] = static_cast<std::int64_t>(static_cast<__int128>(a.r[i]) * b.r[i] % data_->moduli[i]);
        break;
      case FactorKind::poly:
        out.r[i] = poly_mul(a.r[i], b.r[i], fs[i].p, fs[i].k);
        break;
    }
  }
  return out;
}

bool Ring::is_zero(const Residues& a) const {
  for (std::size_t i = 0; i < nfactors(); ++i)
    if (a.r[i] != 0) return false;
  return true;
}

bool Ring::is_one(const Residues& a) const { return a == one_res(); }

bool Ring::is_unit(const Residues& a) const {
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        if (a.r[i] != 1 && a.r[i] != -1) return false;
        break;
      case FactorKind::zmod:
      case FactorKind::poly:
        if (a.r[i] % fs[i].p == 0) return false;
        break;
    }
  }
  return true;
}

Residues Ring::inv(const Residues& a) const {
  if (!is_unit(a)) throw NonUnit("element is not a unit");
  Residues out;
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        out.r[i] = a.r[i];
        break;
      case FactorKind::zmod:
        out.r[i] = inv_mod(a.r[i], data_->moduli[i]);
        break;
      case FactorKind::poly:
        out.r[i] = poly_inv(a.r[i], fs[i].p, fs[i].k);
        break;
    }
  }
  return out;
}

int Ring::valuation(std::size_t i, const Residues& a) const {
  const Factor& f = factors().at(i);
  if (f.kind == FactorKind::integers) throw Unsupported("valuation over the integers");
  std::int64_t v = a.r[i];
  if (v == 0) return f.k;
  int e = 0;
  while (v % f.p == 0) {
    v /= f.p;
    ++e;
  }
  return e;
}

RingElem Ring::zero() const { return RingElem(*this, zero_res()); }
RingElem Ring::one() const { return RingElem(*this, one_res()); }
RingElem Ring::from_int(std::int64_t n) const { return RingElem(*this, from_int_res(n)); }
RingElem Ring::elem(const Residues& r) const { return RingElem(*this, r); }

RingElem Ring::uniformizer() const {
  Residues out;
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        throw Unsupported("the integers have no uniformizer");
      case FactorKind::zmod:
        out.r[i] = mod(fs[i].p, data_->moduli[i]);
        break;
      case FactorKind::poly:
        out.r[i] = fs[i].k > 1 ? fs[i].p : 0;
        break;
    }
  }
  return elem(out);
}

RingElem Ring::parse_elem(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw UsageError("empty ring element");
  bool has_t = s.find('t') != std::string::npos;
  if (!has_t) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("bad ring element: " + s);
    return from_int(v);
  }
  for (const Factor& f : factors())
    if (f.kind != FactorKind::poly) throw UsageError("'t' only makes sense in F_p[t]/(t^k) factors");
  RingElem acc = zero();
  RingElem tee = uniformizer();
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(pos, end - pos);
    std::int64_t coeff = 1;
    int power = 0;
    std::size_t tpos = term.find('t');
    std::string cpart = tpos == std::string::npos ? term : term.substr(0, tpos);
    if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
    if (!cpart.empty()) coeff = std::stoll(cpart);
    if (tpos != std::string::npos) {
      power = 1;
      if (tpos + 1 < term.size()) {
        if (term[tpos + 1] != '^') throw UsageError("bad ring element: " + s);
        power = std::stoi(term.substr(tpos + 2));
      }
    }
    RingElem mono = from_int(sign * coeff);
    for (int i = 0; i < power; ++i) mono = mono * tee;
    acc = acc + mono;
    pos = end;
  }
  return acc;
}

std::vector<RingElem> Ring::elements() const {
  const std::uint64_t n = size();
  std::vector<RingElem> out;
  out.reserve(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Residues r;
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < nfactors(); ++i) {
      auto m = static_cast<std::uint64_t>(data_->moduli[i]);
      r.r[i] = static_cast<std::int64_t>(rest % m);
      rest /= m;
    }
    out.push_back(elem(r));
  }
  return out;
}

std::vector<RingElem> Ring::units() const {
  std::vector<RingElem> out;
  for (const RingElem& e : elements())
    if (e.is_unit()) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------- RingElem

namespace {
void require_same(const Ring& a, const Ring& b) {
  if (a != b) throw SpecMismatch("ring mismatch: " + a.name() + " vs " + b.name());
}
}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
  require_same(ring_, o.ring_);
  return RingElem(ring_, ring_.add(res_, o.res_));
}

RingElem RingElem::operator-(const RingElem& o) const {
  require_same(ring_, o.ring_);
  return RingElem(ring_, ring_.sub(res_, o.res_));
}

RingElem RingElem::operator*(const RingElem& o) const {
  require_same(ring_, o.ring_);
  return RingElem(ring_, ring_.mul(res_, o.res_));
}

RingElem RingElem::operator-() const { return RingElem(ring_, ring_.neg(res_)); }

bool RingElem::operator==(const RingElem& o) const { return ring_ == o.ring_ && res_ == o.res_; }

RingElem RingElem::inv() const { return RingElem(ring_, ring_.inv(res_)); }

std::string RingElem::to_string() const {
  const auto& fs = ring_.factors();
  if (fs.empty()) return "0";
  bool all_zmod = std::all_of(fs.begin(), fs.end(), [](const Factor& f) {
    return f.kind == FactorKind::zmod || f.kind == FactorKind::integers;
  });
  if (all_zmod) {
    if (fs.size() == 1) return std::to_string(res_.r[0]);
    // CRT lift to [0, N).
    __int128 n = 1;
    for (const Factor& f : fs) n *= f.cardinality();
    __int128 x = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::int64_t m = fs[i].cardinality();
      auto big = static_cast<std::int64_t>(n / m);
      x += static_cast<__int128>(res_.r[i]) * big % n * inv_mod(big % m, m) % n;
    }
    return std::to_string(static_cast<std::int64_t>(x % n));
  }
  if (fs.size() == 1) return poly_to_string(res_.r[0], fs[0].p, fs[0].k);
  std::string out = "(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ",";
    out += fs[i].kind == FactorKind::poly ? poly_to_string(res_.r[i], fs[i].p, fs[i].k)
                                          : std::to_string(res_.r[i]);
  }
  return out + ")";
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(Ring ring, Residues exps) : ring_(std::move(ring)), exps_(exps) {
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind == FactorKind::integers) {
      if (exps_.r[i] < 0) throw DomainError("ideal generator must be nonnegative");
    } else if (exps_.r[i] < 0 || exps_.r[i] > fs[i].k) {
      throw DomainError("ideal exponent out of range");
    }
  }
}

Ideal Ideal::zero(const Ring& ring) {
  Residues e;
  const auto& fs = ring.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) e.r[i] = fs[i].kind == FactorKind::integers ? 0 : fs[i].k;
  return Ideal(ring, e);
}

Ideal Ideal::unit(const Ring& ring) {
  Residues e;
  const auto& fs = ring.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) e.r[i] = fs[i].kind == FactorKind::integers ? 1 : 0;
  return Ideal(ring, e);
}

std::vector<Ideal> all_ideals(const Ring& ring) {
  if (ring.is_integers()) throw Unsupported("the integers have infinitely many ideals");
  const auto& fs = ring.factors();
  std::vector<Ideal> out;
  Residues e;
  while (true) {
    out.emplace_back(ring, e);
    std::size_t i = 0;
    while (i < fs.size() && e.r[i] == fs[i].k) e.r[i++] = 0;
    if (i == fs.size()) break;
    ++e.r[i];
  }
  return out;
}

Ideal Ideal::principal(const RingElem& a) { return from_elems(a.ring(), std::span<const RingElem>(&a, 1)); }

Ideal Ideal::from_elems(const Ring& ring, std::span<const RingElem> gens) {
  Ideal out = zero(ring);
  const auto& fs = ring.factors();
  for (const RingElem& g : gens) {
    require_same(ring, g.ring());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].kind == FactorKind::integers) {
        out.exps_.r[i] = std::gcd(out.exps_.r[i], g.residues().r[i]);
      } else {
        out.exps_.r[i] = std::min<std::int64_t>(out.exps_.r[i], ring.valuation(i, g.residues()));
      }
    }
  }
  return out;
}

Ideal Ideal::parse(const Ring& ring, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "R" || s == "r") return unit(ring);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw UsageError("empty ideal");
  std::vector<RingElem> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    gens.push_back(ring.parse_elem(s.substr(start, end - start)));
    start = end + 1;
  }
  return from_elems(ring, gens);
}

Ideal Ideal::operator+(const Ideal& o) const {
  require_same(ring_, o.ring_);
  Residues e;
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i)
    e.r[i] = fs[i].kind == FactorKind::integers ? std::gcd(exps_.r[i], o.exps_.r[i])
                                                : std::min(exps_.r[i], o.exps_.r[i]);
  return Ideal(ring_, e);
}

Ideal Ideal::operator*(const Ideal& o) const {
  require_same(ring_, o.ring_);
  Residues e;
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i)
    e.r[i] = fs[i].kind == FactorKind::integers ? checked_mul(exps_.r[i], o.exps_.r[i])
                                                : std::min<std::int64_t>(exps_.r[i] + o.exps_.r[i], fs[i].k);
  return Ideal(ring_, e);
}

Ideal Ideal::intersect(const Ideal& o) const {
  require_same(ring_, o.ring_);
  Residues e;
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i)
    e.r[i] = fs[i].kind == FactorKind::integers ? std::lcm(exps_.r[i], o.exps_.r[i])
                                                : std::max(exps_.r[i], o.exps_.r[i]);
  return Ideal(ring_, e);
}

bool Ideal::contains(const RingElem& a) const {
  require_same(ring_, a.ring());
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind == FactorKind::integers) {
      std::int64_t m = exps_.r[i], x = a.residues().r[i];
      if (m == 0 ? x != 0 : x % m != 0) return false;
    } else if (ring_.valuation(i, a.residues()) < exps_.r[i]) {
      return false;
    }
  }
  return true;
}

bool Ideal::contains(const Ideal& o) const {
  require_same(ring_, o.ring_);
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind == FactorKind::integers) {
      std::int64_t m = exps_.r[i], n = o.exps_.r[i];
      if (m == 0 ? n != 0 : n % m != 0) return false;
    } else if (o.exps_.r[i] < exps_.r[i]) {
      return false;
    }
  }
  return true;
}

bool Ideal::operator==(const Ideal& o) const { return ring_ == o.ring_ && exps_ == o.exps_; }

bool Ideal::is_zero() const { return *this == zero(ring_); }
bool Ideal::is_unit() const { return *this == unit(ring_); }

RingElem Ideal::generator() const {
  Residues r;
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    switch (fs[i].kind) {
      case FactorKind::integers:
        r.r[i] = exps_.r[i];
        break;
      case FactorKind::zmod:
        r.r[i] = exps_.r[i] == fs[i].k ? 0 : ipow(fs[i].p, static_cast<int>(exps_.r[i]));
        break;
      case FactorKind::poly:  // t^j is the digit 1 at position j
        r.r[i] = exps_.r[i] == fs[i].k ? 0 : ipow(fs[i].p, static_cast<int>(exps_.r[i]));
        break;
    }
  }
  return ring_.elem(r);
}

std::vector<RingElem> Ideal::elements() const {
  std::vector<RingElem> out;
  for (const RingElem& e : ring_.elements())
    if (contains(e)) out.push_back(e);
  return out;
}

Ring Ideal::quotient_ring() const {
  const auto& fs = ring_.factors();
  if (ring_.is_integers()) {
    if (exps_.r[0] == 0) return ring_;
    return Ring::zmod_n(exps_.r[0]);
  }
  std::vector<Factor> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (exps_.r[i] > 0) out.push_back({fs[i].kind, fs[i].p, static_cast<int>(exps_.r[i])});
  if (out.empty()) return Ring();
  return Ring(std::move(out));
}

RingElem Ideal::reduce(const RingElem& a) const {
  require_same(ring_, a.ring());
  Ring q = quotient_ring();
  if (ring_.is_integers()) return q.from_int(a.residues().r[0]);
  Residues r;
  std::size_t j = 0;
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (exps_.r[i] == 0) continue;
    // Packed digits make t-adic truncation the same as reduction mod p^j.
    r.r[j++] = mod(a.residues().r[i], ipow(fs[i].p, static_cast<int>(exps_.r[i])));
  }
  return q.elem(r);
}

Ideal Ideal::reduce(const Ideal& jdl) const {
  require_same(ring_, jdl.ring_);
  Ring q = quotient_ring();
  if (ring_.is_integers()) return Ideal::principal(reduce(jdl.generator()));
  Residues e;
  std::size_t j = 0;
  const auto& fs = ring_.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (exps_.r[i] == 0) continue;
    e.r[j++] = std::min(jdl.exps_.r[i], exps_.r[i]);
  }
  return Ideal(q, e);
}

std::string Ideal::to_string() const {
  if (ring_.is_zero_ring()) return "(0)";
  if (is_zero()) return "(0)";
  if (is_unit()) return "(1)";
  return "(" + generator().to_string() + ")";
}

RingElem quotient_map(const RingElem& a, const Ideal& ideal) { return ideal.reduce(a); }

}  // namespace sandwich
