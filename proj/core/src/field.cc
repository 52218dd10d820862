// Copyright 2026 The endoclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "endoclass/field.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>
#include <mutex>
#include <variant>

namespace endoclass {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

// Boost 1.74 rejects a negative denominator in the two-argument
// constructor, so the sign moves to the numerator first.
cpp_rational Fraction(cpp_int num, cpp_int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return cpp_rational(num, den);
}

}  // namespace

namespace detail {

struct RationalFunction {
  GF2Poly num;
  GF2Poly den;  // nonzero and coprime with num; 1 when num is 0
};

struct BigValue {
  std::variant<cpp_rational, RationalFunction> value;
};

namespace {

constexpr std::uint32_t kMaxPrime = 97;
constexpr std::uint32_t kMaxOrder = 256;
constexpr std::uint32_t kMaxDegree = 8;

using PolyFp = std::vector<std::uint32_t>;  // ascending coefficients

void TrimPoly(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
PolyFp PolyMod(PolyFp f, const PolyFp& g, std::uint32_t p) {
  TrimPoly(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - (lead * g[i]) % p) % p;
    }
    TrimPoly(f);
  }
  return f;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
PolyFp MonicFromCode(std::uint32_t p, std::uint32_t degree,
                     std::uint64_t code) {
  PolyFp g(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    g[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  g[degree] = 1;
  return g;
}

std::uint64_t IntPow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Exhaustive search for a monic factor of degree <= k/2.
bool IsIrreducible(const PolyFp& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = IntPow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (PolyMod(f, MonicFromCode(p, d, code), p).empty()) return false;
    }
  }
  return true;
}

std::string FormatPolyFp(const PolyFp& f, const std::string& var) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const std::uint32_t c = f[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RationalFunction MakeRationalFunction(GF2Poly num, GF2Poly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator in F2(X)");
  if (num.is_zero()) return {GF2Poly(), GF2Poly::One()};
  GF2Poly g = Gcd(num, den);
  if (!g.is_one()) {
    num = num.DivMod(g).first;
    den = den.DivMod(g).first;
  }
  return {std::move(num), std::move(den)};
}

bool NeedsParens(const GF2Poly& f) {
  const int d = f.degree();
  int terms = 0;
  for (int i = 0; i <= d; ++i) terms += f.coefficient(i) ? 1 : 0;
  return terms > 1;
}

}  // namespace

class FieldImpl : public FieldCore {
 public:
  static constexpr std::uint16_t kNoRoot = 0xFFFF;

  explicit FieldImpl(FieldDescriptor descriptor)
      : descriptor_(std::move(descriptor)) {
    kind = descriptor_.kind;
    switch (kind) {
      case FieldKind::kPrime:
      case FieldKind::kExtension:
        BuildFiniteTables();
        break;
      case FieldKind::kRationals:
        characteristic = 0;
        break;
      case FieldKind::kRationalFunctionsF2:
        characteristic = 2;
        break;
    }
  }

  const FieldDescriptor& descriptor() const { return descriptor_; }

  std::string Spec() const {
    switch (kind) {
      case FieldKind::kPrime:
        return "F" + std::to_string(descriptor_.p);
      case FieldKind::kExtension:
        return "F" + std::to_string(descriptor_.p) + "^" +
               std::to_string(descriptor_.k) + "/" +
               FormatPolyFp(descriptor_.modulus, "x");
      case FieldKind::kRationals:
        return "Q";
      case FieldKind::kRationalFunctionsF2:
        return "F2(X)";
    }
    return {};
  }

  FieldElement Finite(std::uint32_t code) const {
    return FieldElement(this, code);
  }
  FieldElement Rational(cpp_rational r) const {
    return FieldElement(
        this, std::make_shared<const BigValue>(BigValue{std::move(r)}));
  }
  FieldElement RatFunc(GF2Poly num, GF2Poly den) const {
    return FieldElement(this, std::make_shared<const BigValue>(BigValue{
                                  MakeRationalFunction(std::move(num),
                                                       std::move(den))}));
  }
  FieldElement RatFunc(RationalFunction f) const {
    return RatFunc(std::move(f.num), std::move(f.den));
  }

  static const cpp_rational& AsRational(const FieldElement& e) {
    return std::get<cpp_rational>(e.big_->value);
  }
  static const RationalFunction& AsRatFunc(const FieldElement& e) {
    return std::get<RationalFunction>(e.big_->value);
  }
  static std::uint32_t Code(const FieldElement& e) { return e.code_; }

  FieldElement FromInteger(std::int64_t n) const {
    switch (kind) {
      case FieldKind::kPrime:
      case FieldKind::kExtension: {
        const std::int64_t p = characteristic;
        return Finite(static_cast<std::uint32_t>(((n % p) + p) % p));
      }
      case FieldKind::kRationals:
        return Rational(cpp_rational(n));
      case FieldKind::kRationalFunctionsF2:
        return RatFunc((n % 2 != 0) ? GF2Poly::One() : GF2Poly(),
                       GF2Poly::One());
    }
    return {};
  }

  // Base-p digits of an element code, ascending degree.
  PolyFp Digits(std::uint32_t code) const {
    PolyFp digits(descriptor_.k, 0);
    for (std::uint32_t i = 0; i < descriptor_.k; ++i) {
      digits[i] = code % descriptor_.p;
      code /= descriptor_.p;
    }
    return digits;
  }

  // First element in enumeration order squaring to `code`, or kNoRoot.
  std::uint16_t SqrtOf(std::uint32_t code) const { return sqrt_table_[code]; }

 private:
  void BuildFiniteTables() {
    const std::uint32_t p = descriptor_.p;
    const std::uint32_t k = descriptor_.k;
    characteristic = p;
    order = static_cast<std::uint32_t>(IntPow(p, k));
    const std::uint32_t q = order;
    add_table.resize(static_cast<std::size_t>(q) * q);
    mul_table.resize(static_cast<std::size_t>(q) * q);
    neg_table.resize(q);
    inv_table.assign(q, 0);
    std::vector<PolyFp> polys(q);
    for (std::uint32_t c = 0; c < q; ++c) polys[c] = Digits(c);
    auto encode = [&](const PolyFp& f) {
      std::uint32_t code = 0;
      for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
      return static_cast<std::uint16_t>(code);
    };
    for (std::uint32_t a = 0; a < q; ++a) {
      PolyFp neg(k);
      for (std::uint32_t i = 0; i < k; ++i) neg[i] = (p - polys[a][i]) % p;
      neg_table[a] = encode(neg);
      for (std::uint32_t b = 0; b < q; ++b) {
        PolyFp sum(k);
        for (std::uint32_t i = 0; i < k; ++i) {
          sum[i] = (polys[a][i] + polys[b][i]) % p;
        }
        add_table[a * q + b] = encode(sum);
        PolyFp prod(2 * k - 1, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
          for (std::uint32_t j = 0; j < k; ++j) {
            prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
          }
        }
        if (k > 1) prod = PolyMod(prod, descriptor_.modulus, p);
        prod.resize(k, 0);
        mul_table[a * q + b] = encode(prod);
      }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 1; b < q; ++b) {
        if (mul_table[a * q + b] == 1) {
          inv_table[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
    sqrt_table_.assign(q, kNoRoot);
    for (std::uint32_t s = 0; s < q; ++s) {
      const std::uint16_t sq = mul_table[s * q + s];
      if (sqrt_table_[sq] == kNoRoot) {
        sqrt_table_[sq] = static_cast<std::uint16_t>(s);
      }
    }
  }

  FieldDescriptor descriptor_;
  std::vector<std::uint16_t> sqrt_table_;
};

}  // namespace detail

using detail::FieldImpl;
using detail::RationalFunction;

namespace {

const FieldImpl& ImplOf(const detail::FieldCore* core) {
  return *static_cast<const FieldImpl*>(core);
}

struct DescriptorKey {
  FieldKind kind;
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;
  auto operator<=>(const DescriptorKey&) const = default;
};

FieldDescriptor Validate(const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldKind::kRationals:
      return FieldDescriptor::Rationals();
    case FieldKind::kRationalFunctionsF2:
      return FieldDescriptor::RationalFunctionsF2();
    case FieldKind::kPrime:
      if (!IsPrime(d.p)) {
        throw FieldError("F_p requires a prime p, got " + std::to_string(d.p));
      }
      if (d.p > detail::kMaxPrime) {
        throw FieldError("prime fields are supported up to p = 97");
      }
      return FieldDescriptor::Prime(d.p);
    case FieldKind::kExtension: {
      if (!IsPrime(d.p)) {
        throw FieldError("extension field requires a prime p, got " +
                         std::to_string(d.p));
      }
      if (d.modulus.size() < 2) {
        throw FieldError("extension degree k must be at least 1");
      }
      const auto k = static_cast<std::uint32_t>(d.modulus.size() - 1);
      if (k > detail::kMaxDegree) {
        throw FieldError("extension degree above 8 is not supported");
      }
      if (d.modulus.back() != 1) throw FieldError("modulus must be monic");
      if (std::any_of(d.modulus.begin(), d.modulus.end(),
                      [&](std::uint32_t c) { return c >= d.p; })) {
        throw FieldError("modulus coefficients must lie in [0, p)");
      }
      if (detail::IntPow(d.p, k) > detail::kMaxOrder) {
        throw FieldError("finite fields are supported up to 256 elements");
      }
      if (!detail::IsIrreducible(d.modulus, d.p)) {
        throw FieldError("modulus " + detail::FormatPolyFp(d.modulus, "x") +
                         " is reducible over F" + std::to_string(d.p));
      }
      if (k == 1) {
        if (d.p > detail::kMaxPrime) {
          throw FieldError("prime fields are supported up to p = 97");
        }
        return FieldDescriptor::Prime(d.p);
      }
      FieldDescriptor out = d;
      out.k = k;
      return out;
    }
  }
  throw FieldError("unknown field kind");
}

// Parses "x^2+x+1", "x^3-2x+1", ... over F_p into a coefficient vector.
std::vector<std::uint32_t> ParseModulus(std::string_view text,
                                        std::uint32_t p) {
  std::map<std::uint32_t, std::int64_t> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw FieldError("cannot parse modulus '" + std::string(text) +
                     "': " + what);
  };
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip();
  if (pos == text.size()) fail("empty");
  while (pos < text.size()) {
    std::int64_t sign = 1;
    skip();
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    std::int64_t coeff = 1;
    bool has_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = (coeff * 10 + (text[pos] - '0')) % p;
        ++pos;
      }
      has_coeff = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    std::uint32_t exponent = 0;
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      exponent = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        exponent = 0;
        bool any = false;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          exponent = exponent * 10 + static_cast<std::uint32_t>(text[pos] - '0');
          ++pos;
          any = true;
          if (exponent > 64) fail("exponent too large");
        }
        if (!any) fail("missing exponent");
      }
    } else if (!has_coeff) {
      fail("expected a term");
    }
    terms[exponent] += sign * coeff;
    skip();
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
      fail("unexpected character");
    }
  }
  std::vector<std::uint32_t> out(terms.rbegin()->first + 1, 0);
  for (const auto& [e, c] : terms) {
    const std::int64_t pp = p;
    out[e] = static_cast<std::uint32_t>(((c % pp) + pp) % pp);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// Lexicographically least monic irreducible of degree k over F_p.
std::vector<std::uint32_t> DefaultModulus(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t count = detail::IntPow(p, k);
  for (std::uint64_t code = 0; code < count; ++code) {
    auto g = detail::MonicFromCode(p, k, code);
    if (detail::IsIrreducible(g, p)) return g;
  }
  throw FieldError("no irreducible polynomial found");
}

// Recursive-descent evaluator for element text inside a given field.
class ElementParser {
 public:
  ElementParser(const Field& field, std::string_view text)
      : field_(field), text_(text) {}

  FieldElement Parse() {
    FieldElement v = Expr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw FieldError("cannot parse element '" + std::string(text_) + "' in " +
                     field_.spec() + ": " + what);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Peek(char c) {
    SkipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool AtAtomStart() {
    SkipSpace();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           c == 'w' || c == 'x' || c == 'X' || text_.substr(pos_, 2) == kOmega;
  }

  FieldElement Expr() {
    FieldElement v = Term();
    while (true) {
      if (Peek('+')) {
        ++pos_;
        v = v + Term();
      } else if (Peek('-')) {
        ++pos_;
        v = v - Term();
      } else {
        return v;
      }
    }
  }

  FieldElement Term() {
    FieldElement v = Unary();
    while (true) {
      if (Peek('*')) {
        ++pos_;
        v = v * Unary();
      } else if (Peek('/')) {
        ++pos_;
        FieldElement d = Unary();
        if (d.is_zero()) Fail("division by zero");
        v = v / d;
      } else if (AtAtomStart()) {
        v = v * Power();  // juxtaposition, e.g. "2w" or "3X^2"
      } else {
        return v;
      }
    }
  }

  FieldElement Unary() {
    if (Peek('-')) {
      ++pos_;
      return -Unary();
    }
    if (Peek('+')) {
      ++pos_;
      return Unary();
    }
    return Power();
  }

  FieldElement Power() {
    FieldElement base = Atom();
    if (!Peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (Peek('-')) {
      negative = true;
      ++pos_;
    }
    const std::string digits = ReadDigits();
    if (digits.empty() || digits.size() > 9) Fail("bad exponent");
    std::int64_t e = std::stoll(digits);
    if (negative) e = -e;
    if (e < 0 && base.is_zero()) Fail("division by zero");
    return base.pow(e);
  }

  std::string ReadDigits() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  FieldElement Atom() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = Expr();
      if (!Peek(')')) Fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Integer(ReadDigits());
    }
    if (text_.substr(pos_, 2) == kOmega) {
      pos_ += 2;
      return Symbol('w');
    }
    if (c == 'w' || c == 'x' || c == 'X') {
      ++pos_;
      return Symbol(c);
    }
    Fail("unexpected character");
  }

  FieldElement Symbol(char symbol) {
    const FieldKind kind = field_.kind();
    if (kind == FieldKind::kExtension && symbol != 'X') {
      return field_.Generator();
    }
    if (kind == FieldKind::kRationalFunctionsF2 &&
        (symbol == 'X' || symbol == 'x')) {
      return field_.Generator();
    }
    Fail(std::string("symbol '") + symbol + "' is not defined in this field");
  }

  FieldElement Integer(const std::string& digits) {
    if (field_.kind() == FieldKind::kRationals) {
      return field_.FromDecimalFraction(digits);
    }
    const std::uint32_t p = field_.characteristic();
    std::uint64_t r = 0;
    for (char d : digits) {
      r = (r * 10 + static_cast<std::uint64_t>(d - '0')) % p;
    }
    return field_.FromInteger(static_cast<std::int64_t>(r));
  }

  static constexpr std::string_view kOmega = "\xCF\x89";

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor FieldDescriptor::Prime(std::uint32_t p) {
  FieldDescriptor d;
  d.kind = FieldKind::kPrime;
  d.p = p;
  d.k = 1;
  return d;
}

FieldDescriptor FieldDescriptor::Extension(std::uint32_t p,
                                           std::vector<std::uint32_t> modulus) {
  FieldDescriptor d;
  d.kind = FieldKind::kExtension;
  d.p = p;
  d.k = modulus.empty() ? 0 : static_cast<std::uint32_t>(modulus.size() - 1);
  d.modulus = std::move(modulus);
  return d;
}

FieldDescriptor FieldDescriptor::Rationals() {
  FieldDescriptor d;
  d.kind = FieldKind::kRationals;
  return d;
}

FieldDescriptor FieldDescriptor::RationalFunctionsF2() {
  FieldDescriptor d;
  d.kind = FieldKind::kRationalFunctionsF2;
  d.p = 2;
  return d;
}

// ---------------------------------------------------------------------------
// Field

Field Field::Make(const FieldDescriptor& descriptor) {
  FieldDescriptor valid = Validate(descriptor);
  static std::mutex mu;
  static std::map<DescriptorKey, std::unique_ptr<const FieldImpl>> registry;
  DescriptorKey key{valid.kind, valid.p, valid.modulus};
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(key);
  if (it == registry.end()) {
    it = registry
             .emplace(std::move(key),
                      std::make_unique<const FieldImpl>(std::move(valid)))
             .first;
  }
  return Field(it->second.get());
}

Field Field::Parse(std::string_view spec) {
  auto trimmed = spec;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed == "Q") return Make(FieldDescriptor::Rationals());
  if (trimmed == "F2(X)" || trimmed == "F2(x)") {
    return Make(FieldDescriptor::RationalFunctionsF2());
  }
  auto fail = [&]() -> Field {
    throw FieldError("unrecognized field spec '" + std::string(spec) +
                     "' (expected Fp, Fp^k/modulus, Fq, Q or F2(X))");
  };
  if (trimmed.size() < 2 || trimmed[0] != 'F') return fail();
  std::size_t pos = 1;
  auto read_number = [&]() -> std::uint64_t {
    std::uint64_t n = 0;
    const std::size_t start = pos;
    while (pos < trimmed.size() &&
           std::isdigit(static_cast<unsigned char>(trimmed[pos]))) {
      n = n * 10 + static_cast<std::uint64_t>(trimmed[pos] - '0');
      if (n > 1'000'000) fail();
      ++pos;
    }
    if (pos == start) fail();
    return n;
  };
  const std::uint64_t base = read_number();
  if (pos == trimmed.size()) {
    // "Fq": prime, or a prime power with the default modulus.
    if (IsPrime(base)) {
      return Make(FieldDescriptor::Prime(static_cast<std::uint32_t>(base)));
    }
    for (std::uint32_t p = 2; p <= base; ++p) {
      if (!IsPrime(p) || base % p != 0) continue;
      std::uint64_t rest = base;
      std::uint32_t k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (rest != 1) break;
      if (base > detail::kMaxOrder) {
        throw FieldError("finite fields are supported up to 256 elements");
      }
      return Make(FieldDescriptor::Extension(p, DefaultModulus(p, k)));
    }
    throw FieldError("F" + std::to_string(base) +
                     ": order must be a prime power");
  }
  if (trimmed[pos] != '^') return fail();
  ++pos;
  const std::uint64_t k = read_number();
  if (!IsPrime(base)) {
    throw FieldError("F_p^k requires a prime p, got " + std::to_string(base));
  }
  if (k < 1) throw FieldError("extension degree k must be at least 1");
  const auto p = static_cast<std::uint32_t>(base);
  std::vector<std::uint32_t> modulus;
  if (pos == trimmed.size()) {
    if (k > detail::kMaxDegree) {
      throw FieldError("extension degree above 8 is not supported");
    }
    modulus = DefaultModulus(p, static_cast<std::uint32_t>(k));
  } else {
    if (trimmed[pos] != '/') return fail();
    modulus = ParseModulus(trimmed.substr(pos + 1), p);
    if (modulus.size() != k + 1) {
      throw FieldError("modulus degree does not match k = " +
                       std::to_string(k));
    }
  }
  return Make(FieldDescriptor::Extension(p, std::move(modulus)));
}

const detail::FieldCore& Field::tables() const { return *impl_; }

const FieldDescriptor& Field::descriptor() const { return impl_->descriptor(); }
FieldKind Field::kind() const { return impl_->kind; }
std::string Field::spec() const { return impl_->Spec(); }
std::uint32_t Field::characteristic() const { return impl_->characteristic; }
bool Field::is_finite() const { return impl_->order != 0; }

std::uint32_t Field::order() const {
  if (!is_finite()) throw UnsupportedError(spec() + " is infinite");
  return impl_->order;
}

FieldElement Field::zero() const { return impl_->FromInteger(0); }
FieldElement Field::one() const { return impl_->FromInteger(1); }
FieldElement Field::FromInteger(std::int64_t n) const {
  return impl_->FromInteger(n);
}

FieldElement Field::FromFraction(std::int64_t num, std::int64_t den) const {
  if (kind() == FieldKind::kRationals) {
    if (den == 0) throw std::domain_error("zero denominator");
    return impl_->Rational(Fraction(num, den));
  }
  return FromInteger(num) / FromInteger(den);
}

FieldElement Field::FromCode(std::uint32_t code) const {
  if (code >= order()) {
    throw std::out_of_range("element code out of range for " + spec());
  }
  return impl_->Finite(code);
}

FieldElement Field::FromDecimalFraction(std::string_view num,
                                        std::string_view den) const {
  if (kind() != FieldKind::kRationals) {
    throw UnsupportedError("FromDecimalFraction requires Q");
  }
  auto parse = [&](std::string_view s) {
    std::string str(s);
    std::size_t i = (!str.empty() && str[0] == '-') ? 1 : 0;
    if (i == str.size() ||
        !std::all_of(str.begin() + static_cast<std::ptrdiff_t>(i), str.end(),
                     [](char c) {
                       return std::isdigit(static_cast<unsigned char>(c));
                     })) {
      throw FieldError("bad integer '" + str + "'");
    }
    return cpp_int(str);
  };
  cpp_int n = parse(num);
  cpp_int d = parse(den);
  if (d == 0) throw std::domain_error("zero denominator");
  return impl_->Rational(Fraction(std::move(n), std::move(d)));
}

FieldElement Field::FromRationalFunction(const GF2Poly& num,
                                         const GF2Poly& den) const {
  if (kind() != FieldKind::kRationalFunctionsF2) {
    throw UnsupportedError("FromRationalFunction requires F2(X)");
  }
  return impl_->RatFunc(num, den);
}

FieldElement Field::Generator() const {
  switch (kind()) {
    case FieldKind::kExtension:
      return impl_->Finite(descriptor().p);
    case FieldKind::kRationalFunctionsF2:
      return impl_->RatFunc(GF2Poly::Monomial(1), GF2Poly::One());
    default:
      throw UnsupportedError(spec() + " has no generator symbol");
  }
}

FieldElement Field::ParseElement(std::string_view text) const {
  return ElementParser(*this, text).Parse();
}

std::vector<FieldElement> Field::Elements() const {
  if (!is_finite()) {
    throw UnsupportedError("cannot enumerate the infinite field " + spec());
  }
  std::vector<FieldElement> out;
  out.reserve(impl_->order);
  for (std::uint32_t c = 0; c < impl_->order; ++c) {
    out.push_back(impl_->Finite(c));
  }
  return out;
}

std::vector<FieldElement> Field::NonzeroElements() const {
  auto all = Elements();
  all.erase(all.begin());
  return all;
}

SquareResult Field::IsSquare(const FieldElement& t,
                             const SquareOptions& options) const {
  if (!(t.field() == *this)) {
    throw FieldMismatchError("IsSquare: element from another field");
  }
  SquareResult result;
  if (t.is_zero()) {
    result.decision = Decision::kYes;
    result.witness = zero();
    return result;
  }
  switch (kind()) {
    case FieldKind::kPrime:
    case FieldKind::kExtension: {
      const std::uint32_t q = impl_->order;
      if (characteristic() == 2) {
        // Frobenius is bijective: t = (t^(q/2))^2.
        result.decision = Decision::kYes;
        result.witness = t.pow(q / 2);
        return result;
      }
      if (!t.pow((q - 1) / 2).is_one()) return result;
      result.decision = Decision::kYes;
      result.witness = impl_->Finite(impl_->SqrtOf(FieldImpl::Code(t)));
      return result;
    }
    case FieldKind::kRationals: {
      const cpp_rational& r = FieldImpl::AsRational(t);
      const cpp_int num = boost::multiprecision::numerator(r);
      const cpp_int den = boost::multiprecision::denominator(r);
      const cpp_int bound(options.rational_bound);
      if (boost::multiprecision::abs(num) > bound || den > bound) {
        result.decision = Decision::kUndecided;
        return result;
      }
      if (num < 0) return result;
      const cpp_int num_root = boost::multiprecision::sqrt(num);
      const cpp_int den_root = boost::multiprecision::sqrt(den);
      if (num_root * num_root != num || den_root * den_root != den) {
        return result;
      }
      result.decision = Decision::kYes;
      result.witness = impl_->Rational(cpp_rational(num_root, den_root));
      return result;
    }
    case FieldKind::kRationalFunctionsF2: {
      const RationalFunction& f = FieldImpl::AsRatFunc(t);
      auto num_root = f.num.SquareRoot();
      auto den_root = f.den.SquareRoot();
      if (!num_root || !den_root) return result;
      result.decision = Decision::kYes;
      result.witness = impl_->RatFunc(*num_root, *den_root);
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// FieldElement

const FieldImpl& FieldElement::impl() const {
  if (core_ == nullptr) throw std::logic_error("use of an unowned element");
  return ImplOf(core_);
}

Field FieldElement::field() const { return Field(&impl()); }

void FieldElement::CheckSameField(const FieldElement& rhs) const {
  if (core_ != rhs.core_ || core_ == nullptr) {
    throw FieldMismatchError("operands belong to different fields");
  }
}

bool FieldElement::is_zero() const {
  if (core_->order != 0) return code_ == 0;
  if (core_->kind == FieldKind::kRationals) {
    return FieldImpl::AsRational(*this) == 0;
  }
  return FieldImpl::AsRatFunc(*this).num.is_zero();
}

bool FieldElement::is_one() const {
  if (core_->order != 0) return code_ == 1;
  if (core_->kind == FieldKind::kRationals) {
    return FieldImpl::AsRational(*this) == 1;
  }
  const auto& f = FieldImpl::AsRatFunc(*this);
  return f.num.is_one() && f.den.is_one();
}

std::uint32_t FieldElement::code() const {
  if (core_ == nullptr || core_->order == 0) {
    throw UnsupportedError("code() requires a finite field element");
  }
  return code_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  CheckSameField(rhs);
  if (core_->order != 0) {
    return FieldElement(core_, core_->add_table[code_ * core_->order + rhs.code_]);
  }
  const FieldImpl& f = impl();
  if (core_->kind == FieldKind::kRationals) {
    return f.Rational(FieldImpl::AsRational(*this) + FieldImpl::AsRational(rhs));
  }
  const auto& a = FieldImpl::AsRatFunc(*this);
  const auto& b = FieldImpl::AsRatFunc(rhs);
  return f.RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

FieldElement FieldElement::operator-() const {
  if (core_->order != 0) return FieldElement(core_, core_->neg_table[code_]);
  if (core_->kind == FieldKind::kRationals) {
    return impl().Rational(-FieldImpl::AsRational(*this));
  }
  return *this;  // characteristic 2
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return *this + (-rhs);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  CheckSameField(rhs);
  if (core_->order != 0) {
    return FieldElement(core_, core_->mul_table[code_ * core_->order + rhs.code_]);
  }
  const FieldImpl& f = impl();
  if (core_->kind == FieldKind::kRationals) {
    return f.Rational(FieldImpl::AsRational(*this) * FieldImpl::AsRational(rhs));
  }
  const auto& a = FieldImpl::AsRatFunc(*this);
  const auto& b = FieldImpl::AsRatFunc(rhs);
  return f.RatFunc(a.num * b.num, a.den * b.den);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (core_->order != 0) return FieldElement(core_, core_->inv_table[code_]);
  const FieldImpl& f = impl();
  if (core_->kind == FieldKind::kRationals) {
    return f.Rational(1 / FieldImpl::AsRational(*this));
  }
  const auto& a = FieldImpl::AsRatFunc(*this);
  return f.RatFunc(a.den, a.num);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return *this * rhs.inverse();
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
  FieldElement base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  FieldElement result = impl().FromInteger(1);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.core_ != rhs.core_) return false;
  if (lhs.core_ == nullptr) return true;
  if (lhs.core_->order != 0) return lhs.code_ == rhs.code_;
  if (lhs.core_->kind == FieldKind::kRationals) {
    return FieldImpl::AsRational(lhs) == FieldImpl::AsRational(rhs);
  }
  const auto& a = FieldImpl::AsRatFunc(lhs);
  const auto& b = FieldImpl::AsRatFunc(rhs);
  return a.num == b.num && a.den == b.den;
}

std::strong_ordering operator<=>(const FieldElement& lhs,
                                 const FieldElement& rhs) {
  if (lhs.core_ != rhs.core_) {
    throw FieldMismatchError("comparing elements of different fields");
  }
  if (lhs.core_ == nullptr) return std::strong_ordering::equal;
  if (lhs.core_->order != 0) return lhs.code_ <=> rhs.code_;
  if (lhs.core_->kind == FieldKind::kRationals) {
    const auto& a = FieldImpl::AsRational(lhs);
    const auto& b = FieldImpl::AsRational(rhs);
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const auto& a = FieldImpl::AsRatFunc(lhs);
  const auto& b = FieldImpl::AsRatFunc(rhs);
  if (auto c = a.den <=> b.den; c != 0) return c;
  return a.num <=> b.num;
}

std::string FieldElement::ToString() const {
  if (core_ == nullptr) return "<unowned>";
  const FieldImpl& f = impl();
  switch (core_->kind) {
    case FieldKind::kPrime:
      return std::to_string(code_);
    case FieldKind::kExtension:
      return detail::FormatPolyFp(f.Digits(code_), "w");
    case FieldKind::kRationals: {
      const auto& r = FieldImpl::AsRational(*this);
      const cpp_int num = boost::multiprecision::numerator(r);
      const cpp_int den = boost::multiprecision::denominator(r);
      if (den == 1) return num.str();
      return num.str() + "/" + den.str();
    }
    case FieldKind::kRationalFunctionsF2: {
      const auto& rf = FieldImpl::AsRatFunc(*this);
      if (rf.den.is_one()) return rf.num.ToString();
      auto wrap = [](const GF2Poly& g) {
        return detail::NeedsParens(g) ? "(" + g.ToString() + ")"
                                      : g.ToString();
      };
      return wrap(rf.num) + "/" + wrap(rf.den);
    }
  }
  return {};
}

std::pair<GF2Poly, GF2Poly> FieldElement::rational_function() const {
  if (core_ == nullptr || core_->kind != FieldKind::kRationalFunctionsF2) {
    throw UnsupportedError("rational_function() requires an F2(X) element");
  }
  const auto& rf = FieldImpl::AsRatFunc(*this);
  return {rf.num, rf.den};
}

std::pair<std::string, std::string> FieldElement::rational() const {
  if (core_ == nullptr || core_->kind != FieldKind::kRationals) {
    throw UnsupportedError("rational() requires a Q element");
  }
  const auto& r = FieldImpl::AsRational(*this);
  return {boost::multiprecision::numerator(r).str(),
          boost::multiprecision::denominator(r).str()};
}

// ---------------------------------------------------------------------------

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t SquarefreePart(std::uint64_t n) {
  if (n == 0) throw std::domain_error("SquarefreePart(0)");
  std::uint64_t part = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    int multiplicity = 0;
    while (n % d == 0) {
      n /= d;
      ++multiplicity;
    }
    if (multiplicity % 2 == 1) part *= d;
  }
  return part * n;
}

}  // namespace endoclass
