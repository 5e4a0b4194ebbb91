#include "tropdd/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tropdd {

namespace {

void require_same_dim(const TVector& u, const TVector& v, const char* what) {
  if (u.dim() != v.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(u.dim()) + " vs " + std::to_string(v.dim()) + ")");
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Base 10 regardless of leading zeros (GMP would read "0125" as octal).
boost::multiprecision::mpz_int decimal(std::string_view digits) {
  auto nz = digits.find_first_not_of('0');
  if (nz == std::string_view::npos) return 0;
  return boost::multiprecision::mpz_int{std::string(digits.substr(nz))};
}

}  // namespace

const Rational& Scalar::value() const {
  if (!value_) throw std::domain_error("Scalar::value: -oo has no finite value");
  return *value_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return x.is_finite() <=> y.is_finite();
  if (*x.value_ < *y.value_) return std::strong_ordering::less;
  if (*y.value_ < *x.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar tadd(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

Scalar tmul(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return Scalar::zero();
  return Scalar(Rational(x.value() + y.value()));
}

Scalar tinv(const Scalar& x) { return Scalar(Rational(-x.value())); }

Scalar parse_scalar(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("invalid scalar '" + std::string(text) + "'"); };
  if (text == "-oo") return Scalar::zero();
  if (text.empty()) throw fail();

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    boost::multiprecision::mpz_int q = decimal(den);
    if (q == 0) throw fail();
    value = Rational(decimal(num)) / Rational(q);
  } else {
    auto dot = body.find('.');
    auto int_part = body.substr(0, dot);
    auto frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (dot != std::string_view::npos && frac_part.empty()) throw fail();
    if (int_part.empty() && frac_part.empty()) throw fail();
    if (!int_part.empty() && !all_digits(int_part)) throw fail();
    if (!frac_part.empty() && !all_digits(frac_part)) throw fail();
    std::string digits = std::string(int_part) + std::string(frac_part);
    boost::multiprecision::mpz_int den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    value = Rational(decimal(digits)) / Rational(den);
  }
  if (negative) value = -value;
  return Scalar(std::move(value));
}

std::string to_string(const Scalar& x) {
  if (x.is_zero()) return "-oo";
  return x.value().str();
}

TVector TVector::unit(std::size_t dim, std::size_t i) {
  TVector e(dim);
  e[i] = Scalar::one();
  return e;
}

bool TVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::strong_ordering operator<=>(const TVector& u, const TVector& v) {
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

std::string to_string(const TVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) out += ' ';
    out += to_string(x[i]);
  }
  return out;
}

Scalar dot(const TVector& row, const TVector& x) {
  require_same_dim(row, x, "dot");
  Scalar best;
  for (std::size_t i = 0; i < row.dim(); ++i) {
    if (row[i].is_zero() || x[i].is_zero()) continue;
    Scalar term = tmul(row[i], x[i]);
    if (best < term) best = std::move(term);
  }
  return best;
}

DotResult dot_argmax(const TVector& row, const TVector& x) {
  require_same_dim(row, x, "dot_argmax");
  DotResult r;
  for (std::size_t i = 0; i < row.dim(); ++i) {
    if (row[i].is_zero() || x[i].is_zero()) continue;
    Scalar term = tmul(row[i], x[i]);
    auto cmp = term <=> r.value;
    if (cmp > 0) {
      r.value = std::move(term);
      r.argmax.assign(1, i);
    } else if (cmp == 0) {
      r.argmax.push_back(i);
    }
  }
  return r;
}

TVector combine(const Scalar& alpha, const TVector& u, const Scalar& beta, const TVector& v) {
  require_same_dim(u, v, "combine");
  TVector out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = tadd(tmul(alpha, u[i]), tmul(beta, v[i]));
  return out;
}

TVector scale(const Scalar& lambda, const TVector& x) {
  TVector out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = tmul(lambda, x[i]);
  return out;
}

IndexSet support(const TVector& x) {
  IndexSet s;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x[i].is_finite()) s.push_back(i);
  return s;
}

TVector normalize(const TVector& x) {
  auto first = std::find_if(x.begin(), x.end(), [](const Scalar& s) { return s.is_finite(); });
  if (first == x.end()) throw std::invalid_argument("normalize: zero vector is not a ray");
  return scale(tinv(*first), x);
}

bool is_proportional(const TVector& u, const TVector& v) {
  require_same_dim(u, v, "is_proportional");
  return normalize(u) == normalize(v);
}

void IneqSystem::add_row(TVector a, TVector b) {
  if (a.dim() != dim_ || b.dim() != dim_)
    throw std::invalid_argument("IneqSystem::add_row: row dimension does not match system dimension " +
                                std::to_string(dim_));
  a_.push_back(std::move(a));
  b_.push_back(std::move(b));
}

IneqSystem IneqSystem::select(const std::vector<std::size_t>& rows) const {
  IneqSystem sub(dim_);
  for (auto k : rows) sub.add_row(a_.at(k), b_.at(k));
  return sub;
}

bool IneqSystem::row_holds(std::size_t k, const TVector& x) const { return dot(a_[k], x) <= dot(b_[k], x); }

bool IneqSystem::contains(const TVector& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("IneqSystem::contains: dimension mismatch");
  for (std::size_t k = 0; k < rows(); ++k)
    if (!row_holds(k, x)) return false;
  return true;
}

}  // namespace tropdd
