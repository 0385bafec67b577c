#include "polyalg/gfseries.hpp"

#include <functional>
#include <map>
#include <random>

#include "polyalg/permstat.hpp"

namespace polyalg {

Rational convention_weight(Convention c, int n) {
  switch (c) {
    case Convention::Ordinary: return 1;
    case Convention::Egf: return Rational(factorial(n));
    case Convention::TypeBEgf: {
      Integer w = factorial(n);
      w <<= n;
      return Rational(w);
    }
  }
  return 1;
}

TruncSeries2::TruncSeries2(int order, Convention conv)
    : order_(order), conv_(conv), c_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
}

TruncSeries2 TruncSeries2::from_coeffs(int order, const std::vector<RatPoly>& coeffs, Convention conv) {
  TruncSeries2 s(order, conv);
  for (int n = 0; n <= order && n < static_cast<int>(coeffs.size()); ++n) s.set_coeff(n, coeffs[n]);
  return s;
}

TruncSeries2 TruncSeries2::constant(int order, const RatPoly& c, Convention conv) {
  TruncSeries2 s(order, conv);
  s.c_[0] = c;
  return s;
}

TruncSeries2 TruncSeries2::x(int order, Convention conv) {
  TruncSeries2 s(order, conv);
  if (order >= 1) s.c_[1] = RatPoly(1);
  return s;
}

RatPoly TruncSeries2::coeff(int n) const {
  if (n < 0 || n > order_) throw InvalidArgument("coefficient index beyond truncation order");
  return c_[n] * convention_weight(conv_, n);
}

void TruncSeries2::set_coeff(int n, const RatPoly& p) {
  if (n < 0 || n > order_) throw InvalidArgument("coefficient index beyond truncation order");
  c_[n] = p * (Rational(1) / convention_weight(conv_, n));
}

TruncSeries2 TruncSeries2::with_convention(Convention conv) const {
  TruncSeries2 s(*this);
  s.conv_ = conv;
  return s;
}

void TruncSeries2::check_compatible(const TruncSeries2& o) const {
  if (o.order_ != order_) throw InvalidArgument("series truncation orders differ");
}

TruncSeries2& TruncSeries2::operator+=(const TruncSeries2& o) {
  check_compatible(o);
  for (int n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TruncSeries2& TruncSeries2::operator-=(const TruncSeries2& o) {
  check_compatible(o);
  for (int n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TruncSeries2& TruncSeries2::operator*=(const TruncSeries2& o) {
  check_compatible(o);
  std::vector<RatPoly> r(c_.size());
  for (int i = 0; i <= order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

TruncSeries2& TruncSeries2::operator*=(const RatPoly& s) {
  for (auto& p : c_) p *= s;
  return *this;
}

TruncSeries2 TruncSeries2::compose(const TruncSeries2& inner) const {
  check_compatible(inner);
  if (!inner.c_[0].is_zero()) throw InvalidArgument("compose requires inner series with zero constant term");
  TruncSeries2 result(order_, conv_);
  for (int n = order_; n >= 0; --n) {
    result *= inner;
    result.c_[0] += c_[n];
  }
  return result;
}

TruncSeries2 TruncSeries2::exp() const {
  if (!c_[0].is_zero()) throw InvalidArgument("exp requires zero constant term");
  TruncSeries2 g(order_, conv_);
  g.c_[0] = RatPoly(1);
  for (int n = 1; n <= order_; ++n) {
    RatPoly acc;
    for (int k = 1; k <= n; ++k) acc += c_[k] * g.c_[n - k] * Rational(k);
    g.c_[n] = acc * Rational(1, n);
  }
  return g;
}

TruncSeries2 TruncSeries2::log() const {
  if (!(c_[0] == RatPoly(1))) throw InvalidArgument("log requires constant term 1");
  TruncSeries2 l(order_, conv_);
  for (int n = 1; n <= order_; ++n) {
    RatPoly acc;
    for (int k = 1; k < n; ++k) acc += l.c_[k] * c_[n - k] * Rational(k);
    l.c_[n] = c_[n] - acc * Rational(1, n);
  }
  return l;
}

TruncSeries2 TruncSeries2::inverse() const {
  if (c_[0].degree() != 0) throw InvalidArgument("inverse requires a nonzero constant term");
  const Rational c0 = c_[0].coeff(0);
  TruncSeries2 r(order_, conv_);
  r.c_[0] = RatPoly(Rational(1) / c0);
  for (int n = 1; n <= order_; ++n) {
    RatPoly acc;
    for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
    r.c_[n] = acc * (Rational(-1) / c0);
  }
  return r;
}

TruncSeries2 TruncSeries2::pow(const Rational& alpha) const {
  if (!(c_[0] == RatPoly(1))) throw InvalidArgument("rational power requires constant term 1");
  TruncSeries2 l = log();
  l *= RatPoly(alpha);
  return l.exp();
}

TruncSeries2 TruncSeries2::scale_x(const Rational& c) const {
  TruncSeries2 s(*this);
  Rational w = 1;
  for (int n = 0; n <= order_; ++n, w *= c) s.c_[n] *= w;
  return s;
}

TruncSeries2 TruncSeries2::eval_z(const Rational& z) const {
  TruncSeries2 s(order_, conv_);
  for (int n = 0; n <= order_; ++n) s.c_[n] = RatPoly(c_[n](z));
  return s;
}

// ---------------------------------------------------------------------------

RatPoly eulerian_A(int d) {
  if (d < 0) throw InvalidArgument("d must be nonnegative");
  std::vector<Rational> row{1};  // A_0 = A_1 = 1
  for (int n = 2; n <= d; ++n) {
    std::vector<Rational> next(n, Rational(0));
    for (int k = 0; k < n; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += Rational(k + 1) * row[k];
      if (k >= 1 && k - 1 < static_cast<int>(row.size())) next[k] += Rational(n - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return RatPoly(row);
}

RatPoly eulerian_B(int d) {
  if (d < 0) throw InvalidArgument("d must be nonnegative");
  std::vector<Rational> row{1};  // B_0 = 1
  for (int n = 1; n <= d; ++n) {
    std::vector<Rational> next(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += Rational(2 * k + 1) * row[k];
      if (k >= 1 && k - 1 < static_cast<int>(row.size())) next[k] += Rational(2 * n - 2 * k + 1) * row[k - 1];
    }
    row = std::move(next);
  }
  return RatPoly(row);
}

RatPoly eulerian_A_enumerated(int d) {
  std::vector<Rational> c(d + 1, Rational(0));
  for_each_permutation(d, [&](const Permutation& p) { c[stats(p).exc] += 1; });
  return RatPoly(c);
}

RatPoly eulerian_B_enumerated(int d) {
  std::vector<Rational> c(d + 1, Rational(0));
  for_each_signed_permutation(d, [&](const SignedPermutation& p) { c[stats_signed(p).exc_b] += 1; });
  return RatPoly(c);
}

TruncSeries2 eulerian_series_A(int order) {
  TruncSeries2 s(order, Convention::Egf);
  const RatPoly zm1(std::vector<Rational>{-1, 1});
  RatPoly pw(1);
  for (int n = 1; n <= order; ++n) {
    s.set_coeff(n, pw);  // (z-1)^{n-1} x^n/n!
    pw *= zm1;
  }
  TruncSeries2 one = TruncSeries2::constant(order, RatPoly(1), Convention::Egf);
  return (one - s).inverse();
}

TruncSeries2 eulerian_series_B(int order) {
  const RatPoly u(std::vector<Rational>{1, -1});  // 1 - z
  TruncSeries2 half = TruncSeries2::x(order) * (u * Rational(1, 2));
  TruncSeries2 e = half.exp();
  TruncSeries2 s(order, Convention::Egf);
  RatPoly pw(1);
  for (int n = 1; n <= order; ++n) {
    s.set_coeff(n, pw);
    pw *= u;
  }
  s *= RatPoly::variable();
  TruncSeries2 one = TruncSeries2::constant(order, RatPoly(1));
  TruncSeries2 b = e * (one - s.with_convention(Convention::Ordinary)).inverse();
  return b.with_convention(Convention::TypeBEgf);
}

TruncSeries2 type_b_compositional(const TruncSeries2& f, const TruncSeries2& g, const TruncSeries2& a) {
  TruncSeries2 r = f * g.compose(a);
  return r.with_convention(Convention::TypeBEgf);
}

namespace {

void set_partitions(unsigned mask, std::vector<unsigned>& prefix,
                    const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (mask == 0) {
    emit(prefix);
    return;
  }
  const unsigned low = mask & (~mask + 1);
  const unsigned rest = mask & ~low;
  unsigned sub = rest;
  while (true) {
    prefix.push_back(low | sub);
    set_partitions(rest & ~sub, prefix, emit);
    prefix.pop_back();
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

}  // namespace

RatPoly type_b_partition_sum(int d, const std::vector<RatPoly>& f, const std::vector<RatPoly>& g,
                             const std::vector<RatPoly>& a) {
  RatPoly total;
  const unsigned all = (1u << d) - 1;
  for (unsigned z = 0; z <= all; ++z) {
    std::vector<unsigned> prefix;
    set_partitions(all & ~z, prefix, [&](const std::vector<unsigned>& blocks) {
      // Each block B of the positive-side partition admits 2^{|B|-1}
      // sign patterns, one signed partition of [+-d] each.
      RatPoly term = f[__builtin_popcount(z)] * g[blocks.size()];
      for (unsigned b : blocks) {
        const int sz = __builtin_popcount(b);
        term *= a[sz] * Rational(Integer(1) << (sz - 1));
      }
      total += term;
    });
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct Tables {
  // [d][k] -> polynomial in z
  std::vector<RatPoly> eulerian;               // by d
  std::vector<RatPoly> cyclic;                 // by d, supp = bottom
  std::vector<std::vector<RatPoly>> by_dim;    // [d][dim supp]
};

Tables tables_A(int order) {
  Tables t;
  t.eulerian.assign(order + 1, RatPoly());
  t.cyclic.assign(order + 1, RatPoly());
  t.by_dim.assign(order + 1, std::vector<RatPoly>(order + 1));
  t.eulerian[0] = RatPoly(1);
  t.by_dim[0][0] = RatPoly(1);
  for (int d = 1; d <= order; ++d) {
    std::vector<std::vector<Rational>> joint(d + 1, std::vector<Rational>(d, Rational(0)));
    for_each_permutation(d, [&](const Permutation& p) {
      const auto s = stats(p);
      joint[s.supp.blocks.size()][s.exc] += 1;
    });
    for (int k = 1; k <= d; ++k) {
      t.by_dim[d][k] = RatPoly(joint[k]);
      t.eulerian[d] += t.by_dim[d][k];
    }
    t.cyclic[d] = t.by_dim[d][1];
  }
  return t;
}

Tables tables_B(int order) {
  Tables t;
  t.eulerian.assign(order + 1, RatPoly());
  t.cyclic.assign(order + 1, RatPoly());
  t.by_dim.assign(order + 1, std::vector<RatPoly>(order + 1));
  t.eulerian[0] = RatPoly(1);
  t.cyclic[0] = RatPoly(1);
  t.by_dim[0][0] = RatPoly(1);
  for (int d = 1; d <= order; ++d) {
    std::vector<std::vector<Rational>> joint(d + 1, std::vector<Rational>(d + 1, Rational(0)));
    for_each_signed_permutation(d, [&](const SignedPermutation& p) {
      const auto s = stats_signed(p);
      joint[s.supp.blocks.size()][s.exc_b] += 1;
    });
    for (int k = 0; k <= d; ++k) {
      t.by_dim[d][k] = RatPoly(joint[k]);
      t.eulerian[d] += t.by_dim[d][k];
    }
    t.cyclic[d] = t.by_dim[d][0];
  }
  return t;
}

// Compares coefficients lhs[n] against rhs.coeff(n) for n = 0..order.
void compare(CheckResult& check, const std::vector<RatPoly>& lhs, const TruncSeries2& rhs,
             const std::string& where = {}) {
  if (!check.pass) return;
  for (int n = 0; n <= rhs.order(); ++n) {
    const RatPoly r = rhs.coeff(n);
    if (!(lhs[n] == r)) {
      check.pass = false;
      check.first_mismatch = where + "x^" + std::to_string(n) + ": lhs " + lhs[n].to_string() +
                             ", rhs " + r.to_string();
      return;
    }
  }
}

RatPoly random_poly(std::mt19937_64& rng, bool zero) {
  if (zero) return RatPoly();
  std::uniform_int_distribution<int> coef(-3, 3);
  return RatPoly(std::vector<Rational>{coef(rng), coef(rng), coef(rng)});
}

}  // namespace

Report verify_identities(int order_a, int order_b) {
  Report report;
  report.suite = "gf";
  const auto ta = tables_A(order_a);
  const auto tb = tables_B(order_b);
  const TruncSeries2 A = eulerian_series_A(order_a);
  const TruncSeries2 B = eulerian_series_B(order_b);

  {
    auto& c = report.add("eulerian_egf_A", true);
    c.order = order_a;
    compare(c, ta.eulerian, A);
  }
  {
    auto& c = report.add("eulerian_egf_B", true);
    c.order = order_b;
    compare(c, tb.eulerian, B);
  }
  {
    // Moebius partition sum over set partitions vs cyclic permutations vs log A.
    auto& c = report.add("cyclic_excedances_A", true);
    c.order = order_a;
    const TruncSeries2 logA = A.log();
    std::vector<RatPoly> lhs(order_a + 1);
    for (int d = 1; d <= order_a; ++d) {
      const unsigned all = (1u << d) - 1;
      std::vector<unsigned> prefix;
      RatPoly sum;
      set_partitions(all, prefix, [&](const std::vector<unsigned>& blocks) {
        const int k = static_cast<int>(blocks.size());
        Rational mu(factorial(k - 1));
        if (k % 2 == 0) mu = -mu;
        RatPoly term(mu);
        for (unsigned b : blocks) term *= eulerian_A(__builtin_popcount(b));
        sum += term;
      });
      lhs[d] = sum;
      if (!(sum == ta.cyclic[d]) && c.pass) {
        c.pass = false;
        c.first_mismatch = "d=" + std::to_string(d) + ": partition sum " + sum.to_string() +
                           ", cyclic enumeration " + ta.cyclic[d].to_string();
      }
    }
    compare(c, lhs, logA);
  }
  {
    auto& c = report.add("cyclic_excedances_B", true);
    c.order = order_b;
    const TruncSeries2 Ab = eulerian_series_A(order_b);
    const TruncSeries2 rhs = (B.with_convention(Convention::Ordinary) * Ab.pow(Rational(-1, 2)))
                                 .with_convention(Convention::TypeBEgf);
    std::vector<RatPoly> fB, gB, aB;
    for (int n = 0; n <= order_b; ++n) {
      fB.push_back(eulerian_B(n));
      Rational g(double_factorial(2 * n - 1));
      gB.push_back(RatPoly(n % 2 ? -g : g));
      aB.push_back(n == 0 ? RatPoly() : eulerian_A(n));
    }
    std::vector<RatPoly> lhs(order_b + 1);
    for (int d = 0; d <= order_b; ++d) {
      lhs[d] = type_b_partition_sum(d, fB, gB, aB);
      if (!(lhs[d] == tb.cyclic[d]) && c.pass) {
        c.pass = false;
        c.first_mismatch = "d=" + std::to_string(d) + ": partition sum " + lhs[d].to_string() +
                           ", enumeration " + tb.cyclic[d].to_string();
      }
    }
    compare(c, lhs, rhs);
  }
  {
    // (1+x)^{-1/2} in the type B convention.
    auto& c = report.add("inverse_sqrt_coefficients_B", true);
    c.order = order_b;
    TruncSeries2 onepx = TruncSeries2::constant(order_b, RatPoly(1)) + TruncSeries2::x(order_b);
    TruncSeries2 s = onepx.pow(Rational(-1, 2)).with_convention(Convention::TypeBEgf);
    std::vector<RatPoly> lhs;
    for (int n = 0; n <= order_b; ++n) {
      Rational g(double_factorial(2 * n - 1));
      lhs.push_back(RatPoly(n % 2 ? -g : g));
    }
    compare(c, lhs, s);
  }
  {
    auto& c = report.add("support_power_A", true);
    c.order = order_a;
    for (int t = 0; t <= order_a && c.pass; ++t) {
      std::vector<RatPoly> lhs(order_a + 1);
      for (int d = 0; d <= order_a; ++d)
        for (int k = 0; k <= d; ++k) lhs[d] += ta.by_dim[d][k] * power(Rational(t), k);
      TruncSeries2 rhs = A.with_convention(Convention::Ordinary).pow(Rational(t)).with_convention(Convention::Egf);
      compare(c, lhs, rhs, "t=" + std::to_string(t) + " ");
    }
  }
  {
    auto& c = report.add("bivariate_support_B", true);
    c.order = order_b;
    const TruncSeries2 Ab = eulerian_series_A(order_b).with_convention(Convention::Ordinary);
    for (int t = 0; t <= order_b && c.pass; ++t) {
      std::vector<RatPoly> lhs(order_b + 1);
      for (int d = 0; d <= order_b; ++d)
        for (int k = 0; k <= d; ++k) lhs[d] += tb.by_dim[d][k] * power(Rational(t), k);
      TruncSeries2 rhs = (B.with_convention(Convention::Ordinary) * Ab.pow(ratio(t - 1, 2)))
                             .with_convention(Convention::TypeBEgf);
      compare(c, lhs, rhs, "t=" + std::to_string(t) + " ");
    }
  }
  {
    std::mt19937_64 rng(20240601);
    auto& c = report.add("compositional_B", true);
    c.order = order_b;
    auto& e = report.add("exponential_B", true);
    e.order = order_b;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<RatPoly> f, g, a, ones;
      for (int n = 0; n <= order_b; ++n) {
        f.push_back(random_poly(rng, false));
        g.push_back(random_poly(rng, false));
        a.push_back(random_poly(rng, n == 0));
        ones.push_back(RatPoly(1));
      }
      auto F = TruncSeries2::from_coeffs(order_b, f, Convention::TypeBEgf);
      auto G = TruncSeries2::from_coeffs(order_b, g, Convention::TypeBEgf);
      auto Aa = TruncSeries2::from_coeffs(order_b, a, Convention::Egf);
      std::vector<RatPoly> lhs, lhs_exp;
      for (int d = 0; d <= order_b; ++d) {
        lhs.push_back(type_b_partition_sum(d, f, g, a));
        lhs_exp.push_back(type_b_partition_sum(d, f, ones, a));
      }
      compare(c, lhs, type_b_compositional(F, G, Aa), "trial " + std::to_string(trial) + " ");
      TruncSeries2 half = Aa.with_convention(Convention::Ordinary) * RatPoly(Rational(1, 2));
      compare(e, lhs_exp, (F * half.exp()).with_convention(Convention::TypeBEgf),
              "trial " + std::to_string(trial) + " ");
    }
  }
  return report;
}

}  // namespace polyalg
