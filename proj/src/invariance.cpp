#include "hbloch/invariance.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "hbloch/errors.hpp"
#include "hbloch/quadrature.hpp"

namespace hbloch {

namespace {

constexpr int kScreenDepth = 20;
constexpr int kScreenAngles = 64;

template <typename Visit>
void for_each_screen_point(Visit&& visit) {
  for (int j = 0; j <= kScreenDepth; ++j) {
    const double d = std::ldexp(1.0, -j);
    for (int k = 0; k < kScreenAngles; ++k) {
      visit(ComplexPoint::polar(d, 2.0 * std::numbers::pi * k / kScreenAngles));
    }
  }
}

}  // namespace

AutomorphismParam::AutomorphismParam(cplx alpha) : alpha_(alpha) {
  if (!(std::abs(alpha) < 1.0)) throw DomainError("automorphism: |alpha| must be < 1");
}

cplx AutomorphismParam::operator()(cplx z) const { return (z + alpha_) / (1.0 + std::conj(alpha_) * z); }

cplx AutomorphismParam::derivative(cplx z) const {
  const cplx den = 1.0 + std::conj(alpha_) * z;
  return (1.0 - std::norm(alpha_)) / (den * den);
}

cplx AutomorphismParam::second_derivative(cplx z) const {
  const cplx den = 1.0 + std::conj(alpha_) * z;
  return -2.0 * std::conj(alpha_) * (1.0 - std::norm(alpha_)) / (den * den * den);
}

ComplexPoint AutomorphismParam::apply(const ComplexPoint& z) const {
  const cplx w = (*this)(z.value());
  const double one_minus_abs2 =
      (1.0 - std::norm(alpha_)) * z.one_minus_r_squared() / std::norm(1.0 + std::conj(alpha_) * z.value());
  // 1 - |w| = (1 - |w|^2)/(1 + |w|).
  return ComplexPoint::with_distance(w, one_minus_abs2 / (1.0 + std::abs(w)));
}

InnerMap InnerMap::automorphism(cplx alpha) {
  const AutomorphismParam p(alpha);
  InnerMap m;
  m.kind = Kind::automorphism;
  m.tag = "automorphism";
  m.value = [p](cplx z) { return p(z); };
  m.d1 = [p](cplx z) { return p.derivative(z); };
  m.d2 = [p](cplx z) { return p.second_derivative(z); };
  m.normalized = alpha == cplx{0.0, 0.0};
  return m;
}

InnerMap InnerMap::power(int n) {
  if (n < 1) throw DomainError("power inner map: n must be >= 1");
  InnerMap m;
  m.kind = Kind::power;
  m.tag = "power";
  m.value = [n](cplx z) { return std::pow(z, n); };
  m.d1 = [n](cplx z) { return static_cast<double>(n) * std::pow(z, n - 1); };
  m.d2 = [n](cplx z) {
    return n >= 2 ? static_cast<double>(n) * (n - 1) * std::pow(z, n - 2) : cplx{0.0, 0.0};
  };
  m.normalized = true;
  return m;
}

InnerMap InnerMap::scaled(cplx c) {
  if (!(std::abs(c) <= 1.0)) throw DomainError("scaled inner map: |c| must be <= 1");
  InnerMap m;
  m.kind = Kind::scaled;
  m.tag = "scaled";
  m.value = [c](cplx z) { return c * z; };
  m.d1 = [c](cplx) { return c; };
  m.d2 = [](cplx) { return cplx{0.0, 0.0}; };
  m.normalized = true;
  return m;
}

InnerMap InnerMap::custom(std::string tag, ComplexFn value, ComplexFn d1, ComplexFn d2) {
  InnerMap m;
  m.kind = Kind::custom;
  m.tag = std::move(tag);
  m.value = std::move(value);
  m.d1 = std::move(d1);
  m.d2 = std::move(d2);
  m.normalized = std::abs(m.value(0.0)) == 0.0;
  screen_inner_map(m);
  return m;
}

void screen_inner_map(const InnerMap& phi) {
  for_each_screen_point([&](const ComplexPoint& p) {
    const cplx w = phi.value(p.value());
    const double aw = std::abs(w);
    if (!(aw < 1.0)) throw InvalidInnerMap("inner map leaves the disk: |phi(z)| = " + std::to_string(aw));
    const double lhs = p.one_minus_r_squared() * std::abs(phi.d1(p.value()));
    const double rhs = 1.0 - aw * aw;
    if (lhs > rhs * (1.0 + 1e-9) + 1e-14) {
      throw InvalidInnerMap("inner map violates Schwarz-Pick at |z| = " + std::to_string(p.radius()));
    }
  });
}

HarmonicMap affine_compose(const HarmonicMap& f, const AffineParams& A) {
  const cplx a = A.a;
  const cplx b = A.b;
  const cplx h0 = f.h.value(0.0);
  const cplx shift = std::conj(b) * h0;  // conj(b) h(0) moves from g to h
  HarmonicMap out;
  out.name = "affine(" + f.name + ")";
  out.params = f.params;
  out.params.a = a;
  out.params.b = b;
  const AnalyticPart h = f.h;
  const AnalyticPart g = f.g;
  out.h = {[=](cplx z) { return a * h.value(z) + b * g.value(z) + std::conj(shift); },
           [=](cplx z) { return a * h.d1(z) + b * g.d1(z); },
           [=](cplx z) { return a * h.d2(z) + b * g.d2(z); }};
  out.g = {[=](cplx z) { return std::conj(a) * g.value(z) + std::conj(b) * h.value(z) - shift; },
           [=](cplx z) { return std::conj(a) * g.d1(z) + std::conj(b) * h.d1(z); },
           [=](cplx z) { return std::conj(a) * g.d2(z) + std::conj(b) * h.d2(z); }};
  return out;
}

namespace {

/// (P o phi) with chain-rule derivatives; value shifted by `shift`.
AnalyticPart compose_part(const AnalyticPart& p, ComplexFn phi, ComplexFn dphi, ComplexFn ddphi, cplx shift) {
  return {[=](cplx z) { return p.value(phi(z)) + shift; },
          [=](cplx z) { return p.d1(phi(z)) * dphi(z); },
          [=](cplx z) {
            const cplx d = dphi(z);
            const cplx w = phi(z);
            return p.d2(w) * d * d + p.d1(w) * ddphi(z);
          }};
}

HarmonicMap compose_inner(const HarmonicMap& f, ComplexFn phi, ComplexFn dphi, ComplexFn ddphi,
                          std::string name) {
  const cplx g_at = f.g.value(phi(0.0));
  HarmonicMap out;
  out.name = std::move(name);
  out.params = f.params;
  // f o phi = (h o phi + conj(g(phi(0)))) + conj(g o phi - g(phi(0))).
  out.h = compose_part(f.h, phi, dphi, ddphi, std::conj(g_at));
  out.g = compose_part(f.g, phi, dphi, ddphi, -g_at);
  return out;
}

}  // namespace

HarmonicMap automorphism_compose(const HarmonicMap& f, const AutomorphismParam& alpha) {
  HarmonicMap out = compose_inner(
      f, [alpha](cplx z) { return alpha(z); }, [alpha](cplx z) { return alpha.derivative(z); },
      [alpha](cplx z) { return alpha.second_derivative(z); }, f.name + " o phi_alpha");
  out.params.alpha = alpha.alpha();
  return out;
}

Subordination subordinate(const HarmonicMap& F, const InnerMap& phi) {
  screen_inner_map(phi);
  auto value = [v = phi.value](cplx z) {
    const cplx w = v(z);
    if (!(std::abs(w) < 1.0)) throw InvalidInnerMap("inner map leaves the disk during evaluation");
    return w;
  };
  Subordination s;
  s.map = compose_inner(F, value, phi.d1, phi.d2, F.name + " o " + phi.tag);
  s.strict = phi.normalized;
  return s;
}

HarmonicMap make_thm31_map(const Thm31Input& in) {
  if (!(std::abs(in.eps) <= 1.0)) throw DomainError("thm31: |eps| must be <= 1");
  if (!in.omega || !in.omega_prime) throw DomainError("thm31: omega and omega' are required");
  if (!(in.omega_bound >= 0.0) || !std::isfinite(in.omega_bound)) {
    throw DomainError("thm31: omega bound must be finite");
  }
  const AnalyticPart H = in.H_prime;
  const AnalyticPart G = in.G_prime;
  const cplx eps = in.eps;
  auto w = [=](cplx z) { return H.value(z) + eps * G.value(z); };
  auto w1 = [=](cplx z) { return H.d1(z) + eps * G.d1(z); };
  auto w2 = [=](cplx z) { return H.d2(z) + eps * G.d2(z); };

  for_each_screen_point([&](const ComplexPoint& p) {
    const cplx v = w(p.value());
    if (!(std::abs(v) > 0.0) || !std::isfinite(std::abs(v))) {
      throw DomainError("thm31: H' + eps G' vanishes or overflows at |z| = " + std::to_string(p.radius()));
    }
    if (std::abs(in.omega(p.value())) > in.omega_bound * (1.0 + 1e-12)) {
      throw DomainError("thm31: |omega| exceeds its declared bound");
    }
  });

  auto hp = [=](cplx z) { return w1(z) / w(z); };
  auto hpp = [=](cplx z) {
    const cplx q = w1(z) / w(z);
    return w2(z) / w(z) - q * q;
  };
  const cplx log_w0 = std::log(w(0.0));
  const ComplexFn omega = in.omega;
  const ComplexFn omega_prime = in.omega_prime;
  auto gp = [=](cplx z) { return omega(z) * hp(z); };

  HarmonicMap f;
  f.name = "thm31";
  f.params.eps = eps;
  f.h = {[=](cplx z) { return log_w0 + radial_primitive(hp, z); }, hp, hpp};
  f.g = {[=](cplx z) { return radial_primitive(gp, z); }, gp,
         [=](cplx z) { return omega_prime(z) * hp(z) + omega(z) * hpp(z); }};
  return f;
}

}  // namespace hbloch
