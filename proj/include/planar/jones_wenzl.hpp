#pragma once

#include <map>

#include "planar/tl.hpp"

namespace planar {

// Jones-Wenzl idempotents p_n built by Wenzl's recursion
//   p_{n+1} = p_n - ([n]/[n+1]) p_n E_n p_n
// with p_1 the single strand. Construction is cached per n; every cached
// element satisfies E_i p_n = p_n E_i = 0.
template <class Ctx>
class JWCache {
 public:
  using S = typename Ctx::Scalar;

  explicit JWCache(Ctx ctx) : ctx_(std::move(ctx)) {}

  const Ctx& ctx() const { return ctx_; }

  const TLElement<S>& get(int n) {
    if (n < 1 || n > kMaxStrands) throw std::invalid_argument("jw: strand count out of range");
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    if (n == 1) {
      return cache_.emplace(1, tl_identity(ctx_, 1)).first->second;
    }
    const TLElement<S>& prev = get(n - 1);
    S qn = ctx_.qint(n);
    if (detail::prune_zero(ctx_, qn))
      throw std::domain_error("jw: vanishing quantum integer [" + std::to_string(n) + "]");
    TLElement<S> pe = embed(ctx_, prev, n);
    TLElement<S> mid = multiply(ctx_, multiply(ctx_, pe, e_generator(ctx_, n - 1, n)), pe);
    S coeff = ctx_.qint(n - 1) / qn;
    TLElement<S> result = sub(ctx_, pe, scale(ctx_, mid, coeff));
    return cache_.emplace(n, std::move(result)).first->second;
  }

 private:
  Ctx ctx_;
  std::map<int, TLElement<S>> cache_;
};

// Coefficient of the one-cup/one-cap hook diagram at position parameter p in
// p_m: (-1)^(p-1) [m-p-1]/[m]. Parameter p = 0 is E_1; p indexes how far the
// movable cap sits from the fixed end (position p+1), 0 <= p <= m-2.
template <class Ctx>
typename Ctx::Scalar jw_hook_coefficient(const Ctx& ctx, int m, int p) {
  if (p < 0 || p > m - 2) throw std::invalid_argument("hook parameter out of range");
  typename Ctx::Scalar v = ctx.qint(m - p - 1) / ctx.qint(m);
  return (p % 2 == 0) ? typename Ctx::Scalar(ctx.from_int(-1) * v) : v;
}

// The two diagrams of the parameter-p hook family in TL_m.
inline TLDiagram hook_family_diagram(int m, int p, bool cap_moves) {
  return cap_moves ? hook_diagram(m, 1, p + 1) : hook_diagram(m, p + 1, 1);
}

// <p_m, F^i(p_m)> by the closed form [m+1]/qbinom(m, i) with sign
// (-1)^(i(m-i)); the sign is pinned against the diagram-level computation
// below (see jw_rot_inner_sign_report).
template <class Ctx>
typename Ctx::Scalar jw_rot_inner(const Ctx& ctx, int m, int i) {
  if (i < 0 || i > m) throw std::invalid_argument("jw_rot_inner: need 0 <= i <= m");
  typename Ctx::Scalar v = ctx.qint(m + 1) / qbinom(ctx, m, i);
  long sign_exp = static_cast<long>(i) * (m - i);
  return (sign_exp % 2 != 0) ? typename Ctx::Scalar(ctx.from_int(-1) * v) : v;
}

// Diagram-level brute force for <p_m, F^i(p_m)>, shading reinterpreted so the
// inner product is taken inside one space.
template <class Ctx>
typename Ctx::Scalar jw_rot_inner_brute(const Ctx& ctx, JWCache<Ctx>& jw, int m, int i) {
  const auto& pm = jw.get(m);
  auto rotated = reshade(fourier_pow(ctx, pm, i), pm.shading);
  return inner(ctx, pm, rotated);
}

// Which printed sign rule matches the diagram computation: "i(m-i)" or "mi".
// The two candidates agree unless m is even and i is odd.
template <class Ctx>
std::string jw_rot_inner_sign_report(const Ctx& ctx, JWCache<Ctx>& jw, int max_m) {
  bool imi_ok = true, mi_ok = true;
  for (int m = 1; m <= max_m; ++m) {
    for (int i = 0; i <= m; ++i) {
      auto brute = jw_rot_inner_brute(ctx, jw, m, i);
      auto base = ctx.qint(m + 1) / qbinom(ctx, m, i);
      auto imi = (static_cast<long>(i) * (m - i)) % 2 != 0
                     ? typename Ctx::Scalar(ctx.from_int(-1) * base)
                     : base;
      auto mi = (static_cast<long>(m) * i) % 2 != 0 ? typename Ctx::Scalar(ctx.from_int(-1) * base)
                                                    : base;
      if (!ctx.equal(brute, imi)) imi_ok = false;
      if (!ctx.equal(brute, mi)) mi_ok = false;
    }
  }
  if (imi_ok && mi_ok) return "both";
  if (imi_ok) return "(-1)^(i(m-i))";
  if (mi_ok) return "(-1)^(mi)";
  return "neither";
}

}  // namespace planar
