#include "loopkit/smooth/catalog.hpp"

#include <array>

#include "loopkit/errors.hpp"

namespace loopkit::smooth {

namespace {

template <class S> using Pt = std::vector<S>;

std::vector<double> to_std(const Vec &x) { return {x.data(), x.data() + x.size()}; }

Vec to_vec(const std::vector<double> &x) {
  return Eigen::Map<const Vec>(x.data(), Eigen::Index(x.size()));
}

/// Wraps a scalar-generic implementation into the SmoothLoop interface.
template <class Impl> class Adapter final : public SmoothLoop {
public:
  explicit Adapter(Impl impl) : impl_(std::move(impl)) {}

  std::string name() const override { return impl_.name(); }
  std::size_t dim() const override { return impl_.dim(); }
  Vec identity() const override { return to_vec(impl_.template identity<double>()); }

  Vec mul(const Vec &x, const Vec &y) const override {
    return to_vec(impl_.mul(to_std(x), to_std(y)));
  }
  Vec ldiv(const Vec &x, const Vec &y) const override {
    return to_vec(impl_.ldiv(to_std(x), to_std(y)));
  }
  Vec rdiv(const Vec &y, const Vec &x) const override {
    return to_vec(impl_.rdiv(to_std(y), to_std(x)));
  }
  DualPoint mul(const DualPoint &x, const DualPoint &y) const override { return impl_.mul(x, y); }
  DualPoint ldiv(const DualPoint &x, const DualPoint &y) const override {
    return impl_.ldiv(x, y);
  }
  DualPoint rdiv(const DualPoint &y, const DualPoint &x) const override {
    return impl_.rdiv(y, x);
  }

  bool in_domain(const Vec &x) const override {
    if (Eigen::Index(impl_.dim()) != x.size() || !x.allFinite())
      return false;
    return impl_.in_domain(x);
  }

  Vec sample(std::mt19937_64 &rng) const override {
    const auto [lo, hi] = impl_.box();
    Vec out(Eigen::Index(impl_.dim()));
    for (std::size_t i = 0; i < impl_.dim(); ++i)
      out[Eigen::Index(i)] = std::uniform_real_distribution<double>(lo[i], hi[i])(rng);
    return out;
  }

private:
  Impl impl_;
};

using Box = std::pair<std::vector<double>, std::vector<double>>;

struct Additive {
  std::size_t n = 2;
  std::string name() const { return "additive"; }
  std::size_t dim() const { return n; }
  template <class S> Pt<S> identity() const { return Pt<S>(n, S(0.0)); }
  template <class S> Pt<S> mul(const Pt<S> &x, const Pt<S> &y) const {
    Pt<S> z(n);
    for (std::size_t i = 0; i < n; ++i)
      z[i] = x[i] + y[i];
    return z;
  }
  template <class S> Pt<S> ldiv(const Pt<S> &x, const Pt<S> &y) const {
    Pt<S> z(n);
    for (std::size_t i = 0; i < n; ++i)
      z[i] = y[i] - x[i];
    return z;
  }
  template <class S> Pt<S> rdiv(const Pt<S> &y, const Pt<S> &x) const { return ldiv(x, y); }
  bool in_domain(const Vec &) const { return true; }
  Box box() const { return {std::vector<double>(n, -1.0), std::vector<double>(n, 1.0)}; }
};

struct Affine {
  std::string name() const { return "affine"; }
  std::size_t dim() const { return 2; }
  template <class S> Pt<S> identity() const { return {S(1.0), S(0.0)}; }
  template <class S> Pt<S> mul(const Pt<S> &x, const Pt<S> &y) const {
    return {x[0] * y[0], x[0] * y[1] + x[1]};
  }
  template <class S> Pt<S> ldiv(const Pt<S> &x, const Pt<S> &y) const {
    return {y[0] / x[0], (y[1] - x[1]) / x[0]};
  }
  template <class S> Pt<S> rdiv(const Pt<S> &y, const Pt<S> &x) const {
    const S a = y[0] / x[0];
    return {a, y[1] - a * x[1]};
  }
  bool in_domain(const Vec &x) const { return x[0] > 0.0; }
  Box box() const { return {{0.5, -1.0}, {2.0, 1.0}}; }
};

struct Parabolic {
  std::string name() const { return "parabolic"; }
  std::size_t dim() const { return 2; }
  template <class S> Pt<S> identity() const { return {S(0.0), S(0.0)}; }
  template <class S> Pt<S> mul(const Pt<S> &x, const Pt<S> &y) const {
    return {x[0] + y[0], x[1] + y[1] + x[0] * y[0] * y[0]};
  }
  template <class S> Pt<S> ldiv(const Pt<S> &x, const Pt<S> &y) const {
    const S d = y[0] - x[0];
    return {d, y[1] - x[1] - x[0] * d * d};
  }
  template <class S> Pt<S> rdiv(const Pt<S> &y, const Pt<S> &x) const {
    const S d = y[0] - x[0];
    return {d, y[1] - x[1] - d * x[0] * x[0]};
  }
  bool in_domain(const Vec &) const { return true; }
  Box box() const { return {{-1.0, -1.0}, {1.0, 1.0}}; }
};

struct Commutative {
  std::string name() const { return "commutative"; }
  std::size_t dim() const { return 2; }
  template <class S> Pt<S> identity() const { return {S(0.0), S(0.0)}; }
  template <class S> Pt<S> mul(const Pt<S> &x, const Pt<S> &y) const {
    return {x[0] + y[0], x[1] + y[1] + x[0] * x[0] * y[0] * y[0]};
  }
  template <class S> Pt<S> ldiv(const Pt<S> &x, const Pt<S> &y) const {
    const S d = y[0] - x[0];
    return {d, y[1] - x[1] - x[0] * x[0] * d * d};
  }
  template <class S> Pt<S> rdiv(const Pt<S> &y, const Pt<S> &x) const { return ldiv(x, y); }
  bool in_domain(const Vec &) const { return true; }
  Box box() const { return {{-1.0, -1.0}, {1.0, 1.0}}; }
};

// Symmetric 2×2 matrices stored as (a, b, c) for [[a, b], [b, c]].
struct SpdBol {
  template <class S> struct Sym {
    S a, b, c;
  };

  template <class S> static Sym<S> sym(const Pt<S> &x) { return {x[0], x[1], x[2]}; }
  template <class S> static Pt<S> pt(const Sym<S> &m) { return {m.a, m.b, m.c}; }

  /// Principal square root: (M + √det·I) / √(tr M + 2√det).
  template <class S> static Sym<S> root(const Sym<S> &m) {
    using std::sqrt;
    const S s = sqrt(m.a * m.c - m.b * m.b);
    const S t = sqrt(m.a + m.c + S(2.0) * s);
    return {(m.a + s) / t, m.b / t, (m.c + s) / t};
  }

  template <class S> static Sym<S> inverse(const Sym<S> &m) {
    const S det = m.a * m.c - m.b * m.b;
    return {m.c / det, -m.b / det, m.a / det};
  }

  /// h·y·h for symmetric h; the result is symmetric.
  template <class S> static Sym<S> sandwich(const Sym<S> &h, const Sym<S> &y) {
    const S p00 = h.a * y.a + h.b * y.b, p01 = h.a * y.b + h.b * y.c;
    const S p10 = h.b * y.a + h.c * y.b, p11 = h.b * y.b + h.c * y.c;
    return {p00 * h.a + p01 * h.b, p00 * h.b + p01 * h.c, p10 * h.b + p11 * h.c};
  }

  template <class S> static Sym<S> square(const Sym<S> &w) {
    return {w.a * w.a + w.b * w.b, w.b * (w.a + w.c), w.b * w.b + w.c * w.c};
  }

  std::string name() const { return "spd-bol"; }
  std::size_t dim() const { return 3; }
  template <class S> Pt<S> identity() const { return {S(1.0), S(0.0), S(1.0)}; }
  template <class S> Pt<S> mul(const Pt<S> &x, const Pt<S> &y) const {
    return pt(sandwich(root(sym(x)), sym(y)));
  }
  template <class S> Pt<S> ldiv(const Pt<S> &x, const Pt<S> &y) const {
    return pt(sandwich(inverse(root(sym(x))), sym(y)));
  }
  // z∘x = y  ⇔  z^½ = x^-½ (x^½ y x^½)^½ x^-½
  template <class S> Pt<S> rdiv(const Pt<S> &y, const Pt<S> &x) const {
    const auto h = root(sym(x));
    const auto w = sandwich(inverse(h), root(sandwich(h, sym(y))));
    return pt(square(w));
  }
  bool in_domain(const Vec &x) const { return x[0] > 0.0 && x[0] * x[2] - x[1] * x[1] > 0.0; }
  Box box() const { return {{0.5, -0.4, 0.5}, {2.0, 0.4, 2.0}}; }
};

} // namespace

std::vector<std::string> builtin_names() {
  return {"additive", "affine", "parabolic", "commutative", "spd-bol"};
}

std::unique_ptr<SmoothLoop> additive_loop(std::size_t dim) {
  if (dim == 0)
    throw StructuralError("additive loop needs a positive dimension");
  return std::make_unique<Adapter<Additive>>(Additive{dim});
}

std::unique_ptr<SmoothLoop> builtin_loop(std::string_view name) {
  if (name == "additive")
    return additive_loop(2);
  if (name == "affine")
    return std::make_unique<Adapter<Affine>>(Affine{});
  if (name == "parabolic")
    return std::make_unique<Adapter<Parabolic>>(Parabolic{});
  if (name == "commutative")
    return std::make_unique<Adapter<Commutative>>(Commutative{});
  if (name == "spd-bol")
    return std::make_unique<Adapter<SpdBol>>(SpdBol{});
  std::string known;
  for (const auto &n : builtin_names())
    known += (known.empty() ? "" : ", ") + n;
  throw StructuralError("unknown smooth loop '" + std::string(name) + "' (known: " + known + ")");
}

} // namespace loopkit::smooth
