// Synthetic suite of scalable unconstrained test problems.
//
// Most families are sums of terms that each touch at most four variables;
// those derive from TermSumProblem and only provide per-term local value,
// gradient and Hessian. The trigonometric and random SPD quadratic families
// couple all variables and are written directly.

#include "lsarc/problem.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace lsarc {
namespace {

constexpr int kMaxLocal = 4;

struct LocalTerm {
  std::array<int, kMaxLocal> idx{};
  int size = 0;
};

// Local derivative buffers: gradient g[a], Hessian H[a][b].
struct LocalDerivs {
  std::array<double, kMaxLocal> g{};
  std::array<std::array<double, kMaxLocal>, kMaxLocal> H{};
};

class TermSumProblem : public Problem {
public:
  TermSumProblem(std::string name, int n, Vector x0, std::optional<double> f_low)
      : name_(std::move(name)), n_(n), x0_(std::move(x0)), f_low_(f_low) {}

  std::string name() const override { return name_; }
  int dim() const override { return n_; }
  Vector start_point() const override { return x0_; }
  std::optional<double> f_low() const override { return f_low_; }

  double value(const Vector& x) const override {
    double f = 0.0;
    for (int t = 0; t < num_terms(); ++t) {
      const LocalTerm lt = term_indices(t);
      f += term(t, gather(lt, x), nullptr);
    }
    return f;
  }

  Vector gradient(const Vector& x) const override {
    Vector g = Vector::Zero(n_);
    LocalDerivs d;
    for (int t = 0; t < num_terms(); ++t) {
      const LocalTerm lt = term_indices(t);
      d = LocalDerivs{};
      term(t, gather(lt, x), &d);
      for (int a = 0; a < lt.size; ++a) g[lt.idx[a]] += d.g[a];
    }
    return g;
  }

  Vector hessian_vec(const Vector& x, const Vector& v) const override {
    Vector hv = Vector::Zero(n_);
    LocalDerivs d;
    for (int t = 0; t < num_terms(); ++t) {
      const LocalTerm lt = term_indices(t);
      d = LocalDerivs{};
      term(t, gather(lt, x), &d);
      for (int a = 0; a < lt.size; ++a) {
        double acc = 0.0;
        for (int b = 0; b < lt.size; ++b) acc += d.H[a][b] * v[lt.idx[b]];
        hv[lt.idx[a]] += acc;
      }
    }
    return hv;
  }

protected:
  virtual int num_terms() const = 0;
  virtual LocalTerm term_indices(int t) const = 0;
  // Returns the term value; fills local gradient and Hessian when d != nullptr.
  virtual double term(int t, const std::array<double, kMaxLocal>& xl, LocalDerivs* d) const = 0;

private:
  static std::array<double, kMaxLocal> gather(const LocalTerm& lt, const Vector& x) {
    std::array<double, kMaxLocal> xl{};
    for (int a = 0; a < lt.size; ++a) xl[a] = x[lt.idx[a]];
    return xl;
  }

  std::string name_;
  int n_;
  Vector x0_;
  std::optional<double> f_low_;
};

LocalTerm indices(std::initializer_list<int> ids) {
  LocalTerm lt;
  for (int i : ids) lt.idx[lt.size++] = i;
  return lt;
}

// w * t^2 for a scalar t with local gradient dt and Hessian d2t.
template <int K>
double weighted_square(double w, double t, const std::array<double, K>& dt,
                       const std::array<std::array<double, K>, K>& d2t, LocalDerivs* d) {
  if (d) {
    for (int a = 0; a < K; ++a) {
      d->g[a] += 2.0 * w * t * dt[a];
      for (int b = 0; b < K; ++b) d->H[a][b] += 2.0 * w * (dt[a] * dt[b] + t * d2t[a][b]);
    }
  }
  return w * t * t;
}

Vector tiled(int n, std::initializer_list<double> pattern) {
  Vector x(n);
  const std::vector<double> p(pattern);
  for (int i = 0; i < n; ++i) x[i] = p[static_cast<std::size_t>(i) % p.size()];
  return x;
}

// ---------------------------------------------------------------------------

class Saddle2d final : public TermSumProblem {
public:
  Saddle2d() : TermSumProblem("saddle2d", 2, tiled(2, {1.0, 1.0}), std::nullopt) {}

protected:
  int num_terms() const override { return 1; }
  LocalTerm term_indices(int) const override { return indices({0, 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    if (d) {
      d->g[0] = 2.0 * x[0];
      d->g[1] = -2.0 * x[1];
      d->H[0][0] = 2.0;
      d->H[1][1] = -2.0;
    }
    return x[0] * x[0] - x[1] * x[1];
  }
};

double rosen_pair(double a, double b, LocalDerivs* d) {
  const double t = b - a * a;
  if (d) {
    d->g[0] += -400.0 * a * t - 2.0 * (1.0 - a);
    d->g[1] += 200.0 * t;
    d->H[0][0] += 1200.0 * a * a - 400.0 * b + 2.0;
    d->H[0][1] += -400.0 * a;
    d->H[1][0] += -400.0 * a;
    d->H[1][1] += 200.0;
  }
  return 100.0 * t * t + (1.0 - a) * (1.0 - a);
}

class ExtendedRosenbrock final : public TermSumProblem {
public:
  explicit ExtendedRosenbrock(int n)
      : TermSumProblem("rosenbrock", n, tiled(n, {-1.2, 1.0}), 0.0) {}

protected:
  int num_terms() const override { return dim() / 2; }
  LocalTerm term_indices(int t) const override { return indices({2 * t, 2 * t + 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    return rosen_pair(x[0], x[1], d);
  }
};

class ChainedRosenbrock final : public TermSumProblem {
public:
  explicit ChainedRosenbrock(int n)
      : TermSumProblem("chained_rosenbrock", n, tiled(n, {-1.2, 1.0}), 0.0) {}

protected:
  int num_terms() const override { return dim() - 1; }
  LocalTerm term_indices(int t) const override { return indices({t, t + 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    return rosen_pair(x[0], x[1], d);
  }
};

class PowellSingular final : public TermSumProblem {
public:
  explicit PowellSingular(int n)
      : TermSumProblem("powell_singular", n, tiled(n, {3.0, -1.0, 0.0, 1.0}), 0.0) {}

protected:
  int num_terms() const override { return dim() / 4; }
  LocalTerm term_indices(int t) const override {
    return indices({4 * t, 4 * t + 1, 4 * t + 2, 4 * t + 3});
  }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double t1 = x[0] + 10.0 * x[1];
    const double t2 = x[2] - x[3];
    const double t3 = x[1] - 2.0 * x[2];
    const double t4 = x[0] - x[3];
    if (d) {
      d->g[0] = 2.0 * t1 + 40.0 * t4 * t4 * t4;
      d->g[1] = 20.0 * t1 + 4.0 * t3 * t3 * t3;
      d->g[2] = 10.0 * t2 - 8.0 * t3 * t3 * t3;
      d->g[3] = -10.0 * t2 - 40.0 * t4 * t4 * t4;
      // Each piece is w * u u^T on a linear form u.
      auto rank1 = [&](double w, std::array<double, 4> u) {
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) d->H[a][b] += w * u[a] * u[b];
      };
      rank1(2.0, {1.0, 10.0, 0.0, 0.0});
      rank1(10.0, {0.0, 0.0, 1.0, -1.0});
      rank1(12.0 * t3 * t3, {0.0, 1.0, -2.0, 0.0});
      rank1(120.0 * t4 * t4, {1.0, 0.0, 0.0, -1.0});
    }
    return t1 * t1 + 5.0 * t2 * t2 + t3 * t3 * t3 * t3 + 10.0 * t4 * t4 * t4 * t4;
  }
};

class ExtendedWood final : public TermSumProblem {
public:
  explicit ExtendedWood(int n)
      : TermSumProblem("wood", n, tiled(n, {-3.0, -1.0, -3.0, -1.0}), 0.0) {}

protected:
  int num_terms() const override { return dim() / 4; }
  LocalTerm term_indices(int t) const override {
    return indices({4 * t, 4 * t + 1, 4 * t + 2, 4 * t + 3});
  }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double a = x[0], b = x[1], c = x[2], e = x[3];
    const double u = b - a * a;
    const double w = e - c * c;
    if (d) {
      d->g[0] = -400.0 * a * u - 2.0 * (1.0 - a);
      d->g[1] = 200.0 * u + 20.2 * (b - 1.0) + 19.8 * (e - 1.0);
      d->g[2] = -360.0 * c * w - 2.0 * (1.0 - c);
      d->g[3] = 180.0 * w + 20.2 * (e - 1.0) + 19.8 * (b - 1.0);
      d->H[0][0] = 1200.0 * a * a - 400.0 * b + 2.0;
      d->H[0][1] = d->H[1][0] = -400.0 * a;
      d->H[1][1] = 220.2;
      d->H[1][3] = d->H[3][1] = 19.8;
      d->H[2][2] = 1080.0 * c * c - 360.0 * e + 2.0;
      d->H[2][3] = d->H[3][2] = -360.0 * c;
      d->H[3][3] = 200.2;
    }
    return 100.0 * u * u + (1.0 - a) * (1.0 - a) + 90.0 * w * w + (1.0 - c) * (1.0 - c) +
           10.1 * ((b - 1.0) * (b - 1.0) + (e - 1.0) * (e - 1.0)) + 19.8 * (b - 1.0) * (e - 1.0);
  }
};

class BroydenTridiagonal final : public TermSumProblem {
public:
  explicit BroydenTridiagonal(int n)
      : TermSumProblem("broyden_tridiag", n, Vector::Constant(n, -1.0), 0.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override {
    // Local layout is always (x_{i-1}, x_i, x_{i+1}); missing neighbours are
    // dropped at the ends.
    if (i == 0) return indices({0, 1});
    if (i == dim() - 1) return indices({i - 1, i});
    return indices({i - 1, i, i + 1});
  }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const bool has_left = i > 0;
    const bool has_right = i < dim() - 1;
    const int c = has_left ? 1 : 0;
    const double xl = has_left ? x[0] : 0.0;
    const double xc = x[c];
    const double xr = has_right ? x[c + 1] : 0.0;
    const double r = (3.0 - 2.0 * xc) * xc - xl - 2.0 * xr + 1.0;
    std::array<double, 3> dr{};
    std::array<std::array<double, 3>, 3> d2r{};
    int k = 0;
    if (has_left) dr[k++] = -1.0;
    dr[k] = 3.0 - 4.0 * xc;
    d2r[k][k] = -4.0;
    ++k;
    if (has_right) dr[k++] = -2.0;
    return weighted_square<3>(1.0, r, dr, d2r, d);
  }
};

class DixonPrice final : public TermSumProblem {
public:
  explicit DixonPrice(int n) : TermSumProblem("dixon_price", n, Vector::Ones(n), 0.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override {
    return i == 0 ? indices({0}) : indices({i - 1, i});
  }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    if (i == 0) return weighted_square<1>(1.0, x[0] - 1.0, {1.0}, {{{0.0}}}, d);
    const double t = 2.0 * x[1] * x[1] - x[0];
    return weighted_square<2>(i + 1.0, t, {-1.0, 4.0 * x[1]}, {{{0.0, 0.0}, {0.0, 4.0}}}, d);
  }
};

// (a^2 + b^2)^2 - 4a + 3, shared by engval1 and arwhead.
double quartic_pair(double a, double b, LocalDerivs* d) {
  const double u = a * a + b * b;
  if (d) {
    d->g[0] = 4.0 * u * a - 4.0;
    d->g[1] = 4.0 * u * b;
    d->H[0][0] = 8.0 * a * a + 4.0 * u;
    d->H[0][1] = d->H[1][0] = 8.0 * a * b;
    d->H[1][1] = 8.0 * b * b + 4.0 * u;
  }
  return u * u - 4.0 * a + 3.0;
}

class Engval1 final : public TermSumProblem {
public:
  explicit Engval1(int n) : TermSumProblem("engval1", n, Vector::Constant(n, 2.0), 0.0) {}

protected:
  int num_terms() const override { return dim() - 1; }
  LocalTerm term_indices(int i) const override { return indices({i, i + 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    return quartic_pair(x[0], x[1], d);
  }
};

class Arwhead final : public TermSumProblem {
public:
  explicit Arwhead(int n) : TermSumProblem("arwhead", n, Vector::Ones(n), 0.0) {}

protected:
  int num_terms() const override { return dim() - 1; }
  LocalTerm term_indices(int i) const override { return indices({i, dim() - 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    return quartic_pair(x[0], x[1], d);
  }
};

class Fletchcr final : public TermSumProblem {
public:
  explicit Fletchcr(int n) : TermSumProblem("fletchcr", n, Vector::Zero(n), 0.0) {}

protected:
  int num_terms() const override { return dim() - 1; }
  LocalTerm term_indices(int i) const override { return indices({i, i + 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double t = x[1] - x[0] + 1.0 - x[0] * x[0];
    return weighted_square<2>(100.0, t, {-1.0 - 2.0 * x[0], 1.0}, {{{-2.0, 0.0}, {0.0, 0.0}}}, d);
  }
};

class Cosine final : public TermSumProblem {
public:
  explicit Cosine(int n) : TermSumProblem("cosine", n, Vector::Ones(n), -(n - 1.0)) {}

protected:
  int num_terms() const override { return dim() - 1; }
  LocalTerm term_indices(int i) const override { return indices({i, i + 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double t = x[0] * x[0] - 0.5 * x[1];
    const double c = std::cos(t), s = std::sin(t);
    if (d) {
      const double dt[2] = {2.0 * x[0], -0.5};
      for (int a = 0; a < 2; ++a) {
        d->g[a] = -s * dt[a];
        for (int b = 0; b < 2; ++b) d->H[a][b] = -c * dt[a] * dt[b];
      }
      d->H[0][0] += -s * 2.0;
    }
    return c;
  }
};

class Raydan1 final : public TermSumProblem {
public:
  explicit Raydan1(int n)
      : TermSumProblem("raydan1", n, Vector::Ones(n), (n * (n + 1.0)) / 20.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override { return indices({i}); }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double c = (i + 1.0) / 10.0;
    const double ex = std::exp(x[0]);
    if (d) {
      d->g[0] = c * (ex - 1.0);
      d->H[0][0] = c * ex;
    }
    return c * (ex - x[0]);
  }
};

class ExtendedBeale final : public TermSumProblem {
public:
  explicit ExtendedBeale(int n) : TermSumProblem("beale", n, Vector::Ones(n), 0.0) {}

protected:
  int num_terms() const override { return dim() / 2; }
  LocalTerm term_indices(int t) const override { return indices({2 * t, 2 * t + 1}); }
  double term(int, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    static constexpr double c[3] = {1.5, 2.25, 2.625};
    const double a = x[0], b = x[1];
    double f = 0.0;
    for (int j = 1; j <= 3; ++j) {
      const double bj = std::pow(b, j);
      const double t = c[j - 1] - a * (1.0 - bj);
      const double dab = j * std::pow(b, j - 1);
      const double dbb = j > 1 ? a * j * (j - 1) * std::pow(b, j - 2) : 0.0;
      f += weighted_square<2>(1.0, t, {-(1.0 - bj), a * dab}, {{{0.0, dab}, {dab, dbb}}}, d);
    }
    return f;
  }
};

class Liarwhd final : public TermSumProblem {
public:
  explicit Liarwhd(int n) : TermSumProblem("liarwhd", n, Vector::Constant(n, 4.0), 0.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override {
    return i == 0 ? indices({0}) : indices({0, i});
  }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    if (i == 0) {
      const double t = x[0] * x[0] - x[0];
      return weighted_square<1>(4.0, t, {2.0 * x[0] - 1.0}, {{{2.0}}}, d) +
             weighted_square<1>(1.0, x[0] - 1.0, {1.0}, {{{0.0}}}, d);
    }
    const double t = x[1] * x[1] - x[0];
    return weighted_square<2>(4.0, t, {-1.0, 2.0 * x[1]}, {{{0.0, 0.0}, {0.0, 2.0}}}, d) +
           weighted_square<2>(1.0, x[1] - 1.0, {0.0, 1.0}, {{{0.0, 0.0}, {0.0, 0.0}}}, d);
  }
};

class Nondia final : public TermSumProblem {
public:
  explicit Nondia(int n) : TermSumProblem("nondia", n, Vector::Constant(n, -1.0), 0.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override {
    return i <= 1 ? indices({0}) : indices({0, i - 1});
  }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    if (i == 0) return weighted_square<1>(1.0, x[0] - 1.0, {1.0}, {{{0.0}}}, d);
    if (i == 1) {
      const double t = x[0] - x[0] * x[0];
      return weighted_square<1>(100.0, t, {1.0 - 2.0 * x[0]}, {{{-2.0}}}, d);
    }
    const double t = x[0] - x[1] * x[1];
    return weighted_square<2>(100.0, t, {1.0, -2.0 * x[1]}, {{{0.0, 0.0}, {0.0, -2.0}}}, d);
  }
};

class Dqrtic final : public TermSumProblem {
public:
  explicit Dqrtic(int n) : TermSumProblem("dqrtic", n, Vector::Constant(n, 2.0), 0.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override { return indices({i}); }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double e = x[0] - (i + 1.0);
    if (d) {
      d->g[0] = 4.0 * e * e * e;
      d->H[0][0] = 12.0 * e * e;
    }
    return e * e * e * e;
  }
};

class Tridia final : public TermSumProblem {
public:
  explicit Tridia(int n) : TermSumProblem("tridia", n, Vector::Ones(n), 0.0) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override {
    return i == 0 ? indices({0}) : indices({i - 1, i});
  }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    if (i == 0) return weighted_square<1>(1.0, x[0] - 1.0, {1.0}, {{{0.0}}}, d);
    return weighted_square<2>(i + 1.0, 2.0 * x[1] - x[0], {-1.0, 2.0},
                              {{{0.0, 0.0}, {0.0, 0.0}}}, d);
  }
};

// 0.5 x^T A x - sum(x), A = tridiag(-1, 2 + 2(i+1)/n, -1).
class TridiagQuadratic final : public TermSumProblem {
public:
  explicit TridiagQuadratic(int n)
      : TermSumProblem("tridiag_quad", n, Vector::Zero(n), -0.25 * n * n) {}

protected:
  int num_terms() const override { return dim(); }
  LocalTerm term_indices(int i) const override {
    return i + 1 < dim() ? indices({i, i + 1}) : indices({i});
  }
  double term(int i, const std::array<double, kMaxLocal>& x, LocalDerivs* d) const override {
    const double diag = 2.0 + 2.0 * (i + 1.0) / dim();
    const bool coupled = i + 1 < dim();
    const double a = x[0];
    const double b = coupled ? x[1] : 0.0;
    if (d) {
      d->g[0] = diag * a - 1.0 - b;
      d->H[0][0] = diag;
      if (coupled) {
        d->g[1] = -a;
        d->H[0][1] = d->H[1][0] = -1.0;
      }
    }
    return 0.5 * diag * a * a - a - a * b;
  }
};

// ---------------------------------------------------------------------------

// Trigonometric function: r_i = n - sum_j cos x_j + i (1 - cos x_i) - sin x_i,
// f = sum_i r_i^2 (1-based i). Zero residual at the origin.
class Trigonometric final : public Problem {
public:
  explicit Trigonometric(int n) : n_(n) {}

  std::string name() const override { return "trig"; }
  int dim() const override { return n_; }
  Vector start_point() const override { return Vector::Constant(n_, 1.0 / n_); }
  std::optional<double> f_low() const override { return 0.0; }

  double value(const Vector& x) const override { return residuals(x).squaredNorm(); }

  Vector gradient(const Vector& x) const override {
    const Vector r = residuals(x);
    const Vector s = x.array().sin();
    return 2.0 * (s * r.sum() + jac_diag(x).cwiseProduct(r));
  }

  Vector hessian_vec(const Vector& x, const Vector& v) const override {
    const Vector r = residuals(x);
    const Vector s = x.array().sin();
    const Vector c = x.array().cos();
    const Vector dj = jac_diag(x);
    // J = 1 s^T + diag(dj)
    const Vector jv = Vector::Constant(n_, s.dot(v)) + dj.cwiseProduct(v);
    const Vector jtjv = s * jv.sum() + dj.cwiseProduct(jv);
    Vector curvature(n_);
    for (int i = 0; i < n_; ++i) {
      curvature[i] = r.sum() * c[i] + r[i] * ((i + 1.0) * c[i] + s[i]);
    }
    return 2.0 * (jtjv + curvature.cwiseProduct(v));
  }

private:
  Vector residuals(const Vector& x) const {
    const double csum = x.array().cos().sum();
    Vector r(n_);
    for (int i = 0; i < n_; ++i) {
      r[i] = n_ - csum + (i + 1.0) * (1.0 - std::cos(x[i])) - std::sin(x[i]);
    }
    return r;
  }

  Vector jac_diag(const Vector& x) const {
    Vector d(n_);
    for (int i = 0; i < n_; ++i) d[i] = (i + 1.0) * std::sin(x[i]) - std::cos(x[i]);
    return d;
  }

  int n_;
};

// 0.5 x^T A x - b^T x with A = Q diag(lambda) Q^T, lambda log-spaced in
// [1, 1e3] and Q a seeded random orthogonal matrix.
class RandomSpdQuadratic final : public Problem {
public:
  RandomSpdQuadratic(int n, std::uint64_t seed) : n_(n) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Matrix G(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) G(i, j) = normal(rng);
    const Matrix Q = Eigen::HouseholderQR<Matrix>(G).householderQ();
    Vector lambda(n);
    for (int i = 0; i < n; ++i) {
      lambda[i] = n == 1 ? 1.0 : std::pow(10.0, 3.0 * i / (n - 1.0));
    }
    A_ = Q * lambda.asDiagonal() * Q.transpose();
    A_ = 0.5 * (A_ + A_.transpose());
    b_.resize(n);
    x0_.resize(n);
    for (int i = 0; i < n; ++i) b_[i] = normal(rng);
    for (int i = 0; i < n; ++i) x0_[i] = normal(rng);
    const Vector xstar = A_.ldlt().solve(b_);
    f_star_ = -0.5 * b_.dot(xstar);
  }

  std::string name() const override { return "quad_spd"; }
  int dim() const override { return n_; }
  Vector start_point() const override { return x0_; }
  std::optional<double> f_low() const override { return f_star_; }

  double value(const Vector& x) const override { return 0.5 * x.dot(A_ * x) - b_.dot(x); }
  Vector gradient(const Vector& x) const override { return A_ * x - b_; }
  Vector hessian_vec(const Vector&, const Vector& v) const override { return A_ * v; }
  Matrix dense_hessian(const Vector&) const override { return A_; }

private:
  int n_;
  Matrix A_;
  Vector b_;
  Vector x0_;
  double f_star_ = 0.0;
};

// ---------------------------------------------------------------------------

struct Family {
  ProblemFamilyInfo info;
  int min_n;
  int multiple_of;
  std::function<ProblemPtr(int, std::uint64_t)> make;
};

template <class P>
std::function<ProblemPtr(int, std::uint64_t)> plain() {
  return [](int n, std::uint64_t) { return std::make_shared<const P>(n); };
}

const std::vector<Family>& families() {
  static const std::vector<Family> table = {
      {{"saddle2d", "x^2 - y^2 from (1,1); unbounded below", false}, 2, 1,
       [](int, std::uint64_t) { return std::make_shared<const Saddle2d>(); }},
      {{"rosenbrock", "extended Rosenbrock (independent pairs)", true}, 2, 2,
       plain<ExtendedRosenbrock>()},
      {{"chained_rosenbrock", "chained Rosenbrock", true}, 2, 1, plain<ChainedRosenbrock>()},
      {{"powell_singular", "extended Powell singular function", true}, 4, 4,
       plain<PowellSingular>()},
      {{"wood", "extended Wood function", true}, 4, 4, plain<ExtendedWood>()},
      {{"tridiag_quad", "tridiagonal SPD quadratic with varying diagonal", true}, 1, 1,
       plain<TridiagQuadratic>()},
      {{"quad_spd", "seeded random SPD quadratic, condition number 1e3", true}, 1, 1,
       [](int n, std::uint64_t seed) {
         return std::make_shared<const RandomSpdQuadratic>(n, seed);
       }},
      {{"trig", "trigonometric function (nonconvex)", true}, 1, 1, plain<Trigonometric>()},
      {{"broyden_tridiag", "Broyden tridiagonal least squares", true}, 2, 1,
       plain<BroydenTridiagonal>()},
      {{"dixon_price", "Dixon-Price function", true}, 2, 1, plain<DixonPrice>()},
      {{"engval1", "ENGVAL1 quartic chain", true}, 2, 1, plain<Engval1>()},
      {{"arwhead", "ARWHEAD arrow-head quartic", true}, 2, 1, plain<Arwhead>()},
      {{"fletchcr", "FLETCHCR chained quadratic residuals", true}, 2, 1, plain<Fletchcr>()},
      {{"cosine", "COSINE chain (nonconvex, bounded by -(n-1))", true}, 2, 1, plain<Cosine>()},
      {{"raydan1", "RAYDAN1 separable exponential", true}, 1, 1, plain<Raydan1>()},
      {{"beale", "extended Beale function", true}, 2, 2, plain<ExtendedBeale>()},
      {{"liarwhd", "LIARWHD", true}, 2, 1, plain<Liarwhd>()},
      {{"nondia", "NONDIA", true}, 2, 1, plain<Nondia>()},
      {{"dqrtic", "DQRTIC separable quartic (singular at the solution)", true}, 1, 1,
       plain<Dqrtic>()},
      {{"tridia", "TRIDIA tridiagonal quadratic", true}, 2, 1, plain<Tridia>()},
  };
  return table;
}

}  // namespace

const std::vector<ProblemFamilyInfo>& problem_families() {
  static const std::vector<ProblemFamilyInfo> infos = [] {
    std::vector<ProblemFamilyInfo> out;
    for (const auto& f : families()) out.push_back(f.info);
    return out;
  }();
  return infos;
}

ProblemPtr make_problem(const std::string& name, int n, std::uint64_t seed) {
  for (const auto& fam : families()) {
    if (fam.info.name != name) continue;
    const bool fixed_2d = name == "saddle2d";
    if ((fixed_2d && n != 2) || n < fam.min_n || n % fam.multiple_of != 0) {
      std::ostringstream os;
      os << "problem '" << name << "' does not accept n=" << n;
      if (fixed_2d) {
        os << " (fixed n=2)";
      } else {
        os << " (need n >= " << fam.min_n;
        if (fam.multiple_of > 1) os << ", multiple of " << fam.multiple_of;
        os << ")";
      }
      throw ConfigError(os.str());
    }
    return fam.make(n, seed);
  }
  throw ConfigError("unknown problem '" + name + "'");
}

}  // namespace lsarc
