#include "jung/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace jung {

int CPoly::degree() const {
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (c[k] != Complex(0)) return k;
  return -1;
}

Complex CPoly::operator()(Complex z) const {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Real CPoly::abs_eval(Real r) const {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

CPoly CPoly::derivative() const {
  if (c.size() <= 1) return {};
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<Real>(k);
  return CPoly(std::move(d));
}

CPoly CPoly::trimmed() const {
  CPoly r = *this;
  r.c.resize(static_cast<std::size_t>(degree() + 1));
  return r;
}

CPoly CPoly::taylor_shift(Complex z) const {
  std::vector<Complex> b = trimmed().c;
  int d = static_cast<int>(b.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int k = d - 1; k >= i; --k) b[k] += z * b[k + 1];
  return CPoly(std::move(b));
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  std::vector<Complex> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
  for (std::size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
  return CPoly(std::move(r));
}

CPoly operator-(const CPoly& a, const CPoly& b) { return a + Complex(-1) * b; }

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  std::vector<Complex> r(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return CPoly(std::move(r));
}

CPoly operator*(Complex s, const CPoly& a) {
  CPoly r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

std::string complex_str(Complex z) {
  char buf[96];
  auto fmt = [&](Real v) {
    std::snprintf(buf, sizeof buf, "%.15g", static_cast<double>(v));
    return std::string(buf);
  };
  Real scale = std::max<Real>(std::abs(z), 1e-300);
  bool has_re = std::abs(z.real()) > 1e-14 * scale;
  bool has_im = std::abs(z.imag()) > 1e-14 * scale;
  if (!has_im) return fmt(has_re ? z.real() : 0);
  std::string im = z.imag() == 1 ? "i" : z.imag() == -1 ? "-i" : fmt(z.imag()) + "*i";
  if (!has_re) return im;
  return "(" + fmt(z.real()) + (z.imag() < 0 ? "" : "+") + im + ")";
}

std::string CPoly::str(const std::string& var) const {
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (c[k] == Complex(0)) continue;
    if (!s.empty()) s += " + ";
    if (k == 0 || c[k] != Complex(1)) s += complex_str(c[k]) + (k >= 1 ? "*" : "");
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::vector<Complex> aberth_roots(const CPoly& p, const RootOptions& opt) {
  CPoly q = p.trimmed();
  int d = q.degree();
  if (d < 0) throw RootFindingError("roots of the zero polynomial", p);
  std::vector<Complex> roots;
  // Exact zero roots first.
  std::size_t lead_zero = 0;
  while (lead_zero < q.c.size() && q.c[lead_zero] == Complex(0)) ++lead_zero;
  roots.assign(lead_zero, Complex(0));
  q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(lead_zero));
  d = q.degree();
  if (d == 0) return roots;

  Complex lc = q.c[d];
  for (auto& v : q.c) v /= lc;
  if (d == 1) {
    roots.push_back(-q.c[0]);
    return roots;
  }
  CPoly dq = q.derivative();

  Real radius = 0;
  for (int k = 0; k < d; ++k)
    radius = std::max(radius, std::pow(std::abs(q.c[k]), Real(1) / static_cast<Real>(d - k)));
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k) {
    Real ang = 2 * std::numbers::pi_v<Real> * k / d + Real(0.4);
    z[k] = std::polar(radius, ang);
  }
  std::vector<bool> done(d, false);
  int iter = 0;
  for (; iter < opt.max_iter; ++iter) {
    bool all = true;
    for (int k = 0; k < d; ++k) {
      if (done[k]) continue;
      Complex pv = q(z[k]);
      Real scale = q.abs_eval(std::abs(z[k]));
      if (std::abs(pv) <= opt.root_tol * scale) {
        done[k] = true;
        continue;
      }
      all = false;
      Complex dv = dq(z[k]);
      Complex sum = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) sum += Real(1) / (z[k] - z[j]);
      Complex ratio = dv == Complex(0) ? Complex(1e-8 * (1 + radius)) : pv / dv;
      Complex w = ratio / (Real(1) - ratio * sum);
      z[k] -= w;
      if (std::abs(w) <= 4 * std::numeric_limits<Real>::epsilon() * std::abs(z[k])) done[k] = true;
    }
    if (all) break;
  }
  if (iter == opt.max_iter) {
    for (int k = 0; k < d; ++k) {
      Real scale = q.abs_eval(std::abs(z[k]));
      // Accept limit-precision iterates of multiple roots.
      if (std::abs(q(z[k])) > std::sqrt(opt.root_tol) * scale)
        throw RootFindingError("root refinement did not converge in " + std::to_string(opt.max_iter) +
                                   " iterations for " + p.str(),
                               p);
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

Real multiplicity_defect(const CPoly& p, Complex z, unsigned r, Real rho) {
  CPoly b = p.taylor_shift(z);
  Real top = 0, low = 0, pw = 1;
  for (std::size_t k = 0; k < b.c.size(); ++k) {
    Real v = std::abs(b.c[k]) * pw;
    top = std::max(top, v);
    if (k < r) low = std::max(low, v);
    pw *= rho;
  }
  return top == 0 ? 0 : low / top;
}

namespace {

CPoly nth_derivative(const CPoly& p, unsigned n) {
  CPoly d = p;
  for (unsigned i = 0; i < n; ++i) d = d.derivative();
  return d;
}

Complex polish(const CPoly& p, Complex z, unsigned mult) {
  CPoly f = nth_derivative(p, mult - 1);
  CPoly df = f.derivative();
  for (int it = 0; it < 8; ++it) {
    Complex fv = f(z), dv = df(z);
    if (dv == Complex(0)) break;
    Complex step = fv / dv;
    Complex next = z - step;
    if (std::abs(f(next)) >= std::abs(fv)) break;
    z = next;
    if (std::abs(step) <= 4 * std::numeric_limits<Real>::epsilon() * std::abs(z)) break;
  }
  return z;
}

std::vector<std::vector<std::size_t>> link_clusters(const std::vector<Complex>& z, Real threshold) {
  std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= threshold) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return groups;
}

}  // namespace

std::vector<RootCluster> root_clusters(const CPoly& p, const RootOptions& opt) {
  CPoly q = p.trimmed();
  int d = q.degree();
  if (d <= 0) return {};
  std::vector<RootCluster> out;
  std::size_t zeros = 0;
  while (q.c[zeros] == Complex(0)) ++zeros;
  if (zeros > 0) {
    out.push_back({Complex(0), static_cast<unsigned>(zeros)});
    q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(zeros));
    d = q.degree();
    if (d == 0) return out;
  }

  // A single root of full multiplicity sits at the (exact) centroid.
  Complex centroid = -q.c[d - 1] / (static_cast<Real>(d) * q.c[d]);
  Real rho = std::max<Real>(std::abs(centroid), std::numeric_limits<Real>::min());
  if (d > 1 && multiplicity_defect(q, centroid, static_cast<unsigned>(d), rho) <= opt.cluster_tol) {
    out.push_back({polish(q, centroid, static_cast<unsigned>(d)), static_cast<unsigned>(d)});
    return out;
  }

  std::vector<Complex> z = aberth_roots(q, opt);
  Real radius = 0;
  for (auto v : z) radius = std::max(radius, std::abs(v));
  radius = std::max(radius, std::numeric_limits<Real>::min());

  for (Real rel : {Real(0.2), Real(0.05), Real(0.01), Real(1e-3), Real(1e-4), Real(1e-6), Real(0)}) {
    auto groups = link_clusters(z, rel * radius);
    std::vector<RootCluster> found;
    bool ok = true;
    for (const auto& g : groups) {
      Complex mean = 0;
      for (auto i : g) mean += z[i];
      mean /= static_cast<Real>(g.size());
      unsigned m = static_cast<unsigned>(g.size());
      Complex centre = polish(q, mean, m);
      if (rel > 0 && multiplicity_defect(q, centre, m, radius) > opt.cluster_tol) {
        ok = false;
        break;
      }
      found.push_back({centre, m});
    }
    if (ok) {
      out.insert(out.end(), found.begin(), found.end());
      return out;
    }
  }
  return out;  // unreachable: the rel == 0 pass always succeeds
}

}  // namespace jung
