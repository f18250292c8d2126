#include "detset/triangular.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "detset/detgen.hpp"
#include "detset/errors.hpp"
#include "detset/families.hpp"
#include "detset/structure.hpp"

namespace detset {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InvalidArgument(std::to_string(a) + " is not invertible mod " + std::to_string(p));
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

MatrixFp::MatrixFp(std::size_t n, std::uint32_t p) : n_(n), p_(p), a_(n * n, 0) {}

MatrixFp MatrixFp::identity(std::size_t n, std::uint32_t p) { return scalar(n, p, 1); }

MatrixFp MatrixFp::scalar(std::size_t n, std::uint32_t p, std::uint32_t c) {
  MatrixFp m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

MatrixFp MatrixFp::diagonal(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  MatrixFp m(d.size(), p);
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

MatrixFp MatrixFp::antidiagonal(std::size_t n, std::uint32_t p) {
  MatrixFp m(n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1 - i, 1);
  return m;
}

MatrixFp MatrixFp::unit(std::size_t n, std::uint32_t p, std::size_t i, std::size_t j) {
  MatrixFp m(n, p);
  m.set(i, j, 1);
  return m;
}

MatrixFp MatrixFp::operator+(const MatrixFp& o) const {
  MatrixFp r(n_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] + o.a_[k]) % p_;
  return r;
}

MatrixFp MatrixFp::operator-(const MatrixFp& o) const {
  MatrixFp r(n_, p_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = (a_[k] + p_ - o.a_[k]) % p_;
  return r;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
  MatrixFp r(n_, p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n_; ++k) s += std::uint64_t{a_[i * n_ + k]} * o.a_[k * n_ + j];
      r.a_[i * n_ + j] = static_cast<std::uint32_t>(s % p_);
    }
  return r;
}

std::uint32_t MatrixFp::det() const {
  std::vector<std::uint32_t> m = a_;
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[c * n_ + j], m[piv * n_ + j]);
      d = (p_ - d) % p_;
    }
    d = d * m[c * n_ + c] % p_;
    const std::uint64_t inv = inv_mod(m[c * n_ + c], p_);
    for (std::size_t r = c + 1; r < n_; ++r) {
      const std::uint64_t f = m[r * n_ + c] * inv % p_;
      for (std::size_t j = c; j < n_; ++j)
        m[r * n_ + j] = static_cast<std::uint32_t>((m[r * n_ + j] + (p_ - f) * m[c * n_ + j]) % p_);
    }
  }
  return static_cast<std::uint32_t>(d);
}

MatrixFp MatrixFp::inverse() const {
  std::vector<std::uint32_t> m = a_;
  MatrixFp inv = identity(n_, p_);
  auto& r = inv.a_;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) throw InvalidArgument("matrix is singular mod " + std::to_string(p_));
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(m[c * n_ + j], m[piv * n_ + j]);
      std::swap(r[c * n_ + j], r[piv * n_ + j]);
    }
    const std::uint64_t s = inv_mod(m[c * n_ + c], p_);
    for (std::size_t j = 0; j < n_; ++j) {
      m[c * n_ + j] = static_cast<std::uint32_t>(m[c * n_ + j] * s % p_);
      r[c * n_ + j] = static_cast<std::uint32_t>(r[c * n_ + j] * s % p_);
    }
    for (std::size_t row = 0; row < n_; ++row) {
      if (row == c || m[row * n_ + c] == 0) continue;
      const std::uint64_t f = p_ - m[row * n_ + c];
      for (std::size_t j = 0; j < n_; ++j) {
        m[row * n_ + j] = static_cast<std::uint32_t>((m[row * n_ + j] + f * m[c * n_ + j]) % p_);
        r[row * n_ + j] = static_cast<std::uint32_t>((r[row * n_ + j] + f * r[c * n_ + j]) % p_);
      }
    }
  }
  return inv;
}

MatrixFp MatrixFp::transpose() const {
  MatrixFp t(n_, p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.a_[j * n_ + i] = a_[i * n_ + j];
  return t;
}

MatrixFp MatrixFp::reversed() const {
  MatrixFp t(n_, p_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.a_[(n_ - 1 - i) * n_ + (n_ - 1 - j)] = a_[i * n_ + j];
  return t;
}

bool MatrixFp::is_upper_triangular() const {
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a_[i * n_ + j] != 0) return false;
  return true;
}

bool MatrixFp::is_scalar() const { return *this == scalar(n_, p_, a_[0]); }

std::vector<std::uint32_t> MatrixFp::diagonal_entries() const {
  std::vector<std::uint32_t> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = a_[i * n_ + i];
  return d;
}

std::uint64_t MatrixFp::upper_code() const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) code = code * p_ + a_[i * n_ + j];
  return code;
}

std::string MatrixFp::label() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ',';
      s += std::to_string(a_[i * n_ + j]);
    }
  }
  return s;
}

std::uint64_t TriangularSpec::order() const {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n - (det_one ? 1 : 0); ++i) out *= p - 1;
  for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) out *= p;
  return out;
}

std::string TriangularSpec::descriptor() const {
  return std::string(det_one ? "ST(" : "T(") + std::to_string(n) + "," + std::to_string(p) + ")";
}

std::optional<Element> TriangularGroup::find(const MatrixFp& m) const {
  if (!m.is_upper_triangular()) return std::nullopt;
  auto it = index.find(m.upper_code());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_spec(const TriangularSpec& spec) {
  if (spec.n < 2) throw InvalidArgument(spec.descriptor() + " needs n >= 2");
  if (!is_prime(spec.p)) throw InvalidArgument(spec.descriptor() + " needs p prime");
}

}  // namespace

std::vector<MatrixFp> upper_triangular_matrices(const TriangularSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.n;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);

  // Odometer over slot values, last slot fastest, which is increasing upper_code.
  std::vector<MatrixFp> out;
  std::vector<std::uint32_t> digit(slots.size(), 0);
  MatrixFp m(n, spec.p);
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s].first == slots[s].second) digit[s] = 1;  // diagonal starts at 1
  auto lowest = [&](std::size_t s) { return slots[s].first == slots[s].second ? 1u : 0u; };
  while (true) {
    std::uint64_t d = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      m.set(slots[s].first, slots[s].second, digit[s]);
      if (slots[s].first == slots[s].second) d = d * digit[s] % spec.p;
    }
    if (!spec.det_one || d == 1) out.push_back(m);
    std::size_t s = slots.size();
    while (s > 0 && ++digit[s - 1] == spec.p) {
      digit[s - 1] = lowest(s - 1);
      --s;
    }
    if (s == 0) break;
  }
  return out;
}

TriangularGroup st_group(const TriangularSpec& spec, const Caps& caps) {
  check_spec(spec);
  if (spec.order() > caps.max_order)
    throw CapExceeded(spec.descriptor() + " has order " + std::to_string(spec.order()) +
                      " above cap " + std::to_string(caps.max_order));
  TriangularGroup tg;
  tg.spec = spec;
  const MatrixFp id = MatrixFp::identity(spec.n, spec.p);
  tg.matrices.push_back(id);
  for (auto& m : upper_triangular_matrices(spec))
    if (!(m == id)) tg.matrices.push_back(std::move(m));
  for (std::size_t i = 0; i < tg.matrices.size(); ++i)
    tg.index.emplace(tg.matrices[i].upper_code(), static_cast<Element>(i));

  tg.group = share(tabulate(
      tg.matrices.size(),
      [&](std::size_t i, std::size_t j) {
        return tg.index.at((tg.matrices[i] * tg.matrices[j]).upper_code());
      },
      [&](std::size_t i) { return tg.matrices[i].label(); }, spec.descriptor(), caps.assoc_check));
  tg.generators = greedy_generators(*tg.group);
  return tg;
}

BCPair theorem_BC(std::uint32_t p) {
  if (p < 5 || !is_prime(p)) throw InvalidArgument("the B, C construction needs a prime p >= 5");
  const std::size_t n = p - 2;
  std::vector<std::uint32_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint32_t>(i + 1);
  MatrixFp c = MatrixFp::identity(n, p);
  for (std::size_t i = 0; i + 1 < n; ++i) c.set(i, i + 1, 1);
  return {MatrixFp::diagonal(d, p), c};
}

std::size_t upper_triangular_centralizer_dim(const std::vector<MatrixFp>& with) {
  if (with.empty()) throw InvalidArgument("centralizer of an empty set");
  const std::size_t n = with.front().n();
  const std::uint32_t p = with.front().p();
  // Unknown k stands for Q(i, j), i <= j.
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) vars.emplace_back(i, j);
  const std::size_t nv = vars.size();

  // (QM - MQ)(r, c) = sum_k Q(r,k) M(k,c) - M(r,k) Q(k,c)
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& m : with)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::uint32_t> eq(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) {
          const auto [i, j] = vars[v];
          std::uint64_t coef = 0;
          if (i == r) coef += m(j, c);
          if (j == c) coef += p - m(r, i);
          eq[v] = static_cast<std::uint32_t>(coef % p);
        }
        rows.push_back(std::move(eq));
      }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = inv_mod(rows[rank][col], p);
    for (auto& x : rows[rank]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t f = p - rows[r][col];
      for (std::size_t k = 0; k < nv; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + f * rows[rank][k]) % p);
    }
    ++rank;
  }
  return nv - rank;
}

std::size_t joint_centralizer_dim(std::uint32_t p) {
  const auto bc = theorem_BC(p);
  return upper_triangular_centralizer_dim({bc.b, bc.c});
}

std::uint32_t case_ii_corner(std::uint32_t p) {
  const auto bc = theorem_BC(p);
  return bc.b.inverse_transpose().reversed()(0, 0);
}

bool case_ii_excluded(std::uint32_t p) { return case_ii_corner(p) != 1; }

MatrixFp structural_image(const MatrixFp& q, StructuralCase c, const MatrixFp& a) {
  const MatrixFp inner = c == StructuralCase::conjugation ? a : a.inverse_transpose().reversed();
  return q * inner * q.inverse();
}

Automorphism structural_automorphism(const TriangularGroup& g, const MatrixFp& q, StructuralCase c) {
  if (!q.is_upper_triangular()) throw InvalidArgument("Q is not upper triangular");
  if (q.det() == 0) throw InvalidArgument("Q is singular");
  const MatrixFp qi = q.inverse();
  const FiniteGroup& grp = *g.group;
  Automorphism a;
  a.image.resize(grp.order());
  for (Element x = 0; x < grp.order(); ++x) {
    const MatrixFp& m = g.matrices[x];
    const MatrixFp inner = c == StructuralCase::conjugation ? m : m.inverse_transpose().reversed();
    const auto y = g.find(q * inner * qi);
    if (!y) throw Error("structural map leaves " + g.spec.descriptor());
    a.image[x] = *y;
  }
  std::vector<char> hit(grp.order(), 0);
  for (Element y : a.image) {
    if (hit[y]) throw Error("structural map is not injective");
    hit[y] = 1;
  }
  for (Element x = 0; x < grp.order(); ++x)
    for (Element s : g.generators)
      if (a.image[grp.mul(x, s)] != grp.mul(a.image[x], a.image[s]))
        throw Error("structural map is not multiplicative");
  return a;
}

std::size_t diag_quotient_gamma_bound(const TriangularSpec& spec) {
  if (!spec.det_one) throw InvalidArgument("the diagonal quotient bound is for determinant one");
  check_spec(spec);
  // (F_p^*)^(n-1) is a product of n-1 nontrivial cyclic groups of equal order.
  return spec.p >= 3 ? spec.n - 1 : 0;
}

GroupHom tau_homomorphism(const TriangularGroup& g, const Caps& caps) {
  const auto& spec = g.spec;
  const std::uint32_t p = spec.p;
  // Discrete logarithms to the smallest primitive root.
  std::vector<std::uint32_t> dlog(p, 0);
  for (std::uint32_t r = 1; r < p; ++r) {
    std::vector<char> seen(p, 0);
    std::uint64_t x = 1;
    std::uint32_t k = 0;
    for (; k < p - 1 && !seen[x]; ++k) {
      seen[x] = 1;
      dlog[x] = k;
      x = x * r % p;
    }
    if (k == p - 1 && x == 1) break;
  }
  std::vector<GroupPtr> factors(spec.n - 1, share(cyclic(p - 1, caps)));
  DirectProduct target(factors, caps);
  GroupHom tau{g.group, target.group(), std::vector<Element>(g.group->order())};
  std::vector<Element> parts(spec.n - 1);
  for (Element x = 0; x < tau.image.size(); ++x) {
    for (std::size_t i = 0; i + 1 < spec.n; ++i) parts[i] = dlog[g.matrices[x](i, i)];
    tau.image[x] = target.compose(parts);
  }
  return tau;
}

bool BCVerdict::holds() const {
  bool ok = det_b == 1 && det_c == 1 && c_order == p && nonabelian && centralizer_dim == 1 &&
            case_ii_excluded && alpha == 2 && gamma_lower_bound == p - 3;
  if (concrete) {
    const auto& c = *concrete;
    ok = ok && c.structural_verified == c.structural_maps &&
         c.distinct_conjugation_maps == c.expected_distinct && c.stabilizer_nontrivial == 0 &&
         c.tau_homomorphism && c.tau_surjective && c.kernel_is_unitriangular && c.quotient_matches &&
         c.quotient_gamma == gamma_lower_bound;
  }
  return ok;
}

BCVerdict verify_BC_determining(std::uint32_t p, bool concrete, const Caps& caps) {
  const auto bc = theorem_BC(p);
  BCVerdict v;
  v.p = p;
  v.n = p - 2;
  v.det_b = bc.b.det();
  v.det_c = bc.c.det();
  MatrixFp power = bc.c;
  const MatrixFp id = MatrixFp::identity(v.n, p);
  for (v.c_order = 1; !(power == id); ++v.c_order) power = power * bc.c;
  v.nonabelian = !(bc.b * bc.c == bc.c * bc.b);
  v.centralizer_dim = upper_triangular_centralizer_dim({bc.b, bc.c});
  v.case_ii_corner = case_ii_corner(p);
  v.case_ii_excluded = v.case_ii_corner != 1;
  const TriangularSpec spec{v.n, p, true};
  v.gamma_lower_bound = diag_quotient_gamma_bound(spec);
  if (v.nonabelian && v.centralizer_dim == 1 && v.case_ii_excluded) v.alpha = 2;
  if (!concrete) return v;

  ConcreteBCChecks c;
  const TriangularGroup g = st_group(spec, caps);
  c.order = g.group->order();
  const Element eb = *g.find(bc.b), ec = *g.find(bc.c);
  const auto qs = upper_triangular_matrices({v.n, p, false});
  c.expected_distinct = qs.size() / (p - 1);
  std::set<std::vector<Element>> conj_maps;
  for (const auto& q : qs)
    for (auto kind : {StructuralCase::conjugation, StructuralCase::inverse_transpose}) {
      ++c.structural_maps;
      Automorphism a;
      try {
        a = structural_automorphism(g, q, kind);
      } catch (const Error&) {
        continue;
      }
      ++c.structural_verified;
      if (a(eb) == eb && a(ec) == ec && !a.is_identity()) ++c.stabilizer_nontrivial;
      if (kind == StructuralCase::conjugation) conj_maps.insert(std::move(a.image));
    }
  c.distinct_conjugation_maps = conj_maps.size();

  const GroupHom tau = tau_homomorphism(g, caps);
  c.tau_homomorphism = tau.is_homomorphism();
  c.tau_surjective = tau.is_surjective();
  const ElementSubset kernel = tau.kernel();
  c.tau_kernel_size = kernel.size();
  std::vector<Element> unitri;
  for (Element x = 0; x < g.matrices.size(); ++x) {
    const auto d = g.matrices[x].diagonal_entries();
    if (std::all_of(d.begin(), d.end(), [](std::uint32_t e) { return e == 1; })) unitri.push_back(x);
  }
  c.kernel_is_unitriangular = kernel == ElementSubset(unitri);
  if (c.tau_homomorphism) {
    const Quotient q = quotient(g.group, kernel);
    c.quotient_matches = isomorphic(q.group, tau.codomain);
  }
  c.quotient_gamma = generating_number(tau.codomain, caps).gamma;
  v.concrete = c;
  return v;
}

}  // namespace detset
