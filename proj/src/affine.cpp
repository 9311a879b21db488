#include "cslab/affine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cslab/cycle_set.hpp"
#include "cslab/errors.hpp"

namespace cslab {

long AffineCycleSet::carrier_size() const {
  long n = 1;
  for (int i = 0; i < dim; ++i) n *= p;
  return n;
}

std::vector<int> AffineCycleSet::op(const std::vector<int>& x, const std::vector<int>& y) const {
  return vec_add(p, vec_add(p, phi.apply(x), psi.apply(y)), c);
}

int encode_point(long p, const std::vector<int>& v) {
  long idx = 0, mult = 1;
  for (int coord : v) {
    idx += coord * mult;
    mult *= p;
  }
  return static_cast<int>(idx);
}

std::vector<int> decode_point(long p, int dim, int index) {
  std::vector<int> v(static_cast<size_t>(dim));
  long rest = index;
  for (int i = 0; i < dim; ++i) {
    v[static_cast<size_t>(i)] = static_cast<int>(rest % p);
    rest /= p;
  }
  return v;
}

AffineCycleSet make_affine(long p, int dim, FpMatrix phi, FpMatrix psi, std::vector<int> c) {
  if (phi.p() != p || psi.p() != p || phi.rows() != dim || phi.cols() != dim ||
      psi.rows() != dim || psi.cols() != dim || static_cast<int>(c.size()) != dim)
    throw InvalidInput("BadParameter", "shape mismatch");
  if (!phi.try_inverse()) throw InvalidInput("Singular", "phi is not invertible");
  if (!psi.try_inverse()) throw InvalidInput("Singular", "psi is not invertible");
  if (!(phi * psi - psi * phi == phi * phi))
    throw InvalidInput("ConditionFails", "phi psi - psi phi != phi^2");
  for (auto& v : c) v = static_cast<int>(((v % p) + p) % p);
  return {p, dim, std::move(phi), std::move(psi), std::move(c)};
}

LeftQuasigroup as_table(const AffineCycleSet& a, long table_limit) {
  const long n = a.carrier_size();
  if (n > table_limit)
    throw LimitExceeded("SizeLimitExceeded",
                        "carrier " + std::to_string(n) + " exceeds the table limit");
  const int ni = static_cast<int>(n);
  // Precompute both linear images per point; each entry is then a vector add.
  std::vector<std::vector<int>> phix(static_cast<size_t>(ni)), psiy(static_cast<size_t>(ni));
  for (int v = 0; v < ni; ++v) {
    auto vec = decode_point(a.p, a.dim, v);
    phix[static_cast<size_t>(v)] = vec_add(a.p, a.phi.apply(vec), a.c);
    psiy[static_cast<size_t>(v)] = a.psi.apply(vec);
  }
  std::vector<std::vector<int>> table(static_cast<size_t>(ni), std::vector<int>(static_cast<size_t>(ni)));
  for (int x = 0; x < ni; ++x)
    for (int y = 0; y < ni; ++y)
      table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          encode_point(a.p, vec_add(a.p, phix[static_cast<size_t>(x)], psiy[static_cast<size_t>(y)]));
  return LeftQuasigroup(std::move(table));
}

FpMatrix delta_matrix(long p) {
  const int n = static_cast<int>(p);
  FpMatrix d(p, n, n);
  for (int i = 0; i + 1 < n; ++i) d.at(i, i + 1) = static_cast<int>((n - 1 - i) % p);
  return d;
}

FpMatrix a_mu(long p, long mu) {
  if (mu % p == 0) throw InvalidInput("BadParameter", "mu must be nonzero");
  const int n = static_cast<int>(p);
  FpMatrix m(p, n, n);
  m.at(0, n - 1) = static_cast<int>(((mu % p) + p) % p);
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  return m;
}

WeylPair weyl_matrices(long p, long lambda, long mu) {
  if (lambda % p == 0 || mu % p == 0)
    throw InvalidInput("BadParameter", "lambda and mu must be nonzero");
  WeylPair out{a_mu(p, mu), delta_matrix(p)};
  for (int i = 0; i < static_cast<int>(p); ++i)
    out.m_b.at(i, i) = static_cast<int>(((lambda % p) + p) % p);
  if (!(out.m_a * out.m_b - out.m_b * out.m_a == FpMatrix::identity(p, static_cast<int>(p))))
    throw Error("InternalError", "Weyl relation failed");
  return out;
}

FpMatrix mu_circulant(long p, long mu, const std::vector<int>& first_row) {
  const int n = static_cast<int>(first_row.size());
  FpMatrix m(p, n, n);
  long mr = ((mu % p) + p) % p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = ((first_row[static_cast<size_t>(((j - i) % n + n) % n)] % p) + p) % p;
      if (j > i) v = v * mr % p;
      m.at(i, j) = static_cast<int>(v);
    }
  return m;
}

bool is_in_centralizer_of_a_mu(const FpMatrix& m, long mu) {
  FpMatrix a = a_mu(m.p(), mu);
  return m * a == a * m;
}

namespace {

// Smallest subspace containing seed and stable under all mats; incremental
// row-echelon closure, canonicalized at the end.
std::vector<std::vector<int>> spin(long p, const std::vector<FpMatrix>& mats,
                                   const std::vector<int>& seed) {
  const int dim = static_cast<int>(seed.size());
  auto mod_inv = [p](long a) {
    long r = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivot_of(static_cast<size_t>(dim), -1);
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> queue;
  auto reduce_insert = [&](std::vector<int> v) {
    for (int c = 0; c < dim; ++c) {
      if (v[static_cast<size_t>(c)] % p == 0) continue;
      if (pivot_of[static_cast<size_t>(c)] >= 0) {
        const auto& r = rows[static_cast<size_t>(pivot_of[static_cast<size_t>(c)])];
        long f = v[static_cast<size_t>(c)];
        for (int j = c; j < dim; ++j)
          v[static_cast<size_t>(j)] = static_cast<int>(
              ((v[static_cast<size_t>(j)] - f * r[static_cast<size_t>(j)]) % p + p * p) % p);
      } else {
        long inv = mod_inv(v[static_cast<size_t>(c)]);
        for (int j = c; j < dim; ++j)
          v[static_cast<size_t>(j)] = static_cast<int>(v[static_cast<size_t>(j)] * inv % p);
        pivot_of[static_cast<size_t>(c)] = static_cast<int>(rows.size());
        rows.push_back(v);
        queue.push_back(std::move(v));
        return;
      }
    }
  };
  reduce_insert(seed);
  for (size_t head = 0; head < queue.size() && static_cast<int>(rows.size()) < dim; ++head) {
    std::vector<int> v = queue[head];
    for (const auto& m : mats) reduce_insert(m.apply(v));
  }
  if (static_cast<int>(rows.size()) == dim) {
    std::vector<std::vector<int>> full;
    for (int i = 0; i < dim; ++i) {
      std::vector<int> e(static_cast<size_t>(dim), 0);
      e[static_cast<size_t>(i)] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  return rref_basis(p, rows);
}

long projective_seed_count(long p, int dim) {
  long count = 0, power = 1;
  for (int i = 0; i < dim; ++i) {
    count += power;
    power *= p;
  }
  return count;  // (p^dim - 1)/(p - 1)
}

// Enumerate one representative per projective point: first nonzero coord = 1.
template <typename F>
void for_each_projective_seed(long p, int dim, F&& fn) {
  std::vector<int> v(static_cast<size_t>(dim), 0);
  for (int lead = dim - 1; lead >= 0; --lead) {
    std::fill(v.begin(), v.end(), 0);
    v[static_cast<size_t>(lead)] = 1;
    // vary coordinates below `lead` over all of F_p
    long combos = 1;
    for (int i = 0; i < lead; ++i) combos *= p;
    for (long t = 0; t < combos; ++t) {
      long rest = t;
      for (int i = 0; i < lead; ++i) {
        v[static_cast<size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      if (!fn(v)) return;
    }
  }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> invariant_subspaces(long p, int dim,
                                                               const std::vector<FpMatrix>& mats,
                                                               long seed_limit) {
  if (projective_seed_count(p, dim) > seed_limit)
    throw LimitExceeded("SizeLimitExceeded", "too many projective seeds");
  std::set<std::vector<std::vector<int>>> found;
  found.insert(std::vector<std::vector<int>>{});  // zero subspace
  for_each_projective_seed(p, dim, [&](const std::vector<int>& seed) {
    found.insert(spin(p, mats, seed));
    return true;
  });
  // Invariant subspaces are closed under sums, and every one is a sum of spins.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::vector<int>>> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        auto both = cur[i];
        both.insert(both.end(), cur[j].begin(), cur[j].end());
        if (found.insert(rref_basis(p, both)).second) grew = true;
      }
  }
  std::vector<std::vector<std::vector<int>>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_irreducible_pair(const FpMatrix& m1, const FpMatrix& m2, long seed_limit) {
  if (m1.p() != m2.p() || m1.rows() != m2.rows())
    throw InvalidInput("BadParameter", "matrix shape mismatch");
  const int dim = m1.rows();
  if (dim == 0) return false;
  if (projective_seed_count(m1.p(), dim) > seed_limit)
    throw LimitExceeded("SizeLimitExceeded", "too many projective seeds");
  std::vector<FpMatrix> mats{m1, m2};
  bool irreducible = true;
  for_each_projective_seed(m1.p(), dim, [&](const std::vector<int>& seed) {
    if (static_cast<int>(spin(m1.p(), mats, seed).size()) != dim) {
      irreducible = false;
      return false;
    }
    return true;
  });
  return irreducible;
}

namespace {

// Coset partition of the subspace spanned by `basis` (RREF) in (Z/p)^dim.
Partition coset_partition(long p, int dim, const std::vector<std::vector<int>>& basis) {
  long total = 1;
  for (int i = 0; i < dim; ++i) total *= p;
  const int n = static_cast<int>(total);
  std::vector<int> pivots;
  for (const auto& row : basis) {
    int j = 0;
    while (j < dim && row[static_cast<size_t>(j)] == 0) ++j;
    pivots.push_back(j);
  }
  std::vector<int> ids(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto vec = decode_point(p, dim, v);
    // Reduce modulo the subspace: clear pivot coordinates.
    for (size_t r = 0; r < basis.size(); ++r) {
      int coeff = vec[static_cast<size_t>(pivots[r])];
      if (!coeff) continue;
      for (int j = 0; j < dim; ++j)
        vec[static_cast<size_t>(j)] = static_cast<int>(
            ((vec[static_cast<size_t>(j)] - static_cast<long>(coeff) * basis[r][static_cast<size_t>(j)]) % p + p * p) % p);
    }
    ids[static_cast<size_t>(v)] = encode_point(p, vec);
  }
  return Partition(std::move(ids));
}

}  // namespace

std::vector<Partition> blocks_of(const AffineCycleSet& a) {
  auto subspaces = invariant_subspaces(a.p, a.dim, {a.psi});
  std::vector<Partition> out;
  for (const auto& basis : subspaces) {
    if (basis.empty() || static_cast<int>(basis.size()) == a.dim) continue;
    out.push_back(coset_partition(a.p, a.dim, basis));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> congruences_of(const AffineCycleSet& a) {
  auto subspaces = invariant_subspaces(a.p, a.dim, {a.phi, a.psi});
  std::vector<Partition> out;
  for (const auto& basis : subspaces) out.push_back(coset_partition(a.p, a.dim, basis));
  std::sort(out.begin(), out.end());
  return out;
}

AffineCycleSet simple_pp_representative(long p, long lambda, long mu, ConstantFlag c_flag) {
  if (!is_prime(p)) throw InvalidInput("BadParameter", "p must be prime");
  if (lambda <= 0 || lambda >= p || mu <= 0 || mu >= p)
    throw InvalidInput("BadParameter", "lambda and mu must lie in [1, p)");
  if (c_flag == ConstantFlag::e1 && mu != 1)
    throw InvalidInput("BadParameter", "the e1 constant class exists only for mu = 1");
  WeylPair w = weyl_matrices(p, lambda, mu);
  std::vector<int> c(static_cast<size_t>(p), 0);
  if (c_flag == ConstantFlag::e1) c[0] = 1;
  AffineCycleSet a = make_affine(p, static_cast<int>(p), w.m_b.inverse(), w.m_a, std::move(c));
  if (!is_irreducible_pair(a.phi, a.psi))
    throw Error("InternalError", "representative failed the irreducibility certificate");
  return a;
}

VerifyLevel default_verify_level(long p) {
  return p <= 5 ? VerifyLevel::standard : VerifyLevel::algebraic;
}

namespace {

bool table_checks(const AffineCycleSet& a, VerifyLevel level) {
  LeftQuasigroup t = as_table(a, 4096);
  if (!is_latin(t) || !is_nondegenerate(t) || !is_irretractable(t) || !is_indecomposable(t))
    return false;
  const int n = t.size();
  if (level == VerifyLevel::exhaustive || n <= 64) {
    if (!is_cycle_set(t)) return false;
  } else {
    // Deterministic sampled triple check; the law itself is certified exactly
    // by the matrix condition phi psi - psi phi = phi^2.
    int stride = std::max(1, n / 17);
    for (int x = 0; x < n; x += stride)
      for (int y = 0; y < n; y += stride)
        for (int z = 0; z < n; z += stride)
          if (t.op(t.op(x, y), t.op(x, z)) != t.op(t.op(y, x), t.op(y, z))) return false;
  }
  if (n <= 64) {
    // Brute-force simplicity on the table must agree with the algebraic route.
    if (!is_simple(t)) return false;
  }
  return true;
}

}  // namespace

std::vector<ClassifiedRep> classify_pp(long p, VerifyLevel level) {
  if (!is_prime(p) || p > 7)
    throw InvalidInput("BadParameter", "classification implemented for primes p <= 7");
  std::vector<ClassifiedRep> out;
  for (long lambda = 1; lambda < p; ++lambda)
    for (long mu = 1; mu < p; ++mu) {
      std::vector<ConstantFlag> flags{ConstantFlag::zero};
      if (mu == 1) flags.push_back(ConstantFlag::e1);
      for (ConstantFlag flag : flags) {
        ClassifiedRep rep;
        rep.lambda = lambda;
        rep.mu = mu;
        rep.value = simple_pp_representative(p, lambda, mu, flag);
        rep.c = rep.value.c;
        // Simplicity certificate: only trivial (phi,psi)-invariant subspaces,
        // i.e. the pair acts irreducibly.
        rep.verified = is_irreducible_pair(rep.value.phi, rep.value.psi);
        if (level != VerifyLevel::algebraic)
          rep.verified = rep.verified && table_checks(rep.value, level);
        out.push_back(std::move(rep));
      }
    }
  // Pairwise non-isomorphism certificate.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (iso_affine(out[i].value, out[j].value))
        throw Error("InternalError", "classification representatives are not pairwise distinct");
  return out;
}

namespace {

// Basis of the space {alpha : alpha*m = m'*alpha for all pairs}, as matrices.
std::vector<FpMatrix> transporter_basis(const std::vector<std::pair<FpMatrix, FpMatrix>>& pairs) {
  const long p = pairs[0].first.p();
  const int n = pairs[0].first.rows();
  const int nn = n * n;
  std::vector<std::vector<int>> rows;
  for (const auto& [m, m2] : pairs)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // sum_k alpha[i][k] m[k][j] - m2[i][k] alpha[k][j] = 0
        std::vector<int> row(static_cast<size_t>(nn), 0);
        for (int k = 0; k < n; ++k) {
          row[static_cast<size_t>(i * n + k)] =
              static_cast<int>((row[static_cast<size_t>(i * n + k)] + m.at(k, j)) % p);
          row[static_cast<size_t>(k * n + j)] = static_cast<int>(
              ((row[static_cast<size_t>(k * n + j)] - m2.at(i, k)) % p + p) % p);
        }
        rows.push_back(std::move(row));
      }
  FpMatrix system(p, std::move(rows));
  std::vector<FpMatrix> basis;
  for (const auto& vec : system.kernel_basis()) {
    FpMatrix alpha(p, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) alpha.at(i, j) = vec[static_cast<size_t>(i * n + j)];
    basis.push_back(std::move(alpha));
  }
  return basis;
}

// Deterministic sweep over nonzero coefficient tuples of the basis.
template <typename F>
void for_each_combination(long p, size_t dim, F&& fn) {
  std::vector<int> coeff(dim, 0);
  long total = 1;
  for (size_t i = 0; i < dim; ++i) total *= p;
  for (long t = 1; t < total; ++t) {
    long rest = t;
    for (size_t i = 0; i < dim; ++i) {
      coeff[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    if (!fn(coeff)) return;
  }
}

FpMatrix combine(const std::vector<FpMatrix>& basis, const std::vector<int>& coeff) {
  const long p = basis[0].p();
  FpMatrix out(p, basis[0].rows(), basis[0].cols());
  for (size_t b = 0; b < basis.size(); ++b) {
    if (!coeff[b]) continue;
    for (int i = 0; i < out.rows(); ++i)
      for (int j = 0; j < out.cols(); ++j)
        out.at(i, j) = static_cast<int>(
            (out.at(i, j) + static_cast<long>(coeff[b]) * basis[b].at(i, j)) % p);
  }
  return out;
}

}  // namespace

std::optional<AffineIso> iso_affine(const AffineCycleSet& a, const AffineCycleSet& b,
                                    long search_limit) {
  if (a.p != b.p || a.dim != b.dim)
    throw InvalidInput("BadParameter", "isomorphism needs the same underlying group");
  auto basis = transporter_basis({{a.phi, b.phi}, {a.psi, b.psi}});
  if (basis.empty()) return std::nullopt;
  long space = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    space *= a.p;
    if (space > search_limit)
      throw LimitExceeded("SizeLimitExceeded", "transporter space too large to sweep");
  }
  FpMatrix id = FpMatrix::identity(a.p, a.dim);
  auto image = (id - a.phi - a.psi).image_basis();
  std::optional<AffineIso> result;
  for_each_combination(a.p, basis.size(), [&](const std::vector<int>& coeff) {
    FpMatrix alpha = combine(basis, coeff);
    auto alpha_inv = alpha.try_inverse();
    if (!alpha_inv) return true;
    // u := alpha^{-1} c' - c must lie in Im(id - phi - psi).
    auto u = vec_sub(a.p, alpha_inv->apply(b.c), a.c);
    if (!in_span(a.p, image, u)) return true;
    result = AffineIso{alpha, u};
    return false;
  });
  if (result) {
    // Witness sanity: conjugation and constant transport.
    FpMatrix ai = result->alpha.inverse();
    if (!(result->alpha * a.phi * ai == b.phi) || !(result->alpha * a.psi * ai == b.psi) ||
        result->alpha.apply(vec_add(a.p, a.c, result->u)) != b.c)
      throw Error("InternalError", "isomorphism witness failed verification");
  }
  return result;
}

std::vector<AffineAut> aut_affine(const AffineCycleSet& a, long search_limit) {
  auto basis = transporter_basis({{a.phi, a.phi}, {a.psi, a.psi}});
  long space = 1;
  for (size_t i = 0; i < basis.size(); ++i) {
    space *= a.p;
    if (space > search_limit)
      throw LimitExceeded("SizeLimitExceeded", "centralizer space too large to sweep");
  }
  FpMatrix id = FpMatrix::identity(a.p, a.dim);
  FpMatrix constraint = a.phi + a.psi - id;
  auto kernel = constraint.kernel_basis();
  std::vector<AffineAut> out;
  for_each_combination(a.p, basis.size(), [&](const std::vector<int>& coeff) {
    FpMatrix eta = combine(basis, coeff);
    if (!eta.try_inverse()) return true;
    // Solve phi(g) + psi(g) - g = eta(c) - c.
    auto rhs = vec_sub(a.p, eta.apply(a.c), a.c);
    auto particular = constraint.solve(rhs);
    if (!particular) return true;
    std::vector<std::vector<int>> gs{*particular};
    // All solutions: particular + kernel combinations.
    if (!kernel.empty()) {
      std::set<std::vector<int>> all{*particular};
      for_each_combination(a.p, kernel.size(), [&](const std::vector<int>& kc) {
        std::vector<int> g = *particular;
        for (size_t i = 0; i < kernel.size(); ++i)
          for (int j = 0; j < a.dim; ++j)
            g[static_cast<size_t>(j)] = static_cast<int>(
                (g[static_cast<size_t>(j)] + static_cast<long>(kc[i]) * kernel[i][static_cast<size_t>(j)]) % a.p);
        all.insert(g);
        return true;
      });
      gs.assign(all.begin(), all.end());
    }
    for (auto& g : gs) out.push_back(AffineAut{eta, g});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const AffineAut& x, const AffineAut& y) {
    if (!(x.eta == y.eta)) return x.eta.row_vectors() < y.eta.row_vectors();
    return x.g < y.g;
  });
  return out;
}

Perm affine_aut_to_perm(const AffineCycleSet& a, const AffineAut& f) {
  const int n = static_cast<int>(a.carrier_size());
  std::vector<int> img(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    img[static_cast<size_t>(v)] =
        encode_point(a.p, vec_add(a.p, f.eta.apply(decode_point(a.p, a.dim, v)), f.g));
  return Perm(std::move(img));
}

std::vector<int> fixed_points(const AffineCycleSet& a, int x) {
  // phi(x) + psi(y) + c = y  <=>  (psi - I) y = -(phi(x) + c).
  FpMatrix lhs = a.psi - FpMatrix::identity(a.p, a.dim);
  auto rhs = vec_sub(a.p, std::vector<int>(static_cast<size_t>(a.dim), 0),
                     vec_add(a.p, a.phi.apply(decode_point(a.p, a.dim, x)), a.c));
  auto particular = lhs.solve(rhs);
  std::vector<int> out;
  if (!particular) return out;
  auto kernel = lhs.kernel_basis();
  std::set<int> pts{encode_point(a.p, *particular)};
  if (!kernel.empty())
    for_each_combination(a.p, kernel.size(), [&](const std::vector<int>& kc) {
      std::vector<int> y = *particular;
      for (size_t i = 0; i < kernel.size(); ++i)
        for (int j = 0; j < a.dim; ++j)
          y[static_cast<size_t>(j)] = static_cast<int>(
              (y[static_cast<size_t>(j)] + static_cast<long>(kc[i]) * kernel[i][static_cast<size_t>(j)]) % a.p);
      pts.insert(encode_point(a.p, y));
      return true;
    });
  out.assign(pts.begin(), pts.end());
  return out;
}

std::vector<AffineCycleSet> simple_subquasigroups(const AffineCycleSet& a) {
  auto subspaces = invariant_subspaces(a.p, a.dim, {a.phi, a.psi});
  // Keep the minimal nonzero ones.
  std::vector<std::vector<std::vector<int>>> minimal;
  for (const auto& h : subspaces) {
    if (h.empty()) continue;
    bool is_min = true;
    for (const auto& other : subspaces) {
      if (other.empty() || other.size() >= h.size()) continue;
      bool contained = true;
      for (const auto& v : other)
        if (!in_span(a.p, h, v)) {
          contained = false;
          break;
        }
      if (contained) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(h);
  }
  std::vector<AffineCycleSet> out;
  for (const auto& h : minimal) {
    const int k = static_cast<int>(h.size());
    std::vector<int> pivots;
    for (const auto& row : h) {
      int j = 0;
      while (row[static_cast<size_t>(j)] == 0) ++j;
      pivots.push_back(j);
    }
    // Coordinates w.r.t. an RREF basis are just the pivot entries.
    auto coords = [&](const std::vector<int>& v) {
      std::vector<int> out_c(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) out_c[static_cast<size_t>(i)] = v[static_cast<size_t>(pivots[static_cast<size_t>(i)])];
      return out_c;
    };
    auto restrict_matrix = [&](const FpMatrix& m) {
      FpMatrix r(a.p, k, k);
      for (int i = 0; i < k; ++i) {
        auto img = coords(m.apply(h[static_cast<size_t>(i)]));
        for (int j = 0; j < k; ++j) r.at(j, i) = img[static_cast<size_t>(j)];
      }
      return r;
    };
    std::vector<int> hc = in_span(a.p, h, a.c) ? coords(a.c) : std::vector<int>(static_cast<size_t>(k), 0);
    AffineCycleSet sub = make_affine(a.p, k, restrict_matrix(a.phi), restrict_matrix(a.psi), hc);
    if (!is_irreducible_pair(sub.phi, sub.psi))
      throw Error("InternalError", "restriction to a minimal subspace is not irreducible");
    out.push_back(std::move(sub));
  }
  return out;
}

// --- right linear ---

namespace {

int group_neutral(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[static_cast<size_t>(e)][static_cast<size_t>(x)] == x &&
           t[static_cast<size_t>(x)][static_cast<size_t>(e)] == x;
    if (ok) return e;
  }
  return -1;
}

bool valid_group_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n || !is_permutation(row)) return false;
  for (int c = 0; c < n; ++c) {
    std::vector<int> col(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) col[static_cast<size_t>(r)] = t[static_cast<size_t>(r)][static_cast<size_t>(c)];
    if (!is_permutation(col)) return false;
  }
  if (group_neutral(t) < 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[static_cast<size_t>(t[static_cast<size_t>(x)][static_cast<size_t>(y)])][static_cast<size_t>(z)] !=
            t[static_cast<size_t>(x)][static_cast<size_t>(t[static_cast<size_t>(y)][static_cast<size_t>(z)])])
          return false;
  return true;
}

std::vector<int> group_inverses(const std::vector<std::vector<int>>& t, int neutral) {
  const int n = static_cast<int>(t.size());
  std::vector<int> inv(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[static_cast<size_t>(x)][static_cast<size_t>(y)] == neutral) inv[static_cast<size_t>(x)] = y;
  return inv;
}

bool is_group_automorphism(const std::vector<std::vector<int>>& t, const std::vector<int>& f) {
  const int n = static_cast<int>(t.size());
  if (static_cast<int>(f.size()) != n || !is_permutation(f)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[static_cast<size_t>(t[static_cast<size_t>(x)][static_cast<size_t>(y)])] !=
          t[static_cast<size_t>(f[static_cast<size_t>(x)])][static_cast<size_t>(f[static_cast<size_t>(y)])])
        return false;
  return true;
}

}  // namespace

RightLinearCycleSet make_right_linear(std::vector<std::vector<int>> group_table,
                                      std::vector<int> phi, std::vector<int> psi) {
  if (!valid_group_table(group_table))
    throw InvalidInput("BadParameter", "carrier table is not a group");
  if (!is_permutation(phi)) throw InvalidInput("BadParameter", "phi must be a bijection");
  if (!is_group_automorphism(group_table, psi))
    throw InvalidInput("NotAutomorphism", "psi is not a group automorphism");
  const int n = static_cast<int>(group_table.size());
  auto o = [&](int x, int y) { return group_table[static_cast<size_t>(x)][static_cast<size_t>(y)]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = o(phi[static_cast<size_t>(o(phi[static_cast<size_t>(y)], psi[static_cast<size_t>(x)]))],
                  psi[static_cast<size_t>(phi[static_cast<size_t>(y)])]);
      int rhs = o(phi[static_cast<size_t>(o(phi[static_cast<size_t>(x)], psi[static_cast<size_t>(y)]))],
                  psi[static_cast<size_t>(phi[static_cast<size_t>(x)])]);
      if (lhs != rhs)
        throw InvalidInput("ConditionFails", "right-linear cycle-set condition fails");
    }
  RightLinearCycleSet out;
  out.neutral = group_neutral(group_table);
  out.group = std::move(group_table);
  out.phi = std::move(phi);
  out.psi = std::move(psi);
  // Constructor soundness: the export must be a latin cycle set.
  LeftQuasigroup t = as_table(out);
  if (!is_cycle_set(t) || !is_latin(t))
    throw InvalidInput("ConditionFails", "export is not a latin cycle set");
  return out;
}

LeftQuasigroup as_table(const RightLinearCycleSet& r) {
  const int n = static_cast<int>(r.group.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          r.group[static_cast<size_t>(r.phi[static_cast<size_t>(x)])][static_cast<size_t>(r.psi[static_cast<size_t>(y)])];
  return LeftQuasigroup(std::move(table));
}

namespace {

std::vector<int> subgroup_closure(const std::vector<std::vector<int>>& t, int neutral,
                                  const std::vector<int>& inv, std::vector<int> gens) {
  std::set<int> s{neutral};
  std::deque<int> queue{neutral};
  for (int g : gens)
    if (s.insert(g).second) queue.push_back(g);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (s.insert(inv[static_cast<size_t>(v)]).second) queue.push_back(inv[static_cast<size_t>(v)]);
    for (int w : std::vector<int>(s.begin(), s.end())) {
      if (s.insert(t[static_cast<size_t>(v)][static_cast<size_t>(w)]).second)
        queue.push_back(t[static_cast<size_t>(v)][static_cast<size_t>(w)]);
      if (s.insert(t[static_cast<size_t>(w)][static_cast<size_t>(v)]).second)
        queue.push_back(t[static_cast<size_t>(w)][static_cast<size_t>(v)]);
    }
  }
  return {s.begin(), s.end()};
}

// Subgroups generated by up to three elements (sufficient at these orders).
std::vector<std::vector<int>> small_subgroups(const std::vector<std::vector<int>>& t, long order_cap) {
  const int n = static_cast<int>(t.size());
  if (n > order_cap)
    throw LimitExceeded("SizeLimitExceeded", "right-linear subgroup enumeration capped");
  int neutral = group_neutral(t);
  auto inv = group_inverses(t, neutral);
  std::set<std::vector<int>> found;
  found.insert({neutral});
  for (int a = 0; a < n; ++a) found.insert(subgroup_closure(t, neutral, inv, {a}));
  std::vector<std::vector<int>> one_gen(found.begin(), found.end());
  for (const auto& h : one_gen)
    for (int b = 0; b < n; ++b) {
      auto gens = h;
      gens.push_back(b);
      found.insert(subgroup_closure(t, neutral, inv, gens));
    }
  std::vector<std::vector<int>> two_gen(found.begin(), found.end());
  for (const auto& h : two_gen)
    for (int c = 0; c < n; ++c) {
      auto gens = h;
      gens.push_back(c);
      found.insert(subgroup_closure(t, neutral, inv, gens));
    }
  return {found.begin(), found.end()};
}

Partition left_coset_partition(const std::vector<std::vector<int>>& t, const std::vector<int>& h) {
  const int n = static_cast<int>(t.size());
  std::vector<int> ids(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (ids[static_cast<size_t>(x)] >= 0) continue;
    for (int w : h) {
      int y = t[static_cast<size_t>(x)][static_cast<size_t>(w)];
      ids[static_cast<size_t>(y)] = x;
    }
  }
  return Partition(std::move(ids));
}

}  // namespace

std::vector<Partition> blocks_of(const RightLinearCycleSet& r, long order_cap) {
  const int n = static_cast<int>(r.group.size());
  std::vector<Partition> out;
  for (const auto& h : small_subgroups(r.group, order_cap)) {
    if (static_cast<int>(h.size()) == 1 || static_cast<int>(h.size()) == n) continue;
    // psi-invariance.
    bool inv = true;
    for (int v : h)
      if (!std::binary_search(h.begin(), h.end(), r.psi[static_cast<size_t>(v)])) {
        inv = false;
        break;
      }
    if (inv) out.push_back(left_coset_partition(r.group, h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> congruences_of(const RightLinearCycleSet& r, long order_cap) {
  const int n = static_cast<int>(r.group.size());
  int neutral = group_neutral(r.group);
  auto inv = group_inverses(r.group, neutral);
  auto o = [&](int x, int y) { return r.group[static_cast<size_t>(x)][static_cast<size_t>(y)]; };
  std::vector<Partition> out;
  for (const auto& h : small_subgroups(r.group, order_cap)) {
    bool psi_inv = true;
    for (int v : h)
      if (!std::binary_search(h.begin(), h.end(), r.psi[static_cast<size_t>(v)])) {
        psi_inv = false;
        break;
      }
    if (!psi_inv) continue;
    bool normal = true;
    for (int g = 0; g < n && normal; ++g)
      for (int v : h)
        if (!std::binary_search(h.begin(), h.end(), o(o(g, v), inv[static_cast<size_t>(g)]))) {
          normal = false;
          break;
        }
    if (!normal) continue;
    // phi-invariance for a general bijection: x^{-1} y in H => phi(x)^{-1} phi(y) in H.
    bool phi_inv = true;
    for (int x = 0; x < n && phi_inv; ++x)
      for (int w : h) {
        int y = o(x, w);
        if (!std::binary_search(h.begin(), h.end(),
                                o(inv[static_cast<size_t>(r.phi[static_cast<size_t>(x)])],
                                  r.phi[static_cast<size_t>(y)]))) {
          phi_inv = false;
          break;
        }
      }
    if (!phi_inv) continue;
    out.push_back(left_coset_partition(r.group, h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RightLinearRepresentation right_linear_rep(const LeftQuasigroup& x, int e, int f, long limit) {
  const int n = x.size();
  if (e < 0 || e >= n || f < 0 || f >= n)
    throw InvalidInput("BadParameter", "base points out of range");
  if (!is_irretractable(x))
    throw InvalidInput("NotIrretractable", "representation needs an irretractable cycle set");
  if (!is_cycle_set(x))
    throw InvalidInput("NotACycleSet", "representation needs a cycle set");
  PermGroup dis = displacement_group(x, limit);
  TransitivityProfile prof = transitivity_profile(dis);
  if (!prof.regular || dis.order() != n)
    throw InvalidInput("DisNotRegular", "displacement group does not act regularly");

  // delta_e must be bijective; regular displacement forces the table latin.
  std::vector<int> delta_e = x.delta_images(e);
  if (!is_permutation(delta_e))
    throw InvalidInput("DisNotRegular", "delta_e is not bijective");
  std::vector<int> delta_e_inv(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) delta_e_inv[static_cast<size_t>(delta_e[static_cast<size_t>(i)])] = i;

  RightLinearRepresentation rep;
  rep.e = e;
  rep.f = f;
  rep.neutral = x.op(f, e);
  rep.group_table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rep.group_table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          x.op(delta_e_inv[static_cast<size_t>(a)], x.ldiv(f, b));
  if (!valid_group_table(rep.group_table) || group_neutral(rep.group_table) != rep.neutral)
    throw InvalidInput("DisNotRegular", "derived operation is not a group with neutral f*e");

  auto o = [&](int a, int b) {
    return rep.group_table[static_cast<size_t>(a)][static_cast<size_t>(b)];
  };
  auto inv = group_inverses(rep.group_table, rep.neutral);

  int anchor = x.op(f, x.op(e, f));  // sigma_f(e*f)
  rep.phi_ef.resize(static_cast<size_t>(n));
  rep.psi_ef.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    rep.phi_ef[static_cast<size_t>(a)] = o(delta_e[static_cast<size_t>(a)], anchor);
    rep.psi_ef[static_cast<size_t>(a)] = o(inv[static_cast<size_t>(anchor)], x.op(f, a));
  }
  if (!is_group_automorphism(rep.group_table, rep.psi_ef))
    throw InvalidInput("DisNotRegular", "psi_ef is not a group automorphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.op(a, b) != o(rep.phi_ef[static_cast<size_t>(a)], rep.psi_ef[static_cast<size_t>(b)]))
        throw InvalidInput("DisNotRegular", "rebuild identity failed");

  // rho_{e,f}(a) = sigma_{delta_e^{-1}(a)} sigma_f^{-1}, an isomorphism onto Dis(X).
  Perm sf_inv = x.sigma(f).inverse();
  rep.dis_labeling.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a)
    rep.dis_labeling.push_back(x.sigma(delta_e_inv[static_cast<size_t>(a)]) * sf_inv);
  std::set<Perm> image(rep.dis_labeling.begin(), rep.dis_labeling.end());
  if (static_cast<int>(image.size()) != n)
    throw InvalidInput("DisNotRegular", "rho_ef is not injective");
  for (const auto& perm : rep.dis_labeling)
    if (!dis.contains(perm))
      throw InvalidInput("DisNotRegular", "rho_ef image leaves the displacement group");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(rep.dis_labeling[static_cast<size_t>(o(a, b))] ==
            rep.dis_labeling[static_cast<size_t>(a)] * rep.dis_labeling[static_cast<size_t>(b)]))
        throw InvalidInput("DisNotRegular", "rho_ef is not a homomorphism");
  return rep;
}

}  // namespace cslab
