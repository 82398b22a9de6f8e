#include "metcomp/derived.hpp"

#include <algorithm>

namespace metcomp {

void SplitObject::normalize() {
  for (auto& [deg, m] : summands) check_in_catalog(ring, m);
  std::sort(summands.begin(), summands.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
}

SplitObject SplitObject::direct_sum(const SplitObject& o) const {
  check_same_ring(ring, o.ring);
  SplitObject r = *this;
  r.summands.insert(r.summands.end(), o.summands.begin(), o.summands.end());
  r.normalize();
  return r;
}

std::pair<long long, long long> SplitObject::degree_span() const {
  if (summands.empty()) return {0, -1};
  long long lo = summands.front().first, hi = lo;
  for (const auto& [d, m] : summands) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

std::string SplitObject::str() const {
  if (summands.empty()) return "0";
  std::string s;
  for (const auto& [d, m] : summands) {
    if (!s.empty()) s += " + ";
    if (d == 0)
      s += m.str();
    else
      s += m.str() + "[" + std::to_string(-d) + "]";
  }
  return s;
}

SplitObject shift(const SplitObject& x, long long k) {
  SplitObject r = x;
  for (auto& [d, m] : r.summands) d -= k;
  r.normalize();
  return r;
}

namespace {

void accumulate(HomExtRecord& acc, const HomExtRecord& one, bool hom_part) {
  if (acc.over_z) {
    if (hom_part)
      acc.hom_group = ab_direct_sum(acc.hom_group, one.hom_group);
    else
      acc.ext_group = ab_direct_sum(acc.ext_group, one.ext_group);
  } else {
    if (hom_part)
      acc.hom_dim += one.hom_dim;
    else
      acc.ext_dim += one.ext_dim;
  }
}

}  // namespace

std::map<long long, HomExtRecord> graded_hom(const SplitObject& x,
                                             const SplitObject& y) {
  check_same_ring(x.ring, y.ring);
  bool over_z = x.ring.is_integerish();
  std::map<long long, HomExtRecord> out;
  auto slot = [&](long long j) -> HomExtRecord& {
    auto it = out.find(j);
    if (it == out.end()) {
      it = out.emplace(j, HomExtRecord{}).first;
      it->second.over_z = over_z;
    }
    return it->second;
  };
  for (const auto& [a, m] : x.summands)
    for (const auto& [b, n] : y.summands) {
      HomExtRecord r = hom_invariants(x.ring, m, n);
      // Hom(Sigma^{-a} M, Sigma^{j-b} N): Hom at j = b - a, Ext at j = b-a+1
      if (!r.hom_is_zero()) accumulate(slot(b - a), r, true);
      if (!r.ext_is_zero()) accumulate(slot(b - a + 1), r, false);
    }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.hom_is_zero() && it->second.ext_is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

std::string SpecSubset::str() const {
  if (all) return "all of Spec";
  std::string s = "{";
  bool first = true;
  for (long long p : primes) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

SpecSubset support_Z(const SplitObject& x) {
  require(x.ring.kind == RingKind::IntegerRing, Err::WrongRing,
          "support over Spec Z needs the integral ring");
  SpecSubset s;
  for (const auto& [d, m] : x.summands) {
    if (m.kind == IndKind::ZFree)
      s.all = true;
    else
      s.primes.insert(m.p);
  }
  return s;
}

long long z_annihilator(const Indecomposable& m) {
  if (m.kind == IndKind::ZFree) return 0;
  require(m.kind == IndKind::ZTorsion, Err::WrongRing, "not a Z-module shape");
  long long v = 1;
  for (int i = 0; i < m.k; ++i) v = checked_mul(v, m.p);
  return v;
}

IMat z_presentation(const std::vector<Indecomposable>& mods) {
  std::vector<std::pair<int, long long>> torsion;
  for (size_t i = 0; i < mods.size(); ++i) {
    long long ann = z_annihilator(mods[i]);
    if (ann != 0) torsion.push_back({(int)i, ann});
  }
  IMat rel((int)mods.size(), (int)torsion.size());
  for (size_t c = 0; c < torsion.size(); ++c)
    rel.at(torsion[c].first, (int)c) = torsion[c].second;
  return rel;
}

std::vector<Indecomposable> z_summands_of(const AbGroup& g) {
  std::vector<Indecomposable> out;
  for (long long i = 0; i < g.free_rank; ++i)
    out.push_back(Indecomposable::z_free());
  for (auto [p, e] : g.primary()) out.push_back(Indecomposable::z_torsion(p, e));
  std::sort(out.begin(), out.end());
  return out;
}

ModuleMap ModuleMap::z_map(const RingDescriptor& ring,
                           std::vector<Indecomposable> source,
                           std::vector<Indecomposable> target, IMat mat) {
  require(ring.is_integerish(), Err::WrongRing, "integer matrix over a quiver ring");
  require(mat.rows == (int)target.size() && mat.cols == (int)source.size(),
          Err::NonIntertwining, "matrix shape does not match the summand lists");
  ModuleMap f;
  f.ring = ring;
  f.source = std::move(source);
  f.target = std::move(target);
  for (const auto& m : f.source) check_in_catalog(ring, m);
  for (const auto& m : f.target) check_in_catalog(ring, m);
  // entry (i, j) is a map source_j -> target_i; it must kill the annihilator
  for (int i = 0; i < mat.rows; ++i) {
    long long ann_t = z_annihilator(f.target[i]);
    for (int j = 0; j < mat.cols; ++j) {
      long long ann_s = z_annihilator(f.source[j]);
      long long e = mat.at(i, j);
      if (ann_t == 0) {
        require(ann_s == 0 || e == 0, Err::NonIntertwining,
                "no nonzero map from torsion to a free module");
      } else {
        require(checked_mul(e, ann_s) % ann_t == 0 || ann_s == 0,
                Err::NonIntertwining,
                "entry does not respect the torsion annihilators");
        mat.at(i, j) = ((e % ann_t) + ann_t) % ann_t;
      }
    }
  }
  f.data = std::move(mat);
  return f;
}

namespace {

template <class F>
void check_kron_map(const F& fld, const std::vector<Indecomposable>& source,
                    const std::vector<Indecomposable>& target,
                    const Matrix<F>& f2, const Matrix<F>& f1) {
  KronRep<F> s = rep_of(fld, source), t = rep_of(fld, target);
  require(intertwines(fld, s, t, f2, f1), Err::NonIntertwining,
          "matrix pair violates the intertwining equations");
}

}  // namespace

ModuleMap ModuleMap::kron_map_rat(const RingDescriptor& ring,
                                  std::vector<Indecomposable> source,
                                  std::vector<Indecomposable> target,
                                  Matrix<RatField> f2, Matrix<RatField> f1) {
  require(ring.kind == RingKind::Kronecker &&
              ring.field.kind == FieldKind::Rational,
          Err::WrongRing, "rational matrix pair needs Kronecker over Q");
  ModuleMap f;
  f.ring = ring;
  f.source = std::move(source);
  f.target = std::move(target);
  for (const auto& m : f.source) check_in_catalog(ring, m);
  for (const auto& m : f.target) check_in_catalog(ring, m);
  check_kron_map(RatField{}, f.source, f.target, f2, f1);
  f.data = KronMapData<RatField>{std::move(f2), std::move(f1)};
  return f;
}

ModuleMap ModuleMap::kron_map_gf(const RingDescriptor& ring,
                                 std::vector<Indecomposable> source,
                                 std::vector<Indecomposable> target,
                                 Matrix<GFField> f2, Matrix<GFField> f1) {
  require(ring.kind == RingKind::Kronecker && ring.field.kind == FieldKind::Finite,
          Err::WrongRing, "finite-field matrix pair needs Kronecker over F_q");
  ModuleMap f;
  f.ring = ring;
  f.source = std::move(source);
  f.target = std::move(target);
  for (const auto& m : f.source) check_in_catalog(ring, m);
  for (const auto& m : f.target) check_in_catalog(ring, m);
  GFField fld{&gf_table_for_order(ring.field.q)};
  check_kron_map(fld, f.source, f.target, f2, f1);
  f.data = KronMapData<GFField>{std::move(f2), std::move(f1)};
  return f;
}

ModuleMap ModuleMap::identity(const RingDescriptor& ring,
                              const std::vector<Indecomposable>& mods) {
  if (ring.is_integerish())
    return z_map(ring, mods, mods, IMat::identity((int)mods.size()));
  require(ring.kind == RingKind::Kronecker, Err::WrongRing,
          "module maps live over Z or the Kronecker algebra");
  if (ring.field.kind == FieldKind::Rational) {
    RatField f;
    KronRep<RatField> r = rep_of(f, mods);
    return kron_map_rat(ring, mods, mods, mat_identity(f, r.d2()),
                        mat_identity(f, r.d1()));
  }
  require(ring.field.kind == FieldKind::Finite, Err::UnsupportedField,
          "identity matrices need element arithmetic; use a formal witness "
          "over the symbolic field");
  GFField f{&gf_table_for_order(ring.field.q)};
  KronRep<GFField> r = rep_of(f, mods);
  return kron_map_gf(ring, mods, mods, mat_identity(f, r.d2()),
                     mat_identity(f, r.d1()));
}

ModuleMap ModuleMap::multiplication(const RingDescriptor& ring, long long c,
                                    int rank) {
  require(ring.is_integerish(), Err::WrongRing,
          "integer multiplication maps live over Z");
  std::vector<Indecomposable> mods(rank, Indecomposable::z_free());
  IMat m = IMat::identity(rank);
  for (int i = 0; i < rank; ++i) m.at(i, i) = c;
  return z_map(ring, mods, mods, std::move(m));
}

ModuleMap ModuleMap::canonical_p_step(const RingDescriptor& ring,
                                      const ProjPoint& lambda, long long n) {
  require(ring.kind == RingKind::Kronecker, Err::WrongRing,
          "preprojective steps live over the Kronecker algebra");
  require(n >= 1, Err::InvalidDescriptor, "step P_{n-1} -> P_n needs n >= 1");
  std::vector<Indecomposable> src{Indecomposable::preprojective(n - 1)};
  std::vector<Indecomposable> tgt{Indecomposable::preprojective(n)};
  if (ring.field.kind == FieldKind::Rational) {
    RatField f;
    auto [alpha, beta] = linear_form_coeffs(f, lambda);
    return kron_map_rat(ring, src, tgt,
                        mult_form_matrix(f, alpha, beta, (int)n - 1),
                        mult_form_matrix(f, alpha, beta, (int)n));
  }
  require(ring.field.kind == FieldKind::Finite, Err::UnsupportedField,
          "a point-coordinate-dependent basis is refused over the symbolic "
          "field");
  GFField f{&gf_table_for_order(ring.field.q)};
  auto [alpha, beta] = linear_form_coeffs(f, lambda);
  return kron_map_gf(ring, src, tgt, mult_form_matrix(f, alpha, beta, (int)n - 1),
                     mult_form_matrix(f, alpha, beta, (int)n));
}

namespace {

SplitObject z_cone(const ModuleMap& f) {
  const IMat& F = std::get<IMat>(f.data);
  int gs = (int)f.source.size(), gt = (int)f.target.size();
  IMat rel_s = z_presentation(f.source);
  IMat rel_t = z_presentation(f.target);

  // cokernel: Z^gt / (im F + rel_t)
  IMat big(gt, F.cols + rel_t.cols);
  for (int i = 0; i < gt; ++i) {
    for (int j = 0; j < F.cols; ++j) big.at(i, j) = F.at(i, j);
    for (int j = 0; j < rel_t.cols; ++j) big.at(i, F.cols + j) = rel_t.at(i, j);
  }
  AbGroup coker = group_from_presentation(gt, big);

  // kernel: L / im rel_s, where L = { x : F x lies in im rel_t }
  IMat stacked(gt, gs + rel_t.cols);
  for (int i = 0; i < gt; ++i) {
    for (int j = 0; j < gs; ++j) stacked.at(i, j) = F.at(i, j);
    for (int j = 0; j < rel_t.cols; ++j)
      stacked.at(i, gs + j) = -rel_t.at(i, j);
  }
  IMat knl = integer_kernel(stacked);
  IMat L(gs, knl.cols + rel_s.cols);
  for (int i = 0; i < gs; ++i) {
    for (int j = 0; j < knl.cols; ++j) L.at(i, j) = knl.at(i, j);
    for (int j = 0; j < rel_s.cols; ++j) L.at(i, knl.cols + j) = rel_s.at(i, j);
  }
  AbGroup ker = lattice_quotient(L, rel_s);

  SplitObject cone = SplitObject::zero(f.ring);
  for (const auto& m : z_summands_of(ker)) cone.summands.push_back({-1, m});
  for (const auto& m : z_summands_of(coker)) cone.summands.push_back({0, m});
  cone.normalize();
  return cone;
}

template <class F>
KronRep<F> kernel_rep(const F& fld, const KronRep<F>& s, const Matrix<F>& f2,
                      const Matrix<F>& f1) {
  Matrix<F> K2 = nullspace(fld, f2);
  Matrix<F> K1 = nullspace(fld, f1);
  // restrict A, B: solve K1 * X = A K2 columnwise (unique: K1 has full
  // column rank)
  auto restrict_map = [&](const Matrix<F>& M) {
    Matrix<F> MK = mat_mul(fld, M, K2);
    Matrix<F> X = mat_zero(fld, K1.cols, K2.cols);
    for (int j = 0; j < K2.cols; ++j) {
      std::vector<typename F::Elem> rhs(MK.rows, fld.zero());
      for (int i = 0; i < MK.rows; ++i) rhs[i] = MK.at(i, j);
      auto sol = solve(fld, K1, rhs);
      require(sol.has_value(), Err::NonIntertwining,
              "kernel is not a subrepresentation");
      for (int i = 0; i < K1.cols; ++i) X.at(i, j) = (*sol)[i];
    }
    return X;
  };
  KronRep<F> k;
  k.A = restrict_map(s.A);
  k.B = restrict_map(s.B);
  return k;
}

template <class F>
KronRep<F> cokernel_rep(const F& fld, const KronRep<F>& t, const Matrix<F>& f2,
                        const Matrix<F>& f1) {
  Matrix<F> Q2 = kron_detail::left_null(fld, f2);
  Matrix<F> Q1 = kron_detail::left_null(fld, f1);
  // section S2 with Q2 S2 = identity
  Matrix<F> S2 = mat_zero(fld, Q2.cols, Q2.rows);
  for (int i = 0; i < Q2.rows; ++i) {
    std::vector<typename F::Elem> rhs(Q2.rows, fld.zero());
    rhs[i] = fld.one();
    auto sol = solve(fld, Q2, rhs);
    require(sol.has_value(), Err::NonIntertwining, "cokernel section failure");
    for (int j = 0; j < Q2.cols; ++j) S2.at(j, i) = (*sol)[j];
  }
  KronRep<F> c;
  c.A = mat_mul(fld, Q1, mat_mul(fld, t.A, S2));
  c.B = mat_mul(fld, Q1, mat_mul(fld, t.B, S2));
  return c;
}

template <class F>
SplitObject kron_cone(const F& fld, const FieldDescriptor& fdesc,
                      const ModuleMap& f, const KronMapData<F>& d) {
  KronRep<F> s = rep_of(fld, f.source), t = rep_of(fld, f.target);
  KronRep<F> k = kernel_rep(fld, s, d.f2, d.f1);
  KronRep<F> c = cokernel_rep(fld, t, d.f2, d.f1);
  SplitObject cone = SplitObject::zero(f.ring);
  for (const auto& m : decompose_rep(fld, fdesc, k)) cone.summands.push_back({-1, m});
  for (const auto& m : decompose_rep(fld, fdesc, c)) cone.summands.push_back({0, m});
  cone.normalize();
  return cone;
}

}  // namespace

SplitObject cone_of_module_map(const ModuleMap& f) {
  if (std::holds_alternative<IMat>(f.data)) return z_cone(f);
  if (std::holds_alternative<KronMapData<RatField>>(f.data))
    return kron_cone(RatField{}, f.ring.field, f,
                     std::get<KronMapData<RatField>>(f.data));
  if (std::holds_alternative<KronMapData<GFField>>(f.data)) {
    GFField fld{&gf_table_for_order(f.ring.field.q)};
    return kron_cone(fld, f.ring.field, f, std::get<KronMapData<GFField>>(f.data));
  }
  raise(Err::NonIntertwining, "module map carries no matrix data");
}

}  // namespace metcomp
