#include "metcomp/oracle.hpp"

#include <algorithm>
#include <map>

#include "metcomp/derived.hpp"

namespace metcomp {

namespace {

long long ppow(long long p, int k) {
  long long v = 1;
  for (int i = 0; i < k; ++i) v = checked_mul(v, p);
  return v;
}

IMat hstack(const IMat& A, const IMat& B) {
  require(A.rows == B.rows, Err::InvalidDescriptor, "row count mismatch");
  IMat M(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) M.at(i, A.cols + j) = B.at(i, j);
  }
  return M;
}

IMat scaled_identity(int n, long long d) {
  IMat M(n, n);
  for (int i = 0; i < n; ++i) M.at(i, i) = d;
  return M;
}

// d-torsion of Z^b / span(B): the x with d x in span(B), modulo span(B).
AbGroup d_torsion_of(long long d, int b, const IMat& B) {
  IMat K = integer_kernel(hstack(scaled_identity(b, d), B));
  IMat X(b, K.cols);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < K.cols; ++j) X.at(i, j) = K.at(i, j);
  return lattice_quotient(hstack(X, B), B);
}

AbGroup mod_d_of(long long d, int b, const IMat& B) {
  return group_from_presentation(b, hstack(B, scaled_identity(b, d)));
}

}  // namespace

ZPresentation ZPresentation::of(int gens, IMat rels) {
  require(gens >= 0, Err::InvalidDescriptor, "negative generator count");
  require(rels.rows == gens, Err::InvalidDescriptor,
          "relations need one row per generator");
  ZPresentation p;
  p.gens = gens;
  p.rels = std::move(rels);
  return p;
}

ZPresentation ZPresentation::of_modules(const std::vector<Indecomposable>& mods) {
  int torsion_cols = 0;
  for (auto& m : mods) {
    require(m.kind == IndKind::ZFree || m.kind == IndKind::ZTorsion,
            Err::WrongRing, "not a Z-module shape");
    if (m.kind == IndKind::ZTorsion) ++torsion_cols;
  }
  IMat rels((int)mods.size(), torsion_cols);
  int c = 0;
  for (int i = 0; i < (int)mods.size(); ++i)
    if (mods[i].kind == IndKind::ZTorsion)
      rels.at(i, c++) = ppow(mods[i].p, mods[i].k);
  return of((int)mods.size(), std::move(rels));
}

std::string ZPresentation::str() const {
  std::string s = "Z^" + std::to_string(gens);
  if (rels.cols == 0) return s;
  s += " /(";
  for (int j = 0; j < rels.cols; ++j) {
    if (j) s += "; ";
    for (int i = 0; i < rels.rows; ++i) {
      if (i) s += ",";
      s += std::to_string(rels.at(i, j));
    }
  }
  return s + ")";
}

std::pair<AbGroup, AbGroup> snf_hom_ext(const OracleConfig& cfg,
                                        const ZPresentation& m,
                                        const ZPresentation& n) {
  require(m.gens <= cfg.max_generators_z && n.gens <= cfg.max_generators_z,
          Err::BoundsExceeded, "presentation exceeds the generator bound");
  SmithForm sf = smith_normal_form(m.rels);
  long long free_rank = m.gens - (long long)sf.diag.size();
  AbGroup hom, ext;
  if (free_rank > 0) {
    AbGroup whole = group_from_presentation(n.gens, n.rels);
    for (long long i = 0; i < free_rank; ++i) hom = ab_direct_sum(hom, whole);
  }
  for (long long d : sf.diag) {
    if (d == 1) continue;
    hom = ab_direct_sum(hom, d_torsion_of(d, n.gens, n.rels));
    ext = ab_direct_sum(ext, mod_d_of(d, n.gens, n.rels));
  }
  return {hom, ext};
}

template <class F>
std::pair<long long, long long> intertwiner_dims(const OracleConfig& cfg,
                                                 const F& fld,
                                                 const KronRep<F>& x,
                                                 const KronRep<F>& y) {
  require(x.d1() + x.d2() <= cfg.max_total_dimension &&
              y.d1() + y.d2() <= cfg.max_total_dimension,
          Err::BoundsExceeded, "representation exceeds the dimension bound");
  // unknowns: g1 (y.d1 x x.d1) then g2 (y.d2 x x.d2), row-major
  int n1 = y.d1() * x.d1();
  int n2 = y.d2() * x.d2();
  Matrix<F> E = mat_zero(fld, 2 * y.d1() * x.d2(), n1 + n2);
  int r = 0;
  auto add_equations = [&](const Matrix<F>& XA, const Matrix<F>& YA) {
    // entry (i, c) of g1 * XA - YA * g2 = 0
    for (int i = 0; i < y.d1(); ++i)
      for (int c = 0; c < x.d2(); ++c) {
        for (int j = 0; j < x.d1(); ++j)
          E.at(r, i * x.d1() + j) = XA.at(j, c);
        for (int k = 0; k < y.d2(); ++k)
          E.at(r, n1 + k * x.d2() + c) = fld.neg(YA.at(i, k));
        ++r;
      }
  };
  add_equations(x.A, y.A);
  add_equations(x.B, y.B);
  long long hom = nullspace(fld, E).cols;
  long long chi = (long long)x.d1() * y.d1() + (long long)x.d2() * y.d2() -
                  2LL * (long long)x.d2() * y.d1();
  return {hom, hom - chi};
}

template std::pair<long long, long long> intertwiner_dims<RatField>(
    const OracleConfig&, const RatField&, const KronRep<RatField>&,
    const KronRep<RatField>&);
template std::pair<long long, long long> intertwiner_dims<GFField>(
    const OracleConfig&, const GFField&, const KronRep<GFField>&,
    const KronRep<GFField>&);

std::pair<long long, long long> intertwiner_dims(const OracleConfig& cfg,
                                                 const RingDescriptor& ring,
                                                 const Indecomposable& x,
                                                 const Indecomposable& y) {
  require(ring.kind == RingKind::Kronecker, Err::WrongRing,
          "explicit representations need the Kronecker ring");
  if (ring.field.kind == FieldKind::Rational) {
    RatField f;
    return intertwiner_dims(cfg, f, canonical_rep(f, x), canonical_rep(f, y));
  }
  require(ring.field.kind == FieldKind::Finite, Err::UnsupportedField,
          "no matrix model over " + ring.field.str());
  GFField f{&gf_table_for_order(ring.field.q)};
  return intertwiner_dims(cfg, f, canonical_rep(f, x), canonical_rep(f, y));
}

ZMapPresentation ZMapPresentation::of(ZPresentation source, ZPresentation target,
                                      IMat matrix) {
  require(matrix.rows == target.gens && matrix.cols == source.gens,
          Err::InvalidDescriptor, "matrix shape does not match the presentations");
  ZMapPresentation f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.matrix = std::move(matrix);
  return f;
}

std::vector<std::pair<long long, AbGroup>> mapping_cone_homology(
    const OracleConfig& cfg, const ZMapPresentation& f) {
  require(f.source.gens <= cfg.max_generators_z &&
              f.target.gens <= cfg.max_generators_z,
          Err::BoundsExceeded, "presentation exceeds the generator bound");
  const IMat& As = f.source.rels;
  const IMat& At = f.target.rels;
  require(integer_kernel(As).cols == 0 && integer_kernel(At).cols == 0,
          Err::InvalidDescriptor, "relation columns must be independent");

  // lift the generator matrix to relation lattices: At * f1 = matrix * As
  IMat FAs = imat_mul(f.matrix, As);
  IMat f1(At.cols, As.cols);
  for (int c = 0; c < As.cols; ++c) {
    std::vector<long long> b(FAs.rows), x;
    for (int i = 0; i < FAs.rows; ++i) b[i] = FAs.at(i, c);
    require(integer_solve(At, b, x), Err::NonIntertwining,
            "matrix does not send relations into relations");
    for (int i = 0; i < At.cols; ++i) f1.at(i, c) = x[i];
  }

  // cone complex Z^rs -> Z^(source gens) + Z^rt -> Z^(target gens) in
  // degrees -2, -1, 0 with differentials (-As; f1) and [matrix | At]
  IMat d_low(f.source.gens + At.cols, As.cols);
  for (int i = 0; i < f.source.gens; ++i)
    for (int c = 0; c < As.cols; ++c) d_low.at(i, c) = -As.at(i, c);
  for (int i = 0; i < At.cols; ++i)
    for (int c = 0; c < As.cols; ++c)
      d_low.at(f.source.gens + i, c) = f1.at(i, c);
  IMat d_high = hstack(f.matrix, At);

  // H^-2 = 0 because As is injective; the two interesting degrees remain
  IMat K = integer_kernel(d_high);
  AbGroup h_minus1 = lattice_quotient(hstack(K, d_low), d_low);
  AbGroup h0 = group_from_presentation(f.target.gens, d_high);
  std::vector<std::pair<long long, AbGroup>> out;
  if (!h_minus1.is_zero()) out.push_back({-1, h_minus1});
  if (!h0.is_zero()) out.push_back({0, h0});
  return out;
}

std::string SelftestResult::str() const {
  std::string s = suite + ": " + std::to_string(cases) + " cases, ";
  s += failures == 0 ? "all agree" : std::to_string(failures) + " failures";
  for (auto& n : notes) s += "\n    " + n;
  return s;
}

namespace {

void mismatch(SelftestResult& r, std::string detail) {
  ++r.failures;
  if (r.notes.size() < 5) r.notes.push_back(std::move(detail));
}

std::vector<Indecomposable> z_catalog() {
  std::vector<Indecomposable> v{Indecomposable::z_free()};
  for (long long p : {2, 3, 5})
    for (int k : {1, 2}) v.push_back(Indecomposable::z_torsion(p, k));
  return v;
}

std::string z_name(const std::vector<Indecomposable>& mods) {
  if (mods.empty()) return "0";
  std::string s;
  for (auto& m : mods) {
    if (!s.empty()) s += "+";
    s += m.kind == IndKind::ZFree ? "Z" : "Z/" + std::to_string(ppow(m.p, m.k));
  }
  return s;
}

// catalog expectation for a sum, by additivity in both arguments
std::pair<AbGroup, AbGroup> catalog_hom_ext(const RingDescriptor& ring,
                                            const std::vector<Indecomposable>& xs,
                                            const std::vector<Indecomposable>& ys) {
  AbGroup hom, ext;
  for (auto& x : xs)
    for (auto& y : ys) {
      HomExtRecord rec = hom_invariants(ring, x, y);
      hom = ab_direct_sum(hom, rec.hom_group);
      ext = ab_direct_sum(ext, rec.ext_group);
    }
  return {hom, ext};
}

SelftestResult selftest_z_hom_ext(const OracleConfig& cfg) {
  SelftestResult r;
  r.suite = "abelian hom/ext: catalog formulas vs smith route";
  RingDescriptor Z = RingDescriptor::integers();
  auto cat = z_catalog();
  std::vector<std::vector<Indecomposable>> lists;
  for (auto& x : cat) lists.push_back({x});
  lists.push_back({Indecomposable::z_free(), Indecomposable::z_torsion(2, 2)});
  lists.push_back({Indecomposable::z_torsion(2, 1), Indecomposable::z_torsion(3, 1)});
  lists.push_back({Indecomposable::z_torsion(2, 2), Indecomposable::z_torsion(2, 1)});
  for (auto& xs : lists)
    for (auto& ys : lists) {
      ++r.cases;
      auto expected = catalog_hom_ext(Z, xs, ys);
      auto got = snf_hom_ext(cfg, ZPresentation::of_modules(xs),
                             ZPresentation::of_modules(ys));
      if (got.first != expected.first)
        mismatch(r, "Hom(" + z_name(xs) + ", " + z_name(ys) + "): catalog " +
                        expected.first.str() + " vs smith " + got.first.str());
      if (got.second != expected.second)
        mismatch(r, "Ext(" + z_name(xs) + ", " + z_name(ys) + "): catalog " +
                        expected.second.str() + " vs smith " + got.second.str());
    }
  return r;
}

std::vector<Indecomposable> kron_catalog(const FieldDescriptor& fd,
                                         long long max_dim) {
  std::vector<Indecomposable> v;
  for (long long n = 0; 2 * n + 1 <= max_dim; ++n) {
    v.push_back(Indecomposable::preprojective(n));
    v.push_back(Indecomposable::preinjective(n));
  }
  long long point_count = fd.kind == FieldKind::Finite ? fd.q + 1 : 4;
  for (auto& pt : first_points(fd, point_count))
    for (long long l = 1; l <= 2 && 2 * l <= max_dim; ++l)
      v.push_back(Indecomposable::regular(pt, l));
  return v;
}

SelftestResult selftest_intertwiners(const OracleConfig& cfg,
                                     const RingDescriptor& ring) {
  SelftestResult r;
  r.suite = "kronecker hom/ext over " + ring.field.str() +
            ": catalog formulas vs intertwining systems";
  auto cat = kron_catalog(ring.field, cfg.max_total_dimension);
  for (auto& x : cat)
    for (auto& y : cat) {
      ++r.cases;
      HomExtRecord rec = hom_invariants(ring, x, y);
      auto got = intertwiner_dims(cfg, ring, x, y);
      if (got.first != rec.hom_dim || got.second != rec.ext_dim)
        mismatch(r, "(" + x.str() + ", " + y.str() + "): catalog (" +
                        std::to_string(rec.hom_dim) + ", " +
                        std::to_string(rec.ext_dim) + ") vs system (" +
                        std::to_string(got.first) + ", " +
                        std::to_string(got.second) + ")");
    }
  return r;
}

AbGroup group_of_summands(const std::vector<Indecomposable>& mods) {
  AbGroup g;
  for (auto& m : mods) {
    AbGroup piece;
    if (m.kind == IndKind::ZFree)
      piece.free_rank = 1;
    else
      piece.torsion.push_back(ppow(m.p, m.k));
    g = ab_direct_sum(g, piece);
  }
  return g;
}

std::map<long long, AbGroup> by_degree(const SplitObject& x) {
  std::map<long long, AbGroup> out;
  for (auto& [d, m] : x.summands) {
    auto one = group_of_summands({m});
    auto it = out.find(d);
    if (it == out.end())
      out[d] = one;
    else
      it->second = ab_direct_sum(it->second, one);
  }
  return out;
}

std::string graded_str(const std::map<long long, AbGroup>& g) {
  if (g.empty()) return "0";
  std::string s;
  for (auto& [d, grp] : g) {
    if (!s.empty()) s += ", ";
    s += "H^" + std::to_string(d) + " = " + grp.str();
  }
  return s;
}

// scalars t for which t * (gen of x) is a well defined image in y
std::vector<long long> valid_scalars(const Indecomposable& x,
                                     const Indecomposable& y) {
  long long ann_s = x.kind == IndKind::ZTorsion ? ppow(x.p, x.k) : 0;
  long long ann_t = y.kind == IndKind::ZTorsion ? ppow(y.p, y.k) : 0;
  std::vector<long long> out;
  if (ann_t == 0) {
    if (ann_s == 0) return {0, 1, 2, 6, -3};
    return {0};
  }
  if (ann_s == 0) {
    out = {0, 1, ann_t / y.p};
  } else {
    for (long long t = 0; t < ann_t; ++t)
      if (checked_mul(t, ann_s) % ann_t == 0) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_cone_case(const OracleConfig& cfg, SelftestResult& r,
                     const RingDescriptor& Z,
                     const std::vector<Indecomposable>& xs,
                     const std::vector<Indecomposable>& ys, const IMat& mat) {
  ++r.cases;
  SplitObject cone = cone_of_module_map(ModuleMap::z_map(Z, xs, ys, mat));
  auto expected = by_degree(cone);
  auto listed = mapping_cone_homology(
      cfg, ZMapPresentation::of(ZPresentation::of_modules(xs),
                                ZPresentation::of_modules(ys), mat));
  std::map<long long, AbGroup> got(listed.begin(), listed.end());
  if (got != expected)
    mismatch(r, z_name(xs) + " -> " + z_name(ys) + ": catalog cone " +
                    graded_str(expected) + " vs literal cone " +
                    graded_str(got));
}

SelftestResult selftest_cones(const OracleConfig& cfg) {
  SelftestResult r;
  r.suite = "module map cones: catalog route vs literal cone homology";
  RingDescriptor Z = RingDescriptor::integers();
  auto cat = z_catalog();
  for (auto& x : cat)
    for (auto& y : cat)
      for (long long t : valid_scalars(x, y)) {
        IMat m(1, 1);
        m.at(0, 0) = t;
        check_cone_case(cfg, r, Z, {x}, {y}, m);
      }
  // a few honest matrix cases
  {
    IMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    check_cone_case(cfg, r, Z, {Indecomposable::z_free(), Indecomposable::z_free()},
                    {Indecomposable::z_free(), Indecomposable::z_free()}, m);
  }
  {
    IMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 3;
    m.at(1, 1) = 2;
    check_cone_case(cfg, r, Z, {Indecomposable::z_free(), Indecomposable::z_torsion(2, 2)},
                    {Indecomposable::z_torsion(2, 1), Indecomposable::z_torsion(2, 3)}, m);
  }
  {
    IMat m(2, 1);
    m.at(0, 0) = 1;
    m.at(1, 0) = 2;
    check_cone_case(cfg, r, Z, {Indecomposable::z_free()},
                    {Indecomposable::z_free(), Indecomposable::z_torsion(3, 1)}, m);
  }
  return r;
}

}  // namespace

std::vector<SelftestResult> oracle_selftest(const OracleConfig& cfg) {
  std::vector<SelftestResult> out;
  out.push_back(selftest_z_hom_ext(cfg));
  out.push_back(selftest_intertwiners(
      cfg, RingDescriptor::kronecker(FieldDescriptor::rational())));
  out.push_back(
      selftest_intertwiners(cfg, RingDescriptor::kronecker(cfg.field_for_enumeration)));
  out.push_back(selftest_cones(cfg));
  return out;
}

}  // namespace metcomp
