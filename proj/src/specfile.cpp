#include "metcomp/specfile.hpp"

#include <fstream>
#include <sstream>

namespace metcomp {

namespace {

struct Tok {
  std::string s;
  int col = 1;
};

struct Line {
  long long no = 0;
  std::vector<Tok> toks;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  long long no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    Line ln;
    ln.no = no;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace((unsigned char)raw[i])) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < raw.size() && !std::isspace((unsigned char)raw[j])) ++j;
      ln.toks.push_back({raw.substr(i, j - i), (int)i + 1});
      i = j;
    }
    if (!ln.toks.empty()) out.push_back(std::move(ln));
  }
  return out;
}

[[noreturn]] void perr(long long line, int col, const std::string& rule,
                       const std::string& detail) {
  raise(Err::ParseError, "line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + rule + ": " + detail);
}

// cursor over one line's tokens
struct Cur {
  const Line* ln;
  std::string rule;
  size_t i = 1;  // the keyword was consumed by the dispatcher

  bool done() const { return i >= ln->toks.size(); }
  int end_col() const {
    return ln->toks.empty() ? 1
                            : ln->toks.back().col + (int)ln->toks.back().s.size();
  }
  const Tok& next(const std::string& what) {
    if (done()) perr(ln->no, end_col(), rule, "expected " + what);
    return ln->toks[i++];
  }
  const Tok& peek() const {
    static Tok empty;
    return done() ? empty : ln->toks[i];
  }
  void expect_end() {
    if (!done())
      perr(ln->no, ln->toks[i].col, rule,
           "unexpected trailing token '" + ln->toks[i].s + "'");
  }
  [[noreturn]] void fail(const Tok& t, const std::string& detail) {
    perr(ln->no, t.col, rule, detail);
  }
};

long long to_int(Cur& c, const Tok& t) {
  try {
    size_t used = 0;
    long long v = std::stoll(t.s, &used);
    if (used != t.s.size()) throw std::invalid_argument(t.s);
    return v;
  } catch (const std::exception&) {
    c.fail(t, "'" + t.s + "' is not an integer");
  }
}

long long int_arg(Cur& c, const std::string& what) {
  return to_int(c, c.next(what));
}

Rat to_rat(Cur& c, const Tok& t) {
  auto slash = t.s.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      long long n = std::stoll(t.s, &used);
      if (used != t.s.size()) throw std::invalid_argument(t.s);
      return Rat(n);
    }
    size_t u1 = 0, u2 = 0;
    long long n = std::stoll(t.s.substr(0, slash), &u1);
    long long d = std::stoll(t.s.substr(slash + 1), &u2);
    if (u1 != slash || u2 != t.s.size() - slash - 1 || d == 0)
      throw std::invalid_argument(t.s);
    return Rat(n, d);
  } catch (const std::exception&) {
    c.fail(t, "'" + t.s + "' is not a rational number");
  }
}

ProjPoint point_arg(Cur& c, const FieldDescriptor& f, const Tok& t) {
  const std::string& s = t.s;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    auto colon = s.find(':');
    if (colon == std::string::npos) c.fail(t, "point needs the form (a:b)");
    std::string a = s.substr(1, colon - 1);
    std::string b = s.substr(colon + 1, s.size() - colon - 2);
    if (a == "0") {
      if (b == "0") c.fail(t, "(0:0) is not a projective point");
      return ProjPoint::zero_one();
    }
    if (a != "1")
      c.fail(t, "points are written in normal form (0:1) or (1:c)");
    switch (f.kind) {
      case FieldKind::Rational: {
        Tok bt{b, t.col + (int)colon + 1};
        return ProjPoint::rat(to_rat(c, bt));
      }
      case FieldKind::Finite: {
        Tok bt{b, t.col + (int)colon + 1};
        long long v = to_int(c, bt);
        if (v < 0 || v >= f.q)
          c.fail(t, "coordinate " + b + " is outside F" + std::to_string(f.q));
        return ProjPoint::gf(v);
      }
      case FieldKind::SymbolicUncountable:
        c.fail(t, "symbolic points are bare labels, not coordinates");
    }
  }
  if (f.kind == FieldKind::SymbolicUncountable) return ProjPoint::labeled(s);
  c.fail(t, "'" + s + "' is not a point of the projective line");
}

Indecomposable module_arg(Cur& c, const RingDescriptor& ring, const Tok& t) {
  const std::string& s = t.s;
  if (ring.is_integerish()) {
    if (s == "Z") return Indecomposable::z_free();
    if (s.rfind("Z/", 0) == 0) {
      Tok mt{s.substr(2), t.col + 2};
      long long m = to_int(c, mt);
      if (m < 2) c.fail(t, "Z/" + mt.s + " is not a torsion module");
      long long p = 2;
      while (m % p != 0) ++p;
      int k = 0;
      long long rest = m;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (rest != 1)
        c.fail(t, "Z/" + mt.s + " is not a prime power; list the summands");
      return Indecomposable::z_torsion(p, k);
    }
    c.fail(t, "'" + s + "' is not a Z-module name (Z or Z/p^k)");
  }
  if (ring.kind == RingKind::Kronecker) {
    if ((s[0] == 'P' || s[0] == 'Q') && s.size() > 1) {
      Tok nt{s.substr(1), t.col + 1};
      long long n = to_int(c, nt);
      return s[0] == 'P' ? Indecomposable::preprojective(n)
                         : Indecomposable::preinjective(n);
    }
    if (s.rfind("R(", 0) == 0 && s.back() == ')') {
      auto comma = s.rfind(',');
      if (comma == std::string::npos || comma < 2)
        c.fail(t, "regular modules are written R(point,length)");
      Tok pt{s.substr(2, comma - 2), t.col + 2};
      Tok lt{s.substr(comma + 1, s.size() - comma - 2), t.col + (int)comma + 1};
      ProjPoint p = point_arg(c, ring.field, pt);
      return Indecomposable::regular(p, to_int(c, lt));
    }
    c.fail(t, "'" + s + "' is not a Kronecker module name (Pn, Qn, R(pt,len))");
  }
  // DynkinAn: interval [a,b]
  if (s.size() >= 5 && s.front() == '[' && s.back() == ']') {
    auto comma = s.find(',');
    if (comma != std::string::npos) {
      Tok at{s.substr(1, comma - 1), t.col + 1};
      Tok bt{s.substr(comma + 1, s.size() - comma - 2), t.col + (int)comma + 1};
      return Indecomposable::interval((int)to_int(c, at), (int)to_int(c, bt));
    }
  }
  c.fail(t, "'" + s + "' is not an interval module name [a,b]");
}

FieldDescriptor field_arg(Cur& c, const Tok& t) {
  if (t.s == "rational") return FieldDescriptor::rational();
  if (t.s == "symbolic") return FieldDescriptor::symbolic();
  if (t.s[0] == 'F' && t.s.size() > 1) {
    Tok qt{t.s.substr(1), t.col + 1};
    return FieldDescriptor::finite(to_int(c, qt));
  }
  c.fail(t, "'" + t.s + "' is not a field (rational, symbolic, F<q>)");
}

RingDescriptor ring_stmt(Cur& c) {
  const Tok& t = c.next("a ring form");
  if (t.s == "Z") {
    c.expect_end();
    return RingDescriptor::integers();
  }
  if (t.s == "Q") {
    c.expect_end();
    return RingDescriptor::localized(PrimeSet::all());
  }
  if (t.s.rfind("Z[1/", 0) == 0 && t.s.back() == ']') {
    std::string inner = t.s.substr(4, t.s.size() - 5);
    std::set<long long> ps;
    size_t i = 0;
    while (i <= inner.size()) {
      auto comma = inner.find(',', i);
      if (comma == std::string::npos) comma = inner.size();
      Tok pt{inner.substr(i, comma - i), t.col + 4 + (int)i};
      ps.insert(to_int(c, pt));
      i = comma + 1;
    }
    c.expect_end();
    return RingDescriptor::localized(PrimeSet::finite(ps));
  }
  if (t.s == "kronecker") {
    FieldDescriptor f = field_arg(c, c.next("a field"));
    c.expect_end();
    return RingDescriptor::kronecker(f);
  }
  if (t.s == "an") {
    long long n = int_arg(c, "the number of vertices");
    FieldDescriptor f = FieldDescriptor::rational();
    if (!c.done()) f = field_arg(c, c.next("a field"));
    c.expect_end();
    return RingDescriptor::dynkin((int)n, f);
  }
  c.fail(t, "'" + t.s + "' is not a ring (Z, Q, Z[1/..], kronecker, an)");
}

ThickDescriptor thick_expr(Cur& c, const RingDescriptor& ring) {
  const Tok& t = c.next("a thick subcategory form");
  if (t.s == "zero") return ThickDescriptor::zero(ring);
  if (t.s == "all") return ThickDescriptor::all(ring);
  if (t.s == "torsion") {
    const Tok& u = c.next("a prime list, 'all', or 'tail N'");
    if (u.s == "all") {
      if (c.done()) return ThickDescriptor::torsion(ring, PrimeSet::all());
      const Tok& v = c.next("'except'");
      if (v.s != "except") c.fail(v, "expected 'except' after 'torsion all'");
      std::set<long long> ps;
      while (!c.done()) ps.insert(int_arg(c, "a prime"));
      if (ps.empty()) c.fail(v, "'except' needs at least one prime");
      return ThickDescriptor::torsion(ring, PrimeSet::finite(ps).complement());
    }
    if (u.s == "tail") {
      long long from = int_arg(c, "the smallest prime");
      return ThickDescriptor::torsion(ring, PrimeSet::tail(from));
    }
    std::set<long long> ps{to_int(c, u)};
    while (!c.done()) ps.insert(int_arg(c, "a prime"));
    return ThickDescriptor::torsion(ring, PrimeSet::finite(ps));
  }
  if (t.s == "regular") {
    const Tok& u = c.next("a point list, 'all', or 'tail N'");
    if (u.s == "all") {
      if (c.done())
        return ThickDescriptor::regular_part(ring, PointSet::all(ring.field));
      const Tok& v = c.next("'except'");
      if (v.s != "except") c.fail(v, "expected 'except' after 'regular all'");
      std::set<ProjPoint> pts;
      while (!c.done()) pts.insert(point_arg(c, ring.field, c.next("a point")));
      if (pts.empty()) c.fail(v, "'except' needs at least one point");
      return ThickDescriptor::regular_part(ring,
                                           PointSet::cofinite(ring.field, pts));
    }
    if (u.s == "tail") {
      long long from = int_arg(c, "the first enumeration index");
      std::set<ProjPoint> extra;
      if (!c.done()) {
        const Tok& v = c.next("'plus'");
        if (v.s != "plus") c.fail(v, "expected 'plus' before extra points");
        while (!c.done()) extra.insert(point_arg(c, ring.field, c.next("a point")));
      }
      return ThickDescriptor::regular_part(
          ring, PointSet::tail_union(ring.field, extra, from));
    }
    std::set<ProjPoint> pts{point_arg(c, ring.field, u)};
    while (!c.done()) pts.insert(point_arg(c, ring.field, c.next("a point")));
    return ThickDescriptor::regular_part(ring,
                                         PointSet::finite(ring.field, pts));
  }
  if (t.s == "exceptional") {
    std::vector<Indecomposable> seq;
    while (!c.done()) seq.push_back(module_arg(c, ring, c.next("a module")));
    if (seq.empty()) c.fail(t, "'exceptional' needs a generator");
    return ThickDescriptor::exceptional(ring, seq);
  }
  if (t.s == "intervals") {
    std::vector<Indecomposable> gens;
    while (!c.done()) gens.push_back(module_arg(c, ring, c.next("an interval")));
    if (gens.empty()) c.fail(t, "'intervals' needs at least one interval");
    return ThickDescriptor::interval_closure(ring, gens);
  }
  c.fail(t, "'" + t.s +
                "' is not a thick form (zero, all, torsion, regular, "
                "exceptional, intervals)");
}

}  // namespace

const ThickDescriptor* SpecFile::thick(const std::string& name) const {
  for (auto& [n, c] : thicks)
    if (n == name) return &c;
  return nullptr;
}

const MetricNF* SpecFile::metric(const std::string& name) const {
  for (auto& [n, m] : metrics)
    if (n == name) return &m;
  return nullptr;
}

namespace {

// a named thick, or an inline expression
ThickDescriptor thick_ref(Cur& c, const SpecFile& f) {
  if (!c.done()) {
    if (const ThickDescriptor* named = f.thick(c.peek().s)) {
      c.next("a name");
      return *named;
    }
  }
  return thick_expr(c, f.ring);
}

ChainSchedule chain_expr(Cur& c, const SpecFile& f) {
  const Tok& t = c.next("a chain form");
  if (t.s == "constant") {
    ThickDescriptor d = thick_ref(c, f);
    c.expect_end();
    return ChainSchedule::constant(d);
  }
  if (t.s == "prime_tail" || t.s == "tube_tail") {
    long long step = 1, offset = 0;
    PrimeSet extra = PrimeSet::none();
    while (!c.done()) {
      const Tok& u = c.next("an option");
      if (u.s == "step")
        step = int_arg(c, "the step");
      else if (u.s == "offset")
        offset = int_arg(c, "the offset");
      else if (u.s == "plus" && t.s == "prime_tail") {
        std::set<long long> ps;
        while (!c.done()) ps.insert(int_arg(c, "a prime"));
        extra = PrimeSet::finite(ps);
      } else
        c.fail(u, "unknown chain option '" + u.s + "'");
    }
    return t.s == "prime_tail"
               ? ChainSchedule::prime_tail(f.ring, step, offset, extra)
               : ChainSchedule::tube_tail(f.ring, step, offset);
  }
  if (t.s == "prefix") {
    std::vector<ThickDescriptor> pre;
    while (!c.done() && c.peek().s != "then") {
      const Tok& u = c.next("a thick name");
      const ThickDescriptor* named = f.thick(u.s);
      if (!named) c.fail(u, "prefix entries must name declared thicks");
      pre.push_back(*named);
    }
    const Tok& v = c.next("'then'");
    if (v.s != "then") c.fail(v, "expected 'then' after the prefix");
    ThickDescriptor tail = thick_ref(c, f);
    c.expect_end();
    return ChainSchedule::prefix_then_constant(std::move(pre), tail);
  }
  c.fail(t, "'" + t.s +
                "' is not a chain form (constant, prime_tail, tube_tail, "
                "prefix)");
}

EdgeSchedule edge_shorthand(Cur& c, bool low, const Tok& t) {
  if (t.s == "*") return EdgeSchedule::unbounded(low);
  return EdgeSchedule::arithmetic(low, to_int(c, t), 1);
}

// consumes lines [i+1 ..] until 'end'; returns the index of 'end'
size_t metric_block(const std::vector<Line>& lines, size_t i, SpecFile& f,
                    const std::string& name) {
  EdgeSchedule low = EdgeSchedule::unbounded(true);
  EdgeSchedule high = EdgeSchedule::unbounded(false);
  std::optional<ChainSchedule> chain, down, up, inner;
  for (++i; i < lines.size(); ++i) {
    Cur c{&lines[i], "metric block '" + name + "'"};
    const std::string& kw = lines[i].toks[0].s;
    if (kw == "end") {
      c.expect_end();
      bool full = down || up || inner;
      if (chain && full)
        perr(lines[i].no, 1, c.rule,
             "give either one 'chain' or all of down/up/inner");
      if (full) {
        if (!(down && up && inner))
          perr(lines[i].no, 1, c.rule,
               "the full form needs all three of down, up, inner");
        f.metrics.emplace_back(name,
                               mk_nf_full(f.ring, low, high, *down, *up, *inner));
      } else {
        if (!chain)
          perr(lines[i].no, 1, c.rule, "missing the 'chain' clause");
        f.metrics.emplace_back(name, mk_nf(f.ring, low, high, *chain));
      }
      return i;
    }
    if (kw == "window") {
      const Tok& u = c.next("an edge");
      if (u.s == "low" || u.s == "high") {
        std::vector<long long> vals;
        long long step = 1;
        while (!c.done()) {
          if (c.peek().s == "step") {
            c.next("step");
            step = int_arg(c, "the step");
            break;
          }
          vals.push_back(int_arg(c, "an edge value"));
        }
        c.expect_end();
        if (vals.empty()) perr(lines[i].no, u.col, c.rule, "empty edge list");
        EdgeSchedule e = EdgeSchedule::stepped(u.s == "low", vals, step);
        (u.s == "low" ? low : high) = e;
      } else {
        EdgeSchedule l = edge_shorthand(c, true, u);
        EdgeSchedule h = edge_shorthand(c, false, c.next("the high edge"));
        c.expect_end();
        low = l;
        high = h;
      }
    } else if (kw == "chain") {
      chain = chain_expr(c, f);
    } else if (kw == "down") {
      down = chain_expr(c, f);
    } else if (kw == "up") {
      up = chain_expr(c, f);
    } else if (kw == "inner") {
      inner = chain_expr(c, f);
    } else {
      c.fail(lines[i].toks[0], "unknown clause '" + kw + "' in a metric block");
    }
  }
  perr(lines.back().no, 1, "metric block '" + name + "'",
       "missing 'end' before end of file");
}

size_t cauchy_block(const std::vector<Line>& lines, size_t i, SpecFile& f) {
  CauchySpec spec;
  bool have_target = false, have_start = false;
  for (++i; i < lines.size(); ++i) {
    Cur c{&lines[i], "cauchy block"};
    const std::string& kw = lines[i].toks[0].s;
    if (kw == "end") {
      c.expect_end();
      if (!have_target) perr(lines[i].no, 1, c.rule, "missing 'target'");
      if (!have_start) perr(lines[i].no, 1, c.rule, "missing 'start'");
      f.cauchy = std::move(spec);
      return i;
    }
    if (kw == "target") {
      spec.target = thick_ref(c, f);
      c.expect_end();
      have_target = true;
    } else if (kw == "start") {
      const Tok& u = c.next("a start object");
      if (u.s == "zero") {
        spec.start = SplitObject::zero(f.ring);
      } else if (u.s == "free") {
        long long rank = int_arg(c, "the rank");
        if (rank < 1) c.fail(u, "the free rank must be >= 1");
        std::vector<Indecomposable> mods((size_t)rank,
                                         Indecomposable::z_free());
        spec.start = SplitObject::concentrated(f.ring, std::move(mods));
      } else {
        std::vector<Indecomposable> mods{module_arg(c, f.ring, u)};
        while (!c.done()) mods.push_back(module_arg(c, f.ring, c.next("a module")));
        spec.start = SplitObject::concentrated(f.ring, std::move(mods));
      }
      c.expect_end();
      have_start = true;
    } else if (kw == "steps") {
      spec.steps = int_arg(c, "the step count");
      if (spec.steps < 1)
        c.fail(lines[i].toks[0], "the step count must be >= 1");
      c.expect_end();
    } else if (kw == "against") {
      const Tok& u = c.next("a metric name");
      if (!f.metric(u.s))
        c.fail(u, "'" + u.s + "' does not name a declared metric");
      spec.against = u.s;
      c.expect_end();
    } else {
      c.fail(lines[i].toks[0], "unknown clause '" + kw + "' in a cauchy block");
    }
  }
  perr(lines.back().no, 1, "cauchy block", "missing 'end' before end of file");
}

}  // namespace

SpecFile parse_specfile(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  SpecFile f;
  bool have_ring = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    const Line& ln = lines[i];
    const std::string& kw = ln.toks[0].s;
    Cur c{&ln, kw + " statement"};
    try {
    if (kw == "ring") {
      if (have_ring) c.fail(ln.toks[0], "the ring is already declared");
      f.ring = ring_stmt(c);
      have_ring = true;
      continue;
    }
    if (!have_ring)
      c.fail(ln.toks[0], "the ring must be declared before '" + kw + "'");
    if (kw == "thick") {
      const Tok& name = c.next("a name");
      if (f.thick(name.s))
        c.fail(name, "thick '" + name.s + "' is already declared");
      f.thicks.emplace_back(name.s, thick_expr(c, f.ring));
      c.expect_end();
    } else if (kw == "metric") {
      const Tok& name = c.next("a name");
      if (f.metric(name.s))
        c.fail(name, "metric '" + name.s + "' is already declared");
      const Tok& kind = c.next("a metric kind");
      if (kind.s == "constant") {
        f.metrics.emplace_back(name.s, mk_constant(thick_ref(c, f)));
        c.expect_end();
      } else if (kind.s == "aisle") {
        c.expect_end();
        f.metrics.emplace_back(name.s, mk_aisle(f.ring));
      } else if (kind.s == "coaisle") {
        c.expect_end();
        f.metrics.emplace_back(name.s, mk_coaisle(f.ring));
      } else if (kind.s == "t_structure") {
        c.expect_end();
        f.metrics.emplace_back(name.s, mk_t_structure(f.ring));
      } else if (kind.s == "nf") {
        c.expect_end();
        i = metric_block(lines, i, f, name.s);
      } else {
        c.fail(kind, "'" + kind.s +
                         "' is not a metric kind (constant, aisle, coaisle, "
                         "t_structure, nf)");
      }
    } else if (kw == "cauchy") {
      c.expect_end();
      if (f.cauchy)
        c.fail(ln.toks[0], "the cauchy block is already declared");
      i = cauchy_block(lines, i, f);
    } else if (kw == "query") {
      Query q;
      q.line = ln.no;
      const Tok& op = c.next("a query kind");
      auto metric_name = [&]() {
        const Tok& u = c.next("a metric name");
        if (!f.metric(u.s))
          c.fail(u, "'" + u.s + "' does not name a declared metric");
        return u.s;
      };
      if (op.s == "classify") {
        q.kind = Query::Kind::Classify;
        q.metric_args.push_back(metric_name());
      } else if (op.s == "leq" || op.s == "meet" || op.s == "join") {
        q.kind = op.s == "leq" ? Query::Kind::Leq
                 : op.s == "meet" ? Query::Kind::Meet
                                  : Query::Kind::Join;
        q.metric_args.push_back(metric_name());
        q.metric_args.push_back(metric_name());
      } else if (op.s == "hom") {
        q.kind = Query::Kind::Hom;
        q.modules.push_back(module_arg(c, f.ring, c.next("a module")));
        q.modules.push_back(module_arg(c, f.ring, c.next("a module")));
      } else if (op.s == "cone") {
        q.kind = Query::Kind::Cone;
        q.modules.push_back(module_arg(c, f.ring, c.next("a module")));
        q.scalar = int_arg(c, "the matrix entry");
        q.modules.push_back(module_arg(c, f.ring, c.next("a module")));
      } else {
        c.fail(op, "'" + op.s +
                       "' is not a query kind (classify, leq, meet, join, "
                       "hom, cone)");
      }
      c.expect_end();
      f.queries.push_back(std::move(q));
    } else {
      c.fail(ln.toks[0], "unknown statement '" + kw + "'");
    }
    } catch (const MathError& e) {
      // library validation (bad windows, non-primes, ...) counts as a file
      // problem; keep the line attached
      if (e.code() == Err::ParseError) throw;
      perr(ln.no, 1, c.rule, e.what());
    }
  }
  require(have_ring, Err::ParseError,
          "line 1, col 1: ring statement: the file declares no ring");
  return f;
}

SpecFile load_specfile(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ParseError, "cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_specfile(buf.str());
}

Indecomposable parse_module_name(const RingDescriptor& ring,
                                 const std::string& tok) {
  Line ln{1, {{tok, 1}}};
  Cur c{&ln, "module name"};
  c.i = 0;
  return module_arg(c, ring, c.next("a module"));
}

ProjPoint parse_point(const FieldDescriptor& f, const std::string& tok) {
  Line ln{1, {{tok, 1}}};
  Cur c{&ln, "point name"};
  c.i = 0;
  return point_arg(c, f, c.next("a point"));
}

}  // namespace metcomp
