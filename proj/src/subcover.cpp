#include "noet/subcover.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "noet/kernels.hpp"

namespace noet {

int Region::degree() const {
  switch (kind) {
    case Kind::RootLocus:
    case Kind::Curve:
    case Kind::Fiber:
      return std::max(locus.total_degree(), 0);
    case Kind::ZeroDim:
      return std::max(locus.total_degree(), 0) + std::max(second.total_degree(), 0);
    case Kind::Point:
      return 1;
  }
  return 0;
}

std::string Region::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::RootLocus:
      os << "roots of " << locus.to_string();
      break;
    case Kind::Curve:
      os << "curve " << locus.to_string();
      break;
    case Kind::ZeroDim:
      os << "zero-dim " << locus.to_string() << " ; " << second.to_string();
      break;
    case Kind::Fiber:
      os << "fiber " << fixed_var << " = " << fixed_value.to_string() << ", roots of "
         << locus.to_string();
      break;
    case Kind::Point: {
      os << "point";
      for (const auto& [v, c] : point) os << " " << v << " = " << c.to_string();
      break;
    }
  }
  return os.str();
}

namespace {

// Full squarefree generator of the vanishing locus of q (<= 2 variables):
// squarefree content times squarefree primitive part.
Poly squarefree_locus(const Poly& q) {
  if (q.vars().size() <= 1) {
    Poly s = squarefree_part(q, q.vars().empty() ? "x" : q.vars()[0]);
    return q.vars().empty() ? s : monic_univariate(s);
  }
  const std::string mv = q.vars()[0];
  Poly cont = content_in(q, mv);
  auto pp = exact_quotient(q, cont);
  if (!pp) fail("ZeroDivisor", "content does not divide its polynomial");
  Poly sfc = cont.is_constant() ? Poly::constant(Rational(1))
                                : squarefree_part(cont, cont.vars()[0]);
  Poly sfp = squarefree_part(*pp, mv);
  return integer_normalized(sfc * sfp);
}

struct LocusSplit {
  Poly covered;
  Poly remainder;
};

// One splitting step on a squarefree univariate locus u: the part of u
// where every p vanishes and no q vanishes is covered; the rest is
// re-enqueued. Returns nothing when the piece makes no strict progress.
std::optional<LocusSplit> apply_piece_to_locus(const Poly& u, const std::vector<Poly>& P,
                                               const std::vector<Poly>& Q) {
  Poly u1 = u;
  for (const auto& p : P) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return std::nullopt;  // piece is empty
    u1 = gcd_univariate(u1, p);
    if (u1.total_degree() < 1) return std::nullopt;
  }
  Poly qprod = Poly::constant(Rational(1));
  for (const auto& q : Q) {
    if (q.is_zero()) return std::nullopt;  // piece is empty
    if (q.is_constant()) continue;
    qprod = qprod * q;
  }
  Poly d = qprod.is_constant() ? Poly::constant(Rational(1)) : gcd_univariate(u1, qprod);
  auto covered = exact_quotient(u1, d);
  if (!covered) fail("ZeroDivisor", "gcd does not divide the locus");
  if (covered->total_degree() < 1) return std::nullopt;
  auto rest = exact_quotient(u, u1);
  if (!rest) fail("ZeroDivisor", "sublocus does not divide the locus");
  Poly remainder = *rest * d;
  return LocusSplit{monic_univariate(*covered),
                    remainder.total_degree() < 1 ? Poly::constant(Rational(1))
                                                 : monic_univariate(remainder)};
}

struct CurveSplit {
  Poly covered;
  Poly remainder;
  std::optional<std::pair<Poly, Poly>> zerodim;  // (covered components, q-product)
};

std::optional<CurveSplit> apply_piece_to_curve(const Poly& g, const PseudoaffineVariety& v,
                                               const std::string& mv) {
  Poly g1 = g;
  for (const auto& p : v.positive) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return std::nullopt;
    g1 = gcd_bivariate(g1, p, mv);
    if (g1.total_degree() < 1) return std::nullopt;
  }
  Poly qprod = Poly::constant(Rational(1));
  for (const auto& q : v.negated) {
    if (q.is_zero()) return std::nullopt;
    if (q.is_constant()) continue;
    qprod = qprod * q;
  }
  Poly d = qprod.is_constant() ? Poly::constant(Rational(1)) : gcd_bivariate(g1, qprod, mv);
  auto covered = exact_quotient(g1, d);
  if (!covered) fail("ZeroDivisor", "gcd does not divide the curve locus");
  if (covered->total_degree() < 1) return std::nullopt;
  auto rest = exact_quotient(g, g1);
  if (!rest) fail("ZeroDivisor", "subcurve does not divide the curve");
  CurveSplit split;
  split.covered = integer_normalized(*covered);
  Poly remainder = *rest * d;
  split.remainder = remainder.total_degree() < 1 ? Poly::constant(Rational(1))
                                                 : integer_normalized(remainder);
  if (!qprod.is_constant())
    split.zerodim = std::make_pair(split.covered, integer_normalized(qprod));
  return split;
}

struct Descent {
  const CoverFamily& family;
  size_t n;
  uint64_t scan_limit;
  SubcoverReport rep;
  std::deque<Region> regions;
  std::set<uint64_t> used;

  explicit Descent(const CoverFamily& fam, size_t dim, uint64_t limit)
      : family(fam), n(dim), scan_limit(limit) {
    rep.dimension = dim;
    rep.scan_limit = limit;
  }

  void use_piece(const CoverProvenance& prov) {
    if (prov.kind == CoverProvenance::Kind::Goal)
      rep.goal_used = true;
    else
      used.insert(prov.premise_index);
  }

  void add_trace(const std::string& region, const CoverProvenance& prov, int before, int after) {
    TraceStep step;
    step.region = region;
    step.candidate_is_goal = prov.kind == CoverProvenance::Kind::Goal;
    if (!step.candidate_is_goal) step.candidate_index = prov.premise_index;
    step.degree_before = before;
    step.degree_after = after;
    rep.trace.push_back(std::move(step));
  }

  // Deterministic grid hunt for an exactly uncovered rational point
  // among the pieces scanned so far; genuine evidence once the family
  // was exhausted.
  void find_uncovered_example(const std::vector<PseudoaffineVariety>& scanned) {
    static const long nums[] = {0, 1, -1, 2, -2, 3, -3, 5, -5, 7};
    std::vector<std::string> vars = family.ambient();
    if (vars.empty()) vars = {"x"};
    std::vector<Rational> grid;
    for (long v : nums) grid.push_back(Rational(v));
    grid.push_back(Rational::make(1, 2));
    grid.push_back(Rational::make(-1, 2));
    std::vector<size_t> idx(vars.size(), 0);
    while (true) {
      std::map<std::string, Rational> pt;
      for (size_t i = 0; i < vars.size(); ++i) pt[vars[i]] = grid[idx[i]];
      bool covered = false;
      for (const auto& v : scanned)
        if (membership(v, pt)) {
          covered = true;
          break;
        }
      if (!covered) {
        rep.uncovered_example = pt;
        return;
      }
      size_t i = 0;
      while (i < vars.size() && ++idx[i] == grid.size()) idx[i++] = 0;
      if (i == vars.size()) return;
    }
  }

  std::vector<PseudoaffineVariety> scan_all_prefix() {
    std::vector<PseudoaffineVariety> out;
    auto cursor = family.scan();
    for (uint64_t k = 0; k < scan_limit; ++k) {
      auto piece = cursor->next();
      if (!piece) {
        rep.family_exhausted = true;
        break;
      }
      out.push_back(piece->variety);
    }
    return out;
  }

  void fail_region(const Region& r) {
    rep.status = SubcoverReport::Status::NotCoveredWithin;
    rep.detail = "no candidate discharges: " + r.describe();
    auto scanned = scan_all_prefix();
    if (r.kind == Region::Kind::Point) {
      rep.uncovered_example = r.point;
      return;
    }
    find_uncovered_example(scanned);
  }

  void unsupported(const Region& r, const std::string& why) {
    rep.status = SubcoverReport::Status::UnsupportedInstance;
    rep.detail = why + ": " + r.describe();
  }

  // ---- region handlers ----

  bool discharge_locus(Region r) {
    const bool fiber = r.kind == Region::Kind::Fiber;
    Poly u = r.locus;
    while (u.total_degree() >= 1) {
      auto cursor = family.scan();
      bool advanced = false;
      for (uint64_t k = 0; k < scan_limit; ++k) {
        auto piece = cursor->next();
        if (!piece) {
          rep.family_exhausted = true;
          break;
        }
        std::vector<Poly> P, Q;
        if (fiber) {
          for (const auto& p : piece->variety.positive)
            P.push_back(p.substitute(r.fixed_var, r.fixed_value));
          for (const auto& q : piece->variety.negated)
            Q.push_back(q.substitute(r.fixed_var, r.fixed_value));
        } else {
          P = piece->variety.positive;
          Q = piece->variety.negated;
        }
        auto split = apply_piece_to_locus(u, P, Q);
        if (!split) continue;
        Region cur = r;
        cur.locus = u;
        use_piece(piece->prov);
        add_trace(cur.describe(), piece->prov, u.total_degree(), split->remainder.total_degree());
        u = split->remainder;
        advanced = true;
        break;
      }
      if (!advanced) {
        Region cur = r;
        cur.locus = u;
        fail_region(cur);
        return false;
      }
    }
    return true;
  }

  bool discharge_curve(Region r) {
    const std::string mv = family.ambient().empty() ? "x" : family.ambient()[0];
    Poly g = r.locus;
    while (g.total_degree() >= 1) {
      auto cursor = family.scan();
      bool advanced = false;
      for (uint64_t k = 0; k < scan_limit; ++k) {
        auto piece = cursor->next();
        if (!piece) {
          rep.family_exhausted = true;
          break;
        }
        auto split = apply_piece_to_curve(g, piece->variety, mv);
        if (!split) continue;
        Region cur = r;
        cur.locus = g;
        use_piece(piece->prov);
        add_trace(cur.describe(), piece->prov, g.total_degree(), split->remainder.total_degree());
        if (split->zerodim)
          regions.push_back(Region{Region::Kind::ZeroDim, split->zerodim->first,
                                   split->zerodim->second, "", Rational(0), "", {}});
        g = split->remainder;
        advanced = true;
        break;
      }
      if (!advanced) {
        Region cur = r;
        cur.locus = g;
        fail_region(cur);
        return false;
      }
    }
    return true;
  }

  // Coordinate elimination of a zero-dimensional leftover into fibers
  // over rational coordinates; the rest is out of the splitting scheme's
  // reach and reported as unsupported.
  bool resolve_zerodim(const Region& r) {
    const auto& vars = family.ambient();
    if (vars.size() < 2) return true;  // coprime univariate loci never meet
    if (vars.size() > 2) {
      unsupported(r, "zero-dimensional leftover outside a two-variable space");
      return false;
    }
    const std::string x = vars[0], y = vars[1];
    const Poly& g = r.locus;
    const Poly& q = r.second;

    auto project = [&](const std::string& kill, const std::string& keep) -> Poly {
      int dg = g.degree_in(kill), dq = q.degree_in(kill);
      (void)keep;
      if (dg >= 1 && dq >= 1) return resultant(g, q, kill);
      if (dg == 0) return g;
      return q;
    };

    auto strip_rational_roots = [&](const Poly& f, const std::vector<Rational>& roots,
                                    const std::string& var) -> Poly {
      Poly rest = f;
      for (const auto& root : roots) {
        Poly lin = Poly::variable(var) - Poly::constant(root);
        auto quo = exact_quotient(rest, lin);
        if (!quo) fail("ZeroDivisor", "simple root does not divide its locus");
        rest = *quo;
      }
      return rest;
    };

    Poly rx = project(y, x);
    if (rx.is_constant()) return true;  // empty intersection
    rx = monic_univariate(squarefree_part(rx, x));
    auto xroots = rational_roots(rx);
    if (!xroots) {
      unsupported(r, "rational root search gave up on the x-projection");
      return false;
    }
    for (const auto& x0 : *xroots) {
      Poly gy = g.substitute(x, x0);
      Poly qy = q.substitute(x, x0);
      Poly fy = gcd_univariate(gy, qy);
      if (fy.total_degree() < 1) continue;  // no point above this root
      fy = squarefree_part(fy, y);
      // fully rational points are checked by membership; the rest of the
      // fiber goes through the univariate splitting
      auto froots = rational_roots(fy);
      if (!froots) {
        unsupported(r, "rational root search gave up on a fiber locus");
        return false;
      }
      for (const auto& y0 : *froots)
        regions.push_back(Region{Region::Kind::Point, Poly(), Poly(), "", Rational(0), "",
                                 {{x, x0}, {y, y0}}});
      Poly f_irr = strip_rational_roots(fy, *froots, y);
      if (f_irr.total_degree() >= 1)
        regions.push_back(Region{Region::Kind::Fiber, f_irr, Poly(), x, x0, y, {}});
    }
    Poly rx_irr = strip_rational_roots(rx, *xroots, x);
    if (rx_irr.total_degree() < 1) return true;

    // points with irrational x: their y-coordinate must be a root of the
    // y-projection; rational y gives a workable fiber, irrational does not
    Poly ry = project(x, y);
    if (ry.is_constant()) return true;
    ry = monic_univariate(squarefree_part(ry, y));
    auto yroots = rational_roots(ry);
    if (!yroots) {
      unsupported(r, "rational root search gave up on the y-projection");
      return false;
    }
    for (const auto& y0 : *yroots) {
      Poly gx = g.substitute(y, y0);
      Poly qx = q.substitute(y, y0);
      Poly hx = gcd_univariate(gx, qx);
      if (hx.total_degree() < 1) continue;
      hx = squarefree_part(hx, x);
      auto hroots = rational_roots(hx);
      if (!hroots) {
        unsupported(r, "rational root search gave up on a fiber locus");
        return false;
      }
      Poly h_irr = strip_rational_roots(hx, *hroots, x);
      if (h_irr.total_degree() >= 1)
        regions.push_back(Region{Region::Kind::Fiber, h_irr, Poly(), y, y0, x, {}});
    }
    Poly ry_irr = strip_rational_roots(ry, *yroots, y);
    if (ry_irr.total_degree() >= 1) {
      unsupported(r, "leftover points with two irrational coordinates");
      return false;
    }
    return true;
  }

  bool discharge_point(const Region& r) {
    auto cursor = family.scan();
    for (uint64_t k = 0; k < scan_limit; ++k) {
      auto piece = cursor->next();
      if (!piece) {
        rep.family_exhausted = true;
        break;
      }
      if (!membership(piece->variety, r.point)) continue;
      use_piece(piece->prov);
      add_trace(r.describe(), piece->prov, 1, 0);
      return true;
    }
    fail_region(r);
    return false;
  }

  SubcoverReport run() {
    if (n < 1 || n > 2) fail("ArityError", "descent supports dimensions 1 and 2 only");
    if (scan_limit < 1) fail("ArityError", "scan limit must be at least 1");
    if (family.ambient().size() > n)
      fail("DomainMismatch", "family uses more than " + std::to_string(n) + " variables");

    // dense piece search
    auto cursor = family.scan();
    std::optional<CoverPiece> dense;
    std::vector<PseudoaffineVariety> scanned;
    for (uint64_t k = 0; k < scan_limit; ++k) {
      auto piece = cursor->next();
      if (!piece) {
        rep.family_exhausted = true;
        break;
      }
      scanned.push_back(piece->variety);
      if (is_dense_fullspace(piece->variety, n)) {
        dense = piece;
        break;
      }
    }
    if (!dense) {
      rep.status = SubcoverReport::Status::NotCoveredWithin;
      rep.detail = rep.family_exhausted ? "no dense piece in the family"
                                        : "no dense piece within the scan limit";
      find_uncovered_example(scanned);
      return rep;
    }
    use_piece(dense->prov);

    int seeded_degree = 0;
    for (const auto& q : dense->variety.negated) {
      if (q.is_constant()) continue;
      Poly locus = squarefree_locus(q);
      seeded_degree += locus.total_degree();
      regions.push_back(n == 1
                            ? Region{Region::Kind::RootLocus, locus, Poly(), "", Rational(0), "", {}}
                            : Region{Region::Kind::Curve, locus, Poly(), "", Rational(0), "", {}});
    }
    add_trace("full space", dense->prov, 0, seeded_degree);

    while (!regions.empty()) {
      Region r = regions.front();
      regions.pop_front();
      bool ok = true;
      switch (r.kind) {
        case Region::Kind::RootLocus:
        case Region::Kind::Fiber:
          ok = discharge_locus(std::move(r));
          break;
        case Region::Kind::Curve:
          ok = discharge_curve(std::move(r));
          break;
        case Region::Kind::ZeroDim:
          ok = resolve_zerodim(r);
          break;
        case Region::Kind::Point:
          ok = discharge_point(r);
          break;
      }
      if (!ok) return rep;
    }
    rep.status = SubcoverReport::Status::Ok;
    rep.indices.assign(used.begin(), used.end());
    return rep;
  }
};

}  // namespace

SubcoverReport extract_subcover(const CoverFamily& family, size_t n, uint64_t scan_limit) {
  Descent d(family, n, scan_limit);
  SubcoverReport rep = d.run();
  if (rep.status != SubcoverReport::Status::Ok) {
    rep.indices.assign(d.used.begin(), d.used.end());  // partial evidence for diagnosis
  }
  return rep;
}

std::vector<PseudoaffineVariety> collect_pieces(const CoverFamily& family,
                                                const std::vector<uint64_t>& J,
                                                bool include_goal, uint64_t pull_bound) {
  std::set<uint64_t> want(J.begin(), J.end());
  uint64_t maxJ = want.empty() ? 0 : *want.rbegin();
  std::vector<PseudoaffineVariety> out;
  auto cursor = family.scan();
  for (uint64_t k = 0; k < pull_bound; ++k) {
    auto piece = cursor->next();
    if (!piece) break;
    if (piece->prov.kind == CoverProvenance::Kind::Goal) {
      if (include_goal) out.push_back(piece->variety);
      continue;
    }
    if (piece->prov.premise_index > maxJ) break;  // premise indices are monotone
    if (want.count(piece->prov.premise_index)) out.push_back(piece->variety);
  }
  return out;
}

bool verify_subcover_exact_1d(const std::vector<PseudoaffineVariety>& chosen, std::string* why) {
  auto dense = std::find_if(chosen.begin(), chosen.end(),
                            [](const PseudoaffineVariety& v) { return is_dense_fullspace(v, 1); });
  if (dense == chosen.end()) {
    if (why) *why = "no dense piece among the chosen pieces";
    return false;
  }
  Poly u = Poly::constant(Rational(1));
  for (const auto& q : dense->negated) {
    if (q.is_constant()) continue;
    u = u * q;
  }
  if (u.is_constant()) return true;
  u = monic_univariate(squarefree_part(u, u.vars()[0]));
  for (size_t i = 0; i < chosen.size(); ++i) {
    if (&chosen[i] == &*dense) continue;
    if (u.total_degree() < 1) break;
    auto split = apply_piece_to_locus(u, chosen[i].positive, chosen[i].negated);
    if (split) u = split->remainder;
  }
  if (u.total_degree() < 1) return true;
  if (why) *why = "uncovered locus " + u.to_string();
  return false;
}

SampleReport verify_cover_sample(const std::vector<PseudoaffineVariety>& chosen, size_t n,
                                 uint64_t p, uint64_t samples, uint64_t seed, bool parallel) {
  if (samples < 1) fail("ArityError", "samples must be at least 1");
  PrimeField field(p);
  std::set<std::string> vset;
  for (const auto& v : chosen) vset.insert(v.ambient.begin(), v.ambient.end());
  std::vector<std::string> vars(vset.begin(), vset.end());
  if (vars.empty()) vars = {"x"};
  if (vars.size() > n) fail("DomainMismatch", "pieces use more variables than the dimension");
  const size_t nv = vars.size();

  std::vector<FpPiece> compiled;
  compiled.reserve(chosen.size());
  for (const auto& v : chosen) {
    FpPiece piece;
    for (const auto& f : v.positive) piece.positive.push_back(FpPoly::compile(f, field, vars));
    for (const auto& f : v.negated) piece.negated.push_back(FpPoly::compile(f, field, vars));
    compiled.push_back(std::move(piece));
  }

  SampleReport rep;
  rep.p = p;
  rep.seed = seed;
  rep.requested_samples = samples;

  // exhaustive when the whole space is within the sample budget
  uint64_t space = 1;
  bool overflow = false;
  for (size_t i = 0; i < nv; ++i) {
    if (space > samples / p + 1) {
      overflow = true;
      break;
    }
    space *= p;
  }
  rep.exhaustive = !overflow && space <= samples;

  std::vector<uint64_t> flat;
  if (rep.exhaustive) {
    rep.checked = space;
    flat.reserve(space * nv);
    for (uint64_t idx = 0; idx < space; ++idx) {
      uint64_t rest = idx;
      for (size_t i = 0; i < nv; ++i) {
        flat.push_back(rest % p);
        rest /= p;
      }
    }
  } else {
    rep.checked = samples;
    std::mt19937_64 gen(seed);
    flat.reserve(samples * nv);
    for (uint64_t s = 0; s < samples; ++s)
      for (size_t i = 0; i < nv; ++i) flat.push_back(gen() % p);
  }

  auto flags = uncovered_flags(compiled, flat, nv, field, parallel);
  for (size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) continue;
    ++rep.uncovered_count;
    if (rep.uncovered.size() < 100)
      rep.uncovered.emplace_back(flat.begin() + static_cast<long>(i * nv),
                                 flat.begin() + static_cast<long>((i + 1) * nv));
  }
  return rep;
}

}  // namespace noet
