#include "noet/kernels.hpp"

#include <algorithm>

namespace noet {

AffineSpace::AffineSpace(PrimeField field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {
  if (vars_.empty()) fail("ArityError", "affine space needs at least one variable");
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  uint64_t n = 1;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (n > 1000000ull / field_.p() + 1) fail("SpaceTooLarge", "p^|X| exceeds 10^6");
    n *= field_.p();
  }
  if (n > 1000000ull) fail("SpaceTooLarge", "p^|X| exceeds 10^6");
  size_ = n;
}

PointSet PointSet::full(uint64_t n_points) {
  PointSet s(n_points);
  for (auto& w : s.words_) w = ~uint64_t(0);
  if (n_points % 64) s.words_.back() = (uint64_t(1) << (n_points % 64)) - 1;
  return s;
}

uint64_t PointSet::count() const {
  uint64_t c = 0;
  for (uint64_t w : words_) c += static_cast<uint64_t>(__builtin_popcountll(w));
  return c;
}

bool PointSet::none() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

std::vector<uint64_t> PointSet::indices() const {
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

PointSet PointSet::operator&(const PointSet& o) const {
  PointSet r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

PointSet PointSet::operator|(const PointSet& o) const {
  PointSet r(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

PointSet PointSet::complement() const {
  PointSet r = full(n_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~words_[i];
  return r;
}

bool PointSet::is_subset_of(const PointSet& o) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

FpPoly FpPoly::compile(const Poly& p, const PrimeField& field,
                       const std::vector<std::string>& vars) {
  FpPoly out;
  out.nvars = static_cast<uint32_t>(vars.size());
  for (const auto& v : p.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      fail("DomainMismatch", "polynomial variable '" + v + "' outside the space");
  for (const auto& t : p.terms()) {
    uint64_t c = field.reduce(t.coeff);
    if (c == 0) continue;
    out.coeffs.push_back(c);
    for (const auto& v : vars) {
      uint32_t e = 0;
      for (size_t i = 0; i < p.vars().size(); ++i)
        if (p.vars()[i] == v) e = t.exp[i];
      out.exps.push_back(e);
    }
  }
  return out;
}

uint64_t FpPoly::eval(const uint64_t* point, const PrimeField& field) const {
  uint64_t acc = 0;
  const uint32_t* e = exps.data();
  for (size_t t = 0; t < coeffs.size(); ++t, e += nvars) {
    uint64_t m = coeffs[t];
    for (uint32_t i = 0; i < nvars; ++i)
      if (e[i]) m = field.mul(m, field.pow(point[i], e[i]));
    acc = field.add(acc, m);
  }
  return acc;
}

FpFormula FpFormula::compile(const PropFormula& f, const PrimeField& field,
                             const std::vector<std::string>& vars) {
  FpFormula out;
  struct Walk {
    FpFormula& out;
    const PrimeField& field;
    const std::vector<std::string>& vars;
    void operator()(const PropFormula& g) {
      switch (g.kind()) {
        case PropFormula::Kind::True:
          out.program.push_back({Op::PushTrue, 0});
          return;
        case PropFormula::Kind::False:
          out.program.push_back({Op::PushFalse, 0});
          return;
        case PropFormula::Kind::Atom:
          out.atoms.push_back(FpPoly::compile(g.equation().poly, field, vars));
          out.program.push_back({Op::PushAtom, static_cast<uint32_t>(out.atoms.size() - 1)});
          return;
        case PropFormula::Kind::Not:
          (*this)(g.children().front());
          out.program.push_back({Op::Not, 0});
          return;
        case PropFormula::Kind::And:
        case PropFormula::Kind::Or:
          for (const auto& k : g.children()) (*this)(k);
          out.program.push_back({g.kind() == PropFormula::Kind::And ? Op::And : Op::Or,
                                 static_cast<uint32_t>(g.children().size())});
          return;
      }
    }
  };
  Walk{out, field, vars}(f);
  // the point kernels use a fixed evaluation stack; reject what cannot run
  size_t depth = 0, peak = 0;
  for (const auto& ins : out.program) {
    switch (ins.op) {
      case Op::PushTrue:
      case Op::PushFalse:
      case Op::PushAtom:
        peak = std::max(peak, ++depth);
        break;
      case Op::Not:
        break;
      case Op::And:
      case Op::Or:
        depth -= ins.arg - 1;
        break;
    }
  }
  if (peak >= 60) fail("SizeBudgetExceeded", "formula nesting too deep for the scan kernel");
  return out;
}

bool FpFormula::eval(const uint64_t* point, const PrimeField& field) const {
  bool stack[64];
  size_t sp = 0;
  for (const auto& ins : program) {
    switch (ins.op) {
      case Op::PushTrue:
        stack[sp++] = true;
        break;
      case Op::PushFalse:
        stack[sp++] = false;
        break;
      case Op::PushAtom:
        stack[sp++] = atoms[ins.arg].eval(point, field) == 0;
        break;
      case Op::Not:
        stack[sp - 1] = !stack[sp - 1];
        break;
      case Op::And:
      case Op::Or: {
        bool acc = ins.op == Op::And;
        for (uint32_t i = 0; i < ins.arg; ++i) {
          bool v = stack[--sp];
          acc = ins.op == Op::And ? (acc && v) : (acc || v);
        }
        stack[sp++] = acc;
        break;
      }
    }
  }
  return stack[0];
}

bool FpPiece::contains(const uint64_t* point, const PrimeField& field) const {
  for (const auto& p : positive)
    if (p.eval(point, field) != 0) return false;
  for (const auto& q : negated)
    if (q.eval(point, field) == 0) return false;
  return true;
}

namespace {

// One 64-point word of a characteristic-function scan.
template <typename Pred>
uint64_t scan_word(const AffineSpace& space, uint64_t w, Pred&& pred) {
  uint64_t bits = 0;
  uint64_t pt[24];
  const uint64_t n = space.size();
  for (uint64_t b = 0; b < 64; ++b) {
    uint64_t idx = (w << 6) | b;
    if (idx >= n) break;
    space.decode(idx, pt);
    if (pred(pt)) bits |= uint64_t(1) << b;
  }
  return bits;
}

}  // namespace

PointSet scan_formula_serial(const AffineSpace& space, const FpFormula& f) {
  PointSet out(space.size());
  const int64_t words = static_cast<int64_t>(out.words().size());
  for (int64_t w = 0; w < words; ++w)
    out.words()[static_cast<size_t>(w)] = scan_word(
        space, static_cast<uint64_t>(w),
        [&](const uint64_t* pt) { return f.eval(pt, space.field()); });
  return out;
}

PointSet scan_formula_parallel(const AffineSpace& space, const FpFormula& f) {
  PointSet out(space.size());
  const int64_t words = static_cast<int64_t>(out.words().size());
  uint64_t* data = out.words().data();
#pragma omp parallel for schedule(static)
  for (int64_t w = 0; w < words; ++w)
    data[w] = scan_word(space, static_cast<uint64_t>(w),
                        [&](const uint64_t* pt) { return f.eval(pt, space.field()); });
  return out;
}

PointSet scan_formula(const AffineSpace& space, const FpFormula& f, bool parallel) {
  return parallel ? scan_formula_parallel(space, f) : scan_formula_serial(space, f);
}

std::vector<PointSet> zero_table_serial(const AffineSpace& space,
                                        const std::vector<FpPoly>& candidates) {
  std::vector<PointSet> table(candidates.size(), PointSet(space.size()));
  const int64_t m = static_cast<int64_t>(candidates.size());
  for (int64_t c = 0; c < m; ++c) {
    PointSet& ps = table[static_cast<size_t>(c)];
    for (size_t w = 0; w < ps.words().size(); ++w)
      ps.words()[w] = scan_word(space, w, [&](const uint64_t* pt) {
        return candidates[static_cast<size_t>(c)].eval(pt, space.field()) == 0;
      });
  }
  return table;
}

std::vector<PointSet> zero_table_parallel(const AffineSpace& space,
                                          const std::vector<FpPoly>& candidates) {
  std::vector<PointSet> table(candidates.size(), PointSet(space.size()));
  const int64_t m = static_cast<int64_t>(candidates.size());
#pragma omp parallel for schedule(static)
  for (int64_t c = 0; c < m; ++c) {
    PointSet& ps = table[static_cast<size_t>(c)];
    for (size_t w = 0; w < ps.words().size(); ++w)
      ps.words()[w] = scan_word(space, w, [&](const uint64_t* pt) {
        return candidates[static_cast<size_t>(c)].eval(pt, space.field()) == 0;
      });
  }
  return table;
}

std::vector<PointSet> zero_table(const AffineSpace& space, const std::vector<FpPoly>& candidates,
                                 bool parallel) {
  return parallel ? zero_table_parallel(space, candidates) : zero_table_serial(space, candidates);
}

namespace {

uint8_t uncovered_at(const std::vector<FpPiece>& pieces, const uint64_t* pt,
                     const PrimeField& field) {
  for (const auto& piece : pieces)
    if (piece.contains(pt, field)) return 0;
  return 1;
}

}  // namespace

std::vector<uint8_t> uncovered_flags_serial(const std::vector<FpPiece>& pieces,
                                            const std::vector<uint64_t>& flat_points,
                                            size_t nvars, const PrimeField& field) {
  const int64_t n = static_cast<int64_t>(flat_points.size() / nvars);
  std::vector<uint8_t> flags(static_cast<size_t>(n), 0);
  for (int64_t i = 0; i < n; ++i)
    flags[static_cast<size_t>(i)] =
        uncovered_at(pieces, flat_points.data() + static_cast<size_t>(i) * nvars, field);
  return flags;
}

std::vector<uint8_t> uncovered_flags_parallel(const std::vector<FpPiece>& pieces,
                                              const std::vector<uint64_t>& flat_points,
                                              size_t nvars, const PrimeField& field) {
  const int64_t n = static_cast<int64_t>(flat_points.size() / nvars);
  std::vector<uint8_t> flags(static_cast<size_t>(n), 0);
  uint8_t* data = flags.data();
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i)
    data[i] = uncovered_at(pieces, flat_points.data() + static_cast<size_t>(i) * nvars, field);
  return flags;
}

std::vector<uint8_t> uncovered_flags(const std::vector<FpPiece>& pieces,
                                     const std::vector<uint64_t>& flat_points, size_t nvars,
                                     const PrimeField& field, bool parallel) {
  return parallel ? uncovered_flags_parallel(pieces, flat_points, nvars, field)
                  : uncovered_flags_serial(pieces, flat_points, nvars, field);
}

}  // namespace noet
