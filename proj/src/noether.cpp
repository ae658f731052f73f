#include "noet/noether.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace noet {

WitnessReport lognet_refute_infinite(const std::vector<Rational>& enumeration,
                                     const std::vector<uint64_t>& J) {
  std::set<Rational> seen(enumeration.begin(), enumeration.end());
  if (seen.size() != enumeration.size())
    fail("ArityError", "the enumerated points must be distinct");
  WitnessReport rep;
  rep.check = "lognet_refute_infinite";
  std::set<uint64_t> js(J.begin(), J.end());
  Rational witness(1);
  bool first = true;
  for (uint64_t j : js) {
    if (j < 1 || j > enumeration.size())
      fail("IndexOutOfRange", "premise index " + std::to_string(j) + " outside 1.." +
                                  std::to_string(enumeration.size()));
    const Rational& a = enumeration[j - 1];
    if (first || a + Rational(1) > witness) witness = a + Rational(1);
    first = false;
  }
  rep.indices.assign(js.begin(), js.end());
  rep.witness["x"] = witness;
  for (uint64_t j : js) {
    const Rational& a = enumeration[j - 1];
    bool holds = witness != a;  // premise x != a_j at the witness
    rep.premise_results.push_back(
        {j, holds, "x != " + a.to_string() + " at x = " + witness.to_string()});
    if (!holds) fail("ArityError", "witness construction failed");  // unreachable: max + 1
  }
  rep.notes.push_back("the finite implication fails at x = " + witness.to_string() +
                      ": every chosen premise holds and 1 = 0 does not");
  rep.notes.push_back(
      "the full implication over every field holds: no point satisfies all of x != a");
  rep.status = "ok";
  return rep;
}

bool dennet_r_premise_holds(uint64_t i, const Rational& x) {
  if (i < 1) fail("BadIndex", "premise index must be at least 1");
  // exists y in R with i(x^2 + y^2) = 1  iff  y^2 = 1/i - x^2 >= 0
  Rational bound = Rational::make(1, Int(static_cast<unsigned long>(i)));
  return bound - x * x >= Rational(0);
}

WitnessReport dennet_r_witness(const std::vector<uint64_t>& J) {
  WitnessReport rep;
  rep.check = "dennet_r_witness";
  std::set<uint64_t> js(J.begin(), J.end());
  uint64_t m = js.empty() ? 0 : *js.rbegin();
  if (!js.empty() && *js.begin() < 1) fail("BadIndex", "premise indices start at 1");
  Rational x = js.empty() ? Rational(1)
                          : Rational::make(1, Int(static_cast<unsigned long>(m + 1)));
  rep.indices.assign(js.begin(), js.end());
  rep.witness["x"] = x;
  for (uint64_t i : js) {
    bool holds = dennet_r_premise_holds(i, x);
    rep.premise_results.push_back(
        {i, holds,
         "1/" + std::to_string(i) + " - x^2 >= 0 at x = " + x.to_string()});
    if (!holds) fail("ArityError", "witness construction failed");  // x^2 <= 1/(m+1) <= 1/i
  }
  rep.notes.push_back("x = " + x.to_string() +
                      " is nonzero, so the conclusion x = 0 fails while every premise in J holds");
  rep.notes.push_back(
      "over R the full countable implication holds: the premises force x^2 <= 1/i for every i");
  rep.status = "ok";
  return rep;
}

namespace {

std::string status_string(SubcoverReport::Status s) {
  switch (s) {
    case SubcoverReport::Status::Ok:
      return "ok";
    case SubcoverReport::Status::NotCoveredWithin:
      return "not_covered_within";
    case SubcoverReport::Status::UnsupportedInstance:
      return "unsupported_instance";
  }
  return "unknown";
}

WitnessReport run_cover_pipeline(std::string check, const FamilyPresentation& premises,
                                 PropFormula goal_qf, uint64_t scan_limit,
                                 const FormulaBudget& fbudget, PremiseTransform transform,
                                 std::shared_ptr<std::vector<PremiseQeEntry>> qe_trace) {
  std::set<std::string> vars = premises.free_vars();
  auto gv = goal_qf.free_vars();
  vars.insert(gv.begin(), gv.end());
  if (vars.size() > 2)
    fail("TooManyVariables", "the cover descent handles at most two free variables");
  size_t n = std::max<size_t>(vars.size(), 1);

  ImplicationCoverFamily family(premises, std::move(goal_qf), fbudget, std::move(transform),
                                scan_limit);
  SubcoverReport sub = extract_subcover(family, n, scan_limit);

  WitnessReport rep;
  rep.check = std::move(check);
  rep.status = status_string(sub.status);
  rep.indices = sub.indices;
  if (qe_trace) {
    std::sort(qe_trace->begin(), qe_trace->end(),
              [](const PremiseQeEntry& a, const PremiseQeEntry& b) { return a.index < b.index; });
    rep.premise_qe = *qe_trace;
  }
  if (sub.status == SubcoverReport::Status::Ok) {
    rep.notes.push_back(
        "the implication restricted to the premises in J holds over every algebraically "
        "closed field of characteristic 0");
  } else {
    rep.notes.push_back("cover not certified: " + sub.detail);
  }
  rep.subcover = std::move(sub);
  return rep;
}

}  // namespace

WitnessReport dennet_acf_check(const FamilyPresentation& premises, const PredFormula& goal,
                               uint64_t scan_limit, const QelimBudget& budget) {
  PropFormula goal_qf = eliminate_all(goal, budget);
  auto cache = std::make_shared<std::map<uint64_t, PropFormula>>();
  auto trace = std::make_shared<std::vector<PremiseQeEntry>>();
  FormulaBudget fbudget{budget.max_nodes};
  PremiseTransform transform = [cache, trace, budget, fbudget](const PredFormula& f,
                                                               uint64_t index) -> PropFormula {
    auto it = cache->find(index);
    if (it != cache->end()) return it->second;
    PropFormula qf = f.is_quantifier_free() ? fold_constants(f.matrix())
                                            : eliminate_all(f, budget);
    cache->emplace(index, qf);
    trace->push_back({index, qf.to_string(), cnf_clauses(to_cnf(qf, fbudget)).size()});
    return qf;
  };
  return run_cover_pipeline("dennet_acf_check", premises, std::move(goal_qf), scan_limit,
                            fbudget, std::move(transform), trace);
}

WitnessReport dennet0_check(const FamilyPresentation& premises, const PropFormula& goal,
                            uint64_t scan_limit, const FormulaBudget& budget) {
  return run_cover_pipeline("dennet0_check", premises, goal, scan_limit, budget, {}, nullptr);
}

}  // namespace noet
