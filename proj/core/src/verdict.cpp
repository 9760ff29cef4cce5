#include "sympres/classify/verdict.hpp"

#include <algorithm>
#include <memory>

#include "sympres/error.hpp"
#include "sympres/kleinian/kleinian.hpp"

namespace sympres {

namespace {

const char *kWreathCite = "wreath product series: K wr S_n has a projective symplectic resolution";
const char *kOpenCite = "open question: the families with H = 1";
const char *kSingularCite = "singular subgroup criterion (no projective symplectic resolution)";
const char *kOrderSixCite = "H = C_2 criterion: an element of K of order at least 6";
const char *kSmoothCite = "G(D_2, C_2, Id) = Q_8 x_{Z/2} D_8 has a projective symplectic resolution";
const char *kRankFourCite = "rank-four classification for H != 1, K";
const char *kHigherCite = "rank 2n >= 6: resolvable iff K = H";
const char *kParabolicCite = "parabolic reduction: the stabilizer of (0, 0, p_3, ..., p_n) is G_2(K, H)";
const char *kThreeFactorCite = "G_3(D_2, C_2): isolated point with stabilizer C_2 and no reflections";

Verdict base(std::string input)
{
  Verdict v;
  v.input = std::move(input);
  return v;
}

std::string default_label(const Case2 &c)
{
  return "G(" + c.k.name() + "," + c.h.name() + "," + c.alpha.describe() + ")";
}

bool is_d2_c2(const KleinianSpec &k, const KleinianSpec &h)
{
  return k == KleinianSpec::binary_dihedral(2) && h == KleinianSpec::cyclic(2);
}

} // namespace

Case2 Case2::from_row(const TableRow &row) { return {row.k, row.h, row.alpha, row.label()}; }

std::string CaseN::label() const
{
  return "G_" + std::to_string(n) + "(" + k.name() + "," + h.name() + ")";
}

std::string to_string(VerdictKind k)
{
  switch (k) {
  case VerdictKind::Resolvable: return "Resolvable";
  case VerdictKind::NotResolvable: return "NotResolvable";
  case VerdictKind::Open: return "Open";
  }
  return "?";
}

Verdict classify(const Case2 &c)
{
  Verdict v = base(c.label.empty() ? default_label(c) : c.label);
  if (c.k == c.h) {
    v.result = VerdictKind::Resolvable;
    v.rule = "wreath";
    v.reason = "H = K: the group is " + c.k.name() + " wr S_2";
    v.citations = {kWreathCite};
    return v;
  }
  if (c.h.order() == 1) {
    v.result = VerdictKind::Open;
    v.rule = "open-family";
    v.reason = "H = 1";
    v.citations = {kOpenCite};
    return v;
  }

  FiniteMatrixGroup k = build_kleinian(c.k);
  Subset h = canonical_subset(k, c.k, c.h, true);
  auto gamma = std::make_shared<QuotientGroup>(k, h);
  GammaAction action = gamma_action(k, h, gamma);
  Automorphism alpha = realize_involution(k, c.k, *gamma, c.alpha);
  marked_fixed_points(action, &v.notes);

  if (auto w = find_singular_pair(action, alpha)) {
    w->citation = "case " + v.input;
    v.result = VerdictKind::NotResolvable;
    v.rule = "singular-subgroup";
    v.reason = "singular subgroup of order " + std::to_string(w->p.size()) + " via " + to_string(w->rule);
    v.witness = std::move(*w);
    v.citations = {kSingularCite, kRankFourCite};
    return v;
  }
  if (h.size() == 2) {
    if (auto o = order_ge6_criterion(k)) {
      v.result = VerdictKind::NotResolvable;
      v.rule = "order-ge-6";
      v.reason = "K has an element of order " + std::to_string(o->order);
      v.witness = std::move(*o);
      v.citations = {kOrderSixCite, kRankFourCite};
      return v;
    }
  }
  if (is_d2_c2(c.k, c.h) && alpha.is_identity()) {
    v.result = VerdictKind::Resolvable;
    v.rule = "exceptional";
    v.reason = "Q_8 x_{Z/2} D_8";
    v.citations = {kSmoothCite, kRankFourCite};
    return v;
  }
  v.result = VerdictKind::Open;
  v.rule = "inconclusive";
  v.reason = "no criterion applies in the marked-point model";
  v.inconclusive = true;
  v.citations = {kRankFourCite};
  return v;
}

Verdict classify(const TableRow &row) { return classify(Case2::from_row(row)); }

Verdict classify(const CaseN &c)
{
  if (c.n < 3)
    throw Error(ErrorCode::InvalidRowParameters, "G_n(K,H) needs n >= 3");
  FiniteMatrixGroup k = build_kleinian(c.k);
  Subset h = canonical_subset(k, c.k, c.h, true);
  auto hm = mask_of(k, h);
  for (int x : commutator_subgroup(k))
    if (!hm[x])
      throw Error(ErrorCode::InvalidRowParameters, "[K,K] is not contained in H");

  Verdict v = base(c.label());
  if (static_cast<int>(h.size()) == k.order()) {
    v.result = VerdictKind::Resolvable;
    v.rule = "wreath";
    v.reason = "H = K: the group is " + c.k.name() + " wr S_" + std::to_string(c.n);
    v.citations = {kWreathCite, kHigherCite};
    return v;
  }
  ParabolicReduction red;
  red.n = c.n;
  v.result = VerdictKind::NotResolvable;
  v.rule = "parabolic-reduction";
  v.citations = {kHigherCite, kParabolicCite};
  if (is_d2_c2(c.k, c.h)) {
    red.stabilizer = c.n == 3 ? "G_3(D_2,C_2)" : "G_3(D_2,C_2) as a parabolic subgroup";
    red.stabilizer_order = 6LL * 8 * 8 * 2;
    red.lemma = verify_lemma71();
    v.reason = "isolated point of (T*P^1)^3 with stabilizer C_2";
    v.citations.push_back(kThreeFactorCite);
  } else {
    red.stabilizer = "G_2(" + c.k.name() + "," + c.h.name() + ") = G(" + c.k.name() + "," + c.h.name() + ",inversion)";
    red.stabilizer_order = 2LL * k.order() * static_cast<long long>(h.size());
    v.reason = "reduces to the rank-four group " + red.stabilizer;
    v.citations.push_back(kRankFourCite);
  }
  v.witness = std::move(red);
  return v;
}

VerdictKind expected_verdict(const TableRow &row)
{
  switch (row.letter) {
  case 'E': case 'H': case 'L': case 'R':
    return VerdictKind::Resolvable;
  case 'G': case 'K': case 'P': case 'Q': case 'U': case 'V':
    return VerdictKind::Open;
  case 'B':
    return row.params.m == 1 && row.params.l == 1 ? VerdictKind::Resolvable : VerdictKind::NotResolvable;
  default:
    return VerdictKind::NotResolvable;
  }
}

VerdictKind expected_verdict(const CaseN &c)
{
  return c.k == c.h ? VerdictKind::Resolvable : VerdictKind::NotResolvable;
}

std::vector<CaseN> default_case_n(int max_m, const std::vector<int> &ns)
{
  std::vector<KleinianSpec> ks;
  for (int m = 2; m <= max_m; ++m)
    ks.push_back(KleinianSpec::cyclic(m));
  for (int m = 1; m <= max_m; ++m)
    ks.push_back(KleinianSpec::binary_dihedral(m));
  ks.push_back(KleinianSpec::T());
  ks.push_back(KleinianSpec::O());
  ks.push_back(KleinianSpec::I());

  std::vector<std::pair<KleinianSpec, KleinianSpec>> pairs;
  for (const auto &ks_ : ks) {
    FiniteMatrixGroup k = build_kleinian(ks_);
    Subset comm = commutator_subgroup(k);
    std::vector<KleinianSpec> hs;
    for (int d = 1; d <= 2 * k.order(); ++d)
      if (k.order() % d == 0)
        hs.push_back(KleinianSpec::cyclic(d));
    for (int a = 1; 4 * a <= k.order(); ++a)
      if (k.order() % (4 * a) == 0)
        hs.push_back(KleinianSpec::binary_dihedral(a));
    for (auto s : {KleinianSpec::T(), KleinianSpec::O(), KleinianSpec::I()})
      hs.push_back(s);
    std::vector<Subset> seen;
    for (const auto &hs_ : hs) {
      Subset h;
      try {
        h = canonical_subset(k, ks_, hs_, true);
      } catch (const Error &) {
        continue;
      }
      auto hm = mask_of(k, h);
      if (!std::all_of(comm.begin(), comm.end(), [&](int x) { return hm[x]; }))
        continue;
      if (std::find(seen.begin(), seen.end(), h) != seen.end())
        continue;
      seen.push_back(h);
      // H = K is always recorded under K's own name
      pairs.emplace_back(ks_, static_cast<int>(h.size()) == k.order() ? ks_ : hs_);
    }
  }
  std::vector<CaseN> out;
  for (int n : ns)
    for (const auto &[k, h] : pairs)
      out.push_back({n, k, h});
  return out;
}

std::vector<PrimitiveEntry> primitive_report()
{
  std::vector<PrimitiveEntry> out;
  Verdict q = classify(make_row('A', {1, -1, -1}));
  out.push_back({"Q", 6, q.result, "G(C_4,C_2,1) = row " + q.input, "root stabilizer: " + to_string(q.result)});
  out.push_back({"R", 6, VerdictKind::Open, "", "remaining open type"});
  out.push_back({"S_1", 8, VerdictKind::Open, "", "remaining open type"});
  out.push_back({"S_2", 8, VerdictKind::Open, "", "remaining open type"});
  Verdict s3 = classify(CaseN{3, KleinianSpec::binary_dihedral(2), KleinianSpec::cyclic(2)});
  out.push_back({"S_3", 8, s3.result, "G_3(D_2,C_2)", "root stabilizer: " + to_string(s3.result)});
  out.push_back({"T", 8, VerdictKind::NotResolvable, "complex reflection group of Coxeter type H_3",
                 "root stabilizer is a complex reflection group without a resolution (cited)"});
  out.push_back({"U", 10, VerdictKind::Open, "", "remaining open type; follows S_1 if that is decided"});
  return out;
}

int ClassifyReport::mismatches() const
{
  int n = 0;
  for (const auto &e : rows)
    n += !e.matches();
  for (const auto &e : case_n)
    n += !e.matches();
  return n;
}

namespace {

template <class In> ReportEntry run_entry(const In &in, std::string label)
{
  ReportEntry e;
  e.label = std::move(label);
  e.expected = expected_verdict(in);
  try {
    e.verdict = classify(in);
  } catch (const Error &err) {
    e.verdict = base(e.label);
    e.verdict.rule = "error";
    e.verdict.reason = std::string(to_string(err.code())) + ": " + err.detail();
    e.verdict.inconclusive = true;
  }
  return e;
}

} // namespace

ClassifyReport classify_all(const ClassifyOptions &opt)
{
  ClassifyReport r;
  for (const auto &row : default_rows(opt.max_m, opt.max_l, opt.include_large))
    r.rows.push_back(run_entry(row, row.label()));
  for (const auto &c : default_case_n(opt.max_m, opt.ns))
    r.case_n.push_back(run_entry(c, c.label()));
  r.primitive = primitive_report();
  return r;
}

} // namespace sympres
