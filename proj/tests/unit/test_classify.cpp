#include <gtest/gtest.h>

#include <numeric>

#include "sympres/classify/verdict.hpp"
#include "sympres/error.hpp"

using namespace sympres;

namespace {

using K = KleinianSpec;

struct Built {
  FiniteMatrixGroup k;
  Subset h;
  std::shared_ptr<const QuotientGroup> gamma;
  GammaAction action;
  Automorphism alpha;
};

Built build(const K &k, const K &h, const InvolutionSpec &alpha = InvolutionSpec::trivial())
{
  Built b;
  b.k = build_kleinian(k);
  b.h = canonical_subset(b.k, k, h);
  b.gamma = std::make_shared<QuotientGroup>(b.k, b.h);
  b.action = gamma_action(b.k, b.h, b.gamma);
  b.alpha = realize_involution(b.k, k, *b.gamma, alpha);
  return b;
}

Built build(const TableRow &row) { return build(row.k, row.h, row.alpha); }

template <class F> void expect_code(ErrorCode code, F f)
{
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Polynomials in u over cyclotomics, constant term first.
using Poly = std::vector<Cyclotomic>;

Poly mul(const Poly &a, const Poly &b)
{
  Poly out(a.size() + b.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

Poly add(Poly a, const Poly &b, int sign)
{
  if (a.size() < b.size())
    a.resize(b.size(), Cyclotomic(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += sign > 0 ? b[i] : -b[i];
  return a;
}

// det(u I - M) by the Leibniz expansion.
Poly leibniz_charpoly(const Matrix &m)
{
  int n = m.dim();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Poly total{Cyclotomic(0)};
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        inversions += p[i] > p[j];
    Poly term{Cyclotomic(1)};
    for (int i = 0; i < n; ++i) {
      Poly entry{-m(i, p[i])};
      if (p[i] == i)
        entry.push_back(Cyclotomic(1));
      term = mul(term, entry);
    }
    total = add(total, term, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  while (total.size() > 1 && total.back().is_zero())
    total.pop_back();
  return total;
}

int brute_matrix_order(const Matrix &g)
{
  Matrix x = g;
  int n = 1;
  while (!x.is_identity()) {
    x = x * g;
    ++n;
  }
  return n;
}

const VerdictKind kRes = VerdictKind::Resolvable;
const VerdictKind kNot = VerdictKind::NotResolvable;

} // namespace

TEST(MarkedPoints, CaseAFreePairAtMiddleVertex)
{
  for (int m = 1; m <= 4; ++m) {
    auto b = build(K::binary_dihedral(m), K::cyclic(2 * m));
    int gen = b.action.h.index_of(complexify(Quaternion::zeta(2 * m)));
    int cls = b.action.table.class_of[gen];
    int rho_m = -1;
    for (int v = 0; v < b.action.vertex_count(); ++v)
      if (b.action.table.chars[v][cls] == Cyclotomic::zeta(2 * m, m))
        rho_m = v;
    auto pts = marked_fixed_points(b.action);
    std::vector<MarkedPoint> at_m;
    for (const auto &p : pts)
      if (p.kind == MarkedKind::FreeFixed && p.v == rho_m)
        at_m.push_back(p);
    ASSERT_EQ(at_m.size(), 2u) << m;
    for (const auto &p : at_m)
      EXPECT_EQ(p.stabilizer.size(), 2u);
    // no other vertex is fixed, so no other free points
    EXPECT_EQ(std::count_if(pts.begin(), pts.end(), [](const MarkedPoint &p) { return p.kind == MarkedKind::FreeFixed; }), 2);
  }
}

TEST(MarkedPoints, CaseNOneIntersectionOneFree)
{
  auto b = build(K::O(), K::binary_dihedral(2));
  auto stabs = vertex_stabilizers(b.action);
  std::vector<std::string> notes;
  auto pts = marked_fixed_points(b.action, &notes);
  int two_dim = -1;
  for (int v = 0; v < b.action.vertex_count(); ++v)
    if (b.action.graph.dims[v] == 2)
      two_dim = v;
  for (int v = 1; v < b.action.vertex_count(); ++v) {
    if (b.action.graph.dims[v] != 1)
      continue;
    int free = 0, inter = 0;
    for (const auto &p : pts) {
      if (p.kind == MarkedKind::FreeFixed && p.v == v)
        ++free;
      if (p.kind == MarkedKind::Intersection && (p.v == v || p.u == v)) {
        ++inter;
        EXPECT_EQ(std::min(p.v, p.u), std::min(v, two_dim));
        EXPECT_EQ(p.stabilizer.size(), 2u);
      }
    }
    EXPECT_EQ(free, 1);
    EXPECT_EQ(inter, 1);
  }
  // the 2-dim vertex has stabilizer Sym(3), which is not cyclic
  EXPECT_EQ(notes.size(), 1u);
}

TEST(MarkedPoints, TrivialActionHasNone)
{
  auto b = build(K::T(), K::T());
  EXPECT_TRUE(marked_fixed_points(b.action).empty());
}

TEST(MarkedPoints, StabilizersAreExact)
{
  for (const auto &row : default_rows(3, 3, false)) {
    if (row.h.order() == 1 || row.k == row.h)
      continue;
    auto b = build(row);
    auto stabs = vertex_stabilizers(b.action);
    for (const auto &p : marked_fixed_points(b.action)) {
      const Group &g = *b.gamma;
      // oracle: recompute from the permutations directly
      Subset s;
      for (int c = 0; c < g.order(); ++c) {
        const auto &pc = b.action.perm[c];
        bool fixes = p.kind == MarkedKind::FreeFixed
                         ? pc[p.v] == p.v
                         : (pc[p.v] == p.v && pc[p.u] == p.u) || (pc[p.v] == p.u && pc[p.u] == p.v);
        if (fixes)
          s.push_back(c);
      }
      EXPECT_EQ(p.stabilizer, s) << row.label();
      EXPECT_GT(p.stabilizer.size(), 1u);
      if (p.kind == MarkedKind::FreeFixed)
        EXPECT_TRUE(stabs[p.v].cyclic);
      else
        EXPECT_GE(b.action.graph.m[p.v][p.u], 1);
    }
  }
}

TEST(SingularPair, Examples)
{
  auto a = build(K::binary_dihedral(3), K::cyclic(6));
  auto w = find_singular_pair(a.action, a.alpha);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rule, SingularRule::FreeFreeSameVertex);
  EXPECT_EQ(w->p.size(), 2u);
  EXPECT_EQ(w->x.v, w->y.v);

  auto b11 = build(parse_row_spec("B(m=1,l=1,r=1)"));
  EXPECT_FALSE(find_singular_pair(b11.action, b11.alpha));

  auto n = build(K::O(), K::binary_dihedral(2));
  auto wn = find_singular_pair(n.action, n.alpha);
  ASSERT_TRUE(wn);
  EXPECT_EQ(wn->rule, SingularRule::TypeMismatch);
  EXPECT_EQ(wn->p.size(), 2u);
  EXPECT_EQ(n.action.graph.dims[wn->x.v], 1);

  auto i = build(parse_row_spec("I"));
  auto wi = find_singular_pair(i.action, i.alpha);
  ASSERT_TRUE(wi);
  EXPECT_EQ(wi->rule, SingularRule::FreeFreeSameVertex);
  EXPECT_EQ(wi->p.size(), 3u);
  EXPECT_EQ(i.action.graph.dims[wi->x.v], 2);
}

TEST(SingularPair, WitnessesRevalidateAndResolvableInputsHaveNone)
{
  int witnesses = 0;
  for (const auto &row : default_rows(4, 4, false)) {
    if (row.h.order() == 1)
      continue;
    auto b = build(row);
    auto w = find_singular_pair(b.action, b.alpha);
    bool resolvable = row.k == row.h || (row.letter == 'B' && row.params.m == 1 && row.params.l == 1);
    if (resolvable) {
      EXPECT_FALSE(w) << row.label();
      continue;
    }
    if (!w)
      continue;
    ++witnesses;
    EXPECT_EQ(revalidate(b.action, b.alpha, *w), "") << row.label();
  }
  EXPECT_EQ(witnesses, 35);
}

TEST(SingularPair, RevalidateRejectsTampering)
{
  auto b = build(K::binary_dihedral(3), K::cyclic(6));
  auto w = *find_singular_pair(b.action, b.alpha);
  auto bad = w;
  bad.y = bad.x;
  EXPECT_NE(revalidate(b.action, b.alpha, bad), "");
  bad = w;
  bad.p = {0};
  EXPECT_NE(revalidate(b.action, b.alpha, bad), "");
  bad = w;
  bad.rule = SingularRule::DistinctVertexOrbits;
  EXPECT_NE(revalidate(b.action, b.alpha, bad), "");
  bad = w;
  bad.x.member = 7;
  EXPECT_NE(revalidate(b.action, b.alpha, bad), "");
}

TEST(SingularPair, IndependentOfAlphaPresentation)
{
  for (const auto &row : default_rows(3, 3, false)) {
    if (row.h.order() == 1 || row.k == row.h)
      continue;
    auto b = build(row);
    auto w = find_singular_pair(b.action, b.alpha);
    const Group &g = *b.gamma;
    // same automorphism given on a reversed generating list
    std::vector<int> gens = g.generators();
    std::reverse(gens.begin(), gens.end());
    std::vector<int> imgs;
    for (int s : gens)
      imgs.push_back(b.alpha(s));
    auto same = automorphism_from_map(g, gens, imgs, true);
    auto w2 = find_singular_pair(b.action, same);
    ASSERT_EQ(bool(w), bool(w2)) << row.label();
    if (w) {
      EXPECT_EQ(w->rule, w2->rule);
      EXPECT_TRUE(w->x.same_point(w2->x) && w->y.same_point(w2->y));
    }
    // a Gamma-conjugate involution describes a conjugate group
    for (int c : g.generators()) {
      auto in = inner_automorphism(g, c), out = inner_automorphism(g, g.inv(c));
      auto conj = compose(g, in, compose(g, b.alpha, out));
      auto w3 = find_singular_pair(b.action, conj);
      ASSERT_EQ(bool(w), bool(w3)) << row.label();
      if (w) {
        EXPECT_EQ(w->rule, w3->rule) << row.label();
        EXPECT_EQ(w->p.size(), w3->p.size());
        EXPECT_EQ(revalidate(b.action, conj, *w3), "");
      }
    }
  }
}

TEST(OrderSix, Examples)
{
  auto t = order_ge6_criterion(build_kleinian(K::T()));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->order, 6);
  EXPECT_FALSE(order_ge6_criterion(build_kleinian(K::binary_dihedral(2))));
  auto d4 = order_ge6_criterion(build_kleinian(K::binary_dihedral(4)));
  ASSERT_TRUE(d4);
  EXPECT_EQ(d4->order, 8);
}

TEST(OrderSix, AgreesWithBruteForce)
{
  std::vector<K> specs{K::T(), K::O(), K::I()};
  for (int m = 1; m <= 8; ++m) {
    specs.push_back(K::cyclic(m));
    specs.push_back(K::binary_dihedral(m));
  }
  for (const auto &s : specs) {
    auto g = build_kleinian(s);
    int best = 0;
    for (const auto &x : g.elements())
      best = std::max(best, brute_matrix_order(x));
    auto w = order_ge6_criterion(g);
    EXPECT_EQ(bool(w), best >= 6) << s.name();
    if (w) {
      EXPECT_EQ(w->order, best);
      EXPECT_EQ(brute_matrix_order(w->matrix), w->order);
    }
  }
}

TEST(CharpolyIdentity, Examples)
{
  EXPECT_TRUE(charpoly_prop57_check(3, 1, 1));
  EXPECT_TRUE(charpoly_prop57_check(5, 3, 2));
  EXPECT_TRUE(charpoly_prop57_check(4, 3, 0));
  EXPECT_EQ(twisted_swap_matrix(4, 3, 0).characteristic_polynomial(), (Poly{1, 0, -2, 0, 1}));
  expect_code(ErrorCode::InvalidRowParameters, [] { charpoly_prop57_check(2, 1, 1); });
  expect_code(ErrorCode::InvalidRowParameters, [] { charpoly_prop57_check(3, 3, 1); });
}

TEST(CharpolyIdentity, ExhaustiveAgainstLeibniz)
{
  for (int m = 3; m <= 8; ++m)
    for (int a = 1; a < 2 * m; ++a) {
      if (std::gcd(a, 2 * m) != 1)
        continue;
      for (int i = 0; i < m; ++i) {
        EXPECT_TRUE(charpoly_prop57_check(m, a, i));
        EXPECT_EQ(leibniz_charpoly(twisted_swap_matrix(m, a, i)), twisted_swap_quartic(m, a, i)) << m << " " << a << " " << i;
      }
    }
}

TEST(ProjectiveLine, Normalization)
{
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  EXPECT_EQ(ProjectiveLinePoint(2, 2 * i), ProjectiveLinePoint(1, i));
  EXPECT_EQ(ProjectiveLinePoint(0, 5), ProjectiveLinePoint(0, 1));
  EXPECT_EQ(ProjectiveLinePoint(i, 1), ProjectiveLinePoint(1, -i));
  expect_code(ErrorCode::DivisionByZero, [] { ProjectiveLinePoint(0, 0); });
}

TEST(ThreeFactor, SubChecks)
{
  auto w = verify_lemma71();
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  ASSERT_EQ(w.fixed.size(), 3u);
  // oracle: each listed point is fixed, and the two are distinct
  for (int k = 0; k < 3; ++k) {
    ASSERT_EQ(w.fixed[k].size(), 2u);
    for (const auto &p : w.fixed[k])
      EXPECT_EQ(p.apply(w.elements[k]), p);
    EXPECT_FALSE(w.fixed[k][0] == w.fixed[k][1]);
  }
  auto has = [](const std::vector<ProjectiveLinePoint> &f, const ProjectiveLinePoint &p) {
    return std::find(f.begin(), f.end(), p) != f.end();
  };
  EXPECT_TRUE(has(w.fixed[0], {1, 0}) && has(w.fixed[0], {0, 1}));
  EXPECT_TRUE(has(w.fixed[1], {1, i}) && has(w.fixed[1], {1, -i}));
  EXPECT_TRUE(has(w.fixed[2], {1, 1}) && has(w.fixed[2], {1, -1}));
  EXPECT_EQ(w.wreath_stabilizer_order, 8);
  ASSERT_EQ(w.stabilizer.size(), 2u);
  EXPECT_EQ(w.stabilizer[1], (std::vector<int>{1, 2, 3}));
  ASSERT_EQ(w.tangent_weights.size(), 6u);
  for (const auto &x : w.tangent_weights)
    EXPECT_EQ(x, Cyclotomic(-1));
  EXPECT_EQ(w.tangent_rank, 6);
}

TEST(ThreeFactor, MoebiusDerivativeMatchesDifferenceQuotientLimit)
{
  // For z -> (c + d z)/(a + b z) at a fixed point z0, f(z) - z0 = f'(z0)(z - z0)
  // + O((z - z0)^2); exact check via the identity f(z) - z0 = (z - z0) / ((a + b z0)(a + b z)).
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  Matrix h = Matrix::from_rows({{0, 1}, {-1, 0}});
  ProjectiveLinePoint p(1, i);
  Cyclotomic z0 = p.b(), z = z0 + Cyclotomic(Rational(1, 7));
  Cyclotomic fz = (h(1, 0) + h(1, 1) * z) / (h(0, 0) + h(0, 1) * z);
  Cyclotomic slope = (fz - z0) / (z - z0);
  Cyclotomic den = (h(0, 0) + h(0, 1) * z0) * (h(0, 0) + h(0, 1) * z);
  EXPECT_EQ(slope, den.inverse());
  EXPECT_EQ(moebius_derivative(h, p), (h(0, 0) + h(0, 1) * z0).pow(-2));
}

TEST(Classify, Examples)
{
  auto h = classify(parse_row_spec("H"));
  EXPECT_EQ(h.result, kRes);
  EXPECT_EQ(h.rule, "wreath");
  auto i = classify(parse_row_spec("I"));
  EXPECT_EQ(i.result, kNot);
  ASSERT_TRUE(std::holds_alternative<SingularWitness>(i.witness));
  auto b = classify(parse_row_spec("B(m=1,l=1,r=1)"));
  EXPECT_EQ(b.result, kRes);
  EXPECT_EQ(b.reason, "Q_8 x_{Z/2} D_8");
  auto g = classify(parse_row_spec("G(m=2,r=1)"));
  EXPECT_EQ(g.result, VerdictKind::Open);
  EXPECT_FALSE(g.inconclusive);
  auto o = classify(parse_row_spec("O"));
  EXPECT_EQ(o.result, kNot);
  ASSERT_TRUE(std::holds_alternative<OrderSixWitness>(o.witness));
  EXPECT_EQ(std::get<OrderSixWitness>(o.witness).order, 8);

  auto n3 = classify(CaseN{3, K::binary_dihedral(2), K::cyclic(2)});
  EXPECT_EQ(n3.result, kNot);
  ASSERT_TRUE(std::holds_alternative<ParabolicReduction>(n3.witness));
  EXPECT_TRUE(std::get<ParabolicReduction>(n3.witness).lemma.has_value());
  EXPECT_EQ(classify(CaseN{4, K::T(), K::T()}).result, kRes);
  auto d = classify(CaseN{4, K::binary_dihedral(3), K::cyclic(3)});
  EXPECT_EQ(d.result, kNot);
  EXPECT_EQ(std::get<ParabolicReduction>(d.witness).stabilizer_order, 2 * 12 * 3);
  for (const auto &v : {h, i, b, g, o, n3, d})
    EXPECT_FALSE(v.citations.empty());
}

TEST(Classify, Errors)
{
  expect_code(ErrorCode::InvalidRowParameters, [] { classify(CaseN{2, K::T(), K::T()}); });
  expect_code(ErrorCode::InvalidRowParameters, [] { classify(CaseN{3, K::T(), K::cyclic(2)}); });
}

TEST(Classify, CaseNGrid)
{
  auto cases = default_case_n(4, {3});
  std::set<std::string> labels;
  for (const auto &c : cases)
    labels.insert(c.label());
  EXPECT_TRUE(labels.count("G_3(D2,C2)"));
  EXPECT_TRUE(labels.count("G_3(T,D2)"));
  EXPECT_TRUE(labels.count("G_3(O,T)"));
  EXPECT_TRUE(labels.count("G_3(I,I)"));
  EXPECT_FALSE(labels.count("G_3(T,C2)"));
  for (const auto &c : cases) {
    auto v = classify(c);
    EXPECT_EQ(v.result, expected_verdict(c)) << c.label();
  }
}

TEST(Classify, PrimitiveReport)
{
  auto p = primitive_report();
  ASSERT_EQ(p.size(), 7u);
  std::map<std::string, VerdictKind> got;
  for (const auto &e : p)
    got[e.type] = e.result;
  EXPECT_EQ(got["Q"], kNot);
  EXPECT_EQ(got["S_3"], kNot);
  EXPECT_EQ(got["T"], kNot);
  for (auto t : {"R", "S_1", "S_2", "U"})
    EXPECT_EQ(got[t], VerdictKind::Open);
}

TEST(Classify, ReportIsDeterministic)
{
  auto a = classify_all({2, 2, false, {3}});
  auto b = classify_all({2, 2, false, {3}});
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].label, b.rows[i].label);
    EXPECT_EQ(a.rows[i].verdict.reason, b.rows[i].verdict.reason);
  }
}
