// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "conjlat/detform.hpp"
#include "conjlat/pisotgen.hpp"
#include "conjlat/report.hpp"

using namespace conjlat;

namespace {

int failures = 0;
long grams_checked = 0;
long grams_failed = 0;

void result(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << "\n";
  if (!ok) ++failures;
}

// Every Gram built here funnels through this row-sum gate (criterion 9).
const GramMatrix& checked(const GramMatrix& g, const IntPolynomial& f) {
  ++grams_checked;
  if (!row_sums_ok(g, f)) ++grams_failed;
  return g;
}

double coherence(const IntMatrix& g) {
  double worst = 0;
  int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double c = std::abs(to_double(g[i][j])) /
                 std::sqrt(to_double(g[i][i]) * to_double(g[j][j]));
      worst = std::max(worst, c);
    }
  return worst;
}

void criterion1() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  auto skew = certify(checked(gram_quadratic(1, 5, 5),
                              IntPolynomial::parse("x^2+5x+5")),
                      shortest_vectors(gram_quadratic(1, 5, 5)));
  auto t1 = clock::now();
  auto wr_g = gram_quadratic(1, -2, -1);
  auto wr_mv = shortest_vectors(
      checked(wr_g, IntPolynomial::parse("x^2-2x-1")));
  auto wr = certify(wr_g, wr_mv);
  auto t2 = clock::now();
  double ms1 = std::chrono::duration<double, std::milli>(t1 - t0).count();
  double ms2 = std::chrono::duration<double, std::milli>(t2 - t1).count();
  bool vectors_ok =
      wr_mv.vectors == std::vector<IntVector>{{Int(0), Int(1)},
                                              {Int(1), Int(0)}};
  bool ok = skew.min_norm_sq == 10 && skew.is_wr.value == tri::no &&
            skew.kissing == 2 && wr.min_norm_sq == 6 &&
            wr.is_wr.value == tri::yes && wr.is_gwr.value == tri::yes &&
            wr.kissing == 4 && vectors_ok && ms1 < 10 && ms2 < 10;
  std::ostringstream d;
  d << "quadratic examples: min " << skew.min_norm_sq << "/" << wr.min_norm_sq
    << ", kissing " << skew.kissing << "/" << wr.kissing << ", " << ms1
    << "+" << ms2 << " ms";
  result(1, ok, d.str());
}

void criterion2() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  long tested = 0, agreed = 0;
  for (long a2 = 1; a2 <= 10; ++a2)
    for (long a1 = -25; a1 <= 25; ++a1) {
      if (a1 == 0) continue;
      for (long a0 = -25; a0 <= 25; ++a0) {
        Int disc = Int(a1) * a1 - 4 * Int(a2) * a0;
        if (disc == 0 || is_perfect_square(disc)) continue;
        ++tested;
        auto g = gram_quadratic(a2, a1, a0);
        IntPolynomial f({Int(a0), Int(a1), Int(a2)});
        auto cert = certify(checked(g, f), shortest_vectors(g));
        bool closed = planar_wr(a2, a1, a0).is_wr;
        if (closed == (cert.is_wr.value == tri::yes)) ++agreed;
      }
    }
  double secs = std::chrono::duration<double>(clock::now() - t0).count();
  bool ok = tested > 0 && agreed == tested && secs < 30;
  std::ostringstream d;
  d << "planar criterion vs enumeration: " << agreed << "/" << tested
    << " agree in " << secs << " s";
  result(2, ok, d.str());
}

void criterion3() {
  struct Row {
    const char* poly;
    GroupKind kind;
  };
  const Row pisot_rows[] = {
      {"x^3+42x^2-24", GroupKind::Cyclic},
      {"x^3-42x^2+24", GroupKind::Cyclic},
      {"x^3-2x^2-x+1", GroupKind::Cyclic},
      {"x^3+32x^2-28", GroupKind::Symmetric},
      {"x^3+49x^2+47", GroupKind::Symmetric},
      {"x^3-47x^2+28", GroupKind::Symmetric},
  };
  bool ok = true;
  std::string why;
  for (const auto& row : pisot_rows) {
    auto rep = analyze(IntPolynomial::parse(row.poly));
    if (rep.gram) checked(*rep.gram, rep.f);
    if (rep.pisot != tri::yes || rep.galois.kind != row.kind) {
      ok = false;
      why = row.poly;
    }
  }
  const char* non_pisot[] = {"x^3+3x^2-6x+1", "x^3+5x^2+6x+1", "x^3-x^2-2x+1",
                             "x^3-3x^2+3"};
  for (const char* poly : non_pisot) {
    auto rep = analyze(IntPolynomial::parse(poly));
    if (rep.gram) checked(*rep.gram, rep.f);
    if (rep.pisot != tri::no || rep.galois.kind != GroupKind::Cyclic ||
        !is_perfect_square(rep.disc)) {
      ok = false;
      why = poly;
    }
  }
  auto roots = find_roots_auto(IntPolynomial::parse("x^3-3x^2+3"));
  const double expected[] = {2.53209, 1.3473, -0.879385};
  for (int i = 0; i < 3; ++i)
    if (std::abs(to_double(roots.roots[i].re) - expected[i]) >= 1e-5) {
      ok = false;
      why = "roots of x^3-3x^2+3";
    }
  result(3, ok,
         ok ? "cubic table rows reproduced (groups, Pisot flags, roots)"
            : "mismatch at " + why);
}

void criterion4() {
  auto rep = analyze(IntPolynomial::parse("x^3+3x^2-6x+1"));
  checked(*rep.gram, rep.f);
  auto inv = invariants(rep.f);
  bool ok = inv.A == 21 && inv.B == -6 && rep.cubic &&
            rep.cubic->wr_by_criterion == tri::yes &&
            rep.cubic->roots_are_minimal == tri::yes &&
            rep.certificate->min_norm_sq == 21 &&
            rep.certificate->kissing == 6 &&
            rep.certificate->is_wr.value == tri::yes &&
            rep.certificate->is_gwr.value == tri::yes &&
            rep.determinants && rep.determinants->det_gram == 6561;
  std::ostringstream d;
  d << "worked cubic: A=" << inv.A << " B=" << inv.B << " min "
    << rep.certificate->min_norm_sq << " kissing " << rep.certificate->kissing
    << " detGram " << rep.determinants->det_gram;
  result(4, ok, d.str());
}

void criterion5() {
  long pairs = 0, bad = 0;
  auto compare = [&](const IntPolynomial& f, const GaloisClass& cls) {
    auto roots = find_roots(f, 256);
    auto exact = checked(gram_exact(f, cls, roots), f);
    auto [emb, num] = gram_numeric(f, cls, roots);
    checked(num, f);
    int m = exact.degree;
    const IntMatrix& full =
        exact.full_entries ? *exact.full_entries : exact.entries;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double e = to_double(full[i][j]);
        double v = to_double(num.num_entries[i][j]);
        ++pairs;
        if (std::abs(e - v) > 1e-8 * std::max(1.0, std::abs(e))) ++bad;
      }
  };
  GaloisClass cyc;
  cyc.kind = GroupKind::Cyclic;
  cyc.splitting_degree = 3;
  cyc.cycle = std::vector<int>{1, 2, 0};
  for (int t = 0; t < 20; ++t) {  // x^3 - t x^2 - (t+3) x - 1, all cyclic
    IntPolynomial f({Int(-1), Int(-(t + 3)), Int(-t), Int(1)});
    compare(f, cyc);
  }
  GaloisClass s3;
  s3.kind = GroupKind::Symmetric;
  s3.splitting_degree = 6;
  int found = 0;
  for (long a2 = -6; a2 <= 6 && found < 20; ++a2)
    for (long a1 = -6; a1 <= 6 && found < 20; ++a1)
      for (long a0 = -6; a0 <= 6 && found < 20; ++a0) {
        IntPolynomial f({Int(a0), Int(a1), Int(a2), Int(1)});
        Int disc = discriminant(f);
        if (disc <= 0 || is_perfect_square(disc)) continue;
        if (is_irreducible(f) != tri::yes) continue;
        compare(f, s3);
        ++found;
      }
  GaloisClass s5;
  s5.kind = GroupKind::Symmetric;
  s5.splitting_degree = 120;
  compare(IntPolynomial::parse("x^5+x^4-7x^3-3x^2+3x+1"), s5);
  std::ostringstream d;
  d << "tier-E vs numeric Gram: " << pairs << " entries compared, " << bad
    << " beyond 1e-8 relative";
  result(5, bad == 0 && pairs > 0, d.str());
}

void criterion6() {
  std::srand(17);
  long tested = 0, bad = 0;
  for (int n : {3, 5, 7}) {
    int done = 0;
    while (done < 34) {
      Int A = 1 + std::rand() % 40;
      Int B = (std::rand() % 61) - 30;
      if ((n - 1) * A - 2 * B <= 0 || A + 2 * B <= 0) continue;
      if ((n - 1) * A - B <= 0 || A + B <= 0) continue;
      Int diag = factorial(n - 1) * A;
      IntMatrix sym(n, IntVector(n, 2 * factorial(n - 2) * B));
      IntMatrix alt(n, IntVector(n, factorial(n - 2) * B));
      for (int i = 0; i < n; ++i) sym[i][i] = alt[i][i] = diag;
      ++tested;
      if (det_symmetric(n, A, B).radicand != bareiss_determinant(sym)) ++bad;
      if (det_alternating(n, A, B).radicand != bareiss_determinant(alt))
        ++bad;
      ++done;
    }
  }
  // circulant corpus: the cyclic polynomials used elsewhere in the suite
  const char* cyclic_polys[] = {"x^3+3x^2-6x+1", "x^3+5x^2+6x+1",
                                "x^3-x^2-2x+1", "x^3-3x^2+3", "x^3+42x^2-24",
                                "x^5+x^4-4x^3-3x^2+3x+1"};
  for (const char* poly : cyclic_polys) {
    auto rep = analyze(IntPolynomial::parse(poly));
    checked(*rep.gram, rep.f);
    ++tested;
    if (!rep.determinants || !rep.determinants->circulant_full ||
        !rep.determinants->circulant_agrees)
      ++bad;
  }
  std::ostringstream d;
  d << "determinant formulas: " << tested << " cases, " << bad
    << " disagreements";
  result(6, bad == 0, d.str());
}

void criterion7() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  long certified = 0, skipped = 0, bad = 0;
  for (int n : {3, 5}) {
    for (int s1 : {+1, -1})
      for (int s0 : {+1, -1}) {
        FamilySpec spec{n, s1, s0, 50};
        auto family = generate_family(spec);
        for (const auto& f : family) {
          if (!perron_criterion(f)) ++bad;
          // tier-E needs totally real roots; for this family that happens
          // only in the cubic opposite-sign patterns (disc > 0)
          if (n == 3 && to_double(discriminant(f)) > 0) {
            auto roots = find_roots(f, 256);
            GaloisClass cls;
            cls.kind = GroupKind::Symmetric;  // disc is never square here
            cls.splitting_degree = 6;
            if (is_perfect_square(discriminant(f))) {
              cls.kind = GroupKind::Cyclic;
              cls.splitting_degree = 3;
              cls.cycle = std::vector<int>{1, 2, 0};
            }
            auto g = checked(gram_exact(f, cls, roots), f);
            auto cert = certify(g, shortest_vectors(g));
            bool ok = cert.is_gwr.value == tri::yes &&
                      cert.is_nearly_orthogonal.value == tri::yes &&
                      cert.has_minimal_basis.value == tri::yes &&
                      cert.kissing == 2 * n &&
                      coherence(g.entries) <= coherence_bound(n) + 1e-12;
            if (!ok) ++bad;
            ++certified;
          } else {
            ++skipped;  // certified by construction; no tier-E realization
          }
        }
      }
  }
  double secs = std::chrono::duration<double>(clock::now() - t0).count();
  std::ostringstream d;
  d << "family certification: " << certified << " tier-E certified, "
    << skipped << " construction-certified (no tier-E), " << bad
    << " violations in " << secs << " s";
  result(7, bad == 0 && certified >= 100 && secs < 300, d.str());
}

void criterion8() {
  long records = 0, violations = 0;
  for (long a2 = -10; a2 <= 10; ++a2)
    for (long a1 = -10; a1 <= 10; ++a1)
      for (long a0 = -10; a0 <= 10; ++a0) {
        IntPolynomial f({Int(a0), Int(a1), Int(a2), Int(1)});
        Int disc = discriminant(f);
        if (disc <= 0 || is_irreducible(f) != tri::yes) continue;
        GaloisClass cls;
        bool cyclic = is_perfect_square(disc);
        cls.kind = cyclic ? GroupKind::Cyclic : GroupKind::Symmetric;
        cls.splitting_degree = cyclic ? 3 : 6;
        if (cyclic) cls.cycle = std::vector<int>{1, 2, 0};
        RootSet totally_real;
        totally_real.real_count = 3;
        auto g = checked(gram_exact(f, cls, totally_real), f);
        auto mv = shortest_vectors(g);
        ++records;
        if (mv.min_norm_sq < cls.splitting_degree * Int(a2) * a2 &&
            mv.kissing % 3 != 0)
          ++violations;
      }
  std::ostringstream d;
  d << "kissing divisibility: " << records << " tier-E records, "
    << violations << " violations";
  result(8, records > 0 && violations == 0, d.str());
}

void criterion9() {
  std::ostringstream d;
  d << "row-sum identity: " << grams_checked << " Grams checked, "
    << grams_failed << " violations";
  result(9, grams_checked > 0 && grams_failed == 0, d.str());
}

void criterion10() {
  double cb = coherence_bound(3);
  double mb = main_bound(3);
  bool ok = std::abs(cb - 0.296535) < 5e-7 && mb > 20.23 && mb < 20.24 &&
            24.0 > mb;
  std::ostringstream d;
  d << "constants: coherence_bound(3)=" << cb << ", main_bound(3)=" << mb;
  result(10, ok, d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
