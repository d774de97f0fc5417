// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "towercalc/chains.hpp"
#include "towercalc/disklinks.hpp"
#include "towercalc/error.hpp"
#include "towercalc/hilton.hpp"
#include "towercalc/lie.hpp"
#include "towercalc/smith.hpp"
#include "towercalc/tower.hpp"

using namespace towercalc;

namespace {

struct Check {
  std::ostringstream failures;
  bool ok = true;
  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) failures << what;
    if (!cond) ok = false;
  }
};

int failed = 0;

void criterion(int id, const std::string& name, double limit_seconds,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.ok && secs >= limit_seconds) c(false, "runtime " + std::to_string(secs) + " s over limit");
  if (!c.ok) ++failed;
  std::cout << (c.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s)";
  if (!c.ok) std::cout << ": " << c.failures.str();
  std::cout << "\n";
}

HomologySummary les_defect_complex(const ChainMap& f) { return homology(mapping_cone(f)); }

// χ(A) - χ(C) + χ(C, A) for a subcomplex inclusion.
long long les_euler_defect(const ChainMap& sub) {
  return homology(sub.source()).euler_characteristic() -
         homology(sub.target()).euler_characteristic() +
         relative_homology(sub.target(), sub).euler_characteristic();
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);

  criterion(1, "Lyndon words agree with Witt ranks and brute-force enumeration", 5.0, [](Check& c) {
    for (int g = 1; g <= 4; ++g) {
      const auto groups = lie::lyndon_words(g, 12);
      for (int len = 1; len <= 12; ++len)
        c(BigInt(groups[static_cast<std::size_t>(len - 1)].size()) == lie::witt_rank(g, len),
          "count != witt at g=" + std::to_string(g) + " len=" + std::to_string(len));
    }
    for (int g = 1; g <= 3; ++g) {
      const auto groups = lie::lyndon_words(g, 8);
      for (int len = 1; len <= 8; ++len) {
        std::vector<std::vector<int>> got;
        for (const auto& w : groups[static_cast<std::size_t>(len - 1)]) got.push_back(w.letters());
        c(got == oracles::brute_lyndon(g, len),
          "brute mismatch at g=" + std::to_string(g) + " len=" + std::to_string(len));
      }
    }
  });

  criterion(2, "wedge of two 3-spheres has ranks {3:2, 5:1, 7:2, 9:3}", 1.0, [](Check& c) {
    const std::map<int, BigInt> expect{{3, 2}, {5, 1}, {7, 2}, {9, 3}};
    const auto t = hilton::wedge_pi_ranks(hilton::SphereWedge({3, 3}), 9);
    c(t.entries() == expect, "library table differs");
    c(oracles::brute_wedge_ranks({3, 3}, 9) == expect, "basic-product oracle differs");
  });

  criterion(3, "pi_0 has 2^t elements and pi_1 is (Z/2)^t", 1.0, [](Check& c) {
    for (std::int64_t t : {1, 2, 3, 5}) {
      c(disklinks::pi0_cardinality(t) == (BigInt(1) << t), "pi0 at t=" + std::to_string(t));
      const auto g = disklinks::pi1_description(t);
      c(g.cyclic_order == 2 && g.copies == t && g.order() == (BigInt(1) << t),
        "pi1 at t=" + std::to_string(t));
    }
    c(disklinks::pi1_description(1).str() == "Z/2", "pi1 text at t=1");
    c(disklinks::pi1_description(3).str() == "(Z/2)^3", "pi1 text at t=3");
  });

  criterion(4, "short exact sequence reports are consistent", 10.0, [](Check& c) {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> n_dist(2, 4), t_dist(1, 3), m_dist(1, 6);
    int exact_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 * n_dist(rng), t = t_dist(rng), m = m_dist(rng);
      const auto rep = disklinks::ses_rank_report(n, t, m);
      const std::string at = " at n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             " m=" + std::to_string(m);
      c(rep.euler_relation == rep.rank_c - rep.rank_b, "euler relation" + at);
      const bool forced = rep.rank_b == 0 || rep.rank_c == 0;
      c(rep.exact() == forced, "EXACT flag" + at);
      if (forced) {
        ++exact_seen;
        c(*rep.exact_even - *rep.exact_odd == rep.euler_relation, "exact values" + at);
      }
    }
    c(exact_seen > 0, "no forced-exact case sampled");
  });

  criterion(5, "tower connectivity formulas", 1.0, [](Check& c) {
    c(tower::phi_connectivity(9, 4, 2) == 2, "phi(9,4,2)");
    c(tower::obstruction_degree(9, 3) == 15, "obstruction_degree(9,3)");
    int points = 0;
    for (std::int64_t n = 3; n <= 22 && points < 1000; ++n)
      for (std::int64_t k = 0; k <= n - 3 && points < 1000; ++k)
        for (std::int64_t j = 2; j <= 11 && points < 1000; ++j, ++points) {
          const std::string at = " at (" + std::to_string(n) + "," + std::to_string(k) + "," +
                                 std::to_string(j) + ")";
          c(tower::stage_map_connectivity(n, k, j) == tower::phi_connectivity(n, k, j - 1),
            "stage != phi(j-1)" + at);
          c(tower::convergence_check(n, k, j) == ((j + 1) * k + 2 * j <= j * n),
            "convergence" + at);
          const auto r = tower::comparison_connectivities(n, k, j);
          c(*r.b == *r.b_raw - j * k, "b != b_raw - jk" + at);
        }
    c(points == 1000, "grid has " + std::to_string(points) + " points");
  });

  criterion(6, "layer profile of D^4 x T with |T| = 2", 1.0, [](Check& c) {
    const auto two = tower::layer_profile(2, 4, 2);
    c(two.top_degree == 2 && two.table.entries() == std::map<int, BigInt>{{2, 4}}, "j = 2");
    const auto three = tower::layer_profile(2, 4, 3);
    c(three.top_degree == 4 && three.table.entries() == std::map<int, BigInt>{{4, 16}}, "j = 3");
  });

  criterion(7, "homological desuspension and Smith form cross-check", 10.0, [](Check& c) {
    const auto cyl = fixtures::cylinder_pair();
    const auto good = verify_desuspension(cyl.cylinder, cyl.inclusion, cyl.section);
    c(good.verdict == DesuspensionVerdict::Match, "cylinder not MATCH");
    const HomologyGroup z{1, {}};
    bool saw0 = false, saw1 = false;
    for (const auto& row : good.rows) {
      if (row.degree == 1) saw0 = row.cone == z && row.relative == z;
      if (row.degree == 2) saw1 = row.cone == z && row.relative == z;
    }
    c(saw0 && saw1, "cylinder rows are not Z <-> Z in degrees 1 and 2");
    for (int n = 3; n <= 5; ++n) {
      const auto p = fixtures::disk_pair(n);
      c(verify_desuspension(p.disk, p.inclusion, p.section).verdict == DesuspensionVerdict::Match,
        "disk n=" + std::to_string(n) + " not MATCH");
    }
    c(verify_desuspension(cyl.cylinder, cyl.inclusion, cyl.bad_section).verdict ==
          DesuspensionVerdict::Mismatch,
      "degree-2 section not MISMATCH");

    std::mt19937_64 rng(500);
    std::uniform_int_distribution<int> dim(1, 5), entry(-5, 5);
    for (int trial = 0; trial < 500; ++trial) {
      Matrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
      const auto snf = smith_normal_form(a);
      c(snf.factors == oracles::determinantal_invariant_factors(a),
        "invariant factors differ on case " + std::to_string(trial));
      c(snf.left * a * snf.right == snf.diagonal, "U A V != D on case " + std::to_string(trial));
    }
  });

  criterion(8, "normal invariants are exactly the degree +-1 maps", 1.0, [](Check& c) {
    for (int n = 3; n <= 4; ++n) {
      const auto p = fixtures::disk_pair(n);
      for (long deg = -2; deg <= 2; ++deg) {
        const auto rep = check_normal_invariant(fixtures::sphere_to_thom(p, deg), p.disk,
                                                p.inclusion, p.section, n);
        const bool accepted = rep.verdict == NormalInvariantVerdict::IsNormalInvariant;
        c(accepted == (deg == 1 || deg == -1),
          "n=" + std::to_string(n) + " degree " + std::to_string(deg));
      }
    }
  });

  criterion(9, "chain complex engine invariants", 5.0, [](Check& c) {
    bool rejected = false;
    try {
      ChainComplex(0, {1, 1, 1}, {{1, Matrix{{1}}}, {2, Matrix{{1}}}});
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::InvariantViolation;
    }
    c(rejected, "d∘d != 0 accepted");

    std::vector<ChainComplex> complexes{fixtures::point(), fixtures::sphere(1), fixtures::sphere(4),
                                        fixtures::rp2(), fixtures::two_circles(),
                                        fixtures::cylinder_pair().cylinder};
    std::vector<ChainMap> pairs{fixtures::cylinder_pair().inclusion};
    for (int n = 2; n <= 6; ++n) {
      const auto p = fixtures::disk_pair(n);
      complexes.push_back(p.disk);
      complexes.push_back(p.thom);
      pairs.push_back(p.inclusion);
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
      complexes.push_back(fixtures::random_complex(rng));
      pairs.push_back(fixtures::random_pair(rng));
    }
    for (const auto& x : complexes)
      c(les_defect_complex(ChainMap::identity(x)).is_zero(), "cone of identity not acyclic");
    for (const auto& pr : pairs) c(les_euler_defect(pr) == 0, "LES Euler defect nonzero");
  });

  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}
