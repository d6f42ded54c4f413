// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1 and 10 exercise the installed command-line tool; the
// rest call the library directly.

#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "dualkit/document.hpp"
#include "dualkit/duality.hpp"
#include "dualkit/generators.hpp"

using namespace dualkit;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(DUALKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// R(X) by its definition: a R(X) a' iff every x in X above a' has box above a.
Rel relation_of_subset(const BoxAlgebra& a, const std::vector<Mask>& xs) {
  const int n = a.atom_count();
  Rel r = rel_total(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (Mask x : xs)
        if (((x >> j) & 1) && !((a.box(x) >> i) & 1)) r &= ~rel_bit(n, i, j);
  return r;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const CliResult r = run_cli("counterexamples");
  const double elapsed = seconds_since(start);
  bool ok = r.exit_code == 0 && elapsed < 1.0;
  ok = ok && r.output.find("\"item\":1") != std::string::npos &&
       r.output.find("\"condition\":\"upward-closed\"") != std::string::npos;
  ok = ok && r.output.find("\"frame_hom\":true,\"neighborhood_hom\":false") !=
                 std::string::npos &&
       r.output.find("\"data\":[0,3]") != std::string::npos; // X = {0,1}
  ok = ok && r.output.find("\"neighborhood_hom\":true,\"frame_hom\":false") !=
                 std::string::npos &&
       r.output.find("\"condition\":\"mkf-hom-2\"") != std::string::npos &&
       r.output.find("f(0) Q 0 but no successor of 0 maps to 0") != std::string::npos;
  report(1, "counterexample fidelity", ok,
         "exit " + std::to_string(r.exit_code));
}

void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  GenParams p;
  p.max_atoms = 3;
  const auto algebras = enumerate_normal_algebras(p);
  int bad = 0;
  for (const BoxAlgebra& a : algebras)
    if (!verify_tau(a).ok) ++bad;
  const double elapsed = seconds_since(start);
  report(2, "tau duality on all 530 small normal algebras",
         algebras.size() == 530 && bad == 0 && elapsed < 60.0,
         std::to_string(bad) + " failures, " + std::to_string(elapsed) + "s");
}

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  GenParams p;
  p.seed = 7;
  p.count = 1000;
  p.close_under_intersection = true;
  p.directed_filter = Kappa::all();
  int bad = 0;
  for (const MRFrame& m : random_mrframes(p))
    if (!verify_theta(m).ok) ++bad;

  const auto negative = verify_theta(*fixture("FX4_fork").m1);
  const bool negative_ok = !negative.ok && negative.witness &&
                           negative.witness->condition == "mkf-hom-1" &&
                           negative.witness->data ==
                               std::vector<long long>{0, 0};
  const double elapsed = seconds_since(start);
  report(3, "theta duality on 1000 directed frames plus the fork witness",
         bad == 0 && negative_ok && elapsed < 120.0,
         std::to_string(bad) + " failures, " + std::to_string(elapsed) + "s");
}

std::vector<NFrame> all_nframes_up_to_two_worlds() {
  std::vector<NFrame> out;
  const WorldSet w1({"0"});
  for (unsigned f = 0; f < 4; ++f) {
    std::vector<Mask> family;
    for (Mask x = 0; x < 2; ++x)
      if ((f >> x) & 1) family.push_back(x);
    out.emplace_back(w1, std::vector<std::vector<Mask>>{family});
  }
  const WorldSet w2({"0", "1"});
  for (unsigned f0 = 0; f0 < 16; ++f0)
    for (unsigned f1 = 0; f1 < 16; ++f1) {
      std::vector<std::vector<Mask>> nbhd(2);
      for (Mask x = 0; x < 4; ++x) {
        if ((f0 >> x) & 1) nbhd[0].push_back(x);
        if ((f1 >> x) & 1) nbhd[1].push_back(x);
      }
      out.emplace_back(w2, nbhd);
    }
  return out;
}

void criterion_4() {
  int cases = 0, bad = 0;
  for (const NFrame& z : all_nframes_up_to_two_worlds()) {
    if (!check_nfr(z, Kappa::all()).ok) continue;
    ++cases;
    const MRFrame m = functor_H_obj(z, Kappa::all(), round_trip_caps());
    if (!verify_nfr_equivalence(m, z, Kappa::all()).ok) ++bad;
  }
  const bool exhaustive_ok = cases > 0 && bad == 0;

  int seeded_bad = 0, seeded_cases = 0;
  std::uint64_t seed = 21;
  for (Kappa k : {Kappa::finite(2), Kappa::finite(3), Kappa::all()}) {
    GenParams p;
    p.seed = seed++;
    p.count = 167;
    p.close_under_intersection = true;
    p.directed_filter = k;
    for (const MRFrame& m : random_mrframes(p)) {
      ++seeded_cases;
      if (!verify_nfr_equivalence(m, functor_N_obj(m), k).ok) ++seeded_bad;
    }
  }
  report(4, "N/H equivalence, exhaustive and seeded",
         exhaustive_ok && seeded_cases >= 500 && seeded_bad == 0,
         std::to_string(cases) + " exhaustive + " + std::to_string(seeded_cases) +
             " seeded cases");
}

void criterion_5() {
  GenParams p;
  p.max_atoms = 2;
  int bad = 0, routes = 0;
  for (const BoxAlgebra& a : enumerate_normal_algebras(p)) {
    if (!verify_cama_nfr(a, functor_J_obj(a), Kappa::all()).ok) ++bad;
    if (!(functor_J_obj(a) == functor_N_obj(functor_F_obj(a, round_trip_caps()))))
      ++routes;
  }
  int zcases = 0;
  for (const NFrame& z : all_nframes_up_to_two_worlds()) {
    if (!check_nfr(z, Kappa::all()).ok) continue;
    ++zcases;
    const BoxAlgebra k = functor_K_obj(z, round_trip_caps());
    if (!verify_cama_nfr(k, z, Kappa::all()).ok) ++bad;
    const BoxAlgebra via_h =
        functor_G_obj(functor_H_obj(z, Kappa::all(), round_trip_caps()),
                      round_trip_caps());
    if (!(via_h == k)) ++routes;
  }
  report(5, "J/K duality and route consistency", bad == 0 && routes == 0 && zcases > 0,
         std::to_string(zcases) + " neighborhood cases");
}

void criterion_6() {
  GenParams p;
  p.max_atoms = 2;
  const auto algebras = enumerate_normal_algebras(p);
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;

  for (const BoxAlgebra& a : algebras) {
    if (a.atom_count() != 2) continue;
    const auto carrier = static_cast<Mask>(a.carrier_size());
    // All X with |X| <= 2 as element lists.
    std::vector<std::vector<Mask>> subsets{{}};
    for (Mask x = 0; x < carrier; ++x) {
      subsets.push_back({x});
      for (Mask y = x + 1; y < carrier; ++y) subsets.push_back({x, y});
    }
    for (const auto& xs : subsets) {
      const Rel r = relation_of_subset(a, xs);
      for (int i = 0; i < a.atom_count(); ++i)
        for (int j = 0; j < a.atom_count(); ++j) {
          const Mask atom_a = Mask{1} << i;
          const Mask atom_b = Mask{1} << j;
          const bool adjacent = rel_has(r, a.atom_count(), i, j);
          const bool not_below = !mask_leq(atom_b, p_element(a, xs, atom_a));
          if (adjacent != not_below) ++bad;
        }
    }
  }

  int hom_cases = 0;
  for (const BoxAlgebra& a : algebras)
    for (const BoxAlgebra& b : algebras) {
      // All atom maps g : atoms(b) -> atoms(a) that induce modal homs f: a -> b.
      std::vector<int> g(static_cast<std::size_t>(b.atom_count()), 0);
      for (;;) {
        const ElementMap f = cba_hom_from_atom_map(a, b, g);
        if (is_modal_hom(f).ok) {
          ++hom_cases;
          const auto cb = static_cast<Mask>(b.carrier_size());
          std::vector<std::vector<Mask>> ys{{}};
          for (Mask y = 0; y < cb; ++y) {
            ys.push_back({y});
            for (Mask y2 = y + 1; y2 < cb; ++y2) ys.push_back({y, y2});
          }
          for (const auto& yset : ys)
            for (int bi = 0; bi < b.atom_count(); ++bi) {
              const Mask atom_b = Mask{1} << bi;
              const Mask p_yb = p_element(b, yset, atom_b);
              const Mask x = adjoint(f, p_yb, AdjointSide::Right);
              const Rel r = relation_of_subset(a, {x});
              const Mask fb = adjoint(f, atom_b, AdjointSide::Left);
              const int fb_idx = std::countr_zero(fb);
              for (int ai = 0; ai < a.atom_count(); ++ai) {
                const bool adjacent = rel_has(r, a.atom_count(), fb_idx, ai);
                const bool not_below = !mask_leq(Mask{1} << ai, x);
                if (adjacent != not_below) ++bad;
              }
            }
        }
        int i = 0;
        while (i < b.atom_count() &&
               ++g[static_cast<std::size_t>(i)] == a.atom_count())
          g[static_cast<std::size_t>(i++)] = 0;
        if (i == b.atom_count()) break;
      }
    }
  const double elapsed = seconds_since(start);
  report(6, "adjacency lemma and its inverse-image instance",
         bad == 0 && hom_cases > 0 && elapsed < 30.0,
         std::to_string(hom_cases) + " homs, " + std::to_string(elapsed) + "s");
}

void criterion_7() {
  GenParams p;
  p.seed = 31;
  p.count = 400; // 200 pairs
  const auto frames = random_mrframes(p);
  int cases = 0, bad = 0;
  for (std::size_t i = 0; i + 1 < frames.size(); i += 2) {
    const MRFrame& m1 = frames[i];
    const MRFrame& m2 = frames[i + 1];
    std::vector<int> table(static_cast<std::size_t>(m1.size()), 0);
    for (;;) {
      ++cases;
      if (!corollary_preimage_check(WorldMap(m1.worlds(), m2.worlds(), table), m1, m2))
        ++bad;
      int w = 0;
      while (w < m1.size() && ++table[static_cast<std::size_t>(w)] == m2.size())
        table[static_cast<std::size_t>(w++)] = 0;
      if (w == m1.size()) break;
    }
  }
  report(7, "preimage corollary over all maps between 200 seeded frame pairs",
         bad == 0 && cases > 0, std::to_string(cases) + " maps");
}

void criterion_8() {
  int bad = 0, homs = 0;
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2) {
      std::vector<std::string> l1, l2;
      for (int i = 0; i < n1; ++i) l1.push_back("a" + std::to_string(i));
      for (int i = 0; i < n2; ++i) l2.push_back("b" + std::to_string(i));
      std::vector<Mask> id1(std::size_t{1} << n1), id2(std::size_t{1} << n2);
      for (Mask x = 0; x < static_cast<Mask>(id1.size()); ++x) id1[x] = x;
      for (Mask x = 0; x < static_cast<Mask>(id2.size()); ++x) id2[x] = x;
      const BoxAlgebra a(WorldSet(l1), id1);
      const BoxAlgebra b(WorldSet(l2), id2);
      std::vector<int> g(static_cast<std::size_t>(n2), 0);
      for (;;) {
        const ElementMap f = cba_hom_from_atom_map(a, b, g);
        ++homs;
        const auto ca = static_cast<Mask>(a.carrier_size());
        const auto cb = static_cast<Mask>(b.carrier_size());
        for (Mask x = 0; x < ca && bad == 0; ++x)
          for (Mask y = 0; y < cb; ++y) {
            if (mask_leq(f.apply(x), y) !=
                mask_leq(x, adjoint(f, y, AdjointSide::Right)))
              ++bad;
            if (mask_leq(adjoint(f, y, AdjointSide::Left), x) !=
                mask_leq(y, f.apply(x)))
              ++bad;
          }
        for (Mask y1 = 0; y1 < cb && bad == 0; ++y1)
          for (Mask y2 = 0; y2 < cb; ++y2)
            if (mask_leq(y1, y2)) {
              if (!mask_leq(adjoint(f, y1, AdjointSide::Right),
                            adjoint(f, y2, AdjointSide::Right)))
                ++bad;
              if (!mask_leq(adjoint(f, y1, AdjointSide::Left),
                            adjoint(f, y2, AdjointSide::Left)))
                ++bad;
            }
        for (int atom = 0; atom < n2; ++atom)
          if (std::popcount(adjoint(f, Mask{1} << atom, AdjointSide::Left)) != 1)
            ++bad;
        int i = 0;
        while (i < n2 && ++g[static_cast<std::size_t>(i)] == n1)
          g[static_cast<std::size_t>(i++)] = 0;
        if (i == n2) break;
      }
    }

  GenParams p;
  p.max_atoms = 3;
  bool atoms_ok = true;
  for (const BoxAlgebra& a : enumerate_normal_algebras(p))
    if (!check_atom_characterizations(a)) atoms_ok = false;
  report(8, "adjoint equations and atom characterizations",
         bad == 0 && atoms_ok && homs > 0, std::to_string(homs) + " homs");
}

void criterion_9() {
  const BoxAlgebra a = functor_G_obj(*fixture("FX4_fork").m1);
  const auto cls = validate_algebra(a, Kappa::all());
  const bool ok = cls.monotone && !cls.binary_additive && cls.additivity_witness &&
                  cls.additivity_witness->first == Mask{2} &&
                  cls.additivity_witness->second == Mask{4};
  report(9, "non-normality witness of the fork algebra", ok);
}

void criterion_10() {
  const CliResult a = run_cli("suite --seed 42 --count 60");
  const CliResult b = run_cli("suite --seed 42 --count 60");
  const CliResult c = run_cli("counterexamples");
  const CliResult d = run_cli("counterexamples");
  const bool ok = a.exit_code == 0 && a.output == b.output && !a.output.empty() &&
                  c.output == d.output && !c.output.empty();
  report(10, "byte-identical reruns with a fixed seed", ok);
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
