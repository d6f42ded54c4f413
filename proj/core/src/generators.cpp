#include "dualkit/generators.hpp"

#include <algorithm>

namespace dualkit {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("SplitMix64::below requires bound >= 1");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

namespace {

constexpr std::size_t kEnumerationBudget = 2'000'000;

WorldSet numbered_worlds(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return WorldSet(labels);
}

std::size_t choose(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
    if (result > cap) return cap + 1;
  }
  return result;
}

bool keep_frame(const MRFrame& m, const GenParams& p) {
  return !p.directed_filter || check_kappa_dd(m, *p.directed_filter).ok;
}

} // namespace

std::vector<MRFrame> enumerate_mrframes(const GenParams& p) {
  if (p.max_worlds > 3)
    throw CapExceeded("exhaustive frame enumeration is capped at 3 worlds");
  std::vector<MRFrame> out;
  for (int n = 1; n <= p.max_worlds; ++n) {
    const std::size_t universe = std::size_t{1} << (n * n);
    std::size_t total = 0;
    for (int s = 1; s <= p.max_relations; ++s)
      total += choose(universe, static_cast<std::size_t>(s), kEnumerationBudget);
    if (total > kEnumerationBudget)
      throw CapExceeded("frame enumeration budget exceeded; shrink the caps");

    const WorldSet worlds = numbered_worlds(n);
    for (int s = 1; s <= p.max_relations && static_cast<std::size_t>(s) <= universe;
         ++s) {
      std::vector<std::size_t> pick(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
      for (;;) {
        std::vector<Rel> rels;
        rels.reserve(static_cast<std::size_t>(s));
        for (std::size_t idx : pick) rels.push_back(static_cast<Rel>(idx));
        MRFrame frame(worlds, std::move(rels));
        if (p.close_under_intersection) frame = close_under_intersection(frame);
        if (keep_frame(frame, p)) out.push_back(std::move(frame));

        int i = s - 1;
        while (i >= 0 &&
               pick[static_cast<std::size_t>(i)] ==
                   universe - static_cast<std::size_t>(s - i))
          --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

std::vector<BoxAlgebra> enumerate_normal_algebras(const GenParams& p) {
  if (p.max_atoms > 3)
    throw CapExceeded("exhaustive algebra enumeration is capped at 3 atoms");
  std::vector<BoxAlgebra> out;
  for (int n = 1; n <= p.max_atoms; ++n) {
    const Mask carrier = Mask{1} << n;
    const WorldSet atoms = numbered_worlds(n);
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<Mask> box(carrier);
      for (Mask x = 0; x < carrier; ++x) {
        Mask v = 0;
        for (int a = 0; a < n; ++a)
          if ((x >> a) & 1) v |= rows[static_cast<std::size_t>(a)];
        box[x] = v;
      }
      out.emplace_back(atoms, std::move(box));

      int a = 0;
      while (a < n && ++rows[static_cast<std::size_t>(a)] == carrier)
        rows[static_cast<std::size_t>(a++)] = 0;
      if (a == n) break;
    }
  }
  return out;
}

namespace {

constexpr int kRandomAttemptFactor = 10000;

} // namespace

std::vector<MRFrame> random_mrframes(const GenParams& p) {
  SplitMix64 rng(p.seed);
  std::vector<MRFrame> out;
  long long attempts = 0;
  const long long attempt_cap =
      static_cast<long long>(p.count) * kRandomAttemptFactor + 1000;
  while (static_cast<int>(out.size()) < p.count) {
    if (++attempts > attempt_cap)
      throw Error("random frame stream: filter rejected too many candidates");
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_worlds)));
    const int k =
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_relations)));
    const Rel total = rel_total(n);
    std::vector<Rel> rels;
    rels.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rels.push_back(rng.next() & total);
    MRFrame frame(numbered_worlds(n), std::move(rels));
    if (p.close_under_intersection) frame = close_under_intersection(frame);
    if (keep_frame(frame, p)) out.push_back(std::move(frame));
  }
  return out;
}

std::vector<NFrame> random_nframes(const GenParams& p) {
  SplitMix64 rng(p.seed);
  std::vector<NFrame> out;
  long long attempts = 0;
  const long long attempt_cap =
      static_cast<long long>(p.count) * kRandomAttemptFactor + 1000;
  while (static_cast<int>(out.size()) < p.count) {
    if (++attempts > attempt_cap)
      throw Error("random neighborhood stream: filter rejected too many candidates");
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_worlds)));
    const Mask full = (Mask{1} << n) - 1;
    std::vector<std::vector<Mask>> nbhd;
    for (int c = 0; c < n; ++c) {
      const std::uint64_t bits = rng.next();
      std::vector<Mask> family;
      for (Mask x = 0; x <= full; ++x)
        if ((bits >> x) & 1) family.push_back(x);
      nbhd.push_back(std::move(family));
    }
    NFrame frame(numbered_worlds(n), std::move(nbhd));
    if (p.complete_filter && !check_nfr(frame, *p.complete_filter).ok) continue;
    out.push_back(std::move(frame));
  }
  return out;
}

std::vector<BoxAlgebra> random_algebras(const GenParams& p) {
  SplitMix64 rng(p.seed);
  std::vector<BoxAlgebra> out;
  for (int i = 0; i < p.count; ++i) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.max_atoms)));
    const Mask carrier = Mask{1} << n;
    std::vector<Mask> box(carrier);
    if (p.require_normal) {
      std::vector<Mask> rows(static_cast<std::size_t>(n));
      for (auto& row : rows) row = static_cast<Mask>(rng.below(carrier));
      for (Mask x = 0; x < carrier; ++x) {
        Mask v = 0;
        for (int a = 0; a < n; ++a)
          if ((x >> a) & 1) v |= rows[static_cast<std::size_t>(a)];
        box[x] = v;
      }
    } else {
      for (Mask x = 0; x < carrier; ++x) box[x] = static_cast<Mask>(rng.below(carrier));
    }
    out.emplace_back(numbered_worlds(n), std::move(box));
  }
  return out;
}

MRFrame close_under_intersection(const MRFrame& m, const Caps& caps) {
  std::vector<Rel> rels = m.rels();
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = rels.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        const Rel inter = rels[i] & rels[j];
        if (std::find(rels.begin(), rels.end(), inter) == rels.end()) {
          rels.push_back(inter);
          grew = true;
        }
      }
    std::sort(rels.begin(), rels.end());
    if (rels.size() > caps.max_relations)
      throw CapExceeded("intersection closure exceeds the relation cap");
  }
  return MRFrame(m.worlds(), std::move(rels), caps);
}

Fixture fixture(const std::string& name) {
  if (name == "FX1_single") {
    Fixture fx;
    fx.m1 = MRFrame(WorldSet({"0"}), {Rel{0}});
    return fx;
  }
  if (name == "FX2_pair") {
    Fixture fx;
    const WorldSet w1({"0"});
    const WorldSet w2({"0", "1"});
    fx.m1 = MRFrame(w1, {rel_bit(1, 0, 0)});
    fx.m2 = MRFrame(w2, {rel_bit(2, 0, 0)});
    fx.map = WorldMap(w1, w2, {0});
    return fx;
  }
  if (name == "FX3_triple") {
    Fixture fx;
    const WorldSet w1({"0", "1", "2"});
    const WorldSet w2({"0", "1"});
    const Rel r1 = rel_bit(3, 0, 1);
    const Rel r2 = rel_bit(3, 0, 0) | rel_bit(3, 0, 1) | rel_bit(3, 0, 2);
    const Rel q = rel_bit(2, 0, 0) | rel_bit(2, 0, 1);
    fx.m1 = MRFrame(w1, {r1, r2});
    fx.m2 = MRFrame(w2, {q});
    fx.map = WorldMap(w1, w2, {0, 1, 1});
    return fx;
  }
  if (name == "FX4_fork") {
    Fixture fx;
    fx.m1 = MRFrame(WorldSet({"0", "1", "2"}), {rel_bit(3, 0, 1), rel_bit(3, 0, 2)});
    return fx;
  }
  if (name == "FX5_idbox2") {
    Fixture fx;
    fx.algebra = BoxAlgebra(WorldSet({"a", "b"}), {0, 1, 2, 3});
    return fx;
  }
  throw ValidationError("unknown fixture '" + name + "'");
}

} // namespace dualkit
