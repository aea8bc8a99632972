#include "permball/orbit_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "permball/checkpoint.hpp"
#include "permball/classes.hpp"
#include "permball/parallel.hpp"

namespace permball::orbit {

namespace {

constexpr std::uint64_t kLowNibbleBits = 0x1111111111111111ULL;

using Images = std::array<std::uint8_t, kMaxPackedDegree>;

// Number of points where two packed permutations differ.
inline int packed_distance(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ b;
  x = (x | (x >> 1) | (x >> 2) | (x >> 3)) & kLowNibbleBits;
  return std::popcount(x);
}

inline Images unpack_images(std::uint64_t packed) {
  Images out{};
  for (int i = 0; i < kMaxPackedDegree; ++i) out[static_cast<std::size_t>(i)] = (packed >> (4 * i)) & 0xF;
  return out;
}

inline std::uint64_t pack_images(const Images& img, int degree) {
  std::uint64_t out = 0;
  for (int i = 0; i < degree; ++i) out |= static_cast<std::uint64_t>(img[static_cast<std::size_t>(i)]) << (4 * i);
  return out;
}

inline std::uint32_t moved_mask(std::uint64_t packed, int degree) {
  std::uint32_t mask = 0;
  for (int i = 0; i < degree; ++i) {
    if (((packed >> (4 * i)) & 0xF) != static_cast<std::uint64_t>(i)) mask |= 1u << i;
  }
  return mask;
}

// sigma^delta: a -> b in sigma becomes a^delta -> b^delta.
inline std::uint64_t packed_conjugate(std::uint64_t sigma, const Images& delta, int degree) {
  const Images s = unpack_images(sigma);
  Images out{};
  for (int i = 0; i < degree; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    out[delta[ui]] = delta[s[ui]];
  }
  return pack_images(out, degree);
}

void check_packed_degree(int degree, const char* where) {
  if (degree < 1 || degree > kMaxPackedDegree) {
    throw std::out_of_range(std::string(where) + ": degree must be in [1, " +
                            std::to_string(kMaxPackedDegree) + "]");
  }
}

std::vector<OrbitSummary> decompose(const OmegaCounter& counter, const Permutation& pi,
                                    const std::vector<Permutation>& generators) {
  const int degree = counter.degree();
  const std::vector<std::uint64_t> elems = counter.sigmas(pi);
  std::vector<Images> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("orbit_decomposition: generator degree mismatch");
    gens.push_back(unpack_images(pack(g)));
  }

  const std::uint64_t packed_pi = pack(pi);
  const std::uint32_t pi_mask = moved_mask(packed_pi, degree);
  const BigInt centralizer = centralizer_order(cycle_type(pi));

  std::vector<char> visited(elems.size(), 0);
  std::vector<std::size_t> queue;
  std::vector<OrbitSummary> out;
  std::size_t covered = 0;
  for (std::size_t seed = 0; seed < elems.size(); ++seed) {
    if (visited[seed]) continue;
    visited[seed] = 1;
    queue.assign(1, seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint64_t x = elems[queue[head]];
      for (const auto& g : gens) {
        const std::uint64_t y = packed_conjugate(x, g, degree);
        const auto it = std::lower_bound(elems.begin(), elems.end(), y);
        if (it == elems.end() || *it != y) {
          throw ConsistencyError("orbit_decomposition: Omega is not closed under a centralizer generator");
        }
        const auto j = static_cast<std::size_t>(it - elems.begin());
        if (!visited[j]) {
          visited[j] = 1;
          queue.push_back(j);
        }
      }
    }
    covered += queue.size();

    OrbitSummary orbit{unpack(elems[seed], degree), {}};
    orbit.record.orbit_size = BigInt(static_cast<unsigned long>(queue.size()));
    orbit.record.union_moved = std::popcount(pi_mask | moved_mask(elems[seed], degree));
    const BigInt stabilizer = exact_divide(centralizer, orbit.record.orbit_size, "orbit-stabilizer");
    orbit.record.joint_centralizer_restricted =
        exact_divide(stabilizer, factorial(static_cast<unsigned long>(degree - orbit.record.union_moved)),
                     "joint centralizer restriction");
    out.push_back(std::move(orbit));
  }
  if (covered != elems.size()) throw ConsistencyError("orbit_decomposition: orbit sizes do not sum to |Omega|");
  return out;
}

Permutation lift_to(const Permutation& pi, int degree, const char* where) {
  if (pi.degree() > degree) {
    throw std::invalid_argument(std::string(where) + ": permutation degree exceeds " + std::to_string(degree));
  }
  return pi.degree() == degree ? pi : pi.extended(degree);
}

}  // namespace

std::uint64_t pack(const Permutation& p) {
  check_packed_degree(p.degree(), "pack");
  std::uint64_t out = 0;
  for (int i = 0; i < p.degree(); ++i) out |= static_cast<std::uint64_t>(p.image(i + 1) - 1) << (4 * i);
  return out;
}

Permutation unpack(std::uint64_t packed, int degree) {
  check_packed_degree(degree, "unpack");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = static_cast<int>((packed >> (4 * i)) & 0xF) + 1;
  return Permutation::from_images(std::move(images));
}

OmegaCounter::OmegaCounter(int degree, int r) : degree_(degree), r_(r) {
  check_packed_degree(degree, "OmegaCounter");
  if (r < 0 || r > degree) throw std::out_of_range("OmegaCounter: need 0 <= r <= degree");
  low_support_.reserve(count_T(degree, r).get_ui());
  enumerate_T(degree, r, [&](const Permutation& p) { low_support_.push_back(pack(p)); });
}

std::uint64_t OmegaCounter::count(const Permutation& pi) const {
  if (pi.degree() != degree_) throw std::invalid_argument("OmegaCounter::count: degree mismatch");
  if (moved_count(pi) > 2 * r_) return 0;
  const std::uint64_t target = pack(pi);
  std::uint64_t total = 0;
  for (std::uint64_t sigma : low_support_) total += packed_distance(sigma, target) <= r_;
  return total;
}

std::vector<std::uint64_t> OmegaCounter::sigmas(const Permutation& pi) const {
  if (pi.degree() != degree_) throw std::invalid_argument("OmegaCounter::sigmas: degree mismatch");
  std::vector<std::uint64_t> out;
  if (moved_count(pi) > 2 * r_) return out;
  const std::uint64_t target = pack(pi);
  for (std::uint64_t sigma : low_support_) {
    if (packed_distance(sigma, target) <= r_) out.push_back(sigma);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void omega_pairs_2r(int r, const Permutation& pi,
                    const std::function<void(const Permutation&, const Permutation&)>& visit) {
  if (moved_count(pi) > 2 * r) return;
  const Permutation target = lift_to(pi, 2 * r, "omega_pairs_2r");
  const OmegaCounter counter(2 * r, r);
  for (std::uint64_t packed : counter.sigmas(target)) {
    const Permutation sigma = unpack(packed, 2 * r);
    visit(sigma, compose(inverse(sigma), target));
  }
}

std::vector<OrbitSummary> orbit_decomposition(int r, const Permutation& pi,
                                              const std::vector<Permutation>& generators) {
  const Permutation target = lift_to(pi, 2 * r, "orbit_decomposition");
  return decompose(OmegaCounter(2 * r, r), target, generators);
}

std::vector<OrbitSummary> orbit_decomposition(int r, const Permutation& pi) {
  const Permutation target = lift_to(pi, 2 * r, "orbit_decomposition");
  return decompose(OmegaCounter(2 * r, r), target, centralizer_generators(target));
}

RationalPolynomial polynomial_from_orbits(const CycleType& pi_type, const std::vector<OrbitRecord>& orbits) {
  const BigInt support_centralizer = support_centralizer_order(pi_type);
  const int m = pi_type.moved_count();
  RationalPolynomial total;
  for (const auto& orbit : orbits) {
    BigRational weight(support_centralizer, orbit.joint_centralizer_restricted);
    weight.canonicalize();
    total += RationalPolynomial::falling(m, orbit.union_moved - m) * weight;
  }
  return total;
}

RationalPolynomial omega_polynomial(int r, const Permutation& pi) {
  std::vector<OrbitRecord> records;
  for (auto& orbit : orbit_decomposition(r, pi)) records.push_back(std::move(orbit.record));
  return polynomial_from_orbits(cycle_type(lift_to(pi, 2 * r, "omega_polynomial")), records);
}

std::vector<FamilyEntry> n_polynomial_family(int r, const FamilyOptions& opts) {
  if (r < 2 || 2 * r > kMaxPackedDegree) {
    throw std::out_of_range("n_polynomial_family: need 2 <= r <= " + std::to_string(kMaxPackedDegree / 2));
  }
  const int degree = 2 * r;
  auto classes = class_types(degree, degree);
  classes.erase(classes.begin());

  std::vector<std::optional<FamilyEntry>> slots(classes.size());
  if (opts.resume && !opts.checkpoint.empty()) {
    for (auto& rec : load_checkpoint(opts.checkpoint, r)) {
      const auto it = std::find(classes.begin(), classes.end(), rec.entry.cycle_type);
      if (it != classes.end()) slots[static_cast<std::size_t>(it - classes.begin())] = std::move(rec.entry);
    }
  }
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!slots[i]) pending.push_back(i);
  }

  if (!pending.empty()) {
    const OmegaCounter counter(degree, r);
    std::mutex done_mutex;
    parallel_for(pending.size(), opts.threads, [&](std::size_t k) {
      const std::size_t i = pending[k];
      const Permutation rep = canonical_representative(classes[i]);
      FamilyEntry entry{classes[i], {}, {}};
      for (auto& orbit : decompose(counter, rep, centralizer_generators(rep))) {
        entry.orbits.push_back(std::move(orbit.record));
      }
      entry.polynomial = polynomial_from_orbits(classes[i], entry.orbits);
      std::lock_guard lock(done_mutex);
      if (!opts.checkpoint.empty()) append_checkpoint(opts.checkpoint, r, entry);
      if (opts.on_class_done) opts.on_class_done(entry);
      slots[i] = std::move(entry);
    });
  }

  std::vector<FamilyEntry> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

bool nonnegative_from(const RationalPolynomial& h, long n0, long* witness) {
  if (h.is_zero()) return true;
  const int d = h.degree();
  const BigRational lead = h.leading();
  if (d == 0) {
    if (lead < 0 && witness) *witness = n0;
    return lead >= 0;
  }
  BigRational ratio_max = 0;
  for (int k = 0; k < d; ++k) {
    BigRational ratio = abs(h.coefficient(k) / lead);
    if (ratio > ratio_max) ratio_max = ratio;
  }
  BigInt ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), ratio_max.get_num_mpz_t(), ratio_max.get_den_mpz_t());
  const long upper = n0 + 1 + ceil_bound.get_si();
  for (long n = n0; n <= upper; ++n) {
    if (h.evaluate(n) < 0) {
      if (witness) *witness = n;
      return false;
    }
  }
  if (lead < 0) {
    if (witness) *witness = upper + 1;
    return false;
  }
  return true;
}

Dominance dominant_polynomial(const std::vector<RationalPolynomial>& family, long n0) {
  if (family.empty()) throw std::invalid_argument("dominant_polynomial: empty family");
  // Eventual order: sign of the leading coefficient of the difference.
  std::size_t leader = 0;
  for (std::size_t i = 1; i < family.size(); ++i) {
    if ((family[i] - family[leader]).leading() > 0) leader = i;
  }
  Dominance out;
  out.leader = leader;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == family[leader]) {
      out.winners.push_back(i);
      continue;
    }
    long witness = 0;
    if (!nonnegative_from(family[leader] - family[i], n0, &witness)) {
      out.comparable = false;
      out.winners.clear();
      out.rival = i;
      out.witness_n = witness;
      return out;
    }
  }
  out.comparable = true;
  return out;
}

std::vector<std::pair<CycleType, BigInt>> class_omega_direct(int n, int r, unsigned threads) {
  if (r < 1 || r > n) throw std::out_of_range("class_omega_direct: need 1 <= r <= n");
  check_packed_degree(n, "class_omega_direct");
  auto classes = class_types(n, std::min(n, 2 * r));
  classes.erase(classes.begin());
  const OmegaCounter counter(n, r);
  std::vector<std::pair<CycleType, BigInt>> out(classes.size());
  parallel_for(classes.size(), threads, [&](std::size_t i) {
    out[i] = {classes[i], BigInt(static_cast<unsigned long>(counter.count(canonical_representative(classes[i]))))};
  });
  return out;
}

MaxResult n_value(int n, int r, const std::vector<FamilyEntry>* family, unsigned threads) {
  if (r < 2 || r > n) throw std::out_of_range("n_value: need 2 <= r <= n");
  std::vector<std::pair<CycleType, BigInt>> values;
  if (n >= 2 * r) {
    std::vector<FamilyEntry> computed;
    if (!family) {
      FamilyOptions opts;
      opts.threads = threads;
      computed = n_polynomial_family(r, opts);
      family = &computed;
    }
    for (const auto& entry : *family) {
      const BigRational v = entry.polynomial.evaluate(n);
      if (v.get_den() != 1 || v < 0) {
        throw ConsistencyError("n_value: polynomial for class " + format_cycle_type(entry.cycle_type) +
                               " is not a nonnegative integer at n = " + std::to_string(n));
      }
      values.emplace_back(entry.cycle_type.with_degree(n), v.get_num());
    }
  } else {
    values = class_omega_direct(n, r, threads);
  }
  MaxResult out;
  out.value = 0;
  for (const auto& [ct, v] : values) {
    if (v > out.value) {
      out.value = v;
      out.maximizers.clear();
    }
    if (v == out.value) out.maximizers.push_back(ct);
  }
  return out;
}

}  // namespace permball::orbit
