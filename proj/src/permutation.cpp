#include "permball/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permball/cycle_type.hpp"

namespace permball {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()) + ")");
  }
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("Permutation: images are not a bijection of [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p(1);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > degree) {
        throw std::invalid_argument("Permutation: cycle point out of range");
      }
      if (used[static_cast<std::size_t>(from - 1)]) {
        throw std::invalid_argument("Permutation: cycles are not disjoint");
      }
      used[static_cast<std::size_t>(from - 1)] = true;
      p.images_[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || image(start) == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = image(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) {
    throw std::invalid_argument("Permutation::extended: new degree is smaller");
  }
  Permutation p(new_degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  require_same_degree(sigma, tau, "compose");
  std::vector<int> out(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = tau.image(sigma.image(i));
  }
  return Permutation::from_images(std::move(out));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> out(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i) {
    out[static_cast<std::size_t>(sigma.image(i) - 1)] = i;
  }
  return Permutation::from_images(std::move(out));
}

Permutation conjugate(const Permutation& sigma, const Permutation& delta) {
  require_same_degree(sigma, delta, "conjugate");
  std::vector<int> out(static_cast<std::size_t>(sigma.degree()));
  for (int i = 1; i <= sigma.degree(); ++i) {
    out[static_cast<std::size_t>(delta.image(i) - 1)] = delta.image(sigma.image(i));
  }
  return Permutation::from_images(std::move(out));
}

std::vector<int> moved_points(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 1; i <= sigma.degree(); ++i) {
    if (sigma.image(i) != i) out.push_back(i);
  }
  return out;
}

int moved_count(const Permutation& sigma) {
  int count = 0;
  for (int i = 1; i <= sigma.degree(); ++i) count += sigma.image(i) != i;
  return count;
}

int hamming_distance(const Permutation& sigma, const Permutation& pi) {
  require_same_degree(sigma, pi, "hamming_distance");
  int count = 0;
  for (int i = 1; i <= sigma.degree(); ++i) count += sigma.image(i) != pi.image(i);
  return count;
}

CycleType cycle_type(const Permutation& sigma) {
  std::vector<int> lengths;
  for (const auto& c : sigma.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return CycleType::from_parts(sigma.degree(), lengths);
}

// Fills a buffer in place: choose the k moved points, then assign a
// fixed-point-free arrangement of them by backtracking.
class LowSupportEnumerator {
 public:
  LowSupportEnumerator(int n, const std::function<void(const Permutation&)>& visit)
      : n_(n), visit_(visit), current_(n), used_(static_cast<std::size_t>(n) + 1, false) {}

  void run(int r) {
    for (int k = 0; k <= r; ++k) {
      if (k == 1) continue;
      subset_.assign(static_cast<std::size_t>(k), 0);
      choose(0, 1, k);
    }
  }

 private:
  void choose(int slot, int first, int k) {
    if (slot == k) {
      arrange(0);
      return;
    }
    for (int p = first; p <= n_ - (k - slot - 1); ++p) {
      subset_[static_cast<std::size_t>(slot)] = p;
      choose(slot + 1, p + 1, k);
    }
  }

  void arrange(std::size_t slot) {
    if (slot == subset_.size()) {
      visit_(current_);
      return;
    }
    const int point = subset_[slot];
    for (int value : subset_) {
      if (value == point || used_[static_cast<std::size_t>(value)]) continue;
      used_[static_cast<std::size_t>(value)] = true;
      current_.images_[static_cast<std::size_t>(point - 1)] = value;
      arrange(slot + 1);
      used_[static_cast<std::size_t>(value)] = false;
    }
    current_.images_[static_cast<std::size_t>(point - 1)] = point;
  }

  int n_;
  const std::function<void(const Permutation&)>& visit_;
  Permutation current_;
  std::vector<int> subset_;
  std::vector<bool> used_;
};

void enumerate_T(int n, int r, const std::function<void(const Permutation&)>& visit) {
  if (n < 1 || r < 0 || r > n) {
    throw std::out_of_range("enumerate_T: need n >= 1 and 0 <= r <= n");
  }
  LowSupportEnumerator(n, visit).run(r);
}

BigInt count_T(int n, int r) {
  if (n < 1 || r < 0 || r > n) throw std::out_of_range("count_T: need n >= 1 and 0 <= r <= n");
  BigInt total = 0;
  for (int k = 0; k <= r; ++k) {
    total += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
             derangements(static_cast<unsigned long>(k));
  }
  return total;
}

}  // namespace permball

std::size_t std::hash<permball::Permutation>::operator()(
    const permball::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}
