#ifndef PLK_PERM_HPP
#define PLK_PERM_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace plk {

using Label = int;

// Permutation of {1,...,n} in one-line notation: image(i) = img_[i-1].
// Composition convention is (tau * sigma)(x) = sigma(tau(x)): apply the left
// factor first. This makes v.act(tau).act(sigma) == v.act(tau * sigma), i.e.
// acting is a right action written the way "r.(23)" is usually read.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n) {
    Perm p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 1);
    return p;
  }

  explicit Perm(std::vector<Label> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (Label v : img_) {
      if (v < 1 || v > static_cast<Label>(img_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[v - 1] = true;
    }
  }

  // Built from disjoint cycles, e.g. {{1,2,3},{4,5}} on n points.
  static Perm from_cycles(int n, const std::vector<std::vector<Label>>& cycles) {
    Perm p = identity(n);
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p.img_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    return Perm(p.img_);  // revalidate
  }

  static Perm transposition(int n, Label a, Label b) { return from_cycles(n, {{a, b}}); }

  int n() const { return static_cast<int>(img_.size()); }
  Label operator()(Label x) const {
    if (x < 1 || x > n()) throw std::invalid_argument("permutation applied outside 1..n");
    return img_[x - 1];
  }

  Perm operator*(const Perm& sigma) const {  // apply *this first, then sigma
    if (n() != sigma.n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Label> out(img_.size());
    for (int i = 0; i < n(); ++i) out[i] = sigma(img_[i]);
    return Perm(std::move(out));
  }

  Perm inverse() const {
    std::vector<Label> out(img_.size());
    for (int i = 0; i < n(); ++i) out[img_[i] - 1] = i + 1;
    return Perm(std::move(out));
  }

  // Cycle type as a weakly decreasing partition of n.
  std::vector<int> cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 1; i <= n(); ++i) {
      if (seen[i - 1]) continue;
      int len = 0, j = i;
      do {
        seen[j - 1] = true;
        ++len;
        j = img_[j - 1];
      } while (j != i);
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n(); ++i) {
      if (i) s += " ";
      s += std::to_string(img_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Label> img_;
};

// One representative permutation per cycle type of S_n: cycles laid out on
// consecutive points, longest first.
inline std::vector<Perm> cycle_type_representatives(int n) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  // partitions of n in weakly decreasing order
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      parts.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);

  std::vector<Perm> reps;
  for (const auto& part : parts) {
    std::vector<std::vector<Label>> cycles;
    Label next = 1;
    for (int len : part) {
      std::vector<Label> cyc(len);
      std::iota(cyc.begin(), cyc.end(), next);
      next += len;
      cycles.push_back(std::move(cyc));
    }
    reps.push_back(Perm::from_cycles(n, cycles));
  }
  return reps;
}

}  // namespace plk

#endif
