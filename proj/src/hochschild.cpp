#include "dquot/hochschild.hpp"

#include <map>

#include "dquot/error.hpp"

namespace dquot {

namespace {

// Total complex of Hom(Abar^{(x)p}, B^{-n}) truncated at depth N.
class HochschildTotal {
 public:
  HochschildTotal(const BarTruncation& bar, std::size_t depth) : bar_(bar), depth_(depth) {
    const auto& A = bar.algebra();
    const auto& u = A.unit();
    dropped_ = A.dim();
    for (std::size_t k = 0; k < A.dim(); ++k) {
      if (dropped_ == A.dim() && !is_zero(u[k]))
        dropped_ = k;
      else
        abar_.push_back(k);
    }
    // x * y projected to Abar, indexed by the target coordinate
    for (std::size_t x = 0; x < abar_.size(); ++x)
      for (std::size_t y = 0; y < abar_.size(); ++y)
        for (auto& [t, c] : project(A.product(abar_[x], abar_[y]))) by_target_[t].push_back({x, y, c});
  }

  std::size_t dim(int t) const {
    std::size_t total = 0;
    for (auto& b : blocks(t)) total += b.size;
    return total;
  }

  std::vector<SparseVec> differential(int t) const {
    const Field& f = bar_.field();
    std::vector<SparseVec> cols;
    const auto target = blocks(t + 1);
    auto locate = [&](std::size_t p, std::size_t n) -> const Block* {
      for (auto& b : target)
        if (b.p == p && b.n == n) return &b;
      return nullptr;
    };
    const std::size_t m = abar_.size();
    for (const auto& blk : blocks(t)) {
      const std::size_t p = blk.p, n = blk.n, dimb = bar_.dim(n);
      const Block* down = n >= 1 ? locate(p, n - 1) : nullptr;
      const Block* up = locate(p + 1, n);
      for (std::size_t w = 0; w < power(m, p); ++w)
        for (std::size_t b = 0; b < dimb; ++b) {
          std::vector<std::pair<std::uint32_t, Scalar>> terms;
          auto emit = [&](const Block* tb, std::size_t tuple, const SparseVec& value, const Scalar& coeff) {
            const std::size_t width = bar_.dim(tb->n);
            for (auto& [k, c] : value) terms.emplace_back(static_cast<std::uint32_t>(tb->offset + tuple * width + k), f.mul(coeff, c));
          };
          const SparseVec unit_b{{static_cast<std::uint32_t>(b), Scalar(1)}};
          const Scalar sign_p = p % 2 == 0 ? Scalar(1) : f.neg(Scalar(1));
          if (down) emit(down, w, bar_.differential(n)[b], sign_p);
          if (up) {
            auto digits = decode(w, p);
            // a f(u)
            for (std::size_t a = 0; a < m; ++a) {
              std::vector<std::size_t> v{a};
              v.insert(v.end(), digits.begin(), digits.end());
              emit(up, encode(v), bar_.multiply(0, basis(a), n, unit_b), Scalar(1));
            }
            // f(..., x y, ...)
            for (std::size_t i = 0; i < p; ++i) {
              auto it = by_target_.find(digits[i]);
              if (it == by_target_.end()) continue;
              const Scalar sign = (i + 1) % 2 == 0 ? Scalar(1) : f.neg(Scalar(1));
              for (auto& [x, y, c] : it->second) {
                std::vector<std::size_t> v(digits.begin(), digits.begin() + static_cast<long>(i));
                v.push_back(x);
                v.push_back(y);
                v.insert(v.end(), digits.begin() + static_cast<long>(i) + 1, digits.end());
                emit(up, encode(v), unit_b, f.mul(sign, c));
              }
            }
            // f(u) a
            const Scalar sign_last = (p + 1) % 2 == 0 ? Scalar(1) : f.neg(Scalar(1));
            for (std::size_t a = 0; a < m; ++a) {
              std::vector<std::size_t> v = digits;
              v.push_back(a);
              emit(up, encode(v), bar_.multiply(n, unit_b, 0, basis(a)), sign_last);
            }
          }
          cols.push_back(compress(f, std::move(terms)));
        }
    }
    return cols;
  }

 private:
  struct Block {
    std::size_t p, n, offset, size;
  };
  struct Entry {
    std::size_t x, y;
    Scalar c;
  };

  static std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
  }

  // Blocks of total degree t = p - n with 0 <= n <= depth.
  std::vector<Block> blocks(int t) const {
    std::vector<Block> out;
    std::size_t offset = 0;
    for (std::size_t n = 0; n <= depth_; ++n) {
      long p = t + static_cast<long>(n);
      if (p < 0) continue;
      std::size_t size = power(abar_.size(), static_cast<std::size_t>(p)) * bar_.dim(n);
      out.push_back({static_cast<std::size_t>(p), n, offset, size});
      offset += size;
    }
    return out;
  }

  std::vector<std::size_t> decode(std::size_t w, std::size_t p) const {
    std::vector<std::size_t> d(p);
    for (std::size_t i = p; i-- > 0;) {
      d[i] = w % abar_.size();
      w /= abar_.size();
    }
    return d;
  }

  std::size_t encode(const std::vector<std::size_t>& d) const {
    std::size_t w = 0;
    for (auto x : d) w = w * abar_.size() + x;
    return w;
  }

  SparseVec basis(std::size_t a) const { return {{static_cast<std::uint32_t>(abar_[a]), Scalar(1)}}; }

  // Abar coordinates of an element of A (its unit component removed).
  SparseVec project(const SparseVec& v) const {
    const Field& f = bar_.field();
    const auto& u = bar_.algebra().unit();
    Scalar c = 0;
    for (auto& [k, x] : v)
      if (k == dropped_) c = f.mul(x, f.inv(u[dropped_]));
    Vec dense = to_dense(v, u.size());
    for (std::size_t k = 0; k < u.size(); ++k) dense[k] = f.sub(dense[k], f.mul(c, u[k]));
    std::vector<std::pair<std::uint32_t, Scalar>> terms;
    for (std::size_t i = 0; i < abar_.size(); ++i)
      if (!is_zero(dense[abar_[i]])) terms.emplace_back(static_cast<std::uint32_t>(i), dense[abar_[i]]);
    return compress(f, std::move(terms));
  }

  const BarTruncation& bar_;
  std::size_t depth_;
  std::size_t dropped_ = static_cast<std::size_t>(-1);
  std::vector<std::size_t> abar_;
  std::map<std::size_t, std::vector<Entry>> by_target_;
};

}  // namespace

HH0Report hh0_experimental(const BarTruncation& bar, const std::vector<std::size_t>& depth_schedule) {
  HH0Report out;
  const Field& f = bar.field();
  for (std::size_t N : depth_schedule) {
    if (N > bar.depth()) throw InputError("hh0 depth " + std::to_string(N) + " exceeds the bar truncation depth");
    HochschildTotal tot(bar, N);
    const std::size_t cocycles = sparse_kernel(f, tot.dim(1), tot.differential(0)).size();
    SparseEchelon image(f, tot.dim(0));
    for (auto& c : tot.differential(-1)) image.insert(c);
    out.values.emplace_back(N, cocycles - image.dim());
  }
  const auto& v = out.values;
  out.stabilized = v.size() >= 2 && v[v.size() - 1].second == v[v.size() - 2].second;
  return out;
}

}  // namespace dquot
