#include "bwbverify/tensor.hpp"

#include "bwbverify/memo.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace bwbverify {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition parts must be non-negative");
    if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition weight_to_partition(const Weight& lambda) {
  if (!is_integral(lambda) || !is_dominant(lambda))
    throw DomainError("weight_to_partition needs a dominant integral weight, got " + bracket_string(lambda));
  const IntWeight a = to_int_weight(lambda);
  const int n = static_cast<int>(a.size());
  std::vector<int> parts(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) parts[i] = parts[i + 1] + static_cast<int>(a(i));
  return Partition(std::move(parts));
}

Weight partition_to_weight(const Partition& p, int rank) {
  if (p.length() > rank + 1)
    throw DomainError("partition has more than " + std::to_string(rank + 1) + " rows");
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w(i) = p.row(i) - p.row(i + 1);
  return w;
}

namespace {

// Enumerates LR tableaux of shape nu / lambda and content mu row by row.
// A row's admissible fillings depend only on the letters used so far and on
// the filling of the row above, so completions are memoized on that state.
class LrEnumerator {
 public:
  using Suffixes = std::map<std::vector<int>, std::uint64_t>;

  LrEnumerator(const Partition& lambda, const Partition& mu, int max_rows)
      : rows_(max_rows), letters_(mu.length()), lam_(max_rows, 0), mu_(mu.parts()) {
    for (int r = 0; r < max_rows; ++r) lam_[r] = lambda.row(r);
    mu_.resize(static_cast<std::size_t>(letters_));
  }

  std::vector<std::pair<Partition, std::uint64_t>> run() {
    std::vector<std::pair<Partition, std::uint64_t>> out;
    for (const auto& [parts, m] : complete(0, std::vector<int>(letters_, 0), std::vector<int>(letters_, 0)))
      out.emplace_back(Partition(parts), m);
    return out;
  }

 private:
  // Rows r.. given the letters used in rows < r and the letter counts of row r - 1;
  // keys are (nu_r, ..., nu_last).
  const Suffixes& complete(int r, const std::vector<int>& used, const std::vector<int>& above) {
    std::vector<int> key{r};
    key.insert(key.end(), used.begin(), used.end());
    key.insert(key.end(), above.begin(), above.end());
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    Suffixes result;
    if (r == rows_) {
      if (used == mu_) result[{}] = 1;
    } else {
      std::vector<int> row(letters_, 0);
      fill_row(r, 0, used, above, row, result);
    }
    return memo_[key] = std::move(result);
  }

  // Chooses how many letters i go in row r, then recurses on i + 1.
  void fill_row(int r, int i, const std::vector<int>& used, const std::vector<int>& above, std::vector<int>& row,
                Suffixes& result) {
    if (i >= letters_ || i > r) {
      std::vector<int> next_used = used;
      int boxes = 0;
      for (int l = 0; l < letters_; ++l) {
        next_used[l] += row[l];
        boxes += row[l];
      }
      for (const auto& [tail, m] : complete(r + 1, next_used, row)) {
        std::vector<int> nu{lam_[r] + boxes};
        nu.insert(nu.end(), tail.begin(), tail.end());
        result[nu] += m;
      }
      return;
    }
    // Lattice: letters i through row r never outnumber letters i - 1 in rows above.
    int max_x = mu_[i] - used[i];
    if (i > 0) max_x = std::min(max_x, used[i - 1] - used[i]);
    // Columns: letters <= i in row r must sit below lambda or letters < i.
    if (r > 0) {
      int above_prefix = 0, here_prefix = 0;
      for (int l = 0; l < i; ++l) {
        above_prefix += above[l];
        here_prefix += row[l];
      }
      max_x = std::min(max_x, lam_[r - 1] + above_prefix - lam_[r] - here_prefix);
    }
    for (int x = 0; x <= max_x; ++x) {
      row[i] = x;
      fill_row(r, i + 1, used, above, row, result);
    }
    row[i] = 0;
  }

  int rows_;
  int letters_;
  std::vector<int> lam_;
  std::vector<int> mu_;
  std::map<std::vector<int>, Suffixes> memo_;
};

MemoTable<Decomposition>& lr_memo() {
  static MemoTable<Decomposition> table;
  return table;
}

}  // namespace

std::vector<std::pair<Partition, std::uint64_t>> lr_product(const Partition& lambda, const Partition& mu, int max_rows) {
  if (lambda.length() > max_rows || mu.length() > max_rows) return {};
  if (mu.length() == 0) return {{lambda, 1}};
  return LrEnumerator(lambda, mu, max_rows).run();
}

Decomposition lr_decompose(const Weight& lambda, const Weight& mu) {
  if (lambda.size() != mu.size()) throw DomainError("lr_decompose: weights of different rank");
  const int n = static_cast<int>(lambda.size());
  const Partition pl = weight_to_partition(lambda);
  const Partition pm = weight_to_partition(mu);
  const std::string key = std::to_string(n) + "|" + weight_key(lambda) + "|" + weight_key(mu);
  return lr_memo().get_or_compute(key, [&] {
    Decomposition out;
    for (const auto& [nu, m] : lr_product(pl, pm, n + 1)) out.add(partition_to_weight(nu, n), m);
    return out;
  });
}

// ---------------------------------------------------------------------------
// Character oracle. All pairings are scaled by the common denominator of the
// inverse Cartan matrix so the Freudenthal recursion runs over integers.

namespace {

struct ScaledForm {
  explicit ScaledForm(const RootSystem& sys) : n(sys.rank()) {
    boost::multiprecision::mpz_int lcm = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(sys.inverse_cartan()(i, j)));
    scale = lcm.convert_to<long long>();
    gram.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational v = sys.inverse_cartan()(i, j) * Rational(scale);
        gram(i, j) = boost::multiprecision::numerator(v).convert_to<long long>();
      }
    for (const auto& alpha : sys.positive_roots()) roots.push_back(to_int_weight(alpha));
  }

  long long ip(const IntWeight& a, const IntWeight& b) const { return a.dot(gram * b); }
  /// <a, alpha^vee> for a root alpha (<alpha, alpha> = 2).
  long long coroot_pairing(const IntWeight& a, const IntWeight& alpha) const {
    const long long v = ip(a, alpha);
    if (v % scale) throw InvariantViolation("non-integral coroot pairing");
    return v / scale;
  }

  int n;
  long long scale = 1;
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> gram;
  std::vector<IntWeight> roots;
};

using IntMap = std::unordered_map<IntWeight, long long, IntWeightHash, IntWeightEqual>;

IntWeight dominant_of(const RootSystem& sys, IntWeight w) {
  for (;;) {
    int neg = 0;
    for (int i = 0; i < sys.rank(); ++i)
      if (w(i) < 0) {
        neg = i + 1;
        break;
      }
    if (!neg) return w;
    reflect_in_place(sys, neg, w);
  }
}

std::unordered_set<IntWeight, IntWeightHash, IntWeightEqual> weight_support(const ScaledForm& form, const IntWeight& top) {
  std::unordered_set<IntWeight, IntWeightHash, IntWeightEqual> support{top};
  std::deque<IntWeight> queue{top};
  while (!queue.empty()) {
    const IntWeight mu = queue.front();
    queue.pop_front();
    for (const auto& alpha : form.roots) {
      const long long p = form.coroot_pairing(mu, alpha);
      const long long sign = p > 0 ? -1 : 1;
      for (long long k = 1; k <= std::abs(p); ++k) {
        IntWeight next = mu + sign * k * alpha;
        if (support.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return support;
}

IntMap dominant_multiplicities(const RootSystem& sys, const ScaledForm& form, const IntWeight& top) {
  const auto support = weight_support(form, top);
  std::vector<IntWeight> dominant;
  for (const auto& w : support)
    if ((w.array() >= 0).all()) dominant.push_back(w);
  const IntWeight rho = IntWeight::Ones(sys.rank());
  std::sort(dominant.begin(), dominant.end(), [&](const IntWeight& a, const IntWeight& b) {
    const long long ha = form.ip(a, rho), hb = form.ip(b, rho);
    if (ha != hb) return ha > hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  IntMap mult;
  const IntWeight top_rho = top + rho;
  const long long top_norm = form.ip(top_rho, top_rho);
  for (const auto& mu : dominant) {
    if (mu == top) {
      mult[mu] = 1;
      continue;
    }
    long long num = 0;
    for (const auto& alpha : form.roots) {
      for (long long k = 1;; ++k) {
        const IntWeight shifted = mu + k * alpha;
        if (!support.count(shifted)) break;
        const auto it = mult.find(dominant_of(sys, shifted));
        if (it == mult.end()) throw InvariantViolation("Freudenthal order violated");
        num += it->second * form.ip(shifted, alpha);
      }
    }
    num *= 2;
    const IntWeight mu_rho = mu + rho;
    const long long den = top_norm - form.ip(mu_rho, mu_rho);
    if (den <= 0 || num % den) throw InvariantViolation("Freudenthal quotient is not a non-negative integer");
    mult[mu] = num / den;
  }
  return mult;
}

std::vector<std::pair<IntWeight, long long>> expand_orbits(const RootSystem& sys, const IntMap& dominant) {
  std::vector<std::pair<IntWeight, long long>> out;
  for (const auto& [mu, m] : dominant) {
    if (m == 0) continue;
    std::unordered_set<IntWeight, IntWeightHash, IntWeightEqual> orbit{mu};
    std::vector<IntWeight> frontier{mu};
    while (!frontier.empty()) {
      std::vector<IntWeight> next;
      for (const auto& w : frontier)
        for (int j = 1; j <= sys.rank(); ++j) {
          IntWeight r = w;
          reflect_in_place(sys, j, r);
          if (orbit.insert(r).second) next.push_back(std::move(r));
        }
      frontier = std::move(next);
    }
    for (const auto& w : orbit) out.emplace_back(w, m);
  }
  return out;
}

void require_dominant_integral(const RootSystem& sys, const Weight& w, const char* what) {
  if (w.size() != sys.rank()) throw DomainError(std::string(what) + ": weight length does not match " + sys.label());
  if (!is_integral(w) || !is_dominant(w))
    throw DomainError(std::string(what) + ": needs a dominant integral weight, got " + bracket_string(w));
}

}  // namespace

WeightMultiset dominant_character(const RootSystem& sys, const Weight& lambda) {
  require_dominant_integral(sys, lambda, "dominant_character");
  const ScaledForm form(sys);
  WeightMultiset out;
  for (const auto& [w, m] : dominant_multiplicities(sys, form, to_int_weight(lambda)))
    out.add(to_weight(w), static_cast<std::uint64_t>(m));
  return out;
}

WeightMultiset full_character(const RootSystem& sys, const Weight& lambda) {
  require_dominant_integral(sys, lambda, "full_character");
  const ScaledForm form(sys);
  WeightMultiset out;
  for (const auto& [w, m] : expand_orbits(sys, dominant_multiplicities(sys, form, to_int_weight(lambda))))
    out.add(to_weight(w), static_cast<std::uint64_t>(m));
  return out;
}

Decomposition lr_oracle(const RootSystem& sys, const Weight& lambda, const Weight& mu, std::uint64_t dimension_cap) {
  require_dominant_integral(sys, lambda, "lr_oracle");
  require_dominant_integral(sys, mu, "lr_oracle");
  const std::uint64_t dl = weyl_dim(sys, lambda), dm = weyl_dim(sys, mu);
  if (dl > dimension_cap / dm) throw DomainError("lr_oracle: product dimension exceeds the cap");

  // Expand the smaller factor; the product is symmetric.
  const bool swap = dl > dm;
  const ScaledForm form(sys);
  const auto weights = expand_orbits(sys, dominant_multiplicities(sys, form, to_int_weight(swap ? mu : lambda)));
  const IntWeight shift = to_int_weight(swap ? lambda : mu) + IntWeight::Ones(sys.rank());

  // Brauer-Klimyk: each weight a contributes sign(w) * m(a) to V_{w(a + mu + rho) - rho},
  // and nothing when a + mu + rho lies on a wall.
  IntMap signed_mult;
  for (const auto& [a, m] : weights) {
    IntWeight v = a + shift;
    long long sign = 1;
    for (;;) {
      int neg = 0;
      for (int i = 0; i < sys.rank(); ++i)
        if (v(i) <= 0) {
          neg = i + 1;
          break;
        }
      if (!neg || v(neg - 1) == 0) break;
      reflect_in_place(sys, neg, v);
      sign = -sign;
    }
    if ((v.array() > 0).all()) signed_mult[IntWeight(v - IntWeight::Ones(sys.rank()))] += sign * m;
  }

  Decomposition out;
  for (const auto& [nu, c] : signed_mult) {
    if (c < 0) throw InvariantViolation("lr_oracle: negative multiplicity after cancellation");
    if (c > 0) out.add(to_weight(nu), static_cast<std::uint64_t>(c));
  }
  return out;
}

Decomposition tensor_bundles(const ParabolicData& parab, const Weight& a, const Weight& b) {
  parab.require_bundle_weight(a, "tensor_bundles");
  parab.require_bundle_weight(b, "tensor_bundles");
  if (!is_type_a(parab.levi())) throw DomainError("tensor_bundles needs a Levi factor of type A");
  const LeviRestriction ra = restrict_levi(parab, a);
  const LeviRestriction rb = restrict_levi(parab, b);
  const Weight wk = parab.line_generator();
  Decomposition out;
  for (const auto& [sigma_prime, m] : lr_decompose(ra.levi_weight, rb.levi_weight)) {
    const Weight sigma = lift(parab, sigma_prime);
    const Rational twist = ra.charge + rb.charge - restrict_levi(parab, sigma).charge;
    if (!is_integer(twist))
      throw InvariantViolation("tensor_bundles: non-integral twist " + format_rational(twist) + " for " +
                               bracket_string(sigma));
    out.add(Weight(sigma + twist * wk), m);
  }
  return out;
}

}  // namespace bwbverify
