#include "bwbverify/root_system.hpp"

#include <Eigen/LU>

#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

namespace bwbverify {

namespace {

constexpr std::size_t kMaxRoots = 20000;

void validate_cartan(const std::string& label, const Eigen::MatrixXi& c) {
  if (c.rows() != c.cols()) throw DomainError(label + ": Cartan matrix is not square");
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (i == j && c(i, j) != 2) throw DomainError(label + ": Cartan diagonal entry is not 2");
      if (i != j && c(i, j) != 0 && c(i, j) != -1)
        throw DomainError(label + ": only simply-laced Cartan matrices are supported");
      if (c(i, j) != c(j, i)) throw DomainError(label + ": Cartan matrix is not symmetric");
    }
  }
}

std::string make_signature(const Eigen::MatrixXi& c) {
  std::string s = std::to_string(c.rows()) + ":";
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = i + 1; j < c.cols(); ++j)
      if (c(i, j) != 0) s += std::to_string(i + 1) + "-" + std::to_string(j + 1) + ";";
  return s;
}

struct VectorXiHash {
  std::size_t operator()(const Eigen::VectorXi& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) h = h * 1000003u ^ static_cast<std::size_t>(v(i) + 512);
    return h;
  }
};
struct VectorXiEqual {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const noexcept { return a == b; }
};

}  // namespace

struct RootSystem::Data {
  std::string label;
  Eigen::MatrixXi cartan;
  Matrix<Rational> inverse;
  std::string signature;
  std::vector<Weight> roots;
  std::vector<Eigen::VectorXi> roots_root_basis;

  mutable std::once_flag order_once;
  mutable std::uint64_t order = 0;
};

RootSystem::RootSystem(std::string label, Eigen::MatrixXi cartan) {
  validate_cartan(label, cartan);
  auto data = std::make_shared<Data>();
  const int n = static_cast<int>(cartan.rows());
  data->label = std::move(label);
  data->cartan = std::move(cartan);
  data->signature = make_signature(data->cartan);

  Matrix<Rational> c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = data->cartan(i, j);
  if (n > 0) {
    Eigen::FullPivLU<Matrix<Rational>> lu(c);
    if (!lu.isInvertible()) throw DomainError(data->label + ": Cartan matrix is singular");
    data->inverse = lu.inverse();
    if (Matrix<Rational>(c * data->inverse) != Matrix<Rational>::Identity(n, n))
      throw InvariantViolation(data->label + ": inexact Cartan inverse");
  } else {
    data->inverse.resize(0, 0);
  }

  // Positive roots: closure of the simple roots under simple reflections,
  // carried out over the simple-root basis where s_i(b) = b - <b, alpha_i> alpha_i.
  std::unordered_set<Eigen::VectorXi, VectorXiHash, VectorXiEqual> seen;
  std::deque<Eigen::VectorXi> frontier;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    seen.insert(e);
    frontier.push_back(e);
    data->roots_root_basis.push_back(e);
  }
  while (!frontier.empty()) {
    const Eigen::VectorXi beta = frontier.front();
    frontier.pop_front();
    const Eigen::VectorXi pairing = data->cartan * beta;
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXi next = beta;
      next(i) -= pairing(i);
      if ((next.array() < 0).any() || next.isZero()) continue;
      if (seen.insert(next).second) {
        if (seen.size() > kMaxRoots) throw DomainError(data->label + ": root closure does not terminate");
        frontier.push_back(next);
        data->roots_root_basis.push_back(next);
      }
    }
  }
  for (const auto& beta : data->roots_root_basis) {
    const Eigen::VectorXi f = data->cartan * beta;
    Weight w(n);
    for (int i = 0; i < n; ++i) w(i) = f(i);
    data->roots.push_back(std::move(w));
  }
  data_ = std::move(data);
}

RootSystem RootSystem::E6() {
  Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(6, 6);
  // Bourbaki: 1-3-4-5-6 with 2 attached to 4.
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  for (const auto& e : edges) {
    c(e[0] - 1, e[1] - 1) = -1;
    c(e[1] - 1, e[0] - 1) = -1;
  }
  return RootSystem("E6", c);
}

RootSystem RootSystem::A(int n) {
  if (n < 0) throw DomainError("A_n needs n >= 0");
  Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) c(i, i + 1) = c(i + 1, i) = -1;
  return RootSystem("A" + std::to_string(n), c);
}

const std::string& RootSystem::label() const noexcept { return data_->label; }
int RootSystem::rank() const noexcept { return static_cast<int>(data_->cartan.rows()); }
const Eigen::MatrixXi& RootSystem::cartan() const noexcept { return data_->cartan; }
const Matrix<Rational>& RootSystem::inverse_cartan() const noexcept { return data_->inverse; }
const std::string& RootSystem::signature() const noexcept { return data_->signature; }
const std::vector<Weight>& RootSystem::positive_roots() const noexcept { return data_->roots; }
const std::vector<Eigen::VectorXi>& RootSystem::positive_roots_root_basis() const noexcept {
  return data_->roots_root_basis;
}

void RootSystem::check_vertex(int vertex) const {
  if (vertex < 1 || vertex > rank())
    throw DomainError(label() + ": vertex " + std::to_string(vertex) + " out of range 1.." + std::to_string(rank()));
}

Weight RootSystem::simple_root(int vertex) const {
  check_vertex(vertex);
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) w(i) = cartan()(vertex - 1, i);
  return w;
}

Weight RootSystem::fundamental_weight(int vertex) const {
  check_vertex(vertex);
  return fundamental(rank(), vertex);
}

Weight RootSystem::zero() const { return zero_weight(rank()); }

Weight RootSystem::rho() const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) w(i) = 1;
  return w;
}

Weight RootSystem::to_root_basis(const Weight& lambda) const {
  if (lambda.size() != rank()) throw DomainError("weight length does not match rank of " + label());
  if (rank() == 0) return lambda;
  return (lambda.transpose() * inverse_cartan()).transpose();
}

std::uint64_t RootSystem::weyl_group_order() const {
  std::call_once(data_->order_once, [this] {
    const int n = rank();
    if (n == 0) {
      data_->order = 1;
      return;
    }
    // rho is regular, so its orbit is in bijection with W.
    std::unordered_set<IntWeight, IntWeightHash, IntWeightEqual> orbit;
    std::vector<IntWeight> frontier;
    IntWeight start = IntWeight::Ones(n);
    orbit.insert(start);
    frontier.push_back(start);
    while (!frontier.empty()) {
      std::vector<IntWeight> next;
      for (const auto& w : frontier) {
        for (int j = 1; j <= n; ++j) {
          IntWeight r = w;
          reflect_in_place(*this, j, r);
          if (orbit.insert(r).second) next.push_back(std::move(r));
        }
      }
      frontier = std::move(next);
    }
    data_->order = orbit.size();
  });
  return data_->order;
}

Rational inner_product(const RootSystem& sys, const Weight& lambda, const Weight& mu) {
  if (lambda.size() != sys.rank() || mu.size() != sys.rank())
    throw DomainError("weight length does not match rank of " + sys.label());
  if (sys.rank() == 0) return 0;
  // Skips zero coordinates; weights here are sparse and mpq products are costly.
  const Matrix<Rational>& inv = sys.inverse_cartan();
  Rational out = 0;
  for (int i = 0; i < sys.rank(); ++i) {
    if (lambda(i) == 0) continue;
    Rational row = 0;
    for (int j = 0; j < sys.rank(); ++j)
      if (mu(j) != 0 && inv(i, j) != 0) row += inv(i, j) * mu(j);
    out += lambda(i) * row;
  }
  return out;
}

Weight dominant_representative(const RootSystem& sys, const Weight& lambda, std::vector<int>* word) {
  Weight w = lambda;
  const std::size_t bound = sys.positive_roots().size();
  for (std::size_t step = 0;; ++step) {
    int negative = 0;
    for (int i = 0; i < sys.rank(); ++i) {
      if (w(i) < 0) {
        negative = i + 1;
        break;
      }
    }
    if (negative == 0) return w;
    if (step >= bound) throw InvariantViolation("descent to the dominant chamber exceeded |Phi+| steps");
    reflect_in_place(sys, negative, w);
    if (word) word->push_back(negative);
  }
}

Weight dual_dominant(const RootSystem& sys, const Weight& lambda) {
  return dominant_representative(sys, Weight(-lambda));
}

std::vector<Weight> positive_roots(const RootSystem& sys) { return sys.positive_roots(); }

std::uint64_t weyl_group_order(const RootSystem& sys) { return sys.weyl_group_order(); }

namespace {

// (alpha_i, alpha_i) / 2 for each simple root, scaled to coprime integers;
// memoized per Cartan matrix.
std::vector<long long> scaled_simple_lengths(const RootSystem& sys) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::vector<long long>> memo;
  const Eigen::MatrixXi& a = sys.cartan();
  std::vector<int> key(a.data(), a.data() + a.size());
  key.push_back(sys.rank());
  std::lock_guard lock(mutex);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const auto& roots = sys.positive_roots();
  const auto& coeffs = sys.positive_roots_root_basis();
  std::vector<Rational> half_length(static_cast<std::size_t>(sys.rank()));
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (coeffs[k].sum() == 1) {
      Eigen::Index i = 0;
      coeffs[k].maxCoeff(&i);
      half_length[static_cast<std::size_t>(i)] = inner_product(sys, roots[k], roots[k]) / 2;
    }
  boost::multiprecision::mpz_int scale = 1;
  for (const auto& h : half_length) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(h));
  std::vector<long long> out;
  for (const auto& h : half_length) out.push_back(boost::multiprecision::numerator(Rational(h * scale)).convert_to<long long>());
  return memo[key] = out;
}

}  // namespace

std::uint64_t weyl_dim(const RootSystem& sys, const Weight& lambda) {
  if (lambda.size() != sys.rank()) throw DomainError("weight length does not match rank of " + sys.label());
  if (!is_integral(lambda)) throw DomainError("weyl_dim needs an integral weight, got " + bracket_string(lambda));
  if (!is_dominant(lambda)) throw DomainError("weyl_dim needs a dominant weight, got " + bracket_string(lambda));
  // (mu, alpha) = sum_i c_i mu_i (alpha_i, alpha_i) / 2 for alpha = sum_i c_i alpha_i;
  // the squared lengths are scaled to integers so the sums stay in 64 bits.
  const auto& coeffs = sys.positive_roots_root_basis();
  const std::vector<long long> length = scaled_simple_lengths(sys);
  std::vector<long long> shifted_coord(length.size());
  for (std::size_t i = 0; i < length.size(); ++i)
    shifted_coord[i] = boost::multiprecision::numerator(lambda(static_cast<Eigen::Index>(i))).convert_to<long long>() + 1;
  boost::multiprecision::mpz_int num = 1;
  boost::multiprecision::mpz_int den = 1;
  for (const auto& c : coeffs) {
    long long shifted = 0, rho = 0;
    for (std::size_t i = 0; i < length.size(); ++i) {
      const long long w = c(static_cast<Eigen::Index>(i)) * length[i];
      shifted += w * shifted_coord[i];
      rho += w;
    }
    num *= shifted;
    den *= rho;
  }
  const Rational d(num, den);
  if (!is_integer(d) || d <= 0) throw InvariantViolation("Weyl dimension is not a positive integer: " + format_rational(d));
  const auto n = boost::multiprecision::numerator(d);
  if (n > std::numeric_limits<std::uint64_t>::max()) throw InvariantViolation("Weyl dimension overflows 64 bits");
  return n.convert_to<std::uint64_t>();
}

bool is_type_a(const RootSystem& sys) {
  const int n = sys.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int expected = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      if (sys.cartan()(i, j) != expected) return false;
    }
  return true;
}

}  // namespace bwbverify
