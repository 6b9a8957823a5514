#pragma once

// Root systems built from Cartan data.
//
// Conventions:
//   * C(i,j) = <alpha_j, alpha_i^vee>, so a root beta with simple-root
//     coordinates m has fundamental-weight coordinates C m.
//   * d_i is the symmetrizer with (alpha_i, alpha_j) = d_i C(i,j); short roots
//     have (beta, beta) = 2, so d_short = 1.
//   * Weights are written in fundamental-weight coordinates, roots in
//     simple-root coordinates.

#include "linkage_lab/arith.hpp"
#include "linkage_lab/coords.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace linkage_lab {

/// Either a Cartan type such as "G2" or an explicit matrix.
struct CartanSpec {
  char series = 0;  // 'A'..'G'; 0 when an explicit matrix is given
  int rank = 0;
  std::optional<Matrix> matrix;

  static CartanSpec type(char series, int rank) { return CartanSpec{series, rank, std::nullopt}; }
  static CartanSpec explicit_matrix(Matrix m) {
    int n = static_cast<int>(m.rows());
    return CartanSpec{0, n, std::move(m)};
  }

  /// Parses labels like "A2", "g2", "B3".
  static CartanSpec parse(const std::string& label) {
    if (label.size() < 2) throw InvalidInput("bad Cartan type \"" + label + "\"");
    char s = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int r = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(label[i])))
        throw InvalidInput("bad Cartan type \"" + label + "\"");
      r = r * 10 + (label[i] - '0');
      if (r > 64) throw InvalidInput("rank too large in \"" + label + "\"");
    }
    return type(s, r);
  }

  std::string label() const {
    if (matrix) return "custom";
    return std::string(1, series) + std::to_string(rank);
  }
};

namespace detail {

// Chain-style Dynkin edges (i, j, C(i,j), C(j,i)), zero-based.
struct CartanEdge {
  int i, j;
  Int cij, cji;
};

inline Matrix cartan_from_edges(int n, const std::vector<CartanEdge>& edges) {
  Matrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (const auto& e : edges) {
    c(e.i, e.j) = e.cij;
    c(e.j, e.i) = e.cji;
  }
  return c;
}

inline Matrix series_cartan(char series, int n) {
  std::vector<CartanEdge> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1, -1, -1});
  };
  switch (series) {
    case 'A':
      if (n < 1) break;
      chain(n);
      return cartan_from_edges(n, edges);
    case 'B':  // alpha_n short
      if (n < 2) break;
      chain(n - 1);
      edges.push_back({n - 2, n - 1, -1, -2});
      return cartan_from_edges(n, edges);
    case 'C':  // alpha_n long
      if (n < 2) break;
      chain(n - 1);
      edges.push_back({n - 2, n - 1, -2, -1});
      return cartan_from_edges(n, edges);
    case 'D':
      if (n < 3) break;
      chain(n - 1);
      edges.push_back({n - 3, n - 1, -1, -1});
      return cartan_from_edges(n, edges);
    case 'E':  // Bourbaki: 1-3-4-5-...-n, 2-4
      if (n < 6 || n > 8) break;
      edges.push_back({0, 2, -1, -1});
      edges.push_back({1, 3, -1, -1});
      for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1, -1, -1});
      return cartan_from_edges(n, edges);
    case 'F':  // alpha_1, alpha_2 long
      if (n != 4) break;
      edges.push_back({0, 1, -1, -1});
      edges.push_back({1, 2, -1, -2});
      edges.push_back({2, 3, -1, -1});
      return cartan_from_edges(n, edges);
    case 'G':  // alpha_1 short
      if (n != 2) break;
      edges.push_back({0, 1, -3, -1});
      return cartan_from_edges(n, edges);
    default:
      break;
  }
  throw InvalidInput("unsupported Cartan type " + std::string(1, series) + std::to_string(n));
}

}  // namespace detail

/// Flags for the standing restrictions on ell. Each is independent.
struct EllValidity {
  Int ell = 0;
  bool odd = false;
  bool g2_coprime_to_3 = false;  // true when no G2 component or 3 does not divide ell
  bool above_coxeter = false;    // ell > h
  bool all() const { return odd && g2_coprime_to_3 && above_coxeter; }
};

/// Data attached to one positive root.
struct PositiveRoot {
  RootVector root;          // simple-root coordinates
  Weight weight;            // fundamental-weight coordinates (C * root)
  std::vector<Int> coroot;  // coroot in simple-coroot coordinates; <lambda, beta^vee> = sum coroot_j lambda_j
  Int half_length = 1;      // d_beta = (beta, beta) / 2
  int component = 0;
};

/// One indecomposable summand.
struct Component {
  std::vector<int> simple;  // indices of its simple roots
  int highest_root = -1;    // index into positive_roots()
  int highest_short_root = -1;
  Int coxeter_number = 0;
  bool is_g2 = false;
};

/// Immutable after build; all queries are const.
class RootSystem {
 public:
  static RootSystem build(const CartanSpec& spec) {
    Matrix c = spec.matrix ? *spec.matrix : detail::series_cartan(spec.series, spec.rank);
    RootSystem rs;
    rs.label_ = spec.label();
    rs.init(std::move(c));
    return rs;
  }

  static RootSystem of_type(const std::string& label) { return build(CartanSpec::parse(label)); }

  const std::string& label() const { return label_; }
  std::size_t rank() const { return n_; }
  const Matrix& cartan() const { return cartan_; }
  const std::vector<Int>& symmetrizer() const { return d_; }
  const std::vector<PositiveRoot>& positive_roots() const { return pos_; }
  std::size_t num_positive_roots() const { return pos_.size(); }
  const std::vector<Component>& components() const { return comps_; }
  bool indecomposable() const { return comps_.size() == 1; }
  bool has_g2_component() const {
    return std::any_of(comps_.begin(), comps_.end(), [](const Component& c) { return c.is_g2; });
  }
  const ExactInverse& cartan_inverse() const { return inv_; }

  /// rho: all-ones in fundamental-weight coordinates.
  Weight rho() const { return Weight(std::vector<Int>(n_, 1)); }

  /// Maximum Coxeter number over the components.
  Int coxeter_number() const {
    Int h = 0;
    for (const auto& c : comps_) h = std::max(h, c.coxeter_number);
    return h;
  }

  const PositiveRoot& highest_root() const { return pos_.at(sole_component().highest_root); }
  const PositiveRoot& highest_short_root() const { return pos_.at(sole_component().highest_short_root); }

  RootVector simple_root(std::size_t i) const {
    RootVector r(n_);
    r[i] = 1;
    return r;
  }

  Weight weight_of(const RootVector& beta) const {
    check_rank(beta.size());
    return Weight(cartan_.apply(beta.coords()));
  }

  /// Index into positive_roots() of beta or of -beta; nullopt if not a root.
  std::optional<std::size_t> positive_index(const RootVector& beta) const {
    if (auto it = index_.find(beta); it != index_.end()) return it->second;
    if (auto it = index_.find(-beta); it != index_.end()) return it->second;
    return std::nullopt;
  }

  bool is_root(const RootVector& beta) const { return beta.size() == n_ && positive_index(beta).has_value(); }
  static bool is_positive(const RootVector& beta) {
    bool any = false;
    for (auto x : beta.coords()) {
      if (x < 0) return false;
      any = any || x > 0;
    }
    return any;
  }

  Int half_length(const RootVector& beta) const { return root_data(beta).half_length; }

  /// <lambda, beta^vee> for a root beta (positive or negative).
  Int pairing(const Weight& lambda, const RootVector& beta) const {
    check_rank(lambda.size());
    const auto& pr = root_data(beta);
    Int v = coroot_pairing(lambda, pr);
    return is_positive(beta) ? v : -v;
  }

  /// <lambda, beta^vee> for a stored positive root.
  static Int coroot_pairing(const Weight& lambda, const PositiveRoot& pr) {
    Int s = 0;
    for (std::size_t j = 0; j < pr.coroot.size(); ++j)
      if (pr.coroot[j] != 0) s = checked_add(s, checked_mul(pr.coroot[j], lambda[j]));
    return s;
  }

  /// Symmetric form on the root lattice.
  Int form(const RootVector& a, const RootVector& b) const {
    Int s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (b[j] != 0) s = checked_add(s, checked_mul(checked_mul(a[i], b[j]), checked_mul(d_[i], cartan_(i, j))));
    }
    return s;
  }

  /// det(C) * (lambda, mu) on weights; integral.
  Int scaled_weight_form(const Weight& a, const Weight& b) const {
    // (w_i, w_j) = (C^-1)_{ji} d_j
    Int s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (b[j] != 0)
          s = checked_add(s, checked_mul(checked_mul(a[i], b[j]), checked_mul(inv_.adjugate(j, i), d_[j])));
    }
    return s;
  }

  Int form_scale() const { return inv_.det; }

  static Int height(const RootVector& beta) {
    Int h = 0;
    for (auto x : beta.coords()) h = checked_add(h, x);
    return h;
  }

  /// Solves C x = lambda over the integers.
  std::optional<RootVector> in_root_lattice(const Weight& lambda) const {
    check_rank(lambda.size());
    if (auto x = inv_.solve_integral(lambda.coords())) return RootVector(std::move(*x));
    return std::nullopt;
  }

  /// Rational simple-root coordinates of a weight.
  std::vector<Rational> rational_root_coords(const Weight& lambda) const {
    check_rank(lambda.size());
    return inv_.solve(lambda.coords());
  }

  /// mu <= lambda: lambda - mu is a non-negative integer combination of simple roots.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const {
    auto x = in_root_lattice(lambda - mu);
    if (!x) return false;
    for (auto v : x->coords())
      if (v < 0) return false;
    return true;
  }

  static bool is_dominant(const Weight& lambda) {
    for (auto x : lambda.coords())
      if (x < 0) return false;
    return true;
  }

  EllValidity validate_ell(Int ell) const {
    if (ell < 1) throw InvalidInput("ell must be a positive integer");
    EllValidity v;
    v.ell = ell;
    v.odd = ell % 2 == 1;
    v.g2_coprime_to_3 = !has_g2_component() || ell % 3 != 0;
    v.above_coxeter = ell > coxeter_number();
    return v;
  }

  void check_rank(std::size_t n) const {
    if (n != n_) {
      std::ostringstream msg;
      msg << "expected " << n_ << " coordinates, got " << n;
      throw InvalidInput(msg.str());
    }
  }

  const PositiveRoot& root_data(const RootVector& beta) const {
    check_rank(beta.size());
    auto idx = positive_index(beta);
    if (!idx) throw InvalidInput(to_string(beta) + " is not a root of " + label_);
    return pos_[*idx];
  }

 private:
  const Component& sole_component() const {
    if (comps_.size() != 1) throw InvalidInput("root system " + label_ + " is decomposable; use a component");
    return comps_.front();
  }

  void init(Matrix c) {
    n_ = c.rows();
    if (n_ == 0 || c.cols() != n_) throw InvalidInput("Cartan matrix must be square and non-empty");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j && c(i, j) != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
        if (i != j && c(i, j) > 0) throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
        if (i != j && ((c(i, j) == 0) != (c(j, i) == 0)))
          throw InvalidInput("Cartan matrix has C(i,j) = 0 but C(j,i) != 0");
      }
    cartan_ = std::move(c);
    find_components();
    compute_symmetrizer();
    check_positive_definite();
    inv_ = exact_inverse(cartan_);
    enumerate_roots();
    finish_components();
  }

  void find_components() {
    std::vector<int> comp(n_, -1);
    int count = 0;
    for (std::size_t s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      Component cc;
      std::deque<std::size_t> q{s};
      comp[s] = count;
      while (!q.empty()) {
        auto i = q.front();
        q.pop_front();
        cc.simple.push_back(static_cast<int>(i));
        for (std::size_t j = 0; j < n_; ++j)
          if (j != i && cartan_(i, j) != 0 && comp[j] < 0) {
            comp[j] = count;
            q.push_back(j);
          }
      }
      std::sort(cc.simple.begin(), cc.simple.end());
      comps_.push_back(std::move(cc));
      ++count;
    }
    comp_of_ = std::move(comp);
  }

  void compute_symmetrizer() {
    std::vector<Rational> d(n_, Rational(0));
    for (const auto& cc : comps_) {
      std::deque<int> q{cc.simple.front()};
      d[cc.simple.front()] = 1;
      while (!q.empty()) {
        int i = q.front();
        q.pop_front();
        for (std::size_t j = 0; j < n_; ++j) {
          if (static_cast<int>(j) == i || cartan_(i, j) == 0 || d[j].numerator() != 0) continue;
          d[j] = d[i] * Rational(cartan_(i, j), cartan_(j, i));
          q.push_back(static_cast<int>(j));
        }
      }
      Int lcm = 1;
      for (int i : cc.simple) lcm = std::lcm(lcm, d[i].denominator());
      Int g = 0;
      for (int i : cc.simple) g = std::gcd(g, (d[i] * lcm).numerator());
      for (int i : cc.simple) d[i] = d[i] * lcm / g;
    }
    d_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) d_[i] = d[i].numerator();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (d_[i] * cartan_(i, j) != d_[j] * cartan_(j, i))
          throw InvalidInput("Cartan matrix is not symmetrizable");
  }

  void check_positive_definite() const {
    // Sylvester's criterion on DC.
    std::vector<std::vector<Rational>> a(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) a[i][j] = d_[i] * cartan_(i, j);
    for (std::size_t k = 0; k < n_; ++k) {
      if (a[k][k] <= 0) throw InvalidInput("Cartan matrix is not of finite type");
      for (std::size_t r = k + 1; r < n_; ++r) {
        Rational f = a[r][k] / a[k][k];
        for (std::size_t c = k; c < n_; ++c) a[r][c] -= f * a[k][c];
      }
    }
  }

  void enumerate_roots() {
    // Closure of the simple roots under simple reflections.
    std::set<RootVector> seen;
    std::deque<RootVector> q;
    for (std::size_t i = 0; i < n_; ++i) {
      seen.insert(simple_root(i));
      q.push_back(simple_root(i));
    }
    while (!q.empty()) {
      RootVector b = q.front();
      q.pop_front();
      auto w = cartan_.apply(b.coords());
      for (std::size_t i = 0; i < n_; ++i) {
        if (w[i] == 0) continue;
        RootVector r = b;
        r[i] = checked_sub(r[i], w[i]);
        if (seen.insert(r).second) {
          if (seen.size() > 100000) throw InvalidInput("root closure did not terminate");
          q.push_back(r);
        }
      }
    }
    std::vector<RootVector> pos;
    for (const auto& r : seen)
      if (is_positive(r)) pos.push_back(r);
    std::stable_sort(pos.begin(), pos.end(), [](const RootVector& a, const RootVector& b) {
      auto ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a > b;  // simple roots in index order at height 1
    });
    for (const auto& r : pos) {
      PositiveRoot pr;
      pr.root = r;
      pr.weight = Weight(cartan_.apply(r.coords()));
      pr.half_length = form(r, r) / 2;
      pr.coroot.assign(n_, 0);
      for (std::size_t j = 0; j < n_; ++j) {
        Int num = checked_mul(r[j], d_[j]);
        if (num % pr.half_length != 0) throw std::logic_error("non-integral coroot");
        pr.coroot[j] = num / pr.half_length;
      }
      for (std::size_t j = 0; j < n_; ++j)
        if (r[j] != 0) pr.component = comp_of_[j];
      if (pr.half_length < 1 || pr.half_length > 3) throw std::logic_error("root half-length outside {1,2,3}");
      index_.emplace(r, pos_.size());
      pos_.push_back(std::move(pr));
    }
  }

  void finish_components() {
    for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
      auto& cc = comps_[ci];
      Int min_len = 0;
      for (int i : cc.simple) min_len = min_len == 0 ? d_[i] : std::min(min_len, d_[i]);
      for (std::size_t k = 0; k < pos_.size(); ++k) {
        const auto& pr = pos_[k];
        if (pr.component != static_cast<int>(ci)) continue;
        if (cc.highest_root < 0 || height(pr.root) > height(pos_[cc.highest_root].root))
          cc.highest_root = static_cast<int>(k);
        if (pr.half_length == min_len &&
            (cc.highest_short_root < 0 || height(pr.root) > height(pos_[cc.highest_short_root].root)))
          cc.highest_short_root = static_cast<int>(k);
      }
      cc.coxeter_number = 1 + height(pos_[cc.highest_root].root);
      Int max_len = 0;
      for (int i : cc.simple) max_len = std::max(max_len, d_[i]);
      cc.is_g2 = cc.simple.size() == 2 && max_len == 3 * min_len;
    }
  }

  std::string label_;
  std::size_t n_ = 0;
  Matrix cartan_;
  std::vector<Int> d_;
  ExactInverse inv_;
  std::vector<PositiveRoot> pos_;
  std::map<RootVector, std::size_t> index_;
  std::vector<Component> comps_;
  std::vector<int> comp_of_;
};

}  // namespace linkage_lab
