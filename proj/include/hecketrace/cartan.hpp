#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecketrace/errors.hpp"
#include "hecketrace/integer.hpp"
#include "hecketrace/qpoly.hpp"

namespace hecketrace {

/// Index of a Weyl group element inside its enumerated group. Ids are assigned in
/// (length, lexicographically smallest reduced word) order; the identity is 0.
using ElementId = std::uint32_t;

/// Word in the simple reflections, generator indices 1..rank.
using Word = std::vector<int>;

using IntMatrix = std::vector<std::vector<int>>;

inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

/// Group-size budget: HECKETRACE_MAX_ORDER when set, else kDefaultMaxOrder.
inline std::size_t default_max_order() {
  if (const char* env = std::getenv("HECKETRACE_MAX_ORDER"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0)
      throw InvalidArgument(std::string("HECKETRACE_MAX_ORDER is not a positive integer: ") + env);
    return static_cast<std::size_t>(value);
  }
  return kDefaultMaxOrder;
}

struct IrreducibleType {
  char letter;
  int rank;

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

/// Parses TYPE := IRR ('x' IRR)*, IRR := [A-G] rank.
inline std::vector<IrreducibleType> parse_type_components(std::string_view spec) {
  std::vector<IrreducibleType> out;
  std::size_t pos = 0;
  if (spec.empty()) throw ParseError("empty type string", 0);
  while (true) {
    if (pos >= spec.size()) throw ParseError("expected a type letter A-G", pos);
    const char letter = spec[pos];
    if (letter < 'A' || letter > 'G') throw ParseError(std::string("expected a type letter A-G, got '") + letter + "'", pos);
    ++pos;
    const std::size_t digits_start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos])) != 0) ++pos;
    if (pos == digits_start) throw ParseError("expected a rank after type letter", pos);
    if (pos - digits_start > 6) throw ParseError("rank too large", digits_start);
    const int rank = std::stoi(std::string(spec.substr(digits_start, pos - digits_start)));
    bool valid = false;
    switch (letter) {
      case 'A': valid = rank >= 1; break;
      case 'B':
      case 'C': valid = rank >= 2; break;
      case 'D': valid = rank >= 3; break;
      case 'E': valid = rank >= 6 && rank <= 8; break;
      case 'F': valid = rank == 4; break;
      case 'G': valid = rank == 2; break;
      default: break;
    }
    if (!valid)
      throw ParseError("invalid rank " + std::to_string(rank) + " for type " + letter, digits_start);
    out.push_back({letter, rank});
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') throw ParseError(std::string("expected 'x' between factors, got '") + spec[pos] + "'", pos);
    ++pos;
  }
  return out;
}

inline Integer weyl_group_order(const IrreducibleType& t) {
  auto factorial = [](int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.letter) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return ipow(2, static_cast<unsigned long>(n)) * factorial(n);
    case 'D': return ipow(2, static_cast<unsigned long>(n - 1)) * factorial(n);
    case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
    case 'F': return 1152;
    case 'G': return 12;
    default: throw InvalidArgument("unknown type letter");
  }
}

/// Cartan matrix A[i][j] = <alpha_i^vee, alpha_j> in Bourbaki numbering.
inline IntMatrix cartan_matrix_of(const IrreducibleType& t) {
  const int n = t.rank;
  IntMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default: throw InvalidArgument("unknown type letter");
  }
  return a;
}

/// det(q I - M) by the Faddeev-LeVerrier recursion (all divisions are exact over Z).
inline QPoly characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  using BigMatrix = std::vector<std::vector<Integer>>;
  BigMatrix a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  BigMatrix mk(n, std::vector<Integer>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    BigMatrix next(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += a[i][l] * mk[l][j];
        if (i == j) acc += c[n - k + 1];
        next[i][j] = acc;
      }
    mk = std::move(next);
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    c[n - k] = -divexact(tr, Integer(static_cast<long>(k)));
  }
  return QPoly(std::move(c));
}

/// Degrees by greedy deflation of W(q) by q-integers [d]_q, largest d first.
inline std::vector<int> degrees_from_poincare(const QPoly& poincare, int nu, int rank) {
  std::vector<int> degrees;
  QPoly rest = poincare;
  for (int d = nu + 1; d >= 2; --d) {
    const QPoly qd = QPoly::q_integer(d);
    while (rest.degree() >= qd.degree()) {
      auto quot = rest.divide_exact(qd);
      if (!quot) break;
      degrees.push_back(d);
      rest = std::move(*quot);
    }
  }
  if (rest != QPoly(1) || static_cast<int>(degrees.size()) != rank)
    throw Error("internal error: Poincare polynomial " + poincare.to_string() +
                " does not factor into rank-many q-integers");
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

struct ConjClass {
  /// Every element of the class, ascending ids.
  std::vector<ElementId> members;
  int min_length = 0;
  std::vector<ElementId> minimal_elements;
  bool is_elliptic = false;
  /// det(q - y) on the reflection representation, for any member y.
  QPoly char_poly;
};

class CartanDatum;
std::shared_ptr<const CartanDatum> parse_type(std::string_view spec, std::size_t max_order);

/// Validated Cartan type together with its root system and the fully enumerated Weyl group.
/// Immutable after construction; obtain one through parse_type.
class CartanDatum {
 public:
  const std::string& type_spec() const { return type_spec_; }
  const std::vector<IrreducibleType>& components() const { return components_; }
  int rank() const { return rank_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Positive roots in the simple-root basis, ordered by height.
  std::vector<std::vector<int>> positive_roots() const {
    return {roots_.begin(), roots_.begin() + nu_};
  }
  int nu() const { return nu_; }
  std::size_t order() const { return lengths_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  const QPoly& poincare() const { return poincare_; }

  ElementId identity() const { return 0; }
  int length(ElementId w) const { return lengths_[w]; }
  ElementId left_mul(int s, ElementId w) const { return left_[idx(s) * order() + w]; }
  ElementId right_mul(ElementId w, int s) const { return right_[idx(s) * order() + w]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  const Word& reduced_word(ElementId w) const { return words_[w]; }
  bool is_left_descent(int s, ElementId w) const { return ((descents_[w] >> idx(s)) & 1U) != 0; }
  /// Smallest left descent, 0 for the identity.
  int first_left_descent(ElementId w) const { return w == 0 ? 0 : words_[w].front(); }

  ElementId multiply(ElementId a, ElementId b) const {
    for (int s : words_[b]) a = right_mul(a, s);
    return a;
  }

  /// Product of generators in word order; any word, reduced or not.
  ElementId from_word(const Word& word) const {
    ElementId w = identity();
    for (int s : word) {
      check_generator(s);
      w = right_mul(w, s);
    }
    return w;
  }

  void check_generator(int s) const {
    if (s < 1 || s > rank_)
      throw InvalidArgument("generator index " + std::to_string(s) + " out of range 1.." +
                            std::to_string(rank_) + " for " + type_spec_);
  }

  /// Order m_st of s*t.
  int coxeter_exponent(int s, int t) const {
    if (s == t) return 1;
    switch (cartan_[idx(s)][idx(t)] * cartan_[idx(t)][idx(s)]) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: throw Error("internal error: non-crystallographic Cartan entry");
    }
  }

  /// Action on the root lattice in the simple-root basis; column i is w(alpha_i).
  IntMatrix matrix(ElementId w) const {
    IntMatrix m(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_)));
    for (int i = 0; i < rank_; ++i) {
      const auto& col = roots_[static_cast<std::size_t>(images_[w * rank_ + i])];
      for (int j = 0; j < rank_; ++j) m[j][i] = col[j];
    }
    return m;
  }

  /// Signed permutation of the positive roots: entry k is +(j+1) when w(beta_k) = beta_j and
  /// -(j+1) when w(beta_k) = -beta_j.
  std::vector<int> root_perm(ElementId w) const {
    const IntMatrix m = matrix(w);
    std::vector<int> perm(static_cast<std::size_t>(nu_));
    for (int k = 0; k < nu_; ++k) {
      std::vector<int> image(static_cast<std::size_t>(rank_), 0);
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) image[i] += m[i][j] * roots_[k][j];
      const int r = root_index_.at(image);
      perm[k] = r < nu_ ? r + 1 : -(r - nu_ + 1);
    }
    return perm;
  }

  /// Number of positive roots sent to negative roots.
  int inversion_count(ElementId w) const {
    const auto perm = root_perm(w);
    return static_cast<int>(std::count_if(perm.begin(), perm.end(), [](int x) { return x < 0; }));
  }

  const std::vector<ConjClass>& classes() const { return classes_; }
  std::size_t class_of(ElementId w) const { return class_of_[w]; }

  /// det(q - y) on the reflection representation.
  QPoly char_poly(ElementId y) const { return characteristic_polynomial(matrix(y)); }

  /// True when y is elliptic and of minimal length in its class.
  bool is_elliptic_minimal(ElementId y) const {
    const auto& c = classes_[class_of_[y]];
    return c.is_elliptic && lengths_[y] == c.min_length;
  }

 private:
  friend std::shared_ptr<const CartanDatum> parse_type(std::string_view spec, std::size_t max_order);

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ULL;
      return h;
    }
  };

  static std::size_t idx(int s) { return static_cast<std::size_t>(s - 1); }

  void build_roots();
  void enumerate(std::size_t max_order);
  void build_classes();

  std::string type_spec_;
  std::vector<IrreducibleType> components_;
  int rank_ = 0;
  int nu_ = 0;
  IntMatrix cartan_;
  std::vector<std::vector<int>> roots_;  // positive roots, then their negatives
  std::map<std::vector<int>, int> root_index_;
  std::vector<std::vector<int>> reflect_;  // [s][root] -> root
  std::vector<int> images_;                // [w * rank + i] -> root index of w(alpha_i)
  std::vector<int> lengths_;
  std::vector<ElementId> left_, right_, inverse_;
  std::vector<Word> words_;
  std::vector<std::uint64_t> descents_;
  std::vector<ConjClass> classes_;
  std::vector<std::size_t> class_of_;
  QPoly poincare_;
  std::vector<int> degrees_;
};

inline void CartanDatum::build_roots() {
  const auto r = static_cast<std::size_t>(rank_);
  auto reflect_vec = [&](std::size_t s, std::vector<int> beta) {
    int pairing = 0;
    for (std::size_t j = 0; j < r; ++j) pairing += cartan_[s][j] * beta[j];
    beta[s] -= pairing;
    return beta;
  };
  std::vector<std::vector<int>> found;
  std::map<std::vector<int>, bool> seen;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    found.push_back(e);
    seen[e] = true;
  }
  for (std::size_t k = 0; k < found.size(); ++k)
    for (std::size_t s = 0; s < r; ++s) {
      auto beta = reflect_vec(s, found[k]);
      if (!seen.count(beta)) {
        seen[beta] = true;
        found.push_back(std::move(beta));
      }
    }
  std::vector<std::vector<int>> positive;
  for (const auto& beta : found)
    if (std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; })) positive.push_back(beta);
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a > b;
  });
  nu_ = static_cast<int>(positive.size());
  if (found.size() != 2 * positive.size()) throw Error("internal error: root system is not symmetric");
  roots_ = positive;
  for (const auto& beta : positive) {
    std::vector<int> neg(beta);
    for (auto& x : neg) x = -x;
    roots_.push_back(std::move(neg));
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) root_index_[roots_[k]] = static_cast<int>(k);
  reflect_.assign(r, std::vector<int>(roots_.size()));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t k = 0; k < roots_.size(); ++k) reflect_[s][k] = root_index_.at(reflect_vec(s, roots_[k]));
}

inline void CartanDatum::enumerate(std::size_t max_order) {
  const auto r = static_cast<std::size_t>(rank_);
  std::vector<int> imgs;
  std::vector<int> lens;
  std::vector<ElementId> left;  // [w * r + s]
  std::unordered_map<std::vector<int>, ElementId, VecHash> index;
  std::vector<int> id_imgs(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    id_imgs[i] = root_index_.at(e);
  }
  index.emplace(id_imgs, 0);
  imgs.insert(imgs.end(), id_imgs.begin(), id_imgs.end());
  lens.push_back(0);
  for (std::size_t w = 0; w < lens.size(); ++w) {
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<int> next(r);
      for (std::size_t i = 0; i < r; ++i) next[i] = reflect_[s][static_cast<std::size_t>(imgs[w * r + i])];
      auto [it, inserted] = index.emplace(next, static_cast<ElementId>(lens.size()));
      if (inserted) {
        if (lens.size() >= max_order)
          throw BudgetExceeded("budget exceeded: group order exceeds " + std::to_string(max_order));
        imgs.insert(imgs.end(), next.begin(), next.end());
        lens.push_back(lens[w] + 1);
      }
      left.push_back(it->second);
    }
  }
  const std::size_t n = lens.size();

  // Lexicographically smallest reduced words via the smallest left descent.
  std::vector<Word> words(n);
  for (std::size_t w = 1; w < n; ++w) {
    for (std::size_t s = 0; s < r; ++s) {
      const ElementId sw = left[w * r + s];
      if (lens[sw] < lens[w]) {
        words[w].push_back(static_cast<int>(s) + 1);
        words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
        break;
      }
    }
  }
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return lens[a] != lens[b] ? lens[a] < lens[b] : words[a] < words[b];
  });
  std::vector<ElementId> new_id(n);
  for (std::size_t k = 0; k < n; ++k) new_id[order[k]] = static_cast<ElementId>(k);

  images_.resize(n * r);
  lengths_.resize(n);
  words_.resize(n);
  left_.resize(r * n);
  descents_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const ElementId old = order[k];
    for (std::size_t i = 0; i < r; ++i) images_[k * r + i] = imgs[old * r + i];
    lengths_[k] = lens[old];
    words_[k] = std::move(words[old]);
    for (std::size_t s = 0; s < r; ++s) {
      const ElementId sw = new_id[left[old * r + s]];
      left_[s * n + k] = sw;
      if (lens[old] > 0 && lens[left[old * r + s]] < lens[old]) descents_[k] |= (std::uint64_t{1} << s);
    }
  }
  index.clear();
  for (std::size_t k = 0; k < n; ++k)
    index.emplace(std::vector<int>(images_.begin() + static_cast<std::ptrdiff_t>(k * r),
                                   images_.begin() + static_cast<std::ptrdiff_t>((k + 1) * r)),
                  static_cast<ElementId>(k));

  // (w s_j)(alpha_i) = w(alpha_i) - A[j][i] w(alpha_j)
  right_.resize(r * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<int> next(r);
      const auto& wj = roots_[static_cast<std::size_t>(images_[k * r + j])];
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> beta = roots_[static_cast<std::size_t>(images_[k * r + i])];
        for (std::size_t c = 0; c < r; ++c) beta[c] -= cartan_[j][i] * wj[c];
        next[i] = root_index_.at(beta);
      }
      right_[j * n + k] = index.at(next);
    }

  inverse_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    ElementId x = 0;
    for (int s : words_[k]) x = left_mul(s, x);
    inverse_[k] = x;
  }

  std::vector<Integer> by_length(static_cast<std::size_t>(nu_) + 1);
  for (int l : lengths_) by_length[static_cast<std::size_t>(l)] += 1;
  poincare_ = QPoly(std::move(by_length));
}

inline void CartanDatum::build_classes() {
  const std::size_t n = order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  class_of_.assign(n, kUnset);
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != kUnset) continue;
    ConjClass c;
    const std::size_t index = classes_.size();
    std::vector<ElementId> stack{static_cast<ElementId>(start)};
    class_of_[start] = index;
    while (!stack.empty()) {
      const ElementId x = stack.back();
      stack.pop_back();
      c.members.push_back(x);
      for (int s = 1; s <= rank_; ++s) {
        const ElementId y = right_mul(left_mul(s, x), s);
        if (class_of_[y] == kUnset) {
          class_of_[y] = index;
          stack.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.min_length = lengths_[c.members.front()];
    for (ElementId x : c.members)
      if (lengths_[x] == c.min_length) c.minimal_elements.push_back(x);
    c.char_poly = char_poly(c.members.front());
    c.is_elliptic = c.char_poly.evaluate(Integer(1)) != 0;
    classes_.push_back(std::move(c));
  }
}

/// Builds the datum for a type string such as "A2", "G2" or "A1xB3". The group order is
/// checked against max_order before anything is enumerated.
inline std::shared_ptr<const CartanDatum> parse_type(std::string_view spec,
                                                      std::size_t max_order = default_max_order()) {
  auto d = std::shared_ptr<CartanDatum>(new CartanDatum());
  d->components_ = parse_type_components(spec);
  Integer order = 1;
  for (const auto& c : d->components_) {
    d->rank_ += c.rank;
    order *= weyl_group_order(c);
    if (!d->type_spec_.empty()) d->type_spec_ += "x";
    d->type_spec_ += c.name();
  }
  if (order > Integer(static_cast<unsigned long>(max_order)))
    throw BudgetExceeded("budget exceeded: |W(" + d->type_spec_ + ")| = " + order.get_str() +
                         " exceeds the limit " + std::to_string(max_order) +
                         " (raise --max-order or HECKETRACE_MAX_ORDER)");
  if (d->rank_ > 64) throw BudgetExceeded("budget exceeded: rank above 64");
  const auto r = static_cast<std::size_t>(d->rank_);
  d->cartan_.assign(r, std::vector<int>(r, 0));
  std::size_t offset = 0;
  for (const auto& c : d->components_) {
    const auto block = cartan_matrix_of(c);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j) d->cartan_[offset + i][offset + j] = block[i][j];
    offset += block.size();
  }
  d->build_roots();
  d->enumerate(max_order);
  if (Integer(static_cast<unsigned long>(d->order())) != order)
    throw Error("internal error: enumerated " + std::to_string(d->order()) + " elements, expected " +
                order.get_str());
  d->degrees_ = degrees_from_poincare(d->poincare_, d->nu_, d->rank_);
  d->build_classes();
  return d;
}

}  // namespace hecketrace
