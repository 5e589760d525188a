#include "kr/krset.hpp"

#include <algorithm>

#include "kr/errors.hpp"

namespace kr {

namespace {

void check_node(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) {
    throw InvalidInput("node " + std::to_string(i) + " out of range for " + rs.name());
  }
}

int theta_coefficient(const RootSystem& rs, int i) { return epsilon(rs, rs.theta(), i); }

detail::LevelFamily untwisted_family(const RootSystem& rs, int i) {
  check_node(rs, i);
  detail::LevelFamily fam;
  fam.rank = rs.rank();
  fam.node = i;
  fam.period = rs.dcheck()[i - 1];
  fam.base = [&rs, i](int m0) { return base_set(rs, i, m0); };
  fam.chain = enumerate_chain(rs, i);
  return fam;
}

}  // namespace

DominantCharacter GradedCharacter::total() const {
  DominantCharacter out;
  for (const auto& [s, chi] : by_grade)
    for (const auto& [w, m] : chi.entries()) out.add(w, m);
  return out;
}

bool GradedCharacter::multiplicity_free() const { return total().multiplicity_free(); }

std::vector<std::int64_t> GradedCharacter::dimension_polynomial(const RootSystem& rs) const {
  if (by_grade.empty()) return {};
  std::vector<std::int64_t> coeffs(by_grade.rbegin()->first + 1, 0);
  for (const auto& [s, chi] : by_grade) coeffs[s] = dimension(rs, chi);
  return coeffs;
}

namespace detail {

std::vector<Weight> stepped_weights(int rank, int top, int step, int scale) {
  std::vector<Weight> out;
  for (int j = top; j >= 0; j -= step) out.push_back(Weight::fundamental(rank, j, scale));
  return out;
}

std::set<Weight> level_set(const LevelFamily& fam, int m) {
  if (m < 0) throw InvalidInput("level must be non-negative");
  if (m == 0) return {Weight(fam.rank)};
  if (m <= fam.period) {
    auto b = fam.base(m);
    return {b.begin(), b.end()};
  }
  std::set<Weight> out;
  const auto rest = level_set(fam, m - fam.period);
  for (const auto& a : fam.chain.weights)
    for (const auto& b : rest) out.insert(a + b);
  return out;
}

std::vector<int> reduced_expression(const LevelFamily& fam, int m, const Weight& mu) {
  const auto whole = level_set(fam, m);
  if (!whole.count(mu)) {
    throw InvalidInput("weight " + mu.to_string() + " is not in the level-" + std::to_string(m) + " set");
  }
  const int m0 = m / fam.period;
  std::vector<int> js;
  Weight residual = mu;
  for (int r = 1; r <= m0; ++r) {
    const auto target = level_set(fam, m - r * fam.period);
    int chosen = -1;
    for (std::size_t j = 0; j < fam.chain.weights.size(); ++j) {
      if (target.count(residual - fam.chain.weights[j])) {
        chosen = static_cast<int>(j);
        break;
      }
    }
    if (chosen < 0) {
      throw TheoremCheckFailure("reduced expression for " + mu.to_string() + " does not terminate at step " +
                                std::to_string(r));
    }
    residual -= fam.chain.weights[chosen];
    js.push_back(chosen);
  }
  return js;
}

GradedCharacter graded_character(const LevelFamily& fam, int m) {
  GradedCharacter out;
  for (const auto& mu : level_set(fam, m)) {
    int s = 0;
    for (int j : reduced_expression(fam, m, mu)) s += j;
    out.by_grade[s].add(mu, 1);
  }
  return out;
}

}  // namespace detail

std::vector<Weight> base_set(const RootSystem& rs, int i, int m0) {
  check_node(rs, i);
  const int n = rs.rank();
  const int d = rs.dcheck()[i - 1];
  if (m0 < 1 || m0 > d) {
    throw InvalidInput("base level " + std::to_string(m0) + " outside 1.." + std::to_string(d) + " at node " +
                       std::to_string(i));
  }
  if (m0 < d) return {Weight::fundamental(n, i, m0)};
  if (theta_coefficient(rs, i) == 1) return {Weight::fundamental(n, i, d)};

  switch (rs.type().family()) {
    case Family::B:
      if (d == 1) return detail::stepped_weights(n, i, 2, 1);
      {
        // node n: {2 omega_n, omega_{n-2}, ..., omega_{nbar}}
        std::vector<Weight> out{Weight::fundamental(n, n, 2)};
        for (const auto& w : detail::stepped_weights(n, n - 2, 2, 1)) out.push_back(w);
        return out;
      }
    case Family::C: return detail::stepped_weights(n, i, 1, 2);
    case Family::D: return detail::stepped_weights(n, i, 2, 1);
    case Family::A: break;
  }
  throw Error("no base-set listing for " + rs.name() + " node " + std::to_string(i));
}

GradedChain enumerate_chain(const RootSystem& rs, int i) {
  check_node(rs, i);
  const int d = rs.dcheck()[i - 1];
  const Weight top = Weight::fundamental(rs.rank(), i, d);
  std::vector<Weight> w = base_set(rs, i, d);
  std::stable_sort(w.begin(), w.end(),
                   [&](const Weight& a, const Weight& b) { return height(rs, top - a) < height(rs, top - b); });
  auto fail = [&](const std::string& why, const Weight& a, const Weight& b) {
    throw TheoremCheckFailure("chain conditions violated for " + rs.name() + " node " + std::to_string(i) + ": " +
                              why + " (" + a.to_string() + ", " + b.to_string() + ")");
  };
  if (w.front() != top) fail("mu_0 differs from dcheck_i*omega_i", w.front(), top);
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (!w[s].is_dominant()) fail("non-dominant element", w[s], w[s]);
    for (std::size_t t = s + 1; t < w.size(); ++t)
      if (w[s] == w[t]) fail("repeated element", w[s], w[t]);
  }
  for (std::size_t s = 0; s + 1 < w.size(); ++s)
    if (!is_positive_root(rs, w[s] - w[s + 1])) fail("mu_s - mu_{s+1} is not a positive root", w[s], w[s + 1]);
  for (std::size_t s = 0; s + 2 < w.size(); ++s) {
    const Weight diff = w[s] - w[s + 2];
    if (!in_positive_cone(rs, diff) || is_positive_root(rs, diff))
      fail("mu_s - mu_{s+2} is not in Q+ minus R+", w[s], w[s + 2]);
  }
  return GradedChain{std::move(w)};
}

std::set<Weight> pplus(const RootSystem& rs, int i, int m) {
  check_node(rs, i);
  if (m < 0) throw InvalidInput("level must be non-negative");
  return detail::level_set(untwisted_family(rs, i), m);
}

std::vector<int> reduced_expression(const RootSystem& rs, int i, int m, const Weight& mu) {
  return detail::reduced_expression(untwisted_family(rs, i), m, mu);
}

int grade(const RootSystem& rs, int i, int m, const Weight& mu) {
  int s = 0;
  for (int j : reduced_expression(rs, i, m, mu)) s += j;
  return s;
}

GradedCharacter graded_character(const RootSystem& rs, int i, int m) {
  if (m < 0) throw InvalidInput("level must be non-negative");
  return detail::graded_character(untwisted_family(rs, i), m);
}

bool tensor_bound_check(const RootSystem& rs, int i, int m) {
  const auto fam = untwisted_family(rs, i);
  const int d = fam.period;
  const int m0 = m / d, m1 = m % d;
  const auto target = detail::graded_character(fam, m);

  // grade -> weight character of the factor KR(d * omega_i)
  const auto unit = detail::graded_character(fam, d);
  std::map<int, WeightCharacter> unit_chars;
  for (const auto& [s, chi] : unit.by_grade) unit_chars[s] = expand(rs, chi);

  GradedCharacter acc = detail::graded_character(fam, m1);
  for (int r = 0; r < m0; ++r) {
    GradedCharacter next;
    for (const auto& [s, chi] : acc.by_grade)
      for (const auto& [t, wc] : unit_chars) {
        const DominantCharacter part = tensor_with_character(rs, chi, wc);
        for (const auto& [lam, k] : part.entries()) next.by_grade[s + t].add(lam, k);
      }
    acc = std::move(next);
  }
  for (const auto& [s, chi] : target.by_grade) {
    auto it = acc.by_grade.find(s);
    for (const auto& [lam, k] : chi.entries()) {
      const Multiplicity bound = it == acc.by_grade.end() ? 0 : it->second(lam);
      if (k > bound) return false;
    }
  }
  return true;
}

}  // namespace kr
