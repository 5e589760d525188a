#include "kr/twisted.hpp"

#include <algorithm>

#include "kr/errors.hpp"

namespace kr {

namespace {

void check_node(const TwistedData& data, int i) {
  if (i < 1 || i > data.g0.rank()) {
    throw InvalidInput("node " + std::to_string(i) + " out of range for " + data.outer.name());
  }
}

bool in_r0_positive(const TwistedData& data, const Weight& diff) { return is_positive_root(data.g0, diff); }

detail::LevelFamily twisted_family(const TwistedData& data, int i) {
  check_node(data, i);
  detail::LevelFamily fam;
  fam.rank = data.g0.rank();
  fam.node = i;
  fam.period = data.dsigma[i - 1];
  fam.base = [&data, i](int m0) { return base_set_sigma(data, i, m0); };
  fam.chain = enumerate_chain_sigma(data, i, fam.period).chain;
  return fam;
}

}  // namespace

OuterType::OuterType(Kind kind, int n) : kind_(kind), n_(n) {
  const int min_n = kind == Kind::AEven ? 1 : 2;
  if (n < min_n) throw InvalidInput("twisted parameter n=" + std::to_string(n) + " below " + std::to_string(min_n));
}

OuterType OuterType::from_ambient(Family family, int ambient_rank) {
  if (family == Family::A) {
    if (ambient_rank < 2) throw InvalidInput("A_1 has no diagram automorphism");
    if (ambient_rank % 2 == 0) return OuterType(Kind::AEven, ambient_rank / 2);
    return OuterType(Kind::AOdd, (ambient_rank + 1) / 2);
  }
  if (family == Family::D) return OuterType(Kind::D, ambient_rank - 1);
  throw InvalidInput(std::string("type ") + family_letter(family) + " has no diagram automorphism");
}

int OuterType::ambient_rank() const {
  switch (kind_) {
    case Kind::AOdd: return 2 * n_ - 1;
    case Kind::AEven: return 2 * n_;
    case Kind::D: return n_ + 1;
  }
  return 0;
}

std::string OuterType::name() const {
  return std::string(1, family_letter(ambient_family())) + std::to_string(ambient_rank()) + "~";
}

std::int64_t OuterType::ambient_dim() const {
  const std::int64_t r = ambient_rank();
  if (kind_ == Kind::D) return r * (2 * r - 1);
  return (r + 1) * (r + 1) - 1;
}

bool TwistedData::in_r1_positive(const Weight& diff) const {
  const RootCoeffs c = to_root_coords(g0, diff);
  return std::find(r1_positive.begin(), r1_positive.end(), c) != r1_positive.end();
}

TwistedData fixed_point_data(const OuterType& outer) {
  const int n = outer.n();
  auto g0_type = [&]() -> LieType {
    if (outer.kind() == OuterType::Kind::AOdd) return LieType(Family::C, n);
    if (n == 1) return LieType::b1();
    return LieType(Family::B, n);
  }();
  RootSystem g0 = RootSystem::build(g0_type);

  const auto shorts = g0.short_positive_roots();
  RootCoeffs highest_short = shorts.front();
  for (const auto& r : shorts)
    if (r.height() > highest_short.height()) highest_short = r;

  std::vector<RootCoeffs> r1;
  Weight phi = to_weight(g0, highest_short);
  std::vector<int> dsigma(n, 1);
  if (outer.kind() == OuterType::Kind::AEven) {
    r1 = g0.positive_roots();
    for (const auto& s : shorts) r1.push_back(Rational(2) * s);
    phi = 2 * phi;
    for (int k = 0; k < n - 1; ++k) dsigma[k] = 2;
    dsigma[n - 1] = 4;
  } else {
    r1 = shorts;
  }
  return TwistedData{outer, std::move(g0), std::move(r1), std::move(phi), std::move(dsigma)};
}

std::vector<Weight> base_set_sigma(const TwistedData& data, int i, int m0) {
  check_node(data, i);
  const int n = data.g0.rank();
  const int d = data.dsigma[i - 1];
  if (m0 < 1 || m0 > d) {
    throw InvalidInput("twisted base level " + std::to_string(m0) + " outside 1.." + std::to_string(d));
  }
  switch (data.outer.kind()) {
    case OuterType::Kind::AEven:
      if (m0 == 1 || (i == n && m0 < 4)) return {Weight::fundamental(n, i, m0)};
      if (i != n) return detail::stepped_weights(n, i, 1, 2);
      {
        std::vector<Weight> out{Weight::fundamental(n, n, 4)};
        for (int j = n - 1; j >= 1; --j) out.push_back(Weight::fundamental(n, j, 2));
        out.push_back(Weight(n));
        return out;
      }
    case OuterType::Kind::AOdd: return detail::stepped_weights(n, i, 2, 1);
    case OuterType::Kind::D:
      if (i == n) return {Weight::fundamental(n, n)};
      return detail::stepped_weights(n, i, 1, 1);
  }
  return {};
}

TwistedChain enumerate_chain_sigma(const TwistedData& data, int i, int m0) {
  const RootSystem& g0 = data.g0;
  const Weight top = Weight::fundamental(g0.rank(), i, m0);
  std::vector<Weight> w = base_set_sigma(data, i, m0);
  std::stable_sort(w.begin(), w.end(),
                   [&](const Weight& a, const Weight& b) { return height(g0, top - a) < height(g0, top - b); });
  auto fail = [&](const std::string& why, const Weight& a, const Weight& b) {
    throw TheoremCheckFailure("twisted chain conditions violated for " + data.outer.name() + " node " +
                              std::to_string(i) + ": " + why + " (" + a.to_string() + ", " + b.to_string() + ")");
  };
  if (w.front() != top) fail("mu_0 differs from m*omega_i", w.front(), top);
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (!w[s].is_dominant()) fail("non-dominant element", w[s], w[s]);
    for (std::size_t t = s + 1; t < w.size(); ++t)
      if (w[s] == w[t]) fail("repeated element", w[s], w[t]);
  }
  for (std::size_t s = 0; s + 1 < w.size(); ++s)
    if (!data.in_r1_positive(w[s] - w[s + 1])) fail("mu_s - mu_{s+1} is not in R1+", w[s], w[s + 1]);

  TwistedChain out;
  const bool d_type = data.outer.kind() == OuterType::Kind::D;
  for (std::size_t s = 0; s + 2 < w.size(); ++s) {
    const Weight diff = w[s] - w[s + 2];
    if (data.in_r1_positive(diff)) fail("mu_s - mu_{s+2} lies in R1+", w[s], w[s + 2]);
    if (in_r0_positive(data, diff)) {
      if (!d_type) fail("mu_s - mu_{s+2} lies in R0+", w[s], w[s + 2]);
      out.two_step_in_r0.push_back(s);
    }
  }
  out.chain = GradedChain{std::move(w)};
  return out;
}

std::set<Weight> pplus_sigma(const TwistedData& data, int i, int m) {
  if (m < 0) throw InvalidInput("level must be non-negative");
  return detail::level_set(twisted_family(data, i), m);
}

std::vector<int> reduced_expression_sigma(const TwistedData& data, int i, int m, const Weight& mu) {
  return detail::reduced_expression(twisted_family(data, i), m, mu);
}

int grade_sigma(const TwistedData& data, int i, int m, const Weight& mu) {
  int s = 0;
  for (int j : reduced_expression_sigma(data, i, m, mu)) s += j;
  return s;
}

GradedCharacter graded_character_sigma(const TwistedData& data, int i, int m) {
  if (m < 0) throw InvalidInput("level must be non-negative");
  return detail::graded_character(twisted_family(data, i), m);
}

bool ev_case_predicate(const TwistedData& data, int i) {
  check_node(data, i);
  return enumerate_chain_sigma(data, i, data.dsigma[i - 1]).chain.length() == 0;
}

}  // namespace kr
