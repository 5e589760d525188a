#include "kr/modforge.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "kr/errors.hpp"

namespace kr {

namespace {

template <class Key>
void add_term(SparseVec<Key>& v, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(k, 0);
  it->second += c;
  if (it->second == 0) v.erase(it);
}

// Basis element of a tensor product of wedge powers: the sorted index sets of
// the factors, concatenated.
using WedgeKey = std::vector<int>;

struct WedgeLayout {
  std::vector<int> sizes;
  WedgeKey top;
};

WedgeLayout wedge_layout(const RootSystem& rs, const Weight& lam) {
  const int n = rs.rank();
  const Family fam = rs.type().family();
  WedgeLayout out;
  auto first = [](int k) {
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 0);
    return v;
  };
  auto push = [&](int k, int copies, const std::vector<int>& indices) {
    for (int c = 0; c < copies; ++c) {
      out.sizes.push_back(k);
      out.top.insert(out.top.end(), indices.begin(), indices.end());
    }
  };
  auto spin = [&]() {
    return OutOfScope("V" + lam.to_string() + " of " + rs.name() +
                      " has a spin highest weight and lies outside the matrix construction");
  };
  const int plain = fam == Family::B ? n - 1 : fam == Family::D ? n - 2 : n;
  for (int k = 1; k <= plain; ++k) push(k, lam[k - 1], first(k));
  if (fam == Family::B) {
    if (lam[n - 1] % 2 != 0) throw spin();
    push(n, lam[n - 1] / 2, first(n));
  } else if (fam == Family::D) {
    const int a = lam[n - 2], b = lam[n - 1];
    if ((a + b) % 2 != 0) throw spin();
    push(n - 1, std::min(a, b), first(n - 1));
    if (b > a) {
      push(n, (b - a) / 2, first(n));
    } else {
      std::vector<int> low = first(n - 1);
      low.push_back(n);  // e_{-n}
      push(n, (a - b) / 2, low);
    }
  }
  return out;
}

SparseVec<WedgeKey> apply_wedge(const SparseMatrix& op, const std::vector<int>& sizes, const SparseVec<WedgeKey>& v) {
  SparseVec<WedgeKey> out;
  for (const auto& [key, c] : v) {
    int start = 0;
    for (int k : sizes) {
      for (int p = start; p < start + k; ++p) {
        for (const auto& [r, val] : op.column(key[p])) {
          bool clash = false;
          for (int q = start; q < start + k; ++q)
            if (q != p && key[q] == r) clash = true;
          if (clash) continue;
          WedgeKey nk = key;
          nk[p] = r;
          int sign = 1, q = p;
          while (q > start && nk[q - 1] > nk[q]) {
            std::swap(nk[q - 1], nk[q]);
            sign = -sign;
            --q;
          }
          while (q + 1 < start + k && nk[q + 1] < nk[q]) {
            std::swap(nk[q + 1], nk[q]);
            sign = -sign;
            ++q;
          }
          add_term(out, nk, c * val * sign);
        }
      }
      start += k;
    }
  }
  return out;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::map<Weight, std::vector<int>> indices_by_weight(const MatrixRep& rep) {
  std::map<Weight, std::vector<int>> out;
  for (int b = 0; b < rep.dim; ++b) out[rep.basis_weights[b]].push_back(b);
  return out;
}

std::string node_label(const char* gen, int i) { return std::string(gen) + "_" + std::to_string(i + 1); }

}  // namespace

MatrixRep highest_module(const RootSystem& rs, const Weight& lam, const DimGuard& guard) {
  const int n = rs.rank();
  if (static_cast<int>(lam.rank()) != n || !lam.is_dominant()) {
    throw InvalidInput("highest weight " + lam.to_string() + " is not dominant for " + rs.name());
  }
  const WedgeLayout layout = wedge_layout(rs, lam);
  const MatrixRep def = defining_rep(rs);
  std::int64_t ambient = 1;
  for (int k : layout.sizes) {
    ambient *= binomial(def.dim, k);
    guard.check(ambient, "ambient space for V" + lam.to_string());
  }

  std::map<Weight, EchelonSpace<WedgeKey>> spaces;
  const SparseVec<WedgeKey> top{{layout.top, 1}};
  for (int i = 0; i < n; ++i)
    if (!apply_wedge(def.e[i], layout.sizes, top).empty())
      throw TheoremCheckFailure("top wedge vector is not a highest-weight vector");
  spaces[lam].insert(top);
  std::vector<std::vector<Weight>> levels{{lam}};
  std::int64_t total = 1;
  while (!levels.back().empty()) {
    std::set<Weight> next;
    for (const Weight& mu : levels.back()) {
      const auto& rows = spaces[mu].rows();
      for (int i = 0; i < n; ++i) {
        const Weight nu = mu - rs.simple_root_weight(i + 1);
        for (const auto& row : rows) {
          auto w = apply_wedge(def.f[i], layout.sizes, row);
          if (w.empty()) continue;
          if (spaces[nu].insert(w)) {
            guard.check(++total, "V" + lam.to_string());
            next.insert(nu);
          }
        }
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }

  MatrixRep rep;
  rep.dim = static_cast<int>(total);
  rep.highest_weight = lam;
  rep.highest_index = 0;
  std::map<Weight, int> first_index;
  std::vector<std::pair<Weight, const SparseVec<WedgeKey>*>> basis;
  for (const auto& level : levels)
    for (const Weight& mu : level) {
      first_index[mu] = static_cast<int>(basis.size());
      for (const auto& row : spaces[mu].rows()) basis.emplace_back(mu, &row);
    }
  for (int i = 0; i < n; ++i) {
    rep.e.emplace_back(rep.dim, rep.dim);
    rep.f.emplace_back(rep.dim, rep.dim);
    rep.h.emplace_back(rep.dim, rep.dim);
  }
  auto express = [&](const Weight& nu, const SparseVec<WedgeKey>& w) {
    Vec col;
    if (w.empty()) return col;
    auto it = spaces.find(nu);
    const auto coords = it == spaces.end() ? std::nullopt : it->second.coordinates(w);
    if (!coords) throw TheoremCheckFailure("cyclic span of V" + lam.to_string() + " is not closed under g");
    for (std::size_t k = 0; k < coords->size(); ++k)
      if ((*coords)[k] != 0) col[first_index[nu] + static_cast<int>(k)] = (*coords)[k];
    return col;
  };
  for (int b = 0; b < rep.dim; ++b) {
    const auto& [mu, vec] = basis[b];
    rep.basis_weights.push_back(mu);
    for (int i = 0; i < n; ++i) {
      const Weight alpha = rs.simple_root_weight(i + 1);
      rep.f[i].set_column(b, express(mu - alpha, apply_wedge(def.f[i], layout.sizes, *vec)));
      rep.e[i].set_column(b, express(mu + alpha, apply_wedge(def.e[i], layout.sizes, *vec)));
      rep.h[i].set(b, b, mu[i]);
    }
  }
  if (rep.dim != weyl_dim(rs, lam)) {
    throw TheoremCheckFailure("cyclic span of V" + lam.to_string() + " has dimension " + std::to_string(rep.dim) +
                              ", expected " + std::to_string(weyl_dim(rs, lam)));
  }
  return rep;
}

std::vector<SparseMatrix> intertwiner(const RootSystem& rs, const MatrixRep& source, const MatrixRep& target) {
  const int n = rs.rank();
  const Weight& nu = target.highest_weight;
  const auto src_w = indices_by_weight(source);
  const auto tgt_w = indices_by_weight(target);
  auto top_it = src_w.find(nu);
  if (top_it == src_w.end()) return {};
  const std::vector<int>& top_src = top_it->second;
  const int m = static_cast<int>(top_src.size());

  // Functionals on the nu-weight space of the source vanishing on f_i(source_{nu + alpha_i}).
  DenseMatrix eqs;
  for (int i = 0; i < n; ++i) {
    auto up = src_w.find(nu + rs.simple_root_weight(i + 1));
    if (up == src_w.end()) continue;
    for (int b : up->second) {
      const Vec& col = source.f[i].column(b);
      std::vector<Rational> row(m);
      bool nonzero = false;
      for (int k = 0; k < m; ++k) {
        auto it = col.find(top_src[k]);
        if (it != col.end()) {
          row[k] = it->second;
          nonzero = true;
        }
      }
      if (nonzero) eqs.push_back(std::move(row));
    }
  }
  const auto functionals = DenseSolver(eqs, m).nullspace();
  if (functionals.empty()) return {};

  // Weights below nu shared by source and target, processed from the top down.
  std::vector<std::pair<Rational, Weight>> order;
  for (const auto& [mu, idx] : src_w)
    if (mu != nu && tgt_w.count(mu) && in_positive_cone(rs, nu - mu)) order.emplace_back(height(rs, nu - mu), mu);
  std::sort(order.begin(), order.end());

  struct Block {
    std::vector<int> cols;
    std::vector<std::pair<int, int>> rows;  // (node, target index)
    DenseSolver solver;
  };
  std::vector<Block> blocks;
  for (const auto& [h, mu] : order) {
    const std::vector<int>& cols = tgt_w.at(mu);
    std::vector<std::pair<int, int>> rows;
    DenseMatrix a;
    for (int i = 0; i < n; ++i) {
      auto up = tgt_w.find(mu + rs.simple_root_weight(i + 1));
      if (up == tgt_w.end()) continue;
      for (int t : up->second) {
        rows.emplace_back(i, t);
        std::vector<Rational> row(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) row[c] = target.e[i].at(t, cols[c]);
        a.push_back(std::move(row));
      }
    }
    blocks.push_back(Block{cols, rows, DenseSolver(a, static_cast<int>(cols.size()))});
  }

  std::vector<SparseMatrix> out;
  for (const auto& ell : functionals) {
    SparseMatrix phi(target.dim, source.dim);
    for (int k = 0; k < m; ++k) phi.set(target.highest_index, top_src[k], ell[k]);
    for (std::size_t o = 0; o < order.size(); ++o) {
      const Block& blk = blocks[o];
      for (int b : src_w.at(order[o].second)) {
        std::vector<Vec> images(n);
        for (int i = 0; i < n; ++i) images[i] = phi.apply(source.e[i].column(b));
        std::vector<Rational> rhs(blk.rows.size());
        for (std::size_t r = 0; r < blk.rows.size(); ++r) {
          const auto& img = images[blk.rows[r].first];
          auto it = img.find(blk.rows[r].second);
          if (it != img.end()) rhs[r] = it->second;
        }
        const auto x = blk.solver.solve(rhs);
        if (!x) throw TheoremCheckFailure("equivariant extension fails at weight " + order[o].second.to_string());
        Vec col;
        for (std::size_t c = 0; c < blk.cols.size(); ++c)
          if ((*x)[c] != 0) col[blk.cols[c]] = (*x)[c];
        phi.set_column(b, std::move(col));
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!(phi * source.e[i] == target.e[i] * phi) || !(phi * source.f[i] == target.f[i] * phi) ||
          !(phi * source.h[i] == target.h[i] * phi)) {
        throw TheoremCheckFailure("constructed map does not commute with the generators at node " +
                                  std::to_string(i + 1));
      }
    }
    out.push_back(std::move(phi));
  }
  return out;
}

std::string check_rep(const LieBasis& basis, const MatrixRep& rep) {
  const RootSystem& rs = basis.root_system();
  const int n = rs.rank();
  const auto& cartan = rs.cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(commutator(rep.h[i], rep.e[j]) == Rational(cartan[j][i]) * rep.e[j]))
        return "[" + node_label("h", i) + ", " + node_label("e", j) + "] is wrong";
      if (!(commutator(rep.h[i], rep.f[j]) == Rational(-cartan[j][i]) * rep.f[j]))
        return "[" + node_label("h", i) + ", " + node_label("f", j) + "] is wrong";
      const SparseMatrix ef = commutator(rep.e[i], rep.f[j]);
      if (i == j ? !(ef == rep.h[i]) : !ef.is_zero())
        return "[" + node_label("e", i) + ", " + node_label("f", j) + "] is wrong";
      if (!commutator(rep.h[i], rep.h[j]).is_zero())
        return "[" + node_label("h", i) + ", " + node_label("h", j) + "] is nonzero";
    }
  const Vec top = rep.highest_vector();
  for (int i = 0; i < n; ++i) {
    if (!rep.e[i].apply(top).empty()) return node_label("e", i) + " does not kill the highest vector";
    if (!(rep.h[i].apply(top) == scaled(top, rep.highest_weight[i])))
      return node_label("h", i) + " has the wrong eigenvalue on the highest vector";
  }
  const auto mats = basis.realize(rep);
  for (int a = 0; a < basis.dim(); ++a)
    for (int b = a + 1; b < basis.dim(); ++b) {
      SparseMatrix expected(rep.dim, rep.dim);
      for (const auto& [c, val] : basis.bracket(a, b)) expected += val * mats[c];
      if (!(commutator(mats[a], mats[b]) == expected))
        return "bracket table fails for basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    }
  return {};
}

int CurrentModule::grade_of(int index) const {
  int s = 0;
  while (s + 1 < static_cast<int>(offsets.size()) && offsets[s + 1] <= index) ++s;
  return s;
}

CurrentModule build_kr_fundamental(const RootSystem& rs, int i, const DimGuard& guard) {
  if (i < 1 || i > rs.rank()) throw InvalidInput("node out of range");
  if (epsilon(rs, rs.theta(), i) != 2) {
    throw InvalidInput("the current-algebra construction requires epsilon_i(theta) = 2 (" + rs.name() + ", node " +
                       std::to_string(i) + ")");
  }
  CurrentModule cm{LieBasis(rs), enumerate_chain(rs, i), {}, {}, 0, {}, {}};
  const MatrixRep adj = adjoint_rep(cm.basis);
  for (const Weight& mu : cm.chain.weights) {
    cm.offsets.push_back(cm.total_dim);
    cm.pieces.push_back(highest_module(rs, mu, guard));
    cm.total_dim += cm.pieces.back().dim;
  }
  guard.check(cm.total_dim, "current module");
  const int d = cm.basis.dim();
  const int total = cm.total_dim;
  cm.degree0.assign(d, SparseMatrix(total, total));
  cm.degree1.assign(d, SparseMatrix(total, total));
  for (std::size_t s = 0; s < cm.pieces.size(); ++s) {
    const auto mats = cm.basis.realize(cm.pieces[s]);
    for (int a = 0; a < d; ++a)
      for (int v = 0; v < cm.pieces[s].dim; ++v)
        for (const auto& [r, val] : mats[a].column(v)) cm.degree0[a].set(cm.offsets[s] + r, cm.offsets[s] + v, val);
  }
  for (std::size_t s = 0; s + 1 < cm.pieces.size(); ++s) {
    const MatrixRep& from = cm.pieces[s];
    const MatrixRep& to = cm.pieces[s + 1];
    const MatrixRep source = tensor(adj, from);
    guard.check(source.dim, "g (x) V" + cm.chain[s].to_string());
    auto homs = intertwiner(rs, source, to);
    if (homs.size() != 1) {
      throw TheoremCheckFailure("dim Hom_g(g (x) V" + cm.chain[s].to_string() + ", V" + cm.chain[s + 1].to_string() +
                                ") = " + std::to_string(homs.size()) + ", expected 1");
    }
    const int neg = cm.basis.root_vector(cm.chain[s + 1] - cm.chain[s]);
    const Rational c = homs[0].at(to.highest_index, neg * from.dim + from.highest_index);
    if (c == 0) {
      throw TheoremCheckFailure("intertwiner vanishes on x_{-beta} (x) v for the chain step " + std::to_string(s));
    }
    const SparseMatrix p = (1 / c) * homs[0];
    for (int a = 0; a < d; ++a)
      for (int v = 0; v < from.dim; ++v)
        for (const auto& [r, val] : p.column(a * from.dim + v))
          cm.degree1[a].set(cm.offsets[s + 1] + r, cm.offsets[s] + v, val);
  }
  return cm;
}

bool RelationReport::passed() const {
  for (const auto& [what, ok] : checks)
    if (!ok) return false;
  return true;
}

RelationReport verify_current_relations(const CurrentModule& cm, int i, int m) {
  const LieBasis& basis = cm.basis;
  const RootSystem& rs = basis.root_system();
  const int n = rs.rank();
  const int d = basis.dim();
  const int total = cm.total_dim;
  RelationReport report;
  auto check = [&](const std::string& what, bool ok) { report.checks.emplace_back(what, ok); };
  auto op = [&](int deg, int a) -> const SparseMatrix& { return deg == 0 ? cm.degree0[a] : cm.degree1[a]; };

  for (auto [p, q] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
    std::string failure;
    int count = 0;
    for (int a = 0; a < d && failure.empty(); ++a)
      for (int b = p == q ? a + 1 : 0; b < d; ++b) {
        const SparseMatrix lhs = commutator(op(p, a), op(q, b));
        bool ok;
        if (p + q <= 1) {
          SparseMatrix expected(total, total);
          for (const auto& [c, val] : basis.bracket(a, b)) expected += val * op(p + q, c);
          ok = lhs == expected;
        } else {
          ok = lhs.is_zero();
        }
        if (!ok) {
          failure = "basis pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
          break;
        }
        ++count;
      }
    std::ostringstream label;
    label << "[x (x) t^" << p << ", y (x) t^" << q << "] = ";
    if (p + q <= 1) label << "[x, y] (x) t^" << p + q;
    else label << "0";
    if (failure.empty()) label << " (" << count << " pairs)";
    else label << ": fails for " << failure;
    check(label.str(), failure.empty());
  }

  const Vec v{{cm.generator(), 1}};
  bool ok = true;
  for (int a = 0; a < basis.num_positive(); ++a)
    ok = ok && cm.degree0[a].apply(v).empty() && cm.degree1[a].apply(v).empty();
  check("n+[t] v = 0", ok);
  ok = true;
  for (int j = 1; j <= n; ++j) {
    const int eig = j == i ? m : 0;
    ok = ok && cm.degree0[basis.cartan(j)].apply(v) == scaled(v, eig);
  }
  check("h v = m omega_i(h) v", ok);
  ok = true;
  for (int j = 1; j <= n; ++j) ok = ok && cm.degree1[basis.cartan(j)].apply(v).empty();
  check("(h (x) t) v = 0", ok);
  const int fi = basis.root_vector(-rs.simple_root_weight(i));
  Vec w = v;
  for (int r = 0; r <= m; ++r) w = cm.degree0[fi].apply(w);
  check("x_{-alpha_i}^{m+1} v = 0", w.empty());
  check("(x_{-alpha_i} (x) t) v = 0", cm.degree1[fi].apply(v).empty());
  ok = true;
  for (int j = 1; j <= n; ++j)
    if (j != i) ok = ok && cm.degree0[basis.root_vector(-rs.simple_root_weight(j))].apply(v).empty();
  check("x_{-alpha_j} v = 0 for j != i", ok);
  const int neg_theta = basis.root_vector(-adjoint_highest_weight(rs));
  check("(x_{-theta} (x) t) v != 0", !cm.degree1[neg_theta].apply(v).empty());

  w = v;
  ok = true;
  for (std::size_t s = 1; s < cm.chain.weights.size(); ++s) {
    w = cm.degree1[basis.root_vector(cm.chain[s] - cm.chain[s - 1])].apply(w);
    ok = ok && w == Vec{{cm.top(s), 1}};
  }
  check("x_{mu_s} v = v_{mu_s} along the chain", ok);

  EchelonSpace<int> span;
  std::deque<Vec> queue{v};
  span.insert(v);
  while (!queue.empty()) {
    const Vec cur = std::move(queue.front());
    queue.pop_front();
    for (int deg = 0; deg <= 1; ++deg)
      for (int a = 0; a < d; ++a) {
        Vec next = op(deg, a).apply(cur);
        if (!next.empty() && span.insert(next)) queue.push_back(std::move(next));
      }
  }
  report.span_dim = static_cast<int>(span.dim());
  check("U(g[t]) v spans all " + std::to_string(total) + " dimensions (got " + std::to_string(report.span_dim) + ")",
        report.span_dim == total);
  return report;
}

namespace {

struct GradedFactor {
  int dim = 0;
  int top = 0;
  std::vector<SparseMatrix> deg0, deg1;  // deg1 empty for evaluation modules
  std::vector<Weight> weights;
  std::vector<int> grades;
};

GradedFactor evaluation_factor(const LieBasis& basis, const MatrixRep& rep) {
  GradedFactor f;
  f.dim = rep.dim;
  f.top = rep.highest_index;
  f.deg0 = basis.realize(rep);
  f.weights = rep.basis_weights;
  f.grades.assign(rep.dim, 0);
  return f;
}

GradedFactor current_factor(const CurrentModule& cm) {
  GradedFactor f;
  f.dim = cm.total_dim;
  f.top = cm.generator();
  f.deg0 = cm.degree0;
  f.deg1 = cm.degree1;
  for (std::size_t s = 0; s < cm.pieces.size(); ++s)
    for (const auto& w : cm.pieces[s].basis_weights) {
      f.weights.push_back(w);
      f.grades.push_back(static_cast<int>(s));
    }
  return f;
}

std::string describe(const GradedCharacter& gc) {
  std::ostringstream os;
  for (const auto& [s, chi] : gc.by_grade) {
    os << " grade " << s << ":";
    for (const auto& [w, k] : chi.entries()) os << " V" << w << (k == 1 ? "" : "^" + std::to_string(k));
  }
  return os.str();
}

}  // namespace

TensorSubmodule kr_tensor_submodule(const RootSystem& rs, int i, int m, const DimGuard& guard) {
  if (i < 1 || i > rs.rank()) throw InvalidInput("node out of range");
  if (m < 0) throw InvalidInput("level must be non-negative");
  const int dc = rs.dcheck()[i - 1];
  const int m0 = m / dc, m1 = m % dc;
  const int n = rs.rank();
  const LieBasis basis(rs);

  std::vector<GradedFactor> factors;
  if (m1 > 0) factors.push_back(evaluation_factor(basis, highest_module(rs, Weight::fundamental(n, i, m1), guard)));
  if (m0 > 0) {
    const GradedFactor unit = epsilon(rs, rs.theta(), i) == 2
                                  ? current_factor(build_kr_fundamental(rs, i, guard))
                                  : evaluation_factor(basis, highest_module(rs, Weight::fundamental(n, i, dc), guard));
    for (int r = 0; r < m0; ++r) factors.push_back(unit);
  }

  const int nf = static_cast<int>(factors.size());
  std::vector<std::int64_t> stride(nf, 1);
  std::int64_t ambient = 1;
  for (int k = nf - 1; k >= 0; --k) {
    stride[k] = ambient;
    ambient *= factors[k].dim;
    guard.check(ambient, "ambient tensor space");
  }

  using Vec64 = SparseVec<std::int64_t>;
  auto apply = [&](int deg, int a, const Vec64& v) {
    Vec64 out;
    for (int k = 0; k < nf; ++k) {
      const auto& mats = deg == 0 ? factors[k].deg0 : factors[k].deg1;
      if (mats.empty()) continue;
      const SparseMatrix& mat = mats[a];
      for (const auto& [idx, c] : v) {
        const int digit = static_cast<int>((idx / stride[k]) % factors[k].dim);
        for (const auto& [r, val] : mat.column(digit)) add_term(out, idx + (r - digit) * stride[k], c * val);
      }
    }
    return out;
  };

  std::int64_t top = 0;
  Weight top_weight(n);
  for (int k = 0; k < nf; ++k) {
    top += factors[k].top * stride[k];
    top_weight += factors[k].weights[factors[k].top];
  }
  const Vec64 v{{top, 1}};
  for (int a = 0; a < basis.dim(); ++a) {
    const bool must_vanish0 = basis.is_positive(a);
    const bool must_vanish1 = basis.is_positive(a) || basis.is_cartan(a);
    if ((must_vanish0 && !apply(0, a, v).empty()) || (must_vanish1 && !apply(1, a, v).empty()))
      throw TheoremCheckFailure("top vector of the tensor product is not annihilated by n+[t] and h (x) t");
  }

  std::vector<std::pair<int, int>> ops;  // (degree, basis index)
  for (int j = 1; j <= n; ++j) ops.emplace_back(0, basis.root_vector(-rs.simple_root_weight(j)));
  for (int a = 0; a < basis.dim(); ++a)
    if (basis.is_negative(a)) ops.emplace_back(1, a);

  std::map<std::pair<int, Weight>, EchelonSpace<std::int64_t>> spaces;
  struct Item {
    int grade;
    Weight weight;
    Vec64 vec;
  };
  std::deque<Item> queue;
  spaces[{0, top_weight}].insert(v);
  queue.push_back({0, top_weight, v});
  std::int64_t span = 1;
  while (!queue.empty()) {
    const Item cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& [deg, a] : ops) {
      Vec64 out = apply(deg, a, cur.vec);
      if (out.empty()) continue;
      const int g = cur.grade + deg;
      const Weight w = cur.weight + basis.weight(a);
      if (spaces[{g, w}].insert(out)) {
        guard.check(++span, "tensor submodule");
        queue.push_back({g, w, std::move(out)});
      }
    }
  }

  std::map<int, WeightCharacter> chars;
  for (const auto& [key, space] : spaces) chars[key.first].add(key.second, static_cast<Multiplicity>(space.dim()));
  TensorSubmodule result;
  result.ambient_dim = ambient;
  result.submodule_dim = span;
  for (const auto& [g, chi] : chars) result.character.by_grade[g] = decompose_character(rs, chi, guard);

  const GradedCharacter expected = graded_character(rs, i, m);
  if (!(result.character == expected)) {
    throw TheoremCheckFailure("tensor submodule of " + rs.name() + " node " + std::to_string(i) + " level " +
                              std::to_string(m) + " decomposes as" + describe(result.character) + ", expected" +
                              describe(expected));
  }
  return result;
}

}  // namespace kr
