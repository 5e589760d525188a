#include "kr/lie_basis.hpp"

#include <functional>

#include "kr/errors.hpp"

namespace kr {

std::map<Weight, std::int64_t> MatrixRep::character() const {
  std::map<Weight, std::int64_t> out;
  for (const auto& w : basis_weights) ++out[w];
  return out;
}

MatrixRep defining_rep(const RootSystem& rs) {
  const int n = rs.rank();
  const Family fam = rs.type().family();
  int dim = 0;
  // Basis e_1..e_n, (e_0), e_{-n}..e_{-1}; type A uses e_1..e_{n+1}.
  std::function<int(int)> idx;
  switch (fam) {
    case Family::A:
      dim = n + 1;
      idx = [](int j) { return j - 1; };
      break;
    case Family::C:
    case Family::D:
      dim = 2 * n;
      idx = [n](int j) { return j > 0 ? j - 1 : 2 * n + j; };
      break;
    case Family::B:
      dim = 2 * n + 1;
      idx = [n](int j) { return j > 0 ? j - 1 : (j == 0 ? n : 2 * n + 1 + j); };
      break;
  }
  auto unit = [&](int a, int b, int c = 1) {
    SparseMatrix m(dim, dim);
    m.set(idx(a), idx(b), c);
    return m;
  };

  MatrixRep rep;
  rep.dim = dim;
  for (int i = 1; i <= n; ++i) {
    SparseMatrix e, f;
    if (fam == Family::A) {
      e = unit(i, i + 1);
      f = unit(i + 1, i);
    } else if (i < n) {
      e = unit(i, i + 1) - unit(-(i + 1), -i);
      f = unit(i + 1, i) - unit(-i, -(i + 1));
    } else if (fam == Family::C) {
      e = unit(n, -n);
      f = unit(-n, n);
    } else if (fam == Family::D) {
      e = unit(n - 1, -n) - unit(n, -(n - 1));
      f = unit(-n, n - 1) - unit(-(n - 1), n);
    } else {
      e = unit(n, 0, 2) - unit(0, -n, 2);
      f = unit(0, n) - unit(-n, 0);
    }
    rep.h.push_back(commutator(e, f));
    rep.e.push_back(std::move(e));
    rep.f.push_back(std::move(f));
  }
  for (int j = 0; j < dim; ++j) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = static_cast<int>(rep.h[i].at(j, j).get_num().get_si());
    rep.basis_weights.push_back(w);
  }
  rep.highest_index = 0;
  rep.highest_weight = rep.basis_weights[0];
  return rep;
}

MatrixRep tensor(const MatrixRep& a, const MatrixRep& b) {
  MatrixRep out;
  out.dim = a.dim * b.dim;
  auto lift = [&](const SparseMatrix& ma, const SparseMatrix& mb) {
    SparseMatrix m(out.dim, out.dim);
    for (int ia = 0; ia < a.dim; ++ia)
      for (int ib = 0; ib < b.dim; ++ib) {
        Vec col;
        for (const auto& [r, c] : ma.column(ia)) axpy(col, c, Vec{{r * b.dim + ib, 1}});
        for (const auto& [r, c] : mb.column(ib)) axpy(col, c, Vec{{ia * b.dim + r, 1}});
        m.set_column(ia * b.dim + ib, std::move(col));
      }
    return m;
  };
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    out.e.push_back(lift(a.e[i], b.e[i]));
    out.f.push_back(lift(a.f[i], b.f[i]));
    out.h.push_back(lift(a.h[i], b.h[i]));
  }
  for (int ia = 0; ia < a.dim; ++ia)
    for (int ib = 0; ib < b.dim; ++ib) out.basis_weights.push_back(a.basis_weights[ia] + b.basis_weights[ib]);
  out.highest_index = a.highest_index * b.dim + b.highest_index;
  out.highest_weight = a.highest_weight + b.highest_weight;
  return out;
}

LieBasis::LieBasis(const RootSystem& rs) : rs_(rs) {
  const int n = rs.rank();
  const auto& roots = rs.positive_roots();
  const auto& root_weights = rs.positive_roots_as_weights();
  num_positive_ = static_cast<int>(roots.size());

  std::map<RootCoeffs, int> lookup;
  for (int p = 0; p < num_positive_; ++p) lookup[roots[p]] = p;

  for (int p = 0; p < num_positive_; ++p) {
    int node = -1, parent = -1;
    if (roots[p].height() == 1) {
      for (int i = 0; i < n; ++i)
        if (roots[p][i] == 1) node = i + 1;
    } else {
      for (int i = 1; i <= n && node < 0; ++i) {
        RootCoeffs rest = roots[p];
        rest[i - 1] -= 1;
        auto it = lookup.find(rest);
        if (it != lookup.end()) {
          node = i;
          parent = it->second;
        }
      }
    }
    if (node < 0) throw Error("no recipe for root " + roots[p].to_string());
    recipe_node_.push_back(node);
    recipe_parent_.push_back(parent);
    weights_.push_back(root_weights[p]);
  }
  for (int p = 0; p < num_positive_; ++p) {
    recipe_node_.push_back(recipe_node_[p]);
    recipe_parent_.push_back(recipe_parent_[p] < 0 ? -1 : recipe_parent_[p] + num_positive_);
    weights_.push_back(-root_weights[p]);
  }
  for (int i = 1; i <= n; ++i) {
    recipe_node_.push_back(i);
    recipe_parent_.push_back(-1);
    weights_.push_back(Weight(n));
  }
  for (int a = 0; a < 2 * num_positive_; ++a) root_index_[weights_[a]] = a;

  const MatrixRep def = defining_rep(rs);
  const auto mats = realize(def);
  DenseMatrix diag(def.dim, std::vector<Rational>(n));
  for (int r = 0; r < def.dim; ++r)
    for (int i = 0; i < n; ++i) diag[r][i] = mats[cartan(i + 1)].at(r, r);
  const DenseSolver cartan_solver(diag, n);

  const int d = dim();
  brackets_.assign(d, std::vector<Vec>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const SparseMatrix m = commutator(mats[a], mats[b]);
      if (m.is_zero()) continue;
      const Weight w = weights_[a] + weights_[b];
      Vec coeffs;
      SparseMatrix rebuilt(def.dim, def.dim);
      if (w.is_zero()) {
        std::vector<Rational> rhs(def.dim);
        for (int r = 0; r < def.dim; ++r) rhs[r] = m.at(r, r);
        const auto x = cartan_solver.solve(rhs);
        if (!x) throw TheoremCheckFailure("bracket of weight zero outside the Cartan subalgebra");
        for (int i = 0; i < n; ++i)
          if ((*x)[i] != 0) {
            coeffs[cartan(i + 1)] = (*x)[i];
            rebuilt += (*x)[i] * mats[cartan(i + 1)];
          }
      } else {
        const int c = root_vector(w);
        if (c < 0) throw TheoremCheckFailure("nonzero bracket of weight " + w.to_string() + ", which is not a root");
        int col = 0;
        while (mats[c].column(col).empty()) ++col;
        const auto& [row, val] = *mats[c].column(col).begin();
        coeffs[c] = m.at(row, col) / val;
        rebuilt = coeffs[c] * mats[c];
      }
      if (!(rebuilt == m)) throw TheoremCheckFailure("bracket is not a multiple of the expected basis element");
      brackets_[a][b] = std::move(coeffs);
    }
}

int LieBasis::root_vector(const Weight& w) const {
  auto it = root_index_.find(w);
  return it == root_index_.end() ? -1 : it->second;
}

std::vector<SparseMatrix> LieBasis::realize(const MatrixRep& rep) const {
  std::vector<SparseMatrix> out(dim());
  for (int a = 0; a < dim(); ++a) {
    const int node = recipe_node_[a] - 1;
    if (is_cartan(a)) {
      out[a] = rep.h[node];
      continue;
    }
    const SparseMatrix& gen = is_positive(a) ? rep.e[node] : rep.f[node];
    out[a] = recipe_parent_[a] < 0 ? gen : commutator(gen, out[recipe_parent_[a]]);
  }
  return out;
}

MatrixRep adjoint_rep(const LieBasis& basis) {
  const RootSystem& rs = basis.root_system();
  const int d = basis.dim();
  MatrixRep rep;
  rep.dim = d;
  auto ad = [&](int x) {
    SparseMatrix m(d, d);
    for (int b = 0; b < d; ++b) m.set_column(b, basis.bracket(x, b));
    return m;
  };
  for (int i = 1; i <= rs.rank(); ++i) {
    const Weight alpha = rs.simple_root_weight(i);
    rep.e.push_back(ad(basis.root_vector(alpha)));
    rep.f.push_back(ad(basis.root_vector(-alpha)));
    rep.h.push_back(ad(basis.cartan(i)));
  }
  for (int a = 0; a < d; ++a) rep.basis_weights.push_back(basis.weight(a));
  rep.highest_index = basis.positive(rs.theta_index());
  rep.highest_weight = basis.weight(rep.highest_index);
  return rep;
}

}  // namespace kr
