#include "ideal24/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "ideal24/error.hpp"
#include "ideal24/union_find.hpp"

namespace ideal24 {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Overflow {};

}  // namespace

SNFResult smith_normal_form(DenseMatrix a) {
  SNFResult res;
  res.rows = static_cast<int>(a.size());
  res.cols = a.empty() ? 0 : static_cast<int>(a.front().size());
  const int n = res.rows, m = res.cols;
  for (int r = 0; r < std::min(n, m); ++r) {
    // every pass moves the smallest nonzero entry of the trailing block to (r, r);
    // reselecting it each time keeps the entries from growing
    while (true) {
      int pi = -1, pj = -1;
      for (int i = r; i < n; ++i)
        for (int j = r; j < m; ++j)
          if (a[i][j] != 0 && (pi < 0 || babs(a[i][j]) < babs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return res;
      std::swap(a[r], a[pi]);
      for (auto& row : a) std::swap(row[r], row[pj]);

      bool clean = true;
      for (int i = r + 1; i < n; ++i) {
        if (a[i][r] == 0) continue;
        const BigInt q = a[i][r] / a[r][r];
        for (int j = r; j < m; ++j) a[i][j] -= q * a[r][j];
        clean = clean && a[i][r] == 0;
      }
      for (int j = r + 1; j < m; ++j) {
        if (a[r][j] == 0) continue;
        const BigInt q = a[r][j] / a[r][r];
        for (int i = r; i < n; ++i) a[i][j] -= q * a[i][r];
        clean = clean && a[r][j] == 0;
      }
      if (!clean) continue;
      // pivot must divide the rest of the block
      int bad = -1;
      for (int i = r + 1; i < n && bad < 0; ++i)
        for (int j = r + 1; j < m; ++j)
          if (a[i][j] % a[r][r] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = r; j < m; ++j) a[r][j] += a[bad][j];
    }
    res.factors.push_back(babs(a[r][r]));
  }
  return res;
}

DenseMatrix SparseMatrix::dense() const {
  DenseMatrix d(rows, std::vector<BigInt>(cols));
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) d[i][j] += v;
  return d;
}

namespace {

using Row = std::vector<std::pair<int, std::int64_t>>;

std::int64_t entry(const Row& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(col, INT64_MIN));
  return it != row.end() && it->first == col ? it->second : 0;
}

/// row - k * pivot, with overflow detection.
Row axpy(const Row& row, std::int64_t k, const Row& pivot) {
  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  constexpr __int128 limit = static_cast<__int128>(1) << 62;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else {
      const int c = pivot[j].first;
      __int128 v = -static_cast<__int128>(k) * pivot[j].second;
      if (i < row.size() && row[i].first == c) v += row[i++].second;
      ++j;
      if (v > limit || v < -limit) throw Overflow{};
      if (v != 0) out.emplace_back(c, static_cast<std::int64_t>(v));
    }
  }
  return out;
}

SNFResult sparse_snf(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows);
  std::vector<std::vector<int>> col_rows(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.columns[j])
      if (v != 0) rows[i].emplace_back(j, v);
  for (int i = 0; i < m.rows; ++i) {
    std::sort(rows[i].begin(), rows[i].end());
    // merge duplicate entries
    Row merged;
    for (const auto& e : rows[i]) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    rows[i] = std::move(merged);
    for (const auto& e : rows[i]) col_rows[e.first].push_back(i);
  }
  std::vector<char> row_alive(m.rows, 1), col_alive(m.cols, 1);
  int units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < m.rows; ++r) {
      if (!row_alive[r] || rows[r].empty()) continue;
      int best = -1;
      std::size_t best_count = 0;
      for (const auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && (best < 0 || col_rows[c].size() < best_count)) {
          best = c;
          best_count = col_rows[c].size();
        }
      if (best < 0) continue;
      const std::int64_t p = entry(rows[r], best);
      std::vector<int> touched = std::move(col_rows[best]);
      col_rows[best].clear();
      for (int s : touched) {
        if (s == r || !row_alive[s]) continue;
        const std::int64_t v = entry(rows[s], best);
        if (v == 0) continue;
        Row next = axpy(rows[s], v * p, rows[r]);
        for (const auto& e : next) col_rows[e.first].push_back(s);
        rows[s] = std::move(next);
      }
      row_alive[r] = 0;
      col_alive[best] = 0;
      ++units;
      progress = true;
    }
    // compact the column index
    for (int c = 0; c < m.cols; ++c) {
      auto& v = col_rows[c];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      std::erase_if(v, [&](int s) { return !row_alive[s] || entry(rows[s], c) == 0; });
    }
  }
  std::vector<int> rest_rows, rest_cols;
  for (int r = 0; r < m.rows; ++r)
    if (row_alive[r] && !rows[r].empty()) rest_rows.push_back(r);
  for (int c = 0; c < m.cols; ++c)
    if (col_alive[c] && !col_rows[c].empty()) rest_cols.push_back(c);
  DenseMatrix d(rest_rows.size(), std::vector<BigInt>(rest_cols.size()));
  for (std::size_t i = 0; i < rest_rows.size(); ++i)
    for (const auto& [c, v] : rows[rest_rows[i]]) {
      auto it = std::lower_bound(rest_cols.begin(), rest_cols.end(), c);
      d[i][it - rest_cols.begin()] = v;
    }
  SNFResult tail = smith_normal_form(std::move(d));
  SNFResult res;
  res.rows = m.rows;
  res.cols = m.cols;
  res.factors.assign(units, BigInt(1));
  res.factors.insert(res.factors.end(), tail.factors.begin(), tail.factors.end());
  return res;
}

}  // namespace

SNFResult smith_normal_form(const SparseMatrix& m) {
  try {
    return sparse_snf(m);
  } catch (const Overflow&) {
    SNFResult r = smith_normal_form(m.dense());
    return r;
  }
}

AbelianGroup AbelianGroup::from_cyclic(const std::vector<BigInt>& orders) {
  // diagonal relation matrix; its SNF normalizes the torsion
  const int n = static_cast<int>(orders.size());
  DenseMatrix d(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) d[i][i] = orders[i];
  return cokernel(d, n);
}

AbelianGroup AbelianGroup::cokernel(const DenseMatrix& relations, int generators) {
  const SNFResult s = smith_normal_form(relations);
  AbelianGroup g;
  g.rank = generators - s.rank();
  for (const auto& f : s.factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

std::string AbelianGroup::text() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<std::int64_t> AbelianGroup::torsion_int() const {
  std::vector<std::int64_t> out;
  for (const auto& t : torsion) out.push_back(static_cast<std::int64_t>(t));
  return out;
}

bool boundary_squared_zero(const ChainComplex& c) {
  for (int d = 2; d <= c.top_dim(); ++d) {
    const auto& hi = c.boundary[d];
    const auto& lo = c.boundary[d - 1];
    for (const auto& col : hi.columns) {
      std::unordered_map<int, std::int64_t> acc;
      for (const auto& [i, v] : col)
        for (const auto& [k, w] : lo.columns[i]) acc[k] += v * w;
      for (const auto& [k, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

std::vector<AbelianGroup> homology_groups(const ChainComplex& c, int max_dim) {
  if (!boundary_squared_zero(c)) throw EngineError(ErrorCode::BoundarySquareNonzero, "boundary of a boundary is nonzero");
  const int top = c.top_dim();
  const int last = max_dim < 0 ? top : std::min(max_dim, top);
  std::vector<SNFResult> snf(top + 2);
  for (int d = 1; d <= std::min(top, last + 1); ++d) snf[d] = smith_normal_form(c.boundary[d]);
  std::vector<AbelianGroup> out;
  for (int d = 0; d <= last; ++d) {
    const int rank_out = d >= 1 ? snf[d].rank() : 0;
    const int rank_in = d + 1 <= top ? snf[d + 1].rank() : 0;
    AbelianGroup g;
    g.rank = c.cells[d] - rank_out - rank_in;
    if (d + 1 <= top)
      for (const auto& f : snf[d + 1].factors)
        if (f > 1) g.torsion.push_back(f);
    out.push_back(g);
  }
  return out;
}

long FlagModel::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= complex.top_dim(); ++d) chi += (d % 2 ? -1L : 1L) * complex.cells[d];
  return chi;
}

FlagModel order_complex_model(const LocalPoset& poset, int copies, const std::vector<FaceGlue>& glues,
                              const FlagOptions& opt) {
  const int nc = static_cast<int>(poset.dim.size());
  if (nc >= 511) throw EngineError(ErrorCode::InvalidArgument, "local poset too large");
  std::vector<std::vector<int>> above(nc);
  for (int c = 0; c < nc; ++c)
    for (int b : poset.below[c]) above[b].push_back(c);
  for (auto& a : above) std::sort(a.begin(), a.end(), [&](int x, int y) { return poset.dim[x] < poset.dim[y] || (poset.dim[x] == poset.dim[y] && x < y); });
  const int max_len = opt.max_simplex_dim < 0 ? 64 : opt.max_simplex_dim + 1;

  // local flags, cells in increasing dimension
  std::vector<std::vector<int>> flags;
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int c) {
    chain.push_back(c);
    flags.push_back(chain);
    if (static_cast<int>(chain.size()) < max_len)
      for (int up : above[c]) grow(up);
    chain.pop_back();
  };
  for (int c = 0; c < nc; ++c)
    if (poset.dim[c] >= opt.min_cell_dim) grow(c);
  auto code = [](const std::vector<int>& f) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < f.size(); ++i) k |= static_cast<std::uint64_t>(f[i] + 1) << (9 * i);
    return k;
  };
  std::unordered_map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(flags.size()); ++i) index[code(flags[i])] = i;
  const int nf = static_cast<int>(flags.size());

  auto in_face = [&](int top, int face) {
    return top == face || std::find(poset.below[face].begin(), poset.below[face].end(), top) != poset.below[face].end();
  };
  std::unordered_map<int, std::vector<int>> face_flags;
  UnionFind uf(copies * nf);
  for (const auto& g : glues) {
    auto it = face_flags.find(g.face);
    if (it == face_flags.end()) {
      std::vector<int> list;
      for (int i = 0; i < nf; ++i)
        if (in_face(flags[i].back(), g.face)) list.push_back(i);
      it = face_flags.emplace(g.face, std::move(list)).first;
    }
    for (int i : it->second) {
      std::vector<int> img;
      for (int c : flags[i]) img.push_back(g.cell_map[c]);
      auto j = index.find(code(img));
      if (j == index.end()) throw EngineError(ErrorCode::InvalidArgument, "gluing does not map flags to flags");
      uf.unite(g.from * nf + i, g.to * nf + j->second);
    }
  }

  std::vector<int> label;
  const int orbits = uf.labels(label);
  std::vector<int> rep(orbits, -1);
  std::vector<char> kept(orbits, 1);
  for (int x = 0; x < copies * nf; ++x) {
    const int o = label[x];
    if (rep[o] < 0) rep[o] = x;
    if (opt.keep)
      for (int c : flags[x % nf])
        if (!opt.keep(x / nf, c)) kept[o] = 0;
  }
  int top = -1;
  for (int o = 0; o < orbits; ++o)
    if (kept[o]) top = std::max(top, static_cast<int>(flags[rep[o] % nf].size()) - 1);

  FlagModel model;
  ChainComplex& cc = model.complex;
  cc.cells.assign(top + 1, 0);
  std::vector<int> simplex_id(orbits, -1);
  for (int o = 0; o < orbits; ++o)
    if (kept[o]) simplex_id[o] = cc.cells[flags[rep[o] % nf].size() - 1]++;
  cc.boundary.resize(top + 1);
  cc.boundary[0] = SparseMatrix(0, top >= 0 ? cc.cells[0] : 0);
  for (int d = 1; d <= top; ++d) cc.boundary[d] = SparseMatrix(cc.cells[d - 1], cc.cells[d]);
  for (int o = 0; o < orbits; ++o) {
    if (!kept[o]) continue;
    const int x = rep[o];
    const auto& f = flags[x % nf];
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 0) continue;
    std::vector<std::pair<int, std::int64_t>> col;
    for (int i = 0; i <= d; ++i) {
      std::vector<int> face = f;
      face.erase(face.begin() + i);
      const int fo = label[(x / nf) * nf + index.at(code(face))];
      const int fid = simplex_id[fo];
      if (fid < 0) throw EngineError(ErrorCode::InvalidArgument, "subcomplex selector is not closed under faces");
      col.emplace_back(fid, i % 2 ? -1 : 1);
    }
    std::sort(col.begin(), col.end());
    std::vector<std::pair<int, std::int64_t>> merged;
    for (const auto& e : col) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    cc.boundary[d].columns[simplex_id[o]] = std::move(merged);
  }
  if (top >= 0) {
    UnionFind comp(cc.cells[0]);
    if (top >= 1)
      for (const auto& col : cc.boundary[1].columns)
        if (col.size() == 2) comp.unite(col[0].first, col[1].first);
    std::vector<int> l;
    model.components = comp.labels(l);
  }
  return model;
}

}  // namespace ideal24
