#include "engine.hpp"

#include <algorithm>
#include <numeric>

namespace gspline {

using detail::Builder;
using detail::Engine;
using detail::MPoly;

// --------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), tgt_(rows, 0),
      src_(cols, 0) {
  entries_.assign(rows * cols, Polynomial(ring_));
}

ModuleMap::ModuleMap(Ring ring, std::size_t rows,
                     std::vector<VectorElement> columns,
                     std::vector<int> target_shifts,
                     std::vector<int> source_shifts)
    : ModuleMap(std::move(ring), rows, columns.size()) {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows)
      throw InvalidArgument("column rank does not match the row count");
    for (std::size_t i = 0; i < rows; ++i)
      set(i, j, columns[j][i]);
  }
  if (target_shifts.empty())
    target_shifts = columns.empty() ? std::vector<int>(rows, 0)
                                    : columns.front().shifts();
  if (source_shifts.empty()) {
    source_shifts.assign(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      VectorElement c = columns[j];
      c.set_shifts(target_shifts);
      if (auto d = c.homogeneous_degree())
        source_shifts[j] = static_cast<int>(*d);
    }
  }
  set_shifts(std::move(target_shifts), std::move(source_shifts));
}

void ModuleMap::set(std::size_t i, std::size_t j, Polynomial p) {
  if (!same_ring(ring_, p.ring()))
    throw RingMismatch();
  entries_.at(i * cols_ + j) = std::move(p);
}

void ModuleMap::set_shifts(std::vector<int> target, std::vector<int> source) {
  if (target.size() != rows_ || source.size() != cols_)
    throw InvalidArgument("shift vectors do not match the map dimensions");
  tgt_ = std::move(target);
  src_ = std::move(source);
}

bool ModuleMap::is_graded() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Polynomial &e = at(i, j);
      if (e.is_zero())
        continue;
      auto d = e.homogeneous_degree();
      if (!d || *d != src_[j] - tgt_[i])
        return false;
    }
  return true;
}

bool ModuleMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial &p) { return p.is_zero(); });
}

VectorElement ModuleMap::column(std::size_t j) const {
  VectorElement v(ring_, tgt_);
  for (std::size_t i = 0; i < rows_; ++i)
    v.set(i, at(i, j));
  return v;
}

std::vector<VectorElement> ModuleMap::columns() const {
  std::vector<VectorElement> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    out.push_back(column(j));
  return out;
}

VectorElement ModuleMap::apply(const VectorElement &v) const {
  if (v.rank() != cols_)
    throw InvalidArgument("vector rank does not match the map source");
  VectorElement r(ring_, tgt_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Polynomial acc(ring_);
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero())
        acc += at(i, j) * v[j];
    r.set(i, std::move(acc));
  }
  return r;
}

ModuleMap ModuleMap::compose(const ModuleMap &other) const {
  if (other.rows_ != cols_)
    throw InvalidArgument("map dimensions do not compose");
  ModuleMap r(ring_, rows_, other.cols_);
  for (std::size_t j = 0; j < other.cols_; ++j) {
    VectorElement c = apply(other.column(j));
    for (std::size_t i = 0; i < rows_; ++i)
      r.set(i, j, c[i]);
  }
  r.set_shifts(tgt_, other.src_);
  return r;
}

// ----------------------------------------------------------- Groebner API

namespace {

MonomialOrder module_order(std::size_t rank) {
  MonomialOrder o;
  o.components = rank;
  return o;
}

long sort_degree(const VectorElement &v) {
  if (auto d = v.homogeneous_degree())
    return *d;
  long best = -1;
  for (std::size_t i = 0; i < v.rank(); ++i)
    if (!v[i].is_zero())
      best = std::max(best, v[i].total_degree() + v.shifts()[i]);
  return best;
}

void check_ranks(const std::vector<VectorElement> &gens, std::size_t rank) {
  for (const auto &g : gens)
    if (g.rank() != rank)
      throw InvalidArgument("generators have mixed component counts");
}

} // namespace

GroebnerBasis buchberger(const Ring &ring, const std::vector<int> &shifts,
                         const std::vector<VectorElement> &gens,
                         const MonomialOrder &order) {
  check_ranks(gens, shifts.size());
  auto data = std::make_shared<detail::BasisData>(
      detail::BasisData{Engine(ring, order, shifts), {}});
  Builder builder(data->engine);
  for (const auto &g : gens)
    builder.add(data->engine.from_vector(g));
  builder.complete();
  data->basis = builder.reduced_basis();

  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.rank_ = shifts.size();
  gb.shifts_ = shifts;
  gb.order_ = data->engine.order();
  gb.reduced_ = true;
  for (const auto &f : data->basis)
    gb.gens_.push_back(data->engine.to_vector(f, 0, shifts));
  gb.data_ = std::move(data);
  return gb;
}

GroebnerBasis buchberger(const std::vector<VectorElement> &gens,
                         const MonomialOrder &order) {
  if (gens.empty())
    throw InvalidArgument("buchberger needs at least one generator to infer "
                          "the ambient module");
  return buchberger(gens.front().ring(), gens.front().shifts(), gens, order);
}

VectorElement normal_form(const VectorElement &v, const GroebnerBasis &basis) {
  if (!same_ring(v.ring(), basis.ring_))
    throw RingMismatch();
  if (v.rank() != basis.rank_)
    throw InvalidArgument("vector rank does not match the basis");
  const Engine &e = basis.data_->engine;
  MPoly r = e.reduce(e.from_vector(v), basis.data_->basis);
  return e.to_vector(r, 0, v.shifts());
}

bool in_span(const VectorElement &v, const GroebnerBasis &basis) {
  return normal_form(v, basis).is_zero();
}

void canonical_sort(std::vector<VectorElement> &gens) {
  if (gens.empty())
    return;
  struct Keyed {
    long degree;
    MPoly poly;
    std::string text;
    VectorElement v;
  };
  Engine eng(gens.front().ring(), module_order(gens.front().rank()),
             gens.front().shifts());
  std::vector<Keyed> keyed;
  keyed.reserve(gens.size());
  for (auto &g : gens)
    keyed.push_back({sort_degree(g), eng.from_vector(g), g.to_string(), g});
  std::stable_sort(keyed.begin(), keyed.end(),
                   [&eng](const Keyed &a, const Keyed &b) {
                     if (a.degree != b.degree)
                       return a.degree < b.degree;
                     std::size_t n = std::min(a.poly.size(), b.poly.size());
                     for (std::size_t i = 0; i < n; ++i) {
                       auto c = eng.cmp(a.poly[i], b.poly[i]);
                       if (c != 0)
                         return c < 0;
                       if (a.poly[i].coeff != b.poly[i].coeff)
                         return a.poly[i].coeff < b.poly[i].coeff;
                     }
                     if (a.poly.size() != b.poly.size())
                       return a.poly.size() < b.poly.size();
                     return a.text < b.text;
                   });
  for (std::size_t i = 0; i < gens.size(); ++i)
    gens[i] = std::move(keyed[i].v);
}

std::vector<VectorElement>
minimal_generators(const std::vector<VectorElement> &gens) {
  std::vector<VectorElement> cand;
  for (const auto &g : gens)
    if (!g.is_zero())
      cand.push_back(g);
  if (cand.empty())
    return cand;
  check_ranks(cand, cand.front().rank());
  bool homogeneous = std::all_of(cand.begin(), cand.end(), [](const auto &g) {
    return g.homogeneous_degree().has_value();
  });
  canonical_sort(cand);
  Engine eng(cand.front().ring(), module_order(cand.front().rank()),
             cand.front().shifts());
  Builder builder(eng);
  std::vector<VectorElement> kept;
  for (const auto &g : cand) {
    if (homogeneous)
      builder.complete(*g.homogeneous_degree());
    else
      builder.complete();
    if (builder.add(eng.from_vector(g)))
      kept.push_back(g);
  }
  return kept;
}

std::vector<VectorElement> kernel_of_map(const ModuleMap &map) {
  const std::size_t r = map.rows(), c = map.cols();
  if (c == 0)
    return {};
  const bool graded = map.is_graded();
  std::vector<int> shifts(r + c, 0);
  if (graded) {
    std::copy(map.target_shifts().begin(), map.target_shifts().end(),
              shifts.begin());
    std::copy(map.source_shifts().begin(), map.source_shifts().end(),
              shifts.begin() + static_cast<std::ptrdiff_t>(r));
  }
  MonomialOrder order;
  order.elimination_block = r;
  Engine eng(map.ring(), order, shifts);
  Builder builder(eng);
  for (std::size_t j = 0; j < c; ++j) {
    VectorElement graph(map.ring(), shifts);
    for (std::size_t i = 0; i < r; ++i)
      graph.set(i, map.at(i, j));
    graph.set(r + j, Polynomial::constant(map.ring(), 1));
    builder.add(eng.from_vector(graph));
  }
  builder.complete();
  const std::vector<int> &src = map.source_shifts();
  std::vector<VectorElement> kernel;
  for (const auto &f : builder.reduced_basis())
    if (f.front().comp >= r)
      kernel.push_back(eng.to_vector(f, r, src));
  if (graded)
    kernel = minimal_generators(kernel);
  canonical_sort(kernel);
  return kernel;
}

ModuleMap syzygy_module(const std::vector<VectorElement> &gens) {
  if (gens.empty())
    throw InvalidArgument("syzygy_module needs at least one generator");
  const std::size_t k = gens.front().rank();
  check_ranks(gens, k);
  const Ring &ring = gens.front().ring();
  ModuleMap gmap(ring, k, gens, gens.front().shifts());
  auto syz = kernel_of_map(gmap);
  for (auto &s : syz)
    s.set_shifts(gmap.source_shifts());
  return ModuleMap(ring, gens.size(), syz, gmap.source_shifts());
}

Membership module_membership(const VectorElement &v,
                             const std::vector<VectorElement> &gens) {
  Membership out;
  const Ring &ring = v.ring();
  if (gens.empty()) {
    out.member = v.is_zero();
    return out;
  }
  const std::size_t k = v.rank(), m = gens.size();
  check_ranks(gens, k);
  std::vector<int> shifts(k + m, 0);
  MonomialOrder order;
  order.elimination_block = k;
  Engine eng(ring, order, shifts);
  Builder builder(eng);
  for (std::size_t i = 0; i < m; ++i) {
    VectorElement ext(ring, shifts);
    for (std::size_t c = 0; c < k; ++c)
      ext.set(c, gens[i][c]);
    ext.set(k + i, Polynomial::constant(ring, 1));
    builder.add(eng.from_vector(ext));
  }
  builder.complete();
  MPoly rem = eng.reduce(eng.from_vector(v), builder.basis());
  if (!rem.empty() && rem.front().comp < k)
    return out;
  out.member = true;
  VectorElement w = eng.to_vector(rem, k, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    out.coordinates.push_back(-w[i]);
  return out;
}

bool same_span(const std::vector<VectorElement> &a,
               const std::vector<VectorElement> &b) {
  auto contained = [](const std::vector<VectorElement> &xs,
                      const std::vector<VectorElement> &ys) {
    std::vector<VectorElement> nz;
    for (const auto &y : ys)
      if (!y.is_zero())
        nz.push_back(y);
    if (nz.empty())
      return std::all_of(xs.begin(), xs.end(),
                         [](const auto &x) { return x.is_zero(); });
    GroebnerBasis gb = buchberger(nz.front().ring(), nz.front().shifts(), nz,
                                  module_order(nz.front().rank()));
    return std::all_of(xs.begin(), xs.end(),
                       [&gb](const auto &x) { return in_span(x, gb); });
  };
  return contained(a, b) && contained(b, a);
}

} // namespace gspline
